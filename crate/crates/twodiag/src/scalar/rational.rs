//! Exact-rational scalar: `num_rational::BigRational`.

use super::Scalar;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact square root of a nonnegative `BigInt`, if it is a perfect square.
fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r.clone() * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn tolerance() -> Self {
        BigRational::zero()
    }

    fn exact_sqrt(&self) -> Option<Self> {
        let n = perfect_sqrt(self.numer())?;
        let d = perfect_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn sqrt_approx(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if let Some(exact) = self.exact_sqrt() {
            return Some(exact);
        }
        // Integer square root of numer*denom*4^k over denom*2^k gives
        // sqrt(numer/denom) to roughly k bits.
        const BITS: u32 = 256;
        let scaled = (self.numer() * self.denom()) << (2 * BITS);
        let root = scaled.sqrt();
        Some(BigRational::new(root, self.denom() << BITS))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.numer().to_string(),
            "den": self.denom().to_string(),
        })
    }

    fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        // Accept bare integers for convenience when reading handwritten files.
        if let Some(i) = v.as_i64() {
            return Ok(Self::from_i64(i));
        }
        let get = |key: &str| -> crate::Result<BigInt> {
            let s = v
                .get(key)
                .and_then(|x| x.as_str())
                .ok_or_else(|| crate::Error::Parse(format!("expected {{\"{key}\": \"...\"}}")))?;
            s.parse::<BigInt>()
                .map_err(|e| crate::Error::Parse(format!("bad integer {s:?}: {e}")))
        };
        let num = get("num")?;
        let den = get("den")?;
        if den.is_zero() {
            return Err(crate::Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }

    fn parse_text(s: &str) -> crate::Result<Self> {
        let s = s.trim();
        if s.contains('.') || s.contains('e') || s.contains('E') {
            return Err(crate::Error::Parse(format!(
                "decimal literal {s:?} rejected in exact mode; write a fraction p/q"
            )));
        }
        if let Some((n, d)) = s.split_once('/') {
            let num: BigInt = n
                .trim()
                .parse()
                .map_err(|e| crate::Error::Parse(format!("bad numerator {n:?}: {e}")))?;
            let den: BigInt = d
                .trim()
                .parse()
                .map_err(|e| crate::Error::Parse(format!("bad denominator {d:?}: {e}")))?;
            if den.is_zero() {
                return Err(crate::Error::Parse("zero denominator".into()));
            }
            return Ok(BigRational::new(num, den));
        }
        let n: BigInt = s
            .parse()
            .map_err(|e| crate::Error::Parse(format!("bad integer {s:?}: {e}")))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Sign of a `BigInt` as -1/0/1, used by the integer Bareiss path.
pub(crate) fn bigint_sign(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn exact_sqrt_only_for_perfect_squares() {
        assert_eq!(
            Rat::from_ratio(9, 4).exact_sqrt(),
            Some(Rat::from_ratio(3, 2))
        );
        assert_eq!(Rat::from_ratio(2, 1).exact_sqrt(), None);
        assert_eq!(Rat::from_ratio(-1, 1).exact_sqrt(), None);
    }

    #[test]
    fn sqrt_approx_close() {
        let two = Rat::from_i64(2);
        let r = two.sqrt_approx().unwrap();
        let err = (r.clone() * r - two).abs();
        assert!(err < Rat::from_ratio(1, 1_000_000_000), "err = {err}");
    }

    #[test]
    fn parse_rejects_decimals() {
        assert!(Rat::parse_text("0.5").is_err());
        assert_eq!(Rat::parse_text("-3/6").unwrap(), Rat::from_ratio(-1, 2));
        assert_eq!(Rat::parse_text("7").unwrap(), Rat::from_i64(7));
    }

    #[test]
    fn json_round_trip() {
        let x = Rat::from_ratio(-22, 7);
        let v = x.to_json();
        assert_eq!(Rat::from_json(&v).unwrap(), x);
    }
}
