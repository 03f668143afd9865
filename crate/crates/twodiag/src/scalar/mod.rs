//! Arithmetic substrate.
//!
//! All algorithms in this crate are generic over [`Scalar`]. Two concrete
//! modes are provided:
//!
//! - exact rationals ([`Rat`], arbitrary precision, no rounding anywhere),
//! - floating values with a fixed mantissa width ([`Mpf`], default 256 bits)
//!   and a relative comparison tolerance carried by the type, plus plain
//!   [`f64`] for quick low-precision work.
//!
//! Exact mode is the default whenever every input is rational; the floating
//! modes exist for inherently irrational data (trigonometric families).
//! Comparison policy lives on the type, never at call sites: exact scalars
//! compare exactly, floating scalars compare with a scale-aware relative
//! tolerance.

mod mpf;
mod qtools;
mod rational;

pub use mpf::{Mpf, Mpf128, Mpf256};
pub use qtools::{q_number, q_pochhammer, QContext};

use num_traits::{Num, Signed};

/// Number type every algorithm in the crate is generic over.
///
/// Beyond ring/field arithmetic (via `num_traits::Num + Signed`) a scalar
/// carries its own comparison policy and a handful of partial operations
/// (square roots, trigonometry) that exist only in some modes.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + std::fmt::Debug + std::fmt::Display + 'static
{
    /// True when arithmetic is exact; comparison tolerance is zero.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    /// Construct `num/den`. Panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Relative comparison tolerance tau (zero in exact mode).
    fn tolerance() -> Self;

    /// Number of mantissa bits, if the mode is floating.
    fn precision_bits() -> Option<u32> {
        None
    }

    /// Integer power. Negative exponents require a nonzero base.
    fn powi(&self, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut base = if e < 0 {
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }

    /// `|a - b| <= tau * max(1, |a|, |b|)`; plain equality in exact mode.
    fn tol_eq(&self, other: &Self) -> bool {
        if Self::EXACT {
            return self == other;
        }
        let diff = (self.clone() - other.clone()).abs();
        let mut scale = Self::one();
        let a = self.abs();
        let b = other.abs();
        if a > scale {
            scale = a;
        }
        if b > scale {
            scale = b;
        }
        diff <= Self::tolerance() * scale
    }

    /// Scale-aware zero test.
    fn tol_zero(&self) -> bool {
        self.tol_eq(&Self::zero())
    }

    /// Separation test used by the admissibility checks:
    /// `|a - b| > tau * max(1, |a|, |b|)`.
    fn tol_distinct(&self, other: &Self) -> bool {
        !self.tol_eq(other)
    }

    /// Square root exactly representable in this mode.
    ///
    /// Exact rationals: `Some` only for perfect squares. Floating modes:
    /// always `Some` for nonnegative input (correctly rounded).
    fn exact_sqrt(&self) -> Option<Self>;

    /// Best-effort square root of a nonnegative value. For exact rationals
    /// this is a high-precision rational approximation (the result is *not*
    /// exact unless the input is a perfect square); callers must treat it as
    /// a numeric estimate only.
    fn sqrt_approx(&self) -> Option<Self>;

    /// Trigonometry; `None` in exact mode.
    fn try_sin(&self) -> Option<Self> {
        None
    }
    fn try_cos(&self) -> Option<Self> {
        None
    }
    fn try_acos(&self) -> Option<Self> {
        None
    }
    fn try_atan2(_y: &Self, _x: &Self) -> Option<Self> {
        None
    }

    fn to_f64_lossy(&self) -> f64;

    /// Wire format: `{"num": "...", "den": "..."}` for exact rationals,
    /// `{"val": "...", "bits": n}` for floating values.
    fn to_json(&self) -> serde_json::Value;

    fn from_json(v: &serde_json::Value) -> crate::Result<Self>;

    /// Parse a scalar from CLI text. Exact mode accepts integers and `p/q`
    /// and rejects decimals; floating modes additionally accept decimals.
    fn parse_text(s: &str) -> crate::Result<Self>;
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div<T: Scalar>(num: T, den: &T) -> crate::Result<T> {
    if den.is_zero() {
        return Err(crate::Error::SpectrumDegenerate(
            "division by zero".into(),
        ));
    }
    Ok(num / den.clone())
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn tolerance() -> Self {
        // 2^-30; f64 carries 53 mantissa bits.
        2f64.powi(-30)
    }

    fn precision_bits() -> Option<u32> {
        Some(53)
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(self.sqrt())
        }
    }

    fn sqrt_approx(&self) -> Option<Self> {
        self.exact_sqrt()
    }

    fn try_sin(&self) -> Option<Self> {
        Some(f64::sin(*self))
    }
    fn try_cos(&self) -> Option<Self> {
        Some(f64::cos(*self))
    }
    fn try_acos(&self) -> Option<Self> {
        Some(f64::acos(*self))
    }
    fn try_atan2(y: &Self, x: &Self) -> Option<Self> {
        Some(f64::atan2(*y, *x))
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "val": format!("{self:e}"), "bits": 53 })
    }

    fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        let val = v
            .get("val")
            .and_then(|x| x.as_str())
            .ok_or_else(|| crate::Error::Parse("expected {\"val\": ...}".into()))?;
        val.parse::<f64>()
            .map_err(|e| crate::Error::Parse(format!("bad float literal: {e}")))
    }

    fn parse_text(s: &str) -> crate::Result<Self> {
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n
                .trim()
                .parse()
                .map_err(|e| crate::Error::Parse(format!("bad numerator: {e}")))?;
            let d: f64 = d
                .trim()
                .parse()
                .map_err(|e| crate::Error::Parse(format!("bad denominator: {e}")))?;
            if d == 0.0 {
                return Err(crate::Error::Parse("zero denominator".into()));
            }
            return Ok(n / d);
        }
        s.trim()
            .parse()
            .map_err(|e| crate::Error::Parse(format!("bad number: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn powi_matches_repeated_multiplication() {
        let q = Rat::from_ratio(3, 7);
        let mut acc = Rat::one();
        for e in 0..12 {
            assert_eq!(q.powi(e), acc);
            acc = acc * q.clone();
        }
        assert_eq!(q.powi(-3), Rat::from_ratio(343, 27));
    }

    #[test]
    fn f64_tolerance_comparisons() {
        let a = 1.0f64;
        let b = 1.0 + 1e-12;
        assert!(a.tol_eq(&b));
        assert!(a.tol_distinct(&1.01));
    }

    use num_traits::One;
}
