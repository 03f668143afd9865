//! Fixed-precision floating scalar backed by `astro_float::BigFloat`.
//!
//! The mantissa width `P` is part of the type, so the comparison tolerance
//! travels with values instead of being chosen per call site. The default
//! working type is [`Mpf256`] with a relative tolerance of 2^-100.

use super::Scalar;
use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::{Num, One, Signed, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Floating value with `P` mantissa bits and relative tolerance `2^-(25P/64)`
/// (2^-100 at the default 256 bits).
#[derive(Clone, Debug)]
pub struct Mpf<const P: usize>(BigFloat);

/// 256-bit working precision, tolerance 2^-100.
pub type Mpf256 = Mpf<256>;
/// 128-bit precision for cheaper scans, tolerance 2^-50.
pub type Mpf128 = Mpf<128>;

impl<const P: usize> Mpf<P> {
    const TOL_NEG_EXP: i32 = -((P as i32 * 25) / 64);

    pub fn from_f64(x: f64) -> Self {
        Mpf(BigFloat::from_f64(x, P))
    }

    pub fn inner(&self) -> &BigFloat {
        &self.0
    }

    pub fn pi() -> Self {
        Mpf(with_consts(|cc| cc.pi(P, RM)))
    }

    fn cmp_raw(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|s| s.cmp(&0))
    }

    fn assert_finite(v: BigFloat, what: &str) -> Self {
        debug_assert!(!v.is_inf() && !v.is_nan(), "non-finite result in {what}");
        Mpf(v)
    }
}

impl<const P: usize> PartialEq for Mpf<P> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_raw(other) == Some(Ordering::Equal)
    }
}

impl<const P: usize> PartialOrd for Mpf<P> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_raw(other)
    }
}

impl<const P: usize> std::fmt::Display for Mpf<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = with_consts(|cc| self.0.format(Radix::Dec, RM, cc))
            .map_err(|_| std::fmt::Error)?;
        f.write_str(&s)
    }
}

impl<const P: usize> Add for Mpf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::assert_finite(self.0.add(&rhs.0, P, RM), "add")
    }
}

impl<const P: usize> Sub for Mpf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::assert_finite(self.0.sub(&rhs.0, P, RM), "sub")
    }
}

impl<const P: usize> Mul for Mpf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::assert_finite(self.0.mul(&rhs.0, P, RM), "mul")
    }
}

impl<const P: usize> Div for Mpf<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // Callers are expected to guard divisors; an Inf here would indicate
        // a missed nondegeneracy check upstream.
        Self::assert_finite(self.0.div(&rhs.0, P, RM), "div")
    }
}

impl<const P: usize> Rem for Mpf<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        Self::assert_finite(self.0.rem(&rhs.0), "rem")
    }
}

impl<const P: usize> Neg for Mpf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Mpf(self.0.neg())
    }
}

impl<const P: usize> Zero for Mpf<P> {
    fn zero() -> Self {
        Mpf(BigFloat::from_i64(0, P))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<const P: usize> One for Mpf<P> {
    fn one() -> Self {
        Mpf(BigFloat::from_i64(1, P))
    }
}

impl<const P: usize> Num for Mpf<P> {
    type FromStrRadixErr = crate::Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(crate::Error::Parse("only radix 10 supported".into()));
        }
        Self::parse_text(s)
    }
}

impl<const P: usize> Signed for Mpf<P> {
    fn abs(&self) -> Self {
        Mpf(self.0.abs())
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            self.clone() - other.clone()
        }
    }
    fn signum(&self) -> Self {
        if self.0.is_zero() {
            Self::zero()
        } else if self.is_negative() {
            -Self::one()
        } else {
            Self::one()
        }
    }
    fn is_positive(&self) -> bool {
        !self.0.is_zero() && !self.0.is_negative()
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl<const P: usize> Scalar for Mpf<P> {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        Mpf(BigFloat::from_i64(n, P))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn tolerance() -> Self {
        let two = Self::from_i64(2);
        two.powi(Self::TOL_NEG_EXP)
    }

    fn precision_bits() -> Option<u32> {
        Some(P as u32)
    }

    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        Some(Self::assert_finite(self.0.sqrt(P, RM), "sqrt"))
    }

    fn sqrt_approx(&self) -> Option<Self> {
        self.exact_sqrt()
    }

    fn try_sin(&self) -> Option<Self> {
        Some(Mpf(with_consts(|cc| self.0.sin(P, RM, cc))))
    }

    fn try_cos(&self) -> Option<Self> {
        Some(Mpf(with_consts(|cc| self.0.cos(P, RM, cc))))
    }

    fn try_acos(&self) -> Option<Self> {
        Some(Mpf(with_consts(|cc| self.0.acos(P, RM, cc))))
    }

    fn try_atan2(y: &Self, x: &Self) -> Option<Self> {
        let pi = Self::pi();
        if x.is_zero() && y.is_zero() {
            return Some(Self::zero());
        }
        if x.is_zero() {
            let half_pi = pi / Self::from_i64(2);
            return Some(if y.is_negative() { -half_pi } else { half_pi });
        }
        let base = Mpf(with_consts(|cc| {
            y.0.div(&x.0, P, RM).atan(P, RM, cc)
        }));
        if !x.is_negative() {
            Some(base)
        } else if y.is_negative() {
            Some(base - pi)
        } else {
            Some(base + pi)
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        // Mantissa-and-exponent would be cheaper, but decimal text is robust
        // and this path is only for display and diagnostics.
        format!("{self}").parse().unwrap_or(f64::NAN)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "val": format!("{self}"), "bits": P })
    }

    fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        if let Some(i) = v.as_i64() {
            return Ok(Self::from_i64(i));
        }
        if let Some(obj) = v.as_object() {
            if let Some(val) = obj.get("val").and_then(|x| x.as_str()) {
                return Self::parse_text(val);
            }
            // Accept the exact wire format too, converting on read.
            if let (Some(n), Some(d)) = (
                obj.get("num").and_then(|x| x.as_str()),
                obj.get("den").and_then(|x| x.as_str()),
            ) {
                let num = Self::parse_text(n)?;
                let den = Self::parse_text(d)?;
                if den.is_zero() {
                    return Err(crate::Error::Parse("zero denominator".into()));
                }
                return Ok(num / den);
            }
        }
        Err(crate::Error::Parse(
            "expected {\"val\": ...} or {\"num\", \"den\"}".into(),
        ))
    }

    fn parse_text(s: &str) -> crate::Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num = Self::parse_text(n)?;
            let den = Self::parse_text(d)?;
            if den.is_zero() {
                return Err(crate::Error::Parse("zero denominator".into()));
            }
            return Ok(num / den);
        }
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, P, RM, cc));
        if v.is_nan() {
            return Err(crate::Error::Parse(format!("bad number {s:?}")));
        }
        Ok(Mpf(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_comparisons() {
        let third = Mpf256::from_ratio(1, 3);
        let one = Mpf256::one();
        assert!((third.clone() * Mpf256::from_i64(3) - one.clone()).is_zero());
        assert!(third < one);
        assert!(Mpf256::from_i64(-2).is_negative());
    }

    #[test]
    fn tolerance_is_2_pow_minus_100() {
        let tol = Mpf256::tolerance();
        let expect = Mpf256::from_i64(2).powi(-100);
        assert_eq!(tol, expect);
        let a = Mpf256::one();
        let b = Mpf256::one() + Mpf256::from_i64(2).powi(-120);
        assert!(a.tol_eq(&b));
        assert!(a.tol_distinct(&(Mpf256::one() + Mpf256::from_i64(2).powi(-80))));
    }

    #[test]
    fn trig_basics() {
        let pi = Mpf256::pi();
        let s = pi.clone().try_sin().unwrap();
        assert!(s.abs() < Mpf256::from_i64(2).powi(-200));
        let zero = Mpf256::zero();
        assert!(zero.try_sin().unwrap().is_zero());
        // acos(cos(x)) = x on (0, pi)
        let x = Mpf256::from_ratio(2, 5);
        let back = x.try_cos().unwrap().try_acos().unwrap();
        assert!(back.tol_eq(&x));
        // atan2 quadrants
        let y = Mpf256::from_i64(1);
        let q2 = Mpf256::try_atan2(&y, &Mpf256::from_i64(-1)).unwrap();
        assert!(q2 > Mpf256::from_ratio(3, 2) && q2 < Mpf256::from_ratio(5, 2));
    }

    #[test]
    fn json_and_text_round_trip() {
        let x = Mpf256::from_ratio(-7, 12);
        let v = x.to_json();
        let y = Mpf256::from_json(&v).unwrap();
        assert!(x.tol_eq(&y));
        assert!(Mpf256::parse_text("0.25").unwrap() == Mpf256::from_ratio(1, 4));
    }
}
