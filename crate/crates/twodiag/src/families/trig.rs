//! Trigonometric-circle helpers: a minimal complex pair type and the
//! parameter fits used to classify spectra with -2 < Omega < 2.

use crate::poly::PolynomialCoeffs;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Complex value as a pair of scalars. Only what the circle-vertex
/// orthogonality sums need.
#[derive(Clone, Debug, PartialEq)]
pub struct Cplx<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Cplx<T> {
    pub fn new(re: T, im: T) -> Self {
        Cplx { re, im }
    }

    pub fn real(re: T) -> Self {
        Cplx {
            re,
            im: T::zero(),
        }
    }

    pub fn zero() -> Self {
        Cplx {
            re: T::zero(),
            im: T::zero(),
        }
    }

    pub fn one() -> Self {
        Cplx {
            re: T::one(),
            im: T::zero(),
        }
    }

    /// `e^{i theta}` via real sin/cos.
    pub fn from_angle(theta: &T) -> Result<Self> {
        let re = theta.try_cos().ok_or_else(exact_trig_error)?;
        let im = theta.try_sin().ok_or_else(exact_trig_error)?;
        Ok(Cplx { re, im })
    }

    pub fn add(&self, o: &Self) -> Self {
        Cplx {
            re: self.re.clone() + o.re.clone(),
            im: self.im.clone() + o.im.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Cplx {
            re: self.re.clone() - o.re.clone(),
            im: self.im.clone() - o.im.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Cplx {
            re: self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            im: self.re.clone() * o.im.clone() + self.im.clone() * o.re.clone(),
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        let d = o.modulus_sq();
        if d.tol_zero() {
            return Err(Error::SpectrumDegenerate("complex division by zero".into()));
        }
        let conj = Cplx {
            re: o.re.clone(),
            im: -o.im.clone(),
        };
        let num = self.mul(&conj);
        Ok(Cplx {
            re: num.re / d.clone(),
            im: num.im / d,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Cplx {
            re: self.re.clone() * c.clone(),
            im: self.im.clone() * c.clone(),
        }
    }

    pub fn modulus_sq(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn modulus(&self) -> T {
        self.modulus_sq()
            .sqrt_approx()
            .expect("modulus of a complex number is nonnegative")
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

fn exact_trig_error() -> Error {
    Error::UnrepresentableExact(
        "trigonometric values require a floating scalar (exact rationals cannot represent them)"
            .into(),
    )
}

/// sin(theta), failing cleanly in exact mode.
pub fn sin<T: Scalar>(theta: &T) -> Result<T> {
    theta.try_sin().ok_or_else(exact_trig_error)
}

/// Evaluate a real-coefficient polynomial at a complex point.
pub fn eval_complex<T: Scalar>(p: &PolynomialCoeffs<T>, z: &Cplx<T>) -> Cplx<T> {
    let mut acc = Cplx::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&Cplx::real(c.clone()));
    }
    acc
}

/// Fit `f_n = u (cos(2 omega n) - 1) + v sin(2 omega n)` through n = 1, 2.
/// This is the general solution of the three-term recurrence with
/// `|Omega| < 2` and `f_0 = 0`.
pub fn fit_circle_coefficients<T: Scalar>(omega: &T, f1: &T, f2: &T) -> Result<(T, T)> {
    let two = T::from_i64(2);
    let c2 = (omega.clone() * two.clone()).try_cos().ok_or_else(exact_trig_error)?;
    let s2 = (omega.clone() * two.clone()).try_sin().ok_or_else(exact_trig_error)?;
    let c4 = (omega.clone() * two.clone() * two.clone())
        .try_cos()
        .ok_or_else(exact_trig_error)?;
    let s4 = (omega.clone() * two.clone() * two)
        .try_sin()
        .ok_or_else(exact_trig_error)?;
    let a = vec![
        vec![c2 - T::one(), s2],
        vec![c4 - T::one(), s4],
    ];
    crate::linalg::solve(&a, &[f1.clone(), f2.clone()])
        .map(|x| (x[0].clone(), x[1].clone()))
        .ok_or_else(|| {
            Error::SpectrumDegenerate("circle-coefficient fit is singular at this omega".into())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Mpf256;

    fn m(n: i64, d: i64) -> Mpf256 {
        Mpf256::from_ratio(n, d)
    }

    #[test]
    fn complex_arithmetic() {
        let i_unit = Cplx::new(m(0, 1), m(1, 1));
        let z = i_unit.mul(&i_unit);
        assert!(z.re.tol_eq(&m(-1, 1)) && z.im.tol_zero());
        let w = Cplx::new(m(3, 1), m(4, 1));
        assert!(w.modulus().tol_eq(&m(5, 1)));
        let q = w.div(&Cplx::new(m(1, 1), m(2, 1))).unwrap();
        // (3+4i)/(1+2i) = (11 - 2i)/5
        assert!(q.re.tol_eq(&m(11, 5)) && q.im.tol_eq(&m(-2, 5)));
    }

    #[test]
    fn from_angle_lies_on_unit_circle() {
        let z = Cplx::from_angle(&m(2, 5)).unwrap();
        assert!(z.modulus_sq().tol_eq(&m(1, 1)));
    }

    #[test]
    fn circle_fit_recovers_sin_product() {
        use crate::Scalar;
        // f_n = sin(omega n) sin(omega (n + s)) should fit with
        // u = -cos(omega s)/2, v = sin(omega s)/2.
        let omega = m(2, 5);
        let s = m(7, 3);
        let f = |n: i64| {
            (omega.clone() * Mpf256::from_i64(n)).try_sin().unwrap()
                * ((omega.clone() * (Mpf256::from_i64(n) + s.clone())).try_sin().unwrap())
        };
        let (u, v) = fit_circle_coefficients(&omega, &f(1), &f(2)).unwrap();
        let expect_u = -(omega.clone() * s.clone()).try_cos().unwrap() / m(2, 1);
        let expect_v = (omega.clone() * s.clone()).try_sin().unwrap() / m(2, 1);
        assert!(u.tol_eq(&expect_u), "u = {u}, expect {expect_u}");
        assert!(v.tol_eq(&expect_v));
        // and the fit reproduces f_3
        let two = Mpf256::from_i64(2);
        let n3 = Mpf256::from_i64(3);
        let f3 = u * ((two.clone() * omega.clone() * n3.clone()).try_cos().unwrap() - Mpf256::from_i64(1))
            + v * (two * omega.clone() * n3).try_sin().unwrap();
        assert!(f3.tol_eq(&f(3)));
    }
}
