//! Concrete operator realizations acting on coefficient vectors.
//!
//! Each operator is built by composing coefficient-level primitives
//! (differentiation, q-shift `T f(x) = f(qx)`, reflection `R f(x) = f(-x)`,
//! multiplication by polynomials), never by sampling. The two operators with
//! formal `1/x` factors check that the offending constant term vanishes
//! before shifting indices down, so a non-polynomial result is impossible to
//! miss.

use crate::poly::PolynomialCoeffs;
use crate::scalar::Scalar;
use crate::spectrum::SpectrumPair;
use crate::{Error, Result};

/// The six concrete operator shapes.
///
/// - `Hypergeometric(alpha, beta)`: `x(1-x) d^2 + (alpha+1 - (alpha+beta+2)x) d`
/// - `LaguerreOp(alpha)`: `-x d^2 + (x - alpha - 1) d`
/// - `BesselOp(a)`: `x^2 d^2 + (a x + 2) d`
/// - `QHypergeometric(alpha, beta, gamma, q)`: second-order q-difference
///   operator `x(gamma - x) T^- D_q^2 + q^2 (alpha x + beta) T^- D_q` with
///   `T^- f(x) = f(x/q)`, `D_q f(x) = (f(qx) - f(x))/(x(q-1))`; the `q^2`
///   factor normalizes the profile to
///   `lambda_n = q^{2-n}[n](q alpha - [n-1])`,
///   `mu_n = q^{2-n}[n](q beta + gamma [n-1])`.
/// - `LittleQOp(a, b, q)`: `a(bq - 1/x)(T - 1) + (1 - 1/x)(T^- - 1)`
/// - `DunklMinusOne(alpha, beta)`: `2(1-x) d R + (alpha+beta+1 - alpha/x)(1 - R)`
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorRealization<T> {
    Hypergeometric { alpha: T, beta: T },
    LaguerreOp { alpha: T },
    BesselOp { a: T },
    QHypergeometric { alpha: T, beta: T, gamma: T, q: T },
    LittleQOp { a: T, b: T, q: T },
    DunklMinusOne { alpha: T, beta: T },
}

/// Coefficient-level derivative.
fn derivative<T: Scalar>(p: &PolynomialCoeffs<T>) -> PolynomialCoeffs<T> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return PolynomialCoeffs::zero();
    }
    let coeffs = (1..=deg)
        .map(|k| p.coeff(k) * T::from_i64(k as i64))
        .collect();
    PolynomialCoeffs::general(coeffs)
}

/// `f(qx)`: coefficient k picks up `q^k`.
fn q_shift<T: Scalar>(p: &PolynomialCoeffs<T>, q: &T) -> PolynomialCoeffs<T> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.clone() * q.powi(k as i32))
        .collect();
    PolynomialCoeffs::general(coeffs)
}

/// `f(-x)`.
fn reflect<T: Scalar>(p: &PolynomialCoeffs<T>) -> PolynomialCoeffs<T> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
        .collect();
    PolynomialCoeffs::general(coeffs)
}

/// Formal division by x; the constant term must already vanish.
fn div_x<T: Scalar>(p: &PolynomialCoeffs<T>, context: &str) -> Result<PolynomialCoeffs<T>> {
    if !p.coeff(0).tol_zero() {
        return Err(Error::NonPolynomialOutput(format!(
            "{context}: 1/x term survives with coefficient {}",
            p.coeff(0)
        )));
    }
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(PolynomialCoeffs::zero());
    }
    let coeffs = (1..=deg).map(|k| p.coeff(k)).collect();
    Ok(PolynomialCoeffs::general(coeffs))
}

/// `D_q f(x) = (f(qx) - f(x))/(x(q-1))` on coefficients.
fn q_derivative<T: Scalar>(p: &PolynomialCoeffs<T>, q: &T) -> Result<PolynomialCoeffs<T>> {
    let diff = q_shift(p, q).sub(p);
    let shifted = div_x(&diff, "q-derivative")?;
    Ok(shifted.scale(&(T::one() / (q.clone() - T::one()))))
}

impl<T: Scalar> OperatorRealization<T> {
    /// Apply the operator to a polynomial, exactly, in coefficient space.
    pub fn apply_realized(&self, p: &PolynomialCoeffs<T>) -> Result<PolynomialCoeffs<T>> {
        match self {
            OperatorRealization::Hypergeometric { alpha, beta } => {
                let d1 = derivative(p);
                let d2 = derivative(&d1);
                // x(1-x) p'' = x p'' - x^2 p''
                let term2 = d2.mul_x().sub(&d2.mul_x().mul_x());
                // (alpha+1) p' - (alpha+beta+2) x p'
                let c1 = alpha.clone() + T::one();
                let c2 = alpha.clone() + beta.clone() + T::from_i64(2);
                let term1 = d1.scale(&c1).sub(&d1.mul_x().scale(&c2));
                Ok(term2.add(&term1))
            }
            OperatorRealization::LaguerreOp { alpha } => {
                let d1 = derivative(p);
                let d2 = derivative(&d1);
                // -x p'' + (x - alpha - 1) p'
                let term2 = d2.mul_x().scale(&-T::one());
                let term1 = d1
                    .mul_x()
                    .sub(&d1.scale(&(alpha.clone() + T::one())));
                Ok(term2.add(&term1))
            }
            OperatorRealization::BesselOp { a } => {
                let d1 = derivative(p);
                let d2 = derivative(&d1);
                // x^2 p'' + (a x + 2) p'
                let term2 = d2.mul_x().mul_x();
                let term1 = d1.mul_x().scale(a).add(&d1.scale(&T::from_i64(2)));
                Ok(term2.add(&term1))
            }
            OperatorRealization::QHypergeometric {
                alpha,
                beta,
                gamma,
                q,
            } => {
                if q.is_zero() || q.tol_eq(&T::one()) {
                    return Err(Error::InvalidParams("q must avoid 0 and 1".into()));
                }
                let q_inv = T::one() / q.clone();
                let dq = q_derivative(p, q)?;
                let dq2 = q_derivative(&dq, q)?;
                // x(gamma - x) T^- D_q^2
                let tm2 = q_shift(&dq2, &q_inv);
                let second = tm2.mul_x().scale(gamma).sub(&tm2.mul_x().mul_x());
                // q^2 (alpha x + beta) T^- D_q
                let tm1 = q_shift(&dq, &q_inv);
                let q2 = q.clone() * q.clone();
                let first = tm1
                    .mul_x()
                    .scale(&(alpha.clone() * q2.clone()))
                    .add(&tm1.scale(&(beta.clone() * q2)));
                Ok(second.add(&first))
            }
            OperatorRealization::LittleQOp { a, b, q } => {
                if q.is_zero() || q.tol_eq(&T::one()) {
                    return Err(Error::InvalidParams("q must avoid 0 and 1".into()));
                }
                let q_inv = T::one() / q.clone();
                // forward difference f(qx) - f(x), backward f(x/q) - f(x)
                let fwd = q_shift(p, q).sub(p);
                let bwd = q_shift(p, &q_inv).sub(p);
                // a(bq - 1/x) fwd: the 1/x part must cancel on the constant term
                let fwd_div = div_x(&fwd, "little q-operator forward term")?;
                let t1 = fwd
                    .scale(&(a.clone() * b.clone() * q.clone()))
                    .sub(&fwd_div.scale(a));
                // (1 - 1/x) bwd
                let bwd_div = div_x(&bwd, "little q-operator backward term")?;
                let t2 = bwd.sub(&bwd_div);
                Ok(t1.add(&t2))
            }
            OperatorRealization::DunklMinusOne { alpha, beta } => {
                // 2(1-x) d/dx R + (alpha + beta + 1 - alpha/x)(1 - R)
                let rp = reflect(p);
                let drp = derivative(&rp);
                let t1 = drp.sub(&drp.mul_x()).scale(&T::from_i64(2));
                let anti = p.sub(&rp); // (1 - R) p, odd part doubled
                let c = alpha.clone() + beta.clone() + T::one();
                let anti_div = div_x(&anti, "Dunkl reflection term")?;
                let t2 = anti.scale(&c).sub(&anti_div.scale(alpha));
                Ok(t1.add(&t2))
            }
        }
    }

    /// Extract the two-diagonal profile by applying the operator to x^n for
    /// n = 0..=N and asserting nothing lands off the two diagonals.
    pub fn two_diagonal_profile(&self, n_max: usize) -> Result<SpectrumPair<T>> {
        two_diagonal_profile_of(|p| self.apply_realized(p), n_max)
    }
}

/// Profile extraction for an arbitrary polynomial operator; rejects the
/// operator unless `op(x^n) = lambda_n x^n + mu_n x^{n-1}` exactly.
pub fn two_diagonal_profile_of<T, F>(op: F, n_max: usize) -> Result<SpectrumPair<T>>
where
    T: Scalar,
    F: Fn(&PolynomialCoeffs<T>) -> Result<PolynomialCoeffs<T>>,
{
    let mut lambda = Vec::with_capacity(n_max + 1);
    let mut mu = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let image = op(&PolynomialCoeffs::monomial(n))?;
        for k in 0..=image.degree().unwrap_or(0) {
            let keep = k == n || (n >= 1 && k == n - 1);
            if !keep && !image.coeff(k).tol_zero() {
                return Err(Error::NotTwoDiagonal {
                    n,
                    stray_degree: k,
                });
            }
        }
        lambda.push(image.coeff(n));
        mu.push(if n >= 1 { image.coeff(n - 1) } else { T::zero() });
    }
    SpectrumPair::new(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenpoly::eigenpolynomial;
    use crate::{Normalization, Rat};

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn i(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn hypergeometric_profile_matches_closed_form() {
        let (alpha, beta) = (i(1), i(2));
        let op = OperatorRealization::Hypergeometric {
            alpha: alpha.clone(),
            beta: beta.clone(),
        };
        let profile = op.two_diagonal_profile(20).unwrap();
        for n in 0..=20 {
            let n_i = n as i64;
            assert_eq!(profile.lambda(n), &i(-n_i * (n_i + 4)), "lambda_{n}");
            assert_eq!(profile.mu(n), &i(n_i * (n_i + 1)), "mu_{n}");
        }
    }

    #[test]
    fn hypergeometric_on_x2() {
        // alpha = beta = 0: L x^2 = -6 x^2 + 4 x
        let op = OperatorRealization::Hypergeometric {
            alpha: i(0),
            beta: i(0),
        };
        let out = op.apply_realized(&PolynomialCoeffs::monomial(2)).unwrap();
        assert_eq!(out.coeffs(), &[i(0), i(4), i(-6)]);
    }

    #[test]
    fn laguerre_and_bessel_profiles() {
        let lag = OperatorRealization::LaguerreOp { alpha: i(3) };
        let p = lag.two_diagonal_profile(10).unwrap();
        for n in 0..=10 {
            let n_i = n as i64;
            assert_eq!(p.lambda(n), &i(n_i));
            assert_eq!(p.mu(n), &i(-n_i * (n_i + 3)));
        }
        let bes = OperatorRealization::BesselOp { a: i(5) };
        let p = bes.two_diagonal_profile(10).unwrap();
        for n in 0..=10 {
            let n_i = n as i64;
            assert_eq!(p.lambda(n), &i(n_i * (n_i + 4)));
            assert_eq!(p.mu(n), &i(2 * n_i));
        }
    }

    #[test]
    fn q_hypergeometric_profile() {
        // lambda_n = q^{2-n}[n](q alpha - [n-1]), mu_n = q^{2-n}[n](q beta + gamma [n-1])
        let (alpha, beta, gamma, q) = (r(1, 3), r(2, 5), r(1, 4), r(1, 2));
        let op = OperatorRealization::QHypergeometric {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            q: q.clone(),
        };
        let profile = op.two_diagonal_profile(12).unwrap();
        let qn = |n: i32| -> Rat {
            if n == 0 {
                i(0)
            } else {
                (q.powi(n) - i(1)) / (q.clone() - i(1))
            }
        };
        for n in 0..=12i32 {
            let scale = q.powi(2 - n) * qn(n);
            let expect_l = scale.clone() * (q.clone() * alpha.clone() - qn(n - 1));
            let expect_m = scale * (q.clone() * beta.clone() + gamma.clone() * qn(n - 1));
            assert_eq!(profile.lambda(n as usize), &expect_l, "lambda_{n}");
            assert_eq!(profile.mu(n as usize), &expect_m, "mu_{n}");
        }
    }

    #[test]
    fn little_q_profile_matches_case_i_constants() {
        // lambda_n = abq(q^n - 1) + (q^{-n} - 1), mu_n = -a(q^n - 1) - (q^{-n} - 1)
        let (a, b, q) = (r(1, 3), r(1, 4), r(1, 2));
        let op = OperatorRealization::LittleQOp {
            a: a.clone(),
            b: b.clone(),
            q: q.clone(),
        };
        let profile = op.two_diagonal_profile(12).unwrap();
        for n in 0..=12i32 {
            let up = q.powi(n) - i(1);
            let down = q.powi(-n) - i(1);
            let expect_l = a.clone() * b.clone() * q.clone() * up.clone() + down.clone();
            let expect_m = -(a.clone() * up) - down;
            assert_eq!(profile.lambda(n as usize), &expect_l, "lambda_{n}");
            assert_eq!(profile.mu(n as usize), &expect_m, "mu_{n}");
        }
    }

    #[test]
    fn dunkl_profile_and_example() {
        let (alpha, beta) = (i(1), i(1));
        let op = OperatorRealization::DunklMinusOne {
            alpha: alpha.clone(),
            beta: beta.clone(),
        };
        // L x = (2 alpha + 2 beta + 4) x - (2 + 2 alpha) = 8x - 4 at alpha = beta = 1
        let out = op.apply_realized(&PolynomialCoeffs::monomial(1)).unwrap();
        assert_eq!(out.coeffs(), &[i(-4), i(8)]);

        let profile = op.two_diagonal_profile(10).unwrap();
        for n in 0..=10i64 {
            let sign = if n % 2 == 0 { i(-1) } else { i(1) };
            let expect_l = sign.clone() * i(2 * n + 3) + i(3);
            let expect_m = -sign * i(2 * n + 1) - i(1);
            assert_eq!(profile.lambda(n as usize), &expect_l, "lambda_{n}");
            assert_eq!(profile.mu(n as usize), &expect_m, "mu_{n}");
        }
    }

    #[test]
    fn hermite_style_operator_is_rejected() {
        // d^2 - 2x d sends x^2 two degrees down: stray at x^0.
        let op = |p: &PolynomialCoeffs<Rat>| -> crate::Result<PolynomialCoeffs<Rat>> {
            let d1 = derivative(p);
            let d2 = derivative(&d1);
            Ok(d2.sub(&d1.mul_x().scale(&i(2))))
        };
        let err = two_diagonal_profile_of(op, 5).unwrap_err();
        match err {
            crate::Error::NotTwoDiagonal { n, stray_degree } => {
                assert_eq!((n, stray_degree), (2, 0));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn realized_agrees_with_abstract_on_random_polynomials() {
        let ops: Vec<OperatorRealization<Rat>> = vec![
            OperatorRealization::Hypergeometric {
                alpha: i(1),
                beta: i(2),
            },
            OperatorRealization::LaguerreOp { alpha: i(2) },
            OperatorRealization::BesselOp { a: i(5) },
            OperatorRealization::QHypergeometric {
                alpha: r(1, 3),
                beta: r(2, 5),
                gamma: r(1, 4),
                q: r(1, 2),
            },
            OperatorRealization::LittleQOp {
                a: r(1, 3),
                b: r(1, 4),
                q: r(1, 2),
            },
            OperatorRealization::DunklMinusOne {
                alpha: i(1),
                beta: i(3),
            },
        ];
        // fixed pseudo-random coefficients
        let p = PolynomialCoeffs::general(vec![
            r(3, 2),
            r(-7, 3),
            i(0),
            r(5, 4),
            i(-2),
            r(11, 6),
            i(1),
            r(-1, 8),
            i(4),
            r(2, 7),
            r(-9, 5),
        ]);
        for op in &ops {
            let profile = op.two_diagonal_profile(10).unwrap();
            let via_op = op.apply_realized(&p).unwrap();
            let via_abstract = profile.apply_abstract(&p).unwrap();
            assert_eq!(via_op.coeffs(), via_abstract.coeffs(), "{op:?}");
        }
    }

    #[test]
    fn eigenvalue_check_all_kinds() {
        let ops: Vec<OperatorRealization<Rat>> = vec![
            OperatorRealization::Hypergeometric {
                alpha: i(1),
                beta: i(2),
            },
            OperatorRealization::LaguerreOp { alpha: i(1) },
            OperatorRealization::BesselOp { a: i(5) },
            OperatorRealization::QHypergeometric {
                alpha: r(1, 3),
                beta: r(2, 5),
                gamma: r(1, 4),
                q: r(1, 2),
            },
            OperatorRealization::LittleQOp {
                a: r(1, 3),
                b: r(1, 4),
                q: r(1, 2),
            },
            OperatorRealization::DunklMinusOne {
                alpha: i(1),
                beta: i(3),
            },
        ];
        for op in &ops {
            let profile = op.two_diagonal_profile(14).unwrap();
            for n in 0..=12 {
                let p = eigenpolynomial(&profile, n, Normalization::Monic).unwrap();
                let lp = op.apply_realized(&p).unwrap();
                assert!(
                    lp.tol_eq(&p.scale(profile.lambda(n))),
                    "{op:?} at n = {n}"
                );
            }
        }
    }
}
