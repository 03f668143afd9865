//! Closed-form spectra and three-term recurrence coefficients per family.
//!
//! `family_spectrum` emits each family in the normalization under which the
//! printed recurrence formulas hold, so
//! `family_recurrence(tag) == recurrence_from_spectrum(family_spectrum(tag))`
//! exactly.

use super::{trig, FamilyTag};
use crate::orthogonality::RecurrenceCoeffs;
use crate::scalar::Scalar;
use crate::spectrum::SpectrumPair;
use crate::{Error, Result};

fn validate_q<T: Scalar>(q: &T) -> Result<()> {
    if q.is_zero() || q.tol_eq(&T::one()) || q.tol_eq(&-T::one()) {
        return Err(Error::InvalidParams("q must avoid 0 and +-1".into()));
    }
    Ok(())
}

fn nonzero<T: Scalar>(v: &T, name: &str) -> Result<()> {
    if v.tol_zero() {
        return Err(Error::InvalidParams(format!("{name} must be nonzero")));
    }
    Ok(())
}

/// The canonical spectrum of a family, tabulated to degree `n_max`.
pub fn family_spectrum<T: Scalar>(tag: &FamilyTag<T>, n_max: usize) -> Result<SpectrumPair<T>> {
    let one = T::one;
    let spec = match tag {
        FamilyTag::LittleQJacobi { a, b, q } => {
            validate_q(q)?;
            nonzero(a, "a")?;
            nonzero(b, "b")?;
            let abq = a.clone() * b.clone() * q.clone();
            SpectrumPair::tabulate(
                n_max,
                |n| {
                    abq.clone() * (q.powi(n as i32) - one()) + (q.powi(-(n as i32)) - one())
                },
                |n| {
                    -(a.clone() * (q.powi(n as i32) - one())) - (q.powi(-(n as i32)) - one())
                },
            )?
        }
        FamilyTag::QKrawtchouk { a, n, q } => {
            if *n == 0 {
                return Err(Error::InvalidParams("q-Krawtchouk needs N >= 1".into()));
            }
            let b = q.powi(-(*n as i32) - 1);
            return family_spectrum(
                &FamilyTag::LittleQJacobi {
                    a: a.clone(),
                    b,
                    q: q.clone(),
                },
                n_max,
            );
        }
        FamilyTag::LittleQLaguerre { a, q } => {
            validate_q(q)?;
            nonzero(a, "a")?;
            SpectrumPair::tabulate(
                n_max,
                |n| one() - q.powi(-(n as i32)),
                |n| a.clone() * (q.powi(n as i32) - one()) + (q.powi(-(n as i32)) - one()),
            )?
        }
        FamilyTag::QLaguerre { a, q } => {
            validate_q(q)?;
            nonzero(a, "a")?;
            SpectrumPair::tabulate(
                n_max,
                |n| a.clone() * (q.powi(n as i32) - one()),
                |n| a.clone() * (q.powi(n as i32) - one()) + (q.powi(-(n as i32)) - one()),
            )?
        }
        FamilyTag::AltQCharlier { a, q } => {
            validate_q(q)?;
            nonzero(a, "a")?;
            SpectrumPair::tabulate(
                n_max,
                |n| a.clone() * (q.powi(n as i32) - one()) - (q.powi(-(n as i32)) - one()),
                |n| q.powi(-(n as i32)) - one(),
            )?
        }
        FamilyTag::StieltjesWigert { q } => {
            validate_q(q)?;
            SpectrumPair::tabulate(
                n_max,
                |n| q.powi(n as i32) - one(),
                |n| q.powi(-(n as i32)) - one(),
            )?
        }
        FamilyTag::NegQVariant(inner) => {
            if !q_of(inner).map(|q| q.is_negative()).unwrap_or(false) {
                return Err(Error::InvalidParams(
                    "NegQVariant wraps a q-family with a negative base".into(),
                ));
            }
            return family_spectrum(inner, n_max);
        }
        FamilyTag::TrigCircle { alpha, beta, omega } => {
            nonzero(omega, "omega")?;
            let s = alpha.clone() + beta.clone() + one();
            let lam = |n: usize| -> Result<T> {
                let n = T::from_i64(n as i64);
                Ok(trig::sin(&(omega.clone() * n.clone()))?
                    * trig::sin(&(omega.clone() * (n + s.clone())))?)
            };
            let mu = |n: usize| -> Result<T> {
                let n = T::from_i64(n as i64);
                Ok(-(trig::sin(&(omega.clone() * n.clone()))?
                    * trig::sin(&(omega.clone() * (n + alpha.clone())))?))
            };
            let lambda: Vec<T> = (0..=n_max).map(lam).collect::<Result<_>>()?;
            let mus: Vec<T> = (0..=n_max).map(mu).collect::<Result<_>>()?;
            SpectrumPair::new(lambda, mus)?
        }
        FamilyTag::Jacobi { alpha, beta } => {
            let s = alpha.clone() + beta.clone() + one();
            SpectrumPair::tabulate(
                n_max,
                |n| {
                    let n = T::from_i64(n as i64);
                    -(n.clone() * (n + s.clone()))
                },
                |n| {
                    let n = T::from_i64(n as i64);
                    n.clone() * (n + alpha.clone())
                },
            )?
        }
        FamilyTag::Laguerre { alpha } => SpectrumPair::tabulate(
            n_max,
            |n| T::from_i64(n as i64),
            |n| {
                let n = T::from_i64(n as i64);
                -(n.clone() * (n + alpha.clone()))
            },
        )?,
        FamilyTag::Bessel { a } => SpectrumPair::tabulate(
            n_max,
            |n| {
                let n = T::from_i64(n as i64);
                n.clone() * (n + a.clone() - one())
            },
            |n| T::from_i64(2 * n as i64),
        )?,
        FamilyTag::LittleMinusOneJacobi { alpha, beta } => {
            let s = alpha.clone() + beta.clone() + one();
            SpectrumPair::tabulate(
                n_max,
                |n| {
                    let sign = if n % 2 == 0 { -one() } else { one() };
                    sign * (T::from_i64(2 * n as i64) + s.clone()) + s.clone()
                },
                |n| {
                    let sign = if n % 2 == 0 { one() } else { -one() };
                    sign * (T::from_i64(2 * n as i64) + alpha.clone()) - alpha.clone()
                },
            )?
        }
        FamilyTag::Degenerate { .. } | FamilyTag::Unknown => {
            return Err(Error::InvalidParams(
                "no spectrum for degenerate or unknown tags".into(),
            ));
        }
    };
    Ok(spec.with_hint(tag.name()))
}

fn q_of<T: Scalar>(tag: &FamilyTag<T>) -> Option<&T> {
    match tag {
        FamilyTag::LittleQJacobi { q, .. }
        | FamilyTag::QKrawtchouk { q, .. }
        | FamilyTag::LittleQLaguerre { q, .. }
        | FamilyTag::QLaguerre { q, .. }
        | FamilyTag::AltQCharlier { q, .. }
        | FamilyTag::StieltjesWigert { q } => Some(q),
        _ => None,
    }
}

/// Division with a family-parameter error on vanishing denominators.
fn fam_div<T: Scalar>(num: T, den: T) -> Result<T> {
    if den.tol_zero() {
        return Err(Error::SpectrumDegenerate(
            "recurrence denominator vanishes at these parameters".into(),
        ));
    }
    Ok(num / den)
}

/// Closed-form recurrence coefficients; `b` for `n = 0..n_max-1`, `u` for
/// `n = 1..n_max-1`, matching `recurrence_from_spectrum` on the same budget.
pub fn family_recurrence<T: Scalar>(
    tag: &FamilyTag<T>,
    n_max: usize,
) -> Result<RecurrenceCoeffs<T>> {
    if n_max < 2 {
        return Err(Error::InvalidParams("n_max must be at least 2".into()));
    }
    let one = T::one;
    let b_count = n_max; // b_0..b_{n_max-1}
    let u_count = n_max - 1; // u_1..u_{n_max-1}

    let build = |b_of: &dyn Fn(i32) -> Result<T>,
                 u_of: &dyn Fn(i32) -> Result<T>|
     -> Result<RecurrenceCoeffs<T>> {
        let b = (0..b_count as i32)
            .map(b_of)
            .collect::<Result<Vec<_>>>()?;
        let u = (1..=u_count as i32)
            .map(u_of)
            .collect::<Result<Vec<_>>>()?;
        Ok(RecurrenceCoeffs::new(b, u))
    };

    match tag {
        FamilyTag::LittleQJacobi { a, b, q } => {
            validate_q(q)?;
            let ab = a.clone() * b.clone();
            // A_n = q^n (1 - a q^{n+1})(1 - ab q^{n+1})
            //       / ((1 - ab q^{2n+1})(1 - ab q^{2n+2}))
            let big_a = |n: i32| -> Result<T> {
                fam_div(
                    q.powi(n)
                        * (one() - a.clone() * q.powi(n + 1))
                        * (one() - ab.clone() * q.powi(n + 1)),
                    (one() - ab.clone() * q.powi(2 * n + 1))
                        * (one() - ab.clone() * q.powi(2 * n + 2)),
                )
            };
            // C_n = a q^n (1 - q^n)(1 - b q^n)
            //       / ((1 - ab q^{2n+1})(1 - ab q^{2n}))
            let big_c = |n: i32| -> Result<T> {
                fam_div(
                    a.clone()
                        * q.powi(n)
                        * (one() - q.powi(n))
                        * (one() - b.clone() * q.powi(n)),
                    (one() - ab.clone() * q.powi(2 * n + 1)) * (one() - ab.clone() * q.powi(2 * n)),
                )
            };
            build(
                &|n| Ok(big_a(n)? + big_c(n)?),
                &|n| Ok(big_a(n - 1)? * big_c(n)?),
            )
        }
        FamilyTag::QKrawtchouk { a, n, q } => {
            if *n == 0 {
                return Err(Error::InvalidParams("q-Krawtchouk needs N >= 1".into()));
            }
            let b = q.powi(-(*n as i32) - 1);
            family_recurrence(
                &FamilyTag::LittleQJacobi {
                    a: a.clone(),
                    b,
                    q: q.clone(),
                },
                n_max,
            )
        }
        FamilyTag::LittleQLaguerre { a, q } => {
            validate_q(q)?;
            build(
                &|n| {
                    Ok((one() + a.clone()) * q.powi(n)
                        - a.clone() * (one() + q.clone()) * q.powi(2 * n))
                },
                &|n| {
                    Ok(a.clone()
                        * q.powi(2 * n - 1)
                        * (one() - q.powi(n))
                        * (one() - a.clone() * q.powi(n)))
                },
            )
        }
        FamilyTag::QLaguerre { a, q } => {
            validate_q(q)?;
            nonzero(a, "a")?;
            build(
                &|n| {
                    Ok((q.clone() + one()) / a.clone() * q.powi(-2 * n - 1)
                        - (a.clone() + one()) / a.clone() * q.powi(-n))
                },
                &|n| {
                    Ok(q.powi(-4 * n + 1) / (a.clone() * a.clone())
                        * (one() - q.powi(n))
                        * (one() - a.clone() * q.powi(n)))
                },
            )
        }
        FamilyTag::AltQCharlier { a, q } => {
            validate_q(q)?;
            let qm1 = q.clone() - one();
            build(
                &|n| {
                    let t1 = fam_div(
                        one() - q.powi(n + 1),
                        -qm1.clone() * (one() + a.clone() * q.powi(2 * n + 1)),
                    )?;
                    let t2 = fam_div(
                        one() - q.powi(n),
                        -qm1.clone() * (one() + a.clone() * q.powi(2 * n - 1)),
                    )?;
                    Ok(t1 - t2)
                },
                &|n| {
                    let num = a.clone()
                        * q.powi(3 * n - 2)
                        * (one() - q.powi(n))
                        * (one() + a.clone() * q.powi(n - 1));
                    let d1 = one() + a.clone() * q.powi(2 * n);
                    let d2 = one() + a.clone() * q.powi(2 * n - 2);
                    let d3 = one() + a.clone() * q.powi(2 * n - 1);
                    fam_div(num, d1 * d2 * d3.clone() * d3)
                },
            )
        }
        FamilyTag::StieltjesWigert { q } => {
            validate_q(q)?;
            build(
                &|n| Ok((q.clone() + one()) * q.powi(-2 * n - 1) - q.powi(-n)),
                &|n| Ok(q.powi(1 - 4 * n) * (one() - q.powi(n))),
            )
        }
        FamilyTag::NegQVariant(inner) => {
            if !q_of(inner).map(|q| q.is_negative()).unwrap_or(false) {
                return Err(Error::InvalidParams(
                    "NegQVariant wraps a q-family with a negative base".into(),
                ));
            }
            family_recurrence(inner, n_max)
        }
        FamilyTag::TrigCircle { alpha, beta, omega } => {
            nonzero(omega, "omega")?;
            let s = alpha.clone() + beta.clone(); // printed forms use alpha+beta
            let sn = |k: T| -> Result<T> { trig::sin(&(omega.clone() * k)) };
            let sin_omega = sn(one())?;
            let b_of = |n: i32| -> Result<T> {
                let n_t = T::from_i64(n as i64);
                let first = fam_div(
                    sn(n_t.clone() + one())? * sn(n_t.clone() + alpha.clone() + one())?,
                    sin_omega.clone()
                        * sn(T::from_i64(2 * n as i64) + s.clone() + T::from_i64(2))?,
                )?;
                if n == 0 {
                    return Ok(first); // mu_0 = 0 kills the second term
                }
                let second = fam_div(
                    sn(n_t.clone())? * sn(n_t + alpha.clone())?,
                    sin_omega.clone() * sn(T::from_i64(2 * n as i64) + s.clone())?,
                )?;
                Ok(first - second)
            };
            let u_of = |n: i32| -> Result<T> {
                let n_t = T::from_i64(n as i64);
                let two_n = T::from_i64(2 * n as i64);
                let num = sn(n_t.clone())?
                    * sn(n_t.clone() + beta.clone())?
                    * sn(n_t.clone() + alpha.clone())?
                    * sn(n_t + alpha.clone() + beta.clone())?;
                let d = sn(two_n.clone() + s.clone())?;
                fam_div(
                    num,
                    sn(two_n.clone() + s.clone() + one())?
                        * sn(two_n + s.clone() - one())?
                        * d.clone()
                        * d,
                )
            };
            build(&b_of, &u_of)
        }
        FamilyTag::Jacobi { alpha, beta } => {
            let s = alpha.clone() + beta.clone();
            let b_of = |n: i32| -> Result<T> {
                let two_n_s = T::from_i64(2 * n as i64) + s.clone();
                let half = T::from_ratio(1, 2);
                if two_n_s.tol_zero() {
                    if n == 0 {
                        // removable 0/0: (alpha^2 - beta^2)/(2(alpha+beta)(..))
                        // cancels to (alpha - beta)/(2(alpha+beta+2))
                        return Ok(fam_div(
                            alpha.clone() - beta.clone(),
                            T::from_i64(2) * (s.clone() + T::from_i64(2)),
                        )? + half);
                    }
                    return Err(Error::SpectrumDegenerate(
                        "2n + alpha + beta vanishes".into(),
                    ));
                }
                let num = alpha.clone() * alpha.clone() - beta.clone() * beta.clone();
                let den =
                    T::from_i64(2) * two_n_s.clone() * (two_n_s + T::from_i64(2));
                Ok(fam_div(num, den)? + half)
            };
            let u_of = |n: i32| -> Result<T> {
                let n_t = T::from_i64(n as i64);
                let two_n_s = T::from_i64(2 * n as i64) + s.clone();
                let num = n_t.clone()
                    * (n_t.clone() + alpha.clone())
                    * (n_t.clone() + beta.clone())
                    * (n_t + s.clone());
                let den = (two_n_s.clone() + one())
                    * (two_n_s.clone() - one())
                    * two_n_s.clone()
                    * two_n_s;
                fam_div(num, den)
            };
            build(&b_of, &u_of)
        }
        FamilyTag::Laguerre { alpha } => build(
            &|n| Ok(T::from_i64(2 * n as i64) + alpha.clone() + one()),
            &|n| {
                let n_t = T::from_i64(n as i64);
                Ok(n_t.clone() * (n_t + alpha.clone()))
            },
        ),
        FamilyTag::Bessel { a } => {
            let b_of = |n: i32| -> Result<T> {
                if n == 0 {
                    // (a-2)/a - (a-2)/(a-2) reduces to -2/a
                    return fam_div(-T::from_i64(2), a.clone());
                }
                let d1 = T::from_i64(2 * n as i64) + a.clone();
                let d2 = T::from_i64(2 * n as i64) + a.clone() - T::from_i64(2);
                fam_div(
                    -T::from_i64(2) * (a.clone() - T::from_i64(2)),
                    d1 * d2,
                )
            };
            let u_of = |n: i32| -> Result<T> {
                let n_t = T::from_i64(n as i64);
                let base = T::from_i64(2 * n as i64) + a.clone();
                let num = -T::from_i64(4) * n_t.clone() * (n_t + a.clone() - T::from_i64(2));
                let den = (base.clone() - one())
                    * (base.clone() - T::from_i64(3))
                    * (base.clone() - T::from_i64(2))
                    * (base - T::from_i64(2));
                fam_div(num, den)
            };
            build(&b_of, &u_of)
        }
        FamilyTag::LittleMinusOneJacobi { alpha, beta } => {
            let s = alpha.clone() + beta.clone();
            let b_of = |n: i32| -> Result<T> {
                let sign = if n % 2 == 0 { one() } else { -one() };
                let num = sign.clone()
                    * ((T::from_i64(2 * n as i64) + one()) * alpha.clone()
                        + alpha.clone() * beta.clone()
                        + alpha.clone() * alpha.clone()
                        + sign.clone() * beta.clone());
                let d1 = T::from_i64(2 * n as i64) + s.clone();
                let d2 = T::from_i64(2 * n as i64) + T::from_i64(2) + s.clone();
                if n == 0 {
                    // removable (alpha + beta) factor: the printed form
                    // cancels to (1 + alpha)/(alpha + beta + 2)
                    return fam_div(one() + alpha.clone(), s.clone() + T::from_i64(2));
                }
                fam_div(num, d1 * d2)
            };
            let u_of = |n: i32| -> Result<T> {
                let theta = if n % 2 == 0 { one() } else { T::zero() };
                let n_t = T::from_i64(n as i64);
                let num = (n_t.clone() + (one() - theta.clone()) * alpha.clone())
                    * (n_t + beta.clone() + theta * alpha.clone());
                let d = T::from_i64(2 * n as i64) + s.clone();
                fam_div(num, d.clone() * d)
            };
            build(&b_of, &u_of)
        }
        FamilyTag::Degenerate { .. } | FamilyTag::Unknown => Err(Error::InvalidParams(
            "no recurrence for degenerate or unknown tags".into(),
        )),
    }
}
