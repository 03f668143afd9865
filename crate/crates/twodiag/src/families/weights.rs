//! Orthogonality weights, discrete orthogonality checks, and positivity
//! reports.

use super::{family_recurrence, trig, FamilyTag};
use crate::orthogonality::RecurrenceCoeffs;
use crate::poly::PolynomialCoeffs;
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportKind {
    DiscreteInfinite,
    DiscreteFinite,
    ContinuousInterval,
    CircleVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    NotPositive,
    Complex,
}

/// Weight description for a family. Discrete supports generate their points
/// and weights on demand; continuous ones carry a formula evaluated through
/// `f64` for diagnostics.
#[derive(Clone, Debug)]
pub struct WeightData<T> {
    pub kind: SupportKind,
    pub positivity: Positivity,
    /// Number of support points when the support is finite.
    pub finite_points: Option<usize>,
    pub description: String,
    tag: FamilyTag<T>,
}

impl<T: Scalar> WeightData<T> {
    /// First `count` pairs `(x_s, w_s)` of a real discrete support. Weights
    /// are built incrementally from the term ratio, exactly in exact mode.
    pub fn discrete_terms(&self, count: usize) -> Result<Vec<(T, T)>> {
        let one = T::one;
        match &self.tag {
            FamilyTag::LittleQJacobi { a, b, q } => {
                // x_s = q^s, w_s = (aq)^s (bq; q)_s / (q; q)_s
                let count = self.cap(count);
                let mut out = Vec::with_capacity(count);
                let mut w = one();
                let mut x = one();
                for s in 0..count {
                    out.push((x.clone(), w.clone()));
                    // w_{s+1}/w_s = a q (1 - b q^{s+1})/(1 - q^{s+1})
                    let s1 = (s + 1) as i32;
                    let num = a.clone() * q.clone() * (one() - b.clone() * q.powi(s1));
                    let den = one() - q.powi(s1);
                    if den.tol_zero() {
                        return Err(Error::InvalidParams("q^s returns to 1".into()));
                    }
                    w = w * num / den;
                    x = x * q.clone();
                }
                Ok(out)
            }
            FamilyTag::QKrawtchouk { a, n, q } => {
                let b = q.powi(-(*n as i32) - 1);
                let inner = WeightData {
                    tag: FamilyTag::LittleQJacobi {
                        a: a.clone(),
                        b,
                        q: q.clone(),
                    },
                    ..self.clone()
                };
                inner.discrete_terms(count.min(*n + 1))
            }
            FamilyTag::NegQVariant(inner) => {
                let data = WeightData {
                    tag: (**inner).clone(),
                    ..self.clone()
                };
                data.discrete_terms(count)
            }
            _ => Err(Error::NoKnownWeight(self.tag.name().into())),
        }
    }

    /// Circle vertices `x_s = e^{i omega (2s - N)}` and their complex
    /// weights `w_s = (q^{-N}; q)_s q^{(alpha+1)s} / (q; q)_s`, `q = e^{2 i omega}`.
    pub fn circle_terms(&self) -> Result<Vec<(trig::Cplx<T>, trig::Cplx<T>)>> {
        let FamilyTag::TrigCircle { alpha, omega, .. } = &self.tag else {
            return Err(Error::NoKnownWeight(self.tag.name().into()));
        };
        let n_pts = self
            .finite_points
            .ok_or_else(|| Error::NoKnownWeight("circle weights need beta = -N-1".into()))?;
        let n_cap = (n_pts - 1) as i64; // N
        let two = T::from_i64(2);
        let q_power = |k: T| trig::Cplx::from_angle(&(omega.clone() * two.clone() * k));
        let mut out = Vec::with_capacity(n_pts);
        let mut w = trig::Cplx::one();
        for s in 0..n_pts as i64 {
            let x = trig::Cplx::from_angle(&(omega.clone() * T::from_i64(2 * s - n_cap)))?;
            out.push((x, w.clone()));
            // w_{s+1}/w_s = q^{alpha+1} (1 - q^{s-N})/(1 - q^{s+1})
            let num = q_power(alpha.clone() + T::one())?
                .mul(&trig::Cplx::one().sub(&q_power(T::from_i64(s - n_cap))?));
            let den = trig::Cplx::one().sub(&q_power(T::from_i64(s + 1))?);
            w = w.mul(&num.div(&den)?);
        }
        Ok(out)
    }

    /// Interval endpoints for continuous supports (`None` = unbounded side).
    pub fn interval(&self) -> Option<(Option<T>, Option<T>)> {
        match &self.tag {
            FamilyTag::Jacobi { .. } => Some((Some(T::zero()), Some(T::one()))),
            FamilyTag::Laguerre { .. } => Some((Some(T::zero()), None)),
            FamilyTag::LittleMinusOneJacobi { .. } => {
                Some((Some(-T::one()), Some(T::one())))
            }
            _ => None,
        }
    }

    /// Continuous weight evaluated through f64, for tables and plots only.
    pub fn eval_continuous_f64(&self, x: f64) -> Option<f64> {
        match &self.tag {
            FamilyTag::Jacobi { alpha, beta } => {
                let (a, b) = (alpha.to_f64_lossy(), beta.to_f64_lossy());
                Some(x.powf(a) * (1.0 - x).powf(b))
            }
            FamilyTag::Laguerre { alpha } => {
                Some(x.powf(alpha.to_f64_lossy()) * (-x).exp())
            }
            FamilyTag::LittleMinusOneJacobi { alpha, beta } => {
                let (a, b) = (alpha.to_f64_lossy(), beta.to_f64_lossy());
                Some(x.abs().powf(a) * (1.0 + x) * (1.0 - x * x).powf((b - 1.0) / 2.0))
            }
            _ => None,
        }
    }
}

fn le_minus_one<T: Scalar>(v: &T) -> bool {
    *v <= -T::one() || v.tol_eq(&-T::one())
}

/// Weight data for the families whose orthogonality has an explicit support
/// and weight; `NoKnownWeight` otherwise.
pub fn weight_data<T: Scalar>(tag: &FamilyTag<T>) -> Result<WeightData<T>> {
    let one = T::one;
    match tag {
        FamilyTag::LittleQJacobi { a, b, q } => {
            if q.is_negative() || !(*q < one()) {
                return Err(Error::InvalidParams(
                    "the lattice x_s = q^s needs 0 < q < 1".into(),
                ));
            }
            // positive iff 0 < a < 1/q and b < 1/q
            let q_inv = one() / q.clone();
            let positive = a.is_positive() && *a < q_inv && *b < q_inv;
            Ok(WeightData {
                kind: SupportKind::DiscreteInfinite,
                positivity: if positive {
                    Positivity::Positive
                } else {
                    Positivity::NotPositive
                },
                finite_points: None,
                description: format!(
                    "x_s = q^s, w_s = (aq)^s (bq;q)_s/(q;q)_s with a = {a}, b = {b}, q = {q}"
                ),
                tag: tag.clone(),
            })
        }
        FamilyTag::QKrawtchouk { a, n, q } => {
            if q.is_negative() || !(*q < one()) {
                return Err(Error::InvalidParams(
                    "the lattice x_s = q^s needs 0 < q < 1".into(),
                ));
            }
            Ok(WeightData {
                kind: SupportKind::DiscreteFinite,
                positivity: if a.is_negative() {
                    Positivity::Positive
                } else {
                    Positivity::NotPositive
                },
                finite_points: Some(n + 1),
                description: format!(
                    "x_s = q^s, w_s = (aq)^s (q^-N;q)_s/(q;q)_s, s = 0..{n}, a = {a}, q = {q}"
                ),
                tag: tag.clone(),
            })
        }
        FamilyTag::NegQVariant(inner) => match &**inner {
            FamilyTag::LittleQJacobi { a, b, q } => {
                // -1 < q < 0: the lattice splits into two geometric series
                // accumulating at 0. Positive iff a < 0 and |a| < 1/|q|.
                let positive = a.is_negative() && a.abs() < one() / q.abs();
                Ok(WeightData {
                    kind: SupportKind::DiscreteInfinite,
                    positivity: if positive {
                        Positivity::Positive
                    } else {
                        Positivity::NotPositive
                    },
                    finite_points: None,
                    description: format!(
                        "x_s = q^s with -1 < q < 0, w_s = (aq)^s (bq;q)_s/(q;q)_s, a = {a}, b = {b}, q = {q}"
                    ),
                    tag: (**inner).clone(),
                })
            }
            _ => Err(Error::NoKnownWeight(inner.name().into())),
        },
        FamilyTag::Jacobi { alpha, beta } => Ok(WeightData {
            kind: SupportKind::ContinuousInterval,
            positivity: if le_minus_one(alpha) || le_minus_one(beta) {
                Positivity::NotPositive
            } else {
                Positivity::Positive
            },
            finite_points: None,
            description: format!("w(x) = x^alpha (1-x)^beta on [0, 1], alpha = {alpha}, beta = {beta}"),
            tag: tag.clone(),
        }),
        FamilyTag::Laguerre { alpha } => Ok(WeightData {
            kind: SupportKind::ContinuousInterval,
            positivity: if le_minus_one(alpha) {
                Positivity::NotPositive
            } else {
                Positivity::Positive
            },
            finite_points: None,
            description: format!("w(x) = x^alpha e^-x on [0, inf), alpha = {alpha}"),
            tag: tag.clone(),
        }),
        FamilyTag::LittleMinusOneJacobi { alpha, beta } => Ok(WeightData {
            kind: SupportKind::ContinuousInterval,
            positivity: if le_minus_one(alpha) || le_minus_one(beta) {
                Positivity::NotPositive
            } else {
                Positivity::Positive
            },
            finite_points: None,
            description: format!(
                "w(x) = |x|^alpha (1+x)(1-x^2)^((beta-1)/2) on [-1, 1], alpha = {alpha}, beta = {beta}"
            ),
            tag: tag.clone(),
        }),
        FamilyTag::TrigCircle { alpha, beta, omega } => {
            // weights exist for the finite case beta = -N-1
            let mut n_pts = None;
            for k in 1..=64i64 {
                if beta.tol_eq(&T::from_i64(-k - 1)) {
                    n_pts = Some((k + 1) as usize);
                    break;
                }
            }
            let n_pts = n_pts.ok_or_else(|| {
                Error::NoKnownWeight(
                    "trig-circle weights are available for beta = -N-1 only".into(),
                )
            })?;
            Ok(WeightData {
                kind: SupportKind::CircleVertices,
                positivity: Positivity::Complex,
                finite_points: Some(n_pts),
                description: format!(
                    "x_s = exp(i omega (2s - N)) on the unit circle, complex weights, alpha = {alpha}, omega = {omega}, N = {}",
                    n_pts - 1
                ),
                tag: tag.clone(),
            })
        }
        FamilyTag::Bessel { a } => Ok(WeightData {
            kind: SupportKind::ContinuousInterval,
            positivity: Positivity::NotPositive,
            finite_points: None,
            description: format!(
                "no positive real orthogonality measure exists (a = {a}); moments only"
            ),
            tag: tag.clone(),
        }),
        _ => Err(Error::NoKnownWeight(tag.name().into())),
    }
}

impl<T: Scalar> WeightData<T> {
    fn cap(&self, count: usize) -> usize {
        match self.finite_points {
            Some(n) => count.min(n),
            None => count,
        }
    }
}

/// Discrete orthogonality residual with its truncation tail bound.
#[derive(Clone, Debug)]
pub struct ResidualReport<T> {
    /// max over n != m <= nmax of |sum_s w_s P_n(x_s) P_m(x_s)| / (W sqrt(h_n h_m))
    pub residual: T,
    /// Geometric bound on the discarded tail of an infinite support,
    /// normalized the same way; `None` for finite supports.
    pub tail_bound: Option<T>,
}

/// Check discrete orthogonality of the family's eigenpolynomials against its
/// explicit weights. Infinite supports are truncated at `truncation` terms.
pub fn discrete_orthogonality_residual<T: Scalar>(
    tag: &FamilyTag<T>,
    polys: &[PolynomialCoeffs<T>],
    n_max: usize,
    truncation: usize,
) -> Result<ResidualReport<T>> {
    if polys.len() <= n_max {
        return Err(Error::InvalidParams(format!(
            "need polynomials of degrees 0..={n_max}"
        )));
    }
    let data = weight_data(tag)?;
    let rc = family_recurrence(tag, n_max + 2)?;
    match data.kind {
        SupportKind::DiscreteFinite | SupportKind::DiscreteInfinite => {
            let finite = data.kind == SupportKind::DiscreteFinite;
            let count = if finite {
                data.finite_points.expect("finite support has a size")
            } else {
                truncation
            };
            let terms = data.discrete_terms(count)?;
            real_residual(&terms, polys, n_max, &rc, if finite { None } else { Some(tag) })
        }
        SupportKind::CircleVertices => {
            let terms = data.circle_terms()?;
            circle_residual(&terms, polys, n_max, &rc)
        }
        SupportKind::ContinuousInterval => Err(Error::NoKnownWeight(format!(
            "{} has a continuous weight; discrete residuals do not apply",
            tag.name()
        ))),
    }
}

fn real_residual<T: Scalar>(
    terms: &[(T, T)],
    polys: &[PolynomialCoeffs<T>],
    n_max: usize,
    rc: &RecurrenceCoeffs<T>,
    tail_tag: Option<&FamilyTag<T>>,
) -> Result<ResidualReport<T>> {
    // values[n][s] = P_n(x_s)
    let values: Vec<Vec<T>> = (0..=n_max)
        .map(|n| terms.iter().map(|(x, _)| polys[n].eval(x)).collect())
        .collect();
    let total_mass = terms
        .iter()
        .fold(T::zero(), |acc, (_, w)| acc + w.clone());
    if total_mass.tol_zero() {
        return Err(Error::DegenerateFunctional(0));
    }
    let mut worst = T::zero();
    for n in 0..=n_max {
        for m in 0..n {
            let mut s_nm = T::zero();
            for (s, (_, w)) in terms.iter().enumerate() {
                s_nm = s_nm + w.clone() * values[n][s].clone() * values[m][s].clone();
            }
            if s_nm.is_zero() {
                continue; // exactly orthogonal; contributes 0
            }
            let h = (rc.norm(n) * rc.norm(m)).abs();
            let scale = h
                .sqrt_approx()
                .ok_or_else(|| Error::InvalidParams("negative norm product".into()))?;
            let r = (s_nm / total_mass.clone()).abs() / scale;
            if r > worst {
                worst = r;
            }
        }
    }

    let tail_bound = tail_tag.and_then(|t| tail_bound_little_q(t, terms, polys, n_max, rc));
    Ok(ResidualReport {
        residual: worst,
        tail_bound,
    })
}

/// Geometric tail bound for the truncated little q-Jacobi sum: beyond the
/// last kept term the weight ratio is at most
/// `|aq| (1 + |b| |q|^{S+1}) / (1 - |q|^{S+1})`, and `|P_n(x_s)| <=
/// sum_k |p_{n,k}|` on `|x| <= 1`.
fn tail_bound_little_q<T: Scalar>(
    tag: &FamilyTag<T>,
    terms: &[(T, T)],
    polys: &[PolynomialCoeffs<T>],
    n_max: usize,
    rc: &RecurrenceCoeffs<T>,
) -> Option<T> {
    let (a, b, q) = match tag {
        FamilyTag::LittleQJacobi { a, b, q } => (a, b, q),
        FamilyTag::NegQVariant(inner) => match &**inner {
            FamilyTag::LittleQJacobi { a, b, q } => (a, b, q),
            _ => return None,
        },
        _ => return None,
    };
    let s_cut = terms.len();
    let (_, w_last) = terms.last()?;
    let qs = q.abs().powi(s_cut as i32);
    let ratio = a.abs() * q.abs() * (T::one() + b.abs() * qs.clone())
        / (T::one() - qs);
    if !(ratio < T::one()) {
        return None; // truncation too short for a geometric bound
    }
    // first discarded weight <= |w_last| * ratio
    let tail_mass = w_last.abs() * ratio.clone() / (T::one() - ratio);
    let coeff_bound = |n: usize| -> T {
        polys[n]
            .coeffs()
            .iter()
            .fold(T::zero(), |acc, c| acc + c.abs())
    };
    let mut bound = T::zero();
    let total_mass = terms
        .iter()
        .fold(T::zero(), |acc, (_, w)| acc + w.clone())
        .abs();
    for n in 0..=n_max {
        for m in 0..n {
            let h = (rc.norm(n) * rc.norm(m)).abs();
            let scale = h.sqrt_approx()?;
            let v = coeff_bound(n) * coeff_bound(m) * tail_mass.clone()
                / (total_mass.clone() * scale);
            if v > bound {
                bound = v;
            }
        }
    }
    Some(bound)
}

fn circle_residual<T: Scalar>(
    terms: &[(trig::Cplx<T>, trig::Cplx<T>)],
    polys: &[PolynomialCoeffs<T>],
    n_max: usize,
    rc: &RecurrenceCoeffs<T>,
) -> Result<ResidualReport<T>> {
    let values: Vec<Vec<trig::Cplx<T>>> = (0..=n_max)
        .map(|n| {
            terms
                .iter()
                .map(|(x, _)| trig::eval_complex(&polys[n], x))
                .collect()
        })
        .collect();
    let mut total_mass = trig::Cplx::zero();
    for (_, w) in terms {
        total_mass = total_mass.add(w);
    }
    if total_mass.modulus_sq().tol_zero() {
        return Err(Error::DegenerateFunctional(0));
    }
    let mut worst = T::zero();
    for n in 0..=n_max {
        for m in 0..n {
            let mut s_nm = trig::Cplx::zero();
            for (s, (_, w)) in terms.iter().enumerate() {
                s_nm = s_nm.add(&w.mul(&values[n][s]).mul(&values[m][s]));
            }
            if s_nm.is_zero() {
                continue;
            }
            let h = (rc.norm(n) * rc.norm(m)).abs();
            let scale = h
                .sqrt_approx()
                .ok_or_else(|| Error::InvalidParams("negative norm product".into()))?;
            let r = s_nm.div(&total_mass)?.modulus() / scale;
            if r > worst {
                worst = r;
            }
        }
    }
    Ok(ResidualReport {
        residual: worst,
        tail_bound: None,
    })
}

/// Positivity scan of the recurrence coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityReport {
    /// Every computed `u_n` is strictly positive (a statement about the
    /// computed prefix only, never a global claim).
    PrefixPositive,
    /// First index with `u_n <= 0`.
    SignChangeAt(usize),
    /// Entries were not comparable real numbers.
    ComplexEntries,
}

pub fn positivity_report<T: Scalar>(rc: &RecurrenceCoeffs<T>) -> PositivityReport {
    for n in 1..=rc.u_len() {
        let u = rc.u(n);
        match u.partial_cmp(&T::zero()) {
            Some(std::cmp::Ordering::Greater) => continue,
            Some(_) => return PositivityReport::SignChangeAt(n),
            None => return PositivityReport::ComplexEntries,
        }
    }
    PositivityReport::PrefixPositive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenpoly::eigenpolynomial;
    use crate::families::family_spectrum;
    use crate::{Normalization, Rat};

    fn i(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn q_krawtchouk_weights_positive_and_match_moments() {
        let tag = FamilyTag::QKrawtchouk {
            a: i(-1),
            n: 4,
            q: r(1, 2),
        };
        let data = weight_data(&tag).unwrap();
        assert_eq!(data.kind, SupportKind::DiscreteFinite);
        assert_eq!(data.positivity, Positivity::Positive);
        let terms = data.discrete_terms(10).unwrap();
        assert_eq!(terms.len(), 5);
        let weights: Vec<Rat> = terms.iter().map(|(_, w)| w.clone()).collect();
        assert_eq!(weights, vec![i(1), i(15), i(70), i(120), i(64)]);
        // first weighted moment: sum w x / sum w = 45/270 = 1/6 = c_1
        let mass: Rat = weights.iter().cloned().sum();
        let m1: Rat = terms.iter().map(|(x, w)| x.clone() * w.clone()).sum();
        assert_eq!(m1 / mass, r(1, 6));
        let spec = family_spectrum(&tag, 4).unwrap();
        let c1 = -(spec.mu(1).clone()) / spec.lambda(1).clone();
        assert_eq!(c1, r(1, 6));
    }

    #[test]
    fn q_krawtchouk_discrete_orthogonality_is_exact() {
        let tag = FamilyTag::QKrawtchouk {
            a: i(-1),
            n: 4,
            q: r(1, 2),
        };
        let spec = family_spectrum(&tag, 6).unwrap();
        let polys: Vec<_> = (0..=4)
            .map(|n| eigenpolynomial(&spec, n, Normalization::Monic).unwrap())
            .collect();
        let report = discrete_orthogonality_residual(&tag, &polys, 4, 0).unwrap();
        assert_eq!(report.residual, i(0));
        assert!(report.tail_bound.is_none());
    }

    #[test]
    fn little_q_jacobi_truncated_residual_is_tiny() {
        let tag = FamilyTag::LittleQJacobi {
            a: r(1, 3),
            b: r(1, 4),
            q: r(1, 2),
        };
        let spec = family_spectrum(&tag, 8).unwrap();
        let polys: Vec<_> = (0..=6)
            .map(|n| eigenpolynomial(&spec, n, Normalization::Monic).unwrap())
            .collect();
        let report = discrete_orthogonality_residual(&tag, &polys, 6, 200).unwrap();
        // exact rational arithmetic: the only deviation is the truncated tail
        let tiny = crate::Scalar::powi(&r(1, 10), 25);
        assert!(report.residual < tiny, "residual = {}", report.residual);
        let tail = report.tail_bound.expect("infinite support has a tail bound");
        assert!(tail < tiny, "tail = {tail}");
    }

    #[test]
    fn positivity_reports() {
        let jac = family_recurrence(
            &FamilyTag::Jacobi {
                alpha: i(1),
                beta: i(2),
            },
            10,
        )
        .unwrap();
        assert_eq!(positivity_report(&jac), PositivityReport::PrefixPositive);
        let bes = family_recurrence(&FamilyTag::Bessel { a: i(5) }, 10).unwrap();
        assert_eq!(positivity_report(&bes), PositivityReport::SignChangeAt(1));
        let rc = RecurrenceCoeffs::new(vec![i(0), i(0)], vec![r(1, 12), r(1, 15)]);
        assert_eq!(positivity_report(&rc), PositivityReport::PrefixPositive);
    }

    #[test]
    fn no_known_weight_families() {
        for tag in [
            FamilyTag::AltQCharlier {
                a: r(1, 3),
                q: r(1, 2),
            },
            FamilyTag::StieltjesWigert { q: r(1, 2) },
            FamilyTag::QLaguerre {
                a: i(3),
                q: r(1, 2),
            },
        ] {
            assert!(matches!(
                weight_data(&tag),
                Err(Error::NoKnownWeight(_))
            ));
        }
    }

    #[test]
    fn bessel_weight_is_flagged_not_positive() {
        let data = weight_data(&FamilyTag::Bessel { a: i(5) }).unwrap();
        assert_eq!(data.positivity, Positivity::NotPositive);
    }
}
