//! Formal derivative operators and the umbral descent property.
//!
//! A formal derivative is determined by a sequence `d_n` with `d_0 = 0`,
//! `d_n != 0` otherwise, acting as `D x^n = d_n x^{n-1}`. A family of monic
//! orthogonal `P_n` is *umbral classical* for `D` when
//! `P~_n = D P_{n+1} / d_{n+1}` is again orthogonal; the descended family is
//! then the eigenfamily of a two-diagonal operator whose spectrum is
//! recovered here by a triangular fit and canonicalized through the
//! classifier.

use crate::eigenpoly::eigenpolynomial;
use crate::families::{classify_report, family_spectrum, FamilyTag};
use crate::orthogonality::recurrence_from_polys;
use crate::poly::{Normalization, PolynomialCoeffs};
use crate::scalar::Scalar;
use crate::spectrum::SpectrumPair;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum DKind<T> {
    /// `d_n = n` (ordinary derivative).
    Classical,
    /// `d_n = (q^n - 1)/(q - 1)`.
    QDerivative(T),
    /// `d_n = n + nu (1 - (-1)^n)` (Dunkl operator `d/dx + nu/x (1 - R)`).
    Dunkl(T),
}

/// Tabulated formal-derivative sequence.
#[derive(Clone, Debug)]
pub struct DSequence<T> {
    d: Vec<T>,
    kind: DKind<T>,
}

impl<T: Scalar> DSequence<T> {
    pub fn new(kind: DKind<T>, n_max: usize) -> Result<Self> {
        if let DKind::QDerivative(q) = &kind {
            if q.is_zero() || q.tol_eq(&T::one()) || q.tol_eq(&-T::one()) {
                return Err(Error::InvalidParams("q must avoid 0 and +-1".into()));
            }
        }
        let d: Vec<T> = (0..=n_max)
            .map(|n| match &kind {
                DKind::Classical => T::from_i64(n as i64),
                DKind::QDerivative(q) => {
                    if n == 0 {
                        T::zero()
                    } else {
                        (q.powi(n as i32) - T::one()) / (q.clone() - T::one())
                    }
                }
                DKind::Dunkl(nu) => {
                    let parity = if n % 2 == 0 { T::zero() } else { T::from_i64(2) };
                    T::from_i64(n as i64) + nu.clone() * parity
                }
            })
            .collect();
        for (n, v) in d.iter().enumerate().skip(1) {
            if v.tol_zero() {
                return Err(Error::InvalidParams(format!(
                    "formal derivative needs d_n != 0; d_{n} vanishes"
                )));
            }
        }
        Ok(DSequence { d, kind })
    }

    pub fn classical(n_max: usize) -> Self {
        Self::new(DKind::Classical, n_max).expect("d_n = n never vanishes")
    }

    pub fn q_derivative(q: T, n_max: usize) -> Result<Self> {
        Self::new(DKind::QDerivative(q), n_max)
    }

    pub fn dunkl(nu: T, n_max: usize) -> Result<Self> {
        Self::new(DKind::Dunkl(nu), n_max)
    }

    pub fn kind(&self) -> &DKind<T> {
        &self.kind
    }

    pub fn d(&self, n: usize) -> &T {
        &self.d[n]
    }

    pub fn max_index(&self) -> usize {
        self.d.len() - 1
    }
}

/// `D p` with coefficient rule `out_{n-1} = d_n p_n`.
pub fn formal_derivative<T: Scalar>(
    ds: &DSequence<T>,
    p: &PolynomialCoeffs<T>,
) -> Result<PolynomialCoeffs<T>> {
    let deg = p.degree().unwrap_or(0);
    if deg > ds.max_index() {
        return Err(Error::DegreeOverflow {
            degree: deg,
            max: ds.max_index(),
        });
    }
    if deg == 0 {
        return Ok(PolynomialCoeffs::zero());
    }
    let coeffs = (1..=deg)
        .map(|n| ds.d[n].clone() * p.coeff(n))
        .collect();
    Ok(PolynomialCoeffs::general(coeffs))
}

/// The matching derivative kind for a family, following the Omega classes:
/// ordinary derivative at `Omega = 2`, q-derivative at `|Omega| > 2` with the
/// family's own base, Dunkl with `nu = alpha/2` at `Omega = -2`.
pub fn default_descent_sequence<T: Scalar>(
    spec: &SpectrumPair<T>,
    n_max: usize,
) -> Result<DSequence<T>> {
    let report = classify_report(spec)?;
    match &report.tag {
        FamilyTag::Jacobi { .. } | FamilyTag::Laguerre { .. } | FamilyTag::Bessel { .. } => {
            Ok(DSequence::classical(n_max))
        }
        FamilyTag::LittleMinusOneJacobi { alpha, .. } => {
            DSequence::dunkl(alpha.clone() / T::from_i64(2), n_max)
        }
        FamilyTag::TrigCircle { .. } => Err(Error::InvalidParams(
            "circle families need a complex formal derivative, which is out of scope".into(),
        )),
        tag => {
            let q = q_of_tag(tag).ok_or_else(|| {
                Error::InvalidParams(format!("no default derivative for {}", tag.name()))
            })?;
            DSequence::q_derivative(q, n_max)
        }
    }
}

fn q_of_tag<T: Scalar>(tag: &FamilyTag<T>) -> Option<T> {
    match tag {
        FamilyTag::LittleQJacobi { q, .. }
        | FamilyTag::QKrawtchouk { q, .. }
        | FamilyTag::LittleQLaguerre { q, .. }
        | FamilyTag::QLaguerre { q, .. }
        | FamilyTag::AltQCharlier { q, .. }
        | FamilyTag::StieltjesWigert { q } => Some(q.clone()),
        FamilyTag::NegQVariant(inner) => q_of_tag(inner),
        _ => None,
    }
}

/// Result of a verified umbral descent.
#[derive(Clone, Debug)]
pub struct UmbralDescent<T> {
    /// Descended spectrum in its family's canonical normalization.
    pub spectrum: SpectrumPair<T>,
    /// The descended monic polynomials `P~_0..P~_N`.
    pub polys: Vec<PolynomialCoeffs<T>>,
    /// Classification of the descended family.
    pub tag: FamilyTag<T>,
    /// Shared `Omega` of the original and descended spectra.
    pub omega: T,
}

/// Compute `P~_n = D P_{n+1} / d_{n+1}` for `n = 0..=n_max`, verify the
/// three-term recurrence, fit the descended two-diagonal spectrum, and
/// return it in canonical form. Fails with `NotUmbralClassical` when the
/// descended polynomials are not orthogonal or no two-diagonal eigenoperator
/// reproduces them.
pub fn umbral_descend<T: Scalar>(
    spec: &SpectrumPair<T>,
    ds: &DSequence<T>,
    n_max: usize,
) -> Result<UmbralDescent<T>> {
    if n_max < 4 {
        return Err(Error::InvalidParams(
            "umbral descent needs n_max >= 4 to classify the result".into(),
        ));
    }
    if n_max + 1 > spec.max_degree() || n_max + 1 > ds.max_index() {
        return Err(Error::DegreeOverflow {
            degree: n_max + 1,
            max: spec.max_degree().min(ds.max_index()),
        });
    }
    let original_omega = spec.structure_constants()?.omega;

    // P~_n = D P_{n+1} / d_{n+1}; monic of degree n by construction.
    let mut ptilde = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let p = eigenpolynomial(spec, n + 1, Normalization::Monic)?;
        let dp = formal_derivative(ds, &p)?;
        let scaled = dp.scale(&(T::one() / ds.d[n + 1].clone()));
        debug_assert_eq!(scaled.degree(), Some(n));
        debug_assert!(scaled.leading().is_one());
        ptilde.push(scaled);
    }

    // Orthogonality of the descended set.
    recurrence_from_polys(&ptilde).map_err(|e| match e {
        Error::NotOrthogonal(deg) => Error::NotUmbralClassical(format!(
            "descended polynomials fail the three-term recurrence at degree {deg}"
        )),
        other => other,
    })?;

    // Triangular fit of the descended spectrum, normalized by lambda~_1 = 1.
    // Row k of the eigen-identity on P~_n reads
    //   lambda~_k p_{n,k} + mu~_{k+1} p_{n,k+1} = lambda~_n p_{n,k}.
    let mut lambda = vec![T::zero(), T::one()];
    let mut mu = vec![T::zero(), ptilde[1].coeff(0)];
    for n in 2..=n_max {
        let p0 = ptilde[n].coeff(0);
        if p0.tol_zero() {
            return Err(Error::NotUmbralClassical(format!(
                "P~_{n}(0) = 0; the descended eigenoperator fit degenerates"
            )));
        }
        let lam_n = mu[1].clone() * ptilde[n].coeff(1) / p0;
        let mu_n = (lam_n.clone() - lambda[n - 1].clone()) * ptilde[n].coeff(n - 1);
        lambda.push(lam_n);
        mu.push(mu_n);
    }
    let fitted = SpectrumPair::new(lambda, mu)?;

    // Interior rows are consistency constraints.
    for n in 2..=n_max {
        for k in 1..n - 1 {
            let residual = fitted.lambda(k).clone() * ptilde[n].coeff(k)
                + fitted.mu(k + 1).clone() * ptilde[n].coeff(k + 1)
                - fitted.lambda(n).clone() * ptilde[n].coeff(k);
            if !residual.tol_zero() {
                return Err(Error::NotUmbralClassical(format!(
                    "no two-diagonal operator reproduces the descended family \
                     (residual {residual} in row {k} of degree {n})"
                )));
            }
        }
    }

    // Classify (this reruns admissibility on the fit) and canonicalize.
    let report = classify_report(&fitted).map_err(|e| match e {
        Error::NotAdmissible(v) => Error::NotUmbralClassical(format!(
            "descended spectrum is not admissible: {} violations",
            v.len()
        )),
        other => other,
    })?;
    if let FamilyTag::Degenerate { reason } = &report.tag {
        return Err(Error::NotUmbralClassical(format!(
            "descended spectrum is degenerate: {reason}"
        )));
    }
    let omega = report
        .omega
        .clone()
        .expect("classification of a non-degenerate tag carries omega");
    if !omega.tol_eq(&original_omega) {
        return Err(Error::NotUmbralClassical(format!(
            "descent changed Omega from {original_omega} to {omega}"
        )));
    }

    let canonical = family_spectrum(&report.tag, n_max)?;
    // The fit determines the operator up to one overall constant; the
    // canonical spectrum must be that rescaling.
    let c = canonical.lambda(1).clone() / fitted.lambda(1).clone();
    for n in 0..=n_max {
        let l_ok = canonical
            .lambda(n)
            .tol_eq(&(fitted.lambda(n).clone() * c.clone()));
        let m_ok = canonical.mu(n).tol_eq(&(fitted.mu(n).clone() * c.clone()));
        if !l_ok || !m_ok {
            return Err(Error::NotUmbralClassical(format!(
                "fitted spectrum is not proportional to the canonical {} spectrum at n = {n}",
                report.tag.name()
            )));
        }
    }

    Ok(UmbralDescent {
        spectrum: canonical,
        polys: ptilde,
        tag: report.tag,
        omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn i(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn formal_derivative_examples() {
        let x3 = PolynomialCoeffs::<Rat>::monomial(3);
        // classical: d/dx x^3 = 3 x^2
        let ds = DSequence::classical(6);
        assert_eq!(
            formal_derivative(&ds, &x3).unwrap().coeffs(),
            &[i(0), i(0), i(3)]
        );
        // Dunkl nu = 1/2: d_3 = 3 + 1 = 4
        let ds = DSequence::dunkl(r(1, 2), 6).unwrap();
        assert_eq!(
            formal_derivative(&ds, &x3).unwrap().coeffs(),
            &[i(0), i(0), i(4)]
        );
        // q-derivative q = 1/2: d_2 = [2] = 3/2
        let ds = DSequence::q_derivative(r(1, 2), 6).unwrap();
        let x2 = PolynomialCoeffs::<Rat>::monomial(2);
        assert_eq!(
            formal_derivative(&ds, &x2).unwrap().coeffs(),
            &[i(0), r(3, 2)]
        );
    }

    #[test]
    fn d_sequence_validation() {
        // Dunkl with nu = -1/2 kills d_1 = 1 + 2 nu
        assert!(DSequence::dunkl(r(-1, 2), 4).is_err());
        assert!(DSequence::<Rat>::q_derivative(i(1), 4).is_err());
    }

    #[test]
    fn jacobi_descends_to_shifted_jacobi() {
        let tag = FamilyTag::Jacobi {
            alpha: i(1),
            beta: i(1),
        };
        let spec = family_spectrum(&tag, 12).unwrap();
        let ds = DSequence::classical(12);
        let out = umbral_descend(&spec, &ds, 10).unwrap();
        assert_eq!(
            out.tag,
            FamilyTag::Jacobi {
                alpha: i(2),
                beta: i(2)
            }
        );
        assert_eq!(out.omega, i(2));
    }

    #[test]
    fn little_minus_one_descends_by_dunkl() {
        let tag = FamilyTag::LittleMinusOneJacobi {
            alpha: i(1),
            beta: i(1),
        };
        let spec = family_spectrum(&tag, 12).unwrap();
        // nu = alpha/2 = 1/2
        let ds = DSequence::dunkl(r(1, 2), 12).unwrap();
        let out = umbral_descend(&spec, &ds, 10).unwrap();
        assert_eq!(
            out.tag,
            FamilyTag::LittleMinusOneJacobi {
                alpha: i(1),
                beta: i(3)
            }
        );
        // lambda~_n = (-1)^{n+1}(2n + alpha + beta + 3) + alpha + beta + 3
        for n in 0..=10i64 {
            let sign = if n % 2 == 0 { i(-1) } else { i(1) };
            let expect = sign * i(2 * n + 5) + i(5);
            assert_eq!(out.spectrum.lambda(n as usize), &expect, "n = {n}");
        }
        assert_eq!(out.omega, i(-2));
    }

    #[test]
    fn mismatched_derivative_is_rejected() {
        let tag = FamilyTag::Jacobi {
            alpha: i(1),
            beta: i(1),
        };
        let spec = family_spectrum(&tag, 12).unwrap();
        let ds = DSequence::dunkl(i(1), 12).unwrap();
        let err = umbral_descend(&spec, &ds, 10).unwrap_err();
        assert!(
            matches!(err, Error::NotUmbralClassical(_)),
            "unexpected: {err}"
        );
    }

    #[test]
    fn default_sequences_follow_omega_classes() {
        let spec = family_spectrum(
            &FamilyTag::Jacobi {
                alpha: i(1),
                beta: i(2),
            },
            8,
        )
        .unwrap();
        assert!(matches!(
            default_descent_sequence(&spec, 8).unwrap().kind(),
            DKind::Classical
        ));
        let spec = family_spectrum(
            &FamilyTag::LittleMinusOneJacobi {
                alpha: i(1),
                beta: i(1),
            },
            8,
        )
        .unwrap();
        match default_descent_sequence(&spec, 8).unwrap().kind() {
            DKind::Dunkl(nu) => assert_eq!(nu, &r(1, 2)),
            other => panic!("expected Dunkl, got {other:?}"),
        }
        let spec = family_spectrum(&FamilyTag::StieltjesWigert { q: r(1, 2) }, 8).unwrap();
        match default_descent_sequence(&spec, 8).unwrap().kind() {
            DKind::QDerivative(q) => assert_eq!(q, &r(1, 2)),
            other => panic!("expected q-derivative, got {other:?}"),
        }
    }

    #[test]
    fn q_family_descent_preserves_omega() {
        let tag = FamilyTag::LittleQJacobi {
            a: r(1, 3),
            b: r(1, 4),
            q: r(1, 2),
        };
        let spec = family_spectrum(&tag, 12).unwrap();
        let ds = DSequence::q_derivative(r(1, 2), 12).unwrap();
        let out = umbral_descend(&spec, &ds, 10).unwrap();
        assert_eq!(out.omega, r(5, 2));
        // descended little q-Jacobi shifts both parameters by q
        assert_eq!(
            out.tag,
            FamilyTag::LittleQJacobi {
                a: r(1, 6),
                b: r(1, 8),
                q: r(1, 2)
            }
        );
    }
}
