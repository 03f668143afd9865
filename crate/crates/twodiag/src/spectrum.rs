//! The abstract two-diagonal operator and its admissibility theory.
//!
//! A spectrum pair `(lambda_n, mu_n)` defines the operator
//! `L x^n = lambda_n x^n + mu_n x^{n-1}` with the normalization
//! `lambda_0 = mu_0 = 0`. The pair is *admissible* when the eigenpolynomials
//! of `L` are orthogonal with respect to a nondegenerate moment functional,
//! which happens exactly when both sequences satisfy the linear recurrences
//!
//! ```text
//! lambda_{n+1} + lambda_{n-1} - Omega lambda_n + B2 = 0
//! mu_{n+1}     + mu_{n-1}     - Omega mu_n     + C2 = 0
//! ```
//!
//! with shared `Omega`, subject to nondegeneracy (distinct entries, no affine
//! relation between `mu` and `lambda`).

use crate::poly::PolynomialCoeffs;
use crate::scalar::Scalar;
use crate::{Error, Result, Rule, Violation};

/// Tabulated spectrum `(lambda_n, mu_n)`, indices `0..=N`.
///
/// Construction enforces only `lambda_0 = mu_0 = 0`; distinctness and the
/// recurrence structure are decided by [`SpectrumPair::check_admissible`] so
/// that defective inputs can be diagnosed rather than rejected blindly.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPair<T> {
    lambda: Vec<T>,
    mu: Vec<T>,
    family_hint: Option<String>,
}

/// Constants of the quadratic and linear spectrum recurrences.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<T> {
    pub omega: T,
    pub b2: T,
    pub c2: T,
    pub b3: Option<T>,
    pub c3: Option<T>,
}

/// Outcome of the admissibility check.
#[derive(Clone, Debug)]
pub struct AdmissibilityReport<T> {
    pub admissible: bool,
    pub violations: Vec<Violation>,
    /// Present iff admissible.
    pub structure: Option<StructureConstants<T>>,
}

impl<T: Scalar> SpectrumPair<T> {
    /// Build from tabulated sequences; both must start at 0.
    pub fn new(lambda: Vec<T>, mu: Vec<T>) -> Result<Self> {
        if lambda.len() != mu.len() || lambda.is_empty() {
            return Err(Error::Parse(
                "lambda and mu must be nonempty and of equal length".into(),
            ));
        }
        if !lambda[0].tol_zero() || !mu[0].tol_zero() {
            return Err(Error::Parse(
                "normalization requires lambda_0 = mu_0 = 0".into(),
            ));
        }
        Ok(SpectrumPair {
            lambda,
            mu,
            family_hint: None,
        })
    }

    /// Tabulate from closed forms, n = 0..=N. The n = 0 values must be zero.
    pub fn tabulate(
        n_max: usize,
        lambda: impl Fn(usize) -> T,
        mu: impl Fn(usize) -> T,
    ) -> Result<Self> {
        let l: Vec<T> = (0..=n_max).map(&lambda).collect();
        let m: Vec<T> = (0..=n_max).map(&mu).collect();
        Self::new(l, m)
    }

    pub fn with_hint(mut self, hint: impl Into<String>) -> Self {
        self.family_hint = Some(hint.into());
        self
    }

    pub fn family_hint(&self) -> Option<&str> {
        self.family_hint.as_deref()
    }

    /// Largest tabulated degree N.
    pub fn max_degree(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn lambda(&self, n: usize) -> &T {
        &self.lambda[n]
    }

    pub fn mu(&self, n: usize) -> &T {
        &self.mu[n]
    }

    pub fn lambdas(&self) -> &[T] {
        &self.lambda
    }

    pub fn mus(&self) -> &[T] {
        &self.mu
    }

    /// Independent rescaling `lambda -> k1 lambda`, `mu -> k2 mu`.
    pub fn scaled(&self, k1: &T, k2: &T) -> Self {
        SpectrumPair {
            lambda: self.lambda.iter().map(|x| x.clone() * k1.clone()).collect(),
            mu: self.mu.iter().map(|x| x.clone() * k2.clone()).collect(),
            family_hint: self.family_hint.clone(),
        }
    }

    /// Truncate to a smaller degree budget.
    pub fn truncated(&self, n_max: usize) -> Self {
        assert!(n_max < self.lambda.len());
        SpectrumPair {
            lambda: self.lambda[..=n_max].to_vec(),
            mu: self.mu[..=n_max].to_vec(),
            family_hint: self.family_hint.clone(),
        }
    }

    /// Apply `L` to a polynomial: `L x^n = lambda_n x^n + mu_n x^{n-1}`.
    pub fn apply_abstract(&self, p: &PolynomialCoeffs<T>) -> Result<PolynomialCoeffs<T>> {
        let deg = p.degree().unwrap_or(0);
        if deg > self.max_degree() {
            return Err(Error::DegreeOverflow {
                degree: deg,
                max: self.max_degree(),
            });
        }
        let mut out = vec![T::zero(); deg + 1];
        for n in 0..=deg {
            let a = p.coeff(n);
            if a.is_zero() {
                continue;
            }
            out[n] = out[n].clone() + self.lambda[n].clone() * a.clone();
            if n >= 1 {
                out[n - 1] = out[n - 1].clone() + self.mu[n].clone() * a;
            }
        }
        Ok(PolynomialCoeffs::general(out))
    }

    /// Constants of the recurrences, from the first three entries:
    /// `Omega = -1 - lambda_3/(lambda_1 - lambda_2)` and the printed closed
    /// forms for `B2, B3` (and their mu analogues `C2, C3`).
    pub fn structure_constants(&self) -> Result<StructureConstants<T>> {
        if self.max_degree() < 3 {
            return Err(Error::DegenerateSeed(
                "structure constants need entries up to index 3".into(),
            ));
        }
        let (l1, l2, l3) = (
            self.lambda[1].clone(),
            self.lambda[2].clone(),
            self.lambda[3].clone(),
        );
        if !l1.tol_distinct(&l2) {
            return Err(Error::DegenerateSeed("lambda_1 = lambda_2".into()));
        }
        let dl = l2.clone() - l1.clone();
        let omega = -T::one() + l3.clone() / dl.clone();
        let b2 = (l1.clone() * l1.clone() - l2.clone() * l2.clone() + l1.clone() * l3.clone())
            / dl.clone();
        let b3 = l1.clone() * l2.clone() - l1.clone() * l1.clone() * l3.clone() / dl.clone();

        let (m1, m2, m3) = (
            self.mu[1].clone(),
            self.mu[2].clone(),
            self.mu[3].clone(),
        );
        if !m1.tol_distinct(&m2) {
            return Err(Error::DegenerateSeed("mu_1 = mu_2".into()));
        }
        let dm = m2.clone() - m1.clone();
        let c2 = (m1.clone() * m1.clone() - m2.clone() * m2.clone() + m1.clone() * m3.clone())
            / dm.clone();
        let c3 = m1.clone() * m2.clone() - m1.clone() * m1.clone() * m3 / dm;

        Ok(StructureConstants {
            omega,
            b2,
            c2,
            b3: Some(b3),
            c3: Some(c3),
        })
    }

    /// Full admissibility check; violations are reported, never thrown.
    ///
    /// Requires N >= 4 (contract; the structure constants need index 3 and
    /// the recurrences need at least one non-seed point to say anything).
    pub fn check_admissible(&self) -> AdmissibilityReport<T> {
        let n_max = self.max_degree();
        assert!(n_max >= 4, "check_admissible needs N >= 4, got {n_max}");
        let mut violations = Vec::new();

        // (a) lambda pairwise distinct.
        for n in 1..=n_max {
            for m in 0..n {
                if !self.lambda[n].tol_distinct(&self.lambda[m]) {
                    violations.push(Violation {
                        rule: Rule::LambdaDistinct,
                        indices: vec![n, m],
                        detail: format!("lambda_{n} = lambda_{m} = {}", self.lambda[n]),
                    });
                }
            }
        }
        // (b) mu pairwise distinct (mu_0 = 0 included, so mu_n != 0 for n >= 1).
        for n in 1..=n_max {
            for m in 0..n {
                if !self.mu[n].tol_distinct(&self.mu[m]) {
                    violations.push(Violation {
                        rule: Rule::MuDistinct,
                        indices: vec![n, m],
                        detail: format!("mu_{n} = mu_{m} = {}", self.mu[n]),
                    });
                }
            }
        }

        // (c) linear recurrences with a single (Omega, B2, C2).
        let structure = self.structure_constants().ok();
        if let Some(sc) = &structure {
            for n in 1..n_max {
                let r = self.lambda[n + 1].clone() + self.lambda[n - 1].clone()
                    - sc.omega.clone() * self.lambda[n].clone()
                    + sc.b2.clone();
                if !tol_zero_scaled(&r, &[&self.lambda[n + 1], &self.lambda[n - 1], &sc.b2]) {
                    violations.push(Violation {
                        rule: Rule::LambdaRecurrence,
                        indices: vec![n],
                        detail: format!("residual {r} at n = {n}"),
                    });
                }
                let s = self.mu[n + 1].clone() + self.mu[n - 1].clone()
                    - sc.omega.clone() * self.mu[n].clone()
                    + sc.c2.clone();
                if !tol_zero_scaled(&s, &[&self.mu[n + 1], &self.mu[n - 1], &sc.c2]) {
                    violations.push(Violation {
                        rule: Rule::MuRecurrence,
                        indices: vec![n],
                        detail: format!("residual {s} at n = {n}"),
                    });
                }
            }
        }

        // (d) affine relation mu_n = alpha lambda_n + beta over all n = 1..N,
        // fitted through n = 1, 2 and tested on the rest.
        if self.lambda[1].tol_distinct(&self.lambda[2]) && n_max >= 3 {
            let alpha = (self.mu[2].clone() - self.mu[1].clone())
                / (self.lambda[2].clone() - self.lambda[1].clone());
            let beta = self.mu[1].clone() - alpha.clone() * self.lambda[1].clone();
            let all_fit = (3..=n_max).all(|n| {
                let predicted = alpha.clone() * self.lambda[n].clone() + beta.clone();
                self.mu[n].tol_eq(&predicted)
            });
            if all_fit {
                violations.push(Violation {
                    rule: Rule::NoAffineRelation,
                    indices: vec![],
                    detail: format!("mu_n = ({alpha}) lambda_n + ({beta}) for all n = 1..{n_max}"),
                });
            }
        }

        // (e) cross-ratio (lambda_n - lambda_m)/(mu_n - mu_m) depends on n+m only.
        for s in 1..=(2 * n_max - 1) {
            let mut reference: Option<(T, usize, usize)> = None;
            let lo = if s > n_max { s - n_max } else { 0 };
            for m in lo..(s + 1) / 2 {
                let n = s - m;
                if n > n_max {
                    continue;
                }
                let dmu = self.mu[n].clone() - self.mu[m].clone();
                if dmu.tol_zero() {
                    continue; // reported under rule (b)
                }
                let g = (self.lambda[n].clone() - self.lambda[m].clone()) / dmu;
                match &reference {
                    None => reference = Some((g, n, m)),
                    Some((g0, n0, m0)) => {
                        if !g.tol_eq(g0) {
                            violations.push(Violation {
                                rule: Rule::CrossRatio,
                                indices: vec![n, m, *n0, *m0],
                                detail: format!(
                                    "g({n},{m}) = {g} but g({n0},{m0}) = {g0} for n+m = {s}"
                                ),
                            });
                        }
                    }
                }
            }
        }

        let admissible = violations.is_empty();
        AdmissibilityReport {
            admissible,
            violations,
            structure: if admissible { structure } else { None },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("N".into(), serde_json::json!(self.max_degree()));
        obj.insert(
            "lambda".into(),
            serde_json::Value::Array(self.lambda.iter().map(|x| x.to_json()).collect()),
        );
        obj.insert(
            "mu".into(),
            serde_json::Value::Array(self.mu.iter().map(|x| x.to_json()).collect()),
        );
        if let Some(h) = &self.family_hint {
            obj.insert("family_hint".into(), serde_json::json!(h));
        }
        serde_json::Value::Object(obj)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let grab = |key: &str| -> Result<Vec<T>> {
            v.get(key)
                .and_then(|x| x.as_array())
                .ok_or_else(|| Error::Parse(format!("missing array field {key:?}")))?
                .iter()
                .map(T::from_json)
                .collect()
        };
        let lambda = grab("lambda")?;
        let mu = grab("mu")?;
        if let Some(n) = v.get("N").and_then(|x| x.as_u64()) {
            if lambda.len() != (n as usize) + 1 {
                return Err(Error::Parse(format!(
                    "N = {n} but lambda has {} entries",
                    lambda.len()
                )));
            }
        }
        let mut spec = Self::new(lambda, mu)?;
        if let Some(h) = v.get("family_hint").and_then(|x| x.as_str()) {
            spec = spec.with_hint(h);
        }
        Ok(spec)
    }
}

/// Zero test for a residual, scaled by the magnitudes that formed it.
fn tol_zero_scaled<T: Scalar>(r: &T, terms: &[&T]) -> bool {
    if T::EXACT {
        return r.is_zero();
    }
    let mut scale = T::one();
    for t in terms {
        let a = t.abs();
        if a > scale {
            scale = a;
        }
    }
    r.abs() <= T::tolerance() * scale
}

/// Extend a five-parameter seed `(lambda_1, mu_1, lambda_2, mu_2, lambda_3)`
/// to a full spectrum of degree `n_max`.
///
/// `mu_3` is forced to `lambda_3 (mu_2 - mu_1)/(lambda_2 - lambda_1)` and the
/// remaining entries follow the linear recurrences; the result is the unique
/// admissible continuation of the seed when one exists.
pub fn extend_from_seed<T: Scalar>(
    l1: T,
    m1: T,
    l2: T,
    m2: T,
    l3: T,
    n_max: usize,
) -> Result<SpectrumPair<T>> {
    if n_max < 3 {
        return Err(Error::InvalidParams("n_max must be at least 3".into()));
    }
    for (name, v) in [("lambda_1", &l1), ("lambda_2", &l2), ("lambda_3", &l3)] {
        if v.tol_zero() {
            return Err(Error::DegenerateSeed(format!("{name} must be nonzero")));
        }
    }
    if !l1.tol_distinct(&l2) || !l1.tol_distinct(&l3) || !l2.tol_distinct(&l3) {
        return Err(Error::DegenerateSeed(
            "lambda_1, lambda_2, lambda_3 must be pairwise distinct".into(),
        ));
    }
    if !m1.tol_distinct(&m2) {
        return Err(Error::DegenerateSeed("mu_1 = mu_2".into()));
    }
    // A_1 = mu_2 lambda_1 - mu_1 lambda_2 = 0 forces the affine relation
    // mu_n = alpha lambda_n, which degenerates the functional.
    let a1 = m2.clone() * l1.clone() - m1.clone() * l2.clone();
    if a1.tol_zero() {
        return Err(Error::DegenerateSeed(
            "seed lies on the affine line mu = alpha lambda".into(),
        ));
    }

    let m3 = l3.clone() * (m2.clone() - m1.clone()) / (l2.clone() - l1.clone());
    let mut lambda = vec![T::zero(), l1, l2, l3];
    let mut mu = vec![T::zero(), m1, m2, m3];
    let seed = SpectrumPair::new(lambda.clone(), mu.clone())?;
    let sc = seed.structure_constants()?;

    for n in 3..n_max {
        let next_l = sc.omega.clone() * lambda[n].clone() - lambda[n - 1].clone() - sc.b2.clone();
        let next_m = sc.omega.clone() * mu[n].clone() - mu[n - 1].clone() - sc.c2.clone();
        lambda.push(next_l);
        mu.push(next_m);
        let j = n + 1;
        for m in 0..j {
            if !lambda[j].tol_distinct(&lambda[m]) {
                return Err(Error::DegenerateExtension(j, m));
            }
        }
    }
    SpectrumPair::new(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolynomialCoeffs;
    use crate::Rat;

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn i(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    /// lambda_n = -n(n+a+b+1), mu_n = n(n+a).
    fn jacobi_spectrum(alpha: i64, beta: i64, n_max: usize) -> SpectrumPair<Rat> {
        SpectrumPair::tabulate(
            n_max,
            |n| {
                let n = n as i64;
                i(-n * (n + alpha + beta + 1))
            },
            |n| {
                let n = n as i64;
                i(n * (n + alpha))
            },
        )
        .unwrap()
    }

    #[test]
    fn apply_abstract_examples() {
        let spec = jacobi_spectrum(0, 0, 8);
        // constants are annihilated (lambda_0 = mu_0 = 0)
        let one = PolynomialCoeffs::constant(i(1));
        assert!(spec.apply_abstract(&one).unwrap().is_zero());
        // L x^2 = -6 x^2 + 4 x  (lambda_2 = -6, mu_2 = 4)
        let x2 = PolynomialCoeffs::monomial(2);
        let lx2 = spec.apply_abstract(&x2).unwrap();
        assert_eq!(lx2.coeffs(), &[i(0), i(4), i(-6)]);
        // Stieltjes-Wigert printed pair at q = 1/2: L x = (q^-1 - 1) x + (q - 1)
        let sw = SpectrumPair::tabulate(
            4,
            |n| r(1, 2).powi(-(n as i32)) - i(1),
            |n| r(1, 2).powi(n as i32) - i(1),
        )
        .unwrap();
        let lx = sw.apply_abstract(&PolynomialCoeffs::monomial(1)).unwrap();
        assert_eq!(lx.coeffs(), &[r(-1, 2), i(1)]);
    }

    #[test]
    fn apply_abstract_degree_overflow() {
        let spec = jacobi_spectrum(0, 0, 3);
        let p = PolynomialCoeffs::<Rat>::monomial(4);
        assert!(matches!(
            spec.apply_abstract(&p),
            Err(crate::Error::DegreeOverflow { degree: 4, max: 3 })
        ));
    }

    #[test]
    fn extend_from_seed_jacobi() {
        // Seed from the alpha = beta = 0 Jacobi spectrum.
        let spec = extend_from_seed(i(-2), i(1), i(-6), i(4), i(-12), 6).unwrap();
        let expect_l: Vec<Rat> = (0..=6).map(|n: i64| i(-n * (n + 1))).collect();
        let expect_m: Vec<Rat> = (0..=6).map(|n: i64| i(n * n)).collect();
        assert_eq!(spec.lambdas(), &expect_l[..]);
        assert_eq!(spec.mus(), &expect_m[..]);
    }

    #[test]
    fn extend_from_seed_stieltjes_wigert() {
        // lambda_n = q^-n - 1, mu_n = q^n - 1 at q = 1/2 gives the seed
        // (1, -1/2, 3, -3/4, 7); the recurrence must reproduce the closed form.
        let spec = extend_from_seed(i(1), r(-1, 2), i(3), r(-3, 4), i(7), 5).unwrap();
        assert_eq!(spec.lambda(4), &i(15));
        assert_eq!(spec.mu(4), &r(-15, 16));
        assert_eq!(spec.lambda(5), &i(31));
        assert_eq!(spec.mu(5), &r(-31, 32));
    }

    #[test]
    fn extend_from_seed_rejects_affine_seed() {
        // mu_2 = 2 mu_1 and lambda_2 = 2 lambda_1 puts the seed on the line
        // mu = alpha lambda.
        let err = extend_from_seed(i(-2), i(1), i(-4), i(2), i(-12), 6).unwrap_err();
        assert!(matches!(err, crate::Error::DegenerateSeed(_)), "{err}");
    }

    #[test]
    fn structure_constants_examples() {
        // Jacobi alpha = beta = 0: Omega = -1 - (-12)/(-2 + 6) = 2.
        let sc = jacobi_spectrum(0, 0, 6).structure_constants().unwrap();
        assert_eq!(sc.omega, i(2));
        assert_eq!(sc.b2, i(2));
        assert_eq!(sc.c2, i(-2));

        // little -1 Jacobi alpha = beta = 0: (4, -4, 8) gives Omega = -2.
        let lm1 = SpectrumPair::tabulate(
            5,
            |n| {
                let n = n as i64;
                let sign = if n % 2 == 0 { -1 } else { 1 };
                i(sign * (2 * n + 1) + 1)
            },
            |n| {
                let n = n as i64;
                let sign = if n % 2 == 0 { 1 } else { -1 };
                i(sign * 2 * n)
            },
        )
        .unwrap();
        assert_eq!(lm1.lambda(1), &i(4));
        assert_eq!(lm1.lambda(2), &i(-4));
        assert_eq!(lm1.lambda(3), &i(8));
        assert_eq!(lm1.structure_constants().unwrap().omega, i(-2));

        // Stieltjes-Wigert q = 1/2: Omega = q + 1/q = 5/2.
        let sw = SpectrumPair::tabulate(
            4,
            |n| r(1, 2).powi(-(n as i32)) - i(1),
            |n| r(1, 2).powi(n as i32) - i(1),
        )
        .unwrap();
        assert_eq!(sw.structure_constants().unwrap().omega, r(5, 2));
    }

    #[test]
    fn check_admissible_jacobi() {
        let report = jacobi_spectrum(1, 2, 12).check_admissible();
        assert!(report.admissible, "{:?}", report.violations);
        let sc = report.structure.unwrap();
        assert_eq!(sc.omega, i(2));
        assert_eq!(sc.b2, i(2));
        assert_eq!(sc.c2, i(-2));
    }

    #[test]
    fn check_admissible_flags_affine_relation() {
        // lambda_n = n, mu_n = 2n: everything fine except rule (d).
        let spec = SpectrumPair::tabulate(8, |n| i(n as i64), |n| i(2 * n as i64)).unwrap();
        let report = spec.check_admissible();
        assert!(!report.admissible);
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == Rule::NoAffineRelation));
        assert!(report.structure.is_none());
    }

    #[test]
    fn check_admissible_localizes_perturbation() {
        // Perturb mu_5 of an admissible spectrum; the recurrence residuals
        // must fire exactly at n in {4, 5, 6} (plus cross-ratio fallout).
        let mut mu: Vec<Rat> = (0..=10).map(|n: i64| i(n * (n + 1))).collect();
        let lambda: Vec<Rat> = (0..=10).map(|n: i64| i(-n * (n + 4))).collect();
        mu[5] = mu[5].clone() + i(1);
        let spec = SpectrumPair::new(lambda, mu).unwrap();
        let report = spec.check_admissible();
        assert!(!report.admissible);
        let rec_indices: Vec<usize> = report
            .violations
            .iter()
            .filter(|v| v.rule == Rule::MuRecurrence)
            .map(|v| v.indices[0])
            .collect();
        assert_eq!(rec_indices, vec![4, 5, 6]);
        assert!(report.violations.iter().any(|v| v.rule == Rule::CrossRatio
            && v.indices.contains(&5)));
        assert!(report
            .violations
            .iter()
            .all(|v| v.rule != Rule::LambdaRecurrence));
    }

    #[test]
    fn cross_ratio_property_on_admissible_spectra() {
        // (lambda_{n+1} - lambda_k)/(mu_{n+1} - mu_k)
        //   = (lambda_n - lambda_{k+1})/(mu_n - mu_{k+1})
        let spec = jacobi_spectrum(2, 5, 10);
        let n_max = spec.max_degree();
        for n in 0..n_max {
            for k in 0..n_max {
                if n + k + 1 > n_max || n == k + 1 || n + 1 == k {
                    continue; // budget, and 0/0 on the diagonal pairs
                }
                let left = (spec.lambda(n + 1).clone() - spec.lambda(k).clone())
                    / (spec.mu(n + 1).clone() - spec.mu(k).clone());
                let right = (spec.lambda(n).clone() - spec.lambda(k + 1).clone())
                    / (spec.mu(n).clone() - spec.mu(k + 1).clone());
                assert_eq!(left, right, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn quadratic_relation_from_extension() {
        // Extended seeds satisfy the symmetric quadratic relation with the
        // structure constants B1 = -Omega, B2, B3.
        let spec = extend_from_seed(i(-2), i(1), i(-6), i(4), i(-12), 10).unwrap();
        let sc = spec.structure_constants().unwrap();
        let b3 = sc.b3.clone().unwrap();
        for n in 0..spec.max_degree() {
            let (a, b) = (spec.lambda(n).clone(), spec.lambda(n + 1).clone());
            let lhs = a.clone() * a.clone() + b.clone() * b.clone()
                - sc.omega.clone() * a.clone() * b.clone()
                + sc.b2.clone() * (a + b)
                + b3.clone();
            assert_eq!(lhs, i(0), "n = {n}");
        }
    }

    #[test]
    fn structure_constants_scaling_law() {
        // Omega is scale-invariant; B2 scales linearly, B3 quadratically.
        let spec = jacobi_spectrum(1, 2, 6);
        let scaled = spec.scaled(&i(3), &i(-2));
        let sc = spec.structure_constants().unwrap();
        let sc2 = scaled.structure_constants().unwrap();
        assert_eq!(sc2.omega, sc.omega);
        assert_eq!(sc2.b2, sc.b2 * i(3));
        assert_eq!(sc2.b3.unwrap(), sc.b3.unwrap() * i(9));
        assert_eq!(sc2.c2, sc.c2 * i(-2));
        assert_eq!(sc2.c3.unwrap(), sc.c3.unwrap() * i(4));
    }

    #[test]
    fn json_round_trip() {
        let spec = jacobi_spectrum(1, 2, 5).with_hint("jacobi");
        let v = spec.to_json();
        let back = SpectrumPair::<Rat>::from_json(&v).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.family_hint(), Some("jacobi"));
    }
}
