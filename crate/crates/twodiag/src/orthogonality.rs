//! The moment functional of an admissible spectrum and the orthogonality
//! machinery around it.
//!
//! The moments follow from the operator-symmetry condition
//! `(lambda_n - lambda_m) c_{n+m} + (mu_n - mu_m) c_{n+m-1} = 0`; the m = 0
//! split `c_n = -c_{n-1} mu_n / lambda_n` is the primary route, with the
//! m = 1 split asserted for consistency. Nondegeneracy is certified through
//! Hankel determinants, and the three-term recurrence coefficients are
//! produced two independent ways (closed forms in the spectrum vs coefficient
//! matching on the polynomials themselves).

use crate::linalg;
use crate::poly::{Normalization, PolynomialCoeffs};
use crate::scalar::Scalar;
use crate::spectrum::SpectrumPair;
use crate::{Error, Result};

/// Moment sequence `c_0..c_K` with the Hankel determinants it supports.
#[derive(Clone, Debug)]
pub struct MomentFunctional<T> {
    /// Moments, `c[n]` = n-th moment; `c[0] = 1`.
    pub c: Vec<T>,
    /// `hankel[n]` = Delta_n = det [c_{i+k}], i,k = 0..=n, for 2n <= K.
    pub hankel: Vec<T>,
}

impl<T: Scalar> MomentFunctional<T> {
    /// Highest computed moment index.
    pub fn max_index(&self) -> usize {
        self.c.len() - 1
    }
}

/// Three-term recurrence coefficients `P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoeffs<T> {
    b: Vec<T>,
    u: Vec<T>,
}

impl<T: Scalar> RecurrenceCoeffs<T> {
    pub fn new(b: Vec<T>, u: Vec<T>) -> Self {
        RecurrenceCoeffs { b, u }
    }

    /// `b_n`, defined for `0 <= n < len_b`.
    pub fn b(&self, n: usize) -> &T {
        &self.b[n]
    }

    /// `u_n`, defined for `1 <= n <= len_u`.
    pub fn u(&self, n: usize) -> &T {
        &self.u[n - 1]
    }

    pub fn b_len(&self) -> usize {
        self.b.len()
    }

    pub fn u_len(&self) -> usize {
        self.u.len()
    }

    pub fn bs(&self) -> &[T] {
        &self.b
    }

    pub fn us(&self) -> &[T] {
        &self.u
    }

    /// Norm `h_n = u_1 u_2 ... u_n` (`h_0 = 1`).
    pub fn norm(&self, n: usize) -> T {
        let mut h = T::one();
        for k in 1..=n {
            h = h * self.u(k).clone();
        }
        h
    }
}

/// Raw moments from the m = 0 split only, with no consistency assertions.
/// Intended for diagnosing defective spectra; admissible spectra give the
/// same values as [`moments_from_spectrum`].
pub fn moments_raw<T: Scalar>(spec: &SpectrumPair<T>, count: usize) -> Result<Vec<T>> {
    if count > spec.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: count,
            max: spec.max_degree(),
        });
    }
    let mut c = Vec::with_capacity(count + 1);
    c.push(T::one());
    for n in 1..=count {
        if spec.lambda(n).tol_zero() {
            return Err(Error::SpectrumDegenerate(format!("lambda_{n} = 0")));
        }
        let next = -(c[n - 1].clone() * spec.mu(n).clone()) / spec.lambda(n).clone();
        c.push(next);
    }
    Ok(c)
}

/// Moments `c_0..c_N` of the spectrum's functional plus all Hankel
/// determinants `Delta_n`, `2n <= N`.
///
/// The m = 0 and m = 1 splits of the symmetry condition are cross-checked;
/// a vanishing Hankel determinant is reported as a degenerate functional.
pub fn moments_from_spectrum<T: Scalar>(spec: &SpectrumPair<T>) -> Result<MomentFunctional<T>> {
    let n_max = spec.max_degree();
    let c = moments_raw(spec, n_max)?;

    // Consistency: g_n from the (n-1, 1) split must match the (n, 0) split.
    for n in 3..=n_max {
        if spec.mu(n).tol_zero() {
            continue; // c_n = 0; the Hankel check below reports degeneracy
        }
        let dmu = spec.mu(n - 1).clone() - spec.mu(1).clone();
        if dmu.tol_zero() {
            return Err(Error::InconsistentSpectrum(n));
        }
        let g_alt = (spec.lambda(n - 1).clone() - spec.lambda(1).clone()) / dmu;
        let g_primary = spec.lambda(n).clone() / spec.mu(n).clone();
        if !g_primary.tol_eq(&g_alt) {
            return Err(Error::InconsistentSpectrum(n));
        }
    }

    let mut hankel = Vec::new();
    for n in 0.. {
        if 2 * n > n_max {
            break;
        }
        let m: Vec<Vec<T>> = (0..=n)
            .map(|i| (0..=n).map(|k| c[i + k].clone()).collect())
            .collect();
        let d = linalg::determinant(&m);
        if d.tol_zero() {
            return Err(Error::DegenerateFunctional(n));
        }
        hankel.push(d);
    }
    Ok(MomentFunctional { c, hankel })
}

/// Closed-form recurrence coefficients straight from the spectrum:
///
/// ```text
/// b_n = mu_n/(lambda_n - lambda_{n-1}) - mu_{n+1}/(lambda_{n+1} - lambda_n)
/// u_n = -mu_n b_n/(lambda_n - lambda_{n-1})
///       + mu_n mu_{n-1}/((lambda_n - lambda_{n-1})(lambda_n - lambda_{n-2}))
///       - mu_n mu_{n+1}/((lambda_{n+1} - lambda_n)(lambda_{n+1} - lambda_{n-1}))
/// ```
///
/// Indices respect `lambda_0 = mu_0 = 0`; `b` covers `0..N-1` and `u` covers
/// `1..N-1`.
pub fn recurrence_from_spectrum<T: Scalar>(spec: &SpectrumPair<T>) -> Result<RecurrenceCoeffs<T>> {
    let n_max = spec.max_degree();
    if n_max < 3 {
        return Err(Error::InvalidParams(
            "recurrence extraction needs N >= 3".into(),
        ));
    }
    let gap = |hi: usize, lo: usize| -> Result<T> {
        let d = spec.lambda(hi).clone() - spec.lambda(lo).clone();
        if d.tol_zero() {
            return Err(Error::SpectrumDegenerate(format!(
                "lambda_{hi} = lambda_{lo}"
            )));
        }
        Ok(d)
    };

    let mut b = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let mut val = T::zero();
        if n >= 1 {
            val = val + spec.mu(n).clone() / gap(n, n - 1)?;
        }
        val = val - spec.mu(n + 1).clone() / gap(n + 1, n)?;
        b.push(val);
    }

    let mut u = Vec::with_capacity(n_max.saturating_sub(1));
    for n in 1..n_max {
        let mut val = -(spec.mu(n).clone() * b[n].clone()) / gap(n, n - 1)?;
        if n >= 2 {
            val = val
                + spec.mu(n).clone() * spec.mu(n - 1).clone() / (gap(n, n - 1)? * gap(n, n - 2)?);
        }
        val = val
            - spec.mu(n).clone() * spec.mu(n + 1).clone() / (gap(n + 1, n)? * gap(n + 1, n - 1)?);
        u.push(val);
    }
    Ok(RecurrenceCoeffs::new(b, u))
}

/// Independent oracle: monic orthogonal polynomials by solving the moment
/// linear systems directly. `P_n` requires moments up to `c_{2n-1}` and a
/// nonsingular Hankel section.
pub fn gram_schmidt_monic<T: Scalar>(
    moments: &[T],
    n_max: usize,
) -> Result<Vec<PolynomialCoeffs<T>>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PolynomialCoeffs::constant(T::one()));
    for n in 1..=n_max {
        if 2 * n - 1 >= moments.len() {
            return Err(Error::Parse(format!(
                "gram_schmidt_monic needs moments up to c_{}, got {}",
                2 * n - 1,
                moments.len() - 1
            )));
        }
        // <sigma, P_n x^j> = 0 for j < n with P_n = x^n + sum a_k x^k:
        // sum_k a_k c_{k+j} = -c_{n+j}.
        let a: Vec<Vec<T>> = (0..n)
            .map(|j| (0..n).map(|k| moments[k + j].clone()).collect())
            .collect();
        let rhs: Vec<T> = (0..n).map(|j| -moments[n + j].clone()).collect();
        let coeffs =
            linalg::solve(&a, &rhs).ok_or(Error::DegenerateFunctional(n.saturating_sub(1)))?;
        let mut full = coeffs;
        full.push(T::one());
        out.push(PolynomialCoeffs::new(full, Normalization::Monic)?);
    }
    Ok(out)
}

/// Extract `b_n, u_n` from consecutive monic polynomials by coefficient
/// matching, then verify the *entire* identity
/// `P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n` coefficient by coefficient.
pub fn recurrence_from_polys<T: Scalar>(
    polys: &[PolynomialCoeffs<T>],
) -> Result<RecurrenceCoeffs<T>> {
    if polys.len() < 2 {
        return Err(Error::InvalidParams(
            "need monic polynomials of degrees 0..=N with N >= 1".into(),
        ));
    }
    for (n, p) in polys.iter().enumerate() {
        if p.degree() != Some(n) || !p.leading().is_one() {
            return Err(Error::InvalidParams(format!(
                "entry {n} is not monic of degree {n}"
            )));
        }
    }
    let coeff = |n: usize, k: usize| -> T {
        polys[n].coeff(k)
    };
    let mut b = Vec::new();
    let mut u = Vec::new();
    for n in 0..polys.len() - 1 {
        // x^n coefficient: p_{n+1,n} + b_n = p_{n,n-1}
        let pn_sub = if n >= 1 { coeff(n, n - 1) } else { T::zero() };
        let b_n = pn_sub.clone() - coeff(n + 1, n);
        // x^{n-1} coefficient: p_{n+1,n-1} + b_n p_{n,n-1} + u_n = p_{n,n-2}
        let u_n = if n >= 1 {
            let pn_sub2 = if n >= 2 { coeff(n, n - 2) } else { T::zero() };
            Some(pn_sub2 - coeff(n + 1, n - 1) - b_n.clone() * pn_sub)
        } else {
            None
        };
        // full residual check
        let mut residual = polys[n + 1].add(&polys[n].scale(&b_n)).sub(&polys[n].mul_x());
        if let Some(u_n) = &u_n {
            residual = residual.add(&polys[n - 1].scale(u_n));
        }
        if !residual.max_abs_coeff().tol_zero() {
            return Err(Error::NotOrthogonal(n + 1));
        }
        b.push(b_n);
        if let Some(u_n) = u_n {
            u.push(u_n);
        }
    }
    Ok(RecurrenceCoeffs::new(b, u))
}

/// Operator-symmetry residual: max over `0 <= m < n <= M` of
/// `|(lambda_n - lambda_m) c_{n+m} + (mu_n - mu_m) c_{n+m-1}|`.
/// Zero exactly when the functional makes the operator symmetric.
pub fn symmetry_check<T: Scalar>(spec: &SpectrumPair<T>, moments: &[T], m_max: usize) -> T {
    assert!(
        m_max <= spec.max_degree() && 2 * m_max - 1 < moments.len(),
        "symmetry_check needs lambda, mu to degree {m_max} and moments to c_{}",
        2 * m_max - 1
    );
    let mut worst = T::zero();
    for n in 1..=m_max {
        for m in 0..n {
            let r = (spec.lambda(n).clone() - spec.lambda(m).clone()) * moments[n + m].clone()
                + (spec.mu(n).clone() - spec.mu(m).clone()) * moments[n + m - 1].clone();
            let a = r.abs();
            if a > worst {
                worst = a;
            }
        }
    }
    worst
}
