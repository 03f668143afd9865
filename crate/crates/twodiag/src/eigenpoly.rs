//! Eigenpolynomials of a two-diagonal operator.
//!
//! For a spectrum with distinct `lambda_n` there is a unique monic `P_n` with
//! `L P_n = lambda_n P_n`:
//!
//! ```text
//! P_n = x^n + sum_{k=1}^{n} mu_n ... mu_{n-k+1}
//!            / ((lambda_n - lambda_{n-1}) ... (lambda_n - lambda_{n-k})) x^{n-k}
//! ```
//!
//! The same polynomial in the unit-constant normalization has expansion
//! coefficients `A_{n0} = 1`, `A_{ns} = (lambda_n - lambda_0) ...
//! (lambda_n - lambda_{s-1}) / (mu_1 ... mu_s)`.

use crate::poly::{Normalization, PolynomialCoeffs};
use crate::scalar::Scalar;
use crate::spectrum::SpectrumPair;
use crate::{Error, Result};

/// Monic (or unit-constant) eigenpolynomial of degree `n`.
pub fn eigenpolynomial<T: Scalar>(
    spec: &SpectrumPair<T>,
    n: usize,
    norm: Normalization,
) -> Result<PolynomialCoeffs<T>> {
    if n > spec.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: n,
            max: spec.max_degree(),
        });
    }
    match norm {
        Normalization::Monic | Normalization::General => {
            let mut coeffs = vec![T::zero(); n + 1];
            coeffs[n] = T::one();
            // Backward ratio recursion reusing the partial product:
            // t_k = t_{k-1} * mu_{n-k+1} / (lambda_n - lambda_{n-k}).
            let mut t = T::one();
            for k in 1..=n {
                let den = spec.lambda(n).clone() - spec.lambda(n - k).clone();
                if den.tol_zero() {
                    return Err(Error::SpectrumDegenerate(format!(
                        "lambda_{n} = lambda_{}",
                        n - k
                    )));
                }
                t = t * spec.mu(n - k + 1).clone() / den;
                coeffs[n - k] = t.clone();
            }
            PolynomialCoeffs::new(coeffs, Normalization::Monic)
        }
        Normalization::UnitA0 => {
            let a = expansion_coefficients(spec, n)?;
            PolynomialCoeffs::new(a, Normalization::UnitA0)
        }
    }
}

/// Expansion coefficients `A_{n,0..n}` with `A_{n0} = 1`.
///
/// The ratio law `A_{n,s+1}/A_{ns} = (lambda_n - lambda_s)/mu_{s+1}` holds
/// exactly by construction.
pub fn expansion_coefficients<T: Scalar>(spec: &SpectrumPair<T>, n: usize) -> Result<Vec<T>> {
    if n > spec.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: n,
            max: spec.max_degree(),
        });
    }
    let mut a = Vec::with_capacity(n + 1);
    a.push(T::one());
    for s in 0..n {
        let mu = spec.mu(s + 1);
        if mu.tol_zero() {
            return Err(Error::SpectrumDegenerate(format!("mu_{} = 0", s + 1)));
        }
        let next = a[s].clone() * (spec.lambda(n).clone() - spec.lambda(s).clone()) / mu.clone();
        a.push(next);
    }
    Ok(a)
}

/// `A_{n0}` that converts the unit-constant form to the monic form:
/// `A_{n0} = mu_1 ... mu_n / ((lambda_n - lambda_0) ... (lambda_n - lambda_{n-1}))`.
pub fn monic_a0<T: Scalar>(spec: &SpectrumPair<T>, n: usize) -> Result<T> {
    let mut acc = T::one();
    for k in 0..n {
        let den = spec.lambda(n).clone() - spec.lambda(k).clone();
        if den.tol_zero() {
            return Err(Error::SpectrumDegenerate(format!(
                "lambda_{n} = lambda_{k}"
            )));
        }
        acc = acc * spec.mu(k + 1).clone() / den;
    }
    Ok(acc)
}

/// Monic coefficients computed from the closed products, one coefficient at a
/// time with no shared partial products. Slower than [`eigenpolynomial`] and
/// kept as an independent route for cross-checking.
pub fn eigenpolynomial_by_products<T: Scalar>(
    spec: &SpectrumPair<T>,
    n: usize,
) -> Result<PolynomialCoeffs<T>> {
    if n > spec.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: n,
            max: spec.max_degree(),
        });
    }
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    for k in 1..=n {
        let mut num = T::one();
        for j in 0..k {
            num = num * spec.mu(n - j).clone();
        }
        let mut den = T::one();
        for j in 1..=k {
            let d = spec.lambda(n).clone() - spec.lambda(n - j).clone();
            if d.tol_zero() {
                return Err(Error::SpectrumDegenerate(format!(
                    "lambda_{n} = lambda_{}",
                    n - j
                )));
            }
            den = den * d;
        }
        coeffs[n - k] = num / den;
    }
    PolynomialCoeffs::new(coeffs, Normalization::Monic)
}

/// Result of rescaling the polynomial argument: `P_n -> kappa^n P_n(x/kappa)`.
///
/// The companion data transform as moments `c_n -> kappa^n c_n` and
/// recurrence coefficients `b_n -> kappa b_n`, `u_n -> kappa^2 u_n`; the
/// spectrum keeps `lambda_n` and maps `mu_n -> kappa mu_n`.
#[derive(Clone, Debug)]
pub struct Rescaled<T> {
    pub spectrum: SpectrumPair<T>,
    pub polys: Vec<PolynomialCoeffs<T>>,
    pub kappa: T,
}

impl<T: Scalar> Rescaled<T> {
    /// Factor `kappa^n` by which the n-th moment transforms.
    pub fn moment_factor(&self, n: usize) -> T {
        self.kappa.powi(n as i32)
    }
}

/// Rescale eigenpolynomials and their spectrum by `kappa != 0`.
pub fn rescale<T: Scalar>(
    spec: &SpectrumPair<T>,
    polys: &[PolynomialCoeffs<T>],
    kappa: &T,
) -> Result<Rescaled<T>> {
    if kappa.is_zero() {
        return Err(Error::ZeroKappa);
    }
    let mut out = Vec::with_capacity(polys.len());
    for p in polys {
        let deg = p.degree().unwrap_or(0);
        // kappa^n P(x/kappa): coefficient of x^k picks up kappa^{n-k}.
        let coeffs = (0..=deg)
            .map(|k| p.coeff(k) * kappa.powi((deg - k) as i32))
            .collect();
        out.push(PolynomialCoeffs::new(coeffs, p.normalization())?);
    }
    let spectrum = spec.scaled(&T::one(), kappa);
    Ok(Rescaled {
        spectrum,
        polys: out,
        kappa: kappa.clone(),
    })
}
