//! Operator-identity criteria for admissibility.
//!
//! With `X` = multiplication by x, an operator `L` with two-diagonal action
//! is admissible exactly when
//!
//! ```text
//! X^2 L + L X^2 - Omega X L X + B2 X^2 + C2 X = 0
//! ```
//!
//! holds on all polynomials. Acting on x^n, the x^{n+2} coefficient of the
//! left side is the lambda-recurrence residual and the x^{n+1} coefficient is
//! the mu-recurrence residual, so the identity is checked by composing the
//! operators on monomials and collecting stray coefficients. A companion
//! "dual" relation `L^2 X + X L^2 - Omega L X L =
//! alpha (LX + XL) + beta X + gamma L + delta` holds with some constants;
//! since no closed form for them is available they are fitted on the first
//! monomials and verified on the rest.

use crate::linalg;
use crate::poly::PolynomialCoeffs;
use crate::scalar::Scalar;
use crate::spectrum::{SpectrumPair, StructureConstants};
use crate::{Error, Result};

/// Outcome of an operator-identity verification.
#[derive(Clone, Debug)]
pub struct IdentityReport<T> {
    /// Max absolute stray coefficient over the tested monomials.
    pub residual: T,
    pub degree_tested: usize,
    /// `(alpha, beta, gamma, delta)` of the dual relation, when fitted.
    pub fitted_constants: Option<(T, T, T, T)>,
    /// Residual stream from the x^{n+2} coefficients (lambda recurrence),
    /// indexed by n.
    pub lambda_residuals: Vec<T>,
    /// Residual stream from the x^{n+1} coefficients (mu recurrence).
    pub mu_residuals: Vec<T>,
}

/// Evaluate `(X^2 L + L X^2 - Omega X L X + B2 X^2 + C2 X) x^n` for
/// `n = 0..=n_max` by composing the operator actions, and report the largest
/// stray coefficient. Requires the spectrum tabulated to `n_max + 2`.
pub fn verify_primary_identity<T: Scalar>(
    spec: &SpectrumPair<T>,
    sc: &StructureConstants<T>,
    n_max: usize,
) -> Result<IdentityReport<T>> {
    if n_max + 2 > spec.max_degree() {
        return Err(Error::InvalidParams(format!(
            "identity check to n = {n_max} needs the spectrum tabulated to {}",
            n_max + 2
        )));
    }
    let l = |p: &PolynomialCoeffs<T>| spec.apply_abstract(p);
    let mut worst = T::zero();
    let mut lambda_residuals = Vec::with_capacity(n_max + 1);
    let mut mu_residuals = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let xn = PolynomialCoeffs::monomial(n);
        let x2l = l(&xn)?.mul_x().mul_x();
        let lx2 = l(&xn.mul_x().mul_x())?;
        let xlx = l(&xn.mul_x())?.mul_x();
        let total = x2l
            .add(&lx2)
            .sub(&xlx.scale(&sc.omega))
            .add(&xn.mul_x().mul_x().scale(&sc.b2))
            .add(&xn.mul_x().scale(&sc.c2));
        lambda_residuals.push(total.coeff(n + 2));
        mu_residuals.push(total.coeff(n + 1));
        let m = total.max_abs_coeff();
        if m > worst {
            worst = m;
        }
    }
    Ok(IdentityReport {
        residual: worst,
        degree_tested: n_max,
        fitted_constants: None,
        lambda_residuals,
        mu_residuals,
    })
}

/// Form `R2 = L^2 X + X L^2 - Omega L X L`, fit the four constants of
/// `R2 = alpha (LX + XL) + beta X + gamma L + delta` on the monomials
/// `x^0..x^3`, then verify the relation on every `n <= n_max`.
pub fn fit_dual_identity<T: Scalar>(
    spec: &SpectrumPair<T>,
    omega: &T,
    n_max: usize,
) -> Result<IdentityReport<T>> {
    if n_max + 1 > spec.max_degree() {
        return Err(Error::InvalidParams(format!(
            "dual identity to n = {n_max} needs the spectrum tabulated to {}",
            n_max + 1
        )));
    }
    if n_max < 4 {
        return Err(Error::InvalidParams(
            "dual identity needs n_max >= 4 (fit on 0..=3, verify beyond)".into(),
        ));
    }
    let l = |p: &PolynomialCoeffs<T>| spec.apply_abstract(p);
    let r2_of = |n: usize| -> Result<PolynomialCoeffs<T>> {
        let xn = PolynomialCoeffs::monomial(n);
        let l2x = l(&l(&xn.mul_x())?)?;
        let xl2 = l(&l(&xn)?)?.mul_x();
        let lxl = l(&l(&xn)?.mul_x())?;
        Ok(l2x.add(&xl2).sub(&lxl.scale(omega)))
    };
    let basis_of = |n: usize| -> Result<[PolynomialCoeffs<T>; 4]> {
        let xn = PolynomialCoeffs::monomial(n);
        let lx_xl = l(&xn.mul_x())?.add(&l(&xn)?.mul_x());
        Ok([lx_xl, xn.mul_x(), l(&xn)?, xn])
    };

    // Fit on n = 0..=3: one linear equation per coefficient degree.
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut rhs: Vec<T> = Vec::new();
    for n in 0..=3usize {
        let target = r2_of(n)?;
        let basis = basis_of(n)?;
        for k in 0..=n + 1 {
            rows.push(basis.iter().map(|b| b.coeff(k)).collect());
            rhs.push(target.coeff(k));
        }
    }
    let fitted = linalg::solve_overdetermined(&rows, &rhs, 4).ok_or_else(|| {
        Error::FitFailed("the four-constant system is inconsistent on x^0..x^3".into())
    })?;
    let (alpha, beta, gamma, delta) = (
        fitted[0].clone(),
        fitted[1].clone(),
        fitted[2].clone(),
        fitted[3].clone(),
    );

    let mut worst = T::zero();
    for n in 0..=n_max {
        let target = r2_of(n)?;
        let basis = basis_of(n)?;
        let model = basis[0]
            .scale(&alpha)
            .add(&basis[1].scale(&beta))
            .add(&basis[2].scale(&gamma))
            .add(&basis[3].scale(&delta));
        let m = target.sub(&model).max_abs_coeff();
        if m > worst {
            worst = m;
        }
    }
    Ok(IdentityReport {
        residual: worst,
        degree_tested: n_max,
        fitted_constants: Some((alpha, beta, gamma, delta)),
        lambda_residuals: Vec::new(),
        mu_residuals: Vec::new(),
    })
}
