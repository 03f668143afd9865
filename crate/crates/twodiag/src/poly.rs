//! Dense polynomials in the monomial basis.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Normalization marker carried by a coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Leading coefficient is 1.
    Monic,
    /// Expansion-coefficient normalization with unit constant term
    /// (`A_{n0} = 1`).
    UnitA0,
    /// No normalization claimed.
    General,
}

/// Coefficient vector, lowest degree first: `coeffs[k]` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialCoeffs<T> {
    coeffs: Vec<T>,
    normalization: Normalization,
}

impl<T: Scalar> PolynomialCoeffs<T> {
    pub fn new(mut coeffs: Vec<T>, normalization: Normalization) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        let p = PolynomialCoeffs {
            coeffs,
            normalization,
        };
        match normalization {
            Normalization::Monic => {
                if !p.leading().is_one() {
                    return Err(Error::Parse("monic marker with non-unit leading coefficient".into()));
                }
            }
            Normalization::UnitA0 => {
                if !p.coeff(0).is_one() {
                    return Err(Error::Parse("unit-A0 marker with non-unit constant term".into()));
                }
            }
            Normalization::General => {}
        }
        Ok(p)
    }

    pub fn general(coeffs: Vec<T>) -> Self {
        Self::new(coeffs, Normalization::General).expect("general polynomials are unrestricted")
    }

    pub fn zero() -> Self {
        Self::general(vec![T::zero()])
    }

    pub fn constant(c: T) -> Self {
        Self::general(vec![c])
    }

    /// The monomial x^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        PolynomialCoeffs {
            coeffs,
            normalization: Normalization::Monic,
        }
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of the highest structurally nonzero coefficient; `None` for the
    /// zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> &T {
        let d = self.degree().unwrap_or(0);
        &self.coeffs[d]
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        Self::general(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) - other.coeff(k))
            .collect();
        Self::general(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::general(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by x (shift every coefficient up one degree).
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::general(coeffs)
    }

    /// Largest absolute coefficient, for residual reports.
    pub fn max_abs_coeff(&self) -> T {
        let mut m = T::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Coefficient-wise tolerance comparison.
    pub fn tol_eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| self.coeff(k).tol_eq(&other.coeff(k)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| c.to_json()).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected a coefficient array".into()))?;
        let coeffs = arr.iter().map(T::from_json).collect::<Result<Vec<_>>>()?;
        Ok(Self::general(coeffs))
    }
}
