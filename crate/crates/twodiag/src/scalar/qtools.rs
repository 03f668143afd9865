//! q-calculus helpers: q-numbers and q-Pochhammer symbols.

use super::Scalar;
use crate::{Error, Result};

/// Deformation base for q-arithmetic.
///
/// Either a genuine base q with q not in {0, 1, -1}, or the classical limit
/// q -> 1 in which `[n] = n`.
#[derive(Clone, Debug, PartialEq)]
pub struct QContext<T: Scalar> {
    q: Option<T>,
}

impl<T: Scalar> QContext<T> {
    pub fn new(q: T) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParams("q must be nonzero".into()));
        }
        if q.tol_eq(&T::one()) || q.tol_eq(&-T::one()) {
            return Err(Error::InvalidParams("q must not be +1 or -1".into()));
        }
        Ok(QContext { q: Some(q) })
    }

    /// The classical limit q -> 1.
    pub fn classical() -> Self {
        QContext { q: None }
    }

    pub fn is_classical(&self) -> bool {
        self.q.is_none()
    }

    pub fn q(&self) -> Option<&T> {
        self.q.as_ref()
    }
}

/// q-number `[n] = (q^n - 1)/(q - 1)`, or `n` in the classical limit.
pub fn q_number<T: Scalar>(ctx: &QContext<T>, n: u32) -> T {
    match &ctx.q {
        None => T::from_i64(n as i64),
        Some(q) => {
            if n == 0 {
                return T::zero();
            }
            (q.powi(n as i32) - T::one()) / (q.clone() - T::one())
        }
    }
}

/// Shifted q-factorial `(a; q)_s = (1 - a)(1 - aq) ... (1 - a q^{s-1})`.
/// The empty product (s = 0) is 1.
pub fn q_pochhammer<T: Scalar>(a: &T, ctx: &QContext<T>, s: u32) -> T {
    let q = match &ctx.q {
        Some(q) => q.clone(),
        None => T::one(),
    };
    let mut acc = T::one();
    let mut aq = a.clone();
    for _ in 0..s {
        acc = acc * (T::one() - aq.clone());
        aq = aq * q.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn ctx(num: i64, den: i64) -> QContext<Rat> {
        QContext::new(Rat::from_ratio(num, den)).unwrap()
    }

    #[test]
    fn q_number_examples() {
        // [0] = 0 for any base
        assert_eq!(q_number(&ctx(1, 2), 0), Rat::from_i64(0));
        // (1/8 - 1)/(1/2 - 1) = 7/4
        assert_eq!(q_number(&ctx(1, 2), 3), Rat::from_ratio(7, 4));
        // (4 - 1)/(2 - 1) = 3
        assert_eq!(q_number(&ctx(2, 1), 2), Rat::from_i64(3));
        // classical limit: [n] = n
        let c = QContext::<Rat>::classical();
        assert_eq!(q_number(&c, 5), Rat::from_i64(5));
    }

    #[test]
    fn q_pochhammer_examples() {
        let a = Rat::from_ratio(1, 2);
        // empty product
        assert_eq!(q_pochhammer(&a, &ctx(1, 2), 0), Rat::from_i64(1));
        // (1 - 1/2)(1 - 1/4) = 3/8
        assert_eq!(q_pochhammer(&a, &ctx(1, 2), 2), Rat::from_ratio(3, 8));
        // first factor vanishes at a = 1
        assert_eq!(
            q_pochhammer(&Rat::from_i64(1), &ctx(1, 3), 4),
            Rat::from_i64(0)
        );
    }

    #[test]
    fn q_context_rejects_degenerate_bases() {
        assert!(QContext::new(Rat::from_i64(0)).is_err());
        assert!(QContext::new(Rat::from_i64(1)).is_err());
        assert!(QContext::new(Rat::from_i64(-1)).is_err());
    }

    #[test]
    fn pochhammer_step_identity() {
        // (a;q)_{s+1} = (a;q)_s (1 - a q^s), exercised to s = 50
        let a = Rat::from_ratio(2, 3);
        let c = ctx(3, 5);
        let q = Rat::from_ratio(3, 5);
        for s in 0..50u32 {
            let lhs = q_pochhammer(&a, &c, s + 1);
            let rhs = q_pochhammer(&a, &c, s) * (Rat::from_i64(1) - a.clone() * q.powi(s as i32));
            assert_eq!(lhs, rhs, "s = {s}");
        }
    }

    #[test]
    fn q_number_addition_law() {
        // [n] + q^n [m] = [n + m], n, m <= 30
        let c = ctx(-4, 7);
        let q = Rat::from_ratio(-4, 7);
        for n in 0..=30u32 {
            for m in 0..=30u32 {
                let lhs = q_number(&c, n) + q.powi(n as i32) * q_number(&c, m);
                assert_eq!(lhs, q_number(&c, n + m), "n = {n}, m = {m}");
            }
        }
    }
}
