//! Small exact linear algebra: fraction-free determinants and dense solves.

use crate::scalar::Scalar;

/// Determinant by Bareiss-style fraction-free elimination.
///
/// Over exact scalars every division is exact (the entries are leading minors
/// of the input), which keeps intermediate growth under control; over
/// floating scalars the same pivoted recurrence is a stable elimination.
pub fn determinant<T: Scalar>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    if n == 0 {
        return T::one();
    }
    debug_assert!(matrix.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // find a row below with a nonzero pivot
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Solve `A x = b` by Gaussian elimination. Returns `None` when `A` is
/// singular (to the scalar's comparison policy).
pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for k in 0..n {
        // partial pivot by magnitude (any nonzero works in exact mode)
        let pivot_row = (k..n).max_by(|&i, &j| {
            m[i][k]
                .abs()
                .partial_cmp(&m[j][k].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot_row][k].tol_zero() {
            return None;
        }
        m.swap(k, pivot_row);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone() / m[k][k].clone();
            for j in k..=n {
                m[i][j] = m[i][j].clone() - f.clone() * m[k][j].clone();
            }
        }
    }
    let mut x = vec![T::zero(); n];
    for k in (0..n).rev() {
        let mut acc = m[k][n].clone();
        for j in k + 1..n {
            acc = acc - m[k][j].clone() * x[j].clone();
        }
        x[k] = acc / m[k][k].clone();
    }
    Some(x)
}

/// Solve the first consistent square subsystem of an overdetermined system
/// `A x = b` (rows scanned in order), then check the remaining rows. Returns
/// `None` if no full-rank square subsystem exists or a leftover row is
/// inconsistent.
pub fn solve_overdetermined<T: Scalar>(a: &[Vec<T>], b: &[T], unknowns: usize) -> Option<Vec<T>> {
    let rows = a.len();
    if rows < unknowns {
        return None;
    }
    // Row-reduce the augmented system, collecting pivot rows greedily.
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            debug_assert_eq!(row.len(), unknowns);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..unknowns {
        let pivot = (rank..rows).max_by(|&i, &j| {
            aug[i][col]
                .abs()
                .partial_cmp(&aug[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if aug[pivot][col].tol_zero() {
            return None; // rank-deficient in this column
        }
        aug.swap(rank, pivot);
        for i in 0..rows {
            if i == rank || aug[i][col].is_zero() {
                continue;
            }
            let f = aug[i][col].clone() / aug[rank][col].clone();
            for j in col..=unknowns {
                aug[i][j] = aug[i][j].clone() - f.clone() * aug[rank][j].clone();
            }
        }
        pivots.push(col);
        rank += 1;
    }
    // Any remaining row must be all-zero (consistent).
    for row in aug.iter().skip(rank) {
        if !row[unknowns].tol_zero() {
            return None;
        }
    }
    let mut x = vec![T::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug[r][unknowns].clone() / aug[r][col].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn i(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(determinant::<Rat>(&[]), i(1));
        assert_eq!(determinant(&[vec![i(7)]]), i(7));
        assert_eq!(
            determinant(&[vec![i(1), i(2)], vec![i(3), i(4)]]),
            i(-2)
        );
        // singular
        assert_eq!(
            determinant(&[vec![i(1), i(2)], vec![i(2), i(4)]]),
            i(0)
        );
        // needs a row swap
        assert_eq!(
            determinant(&[vec![i(0), i(1)], vec![i(1), i(0)]]),
            i(-1)
        );
    }

    #[test]
    fn determinant_vandermonde() {
        // det V(x0..x3) = prod_{i<j} (x_j - x_i)
        let xs = [i(2), i(3), i(5), i(7)];
        let m: Vec<Vec<Rat>> = xs
            .iter()
            .map(|x| (0..4).map(|k| crate::Scalar::powi(x, k)).collect())
            .collect();
        let mut expect = i(1);
        for a in 0..4 {
            for b in 0..a {
                expect = expect * (xs[a].clone() - xs[b].clone());
            }
        }
        assert_eq!(determinant(&m), expect);
    }

    #[test]
    fn solve_examples() {
        let a = vec![vec![i(2), i(1)], vec![i(1), i(3)]];
        let b = vec![i(5), i(10)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![i(1), i(3)]);
        assert!(solve(&[vec![i(1), i(1)], vec![i(1), i(1)]], &[i(1), i(2)]).is_none());
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        // x = 2, y = -1 satisfies three rows
        let a = vec![
            vec![i(1), i(0)],
            vec![i(0), i(1)],
            vec![i(1), i(1)],
        ];
        let x = solve_overdetermined(&a, &[i(2), i(-1), i(1)], 2).unwrap();
        assert_eq!(x, vec![i(2), i(-1)]);
        assert!(solve_overdetermined(&a, &[i(2), i(-1), i(5)], 2).is_none());
    }
}
