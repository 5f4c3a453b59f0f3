//! Gaussian elimination over exact rationals.

use alloc::vec::Vec;

use crate::Fraction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Fraction>),
    /// Consistent but rank deficient: a positive-dimensional solution set.
    Underdetermined { rank: usize },
    Inconsistent,
}

/// Solves `a x = b` for a dense system with `a.len()` equations and
/// `width` unknowns.
pub fn solve(a: &[Vec<Fraction>], b: &[Fraction], width: usize) -> LinearSolution {
    assert_eq!(a.len(), b.len(), "one right-hand side per equation");
    let mut rows: Vec<Vec<Fraction>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), width, "ragged coefficient matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * y);
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if rows[rank..].iter().any(|r| !r[width].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if rank < width {
        return LinearSolution::Underdetermined { rank };
    }
    let mut x = alloc::vec![Fraction::zero(); width];
    for (row, &col) in rows.iter().zip(&pivots) {
        x[col] = row[width].clone();
    }
    LinearSolution::Unique(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f(n: i64) -> Fraction {
        Fraction::integer(n)
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let a = vec![vec![f(1), f(1)], vec![f(1), f(-1)]];
        assert_eq!(solve(&a, &[f(3), f(1)], 2), LinearSolution::Unique(vec![f(2), f(1)]));
    }

    #[test]
    fn rational_pivots() {
        // 2x + 3y = 1, 4x - y = 2
        let a = vec![vec![f(2), f(3)], vec![f(4), f(-1)]];
        let LinearSolution::Unique(x) = solve(&a, &[f(1), f(2)], 2) else { panic!() };
        assert_eq!(x, vec![Fraction::ratio(1, 2), f(0)]);
    }

    #[test]
    fn singular_systems() {
        let a = vec![vec![f(1), f(2)], vec![f(2), f(4)]];
        assert_eq!(solve(&a, &[f(1), f(2)], 2), LinearSolution::Underdetermined { rank: 1 });
        assert_eq!(solve(&a, &[f(1), f(3)], 2), LinearSolution::Inconsistent);
    }
}
