//! Exact inertia by symmetric congruence elimination over the rationals.
//!
//! Each step removes either a nonzero diagonal pivot (a 1x1 block) or, when
//! the remaining diagonal is zero, a 2x2 block `[[0, b], [b, 0]]` with
//! determinant `-b^2 < 0`, which contributes one positive and one negative
//! eigenvalue. The Schur complement of the pivot block is congruent to the
//! remaining part of the matrix, so the counts add up to the inertia of the
//! input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::InertiaTriple;
use crate::graph::SignedGraph;

pub fn exact_inertia(g: &SignedGraph) -> InertiaTriple {
    let n = g.n();
    let mut a: Vec<BigRational> = (0..n * n)
        .map(|k| BigRational::from_integer(BigInt::from(g.entry(k / n, k % n))))
        .collect();
    symmetric_inertia(&mut a, n)
}

/// Inertia of the symmetric `n x n` row-major matrix `a`. `a` is consumed
/// as workspace.
pub fn symmetric_inertia(a: &mut [BigRational], n: usize) -> InertiaTriple {
    debug_assert_eq!(a.len(), n * n);
    let mut active: Vec<usize> = (0..n).collect();
    let mut p_plus = 0;
    let mut n_minus = 0;

    loop {
        if active.is_empty() {
            break;
        }
        if let Some(pos) = active.iter().position(|&i| !a[i * n + i].is_zero()) {
            let p = active.remove(pos);
            let pivot = a[p * n + p].clone();
            if pivot.is_positive() {
                p_plus += 1;
            } else {
                n_minus += 1;
            }
            let col: Vec<(usize, BigRational)> = active
                .iter()
                .filter(|&&r| !a[r * n + p].is_zero())
                .map(|&r| (r, &a[r * n + p] / &pivot))
                .collect();
            for &(r, ref f) in &col {
                for &s in &active {
                    let ps = &a[p * n + s];
                    if ps.is_zero() {
                        continue;
                    }
                    let delta = f * ps;
                    a[r * n + s] -= delta;
                }
            }
            continue;
        }

        let mut pair = None;
        'search: for (x, &i) in active.iter().enumerate() {
            for &j in &active[x + 1..] {
                if !a[i * n + j].is_zero() {
                    pair = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((p, q)) = pair else {
            break;
        };
        p_plus += 1;
        n_minus += 1;
        active.retain(|&r| r != p && r != q);
        // Schur complement of [[0, b], [b, 0]]:
        // a_rs -= (a_rp a_qs + a_rq a_ps) / b
        let b = a[p * n + q].clone();
        let rows: Vec<(usize, BigRational, BigRational)> = active
            .iter()
            .map(|&r| (r, &a[r * n + p] / &b, &a[r * n + q] / &b))
            .filter(|(_, fp, fq)| !fp.is_zero() || !fq.is_zero())
            .collect();
        for (r, fp, fq) in &rows {
            for &s in &active {
                let mut delta = BigRational::zero();
                let qs = &a[q * n + s];
                if !fp.is_zero() && !qs.is_zero() {
                    delta += fp * qs;
                }
                let ps = &a[p * n + s];
                if !fq.is_zero() && !ps.is_zero() {
                    delta += fq * ps;
                }
                if !delta.is_zero() {
                    a[r * n + s] -= delta;
                }
            }
        }
    }
    let eta = n - p_plus - n_minus;
    InertiaTriple { p_plus, n_minus, eta }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn int_matrix(rows: &[&[i64]]) -> (Vec<BigRational>, usize) {
        let n = rows.len();
        let a = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))))
            .collect();
        (a, n)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(exact_inertia(&SignedGraph::empty(1)), InertiaTriple::new(0, 0, 1));
        assert_eq!(exact_inertia(&SignedGraph::empty(0)), InertiaTriple::new(0, 0, 0));

        let c4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(exact_inertia(&c4), InertiaTriple::new(1, 1, 2));

        let c3 = SignedGraph::new(3, [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)])
            .unwrap();
        assert_eq!(exact_inertia(&c3), InertiaTriple::new(2, 1, 0));

        let p4 = SignedGraph::new(4, [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (2, 3, Sign::Plus)])
            .unwrap();
        assert_eq!(exact_inertia(&p4), InertiaTriple::new(2, 2, 0));
    }

    #[test]
    fn general_symmetric_matrices() {
        // eigenvalues 3, 1
        let (mut a, n) = int_matrix(&[&[2, 1], &[1, 2]]);
        assert_eq!(symmetric_inertia(&mut a, n), InertiaTriple::new(2, 0, 0));
        // rank one, eigenvalues 3, 0, 0
        let (mut a, n) = int_matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(symmetric_inertia(&mut a, n), InertiaTriple::new(1, 0, 2));
        // diag(-1, 0, 4) permuted
        let (mut a, n) = int_matrix(&[&[0, 0, 0], &[0, 4, 0], &[0, 0, -1]]);
        assert_eq!(symmetric_inertia(&mut a, n), InertiaTriple::new(1, 1, 1));
    }
}
