//! Inertia `(p+, n-, eta)` of signed adjacency matrices.
//!
//! [`exact_inertia`] is authoritative: it works by congruence over the
//! rationals and never rounds. [`float_spectrum`] is an independent
//! floating-point cross-check. Cycles and pendant vertices have closed forms
//! that are used both as accelerators and as test oracles.

mod exact;
mod float;

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use exact::{exact_inertia, symmetric_inertia};
pub use float::{float_spectrum, symmetric_eigenvalues, FloatError, CONVERGENCE_RATIO, MAX_SWEEPS};

use crate::graph::{delete_vertices, SignedGraph};
use crate::structure::pendant_vertices;

pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InertiaError {
    #[error("cycles need at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InertiaTriple {
    pub p_plus: usize,
    pub n_minus: usize,
    pub eta: usize,
}

impl InertiaTriple {
    pub fn new(p_plus: usize, n_minus: usize, eta: usize) -> Self {
        InertiaTriple { p_plus, n_minus, eta }
    }

    pub fn order(&self) -> usize {
        self.p_plus + self.n_minus + self.eta
    }
}

impl std::ops::Add for InertiaTriple {
    type Output = InertiaTriple;

    fn add(self, o: InertiaTriple) -> InertiaTriple {
        InertiaTriple::new(self.p_plus + o.p_plus, self.n_minus + o.n_minus, self.eta + o.eta)
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p_plus, self.n_minus, self.eta)
    }
}

/// Eigenvalue approximations sorted non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, zero_tolerance: f64) -> Self {
        values.sort_by(|x, y| y.total_cmp(x));
        Spectrum { values, zero_tolerance }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn zero_tolerance(&self) -> f64 {
        self.zero_tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sign counts, treating `|x| <= zero_tolerance` as zero.
    pub fn inertia(&self) -> InertiaTriple {
        let tol = self.zero_tolerance;
        let p = self.values.iter().filter(|&&x| x > tol).count();
        let m = self.values.iter().filter(|&&x| x < -tol).count();
        InertiaTriple::new(p, m, self.values.len() - p - m)
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest elementwise deviation from `other`, or `None` on length mismatch.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// `{2cos(2πj/n)}` for a balanced cycle, `{2cos((2j-1)π/n)}` for an
/// unbalanced one.
pub fn cycle_spectrum_closed_form(n: usize, balanced: bool) -> Result<Spectrum, InertiaError> {
    if n < 3 {
        return Err(InertiaError::CycleTooShort(n));
    }
    let nf = n as f64;
    let values = if balanced {
        (0..n).map(|j| 2.0 * (2.0 * PI * j as f64 / nf).cos()).collect()
    } else {
        (1..=n).map(|j| 2.0 * ((2 * j - 1) as f64 * PI / nf).cos()).collect()
    };
    Ok(Spectrum::new(values, DEFAULT_ZERO_TOLERANCE))
}

/// Inertia of a cycle from the signs of its closed-form eigenvalues.
///
/// An eigenvalue `2cos(kπ/d)` is positive iff `2k < d` or `2k > 3d`, and zero
/// iff `2k = d` or `2k = 3d`, with `k/d` the angle as a fraction of `π` in
/// `[0, 2)`. All comparisons are integer.
pub fn cycle_inertia(n: usize, balanced: bool) -> Result<InertiaTriple, InertiaError> {
    if n < 3 {
        return Err(InertiaError::CycleTooShort(n));
    }
    // angle numerators over denominator n (in units of π)
    let numerators: Vec<usize> = if balanced {
        (0..n).map(|j| 2 * j).collect()
    } else {
        (1..=n).map(|j| 2 * j - 1).collect()
    };
    let mut t = InertiaTriple::new(0, 0, 0);
    for k in numerators {
        let (twice_k, three_n) = (2 * k, 3 * n);
        if twice_k == n || twice_k == three_n {
            t.eta += 1;
        } else if twice_k < n || twice_k > three_n {
            t.p_plus += 1;
        } else {
            t.n_minus += 1;
        }
    }
    Ok(t)
}

/// Result of stripping pendant edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantReduction {
    pub residual: SignedGraph,
    pub reductions: usize,
}

/// Repeatedly deletes the smallest pendant vertex together with its
/// neighbour. Each deletion lowers `p+` (and `n-`) by exactly one.
pub fn pendant_reduce(g: &SignedGraph) -> PendantReduction {
    let mut residual = g.clone();
    let mut reductions = 0;
    while let Some(&x) = pendant_vertices(&residual).members().first() {
        let y = residual.neighbors(x).next().expect("pendant vertex has a neighbour");
        residual = delete_vertices(&residual, &[x, y]).expect("vertices in range");
        reductions += 1;
    }
    PendantReduction { residual, reductions }
}

/// Exact inertia, computed on the pendant-free residual.
pub fn reduced_inertia(g: &SignedGraph) -> InertiaTriple {
    let PendantReduction { residual, reductions } = pendant_reduce(g);
    exact_inertia(&residual) + InertiaTriple::new(reductions, reductions, 0)
}

pub fn positive_inertia(g: &SignedGraph) -> usize {
    reduced_inertia(g).p_plus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn cycle(n: usize, balanced: bool) -> SignedGraph {
        let g = SignedGraph::unsigned(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        if balanced {
            g
        } else {
            g.with_sign(0, 1, Sign::Minus).unwrap()
        }
    }

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn assert_values(s: &Spectrum, want: &[f64]) {
        assert_eq!(s.len(), want.len());
        for (a, b) in s.values().iter().zip(want) {
            assert!((a - b).abs() < 1e-12, "{:?} vs {want:?}", s.values());
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_values(&cycle_spectrum_closed_form(4, true).unwrap(), &[2.0, 0.0, 0.0, -2.0]);
        assert_values(&cycle_spectrum_closed_form(3, false).unwrap(), &[1.0, 1.0, -2.0]);
        let r = 2f64.sqrt();
        assert_values(&cycle_spectrum_closed_form(4, false).unwrap(), &[r, r, -r, -r]);
        assert_eq!(cycle_spectrum_closed_form(2, true), Err(InertiaError::CycleTooShort(2)));
    }

    #[test]
    fn cycle_inertia_examples() {
        assert_eq!(cycle_inertia(4, true).unwrap(), InertiaTriple::new(1, 1, 2));
        assert_eq!(cycle_inertia(4, false).unwrap(), InertiaTriple::new(2, 2, 0));
        assert_eq!(cycle_inertia(5, true).unwrap(), InertiaTriple::new(3, 2, 0));
        assert_eq!(cycle_inertia(5, false).unwrap().p_plus, 2);
        // unbalanced C_6 has 2cos(π/2) = 2cos(3π/2) = 0
        assert_eq!(cycle_inertia(6, false).unwrap(), InertiaTriple::new(2, 2, 2));
        assert!(cycle_inertia(1, false).is_err());
    }

    #[test]
    fn cycle_inertia_matches_exact_engine() {
        for n in 3..=24 {
            for balanced in [true, false] {
                assert_eq!(
                    cycle_inertia(n, balanced).unwrap(),
                    exact_inertia(&cycle(n, balanced)),
                    "n={n} balanced={balanced}"
                );
            }
        }
    }

    #[test]
    fn pendant_reduction_examples() {
        let star = SignedGraph::unsigned(4, (1..4).map(|i| (0, i))).unwrap();
        let r = pendant_reduce(&star);
        assert_eq!(r.reductions, 1);
        assert_eq!(r.residual, SignedGraph::empty(2));
        assert_eq!(positive_inertia(&star), 1);

        let r = pendant_reduce(&path(4));
        assert_eq!((r.reductions, r.residual.n()), (2, 0));
        assert_eq!(positive_inertia(&path(4)), 2);

        let c6 = cycle(6, true);
        let r = pendant_reduce(&c6);
        assert_eq!(r.reductions, 0);
        assert_eq!(r.residual, c6);
    }

    #[test]
    fn positive_inertia_examples() {
        assert_eq!(positive_inertia(&path(9)), 4);
        let k23 = SignedGraph::unsigned(5, (0..2).flat_map(|i| (2..5).map(move |j| (i, j)))).unwrap();
        assert_eq!(positive_inertia(&k23), 1);
        assert_eq!(positive_inertia(&cycle(5, false)), 2);
    }

    #[test]
    fn spectrum_classification() {
        let s = Spectrum::new(vec![-1.0, 3e-9, 2.0, -4e-9], DEFAULT_ZERO_TOLERANCE);
        assert_eq!(s.values()[0], 2.0);
        assert_eq!(s.inertia(), InertiaTriple::new(1, 1, 2));
    }
}
