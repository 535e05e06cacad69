//! Cyclic Jacobi eigenvalue solver for small dense symmetric matrices.

use thiserror::Error;

use super::{Spectrum, DEFAULT_ZERO_TOLERANCE};
use crate::graph::SignedGraph;

/// Relative off-diagonal threshold for convergence.
pub const CONVERGENCE_RATIO: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FloatError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
}

pub fn float_spectrum(g: &SignedGraph) -> Result<Spectrum, FloatError> {
    let n = g.n();
    let mut a: Vec<f64> = (0..n * n).map(|k| f64::from(g.entry(k / n, k % n))).collect();
    let mut values = symmetric_eigenvalues(&mut a, n)?;
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum::new(values, DEFAULT_ZERO_TOLERANCE))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues (unsorted) of the symmetric row-major matrix `a`, which is
/// overwritten.
pub fn symmetric_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>, FloatError> {
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = CONVERGENCE_RATIO * frobenius;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(a, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(FloatError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(a, n, p, q);
            }
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Two-sided rotation in the (p, q) plane annihilating `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
