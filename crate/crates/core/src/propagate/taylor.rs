//! Exponential of an essentially nonnegative matrix (off-diagonal ≥ 0)
//! with entrywise relative accuracy.
//!
//! A = B − μI with B ≥ 0 and μ = max |A_ii|, so exp(A) = e^{−μ} exp(B).
//! After scaling by 2^{−s} the Taylor series of exp(B) has only
//! nonnegative terms, and squaring nonnegative matrices involves no
//! subtraction. No entry is ever formed by cancellation, so populations
//! many orders of magnitude below the largest one keep their relative
//! precision. The Padé route only guarantees accuracy relative to the
//! norm.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Bound on the 1-norm of the scaled shifted matrix.
const SCALED_NORM: f64 = 0.5;
const MAX_TERMS: usize = 200;

pub fn expm_nonnegative(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::validation(
            "matrix exponential needs a square matrix",
        ));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::numerical(
            "matrix exponential of a non-finite matrix",
        ));
    }
    for c in 0..n {
        for r in 0..n {
            if r != c && a[(r, c)] < 0.0 {
                return Err(Error::validation(format!(
                    "entry ({r}, {c}) is negative; matrix is not essentially nonnegative"
                )));
            }
        }
    }
    let mu = (0..n).map(|i| (-a[(i, i)]).max(0.0)).fold(0.0, f64::max);
    let mut b = a.clone();
    for i in 0..n {
        b[(i, i)] += mu;
    }
    let norm = b.column_iter().map(|c| c.sum()).fold(0.0, f64::max);
    let squarings = if norm > SCALED_NORM {
        (norm / SCALED_NORM).log2().ceil() as i32
    } else {
        0
    };
    let scale = 2f64.powi(-squarings);
    let b = b * scale;

    // Every reachable entry first appears by order n − 1; past that the
    // tail is bounded relative to what is already summed.
    let mut sum = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    let mut k = 0;
    loop {
        k += 1;
        term = &b * &term / k as f64;
        sum += &term;
        let converged = term
            .iter()
            .zip(sum.iter())
            .all(|(t, s)| *t <= f64::EPSILON * 0.25 * s);
        if k + 1 >= n && converged {
            break;
        }
        if k >= MAX_TERMS {
            return Err(Error::numerical("Taylor series failed to converge"));
        }
    }
    let mut r = sum * (-mu * scale).exp();
    for _ in 0..squarings {
        r = &r * &r;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn two_state_relative_accuracy() {
        // p_1(t) = k/(k+q) (1 − e^{−(k+q)t}) from state 0, with p_1 tiny
        let (k, q, t) = (1e-30, 1.0, 50.0);
        let a = DMatrix::from_row_slice(2, 2, &[-k, q, k, -q]) * t;
        let e = expm_nonnegative(&a).unwrap();
        let expect = k / (k + q) * -(-(k + q) * t).exp_m1();
        assert_relative_eq!(e[(1, 0)], expect, max_relative = 1e-13);
        assert_relative_eq!(e[(0, 0)] + e[(1, 0)], 1.0, max_relative = 1e-13);
    }

    #[test]
    fn agrees_with_pade_on_a_generator() {
        let g = DMatrix::from_row_slice(3, 3, &[-2.0, 0.5, 0.0, 1.5, -0.7, 3.0, 0.5, 0.2, -3.0]);
        for t in [0.01, 1.0, 30.0, 1e4] {
            let a = expm_nonnegative(&(&g * t)).unwrap();
            let b = super::super::expm(&(&g * t)).unwrap();
            // each squaring doubles the roundoff carried by the stationary mode
            let tol = 1e-15 * (t * 5.0f64).max(1.0);
            assert!((&a - &b).amax() < tol, "t = {t}: {}", (&a - &b).amax());
        }
    }

    #[test]
    fn rejects_negative_off_diagonal() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        assert!(matches!(expm_nonnegative(&a), Err(Error::Validation(_))));
    }
}
