//! Graph structure of a generator and the stationary weights implied by
//! detailed balance. Weights are recovered from rate ratios alone, in log
//! space, so no energy model is assumed.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rates::RateMatrix;

/// Relative tolerance on K_ji/K_ij products around closed loops.
const REVERSIBILITY_TOL: f64 = 1e-8;

/// Connected components of the transition graph, each as a sorted list.
pub fn connected_components(k: &RateMatrix) -> Vec<Vec<usize>> {
    let n = k.dim();
    let g = k.generator();
    let mut component = vec![usize::MAX; n];
    let mut out = Vec::new();
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![root];
        component[root] = id;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && component[j] == usize::MAX && (g[(j, i)] > 0.0 || g[(i, j)] > 0.0) {
                    component[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// ln of the detailed-balance weights implied by the rates, normalized so
/// that each component's weights sum to one. Fails if any transition is
/// one-way or any loop violates Kolmogorov's criterion.
pub fn log_stationary_weights(k: &RateMatrix) -> Result<Vec<f64>> {
    let n = k.dim();
    let g = k.generator();
    let mut lw = vec![f64::NAN; n];
    for comp in connected_components(k) {
        let root = comp[0];
        lw[root] = 0.0;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j == i {
                    continue;
                }
                let (fwd, back) = (g[(j, i)], g[(i, j)]);
                if fwd == 0.0 && back == 0.0 {
                    continue;
                }
                if fwd == 0.0 || back == 0.0 {
                    return Err(Error::numerical(format!(
                        "transition between states {i} and {j} is one-way; generator is not reversible"
                    )));
                }
                let implied = lw[i] + fwd.ln() - back.ln();
                if lw[j].is_nan() {
                    lw[j] = implied;
                    queue.push_back(j);
                } else if (lw[j] - implied).abs() > REVERSIBILITY_TOL {
                    return Err(Error::numerical(format!(
                        "rates around a loop through states {i} and {j} violate detailed balance \
                         (log mismatch {:.3e})",
                        lw[j] - implied
                    )));
                }
            }
        }
        let max = comp
            .iter()
            .map(|&i| lw[i])
            .fold(f64::NEG_INFINITY, f64::max);
        let z: f64 = comp.iter().map(|&i| (lw[i] - max).exp()).sum();
        let shift = max + z.ln();
        for &i in &comp {
            lw[i] -= shift;
        }
    }
    Ok(lw)
}
