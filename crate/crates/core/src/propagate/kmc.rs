//! Gillespie sampling of the same generator, used as a stochastic check on
//! the deterministic propagators.
//!
//! Trajectories are split into a fixed number of shards, each with its own
//! ChaCha stream derived from the seed. Shard sums are reduced in shard
//! order, so the estimate depends on the seed alone and not on the number
//! of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rates::RateMatrix;

const SHARDS: usize = 64;

#[derive(Debug, Clone)]
pub struct KmcSampler {
    /// Per source state: (target, cumulative rate).
    jumps: Vec<Vec<(usize, f64)>>,
    escape: Vec<f64>,
}

/// Sample mean and standard error of an observable at each checkpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct KmcEstimate {
    pub times: Vec<f64>,
    pub mean: Vec<f64>,
    pub std_error: Vec<f64>,
    pub trajectories: usize,
}

impl KmcSampler {
    pub fn new(k: &RateMatrix) -> Self {
        let n = k.dim();
        let g = k.generator();
        let mut jumps = Vec::with_capacity(n);
        let mut escape = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = 0.0;
            let mut row = Vec::new();
            for j in 0..n {
                if j != i && g[(j, i)] > 0.0 {
                    acc += g[(j, i)];
                    row.push((j, acc));
                }
            }
            jumps.push(row);
            escape.push(acc);
        }
        KmcSampler { jumps, escape }
    }

    fn draw_initial(p0: &[f64], rng: &mut ChaCha8Rng) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (i, &p) in p0.iter().enumerate() {
            acc += p;
            if u < acc {
                return i;
            }
        }
        p0.iter().rposition(|&p| p > 0.0).unwrap_or(0)
    }

    /// Record the state occupied at each checkpoint for one trajectory.
    fn run_one(&self, p0: &[f64], checkpoints: &[f64], rng: &mut ChaCha8Rng, out: &mut [usize]) {
        let mut state = Self::draw_initial(p0, rng);
        let mut t = 0.0;
        let mut next = 0;
        while next < checkpoints.len() {
            let out_rate = self.escape[state];
            let t_jump = if out_rate > 0.0 {
                let u: f64 = rng.gen();
                t - (1.0 - u).ln() / out_rate
            } else {
                f64::INFINITY
            };
            while next < checkpoints.len() && checkpoints[next] < t_jump {
                out[next] = state;
                next += 1;
            }
            if next == checkpoints.len() {
                break;
            }
            let target = rng.gen::<f64>() * out_rate;
            let row = &self.jumps[state];
            let pick = row
                .partition_point(|&(_, c)| c <= target)
                .min(row.len() - 1);
            state = row[pick].0;
            t = t_jump;
        }
    }

    /// Estimate E[f(state(t))] at each checkpoint from `trajectories`
    /// independent runs started from `p0`.
    pub fn estimate(
        &self,
        p0: &[f64],
        observable: &[f64],
        checkpoints: &[f64],
        trajectories: usize,
        seed: u64,
    ) -> Result<KmcEstimate> {
        let n = self.escape.len();
        if p0.len() != n || observable.len() != n {
            return Err(Error::validation(format!(
                "initial populations and observable must have length {n}"
            )));
        }
        if trajectories < 2 {
            return Err(Error::validation("need at least two trajectories"));
        }
        if checkpoints.windows(2).any(|w| !(w[1] > w[0]))
            || checkpoints.first().is_some_and(|&t| t < 0.0)
        {
            return Err(Error::validation(
                "checkpoints must be non-negative and strictly increasing",
            ));
        }
        let m = checkpoints.len();
        let shard_sums: Vec<(Vec<f64>, Vec<f64>)> = (0..SHARDS)
            .into_par_iter()
            .map(|shard| {
                let count = trajectories / SHARDS + usize::from(shard < trajectories % SHARDS);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(shard as u64);
                let mut s1 = vec![0.0; m];
                let mut s2 = vec![0.0; m];
                let mut visited = vec![0usize; m];
                for _ in 0..count {
                    self.run_one(p0, checkpoints, &mut rng, &mut visited);
                    for (k, &st) in visited.iter().enumerate() {
                        let f = observable[st];
                        s1[k] += f;
                        s2[k] += f * f;
                    }
                }
                (s1, s2)
            })
            .collect();
        let mut s1 = vec![0.0; m];
        let mut s2 = vec![0.0; m];
        for (a, b) in &shard_sums {
            for k in 0..m {
                s1[k] += a[k];
                s2[k] += b[k];
            }
        }
        let nt = trajectories as f64;
        let mean: Vec<f64> = s1.iter().map(|s| s / nt).collect();
        let std_error = s2
            .iter()
            .zip(&mean)
            .map(|(s, mu)| {
                let var = ((s / nt - mu * mu) * nt / (nt - 1.0)).max(0.0);
                (var / nt).sqrt()
            })
            .collect();
        Ok(KmcEstimate {
            times: checkpoints.to_vec(),
            mean,
            std_error,
            trajectories,
        })
    }
}
