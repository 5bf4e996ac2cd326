//! Ramsey numbers of binomial random graphs.

use super::ramsey_exact;
use crate::error::{domain, Result};
use crate::graph::{canonical_code, io::to_graph6, CanonCode, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseySample {
    /// graph6 of the sample with isolated vertices removed.
    pub pattern: String,
    pub lower: u64,
    /// `None` when the sample is censored (unresolved under cap/budget).
    pub upper: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub samples: Vec<RamseySample>,
    pub resolved: usize,
    pub censored: usize,
    /// Mean and standard deviation of `ln r` over resolved samples.
    pub mean_log: Option<f64>,
    pub spread_log: Option<f64>,
}

/// Draws `trials` graphs `G(n, p)` (trial `i` on ChaCha8 stream `i`),
/// strips isolated vertices and computes each Ramsey number.
pub fn sample_random_ramsey(n: usize, p: f64, trials: usize, seed: u64, n_cap: usize, budget: u64) -> Result<SampleSummary> {
    if !(0.0..=1.0).contains(&p) {
        return domain(format!("edge probability {p} is outside [0, 1]"));
    }
    let mut cache: HashMap<CanonCode, (u64, Option<u64>)> = HashMap::new();
    let mut samples = Vec::with_capacity(trials);
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let core = g.strip_isolated();
        let code = canonical_code(&core);
        let (lower, upper) = match cache.get(&code) {
            Some(&hit) => hit,
            None => {
                let r = ramsey_exact(&core, n_cap.max(core.n()), budget)?;
                cache.insert(code, (r.lower, r.upper));
                (r.lower, r.upper)
            }
        };
        samples.push(RamseySample { pattern: to_graph6(&core), lower, upper });
    }
    let logs: Vec<f64> = samples
        .iter()
        .filter(|s| s.upper == Some(s.lower))
        .map(|s| (s.lower as f64).ln())
        .collect();
    let resolved = logs.len();
    let mean_log = (resolved > 0).then(|| logs.iter().sum::<f64>() / resolved as f64);
    let spread_log = mean_log.map(|m| (logs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / resolved as f64).sqrt());
    Ok(SampleSummary { n, p, trials, seed, samples, resolved, censored: trials - resolved, mean_log, spread_log })
}
