//! Exact minimisation of monochromatic copies and the random-colouring
//! estimate.

use super::count::{copies_in_complete, count_mono, EmbeddingPlan};
use super::EdgeColoring;
use crate::error::{domain, Result};
use crate::graph::{automorphism_count, Graph};
use crate::report::{Outcome, SearchReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

struct MinSearch {
    n: usize,
    q: usize,
    pairs: Vec<(usize, usize)>,
    /// One plan per ordered edge `(a, b)` of the pattern, starting `[a, b]`.
    plans: Vec<EmbeddingPlan>,
    aut: u64,
    classes: Vec<Graph>,
    current: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    nodes: u64,
    budget: u64,
}

impl MinSearch {
    /// Copies in `color` through the pair `(u, v)`, once it is added.
    fn copies_through(&self, color: usize, u: usize, v: usize) -> u64 {
        let host = &self.classes[color];
        let labelled: u64 = self.plans.iter().map(|p| p.count_from(host, &mut vec![u, v])).sum();
        labelled / self.aut
    }

    /// Returns false when the budget ran out.
    fn run(&mut self, depth: usize, count: u64, colors_used: usize) -> bool {
        if self.best.as_ref().is_some_and(|(b, _)| count >= *b) {
            return true;
        }
        if depth == self.pairs.len() {
            self.best = Some((count, self.current.clone()));
            return true;
        }
        let (u, v) = self.pairs[depth];
        let allowed = (colors_used + 1).min(self.q);
        let mut options: Vec<(u64, usize)> = (0..allowed)
            .map(|c| {
                self.classes[c].add_edge(u, v);
                let extra = self.copies_through(c, u, v);
                self.classes[c].remove_edge(u, v);
                (extra, c)
            })
            .collect();
        options.sort();
        for (extra, c) in options {
            if self.nodes == self.budget {
                return false;
            }
            self.nodes += 1;
            self.classes[c].add_edge(u, v);
            self.current.push(c);
            let finished = self.run(depth + 1, count + extra, colors_used.max(c + 1));
            self.current.pop();
            self.classes[c].remove_edge(u, v);
            if !finished {
                return false;
            }
        }
        true
    }
}

/// `M_q(h; n)`: the fewest monochromatic copies of `h` over all
/// `q`-colourings of `K_n`, by branch and bound over pairs in row-major
/// order with colours opened in order of first use.
pub fn multiplicity_exact(h: &Graph, n: usize, q: usize, budget: u64) -> Result<SearchReport> {
    if q == 0 {
        return domain("need at least one colour");
    }
    copies_in_complete(h, n)?;
    let start = Instant::now();
    let command = format!("mult exact --n {n} --q {q}");
    let mut plans = Vec::new();
    for (a, b) in h.edges() {
        plans.push(EmbeddingPlan::new(h, &[a, b]));
        plans.push(EmbeddingPlan::new(h, &[b, a]));
    }
    let mut search = MinSearch {
        n,
        q,
        pairs: (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        plans,
        aut: automorphism_count(h),
        classes: vec![Graph::empty(n); q],
        current: Vec::new(),
        best: None,
        nodes: 0,
        budget,
    };
    let complete = search.run(0, 0, 0);
    let witness = match &search.best {
        Some((_, colors)) => {
            let mut it = colors.iter();
            Some(EdgeColoring::from_fn(search.n, search.q, |_, _| *it.next().expect("one colour per pair"))?)
        }
        None => None,
    };
    let best = search.best.as_ref().map(|(b, _)| *b);
    let outcome = if complete {
        Outcome::Exact { value: best.expect("complete search reaches a leaf") }
    } else {
        Outcome::Interval { lower: 0, upper: best }
    };
    let mut report = SearchReport::new(command, outcome).with_nodes(search.nodes);
    report.budget_exhausted = !complete;
    if let Some(w) = witness {
        debug_assert_eq!(Some(count_mono(&w, h)?.total), best);
        report = report.with_witness(w);
    }
    Ok(report.timed(start))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomEstimate {
    pub n: usize,
    pub q: usize,
    pub trials: usize,
    pub seed: u64,
    /// Copies of the pattern in `K_n`.
    pub copies: u64,
    /// Mean fraction of copies that are monochromatic.
    pub mean: f64,
    pub std_error: f64,
    /// `q^(1 - e(h))`, the expected fraction.
    pub bound: f64,
}

/// Mean monochromatic fraction over uniformly random `q`-colourings.
/// Trial `i` draws from ChaCha8 seeded with `seed` on stream `i`, so the
/// result does not depend on the number of worker threads.
pub fn multiplicity_upper_estimate(h: &Graph, n: usize, q: usize, trials: usize, seed: u64) -> Result<RandomEstimate> {
    if q == 0 || trials == 0 {
        return domain(format!("need q >= 1 and trials >= 1, got q = {q}, trials = {trials}"));
    }
    let copies = copies_in_complete(h, n)?;
    if copies == 0 {
        return domain(format!("pattern on {} vertices does not fit in K_{n}", h.n()));
    }
    let fractions: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let c = EdgeColoring::from_fn(n, q, |_, _| rng.gen_range(0..q))?;
            Ok(count_mono(&c, h)?.total as f64 / copies as f64)
        })
        .collect::<Result<_>>()?;
    let mean = fractions.iter().sum::<f64>() / trials as f64;
    let var = if trials > 1 {
        fractions.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (trials - 1) as f64
    } else {
        0.0
    };
    let bound = (q as f64).powi(1 - h.edge_count() as i32);
    Ok(RandomEstimate { n, q, trials, seed, copies, mean, std_error: (var / trials as f64).sqrt(), bound })
}
