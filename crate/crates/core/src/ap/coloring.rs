//! Colourings of `[n]` and the exhaustive rainbow-progression searches.

use super::Progression;
use crate::error::{domain, Result};
use crate::report::{Outcome, SearchReport};
use serde::{Deserialize, Serialize};
use std::time::Instant;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A colouring of `[n]` in which no colour is used more than `m` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntColoring {
    /// `colors[i - 1]` is the colour of `i`.
    pub colors: Vec<u32>,
    pub m: usize,
}

impl IntColoring {
    pub fn new(colors: Vec<u32>, m: usize) -> Result<Self> {
        let c = IntColoring { colors, m };
        if let Some(class) = c.classes().into_iter().find(|cl| cl.len() > m) {
            return domain(format!(
                "colour of {} is used {} times, more than m = {m}",
                class[0],
                class.len()
            ));
        }
        Ok(c)
    }

    /// Tightest multiplicity bound for the given colours.
    pub fn with_tight_bound(colors: Vec<u32>) -> Self {
        let mut c = IntColoring { colors, m: 0 };
        c.m = c.classes().iter().map(Vec::len).max().unwrap_or(0);
        c
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i - 1]
    }

    /// Nonempty colour classes as sorted members of `[n]`, by colour id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_color = std::collections::BTreeMap::<u32, Vec<usize>>::new();
        for (i, &c) in self.colors.iter().enumerate() {
            by_color.entry(c).or_default().push(i + 1);
        }
        by_color.into_values().collect()
    }

    pub fn num_colors(&self) -> usize {
        self.classes().len()
    }

    /// Exactly `t` colours, each used `n / t` times.
    pub fn is_equinumerous(&self, t: usize) -> bool {
        let classes = self.classes();
        t > 0 && self.n().is_multiple_of(t) && classes.len() == t && classes.iter().all(|c| c.len() == self.n() / t)
    }

    pub fn is_rainbow(&self, p: &Progression) -> bool {
        let colors: Vec<u32> = p.terms().map(|i| self.color(i)).collect();
        p.fits(self.n()) && colors.iter().enumerate().all(|(i, c)| !colors[i + 1..].contains(c))
    }

    /// Any rainbow `k`-term progression, by direct scan.
    pub fn has_rainbow_ap(&self, k: usize) -> bool {
        let n = self.n();
        if k == 0 || k > n {
            return false;
        }
        if k == 1 {
            return true;
        }
        (1..=(n - 1) / (k - 1)).any(|d| {
            (1..=n - (k - 1) * d).any(|a| self.is_rainbow(&Progression { a, d, k }))
        })
    }
}

/// Depth-first search for a colouring of `[n]` with at most `max_colors`
/// colours, each used at most `m` times, and no rainbow `k`-AP. Colours
/// are opened in order of first appearance.
struct BadColoringSearch {
    n: usize,
    k: usize,
    m: usize,
    max_colors: usize,
    budget: u64,
    nodes: u64,
    colors: Vec<u32>,
    counts: Vec<usize>,
}

enum Step {
    Found,
    None,
    OutOfBudget,
}

impl BadColoringSearch {
    fn new(n: usize, k: usize, m: usize, max_colors: usize, budget: u64) -> Self {
        BadColoringSearch {
            n,
            k,
            m,
            max_colors,
            budget,
            nodes: 0,
            colors: Vec::with_capacity(n),
            counts: vec![0; max_colors.max(1)],
        }
    }

    /// Whether some `k`-AP ending at the last assigned position is rainbow.
    fn closes_rainbow(&self) -> bool {
        let p = self.colors.len() - 1;
        if self.k == 1 {
            return true;
        }
        (1..=p / (self.k - 1)).any(|d| {
            let terms = (0..self.k).map(|i| self.colors[p - i * d]);
            let mut seen: Vec<u32> = Vec::with_capacity(self.k);
            for c in terms {
                if seen.contains(&c) {
                    return false;
                }
                seen.push(c);
            }
            true
        })
    }

    fn run(&mut self) -> Step {
        if self.colors.len() == self.n {
            return Step::Found;
        }
        let opened = self.counts.iter().take_while(|&&c| c > 0).count();
        let choices = (opened + 1).min(self.max_colors);
        for c in 0..choices {
            if self.counts[c] == self.m {
                continue;
            }
            if self.nodes == self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.colors.push(c as u32);
            self.counts[c] += 1;
            if !self.closes_rainbow() {
                match self.run() {
                    Step::None => {}
                    done => return done,
                }
            }
            self.colors.pop();
            self.counts[c] -= 1;
        }
        Step::None
    }
}

#[derive(Serialize)]
struct LevelRecord {
    n: usize,
    bad_coloring: bool,
    nodes: u64,
}

/// `sr(m, k)`: the least `n` such that every colouring of `[n]` using no
/// colour more than `m` times has a rainbow `k`-AP, searched for
/// `n <= n_max`. The witness is a bad colouring of `[value - 1]`.
pub fn sr_exact(m: usize, k: usize, n_max: usize, budget: u64) -> Result<SearchReport> {
    if m == 0 || k == 0 {
        return domain(format!("sr needs m, k >= 1, got m = {m}, k = {k}"));
    }
    let start = Instant::now();
    let command = format!("ap sr-exact --m {m} --k {k} --nmax {n_max}");
    let mut nodes = 0u64;
    let mut levels = Vec::new();
    let mut last_bad: Option<Vec<u32>> = None;
    for n in k..=n_max {
        let mut search = BadColoringSearch::new(n, k, m, n, budget - nodes);
        let step = search.run();
        nodes += search.nodes;
        levels.push(LevelRecord { n, bad_coloring: matches!(step, Step::Found), nodes: search.nodes });
        let report = match step {
            Step::Found => {
                last_bad = Some(search.colors);
                continue;
            }
            Step::None => SearchReport::new(command, Outcome::Exact { value: n as u64 }),
            Step::OutOfBudget => {
                let mut r = SearchReport::new(command, Outcome::Interval { lower: n as u64, upper: None });
                r.budget_exhausted = true;
                r
            }
        };
        let report = match last_bad {
            Some(colors) => report.with_witness(IntColoring { colors, m }),
            None => report,
        };
        return Ok(report.with_nodes(nodes).with_details(levels).timed(start));
    }
    let lower = k.max(n_max + 1) as u64;
    let mut report = SearchReport::new(command, Outcome::Interval { lower, upper: None });
    if let Some(colors) = last_bad {
        report = report.with_witness(IntColoring { colors, m });
    }
    Ok(report.with_nodes(nodes).with_details(levels).timed(start))
}

/// Whether every colouring of `[t m]` with `t` colours used `m` times each
/// has a rainbow `k`-AP. `Fails` carries a counterexample colouring.
pub fn tk_check(t: usize, m: usize, k: usize, budget: u64) -> Result<SearchReport> {
    if t == 0 || m == 0 || k == 0 {
        return domain(format!("need t, m, k >= 1, got t = {t}, m = {m}, k = {k}"));
    }
    let start = Instant::now();
    let command = format!("ap tk --t {t} --m {m} --k {k}");
    let mut search = BadColoringSearch::new(t * m, k, m, t, budget);
    let report = match search.run() {
        Step::Found => {
            let witness = IntColoring { colors: search.colors, m };
            debug_assert!(witness.is_equinumerous(t) && !witness.has_rainbow_ap(k));
            SearchReport::new(command, Outcome::Fails).with_witness(witness)
        }
        Step::None => SearchReport::new(command, Outcome::Holds),
        Step::OutOfBudget => {
            let mut r = SearchReport::new(command, Outcome::Undecided);
            r.budget_exhausted = true;
            r
        }
    };
    Ok(report.with_nodes(search.nodes).timed(start))
}
