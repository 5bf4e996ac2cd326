//! Two-colour Ramsey numbers of small patterns by exhaustive search.
//!
//! `r(H)` is the least `n` such that every red/blue colouring of `K_n`
//! contains a monochromatic copy of `H`. Isolated vertices of `H` count
//! towards `v(H)`, so a copy needs `n >= v(H)`; for edgeless `H` this makes
//! `r(H) = max(1, v(H))`.

use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::multiplicity::{count_mono, EdgeColoring, EmbeddingPlan};
use crate::report::{Outcome, SearchReport};
use serde::{Deserialize, Serialize};

mod sample;

pub use sample::{sample_random_ramsey, RamseySample, SampleSummary};

pub const DEFAULT_CAP: usize = 12;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Symmetry reduction used by the good-colouring search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    /// Plain search over all colourings.
    None,
    /// Pair `(0, 1)` is red.
    ColorSwap,
    /// Vertex 0 has the largest monochromatic degree `d`, which is red and
    /// on the pairs `(0, 1), ..., (0, d)`; every colour degree is `<= d`.
    Full,
}

impl std::str::FromStr for Symmetry {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Symmetry::None),
            "color-swap" => Ok(Symmetry::ColorSwap),
            "full" => Ok(Symmetry::Full),
            _ => domain(format!("unknown symmetry `{s}` (expected none, color-swap or full)")),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RamseyResult {
    pub pattern: Graph,
    pub lower: u64,
    /// `None` when no upper bound was established.
    pub upper: Option<u64>,
    /// Colouring of `K_{lower - 1}` with no monochromatic copy.
    pub witness: EdgeColoring,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

impl RamseyResult {
    pub fn exact(&self) -> Option<u64> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    pub fn to_report(&self, command: impl Into<String>) -> SearchReport {
        let outcome = match self.exact() {
            Some(value) => Outcome::Exact { value },
            None => Outcome::Interval { lower: self.lower, upper: self.upper },
        };
        let mut r = SearchReport::new(command, outcome).with_nodes(self.nodes).with_witness(&self.witness);
        r.budget_exhausted = self.budget_exhausted;
        r
    }
}

enum Step {
    Found,
    None,
    OutOfBudget,
}

struct GoodColoringSearch {
    pairs: Vec<(usize, usize)>,
    forced: Vec<Option<usize>>,
    plans: Vec<EmbeddingPlan>,
    classes: [Graph; 2],
    degree: [Vec<usize>; 2],
    max_degree: usize,
    colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl GoodColoringSearch {
    fn new(n: usize, core: &Graph, budget: u64) -> Self {
        let mut plans = Vec::new();
        for (a, b) in core.edges() {
            plans.push(EmbeddingPlan::new(core, &[a, b]));
            plans.push(EmbeddingPlan::new(core, &[b, a]));
        }
        // Colex order: all pairs inside {0..v} before any pair reaching v + 1.
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        GoodColoringSearch {
            forced: vec![None; pairs.len()],
            pairs,
            plans,
            classes: [Graph::empty(n), Graph::empty(n)],
            degree: [vec![0; n], vec![0; n]],
            max_degree: n.saturating_sub(1),
            colors: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn mono_through(&self, c: usize, u: usize, v: usize) -> bool {
        self.plans.iter().any(|p| p.exists_from(&self.classes[c], &mut vec![u, v]))
    }

    fn run(&mut self, depth: usize) -> Step {
        if depth == self.pairs.len() {
            return Step::Found;
        }
        let (u, v) = self.pairs[depth];
        let choices: &[usize] = match self.forced[depth] {
            Some(0) => &[0],
            Some(_) => &[1],
            None => &[0, 1],
        };
        for &c in choices {
            if self.degree[c][u] == self.max_degree || self.degree[c][v] == self.max_degree {
                continue;
            }
            if self.nodes == self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.classes[c].add_edge(u, v);
            self.degree[c][u] += 1;
            self.degree[c][v] += 1;
            self.colors.push(c);
            let step = if self.mono_through(c, u, v) { Step::None } else { self.run(depth + 1) };
            if matches!(step, Step::Found) {
                return step;
            }
            self.colors.pop();
            self.classes[c].remove_edge(u, v);
            self.degree[c][u] -= 1;
            self.degree[c][v] -= 1;
            if matches!(step, Step::OutOfBudget) {
                return step;
            }
        }
        Step::None
    }

    fn coloring(&self, n: usize) -> EdgeColoring {
        let mut c = EdgeColoring::uniform(n, 2, 0).expect("two colours");
        for (&(u, v), &color) in self.pairs.iter().zip(&self.colors) {
            c.set(u, v, color).expect("pair in range");
        }
        c
    }
}

/// A red/blue colouring of `K_n` without a monochromatic `core`, the node
/// count used, and whether the budget ran out first.
fn good_coloring(core: &Graph, n: usize, symmetry: Symmetry, budget: u64) -> (Option<EdgeColoring>, u64, bool) {
    if n < 2 {
        return (Some(EdgeColoring::uniform(n, 2, 0).expect("two colours")), 0, false);
    }
    let degrees: Vec<Option<usize>> = match symmetry {
        // With 2d = n - 1 both colour classes are d-regular, impossible for odd n d.
        Symmetry::Full => (n / 2..n).filter(|&d| 2 * d != n - 1 || (n * d).is_multiple_of(2)).map(Some).collect(),
        _ => vec![None],
    };
    let mut nodes = 0;
    for d in degrees {
        let mut search = GoodColoringSearch::new(n, core, budget - nodes);
        match (symmetry, d) {
            (Symmetry::ColorSwap, _) => search.forced[0] = Some(0),
            (Symmetry::Full, Some(d)) => {
                search.max_degree = d;
                for (i, &(u, v)) in search.pairs.clone().iter().enumerate() {
                    if u == 0 {
                        search.forced[i] = Some(usize::from(v > d));
                    }
                }
            }
            _ => {}
        }
        let step = search.run(0);
        nodes += search.nodes;
        match step {
            Step::Found => return (Some(search.coloring(n)), nodes, false),
            Step::OutOfBudget => return (None, nodes, true),
            Step::None => {}
        }
    }
    (None, nodes, false)
}

/// Exact `r(h)` when the search settles it within `n_cap` and `budget`,
/// otherwise an interval.
pub fn ramsey_exact(h: &Graph, n_cap: usize, budget: u64) -> Result<RamseyResult> {
    ramsey_with(h, n_cap, budget, Symmetry::Full)
}

pub fn ramsey_with(h: &Graph, n_cap: usize, budget: u64, symmetry: Symmetry) -> Result<RamseyResult> {
    let v = h.n();
    let core = h.strip_isolated();
    let trivial = |n: usize| EdgeColoring::uniform(n, 2, 0).expect("two colours");
    if core.edge_count() == 0 {
        let value = v.max(1) as u64;
        return Ok(RamseyResult {
            pattern: h.clone(),
            lower: value,
            upper: Some(value),
            witness: trivial(v.saturating_sub(1)),
            nodes: 0,
            budget_exhausted: false,
        });
    }
    if n_cap < v {
        return domain(format!("cap {n_cap} is below v(H) = {v}"));
    }
    let mut witness = trivial(v - 1);
    let mut nodes = 0u64;
    for n in v..=n_cap {
        let (found, used, out_of_budget) = good_coloring(&core, n, symmetry, budget - nodes);
        nodes += used;
        let settle = |upper| RamseyResult {
            pattern: h.clone(),
            lower: n as u64,
            upper,
            witness: witness.clone(),
            nodes,
            budget_exhausted: out_of_budget,
        };
        match found {
            Some(c) => witness = c,
            None if out_of_budget => return Ok(settle(None)),
            None => return Ok(settle(Some(n as u64))),
        }
    }
    Ok(RamseyResult {
        pattern: h.clone(),
        lower: n_cap as u64 + 1,
        upper: None,
        witness,
        nodes,
        budget_exhausted: false,
    })
}

/// Whether `c` has a monochromatic copy of `h`, with the same isolated
/// vertex convention as the search.
pub fn has_mono_copy(c: &EdgeColoring, h: &Graph) -> Result<bool> {
    let core = h.strip_isolated();
    if c.n() < h.n() {
        return Ok(false);
    }
    if core.edge_count() == 0 {
        return Ok(true);
    }
    Ok(count_mono(c, &core)?.total > 0)
}

/// Comparison of an interval `[lower, upper]` against a claimed bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    /// The intervals allow both.
    Consistent,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SandwichReport {
    pub deleted_vertex: usize,
    pub h: RamseyResult,
    pub h_prime: RamseyResult,
    pub v_h_prime: u64,
    /// `r(H') <= r(H)`.
    pub lower_bound: Verdict,
    /// `r(H) <= 2 v(H') r(H')`.
    pub upper_bound: Verdict,
    /// `r(H) / r(H')` when both are exact.
    pub ratio: Option<f64>,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.lower_bound == Verdict::Holds && self.upper_bound == Verdict::Holds
    }

    pub fn violated(&self) -> bool {
        self.lower_bound == Verdict::Fails || self.upper_bound == Verdict::Fails
    }
}

/// `a <= b` for `a in [a_lo, a_hi]`, `b in [b_lo, b_hi]` (`None` = infinite).
fn compare_le(a_lo: u64, a_hi: Option<u64>, b_lo: u64, b_hi: Option<u64>) -> Verdict {
    if a_hi.is_some_and(|a| a <= b_lo) {
        Verdict::Holds
    } else if b_hi.is_some_and(|b| a_lo > b) {
        Verdict::Fails
    } else {
        Verdict::Consistent
    }
}

/// Checks `r(H') <= r(H) <= 2 v(H') r(H')` for `H' = H - deleted`.
pub fn verify_sandwich(h: &Graph, deleted: usize, n_cap: usize, budget: u64) -> Result<SandwichReport> {
    if deleted >= h.n() {
        return domain(format!("vertex {deleted} is not in a pattern on {} vertices", h.n()));
    }
    let h_prime = h.delete_vertex(deleted)?;
    let rh = ramsey_exact(h, n_cap, budget)?;
    let rp = ramsey_exact(&h_prime, n_cap, budget)?;
    let vp = h_prime.n() as u64;
    let lower_bound = compare_le(rp.lower, rp.upper, rh.lower, rh.upper);
    let scaled = |x: u64| 2 * vp * x;
    let upper_bound = compare_le(rh.lower, rh.upper, scaled(rp.lower), rp.upper.map(scaled));
    let ratio = match (rh.exact(), rp.exact()) {
        (Some(a), Some(b)) => Some(a as f64 / b as f64),
        _ => None,
    };
    Ok(SandwichReport { deleted_vertex: deleted, h: rh, h_prime: rp, v_h_prime: vp, lower_bound, upper_bound, ratio })
}

#[cfg(test)]
mod tests;

