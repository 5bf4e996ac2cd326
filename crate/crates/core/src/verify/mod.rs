//! The acceptance suite: twelve end-to-end criteria, each checked against
//! oracles coded here rather than the kernels' own closed forms.

mod oracles;

use crate::ap::{self, Family, IntColoring};
use crate::constructions::{joint_extremal, prism_blowup, JointExtremalSpec, PendantCliqueSpec, PrismBlowupSpec};
use crate::error::{Error, Result};
use crate::graph::{named, non_isomorphic_graphs};
use crate::kst::degree_sum_check;
use crate::matching::{check_hprime_triangle_structure, max_s_connected_matching, random_alpha_at_most_2};
use crate::multiplicity::{
    count_mono, count_mono_pendant, multiplicity_exact, multiplicity_upper_estimate, partition_classes, partition_coloring, EdgeColoring,
};
use crate::ramsey::{verify_sandwich, DEFAULT_BUDGET, DEFAULT_CAP};
use crate::report::{Outcome, SearchReport};
use crate::Graph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub const SUITE_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    /// Criteria 1 and 2.
    Joints,
    /// Criteria 3 to 5.
    Ap,
    /// Criteria 6 to 8.
    Multiplicity,
    Ramsey,
    /// Criteria 10 and 11.
    Matching,
    Kst,
}

impl Suite {
    fn contains(self, id: u8) -> bool {
        match self {
            Suite::All => true,
            Suite::Joints => matches!(id, 1 | 2),
            Suite::Ap => matches!(id, 3..=5),
            Suite::Multiplicity => matches!(id, 6..=8),
            Suite::Ramsey => id == 9,
            Suite::Matching => matches!(id, 10 | 11),
            Suite::Kst => id == 12,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "joints" | "constructions" => Suite::Joints,
            "ap" => Suite::Ap,
            "mult" | "multiplicity" => Suite::Multiplicity,
            "ramsey" => Suite::Ramsey,
            "match" | "matching" => Suite::Matching,
            "kst" => Suite::Kst,
            other => return Err(Error::Domain(format!("unknown suite `{other}`"))),
        })
    }
}

/// What a criterion body found.
struct Finding {
    pass: bool,
    detail: String,
}

impl Finding {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Finding { pass, detail: detail.into() }
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    body: fn() -> Result<Finding>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({} ms / {} ms): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

impl Criterion {
    /// Runs the body; a criterion passes only within its time limit.
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let finding = (self.body)().unwrap_or_else(|e| Finding::new(false, format!("error: {e}")));
        let elapsed = start.elapsed();
        let mut detail = finding.detail;
        if elapsed > self.limit {
            detail.push_str("; over the time limit");
        }
        CriterionResult {
            id: self.id,
            title: self.title,
            pass: finding.pass && elapsed <= self.limit,
            detail,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, title: "joint-extremal identities", limit: secs(10), body: joint_identities },
        Criterion { id: 2, title: "prism blow-up", limit: secs(5), body: prism_blowups },
        Criterion { id: 3, title: "independent-AP certificate", limit: secs(60), body: independent_ap_certificate },
        Criterion { id: 4, title: "pair coverage of family A", limit: secs(60), body: pair_coverage },
        Criterion { id: 5, title: "sub-Ramsey exactness", limit: secs(120), body: sub_ramsey },
        Criterion { id: 6, title: "multiplicity ground truth", limit: secs(60), body: multiplicity_ground_truth },
        Criterion { id: 7, title: "random-colouring bound", limit: secs(30), body: random_coloring_bound },
        Criterion { id: 8, title: "partition colouring", limit: secs(30), body: partition_coloring_check },
        Criterion { id: 9, title: "Ramsey sandwich bound", limit: secs(600), body: sandwich },
        Criterion { id: 10, title: "4-connected matching vs clique", limit: secs(60), body: connected_matching },
        Criterion { id: 11, title: "H' triangle structure", limit: secs(120), body: triangle_structure },
        Criterion { id: 12, title: "degree-sum inequality", limit: secs(120), body: degree_sum },
    ]
}

/// Runs the criteria of `suite` in order, one at a time so that each is
/// timed on its own.
pub fn run_suite(suite: Suite) -> Vec<CriterionResult> {
    criteria().into_iter().filter(|c| suite.contains(c.id)).map(|c| c.run()).collect()
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    rng.set_stream(stream);
    rng
}

fn random_graph(n: usize, edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut g = Graph::empty(n);
    for i in sample(rng, pairs.len(), edges) {
        let (u, v) = pairs[i];
        g.add_edge(u, v);
    }
    g
}

fn pow(base: u64, exp: usize) -> u64 {
    base.pow(exp as u32)
}

fn joint_identities() -> Result<Finding> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for r in 2..=4usize {
        for n in (1..=37).filter(|n| n % (r * r) == 1 && *n > r) {
            cases += 1;
            let g = joint_extremal(&JointExtremalSpec::new(n, r, 1)?)?.graph;
            let per_part = ((r - 1) * (n - 1) / (r * r)) as u64;
            let expected = [oracles::turan_edges(n, r), pow(per_part, r), pow(per_part, r - 1)];
            let got = [g.edge_count() as u64, g.count_cliques(r + 1)?.total, g.joint_number(r + 1)?.size];
            if expected != got {
                failures.push(format!("(r={r}, n={n}): expected {expected:?}, got {got:?}"));
            }
        }
    }
    Ok(Finding::new(failures.is_empty(), if failures.is_empty() { format!("{cases} cases exact") } else { failures.join("; ") }))
}

fn prism_blowups() -> Result<Finding> {
    let mut failures = Vec::new();
    for (n, j) in [(12usize, 2usize), (18, 3), (16, 3)] {
        let g = prism_blowup(&PrismBlowupSpec::new(n, j)?);
        let triangles = g.count_cliques(3)?.total;
        let per_edge = g.edges().map(|(u, v)| oracles::common_neighbours(&g, u, v)).max().unwrap_or(0);
        let ok = g.edge_count() >= n * n / 4 && triangles == (j * j * (n - 4 * j)) as u64 && per_edge <= j;
        if !ok {
            failures.push(format!("(n={n}, j={j}): {} edges, {triangles} triangles, {per_edge} per edge", g.edge_count()));
        }
    }
    Ok(Finding::new(failures.is_empty(), if failures.is_empty() { "3 cases exact".into() } else { failures.join("; ") }))
}

fn independent_ap_certificate() -> Result<Finding> {
    const N: usize = 300;
    let results: Vec<Result<Option<String>>> = (0..200u64)
        .into_par_iter()
        .map(|i| {
            let k = 3 + (i % 3) as usize;
            let fam = if (i / 3) % 2 == 0 { Family::Coprime } else { Family::Prime };
            let size = ap::family_size(N, k, fam)? as usize;
            let max_edges = ((size - 1) / k).min(N * (N - 1) / 2);
            let mut rng = rng(i);
            let edges = rng.gen_range(max_edges / 2..=max_edges);
            let g = random_graph(N, edges, &mut rng);
            let out = ap::find_independent_ap(&g, k, fam)?;
            Ok(match out.witness {
                Some(p) if oracles::independent_progression(&g, p.a, p.d, p.k) => None,
                Some(p) => Some(format!("graph {i}: {p} fails revalidation")),
                None => Some(format!("graph {i}: exhausted with {edges} edges, k = {k}, family {fam:?}")),
            })
        })
        .collect();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.transpose()).collect::<Result<_>>()?;
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { "200 graphs, all witnesses revalidate".into() } else { failures.join("; ") },
    ))
}

fn pair_coverage() -> Result<Finding> {
    let worst: Vec<(usize, usize, u64)> = (2..=500usize)
        .into_par_iter()
        .flat_map_iter(|n| (2..=6.min(n)).map(move |k| (n, k)))
        .map(|(n, k)| Ok((n, k, oracles::max_pair_coverage_a(n, k)?)))
        .collect::<Result<_>>()?;
    let bad: Vec<String> =
        worst.iter().filter(|&&(_, k, c)| c > k as u64 - 1).map(|(n, k, c)| format!("(n={n}, k={k}): {c}")).collect();
    Ok(Finding::new(
        bad.is_empty(),
        if bad.is_empty() { format!("{} (n, k) pairs, max coverage <= k - 1", worst.len()) } else { bad.join("; ") },
    ))
}

fn exact_value(report: &SearchReport) -> Option<u64> {
    match report.outcome {
        Outcome::Exact { value } => Some(value),
        _ => None,
    }
}

fn sub_ramsey() -> Result<Finding> {
    let mut failures = Vec::new();
    for k in 2..=8 {
        let got = exact_value(&ap::sr_exact(1, k, 16, ap::DEFAULT_NODE_BUDGET)?);
        if got != Some(k as u64) {
            failures.push(format!("sr(1,{k}) = {got:?}"));
        }
    }
    let report = ap::sr_exact(2, 3, 16, ap::DEFAULT_NODE_BUDGET)?;
    let got = exact_value(&report);
    let oracle = oracles::naive_sr(2, 3, 16);
    if got.is_none() || got != oracle {
        failures.push(format!("sr(2,3): search {got:?}, oracle {oracle:?}"));
    }
    if let Some(w) = report.witness {
        let c: IntColoring = serde_json::from_value(w)?;
        if oracles::has_rainbow_ap(&c.colors, 3) {
            failures.push("sr(2,3) witness has a rainbow 3-AP".into());
        }
    }
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { format!("sr(1,k) = k for k <= 8; sr(2,3) = {} = oracle", got.unwrap_or(0)) } else { failures.join("; ") },
    ))
}

fn multiplicity_ground_truth() -> Result<Finding> {
    let k3 = Graph::complete(3);
    let mut failures = Vec::new();
    let five = multiplicity_exact(&k3, 5, 2, DEFAULT_BUDGET)?;
    if exact_value(&five) != Some(0) {
        failures.push(format!("M_2(K3;5) = {:?}", five.outcome));
    }
    if let Some(w) = five.witness {
        let c: EdgeColoring = serde_json::from_value(w)?;
        if oracles::mono_triangles(&c) != 0 {
            failures.push("M_2(K3;5) witness has a monochromatic triangle".into());
        }
    }
    let pentagon = EdgeColoring::from_graph(&named::cycle(5));
    if oracles::mono_triangles(&pentagon) != 0 || count_mono(&pentagon, &k3)?.total != 0 {
        failures.push("pentagon colouring has a monochromatic triangle".into());
    }
    let six = exact_value(&multiplicity_exact(&k3, 6, 2, DEFAULT_BUDGET)?);
    let oracle = oracles::min_mono_triangles(6);
    if six != Some(oracle) {
        failures.push(format!("M_2(K3;6): search {six:?}, oracle {oracle}"));
    }
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { format!("M_2(K3;5) = 0, M_2(K3;6) = {oracle} = oracle, pentagon valid") } else { failures.join("; ") },
    ))
}

fn random_coloring_bound() -> Result<Finding> {
    let est = multiplicity_upper_estimate(&Graph::complete(3), 30, 2, 10_000, SUITE_SEED)?;
    let gap = (est.mean - 0.25).abs();
    Ok(Finding::new(
        gap <= 3.0 * est.std_error && (est.bound - 0.25).abs() < 1e-15,
        format!("mean {:.5}, standard error {:.5}, |mean - 0.25| = {gap:.5}", est.mean, est.std_error),
    ))
}

fn partition_coloring_check() -> Result<Finding> {
    let mut failures = Vec::new();
    for k in [3usize, 4] {
        let n = 6 * (k - 1);
        let spec = PendantCliqueSpec::balanced(k)?;
        let c = partition_coloring(n, k - 1)?;
        let counts = count_mono_pendant(&c, &spec)?;
        let blue = c.color_class(1);
        if counts.per_color[1] != 0 || blue.clique_number() >= k {
            failures.push(format!("k={k}: {} blue copies, blue clique number {}", counts.per_color[1], blue.clique_number()));
        }
        let red = c.color_class(0);
        let classes = partition_classes(n, k - 1);
        let mut part_of = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            class.iter().for_each(|&v| part_of[v] = i);
        }
        let within_parts = classes
            .iter()
            .map(|part| {
                let induced = red.induced_subgraph(part)?;
                crate::multiplicity::count_pendant_copies(&induced, &spec)
            })
            .sum::<Result<u64>>()?;
        let crossing = red.edges().filter(|&(u, v)| part_of[u] != part_of[v]).count();
        if counts.per_color[0] != within_parts || crossing != 0 {
            failures.push(format!("k={k}: {} red copies, {within_parts} inside parts, {crossing} crossing red edges", counts.per_color[0]));
        }
    }
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { "k = 3, 4: no blue copies, red copies inside parts".into() } else { failures.join("; ") },
    ))
}

fn sandwich() -> Result<Finding> {
    let patterns: Vec<Graph> = (2..=4).flat_map(non_isomorphic_graphs).filter(|g| g.is_connected()).collect();
    let (mut checked, mut exact, mut failures) = (0, 0, Vec::new());
    for h in &patterns {
        let is_k4 = h.n() == 4 && h.edge_count() == 6;
        for v in 0..h.n() {
            let r = verify_sandwich(h, v, DEFAULT_CAP, DEFAULT_BUDGET)?;
            checked += 1;
            let label = format!("{} minus {v}", crate::graph::io::to_graph6(h));
            if r.violated() {
                failures.push(format!("{label}: violated"));
            } else if r.holds() {
                exact += 1;
            } else if !is_k4 {
                failures.push(format!("{label}: undecided"));
            }
        }
    }
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} patterns, {checked} deletions, {exact} decided exactly, K4 interval consistent", patterns.len())
        } else {
            failures.join("; ")
        },
    ))
}

fn connected_matching() -> Result<Finding> {
    let mut graphs: Vec<(String, Graph)> = (0..100u64)
        .map(|i| {
            let mut rng = rng(1_000 + i);
            let n = rng.gen_range(2..=12usize);
            let edges = rng.gen_range(0..=n * (n - 1) / 2);
            (format!("random {i}"), random_graph(n, edges, &mut rng))
        })
        .collect();
    for n in 3..=12 {
        graphs.push((format!("K_{n}"), Graph::complete(n)));
        graphs.push((format!("C_{n}"), named::cycle(n)));
        graphs.push((format!("complement of C_{n}"), named::cycle(n).complement()));
    }
    let failures: Vec<String> = graphs
        .par_iter()
        .map(|(label, g)| {
            let cert = max_s_connected_matching(g, 4)?;
            cert.validate(g)?;
            let omega = oracles::clique_number(g);
            Ok((cert.size() != omega / 2).then(|| format!("{label}: matching {} but omega {omega}", cert.size())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { format!("{} graphs, size = floor(omega / 2)", graphs.len()) } else { failures.join("; ") },
    ))
}

fn triangle_structure() -> Result<Finding> {
    let failures: Vec<String> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let n = 5 + (i % 10) as usize;
            let g = random_alpha_at_most_2(n, SUITE_SEED + i);
            if oracles::independence_number(&g) > 2 {
                return Ok(Some(format!("graph {i}: independence number above 2")));
            }
            let s = check_hprime_triangle_structure(&g)?;
            Ok((!s.holds()).then(|| {
                format!("graph {i}: {} disjoint triangles, max |B| = {} vs {}", s.disjoint_triangles, s.max_b, s.b_bound)
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { "100 graphs, n = 5..14".into() } else { failures.join("; ") },
    ))
}

fn degree_sum() -> Result<Finding> {
    let mut failures = Vec::new();
    let mut free = 0;
    let mut seven = 0;
    for n in 1..=7 {
        let graphs = non_isomorphic_graphs(n);
        if n == 7 {
            seven = graphs.len();
        }
        for g in &graphs {
            for (s, t) in [(2, 2), (2, 3), (3, 3)] {
                let r = degree_sum_check(g, s, t, None)?;
                if r.kst_free != oracles::kst_free(g, s, t) {
                    failures.push(format!("freeness disagrees on {}", crate::graph::io::to_graph6(g)));
                }
                if r.kst_free {
                    free += 1;
                    if r.lhs != oracles::degree_binomial_sum(g, s) || !r.holds() {
                        failures.push(format!("({s},{t}) on {}: {} > {}", crate::graph::io::to_graph6(g), r.lhs, r.rhs));
                    }
                }
            }
        }
    }
    if seven != 1044 {
        failures.push(format!("{seven} graphs on 7 vertices"));
    }
    Ok(Finding::new(
        failures.is_empty(),
        if failures.is_empty() { format!("{free} K_(s,t)-free cases, 1044 graphs on 7 vertices") } else { failures.join("; ") },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_partition_the_criteria() {
        let named = [Suite::Joints, Suite::Ap, Suite::Multiplicity, Suite::Ramsey, Suite::Matching, Suite::Kst];
        for c in criteria() {
            assert!(Suite::All.contains(c.id));
            assert_eq!(named.iter().filter(|s| s.contains(c.id)).count(), 1, "criterion {}", c.id);
        }
        assert_eq!("joints".parse::<Suite>().unwrap(), Suite::Joints);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_criteria_pass() {
        for r in run_suite(Suite::Joints).into_iter().chain(run_suite(Suite::Kst)) {
            assert!(r.pass, "{r}");
        }
    }
}
