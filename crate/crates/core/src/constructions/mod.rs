//! Deterministic generators for the explicit extremal graphs, each with a
//! self-check that recomputes its advertised counts from scratch.
//!
//! Labelings are part of the contract so that witnesses are reproducible:
//! parts are laid out as consecutive label ranges, in part order, with
//! larger parts (and larger subparts) first.

mod inequalities;

pub use inequalities::{
    check_perturbed_product, check_min_product, check_product_decrease, InequalityReport, Scalar,
};

use crate::error::{domain, Error, Result};
use crate::graph::{named, Graph};
use serde::Serialize;

/// Sizes of an equitable partition of `total` into `parts`, larger first.
pub fn balanced_parts(total: usize, parts: usize) -> Vec<usize> {
    let (q, rem) = (total / parts, total % parts);
    (0..parts).map(|i| q + usize::from(i < rem)).collect()
}

fn ranges(sizes: &[usize], start: usize) -> Vec<std::ops::Range<usize>> {
    let mut at = start;
    sizes
        .iter()
        .map(|&s| {
            let r = at..at + s;
            at += s;
            r
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TuranSpec {
    pub n: usize,
    pub r: usize,
}

impl TuranSpec {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r > n {
            return domain(format!("Turán graph needs 1 <= r <= n, got n = {n}, r = {r}"));
        }
        Ok(TuranSpec { n, r })
    }
}

/// `t_r(n)`, the edge count of the balanced complete `r`-partite graph.
pub fn turan_number(n: usize, r: usize) -> Result<u64> {
    let spec = TuranSpec::new(n, r)?;
    let sizes = balanced_parts(spec.n, spec.r);
    let sq: u64 = sizes.iter().map(|&s| (s * s) as u64).sum();
    Ok(((n * n) as u64 - sq) / 2)
}

pub fn turan_graph(spec: &TuranSpec) -> Graph {
    named::complete_multipartite(&balanced_parts(spec.n, spec.r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JointExtremalSpec {
    pub n: usize,
    pub r: usize,
    /// Size of the special part `V_0`; `s = 1` gives the single-vertex version.
    pub s: usize,
}

impl JointExtremalSpec {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self> {
        if r < 2 {
            return domain(format!("need r >= 2, got {r}"));
        }
        if s == 0 || s >= n {
            return domain(format!("need n > s >= 1, got n = {n}, s = {s}"));
        }
        if n - s < r {
            return domain(format!("need at least r = {r} vertices outside V_0, got {}", n - s));
        }
        Ok(JointExtremalSpec { n, r, s })
    }
}

/// A joint-extremal graph together with its partition.
#[derive(Clone, Debug, Serialize)]
pub struct JointExtremal {
    pub spec: JointExtremalSpec,
    pub graph: Graph,
    /// `parts[i][j]` lists the vertices of subpart `V_{i,j}`; for `s = 1`
    /// the outer parts are not subdivided and `parts[i]` has one entry.
    pub parts: Vec<Vec<Vec<usize>>>,
    /// `e(G) - t_r(n)`; zero for `s = 1`.
    pub edge_surplus: i64,
}

/// Builds `G_{n,r}(s)`.
///
/// For `s = 1` the special vertex is 0, the parts `V_1..V_r` balance the
/// remaining `n - 1` vertices, and vertex 0 is joined to the first `d_i`
/// vertices of `V_i`, where the `d_i` split `t_r(n) - t_r(n-1)` as evenly as
/// possible with earlier parts taking the ceiling. This makes the edge count
/// exactly `t_r(n)`.
///
/// For `s >= 2`, `V_0 = 0..s` is balanced complete `r`-partite on its
/// subparts, `V_1..V_r` are complete to each other, and `V_{0,j}` is
/// complete to `V_{i,j'}` exactly when `j != j'`. No edge adjustment is made.
pub fn joint_extremal(spec: &JointExtremalSpec) -> Result<JointExtremal> {
    let JointExtremalSpec { n, r, s } = *spec;
    let tn = turan_number(n, r)?;
    if s == 1 {
        let outer = ranges(&balanced_parts(n - 1, r), 1);
        let base = turan_number(n - 1, r)?;
        let need = (tn - base) as usize;
        let shares = balanced_parts(need, r);
        let mut graph = Graph::empty(n);
        for (i, a) in outer.iter().enumerate() {
            for b in outer.iter().skip(i + 1) {
                for u in a.clone() {
                    for v in b.clone() {
                        graph.add_edge(u, v);
                    }
                }
            }
        }
        for (part, &d) in outer.iter().zip(&shares) {
            if d > part.len() {
                return Err(Error::Construction(format!(
                    "vertex 0 needs {d} neighbours in a part of size {}",
                    part.len()
                )));
            }
            for u in part.start..part.start + d {
                graph.add_edge(0, u);
            }
        }
        let parts = std::iter::once(vec![vec![0]])
            .chain(outer.into_iter().map(|p| vec![p.collect()]))
            .collect();
        return Ok(JointExtremal { spec: *spec, graph, parts, edge_surplus: 0 });
    }

    let mut sizes = vec![s];
    sizes.extend(balanced_parts(n - s, r));
    let outer = ranges(&sizes, 0);
    let parts: Vec<Vec<Vec<usize>>> = outer
        .iter()
        .map(|p| {
            ranges(&balanced_parts(p.len(), r), p.start)
                .into_iter()
                .map(|sub| sub.collect())
                .collect()
        })
        .collect();
    let mut graph = Graph::empty(n);
    // Inside V_0: complete r-partite on its subparts.
    for (j, a) in parts[0].iter().enumerate() {
        for b in &parts[0][j + 1..] {
            for &u in a {
                for &v in b {
                    graph.add_edge(u, v);
                }
            }
        }
    }
    for (i, a) in outer.iter().enumerate().skip(1) {
        for b in outer.iter().skip(i + 1) {
            for u in a.clone() {
                for v in b.clone() {
                    graph.add_edge(u, v);
                }
            }
        }
    }
    for (j, sub0) in parts[0].iter().enumerate() {
        for part in &parts[1..] {
            for (jj, sub) in part.iter().enumerate() {
                if j == jj {
                    continue;
                }
                for &u in sub0 {
                    for &v in sub {
                        graph.add_edge(u, v);
                    }
                }
            }
        }
    }
    let edge_surplus = graph.edge_count() as i64 - tn as i64;
    Ok(JointExtremal { spec: *spec, graph, parts, edge_surplus })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrismBlowupSpec {
    pub n: usize,
    pub j: usize,
}

impl PrismBlowupSpec {
    pub fn new(n: usize, j: usize) -> Result<Self> {
        if j == 0 {
            return domain("prism blow-up needs j >= 1");
        }
        if n < 4 * j + 2 {
            return domain(format!("prism blow-up needs n >= 4j + 2 = {}, got {n}", 4 * j + 2));
        }
        Ok(PrismBlowupSpec { n, j })
    }

    /// Part sizes for prism vertices `0..6`: the matching edge `0 ~ 3`
    /// gets `floor((n-4j)/2)` and `ceil((n-4j)/2)`, the rest get `j`.
    pub fn part_sizes(&self) -> [usize; 6] {
        let rest = self.n - 4 * self.j;
        let j = self.j;
        [rest / 2, j, j, rest.div_ceil(2), j, j]
    }
}

/// `S_{j,n}`: the 3-prism (triangles `{0,1,2}`, `{3,4,5}`, matching
/// `i ~ i+3`) blown up by [`PrismBlowupSpec::part_sizes`].
pub fn prism_blowup(spec: &PrismBlowupSpec) -> Graph {
    named::prism().blow_up(&spec.part_sizes()).expect("six part sizes")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PendantCliqueSpec {
    pub k: usize,
    pub ell: usize,
}

impl PendantCliqueSpec {
    pub fn new(k: usize, ell: usize) -> Result<Self> {
        if k < 2 {
            return domain(format!("pendant clique needs k >= 2, got {k}"));
        }
        Ok(PendantCliqueSpec { k, ell })
    }

    /// The choice `ell = (k^2 + k) / 2`.
    pub fn balanced(k: usize) -> Result<Self> {
        Self::new(k, (k * k + k) / 2)
    }
}

/// `T(k, ell)`: clique on `0..k`, vertex 0 joined to pendants `k..k+ell`.
pub fn pendant_clique(spec: &PendantCliqueSpec) -> Graph {
    let mut g = Graph::empty(spec.k + spec.ell);
    for u in 0..spec.k {
        for v in u + 1..spec.k {
            g.add_edge(u, v);
        }
    }
    for p in spec.k..spec.k + spec.ell {
        g.add_edge(0, p);
    }
    g
}

/// One expected-versus-computed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Option<u64>,
    pub computed: u64,
    pub pass: bool,
}

impl Check {
    pub fn exact(name: &str, expected: u64, computed: u64) -> Self {
        Check { name: name.into(), expected: Some(expected), computed, pass: expected == computed }
    }

    pub fn at_most(name: &str, bound: u64, computed: u64) -> Self {
        Check { name: format!("{name} <= bound"), expected: Some(bound), computed, pass: computed <= bound }
    }

    pub fn at_least(name: &str, bound: u64, computed: u64) -> Self {
        Check { name: format!("{name} >= bound"), expected: Some(bound), computed, pass: computed >= bound }
    }

    /// Recorded value with nothing to compare against.
    pub fn info(name: &str, computed: u64) -> Self {
        Check { name: name.into(), expected: None, computed, pass: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub name: String,
    pub params: serde_json::Value,
    pub n: usize,
    pub edges: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ConstructionReport {
    fn new(name: &str, params: serde_json::Value, g: &Graph, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        ConstructionReport { name: name.into(), params, n: g.n(), edges: g.edge_count(), checks, pass }
    }
}

fn ipow(base: u64, exp: usize) -> Result<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base)).ok_or(Error::Overflow("power"))
}

pub fn check_turan(spec: &TuranSpec) -> Result<(Graph, ConstructionReport)> {
    let g = turan_graph(spec);
    let mut checks = vec![Check::exact("edges = t_r(n)", turan_number(spec.n, spec.r)?, g.edge_count() as u64)];
    if spec.r < spec.n {
        checks.push(Check::exact("copies of K_{r+1}", 0, g.count_cliques(spec.r + 1)?.total));
    }
    let report = ConstructionReport::new("turan", serde_json::json!(spec), &g, checks);
    Ok((g, report))
}

/// Builds `G_{n,r}(s)` and compares it with the closed forms, which apply
/// when `s = 1` and `n = 1 (mod r^2)`; otherwise counts are only recorded.
pub fn check_joint_extremal(spec: &JointExtremalSpec) -> Result<(JointExtremal, ConstructionReport)> {
    let built = joint_extremal(spec)?;
    let g = &built.graph;
    let JointExtremalSpec { n, r, s } = *spec;
    let tn = turan_number(n, r)?;
    let cliques = g.count_cliques(r + 1)?.total;
    let joint = g.joint_number(r + 1)?.size;
    let mut checks = Vec::new();
    if s == 1 {
        checks.push(Check::exact("edges = t_r(n)", tn, g.edge_count() as u64));
    } else {
        checks.push(Check::info("edges", g.edge_count() as u64));
        checks.push(Check::info("t_r(n)", tn));
    }
    if s == 1 && (n - 1) % (r * r) == 0 {
        let per_part = ((r - 1) * (n - 1) / (r * r)) as u64;
        checks.push(Check::exact("copies of K_{r+1}", ipow(per_part, r)?, cliques));
        checks.push(Check::exact("joint number j_{r+1}", ipow(per_part, r - 1)?, joint));
    } else {
        checks.push(Check::info("copies of K_{r+1}", cliques));
        checks.push(Check::info("joint number j_{r+1}", joint));
    }
    let report = ConstructionReport::new("joint-extremal", serde_json::json!(spec), g, checks);
    Ok((built, report))
}

/// Builds `S_{j,n}` and checks its edge count against the prism-weighted
/// product sum, `j^2 (n - 4j)` triangles, and the per-edge triangle
/// maximum `max(j, ceil((n-4j)/2))`, which is at most `j` once `6j >= n`.
pub fn check_prism_blowup(spec: &PrismBlowupSpec) -> Result<(Graph, ConstructionReport)> {
    let g = prism_blowup(spec);
    let (n, j) = (spec.n as u64, spec.j as u64);
    let sizes = spec.part_sizes().map(|x| x as u64);
    let weighted: u64 = named::prism().edges().map(|(a, b)| sizes[a] * sizes[b]).sum();
    let per_edge = g.joint_number(3)?.size;
    let mut checks = vec![
        Check::exact("edges", weighted, g.edge_count() as u64),
        Check::at_least("edges", n * n / 4, g.edge_count() as u64),
        Check::exact("triangles", j * j * (n - 4 * j), g.count_cliques(3)?.total),
        Check::exact("max triangles on an edge", j.max(sizes[3]), per_edge),
    ];
    if 6 * j >= n {
        checks.push(Check::at_most("max triangles on an edge", j, per_edge));
    }
    let report = ConstructionReport::new("prism", serde_json::json!(spec), &g, checks);
    Ok((g, report))
}

pub fn check_pendant_clique(spec: &PendantCliqueSpec) -> (Graph, ConstructionReport) {
    let g = pendant_clique(spec);
    let (k, ell) = (spec.k as u64, spec.ell as u64);
    let mut checks = vec![
        Check::exact("vertices h = k + ell", k + ell, g.n() as u64),
        Check::exact("edges m = C(k,2) + ell", k * (k - 1) / 2 + ell, g.edge_count() as u64),
    ];
    if 2 * ell == k * k + k {
        checks.push(Check::exact("h = (k^2 + 3k)/2", (k * k + 3 * k) / 2, g.n() as u64));
        checks.push(Check::exact("m = k^2", k * k, g.edge_count() as u64));
    }
    let report = ConstructionReport::new("pendant-clique", serde_json::json!(spec), &g, checks);
    (g, report)
}
