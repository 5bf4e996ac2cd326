//! Finite-prefix checks for dense `K_{s,t}`-free graphs on the naturals.
//!
//! An infinite graph is modelled by a [`PrefixStream`]; statements are
//! evaluated on its prefixes `G_n`. Logarithms here are natural.

use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::multiplicity::binomial;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Vertices in arrival order, each with its edges back to earlier ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixStream {
    back: Vec<Vec<usize>>,
}

impl PrefixStream {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a vertex adjacent to the given earlier vertices.
    pub fn push(&mut self, mut back: Vec<usize>) -> Result<()> {
        let i = self.back.len();
        back.sort_unstable();
        back.dedup();
        if let Some(&j) = back.iter().find(|&&j| j >= i) {
            return domain(format!("vertex {i} lists {j}, which is not an earlier vertex"));
        }
        self.back.push(back);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.back.len()
    }

    pub fn is_empty(&self) -> bool {
        self.back.is_empty()
    }

    /// The stream ordering the vertices of `g` by label.
    pub fn from_graph(g: &Graph) -> Self {
        PrefixStream { back: (0..g.n()).map(|v| g.neighbors(v).iter().take_while(|&u| u < v).collect()).collect() }
    }

    pub fn empty(n: usize) -> Self {
        PrefixStream { back: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        PrefixStream { back: (0..n).map(|v| (0..v).collect()).collect() }
    }

    /// Vertices `2i` and `2i + 1` joined, nothing else.
    pub fn disjoint_edges(n: usize) -> Self {
        PrefixStream { back: (0..n).map(|v| if v % 2 == 1 { vec![v - 1] } else { Vec::new() }).collect() }
    }

    /// `G_n`: the graph induced on the first `n` vertices.
    pub fn prefix(&self, n: usize) -> Result<Graph> {
        if n > self.len() {
            return domain(format!("stream has {} vertices, {n} requested", self.len()));
        }
        let mut g = Graph::empty(n);
        for (v, back) in self.back[..n].iter().enumerate() {
            for &u in back {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// One line per vertex listing its back-neighbours; `#` starts a
    /// comment line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for back in &self.back {
            let line: Vec<String> = back.iter().map(|u| u.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).expect("write to string");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut stream = PrefixStream::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            let back = line
                .split_whitespace()
                .map(|tok| tok.parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex `{tok}`") }))
                .collect::<Result<Vec<usize>>>()?;
            stream.push(back).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        }
        Ok(stream)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSumReport {
    pub s: usize,
    pub t: usize,
    pub block_size: usize,
    /// `sum_v C(d_v, s)` over all vertices, `d_v` = neighbours in the block.
    pub lhs: u64,
    /// `(t - 1) C(|block|, s)`.
    pub rhs: u64,
    pub kst_free: bool,
}

impl DegreeSumReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    /// The graph is `K_{s,t}`-free yet the inequality fails.
    pub fn violated(&self) -> bool {
        self.kst_free && !self.holds()
    }
}

/// Both sides of `sum_v C(d_v, s) <= (t - 1) C(n, s)` for the given block
/// (all vertices by default). The inequality is guaranteed only for
/// `K_{s,t}`-free graphs; otherwise the sides are just reported.
pub fn degree_sum_check(g: &Graph, s: usize, t: usize, block: Option<&[usize]>) -> Result<DegreeSumReport> {
    let kst_free = g.is_kst_free(s, t)?.free;
    let block = match block {
        Some(b) => {
            if let Some(&v) = b.iter().find(|&&v| v >= g.n()) {
                return domain(format!("block vertex {v} is outside the graph"));
            }
            VertexSet::from_iter_with(g.n(), b.iter().copied())
        }
        None => VertexSet::full(g.n()),
    };
    let overflow = || Error::Overflow("degree sum");
    let mut lhs = 0u64;
    for v in 0..g.n() {
        let d = g.neighbors(v).intersection_len(&block) as u64;
        lhs = lhs.checked_add(binomial(d, s as u64).ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    let rhs = binomial(block.len() as u64, s as u64)
        .and_then(|b| b.checked_mul(t as u64 - 1))
        .ok_or_else(overflow)?;
    Ok(DegreeSumReport { s, t, block_size: block.len(), lhs, rhs, kst_free })
}

/// `E_l` for blocks `I_l = [(l-1) n, l n)`: edges between `I_1` and `I_l`,
/// with `E_1` counting the edges inside `I_1` twice; `F_l = E_1 + ... + E_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStats {
    pub n: usize,
    pub e: Vec<u64>,
    pub f: Vec<u64>,
}

pub fn block_stats(stream: &PrefixStream, n: usize, blocks: usize) -> Result<BlockStats> {
    if n == 0 || blocks == 0 {
        return domain("block width and block count must be positive");
    }
    let g = stream.prefix(n.checked_mul(blocks).ok_or(Error::Overflow("prefix length"))?)?;
    let mut e = vec![0u64; blocks];
    for v in 0..n {
        for u in g.neighbors(v).iter() {
            e[u / n] += 1;
        }
    }
    let f = e
        .iter()
        .scan(0u64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    Ok(BlockStats { n, e, f })
}

/// `16 t^{1/s} s (l n)^{1 - 1/s} / (ln n)^{1/s}`.
pub fn low_degree_threshold(s: usize, t: usize, n: usize, ell: usize) -> f64 {
    let (s, t, n, ell) = (s as f64, t as f64, n as f64, ell as f64);
    16.0 * t.powf(1.0 / s) * s * (ell * n).powf(1.0 - 1.0 / s) / n.ln().powf(1.0 / s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LowDegreeWitness {
    pub ell: usize,
    pub v: usize,
    /// Neighbours of `v` in `J_l = [0, l n)`.
    pub degree: usize,
    pub threshold: f64,
}

/// First `(l, v)` with `v in I_1` whose degree into `J_l` is below
/// [`low_degree_threshold`], scanning `l = 1..=blocks`.
pub fn low_degree_witness(stream: &PrefixStream, s: usize, t: usize, n: usize, blocks: usize) -> Result<Option<LowDegreeWitness>> {
    if n < 2 {
        return domain(format!("block width must be at least 2, got {n}"));
    }
    if blocks == 0 || blocks > n {
        return domain(format!("need 1 <= L <= n, got L = {blocks}, n = {n}"));
    }
    let g = stream.prefix(n * blocks)?;
    if let Some((a, b)) = g.is_kst_free(s, t)?.witness {
        return domain(format!("prefix contains K_{{{s},{t}}} on {a:?} and {b:?}"));
    }
    for ell in 1..=blocks {
        let span = VertexSet::from_iter_with(g.n(), 0..ell * n);
        let threshold = low_degree_threshold(s, t, n, ell);
        for v in 0..n {
            let degree = g.neighbors(v).intersection_len(&span);
            if (degree as f64) < threshold {
                return Ok(Some(LowDegreeWitness { ell, v, degree, threshold }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiminfPoint {
    pub n: usize,
    pub min_degree: usize,
    /// `delta(G_n) (ln n)^{1/s} / n^{1 - 1/s}`.
    pub statistic: f64,
    pub running_min: f64,
}

pub fn liminf_statistic(stream: &PrefixStream, s: usize, n_max: usize) -> Result<Vec<LiminfPoint>> {
    if s < 2 {
        return domain(format!("need s >= 2, got {s}"));
    }
    if n_max > stream.len() {
        return domain(format!("stream has {} vertices, {n_max} requested", stream.len()));
    }
    let mut degree = vec![0usize; n_max];
    let mut out: Vec<LiminfPoint> = Vec::new();
    for v in 0..n_max {
        for &u in &stream.back[v] {
            degree[u] += 1;
            degree[v] += 1;
        }
        let n = v + 1;
        if n < 2 {
            continue;
        }
        let min_degree = *degree[..n].iter().min().expect("nonempty prefix");
        let sf = s as f64;
        let statistic = min_degree as f64 * (n as f64).ln().powf(1.0 / sf) / (n as f64).powf(1.0 - 1.0 / sf);
        let running_min = out.last().map_or(statistic, |p| p.running_min.min(statistic));
        out.push(LiminfPoint { n, min_degree, statistic, running_min });
    }
    Ok(out)
}
