//! `s`-connected matchings: pairwise disjoint edges `e_1, ..., e_t` with at
//! least `s` edges of the host between the endpoints of any `e_i`, `e_j`.

use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Whether `g` has no independent set of size 3.
pub fn alpha_at_most_2(g: &Graph) -> bool {
    g.n() < 3 || g.complement().count_cliques(3).map(|c| c.total == 0).unwrap_or(true)
}

/// Host edges between the endpoints of `e` and `f`.
pub fn connections(g: &Graph, e: (usize, usize), f: (usize, usize)) -> u8 {
    [(e.0, f.0), (e.0, f.1), (e.1, f.0), (e.1, f.1)]
        .iter()
        .filter(|&&(x, y)| x != y && g.has_edge(x, y))
        .count() as u8
}

fn disjoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCert {
    pub s: usize,
    pub edges: Vec<(usize, usize)>,
    /// `pairwise_counts[i][j]` = [`connections`] of edges `i` and `j`;
    /// zero on the diagonal.
    pub pairwise_counts: Vec<Vec<u8>>,
}

impl MatchingCert {
    /// Certificate for `edges`, checked against `g` from scratch.
    pub fn new(g: &Graph, s: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let cert = MatchingCert { s, pairwise_counts: counts(g, &edges), edges };
        cert.validate(g)?;
        Ok(cert)
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(msg));
        if self.pairwise_counts != counts(g, &self.edges) {
            return fail("recorded connection counts do not match the graph".into());
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e.0 >= g.n() || e.1 >= g.n() || !g.has_edge(e.0, e.1) {
                return fail(format!("{e:?} is not an edge"));
            }
            for (j, &f) in self.edges.iter().enumerate().skip(i + 1) {
                if !disjoint(e, f) {
                    return fail(format!("{e:?} and {f:?} share a vertex"));
                }
                if (self.pairwise_counts[i][j] as usize) < self.s {
                    return fail(format!("{e:?} and {f:?} have only {} connections", self.pairwise_counts[i][j]));
                }
            }
        }
        Ok(())
    }
}

fn counts(g: &Graph, edges: &[(usize, usize)]) -> Vec<Vec<u8>> {
    let in_range = |e: (usize, usize)| e.0 < g.n() && e.1 < g.n();
    edges
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            edges
                .iter()
                .enumerate()
                .map(|(j, &f)| if i == j || !in_range(e) || !in_range(f) { 0 } else { connections(g, e, f) })
                .collect()
        })
        .collect()
}

/// Graph on `pairs` joining two pairs when `joined` says so.
fn pair_graph(pairs: &[(usize, usize)], joined: impl Fn((usize, usize), (usize, usize)) -> bool + Sync) -> Graph {
    let rows: Vec<VertexSet> = (0..pairs.len())
        .into_par_iter()
        .map(|i| VertexSet::from_iter_with(pairs.len(), (0..pairs.len()).filter(|&j| j != i && joined(pairs[i], pairs[j]))))
        .collect();
    Graph::from_rows(rows).expect("symmetric relation")
}

/// A maximum `s`-connected matching: a maximum clique of the graph on
/// `E(g)` joining disjoint edges with at least `s` connections.
pub fn max_s_connected_matching(g: &Graph, s: usize) -> Result<MatchingCert> {
    if !(1..=4).contains(&s) {
        return domain(format!("connectivity s must be in 1..=4, got {s}"));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let compat = pair_graph(&edges, |e, f| disjoint(e, f) && connections(g, e, f) as usize >= s);
    let chosen = compat.max_clique().into_iter().map(|i| edges[i]).collect();
    MatchingCert::new(g, s, chosen)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairNeighborhoods {
    pub u: usize,
    pub v: usize,
    /// Vertices other than `u`, `v` adjacent to neither.
    pub a: Vec<usize>,
    /// Vertices other than `u`, `v` adjacent to at most one of them.
    pub b: Vec<usize>,
}

pub fn pair_neighborhoods(g: &Graph, u: usize, v: usize) -> Result<PairNeighborhoods> {
    if u == v || u >= g.n() || v >= g.n() {
        return domain(format!("need two distinct vertices of the graph, got {u} and {v}"));
    }
    let mut both = g.neighbors(u).intersection(g.neighbors(v));
    let mut either = g.neighbors(u).clone();
    either.union_with(g.neighbors(v));
    let mut a = VertexSet::full(g.n());
    a.difference_with(&either);
    let mut b = VertexSet::full(g.n());
    both.insert(u);
    both.insert(v);
    b.difference_with(&both);
    a.remove(u);
    a.remove(v);
    Ok(PairNeighborhoods { u, v, a: a.to_vec(), b: b.to_vec() })
}

/// `ceil(10 t^2 / n)` with `t = ceil((n - delta) / 2)`, the smallest matching
/// size for which the minimum degree bound `delta >= n - 2t` holds.
pub fn default_threshold(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let t = (n - g.min_degree()).div_ceil(2);
    (10 * t * t).div_ceil(n)
}

/// Auxiliary graph on a set `F` of host edges: two edges are joined when
/// they share a vertex or have at most `s - 1` connections, so independent
/// sets are `s`-connected matchings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuxGraph {
    pub s: usize,
    /// The edges kept in `F`, indexing the vertices of `graph`.
    pub pairs: Vec<(usize, usize)>,
    pub graph: Graph,
}

/// `F` holds the edges `(u, v)` with `|A_{u,v}| <= threshold`; `None` keeps
/// every edge.
pub fn auxiliary_graph(g: &Graph, s: usize, threshold: Option<usize>) -> Result<AuxGraph> {
    if !(2..=3).contains(&s) {
        return domain(format!("auxiliary graph needs s in {{2, 3}}, got {s}"));
    }
    let mut pairs = Vec::new();
    for (u, v) in g.edges() {
        if threshold.is_none_or(|t| pair_neighborhoods(g, u, v).map(|p| p.a.len() <= t).unwrap_or(false)) {
            pairs.push((u, v));
        }
    }
    let graph = pair_graph(&pairs, |e, f| !disjoint(e, f) || (connections(g, e, f) as usize) < s);
    Ok(AuxGraph { s, pairs, graph })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AuxMode {
    /// Repeatedly take a vertex of minimum remaining degree.
    Greedy,
    /// Maximum independent set.
    Exact,
}

impl std::str::FromStr for AuxMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(AuxMode::Greedy),
            "exact" => Ok(AuxMode::Exact),
            _ => domain(format!("unknown mode `{s}` (expected greedy or exact)")),
        }
    }
}

fn greedy_independent(g: &Graph) -> Vec<usize> {
    let mut alive = VertexSet::full(g.n());
    let mut chosen = Vec::new();
    while let Some(v) = alive.iter().min_by_key(|&v| (g.neighbors(v).intersection_len(&alive), v)) {
        chosen.push(v);
        alive.remove(v);
        alive.difference_with(g.neighbors(v));
    }
    chosen
}

/// An `s`-connected matching read off an independent set of the
/// auxiliary graph.
pub fn matching_via_aux(g: &Graph, s: usize, mode: AuxMode, threshold: Option<usize>) -> Result<MatchingCert> {
    let aux = auxiliary_graph(g, s, threshold)?;
    let independent = match mode {
        AuxMode::Greedy => greedy_independent(&aux.graph),
        AuxMode::Exact => aux.graph.max_independent_set(),
    };
    let mut edges: Vec<(usize, usize)> = independent.into_iter().map(|i| aux.pairs[i]).collect();
    edges.sort();
    MatchingCert::new(g, s, edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleStructure {
    /// Vertices (host edges) and edges of `H'`.
    pub vertices: usize,
    pub edges: usize,
    pub triangles: u64,
    /// Triangles whose three pairs are pairwise disjoint; the claim is
    /// that there are none.
    pub disjoint_triangles: u64,
    pub witness: Option<[(usize, usize); 3]>,
    /// `max |B_{u,v}|` over edges, against `2 (n - delta)`.
    pub max_b: usize,
    pub b_bound: usize,
}

impl TriangleStructure {
    pub fn holds(&self) -> bool {
        self.disjoint_triangles == 0 && self.max_b <= self.b_bound
    }
}

/// Enumerates the triangles of `H'` (the `s = 2` auxiliary graph on all
/// edges) and counts those made of three pairwise disjoint pairs; also
/// checks `|B_{u,v}| <= 2 (n - delta)` on every edge.
pub fn check_hprime_triangle_structure(g: &Graph) -> Result<TriangleStructure> {
    if !alpha_at_most_2(g) {
        return domain("the triangle structure needs independence number at most 2");
    }
    let aux = auxiliary_graph(g, 2, None)?;
    let h = &aux.graph;
    let (mut triangles, mut disjoint_triangles, mut witness) = (0u64, 0u64, None);
    for x in 0..h.n() {
        let mut later = h.neighbors(x).clone();
        later.retain_above(x);
        for y in later.iter() {
            let mut common = later.intersection(h.neighbors(y));
            common.retain_above(y);
            for z in common.iter() {
                triangles += 1;
                let (e, f, k) = (aux.pairs[x], aux.pairs[y], aux.pairs[z]);
                if disjoint(e, f) && disjoint(f, k) && disjoint(e, k) {
                    disjoint_triangles += 1;
                    witness.get_or_insert([e, f, k]);
                }
            }
        }
    }
    let max_b = g
        .edges()
        .map(|(u, v)| pair_neighborhoods(g, u, v).map(|p| p.b.len()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let b_bound = 2 * (g.n() - g.min_degree().min(g.n()));
    Ok(TriangleStructure {
        vertices: h.n(),
        edges: h.edge_count(),
        triangles,
        disjoint_triangles,
        witness,
        max_b,
        b_bound,
    })
}

/// Complement of a random maximal triangle-free graph: pairs are offered in
/// a seeded random order and kept when they close no triangle.
pub fn random_alpha_at_most_2(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut sparse = Graph::empty(n);
    for (u, v) in pairs {
        if sparse.neighbors(u).is_disjoint(sparse.neighbors(v)) {
            sparse.add_edge(u, v);
        }
    }
    sparse.complement()
}

#[cfg(test)]
mod tests;
