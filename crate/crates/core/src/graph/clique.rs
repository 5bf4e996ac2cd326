//! Exact clique counting, joints, maximum cliques and K_{s,t} detection.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCount {
    pub r: usize,
    pub total: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointReport {
    pub r: usize,
    /// Lexicographically smallest edge attaining `size`; absent when `size == 0`.
    pub best_edge: Option<(usize, usize)>,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstCheck {
    pub free: bool,
    /// An `s`-set and `t` common neighbours of it, when not free.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

fn checked_sum(parts: impl ParallelIterator<Item = Option<u64>>) -> Option<u64> {
    parts.try_reduce(|| 0u64, |a, b| a.checked_add(b))
}

/// Number of `k`-cliques inside `cand`, each counted once. Candidates are
/// extended only through `forward[u]`, which must orient every edge once.
fn count_in(forward: &[VertexSet], cand: &VertexSet, k: usize) -> Option<u64> {
    match k {
        0 => Some(1),
        1 => Some(cand.len() as u64),
        _ => {
            let mut total = 0u64;
            for u in cand.iter() {
                let next = cand.intersection(&forward[u]);
                if next.len() + 1 < k {
                    continue;
                }
                total = total.checked_add(count_in(forward, &next, k - 1)?)?;
            }
            Some(total)
        }
    }
}

impl Graph {
    /// Vertex order obtained by repeatedly removing a minimum-degree vertex
    /// (smallest label on ties).
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| deg[v]).unwrap();
            removed[v] = true;
            order.push(v);
            for u in self.neighbors(v).iter() {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        order
    }

    /// Forward neighbourhoods along the degeneracy order.
    fn forward_rows(&self) -> Vec<VertexSet> {
        let order = self.degeneracy_order();
        let mut pos = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        (0..self.n())
            .map(|v| {
                VertexSet::from_iter_with(
                    self.n(),
                    self.neighbors(v).iter().filter(|&u| pos[u] > pos[v]),
                )
            })
            .collect()
    }

    /// Exact number of `r`-vertex cliques.
    pub fn count_cliques(&self, r: usize) -> Result<CliqueCount> {
        if r == 0 || r > self.n() {
            return domain(format!("clique order r = {r} must satisfy 1 <= r <= n = {}", self.n()));
        }
        let total = if r == 1 {
            self.n() as u64
        } else {
            let forward = self.forward_rows();
            checked_sum((0..self.n()).into_par_iter().map(|v| count_in(&forward, &forward[v], r - 1)))
                .ok_or(Error::Overflow("clique count"))?
        };
        Ok(CliqueCount { r, total })
    }

    /// Number of `r`-cliques containing the edge `uv` (`r >= 2`).
    pub fn cliques_through_edge(&self, u: usize, v: usize, r: usize) -> Result<u64> {
        if r < 2 {
            return domain("joint order r must be at least 2");
        }
        if !self.has_edge(u, v) {
            return Ok(0);
        }
        let common = self.neighbors(u).intersection(self.neighbors(v));
        let forward = self.upper_rows();
        count_in(&forward, &common, r - 2).ok_or(Error::Overflow("joint size"))
    }

    fn upper_rows(&self) -> Vec<VertexSet> {
        (0..self.n())
            .map(|v| {
                let mut r = self.neighbors(v).clone();
                r.retain_above(v);
                r
            })
            .collect()
    }

    /// Largest number of `r`-cliques sharing one edge.
    pub fn joint_number(&self, r: usize) -> Result<JointReport> {
        if r < 2 {
            return domain("joint order r must be at least 2");
        }
        let forward = self.upper_rows();
        let edges = self.edge_list();
        let counts: Vec<Option<u64>> = edges
            .par_iter()
            .map(|&(u, v)| {
                let common = self.neighbors(u).intersection(self.neighbors(v));
                count_in(&forward, &common, r - 2)
            })
            .collect();
        let mut best = JointReport { r, best_edge: None, size: 0 };
        for (e, c) in edges.into_iter().zip(counts) {
            let c = c.ok_or(Error::Overflow("joint size"))?;
            if c > best.size {
                best.size = c;
                best.best_edge = Some(e);
            }
        }
        Ok(best)
    }

    /// A maximum clique, found by branch and bound with a greedy colouring
    /// bound. Deterministic: ties resolve toward the first clique reached.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let cand = VertexSet::full(self.n());
        if self.n() > 0 {
            self.expand_clique(cand, &mut current, &mut best);
        }
        best.sort_unstable();
        best
    }

    fn colour_sort(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut colours = Vec::with_capacity(cand.len());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(self.neighbors(v));
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand_clique(&self, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        let (order, colours) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if current.len() + colours[i] <= best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let next = cand.intersection(self.neighbors(v));
            if next.is_empty() {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                self.expand_clique(next, current, best);
            }
            current.pop();
            cand.remove(v);
        }
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    pub fn max_independent_set(&self) -> Vec<usize> {
        self.complement().max_clique()
    }

    /// α(G), as the clique number of the complement.
    pub fn independence_number(&self) -> usize {
        self.max_independent_set().len()
    }

    /// Whether no `s` vertices have `t` or more common neighbours.
    pub fn is_kst_free(&self, s: usize, t: usize) -> Result<KstCheck> {
        if s == 0 || s > t {
            return domain(format!("need 1 <= s <= t, got s = {s}, t = {t}"));
        }
        let mut chosen = Vec::with_capacity(s);
        let witness = self.kst_search(0, s, t, &VertexSet::full(self.n()), &mut chosen);
        Ok(KstCheck { free: witness.is_none(), witness })
    }

    fn kst_search(
        &self,
        from: usize,
        s: usize,
        t: usize,
        common: &VertexSet,
        chosen: &mut Vec<usize>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == s {
            return Some((chosen.clone(), common.iter().take(t).collect()));
        }
        for v in from..self.n() {
            let next = common.intersection(self.neighbors(v));
            if next.len() < t {
                continue;
            }
            chosen.push(v);
            if let Some(w) = self.kst_search(v + 1, s, t, &next, chosen) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
}
