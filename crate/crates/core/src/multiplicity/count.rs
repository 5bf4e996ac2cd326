//! Counting copies of a pattern inside colour classes.

use super::EdgeColoring;
use crate::bitset::VertexSet;
use crate::constructions::PendantCliqueSpec;
use crate::error::{domain, Error, Result};
use crate::graph::{automorphism_count, Graph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoCount {
    pub per_color: Vec<u64>,
    pub total: u64,
}

impl MonoCount {
    fn from_counts(per_color: Vec<u64>) -> Result<Self> {
        let total = per_color
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("monochromatic copies"))?;
        Ok(MonoCount { per_color, total })
    }
}

pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k).try_fold(1u64, |acc, i| Some(acc.checked_mul(n - i)? / (i + 1)))
}

/// Matching order for embedding a pattern: every vertex after a component
/// root has an earlier neighbour, and `back[i]` lists those earlier
/// positions.
#[derive(Clone, Debug)]
pub(crate) struct EmbeddingPlan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl EmbeddingPlan {
    /// Plan whose order begins with `start`, then grows greedily by the
    /// vertex with most already-placed neighbours.
    pub(crate) fn new(h: &Graph, start: &[usize]) -> Self {
        let mut order: Vec<usize> = start.to_vec();
        let mut placed = VertexSet::from_iter_with(h.n(), start.iter().copied());
        while order.len() < h.n() {
            let next = (0..h.n())
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| (h.neighbors(v).intersection_len(&placed), h.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            placed.insert(next);
            order.push(next);
        }
        let back = (0..order.len())
            .map(|i| (0..i).filter(|&j| h.has_edge(order[j], order[i])).collect())
            .collect();
        EmbeddingPlan { order, back }
    }

    pub(crate) fn len(&self) -> usize {
        self.order.len()
    }

    /// Injective edge-preserving maps into `host` extending `images`,
    /// which assigns the first `images.len()` vertices of the order.
    pub(crate) fn count_from(&self, host: &Graph, images: &mut Vec<usize>) -> u64 {
        for (pos, &img) in images.iter().enumerate() {
            let prefix_ok = self.back[pos].iter().all(|&j| host.has_edge(images[j], img));
            if !prefix_ok || images[..pos].contains(&img) {
                return 0;
            }
        }
        if images.len() == self.len() {
            return 1;
        }
        let mut used = VertexSet::from_iter_with(host.n(), images.iter().copied());
        self.extend(host, images, &mut used)
    }

    /// Whether [`EmbeddingPlan::count_from`] would be nonzero.
    pub(crate) fn exists_from(&self, host: &Graph, images: &mut Vec<usize>) -> bool {
        for (pos, &img) in images.iter().enumerate() {
            let prefix_ok = self.back[pos].iter().all(|&j| host.has_edge(images[j], img));
            if !prefix_ok || images[..pos].contains(&img) {
                return false;
            }
        }
        let mut used = VertexSet::from_iter_with(host.n(), images.iter().copied());
        self.any(host, images, &mut used)
    }

    fn candidates(&self, host: &Graph, images: &[usize], used: &VertexSet) -> VertexSet {
        let i = images.len();
        let mut cand = match self.back[i].split_first() {
            None => VertexSet::full(host.n()),
            Some((&first, rest)) => {
                let mut c = host.neighbors(images[first]).clone();
                for &j in rest {
                    c.intersect_with(host.neighbors(images[j]));
                }
                c
            }
        };
        cand.difference_with(used);
        cand
    }

    fn any(&self, host: &Graph, images: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        if images.len() == self.len() {
            return true;
        }
        for w in self.candidates(host, images, used).iter() {
            images.push(w);
            used.insert(w);
            let found = self.any(host, images, used);
            used.remove(w);
            images.pop();
            if found {
                return true;
            }
        }
        false
    }

    fn extend(&self, host: &Graph, images: &mut Vec<usize>, used: &mut VertexSet) -> u64 {
        if images.len() == self.len() {
            return 1;
        }
        let mut total = 0;
        for w in self.candidates(host, images, used).iter() {
            images.push(w);
            used.insert(w);
            total += self.extend(host, images, used);
            used.remove(w);
            images.pop();
        }
        total
    }
}

fn check_pattern(h: &Graph) -> Result<()> {
    if h.n() == 0 {
        return domain("pattern has no vertices");
    }
    if let Some(v) = h.isolated_vertices().first() {
        return domain(format!("pattern has an isolated vertex {v}"));
    }
    Ok(())
}

/// Unlabelled copies of `h` (not necessarily induced) in `host`.
pub fn count_copies(host: &Graph, h: &Graph) -> Result<u64> {
    check_pattern(h)?;
    if h.n() > host.n() {
        return Ok(0);
    }
    let plan = EmbeddingPlan::new(h, &[]);
    let labelled: u64 = (0..host.n())
        .into_par_iter()
        .map(|root| plan.count_from(host, &mut vec![root]))
        .sum();
    Ok(labelled / automorphism_count(h))
}

/// Copies of `h` in every colour class of `c`.
pub fn count_mono(c: &EdgeColoring, h: &Graph) -> Result<MonoCount> {
    check_pattern(h)?;
    let per_color = (0..c.q())
        .map(|color| count_copies(&c.color_class(color), h))
        .collect::<Result<_>>()?;
    MonoCount::from_counts(per_color)
}

/// `h! / a * C(n, h)`: the copies of `h` in `K_n`.
pub fn copies_in_complete(h: &Graph, n: usize) -> Result<u64> {
    check_pattern(h)?;
    let hn = h.n() as u64;
    if hn > n as u64 {
        return Ok(0);
    }
    let falling = (0..hn)
        .try_fold(1u64, |acc, i| acc.checked_mul(n as u64 - i))
        .ok_or(Error::Overflow("labelled copies in K_n"))?;
    Ok(falling / automorphism_count(h))
}

fn for_each_clique(g: &Graph, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(g: &Graph, k: usize, cand: VertexSet, clique: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if clique.len() == k {
            f(clique);
            return;
        }
        for v in cand.iter() {
            let mut next = cand.intersection(g.neighbors(v));
            next.retain_above(v);
            clique.push(v);
            go(g, k, next, clique, f);
            clique.pop();
        }
    }
    go(g, k, VertexSet::full(g.n()), &mut Vec::with_capacity(k), f);
}

/// Copies of `T(k, ell)` in `host`: every `K_k` with a chosen vertex and
/// `ell` of that vertex's neighbours outside the clique. Each copy arises
/// `k` times when `ell = 0`, `ell + 1` times when `k = 2`, and once
/// otherwise.
pub fn count_pendant_copies(host: &Graph, spec: &PendantCliqueSpec) -> Result<u64> {
    let (k, ell) = (spec.k, spec.ell);
    let mut total = 0u64;
    let mut overflow = false;
    for_each_clique(host, k, &mut |clique| {
        for &x in clique {
            let free = (host.degree(x) - (k - 1)) as u64;
            match binomial(free, ell as u64).and_then(|b| total.checked_add(b)) {
                Some(t) => total = t,
                None => overflow = true,
            }
        }
    });
    if overflow {
        return Err(Error::Overflow("pendant-clique copies"));
    }
    let repeats = if ell == 0 {
        k
    } else if k == 2 {
        ell + 1
    } else {
        1
    };
    Ok(total / repeats as u64)
}

pub fn count_mono_pendant(c: &EdgeColoring, spec: &PendantCliqueSpec) -> Result<MonoCount> {
    let per_color = (0..c.q())
        .map(|color| count_pendant_copies(&c.color_class(color), spec))
        .collect::<Result<_>>()?;
    MonoCount::from_counts(per_color)
}
