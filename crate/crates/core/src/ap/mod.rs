//! Arithmetic progressions in `[n] = {1, ..., n}`: difference-restricted
//! families, the independent-AP finder and its reductions for rainbow
//! progressions and set mappings.
//!
//! Integer `i` of `[n]` is vertex `i - 1` of the graph.

mod coloring;

pub use coloring::{sr_exact, tk_check, IntColoring, DEFAULT_NODE_BUDGET};

use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The progression `a, a + d, ..., a + (k-1) d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Progression {
    pub a: usize,
    pub d: usize,
    pub k: usize,
}

impl Progression {
    pub fn new(a: usize, d: usize, k: usize) -> Result<Self> {
        if a == 0 || d == 0 || k == 0 {
            return domain(format!("progression needs a, d, k >= 1, got ({a}, {d}, {k})"));
        }
        Ok(Progression { a, d, k })
    }

    pub fn last(&self) -> usize {
        self.a + (self.k - 1) * self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.k).map(move |i| self.a + i * self.d)
    }

    pub fn fits(&self, n: usize) -> bool {
        self.a >= 1 && self.last() <= n
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|t| t.to_string()).collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// First term in `[n/2]`, difference coprime to every prime `<= k`
    /// and at most `n/(2k)`.
    Coprime,
    /// Any fitting progression with prime difference.
    Prime,
    /// Every fitting progression.
    All,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coprime" | "a" | "A" => Ok(Family::Coprime),
            "prime" | "b" | "B" => Ok(Family::Prime),
            "all" => Ok(Family::All),
            _ => domain(format!("unknown family `{s}` (expected coprime, prime or all)")),
        }
    }
}

pub fn primes_up_to(n: usize) -> Vec<usize> {
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p);
            for q in (p * p..=n).step_by(p) {
                composite[q] = true;
            }
        }
    }
    primes
}

/// The `x` in `[n]` with no prime factor `<= k`, ascending.
pub fn coprime_survivors(n: usize, k: usize) -> Vec<usize> {
    let mut alive = vec![true; n + 1];
    for p in primes_up_to(k) {
        for q in (p..=n).step_by(p) {
            alive[q] = false;
        }
    }
    (1..=n).filter(|&x| alive[x]).collect()
}

fn check_shape(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return domain(format!("progression length must be at least 2, got {k}"));
    }
    if k > n {
        return domain(format!("length k = {k} exceeds n = {n}"));
    }
    Ok(())
}

fn differences(n: usize, k: usize, family: Family) -> Vec<usize> {
    match family {
        Family::Coprime => coprime_survivors(n / (2 * k), k),
        Family::Prime => primes_up_to((n - 1) / (k - 1)),
        Family::All => (1..=(n - 1) / (k - 1)).collect(),
    }
}

fn starts(n: usize, k: usize, d: usize, family: Family) -> usize {
    match family {
        Family::Coprime => n / 2,
        Family::Prime | Family::All => n - (k - 1) * d,
    }
}

/// Progressions of `family` in `(d, a)` lexicographic order.
pub fn family(n: usize, k: usize, family: Family) -> Result<impl Iterator<Item = Progression>> {
    check_shape(n, k)?;
    Ok(differences(n, k, family)
        .into_iter()
        .flat_map(move |d| (1..=starts(n, k, d, family)).map(move |a| Progression { a, d, k })))
}

pub fn family_a(n: usize, k: usize) -> Result<impl Iterator<Item = Progression>> {
    family(n, k, Family::Coprime)
}

pub fn family_b(n: usize, k: usize) -> Result<impl Iterator<Item = Progression>> {
    family(n, k, Family::Prime)
}

pub fn family_size(n: usize, k: usize, fam: Family) -> Result<u64> {
    check_shape(n, k)?;
    Ok(differences(n, k, fam).into_iter().map(|d| starts(n, k, d, fam) as u64).sum())
}

/// Upper bound on the number of family members through any two integers,
/// ignoring the boundary of `[n]`: a pair at distance `j d` occupies
/// `k - j` positions of a progression with difference `d`.
pub fn pair_multiplicity_bound(n: usize, k: usize, fam: Family) -> Result<u64> {
    check_shape(n, k)?;
    let mut by_gap = vec![0u64; n];
    for d in differences(n, k, fam) {
        for j in 1..k {
            if j * d < n {
                by_gap[j * d] += (k - j) as u64;
            }
        }
    }
    Ok(by_gap.into_iter().max().unwrap_or(0))
}

/// The largest number of family members containing a common pair, by
/// direct count over the family.
pub fn max_pair_coverage(n: usize, k: usize, fam: Family) -> Result<u64> {
    let mut count = vec![u16::MIN; n * n];
    let mut best = 0;
    for p in family(n, k, fam)? {
        let terms: Vec<usize> = p.terms().map(|t| t - 1).collect();
        for (i, &x) in terms.iter().enumerate() {
            for &y in &terms[i + 1..] {
                let c = &mut count[x * n + y];
                *c += 1;
                best = best.max(*c);
            }
        }
    }
    Ok(best as u64)
}

/// The counting comparison behind the existence of an independent member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counting {
    pub family_size: u64,
    pub edges: u64,
    /// [`pair_multiplicity_bound`] for the family.
    pub pair_multiplicity: u64,
    /// `e(G) * max(k, pair_multiplicity)`: no more members than this can
    /// contain an edge.
    pub edges_hit: u64,
}

impl Counting {
    /// Whether the count alone forces an independent member.
    pub fn guarantees(&self) -> bool {
        self.edges_hit < self.family_size
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApOutcome {
    pub family: Family,
    pub counting: Counting,
    /// First qualifying member in family order; `None` when exhausted.
    pub witness: Option<Progression>,
}

fn is_independent(g: &Graph, p: &Progression, banned: Option<&VertexSet>) -> bool {
    let terms: Vec<usize> = p.terms().map(|t| t - 1).collect();
    terms.iter().enumerate().all(|(i, &x)| {
        banned.is_none_or(|b| !b.contains(x)) && terms[i + 1..].iter().all(|&y| !g.has_edge(x, y))
    })
}

fn search(g: &Graph, k: usize, fam: Family, banned: Option<&VertexSet>) -> Result<ApOutcome> {
    let n = g.n();
    check_shape(n, k)?;
    let family_size = family_size(n, k, fam)?;
    let pair_multiplicity = pair_multiplicity_bound(n, k, fam)?;
    let edges = g.edge_count() as u64;
    let edges_hit = edges
        .checked_mul(pair_multiplicity.max(k as u64))
        .ok_or(Error::Overflow("edges hit by the family"))?;
    let counting = Counting { family_size, edges, pair_multiplicity, edges_hit };

    let witness = differences(n, k, fam).par_iter().find_map_first(|&d| {
        (1..=starts(n, k, d, fam))
            .map(|a| Progression { a, d, k })
            .find(|p| is_independent(g, p, banned))
    });
    let unbanned = banned.is_none_or(|b| b.is_empty());
    if witness.is_none() && unbanned && counting.guarantees() {
        return Err(Error::Invariant(format!(
            "no independent progression although {} < {}",
            counting.edges_hit, counting.family_size
        )));
    }
    Ok(ApOutcome { family: fam, counting, witness })
}

/// Definition-level check: every term lies in `[n]` and no two terms are
/// adjacent.
pub fn validate_independent(g: &Graph, p: &Progression) -> bool {
    let terms: Vec<usize> = p.terms().collect();
    p.fits(g.n())
        && g.edges().all(|(u, v)| !(terms.contains(&(u + 1)) && terms.contains(&(v + 1))))
}

/// First member of `fam` whose terms are pairwise non-adjacent in `g`.
///
/// Errors if the counting comparison promises a member but none exists.
pub fn find_independent_ap(g: &Graph, k: usize, fam: Family) -> Result<ApOutcome> {
    let out = search(g, k, fam, None)?;
    if let Some(p) = &out.witness {
        if !validate_independent(g, p) {
            return Err(Error::Invariant(format!("{p} is not independent")));
        }
    }
    Ok(out)
}

/// A `k`-term progression whose terms all get distinct colours, found as
/// an independent progression of the same-colour graph.
pub fn rainbow_ap_witness(c: &IntColoring, k: usize) -> Result<ApOutcome> {
    let n = c.n();
    let mut g = Graph::empty(n);
    for class in c.classes() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                g.add_edge(u - 1, v - 1);
            }
        }
    }
    let out = search(&g, k, Family::All, None)?;
    if let Some(p) = &out.witness {
        if !c.is_rainbow(p) {
            return Err(Error::Invariant(format!("{p} is not rainbow")));
        }
    }
    Ok(out)
}

/// Validates a permutation of `[n]` given as the images `pi(1), ..., pi(n)`.
pub fn check_permutation(pi: &[usize]) -> Result<()> {
    let n = pi.len();
    let mut seen = vec![false; n + 1];
    for (i, &x) in pi.iter().enumerate() {
        if x == 0 || x > n || seen[x] {
            return domain(format!("not a permutation of [{n}]: position {} maps to {x}", i + 1));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Definition-level check that `pi(i)` lies outside `p` for every term `i`.
pub fn validate_set_mapping(pi: &[usize], p: &Progression) -> bool {
    let terms: Vec<usize> = p.terms().collect();
    p.fits(pi.len()) && terms.iter().all(|&i| !terms.contains(&pi[i - 1]))
}

/// A `k`-term progression `A` with `pi(i)` outside `A` for all `i` in `A`.
/// Fixed points of `pi` can never belong to `A`.
pub fn set_mapping_ap(pi: &[usize], k: usize) -> Result<ApOutcome> {
    check_permutation(pi)?;
    let n = pi.len();
    let mut g = Graph::empty(n);
    let mut banned = VertexSet::new(n);
    for (i, &x) in pi.iter().enumerate() {
        let (u, v) = (i, x - 1);
        if u == v {
            banned.insert(u);
        } else if !g.has_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    let out = search(&g, k, Family::All, Some(&banned))?;
    if let Some(p) = &out.witness {
        if !validate_set_mapping(pi, p) {
            return Err(Error::Invariant(format!("{p} meets its own image")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
