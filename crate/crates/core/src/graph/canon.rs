//! Canonical labelling by individualisation and refinement, automorphism
//! counting, and isomorph-free generation of small graphs.

use super::Graph;
use std::collections::BTreeMap;

/// Upper-triangle adjacency bits of the canonically relabelled graph,
/// prefixed by the vertex count. Equal codes iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode(Vec<u64>);

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let n = g.n();
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in c {
                let mut sig = vec![0; cells.len()];
                for u in g.neighbors(v).iter() {
                    sig[cell_of[u]] += 1;
                }
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_for(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut words = vec![n as u64];
    let mut acc = 0u64;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(order[i], order[j]) as u64;
            filled += 1;
            if filled == 64 {
                words.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        words.push(acc << (64 - filled));
    }
    words
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_for(g, &order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order));
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells.clone();
                let rest: Vec<usize> = cells[i].iter().copied().filter(|&u| u != v).collect();
                next.splice(i..=i, [vec![v], rest]);
                search(g, next, best);
            }
        }
    }
}

/// Canonical code and the ordering realising it: vertex `order[i]` of `g`
/// becomes vertex `i` of the canonical form.
pub fn canonical_form(g: &Graph) -> (CanonCode, Vec<usize>) {
    if g.n() == 0 {
        return (CanonCode(vec![0]), Vec::new());
    }
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut best = None;
    search(g, by_degree.into_values().collect(), &mut best);
    let (code, order) = best.expect("at least one leaf");
    (CanonCode(code), order)
}

pub fn canonical_code(g: &Graph) -> CanonCode {
    canonical_form(g).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.permuted(&perm)
}

/// |Aut(g)| by exhaustive backtracking over degree-preserving maps.
pub fn automorphism_count(g: &Graph) -> u64 {
    fn extend(g: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let v = image.len();
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
                used[w] = true;
                image.push(w);
                total += extend(g, image, used);
                image.pop();
                used[w] = false;
            }
        }
        total
    }
    extend(g, &mut Vec::with_capacity(g.n()), &mut vec![false; g.n()])
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical code. Built by one-vertex extension with
/// canonical deduplication.
pub fn non_isomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonCode, Graph> = BTreeMap::new();
    level.insert(canonical_code(&Graph::empty(0)), Graph::empty(0));
    for m in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..1 << (m - 1) {
                let mut h = Graph::empty(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, m - 1);
                    }
                }
                let (code, _) = canonical_form(&h);
                next.entry(code).or_insert_with(|| canonical_graph(&h));
            }
        }
        level = next;
    }
    level.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    #[test]
    fn class_counts_small_n() {
        // Number of unlabelled graphs on n vertices (OEIS A000088).
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(non_isomorphic_graphs(n).len(), e, "n = {n}");
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&named::petersen()), 120);
        assert_eq!(automorphism_count(&Graph::complete(5)), 120);
        assert_eq!(automorphism_count(&named::cycle(6)), 12);
        assert_eq!(automorphism_count(&named::path(4)), 2);
        assert_eq!(automorphism_count(&Graph::empty(0)), 1);
    }

    #[test]
    fn code_is_invariant_under_relabelling() {
        let g = named::petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        assert_ne!(canonical_code(&g), canonical_code(&named::cycle(10)));
        assert_eq!(canonical_graph(&g.permuted(&perm)), canonical_graph(&g));
    }
}
