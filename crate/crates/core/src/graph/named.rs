//! Small named graphs with fixed labelings.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `C_n` on `0..n` with edges `i ~ i+1 (mod n)`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(0, n - 1);
    g
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Complete multipartite graph; part `i` occupies a contiguous label range.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// `t` disjoint edges `(2i, 2i+1)`.
pub fn perfect_matching(t: usize) -> Graph {
    let mut g = Graph::empty(2 * t);
    for i in 0..t {
        g.add_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}

/// Point-line incidence graph of the Fano plane: points `0..7`, lines `7..14`.
pub fn fano_incidence() -> Graph {
    const LINES: [[usize; 3]; 7] =
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    let mut g = Graph::empty(14);
    for (l, pts) in LINES.iter().enumerate() {
        for &p in pts {
            g.add_edge(p, 7 + l);
        }
    }
    g
}

/// The 3-prism: triangles `{0,1,2}` and `{3,4,5}` with matching `i ~ i+3`.
pub fn prism() -> Graph {
    let mut g = Graph::empty(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)] {
        g.add_edge(u, v);
    }
    g
}

/// Clique on `0..4` minus the edge `{2, 3}`.
pub fn diamond() -> Graph {
    let mut g = Graph::complete(4);
    g.remove_edge(2, 3);
    g
}

/// Triangle `{0,1,2}` with a pendant vertex 3 attached to 0.
pub fn paw() -> Graph {
    let mut g = Graph::empty(4);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (0, 3)] {
        g.add_edge(u, v);
    }
    g
}

/// Looks up a pattern by short name (`k3`, `p4`, `c5`, `k2,3`, `star3`, `diamond`, ...).
pub fn by_name(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    let num = |prefix: &str| lower.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match lower.as_str() {
        "petersen" => return Some(petersen()),
        "fano" => return Some(fano_incidence()),
        "prism" => return Some(prism()),
        "diamond" | "k4-e" => return Some(diamond()),
        "paw" => return Some(paw()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once(',') {
            return Some(complete_bipartite(a.parse().ok()?, b.parse().ok()?));
        }
    }
    if let Some(n) = num("star") {
        return Some(star(n));
    }
    if let Some(n) = num("k") {
        return Some(Graph::complete(n));
    }
    if let Some(n) = num("p") {
        return Some(path(n));
    }
    if let Some(n) = num("c") {
        return (n >= 3).then(|| cycle(n));
    }
    if let Some(n) = num("e") {
        return Some(Graph::empty(n));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(fano_incidence().edge_count(), 21);
        assert_eq!(prism().edge_count(), 9);
        assert_eq!(paw().edge_count(), 4);
        assert_eq!(diamond().edge_count(), 5);
        assert_eq!(by_name("star3").unwrap(), star(3));
        assert_eq!(by_name("k12").unwrap(), Graph::complete(12));
        assert_eq!(by_name("k2,3").unwrap(), complete_bipartite(2, 3));
        assert_eq!(by_name("K3").unwrap(), Graph::complete(3));
        assert_eq!(by_name("p3").unwrap(), path(3));
        assert!(by_name("c2").is_none());
    }
}
