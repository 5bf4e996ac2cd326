use super::*;
use crate::graph::named;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Largest `s`-connected matching by trying every subset of edges.
fn brute_force(g: &Graph, s: usize) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    (0u32..1 << edges.len())
        .filter(|mask| {
            let chosen: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            chosen.iter().enumerate().all(|(i, &e)| {
                chosen[i + 1..].iter().all(|&f| {
                    let mut seen = [e.0, e.1, f.0, f.1];
                    seen.sort();
                    let distinct = seen.windows(2).all(|w| w[0] != w[1]);
                    let links = [(e.0, f.0), (e.0, f.1), (e.1, f.0), (e.1, f.1)]
                        .iter()
                        .filter(|&&(x, y)| g.has_edge(x, y))
                        .count();
                    distinct && links >= s
                })
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn alpha_examples() {
    assert!(alpha_at_most_2(&named::cycle(5)));
    assert!(alpha_at_most_2(&named::cycle(7).complement()));
    assert!(!alpha_at_most_2(&Graph::empty(3)));
    assert!(alpha_at_most_2(&Graph::empty(2)));
    assert!(!alpha_at_most_2(&named::cycle(7)));
}

#[test]
fn matching_examples() {
    for t in 1..=4 {
        assert_eq!(max_s_connected_matching(&Graph::complete(2 * t), 4).unwrap().size(), t);
    }
    let c5 = named::cycle(5);
    assert_eq!(max_s_connected_matching(&c5, 1).unwrap().size(), 2);
    assert_eq!(brute_force(&c5, 1), 2);
    assert_eq!(max_s_connected_matching(&named::perfect_matching(4), 1).unwrap().size(), 1);
    assert_eq!(max_s_connected_matching(&Graph::empty(4), 2).unwrap().size(), 0);
    assert!(max_s_connected_matching(&c5, 5).is_err());
}

#[test]
fn exact_matches_brute_force() {
    for seed in 0..25 {
        let g = random_graph(7, 0.5, seed);
        if g.edge_count() > 20 {
            continue;
        }
        for s in 1..=4 {
            assert_eq!(max_s_connected_matching(&g, s).unwrap().size(), brute_force(&g, s), "seed {seed} s {s}");
        }
    }
}

#[test]
fn neighborhood_examples() {
    let k5 = Graph::complete(5);
    let p = pair_neighborhoods(&k5, 0, 1).unwrap();
    assert!(p.a.is_empty() && p.b.is_empty());
    let c5 = named::cycle(5);
    let p = pair_neighborhoods(&c5, 0, 1).unwrap();
    assert_eq!((p.a.len(), p.b.len()), (1, 3));
    assert_eq!(p.a, vec![3]);
    assert!(pair_neighborhoods(&c5, 2, 2).is_err());
    // A_{u,v} is a clique when alpha <= 2.
    for seed in 0..10 {
        let g = random_alpha_at_most_2(11, seed);
        for (u, v) in g.edges() {
            let a = pair_neighborhoods(&g, u, v).unwrap().a;
            assert!(a.iter().enumerate().all(|(i, &x)| a[i + 1..].iter().all(|&y| g.has_edge(x, y))));
        }
    }
}

#[test]
fn aux_examples() {
    let aux = auxiliary_graph(&Graph::complete(4), 3, None).unwrap();
    for (i, &e) in aux.pairs.iter().enumerate() {
        for (j, &f) in aux.pairs.iter().enumerate() {
            if i != j {
                assert_eq!(aux.graph.has_edge(i, j), !disjoint(e, f));
            }
        }
    }
    let c5 = named::cycle(5);
    let aux = auxiliary_graph(&c5, 2, None).unwrap();
    let i = aux.pairs.iter().position(|&e| e == (0, 1)).unwrap();
    let j = aux.pairs.iter().position(|&e| e == (2, 3)).unwrap();
    assert_eq!(connections(&c5, (0, 1), (2, 3)), 1);
    assert!(aux.graph.has_edge(i, j));
    assert!(auxiliary_graph(&c5, 4, None).is_err());
}

#[test]
fn matching_via_aux_examples() {
    let g = named::cycle(7).complement();
    for s in [2, 3] {
        for mode in [AuxMode::Greedy, AuxMode::Exact] {
            let cert = matching_via_aux(&g, s, mode, None).unwrap();
            cert.validate(&g).unwrap();
            assert!(cert.size() >= 1);
            assert!(cert.size() <= max_s_connected_matching(&g, s).unwrap().size());
        }
        // Exact on all of E(G) is the true maximum.
        assert_eq!(
            matching_via_aux(&g, s, AuxMode::Exact, None).unwrap().size(),
            max_s_connected_matching(&g, s).unwrap().size()
        );
    }
    assert_eq!(matching_via_aux(&Graph::complete(6), 3, AuxMode::Exact, None).unwrap().size(), 3);
    assert_eq!(matching_via_aux(&Graph::empty(5), 2, AuxMode::Greedy, None).unwrap().size(), 0);
    let g = random_alpha_at_most_2(12, 4);
    let filtered = matching_via_aux(&g, 3, AuxMode::Greedy, Some(default_threshold(&g))).unwrap();
    filtered.validate(&g).unwrap();
}

#[test]
fn certificate_rejects_tampering() {
    let g = Graph::complete(6);
    let mut cert = max_s_connected_matching(&g, 4).unwrap();
    cert.validate(&g).unwrap();
    cert.pairwise_counts[0][1] = 3;
    assert!(cert.validate(&g).is_err());
    assert!(MatchingCert::new(&named::cycle(6), 2, vec![(0, 1), (3, 4)]).is_err());
    assert!(MatchingCert::new(&g, 1, vec![(0, 1), (1, 2)]).is_err());
}

#[test]
fn triangle_structure_examples() {
    let c5 = named::cycle(5);
    let r = check_hprime_triangle_structure(&c5.complement()).unwrap();
    assert!(r.holds());
    let r = check_hprime_triangle_structure(&named::petersen().complement()).unwrap();
    assert!(r.holds(), "{r:?}");
    assert!(r.triangles > 0);
    assert!(check_hprime_triangle_structure(&Graph::empty(4)).is_err());
}

#[test]
fn random_alpha2_graphs() {
    for seed in 0..30 {
        let g = random_alpha_at_most_2(10 + (seed as usize % 5), seed);
        assert!(alpha_at_most_2(&g));
        assert!(check_hprime_triangle_structure(&g).unwrap().holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn four_connected_is_clique(n in 1usize..=10, p in 0.2f64..0.95, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(max_s_connected_matching(&g, 4).unwrap().size(), g.clique_number() / 2);
    }

    #[test]
    fn sizes_shrink_with_s(n in 2usize..=9, p in 0.2f64..0.95, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let sizes: Vec<usize> = (1..=4).map(|s| max_s_connected_matching(&g, s).unwrap().size()).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] >= w[1]), "{:?}", sizes);
    }
}
