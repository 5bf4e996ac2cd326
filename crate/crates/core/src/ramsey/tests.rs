use super::*;
use crate::graph::{named, non_isomorphic_graphs};

const BUDGET: u64 = 200_000_000;

fn value(h: &Graph) -> u64 {
    ramsey_exact(h, DEFAULT_CAP, BUDGET).unwrap().exact().expect("resolved")
}

#[test]
fn small_values() {
    assert_eq!(value(&named::path(3)), 3);
    assert_eq!(value(&Graph::complete(2)), 2);
    assert_eq!(value(&Graph::complete(3)), 6);
    assert_eq!(value(&named::cycle(4)), 6);
    assert_eq!(value(&named::star(3)), 6);
    assert_eq!(value(&named::path(4)), 5);
    assert_eq!(value(&named::paw()), 7);
    assert_eq!(value(&named::perfect_matching(2)), 5);
}

#[test]
fn conventions() {
    assert_eq!(value(&Graph::empty(0)), 1);
    assert_eq!(value(&Graph::empty(1)), 1);
    assert_eq!(value(&Graph::empty(3)), 3);
    // An isolated vertex only matters when it raises the vertex count.
    let mut k3_plus = Graph::empty(4);
    k3_plus.add_edge(0, 1);
    k3_plus.add_edge(1, 2);
    k3_plus.add_edge(0, 2);
    assert_eq!(value(&k3_plus), 6);
    let mut k2_plus = Graph::empty(3);
    k2_plus.add_edge(0, 1);
    assert_eq!(value(&k2_plus), 3);
}

#[test]
fn triangle_witness_is_the_pentagon() {
    let r = ramsey_exact(&Graph::complete(3), DEFAULT_CAP, BUDGET).unwrap();
    assert_eq!(r.witness.n(), 5);
    let red = r.witness.color_class(0);
    assert_eq!(red.edge_count(), 5);
    assert!((0..5).all(|v| red.degree(v) == 2) && red.is_connected());
    assert!(!has_mono_copy(&r.witness, &Graph::complete(3)).unwrap());
}

#[test]
fn k4_is_an_interval() {
    let r = ramsey_exact(&Graph::complete(4), 8, BUDGET).unwrap();
    assert_eq!((r.lower, r.upper), (9, None));
    assert!(!has_mono_copy(&r.witness, &Graph::complete(4)).unwrap());
    let r = ramsey_exact(&Graph::complete(3), 6, 10).unwrap();
    assert!(r.budget_exhausted && r.upper.is_none());
}

#[test]
fn symmetry_reductions_agree() {
    for n in 2..=4 {
        for h in non_isomorphic_graphs(n) {
            let core = h.strip_isolated();
            if core.edge_count() == 0 || h == Graph::complete(4) || core.edge_count() >= 5 {
                continue;
            }
            let full = ramsey_with(&h, 10, BUDGET, Symmetry::Full).unwrap();
            let swap = ramsey_with(&h, 10, BUDGET, Symmetry::ColorSwap).unwrap();
            assert_eq!((full.lower, full.upper), (swap.lower, swap.upper), "{h:?}");
            if swap.lower <= 6 {
                let plain = ramsey_with(&h, 10, BUDGET, Symmetry::None).unwrap();
                assert_eq!((plain.lower, plain.upper), (swap.lower, swap.upper), "{h:?}");
            }
        }
    }
}

#[test]
fn subgraph_monotonicity() {
    // Chain of subgraphs on four vertices.
    let chain = [named::perfect_matching(2), named::path(4), named::cycle(4), named::diamond()];
    let values: Vec<u64> = chain.iter().map(value).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
    assert!(value(&named::path(3)) <= value(&Graph::complete(3)));
}

#[test]
fn sandwich_examples() {
    let k3 = verify_sandwich(&Graph::complete(3), 0, DEFAULT_CAP, BUDGET).unwrap();
    assert!(k3.holds());
    assert_eq!((k3.h.exact(), k3.h_prime.exact()), (Some(6), Some(2)));
    let p3 = verify_sandwich(&named::path(3), 0, DEFAULT_CAP, BUDGET).unwrap();
    assert!(p3.holds());
    assert_eq!(p3.h.exact(), Some(3));
    let edge = verify_sandwich(&Graph::complete(2), 1, DEFAULT_CAP, BUDGET).unwrap();
    assert!(edge.holds());
    assert_eq!((edge.h.exact(), edge.h_prime.exact(), edge.v_h_prime), (Some(2), Some(1), 1));
    assert!(verify_sandwich(&Graph::complete(2), 2, DEFAULT_CAP, BUDGET).is_err());
}

#[test]
fn compare_intervals() {
    assert_eq!(compare_le(2, Some(3), 3, None), Verdict::Holds);
    assert_eq!(compare_le(5, None, 1, Some(4)), Verdict::Fails);
    assert_eq!(compare_le(13, None, 36, Some(36)), Verdict::Consistent);
}

#[test]
fn random_samples() {
    let s = sample_random_ramsey(3, 1.0, 5, 1, DEFAULT_CAP, BUDGET).unwrap();
    assert!(s.samples.iter().all(|x| (x.lower, x.upper) == (6, Some(6))));
    assert_eq!(s.spread_log, Some(0.0));
    let s = sample_random_ramsey(3, 0.0, 5, 1, DEFAULT_CAP, BUDGET).unwrap();
    assert!(s.samples.iter().all(|x| (x.lower, x.upper) == (1, Some(1))));
    let s = sample_random_ramsey(4, 0.5, 100, 11, 10, BUDGET).unwrap();
    assert_eq!(s.resolved + s.censored, 100);
    assert_eq!(s, sample_random_ramsey(4, 0.5, 100, 11, 10, BUDGET).unwrap());
}

