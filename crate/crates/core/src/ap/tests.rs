use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn is_prime(x: usize) -> bool {
    x >= 2 && (2..x).take_while(|p| p * p <= x).all(|p| !x.is_multiple_of(p))
}

/// Every fitting `k`-AP of `[n]`, in `(d, a)` order.
fn all_aps(n: usize, k: usize) -> Vec<Progression> {
    let mut out = Vec::new();
    for d in 1..n {
        for a in 1..=n {
            let p = Progression { a, d, k };
            if p.last() <= n {
                out.push(p);
            }
        }
    }
    out
}

fn random_graph(n: usize, edges: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    while g.edge_count() < edges {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    g
}

#[test]
fn coprime_survivor_examples() {
    assert_eq!(coprime_survivors(30, 5), vec![1, 7, 11, 13, 17, 19, 23, 29]);
    assert_eq!(coprime_survivors(10, 1).len(), 10);
    let sieve = coprime_survivors(100, 10);
    let oracle: Vec<usize> = (1..=100).filter(|&x| gcd(x, 210) == 1).collect();
    assert_eq!(sieve, oracle);
    // At least n / (10 log k).
    assert!(sieve.len() as f64 >= 0.1 * 100.0 / 10f64.ln());
}

#[test]
fn family_examples() {
    let b: Vec<Progression> = family_b(10, 3).unwrap().collect();
    assert!(b.contains(&Progression { a: 1, d: 2, k: 3 }));
    assert!(b.iter().all(|p| p.d == 2 || p.d == 3));

    let naive = all_aps(40, 4).into_iter().filter(|p| is_prime(p.d)).count();
    assert_eq!(family_b(40, 4).unwrap().count(), naive);
    assert_eq!(family_size(40, 4, Family::Prime).unwrap(), naive as u64);

    for (n, k) in [(100, 3), (301, 5), (64, 4)] {
        let x = coprime_survivors(n / (2 * k), k).len();
        assert_eq!(family_a(n, k).unwrap().count(), (n / 2) * x);
        assert_eq!(family_size(n, k, Family::Coprime).unwrap(), ((n / 2) * x) as u64);
    }
    assert_eq!(family(30, 4, Family::All).unwrap().collect::<Vec<_>>(), all_aps(30, 4));
    assert!(family(3, 4, Family::All).is_err());
}

#[test]
fn family_order_is_d_then_a() {
    for fam in [Family::Coprime, Family::Prime, Family::All] {
        let members: Vec<Progression> = family(120, 4, fam).unwrap().collect();
        assert!(members.windows(2).all(|w| (w[0].d, w[0].a) < (w[1].d, w[1].a)));
        assert!(members.iter().all(|p| p.fits(120)));
    }
}

#[test]
fn independent_ap_trivial_cases() {
    for k in 2..=6 {
        let out = find_independent_ap(&Graph::empty(20), k, Family::All).unwrap();
        assert_eq!(out.witness, Some(Progression { a: 1, d: 1, k }));
        let out = find_independent_ap(&Graph::complete(20), k, Family::All).unwrap();
        assert_eq!(out.witness, None);
    }
    assert!(find_independent_ap(&Graph::empty(3), 4, Family::All).is_err());
}

#[test]
fn independent_ap_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_graph(200, 50, &mut rng);
        for fam in [Family::Coprime, Family::Prime, Family::All] {
            let out = find_independent_ap(&g, 4, fam).unwrap();
            let scan = family(200, 4, fam).unwrap().find(|p| {
                let t: Vec<usize> = p.terms().collect();
                (0..4).all(|i| (i + 1..4).all(|j| !g.has_edge(t[i] - 1, t[j] - 1)))
            });
            assert_eq!(out.witness, scan);
            if out.counting.edges * 4 < out.counting.family_size {
                assert!(out.witness.is_some());
            }
        }
    }
}

#[test]
fn counting_certificate_forces_a_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 3..=5 {
        let size = family_size(150, k, Family::Coprime).unwrap() as usize;
        let edges = (size - 1) / k;
        let g = random_graph(150, edges.min(2000), &mut rng);
        let out = find_independent_ap(&g, k, Family::Coprime).unwrap();
        assert!(out.counting.guarantees());
        assert!(validate_independent(&g, &out.witness.unwrap()));
    }
}

#[test]
fn rainbow_examples() {
    for k in 2..=6 {
        let c = IntColoring::new((0..k as u32).collect(), 1).unwrap();
        let out = rainbow_ap_witness(&c, k).unwrap();
        assert_eq!(out.witness, Some(Progression { a: 1, d: 1, k }));
    }
    let c = IntColoring::new(vec![1, 1, 2, 2, 3, 3], 2).unwrap();
    let scan = all_aps(6, 3).into_iter().find(|p| c.is_rainbow(p));
    let out = rainbow_ap_witness(&c, 3).unwrap();
    assert_eq!(out.witness, scan);
    assert_eq!(out.witness, Some(Progression { a: 1, d: 2, k: 3 }));

    let c = IntColoring::new(vec![0, 0, 0, 0, 0, 1], 5).unwrap();
    assert_eq!(rainbow_ap_witness(&c, 3).unwrap().witness, None);
    assert!(IntColoring::new(vec![0, 0, 0], 2).is_err());
}

#[test]
fn set_mapping_examples() {
    let reversal: Vec<usize> = (1..=9).rev().collect();
    let out = set_mapping_ap(&reversal, 3).unwrap();
    let p = out.witness.unwrap();
    let terms: Vec<usize> = p.terms().collect();
    assert!(terms.iter().all(|&i| !terms.contains(&reversal[i - 1])));
    let brute = all_aps(9, 3).into_iter().find(|q| validate_set_mapping(&reversal, q));
    assert_eq!(Some(p), brute);

    for k in 2..=5 {
        let identity: Vec<usize> = (1..=12).collect();
        assert_eq!(set_mapping_ap(&identity, k).unwrap().witness, None);
    }

    let shift: Vec<usize> = (1..=10).map(|i| (i + 5 - 1) % 10 + 1).collect();
    let p = set_mapping_ap(&shift, 2).unwrap().witness.unwrap();
    assert!(validate_set_mapping(&shift, &p));

    assert!(set_mapping_ap(&[1, 1, 2], 2).is_err());
}

/// Colourings of `[n]` as restricted growth strings, no pruning.
fn naive_sr(m: usize, k: usize, n_max: usize) -> Option<usize> {
    fn any_bad(prefix: &mut Vec<u32>, n: usize, m: usize, k: usize) -> bool {
        if prefix.len() == n {
            let c = IntColoring::with_tight_bound(prefix.clone());
            return c.m <= m && !c.has_rainbow_ap(k);
        }
        let next = prefix.iter().max().map_or(0, |&c| c + 1);
        (0..=next).any(|c| {
            prefix.push(c);
            let bad = any_bad(prefix, n, m, k);
            prefix.pop();
            bad
        })
    }
    (1..=n_max).find(|&n| !any_bad(&mut Vec::new(), n, m, k))
}

#[test]
fn sr_small_values_match_naive() {
    for k in 1..=6 {
        let r = sr_exact(1, k, 12, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.outcome, crate::report::Outcome::Exact { value: k as u64 });
    }
    for (m, k) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let r = sr_exact(m, k, 10, DEFAULT_NODE_BUDGET).unwrap();
        let expected = naive_sr(m, k, 10).expect("settled within 10");
        assert_eq!(r.bounds(), Some((expected as u64, Some(expected as u64))), "m={m} k={k}");
        let witness: IntColoring = serde_json::from_value(r.witness.clone().unwrap()).unwrap();
        assert_eq!(witness.n(), expected - 1);
        assert!(!witness.has_rainbow_ap(k));
    }
}

#[test]
fn sr_reports_intervals() {
    let r = sr_exact(2, 3, 3, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(r.bounds(), Some((4, None)));
    let r = sr_exact(3, 4, 30, 50).unwrap();
    assert!(r.budget_exhausted);
    assert!(matches!(r.outcome, crate::report::Outcome::Interval { upper: None, .. }));
}

#[test]
fn sr_is_monotone() {
    let value = |m, k| sr_exact(m, k, 14, DEFAULT_NODE_BUDGET).unwrap().bounds().unwrap().0;
    for m in 1..=3 {
        for k in 2..=3 {
            assert!(value(m, k) <= value(m + 1, k));
            assert!(value(m, k) <= value(m, k + 1));
        }
    }
}

#[test]
fn tk_examples() {
    use crate::report::Outcome;
    for k in 2..=5 {
        assert_eq!(tk_check(k, 1, k, DEFAULT_NODE_BUDGET).unwrap().outcome, Outcome::Holds);
    }
    let r = tk_check(2, 2, 3, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(r.outcome, Outcome::Fails);
    let w: IntColoring = serde_json::from_value(r.witness.unwrap()).unwrap();
    assert!(w.is_equinumerous(2) && !w.has_rainbow_ap(3));

    // Oracle: scan every equinumerous colouring of [6] with 3 colours.
    let mut oracle_holds = true;
    for code in 0..3usize.pow(6) {
        let colors: Vec<u32> = (0..6).map(|i| (code / 3usize.pow(i) % 3) as u32).collect();
        let c = IntColoring::with_tight_bound(colors);
        if c.is_equinumerous(3) && !c.has_rainbow_ap(3) {
            oracle_holds = false;
        }
    }
    let r = tk_check(3, 2, 3, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(r.outcome == Outcome::Holds, oracle_holds);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coprime_pairs_lie_in_few_members(n in 4usize..160, k in 2usize..=6) {
        prop_assume!(n >= k);
        let cover = max_pair_coverage(n, k, Family::Coprime).unwrap();
        prop_assert!(cover < k as u64);
        prop_assert!(pair_multiplicity_bound(n, k, Family::Coprime).unwrap() < k as u64);
    }

    #[test]
    fn multiplicity_bound_dominates_coverage(n in 4usize..120, k in 2usize..=7) {
        prop_assume!(n >= k);
        for fam in [Family::Coprime, Family::Prime, Family::All] {
            let cover = max_pair_coverage(n, k, fam).unwrap();
            prop_assert!(cover <= pair_multiplicity_bound(n, k, fam).unwrap());
        }
    }

    #[test]
    fn witnesses_revalidate(seed in any::<u64>(), edges in 0usize..400, k in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(60, edges, &mut rng);
        for fam in [Family::Coprime, Family::Prime, Family::All] {
            let out = find_independent_ap(&g, k, fam).unwrap();
            if let Some(p) = out.witness {
                prop_assert!(validate_independent(&g, &p));
            } else {
                prop_assert!(!out.counting.guarantees());
            }
        }
    }
}

