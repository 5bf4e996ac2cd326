use extremal_core::ap::{self, Family};
use extremal_core::constructions::{check_turan, joint_extremal, JointExtremalSpec, TuranSpec};
use extremal_core::graph::{io, named, non_isomorphic_graphs};
use extremal_core::kst::{block_stats, degree_sum_check, PrefixStream};
use extremal_core::matching::{max_s_connected_matching, random_alpha_at_most_2};
use extremal_core::multiplicity::{count_mono, EdgeColoring};
use extremal_core::ramsey::{has_mono_copy, ramsey_exact, DEFAULT_BUDGET};
use extremal_core::Graph;

#[test]
fn ramsey_witnesses_survive_the_row_format() {
    for name in ["k3", "c4", "p4", "paw"] {
        let h = named::by_name(name).unwrap();
        let r = ramsey_exact(&h, 10, DEFAULT_BUDGET).unwrap();
        let text = r.witness.to_rows();
        let back = EdgeColoring::parse_rows(&text).unwrap();
        assert_eq!(back, r.witness);
        assert!(!has_mono_copy(&back, &h).unwrap(), "{name}");
        assert_eq!(count_mono(&back, &h).unwrap().total, 0, "{name}");
    }
}

#[test]
fn turan_graphs_through_graph6_and_streams() {
    for (n, r) in [(9, 2), (10, 3), (13, 4)] {
        let (g, report) = check_turan(&TuranSpec::new(n, r).unwrap()).unwrap();
        assert!(report.pass);
        let back = io::parse_graph6_line(&io::to_graph6(&g), 1).unwrap();
        assert_eq!(back, g);
        let stream = PrefixStream::from_graph(&g);
        let stats = block_stats(&stream, n, 1).unwrap();
        assert_eq!(stats.e[0], 2 * g.edge_count() as u64);
    }
}

#[test]
fn bipartite_turan_graph_is_k22_rich() {
    let g = check_turan(&TuranSpec::new(8, 2).unwrap()).unwrap().0;
    let r = degree_sum_check(&g, 2, 2, None).unwrap();
    assert!(!r.kst_free);
    assert!(!r.holds());
}

#[test]
fn joint_extremal_graphs_feed_the_ap_search() {
    let g = joint_extremal(&JointExtremalSpec::new(37, 3, 1).unwrap()).unwrap().graph;
    let out = ap::find_independent_ap(&g, 3, Family::All).unwrap();
    let p = out.witness.expect("independent progression");
    assert!(ap::validate_independent(&g, &p));
}

#[test]
fn corpus_of_small_graphs_parses_back() {
    let graphs: Vec<Graph> = (1..=5).flat_map(non_isomorphic_graphs).collect();
    let text: String = graphs.iter().map(|g| io::to_graph6(g) + "\n").collect();
    assert_eq!(io::parse_graph6_corpus(&text).unwrap(), graphs);
}

#[test]
fn connected_matchings_on_alpha_two_graphs() {
    for seed in 0..10 {
        let g = random_alpha_at_most_2(10, seed);
        let cert = max_s_connected_matching(&g, 4).unwrap();
        cert.validate(&g).unwrap();
        assert_eq!(cert.size(), g.clique_number() / 2);
    }
}
