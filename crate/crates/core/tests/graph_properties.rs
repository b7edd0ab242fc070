use proptest::prelude::*;
use rmsat::canon::{canonical_form, canonical_relabel};
use rmsat::constructions::{build, catalog};
use rmsat::graph6;
use rmsat::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn naive_triangles_through(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)).count()
}

/// Articulation points by deleting each vertex and counting components.
fn naive_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = g.components().count();
    (0..g.n())
        .filter(|&x| {
            let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
            let pos = |v: usize| keep.iter().position(|&w| w == v).unwrap();
            let edges = g
                .edges()
                .iter()
                .filter(|&&(u, v)| u != x && v != x)
                .map(|&(u, v)| (pos(u), pos(v)));
            let h = Graph::from_edges(g.n() - 1, edges).unwrap();
            // removing an isolated vertex lowers the count; that is not a cut
            h.components().count() > base - usize::from(g.degree(x) == 0)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn triangle_counts_match_naive(g in arb_graph(12)) {
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(g.triangles_through_edge(i).unwrap(), naive_triangles_through(&g, u, v));
        }
        let total: usize = (0..g.m()).map(|i| g.triangles_through_edge(i).unwrap()).sum();
        prop_assert_eq!(total, 3 * g.triangle_count());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn articulation_points_match_deletion(g in arb_graph(11)) {
        prop_assert_eq!(g.articulation_points(), naive_cut_vertices(&g));
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(9), perms in proptest::collection::vec(any::<u64>(), 100)) {
        let form = canonical_form(&g).unwrap();
        for seed in perms {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            // Fisher-Yates driven by the seed
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_form(&h).unwrap(), form.clone());
        }
        prop_assert_eq!(canonical_relabel(&g).unwrap().m(), g.m());
    }
}

#[test]
fn catalog_round_trips_through_graph6() {
    for spec in catalog() {
        let g = build(&spec).unwrap().graph;
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g, "{spec}");
    }
}

#[test]
fn petersen_has_no_cut_vertex() {
    let g = Graph::petersen();
    assert!(g.articulation_points().is_empty());
    assert_eq!(naive_cut_vertices(&g), Vec::<usize>::new());
    assert!(g.is_two_connected());
}
