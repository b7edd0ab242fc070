use rayon::prelude::*;
use rmsat::constructions::{build, ConstructionSpec};
use rmsat::oracle::{
    brute_force_bad_coloring, brute_force_rmin_saturated, compute_sat, enumerate_graphs, scan_k3_saturated,
};
use rmsat::saturation::{
    classify_k3_saturated, is_kt_saturated, is_kt_saturated_naive, is_ramsey_minimal, is_rmin_saturated,
    min_degree_edge_bound, rmin_saturated_verdict, StructureClass,
};
use rmsat::{Graph, Outcome, SearchConfig};

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn engine_saturation_matches_brute_force_definition() {
    for n in 2..=7 {
        let graphs = enumerate_graphs(n).unwrap();
        for k in [3, 4] {
            let mismatches: Vec<String> = graphs
                .par_iter()
                .filter_map(|g| {
                    let engine = is_rmin_saturated(g, k, &cfg()).unwrap().done().unwrap().verdict;
                    let quick = rmin_saturated_verdict(g, k, &cfg()).unwrap();
                    let oracle = brute_force_rmin_saturated(g, k).unwrap();
                    (engine != oracle || quick != Outcome::Done(oracle))
                        .then(|| format!("n={n} k={k} edges={:?}", g.edges()))
                })
                .collect();
            assert!(mismatches.is_empty(), "{mismatches:?}");
        }
    }
}

#[test]
fn witnesses_are_saturated_without_presolve() {
    let plain = cfg().without_presolve();
    for (spec, k) in [
        (ConstructionSpec::GEven { n: 18 }, 4),
        (ConstructionSpec::GOdd { n: 19 }, 4),
        (ConstructionSpec::General { k: 5, n: 20 }, 5),
        (ConstructionSpec::GEven { n: 20 }, 4),
        (ConstructionSpec::General { k: 6, n: 22 }, 6),
    ] {
        let g = build(&spec).unwrap().graph;
        let r = is_rmin_saturated(&g, k, &plain).unwrap().done().unwrap();
        assert!(r.verdict, "{spec}");
        for c in &r.non_edges {
            assert_eq!(c.verdict, rmsat::saturation::NonEdgeVerdict::Arrows);
        }
    }
}

#[test]
fn report_is_independent_of_thread_count() {
    let g = Graph::star(9);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| is_rmin_saturated(&g, 4, &cfg()).unwrap().done().unwrap())
    };
    let one = run(1);
    let four = run(4);
    assert_eq!(one.failures, four.failures);
    assert_eq!(
        serde_json::to_string(&one.non_edges).unwrap(),
        serde_json::to_string(&four.non_edges).unwrap()
    );
}

#[test]
fn triangle_saturation_fast_form_matches_definition() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(is_kt_saturated(&g, 3).unwrap(), is_kt_saturated_naive(&g, 3).unwrap());
        }
    }
}

#[test]
fn triangle_saturated_graphs_have_at_least_n_minus_one_edges() {
    for n in 2..=8 {
        for delta in 1..n {
            for g in scan_k3_saturated(n, delta).unwrap() {
                assert!(g.m() + 1 >= n);
                if g.m() + 1 == n {
                    assert_eq!(classify_k3_saturated(&g).unwrap(), StructureClass::Star);
                }
            }
        }
    }
}

#[test]
fn min_degree_two_graphs_satisfy_the_pattern_relation() {
    for n in 5..=8 {
        for g in scan_k3_saturated(n, 2).unwrap() {
            let StructureClass::JGraph(p) = classify_k3_saturated(&g).unwrap() else {
                panic!("not J: {:?}", g.edges());
            };
            let (_, b, c) = p.sizes();
            let e = g.m() as i64;
            let j = 2 * n as i64 - e;
            assert_eq!((b * c) as i64 - b as i64 - c as i64, 4 - j);
        }
    }
}

#[test]
fn degree_bound_holds_for_min_degree_three_graphs() {
    let mut seen = 0;
    for n in 6..=8 {
        for delta in 3..n {
            for g in scan_k3_saturated(n, delta).unwrap() {
                seen += 1;
                assert!(2 * g.m() as i64 >= min_degree_edge_bound(&g).unwrap(), "{:?}", g.edges());
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn sat_values_below_ramsey_number() {
    for (k, r) in [(3, 5), (4, 7), (5, 9)] {
        for n in 1..r.min(8) {
            let s = compute_sat(n, k, &cfg()).unwrap().done().unwrap();
            assert_eq!(s.min_edges, n * (n - 1) / 2, "n={n} k={k}");
        }
    }
}

#[test]
fn extremal_graphs_reverify() {
    for (n, k) in [(5, 3), (6, 3), (7, 3), (7, 4)] {
        let s = compute_sat(n, k, &cfg()).unwrap().done().unwrap();
        assert!(!s.extremal.is_empty());
        for code in &s.extremal {
            let g = rmsat::graph6::decode(code).unwrap();
            assert_eq!(g.m(), s.min_edges);
            if g.m() < 20 {
                assert!(brute_force_rmin_saturated(&g, k).unwrap(), "{code}");
            } else {
                assert!(is_rmin_saturated(&g, k, &cfg()).unwrap().done().unwrap().verdict);
            }
        }
    }
}

#[test]
fn ramsey_minimality_matches_brute_force() {
    for (g, k) in [
        (Graph::complete(5), 3),
        (Graph::complete(7), 4),
        (Graph::star(5), 3),
        (Graph::complete(6), 3),
    ] {
        let r = is_ramsey_minimal(&g, k, &cfg()).unwrap().done().unwrap();
        let arrows = !brute_force_bad_coloring(&g, k).unwrap().exists;
        assert_eq!(r.arrows, arrows);
        let expected = arrows
            && g.edges().iter().all(|&(u, v)| {
                let h = g.without_edge(u, v).unwrap();
                brute_force_bad_coloring(&h, k).unwrap().exists
            });
        assert_eq!(r.verdict, expected);
        for ((u, v), c) in &r.deletion_certificates {
            assert!(c.verify(&g.without_edge(*u, *v).unwrap()).unwrap());
        }
    }
}
