//! The end-to-end verification suite: ten numbered checks covering the
//! constructions, their saturation and uniqueness, the closed-form bounds,
//! and the oracle cross-checks at small orders.
//!
//! Each check returns a [`CriterionResult`]; [`run_all`] runs them in order.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{BadColoringCertificate, TwoColoring};
use crate::constructions::{
    build, general_min_n, half_up, predicted_edge_count, edge_bounds, uncorrected_formula_edge_count,
    ConstructionSpec,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{brute_force_bad_coloring, compute_sat, enumerate_graphs_up_to, family_ramsey_number, scan_k3_saturated};
use crate::saturation::{
    check_certificate_structure, classify_k3_saturated, is_kt_saturated, is_rmin_saturated, min_degree_edge_bound,
    red_edges_in_many_triangles, MaxRedStatus, StructureClass,
};
use crate::search::{
    count_bad_colorings, find_bad_coloring, find_max_red_bad_coloring, for_each_bad_coloring, Outcome, SearchConfig,
};

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Smaller enumeration ranges for criteria 6, 8 and 10.
    pub quick: bool,
    pub search: SearchConfig,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} [{tag}] {}: {}", self.id, self.title, self.detail)
    }
}

pub const TITLES: [&str; 10] = [
    "G_even/G_odd edge counts",
    "K3 vs T4 witnesses are saturated",
    "K3 vs T4 witnesses have a unique bad coloring",
    "General(5, 20) is saturated, unique and within bounds",
    "General(k, n) edge count equals direct count",
    "engine agrees with brute force on all graphs up to 6 vertices",
    "small-n saturation numbers and family Ramsey numbers",
    "triangle-saturated graphs with minimum degree 2",
    "Petersen graph meets the minimum-degree bound",
    "forced-blue edges, small blue components, max-red structure",
];

fn timed(id: u8, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        title: TITLES[id as usize - 1],
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Collects mismatch messages; passes when none were recorded.
#[derive(Default)]
struct Tally {
    checks: usize,
    problems: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.problems.push(msg());
        }
    }

    fn finish(self, summary: String) -> (bool, String) {
        if self.problems.is_empty() {
            (true, summary)
        } else {
            let shown: Vec<_> = self.problems.iter().take(5).cloned().collect();
            (
                false,
                format!("{} of {} checks failed: {}", self.problems.len(), self.checks, shown.join("; ")),
            )
        }
    }
}

pub fn criterion_1() -> CriterionResult {
    timed(1, || {
        let mut t = Tally::default();
        for n in (8..=40).step_by(2) {
            let m = build(&ConstructionSpec::GEven { n })?.graph.m();
            t.expect(2 * m == 5 * n, || format!("GEven({n}) has {m} edges"));
        }
        for n in (9..=41).step_by(2) {
            let m = build(&ConstructionSpec::GOdd { n })?.graph.m();
            t.expect(2 * m == 5 * n - 1, || format!("GOdd({n}) has {m} edges"));
        }
        Ok(t.finish("e = 5n/2 for even n in [8, 40], (5n-1)/2 for odd n in [9, 41]".into()))
    })
}

fn saturation_line(spec: ConstructionSpec, k: usize, cfg: &SearchConfig) -> Result<(bool, String)> {
    let b = build(&spec)?;
    let expected = 5 * b.graph.n() / 2;
    match is_rmin_saturated(&b.graph, k, cfg)? {
        Outcome::Exhausted => Ok((false, format!("{spec}: inconclusive (budget exhausted)"))),
        Outcome::Done(r) => {
            let nodes = r.total_stats().nodes;
            let ok = r.verdict && b.graph.m() == expected;
            Ok((
                ok,
                format!(
                    "{spec}: saturated={} e={} (expected {expected}), {} non-edges, {nodes} nodes",
                    r.verdict,
                    b.graph.m(),
                    r.non_edges.len()
                ),
            ))
        }
    }
}

pub fn criterion_2(cfg: &SearchConfig) -> CriterionResult {
    timed(2, || {
        let (a, da) = saturation_line(ConstructionSpec::GEven { n: 18 }, 4, cfg)?;
        let (b, db) = saturation_line(ConstructionSpec::GOdd { n: 19 }, 4, cfg)?;
        Ok((a && b, format!("{da}; {db}")))
    })
}

fn count_line(spec: ConstructionSpec, k: usize, cfg: &SearchConfig) -> Result<(bool, String)> {
    let b = build(&spec)?;
    Ok(match count_bad_colorings(&b.graph, k, 1_000, cfg)?.outcome {
        Outcome::Exhausted => (false, format!("{spec}: inconclusive")),
        Outcome::Done(c) => (c == 1, format!("{spec}: {c} bad coloring(s)")),
    })
}

pub fn criterion_3(cfg: &SearchConfig) -> CriterionResult {
    timed(3, || {
        let (a, da) = count_line(ConstructionSpec::GEven { n: 18 }, 4, cfg)?;
        let (b, db) = count_line(ConstructionSpec::GOdd { n: 19 }, 4, cfg)?;
        Ok((a && b, format!("{da}; {db}")))
    })
}

/// Sum of the join-list sizes of `General(k, n)`, written out independently of the builder.
fn general_direct_count(k: usize, n: usize) -> usize {
    let h = half_up(k);
    let rest = n - 2 * k - 2 * h + 2;
    let t = rest % h;
    let s = (rest - t * (h + 1)) / h;
    let c2 = |x: usize| x * x.saturating_sub(1) / 2;
    let cliques = 2 * c2(k - 2) + 2 * c2(h - 1) + s * c2(h) + t * c2(h + 1);
    let h1_to_h2 = (k - 2) * (k - 2);
    let at_y = (n - 4) + 1;
    let at_z = (n - 4) + 1;
    let at_u = 1 + (k - 2) + (h - 1);
    let at_w = (k - 2) + (h - 1);
    cliques + h1_to_h2 + at_y + at_z + at_u + at_w
}

pub fn criterion_4(cfg: &SearchConfig) -> CriterionResult {
    timed(4, || {
        let (k, n) = (5, 20);
        let expected = general_direct_count(k, n);
        let spec = ConstructionSpec::General { k, n };
        let b = build(&spec)?;
        let bounds = edge_bounds(k, n)?;
        let m = b.graph.m();
        let mut t = Tally::default();
        t.expect(m == expected, || format!("built {m} edges, direct count {expected}"));
        t.expect(predicted_edge_count(&spec)? == expected, || "predicted count differs".into());
        t.expect(bounds.lower <= m as f64 && m as f64 <= bounds.upper, || {
            format!("{m} outside [{}, {}]", bounds.lower, bounds.upper)
        });
        let sat = match is_rmin_saturated(&b.graph, k, cfg)? {
            Outcome::Done(r) => r.verdict.to_string(),
            Outcome::Exhausted => "inconclusive".into(),
        };
        t.expect(sat == "true", || format!("saturated = {sat}"));
        let count = match count_bad_colorings(&b.graph, k, 1_000, cfg)?.outcome {
            Outcome::Done(c) => c.to_string(),
            Outcome::Exhausted => "inconclusive".into(),
        };
        t.expect(count == "1", || format!("{count} bad colorings"));
        Ok(t.finish(format!(
            "e = {m} = direct count, within [{}, {}]; saturated = {sat}; bad colorings = {count}",
            bounds.lower, bounds.upper
        )))
    })
}

pub fn criterion_5() -> CriterionResult {
    timed(5, || {
        let mut t = Tally::default();
        let mut deltas = Vec::new();
        let mut instances = 0;
        for k in 5..=7 {
            let lo = general_min_n(k);
            for n in lo..=lo + 3 * half_up(k) {
                instances += 1;
                let spec = ConstructionSpec::General { k, n };
                let built = build(&spec)?.graph.m();
                let direct = general_direct_count(k, n);
                t.expect(built == direct, || format!("{spec}: built {built}, direct {direct}"));
                t.expect(predicted_edge_count(&spec)? == built, || format!("{spec}: predicted differs"));
                let delta = uncorrected_formula_edge_count(k, n)? as i64 - built as i64;
                if !deltas.contains(&delta) {
                    deltas.push(delta);
                }
            }
        }
        Ok(t.finish(format!(
            "built = direct join-list count for k in 5..=7 over {instances} instances; printed closed form minus built = {deltas:?}"
        )))
    })
}

pub fn criterion_6(quick: bool, cfg: &SearchConfig) -> CriterionResult {
    timed(6, || {
        let max_n = if quick { 5 } else { 6 };
        let levels = enumerate_graphs_up_to(max_n)?;
        let mut t = Tally::default();
        let mut graphs = 0;
        for g in levels.iter().flatten() {
            graphs += 1;
            for k in 3..=5 {
                let bf = brute_force_bad_coloring(g, k)?;
                let found = find_bad_coloring(g, k, cfg)?.outcome;
                let counted = count_bad_colorings(g, k, u64::MAX, cfg)?.outcome;
                t.expect(found.clone().map(|c| c.is_some()) == Outcome::Done(bf.exists), || {
                    format!("existence differs on n={} m={} k={k}", g.n(), g.m())
                });
                t.expect(counted == Outcome::Done(bf.count), || {
                    format!("count differs on n={} m={} k={k}: {counted:?} vs {}", g.n(), g.m(), bf.count)
                });
                if let Outcome::Done(Some(c)) = found {
                    t.expect(c.verify(g)?, || "certificate fails re-verification".into());
                }
            }
        }
        Ok(t.finish(format!("{graphs} classes on n <= {max_n}, k in 3..=5: existence and counts match")))
    })
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn criterion_7(cfg: &SearchConfig) -> CriterionResult {
    timed(7, || {
        let mut t = Tally::default();
        let mut parts = Vec::new();
        for (k, expected_r) in [(3, 5), (4, 7)] {
            let r = match family_ramsey_number(k, cfg)? {
                Outcome::Done(r) => r,
                Outcome::Exhausted => {
                    t.expect(false, || format!("k={k}: Ramsey search inconclusive"));
                    continue;
                }
            };
            t.expect(r == expected_r, || format!("k={k}: r = {r}, expected {expected_r}"));
            // confirm both sides by full 2^m scans
            t.expect(brute_force_bad_coloring(&Graph::complete(r - 1), k)?.exists, || {
                format!("K_{} has no bad coloring for k={k}", r - 1)
            });
            t.expect(!brute_force_bad_coloring(&Graph::complete(r), k)?.exists, || {
                format!("K_{r} has a bad coloring for k={k}")
            });
            for n in 1..r {
                match compute_sat(n, k, cfg)? {
                    Outcome::Done(s) => t.expect(s.min_edges == binom2(n), || {
                        format!("sat({n}, k={k}) = {}, expected {}", s.min_edges, binom2(n))
                    }),
                    Outcome::Exhausted => t.expect(false, || format!("sat({n}, k={k}) inconclusive")),
                }
            }
            parts.push(format!("r(k={k}) = {r}, sat(n) = C(n,2) for n < {r}"));
        }
        Ok(t.finish(parts.join("; ")))
    })
}

/// Allowed sorted `(|B|, |C|)` for `e = 2n - j`, `j = 0..=5`; `None` as the
/// second entry means "any value at least the first".
fn table_pattern(j: usize) -> &'static [(usize, Option<usize>)] {
    match j {
        5 => &[(1, None)],
        4 => &[(2, Some(2)), (0, Some(0))],
        3 => &[(2, Some(3))],
        2 => &[(2, Some(4))],
        1 => &[(2, Some(5)), (3, Some(3))],
        0 => &[(2, Some(6))],
        _ => &[],
    }
}

pub fn criterion_8(quick: bool) -> CriterionResult {
    timed(8, || {
        let max_n = if quick { 7 } else { 8 };
        let mut t = Tally::default();
        let mut total = 0;
        for n in 5..=max_n {
            let graphs = scan_k3_saturated(n, 2)?;
            total += graphs.len();
            let min_e = graphs.iter().map(Graph::m).min();
            t.expect(min_e == Some(2 * n - 5), || format!("n={n}: minimum e = {min_e:?}"));
            for g in &graphs {
                let StructureClass::JGraph(p) = classify_k3_saturated(g)? else {
                    t.expect(false, || format!("n={n}: a graph with e={} is not J", g.m()));
                    continue;
                };
                let (_, b, c) = p.sizes();
                let (lo, hi) = (b.min(c), b.max(c));
                let e = g.m();
                t.expect(e + b + c == 2 * (n - 2) + b * c, || {
                    format!("n={n}: e={e} but |B|={b}, |C|={c}")
                });
                if e <= 2 * n && 2 * n - e <= 5 {
                    let j = 2 * n - e;
                    let ok = table_pattern(j)
                        .iter()
                        .any(|&(x, y)| lo == x && y.is_none_or(|y| hi == y) && hi >= x);
                    t.expect(ok, || format!("n={n}, e=2n-{j}: (|B|,|C|) = ({lo},{hi})"));
                    t.expect(b * c + j == b + c + 4, || format!("n={n}: |B||C|-|B|-|C| != 4-{j}"));
                }
                if e == 2 * n - 5 {
                    t.expect(lo == 1, || format!("n={n}: extremal with (|B|,|C|) = ({lo},{hi})"));
                }
            }
        }
        Ok(t.finish(format!(
            "{total} graphs on 5 <= n <= {max_n}: all J, edge formula and pattern table hold, minimum 2n-5 with |B| or |C| = 1"
        )))
    })
}

pub fn criterion_9() -> CriterionResult {
    timed(9, || {
        let g = Graph::petersen();
        let mut t = Tally::default();
        t.expect(is_kt_saturated(&g, 3)?, || "not triangle-saturated".into());
        t.expect(g.min_degree() == Some(3), || "minimum degree is not 3".into());
        t.expect(g.m() == 15 && g.m() == 3 * 10 - 15, || format!("e = {}", g.m()));
        let bound = min_degree_edge_bound(&g)?;
        t.expect(bound == 2 * g.m() as i64, || format!("bound {bound} != 2e"));
        Ok(t.finish(format!("saturated, delta = 3, e = 15, bound = {bound} = 2e")))
    })
}

pub fn criterion_10(quick: bool, cfg: &SearchConfig) -> CriterionResult {
    timed(10, || {
        let no_presolve = cfg.without_presolve();
        let mut t = Tally::default();
        let mut colorings = 0u64;
        // every coloring of the witnesses, found with presolve off
        let witnesses = [
            (ConstructionSpec::GEven { n: 18 }, 4),
            (ConstructionSpec::GOdd { n: 19 }, 4),
            (ConstructionSpec::General { k: 5, n: 20 }, 5),
        ];
        for (spec, k) in witnesses {
            let g = build(&spec)?.graph;
            let mut all: Vec<TwoColoring> = Vec::new();
            let r = for_each_bad_coloring(&g, k, 1_000, &no_presolve, |c| {
                all.push(c.clone());
                true
            })?;
            t.expect(!r.outcome.is_exhausted(), || format!("{spec}: enumeration inconclusive"));
            for c in all {
                colorings += 1;
                let cert = BadColoringCertificate::new(&g, k, c)?;
                let red = red_edges_in_many_triangles(&g, k, &cert);
                t.expect(red.is_empty(), || format!("{spec}: red edges {red:?} lie in >= 2k-3 triangles"));
                let s = check_certificate_structure(&g, &cert, true, MaxRedStatus::NotClaimed)?;
                t.expect(s.passed(), || format!("{spec}: small-component clauses failed: {s:?}"));
            }
            match find_max_red_bad_coloring(&g, k, cfg)?.outcome {
                Outcome::Done(Some(cert)) => {
                    let s = check_certificate_structure(&g, &cert, true, MaxRedStatus::Proven)?;
                    t.expect(s.passed(), || format!("{spec}: max-red clauses failed: {s:?}"));
                }
                Outcome::Done(None) => t.expect(false, || format!("{spec}: no bad coloring")),
                Outcome::Exhausted => t.expect(false, || format!("{spec}: max-red search inconclusive")),
            }
        }
        // every coloring of every small class with n >= k + 2
        let max_n = if quick { 5 } else { 6 };
        for g in enumerate_graphs_up_to(max_n)?.iter().flatten() {
            for k in 3..=5 {
                if g.n() < k + 2 {
                    continue;
                }
                let threshold = 2 * k - 3;
                let heavy: Vec<usize> = (0..g.m())
                    .filter(|&i| g.triangles_through_edge(i).unwrap_or(0) >= threshold)
                    .collect();
                let mut bad = 0u64;
                let r = for_each_bad_coloring(g, k, u64::MAX, &no_presolve, |c| {
                    colorings += 1;
                    if heavy.iter().any(|&i| c.get(i) == crate::Color::Red) {
                        bad += 1;
                    }
                    true
                })?;
                t.expect(!r.outcome.is_exhausted(), || "enumeration inconclusive".into());
                t.expect(bad == 0, || format!("n={} m={} k={k}: {bad} colorings leave a heavy edge red", g.n(), g.m()));
            }
        }
        Ok(t.finish(format!(
            "{colorings} colorings checked: heavy edges always blue; small-component and max-red clauses hold on the witnesses"
        )))
    })
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionResult> {
    let cfg = &opts.search;
    vec![
        criterion_1(),
        criterion_2(cfg),
        criterion_3(cfg),
        criterion_4(cfg),
        criterion_5(),
        criterion_6(opts.quick, cfg),
        criterion_7(cfg),
        criterion_8(opts.quick),
        criterion_9(),
        criterion_10(opts.quick, cfg),
    ]
}
