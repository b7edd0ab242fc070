//! Saturation and minimality predicates, and structure checks for
//! triangle-saturated graphs and for bad colorings of saturated graphs.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{BadColoringCertificate, Color};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::search::{find_bad_coloring, Outcome, SearchConfig, SearchStats};

fn contains_clique(g: &Graph, t: usize) -> bool {
    fn extend(g: &Graph, cand: &[usize], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        cand.iter().enumerate().any(|(i, &v)| {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            extend(g, &next, need - 1)
        })
    }
    let all: Vec<usize> = (0..g.n()).collect();
    extend(g, &all, t)
}

fn check_t(t: usize) -> Result<()> {
    if t < 3 {
        return Err(invalid("t must be at least 3"));
    }
    Ok(())
}

/// `K_t`-free, and adding any non-edge creates a `K_t`. For `t = 3` this is
/// triangle-free with every non-adjacent pair sharing a neighbour.
pub fn is_kt_saturated(g: &Graph, t: usize) -> Result<bool> {
    check_t(t)?;
    if t == 3 {
        return Ok(g.is_triangle_free()
            && g.non_edges().iter().all(|&(u, v)| g.common_neighbor_count(u, v) > 0));
    }
    is_kt_saturated_naive(g, t)
}

/// The definition applied literally: clique search on `G` and on every `G + e`.
pub fn is_kt_saturated_naive(g: &Graph, t: usize) -> Result<bool> {
    check_t(t)?;
    if contains_clique(g, t) {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if !contains_clique(&g.with_edge(u, v)?, t) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonEdgeVerdict {
    /// `G + e` admits no bad coloring.
    Arrows,
    AdmitsBadColoring,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonEdgeCheck {
    pub u: usize,
    pub v: usize,
    pub verdict: NonEdgeVerdict,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub k: usize,
    pub verdict: bool,
    /// A bad coloring of `G` itself, if one exists.
    pub base_certificate: Option<BadColoringCertificate>,
    /// Non-edges `e` with a bad coloring of `G + e`, ordered by non-edge.
    pub failures: Vec<((usize, usize), BadColoringCertificate)>,
    /// One entry per non-edge, in lexicographic order. Empty when `G` has no bad coloring.
    pub non_edges: Vec<NonEdgeCheck>,
    pub base_stats: SearchStats,
}

impl SaturationReport {
    pub fn total_stats(&self) -> SearchStats {
        let mut s = self.base_stats;
        for c in &self.non_edges {
            s.absorb(&c.stats);
        }
        s
    }
}

fn check_non_edge(
    g: &Graph,
    k: usize,
    (u, v): (usize, usize),
    cfg: &SearchConfig,
) -> Result<(NonEdgeCheck, Option<BadColoringCertificate>)> {
    let h = g.with_edge(u, v)?;
    let r = find_bad_coloring(&h, k, cfg)?;
    let (verdict, cert) = match r.outcome {
        Outcome::Exhausted => (NonEdgeVerdict::Exhausted, None),
        Outcome::Done(None) => (NonEdgeVerdict::Arrows, None),
        Outcome::Done(Some(c)) => (NonEdgeVerdict::AdmitsBadColoring, Some(c)),
    };
    Ok((
        NonEdgeCheck {
            u,
            v,
            verdict,
            stats: r.stats,
        },
        cert,
    ))
}

/// Decides whether `G` admits a bad coloring while every `G + e` does not.
///
/// Non-edges are checked in parallel; the report is ordered by non-edge. A
/// found failure decides the verdict even if other sub-searches ran out of
/// budget; otherwise any exhausted sub-search makes the result `Exhausted`.
pub fn is_rmin_saturated(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome<SaturationReport>> {
    let base = find_bad_coloring(g, k, cfg)?;
    let base_cert = match base.outcome {
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
        Outcome::Done(c) => c,
    };
    let mut report = SaturationReport {
        k,
        verdict: false,
        base_certificate: None,
        failures: Vec::new(),
        non_edges: Vec::new(),
        base_stats: base.stats,
    };
    let Some(base_cert) = base_cert else {
        return Ok(Outcome::Done(report));
    };
    report.base_certificate = Some(base_cert);
    let checks: Vec<(NonEdgeCheck, Option<BadColoringCertificate>)> = g
        .non_edges()
        .into_par_iter()
        .map(|e| check_non_edge(g, k, e, cfg))
        .collect::<Result<_>>()?;
    let mut exhausted = false;
    for (check, cert) in checks {
        exhausted |= check.verdict == NonEdgeVerdict::Exhausted;
        if let Some(c) = cert {
            report.failures.push(((check.u, check.v), c));
        }
        report.non_edges.push(check);
    }
    if report.failures.is_empty() && exhausted {
        return Ok(Outcome::Exhausted);
    }
    report.verdict = report.failures.is_empty();
    Ok(Outcome::Done(report))
}

/// Verdict only, stopping at the first failing non-edge (in lexicographic order).
pub fn rmin_saturated_verdict(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome<bool>> {
    match find_bad_coloring(g, k, cfg)?.outcome {
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
        Outcome::Done(None) => return Ok(Outcome::Done(false)),
        Outcome::Done(Some(_)) => {}
    }
    let exhausted = AtomicBool::new(false);
    let failure = g
        .non_edges()
        .into_par_iter()
        .map(|e| -> Result<bool> {
            let (check, _) = check_non_edge(g, k, e, cfg)?;
            if check.verdict == NonEdgeVerdict::Exhausted {
                exhausted.store(true, Ordering::Relaxed);
            }
            Ok(check.verdict == NonEdgeVerdict::AdmitsBadColoring)
        })
        .find_first(|r| !matches!(r, Ok(false)));
    match failure {
        Some(Err(e)) => Err(e),
        Some(Ok(_)) => Ok(Outcome::Done(false)),
        None if exhausted.load(Ordering::Relaxed) => Ok(Outcome::Exhausted),
        None => Ok(Outcome::Done(true)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub k: usize,
    pub verdict: bool,
    /// Whether `G` itself admits no bad coloring.
    pub arrows: bool,
    /// A bad coloring of `G`, when `G` does not arrow.
    pub base_certificate: Option<BadColoringCertificate>,
    /// Edges whose deletion leaves a graph that still arrows.
    pub removable_edges: Vec<(usize, usize)>,
    /// For each other edge, a bad coloring of `G - e`.
    pub deletion_certificates: Vec<((usize, usize), BadColoringCertificate)>,
    pub stats: SearchStats,
}

/// Whether `G` arrows and no `G - e` does. Deleting single edges suffices
/// because arrowing is preserved by supergraphs.
pub fn is_ramsey_minimal(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Outcome<MinimalityReport>> {
    let base = find_bad_coloring(g, k, cfg)?;
    let mut report = MinimalityReport {
        k,
        verdict: false,
        arrows: false,
        base_certificate: None,
        removable_edges: Vec::new(),
        deletion_certificates: Vec::new(),
        stats: base.stats,
    };
    match base.outcome {
        Outcome::Exhausted => return Ok(Outcome::Exhausted),
        Outcome::Done(Some(c)) => {
            report.base_certificate = Some(c);
            return Ok(Outcome::Done(report));
        }
        Outcome::Done(None) => report.arrows = true,
    }
    let results: Vec<_> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| -> Result<_> {
            let h = g.without_edge(u, v)?;
            Ok(((u, v), find_bad_coloring(&h, k, cfg)?))
        })
        .collect::<Result<_>>()?;
    let mut exhausted = false;
    for (e, r) in results {
        report.stats.absorb(&r.stats);
        match r.outcome {
            Outcome::Exhausted => exhausted = true,
            Outcome::Done(Some(c)) => report.deletion_certificates.push((e, c)),
            Outcome::Done(None) => report.removable_edges.push(e),
        }
    }
    if exhausted && report.removable_edges.is_empty() {
        return Ok(Outcome::Exhausted);
    }
    report.verdict = report.removable_edges.is_empty();
    Ok(Outcome::Done(report))
}

/// Two apexes `y`, `z` with common neighbourhood `A`, private neighbourhoods
/// `B` (of `y`) and `C` (of `z`), `B` complete to `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JPartition {
    pub y: usize,
    pub z: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl JPartition {
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }

    /// Checks that `g` is exactly the graph this partition describes.
    fn describes(&self, g: &Graph) -> bool {
        let (a, b, c) = self.sizes();
        if a == 0 || (b == 0) != (c == 0) || g.has_edge(self.y, self.z) {
            return false;
        }
        if g.m() != 2 * a + b + c + b * c {
            return false;
        }
        let all_present = self.a.iter().all(|&x| g.has_edge(self.y, x) && g.has_edge(self.z, x))
            && self.b.iter().all(|&x| g.has_edge(self.y, x))
            && self.c.iter().all(|&x| g.has_edge(self.z, x))
            && self.b.iter().all(|&x| self.c.iter().all(|&w| g.has_edge(x, w)));
        all_present
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum StructureClass {
    Star,
    JGraph(JPartition),
    Other,
}

/// Classifies a triangle-saturated graph by minimum degree: a star when it is
/// 1, the two-apex graph `J` when it is 2, otherwise `Other`.
///
/// For `J`, `(y, z)` is the lexicographically first non-adjacent pair whose
/// neighbourhoods cover every other vertex.
pub fn classify_k3_saturated(g: &Graph) -> Result<StructureClass> {
    if !is_kt_saturated(g, 3)? {
        return Err(Error::Precondition("graph is not triangle-saturated".into()));
    }
    match g.min_degree() {
        Some(1) => Ok(StructureClass::Star),
        Some(2) => Ok(find_j_partition(g).map_or(StructureClass::Other, StructureClass::JGraph)),
        _ => Ok(StructureClass::Other),
    }
}

fn find_j_partition(g: &Graph) -> Option<JPartition> {
    let n = g.n();
    for (y, z) in g.non_edges() {
        let covers = (0..n).all(|v| v == y || v == z || g.has_edge(y, v) || g.has_edge(z, v));
        if !covers {
            continue;
        }
        let others = || (0..n).filter(move |&v| v != y && v != z);
        let p = JPartition {
            y,
            z,
            a: others().filter(|&v| g.has_edge(y, v) && g.has_edge(z, v)).collect(),
            b: others().filter(|&v| g.has_edge(y, v) && !g.has_edge(z, v)).collect(),
            c: others().filter(|&v| !g.has_edge(y, v) && g.has_edge(z, v)).collect(),
        };
        if p.describes(g) {
            return Some(p);
        }
    }
    None
}

/// Right-hand side of `2e(G) >= max{(δ+1)n - δ² - 1, (δ+2)n - δ(δ+t) - 2}` for a
/// triangle-saturated `G` with `δ >= 3`, where `t` is the least degree among
/// neighbours of minimum-degree vertices.
pub fn min_degree_edge_bound(g: &Graph) -> Result<i64> {
    if !is_kt_saturated(g, 3)? {
        return Err(Error::Precondition("graph is not triangle-saturated".into()));
    }
    let delta = g.min_degree().unwrap_or(0);
    if delta < 3 {
        return Err(Error::Precondition(format!("minimum degree {delta} is below 3")));
    }
    let t = (0..g.n())
        .filter(|&v| g.degree(v) == delta)
        .flat_map(|v| g.neighbors(v))
        .map(|w| g.degree(w))
        .min()
        .expect("minimum-degree vertices have neighbours");
    let (n, d, t) = (g.n() as i64, delta as i64, t as i64);
    Ok(((d + 1) * n - d * d - 1).max((d + 2) * n - d * (d + t) - 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Clause {
    Pass,
    Fail(String),
    Skipped(String),
    NotEvaluated(String),
}

impl Clause {
    pub fn is_fail(&self) -> bool {
        matches!(self, Clause::Fail(_))
    }

    fn check(ok: bool, why: impl FnOnce() -> String) -> Clause {
        if ok {
            Clause::Pass
        } else {
            Clause::Fail(why())
        }
    }
}

/// What is known about whether a certificate maximizes the number of red edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxRedStatus {
    Proven,
    NotClaimed,
    /// The maximization search ran out of budget.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// At most two blue components with fewer than `k/2` vertices.
    pub small_blue_components: Clause,
    /// Two such components are red-complete to each other.
    pub small_components_red_complete: Clause,
    /// Maximum red degree at most `n - 3`.
    pub red_max_degree: Clause,
    pub red_two_connected: Clause,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        ![
            &self.small_blue_components,
            &self.small_components_red_complete,
            &self.red_max_degree,
            &self.red_two_connected,
        ]
        .iter()
        .any(|c| c.is_fail())
    }
}

/// Checks the structure every bad coloring of a saturated graph must have.
/// "Small" blue components are those with `2|D| < k`, taken literally for odd `k`.
pub fn check_certificate_structure(
    g: &Graph,
    cert: &BadColoringCertificate,
    saturated: bool,
    max_red: MaxRedStatus,
) -> Result<StructureReport> {
    if !cert.verify(g)? {
        return Err(invalid("certificate does not verify against the graph"));
    }
    let k = cert.k;
    let skipped = |why: &str| Clause::Skipped(why.to_string());
    let mut report = StructureReport {
        small_blue_components: skipped("graph not known to be saturated"),
        small_components_red_complete: skipped("graph not known to be saturated"),
        red_max_degree: skipped("coloring not known to maximize red edges"),
        red_two_connected: skipped("coloring not known to maximize red edges"),
    };
    if !saturated {
        return Ok(report);
    }
    let blue = cert.coloring.blue_graph(g)?;
    let parts = blue.components();
    let small: Vec<Vec<usize>> = (0..parts.count())
        .filter(|&i| 2 * parts.sizes[i] < k)
        .map(|i| parts.members(i))
        .collect();
    report.small_blue_components = Clause::check(small.len() <= 2, || {
        format!("{} blue components have fewer than k/2 vertices", small.len())
    });
    report.small_components_red_complete = if small.len() == 2 {
        let red = cert.coloring.red_graph(g)?;
        let complete = small[0].iter().all(|&u| small[1].iter().all(|&v| red.has_edge(u, v)));
        Clause::check(complete, || "two small blue components are not red-complete".into())
    } else {
        skipped("fewer than two small blue components")
    };
    match max_red {
        MaxRedStatus::NotClaimed => {}
        MaxRedStatus::Unknown => {
            let why = "red-maximization search ran out of budget".to_string();
            report.red_max_degree = Clause::NotEvaluated(why.clone());
            report.red_two_connected = Clause::NotEvaluated(why);
        }
        MaxRedStatus::Proven if g.n() < k + 2 => {
            report.red_max_degree = skipped("n < k + 2");
            report.red_two_connected = skipped("n < k + 2");
        }
        MaxRedStatus::Proven => {
            let red = cert.coloring.red_graph(g)?;
            let n = g.n();
            let dmax = red.max_degree().unwrap_or(0);
            report.red_max_degree = Clause::check(dmax + 3 <= n, || {
                format!("red maximum degree {dmax} exceeds n - 3 = {}", n - 3)
            });
            report.red_two_connected =
                Clause::check(red.is_two_connected(), || "red subgraph is not 2-connected".into());
        }
    }
    Ok(report)
}

/// Edges lying in at least `2k - 3` triangles that `coloring` leaves red.
/// Empty for every bad coloring when `n >= k + 2`.
pub fn red_edges_in_many_triangles(g: &Graph, k: usize, cert: &BadColoringCertificate) -> Vec<(usize, usize)> {
    let threshold = (2 * k).saturating_sub(3);
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| cert.coloring.get(i) == Color::Red)
        .filter(|&(i, _)| g.triangles_through_edge(i).unwrap_or(0) >= threshold)
        .map(|(_, &e)| e)
        .collect()
}
