//! Exhaustive ground truth at small orders: isomorphism-class enumeration,
//! `2^m` coloring scans, exact saturation numbers and small Ramsey numbers.
//!
//! Nothing here uses the search engine's propagation except where noted
//! (`compute_sat`, `family_ramsey_number`), so the brute-force functions can
//! serve as an independent oracle for it.

use std::collections::HashSet;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_relabel};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::saturation::{is_kt_saturated, rmin_saturated_verdict};
use crate::search::{admits_bad_coloring, Outcome, SearchConfig};

pub const MAX_ENUM_N: usize = 8;
pub const MAX_BRUTE_FORCE_M: usize = 24;
pub const MAX_SAT_N: usize = 7;

/// One canonically labelled representative per isomorphism class on `n`
/// vertices, sorted by edge count and then canonical form.
///
/// Each order is generated from the previous one by attaching a new vertex
/// to every possible neighbourhood and keeping the first graph seen of each
/// canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_up_to(n)?.pop().unwrap())
}

/// `out[i]` holds the classes on `i` vertices, for `i = 0..=n`.
pub fn enumerate_graphs_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n > MAX_ENUM_N {
        return Err(Error::Unsupported(format!(
            "built-in enumeration stops at n = {MAX_ENUM_N}; supply a graph6 stream for larger orders"
        )));
    }
    let mut levels = vec![vec![Graph::empty(0)]];
    for order in 1..=n {
        let prev = levels.last().unwrap();
        let mut found: Vec<(usize, Vec<u8>, Graph)> = prev
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (order - 1)).map(move |mask| {
                    let mut edges = g.edges().to_vec();
                    edges.extend((0..order - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, order - 1)));
                    let h = Graph::from_edges(order, edges).expect("augmentation keeps the graph simple");
                    let form = canonical_form(&h).expect("order within canonical range");
                    (h.m(), form, h)
                })
            })
            .collect();
        found.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        found.dedup_by(|a, b| a.1 == b.1);
        let level = found
            .into_iter()
            .map(|(_, _, h)| canonical_relabel(&h).expect("order within canonical range"))
            .collect();
        levels.push(level);
    }
    Ok(levels)
}

/// Reads graphs from a headerless graph6 stream, for orders beyond the
/// built-in enumeration. Duplicates are dropped when canonical forms are available.
pub fn graphs_from_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graph6::read_all(reader)? {
        let fresh = canonical_form(&g).map_or(true, |form| seen.insert(form));
        if fresh {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BruteForce {
    pub exists: bool,
    pub count: u64,
}

fn check_brute_force_size(g: &Graph) -> Result<()> {
    if g.m() > MAX_BRUTE_FORCE_M {
        return Err(Error::Unsupported(format!(
            "brute force scans 2^m colorings and allows m <= {MAX_BRUTE_FORCE_M}, got m = {}",
            g.m()
        )));
    }
    Ok(())
}

/// Edge-index bitmasks of all triangles.
fn triangle_masks(g: &Graph) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        for w in (v + 1)..g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                let a = g.edge_index(u, w).unwrap();
                let b = g.edge_index(v, w).unwrap();
                out.push(1 << i | 1 << a | 1 << b);
            }
        }
    }
    out
}

fn largest_blue_component(g: &Graph, blue: u32, parent: &mut [usize], size: &mut [usize]) -> usize {
    for v in 0..g.n() {
        parent[v] = v;
        size[v] = 1;
    }
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut largest = usize::from(g.n() > 0);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if blue >> i & 1 == 1 {
            let (a, b) = (find(parent, u), find(parent, v));
            if a != b {
                parent[a] = b;
                size[b] += size[a];
                largest = largest.max(size[b]);
            }
        }
    }
    largest
}

/// Scans all `2^m` colorings. Bit `i` of the scanned mask set means edge `i` is blue.
pub fn brute_force_bad_coloring(g: &Graph, k: usize) -> Result<BruteForce> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    check_brute_force_size(g)?;
    let tris = triangle_masks(g);
    let full: u32 = (1u32 << g.m()) - 1;
    let mut parent = vec![0; g.n()];
    let mut size = vec![0; g.n()];
    let mut count = 0u64;
    for blue in 0..=full {
        let red = !blue & full;
        if tris.iter().any(|&t| t & !red == 0) {
            continue;
        }
        if largest_blue_component(g, blue, &mut parent, &mut size) < k {
            count += 1;
        }
    }
    Ok(BruteForce {
        exists: count > 0,
        count,
    })
}

/// The saturation definition evaluated with brute-force scans only.
pub fn brute_force_rmin_saturated(g: &Graph, k: usize) -> Result<bool> {
    if !brute_force_bad_coloring(g, k)?.exists {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if brute_force_bad_coloring(&g.with_edge(u, v)?, k)?.exists {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatResult {
    pub n: usize,
    pub k: usize,
    pub min_edges: usize,
    /// graph6 of the canonically labelled extremal graphs.
    pub extremal: Vec<String>,
    pub graphs_scanned: usize,
}

/// Minimum edge count of a saturated graph on `n` vertices, scanning
/// isomorphism classes by increasing edge count and stopping after the first
/// edge count with a saturated member.
pub fn compute_sat(n: usize, k: usize, cfg: &SearchConfig) -> Result<Outcome<SatResult>> {
    if n > MAX_SAT_N {
        return Err(Error::Unsupported(format!("compute_sat allows n <= {MAX_SAT_N}")));
    }
    let graphs = enumerate_graphs(n)?;
    let mut scanned = 0;
    let mut start = 0;
    while start < graphs.len() {
        let m = graphs[start].m();
        let end = start + graphs[start..].iter().take_while(|g| g.m() == m).count();
        let verdicts: Vec<Outcome<bool>> = graphs[start..end]
            .par_iter()
            .map(|g| rmin_saturated_verdict(g, k, cfg))
            .collect::<Result<_>>()?;
        scanned += end - start;
        if verdicts.iter().any(Outcome::is_exhausted) {
            return Ok(Outcome::Exhausted);
        }
        let extremal: Vec<String> = graphs[start..end]
            .iter()
            .zip(&verdicts)
            .filter(|(_, v)| **v == Outcome::Done(true))
            .map(|(g, _)| graph6::encode(g))
            .collect();
        if !extremal.is_empty() {
            return Ok(Outcome::Done(SatResult {
                n,
                k,
                min_edges: m,
                extremal,
                graphs_scanned: scanned,
            }));
        }
        start = end;
    }
    unreachable!("an edge-maximal graph admitting a bad coloring is always saturated")
}

/// Least `n` such that `K_n` has no bad coloring.
pub fn family_ramsey_number(k: usize, cfg: &SearchConfig) -> Result<Outcome<usize>> {
    if !(2..=5).contains(&k) {
        return Err(Error::Unsupported("family_ramsey_number supports 2 <= k <= 5".into()));
    }
    for n in 1.. {
        match admits_bad_coloring(&Graph::complete(n), k, cfg)? {
            Outcome::Exhausted => return Ok(Outcome::Exhausted),
            Outcome::Done(false) => return Ok(Outcome::Done(n)),
            Outcome::Done(true) => {}
        }
    }
    unreachable!()
}

/// Triangle-saturated graphs on `n` vertices with minimum degree `delta`, by edge count.
pub fn scan_k3_saturated(n: usize, delta: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in enumerate_graphs(n)? {
        if g.min_degree() == Some(delta) && is_kt_saturated(&g, 3)? {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let levels = enumerate_graphs_up_to(6).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn enumeration_limit() {
        assert!(matches!(enumerate_graphs(9), Err(Error::Unsupported(_))));
    }

    #[test]
    fn brute_force_examples() {
        let r = brute_force_bad_coloring(&Graph::complete(3), 3).unwrap();
        assert_eq!((r.exists, r.count), (true, 3));
        let r = brute_force_bad_coloring(&Graph::complete(2), 3).unwrap();
        assert_eq!((r.exists, r.count), (true, 2));
        assert!(!brute_force_bad_coloring(&Graph::complete(5), 3).unwrap().exists);
        assert!(brute_force_bad_coloring(&Graph::complete(8), 3).is_err());
    }

    #[test]
    fn small_sat_values() {
        let cfg = SearchConfig::default();
        let r = compute_sat(4, 3, &cfg).unwrap().done().unwrap();
        assert_eq!(r.min_edges, 6);
        let r = compute_sat(5, 4, &cfg).unwrap().done().unwrap();
        assert_eq!(r.min_edges, 10);
        assert_eq!(r.extremal.len(), 1);
    }

    #[test]
    fn ramsey_numbers() {
        let cfg = SearchConfig::default();
        assert_eq!(family_ramsey_number(3, &cfg).unwrap(), Outcome::Done(5));
        assert_eq!(family_ramsey_number(4, &cfg).unwrap(), Outcome::Done(7));
        assert_eq!(family_ramsey_number(2, &cfg).unwrap(), Outcome::Done(3));
    }

    #[test]
    fn k3_saturated_scan_examples() {
        let five = scan_k3_saturated(5, 2).unwrap();
        assert_eq!(five[0].m(), 5);
        let six = scan_k3_saturated(6, 2).unwrap();
        assert_eq!(six[0].m(), 7);
        let stars = scan_k3_saturated(6, 1).unwrap();
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0].max_degree(), Some(5));
    }

    #[test]
    fn graph6_stream_dedups() {
        let text = "Bw\nBw\nDhc\n";
        assert_eq!(graphs_from_graph6(text.as_bytes()).unwrap().len(), 2);
    }
}
