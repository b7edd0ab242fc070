//! Canonical forms for small graphs.
//!
//! Individualization-refinement: the ordered vertex partition is refined to an
//! equitable one, the first non-singleton cell is split by individualizing
//! each of its vertices in turn, and the lexicographically smallest adjacency
//! code over all discrete leaves is the canonical form. Vertices that are
//! twins of an already individualized vertex in the same cell are skipped,
//! since swapping twins is an automorphism that fixes the partition.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CANON_N: usize = 10;

type Partition = Vec<Vec<usize>>;

/// Byte string identical for isomorphic graphs and distinct otherwise.
/// Layout: `[n, code bytes big-endian]` where the code packs the upper
/// triangle of the relabelled adjacency matrix column by column.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let (code, _) = canonical_code(g)?;
    let n = g.n();
    let bytes = (n * n.saturating_sub(1) / 2).div_ceil(8);
    let mut out = Vec::with_capacity(1 + bytes);
    out.push(n as u8);
    out.extend_from_slice(&code.to_be_bytes()[8 - bytes..]);
    Ok(out)
}

/// Canonical code plus a labelling `perm[v] = canonical position of v` that attains it.
pub fn canonical_code(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::Unsupported(format!(
            "canonical form needs n <= {MAX_CANON_N}, got {n}"
        )));
    }
    let rows: Vec<u64> = (0..n).map(|v| if n == 0 { 0 } else { g.row_word(v) }).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    let start = refine(&rows, vec![(0..n).collect()]);
    search(&rows, start, &mut best);
    Ok(best.unwrap_or((0, Vec::new())))
}

/// Relabels `g` into canonical vertex order.
pub fn canonical_relabel(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_code(g)?;
    g.relabel(&perm)
}

fn code_of(rows: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | (rows[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn search(rows: &[u64], part: Partition, best: &mut Option<(u64, Vec<usize>)>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
        let code = code_of(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            let mut perm = vec![0; order.len()];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            *best = Some((code, perm));
        }
        return;
    };
    let cell = &part[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(rows, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = part.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(rows, refine(rows, next), best);
    }
}

fn are_twins(rows: &[u64], u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    rows[u] & mask == rows[v] & mask
}

/// Splits cells by neighbour counts into every cell until stable. Sub-cells are
/// ordered by their count vectors, which keeps the result labelling-invariant.
fn refine(rows: &[u64], mut part: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = part
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks.iter().map(|m| (rows[v] & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i + 1;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                i = j;
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relabelled_cycle_matches() {
        let c4 = Graph::cycle(4).unwrap();
        let other = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&other).unwrap());
    }

    #[test]
    fn different_graphs_differ() {
        let k3k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        let p4 = Graph::path(4);
        assert_ne!(canonical_form(&k3k1).unwrap(), canonical_form(&p4).unwrap());
        // same degree sequence, not isomorphic
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_k3).unwrap());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let forms: HashSet<Vec<u8>> = (0u32..64)
            .map(|mask| {
                let edges = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
                canonical_form(&Graph::from_edges(4, edges).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap(), vec![0]);
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap(), vec![1]);
        assert!(matches!(
            canonical_form(&Graph::empty(11)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn relabel_attains_code() {
        let g = Graph::petersen();
        let (code, _) = canonical_code(&g).unwrap();
        let h = canonical_relabel(&g).unwrap();
        let order: Vec<usize> = (0..10).collect();
        let rows: Vec<u64> = (0..10).map(|v| h.row_word(v)).collect();
        assert_eq!(code_of(&rows, &order), code);
    }
}
