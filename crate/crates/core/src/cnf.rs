//! DIMACS CNF encoding of the bad-coloring problem, for external SAT solvers.
//!
//! Variable `i + 1` is edge `i` of the graph, true meaning red. Each triangle
//! contributes "not all red"; each tree on `k` vertices contained in the graph
//! contributes "not all blue". The formula is satisfiable iff a bad coloring
//! exists.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub const MAX_CNF_K: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub triangle_clauses: Vec<[i32; 3]>,
    /// Edge variables of each `k`-vertex subtree, all positive literals.
    pub subtree_clauses: Vec<Vec<i32>>,
    /// `(u, v)` of each variable, in variable order.
    pub var_edges: Vec<(usize, usize)>,
}

impl Cnf {
    pub fn clauses(&self) -> impl Iterator<Item = Vec<i32>> + '_ {
        self.triangle_clauses
            .iter()
            .map(|t| t.to_vec())
            .chain(self.subtree_clauses.iter().cloned())
    }

    pub fn num_clauses(&self) -> usize {
        self.triangle_clauses.len() + self.subtree_clauses.len()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (i, (u, v)) in self.var_edges.iter().enumerate() {
            writeln!(out, "c var {} = edge {u} {v}", i + 1).unwrap();
        }
        writeln!(out, "p cnf {} {}", self.num_vars, self.num_clauses()).unwrap();
        for clause in self.clauses() {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Connected vertex sets of size `k`, each sorted.
fn connected_sets(g: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let mut level: BTreeSet<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for _ in 1..k {
        let mut next = BTreeSet::new();
        for set in &level {
            for &v in set {
                for w in g.neighbors(v) {
                    if let Err(pos) = set.binary_search(&w) {
                        let mut grown = set.clone();
                        grown.insert(pos, w);
                        next.insert(grown);
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// Every acyclic choice of `|set| - 1` edges inside `set`.
fn spanning_trees(g: &Graph, set: &[usize], out: &mut Vec<Vec<i32>>) {
    let inner: Vec<usize> = (0..g.m())
        .filter(|&i| {
            let (u, v) = g.edges()[i];
            set.binary_search(&u).is_ok() && set.binary_search(&v).is_ok()
        })
        .collect();
    let need = set.len() - 1;
    let mut chosen = Vec::with_capacity(need);
    fn rec(g: &Graph, set: &[usize], inner: &[usize], start: usize, need: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<i32>>) {
        if chosen.len() == need {
            if is_forest(g, set, chosen) {
                out.push(chosen.iter().map(|&i| i as i32 + 1).collect());
            }
            return;
        }
        for j in start..inner.len() {
            if inner.len() - j < need - chosen.len() {
                break;
            }
            chosen.push(inner[j]);
            rec(g, set, inner, j + 1, need, chosen, out);
            chosen.pop();
        }
    }
    rec(g, set, &inner, 0, need, &mut chosen, out);
}

fn is_forest(g: &Graph, set: &[usize], edges: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..set.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &i in edges {
        let (u, v) = g.edges()[i];
        let a = find(&mut parent, set.binary_search(&u).unwrap());
        let b = find(&mut parent, set.binary_search(&v).unwrap());
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

pub fn export_cnf(g: &Graph, k: usize) -> Result<Cnf> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if k > MAX_CNF_K {
        return Err(Error::Unsupported(format!(
            "CNF export enumerates k-vertex subtrees and is limited to k <= {MAX_CNF_K}"
        )));
    }
    let mut triangle_clauses = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        for w in g.neighbors(u).filter(|&w| w > v && g.has_edge(v, w)) {
            let a = g.edge_index(u, w).unwrap();
            let b = g.edge_index(v, w).unwrap();
            triangle_clauses.push([-(i as i32 + 1), -(a as i32 + 1), -(b as i32 + 1)]);
        }
    }
    let mut subtree_clauses = Vec::new();
    for set in connected_sets(g, k) {
        spanning_trees(g, &set, &mut subtree_clauses);
    }
    Ok(Cnf {
        num_vars: g.m(),
        triangle_clauses,
        subtree_clauses,
        var_edges: g.edges().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain DPLL with unit propagation, enough for the tiny formulas here.
    fn satisfiable(num_vars: usize, clauses: &[Vec<i32>]) -> bool {
        fn solve(clauses: &[Vec<i32>], assign: &mut [i8]) -> bool {
            loop {
                let mut unit = None;
                for c in clauses {
                    let mut open = None;
                    let mut n_open = 0;
                    let mut sat = false;
                    for &l in c {
                        let val = assign[l.unsigned_abs() as usize];
                        if val == 0 {
                            n_open += 1;
                            open = Some(l);
                        } else if (val > 0) == (l > 0) {
                            sat = true;
                            break;
                        }
                    }
                    if sat {
                        continue;
                    }
                    match n_open {
                        0 => return false,
                        1 => {
                            unit = open;
                            break;
                        }
                        _ => {}
                    }
                }
                match unit {
                    Some(l) => assign[l.unsigned_abs() as usize] = if l > 0 { 1 } else { -1 },
                    None => break,
                }
            }
            let Some(v) = (1..assign.len()).find(|&v| assign[v] == 0) else {
                return true;
            };
            for val in [1, -1] {
                let mut next = assign.to_vec();
                next[v] = val;
                if solve(clauses, &mut next) {
                    return true;
                }
            }
            false
        }
        solve(clauses, &mut vec![0; num_vars + 1])
    }

    #[test]
    fn triangle_k3() {
        let cnf = export_cnf(&Graph::complete(3), 3).unwrap();
        assert_eq!(cnf.num_vars, 3);
        assert_eq!(cnf.triangle_clauses.len(), 1);
        assert_eq!(cnf.subtree_clauses.len(), 3);
        let text = cnf.to_dimacs();
        assert!(text.contains("p cnf 3 4"));
        assert!(text.contains("c var 1 = edge 0 1"));
        assert!(text.contains("-1 -2 -3 0"));
    }

    #[test]
    fn star_k4() {
        let cnf = export_cnf(&Graph::star(4), 4).unwrap();
        assert_eq!(cnf.num_vars, 3);
        assert!(cnf.triangle_clauses.is_empty());
        assert_eq!(cnf.subtree_clauses, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn k7_k4_unsat_and_k6_sat() {
        let k7 = export_cnf(&Graph::complete(7), 4).unwrap();
        // 35 four-vertex subsets, each with 16 spanning trees
        assert_eq!(k7.subtree_clauses.len(), 35 * 16);
        assert!(!satisfiable(k7.num_vars, &k7.clauses().collect::<Vec<_>>()));
        let k6 = export_cnf(&Graph::complete(6), 4).unwrap();
        assert!(satisfiable(k6.num_vars, &k6.clauses().collect::<Vec<_>>()));
    }

    #[test]
    fn large_k_rejected() {
        assert!(matches!(export_cnf(&Graph::complete(8), 7), Err(Error::Unsupported(_))));
    }
}
