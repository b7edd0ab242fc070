//! Graphviz DOT output.

use std::fmt::Write;

use crate::coloring::{Color, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Undirected DOT graph; with a coloring, each edge gets a `color` attribute
/// and blue edges are dashed. `labels[v]`, if given, becomes the vertex label.
pub fn to_dot(g: &Graph, coloring: Option<&TwoColoring>, labels: Option<&[String]>) -> Result<String> {
    if let Some(c) = coloring {
        if c.len() != g.m() {
            return Err(Error::ColoringLength {
                expected: g.m(),
                got: c.len(),
            });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels.and_then(|l| l.get(v)) {
            Some(l) => writeln!(out, "  {v} [label=\"{v}:{}\"];", l.replace('"', "\\\"")).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match coloring.map(|c| c.get(i)) {
            Some(Color::Red) => writeln!(out, "  {u} -- {v} [color=red];").unwrap(),
            Some(Color::Blue) => writeln!(out, "  {u} -- {v} [color=blue, style=dashed];").unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_colored() {
        let g = Graph::path(3);
        let plain = to_dot(&g, None, None).unwrap();
        assert!(plain.contains("0 -- 1;"));
        let c = TwoColoring::new(vec![Color::Red, Color::Blue]);
        let labels = vec!["y".to_string(), "z".to_string(), "A".to_string()];
        let dot = to_dot(&g, Some(&c), Some(&labels)).unwrap();
        assert!(dot.contains("0 -- 1 [color=red];"));
        assert!(dot.contains("1 -- 2 [color=blue, style=dashed];"));
        assert!(dot.contains("label=\"0:y\""));
        assert!(to_dot(&g, Some(&TwoColoring::uniform(1, Color::Red)), None).is_err());
    }
}
