//! Red/blue edge colorings and bad-coloring certificates.
//!
//! A coloring is *bad* for `k` when the red subgraph has no triangle and the
//! blue subgraph contains no tree on `k` vertices. A graph contains some
//! `k`-vertex tree exactly when one of its components has at least `k`
//! vertices, so the blue condition is checked as a bound on component sizes.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// Total assignment of colors to the edges of a graph, indexed like `Graph::edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    colors: Vec<Color>,
}

impl TwoColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        TwoColoring { colors }
    }

    pub fn uniform(m: usize, c: Color) -> Self {
        TwoColoring { colors: vec![c; m] }
    }

    /// Colors every edge red except the listed pairs, which must be edges of `g`.
    pub fn with_blue_pairs(g: &Graph, blue: &[(usize, usize)]) -> Result<Self> {
        let mut colors = vec![Color::Red; g.m()];
        for &(u, v) in blue {
            let i = g
                .edge_index(u, v)
                .ok_or_else(|| invalid(format!("blue pair ({u}, {v}) is not an edge")))?;
            colors[i] = Color::Blue;
        }
        Ok(TwoColoring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Red).count()
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::ColoringLength {
                expected: g.m(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }

    /// Spanning subgraph of the edges with color `c`.
    pub fn subgraph(&self, g: &Graph, c: Color) -> Result<Graph> {
        self.check_len(g)?;
        Ok(g.spanning_subgraph(|i| self.colors[i] == c))
    }

    pub fn red_graph(&self, g: &Graph) -> Result<Graph> {
        self.subgraph(g, Color::Red)
    }

    pub fn blue_graph(&self, g: &Graph) -> Result<Graph> {
        self.subgraph(g, Color::Blue)
    }
}

/// True iff the red subgraph is triangle-free and every blue component has at most `k - 1` vertices.
pub fn is_bad_coloring(g: &Graph, k: usize, c: &TwoColoring) -> Result<bool> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    c.check_len(g)?;
    Ok(c.red_graph(g)?.is_triangle_free() && c.blue_graph(g)?.components().largest() < k)
}

/// A coloring together with the evidence that it is bad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadColoringCertificate {
    pub k: usize,
    pub coloring: TwoColoring,
    /// Vertex counts of the blue components, ordered by smallest member.
    pub blue_component_sizes: Vec<usize>,
    pub red_triangle_free: bool,
}

impl BadColoringCertificate {
    /// Verifies `coloring` from scratch and wraps it; fails if it is not bad.
    pub fn new(g: &Graph, k: usize, coloring: TwoColoring) -> Result<Self> {
        if !is_bad_coloring(g, k, &coloring)? {
            return Err(invalid("coloring is not a bad 2-coloring"));
        }
        let blue_component_sizes = coloring.blue_graph(g)?.components().sizes;
        Ok(BadColoringCertificate {
            k,
            coloring,
            blue_component_sizes,
            red_triangle_free: true,
        })
    }

    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(self.red_triangle_free
            && is_bad_coloring(g, self.k, &self.coloring)?
            && self.coloring.blue_graph(g)?.components().sizes == self.blue_component_sizes)
    }

    pub fn to_json(&self, g: &Graph) -> CertificateJson {
        CertificateJson {
            n: g.n(),
            k: self.k,
            edges: g
                .edges()
                .iter()
                .zip(self.coloring.colors())
                .map(|(&(u, v), &c)| (u, v, c))
                .collect(),
            red_edges: self.coloring.red_count(),
            blue_component_sizes: self.blue_component_sizes.clone(),
            red_triangle_free: self.red_triangle_free,
        }
    }
}

/// Serialized certificate: the edge list with colors plus the evidence fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<(usize, usize, Color)>,
    pub red_edges: usize,
    pub blue_component_sizes: Vec<usize>,
    pub red_triangle_free: bool,
}

impl CertificateJson {
    /// Rebuilds the coloring against `g`; every listed pair must be an edge and every edge listed once.
    pub fn coloring_for(&self, g: &Graph) -> Result<TwoColoring> {
        if self.n != g.n() || self.edges.len() != g.m() {
            return Err(Error::ColoringLength {
                expected: g.m(),
                got: self.edges.len(),
            });
        }
        let mut colors: Vec<Option<Color>> = vec![None; g.m()];
        for &(u, v, c) in &self.edges {
            let i = g
                .edge_index(u, v)
                .ok_or_else(|| invalid(format!("({u}, {v}) is not an edge")))?;
            if colors[i].replace(c).is_some() {
                return Err(invalid(format!("edge ({u}, {v}) listed twice")));
            }
        }
        Ok(TwoColoring::new(colors.into_iter().map(|c| c.unwrap()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_examples() {
        let k3 = Graph::complete(3);
        assert!(!is_bad_coloring(&k3, 3, &TwoColoring::uniform(3, Color::Red)).unwrap());
        let one_blue = TwoColoring::new(vec![Color::Blue, Color::Red, Color::Red]);
        assert!(is_bad_coloring(&k3, 3, &one_blue).unwrap());
        // two blue edges form a 3-vertex blue tree
        let two_blue = TwoColoring::new(vec![Color::Blue, Color::Blue, Color::Red]);
        assert!(!is_bad_coloring(&k3, 3, &two_blue).unwrap());
        assert!(is_bad_coloring(&k3, 4, &two_blue).unwrap());
    }

    #[test]
    fn argument_errors() {
        let k3 = Graph::complete(3);
        assert!(matches!(
            is_bad_coloring(&k3, 3, &TwoColoring::uniform(2, Color::Red)),
            Err(Error::ColoringLength { expected: 3, got: 2 })
        ));
        assert!(is_bad_coloring(&k3, 1, &TwoColoring::uniform(3, Color::Red)).is_err());
    }

    #[test]
    fn k6_two_blue_triangles() {
        let g = Graph::complete(6);
        let blue: Vec<_> = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)].into();
        let c = TwoColoring::with_blue_pairs(&g, &blue).unwrap();
        let cert = BadColoringCertificate::new(&g, 4, c).unwrap();
        assert_eq!(cert.blue_component_sizes, vec![3, 3]);
        assert!(cert.verify(&g).unwrap());
        assert!(BadColoringCertificate::new(&g, 3, cert.coloring.clone()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let cert = BadColoringCertificate::new(&g, 3, TwoColoring::uniform(5, Color::Red)).unwrap();
        let text = serde_json::to_string(&cert.to_json(&g)).unwrap();
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.coloring_for(&g).unwrap(), cert.coloring);
        assert!(text.contains("\"red\""));
    }
}
