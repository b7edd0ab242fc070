//! Saturation numbers for Ramsey-minimal graphs of the pair (K3, all trees on
//! k vertices).
//!
//! The crate builds the extremal constructions, decides arrowing, bad
//! 2-colorings, saturation and Ramsey-minimality with a pruned backtracking
//! engine, and cross-checks everything against brute-force oracles.

pub mod canon;
pub mod cnf;
pub mod coloring;
pub mod constructions;
pub mod dot;
mod dsu;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod saturation;
pub mod search;
pub mod verify;

pub use coloring::{is_bad_coloring, BadColoringCertificate, Color, TwoColoring};
pub use error::{Error, Result};
pub use graph::{ComponentPartition, EdgeRef, Graph};
pub use search::{
    count_bad_colorings, find_bad_coloring, find_max_red_bad_coloring, forced_blue_edges,
    Outcome, SearchConfig, SearchLimits, SearchResult, SearchStats,
};
