//! Strong edge-coloring of graphs with bounded maximum degree.
//!
//! A strong edge-coloring gives distinct colors to any two edges that share
//! an endpoint or are joined by an edge, so every color class is an induced
//! matching. The routines here guarantee
//!
//! * 2Δ² − 2Δ + 1 colors for every graph (plain greedy),
//! * 2Δ² − 3Δ + 1 colors when some vertex has degree below Δ,
//! * 2Δ² − 3Δ + 2 colors for graphs of girth at least five,
//! * 37 colors for every graph with Δ = 5,
//!
//! and [`dispatch::strong_color`] picks the right one per component. An
//! exact backtracking solver in [`oracle`] is available for small graphs.

pub mod bounds;
pub mod coloring;
pub mod delta5;
pub mod dispatch;
mod error;
pub mod generators;
pub mod girth5;
pub mod graph;
pub mod io;
pub mod oracle;

pub use coloring::{
    color_low_degree_root, forbidden_colors, greedy_assign, greedy_full, greedy_partial,
    verify_strong, BranchColoring, Color, Palette, PartialColoring, Violation, ViolationReason,
};
pub use dispatch::{strong_color, strong_color_with, Branch, DispatchReport, Witness};
pub use error::ColoringError;
pub use generators::{GenError, GeneratorSpec};
pub use graph::{DistanceClassification, EdgeId, Girth, Graph, GraphError, GraphStats, VertexId};
pub use oracle::{exact_chi_s, lower_bound, OracleError, OracleResult};
