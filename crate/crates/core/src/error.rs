use thiserror::Error;

use crate::coloring::Color;
use crate::graph::{EdgeId, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("palette exhausted at edge {edge}: all of {forbidden:?} are forbidden")]
    PaletteExhausted { edge: EdgeId, forbidden: Vec<Color> },
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("graph must be connected")]
    NotConnected,
    #[error("edge order is not a permutation of all edges")]
    BadOrder,
    #[error("root {root} has degree {degree}, expected at most {limit}")]
    RootDegreeTooHigh {
        root: VertexId,
        degree: usize,
        limit: usize,
    },
    #[error("graph must be regular (min degree {min}, max degree {max})")]
    NotRegular { min: usize, max: usize },
    #[error("unsupported maximum degree {actual}: {expected}")]
    UnsupportedDegree {
        actual: usize,
        expected: &'static str,
    },
    #[error("girth {actual} does not match the required {required}")]
    WrongGirth {
        required: &'static str,
        actual: String,
    },
    #[error("palette of size {size} is below the required {required}")]
    PaletteTooSmall { size: usize, required: usize },
    #[error("layer structure around root {root} breaks the girth-five picture: {detail}")]
    Structure { root: VertexId, detail: String },
    #[error("no induced transversal matching exists around root {root}")]
    NoTransversal { root: VertexId },
    #[error("graph has no {0}")]
    MissingWitness(&'static str),
    #[error("could not complete the coloring (last exhausted edge {edge})")]
    Infeasible { edge: EdgeId },
}
