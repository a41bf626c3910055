//! Edge-list and JSON readers and writers.
//!
//! Edge lists hold one `u v` pair per line with 0-based ids. Blank lines and
//! lines starting with `#` (or a DIMACS `c`) are skipped, a DIMACS style
//! `e u v` line is accepted, and an optional `p n m` (or `p edge n m`)
//! header fixes the vertex count. Without a header the vertex count is the
//! largest id plus one.
//!
//! Colorings are written as JSON:
//! `{"n", "num_colors", "bound_claimed", "branch", "edges": [{"u", "v", "color"}]}`
//! with color 0 for an uncolored edge. The same layout without colors (or
//! with them, ignored) is accepted as a JSON graph.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coloring lists edge ({0}, {1}) which is not in the graph")]
    UnknownEdge(VertexId, VertexId),
    #[error("coloring lists edge ({0}, {1}) twice")]
    RepeatedEdge(VertexId, VertexId),
    #[error("coloring is for {found} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// JSON for a `.json` extension, edge list otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph, IoError> {
    let file = File::open(path)?;
    read_graph(BufReader::new(file), GraphFormat::from_path(path))
}

pub fn read_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<Graph, IoError> {
    match format {
        GraphFormat::EdgeList => read_edge_list(reader),
        GraphFormat::Json => read_graph_json(reader),
    }
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, IoError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let parse_err = |message: String| IoError::Parse {
            line: lineno,
            message,
        };
        let trimmed = line.split('#').next().unwrap_or("").trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err("second 'p' header".into()));
                }
                if tokens.len() == 4 {
                    tokens.remove(1);
                }
                if tokens.len() != 3 {
                    return Err(parse_err(format!("expected 'p n m', got '{trimmed}'")));
                }
                let n = parse_id(tokens[1]).map_err(&parse_err)?;
                let m = parse_id(tokens[2]).map_err(&parse_err)?;
                header = Some((n, m, lineno));
                continue;
            }
            "e" => {
                tokens.remove(0);
            }
            _ => {}
        }
        if tokens.len() != 2 {
            return Err(parse_err(format!("expected 'u v', got '{trimmed}'")));
        }
        let u = parse_id(tokens[0]).map_err(&parse_err)?;
        let v = parse_id(tokens[1]).map_err(&parse_err)?;
        pairs.push((u, v, lineno));
    }

    let n = match header {
        Some((n, m, line)) => {
            if m != pairs.len() {
                return Err(IoError::Parse {
                    line,
                    message: format!("header declares {m} edges, found {}", pairs.len()),
                });
            }
            n
        }
        None => pairs
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let edge_list: Vec<_> = pairs.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::new(n, &edge_list).map_err(|err| {
        // Point at the first offending line where one can be named.
        let line = match &err {
            GraphError::SelfLoop(v) => pairs.iter().find(|p| p.0 == *v && p.1 == *v),
            GraphError::OutOfRange { u, v, .. } => pairs
                .iter()
                .find(|p| p.0 == *u && p.1 == *v || p.0 == *v && p.1 == *u),
            GraphError::DuplicateEdge(u, v) => pairs
                .iter()
                .filter(|p| p.0 == *u && p.1 == *v || p.0 == *v && p.1 == *u)
                .nth(1),
            _ => None,
        };
        match line {
            Some(&(_, _, line)) => IoError::Parse {
                line,
                message: err.to_string(),
            },
            None => IoError::Graph(err),
        }
    })
}

fn parse_id(token: &str) -> Result<usize, String> {
    token
        .parse()
        .map_err(|_| format!("'{token}' is not a non-negative integer"))
}

/// Edge list with a `p n m` header, one edge per line in id order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub u: VertexId,
    pub v: VertexId,
    #[serde(default)]
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    #[serde(default)]
    pub num_colors: Color,
    #[serde(default)]
    pub bound_claimed: usize,
    #[serde(default)]
    pub branch: String,
    pub edges: Vec<EdgeEntry>,
}

impl ColoringDocument {
    pub fn new(g: &Graph, c: &PartialColoring, bound_claimed: usize, branch: &str) -> Self {
        assert_eq!(c.len(), g.edge_count(), "coloring belongs to another graph");
        ColoringDocument {
            n: g.vertex_count(),
            num_colors: c.colors_used(),
            bound_claimed,
            branch: branch.to_owned(),
            edges: g
                .edges()
                .iter()
                .zip(c.to_colors())
                .map(|(&(u, v), color)| EdgeEntry { u, v, color })
                .collect(),
        }
    }

    /// The coloring of `g` described by this document. Edges of `g` that
    /// the document omits are uncolored.
    pub fn coloring_for(&self, g: &Graph) -> Result<PartialColoring, IoError> {
        if self.n != g.vertex_count() {
            return Err(IoError::VertexCountMismatch {
                expected: g.vertex_count(),
                found: self.n,
            });
        }
        let mut colors = vec![0; g.edge_count()];
        let mut seen = vec![false; g.edge_count()];
        for entry in &self.edges {
            let e = g
                .edge_id(entry.u, entry.v)
                .ok_or(IoError::UnknownEdge(entry.u, entry.v))?;
            if std::mem::replace(&mut seen[e], true) {
                return Err(IoError::RepeatedEdge(entry.u, entry.v));
            }
            colors[e] = entry.color;
        }
        Ok(PartialColoring::from_colors(&colors))
    }

    pub fn graph(&self) -> Result<Graph, IoError> {
        let pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        Ok(Graph::new(self.n, &pairs)?)
    }
}

pub fn read_graph_json<R: Read>(reader: R) -> Result<Graph, IoError> {
    let doc: GraphDocument = serde_json::from_reader(reader)?;
    let pairs: Vec<_> = doc.edges.iter().map(|e| (e.u, e.v)).collect();
    Ok(Graph::new(doc.n, &pairs)?)
}

#[derive(Deserialize)]
struct GraphDocument {
    n: usize,
    edges: Vec<EdgeEntry>,
}

/// Compact JSON followed by a newline. Output depends only on the inputs.
pub fn write_coloring<W: Write>(
    g: &Graph,
    c: &PartialColoring,
    bound_claimed: usize,
    branch: &str,
    mut out: W,
) -> Result<(), IoError> {
    let doc = ColoringDocument::new(g, c, bound_claimed, branch);
    serde_json::to_writer(&mut out, &doc)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn read_coloring<R: Read>(reader: R) -> Result<ColoringDocument, IoError> {
    Ok(serde_json::from_reader(reader)?)
}
