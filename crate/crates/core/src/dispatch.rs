//! Picks a coloring routine for each connected component and merges the
//! results.

use std::fmt;
use std::str::FromStr;

use crate::bounds;
use crate::coloring::{color_low_degree_root, greedy_full, Color, Palette, PartialColoring};
use crate::delta5::{color_delta5_girth3, color_delta5_girth4, FourCycle};
use crate::error::ColoringError;
use crate::girth5::color_regular_girth5;
use crate::graph::{Girth, Graph, GraphStats, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// No edges.
    Trivial,
    /// Plain greedy in edge-id order, 2Δ² − 2Δ + 1 colors.
    GreedyGeneral,
    /// Minimum degree below Δ, 2Δ² − 3Δ + 1 colors.
    LowDegree,
    /// Regular, girth ≥ 5, Δ ≥ 3, 2Δ² − 3Δ + 2 colors.
    RegularGirth5,
    /// 5-regular with a triangle, 37 colors.
    Delta5Girth3,
    /// 5-regular of girth 4, 37 colors.
    Delta5Girth4,
}

impl Branch {
    pub const ALL: [Branch; 6] = [
        Branch::Trivial,
        Branch::GreedyGeneral,
        Branch::LowDegree,
        Branch::RegularGirth5,
        Branch::Delta5Girth3,
        Branch::Delta5Girth4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Trivial => "trivial",
            Branch::GreedyGeneral => "greedy-general",
            Branch::LowDegree => "low-degree",
            Branch::RegularGirth5 => "regular-girth5",
            Branch::Delta5Girth3 => "delta5-girth3",
            Branch::Delta5Girth4 => "delta5-girth4",
        }
    }

    /// Palette size the branch guarantees at maximum degree `delta`.
    pub fn bound(self, delta: usize) -> usize {
        match self {
            Branch::Trivial => 0,
            Branch::GreedyGeneral => bounds::greedy_bound(delta),
            Branch::LowDegree => bounds::partial_bound(delta),
            Branch::RegularGirth5 => bounds::girth_five_bound(delta),
            Branch::Delta5Girth3 | Branch::Delta5Girth4 => bounds::DELTA_FIVE_BOUND,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Branch::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown branch '{s}'"))
    }
}

/// The structure a branch was anchored on, in the caller's vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    None,
    Root(VertexId),
    Triangle([VertexId; 3]),
    FourCycle(FourCycle),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => f.write_str("-"),
            Witness::Root(v) => write!(f, "root {v}"),
            Witness::Triangle([a, b, c]) => write!(f, "triangle {a}-{b}-{c}"),
            Witness::FourCycle(q) => {
                write!(f, "4-cycle {}-{}-{}-{}", q.root, q.w1, q.common, q.w2)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Smallest vertex of the component.
    pub first_vertex: VertexId,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub branch: Branch,
    pub witness: Witness,
    pub colors_used: Color,
    pub bound_claimed: usize,
    pub fallback_invoked: bool,
}

/// Audit trail of one dispatched coloring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DispatchReport {
    /// Components with at least one edge, by smallest vertex.
    pub components: Vec<ComponentReport>,
    pub colors_used: Color,
    /// Largest bound claimed by any component.
    pub bound_claimed: usize,
    pub fallback_invoked: bool,
}

impl DispatchReport {
    /// `trivial` for an edgeless graph, the common branch when all
    /// components agree, otherwise the distinct branches joined with `+`.
    pub fn branch_label(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for comp in &self.components {
            if !names.contains(&comp.branch.name()) {
                names.push(comp.branch.name());
            }
        }
        if names.is_empty() {
            Branch::Trivial.name().to_owned()
        } else {
            names.join("+")
        }
    }

    /// Whether every component stayed within its claimed bound.
    pub fn within_bounds(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.colors_used as usize <= c.bound_claimed)
    }
}

/// Branch for a connected graph with the given statistics.
pub fn choose_branch(stats: &GraphStats) -> Branch {
    let delta = stats.max_degree;
    if stats.edges == 0 {
        Branch::Trivial
    } else if delta <= 2 {
        Branch::GreedyGeneral
    } else if stats.min_degree < delta {
        Branch::LowDegree
    } else if stats.girth.at_least(5) {
        Branch::RegularGirth5
    } else if delta == 5 {
        match stats.girth {
            Girth::Finite(3) => Branch::Delta5Girth3,
            _ => Branch::Delta5Girth4,
        }
    } else {
        Branch::GreedyGeneral
    }
}

/// Colors every component with its automatically chosen branch.
pub fn strong_color(g: &Graph) -> Result<(PartialColoring, DispatchReport), ColoringError> {
    strong_color_with(g, None)
}

/// Like [`strong_color`], but with `forced` every component with edges must
/// go through that branch; a component outside the branch's preconditions is
/// an error.
pub fn strong_color_with(
    g: &Graph,
    forced: Option<Branch>,
) -> Result<(PartialColoring, DispatchReport), ColoringError> {
    let mut coloring = PartialColoring::new(g.edge_count());
    let mut report = DispatchReport::default();
    for vertices in g.components() {
        let (sub, edge_map) = g.induced_subgraph(&vertices);
        if sub.edge_count() == 0 {
            continue;
        }
        let stats = sub.stats();
        let branch = forced.unwrap_or_else(|| choose_branch(&stats));
        let (local, witness, fallback_invoked) = color_component(&sub, &stats, branch)?;
        let witness = match witness {
            Witness::None => Witness::None,
            Witness::Root(v) => Witness::Root(vertices[v]),
            Witness::Triangle(t) => Witness::Triangle(t.map(|v| vertices[v])),
            Witness::FourCycle(q) => Witness::FourCycle(FourCycle {
                root: vertices[q.root],
                w1: vertices[q.w1],
                w2: vertices[q.w2],
                common: vertices[q.common],
            }),
        };
        for (e, &orig) in edge_map.iter().enumerate() {
            if let Some(col) = local.get(e) {
                coloring.set(orig, col);
            }
        }
        let comp = ComponentReport {
            first_vertex: vertices[0],
            vertex_count: vertices.len(),
            edge_count: sub.edge_count(),
            max_degree: stats.max_degree,
            branch,
            witness,
            colors_used: local.colors_used(),
            bound_claimed: branch.bound(stats.max_degree),
            fallback_invoked,
        };
        report.colors_used = report.colors_used.max(comp.colors_used);
        report.bound_claimed = report.bound_claimed.max(comp.bound_claimed);
        report.fallback_invoked |= comp.fallback_invoked;
        report.components.push(comp);
    }
    Ok((coloring, report))
}

fn color_component(
    g: &Graph,
    stats: &GraphStats,
    branch: Branch,
) -> Result<(PartialColoring, Witness, bool), ColoringError> {
    let delta = stats.max_degree;
    let palette = Palette::new(branch.bound(delta));
    match branch {
        Branch::Trivial => Err(ColoringError::UnsupportedDegree {
            actual: delta,
            expected: "0 for the trivial branch",
        }),
        Branch::GreedyGeneral => {
            let order: Vec<_> = (0..g.edge_count()).collect();
            Ok((greedy_full(g, &order, palette)?, Witness::None, false))
        }
        Branch::LowDegree => {
            let root = (0..g.vertex_count())
                .min_by_key(|&v| g.degree(v))
                .expect("component has vertices");
            let out = color_low_degree_root(g, root, palette)?;
            Ok((out.coloring, Witness::Root(root), out.fallback_invoked))
        }
        Branch::RegularGirth5 => {
            let out = color_regular_girth5(g, palette)?;
            Ok((
                out.result.coloring,
                Witness::Root(out.root),
                out.result.fallback_invoked,
            ))
        }
        Branch::Delta5Girth3 => {
            let out = color_delta5_girth3(g, palette)?;
            Ok((
                out.result.coloring,
                Witness::Triangle(out.triangle),
                out.result.fallback_invoked,
            ))
        }
        Branch::Delta5Girth4 => {
            let out = color_delta5_girth4(g, palette)?;
            Ok((
                out.result.coloring,
                Witness::FourCycle(out.cycle),
                out.result.fallback_invoked,
            ))
        }
    }
}
