//! Maximum degree five: 37 colors for every graph.
//!
//! Non-regular graphs go through the low-degree root and girth-five regular
//! graphs through the recoloring in [`crate::girth5`]. The remaining 5-regular
//! graphs with a triangle or a 4-cycle are handled here.

use crate::bounds::DELTA_FIVE_BOUND;
use crate::coloring::{
    backtrack_complete, complete_edges, forbidden_colors, greedy_partial, BranchColoring, Color,
    Palette, PartialColoring, Phase, FALLBACK_NODE_BUDGET,
};
use crate::dispatch::{self, Branch, DispatchReport};
use crate::error::ColoringError;
use crate::girth5::select_induced_matching;
use crate::graph::{EdgeId, Girth, Graph, VertexId};

fn check_five_regular(g: &Graph, girth: usize) -> Result<(), ColoringError> {
    let stats = g.stats();
    if !stats.is_regular || stats.max_degree != 5 {
        if stats.max_degree != 5 {
            return Err(ColoringError::UnsupportedDegree {
                actual: stats.max_degree,
                expected: "exactly 5",
            });
        }
        return Err(ColoringError::NotRegular {
            min: stats.min_degree,
            max: stats.max_degree,
        });
    }
    if stats.components != 1 {
        return Err(ColoringError::NotConnected);
    }
    if stats.girth != Girth::Finite(girth) {
        return Err(ColoringError::WrongGirth {
            required: if girth == 3 { "exactly 3" } else { "exactly 4" },
            actual: stats.girth.to_string(),
        });
    }
    Ok(())
}

fn check_palette(p: Palette) -> Result<(), ColoringError> {
    if (p.size() as usize) < DELTA_FIVE_BOUND {
        return Err(ColoringError::PaletteTooSmall {
            size: p.size() as usize,
            required: DELTA_FIVE_BOUND,
        });
    }
    Ok(())
}

/// The lexicographically least triangle `v1 < v2 < v3`.
pub fn find_triangle(g: &Graph) -> Option<[VertexId; 3]> {
    for a in 0..g.vertex_count() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.has_edge(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// A 4-cycle `root – w1 – common – w2` with the least possible root, then the
/// least `w1`, `w2`, `common`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourCycle {
    pub root: VertexId,
    pub w1: VertexId,
    pub w2: VertexId,
    pub common: VertexId,
}

pub fn find_four_cycle(g: &Graph) -> Option<FourCycle> {
    for root in 0..g.vertex_count() {
        let ns = g.neighbors(root);
        for (i, &w1) in ns.iter().enumerate() {
            for &w2 in &ns[i + 1..] {
                let common = g
                    .neighbors(w1)
                    .iter()
                    .copied()
                    .find(|&x| x != root && g.has_edge(w2, x));
                if let Some(common) = common {
                    return Some(FourCycle {
                        root,
                        w1,
                        w2,
                        common,
                    });
                }
            }
        }
    }
    None
}

/// Result of a triangle release.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleColoring {
    pub result: BranchColoring,
    pub triangle: [VertexId; 3],
    /// Edges left uncolored once the edges at `v2` and `v3` are released.
    pub released: usize,
}

/// 5-regular, girth 3: partial greedy rooted at `v1` of a triangle with 36
/// colors, then uncolor every edge at `v2` and `v3` as well. The twelve
/// edges at the triangle are recolored from 37 colors, the nine pendant ones
/// first (fewest forbidden colors first) and the triangle sides last.
pub fn color_delta5_girth3(g: &Graph, p: Palette) -> Result<TriangleColoring, ColoringError> {
    check_five_regular(g, 3)?;
    check_palette(p)?;
    let triangle = find_triangle(g).ok_or(ColoringError::MissingWitness("triangle"))?;
    let [v1, v2, v3] = triangle;

    let mut c = greedy_partial(g, v1, Palette::new(p.size() as usize - 1))?;
    for v in [v2, v3] {
        for &e in g.incident_edges(v) {
            c.clear(e);
        }
    }
    let released = c.uncolored_edges();
    let sides: Vec<EdgeId> = [(v1, v2), (v2, v3), (v1, v3)]
        .iter()
        .map(|&(a, b)| g.edge_id(a, b).expect("triangle edge"))
        .collect();
    let pendant: Vec<EdgeId> = released
        .iter()
        .copied()
        .filter(|e| !sides.contains(e))
        .collect();

    let fallback_invoked = complete_edges(
        g,
        &mut c,
        &[Phase::adaptive(pendant), Phase::fixed(sides)],
        p,
    )?;
    Ok(TriangleColoring {
        result: BranchColoring {
            coloring: c,
            fallback_invoked,
        },
        triangle,
        released: released.len(),
    })
}

/// Result of the 4-cycle branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCycleColoring {
    pub result: BranchColoring,
    pub cycle: FourCycle,
    /// The edges moved to the last color, when such a matching was found
    /// and kept.
    pub recolored: Option<Vec<EdgeId>>,
}

/// 5-regular, girth 4: partial greedy with 36 colors rooted on a 4-cycle,
/// then move an induced matching of three edges between D_1 and D_2 (at
/// three different root neighbors) to color 37 and color the five root edges.
/// Without such a matching the root edges are colored directly.
///
/// When the greedy pass over the root edges fails, they are completed by
/// backtracking, first with the recoloring in place and then without it.
pub fn color_delta5_girth4(g: &Graph, p: Palette) -> Result<FourCycleColoring, ColoringError> {
    check_five_regular(g, 4)?;
    check_palette(p)?;
    let cycle = find_four_cycle(g).ok_or(ColoringError::MissingWitness("4-cycle"))?;
    let root = cycle.root;
    let alpha: Color = p.size();

    let base = greedy_partial(g, root, Palette::new(alpha as usize - 1))?;
    let dc = g.distance_classes(root)?;
    let groups: Vec<Vec<EdgeId>> = dc
        .class(1)
        .iter()
        .map(|&w| {
            g.neighbors(w)
                .iter()
                .zip(g.incident_edges(w))
                .filter(|&(&x, _)| dc.distance(x) == Some(2))
                .map(|(_, &e)| e)
                .collect()
        })
        .collect();
    let matching = select_induced_matching(g, &groups, 3);
    let root_edges = g.incident_edges(root).to_vec();

    let mut c = base.clone();
    if let Some(m) = &matching {
        for &e in m {
            c.clear(e);
            c.set(e, alpha);
        }
    }
    match complete_edges(g, &mut c, &[Phase::adaptive(root_edges.clone())], p) {
        Ok(fallback_invoked) => {
            return Ok(FourCycleColoring {
                result: BranchColoring {
                    coloring: c,
                    fallback_invoked,
                },
                cycle,
                recolored: matching,
            })
        }
        Err(ColoringError::PaletteExhausted { .. }) if matching.is_some() => {}
        Err(err) => return Err(err),
    }

    // The recolored matching did not help; retry on the plain partial coloring.
    let mut c = base;
    if backtrack_complete(g, &mut c, &root_edges, p, FALLBACK_NODE_BUDGET) {
        log::warn!("4-cycle branch at root {root}: completed only without the recoloring");
        return Ok(FourCycleColoring {
            result: BranchColoring {
                coloring: c,
                fallback_invoked: true,
            },
            cycle,
            recolored: None,
        });
    }
    let edge = root_edges
        .iter()
        .copied()
        .max_by_key(|&e| forbidden_colors(g, &c, e).len())
        .expect("root has edges");
    Err(ColoringError::Infeasible { edge })
}

/// Colors a connected graph of maximum degree five with at most 37 colors,
/// choosing the branch from its minimum degree and girth.
pub fn strong_color_delta5(g: &Graph) -> Result<(PartialColoring, DispatchReport), ColoringError> {
    let stats = g.stats();
    if stats.max_degree != 5 {
        return Err(ColoringError::UnsupportedDegree {
            actual: stats.max_degree,
            expected: "exactly 5",
        });
    }
    if stats.components != 1 {
        return Err(ColoringError::NotConnected);
    }
    let branch = dispatch::choose_branch(&stats);
    debug_assert!(matches!(
        branch,
        Branch::LowDegree | Branch::RegularGirth5 | Branch::Delta5Girth3 | Branch::Delta5Girth4
    ));
    dispatch::strong_color_with(g, Some(branch))
}
