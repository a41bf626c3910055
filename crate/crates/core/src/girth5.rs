//! Regular graphs of girth at least five: 2Δ² − 3Δ + 2 colors.
//!
//! After the root-compatible partial greedy, every root edge sees Δ − 1
//! uncolored root edges but up to 2Δ² − 3Δ + 1 colored ones. Recoloring one
//! edge at each neighbor of the root with a single fresh color α turns Δ
//! forbidden entries into one, which leaves room for the root edges.

use std::collections::BTreeMap;

use crate::bounds;
use crate::coloring::{complete_edges, greedy_partial, BranchColoring, Color, Palette, Phase};
use crate::error::ColoringError;
use crate::graph::{DistanceClassification, EdgeId, Graph, VertexId};

/// The first two BFS layers around a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerStructure {
    pub root: VertexId,
    /// D_1 in ascending order.
    pub w_list: Vec<VertexId>,
    /// `w_sets[i]` is N(w_list[i]) ∩ D_2, ascending.
    pub w_sets: Vec<Vec<VertexId>>,
    /// Neighbors inside D_2 of each D_2 vertex that has any.
    pub d2_adjacency: BTreeMap<VertexId, Vec<VertexId>>,
}

impl LayerStructure {
    /// Candidate edges `w_i x`, `x ∈ W_i`, one list per `w_i`.
    pub fn candidate_edges(&self, g: &Graph) -> Vec<Vec<EdgeId>> {
        self.w_list
            .iter()
            .zip(&self.w_sets)
            .map(|(&w, set)| {
                set.iter()
                    .map(|&x| g.edge_id(w, x).expect("layer edge exists"))
                    .collect()
            })
            .collect()
    }
}

/// Collects D_1, the sets W_i and the adjacency inside D_2.
///
/// With `claim_girth_five`, also checks what girth at least five forces:
/// D_1 and every W_i independent, the W_i pairwise disjoint, and no vertex of
/// one W_i with two neighbors in another.
pub fn build_layers(
    g: &Graph,
    dc: &DistanceClassification,
    claim_girth_five: bool,
) -> Result<LayerStructure, ColoringError> {
    let root = dc.root();
    let in_d2 = |x: VertexId| dc.distance(x) == Some(2);
    let w_list = dc.class(1).to_vec();
    let w_sets: Vec<Vec<VertexId>> = w_list
        .iter()
        .map(|&w| {
            g.neighbors(w)
                .iter()
                .copied()
                .filter(|&x| in_d2(x))
                .collect()
        })
        .collect();
    let d2_adjacency: BTreeMap<_, _> = dc
        .class(2)
        .iter()
        .filter_map(|&x| {
            let inner: Vec<_> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| in_d2(y))
                .collect();
            (!inner.is_empty()).then_some((x, inner))
        })
        .collect();
    let ls = LayerStructure {
        root,
        w_list,
        w_sets,
        d2_adjacency,
    };
    if claim_girth_five {
        check_girth_five_layers(g, &ls)?;
    }
    Ok(ls)
}

fn check_girth_five_layers(g: &Graph, ls: &LayerStructure) -> Result<(), ColoringError> {
    let fail = |detail: String| ColoringError::Structure {
        root: ls.root,
        detail,
    };
    for (i, &a) in ls.w_list.iter().enumerate() {
        for &b in &ls.w_list[i + 1..] {
            if g.has_edge(a, b) {
                return Err(fail(format!("D_1 vertices {a} and {b} are adjacent")));
            }
        }
    }
    let mut owner = BTreeMap::new();
    for (i, set) in ls.w_sets.iter().enumerate() {
        for &x in set {
            if let Some(j) = owner.insert(x, i) {
                return Err(fail(format!(
                    "{x} is a common neighbor of {} and {}",
                    ls.w_list[j], ls.w_list[i]
                )));
            }
        }
    }
    for (&x, inner) in &ls.d2_adjacency {
        let mut hit = BTreeMap::new();
        for &y in inner {
            let (i, j) = (owner[&x], owner[&y]);
            if i == j {
                return Err(fail(format!("{x} and {y} are adjacent inside one W set")));
            }
            if hit.insert(j, y).is_some() {
                return Err(fail(format!("{x} has two neighbors in one W set")));
            }
        }
    }
    Ok(())
}

/// Searches for `need` pairwise non-conflicting edges, at most one from each
/// group, with forward checking: choosing an edge strikes every conflicting
/// candidate from the later groups, and a branch dies once too few groups
/// keep a candidate.
pub(crate) fn select_induced_matching(
    g: &Graph,
    groups: &[Vec<EdgeId>],
    need: usize,
) -> Option<Vec<EdgeId>> {
    let mut chosen = Vec::with_capacity(need);
    if extend_matching(g, groups.to_vec(), 0, need, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_matching(
    g: &Graph,
    domains: Vec<Vec<EdgeId>>,
    from: usize,
    need: usize,
    chosen: &mut Vec<EdgeId>,
) -> bool {
    if chosen.len() == need {
        return true;
    }
    let live = domains[from..].iter().filter(|d| !d.is_empty()).count();
    if live < need - chosen.len() {
        return false;
    }
    for i in from..domains.len() {
        for &e in &domains[i] {
            let mut next = domains.clone();
            for d in &mut next[i + 1..] {
                d.retain(|&f| !g.edges_conflict(e, f));
            }
            chosen.push(e);
            if extend_matching(g, next, i + 1, need, chosen) {
                return true;
            }
            chosen.pop();
        }
        // Skipping group i only helps when some groups may go unused.
        let remaining_after = domains[i + 1..].iter().filter(|d| !d.is_empty()).count();
        if remaining_after < need - chosen.len() {
            break;
        }
    }
    false
}

/// An induced matching `{w_i v_i}` with `v_i ∈ W_i`, one edge for every
/// neighbor of the root, in `w_list` order.
pub fn find_transversal_matching(
    g: &Graph,
    ls: &LayerStructure,
) -> Result<Vec<EdgeId>, ColoringError> {
    let groups = ls.candidate_edges(g);
    if groups.iter().any(Vec::is_empty) {
        return Err(ColoringError::NoTransversal { root: ls.root });
    }
    select_induced_matching(g, &groups, groups.len())
        .ok_or(ColoringError::NoTransversal { root: ls.root })
}

/// Outcome of [`color_regular_girth5`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Girth5Coloring {
    pub result: BranchColoring,
    pub root: VertexId,
    pub transversal: Vec<EdgeId>,
}

/// Total strong coloring of a connected Δ-regular graph of girth at least
/// five, Δ ≥ 3, with the palette `p` of 2Δ² − 3Δ + 2 colors.
///
/// Rooted at vertex 0: partial greedy with all but the last color, then the
/// transversal matching takes the last color, then the root edges are
/// colored greedily.
pub fn color_regular_girth5(g: &Graph, p: Palette) -> Result<Girth5Coloring, ColoringError> {
    let stats = g.stats();
    if !stats.is_regular {
        return Err(ColoringError::NotRegular {
            min: stats.min_degree,
            max: stats.max_degree,
        });
    }
    let delta = stats.max_degree;
    if delta < 3 {
        return Err(ColoringError::UnsupportedDegree {
            actual: delta,
            expected: "at least 3",
        });
    }
    if !stats.girth.at_least(5) {
        return Err(ColoringError::WrongGirth {
            required: "at least 5",
            actual: stats.girth.to_string(),
        });
    }
    if stats.components != 1 {
        return Err(ColoringError::NotConnected);
    }
    let required = bounds::girth_five_bound(delta);
    if (p.size() as usize) < required {
        return Err(ColoringError::PaletteTooSmall {
            size: p.size() as usize,
            required,
        });
    }

    let root = 0;
    let alpha: Color = p.size();
    let mut c = greedy_partial(g, root, Palette::new(alpha as usize - 1))?;
    let dc = g.distance_classes(root)?;
    let ls = build_layers(g, &dc, true)?;
    let transversal = find_transversal_matching(g, &ls)?;
    for &e in &transversal {
        c.clear(e);
        c.set(e, alpha);
    }
    let root_edges = g.incident_edges(root).to_vec();
    let fallback_invoked = complete_edges(g, &mut c, &[Phase::adaptive(root_edges)], p)?;
    Ok(Girth5Coloring {
        result: BranchColoring {
            coloring: c,
            fallback_invoked,
        },
        root,
        transversal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_strong;
    use crate::generators::{gen_cycle, gen_petersen};

    #[test]
    fn petersen_layers() {
        let g = gen_petersen();
        for root in 0..10 {
            let dc = g.distance_classes(root).unwrap();
            let ls = build_layers(&g, &dc, true).unwrap();
            assert_eq!(ls.w_list.len(), 3);
            assert!(ls.w_sets.iter().all(|s| s.len() == 2));
            let mut all: Vec<_> = ls.w_sets.concat();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), 6);
        }
    }

    #[test]
    fn c5_layers_and_transversal() {
        let g = gen_cycle(5).unwrap();
        let dc = g.distance_classes(0).unwrap();
        let ls = build_layers(&g, &dc, true).unwrap();
        assert_eq!(ls.w_list, vec![1, 4]);
        assert_eq!(ls.w_sets, vec![vec![2], vec![3]]);
        assert_eq!(ls.d2_adjacency.get(&2), Some(&vec![3]));
        // W_1 = {2}, W_2 = {3}, but 2 and 3 are adjacent.
        assert_eq!(
            find_transversal_matching(&g, &ls),
            Err(ColoringError::NoTransversal { root: 0 })
        );
    }

    #[test]
    fn triangle_breaks_girth_five_claim() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let dc = k4.distance_classes(0).unwrap();
        assert!(matches!(
            build_layers(&k4, &dc, true),
            Err(ColoringError::Structure { root: 0, .. })
        ));
        assert!(build_layers(&k4, &dc, false).is_ok());
    }

    #[test]
    fn four_cycle_breaks_girth_five_claim() {
        let c4 = gen_cycle(4).unwrap();
        let dc = c4.distance_classes(0).unwrap();
        assert!(build_layers(&c4, &dc, true).is_err());
    }

    #[test]
    fn petersen_transversals() {
        let g = gen_petersen();
        for root in 0..10 {
            let dc = g.distance_classes(root).unwrap();
            let ls = build_layers(&g, &dc, true).unwrap();
            let t = find_transversal_matching(&g, &ls).unwrap();
            assert_eq!(t.len(), 3);
            assert!(g.is_induced_matching(&t));
            for (i, &e) in t.iter().enumerate() {
                let (a, b) = g.endpoints(e);
                assert!(a == ls.w_list[i] || b == ls.w_list[i]);
            }
        }
    }

    #[test]
    fn partial_selection_skips_groups() {
        // P7 edges 0..6; groups pick from {0,1}, {1,2}, {4,5}.
        let edges: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
        let g = Graph::new(7, &edges).unwrap();
        let groups = vec![vec![0, 1], vec![1, 2], vec![4, 5]];
        let m = select_induced_matching(&g, &groups, 2).unwrap();
        assert!(g.is_induced_matching(&m));
        assert_eq!(m.len(), 2);
        assert!(select_induced_matching(&g, &groups, 3).is_none());
    }

    #[test]
    fn petersen_coloring() {
        let g = gen_petersen();
        let out = color_regular_girth5(&g, Palette::new(11)).unwrap();
        let c = &out.result.coloring;
        assert!(c.is_total());
        assert!(c.colors_used() <= 11);
        assert!(verify_strong(&g, c).is_ok());
        assert!(out.transversal.iter().all(|&e| c.get(e) == Some(11)));
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        let c5 = gen_cycle(5).unwrap();
        assert!(matches!(
            color_regular_girth5(&c5, Palette::new(4)),
            Err(ColoringError::UnsupportedDegree { actual: 2, .. })
        ));
        let g = gen_petersen();
        assert_eq!(
            color_regular_girth5(&g, Palette::new(10)),
            Err(ColoringError::PaletteTooSmall {
                size: 10,
                required: 11
            })
        );
    }
}
