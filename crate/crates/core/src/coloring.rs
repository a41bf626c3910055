//! Greedy strong edge-coloring machinery.
//!
//! Everything here works on a [`PartialColoring`], a per-edge optional color.
//! The routines that assign colors only ever pick a color absent from the
//! forbidden set F(e), so the colored part stays a strong coloring throughout.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;

use log::warn;

use crate::error::ColoringError;
use crate::graph::{EdgeId, Graph, VertexId};

/// A color index. Valid colors are `1..=K`; `0` only ever appears in
/// serialized form, where it marks an uncolored edge.
pub type Color = u32;

/// Node limit for the backtracking completion used when a greedy step that
/// should always succeed runs out of colors.
pub const FALLBACK_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Palette {
    size: Color,
}

impl Palette {
    pub fn new(size: usize) -> Self {
        Palette {
            size: Color::try_from(size).expect("palette size fits in u32"),
        }
    }

    pub fn size(self) -> Color {
        self.size
    }

    pub fn contains(self, c: Color) -> bool {
        (1..=self.size).contains(&c)
    }

    /// Least color of the palette not in `forbidden`.
    pub fn least_free(self, forbidden: &BTreeSet<Color>) -> Option<Color> {
        (1..=self.size).find(|c| !forbidden.contains(c))
    }
}

/// A coloring of some subset of the edges of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
    max_color: Color,
}

impl PartialColoring {
    /// All `edge_count` edges uncolored.
    pub fn new(edge_count: usize) -> Self {
        PartialColoring {
            colors: vec![None; edge_count],
            max_color: 0,
        }
    }

    /// From serialized colors, `0` meaning uncolored.
    pub fn from_colors(colors: &[Color]) -> Self {
        let colors: Vec<_> = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
        let max_color = colors.iter().flatten().copied().max().unwrap_or(0);
        PartialColoring { colors, max_color }
    }

    /// Serialized colors, `0` meaning uncolored.
    pub fn to_colors(&self) -> Vec<Color> {
        self.colors.iter().map(|c| c.unwrap_or(0)).collect()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    pub fn is_colored(&self, e: EdgeId) -> bool {
        self.colors[e].is_some()
    }

    /// Assigns `c` to `e` without any validity check. Callers that need the
    /// strong property maintained should go through [`greedy_assign`].
    pub fn set(&mut self, e: EdgeId, c: Color) {
        assert!(c != 0, "color 0 is reserved for uncolored edges");
        self.colors[e] = Some(c);
        self.max_color = self.max_color.max(c);
    }

    /// Removes the color of `e`, returning it.
    pub fn clear(&mut self, e: EdgeId) -> Option<Color> {
        let old = self.colors[e].take();
        if old == Some(self.max_color) {
            self.max_color = self.colors.iter().flatten().copied().max().unwrap_or(0);
        }
        old
    }

    /// Largest color in use, 0 when nothing is colored.
    pub fn colors_used(&self) -> Color {
        self.max_color
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn uncolored_edges(&self) -> Vec<EdgeId> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e].is_none())
            .collect()
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationReason {
    SharedEndpoint,
    AdjacentEndpoints,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::SharedEndpoint => "edges share an endpoint",
            ViolationReason::AdjacentEndpoints => "edges have adjacent endpoints",
        })
    }
}

/// Two edges within distance two that carry the same color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub first: EdgeId,
    pub second: EdgeId,
    pub color: Color,
    pub reason: ViolationReason,
}

/// The colors on colored edges of N(e).
pub fn forbidden_colors(g: &Graph, c: &PartialColoring, e: EdgeId) -> BTreeSet<Color> {
    let mut out = BTreeSet::new();
    g.for_each_conflicting_edge(e, |f| {
        if let Some(col) = c.get(f) {
            out.insert(col);
        }
    });
    out
}

/// Gives the uncolored edge `e` the least color of `p` outside F(e).
pub fn greedy_assign(
    g: &Graph,
    c: &mut PartialColoring,
    e: EdgeId,
    p: Palette,
) -> Result<Color, ColoringError> {
    if c.is_colored(e) {
        return Err(ColoringError::AlreadyColored(e));
    }
    let forbidden = forbidden_colors(g, c, e);
    match p.least_free(&forbidden) {
        Some(col) => {
            c.set(e, col);
            Ok(col)
        }
        None => Err(ColoringError::PaletteExhausted {
            edge: e,
            forbidden: forbidden.into_iter().collect(),
        }),
    }
}

/// Every edge not incident to `root`, farthest from the root first. Within
/// one distance the order is by edge id.
pub fn compatible_order(g: &Graph, root: VertexId) -> Result<Vec<EdgeId>, ColoringError> {
    let dc = g.distance_classes(root)?;
    let mut keyed = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let d = dc
            .edge_distance(g, e)
            .map_err(|_| ColoringError::NotConnected)?;
        if d > 0 {
            keyed.push((Reverse(d), e));
        }
    }
    keyed.sort_unstable();
    Ok(keyed.into_iter().map(|(_, e)| e).collect())
}

/// Greedy coloring of all edges except those at `root`, in an order
/// compatible with `root`.
///
/// When an edge at distance `i ≥ 1` is reached, some endpoint has a neighbor
/// at distance `i - 1` whose Δ edges are all still uncolored, so at most
/// 2Δ² − 3Δ colors are forbidden and 2Δ² − 3Δ + 1 colors always suffice.
pub fn greedy_partial(
    g: &Graph,
    root: VertexId,
    p: Palette,
) -> Result<PartialColoring, ColoringError> {
    if root >= g.vertex_count() {
        return Err(crate::graph::GraphError::NoSuchVertex(root).into());
    }
    if !g.is_connected() {
        return Err(ColoringError::NotConnected);
    }
    let mut c = PartialColoring::new(g.edge_count());
    for e in compatible_order(g, root)? {
        greedy_assign(g, &mut c, e, p)?;
    }
    Ok(c)
}

/// A finished coloring plus whether the backtracking fallback was needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchColoring {
    pub coloring: PartialColoring,
    pub fallback_invoked: bool,
}

/// Total coloring with 2Δ² − 3Δ + 1 colors for a connected graph, rooted at a
/// vertex of degree below Δ.
///
/// The root edges are colored last, each time picking the one with the
/// fewest forbidden colors.
pub fn color_low_degree_root(
    g: &Graph,
    root: VertexId,
    p: Palette,
) -> Result<BranchColoring, ColoringError> {
    if root >= g.vertex_count() {
        return Err(crate::graph::GraphError::NoSuchVertex(root).into());
    }
    let max_degree = g.max_degree();
    if g.degree(root) + 1 > max_degree {
        return Err(ColoringError::RootDegreeTooHigh {
            root,
            degree: g.degree(root),
            limit: max_degree.saturating_sub(1),
        });
    }
    let mut c = greedy_partial(g, root, p)?;
    let root_edges = g.incident_edges(root).to_vec();
    let fallback_invoked = complete_edges(g, &mut c, &[Phase::adaptive(root_edges)], p)?;
    Ok(BranchColoring {
        coloring: c,
        fallback_invoked,
    })
}

/// Greedy coloring of every edge in the given order.
pub fn greedy_full(
    g: &Graph,
    order: &[EdgeId],
    p: Palette,
) -> Result<PartialColoring, ColoringError> {
    let mut seen = vec![false; g.edge_count()];
    if order.len() != g.edge_count() {
        return Err(ColoringError::BadOrder);
    }
    for &e in order {
        if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
            return Err(ColoringError::BadOrder);
        }
    }
    let mut c = PartialColoring::new(g.edge_count());
    for &e in order {
        greedy_assign(g, &mut c, e, p)?;
    }
    Ok(c)
}

/// Checks that no two colored edges within distance two share a color.
/// Reports the violating pair `(e, f)`, `e < f`, that is least in
/// lexicographic order.
pub fn verify_strong(g: &Graph, c: &PartialColoring) -> Result<(), Violation> {
    assert_eq!(c.len(), g.edge_count(), "coloring belongs to another graph");
    for e in 0..g.edge_count() {
        let Some(color) = c.get(e) else { continue };
        let mut second = None::<EdgeId>;
        g.for_each_conflicting_edge(e, |f| {
            if f > e && c.get(f) == Some(color) && second.is_none_or(|s| f < s) {
                second = Some(f);
            }
        });
        if let Some(f) = second {
            let (a, b) = g.endpoints(e);
            let (x, y) = g.endpoints(f);
            let reason = if a == x || a == y || b == x || b == y {
                ViolationReason::SharedEndpoint
            } else {
                ViolationReason::AdjacentEndpoints
            };
            return Err(Violation {
                first: e,
                second: f,
                color,
                reason,
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PhaseOrder {
    /// Next is always the edge with the fewest forbidden colors right now,
    /// ties by edge id.
    FewestForbiddenFirst,
    AsGiven,
}

/// A batch of edges colored greedily before the next batch starts.
#[derive(Debug, Clone)]
pub(crate) struct Phase {
    pub edges: Vec<EdgeId>,
    pub order: PhaseOrder,
}

impl Phase {
    pub fn adaptive(edges: Vec<EdgeId>) -> Self {
        Phase {
            edges,
            order: PhaseOrder::FewestForbiddenFirst,
        }
    }

    pub fn fixed(edges: Vec<EdgeId>) -> Self {
        Phase {
            edges,
            order: PhaseOrder::AsGiven,
        }
    }
}

/// Greedily colors the phases in turn. Should a step exhaust the palette,
/// every edge of every phase is uncolored again and handed to
/// [`backtrack_complete`]. Returns whether that fallback ran.
pub(crate) fn complete_edges(
    g: &Graph,
    c: &mut PartialColoring,
    phases: &[Phase],
    p: Palette,
) -> Result<bool, ColoringError> {
    let failure = match greedy_phases(g, c, phases, p) {
        Ok(()) => return Ok(false),
        Err(ColoringError::PaletteExhausted { edge, forbidden }) => (edge, forbidden),
        Err(other) => return Err(other),
    };
    let all: Vec<EdgeId> = phases
        .iter()
        .flat_map(|ph| ph.edges.iter().copied())
        .collect();
    for &e in &all {
        c.clear(e);
    }
    warn!(
        "greedy step exhausted a palette of {} at edge {} ({} colors forbidden); backtracking over {} edges",
        p.size(),
        failure.0,
        failure.1.len(),
        all.len()
    );
    if backtrack_complete(g, c, &all, p, FALLBACK_NODE_BUDGET) {
        Ok(true)
    } else {
        Err(ColoringError::PaletteExhausted {
            edge: failure.0,
            forbidden: failure.1,
        })
    }
}

fn greedy_phases(
    g: &Graph,
    c: &mut PartialColoring,
    phases: &[Phase],
    p: Palette,
) -> Result<(), ColoringError> {
    for phase in phases {
        match phase.order {
            PhaseOrder::AsGiven => {
                for &e in &phase.edges {
                    greedy_assign(g, c, e, p)?;
                }
            }
            PhaseOrder::FewestForbiddenFirst => {
                let mut pending = phase.edges.clone();
                while !pending.is_empty() {
                    let (k, _) = pending
                        .iter()
                        .enumerate()
                        .map(|(k, &e)| (k, (forbidden_colors(g, c, e).len(), e)))
                        .min_by_key(|&(_, key)| key)
                        .expect("non-empty");
                    let e = pending.swap_remove(k);
                    greedy_assign(g, c, e, p)?;
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive search for colors of the uncolored `edges` from `p`, keeping
/// the coloring strong. Picks the edge with the fewest available colors at
/// each level. Leaves `c` untouched and returns false when no completion is
/// found within `budget` nodes.
pub fn backtrack_complete(
    g: &Graph,
    c: &mut PartialColoring,
    edges: &[EdgeId],
    p: Palette,
    budget: u64,
) -> bool {
    let mut pending: Vec<EdgeId> = edges
        .iter()
        .copied()
        .filter(|&e| !c.is_colored(e))
        .collect();
    let mut nodes = 0u64;
    backtrack(g, c, &mut pending, p, &mut nodes, budget)
}

fn backtrack(
    g: &Graph,
    c: &mut PartialColoring,
    pending: &mut Vec<EdgeId>,
    p: Palette,
    nodes: &mut u64,
    budget: u64,
) -> bool {
    if pending.is_empty() {
        return true;
    }
    let mut best: Option<(usize, Vec<Color>)> = None;
    for (k, &e) in pending.iter().enumerate() {
        let forbidden = forbidden_colors(g, c, e);
        let free: Vec<Color> = (1..=p.size()).filter(|x| !forbidden.contains(x)).collect();
        if best.as_ref().is_none_or(|(_, b)| free.len() < b.len()) {
            let dead = free.is_empty();
            best = Some((k, free));
            if dead {
                return false;
            }
        }
    }
    let (k, free) = best.expect("pending is non-empty");
    let e = pending.swap_remove(k);
    for col in free {
        *nodes += 1;
        if *nodes > budget {
            break;
        }
        c.set(e, col);
        if backtrack(g, c, pending, p, nodes, budget) {
            return true;
        }
        c.clear(e);
    }
    pending.push(e);
    let last = pending.len() - 1;
    pending.swap(k, last);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;
    use crate::generators::{gen_cycle, gen_petersen};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn forbidden_sets() {
        let p4 = path(4);
        let mut c = PartialColoring::new(3);
        assert!(forbidden_colors(&p4, &c, 1).is_empty());
        c.set(0, 1);
        c.set(2, 2);
        assert_eq!(forbidden_colors(&p4, &c, 1), BTreeSet::from([1, 2]));
    }

    #[test]
    fn forbidden_at_distance_two_in_petersen() {
        let g = gen_petersen();
        // Edge (0,1); (2,3) is at distance two through the edge (1,2).
        let e = g.edge_id(0, 1).unwrap();
        let f = g.edge_id(2, 3).unwrap();
        assert!(g.edge_neighborhood(e).contains(&f));
        let mut c = PartialColoring::new(g.edge_count());
        c.set(f, 7);
        assert_eq!(forbidden_colors(&g, &c, e), BTreeSet::from([7]));
    }

    #[test]
    fn least_free_color() {
        let p = Palette::new(5);
        assert_eq!(p.least_free(&BTreeSet::new()), Some(1));
        assert_eq!(p.least_free(&BTreeSet::from([1, 2, 4])), Some(3));
        assert_eq!(p.least_free(&BTreeSet::from([1, 2, 3, 4, 5])), None);
    }

    #[test]
    fn greedy_assign_exhaustion() {
        let g = star(3);
        let mut c = PartialColoring::new(3);
        let p = Palette::new(2);
        assert_eq!(greedy_assign(&g, &mut c, 0, p), Ok(1));
        assert_eq!(greedy_assign(&g, &mut c, 1, p), Ok(2));
        assert_eq!(
            greedy_assign(&g, &mut c, 2, p),
            Err(ColoringError::PaletteExhausted {
                edge: 2,
                forbidden: vec![1, 2]
            })
        );
        assert_eq!(
            greedy_assign(&g, &mut c, 0, p),
            Err(ColoringError::AlreadyColored(0))
        );
    }

    #[test]
    fn clearing_tracks_max_color() {
        let mut c = PartialColoring::new(3);
        c.set(0, 4);
        c.set(1, 9);
        assert_eq!(c.colors_used(), 9);
        assert_eq!(c.clear(1), Some(9));
        assert_eq!(c.colors_used(), 4);
        assert_eq!(c.to_colors(), vec![4, 0, 0]);
        assert_eq!(PartialColoring::from_colors(&[4, 0, 0]), c);
    }

    #[test]
    fn partial_on_star_colors_nothing() {
        let g = star(4);
        let c = greedy_partial(&g, 0, Palette::new(bounds::partial_bound(4))).unwrap();
        assert_eq!(c.colored_count(), 0);
    }

    #[test]
    fn partial_on_c5_leaves_root_edges() {
        let g = gen_cycle(5).unwrap();
        let c = greedy_partial(&g, 0, Palette::new(bounds::partial_bound(2))).unwrap();
        assert_eq!(
            c.uncolored_edges(),
            vec![g.edge_id(0, 1).unwrap(), g.edge_id(0, 4).unwrap()]
        );
        assert!(verify_strong(&g, &c).is_ok());
    }

    #[test]
    fn partial_on_petersen() {
        let g = gen_petersen();
        for root in 0..10 {
            let c = greedy_partial(&g, root, Palette::new(bounds::partial_bound(3))).unwrap();
            assert_eq!(c.colored_count(), 12);
            assert!(c.colors_used() <= 10);
            assert!(verify_strong(&g, &c).is_ok());
        }
    }

    #[test]
    fn partial_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            greedy_partial(&g, 0, Palette::new(10)),
            Err(ColoringError::NotConnected)
        );
    }

    #[test]
    fn compatible_order_is_nonincreasing() {
        let g = gen_petersen();
        let dc = g.distance_classes(3).unwrap();
        let order = compatible_order(&g, 3).unwrap();
        assert_eq!(order.len(), 12);
        let d: Vec<_> = order
            .iter()
            .map(|&e| dc.edge_distance(&g, e).unwrap())
            .collect();
        assert!(d.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn low_degree_root_on_paths_and_stars() {
        let p4 = path(4);
        let out = color_low_degree_root(&p4, 0, Palette::new(bounds::partial_bound(2))).unwrap();
        assert!(out.coloring.is_total());
        assert!(out.coloring.colors_used() <= 3);
        assert!(verify_strong(&p4, &out.coloring).is_ok());

        let k15 = star(5);
        let out = color_low_degree_root(&k15, 1, Palette::new(bounds::partial_bound(5))).unwrap();
        assert_eq!(out.coloring.colors_used(), 5);
        assert_eq!(out.coloring.distinct_colors(), 5);

        assert_eq!(
            color_low_degree_root(&k15, 0, Palette::new(36)),
            Err(ColoringError::RootDegreeTooHigh {
                root: 0,
                degree: 5,
                limit: 4
            })
        );
    }

    #[test]
    fn low_degree_root_on_petersen_minus_vertex() {
        let pet = gen_petersen();
        let (g, _) = pet.induced_subgraph(&(1..10).collect::<Vec<_>>());
        let root = (0..9).find(|&v| g.degree(v) == 2).unwrap();
        let out = color_low_degree_root(&g, root, Palette::new(bounds::partial_bound(3))).unwrap();
        assert!(out.coloring.is_total());
        assert!(out.coloring.colors_used() <= 10);
        assert!(verify_strong(&g, &out.coloring).is_ok());
    }

    #[test]
    fn greedy_full_small_cases() {
        let c5 = gen_cycle(5).unwrap();
        let order: Vec<_> = (0..5).rev().collect();
        let c = greedy_full(&c5, &order, Palette::new(5)).unwrap();
        assert_eq!(c.colors_used(), 5);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            greedy_full(&k2, &[0], Palette::new(1))
                .unwrap()
                .colors_used(),
            1
        );

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = greedy_full(&k4, &[5, 0, 3, 1, 4, 2], Palette::new(13)).unwrap();
        assert_eq!(c.colors_used(), 6);
        assert!(verify_strong(&k4, &c).is_ok());

        assert_eq!(
            greedy_full(&k4, &[0, 1], Palette::new(13)),
            Err(ColoringError::BadOrder)
        );
        assert_eq!(
            greedy_full(&k4, &[0, 1, 2, 3, 4, 4], Palette::new(13)),
            Err(ColoringError::BadOrder)
        );
    }

    #[test]
    fn verifier_reports_first_violation() {
        let c5 = gen_cycle(5).unwrap();
        assert!(verify_strong(&c5, &PartialColoring::from_colors(&[1, 2, 3, 4, 5])).is_ok());
        let v = verify_strong(&c5, &PartialColoring::from_colors(&[1, 2, 3, 4, 1])).unwrap_err();
        assert_eq!((v.first, v.second, v.color), (0, 4, 1));

        let p4 = path(4);
        let v = verify_strong(&p4, &PartialColoring::from_colors(&[1, 2, 1])).unwrap_err();
        assert_eq!((v.first, v.second), (0, 2));
        assert_eq!(v.reason, ViolationReason::AdjacentEndpoints);
        let v = verify_strong(&p4, &PartialColoring::from_colors(&[1, 1, 0])).unwrap_err();
        assert_eq!(v.reason, ViolationReason::SharedEndpoint);
        assert!(verify_strong(&p4, &PartialColoring::from_colors(&[1, 0, 1])).is_err());
        assert!(verify_strong(&p4, &PartialColoring::from_colors(&[1, 0, 0])).is_ok());
    }

    #[test]
    fn backtracking_finds_tight_completion() {
        // C5 with four colors is impossible, five is forced.
        let c5 = gen_cycle(5).unwrap();
        let mut c = PartialColoring::new(5);
        let all: Vec<_> = (0..5).collect();
        assert!(!backtrack_complete(
            &c5,
            &mut c,
            &all,
            Palette::new(4),
            1_000
        ));
        assert_eq!(c.colored_count(), 0);
        assert!(backtrack_complete(
            &c5,
            &mut c,
            &all,
            Palette::new(5),
            1_000
        ));
        assert!(verify_strong(&c5, &c).is_ok());
    }

    #[test]
    fn fallback_repairs_bad_greedy_orders() {
        // C8 has a 4-coloring, but some greedy orders need a fifth color.
        let g = gen_cycle(8).unwrap();
        let p = Palette::new(4);
        let mut fallbacks = 0;
        for order in permutations(8) {
            let mut c = PartialColoring::new(8);
            if complete_edges(&g, &mut c, &[Phase::fixed(order)], p).unwrap() {
                fallbacks += 1;
            }
            assert!(c.is_total());
            assert!(c.colors_used() <= 4);
            assert!(verify_strong(&g, &c).is_ok());
        }
        assert!(fallbacks > 0);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
}
