//! Simple undirected graphs with stable edge ids, plus the structural queries
//! the coloring routines lean on: degree statistics, girth, BFS distance
//! classes, edge neighborhoods and the induced-matching predicate.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: VertexId, v: VertexId, n: usize },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(VertexId),
    #[error("edge {edge} has an endpoint unreachable from root {root}")]
    Unreachable { root: VertexId, edge: EdgeId },
}

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, and edge ids are the
/// positions of those pairs in lexicographic order. Two graphs built from the
/// same edge set therefore agree on every id regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // adj[u] is sorted; inc[u][k] is the id of edge {u, adj[u][k]}.
    adj: Vec<Vec<VertexId>>,
    inc: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut inc = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            inc[u].push((v, id));
            inc[v].push((u, id));
        }
        let inc = inc
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.into_iter().map(|(_, id)| id).collect()
            })
            .collect();

        Ok(Graph { n, edges, adj, inc })
    }

    /// A graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Ids of the edges at `v`, aligned with [`Graph::neighbors`].
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n {
            return None;
        }
        self.adj[u].binary_search(&v).ok().map(|k| self.inc[u][k])
    }

    /// Whether two distinct edges are within distance two: they share an
    /// endpoint or some endpoint of one is adjacent to some endpoint of the
    /// other.
    pub fn edges_conflict(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        if a == c || a == d || b == c || b == d {
            return true;
        }
        self.has_edge(a, c) || self.has_edge(a, d) || self.has_edge(b, c) || self.has_edge(b, d)
    }

    /// Calls `visit` for every edge of N(e). Edges may be visited more than
    /// once when short cycles pass near `e`; `e` itself is never visited.
    pub fn for_each_conflicting_edge(&self, e: EdgeId, mut visit: impl FnMut(EdgeId)) {
        let (a, b) = self.edges[e];
        for x in [a, b] {
            for (&y, &xy) in self.adj[x].iter().zip(&self.inc[x]) {
                if xy == e {
                    continue;
                }
                visit(xy);
                for &yz in &self.inc[y] {
                    if yz != xy && yz != e {
                        visit(yz);
                    }
                }
            }
        }
    }

    /// N(e): edges sharing an endpoint with `e` or having an endpoint adjacent
    /// to an endpoint of `e`. Sorted, without `e`.
    pub fn edge_neighborhood(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut out = Vec::new();
        self.for_each_conflicting_edge(e, |f| out.push(f));
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_induced_matching(&self, es: &[EdgeId]) -> bool {
        es.iter().enumerate().all(|(i, &e)| {
            es[i + 1..]
                .iter()
                .all(|&f| e != f && !self.edges_conflict(e, f))
        })
    }

    pub fn stats(&self) -> GraphStats {
        let max_degree = self.max_degree();
        let min_degree = self.min_degree();
        GraphStats {
            vertices: self.n,
            edges: self.edges.len(),
            max_degree,
            min_degree,
            girth: self.girth(),
            is_regular: max_degree == min_degree,
            components: self.components().len(),
        }
    }

    /// Exact girth by a BFS from every vertex; each non-tree edge `(x, y)`
    /// closes a walk of length `d(x) + d(y) + 1` through the root, and the
    /// minimum over all roots is the shortest cycle.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                // Nothing shorter can be found past this depth.
                if 2 * dist[x] >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices` (sorted ascending), relabelled
    /// `0..vertices.len()` in that order. The second value maps each edge id
    /// of the subgraph to its id in `self`.
    ///
    /// Relabelling is order-preserving, so subgraph edge ids follow the same
    /// relative order as the original ids.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<EdgeId>) {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut ids = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                ids.push(id);
            }
        }
        let sub = Graph::new(vertices.len(), &pairs).expect("induced subgraph of a simple graph");
        (sub, ids)
    }

    pub fn distance_classes(&self, root: VertexId) -> Result<DistanceClassification, GraphError> {
        if root >= self.n {
            return Err(GraphError::NoSuchVertex(root));
        }
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut classes: Vec<Vec<VertexId>> = vec![vec![root]];
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or_default();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    if classes.len() == dx + 1 {
                        classes.push(Vec::new());
                    }
                    classes[dx + 1].push(y);
                    queue.push_back(y);
                }
            }
        }
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(DistanceClassification {
            root,
            dist,
            classes,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    /// The graph has no cycle.
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Ordering::Less,
            (Girth::Infinite, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Infinite, Girth::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Girth,
    pub is_regular: bool,
    pub components: usize,
}

/// BFS layers around a root. Only the root's component is classified;
/// vertices elsewhere have distance `None` and appear in no class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceClassification {
    root: VertexId,
    dist: Vec<Option<usize>>,
    classes: Vec<Vec<VertexId>>,
}

impl DistanceClassification {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn distance(&self, v: VertexId) -> Option<usize> {
        self.dist[v]
    }

    /// D_i, sorted ascending. Empty past the eccentricity of the root.
    pub fn class(&self, i: usize) -> &[VertexId] {
        self.classes.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Smaller of the two endpoint distances.
    pub fn edge_distance(&self, g: &Graph, e: EdgeId) -> Result<usize, GraphError> {
        let (u, v) = g.endpoints(e);
        match (self.dist[u], self.dist[v]) {
            (Some(a), Some(b)) => Ok(a.min(b)),
            _ => Err(GraphError::Unreachable {
                root: self.root,
                edge: e,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn builds_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.endpoints(0), (0, 1));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { u: 0, v: 3, n: 3 })
        );
    }

    #[test]
    fn edge_ids_ignore_input_order() {
        let a = Graph::new(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let b = Graph::new(4, &[(1, 0), (3, 2), (2, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(a.edge_id(2, 1), Some(1));
        assert_eq!(a.edge_id(0, 3), None);
    }

    #[test]
    fn c5_is_two_regular() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn stats_of_small_graphs() {
        let p4 = path(4).stats();
        assert_eq!((p4.max_degree, p4.min_degree), (2, 1));
        assert_eq!(p4.girth, Girth::Infinite);
        assert!(!p4.is_regular);

        let k3 = cycle(3).stats();
        assert_eq!(k3.girth, Girth::Finite(3));
        assert!(k3.is_regular);

        assert_eq!(cycle(4).girth(), Girth::Finite(4));
        assert_eq!(cycle(9).girth(), Girth::Finite(9));

        let empty = Graph::empty(0).stats();
        assert_eq!(empty.components, 0);
        assert_eq!(empty.girth, Girth::Infinite);
    }

    #[test]
    fn girth_picks_shortest_of_several_cycles() {
        // A 6-cycle with a chord making a 4-cycle.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert_eq!(g.girth(), Girth::Finite(4));
    }

    #[test]
    fn components_and_isolated_vertices() {
        let g = Graph::new(6, &[(0, 1), (3, 4), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4, 5]]);
        assert_eq!(g.stats().components, 3);
        let (sub, ids) = g.induced_subgraph(&[3, 4, 5]);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(ids, vec![1, 2]);
    }

    #[test]
    fn c5_distance_classes() {
        let g = cycle(5);
        let dc = g.distance_classes(0).unwrap();
        assert_eq!(dc.classes(), &[vec![0], vec![1, 4], vec![2, 3]]);
        let e23 = g.edge_id(2, 3).unwrap();
        let e12 = g.edge_id(1, 2).unwrap();
        let e01 = g.edge_id(0, 1).unwrap();
        assert_eq!(dc.edge_distance(&g, e23), Ok(2));
        assert_eq!(dc.edge_distance(&g, e12), Ok(1));
        assert_eq!(dc.edge_distance(&g, e01), Ok(0));
    }

    #[test]
    fn unreachable_vertices_are_unclassified() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let dc = g.distance_classes(0).unwrap();
        assert_eq!(dc.class(1), &[1]);
        assert_eq!(dc.distance(2), None);
        assert_eq!(dc.classes().iter().map(Vec::len).sum::<usize>(), 2);
        assert_eq!(
            dc.edge_distance(&g, 1),
            Err(GraphError::Unreachable { root: 0, edge: 1 })
        );
        assert_eq!(g.distance_classes(9), Err(GraphError::NoSuchVertex(9)));
    }

    #[test]
    fn neighborhoods_of_small_graphs() {
        let single = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(single.edge_neighborhood(0).is_empty());

        let p4 = path(4);
        assert_eq!(p4.edge_neighborhood(1), vec![0, 2]);
        assert_eq!(p4.edge_neighborhood(0), vec![1, 2]);
    }

    #[test]
    fn induced_matching_predicate() {
        let c5 = cycle(5);
        assert!(c5.is_induced_matching(&[]));
        assert!(c5.is_induced_matching(&[3]));
        // (0,1) and (2,3): endpoints 1 and 2 are adjacent.
        let a = c5.edge_id(0, 1).unwrap();
        let b = c5.edge_id(2, 3).unwrap();
        assert!(!c5.is_induced_matching(&[a, b]));
        assert!(!c5.is_induced_matching(&[a, a]));

        let p6 = path(6);
        assert!(p6.is_induced_matching(&[0, 3]));
        assert!(!p6.is_induced_matching(&[0, 2]));
    }
}
