//! Exact strong chromatic index for small graphs.
//!
//! Iterative deepening on the number of colors `k`, starting at
//! [`lower_bound`]. Each round is a depth-first search over a fixed edge
//! order (largest neighborhood first) in which an edge may only open the
//! next unused color, which removes the `k!` relabelings of every coloring.

use log::info;
use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

const PROGRESS_EVERY: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub chi_s: usize,
    pub witness: PartialColoring,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// Every `k < lower` was refuted, `upper` colors always suffice.
    #[error("node budget exhausted after {nodes} nodes; chi_s in [{lower}, {upper}]")]
    BudgetExceeded {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
}

/// max over edges `uv` of `deg(u) + deg(v) - 1`: all edges at `u` or `v`
/// pairwise conflict. Zero without edges.
pub fn lower_bound(g: &Graph) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v) - 1)
        .max()
        .unwrap_or(0)
}

pub fn exact_chi_s(g: &Graph, budget: u64) -> Result<OracleResult, OracleError> {
    let m = g.edge_count();
    if m == 0 {
        return Ok(OracleResult {
            chi_s: 0,
            witness: PartialColoring::new(0),
            nodes_explored: 0,
        });
    }

    let mut order: Vec<usize> = (0..m).collect();
    let sizes: Vec<usize> = (0..m).map(|e| g.edge_neighborhood(e).len()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(sizes[e]), e));
    let mut position = vec![0; m];
    for (i, &e) in order.iter().enumerate() {
        position[e] = i;
    }
    // earlier[i]: positions before i whose edges conflict with order[i].
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut v: Vec<usize> = g
                .edge_neighborhood(e)
                .into_iter()
                .map(|f| position[f])
                .filter(|&j| j < i)
                .collect();
            v.sort_unstable();
            v
        })
        .collect();

    let mut search = Search {
        earlier: &earlier,
        colors: vec![0; m],
        nodes: 0,
        budget,
    };
    let mut k = lower_bound(g).max(1);
    loop {
        match search.run(0, 0, k as Color) {
            Some(true) => {
                let mut colors = vec![0; m];
                for (i, &e) in order.iter().enumerate() {
                    colors[e] = search.colors[i];
                }
                return Ok(OracleResult {
                    chi_s: k,
                    witness: PartialColoring::from_colors(&colors),
                    nodes_explored: search.nodes,
                });
            }
            Some(false) => k += 1,
            None => {
                return Err(OracleError::BudgetExceeded {
                    lower: k,
                    upper: m,
                    nodes: search.nodes,
                })
            }
        }
    }
}

struct Search<'a> {
    earlier: &'a [Vec<usize>],
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(found)`, or `None` once the budget is spent.
    fn run(&mut self, i: usize, max_used: Color, k: Color) -> Option<bool> {
        if i == self.colors.len() {
            return Some(true);
        }
        let top = k.min(max_used + 1);
        for col in 1..=top {
            if self.earlier[i].iter().any(|&j| self.colors[j] == col) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            if self.nodes.is_multiple_of(PROGRESS_EVERY) {
                info!("exact search: {} nodes, trying k = {k}", self.nodes);
            }
            self.colors[i] = col;
            if self.run(i + 1, max_used.max(col), k)? {
                return Some(true);
            }
        }
        self.colors[i] = 0;
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_strong;
    use crate::generators::{gen_cycle, gen_petersen};

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&Graph::empty(3)), 0);
        assert_eq!(lower_bound(&Graph::new(2, &[(0, 1)]).unwrap()), 1);
        assert_eq!(lower_bound(&star(5)), 5);
        assert_eq!(lower_bound(&gen_petersen()), 5);
    }

    #[test]
    fn small_exact_values() {
        let c5 = gen_cycle(5).unwrap();
        let r = exact_chi_s(&c5, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.chi_s, 5);
        assert!(verify_strong(&c5, &r.witness).is_ok());

        // Opposite edges of C6 are at distance three.
        let c6 = gen_cycle(6).unwrap();
        assert_eq!(exact_chi_s(&c6, DEFAULT_NODE_BUDGET).unwrap().chi_s, 3);

        let s = star(4);
        assert_eq!(exact_chi_s(&s, DEFAULT_NODE_BUDGET).unwrap().chi_s, 4);
        assert_eq!(exact_chi_s(&Graph::empty(2), 10).unwrap().chi_s, 0);
    }

    #[test]
    fn budget_is_reported() {
        let g = gen_petersen();
        assert_eq!(
            exact_chi_s(&g, 3),
            Err(OracleError::BudgetExceeded {
                lower: 5,
                upper: 15,
                nodes: 4
            })
        );
    }
}
