//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the neighborhood or verifier code under test;
//! conflicts are derived from the line graph and plain BFS instead.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_edge::{Graph, PartialColoring};

/// Line graph adjacency: edges adjacent iff they share an endpoint.
pub fn line_graph(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let m = edges.len();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Pairwise distances in the line graph (`usize::MAX` when disconnected).
pub fn line_graph_distances(g: &Graph) -> Vec<Vec<usize>> {
    let adj = line_graph(g);
    let m = adj.len();
    (0..m)
        .map(|s| {
            let mut dist = vec![usize::MAX; m];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Whether the colored edges form a proper coloring of the square of the
/// line graph.
pub fn proper_on_line_graph_square(g: &Graph, c: &PartialColoring) -> bool {
    let dist = line_graph_distances(g);
    let m = g.edge_count();
    for i in 0..m {
        for j in i + 1..m {
            if dist[i][j] <= 2 {
                if let (Some(a), Some(b)) = (c.get(i), c.get(j)) {
                    if a == b {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Random simple graph on `n` vertices with at most `max_edges` edges.
pub fn random_small_graph(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    pairs.truncate(m);
    Graph::new(n, &pairs).unwrap()
}

/// Random graph with every degree at most `max_degree`; not necessarily
/// connected.
pub fn random_bounded_graph(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> Graph {
    let mut deg = vec![0; n];
    let mut edges = std::collections::BTreeSet::new();
    for _ in 0..n * max_degree {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v
            && deg[u] < max_degree
            && deg[v] < max_degree
            && edges.insert((u.min(v), u.max(v)))
        {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::new(n, &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Brute-force enumeration of one vertex per `W_i` with no two chosen
/// vertices adjacent and no chosen vertex adjacent to another `w_j`.
pub fn transversal_exists(g: &Graph, root: usize) -> bool {
    let w: Vec<usize> = g.neighbors(root).to_vec();
    let w_sets: Vec<Vec<usize>> = w
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(|&y| y != root && !g.neighbors(root).contains(&y))
                .collect()
        })
        .collect();
    let mut pick = vec![0usize; w.len()];
    if w_sets.iter().any(Vec::is_empty) {
        return false;
    }
    loop {
        let chosen: Vec<usize> = pick
            .iter()
            .enumerate()
            .map(|(i, &k)| w_sets[i][k])
            .collect();
        let ok = (0..w.len()).all(|i| {
            (0..w.len()).all(|j| {
                i == j
                    || (chosen[i] != chosen[j]
                        && !g.has_edge(chosen[i], chosen[j])
                        && !g.has_edge(chosen[i], w[j]))
            })
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == w.len() {
                return false;
            }
            pick[i] += 1;
            if pick[i] < w_sets[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}
