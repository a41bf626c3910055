//! Deterministic graph generators: fixtures, C5 blowups and seeded random
//! samplers.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Full restarts allowed for the random regular sampler.
pub const RETRY_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no graph found after {0} attempts (infeasible parameters or bad luck)")]
    RetryLimit(usize),
    #[error("cannot parse generator spec '{0}'")]
    Parse(String),
}

/// A generator family with its parameters. Together with a seed it fixes
/// the output graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    Petersen,
    C5Blowup {
        max_degree: usize,
    },
    Cycle {
        n: usize,
    },
    RandomRegular {
        n: usize,
        degree: usize,
        girth_min: usize,
    },
    RandomMaxDegree {
        n: usize,
        max_degree: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self, seed: u64) -> Result<Graph, GenError> {
        match *self {
            GeneratorSpec::Petersen => Ok(gen_petersen()),
            GeneratorSpec::C5Blowup { max_degree } => gen_c5_blowup(max_degree),
            GeneratorSpec::Cycle { n } => gen_cycle(n),
            GeneratorSpec::RandomRegular {
                n,
                degree,
                girth_min,
            } => gen_random_regular(n, degree, girth_min, seed),
            GeneratorSpec::RandomMaxDegree { n, max_degree } => {
                gen_random_max_degree(n, max_degree, seed)
            }
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Petersen => f.write_str("petersen"),
            GeneratorSpec::C5Blowup { max_degree } => write!(f, "c5_blowup:{max_degree}"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GeneratorSpec::RandomRegular {
                n,
                degree,
                girth_min,
            } => write!(f, "random_regular:{n},{degree},{girth_min}"),
            GeneratorSpec::RandomMaxDegree { n, max_degree } => {
                write!(f, "random_max_degree:{n},{max_degree}")
            }
        }
    }
}

/// Accepts `petersen`, `c5_blowup:D`, `cycle:N`, `random_regular:N,D,G` and
/// `random_max_degree:N,D`.
impl FromStr for GeneratorSpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::Parse(s.to_owned());
        let (kind, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        };
        match (kind.trim(), nums.as_slice()) {
            ("petersen", []) => Ok(GeneratorSpec::Petersen),
            ("c5_blowup", &[d]) => Ok(GeneratorSpec::C5Blowup { max_degree: d }),
            ("cycle", &[n]) => Ok(GeneratorSpec::Cycle { n }),
            ("random_regular", &[n, d, g]) => Ok(GeneratorSpec::RandomRegular {
                n,
                degree: d,
                girth_min: g,
            }),
            ("random_max_degree", &[n, d]) => {
                Ok(GeneratorSpec::RandomMaxDegree { n, max_degree: d })
            }
            _ => Err(bad()),
        }
    }
}

/// Outer 5-cycle `0..5`, spokes `i – i+5`, inner pentagram on `5..10`.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("petersen graph is simple")
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParameters(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("cycle is simple"))
}

/// Replaces each vertex of a 5-cycle by an independent set and joins
/// cyclically consecutive sets completely.
///
/// Even Δ: five sets of Δ/2, Δ-regular with 5Δ²/4 edges. Odd Δ: sets of
/// (Δ+1)/2, (Δ+1)/2, (Δ−1)/2, (Δ−1)/2, (Δ−1)/2 in cycle order, with
/// (5Δ² − 2Δ + 1)/4 edges; the vertices of the fourth set then have degree
/// Δ − 1, all others Δ. Vertices are numbered set by set.
pub fn gen_c5_blowup(max_degree: usize) -> Result<Graph, GenError> {
    let d = max_degree;
    if d < 2 {
        return Err(GenError::InvalidParameters(format!(
            "C5 blowup needs max degree >= 2, got {d}"
        )));
    }
    let sizes = if d.is_multiple_of(2) {
        [d / 2; 5]
    } else {
        [
            d.div_ceil(2),
            d.div_ceil(2),
            (d - 1) / 2,
            (d - 1) / 2,
            (d - 1) / 2,
        ]
    };
    let mut start = [0; 5];
    for i in 1..5 {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    let n = start[4] + sizes[4];
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        for a in start[i]..start[i] + sizes[i] {
            for b in start[j]..start[j] + sizes[j] {
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("blowup is simple"))
}

/// A `degree`-regular graph on `n` vertices with girth at least
/// `girth_min`.
///
/// Pairing model built one pair at a time: two random free points are
/// matched unless that creates a loop, a parallel edge or a cycle shorter
/// than `girth_min`. After repeated rejections the valid pairs are listed
/// and one is drawn from them directly; when none is left the attempt starts
/// over, up to [`RETRY_LIMIT`] times.
pub fn gen_random_regular(
    n: usize,
    degree: usize,
    girth_min: usize,
    seed: u64,
) -> Result<Graph, GenError> {
    if !(n * degree).is_multiple_of(2) {
        return Err(GenError::InvalidParameters(format!(
            "n * degree must be even, got {n} * {degree}"
        )));
    }
    if degree >= n && degree > 0 {
        return Err(GenError::InvalidParameters(format!(
            "degree {degree} needs more than {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_LIMIT {
        if let Some(edges) = regular_attempt(n, degree, girth_min, &mut rng) {
            return Ok(Graph::new(n, &edges).expect("sampler keeps the graph simple"));
        }
    }
    Err(GenError::RetryLimit(RETRY_LIMIT))
}

fn regular_attempt(
    n: usize,
    degree: usize,
    girth_min: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(VertexId, VertexId)>> {
    // A new edge uv closes a cycle of length dist(u, v) + 1.
    let min_dist = girth_min.saturating_sub(1).max(2);
    let mut points: Vec<VertexId> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::with_capacity(degree); n];
    let mut edges = Vec::with_capacity(n * degree / 2);
    let mut scratch = Bfs::new(n);

    while !points.is_empty() {
        let mut placed = false;
        for _ in 0..(8 + points.len()) {
            let i = rng.gen_range(0..points.len());
            let j = rng.gen_range(0..points.len());
            let (u, v) = (points[i], points[j]);
            if u != v && !scratch.within(&adj, u, v, min_dist - 1) {
                take_points(&mut points, i, j);
                add_edge(&mut adj, &mut edges, u, v);
                placed = true;
                break;
            }
        }
        if placed {
            continue;
        }
        let mut free: Vec<VertexId> = points.clone();
        free.sort_unstable();
        free.dedup();
        let mut valid = Vec::new();
        for (a, &u) in free.iter().enumerate() {
            for &v in &free[a + 1..] {
                if !scratch.within(&adj, u, v, min_dist - 1) {
                    valid.push((u, v));
                }
            }
        }
        let &(u, v) = valid.choose(rng)?;
        let i = points
            .iter()
            .position(|&x| x == u)
            .expect("u has a free point");
        let j = points
            .iter()
            .position(|&x| x == v)
            .expect("v has a free point");
        take_points(&mut points, i, j);
        add_edge(&mut adj, &mut edges, u, v);
    }
    Some(edges)
}

fn take_points(points: &mut Vec<VertexId>, i: usize, j: usize) {
    let (hi, lo) = if i > j { (i, j) } else { (j, i) };
    points.swap_remove(hi);
    points.swap_remove(lo);
}

fn add_edge(
    adj: &mut [Vec<VertexId>],
    edges: &mut Vec<(VertexId, VertexId)>,
    u: VertexId,
    v: VertexId,
) {
    adj[u].push(v);
    adj[v].push(u);
    edges.push((u, v));
}

/// Reusable depth-bounded BFS over a growing adjacency list.
struct Bfs {
    dist: Vec<usize>,
    touched: Vec<VertexId>,
    queue: VecDeque<VertexId>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs {
            dist: vec![usize::MAX; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    /// Whether `v` is within `depth` steps of `u`.
    fn within(&mut self, adj: &[Vec<VertexId>], u: VertexId, v: VertexId, depth: usize) -> bool {
        for &t in &self.touched {
            self.dist[t] = usize::MAX;
        }
        self.touched.clear();
        self.queue.clear();
        self.dist[u] = 0;
        self.touched.push(u);
        self.queue.push_back(u);
        while let Some(x) = self.queue.pop_front() {
            if x == v {
                return true;
            }
            if self.dist[x] == depth {
                continue;
            }
            for &y in &adj[x] {
                if self.dist[y] == usize::MAX {
                    self.dist[y] = self.dist[x] + 1;
                    self.touched.push(y);
                    self.queue.push_back(y);
                }
            }
        }
        false
    }
}

/// A connected graph on `n` vertices with maximum degree at most
/// `max_degree`: a random tree respecting the cap, then random extra edges
/// between unsaturated vertices.
pub fn gen_random_max_degree(n: usize, max_degree: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    if n > 2 && max_degree < 2 {
        return Err(GenError::InvalidParameters(format!(
            "a connected graph on {n} vertices needs max degree >= 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut present = std::collections::BTreeSet::new();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    for k in 1..n {
        let open: Vec<VertexId> = order[..k]
            .iter()
            .copied()
            .filter(|&v| deg[v] < max_degree)
            .collect();
        let &parent = open
            .choose(&mut rng)
            .expect("a tree always has an unsaturated vertex");
        let child = order[k];
        deg[parent] += 1;
        deg[child] += 1;
        present.insert((parent.min(child), parent.max(child)));
        edges.push((parent, child));
    }
    for _ in 0..n * max_degree {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let key = (u.min(v), u.max(v));
        if u != v && deg[u] < max_degree && deg[v] < max_degree && present.insert(key) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push(key);
        }
    }
    Ok(Graph::new(n, &edges).expect("generator keeps the graph simple"))
}
