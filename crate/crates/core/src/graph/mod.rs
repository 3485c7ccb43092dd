//! Simple undirected graphs and the matrices built from them.

mod edgelist;
mod fixtures;
mod matrix;

pub use edgelist::{parse_edge_list, read_edge_list, to_edge_list};
pub use matrix::DenseSymMatrix;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The mixing weight of `A_α = α·D + β·A`, with `β = 1 − α`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub const ZERO: AlphaParam = AlphaParam(0.0);
    pub const HALF: AlphaParam = AlphaParam(0.5);
    pub const ONE: AlphaParam = AlphaParam(1.0);

    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidArgument(format!(
                "alpha must lie in [0, 1], got {alpha}"
            )));
        }
        Ok(AlphaParam(alpha))
    }

    #[inline]
    pub fn alpha(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn beta(self) -> f64 {
        1.0 - self.0
    }

    /// `1 − α`, the partner in `A_α + A_{1−α} = Q`.
    pub fn complement(self) -> AlphaParam {
        AlphaParam(1.0 - self.0)
    }
}

impl TryFrom<f64> for AlphaParam {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        AlphaParam::new(value)
    }
}

impl From<AlphaParam> for f64 {
    fn from(a: AlphaParam) -> f64 {
        a.0
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`; loops and duplicate
/// edges are rejected at construction.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Self::from_normalized(n, set))
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    fn from_normalized(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }

    /// True iff the graph is a path: acyclic and connected with two vertices of
    /// degree 1 and all others of degree 2 (or a single vertex).
    pub fn is_path(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let leaves = self.adj.iter().filter(|a| a.len() == 1).count();
        self.is_tree() && leaves == 2 && self.adj.iter().all(|a| a.len() <= 2)
    }

    /// True iff the graph is `K_{1,n−1}`.
    pub fn is_star(&self) -> bool {
        self.is_tree() && self.max_degree() + 1 == self.n
    }

    /// The subgraph induced on `vertices`, relabeled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges)
    }

    /// A copy of the graph with one new vertex `n` joined to `v`.
    pub fn with_pendant(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
        }
        let mut edges = self.edges.clone();
        edges.insert((v, self.n));
        Ok(Self::from_normalized(self.n + 1, edges))
    }

    /// Deletes the edge `{u, v}` and adds the edge `{u, w}`.
    pub fn rotate_edge(&self, u: usize, v: usize, w: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || w >= self.n {
            return Err(Error::InvalidRotation(format!(
                "vertices ({u}, {v}, {w}) must lie in 0..{}",
                self.n
            )));
        }
        if !self.has_edge(u, v) {
            return Err(Error::InvalidRotation(format!("{{{u}, {v}}} is not an edge")));
        }
        if u == w {
            return Err(Error::InvalidRotation(format!("cannot join {u} to itself")));
        }
        if self.has_edge(u, w) {
            return Err(Error::InvalidRotation(format!("{{{u}, {w}}} is already an edge")));
        }
        let mut edges = self.edges.clone();
        edges.remove(&(u.min(v), u.max(v)));
        edges.insert((u.min(w), u.max(w)));
        Ok(Self::from_normalized(self.n, edges))
    }

    /// `⟨A_α x, x⟩` evaluated as a sum over edges of
    /// `α·x_u² + 2(1−α)·x_u·x_v + α·x_v²`.
    pub fn quadratic_form(&self, a: AlphaParam, x: &[f64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::Dimension { expected: self.n, got: x.len() });
        }
        let (alpha, beta) = (a.alpha(), a.beta());
        Ok(self
            .edges()
            .map(|(u, v)| alpha * x[u] * x[u] + 2.0 * beta * x[u] * x[v] + alpha * x[v] * x[v])
            .sum())
    }

    /// `A_α(G) = α·D(G) + (1−α)·A(G)`.
    pub fn alpha_matrix(&self, a: AlphaParam) -> DenseSymMatrix {
        let mut m = DenseSymMatrix::zeros(self.n);
        for v in 0..self.n {
            m.set(v, v, a.alpha() * self.degree(v) as f64);
        }
        for (u, v) in self.edges() {
            m.set_sym(u, v, a.beta());
        }
        m
    }

    /// The 0/1 adjacency matrix `A(G)`.
    pub fn adjacency_matrix(&self) -> DenseSymMatrix {
        self.combined_matrix(0.0, 1.0)
    }

    /// The diagonal degree matrix `D(G)`.
    pub fn degree_matrix(&self) -> DenseSymMatrix {
        self.combined_matrix(1.0, 0.0)
    }

    /// The signless Laplacian `Q = D + A`.
    pub fn signless_laplacian(&self) -> DenseSymMatrix {
        self.combined_matrix(1.0, 1.0)
    }

    /// The Laplacian `L = D − A`.
    pub fn laplacian(&self) -> DenseSymMatrix {
        self.combined_matrix(1.0, -1.0)
    }

    fn combined_matrix(&self, diag: f64, off: f64) -> DenseSymMatrix {
        let mut m = DenseSymMatrix::zeros(self.n);
        for v in 0..self.n {
            m.set(v, v, diag * self.degree(v) as f64);
        }
        for (u, v) in self.edges() {
            m.set_sym(u, v, off);
        }
        m
    }
}
