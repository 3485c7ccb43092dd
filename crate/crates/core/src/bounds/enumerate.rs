//! Exhaustive generators for small graphs and trees.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], sets: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

/// Decodes a Prüfer sequence of length `n − 2` over `0..n` into a labeled tree.
pub fn prufer_to_tree(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidArgument(format!(
            "Prüfer sequence for n={n} must have length n-2, got {}",
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
        return Err(Error::InvalidArgument(format!("Prüfer entry {bad} outside 0..{n}")));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

/// `n^(n−2)`, the number of labeled trees on `n ≥ 2` vertices.
pub fn labeled_tree_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// The labeled tree whose Prüfer sequence is the base-`n` expansion of `index`.
pub fn labeled_tree(n: usize, mut index: u64) -> Result<Graph> {
    if index >= labeled_tree_count(n) {
        return Err(Error::InvalidArgument(format!("tree index {index} out of range for n={n}")));
    }
    let mut seq = vec![0usize; n.saturating_sub(2)];
    for s in seq.iter_mut().rev() {
        *s = (index % n as u64) as usize;
        index /= n as u64;
    }
    prufer_to_tree(&seq, n)
}

/// A uniformly random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_to_tree(&seq, n)
}

/// An isomorphism-invariant string for a tree: the AHU encoding rooted at
/// its centre (the smaller encoding over both centres when there are two).
pub fn tree_canonical_form(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::InvalidArgument("canonical form needs a tree".into()));
    }
    let centres = tree_centres(g);
    Ok(centres.iter().map(|&c| ahu(g, c, usize::MAX)).min().expect("a tree has a centre"))
}

fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> =
        g.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| ahu(g, w, v)).collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

fn tree_centres(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// One representative of every isomorphism class of trees of order `n ≥ 1`,
/// ordered by canonical form.
pub fn nonisomorphic_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tree order must be positive".into()));
    }
    let mut current = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut classes = BTreeMap::new();
        for t in &current {
            for v in 0..t.order() {
                let grown = t.with_pendant(v)?;
                classes.entry(tree_canonical_form(&grown)?).or_insert(grown);
            }
        }
        current = classes.into_values().collect();
    }
    Ok(current)
}

/// The vertex pairs of `K_n` in lexicographic order; bit `i` of an edge mask
/// selects `pairs[i]`.
pub fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Edge masks (over [`complete_pairs`]) of every labeled connected graph on
/// `n` vertices, found by filtering all edge subsets of `K_n` with a
/// union-find connectivity check. `n ≤ 7` keeps this under `2^21` subsets.
pub fn connected_edge_masks(n: usize) -> Result<Vec<u32>> {
    if n == 0 || n > 7 {
        return Err(Error::InvalidArgument(format!(
            "connected-graph enumeration supports 1..=7 vertices, got {n}"
        )));
    }
    let pairs = complete_pairs(n);
    let masks = (0u32..(1u32 << pairs.len()))
        .filter(|&mask| {
            if (mask.count_ones() as usize) + 1 < n {
                return false;
            }
            let mut uf = UnionFind::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    uf.union(u, v);
                }
            }
            uf.set_count() == 1
        })
        .collect();
    Ok(masks)
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
    Graph::new(n, edges).expect("pairs of K_n form a simple graph")
}

/// All labeled connected graphs on `n ≤ 7` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs = complete_pairs(n);
    Ok(connected_edge_masks(n)?.into_iter().map(|m| graph_from_mask(n, &pairs, m)).collect())
}
