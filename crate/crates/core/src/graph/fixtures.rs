//! Named graph families.
//!
//! The Smith graphs are the connected graphs whose adjacency spectral radius
//! is exactly 2. Their vertex numbering below follows the drawings left to
//! right along the horizontal spine, with the off-spine vertices last.

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    /// `P_n` with edges `{i, i+1}`; requires `n ≥ 2`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("path needs n >= 2, got {n}")));
        }
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
    }

    /// `K_{1,n−1}` with centre 0; requires `n ≥ 2`.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("star needs n >= 2, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (0, i)))
    }

    /// `C_n`; requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_n`; requires `n ≥ 1`.
    pub fn complete(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `Y_n` for `n > 5`: a path `0..n−3` with a pendant on its second vertex
    /// and another on its second-to-last vertex, so both ends are forked.
    pub fn smith_y(n: usize) -> Result<Graph> {
        if n <= 5 {
            return Err(Error::InvalidArgument(format!("Y_n needs n > 5, got {n}")));
        }
        let spine = n - 2;
        let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|i| (i, i + 1)).collect();
        edges.push((1, n - 2));
        edges.push((spine - 2, n - 1));
        Graph::new(n, edges)
    }

    /// `F_7`: a 5-vertex path `0..4` with the 2-vertex tail `2–5–6` on its centre.
    pub fn smith_f7() -> Graph {
        Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
            .expect("F7 fixture is a valid graph")
    }

    /// `F_8`: a 7-vertex path `0..6` with a pendant `7` on its centre vertex 3.
    pub fn smith_f8() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        edges.push((3, 7));
        Graph::new(8, edges).expect("F8 fixture is a valid graph")
    }

    /// `F_9`: an 8-vertex path `0..7` with a pendant `8` on its third vertex.
    pub fn smith_f9() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, i + 1)).collect();
        edges.push((2, 8));
        Graph::new(9, edges).expect("F9 fixture is a valid graph")
    }

    /// `K_{1,4}`.
    pub fn smith_k14() -> Graph {
        Graph::star(5).expect("K_{1,4} fixture is a valid graph")
    }
}
