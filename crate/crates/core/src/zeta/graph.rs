use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::Matrix;

/// A finite undirected multigraph without self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    // (min, max), sorted
    edges: Vec<(usize, usize)>,
}

/// One orientation of an undirected edge; `mult` numbers parallel edges
/// between the same pair of vertices from 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub src: usize,
    pub tgt: usize,
    pub mult: usize,
}

impl DirectedEdge {
    pub fn reverse(self) -> Self {
        DirectedEdge { src: self.tgt, tgt: self.src, mult: self.mult }
    }
}

impl Graph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidGraph(format!("edge {u} {v} uses a vertex outside 0..{vertices}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort();
        Ok(Graph { vertices, edges: norm })
    }

    /// Parses an edge list, one `u v` pair per line (0-indexed). Blank lines
    /// and `#` comments are skipped; the vertex count is one more than the
    /// largest index.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: expected two vertex indices, got {line:?}", n + 1));
            if fields.len() != 2 {
                return Err(bad());
            }
            let u: usize = fields[0].parse().map_err(|_| bad())?;
            let v: usize = fields[1].parse().map_err(|_| bad())?;
            edges.push((u, v));
        }
        let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::new(vertices, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &edges).expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
        Graph::new(a + b, &edges).expect("valid complete bipartite graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &edges).expect("valid Petersen graph")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// `χ = |V| − |E|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges.len() as i64
    }

    pub fn adjacency(&self) -> Matrix<BigInt> {
        let mut a: Matrix<BigInt> = Matrix::zeros(self.vertices, self.vertices);
        for &(u, v) in &self.edges {
            a[(u, v)].add_assign(&BigInt::from(1));
            a[(v, u)].add_assign(&BigInt::from(1));
        }
        a
    }

    /// Every edge in both orientations, sorted by `(src, tgt, mult)`.
    pub fn directed_edges(&self) -> Vec<DirectedEdge> {
        let mut out = Vec::with_capacity(2 * self.edges.len());
        let mut prev: Option<(usize, usize)> = None;
        let mut mult = 0;
        for &(u, v) in &self.edges {
            mult = if prev == Some((u, v)) { mult + 1 } else { 0 };
            prev = Some((u, v));
            out.push(DirectedEdge { src: u, tgt: v, mult });
            out.push(DirectedEdge { src: v, tgt: u, mult });
        }
        out.sort();
        out
    }
}
