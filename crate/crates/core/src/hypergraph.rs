//! k-uniform hypergraphs and ordinary graphs.
//!
//! Vertices are stored 0-based: index `i` stands for the external identifier `i + 1`.
//! Each edge is kept sorted ascending; the edge list keeps the order it was built in,
//! so family generators can rely on their own edge numbering.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An immutable, validated, simple k-uniform hypergraph with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    k: usize,
    n: usize,
    // flat storage, `k` consecutive entries per edge
    edges: Vec<usize>,
}

impl UniformHypergraph {
    /// Builds a hypergraph from 0-based edges. Each edge is sorted; the edge order is kept.
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut flat = Vec::with_capacity(k * edges.len());
        for (idx, mut e) in edges.into_iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n });
            }
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(Error::NonUniformEdge {
                    edge: idx + 1,
                    expected: k,
                    found: e.len(),
                });
            }
            flat.extend_from_slice(&e);
        }
        let h = UniformHypergraph { k, n, edges: flat };
        h.check_scope()?;
        h.check_duplicates()?;
        Ok(h)
    }

    /// Builds a hypergraph from 1-based vertex identifiers, as used in files.
    pub fn from_one_based(k: usize, n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(edges.len());
        for e in edges {
            let mut s = Vec::with_capacity(e.len());
            for &v in e {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                s.push(v - 1);
            }
            shifted.push(s);
        }
        Self::new(k, n, shifted)
    }

    fn check_scope(&self) -> Result<()> {
        if self.k < 3 || self.n < self.k {
            return Err(Error::UnsupportedUniformity { k: self.k });
        }
        if self.edges.is_empty() {
            return Err(Error::TrivialHypergraph);
        }
        Ok(())
    }

    fn check_duplicates(&self) -> Result<()> {
        let mut order: Vec<usize> = (0..self.num_edges()).collect();
        order.sort_by(|&a, &b| self.edge(a).cmp(self.edge(b)).then(a.cmp(&b)));
        for w in order.windows(2) {
            if self.edge(w[0]) == self.edge(w[1]) {
                return Err(Error::DuplicateEdge {
                    edge: w[0].max(w[1]) + 1,
                });
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len() / self.k
    }

    /// The sorted vertex list of edge `idx`.
    pub fn edge(&self, idx: usize) -> &[usize] {
        &self.edges[idx * self.k..(idx + 1) * self.k]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.edges.chunks_exact(self.k)
    }

    /// Edges as owned 1-based vectors with the edge list sorted lexicographically.
    pub fn canonical_edges(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .edges()
            .map(|e| e.iter().map(|v| v + 1).collect())
            .collect();
        out.sort();
        out
    }

    /// Same hypergraph with the edge list sorted lexicographically.
    pub fn canonicalized(&self) -> Self {
        let mut edges: Vec<&[usize]> = self.edges().collect();
        edges.sort();
        UniformHypergraph {
            k: self.k,
            n: self.n,
            edges: edges.concat(),
        }
    }

    pub fn degrees(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for &v in &self.edges {
            degrees[v] += 1;
        }
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max }
    }

    /// True iff every vertex lies in a single edge-connected component.
    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges() {
            for w in e.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let root = uf.find(0);
        (1..self.n).all(|v| uf.find(v) == root)
    }

    /// For every edge, its smallest degree-1 vertex; `None` unless every edge has one.
    pub fn cored_structure(&self) -> Option<Vec<usize>> {
        let deg = self.degrees();
        self.edges()
            .map(|e| e.iter().copied().find(|&v| deg.degrees[v] == 1))
            .collect()
    }

    pub fn is_cored(&self) -> bool {
        self.cored_structure().is_some()
    }

    pub fn is_regular(&self) -> bool {
        let deg = self.degrees();
        deg.degrees.iter().all(|&d| d == deg.max)
    }
}

/// Per-vertex degrees and their maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph from 0-based pairs; pairs are stored as `(min, max)`.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (idx, (a, b)) in edges.into_iter().enumerate() {
            if let Some(v) = [a, b].into_iter().find(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n });
            }
            let pair = (a.min(b), a.max(b));
            if a == b || out.contains(&pair) {
                return Err(Error::NonSimpleGraph { edge: idx + 1 });
            }
            out.push(pair);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if let Some(v) = [a, b].into_iter().find(|&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            shifted.push((a - 1, b - 1));
        }
        Self::new(n, shifted)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph {
            n: leaves + 1,
            edges: (1..=leaves).map(|v| (0, v)).collect(),
        }
    }

    /// Cycle on `len >= 3` vertices.
    pub fn cycle(len: usize) -> Result<Self> {
        if len < 3 {
            return Err(Error::InvalidFamilyParameter(
                "a simple cycle needs at least 3 vertices",
            ));
        }
        Self::new(len, (0..len).map(|i| (i, (i + 1) % len)).collect())
    }

    /// Path with `len` edges.
    pub fn path(len: usize) -> Self {
        Graph {
            n: len + 1,
            edges: (0..len).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        out.sort();
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
