//! Named hypergraph families with canonical vertex numbering.
//!
//! Numbering (1-based, as in files):
//! - hyperstar(k, d): heart 1, leaf `j` is `{1} ∪ {2 + (j-1)(k-1), .., 1 + j(k-1)}`.
//! - hypercycle(k, s): edge `j` is the block `(j-1)(k-1)+1 ..= j(k-1)` plus the first
//!   vertex of the next block (wrapping).
//! - hyperpath(k, d): edge `j` is `(j-1)(k-1)+1 ..= j(k-1)+1`.
//! - sunflower(k): petal `j` is `(j-1)k+1 ..= jk`, then the centre edge joins the first
//!   vertex of every petal with the centre vertex `(k-1)k+1`.
//! - power(G, k): base vertices first, then `k-2` fresh vertices per base edge in input order.
//! - complete(k, n): every k-subset, in lexicographic order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, UniformHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Hyperstar { k: usize, d: usize },
    Hypercycle { k: usize, s: usize },
    Hyperpath { k: usize, d: usize },
    Sunflower { k: usize },
    Power { graph: Graph, k: usize },
    Complete { k: usize, n: usize },
}

impl FamilySpec {
    pub fn k(&self) -> usize {
        match *self {
            FamilySpec::Hyperstar { k, .. }
            | FamilySpec::Hypercycle { k, .. }
            | FamilySpec::Hyperpath { k, .. }
            | FamilySpec::Sunflower { k }
            | FamilySpec::Power { k, .. }
            | FamilySpec::Complete { k, .. } => k,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Hyperstar { .. } => "hyperstar",
            FamilySpec::Hypercycle { .. } => "hypercycle",
            FamilySpec::Hyperpath { .. } => "hyperpath",
            FamilySpec::Sunflower { .. } => "sunflower",
            FamilySpec::Power { .. } => "power",
            FamilySpec::Complete { .. } => "complete",
        }
    }

    /// Vertex count of the generated member.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Hyperstar { k, d } | FamilySpec::Hyperpath { k, d } => d * (k - 1) + 1,
            FamilySpec::Hypercycle { k, s } => s * (k - 1),
            FamilySpec::Sunflower { k } => (k - 1) * k + 1,
            FamilySpec::Power { graph, k } => graph.n() + (k - 2) * graph.edges().len(),
            FamilySpec::Complete { n, .. } => *n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k() < 3 {
            return Err(Error::InvalidFamilyParameter("k must be at least 3"));
        }
        match self {
            FamilySpec::Hyperstar { d, .. } if *d < 1 => Err(Error::InvalidFamilyParameter(
                "hyperstar size d must be at least 1",
            )),
            FamilySpec::Hypercycle { s, .. } if *s < 2 => Err(Error::InvalidFamilyParameter(
                "hypercycle size s must be at least 2",
            )),
            FamilySpec::Hyperpath { d, .. } if *d < 1 => Err(Error::InvalidFamilyParameter(
                "hyperpath length d must be at least 1",
            )),
            FamilySpec::Power { graph, .. } if graph.edges().is_empty() => Err(
                Error::InvalidFamilyParameter("power base graph needs an edge"),
            ),
            FamilySpec::Complete { k, n } if n < k => Err(Error::InvalidFamilyParameter(
                "complete hypergraph needs n >= k",
            )),
            _ => Ok(()),
        }
    }
}

/// Builds the canonical labelled member of a family.
pub fn generate(spec: &FamilySpec) -> Result<UniformHypergraph> {
    spec.validate()?;
    let n = spec.vertex_count();
    let edges: Vec<Vec<usize>> = match *spec {
        FamilySpec::Hyperstar { k, d } => (0..d)
            .map(|j| {
                let mut e = Vec::with_capacity(k);
                e.push(0);
                e.extend(1 + j * (k - 1)..1 + (j + 1) * (k - 1));
                e
            })
            .collect(),
        FamilySpec::Hypercycle { k, s } => (0..s)
            .map(|j| {
                let mut e: Vec<usize> = (j * (k - 1)..(j + 1) * (k - 1)).collect();
                e.push(((j + 1) % s) * (k - 1));
                e
            })
            .collect(),
        FamilySpec::Hyperpath { k, d } => (0..d)
            .map(|j| (j * (k - 1)..=(j + 1) * (k - 1)).collect())
            .collect(),
        FamilySpec::Sunflower { k } => {
            let mut edges: Vec<Vec<usize>> =
                (0..k - 1).map(|j| (j * k..(j + 1) * k).collect()).collect();
            let mut centre: Vec<usize> = (0..k - 1).map(|j| j * k).collect();
            centre.push((k - 1) * k);
            edges.push(centre);
            edges
        }
        FamilySpec::Power { ref graph, k } => return kth_power(graph, k),
        FamilySpec::Complete { k, n } => k_subsets(n, k),
    };
    UniformHypergraph::new(spec.k(), n, edges)
}

/// The k-th power of a graph: every edge gains `k - 2` fresh degree-1 vertices.
pub fn kth_power(graph: &Graph, k: usize) -> Result<UniformHypergraph> {
    if k < 3 {
        return Err(Error::InvalidFamilyParameter("k must be at least 3"));
    }
    if graph.edges().is_empty() {
        return Err(Error::InvalidFamilyParameter(
            "power base graph needs an edge",
        ));
    }
    let base = graph.n();
    let fresh = k - 2;
    let edges = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(j, &(a, b))| {
            let mut e = Vec::with_capacity(k);
            e.push(a);
            e.push(b);
            e.extend(base + j * fresh..base + (j + 1) * fresh);
            e
        })
        .collect();
    UniformHypergraph::new(k, base + fresh * graph.edges().len(), edges)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
