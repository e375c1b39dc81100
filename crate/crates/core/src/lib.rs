//! Spectral computations for the Laplacian, signless Laplacian and adjacency tensors of
//! uniform hypergraphs.
//!
//! Vertices are 0-based throughout this crate; file formats use 1-based ids.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bipartite;
pub mod error;
pub mod family;
pub mod hypergraph;
mod linalg;
pub mod oracle;
pub mod solvers;
pub mod spectra;
pub mod structure;
pub mod tensor;
#[cfg(test)]
mod test_support;

pub use bipartite::{odd_bipartition, Partition};
pub use error::{Error, Result};
pub use family::{generate, kth_power, FamilySpec};
pub use hypergraph::{DegreeProfile, Graph, UniformHypergraph};
pub use solvers::SolverOptions;
pub use spectra::{SpectrumEntry, SpectrumReport};
pub use tensor::{EigenPair, TensorKind};
