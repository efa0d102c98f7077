//! Maximum clique through null vectors and pure spinors.
//!
//! A graph's adjacency matrix `A` factors as `A = B²` with a complex
//! symmetric `B` whose columns are null vectors. Over the complement `Ā`
//! each vertex becomes a null Witt-basis vector `z̄ᵢ = pᵢ + Σⱼ āᵢⱼ qⱼ`;
//! cliques are exactly the sets of `z̄ᵢ` spanning totally null planes, and
//! maximal cliques are the Fock basis elements of the graph spinor `Ψ(Ā)`.
//!
//! Modules:
//! - [`graph`]: adjacency bitsets, DIMACS/JSON I/O, complement, rebuild from maximal cliques
//! - [`oracle`]: Bron–Kerbosch enumeration and brute-force clique listing
//! - [`matroot`]: Jacobi eigensolver and the complex symmetric square root
//! - [`motzkin`]: the simplex quadratic program solved by replicator dynamics
//! - [`clifford`]: Fock-space spinors and the Witt-basis action
//! - [`cartan`]: the graph spinor, saturated vectors and spinorial clique extraction
//! - [`verify`]: the per-instance invariant suite behind `spinclique verify`

pub mod cartan;
pub mod clifford;
pub mod error;
pub mod exact;
pub mod graph;
pub mod limits;
pub mod matroot;
pub mod motzkin;
pub mod oracle;
pub mod par;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use limits::Limits;
