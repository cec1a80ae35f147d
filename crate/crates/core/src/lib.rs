//! Discrete Morse theory on the n-sphere moment-angle complex
//! `Z_K(D^n, S^{n-1})` of a finite simplicial complex `K`.
//!
//! The crate is organised bottom-up:
//!
//! * [`simplicial`] finite simplicial complexes on `[m]` and the usual
//!   combinatorial operations (Alexander dual, link, deletion, join, ...).
//! * [`vertex_decomp`] vertex decomposability, shedding vertices and
//!   shedding sequences.
//! * [`cw_homology`] the explicit regular CW model of `Z_K(D^n, S^{n-1})`,
//!   Betti numbers over prime fields and the wedge-of-spheres count.
//! * [`morse`] the coordinate-by-coordinate acyclic matching, its critical
//!   cells (computed two independent ways) and the structure theory of
//!   critical sign vectors.
//! * [`cli`] report builders behind the `zkmorse` binary.
//!
//! Vertices are 1-based everywhere in the public API, matching the JSON
//! file format.

pub mod cli;
pub mod cw_homology;
pub mod error;
pub mod morse;
pub mod simplicial;
pub mod vertex_decomp;

pub use cw_homology::{BettiTable, DiskCell, Prime, ProductCell};
pub use error::{Error, Result};
pub use morse::{Sign, SignVector};
pub use simplicial::{FaceSet, Graph, SimplicialComplex};
