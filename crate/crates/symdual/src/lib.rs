//! Numerical Lie theory for symmetric-space duality.
//!
//! The crate builds matrix Lie algebras from explicit bases, computes Cartan
//! decompositions `g = k ⊕ p`, maps subalgebras through the duality map
//! `ψ: X + Y ↦ X + iY` into the compact real form `g* = k ⊕ ip`, and verifies
//! polarity and hyperpolarity of the induced actions at the tangent space of
//! the base point.
//!
//! Module map:
//! - [`linalg`] — form-aware numerical kernel (ranks, null spaces, eigensplits)
//! - [`liealg`] — matrix Lie algebras, Killing forms, reductivity criterion
//! - [`cartan`] — Cartan involutions, canonical embedding, Lie triple systems
//! - [`duality`] — the map ψ, compact duals, dual subalgebras
//! - [`actions`] — slice representations, cohomogeneity, polarity reports
//! - [`catalog`] — classical real forms and the worked subgroup families
//! - [`suite`] — the aggregate verification suite driven by the CLI

pub mod actions;
pub mod cartan;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod sampling;
pub mod schema;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::Tolerances;
