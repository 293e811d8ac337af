//! Finite set-theoretic Yang-Baxter solutions (biracks and biquandles),
//! presentations of their universal non-commutative 2-cocycle groups, and
//! the conjugacy cocycle invariant of oriented knot and link diagrams.
//!
//! The crate is organized around four layers:
//!
//! * [`biquandle`] — tables for a solution `σ : X×X → X×X`, axiom
//!   verification, the standard constructions (quandle-induced, inverse,
//!   bijection, Wada, Alexander), isomorphism testing and exhaustive
//!   enumeration in small size.
//! * [`presentation`] — the saturation algorithm that computes a finite
//!   presentation of the universal cocycle group of a biquandle, its reduced
//!   quotients, coboundary candidate scanning, Tietze simplification and
//!   abelianization.
//! * [`diagram`] — oriented link diagrams over named semi-arcs with signed
//!   crossings, plus braid-closure and rational-tangle builders.
//! * [`invariant`] — biquandle colorings of a diagram and the per-component
//!   multiset of weight words up to conjugacy.
//!
//! Each major capability has a runnable example under `examples/`; the `ybq`
//! binary exposes the same operations as subcommands.

pub mod biquandle;
pub mod catalog;
pub mod cli;
pub mod cocycle;
pub mod coloring;
pub mod diagram;
pub mod invariant;
pub mod partition;
pub mod presentation;
pub mod snf;
pub mod word;

pub use biquandle::{verify, Classification, FiniteBiquandle, SigmaTables, VerificationReport};
pub use diagram::LinkDiagram;
pub use invariant::{InvariantMultiset, Mode};
pub use presentation::Presentation;
