//! Rough set algebras over finite approximation spaces.
//!
//! Given a finite set U with an equivalence relation θ (presented by its
//! partition blocks), every subset has a lower and an upper approximation
//! in terms of the θ-classes, and the collection of distinct
//! approximation pairs carries a regular double Stone algebra — the
//! *principal rough set algebra* R_θ. This crate builds that algebra
//! explicitly, audits the whole equational theory (bounded distributive
//! lattice, pseudocomplements, Stone identities, regularity, core and
//! center structure) by exhaustive substitution, and realizes the
//! structure maps that identify R_θ with a power of the three-element
//! chain and with a ternary partition lattice:
//!
//! * the per-class trichotomy collapse R_θ → C₃ᴱ (E the classes of θ),
//! * the coordinate map α : TP_J → C₃ᴶ,
//! * the embedding chain R_θ ↪ TP_U ↪ C₃ᵁ via ⟨X̲,X̄⟩ ↦ (X̲, X̄ᶜ),
//!
//! each verified element by element rather than assumed.
//!
//! The `examples/` directory shows one runnable program per capability;
//! the `roughstone` binary exposes the same machinery as `table`,
//! `check`, `iso` and `selftest` subcommands over a small line-oriented
//! space file format (see [`space::parse_space`]).

pub mod algebra;
pub mod chain;
pub mod cli;
pub mod morphisms;
pub mod selftest;
pub mod set;
pub mod space;
pub mod ternary;

pub use algebra::{AlgebraError, Counterexample, Elem, FiniteAlgebra, LawReport};
pub use chain::{C3Value, C3Vector};
pub use set::IndexSet;
pub use space::{parse_space, ApproximationSpace, RoughPair};
pub use ternary::TernaryPartition;
