//! Finite permutation groups and the Frattini-subgroup machinery built on them.
//!
//! The crate is layered:
//!
//! - [`perm`], [`chain`], [`group`], [`quotient`]: permutations, stabilizer chains,
//!   groups, and quotients realised as coset actions.
//! - [`structure`]: subgroup lattices, Frattini / Fitting / socle / layer,
//!   generalised Fitting series, chief series, complements.
//! - [`classifiers`]: membership in the Φ-free, 𝔅, 𝔉 and 𝔑ℭ classes, good normal
//!   subgroups, S-series, 𝔅-residual.
//! - [`corpus`]: named groups, the group-spec text format and report output.
//! - [`verifier`]: theorem and lemma replays as per-group checks.

pub mod chain;
pub mod classifiers;
pub mod corpus;
pub mod error;
pub mod group;
pub mod perm;
pub mod quotient;
pub mod structure;
mod table;
pub mod verifier;

pub use error::{CapKind, GroupError, Result};
pub use group::{group_from_generators, Caps, PermGroup};
pub use perm::Permutation;
pub use quotient::QuotientMap;
