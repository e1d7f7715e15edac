//! Logical resource estimation for the quantum linear system algorithm (QLSA).
//!
//! The crate is organised around a small algebra of gate-count vectors
//! ([`resources`]), closed-form cost templates for the composite gates the
//! algorithm is built from ([`templates`]), a parameter-sizing layer
//! ([`sizing`]), per-query oracle cost profiles ([`oracles`]), and the
//! hierarchical call-tree evaluator that folds everything into a final
//! report ([`profile`]).
//!
//! Two supporting subsystems keep the numbers honest: [`verifier`] expands
//! templates to explicit gate lists and simulates the small ones against
//! their defining unitaries, and [`reversibilizer`] implements the
//! classical-to-reversible compilation used to build oracles, at toy scale.

pub mod oracles;
pub mod profile;
pub mod resources;
pub mod reversibilizer;
pub mod sizing;
pub mod synthesis;
pub mod templates;
pub mod verifier;

pub use resources::{GateKind, ResourceVector};
pub use synthesis::RotationPolicy;
