//! Exact character theory for finite permutation groups at desk scale.
//!
//! The crate computes, with exact arithmetic throughout: conjugacy classes
//! and conjugacy classes of cyclic subgroups, irreducible character tables
//! over cyclotomic fields via the modular (Dixon-Burnside) method, the
//! Galois action on characters and classes, induced principal characters,
//! and decompositions of rational-valued characters over induced principal
//! characters with integer-numerator audits. A verification suite checks
//! the structural identities (span dimension, basis criteria, orbit-count
//! duality, class-size identity) on any group in range.

pub mod artin;
pub mod catalog;
pub mod chartab;
pub mod classfn;
pub mod cyclotomic;
pub mod error;
pub mod galois;
pub mod group;
pub mod matrix;
pub mod modular;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod report;
pub mod verify;

pub use catalog::GroupSpec;
pub use chartab::CharacterTable;
pub use classfn::ClassFunction;
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{CyclicClass, CyclicSubgroup, FiniteGroup, DEFAULT_SIZE_LIMIT};
pub use perm::Perm;
pub use rational::Rational;
