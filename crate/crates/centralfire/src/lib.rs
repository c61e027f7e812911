//! Exact-arithmetic engine for *central-firing* on root-system weight lattices.
//!
//! Central-firing is the rewriting relation on the weight lattice of an
//! irreducible root system that replaces a weight `λ` by `λ + α` whenever `α`
//! is a positive root orthogonal to `λ`.  It simultaneously generalizes
//! labeled chip-firing on a line (Type A) and several of its variants
//! (Types B, C, D).  This crate provides:
//!
//! * [`rootsys`] — construction of any irreducible root system with Bourbaki
//!   numbering, plus pairing / reflection / dominance / lattice primitives,
//! * [`central`] — the firing relation itself: move enumeration, termination
//!   potential, normal forms, and confluence decisions by exhaustive search,
//! * [`unlabeled`] — the always-confluent variant on Weyl-group orbits,
//! * [`ucf`] — the simply-laced Dynkin-diagram number game equivalent to
//!   orbit firing, with two independent move implementations,
//! * [`span`] — firing spans, connectedness, and the Type-A classification,
//! * [`chips`] — chip configurations on `ℤ` and `ℤ + ½` for classical types,
//!   including pseudo-stabilization and split-stabilization,
//! * [`folding`] — Dynkin-diagram automorphism folding and the transport of
//!   confluence statements along it,
//! * [`cli`] — the batch driver behind the `centralfire` binary.
//!
//! All arithmetic is exact: weights and roots are integer vectors, and the
//! few places that need division (lattice membership, echelon bases, the
//! termination potential) use exact rationals.

pub mod central;
pub mod chips;
pub mod cli;
pub mod enumerate;
pub mod folding;
pub mod linalg;
pub mod rootsys;
pub mod span;
pub mod ucf;
pub mod unlabeled;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse root system type {0:?}")]
    ParseType(String),
    #[error("cannot parse weight {0:?}")]
    ParseWeight(String),
    #[error("operation requires a classical family (A, B, C, D), got {0}")]
    NotClassical(String),
    #[error("operation requires a simply-laced type (A, D, E), got {0}")]
    NotSimplyLaced(String),
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("weight must be 0 or a fundamental weight, got {0:?}")]
    NotFundamental(Vec<i64>),
    #[error("node budget exceeded after exploring {explored} weights")]
    BudgetExceeded { explored: usize },
    #[error("arithmetic overflow: a coordinate escaped the supported 64-bit range")]
    Overflow,
    #[error("move precondition violated: {0}")]
    MovePrecondition(String),
    #[error("{0}")]
    Invalid(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
