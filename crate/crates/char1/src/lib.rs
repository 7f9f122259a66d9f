//! Exact arithmetic for characteristic-one algebra.
//!
//! The crate is organized in layers:
//!
//! * [`arith`] — elementary number theory (sieves, multiplicative functions,
//!   modular arithmetic) used everywhere else.
//! * [`semiring`] — finite semirings of characteristic one and the
//!   classification of finite semifields.
//! * [`entropy`] — the entropy function as a deformation parameter between
//!   ordinary addition and idempotent addition.
//! * [`witt`] — Witt vectors over the Boolean semifield and the universal
//!   deformation of idempotent addition.
//! * [`monoid`] — finite pointed commutative monoids, their prime spectra,
//!   localizations, and point counts over degree-one extensions.
//! * [`additive`] — symmetric additions on finite cyclic groups: exhaustive
//!   search, the count formula, and the constructive field-transport family.
//! * [`special`] — the entire-part special function, Gamma/digamma, Hurwitz
//!   zeta, and supporting quadrature ([`quad`]).
//! * [`zeta`] — zeta functions and log-derivatives of counting functions
//!   attached to monoid schemes.
//! * [`elliptic`] — integral Weierstrass curves: reduction types, point
//!   counts, Hecke coefficients, and the singularity catalog of the
//!   associated counting zeta function.
//!
//! All algebraic computations are exact (machine integers, `BigInt`, or
//! `BigRational`); floating point appears only in the analytic layer
//! ([`special`], [`quad`], and the numeric halves of [`zeta`] and
//! [`elliptic`]).

pub mod additive;
pub mod arith;
pub mod elliptic;
pub mod entropy;
pub mod monoid;
pub mod semiring;
pub mod special;
pub mod witt;
pub mod zeta;

pub use num::complex::Complex64;
pub use num::{self, BigInt, BigRational, BigUint};

/// Crate-wide error type.
///
/// `Domain` marks inputs outside an operation's contract (caller error);
/// `Internal` marks a violated mathematical invariant (library bug or
/// impossible data), e.g. an inexact division where exactness is a theorem.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("accuracy error: {0}")]
    Accuracy(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
