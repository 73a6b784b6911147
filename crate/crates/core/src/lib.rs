//! Exact arithmetic for Sturmian words and their repetition exponents.
//!
//! The crate is organized around five layers:
//!
//! * [`exact`] — arbitrary-precision integers, rationals and elements of a
//!   real quadratic field `(a + b√d)/c`, with exact comparison, floor and
//!   certified decimal enclosures. No binary floating point is used anywhere.
//! * [`contfrac`] — continued fractions (integer part, preperiod, period),
//!   convergents, exact evaluation of eventually periodic expansions, and the
//!   limits of the convergent-denominator ratios `q_{k-1}/q_k`.
//! * [`words`] — Sturmian word generation (rotation coding, characteristic
//!   blocks, the case-2 construction), the three-case prefix classifier and
//!   factor counting.
//! * [`repetition`] — the repetition function `r(n, x)` (a definitional
//!   hash-scan engine and a near-linear suffix-automaton engine), trailing
//!   window estimates of the repetition exponent, and consistency reports.
//! * [`spectrum`] — the exact machinery behind the spectrum of repetition
//!   exponents: state propagation under partial-quotient patterns,
//!   pattern-exclusion bounds, periodic-family limits, exact repetition
//!   exponents for case-2 words, and the integer-matrix cross-checks.
//!
//! All values are immutable after construction; every operation is a pure
//! function, so values can be freely shared between threads.

pub mod consts;
pub mod contfrac;
pub mod exact;
pub mod repetition;
pub mod spectrum;
pub mod verify;
pub mod words;

pub use exact::{Decimal, Integer, QuadExt, Rational};

/// Errors produced by the exact-arithmetic and word layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two irrational operands live in distinct quadratic fields.
    #[error("field mismatch: sqrt({0}) and sqrt({1}) do not span a common quadratic field")]
    FieldMismatch(Integer, Integer),

    #[error("division by zero")]
    DivisionByZero,

    /// A cross-field comparison did not separate within the precision cap.
    #[error("comparison undecided: enclosures still overlap at {0} digits")]
    Undecided(u32),

    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The word is too short for the requested decomposition to be decided.
    #[error("insufficient prefix: need at least {needed} letters, have {have}")]
    InsufficientPrefix { needed: usize, have: usize },

    /// No decomposition matched; the word is not Sturmian of this slope, or
    /// the prefix is corrupt.
    #[error("no decomposition matches the word at level {k}")]
    NoCaseMatch { k: usize },

    /// More than one decomposition matched, which contradicts uniqueness.
    #[error("internal consistency failure: {count} decompositions match at level {k}")]
    AmbiguousCase { k: usize, count: usize },

    /// A sign certificate needed to pick a worst-case endpoint failed.
    #[error("monotonicity certificate failed: {0}")]
    MonotonicityCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
