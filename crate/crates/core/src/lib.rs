//! Exact-arithmetic classification of ideals in finite and model commutative rings.
//!
//! The crate has three layers:
//!
//! * **Finite rings** ([`ring`], [`ideal`], [`classify`]): commutative unital
//!   rings of order at most 2^16 with exhaustive, witness-producing deciders
//!   for semiprimary-type ideal properties and the invariant `delta`.
//! * **Symbolic models** ([`monomial`], [`pid`], [`valuation`]): monomial
//!   ideals in capped polynomial rings, principal ideal domains (integers and
//!   univariate polynomials over finite fields), and rank-(1|2) valuation
//!   ideal catalogs, each with exact certified arithmetic.
//! * **Power-series orders** ([`gf`], [`laurent`], [`series`]): subrings of
//!   `F_q[[X]]` described by coefficient-slot data, with truncated Laurent
//!   arithmetic and bounded-exhaustive property checks over the quotient
//!   field.
//!
//! Everything is deterministic: the same inputs produce the same outputs,
//! including witnesses, across runs and thread counts.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod check;
pub mod classify;
pub mod fp;
pub mod gf;
pub mod ideal;
pub mod laurent;
pub mod monomial;
pub mod pid;
pub mod ring;
pub mod series;
pub mod valuation;

use alloc::string::String;
use core::fmt;

/// Crate-wide error type.
///
/// Every fallible operation reports one of these categories; the payload is a
/// human-readable message with the concrete numbers involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A requested object exceeds a hard size cap (ring order, ideal count,
    /// table size, ...).
    TooLarge(String),
    /// A search or enumeration exceeded its work budget; the result is
    /// unknown, not false.
    Budget(String),
    /// Malformed textual or structural input.
    Parse(String),
    /// Structurally valid input that violates a mathematical precondition
    /// (not an ideal, not proper, mixed parent rings, ...).
    Invalid(String),
    /// A truncated-series computation cannot answer at the available
    /// precision.
    Precision(String),
    /// The exact answer exists but is not representable in the requested
    /// output form.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooLarge(m) => write!(f, "size cap exceeded: {m}"),
            Error::Budget(m) => write!(f, "work budget exhausted: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
            Error::Precision(m) => write!(f, "insufficient precision: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported result form: {m}"),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
