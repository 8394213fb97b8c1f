//! Classification of generalized Pauli matrix (GPM) sets on `C^d` up to
//! unitary and unitary-conjugate equivalence.
//!
//! A GPM is a product `X^s Z^t` of the cyclic shift `X` and the clock matrix
//! `Z` on a `d`-dimensional space, kept only up to a global phase, so it is
//! represented here as the exponent pair `(s, t)` over `Z_d`. Sets of GPMs
//! stand in one-to-one correspondence with sets of generalized Bell states in
//! `C^d ⊗ C^d`, and two Bell-state sets are related by local unitaries exactly
//! when their GPM sets are unitary equivalent (U-equivalent). Deciding that
//! reduces to unitary-conjugate equivalence (UC-equivalence) of standard sets
//! (sets containing the identity), which this crate computes exactly:
//!
//! - [`gpm`] — exponent-pair data model, essential order/power invariants,
//!   right translation to standard form;
//! - [`clifford`] — the symplectic 2×2 representation of (local) Clifford
//!   operators and the enumeration of all local Clifford operators on a pair
//!   `(X^a, Z^b)`;
//! - [`reduce`] — the alternating Clifford / division-algorithm chain that
//!   brings a standard set into the form `{I, Z^b, X^{s_i}Z^{t_i}}` with
//!   `b | t_i`, exposing the `(a, b)` context that drives enumeration;
//! - [`classify`] — UC orbits, U classes, pairwise decisions, and the full
//!   partition of all standard `n`-sets of a dimension;
//! - [`oracle`] — dense complex-matrix checks backing the exponent arithmetic;
//! - [`catalog`] — named reference sets and the golden classification tables.
//!
//! ```
//! use gpmset::gpm::{Gpm, GpmSet};
//! use gpmset::classify::uc_orbit;
//!
//! // {I, Z, Z^2, Z^3} on C^6 has 24 sets in its unitary-conjugate class.
//! let set = GpmSet::new(6, (0..4).map(|t| Gpm::new(0, t))).unwrap();
//! assert_eq!(uc_orbit(&set).unwrap().len(), 24);
//! ```

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod clifford;
pub mod gpm;
pub mod oracle;
pub mod reduce;

use thiserror::Error;

/// Errors shared by all modules of this crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty input to {0}")]
    EmptyInput(&'static str),
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: u32, got: u32 },
    #[error("duplicate member {0} in GPM set")]
    DuplicateMember(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("cardinality mismatch: {0} vs {1}")]
    CardinalityMismatch(usize, usize),
    #[error("set is not standard (does not contain the identity)")]
    NotStandard,
    #[error("identity element has no Z-reduction operator")]
    IdentityInput,
    #[error("operator maps two set members to the same image")]
    DuplicateCollision,
    #[error("{what} must divide {modulus}, got {got}")]
    NotADivisor {
        what: &'static str,
        modulus: u32,
        got: u32,
    },
    #[error("witness parameter u = {u} is not coprime to {modulus}")]
    NotCoprime { u: u32, modulus: u32 },
    #[error("dimension {0} exceeds the dense-operator guard {1}")]
    OversizeDimension(u32, u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("enumeration of {needed} standard sets exceeds the cap {cap}")]
    ResourceCap { needed: u128, cap: u64 },
    #[error("unknown table id {0} (valid: 1..=10)")]
    UnknownTable(u8),
    #[error("malformed golden row {0:?}")]
    MalformedGoldenRow(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
