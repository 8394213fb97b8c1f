//! Exact modular integer arithmetic used throughout the crate.
//!
//! Everything here is plain 64-bit integer arithmetic; dimensions stay below
//! 2^16 so no intermediate product can overflow.

use crate::{Error, Result};

/// Greatest common divisor, with `gcd(0, 0) == 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// gcd of a whole list; the gcd of an all-zero list is 0 by convention.
pub fn gcd_many(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("gcd_many"));
    }
    Ok(values.iter().copied().fold(0, gcd))
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with
/// `a*x + b*y == g == gcd(|a|, |b|)` and `g >= 0`.
///
/// The coefficient choice is the one produced by the classic iteration; no
/// further normalization is applied (none is needed downstream: the Clifford
/// matrices built from these coefficients have determinant 1 mod d for any
/// valid Bézout pair).
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Whether `a1*x + a2*y ≡ c (mod m)` has a solution, i.e. whether
/// `gcd(a1, a2, m)` divides `c`.
pub fn two_var_congruence_solvable(a1: i64, a2: i64, c: i64, m: u64) -> bool {
    assert!(m >= 2, "modulus must be at least 2");
    let g = gcd(gcd(a1.unsigned_abs(), a2.unsigned_abs()), m);
    c.rem_euclid(g as i64) == 0
}

/// Canonical representative of `x` modulo `d`, in `0..d`.
pub fn reduce_mod(x: i64, d: u32) -> u32 {
    x.rem_euclid(i64::from(d)) as u32
}
