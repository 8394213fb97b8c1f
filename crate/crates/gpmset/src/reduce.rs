//! Reduction of a standard GPM set to the form `{I, Z^b, X^{s_i}Z^{t_i}}`
//! with `b | d` and `b | t_i`, via the alternating Clifford /
//! division-algorithm chain.
//!
//! Every unitary that conjugates the input set to another GPM set also does
//! so for each set along the chain: the Clifford steps transport them by
//! conjugation, and the division rewrites (`t_i ↦ t_i mod b`) keep the local
//! Clifford operators literally unchanged. The final form therefore exposes
//! the `(a, b)` context whose operator enumeration drives the orbit of the
//! *original* set. The division rewrite itself is not a unitary, so orbits
//! must be computed on the transported original coordinates
//! ([`ReductionResult::transport`]), never on the rewritten members.

use crate::arith::gcd;
use crate::clifford::{apply_symplectic_set, clifford_to_z, LocalCliffordContext, Symplectic2};
use crate::gpm::{essential_power, Gpm, GpmSet};
use crate::{Error, Result};

/// Outcome of [`reduce`].
#[derive(Clone, Debug)]
pub struct ReductionResult {
    /// The reduced set: standard, contains `(0, b)`, all Z-exponents
    /// divisible by `b`, all X-exponents divisible by `a`.
    pub reduced: GpmSet,
    /// The `(a, b)` context for operator enumeration: `a` is the gcd of all
    /// member X-exponents together with `d`, `b` the minimum nonzero
    /// essential power of the reduced set.
    pub context: LocalCliffordContext,
    /// Clifford steps applied, in application order (audit only).
    pub chain: Vec<Symplectic2>,
    /// Product of the chain: the single Clifford transporting the original
    /// set into the coordinates the enumerated operators act on.
    pub transport: Symplectic2,
    /// Number of division-algorithm rewrites performed.
    pub division_steps: usize,
}

/// Whether the set contains `(0, b)` for `b` its minimum nonzero essential
/// power and every member's Z-exponent is divisible by `b`. Sets without a
/// nonzero member (only `{I}`) pass vacuously.
pub fn is_lemma41_form(set: &GpmSet) -> bool {
    if !set.is_standard() {
        return false;
    }
    let d = set.d();
    let Some(b) = set
        .members()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|&g| essential_power(g, d))
        .min()
    else {
        return true;
    };
    set.contains(Gpm::new(0, b)) && set.members().iter().all(|g| g.t % b == 0)
}

/// Minimum nonzero essential power and the lexicographically smallest member
/// attaining it.
fn pivot(set: &GpmSet) -> Option<Gpm> {
    let d = set.d();
    set.members()
        .iter()
        .copied()
        .filter(|g| !g.is_identity())
        .min_by_key(|&g| (essential_power(g, d), g))
}

/// Bring a standard set into reduced form. The minimum nonzero essential
/// power strictly decreases at every division rewrite, so the loop performs
/// at most one Clifford step per divisor of `d`.
pub fn reduce(set: &GpmSet) -> Result<ReductionResult> {
    if !set.is_standard() {
        return Err(Error::NotStandard);
    }
    let d = set.d();
    let mut cur = set.clone();
    let mut chain = Vec::new();
    let mut transport = Symplectic2::identity(d);
    let mut division_steps = 0usize;

    loop {
        let Some(p) = pivot(&cur) else {
            // Only the identity left: the degenerate (a, b) = (d, d) context
            // whose single trivial operator fixes {I}.
            let context = LocalCliffordContext::new(d, d, d)?;
            return Ok(ReductionResult {
                reduced: cur,
                context,
                chain,
                transport,
                division_steps,
            });
        };
        let b = essential_power(p, d);
        let step = clifford_to_z(p, d)?;
        cur = apply_symplectic_set(&step, &cur)
            .expect("a determinant-1 operator is a bijection on exponent pairs");
        transport = step.compose(&transport);
        chain.push(step);
        debug_assert!(cur.contains(Gpm::new(0, b)));

        if cur.members().iter().all(|g| g.t % b == 0) {
            let mut a = u64::from(d);
            for g in cur.members() {
                a = gcd(a, u64::from(g.s));
            }
            let context = LocalCliffordContext::new(a as u32, b, d)?;
            debug_assert!(is_lemma41_form(&cur));
            return Ok(ReductionResult {
                reduced: cur,
                context,
                chain,
                transport,
                division_steps,
            });
        }

        // Division rewrite: replace every other member's Z-exponent by its
        // remainder mod b. Collisions collapse; the surviving members impose
        // the same local-Clifford constraints.
        let zb = Gpm::new(0, b);
        let next: Vec<Gpm> = cur
            .members()
            .iter()
            .map(|&g| {
                if g.is_identity() || g == zb {
                    g
                } else {
                    Gpm::new(g.s, g.t % b)
                }
            })
            .collect();
        cur = GpmSet::new_dedup(d, next);
        division_steps += 1;
    }
}
