//! Symplectic (classical) representation of Clifford and local Clifford
//! operators, and the enumeration of all local Clifford operators on a pair
//! `(X^a, Z^b)`.
//!
//! A (local) Clifford operator acts on exponent pairs by left multiplication
//! with a 2×2 matrix over `Z_d`: the first column is the image of `X` (or of
//! `X^a`, divided by `a`), the second the image of `Z` (or `Z^b`). Honest
//! Clifford operators have determinant 1; local Clifford operators on a pair
//! `(X^a, Z^b)` are exactly the quadruples passing [`check_theorem1`], which
//! include operators that are *not* global Cliffords (see
//! [`crate::oracle::verify_appendix_a`]).

use crate::arith::{ext_gcd, gcd, reduce_mod};
use crate::gpm::{Gpm, GpmSet};
use crate::{Error, Result};

/// A 2×2 matrix `[[u1, u2], [v1, v2]]` over `Z_d` acting on exponent pairs
/// (as columns) by left multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Symplectic2 {
    pub u1: u32,
    pub v1: u32,
    pub u2: u32,
    pub v2: u32,
    pub d: u32,
}

impl Symplectic2 {
    /// Build from possibly out-of-range entries, reducing mod `d`.
    pub fn new(u1: i64, v1: i64, u2: i64, v2: i64, d: u32) -> Self {
        Symplectic2 {
            u1: reduce_mod(u1, d),
            v1: reduce_mod(v1, d),
            u2: reduce_mod(u2, d),
            v2: reduce_mod(v2, d),
            d,
        }
    }

    pub fn identity(d: u32) -> Self {
        Symplectic2::new(1, 0, 0, 1, d)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.d)
    }

    /// Determinant `u1 v2 - u2 v1` mod `d`.
    pub fn det(&self) -> u32 {
        let det = i64::from(self.u1) * i64::from(self.v2) - i64::from(self.u2) * i64::from(self.v1);
        reduce_mod(det, self.d)
    }

    /// Matrix product `self · rhs` mod `d` (apply `rhs` first).
    pub fn compose(&self, rhs: &Symplectic2) -> Symplectic2 {
        assert_eq!(self.d, rhs.d, "composing operators of different dimension");
        let (a, b, c, e) = (
            i64::from(self.u1),
            i64::from(self.u2),
            i64::from(self.v1),
            i64::from(self.v2),
        );
        let (f, g, h, k) = (
            i64::from(rhs.u1),
            i64::from(rhs.u2),
            i64::from(rhs.v1),
            i64::from(rhs.v2),
        );
        Symplectic2::new(a * f + b * h, c * f + e * h, a * g + b * k, c * g + e * k, self.d)
    }

    /// Image of an exponent pair: `(u1 s + u2 t, v1 s + v2 t)` mod `d`.
    pub fn apply(&self, g: Gpm) -> Gpm {
        let s = i64::from(self.u1) * i64::from(g.s) + i64::from(self.u2) * i64::from(g.t);
        let t = i64::from(self.v1) * i64::from(g.s) + i64::from(self.v2) * i64::from(g.t);
        Gpm::reduced(s, t, self.d)
    }
}

/// Member-wise image of a set, re-canonicalized. Two members mapping to one
/// pair means the operator is invalid for this set.
pub fn apply_symplectic_set(op: &Symplectic2, set: &GpmSet) -> Result<GpmSet> {
    assert_eq!(op.d, set.d(), "operator and set dimension differ");
    let images: Vec<Gpm> = set.members().iter().map(|&g| op.apply(g)).collect();
    match GpmSet::new(set.d(), images) {
        Ok(s) => Ok(s),
        Err(Error::DuplicateMember(_)) => Err(Error::DuplicateCollision),
        Err(e) => Err(e),
    }
}

/// The Clifford operator (determinant 1) sending `X^s Z^t` to
/// `Z^{gcd(s,t,d)}`, built as the composition of the two constructive
/// matrices from the essential-power invariance argument.
pub fn clifford_to_z(g: Gpm, d: u32) -> Result<Symplectic2> {
    if g.is_identity() {
        return Err(Error::IdentityInput);
    }
    let (s, t) = (i64::from(g.s), i64::from(g.t));
    // First stage: X^s Z^t -> Z^b with b = gcd(s, t) over the representatives.
    let (b, p1, q1) = ext_gcd(s, t);
    let c1 = Symplectic2::new(t / b, p1, -s / b, q1, d);
    // Second stage: Z^b -> Z^a with a = gcd(d, b).
    let (a, p2, q2) = ext_gcd(i64::from(d), b);
    let c2 = Symplectic2::new(b / a, p2, -i64::from(d) / a, q2, d);
    let composed = c2.compose(&c1);
    debug_assert_eq!(composed.det(), 1 % d);
    debug_assert_eq!(
        composed.apply(g),
        Gpm::new(0, (a as u32) % d),
        "reduction operator must send its element to (0, gcd(s,t,d))"
    );
    Ok(composed)
}

/// The `(a, b)` pair driving local-Clifford enumeration: operators on
/// `(X^a, Z^b)` with `a | d` and `b | d`. `a = d` encodes a trivial X part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LocalCliffordContext {
    pub a: u32,
    pub b: u32,
    pub d: u32,
}

impl LocalCliffordContext {
    pub fn new(a: u32, b: u32, d: u32) -> Result<Self> {
        if a == 0 || d % a != 0 {
            return Err(Error::NotADivisor {
                what: "a",
                modulus: d,
                got: a,
            });
        }
        if b == 0 || d % b != 0 {
            return Err(Error::NotADivisor {
                what: "b",
                modulus: d,
                got: b,
            });
        }
        Ok(LocalCliffordContext { a, b, d })
    }
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// The three necessary-and-sufficient conditions for the quadruple
/// `(u1, v1, u2, v2)` to describe a local Clifford operator sending `X^a` to
/// `X^{u1 a} Z^{v1 a}` and `Z^b` to `X^{u2 b} Z^{v2 b}`:
///
/// 1. `gcd(u1, v1, d/a) = 1 = gcd(u2, v2, d/b)`;
/// 2. `(u1 v2 - u2 v1) a b ≡ a b (mod d)`;
/// 3. `gcd(u1 v2 - u2 v1, d/a, d/b) = 1`;
///
/// with `0 ≤ u1, v1 < d/a` and `0 ≤ u2, v2 < d/b`. Entries outside those
/// ranges fail the check.
pub fn check_theorem1(ctx: &LocalCliffordContext, u1: u32, v1: u32, u2: u32, v2: u32) -> bool {
    let d = u64::from(ctx.d);
    let ra = d / u64::from(ctx.a);
    let rb = d / u64::from(ctx.b);
    if u64::from(u1) >= ra || u64::from(v1) >= ra || u64::from(u2) >= rb || u64::from(v2) >= rb {
        return false;
    }
    if gcd3(u64::from(u1), u64::from(v1), ra) != 1 || gcd3(u64::from(u2), u64::from(v2), rb) != 1 {
        return false;
    }
    let det = reduce_mod(
        i64::from(u1) * i64::from(v2) - i64::from(u2) * i64::from(v1),
        ctx.d,
    );
    let ab = (u64::from(ctx.a) * u64::from(ctx.b)) % d;
    if (u64::from(det) * ab) % d != ab {
        return false;
    }
    gcd3(u64::from(det), ra, rb) == 1
}

/// Every quadruple satisfying [`check_theorem1`], in row-major order over
/// `(u1, v1, u2, v2)`, packaged as matrices mod `d`.
///
/// For `a = d` the ranges force `u1 = v1 = 0` and only the condition
/// `gcd(u2, v2, d/b) = 1` survives, which is the trivial-X-part rule.
pub fn enumerate_local_cliffords(ctx: &LocalCliffordContext) -> Vec<Symplectic2> {
    let ra = ctx.d / ctx.a;
    let rb = ctx.d / ctx.b;
    let mut out = Vec::new();
    for u1 in 0..ra.max(1) {
        for v1 in 0..ra.max(1) {
            for u2 in 0..rb.max(1) {
                for v2 in 0..rb.max(1) {
                    if check_theorem1(ctx, u1, v1, u2, v2) {
                        out.push(Symplectic2::new(
                            i64::from(u1),
                            i64::from(v1),
                            i64::from(u2),
                            i64::from(v2),
                            ctx.d,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// The permutation `i + j a ↦ i + u j a (mod d)` for `0 ≤ i < a`,
/// `0 ≤ j < d/a`: the index map of the unitary witness conjugating `X^a` to
/// `X^{ua}` while fixing `Z^b` (for `u a b ≡ a b` mod `d`). Returned as a
/// vector `p` with `p[source] = target`.
pub fn lemma3_witness(u: u32, a: u32, d: u32) -> Result<Vec<usize>> {
    if a == 0 || d % a != 0 {
        return Err(Error::NotADivisor {
            what: "a",
            modulus: d,
            got: a,
        });
    }
    let cols = d / a;
    if gcd(u64::from(u), u64::from(cols)) != 1 {
        return Err(Error::NotCoprime { u, modulus: cols });
    }
    let mut perm = vec![0usize; d as usize];
    for j in 0..cols {
        for i in 0..a {
            let src = (i + j * a) as usize;
            let dst = (i + ((u64::from(u) * u64::from(j)) % u64::from(cols)) as u32 * a) as usize;
            perm[src] = dst;
        }
    }
    debug_assert!({
        let mut seen = vec![false; d as usize];
        perm.iter().for_each(|&p| seen[p] = true);
        seen.iter().all(|&b| b)
    });
    Ok(perm)
}
