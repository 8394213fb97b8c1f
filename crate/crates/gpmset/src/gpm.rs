//! Generalized Pauli matrices as exponent pairs and canonical GPM sets.
//!
//! Phases are discarded globally: a GPM is exactly the pair `(s, t)` of
//! exponents of `X^s Z^t` over `Z_d`, products and adjoints are exponent
//! arithmetic mod `d`. The numeric layer in [`crate::oracle`] checks that
//! this quotient is consistent with actual matrix multiplication.

use std::fmt;

use crate::arith::{gcd, reduce_mod};
use crate::{Error, Result};

/// Minimum supported set dimension.
pub const MIN_DIMENSION: u32 = 3;

/// A generalized Pauli matrix `X^s Z^t`, up to a global phase.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gpm {
    /// X exponent.
    pub s: u32,
    /// Z exponent.
    pub t: u32,
}

impl Gpm {
    /// The identity matrix, `(0, 0)`.
    pub const IDENTITY: Gpm = Gpm { s: 0, t: 0 };

    pub fn new(s: u32, t: u32) -> Self {
        Gpm { s, t }
    }

    /// Build from possibly out-of-range exponents, reducing mod `d`.
    pub fn reduced(s: i64, t: i64, d: u32) -> Self {
        Gpm {
            s: reduce_mod(s, d),
            t: reduce_mod(t, d),
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl fmt::Display for Gpm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.t)
    }
}

fn gcd3(s: u32, t: u32, d: u32) -> u32 {
    gcd(gcd(u64::from(s), u64::from(t)), u64::from(d)) as u32
}

/// Smallest positive `k` with `(X^s Z^t)^k` proportional to the identity;
/// equals `d / gcd(s, t, d)`.
pub fn essential_order(g: Gpm, d: u32) -> u32 {
    d / gcd3(g.s, g.t, d)
}

/// `d / essential_order`: `gcd(s, t, d)` for non-identity GPMs, 0 for the
/// identity. Invariant under unitary conjugation.
pub fn essential_power(g: Gpm, d: u32) -> u32 {
    if g.is_identity() {
        0
    } else {
        gcd3(g.s, g.t, d)
    }
}

/// Exponent `c` with `g2·g1 = ω^c g1·g2` as operators: `c = s1 t2 - s2 t1`
/// mod `d`. Calibrated so that `c(X^a, Z^b) = ab`, matching
/// `Z^b X^a = ω^{ab} X^a Z^b`.
pub fn commutation_exponent(g1: Gpm, g2: Gpm, d: u32) -> u32 {
    let c = i64::from(g1.s) * i64::from(g2.t) - i64::from(g2.s) * i64::from(g1.t);
    reduce_mod(c, d)
}

/// Ascending multiset of the essential powers of a set's members.
///
/// Equal power vectors are necessary (not sufficient) for UC-equivalence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PowerVector(Vec<u32>);

impl PowerVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for PowerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A canonical (sorted, duplicate-free) collection of GPMs sharing one
/// dimension. "Standard" when it contains the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GpmSet {
    d: u32,
    members: Vec<Gpm>,
}

impl GpmSet {
    /// Build a set, reducing exponents mod `d` and sorting. Duplicate members
    /// (after reduction) are an error, as is an empty collection or `d < 3`.
    pub fn new(d: u32, members: impl IntoIterator<Item = Gpm>) -> Result<Self> {
        if d < MIN_DIMENSION {
            return Err(Error::DimensionTooSmall {
                min: MIN_DIMENSION,
                got: d,
            });
        }
        let mut members: Vec<Gpm> = members
            .into_iter()
            .map(|g| Gpm::reduced(i64::from(g.s), i64::from(g.t), d))
            .collect();
        if members.is_empty() {
            return Err(Error::EmptyInput("GpmSet::new"));
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0].to_string()));
        }
        Ok(GpmSet { d, members })
    }

    /// Like [`GpmSet::new`] but collapses duplicates instead of rejecting
    /// them. Only the division-algorithm rewrite needs this.
    pub(crate) fn new_dedup(d: u32, mut members: Vec<Gpm>) -> Self {
        members.sort_unstable();
        members.dedup();
        GpmSet { d, members }
    }

    // Internal rebuild for operations that are bijective on exponent pairs.
    fn rebuild(d: u32, mut members: Vec<Gpm>) -> Self {
        members.sort_unstable();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        GpmSet { d, members }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one member
    }

    /// Members in canonical ascending order.
    pub fn members(&self) -> &[Gpm] {
        &self.members
    }

    pub fn contains(&self, g: Gpm) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Whether the set contains the identity matrix.
    pub fn is_standard(&self) -> bool {
        self.contains(Gpm::IDENTITY)
    }

    /// Essential powers of the members, ascending.
    pub fn power_vector(&self) -> PowerVector {
        let mut v: Vec<u32> = self
            .members
            .iter()
            .map(|&g| essential_power(g, self.d))
            .collect();
        v.sort_unstable();
        PowerVector(v)
    }

    /// Right multiplication by `(X^s Z^t)†`: member-wise exponent
    /// subtraction mod `d`. The result is standard whenever `g` is a member.
    pub fn right_translate(&self, g: Gpm) -> GpmSet {
        let members = self
            .members
            .iter()
            .map(|m| {
                Gpm::reduced(
                    i64::from(m.s) - i64::from(g.s),
                    i64::from(m.t) - i64::from(g.t),
                    self.d,
                )
            })
            .collect();
        GpmSet::rebuild(self.d, members)
    }

    /// The standard sets obtained by right-translating by each member, in
    /// member order, deduplicated by first appearance.
    pub fn standardize_all(&self) -> Vec<GpmSet> {
        let mut out: Vec<GpmSet> = Vec::with_capacity(self.len());
        for &g in &self.members {
            let translated = self.right_translate(g);
            if !out.contains(&translated) {
                out.push(translated);
            }
        }
        out
    }
}

impl fmt::Display for GpmSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn set(d: u32, pairs: &[(u32, u32)]) -> GpmSet {
        GpmSet::new(d, pairs.iter().map(|&(s, t)| Gpm::new(s, t))).unwrap()
    }

    #[test]
    fn essential_order_examples() {
        assert_eq!(essential_order(Gpm::new(1, 1), 4), 4);
        assert_eq!(essential_order(Gpm::new(3, 3), 6), 2);
        assert_eq!(essential_order(Gpm::IDENTITY, 5), 1);
    }

    #[test]
    fn essential_power_examples() {
        assert_eq!(essential_power(Gpm::new(1, 0), 6), 1);
        assert_eq!(essential_power(Gpm::new(3, 3), 6), 3);
        assert_eq!(essential_power(Gpm::IDENTITY, 6), 0);
    }

    #[test]
    fn order_power_duality() {
        for d in 3..=40 {
            for s in 0..d {
                for t in 0..d {
                    let g = Gpm::new(s, t);
                    if !g.is_identity() {
                        assert_eq!(essential_order(g, d) * essential_power(g, d), d);
                    }
                }
            }
        }
    }

    #[test]
    fn power_vector_examples() {
        // {X, X^3 Z^3, Z^4, X^2} on C^6.
        let m = set(6, &[(1, 0), (3, 3), (0, 4), (2, 0)]);
        assert_eq!(m.power_vector().entries(), &[1, 2, 2, 3]);
        // {X^12, Z^3, X^3 Z^4, X^5 Z^15} on C^30.
        let m = set(30, &[(12, 0), (0, 3), (3, 4), (5, 15)]);
        assert_eq!(m.power_vector().entries(), &[1, 3, 5, 6]);
        // {I, Z, Z^2, Z^3} on C^6, by direct gcd evaluation.
        let m = set(6, &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        assert_eq!(m.power_vector().entries(), &[0, 1, 2, 3]);
        assert_eq!(m.power_vector().to_string(), "(0,1,2,3)");
    }

    #[test]
    fn right_translate_examples() {
        let c1 = set(6, &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            c1.right_translate(Gpm::new(0, 1)),
            set(6, &[(0, 0), (0, 1), (0, 2), (0, 5)])
        );
        assert_eq!(c1.right_translate(Gpm::IDENTITY), c1);

        let g120 = set(4, &[(0, 0), (1, 0), (0, 1), (2, 0)]);
        assert_eq!(
            g120.right_translate(Gpm::new(1, 0)),
            set(4, &[(0, 0), (1, 0), (3, 0), (3, 1)])
        );
    }

    #[test]
    fn right_translate_round_trip() {
        let m = set(6, &[(0, 0), (1, 5), (4, 2), (3, 3)]);
        for &g in m.members() {
            let back = m
                .right_translate(g)
                .right_translate(Gpm::reduced(-(g.s as i64), -(g.t as i64), 6));
            assert_eq!(back, m);
        }
    }

    #[test]
    fn standardize_all_examples() {
        let k = set(4, &[(0, 0), (0, 2), (2, 0), (2, 2)]);
        assert_eq!(k.standardize_all(), vec![k.clone()]);

        let c1 = set(6, &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        let stds = c1.standardize_all();
        assert_eq!(stds.len(), 4);
        assert_eq!(stds[1], set(6, &[(0, 0), (0, 1), (0, 2), (0, 5)]));
        assert_eq!(stds[2], set(6, &[(0, 0), (0, 1), (0, 4), (0, 5)]));
        assert_eq!(stds[3], set(6, &[(0, 0), (0, 3), (0, 4), (0, 5)]));
        assert!(stds.iter().all(|s| s.is_standard()));

        let singleton = set(6, &[(3, 5)]);
        assert_eq!(singleton.standardize_all(), vec![set(6, &[(0, 0)])]);
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(commutation_exponent(Gpm::new(1, 0), Gpm::new(0, 1), 4), 1);
        let g = Gpm::new(2, 5);
        assert_eq!(commutation_exponent(g, g, 6), 0);
        assert_eq!(
            commutation_exponent(Gpm::new(6, 0), Gpm::new(0, 12), 72),
            0
        );
    }

    #[test]
    fn commutation_antisymmetry() {
        let d = 6;
        for s1 in 0..d {
            for t1 in 0..d {
                for s2 in 0..d {
                    for t2 in 0..d {
                        let a = commutation_exponent(Gpm::new(s1, t1), Gpm::new(s2, t2), d);
                        let b = commutation_exponent(Gpm::new(s2, t2), Gpm::new(s1, t1), d);
                        assert_eq!((a + b) % d, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn set_construction_rejects_bad_input() {
        assert!(matches!(
            GpmSet::new(2, [Gpm::IDENTITY]),
            Err(Error::DimensionTooSmall { .. })
        ));
        assert!(matches!(
            GpmSet::new(4, [Gpm::new(1, 1), Gpm::new(5, 5)]),
            Err(Error::DuplicateMember(_))
        ));
        assert!(matches!(
            GpmSet::new(4, std::iter::empty()),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn display_round_trip_shape() {
        let m = set(6, &[(0, 0), (1, 5), (4, 2)]);
        assert_eq!(m.to_string(), "{(0,0),(1,5),(4,2)}");
    }
}
