//! Independent numeric verification layer: dense complex matrices for the
//! shift/clock operators, the permutation witness behind the X-power
//! rescaling, tensor-factor identities, and the congruence argument showing
//! that witness need not be a Clifford operator.
//!
//! Everything here is plain double-precision dense algebra with a hard size
//! guard; deviations are structurally zero or machine-epsilon sized, so the
//! tolerances are `1e-12` for exact root-of-unity identities and `1e-9` for
//! conjugation and unitarity checks. Roots of unity are always computed from
//! an exponent reduced mod `d` first, so large powers accumulate no phase
//! error.

use num_complex::Complex64;

use crate::arith::{gcd, two_var_congruence_solvable};
use crate::classify::decide_uc;
use crate::clifford::lemma3_witness;
use crate::gpm::{commutation_exponent, essential_order, Gpm, GpmSet};
use crate::{Error, Result};

/// Largest dimension the dense layer will materialize.
pub const MAX_DENSE_DIM: u32 = 256;

/// Tolerance for exact root-of-unity identities.
pub const TOL_EXACT: f64 = 1e-12;
/// Tolerance for unitarity and conjugation checks.
pub const TOL_UNITARY: f64 = 1e-9;

/// `ω^k` with `ω = e^{2πi/d}`, reducing `k` mod `d` first.
pub fn omega_pow(d: u32, k: i64) -> Complex64 {
    let k = k.rem_euclid(i64::from(d)) as f64;
    let angle = 2.0 * std::f64::consts::PI * k / f64::from(d);
    Complex64::new(angle.cos(), angle.sin())
}

/// A dense `d × d` complex matrix, row-major.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    d: usize,
    entries: Vec<Complex64>,
}

impl DenseOperator {
    pub fn zeros(d: usize) -> Self {
        DenseOperator {
            d,
            entries: vec![Complex64::ZERO; d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d);
        for i in 0..d {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn mul(&self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.d, rhs.d);
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..d {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> DenseOperator {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> DenseOperator {
        DenseOperator {
            d: self.d,
            entries: self.entries.iter().map(|e| e * z).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> DenseOperator {
        let mut acc = Self::identity(self.d);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Entrywise max-norm of the difference.
    pub fn max_norm_diff(&self, rhs: &DenseOperator) -> f64 {
        assert_eq!(self.d, rhs.d);
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.mul(&self.dagger())
            .max_norm_diff(&Self::identity(self.d))
            < tol
    }

    /// Kronecker product, with the right factor varying fastest: index
    /// `i + m·j` of the product corresponds to `|j⟩ ⊗ |i⟩`.
    pub fn kron(&self, rhs: &DenseOperator) -> DenseOperator {
        let (n, m) = (self.d, rhs.d);
        let mut out = Self::zeros(n * m);
        for j in 0..n {
            for jp in 0..n {
                for i in 0..m {
                    for ip in 0..m {
                        out[(j * m + i, jp * m + ip)] = self[(j, jp)] * rhs[(i, ip)];
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for DenseOperator {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.d + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseOperator {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.d + j]
    }
}

fn guard(d: u32) -> Result<usize> {
    if d < 2 || d > MAX_DENSE_DIM {
        return Err(Error::OversizeDimension(d, MAX_DENSE_DIM));
    }
    Ok(d as usize)
}

/// The matrix of `X^s Z^t`: entry `ω^{t·j}` at row `(j + s) mod d`,
/// column `j`.
pub fn build_gpm_matrix(g: Gpm, d: u32) -> Result<DenseOperator> {
    let dd = guard(d)?;
    let mut m = DenseOperator::zeros(dd);
    for j in 0..dd {
        let row = (j + g.s as usize) % dd;
        m[(row, j)] = omega_pow(d, i64::from(g.t) * (j as i64));
    }
    Ok(m)
}

/// Max-norm deviation of `Z^b X^a = ω^{ab} X^a Z^b`.
pub fn verify_commutation(a: u32, b: u32, d: u32) -> Result<f64> {
    let xa = build_gpm_matrix(Gpm::reduced(i64::from(a), 0, d), d)?;
    let zb = build_gpm_matrix(Gpm::reduced(0, i64::from(b), d), d)?;
    let lhs = zb.mul(&xa);
    let rhs = xa.mul(&zb).scale(omega_pow(d, i64::from(a) * i64::from(b)));
    Ok(lhs.max_norm_diff(&rhs))
}

/// Builds the permutation witness `W` for `(u, a, b, d)` and checks both
/// conjugation identities `W X^a W† = X^{ua}` and `W Z^b W† = Z^b` to
/// [`TOL_UNITARY`].
pub fn verify_lemma3(u: u32, a: u32, b: u32, d: u32) -> Result<bool> {
    let dd = guard(d)?;
    if a == 0 || d % a != 0 {
        return Err(Error::NotADivisor {
            what: "a",
            modulus: d,
            got: a,
        });
    }
    if gcd(u64::from(u), u64::from(d / a)) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "gcd({u}, {}/{a}) must be 1",
            d
        )));
    }
    let uab = (u64::from(u) * u64::from(a) % u64::from(d)) * u64::from(b) % u64::from(d);
    let ab = u64::from(a) * u64::from(b) % u64::from(d);
    if uab != ab {
        return Err(Error::PreconditionViolated(format!(
            "u·a·b ≡ a·b (mod {d}) fails for u={u} a={a} b={b}"
        )));
    }

    let perm = lemma3_witness(u, a, d)?;
    let mut w = DenseOperator::zeros(dd);
    for (src, &dst) in perm.iter().enumerate() {
        w[(dst, src)] = Complex64::ONE;
    }
    debug_assert!(w.is_unitary(TOL_UNITARY));

    let xa = build_gpm_matrix(Gpm::reduced(i64::from(a), 0, d), d)?;
    let xua = build_gpm_matrix(Gpm::reduced(i64::from(u) * i64::from(a), 0, d), d)?;
    let zb = build_gpm_matrix(Gpm::reduced(0, i64::from(b), d), d)?;
    let wd = w.dagger();

    let dev_x = w.mul(&xa).mul(&wd).max_norm_diff(&xua);
    let dev_z = w.mul(&zb).mul(&wd).max_norm_diff(&zb);
    Ok(dev_x < TOL_UNITARY && dev_z < TOL_UNITARY)
}

/// Checks the tensor-factor identities on `C^{nm} = C^n ⊗ C^m` under the
/// basis ordering `|i + mj⟩ = |j⟩ ⊗ |i⟩`:
///
/// - `X_{nm}^m = X_n ⊗ I_m`,
/// - `Z_{nm} = Z_n ⊗ Σ_i ω_{nm}^i |i⟩⟨i|`,
/// - `Z_{nm}^n = I_n ⊗ Z_m`,
///
/// each to [`TOL_EXACT`].
pub fn verify_tensor_identities(n_factor: u32, m_factor: u32) -> Result<bool> {
    let d = n_factor * m_factor;
    guard(d.max(2))?;
    let (n, m) = (n_factor as usize, m_factor as usize);

    let x_d = build_gpm_matrix(Gpm::new(1, 0), d)?;
    let z_d = build_gpm_matrix(Gpm::new(0, 1), d)?;
    let x_n = shift_matrix(n);
    let z_n = clock_matrix(n);
    let z_m = clock_matrix(m);

    let lhs1 = x_d.pow(m_factor);
    let rhs1 = x_n.kron(&DenseOperator::identity(m));
    if lhs1.max_norm_diff(&rhs1) >= TOL_EXACT {
        return Ok(false);
    }

    let mut frac = DenseOperator::zeros(m);
    for i in 0..m {
        frac[(i, i)] = omega_pow(d, i as i64);
    }
    let rhs2 = z_n.kron(&frac);
    if z_d.max_norm_diff(&rhs2) >= TOL_EXACT {
        return Ok(false);
    }

    let lhs3 = z_d.pow(n_factor);
    let rhs3 = DenseOperator::identity(n).kron(&z_m);
    Ok(lhs3.max_norm_diff(&rhs3) < TOL_EXACT)
}

fn shift_matrix(d: usize) -> DenseOperator {
    let mut m = DenseOperator::zeros(d);
    for j in 0..d {
        m[((j + 1) % d, j)] = Complex64::ONE;
    }
    m
}

fn clock_matrix(d: usize) -> DenseOperator {
    let mut m = DenseOperator::zeros(d);
    for j in 0..d {
        m[(j, j)] = omega_pow(d as u32, j as i64);
    }
    m
}

/// Confirms, both by the gcd criterion and by exhaustive search over
/// `Z_72^2`, that `12 s + 30 t ≡ 68 (mod 72)` has no solution — hence the
/// `(u, a, b, d) = (5, 6, 12, 72)` permutation witness is not a Clifford
/// operator.
pub fn verify_appendix_a() -> bool {
    let by_gcd = !two_var_congruence_solvable(12, 30, 68, 72);
    let by_scan = !(0..72i64)
        .flat_map(|s| (0..72i64).map(move |t| (s, t)))
        .any(|(s, t)| (12 * s + 30 * t).rem_euclid(72) == 68);
    by_gcd && by_scan
}

/// Exercises the pair rescaling `{X^a, Z^b} ~ {X^{ua} Z^{va}, Z^b}` through
/// the classifier: both pairs, with the identity adjoined, must be
/// UC-equivalent 3-sets. Preconditions: `a | b | d`, `gcd(u, v, d/a) = 1`,
/// `u·a·b ≡ a·b (mod d)`, `gcd(u, d/a, d/b) = 1`.
pub fn verify_lemma_b2_instance(u: u32, v: u32, a: u32, b: u32, d: u32) -> Result<bool> {
    let pre = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(msg.to_string()))
        }
    };
    pre(a != 0 && d % a == 0, "a must divide d")?;
    pre(b != 0 && d % b == 0, "b must divide d")?;
    pre(b % a == 0, "a must divide b")?;
    let (ra, rb) = (u64::from(d / a), u64::from(d / b));
    pre(
        gcd(gcd(u64::from(u), u64::from(v)), ra) == 1,
        "gcd(u, v, d/a) must be 1",
    )?;
    let uab = u64::from(u) * u64::from(a) % u64::from(d) * u64::from(b) % u64::from(d);
    pre(
        uab == u64::from(a) * u64::from(b) % u64::from(d),
        "u·a·b ≡ a·b (mod d) must hold",
    )?;
    pre(
        gcd(gcd(u64::from(u), ra), rb) == 1,
        "gcd(u, d/a, d/b) must be 1",
    )?;

    let lhs = GpmSet::new(
        d,
        [Gpm::IDENTITY, Gpm::new(a % d, 0), Gpm::new(0, b % d)],
    )?;
    let rhs = GpmSet::new(
        d,
        [
            Gpm::IDENTITY,
            Gpm::reduced(i64::from(u) * i64::from(a), i64::from(v) * i64::from(a), d),
            Gpm::new(0, b % d),
        ],
    )?;
    decide_uc(&lhs, &rhs)
}

/// One named check of the verification suite.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn report(name: &str, passed: bool, detail: String) -> CheckReport {
    CheckReport {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Runs the full numeric check suite; every entry must pass.
pub fn verification_suite() -> Vec<CheckReport> {
    let mut out = Vec::new();

    let dev = build_gpm_matrix(Gpm::new(1, 1), 4)
        .unwrap()
        .pow(4)
        .max_norm_diff(&DenseOperator::identity(4).scale(-Complex64::ONE));
    out.push(report(
        "clock-shift fourth power is -I at d=4",
        dev < TOL_EXACT,
        format!("deviation {dev:.3e}"),
    ));

    let dev = build_gpm_matrix(Gpm::new(3, 3), 6)
        .unwrap()
        .pow(2)
        .max_norm_diff(&DenseOperator::identity(6).scale(-Complex64::ONE));
    out.push(report(
        "(X^3 Z^3)^2 is -I at d=6",
        dev < TOL_EXACT,
        format!("deviation {dev:.3e}"),
    ));

    for (a, b, d) in [(1u32, 1u32, 4u32), (6, 12, 72), (3, 3, 6)] {
        let dev = verify_commutation(a, b, d).unwrap();
        out.push(report(
            &format!("commutation Z^{b} X^{a} = ω^{{{a}·{b}}} X^{a} Z^{b} at d={d}"),
            dev < TOL_EXACT,
            format!("deviation {dev:.3e}"),
        ));
    }

    let ok = verify_lemma3(5, 6, 12, 72).unwrap();
    out.push(report(
        "permutation witness conjugates (X^6, Z^12) to (X^30, Z^12) at d=72",
        ok,
        "both conjugation identities within 1e-9".into(),
    ));

    out.push(report(
        "12s + 30t ≡ 68 (mod 72) is unsolvable (witness is not Clifford)",
        verify_appendix_a(),
        "gcd criterion and exhaustive scan agree".into(),
    ));

    for (n, m) in [(2u32, 3u32), (3, 4)] {
        let ok = verify_tensor_identities(n, m).unwrap();
        out.push(report(
            &format!("tensor-factor identities on C^{n} ⊗ C^{m}"),
            ok,
            "all three identities within 1e-12".into(),
        ));
    }

    let ok = verify_lemma_b2_instance(5, 0, 6, 12, 72).unwrap();
    out.push(report(
        "pair rescaling {X^6, Z^12} ~ {X^30, Z^12} via the classifier",
        ok,
        "UC-equivalent as standard 3-sets".into(),
    ));

    let mut worst: f64 = 0.0;
    for d in 2..=8u32 {
        for s in 0..d {
            for t in 0..d {
                let m = build_gpm_matrix(Gpm::new(s, t), d).unwrap();
                worst = worst.max(
                    m.mul(&m.dagger())
                        .max_norm_diff(&DenseOperator::identity(d as usize)),
                );
            }
        }
    }
    out.push(report(
        "all GPM matrices up to d=8 are unitary",
        worst < TOL_UNITARY,
        format!("worst deviation {worst:.3e}"),
    ));

    let mut ok = true;
    for d in 2..=8u32 {
        for s1 in 0..d {
            for t1 in 0..d {
                for s2 in 0..d {
                    for t2 in 0..d {
                        let g1 = Gpm::new(s1, t1);
                        let g2 = Gpm::new(s2, t2);
                        let c = commutation_exponent(g1, g2, d);
                        let m1 = build_gpm_matrix(g1, d).unwrap();
                        let m2 = build_gpm_matrix(g2, d).unwrap();
                        let lhs = m2.mul(&m1);
                        let rhs = m1.mul(&m2).scale(omega_pow(d, i64::from(c)));
                        if lhs.max_norm_diff(&rhs) >= TOL_UNITARY {
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    out.push(report(
        "commutation exponents match dense phases for all pairs up to d=8",
        ok,
        "g2·g1 = ω^c g1·g2 with c = s1·t2 - s2·t1".into(),
    ));

    let mut ok = true;
    for d in 2..=8u32 {
        for s in 0..d {
            for t in 0..d {
                let g = Gpm::new(s, t);
                if smallest_scalar_power(g, d) != essential_order(g, d) {
                    ok = false;
                }
            }
        }
    }
    out.push(report(
        "essential order matches the smallest scalar power up to d=8",
        ok,
        "min k with U^k ≈ ζI equals d / gcd(s, t, d)".into(),
    ));

    out
}

/// Smallest positive `k` such that `U^k` is a unit scalar multiple of the
/// identity, found by direct matrix powers.
fn smallest_scalar_power(g: Gpm, d: u32) -> u32 {
    let m = build_gpm_matrix(g, d).expect("guarded dimension");
    let mut acc = DenseOperator::identity(d as usize);
    for k in 1..=d {
        acc = acc.mul(&m);
        let zeta = acc[(0, 0)];
        if (zeta.norm() - 1.0).abs() < TOL_UNITARY {
            let scaled = DenseOperator::identity(d as usize).scale(zeta);
            if acc.max_norm_diff(&scaled) < TOL_UNITARY {
                return k;
            }
        }
    }
    unreachable!("every GPM has order dividing d up to phase")
}
