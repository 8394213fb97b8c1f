//! UC orbits, U-equivalence classes, pairwise decisions, and full
//! partitioning of all standard `n`-sets of a dimension.
//!
//! The orbit of a standard set is computed by reducing it, enumerating the
//! local Clifford operators of the resulting `(a, b)` context, and applying
//! them to the *transported original* coordinates (the reduction transport
//! applied to the input). The division rewrites inside the reduction are not
//! unitary, so applying operators to the rewritten members would change the
//! equivalence class; the transported original provably stays inside the
//! `(a, b)` lattice and its orbit is exactly the class of the input.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::clifford::{
    apply_symplectic_set, enumerate_local_cliffords, LocalCliffordContext, Symplectic2,
};
use crate::gpm::{Gpm, GpmSet};
use crate::reduce::reduce;
use crate::{Error, Result};

/// A UC orbit or U class: a canonical, deduplicated, lexicographically
/// sorted collection of standard sets of one dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    d: u32,
    sets: Vec<GpmSet>,
}

impl Orbit {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Member sets in ascending lexicographic order.
    pub fn sets(&self) -> &[GpmSet] {
        &self.sets
    }

    pub fn contains(&self, set: &GpmSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }
}

/// Memoized operator enumeration per `(a, b, d)` context.
#[derive(Default)]
struct OpCache {
    map: Mutex<HashMap<(u32, u32, u32), Arc<Vec<Symplectic2>>>>,
}

impl OpCache {
    fn get(&self, ctx: &LocalCliffordContext) -> Arc<Vec<Symplectic2>> {
        let mut map = self.map.lock().unwrap();
        map.entry((ctx.a, ctx.b, ctx.d))
            .or_insert_with(|| Arc::new(enumerate_local_cliffords(ctx)))
            .clone()
    }
}

fn uc_orbit_with(set: &GpmSet, cache: &OpCache) -> Result<Orbit> {
    if !set.is_standard() {
        return Err(Error::NotStandard);
    }
    let r = reduce(set)?;
    let pre = apply_symplectic_set(&r.transport, set)
        .expect("a determinant-1 transport is a bijection on exponent pairs");
    for g in pre.members() {
        assert!(
            g.s % r.context.a == 0 && g.t % r.context.b == 0,
            "transported set {pre} left the ({}, {}) lattice",
            r.context.a,
            r.context.b,
        );
    }
    let ops = cache.get(&r.context);
    let mut sets: Vec<GpmSet> = ops
        .iter()
        .map(|op| {
            apply_symplectic_set(op, &pre)
                .expect("enumerated operators act bijectively on lattice sets")
        })
        .collect();
    sets.sort_unstable();
    sets.dedup();
    debug_assert!(
        sets.binary_search(set).is_ok(),
        "orbit of {set} does not contain the set itself"
    );
    Ok(Orbit { d: set.d(), sets })
}

fn u_class_with(set: &GpmSet, cache: &OpCache) -> Result<Orbit> {
    let mut sets: Vec<GpmSet> = Vec::new();
    for std_set in set.standardize_all() {
        sets.extend(uc_orbit_with(&std_set, cache)?.sets.iter().cloned());
    }
    sets.sort_unstable();
    sets.dedup();
    Ok(Orbit { d: set.d(), sets })
}

/// All standard sets UC-equivalent to the given standard set.
pub fn uc_orbit(set: &GpmSet) -> Result<Orbit> {
    uc_orbit_with(set, &OpCache::default())
}

/// All standard sets U-equivalent to the given set: the union of the UC
/// orbits of its standardizations.
pub fn u_class(set: &GpmSet) -> Result<Orbit> {
    u_class_with(set, &OpCache::default())
}

fn check_comparable(m: &GpmSet, n: &GpmSet) -> Result<()> {
    if m.d() != n.d() {
        return Err(Error::DimensionMismatch(m.d(), n.d()));
    }
    if m.len() != n.len() {
        return Err(Error::CardinalityMismatch(m.len(), n.len()));
    }
    Ok(())
}

/// Whether two standard sets are UC-equivalent. Rejects fast on a power
/// vector mismatch, otherwise tests membership of `n` in the orbit of `m`.
pub fn decide_uc(m: &GpmSet, n: &GpmSet) -> Result<bool> {
    check_comparable(m, n)?;
    if !m.is_standard() || !n.is_standard() {
        return Err(Error::NotStandard);
    }
    if m.power_vector() != n.power_vector() {
        return Ok(false);
    }
    Ok(uc_orbit(m)?.contains(n))
}

/// Whether two sets are U-equivalent. `n` is standardized first if needed
/// (every set is U-equivalent to each of its standardizations).
pub fn decide_u(m: &GpmSet, n: &GpmSet) -> Result<bool> {
    check_comparable(m, n)?;
    let n_std = if n.is_standard() {
        n.clone()
    } else {
        n.standardize_all().swap_remove(0)
    };
    Ok(u_class(m)?.contains(&n_std))
}

/// One equivalence class of the partition.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// Lexicographically smallest standard member.
    pub representative: GpmSet,
    /// Number of standard sets in the class.
    pub size_standard: u64,
    /// Number of sets in the class overall, standard or not (all right
    /// translates of the standard members, deduplicated).
    pub size_total: u64,
    /// Full standard member list when requested.
    pub members: Option<Vec<GpmSet>>,
}

/// Partition of all standard `n`-sets of dimension `d` into U-equivalence
/// classes, ordered by representative.
#[derive(Clone, Debug)]
pub struct Partition {
    pub d: u32,
    pub n: usize,
    pub classes: Vec<ClassInfo>,
}

impl Partition {
    /// Sum of standard-set class sizes; equals `C(d^2 - 1, n - 1)`.
    pub fn total_standard(&self) -> u64 {
        self.classes.iter().map(|c| c.size_standard).sum()
    }

    /// Sum of total class sizes; equals `C(d^2, n)`.
    pub fn total_sets(&self) -> u64 {
        self.classes.iter().map(|c| c.size_total).sum()
    }
}

/// Knobs for [`classify_all`].
#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Refuse to enumerate more standard sets than this.
    pub cap: u64,
    /// Worker threads; 1 runs the plain sequential sweep. The result is
    /// identical for any worker count.
    pub workers: usize,
    /// Record the full member list of every class.
    pub with_members: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            cap: 10_000_000,
            workers: 1,
            with_members: false,
        }
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
    }
    acc
}

/// Lexicographic enumeration of all standard `n`-sets of dimension `d`:
/// `(0,0)` plus every combination of `n - 1` non-identity pairs.
struct StandardSets {
    d: u32,
    indices: Vec<u32>,
    started: bool,
    done: bool,
}

impl StandardSets {
    fn new(d: u32, n: usize) -> Self {
        StandardSets {
            d,
            indices: (0..(n as u32 - 1)).collect(),
            started: false,
            done: n > (d * d) as usize,
        }
    }

    fn current(&self) -> GpmSet {
        let d = self.d;
        // Non-identity pair k is (0,0)-skipping lexicographic: k -> (k+1).
        let members = std::iter::once(Gpm::IDENTITY)
            .chain(self.indices.iter().map(|&k| Gpm::new((k + 1) / d, (k + 1) % d)));
        GpmSet::new(d, members).expect("combination indices are distinct")
    }

    fn advance(&mut self) {
        let pool = self.d * self.d - 1;
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
            if self.indices[i] + 1 <= pool - (k - i) as u32 {
                self.indices[i] += 1;
                for j in (i + 1)..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return;
            }
        }
    }
}

impl Iterator for StandardSets {
    type Item = GpmSet;

    fn next(&mut self) -> Option<GpmSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        self.advance();
        if self.done {
            None
        } else {
            Some(self.current())
        }
    }
}

fn total_translates(orbit: &Orbit) -> u64 {
    let d = orbit.d();
    let mut seen: HashSet<GpmSet> = HashSet::new();
    for set in orbit.sets() {
        for s in 0..d {
            for t in 0..d {
                seen.insert(set.right_translate(Gpm::new(s, t)));
            }
        }
    }
    seen.len() as u64
}

fn make_class(seed: GpmSet, orbit: Orbit, with_members: bool) -> ClassInfo {
    assert_eq!(
        orbit.sets().first(),
        Some(&seed),
        "sweep seed must be the lexicographically smallest class member"
    );
    ClassInfo {
        representative: seed,
        size_standard: orbit.len() as u64,
        size_total: total_translates(&orbit),
        members: with_members.then(|| orbit.sets().to_vec()),
    }
}

/// Partition all standard `n`-sets of dimension `d` into U-equivalence
/// classes by a lexicographic sweep: each unvisited seed's full U class is
/// enumerated and marked visited, and the seed (provably the smallest
/// member) becomes the representative.
pub fn classify_all(d: u32, n: usize, opts: &ClassifyOptions) -> Result<Partition> {
    if n == 0 || n > (d as usize) * (d as usize) {
        return Err(Error::PreconditionViolated(format!(
            "set size {n} out of range 1..={}",
            d * d
        )));
    }
    let needed = binomial(u64::from(d) * u64::from(d) - 1, n as u64 - 1);
    if needed > u128::from(opts.cap) {
        return Err(Error::ResourceCap {
            needed,
            cap: opts.cap,
        });
    }

    let cache = OpCache::default();
    let mut visited: HashSet<GpmSet> = HashSet::new();
    let mut classes: Vec<ClassInfo> = Vec::new();
    let mut seeds = StandardSets::new(d, n);

    if opts.workers <= 1 {
        for seed in seeds {
            if visited.contains(&seed) {
                continue;
            }
            let orbit = u_class_with(&seed, &cache)?;
            for m in orbit.sets() {
                visited.insert(m.clone());
            }
            classes.push(make_class(seed, orbit, opts.with_members));
        }
    } else {
        // Speculative frontier: classify a window of unvisited candidates in
        // parallel, then commit in lexicographic order, discarding any
        // candidate covered by an earlier commit. The outcome is identical
        // to the sequential sweep.
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
        let window = opts.workers * 8;
        loop {
            let mut buffer: Vec<GpmSet> = Vec::with_capacity(window);
            for seed in seeds.by_ref() {
                if !visited.contains(&seed) {
                    buffer.push(seed);
                    if buffer.len() == window {
                        break;
                    }
                }
            }
            if buffer.is_empty() {
                break;
            }
            let results: Vec<Result<Orbit>> = pool.install(|| {
                buffer
                    .par_iter()
                    .map(|seed| u_class_with(seed, &cache))
                    .collect()
            });
            for (seed, orbit) in buffer.into_iter().zip(results) {
                let orbit = orbit?;
                if visited.contains(&seed) {
                    continue;
                }
                for m in orbit.sets() {
                    visited.insert(m.clone());
                }
                classes.push(make_class(seed, orbit, opts.with_members));
            }
        }
    }

    debug_assert_eq!(u128::from(visited.len() as u64), needed);
    Ok(Partition { d, n, classes })
}
