//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gpmset::catalog::{golden_rows, named_set, table_content, D6_REPRESENTATIVES};
use gpmset::classify::{classify_all, decide_uc, u_class, uc_orbit, ClassifyOptions, Partition};
use gpmset::clifford::apply_symplectic_set;
use gpmset::gpm::{commutation_exponent, Gpm, GpmSet};
use gpmset::oracle;
use gpmset::reduce::{is_lemma41_form, reduce};

fn set(d: u32, pairs: &[(u32, u32)]) -> GpmSet {
    GpmSet::new(d, pairs.iter().map(|&(s, t)| Gpm::new(s, t))).unwrap()
}

fn classify(d: u32, n: usize, workers: usize) -> Partition {
    classify_all(
        d,
        n,
        &ClassifyOptions {
            workers,
            with_members: true,
            ..ClassifyOptions::default()
        },
    )
    .unwrap()
}

#[test]
fn criterion_1_d6_partition_representatives() {
    let start = Instant::now();
    let partition = classify(6, 4, 1);
    assert_eq!(partition.classes.len(), 31, "expected 31 classes at d=6");
    for (i, class) in partition.classes.iter().enumerate() {
        let expected = set(6, &D6_REPRESENTATIVES[i]);
        assert_eq!(
            class.representative, expected,
            "representative {i} mismatch"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "runtime bound: {elapsed:?}");
    println!(
        "[acceptance] criterion 1: PASS — classify_all(6,4) = 31 classes, representatives match ({elapsed:?})"
    );
}

#[test]
fn criterion_2_d4_partition_representatives() {
    let start = Instant::now();
    let partition = classify(4, 4, 1);
    assert_eq!(partition.classes.len(), 10, "expected 10 classes at d=4");

    // The ten classical representatives must land in ten distinct classes,
    // each containing its named set.
    let names = [
        "K", "L", "G120", "G131", "G133", "G212", "G230", "G112", "G220", "G232",
    ];
    let mut hit = vec![None; names.len()];
    for (ni, name) in names.iter().enumerate() {
        let named = named_set(name).unwrap();
        for (ci, class) in partition.classes.iter().enumerate() {
            let members = class.members.as_ref().unwrap();
            if members.binary_search(&named).is_ok() {
                assert!(hit[ni].is_none());
                hit[ni] = Some(ci);
            }
        }
        assert!(hit[ni].is_some(), "{name} not found in any class");
    }
    let distinct: HashSet<usize> = hit.iter().map(|h| h.unwrap()).collect();
    assert_eq!(distinct.len(), 10, "named sets must hit 10 distinct classes");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "runtime bound: {elapsed:?}");
    println!(
        "[acceptance] criterion 2: PASS — classify_all(4,4) = 10 classes, one per named representative ({elapsed:?})"
    );
}

#[test]
fn criterion_3_orbit_cardinalities() {
    let c1 = named_set("C1").unwrap();
    assert_eq!(uc_orbit(&c1).unwrap().len(), 24, "|UC(C1)|");
    assert_eq!(u_class(&c1).unwrap().len(), 48, "|U(C1)|");

    let c2 = named_set("C2").unwrap();
    assert_eq!(u_class(&c2).unwrap().len(), 48, "|U(C2)|");
    let mut block_sizes: Vec<usize> = c2
        .standardize_all()
        .iter()
        .map(|s| uc_orbit(s).unwrap().len())
        .collect();
    block_sizes.sort_unstable();
    assert_eq!(block_sizes, vec![12, 12, 24, 24], "U(C2) split 24+12+12");

    let c3 = named_set("C3").unwrap();
    assert_eq!(uc_orbit(&c3).unwrap().len(), 144, "|UC(C3)|");
    assert_eq!(u_class(&c3).unwrap().len(), 576, "|U(C3)|");

    let expected = [
        ("K", 1usize),
        ("L", 6),
        ("G120", 192),
        ("G131", 48),
        ("G133", 16),
        ("G212", 12),
        ("G230", 24),
        ("G112", 96),
        ("G220", 48),
        ("G232", 12),
    ];
    for (name, size) in expected {
        let s = named_set(name).unwrap();
        assert_eq!(u_class(&s).unwrap().len(), size, "|U({name})|");
    }
    println!("[acceptance] criterion 3: PASS — all orbit cardinalities exact");
}

#[test]
fn criterion_4_golden_table_diff() {
    for id in 1..=10u8 {
        let computed = table_content(id).unwrap();
        let golden = golden_rows(id).unwrap();
        assert_eq!(
            computed.len(),
            golden.len(),
            "table {id}: row count {} vs golden {}",
            computed.len(),
            golden.len()
        );
        for (i, (c, g)) in computed.iter().zip(golden.iter()).enumerate() {
            assert_eq!(c, g, "table {id} row {i}: computed {c} vs golden {g}");
        }
    }
    println!("[acceptance] criterion 4: PASS — tables 1..10 match the golden files row for row");
}

#[test]
fn criterion_5_partition_sums() {
    let p4 = classify(4, 4, 1);
    assert_eq!(p4.total_standard(), 455, "sum of standard class sizes, d=4");
    assert_eq!(p4.total_sets(), 1820, "sum of total class sizes, d=4");

    let p6 = classify(6, 4, 1);
    assert_eq!(p6.total_standard(), 6545, "sum of standard class sizes, d=6");
    assert_eq!(p6.total_sets(), 58905, "sum of total class sizes, d=6");
    println!("[acceptance] criterion 5: PASS — partition sums 455 (d=4) and 6545 (d=6)");
}

#[test]
fn criterion_6_numeric_oracle() {
    assert!(oracle::verify_lemma3(5, 6, 12, 72).unwrap());
    assert!(oracle::verify_appendix_a());
    assert!(oracle::verify_tensor_identities(2, 3).unwrap());
    assert!(oracle::verify_tensor_identities(3, 4).unwrap());

    let minus_i4 = oracle::DenseOperator::identity(4).scale((-1.0).into());
    let dev = oracle::build_gpm_matrix(Gpm::new(1, 1), 4)
        .unwrap()
        .pow(4)
        .max_norm_diff(&minus_i4);
    assert!(dev < 1e-12, "(XZ)^4 = -I at d=4: deviation {dev:e}");

    let minus_i6 = oracle::DenseOperator::identity(6).scale((-1.0).into());
    let dev = oracle::build_gpm_matrix(Gpm::new(3, 3), 6)
        .unwrap()
        .pow(2)
        .max_norm_diff(&minus_i6);
    assert!(dev < 1e-12, "(X^3Z^3)^2 = -I at d=6: deviation {dev:e}");

    for check in oracle::verification_suite() {
        assert!(check.passed, "{}: {}", check.name, check.detail);
    }
    println!("[acceptance] criterion 6: PASS — numeric oracle checks within tolerance");
}

fn random_standard_set(rng: &mut ChaCha8Rng, d: u32, n: usize) -> GpmSet {
    let mut members = vec![Gpm::IDENTITY];
    while members.len() < n {
        let g = Gpm::new(rng.random_range(0..d), rng.random_range(0..d));
        if !members.contains(&g) {
            members.push(g);
        }
    }
    GpmSet::new(d, members).unwrap()
}

#[test]
fn criterion_7_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6545);

    // UC symmetry and orbit equality on 1200 random standard-set pairs,
    // half independent, half drawn from one orbit.
    let mut checked = 0usize;
    let mut equivalent = 0usize;
    while checked < 1200 {
        let d = [4u32, 5, 6][rng.random_range(0..3)];
        let n = rng.random_range(2..=4usize);
        let m = random_standard_set(&mut rng, d, n);
        let n_set = if checked % 2 == 0 {
            random_standard_set(&mut rng, d, n)
        } else {
            let orbit = uc_orbit(&m).unwrap();
            orbit.sets()[rng.random_range(0..orbit.len())].clone()
        };
        let mn = decide_uc(&m, &n_set).unwrap();
        let nm = decide_uc(&n_set, &m).unwrap();
        assert_eq!(mn, nm, "symmetry violated for {m} vs {n_set}");
        if mn {
            equivalent += 1;
            assert_eq!(
                uc_orbit(&m).unwrap(),
                uc_orbit(&n_set).unwrap(),
                "orbit equality violated for {m} vs {n_set}"
            );
        }
        checked += 1;
    }
    assert!(checked >= 1000 && equivalent >= 400, "coverage: {checked} pairs, {equivalent} equivalent");

    // Power-vector invariance across every UC orbit generated by the
    // partition criteria (a UC invariant; U classes may mix power vectors
    // across different standardizations), plus commutation scaling.
    for (d, n) in [(6u32, 4usize), (4, 4)] {
        let partition = classify(d, n, 1);
        for class in &partition.classes {
            for std_set in class.representative.standardize_all() {
                let orbit = uc_orbit(&std_set).unwrap();
                let pv = std_set.power_vector();
                for m in orbit.sets() {
                    assert_eq!(
                        m.power_vector(),
                        pv,
                        "power vector drift in orbit of {std_set}"
                    );
                }
            }
            let r = reduce(&class.representative).unwrap();
            let pre = apply_symplectic_set(&r.transport, &class.representative).unwrap();
            let ops = gpmset::clifford::enumerate_local_cliffords(&r.context);
            for op in &ops {
                let det = u64::from(op.det());
                for &g1 in pre.members() {
                    for &g2 in pre.members() {
                        let lhs = commutation_exponent(op.apply(g1), op.apply(g2), d);
                        let rhs = (det * u64::from(commutation_exponent(g1, g2, d))) % u64::from(d);
                        assert_eq!(u64::from(lhs), rhs, "commutation scaling in class of {}", class.representative);
                    }
                }
            }
        }
    }

    // Determinism under varying worker counts.
    let seq = classify(6, 4, 1);
    for workers in [2usize, 4] {
        let par = classify(6, 4, workers);
        assert_eq!(seq.classes.len(), par.classes.len());
        for (a, b) in seq.classes.iter().zip(par.classes.iter()) {
            assert_eq!(a.representative, b.representative, "workers={workers}");
            assert_eq!(a.size_standard, b.size_standard, "workers={workers}");
            assert_eq!(a.members, b.members, "workers={workers}");
        }
    }

    // Reduction-chain termination bound over all 6545 standard 4-sets at
    // d = 6: chain length at most 2·τ(6) = 8, final set in reduced form.
    let pairs: Vec<Gpm> = (1..36u32).map(|k| Gpm::new(k / 6, k % 6)).collect();
    let mut count = 0usize;
    for i in 0..pairs.len() {
        for j in (i + 1)..pairs.len() {
            for k in (j + 1)..pairs.len() {
                let s = GpmSet::new(6, [Gpm::IDENTITY, pairs[i], pairs[j], pairs[k]]).unwrap();
                let r = reduce(&s).unwrap();
                assert!(r.chain.len() <= 8, "chain bound for {s}");
                assert!(is_lemma41_form(&r.reduced), "form for {s}");
                count += 1;
            }
        }
    }
    assert_eq!(count, 6545);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "runtime bound: {elapsed:?}");
    println!(
        "[acceptance] criterion 7: PASS — {checked} random pairs ({equivalent} equivalent), orbit invariants, worker determinism, {count} reductions ({elapsed:?})"
    );
}

#[test]
fn criterion_8_decision_spot_checks() {
    // d = 30 pair rejected via power vectors after standardization.
    let m = set(30, &[(12, 0), (0, 3), (3, 4), (5, 15)]);
    let n = set(30, &[(4, 6), (6, 12), (2, 0), (3, 5)]);
    let m0 = m.standardize_all().swap_remove(0);
    let n0 = n.standardize_all().swap_remove(0);
    assert_ne!(m0.power_vector(), n0.power_vector());
    assert!(!decide_uc(&m0, &n0).unwrap());

    // Equal power vectors at d = 5 still inequivalent.
    let m = set(5, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)]);
    let n = set(5, &[(0, 0), (0, 1), (0, 2), (1, 0), (4, 0)]);
    assert_eq!(m.power_vector(), n.power_vector());
    assert!(!decide_uc(&m, &n).unwrap());

    println!("[acceptance] criterion 8: PASS — decision spot checks exact");
}
