//! Acceptance suite: every identity the toolkit exists to machine-check,
//! each at its stated scale, printing one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;

use jagged_core::burge::{burge_inverse, burge_word, path_to_frobenius, path_to_word, peak_pair_map, word_to_path};
use jagged_core::families::{verify_theorem1, verify_theorem2};
use jagged_core::jagged::{epartition_to_jagged, jagged_to_epartition, JaggedPartition, Restriction};
use jagged_core::partition::{for_each_partition, Partition};
use jagged_core::path::{for_each_restricted_path, path_counts, LatticePath};
use jagged_core::series::{
    euler_check, g_series, g_series_q2, g_series_z1, j_series, product_series,
    q_binomial_theorem_check, BivariateSeries, PowerSeries,
};

const EXAMPLE_PATH_STEPS: &str = "SNSSNNSNNNSSNNSSSSHNNNNNSSSSS";

fn report(number: u8, name: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number} ({name}): {status}");
    assert!(
        failures.is_empty(),
        "criterion {number} ({name}) failed:\n{}",
        failures.join("\n")
    );
}

fn all_restrictions(ks: &[u32]) -> Vec<Restriction> {
    ks.iter()
        .flat_map(|&k| {
            let kappa = k.div_ceil(2);
            (1..=kappa).map(move |i| Restriction::new(k, i).unwrap())
        })
        .collect()
}

/// Worked-example fidelity: the documented path, the doubling map pair, and
/// the word correspondence reproduce their published data end to end.
#[test]
fn criterion_1_worked_examples() {
    let mut failures = Vec::new();

    let path = LatticePath::from_steps_str(2, EXAMPLE_PATH_STEPS).unwrap();
    if path.weight() != 56 {
        failures.push(format!("path weight {} != 56", path.weight()));
    }
    if path.relative_heights() != vec![1, 1, 4, 2, 5] {
        failures.push(format!("relative heights {:?}", path.relative_heights()));
    }
    if path.charge() != 13 {
        failures.push(format!("charge {} != 13", path.charge()));
    }
    if !(6..=9).all(|k| path.validate(k)) || path.validate(5) {
        failures.push("restriction validation disagrees with K >= 6".into());
    }

    let jagged = JaggedPartition::new(vec![3, 4, 3, 2, 1, 2, 1, 0, 1]).unwrap();
    let e = jagged_to_epartition(&jagged);
    if e.parts() != [7, 7, 6, 4, 3, 3, 2, 1, 1] {
        failures.push(format!("doubling image {:?}", e.parts()));
    }
    match epartition_to_jagged(&e) {
        Ok(back) if back == jagged => {}
        other => failures.push(format!("doubling inverse gave {other:?}")),
    }

    let p = Partition::new(vec![9, 9, 8, 7, 7, 7, 7, 4, 2, 1, 1]).unwrap();
    let word = burge_word(&p);
    let expected_word = format!(
        "aba{}{}{}{}{}",
        "b".repeat(3),
        "a".repeat(6),
        "b".repeat(2),
        "a".repeat(21),
        "b".repeat(5)
    );
    if word.to_compact_string() != expected_word {
        failures.push(format!("word {}", word.to_compact_string()));
    }
    let word_path = word_to_path(&word, 0).unwrap();
    let data: Vec<(u32, u32)> = word_path.peaks().iter().map(|pk| (pk.x, pk.h)).collect();
    if data != vec![(2, 1), (6, 3), (14, 2), (40, 5)] {
        failures.push(format!("word path peaks {data:?}"));
    }
    match burge_inverse(&path_to_word(&word_path)) {
        Ok(back) if back == p => {}
        other => failures.push(format!("word inverse gave {other:?}")),
    }

    report(1, "worked-example fidelity", &failures);
}

/// J_{K,i}(n,m) = P_{K,i}(2n,m) for K in {3,4,5}, all i, n <= 12, all m, by
/// independent exhaustive enumeration of both sides.
#[test]
fn criterion_2_jagged_equals_paths() {
    let mut failures = Vec::new();
    for r in all_restrictions(&[3, 4, 5]) {
        let report = verify_theorem1(&r, 12).unwrap();
        if !report.passed() {
            failures.push(format!(
                "K={} i={}: {:?}",
                r.k(),
                r.i(),
                report.failures
            ));
        }
    }
    report(2, "theorem 1: J(n,m) = P(2n,m), n <= 12", &failures);
}

/// J_{K,i}(z;q) = G_{K,i}(z;q) coefficientwise up to q^20, z^12 for
/// K in {3,4,5,6} and every i.
#[test]
fn criterion_3_j_equals_g() {
    let mut failures = Vec::new();
    for r in all_restrictions(&[3, 4, 5, 6]) {
        let j = j_series(&r, 20, 12).unwrap();
        let g = g_series(&r, 20, 12).unwrap();
        if let Some((m, n, a, b)) = j.first_mismatch(&g) {
            failures.push(format!(
                "K={} i={}: first mismatch at z^{m} q^{n}: {a} vs {b}",
                r.k(),
                r.i()
            ));
        }
    }
    report(3, "J(z;q) = G(z;q) up to q^20 z^12", &failures);
}

/// G_{K,i}(z;q^2) coefficients equal exhaustive path counts by weight and
/// charge for K <= 5 and weights up to 24; the K = 2 case also matches the
/// closed form sum_m q^{m(m+1)} z^m / (q^2;q^2)_m.
#[test]
fn criterion_4_g_equals_path_counts() {
    let mut failures = Vec::new();
    const W: usize = 24;
    for r in all_restrictions(&[2, 3, 4, 5]) {
        let g = g_series_q2(&r, W, 2 * W).unwrap();
        let t = path_counts(&r, W as u64).unwrap();
        'class: for w in (0..=W).step_by(2) {
            for m in 0..=2 * W {
                let lhs = g.coeff(m, w);
                let rhs = t.get(w as u64, m as u64) as i64;
                if lhs != rhs {
                    failures.push(format!(
                        "K={} i={}: weight {w} charge {m}: series {lhs} vs paths {rhs}",
                        r.k(),
                        r.i()
                    ));
                    break 'class;
                }
            }
        }
    }
    // K = 2 closed form
    let r2 = Restriction::new(2, 1).unwrap();
    let g2 = g_series_q2(&r2, W, 2 * W).unwrap();
    let mut closed = BivariateSeries::zero(W, 2 * W);
    for m in 0..=W {
        let base = m * (m + 1);
        if base > W {
            break;
        }
        let inv = PowerSeries::inv_poch_q2(m, W - base);
        let mut row = BivariateSeries::zero(W - base, 0);
        for (n, &c) in inv.coeffs().iter().enumerate() {
            row.add_shifted(&BivariateSeries::one(0, 0), n, 0, c);
        }
        closed.add_shifted(&row, base, m, 1);
    }
    if let Some((m, n, a, b)) = g2.first_mismatch(&closed) {
        failures.push(format!(
            "K=2 closed form mismatch at z^{m} q^{n}: {a} vs {b}"
        ));
    }
    report(4, "G(z;q^2) = path counts, weight <= 24", &failures);
}

/// E_{K,i}(2n,m) = J_{K,i}(n,m) per length and R_{K,i}(2n) = O_{K,i}(n) =
/// sum_m J_{K,i}(n,m) for K in {3,4,5}, n <= 12.
#[test]
fn criterion_5_partition_families() {
    let mut failures = Vec::new();
    for r in all_restrictions(&[3, 4, 5]) {
        let report = verify_theorem2(&r, 12).unwrap();
        if !report.passed() {
            failures.push(format!(
                "K={} i={}: {:?}",
                r.k(),
                r.i(),
                report.failures
            ));
        }
    }
    report(5, "theorem 2: J = E per m, sum J = R = O, n <= 12", &failures);
}

/// G_{K,i}(1;q) equals the stated product up to q^30 for K in {3,4,5,6},
/// every admissible i, exercising both product cases.
#[test]
fn criterion_6_sum_product_identities() {
    let mut failures = Vec::new();
    let mut special_case_seen = false;
    for r in all_restrictions(&[3, 4, 5, 6]) {
        if r.epsilon() == 1 && r.i() == r.kappa() {
            special_case_seen = true;
        }
        let sum = g_series_z1(&r, 30).unwrap();
        let prod = product_series(&r, 30).unwrap();
        if let Some((n, a, b)) = sum.first_mismatch(&prod) {
            failures.push(format!(
                "K={} i={}: first mismatch at q^{n}: {a} vs {b}",
                r.k(),
                r.i()
            ));
        }
    }
    if !special_case_seen {
        failures.push("the odd-K, i = kappa product case was never exercised".into());
    }
    report(6, "G(1;q) = product form up to q^30", &failures);
}

/// Exhaustive minima over K=3 paths with relative-height content (m1, m2),
/// m1 + m2 <= 4: the minimum weight is m1(m1+1) + 2 m2^2 + 2 m1 m2, plus
/// 2 m2 from start height 2; the (3,4) packed configurations give 68 and 76.
#[test]
fn criterion_7_minimal_weights() {
    let mut failures = Vec::new();
    for i in [1u32, 2] {
        let r = Restriction::new(3, i).unwrap();
        let bound = 48; // covers every expected minimum (max is 40)
        let mut minima: BTreeMap<(u64, u64), u64> = BTreeMap::new();
        for_each_restricted_path(3, r.start_height(), bound, |p| {
            let hs = p.relative_heights();
            let m1 = hs.iter().filter(|&&h| h == 1).count() as u64;
            let m2 = hs.iter().filter(|&&h| h == 2).count() as u64;
            minima
                .entry((m1, m2))
                .and_modify(|w| *w = (*w).min(p.weight()))
                .or_insert(p.weight());
        });
        for m1 in 0..=4u64 {
            for m2 in 0..=4u64 {
                if m1 + m2 == 0 || m1 + m2 > 4 {
                    continue;
                }
                let expect =
                    m1 * (m1 + 1) + 2 * m2 * m2 + 2 * m1 * m2 + if i == 1 { 2 * m2 } else { 0 };
                if minima.get(&(m1, m2)) != Some(&expect) {
                    failures.push(format!(
                        "i={i}, content ({m1},{m2}): minimum {:?} != {expect}",
                        minima.get(&(m1, m2))
                    ));
                }
            }
        }
    }
    // the packed (3,4) configurations
    let packed = LatticePath::from_steps_str(0, "NNSNSNSNSSNNSSNNSSNNSS").unwrap();
    if packed.weight() != 68 {
        failures.push(format!("packed origin configuration weight {}", packed.weight()));
    }
    let packed2 = LatticePath::from_steps_str(2, "SNSNSNSSNNSSNNSSNNSSNNSS").unwrap();
    if packed2.weight() != 76 {
        failures.push(format!("packed height-2 configuration weight {}", packed2.weight()));
    }
    report(7, "minimal-weight invariants for K=3", &failures);
}

/// Bijection round trips at scale: the word map is the identity under round
/// trip on every E-partition of weight <= 20; on every P_{K,i} path of
/// weight <= 24 (K in {3,4,5}, all i) the Frobenius map gives valid rows,
/// preserved weight and odd ranks inside [3-2i, 2K-1-2i], and the peak-pair
/// map is weight-preserving, class-valued and injective.
#[test]
fn criterion_8_bijection_roundtrips() {
    let mut failures = Vec::new();

    // every partition in which each odd part has even multiplicity
    let mut e_count = 0u64;
    for n2 in (0..=20u64).step_by(2) {
        for_each_partition(n2, |parts| {
            let is_e = {
                let mut ok = true;
                let mut idx = 0;
                while idx < parts.len() {
                    let v = parts[idx];
                    let run = parts[idx..].iter().take_while(|&&x| x == v).count();
                    if v % 2 == 1 && run % 2 == 1 {
                        ok = false;
                        break;
                    }
                    idx += run;
                }
                ok
            };
            if !is_e {
                return;
            }
            e_count += 1;
            let p = Partition::new(parts.to_vec()).unwrap();
            let path = word_to_path(&burge_word(&p), 0).unwrap();
            match burge_inverse(&path_to_word(&path)) {
                Ok(back) if back == p => {}
                other => failures.push(format!("round trip on {:?}: {other:?}", parts)),
            }
        });
    }
    if e_count < 100 {
        failures.push(format!("only {e_count} E-partitions visited"));
    }

    for r in all_restrictions(&[3, 4, 5]) {
        let lo = 3 - 2 * i64::from(r.i());
        let hi = 2 * i64::from(r.k()) - 1 - 2 * i64::from(r.i());
        let mut images: BTreeMap<Vec<u32>, String> = BTreeMap::new();
        for_each_restricted_path(r.k(), r.start_height(), 24, |path| {
            match path_to_frobenius(path) {
                Ok(fs) => {
                    if fs.weight() != path.weight() {
                        failures.push(format!(
                            "K={} i={}: Frobenius weight {} != path weight {} on {:?}",
                            r.k(), r.i(), fs.weight(), path.weight(), path.steps_string()
                        ));
                    }
                    for sr in fs.successive_ranks() {
                        if sr.rem_euclid(2) != 1 || sr < lo || sr > hi {
                            failures.push(format!(
                                "K={} i={}: rank {sr} outside odd [{lo},{hi}] on {:?}",
                                r.k(), r.i(), path.steps_string()
                            ));
                        }
                    }
                }
                Err(e) => failures.push(format!(
                    "K={} i={}: Frobenius failed on {:?}: {e}",
                    r.k(), r.i(), path.steps_string()
                )),
            }
            match peak_pair_map(path, r.k()) {
                Ok(p) => {
                    if p.weight() != path.weight() {
                        failures.push(format!(
                            "K={} i={}: peak-pair weight {} != {} on {:?}",
                            r.k(), r.i(), p.weight(), path.weight(), path.steps_string()
                        ));
                    }
                    if let Some(prev) = images.insert(p.parts().to_vec(), path.steps_string()) {
                        failures.push(format!(
                            "K={} i={}: peak-pair collision {:?} from {:?} and {:?}",
                            r.k(), r.i(), p.parts(), prev, path.steps_string()
                        ));
                    }
                }
                Err(e) => failures.push(format!(
                    "K={} i={}: peak-pair failed on {:?}: {e}",
                    r.k(), r.i(), path.steps_string()
                )),
            }
        });
    }
    report(8, "bijection round trips at desk scale", &failures);
}

/// Series self-tests: the q-binomial theorem and the Euler relation hold
/// coefficientwise to q^30.
#[test]
fn criterion_9_series_self_tests() {
    let mut failures = Vec::new();
    if let Some((m, zm, qn, a, b)) = q_binomial_theorem_check(8, 30) {
        failures.push(format!(
            "q-binomial theorem fails for m={m} at x^{zm} q^{qn}: {a} vs {b}"
        ));
    }
    if let Some((m, n, a, b)) = euler_check(30, 10) {
        failures.push(format!("Euler relation fails at x^{m} q^{n}: {a} vs {b}"));
    }
    report(9, "q-binomial theorem and Euler relation to q^30", &failures);
}
