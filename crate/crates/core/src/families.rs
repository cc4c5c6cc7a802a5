//! Brute-force counters for the partition families `E_{K,i}`, `R_{K,i}`,
//! `O_{K,i}` and the reports checking the count identities
//!
//! ```text
//! J_{K,i}(n,m) = P_{K,i}(2n,m) = E_{K,i}(2n,m)
//! sum_m J_{K,i}(n,m) = R_{K,i}(2n) = O_{K,i}(n)
//! ```
//!
//! at desk scale by exhaustive enumeration.
//!
//! - `E_{K,i}(2n,m)`: partitions of `2n` into `m` parts where every odd part
//!   occurs an even number of times, `p_j >= p_{j+K-1} + 2`, and at most
//!   `2i - 2` parts equal 1. The equivalent frequency characterization
//!   (`f_{2j-1}` even, `f_j + f_{j+1} <= K-1`, `f_1 <= 2i-2`) is computed
//!   alongside and asserted to select the same partitions.
//! - `R_{K,i}(2n)`: partitions of `2n` with all successive ranks odd and
//!   inside `[3-2i, 2K-1-2i]`.
//! - `O_{K,i}(n)`: overpartitions of `n` with non-overlined parts not
//!   congruent to `0, +-i (mod K+1)` when `2i < K+1`, or with no part
//!   congruent to `0 (mod kappa)` when `K = 2*kappa - 1` and `i = kappa`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jagged::{jagged_counts, Restriction};
use crate::partition::{for_each_partition, Partition};
use crate::path::path_counts;
use crate::table::CountTable;

/// One part of an overpartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

impl OverPart {
    pub fn plain(value: u32) -> Self {
        Self {
            value,
            overlined: false,
        }
    }

    pub fn overlined(value: u32) -> Self {
        Self {
            value,
            overlined: true,
        }
    }
}

/// An overpartition: a partition in which the final occurrence of a part may
/// be overlined. Parts are kept sorted by value descending, with the
/// overlined copy last among equal values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OverpartitionRaw", into = "OverpartitionRaw")]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

#[derive(Serialize, Deserialize)]
struct OverpartitionRaw {
    parts: Vec<OverPart>,
}

impl From<Overpartition> for OverpartitionRaw {
    fn from(o: Overpartition) -> Self {
        OverpartitionRaw { parts: o.parts }
    }
}

impl TryFrom<OverpartitionRaw> for Overpartition {
    type Error = Error;
    fn try_from(raw: OverpartitionRaw) -> Result<Self> {
        Overpartition::new(raw.parts)
    }
}

impl Overpartition {
    /// Sorts the parts into canonical order and validates that at most one
    /// copy of each value is overlined.
    pub fn new(mut parts: Vec<OverPart>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::InvalidOverpartition("zero part".into()));
        }
        // descending by value; overlined-last among equal values
        parts.sort_by(|a, b| {
            b.value
                .cmp(&a.value)
                .then(a.overlined.cmp(&b.overlined))
        });
        for w in parts.windows(2) {
            if w[0].value == w[1].value && w[0].overlined {
                return Err(Error::InvalidOverpartition(format!(
                    "value {} overlined twice",
                    w[0].value
                )));
            }
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }
}

/// Difference-2 characterization of the E class.
fn e_difference_form(parts: &[u32], k: u32, i: u32) -> bool {
    let k = k as usize;
    let odd_even_mult = {
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
    let diff2 = (0..parts.len().saturating_sub(k - 1)).all(|j| parts[j] >= parts[j + k - 1] + 2);
    let ones = parts.iter().filter(|&&p| p == 1).count() as u32;
    odd_even_mult && diff2 && ones <= 2 * i - 2
}

/// Frequency characterization of the E class.
fn e_frequency_form(p: &Partition, k: u32, i: u32) -> bool {
    let freq = p.frequencies();
    let maxv = freq.max_value();
    for v in (1..=maxv).step_by(2) {
        if !freq.get(v).is_multiple_of(2) {
            return false;
        }
    }
    for v in 0..=maxv {
        if freq.get(v) + freq.get(v + 1) > u64::from(k) - 1 {
            return false;
        }
    }
    freq.get(1) <= u64::from(2 * i - 2)
}

/// All E-partitions of weight `n2` for the given restriction.
pub fn enumerate_e(r: &Restriction, n2: u64) -> Result<Vec<Partition>> {
    if r.k() <= 2 {
        return Err(Error::JaggedKTooSmall(r.k()));
    }
    let mut out = Vec::new();
    for_each_partition(n2, |parts| {
        let by_diff = e_difference_form(parts, r.k(), r.i());
        let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
        let by_freq = e_frequency_form(&p, r.k(), r.i());
        // The two characterizations must select exactly the same set.
        assert_eq!(
            by_diff, by_freq,
            "characterizations disagree on {:?} for K={}, i={}",
            parts,
            r.k(),
            r.i()
        );
        if by_diff {
            out.push(p);
        }
    });
    Ok(out)
}

/// `E_{K,i}(2n, m)`, or the total over all lengths when `m` is `None`.
pub fn count_e(r: &Restriction, n2: u64, m: Option<usize>) -> Result<u64> {
    Ok(enumerate_e(r, n2)?
        .iter()
        .filter(|p| m.is_none_or(|m| p.len() == m))
        .count() as u64)
}

/// All partitions of `n2` whose successive ranks are all odd and lie in
/// `[3-2i, 2K-1-2i]`.
pub fn enumerate_r(r: &Restriction, n2: u64) -> Result<Vec<Partition>> {
    if r.k() <= 2 {
        return Err(Error::JaggedKTooSmall(r.k()));
    }
    let lo = 3 - 2 * i64::from(r.i());
    let hi = 2 * i64::from(r.k()) - 1 - 2 * i64::from(r.i());
    let mut out = Vec::new();
    for_each_partition(n2, |parts| {
        let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
        let ranks = p.successive_ranks();
        if ranks
            .iter()
            .all(|&sr| sr.rem_euclid(2) == 1 && sr >= lo && sr <= hi)
        {
            out.push(p);
        }
    });
    Ok(out)
}

pub fn count_r(r: &Restriction, n2: u64) -> Result<u64> {
    Ok(enumerate_r(r, n2)?.len() as u64)
}

/// Which congruence classes the two product cases exclude.
enum OCase {
    /// `2i < K+1`: non-overlined parts not `0, +-i (mod K+1)`.
    General { modulus: u32, i: u32 },
    /// `K = 2*kappa - 1`, `i = kappa`: no part `0 (mod kappa)`.
    NoPartDivisible { kappa: u32 },
}

fn o_case(r: &Restriction) -> Result<OCase> {
    if 2 * r.i() < r.k() + 1 {
        Ok(OCase::General {
            modulus: r.k() + 1,
            i: r.i(),
        })
    } else if r.epsilon() == 1 && r.i() == r.kappa() {
        Ok(OCase::NoPartDivisible { kappa: r.kappa() })
    } else {
        Err(Error::ProductCase { k: r.k(), i: r.i() })
    }
}

fn overlined_value_allowed(case: &OCase, v: u32) -> bool {
    match *case {
        OCase::General { .. } => true,
        OCase::NoPartDivisible { kappa } => !v.is_multiple_of(kappa),
    }
}

fn plain_value_allowed(case: &OCase, v: u32) -> bool {
    match *case {
        OCase::General { modulus, i } => {
            let rem = v % modulus;
            rem != 0 && rem != i % modulus && rem != (modulus - i % modulus) % modulus
        }
        OCase::NoPartDivisible { kappa } => !v.is_multiple_of(kappa),
    }
}

/// All overpartitions of `n` in the class counted by `O_{K,i}(n)`.
pub fn enumerate_overpartitions(r: &Restriction, n: u64) -> Result<Vec<Overpartition>> {
    let case = o_case(r)?;
    let mut out = Vec::new();
    let mut parts: Vec<OverPart> = Vec::new();
    // Choose parts in descending value order; for each value pick the
    // multiplicity of non-overlined copies and whether one overlined copy
    // closes the run.
    fn rec(
        case: &OCase,
        max_value: u32,
        remaining: u64,
        parts: &mut Vec<OverPart>,
        out: &mut Vec<Overpartition>,
    ) {
        if remaining == 0 {
            out.push(Overpartition {
                parts: parts.clone(),
            });
            return;
        }
        for v in (1..=max_value.min(remaining.min(u64::from(u32::MAX)) as u32)).rev() {
            let plain_ok = plain_value_allowed(case, v);
            let over_ok = overlined_value_allowed(case, v);
            let max_plain = if plain_ok { remaining / u64::from(v) } else { 0 };
            for plain in 0..=max_plain {
                for over in 0..=u64::from(over_ok) {
                    if plain == 0 && over == 0 {
                        continue;
                    }
                    let used = (plain + over) * u64::from(v);
                    if used > remaining {
                        continue;
                    }
                    let base = parts.len();
                    for _ in 0..plain {
                        parts.push(OverPart::plain(v));
                    }
                    if over == 1 {
                        parts.push(OverPart::overlined(v));
                    }
                    rec(case, v - 1, remaining - used, parts, out);
                    parts.truncate(base);
                }
            }
        }
    }
    rec(
        &case,
        n.min(u64::from(u32::MAX)) as u32,
        n,
        &mut parts,
        &mut out,
    );
    out.sort_by(|a, b| a.parts.cmp(&b.parts));
    Ok(out)
}

/// `O_{K,i}(n)`.
pub fn count_o(r: &Restriction, n: u64) -> Result<u64> {
    Ok(enumerate_overpartitions(r, n)?.len() as u64)
}

/// Alternative reading of the `epsilon = 1, i = kappa` clause in which the
/// divisibility exclusion applies to non-overlined parts only. Reported for
/// documentation next to the literal all-parts reading.
pub fn count_o_nonoverlined_only(r: &Restriction, n: u64) -> Result<u64> {
    if !(r.epsilon() == 1 && r.i() == r.kappa()) {
        return count_o(r, n);
    }
    let kappa = r.kappa();
    // overlined: any distinct values; non-overlined: not 0 mod kappa
    fn rec(kappa: u32, max_value: u32, remaining: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        for v in (1..=max_value.min(remaining.min(u64::from(u32::MAX)) as u32)).rev() {
            let plain_ok = v % kappa != 0;
            let max_plain = if plain_ok { remaining / u64::from(v) } else { 0 };
            for plain in 0..=max_plain {
                for over in 0..=1u64 {
                    if plain == 0 && over == 0 {
                        continue;
                    }
                    let used = (plain + over) * u64::from(v);
                    if used > remaining {
                        continue;
                    }
                    count += rec(kappa, v - 1, remaining - used);
                }
            }
        }
        count
    }
    Ok(rec(kappa, n.min(u64::from(u32::MAX)) as u32, n))
}

/// A single failed equality inside a verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub n: u64,
    pub m: Option<u64>,
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of a theorem verification: the number of equalities checked,
/// every failure found, and the full table of jagged counts `(n, m, J)` the
/// comparisons ran against.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub description: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub counts: Vec<(u64, u64, u64)>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `J_{K,i}(n,m) = P_{K,i}(2n,m)` for all `n <= n_max` and all `m`, by
/// independent exhaustive enumeration of both sides.
pub fn verify_theorem1(r: &Restriction, n_max: u64) -> Result<VerifyReport> {
    let j = jagged_counts(r, n_max)?;
    let p = path_counts(r, 2 * n_max)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    let m_hi = j.max_grade().max(p.max_grade()) + 1;
    for n in 0..=n_max {
        for m in 0..=m_hi {
            checked += 1;
            let lhs = j.get(n, m);
            let rhs = p.get(2 * n, m);
            if lhs != rhs {
                failures.push(Failure {
                    identity: "J(n,m) = P(2n,m)".into(),
                    n,
                    m: Some(m),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(VerifyReport {
        description: format!(
            "theorem 1: J = P for K={}, i={}, n <= {}",
            r.k(),
            r.i(),
            n_max
        ),
        checked,
        failures,
        counts: j.iter().collect(),
        notes: Vec::new(),
    })
}

/// Check `J_{K,i}(n,m) = E_{K,i}(2n,m)` per length and
/// `sum_m J = R_{K,i}(2n) = O_{K,i}(n)` for all `n <= n_max`. Fans out over
/// `n` when `JAGGED_THREADS` asks for parallelism; the report is assembled
/// in weight order either way.
pub fn verify_theorem2(r: &Restriction, n_max: u64) -> Result<VerifyReport> {
    let j = jagged_counts(r, n_max)?;
    let per_n: Vec<(u64, Vec<Failure>, u64)> = run_per_weight(r, n_max, &j)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for (_, fails, ch) in per_n {
        failures.extend(fails);
        checked += ch;
    }
    let mut notes = Vec::new();
    if r.epsilon() == 1 && r.i() == r.kappa() {
        let mut alt_matches = true;
        for n in 0..=n_max {
            if count_o_nonoverlined_only(r, n)? != count_o(r, n)? {
                alt_matches = false;
                break;
            }
        }
        notes.push(format!(
            "epsilon=1, i=kappa: the non-overlined-only reading of the O \
             condition {} the all-parts reading up to n = {n_max}",
            if alt_matches { "matches" } else { "differs from" }
        ));
    }
    Ok(VerifyReport {
        description: format!(
            "theorem 2: J = E and sum J = R = O for K={}, i={}, n <= {}",
            r.k(),
            r.i(),
            n_max
        ),
        checked,
        failures,
        counts: j.iter().collect(),
        notes,
    })
}

fn check_weight(r: &Restriction, n: u64, j: &CountTable) -> Result<(Vec<Failure>, u64)> {
    let mut failures = Vec::new();
    let mut checked = 0;
    let e_parts = enumerate_e(r, 2 * n)?;
    let m_hi = j.max_grade().max(e_parts.iter().map(|p| p.len() as u64).max().unwrap_or(0));
    for m in 0..=m_hi {
        checked += 1;
        let lhs = j.get(n, m);
        let rhs = e_parts.iter().filter(|p| p.len() as u64 == m).count() as u64;
        if lhs != rhs {
            failures.push(Failure {
                identity: "J(n,m) = E(2n,m)".into(),
                n,
                m: Some(m),
                lhs,
                rhs,
            });
        }
    }
    let j_total = j.row_sum(n);
    let r_count = count_r(r, 2 * n)?;
    let o_count = count_o(r, n)?;
    checked += 2;
    if j_total != r_count {
        failures.push(Failure {
            identity: "sum_m J(n,m) = R(2n)".into(),
            n,
            m: None,
            lhs: j_total,
            rhs: r_count,
        });
    }
    if j_total != o_count {
        failures.push(Failure {
            identity: "sum_m J(n,m) = O(n)".into(),
            n,
            m: None,
            lhs: j_total,
            rhs: o_count,
        });
    }
    Ok((failures, checked))
}

fn run_per_weight(
    r: &Restriction,
    n_max: u64,
    j: &CountTable,
) -> Result<Vec<(u64, Vec<Failure>, u64)>> {
    let threads = crate::thread_count().min(n_max as usize + 1);
    if threads <= 1 {
        let mut out = Vec::new();
        for n in 0..=n_max {
            let (f, c) = check_weight(r, n, j)?;
            out.push((n, f, c));
        }
        return Ok(out);
    }
    let weights: Vec<u64> = (0..=n_max).collect();
    let mut results: Vec<Option<(u64, Vec<Failure>, u64)>> = vec![None; weights.len()];
    let chunks: Vec<Vec<u64>> = weights.chunks(weights.len().div_ceil(threads)).map(<[u64]>::to_vec).collect();
    std::thread::scope(|scope| -> Result<()> {
        let mut handles = Vec::new();
        for chunk in &chunks {
            handles.push(scope.spawn(move || -> Result<Vec<(u64, Vec<Failure>, u64)>> {
                chunk
                    .iter()
                    .map(|&n| check_weight(r, n, j).map(|(f, c)| (n, f, c)))
                    .collect()
            }));
        }
        for handle in handles {
            for item in handle.join().expect("verification worker panicked")? {
                let idx = item.0 as usize;
                results[idx] = Some(item);
            }
        }
        Ok(())
    })?;
    Ok(results.into_iter().map(|r| r.expect("all weights covered")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: u32, i: u32) -> Restriction {
        Restriction::new(k, i).unwrap()
    }

    #[test]
    fn empty_weight_counts_are_one() {
        assert_eq!(count_e(&r(3, 1), 0, None).unwrap(), 1);
        assert_eq!(count_r(&r(3, 1), 0).unwrap(), 1);
        assert_eq!(count_o(&r(3, 1), 0).unwrap(), 1);
    }

    #[test]
    fn overpartition_counts_small_frozen_values() {
        // K=3, i=2 is the all-parts-odd case: overlined distinct odd parts
        // together with unrestricted odd non-overlined parts.
        let r32 = r(3, 2);
        assert_eq!(count_o(&r32, 1).unwrap(), 2); // 1, 1*
        assert_eq!(count_o(&r32, 2).unwrap(), 2); // 1+1, 1+1*
        assert_eq!(count_o(&r32, 3).unwrap(), 4); // 3, 3*, 1+1+1, 1+1+1*

        // K=3, i=1: non-overlined parts must be 2 mod 4.
        let r31 = r(3, 1);
        assert_eq!(count_o(&r31, 1).unwrap(), 1); // 1*
        assert_eq!(count_o(&r31, 2).unwrap(), 2); // 2, 2*
        assert_eq!(count_o(&r31, 3).unwrap(), 3); // 3*, 2+1*, 2*+1*
    }

    #[test]
    fn e_counts_small_frozen_values() {
        // E_{3,2}(2n): odd parts have even multiplicity, f_j + f_{j+1} <= 2,
        // f_1 <= 2.
        // weight 2: (2), (1,1)                                    -> 2
        // weight 4: (4), (2,2); (3,1) odd mult, (2,1,1) f_1+f_2=3 -> 2
        let r32 = r(3, 2);
        assert_eq!(count_e(&r32, 2, None).unwrap(), 2);
        assert_eq!(count_e(&r32, 4, None).unwrap(), 2);
        // lengths: weight 2: (2) has m=1, (1,1) has m=2
        assert_eq!(count_e(&r32, 2, Some(1)).unwrap(), 1);
        assert_eq!(count_e(&r32, 2, Some(2)).unwrap(), 1);
    }

    #[test]
    fn r_counts_small_frozen_values() {
        // R_{3,2}(2n): ranks odd in [-1, 1].
        // weight 2: (2) has SR (1) ok; (1,1) has SR (-1) ok -> 2
        let r32 = r(3, 2);
        assert_eq!(count_r(&r32, 2).unwrap(), 2);
        // weight 4: (4): SR 3 out; (3,1): SR (1)? s=(2),t=(1): 1 in range ok;
        // (2,2): SR (0,0) even no; (2,1,1): s=(1),t=(2): -1 ok; (1^4): SR -3 out.
        assert_eq!(count_r(&r32, 4).unwrap(), 2);
    }

    #[test]
    fn theorem2_holds_at_small_scale() {
        for (k, i) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
            let report = verify_theorem2(&r(k, i), 6).unwrap();
            assert!(report.passed(), "K={k} i={i}: {:?}", report.failures);
            assert!(!report.counts.is_empty());
        }
        // the odd-K, i = kappa case documents the alternative reading of
        // the overpartition condition: restricting only non-overlined parts
        // breaks the count equality already at n = 2, so the report records
        // that the readings differ and the literal all-parts one is in use
        let report = verify_theorem2(&r(3, 2), 6).unwrap();
        assert!(
            report.notes.iter().any(|n| n.contains("differs from")),
            "{:?}",
            report.notes
        );
    }

    #[test]
    fn product_coefficients_match_overpartition_counts_directly() {
        for (k, i) in [(3u32, 1u32), (3, 2), (4, 2), (5, 3)] {
            let r = r(k, i);
            let prod = crate::series::product_series(&r, 12).unwrap();
            for n in 0..=12u64 {
                assert_eq!(
                    prod.coeff(n as usize),
                    count_o(&r, n).unwrap() as i64,
                    "K={k} i={i} n={n}"
                );
            }
        }
    }

    #[test]
    fn o_case_rejects_out_of_range_parameters() {
        // K=4 (kappa=2, epsilon=0), i=2: 2i = 4 >= K+1 = 5 is false, so the
        // general case applies; every (K,i) with epsilon=0 is covered.
        assert!(count_o(&r(4, 2), 3).is_ok());
        // There is no admissible (K,i) outside both cases, so construct the
        // error path through the raw counter.
        // (kept for the CLI: asking for O with a bad (K,i) pair fails at
        // Restriction::new already)
    }

    #[test]
    fn overpartition_canonical_order_and_validation() {
        let o = Overpartition::new(vec![
            OverPart::plain(2),
            OverPart::overlined(3),
            OverPart::plain(3),
        ])
        .unwrap();
        assert_eq!(
            o.parts(),
            &[
                OverPart::plain(3),
                OverPart::overlined(3),
                OverPart::plain(2)
            ]
        );
        assert!(Overpartition::new(vec![
            OverPart::overlined(3),
            OverPart::overlined(3)
        ])
        .is_err());
        assert!(Overpartition::new(vec![OverPart::plain(0)]).is_err());
    }

    #[test]
    fn overpartition_total_counts_match_classical_sequence() {
        // Unrestricted overpartition numbers 1, 2, 4, 8, 14, 24, 40, 64, ...
        // recovered through a restriction whose congruence filters are
        // inactive: there is none, so count directly with a permissive case.
        // Instead check O_{3,2} against the generating function
        // prod (1+q^n)/(1-q^n) over odd n expanded by hand to q^6:
        // 1 + 2q + 2q^2 + 4q^3 + 6q^4 + 8q^5 + 12q^6.
        let r32 = r(3, 2);
        let expect = [1u64, 2, 2, 4, 6, 8, 12];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(count_o(&r32, n as u64).unwrap(), want, "n={n}");
        }
    }
}
