//! Jagged partitions, the distance-(K-1) restriction, enumeration of the
//! counts `J_{K,i}(n,m)`, and the bijections onto E-partitions and
//! overpartitions.
//!
//! A jagged partition of length `m` is a sequence of non-negative integers
//! `(n_1, ..., n_m)` with
//!
//! ```text
//! n_j >= n_{j+1} - 1,    n_j >= n_{j+2},    n_m >= 1.
//! ```
//!
//! It differs from an ordinary partition only in that adjacent parts may rise
//! by one. A K-restricted jagged partition additionally satisfies, for every
//! window `j <= m - K + 1`,
//!
//! ```text
//! n_j >= n_{j+K-1} + 1   or   n_j = n_{j+1} - 1 = n_{j+K-2} + 1 = n_{j+K-1}.
//! ```
//!
//! `J_{K,i}(n,m)` counts the K-restricted jagged partitions of weight `n` and
//! length `m` containing at most `i - 1` adjacent `(0,1)` pairs.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{OverPart, Overpartition};
use crate::partition::Partition;
use crate::table::CountTable;

/// A jagged partition: validated against the three defining conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JaggedPartition {
    parts: Vec<u32>,
}

impl JaggedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let signed: Vec<i64> = parts.iter().map(|&p| i64::from(p)).collect();
        if !is_jagged(&signed) {
            return Err(Error::NotJagged(format!("{:?}", parts)));
        }
        let jp = Self { parts };
        // In a valid jagged partition every zero part is immediately
        // followed by a part equal to 1.
        debug_assert!(jp
            .parts
            .iter()
            .enumerate()
            .all(|(j, &p)| p != 0 || jp.parts.get(j + 1) == Some(&1)));
        Ok(jp)
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of adjacent `(0,1)` pairs. Equals the number of zero parts,
    /// since each zero is immediately followed by a 1.
    pub fn zero_pair_count(&self) -> usize {
        self.parts
            .windows(2)
            .filter(|w| w[0] == 0 && w[1] == 1)
            .count()
    }

    /// The distance-(K-1) restriction. Vacuously true when `m < K`.
    /// Rejects `K <= 2`: the restriction pairs a strict-drop branch with a
    /// plateau branch that needs `K - 2 >= 1` intermediate positions.
    pub fn is_k_restricted(&self, k: u32) -> Result<bool> {
        if k <= 2 {
            return Err(Error::JaggedKTooSmall(k));
        }
        let k = k as usize;
        let n = &self.parts;
        for j in 0..n.len().saturating_sub(k - 1) {
            let strict_drop = n[j] > n[j + k - 1];
            let plateau = n[j] + 1 == n[j + 1] && n[j] == n[j + k - 2] + 1 && n[j] == n[j + k - 1];
            if !strict_drop && !plateau {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Serialize for JaggedPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for JaggedPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        JaggedPartition::new(parts).map_err(D::Error::custom)
    }
}

/// Check the three jagged conditions on an arbitrary integer sequence.
/// The empty sequence is valid. Any sequence passing the checks is
/// automatically non-negative.
pub fn is_jagged(seq: &[i64]) -> bool {
    let m = seq.len();
    if m == 0 {
        return true;
    }
    if seq[m - 1] < 1 {
        return false;
    }
    for j in 0..m - 1 {
        if seq[j] < seq[j + 1] - 1 {
            return false;
        }
    }
    for j in 0..m.saturating_sub(2) {
        if seq[j] < seq[j + 2] {
            return false;
        }
    }
    true
}

/// Restriction parameters `K = 2*kappa - epsilon`, `epsilon in {0,1}`,
/// `1 <= i <= kappa`. Lattice paths and the G series accept `K >= 2`;
/// jagged-side operations and the J series additionally require `K > 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    k: u32,
    i: u32,
}

impl Restriction {
    pub fn new(k: u32, i: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidRestriction(format!("K must be >= 2, got {k}")));
        }
        let kappa = k.div_ceil(2);
        if i < 1 || i > kappa {
            return Err(Error::InvalidRestriction(format!(
                "need 1 <= i <= kappa = {kappa}, got i = {i}"
            )));
        }
        Ok(Self { k, i })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    /// `kappa = ceil(K / 2)`.
    pub fn kappa(&self) -> u32 {
        self.k.div_ceil(2)
    }

    /// `epsilon = 2*kappa - K`, either 0 or 1.
    pub fn epsilon(&self) -> u32 {
        2 * self.kappa() - self.k
    }

    /// Start height of the associated lattice paths: `a = 2*kappa - 2*i`.
    pub fn start_height(&self) -> u32 {
        2 * self.kappa() - 2 * self.i
    }

    fn require_jagged_domain(&self) -> Result<()> {
        if self.k <= 2 {
            return Err(Error::JaggedKTooSmall(self.k));
        }
        Ok(())
    }
}

/// All K-restricted jagged partitions of weight `n` with at most `i - 1`
/// zero pairs, optionally filtered to length `m`, in lexicographic order of
/// the part sequences.
pub fn enumerate_jagged(
    r: &Restriction,
    n: u64,
    m: Option<usize>,
) -> Result<Vec<JaggedPartition>> {
    r.require_jagged_domain()?;
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    extend(r, n, m, &mut prefix, 0, &mut out);
    out.sort_by(|a, b| a.parts.cmp(&b.parts));
    Ok(out)
}

/// Depth-first extension. The jagged and restriction windows are checked
/// incrementally as each part is placed, so invalid prefixes are pruned
/// early.
fn extend(
    r: &Restriction,
    remaining: u64,
    m: Option<usize>,
    prefix: &mut Vec<u32>,
    zero_pairs: u32,
    out: &mut Vec<JaggedPartition>,
) {
    let j = prefix.len();
    // Close the sequence here if allowed: last part >= 1 (or empty). Every
    // restriction window was checked as it completed.
    if remaining == 0 && m.is_none_or(|m| m == j) && prefix.last().is_none_or(|&p| p >= 1) {
        out.push(JaggedPartition {
            parts: prefix.clone(),
        });
    }
    if m.is_some_and(|m| j >= m) {
        return;
    }
    // Candidate next parts: 0..=prev+1, also bounded by the distance-2
    // condition and the remaining weight.
    let hi = match j {
        0 => remaining.min(u64::from(u32::MAX)) as u32,
        _ => {
            let step = prefix[j - 1] + 1;
            let two = if j >= 2 { prefix[j - 2] } else { u32::MAX };
            step.min(two).min(remaining.min(u64::from(u32::MAX)) as u32)
        }
    };
    for next in (0..=hi).rev() {
        // A zero part must be followable: it needs a later 1, so it cannot
        // be placed with no weight remaining.
        if next == 0 && remaining == 0 {
            continue;
        }
        let new_zero_pairs = zero_pairs + u32::from(next == 0);
        if new_zero_pairs > r.i() - 1 {
            continue;
        }
        prefix.push(next);
        if window_ok(r, prefix) {
            extend(r, remaining - u64::from(next), m, prefix, new_zero_pairs, out);
        }
        prefix.pop();
    }
}

/// Check the restriction window that just became complete, i.e. the one
/// starting at `len - K` (if any). Earlier windows were checked before.
fn window_ok(r: &Restriction, parts: &[u32]) -> bool {
    let k = r.k() as usize;
    let len = parts.len();
    if len < k {
        return true;
    }
    let j = len - k;
    let strict_drop = parts[j] > parts[j + k - 1];
    let plateau = parts[j] + 1 == parts[j + 1]
        && parts[j] == parts[j + k - 2] + 1
        && parts[j] == parts[j + k - 1];
    strict_drop || plateau
}

/// Full count table `J_{K,i}(n, m)` for all weights `n <= n_max`.
pub fn jagged_counts(r: &Restriction, n_max: u64) -> Result<CountTable> {
    let mut table = CountTable::new();
    for n in 0..=n_max {
        for jp in enumerate_jagged(r, n, None)? {
            table.add(n, jp.len() as u64);
        }
    }
    Ok(table)
}

/// Doubling bijection onto E-partitions: double each part, then replace the
/// doubled image `(2r-2, 2r)` of each adjacent ascent `(r-1, r)` by
/// `(2r-1, 2r-1)`. The result is a partition of twice the weight and the
/// same length in which every odd part has even multiplicity.
pub fn jagged_to_epartition(jp: &JaggedPartition) -> Partition {
    let src = jp.parts();
    let mut out: Vec<u32> = src.iter().map(|&p| 2 * p).collect();
    let mut j = 0;
    while j + 1 < out.len() {
        if src[j] + 1 == src[j + 1] {
            // ascents are disjoint: the jagged conditions forbid two in a row
            let v = 2 * src[j] + 1;
            out[j] = v;
            out[j + 1] = v;
            j += 2;
        } else {
            j += 1;
        }
    }
    Partition::new(out).expect("doubling map output is weakly decreasing")
}

/// Exact inverse of [`jagged_to_epartition`]: replace each pair
/// `(2r-1, 2r-1)` by `(2r-2, 2r)` and halve. Rejects partitions in which some
/// odd part has odd multiplicity.
pub fn epartition_to_jagged(p: &Partition) -> Result<JaggedPartition> {
    let parts = p.parts();
    let mut out = Vec::with_capacity(parts.len());
    let mut j = 0;
    while j < parts.len() {
        let v = parts[j];
        if v % 2 == 1 {
            if parts.get(j + 1) != Some(&v) {
                return Err(Error::NotEPartition(format!(
                    "odd part {v} with odd multiplicity in {:?}",
                    parts
                )));
            }
            out.push((v - 1) / 2);
            out.push(v.div_ceil(2));
            j += 2;
        } else {
            out.push(v / 2);
            j += 1;
        }
    }
    JaggedPartition::new(out)
}

/// Pairing bijection onto overpartitions: a single greedy left-to-right scan
/// replaces each adjacent `(r, r+1)` by the non-overlined part `2r+1` and
/// each adjacent `(r, r)` by the non-overlined part `2r`; unpaired entries
/// become overlined parts of their own value and are necessarily distinct.
pub fn jagged_to_overpartition(jp: &JaggedPartition) -> Overpartition {
    let src = jp.parts();
    let mut parts: Vec<OverPart> = Vec::new();
    let mut j = 0;
    while j < src.len() {
        if j + 1 < src.len() && src[j] + 1 == src[j + 1] {
            parts.push(OverPart::plain(2 * src[j] + 1));
            j += 2;
        } else if j + 1 < src.len() && src[j] == src[j + 1] {
            parts.push(OverPart::plain(2 * src[j]));
            j += 2;
        } else {
            parts.push(OverPart::overlined(src[j]));
            j += 1;
        }
    }
    Overpartition::new(parts).expect("pairing scan yields distinct overlined parts")
}

/// Check the `0^2 1` conditions (the `p = 2` analogue of the jagged
/// conditions): `n_j >= n_{j+1} - 1`, `n_j >= n_{j+2} - 1`, `n_j >= n_{j+3}`,
/// last part >= 1.
pub fn is_zero_two_one(seq: &[i64]) -> bool {
    let m = seq.len();
    if m == 0 {
        return true;
    }
    if seq[m - 1] < 1 {
        return false;
    }
    for j in 0..m {
        for s in 1..=2usize {
            if j + s < m && seq[j] < seq[j + s] - 1 {
                return false;
            }
        }
        if j + 3 < m && seq[j] < seq[j + 3] {
            return false;
        }
    }
    true
}

/// Experimental transform of a `0^2 1`-partition into an ordinary partition
/// of three times the weight: parts are tripled and locally rearranged by
/// the three triple rules
///
/// ```text
/// (3r, 3r,   3r+3) -> (3r+1, 3r+1, 3r+1)
/// (3r, 3r+3, 3r+3) -> (3r+2, 3r+2, 3r+2)
/// (3r+3, 3r, 3r+3) -> (3r+3, 3r+2, 3r+1)
/// ```
///
/// Rules are applied scanning left to right at the leftmost remaining
/// ascent; when two rules could fire the scan backtracks over the choices
/// until the whole sequence is non-increasing. The output satisfies the
/// frequency conditions `f_{3j+1} = f_{3j+2} = 0 (mod 3)` or
/// `f_{3j+1} = f_{3j+2} = 1 (mod 3)` for every `j`.
pub fn p2_transform(seq: &[u32]) -> Result<Partition> {
    let signed: Vec<i64> = seq.iter().map(|&p| i64::from(p)).collect();
    if !is_zero_two_one(&signed) {
        return Err(Error::NotZeroTwoOne(format!("{:?}", seq)));
    }
    let tripled: Vec<u32> = seq.iter().map(|&p| 3 * p).collect();
    let sorted =
        rearrange(&tripled).ok_or_else(|| Error::P2RearrangementFailed(format!("{:?}", seq)))?;
    Partition::new(sorted).map_err(|_| Error::P2RearrangementFailed(format!("{:?}", seq)))
}

/// Depth-first search over rule applications, fixing the leftmost ascent at
/// each step. Candidates at an ascent `(x, x+3)` are the two triple rules
/// covering it and, lowest priority, the bare pair rewrite
/// `(x, x+3) -> (x+2, x+1)` that the third displayed rule instantiates
/// (its leading entry is untouched). Branching is at most three and inputs
/// are short, so the search is cheap.
fn rearrange(seq: &[u32]) -> Option<Vec<u32>> {
    let ascent = match seq.windows(2).position(|w| w[0] < w[1]) {
        None => return Some(seq.to_vec()),
        Some(k) => k,
    };
    // Triple windows covering positions (ascent, ascent+1).
    let starts = [ascent.checked_sub(1), Some(ascent)];
    for start in starts.into_iter().flatten() {
        if start + 3 > seq.len() {
            continue;
        }
        let w = [seq[start], seq[start + 1], seq[start + 2]];
        if let Some(rep) = apply_triple_rule(w) {
            let mut next = seq.to_vec();
            next[start..start + 3].copy_from_slice(&rep);
            if let Some(done) = rearrange(&next) {
                return Some(done);
            }
        }
    }
    let x = seq[ascent];
    if seq[ascent + 1] == x + 3 {
        let mut next = seq.to_vec();
        next[ascent] = x + 2;
        next[ascent + 1] = x + 1;
        if let Some(done) = rearrange(&next) {
            return Some(done);
        }
    }
    None
}

fn apply_triple_rule(w: [u32; 3]) -> Option<[u32; 3]> {
    let [a, b, c] = w;
    if a == b && c == a + 3 {
        Some([a + 1, a + 1, a + 1])
    } else if b == a + 3 && c == b {
        Some([a + 2, a + 2, a + 2])
    } else if a == c && a >= 3 && b == a - 3 {
        Some([a, a - 1, a - 2])
    } else {
        None
    }
}
