//! The Burge word correspondence between E-partitions and lattice paths, the
//! peak-pair reading with shuffles, and the peak-to-Frobenius map.
//!
//! The word map acts on the frequency table of a partition. Frequencies are
//! grouped into non-overlapping pairs `(f_j, f_{j+1})` with `f_{j+1} > 0`,
//! assigned greedily from the largest part downward. Two operations are then
//! applied repeatedly until every frequency vanishes:
//!
//! - if `(f_0, f_1)` is not a pair, `alpha` sends every paired
//!   `(f_j, f_{j+1})` with `j >= 1` to `(f_j + 1, f_{j+1} - 1)`;
//! - if `(f_0, f_1)` is a pair, `beta` sends it to `(0, f_1 - 1)` and every
//!   paired `(f_j, f_{j+1})` with `j > 1` to `(f_j + 1, f_{j+1} - 1)`;
//!
//! re-pairing after every step. The recorded symbol sequence, read as steps
//! (`beta` = northeast, `alpha` = southeast above the axis and horizontal on
//! it) and completed by the southeast steps needed to reach the axis, is the
//! path of the partition. Total weight strictly decreases at each step, so
//! the word is finite.
//!
//! The inverse replays the word backwards. Undoing a step needs the pairing
//! *before* that step, which is recovered by the mirror pairing rule: scan
//! values bottom-up and anchor a pair at every positive frequency (for a
//! reversed `beta`, a pair is forced at `(f_0, f_1)` first). This works
//! because after a forward step every positive frequency sits inside one of
//! the old pairs, with the pair bottoms strictly positive.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{FrequencyTable, FrobeniusSymbol, Partition};
use crate::path::{LatticePath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurgeSymbol {
    Alpha,
    Beta,
}

/// A word over {alpha, beta} in application order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BurgeWord {
    symbols: Vec<BurgeSymbol>,
}

impl BurgeWord {
    pub fn new(symbols: Vec<BurgeSymbol>) -> Self {
        Self { symbols }
    }

    pub fn symbols(&self) -> &[BurgeSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn to_compact_string(&self) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                BurgeSymbol::Alpha => 'a',
                BurgeSymbol::Beta => 'b',
            })
            .collect()
    }

    pub fn from_compact_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                'a' => Ok(BurgeSymbol::Alpha),
                'b' => Ok(BurgeSymbol::Beta),
                _ => Err(Error::MalformedWord(format!("unknown symbol {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { symbols })
    }

    /// The word without its trailing run of alphas (the appended descent).
    fn strip_trailing_alphas(&self) -> &[BurgeSymbol] {
        let mut end = self.symbols.len();
        while end > 0 && self.symbols[end - 1] == BurgeSymbol::Alpha {
            end -= 1;
        }
        &self.symbols[..end]
    }
}

impl Serialize for BurgeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_compact_string())
    }
}

impl<'de> Deserialize<'de> for BurgeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BurgeWord::from_compact_str(&s).map_err(D::Error::custom)
    }
}

/// Non-overlapping pairs `(j, j+1)` of adjacent frequencies, stored by their
/// bottom index `j`, assigned greedily from the largest part downward with
/// the top member positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    bottoms: Vec<u32>, // descending
}

impl Pairing {
    pub fn bottoms(&self) -> &[u32] {
        &self.bottoms
    }

    /// True iff `(f_0, f_1)` is one of the pairs.
    pub fn has_zero_pair(&self) -> bool {
        self.bottoms.last() == Some(&0)
    }
}

/// Greedy top-down pairing of a frequency table.
pub fn pairing(freq: &FrequencyTable) -> Pairing {
    let mut bottoms = Vec::new();
    let mut v = freq.max_part();
    while v >= 1 {
        if freq.get(v) > 0 {
            bottoms.push(v - 1);
            if v < 2 {
                break;
            }
            v -= 2;
        } else {
            v -= 1;
        }
    }
    Pairing { bottoms }
}

/// The word of a partition: apply alpha/beta with re-pairing until all
/// frequencies vanish. Weight strictly decreases each step; an iteration
/// guard reports the impossible case instead of spinning.
pub fn burge_word(p: &Partition) -> BurgeWord {
    let mut freq = p.frequencies();
    let mut symbols = Vec::new();
    let guard = p.weight() + 1;
    for _ in 0..guard {
        if freq.is_zero() {
            return BurgeWord::new(symbols);
        }
        let pairs = pairing(&freq);
        if pairs.has_zero_pair() {
            // beta: the bottom pair loses one part of size 1, other pairs
            // shift one occurrence downward
            freq.set(1, freq.get(1) - 1);
            for &j in pairs.bottoms() {
                if j >= 2 {
                    shift_down(&mut freq, j);
                }
            }
            symbols.push(BurgeSymbol::Beta);
        } else {
            for &j in pairs.bottoms() {
                shift_down(&mut freq, j);
            }
            symbols.push(BurgeSymbol::Alpha);
        }
    }
    unreachable!("weight strictly decreases at every alpha/beta application");
}

/// `(f_j, f_{j+1}) -> (f_j + 1, f_{j+1} - 1)`.
fn shift_down(freq: &mut FrequencyTable, j: u32) {
    freq.set(j, freq.get(j) + 1);
    freq.set(j + 1, freq.get(j + 1) - 1);
}

/// `(f_j, f_{j+1}) -> (f_j - 1, f_{j+1} + 1)`.
fn shift_up(freq: &mut FrequencyTable, j: u32) {
    freq.set(j, freq.get(j) - 1);
    freq.set(j + 1, freq.get(j + 1) + 1);
}

/// Read a word as a path from `(0, start)`: beta is a northeast step, alpha
/// a southeast step above the axis and a horizontal move on it; the descent
/// needed to reach the axis is appended. Trailing horizontal moves are
/// dropped, matching the canonical form.
pub fn word_to_path(w: &BurgeWord, start: u32) -> Result<LatticePath> {
    if !start.is_multiple_of(2) {
        return Err(Error::InvalidPath(format!("start height {start} is odd")));
    }
    let mut steps = Vec::with_capacity(w.len());
    let mut y = start;
    for &sym in w.symbols() {
        match sym {
            BurgeSymbol::Beta => {
                steps.push(Step::NorthEast);
                y += 1;
            }
            BurgeSymbol::Alpha => {
                if y > 0 {
                    steps.push(Step::SouthEast);
                    y -= 1;
                } else {
                    steps.push(Step::Horizontal);
                }
            }
        }
    }
    for _ in 0..y {
        steps.push(Step::SouthEast);
    }
    while steps.last() == Some(&Step::Horizontal) {
        steps.pop();
    }
    if steps.iter().all(|&s| s != Step::NorthEast) {
        steps.clear();
    }
    LatticePath::new(start, steps)
}

/// Read a path as a word: northeast becomes beta, southeast and horizontal
/// become alpha.
pub fn path_to_word(path: &LatticePath) -> BurgeWord {
    let symbols = path
        .steps()
        .iter()
        .map(|s| match s {
            Step::NorthEast => BurgeSymbol::Beta,
            Step::SouthEast | Step::Horizontal => BurgeSymbol::Alpha,
        })
        .collect();
    BurgeWord::new(symbols)
}

/// Invert a word back to its partition by reverse replay. Trailing alphas
/// act as the identity on the all-zero table. The result is verified by
/// running the forward map; any inconsistency (including a negative
/// frequency during replay) reports the word as malformed.
pub fn burge_inverse(w: &BurgeWord) -> Result<Partition> {
    let mut freq = FrequencyTable::new();
    for &sym in w.symbols().iter().rev() {
        match sym {
            BurgeSymbol::Alpha => {
                for j in inverse_pairing(&freq, 1) {
                    shift_up(&mut freq, j);
                }
            }
            BurgeSymbol::Beta => {
                freq.set(1, freq.get(1) + 1);
                for j in inverse_pairing(&freq, 2) {
                    // the forced (0,1) pair consumed values 0 and 1
                    shift_up(&mut freq, j);
                }
            }
        }
    }
    let p = Partition::from_frequencies(&freq);
    if burge_word(&p).symbols() == w.strip_trailing_alphas() {
        Ok(p)
    } else {
        Err(Error::MalformedWord(format!(
            "word {:?} does not replay to a partition",
            w.to_compact_string()
        )))
    }
}

/// Mirror pairing used by the reverse replay: scan upward from `from` and
/// anchor a pair `(v, v+1)` at every unconsumed positive frequency. For a
/// reversed beta the caller starts at 2, treating `(f_0, f_1)` as consumed.
fn inverse_pairing(freq: &FrequencyTable, from: u32) -> Vec<u32> {
    let mut bottoms = Vec::new();
    let mut v = from;
    let top = freq.max_part();
    while v <= top {
        if freq.get(v) > 0 {
            bottoms.push(v);
            v += 2;
        } else {
            v += 1;
        }
    }
    bottoms
}

/// Exchange two adjacent peaks `(x_j; h_j)`, `(x_{j+1}; h_{j+1})`:
///
/// ```text
/// x'_j = x_{j+1} - 2t,  h'_j = h_{j+1},  x'_{j+1} = x_j + 2t,  h'_{j+1} = h_j,
/// t = min(h_j, h_{j+1})
/// ```
///
/// Weight, the relative-height multiset, and the parity of every position
/// are preserved. Fails if the resulting positions are not strictly
/// increasing.
pub fn shuffle(peaks: &[(u32, u32)], j: usize) -> Result<Vec<(u32, u32)>> {
    if j + 1 >= peaks.len() {
        return Err(Error::Parse(format!(
            "shuffle index {j} out of range for {} peaks",
            peaks.len()
        )));
    }
    let mut out = peaks.to_vec();
    let (xl, hl) = peaks[j];
    let (xr, hr) = peaks[j + 1];
    let t = hl.min(hr);
    let new_left = xr
        .checked_sub(2 * t)
        .filter(|&x| x > 0)
        .ok_or(Error::ShuffleOrder)?;
    out[j] = (new_left, hr);
    out[j + 1] = (xl + 2 * t, hl);
    for w in out.windows(2) {
        if w[0].0 >= w[1].0 {
            return Err(Error::ShuffleOrder);
        }
    }
    Ok(out)
}

/// Peak-pair reading of a K-restricted path: after shuffle preprocessing,
/// each peak `(x; h)` contributes parts through `x = s*h + r`, `0 <= r < h`:
/// `h - r` copies of `s` and `r` copies of `s + 1`. Adjacent assignments
/// whose frequency intervals collide are shuffled, in left-to-right passes
/// repeated to a fixpoint; a pair is exchanged exactly when the exchange
/// strictly lowers its collision score (first resolve broken adjacent
/// frequency sums, then anchors closer than two, which would merge two
/// clusters and lose injectivity). Inside this preprocessing the exchanged
/// positions may cross, which is harmless because only the multiset of
/// `(x; h)` assignments feeds the frequency table. The output is an
/// E-partition of the same weight with every adjacent frequency sum at most
/// `K - 1`; class membership is checked and any violation is reported as a
/// diagnostic error.
pub fn peak_pair_map(path: &LatticePath, k: u32) -> Result<Partition> {
    if !path.validate(k) {
        return Err(Error::InvalidPath(format!(
            "path is not {k}-restricted: {:?}",
            path.steps_string()
        )));
    }
    let mut peaks: Vec<(u64, u64)> = path
        .peaks()
        .iter()
        .map(|p| (u64::from(p.x), u64::from(p.h)))
        .collect();
    let bound = u64::from(k) - 1;
    let max_passes = 4 * peaks.len() * peaks.len() + 4;
    let mut stable = false;
    for _pass in 0..max_passes {
        let mut changed = false;
        for j in 0..peaks.len().saturating_sub(1) {
            let (xl, hl) = peaks[j];
            let (xr, hr) = peaks[j + 1];
            let t = hl.min(hr);
            let Some(new_left) = xr.checked_sub(2 * t).filter(|&x| x > 0) else {
                continue; // nothing to compare; keep the current pair
            };
            let shuffled = ((new_left, hr), (xl + 2 * t, hl));
            if pair_score(shuffled.0, shuffled.1, bound)
                < pair_score(peaks[j], peaks[j + 1], bound)
            {
                peaks[j] = shuffled.0;
                peaks[j + 1] = shuffled.1;
                changed = true;
            }
        }
        if !changed {
            stable = true;
            break;
        }
    }
    if !stable {
        return Err(Error::PeakPairDiagnostic(format!(
            "shuffle passes did not settle on {:?}",
            path.steps_string()
        )));
    }
    let mut freq = FrequencyTable::new();
    for &(x, h) in &peaks {
        let s = x / h;
        let r = x % h;
        if s == 0 {
            return Err(Error::PeakPairDiagnostic(format!(
                "peak assignment ({x};{h}) hits the zero part"
            )));
        }
        freq.set(s as u32, freq.get(s as u32) + h - r);
        if r > 0 {
            freq.set(s as u32 + 1, freq.get(s as u32 + 1) + r);
        }
    }
    let p = Partition::from_frequencies(&freq);
    // class check: odd parts have even multiplicity, adjacent sums bounded
    for v in 1..=freq.max_part() {
        if v % 2 == 1 && !freq.get(v).is_multiple_of(2) {
            return Err(Error::PeakPairDiagnostic(format!(
                "odd part {v} has odd multiplicity in {:?}",
                p.parts()
            )));
        }
        if freq.get(v) + freq.get(v + 1) > u64::from(k) - 1 {
            return Err(Error::PeakPairDiagnostic(format!(
                "adjacent frequencies at {v} exceed K-1 in {:?}",
                p.parts()
            )));
        }
    }
    debug_assert_eq!(p.weight(), path.weight());
    Ok(p)
}

/// How bad an adjacent assignment pair is: first whether the frequencies
/// they contribute jointly break an adjacent-sum bound somewhere, then
/// whether the anchors fail to be separated by at least two (the separation
/// keeps clusters from merging and the reading injective). A pair is
/// shuffled exactly when the exchange strictly lowers this score, so paired
/// states never oscillate.
fn pair_score(left: (u64, u64), right: (u64, u64), bound: u64) -> (bool, bool) {
    let mut contrib: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
    for (x, h) in [left, right] {
        let s = x / h;
        let r = x % h;
        *contrib.entry(s).or_insert(0) += h - r;
        if r > 0 {
            *contrib.entry(s + 1).or_insert(0) += r;
        }
    }
    let violates = contrib
        .iter()
        .any(|(&v, &c)| c + contrib.get(&(v + 1)).copied().unwrap_or(0) > bound);
    let unseparated = right.0 / right.1 < left.0 / left.1 + 2;
    (violates, unseparated)
}

/// Map a K-restricted path from `(0, a)` to the Frobenius symbol with
///
/// ```text
/// o_j even:  s_j = (x_j - y_j + a)/2,      t_j = (x_j + y_j - a - 2)/2
/// o_j odd:   s_j = (x_j + y_j + a - 1)/2,  t_j = (x_j - y_j - a - 1)/2
/// ```
///
/// columns taken right to left so the rows decrease. Each column satisfies
/// `s_j + t_j + 1 = x_j`, so the encoded partition has the weight of the
/// path, and every successive rank is odd.
pub fn path_to_frobenius(path: &LatticePath) -> Result<FrobeniusSymbol> {
    let a = i64::from(path.start());
    let mut s_row = Vec::new();
    let mut t_row = Vec::new();
    for peak in path.peaks().iter().rev() {
        let x = i64::from(peak.x);
        let y = i64::from(peak.y);
        let (s, t) = if peak.o % 2 == 0 {
            ((x - y + a) / 2, (x + y - a - 2) / 2)
        } else {
            ((x + y + a - 1) / 2, (x - y - a - 1) / 2)
        };
        if s < 0 || t < 0 {
            return Err(Error::FrobeniusRowOrder(format!(
                "negative entry from peak ({}, {}, o={})",
                peak.x, peak.y, peak.o
            )));
        }
        debug_assert_eq!(s + t + 1, x, "column sum identity");
        s_row.push(s as u32);
        t_row.push(t as u32);
    }
    FrobeniusSymbol::new(s_row, t_row)
        .map_err(|e| Error::FrobeniusRowOrder(format!("{e}")))
}
