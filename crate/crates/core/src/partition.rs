//! Ordinary integer partitions and their classical derived data.
//!
//! Provides:
//! - [`Partition`]: weakly decreasing positive parts
//! - [`FrequencyTable`]: occurrence counts `f_j` with the sentinel `f_0 = 0`
//! - [`FrobeniusSymbol`]: the two strictly decreasing diagonal rows `(s; t)`
//! - [`Partition::conjugate`], [`Partition::frobenius`],
//!   [`Partition::successive_ranks`]
//! - [`for_each_partition`]: exhaustive enumeration of all partitions of `n`
//!
//! The empty partition is a first-class value (`d = 0`, empty rows) so that
//! constant terms of generating functions count it.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part >= 1.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{:?}", parts)));
            }
        }
        if parts.last().is_some_and(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{:?}", parts)));
        }
        Ok(Self { parts })
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

    /// Exact multiplicity of every part value; unlisted values have
    /// frequency 0.
    pub fn frequencies(&self) -> FrequencyTable {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut counts = vec![0u64; max + 1];
        for &p in &self.parts {
            counts[p as usize] += 1;
        }
        FrequencyTable { counts }
    }

    /// Rebuild the partition from a frequency table.
    pub fn from_frequencies(freq: &FrequencyTable) -> Self {
        let mut parts = Vec::new();
        for v in (1..=freq.max_value()).rev() {
            for _ in 0..freq.get(v) {
                parts.push(v);
            }
        }
        Self { parts }
    }

    /// Column counts of the Young diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 1..=cols as u32 {
            parts.push(self.parts.iter().take_while(|&&p| p >= c).count() as u32);
        }
        Partition { parts }
    }

    /// Frobenius representation: `s_i = p_i - i`, `t_i = p'_i - i`, with `d`
    /// the largest index such that `p_d >= d`.
    pub fn frobenius(&self) -> FrobeniusSymbol {
        let conj = self.conjugate();
        let d = (1..=self.parts.len())
            .take_while(|&i| self.parts[i - 1] as usize >= i)
            .count();
        let s = (1..=d).map(|i| self.parts[i - 1] - i as u32).collect();
        let t = (1..=d).map(|i| conj.parts[i - 1] - i as u32).collect();
        FrobeniusSymbol { s, t }
    }

    /// Successive ranks `SR(j) = s_j - t_j` for `j = 1..d`.
    pub fn successive_ranks(&self) -> Vec<i64> {
        let fs = self.frobenius();
        fs.s.iter()
            .zip(&fs.t)
            .map(|(&s, &t)| i64::from(s) - i64::from(t))
            .collect()
    }

    /// Inverse of [`Partition::frobenius`]: rebuild the partition whose
    /// diagonal rows are `(s; t)`.
    pub fn from_frobenius(fs: &FrobeniusSymbol) -> Partition {
        let d = fs.len();
        let mut parts: Vec<u32> = (1..=d).map(|i| fs.s[i - 1] + i as u32).collect();
        // rows below the diagonal block come from the column lengths t_k + k
        let max_row = fs.t.first().map_or(0, |&t| t as usize + 1);
        for r in d + 1..=max_row {
            let count = (1..=d).filter(|&k| fs.t[k - 1] as usize + k >= r).count();
            parts.push(count as u32);
        }
        Partition { parts }
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// Occurrence counts `f_j` of each part value `j >= 1`, with `f_0` fixed at 0
/// as a sentinel (the pairing rules of the Burge correspondence branch on the
/// pair status of `(f_0, f_1)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    /// counts[v] = multiplicity of the part v; counts[0] == 0 always.
    counts: Vec<u64>,
}

impl FrequencyTable {
    pub fn new() -> Self {
        Self { counts: vec![0] }
    }

    pub fn get(&self, value: u32) -> u64 {
        self.counts.get(value as usize).copied().unwrap_or(0)
    }

    pub fn set(&mut self, value: u32, count: u64) {
        let idx = value as usize;
        debug_assert!(idx > 0 || count == 0, "f_0 is a fixed sentinel");
        if idx >= self.counts.len() {
            self.counts.resize(idx + 1, 0);
        }
        self.counts[idx] = count;
    }

    /// Largest value with a recorded (possibly zero) frequency.
    pub fn max_value(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    /// Largest value with a positive frequency, or 0 if all are zero.
    pub fn max_part(&self) -> u32 {
        (0..self.counts.len())
            .rev()
            .find(|&v| self.counts[v] > 0)
            .unwrap_or(0) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Sum of `j * f_j`.
    pub fn weight(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(v, &c)| v as u64 * c)
            .sum()
    }

    /// Sum of `f_j`: the length of the source partition.
    pub fn total_count(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl Default for FrequencyTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Frobenius symbol: two strictly decreasing rows of non-negative integers of
/// a common length `d`. The encoded partition has weight `d + sum(s_j + t_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FrobeniusRaw", into = "FrobeniusRaw")]
pub struct FrobeniusSymbol {
    s: Vec<u32>,
    t: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct FrobeniusRaw {
    s: Vec<u32>,
    t: Vec<u32>,
}

impl From<FrobeniusSymbol> for FrobeniusRaw {
    fn from(fs: FrobeniusSymbol) -> Self {
        FrobeniusRaw { s: fs.s, t: fs.t }
    }
}

impl TryFrom<FrobeniusRaw> for FrobeniusSymbol {
    type Error = Error;
    fn try_from(raw: FrobeniusRaw) -> Result<Self> {
        FrobeniusSymbol::new(raw.s, raw.t)
    }
}

impl FrobeniusSymbol {
    pub fn new(s: Vec<u32>, t: Vec<u32>) -> Result<Self> {
        if s.len() != t.len() {
            return Err(Error::InvalidFrobenius("rows differ in length".into()));
        }
        for row in [&s, &t] {
            for w in row.windows(2) {
                if w[0] <= w[1] {
                    return Err(Error::InvalidFrobenius(format!(
                        "row not strictly decreasing: {:?}",
                        row
                    )));
                }
            }
        }
        Ok(Self { s, t })
    }

    pub fn empty() -> Self {
        Self {
            s: Vec::new(),
            t: Vec::new(),
        }
    }

    /// The common row length `d`.
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    /// Weight of the encoded partition: `d + sum(s_j + t_j)`.
    pub fn weight(&self) -> u64 {
        self.s.len() as u64
            + self
                .s
                .iter()
                .chain(&self.t)
                .map(|&x| u64::from(x))
                .sum::<u64>()
    }

    pub fn successive_ranks(&self) -> Vec<i64> {
        self.s
            .iter()
            .zip(&self.t)
            .map(|(&s, &t)| i64::from(s) - i64::from(t))
            .collect()
    }
}

/// Visit every partition of `n` exactly once, parts in weakly decreasing
/// order. The empty partition is visited for `n = 0`.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u64, mut f: F) {
    let mut parts = Vec::new();
    descend(n, u32::MAX, &mut parts, &mut f);
}

fn descend<F: FnMut(&[u32])>(remaining: u64, max_part: u32, parts: &mut Vec<u32>, f: &mut F) {
    if remaining == 0 {
        f(parts);
        return;
    }
    let top = u64::from(max_part).min(remaining) as u32;
    for p in (1..=top).rev() {
        parts.push(p);
        descend(remaining - u64::from(p), p, parts, f);
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn frequencies_of_worked_example() {
        let freq = p(&[7, 7, 6, 4, 3, 3, 2, 1, 1]).frequencies();
        assert_eq!(freq.get(7), 2);
        assert_eq!(freq.get(6), 1);
        assert_eq!(freq.get(4), 1);
        assert_eq!(freq.get(3), 2);
        assert_eq!(freq.get(2), 1);
        assert_eq!(freq.get(1), 2);
        assert_eq!(freq.get(5), 0);
        assert_eq!(freq.get(0), 0, "sentinel");
        assert_eq!(freq.weight(), 34);
        assert_eq!(freq.total_count(), 9);
    }

    #[test]
    fn frequencies_of_empty_partition_all_zero() {
        let freq = Partition::empty().frequencies();
        assert!(freq.is_zero());
        assert_eq!(freq.get(1), 0);
    }

    #[test]
    fn frequencies_with_multiplicity_four() {
        let freq = p(&[9, 9, 8, 7, 7, 7, 7, 4, 2, 1, 1]).frequencies();
        assert_eq!(freq.get(9), 2);
        assert_eq!(freq.get(8), 1);
        assert_eq!(freq.get(7), 4);
        assert_eq!(freq.get(4), 1);
        assert_eq!(freq.get(2), 1);
        assert_eq!(freq.get(1), 2);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn frobenius_examples() {
        let fs = p(&[1]).frobenius();
        assert_eq!(fs.s(), &[0]);
        assert_eq!(fs.t(), &[0]);
        assert_eq!(fs.len(), 1);

        let fs = p(&[4, 3, 1]).frobenius();
        assert_eq!(fs.s(), &[3, 1]);
        assert_eq!(fs.t(), &[2, 0]);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs.weight(), 8);

        let fs = Partition::empty().frobenius();
        assert_eq!(fs.len(), 0);
        assert_eq!(fs.weight(), 0);
    }

    #[test]
    fn successive_ranks_examples() {
        assert_eq!(p(&[1]).successive_ranks(), vec![0]);
        assert_eq!(p(&[4, 3, 1]).successive_ranks(), vec![1, 1]);
        assert_eq!(p(&[2, 2]).successive_ranks(), vec![0, 0]);
    }

    #[test]
    fn rejects_increasing_or_zero_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![0]).is_err());
    }

    #[test]
    fn enumeration_matches_known_partition_numbers() {
        // p(n) for n = 0..=10
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &want) in expected.iter().enumerate() {
            let mut count = 0;
            for_each_partition(n as u64, |_| count += 1);
            assert_eq!(count, want, "p({})", n);
        }
    }

    #[test]
    fn conjugate_is_an_involution_up_to_weight_30() {
        for n in 0..=30u64 {
            for_each_partition(n, |parts| {
                let q = Partition::new(parts.to_vec()).unwrap();
                assert_eq!(q.conjugate().conjugate(), q);
            });
        }
    }

    #[test]
    fn frobenius_roundtrip_and_weight_identity_up_to_30() {
        for n in 0..=30u64 {
            for_each_partition(n, |parts| {
                let q = Partition::new(parts.to_vec()).unwrap();
                let fs = q.frobenius();
                assert_eq!(fs.weight(), n, "weight identity for {:?}", parts);
                assert_eq!(Partition::from_frobenius(&fs), q);
            });
        }
    }

    #[test]
    fn frequency_table_roundtrip() {
        for n in 0..=20u64 {
            for_each_partition(n, |parts| {
                let q = Partition::new(parts.to_vec()).unwrap();
                assert_eq!(Partition::from_frequencies(&q.frequencies()), q);
            });
        }
    }

    #[test]
    fn json_encoding() {
        let q = p(&[4, 3, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[4,3,1]");
        let back: Partition = serde_json::from_str("[4,3,1]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());

        let fs = q.frobenius();
        assert_eq!(
            serde_json::to_string(&fs).unwrap(),
            r#"{"s":[3,1],"t":[2,0]}"#
        );
        let back: FrobeniusSymbol = serde_json::from_str(r#"{"s":[3,1],"t":[2,0]}"#).unwrap();
        assert_eq!(back, fs);
        assert!(serde_json::from_str::<FrobeniusSymbol>(r#"{"s":[1,3],"t":[2,0]}"#).is_err());
    }
}
