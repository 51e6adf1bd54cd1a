//! Integer partitions, exponent vectors and skew shapes.
//!
//! Partitions are ordered by size first and then lexicographically, so a
//! `BTreeMap<Partition, _>` iterates from low degree to high degree. Printed
//! expansions walk that order in reverse: decreasing degree, then decreasing
//! lexicographic order within a degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is a regular value and prints as `[]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone())
            .map(|p| p.0 == parts)
            .unwrap_or(false));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-padded 0-based part access.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// The conjugate partition: `λ^T_i = #{k : λ_k ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    /// `true` iff `other_i ≤ self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Parts padded with zeros (or truncated) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n).map(|i| self.part(i)).collect()
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1`, indexed by `i - 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// Union of the parts of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Every part multiplied by `k` (`k ≥ 1`).
    pub fn scaled(&self, k: usize) -> Partition {
        debug_assert!(k > 0);
        Partition(self.0.iter().map(|p| p * k).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Splits `"3,2,1"`, `"[3,2,1]"`, `"[]"` or `""` into integers.
fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .or_else(|| s.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
        .unwrap_or(s)
        .trim();
    if inner.is_empty() || inner == "∅" {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?} in {s:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for building partitions from literals in tests and examples.
/// Panics if the parts are not weakly decreasing.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

/// A nonnegative integer vector of fixed length, not necessarily monotone.
/// Used for exponent vectors such as the index of `h_λ = h_{λ_1} ⋯ h_{λ_ℓ}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<usize>);

impl IntVector {
    pub fn new(entries: Vec<usize>) -> Self {
        IntVector(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        IntVector(p.parts().to_vec())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_joined(f, &self.0)?;
        f.write_str(")")
    }
}

impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(IntVector)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }

    /// Box coordinates `(row, column)`, 0-based, in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
    }

    /// No two boxes in the same column: `λ_i ≥ μ_i ≥ λ_{i+1}` for all `i`.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.inner.part(i) >= self.outer.part(i + 1))
    }

    /// No two boxes in the same row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

pub fn is_horizontal_strip(shape: &SkewShape) -> bool {
    shape.is_horizontal_strip()
}

pub fn is_vertical_strip(shape: &SkewShape) -> bool {
    shape.is_vertical_strip()
}

/// `true` iff `μ ⊆ λ` and `λ/μ` is a horizontal strip.
pub fn is_horizontal_strip_pair(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| mu.part(i) >= lambda.part(i + 1))
}

/// `true` iff `μ ⊆ λ` and `λ/μ` is a vertical strip.
pub fn is_vertical_strip_pair(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1)
}

/// All partitions of `n` with parts at most `max_part` and at most
/// `max_length` parts, in decreasing lexicographic order.
pub fn enumerate_partitions(
    n: usize,
    max_part: Option<usize>,
    max_length: Option<usize>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(
        n,
        max_part.unwrap_or(n).min(n),
        max_length.unwrap_or(n),
        &mut current,
        &mut out,
    );
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 || max_part * slots < remaining {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// All partitions of size at most `max_size`, grouped by increasing size.
pub fn partitions_up_to(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(|n| enumerate_partitions(n, None, None))
}

/// All partitions contained in `outer`, in canonical order.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_sub_partitions(outer, 0, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn fill_sub_partitions(
    outer: &Partition,
    row: usize,
    cap: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition(current.clone()));
    if row >= outer.len() {
        return;
    }
    for p in 1..=outer.part(row).min(cap) {
        current.push(p);
        fill_sub_partitions(outer, row + 1, p, current, out);
        current.pop();
    }
}

/// All nonnegative vectors of length `len` with entries summing to at most
/// `max_size`, sorted.
pub fn int_vectors_up_to(len: usize, max_size: usize) -> Vec<IntVector> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fill_vectors(len, max_size, &mut current, &mut out);
    out.sort();
    out
}

fn fill_vectors(len: usize, budget: usize, current: &mut Vec<usize>, out: &mut Vec<IntVector>) {
    if current.len() == len {
        out.push(IntVector(current.clone()));
        return;
    }
    for x in 0..=budget {
        current.push(x);
        fill_vectors(len, budget - x, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("2,2").transpose(), p("2,2"));
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&p("3,2,1"), &p("2,2")));
        assert!(!contains(&p("3,2,1"), &p("1,1,1,1")));
        assert!(contains(&p("2,1"), &Partition::empty()));
    }

    #[test]
    fn strip_examples() {
        let sk = |a: &str, b: &str| SkewShape::new(p(a), p(b)).unwrap();
        assert!(sk("2,1", "1,1").is_horizontal_strip());
        assert!(!sk("2,2", "1").is_horizontal_strip());
        assert!(sk("4,2", "2,1").is_horizontal_strip());
        assert!(sk("1,1", "[]").is_vertical_strip());
        assert!(!sk("2", "[]").is_vertical_strip());
        assert!(sk("2,2,1", "2,1").is_vertical_strip());
    }

    /// Strip predicates checked against box coordinates directly.
    #[test]
    fn strips_match_box_coordinates() {
        for n in 0..=7 {
            for outer in enumerate_partitions(n, None, None) {
                for inner in sub_partitions(&outer) {
                    let sh = SkewShape::new(outer.clone(), inner).unwrap();
                    let boxes: Vec<_> = sh.boxes().collect();
                    let distinct_cols = boxes
                        .iter()
                        .enumerate()
                        .all(|(a, x)| boxes[a + 1..].iter().all(|y| x.1 != y.1));
                    let distinct_rows = boxes
                        .iter()
                        .enumerate()
                        .all(|(a, x)| boxes[a + 1..].iter().all(|y| x.0 != y.0));
                    assert_eq!(sh.is_horizontal_strip(), distinct_cols, "{sh}");
                    assert_eq!(sh.is_vertical_strip(), distinct_rows, "{sh}");
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_partitions(4, None, None).len(), 5);
        assert_eq!(
            enumerate_partitions(4, Some(3), None),
            vec![p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
        assert_eq!(
            enumerate_partitions(0, None, None),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_partitions(5, None, Some(2)),
            vec![p("5"), p("4,1"), p("3,2")]
        );
    }

    /// Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
            }
            table[i] = sum;
        }
        table[n] as u64
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        for n in 0..=30 {
            let all = enumerate_partitions(n, None, None);
            assert_eq!(all.len() as u64, partition_count(n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[3,2,1]"), p("3,2,1"));
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("3,1,0"), p("3,1"));
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!("2,0,1".parse::<IntVector>().unwrap().entries(), &[2, 0, 1]);
    }

    #[test]
    fn skew_shape_rejects_non_containment() {
        assert!(SkewShape::new(p("2"), p("1,1")).is_err());
    }

    #[test]
    fn canonical_order_is_graded() {
        let mut v = vec![p("1,1,1"), p("3"), p("2"), p("2,1"), Partition::empty()];
        v.sort();
        assert_eq!(
            v,
            vec![Partition::empty(), p("2"), p("1,1,1"), p("2,1"), p("3")]
        );
    }
}
