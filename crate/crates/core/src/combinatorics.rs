//! Finite subsequence extraction for sequences of natural-number tuples.
//!
//! [`omega_extract`] refines a subsequence one coordinate at a time, keeping
//! in each coordinate the longest constant, strictly ascending or strictly
//! descending run, and composes the resulting indices.

use std::collections::HashMap;
use std::fmt;

use crate::error::CombinatoricsError;

/// A finite sequence of `k`-tuples of naturals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatVecSeq {
    k: usize,
    entries: Vec<Vec<u64>>,
}

impl NatVecSeq {
    pub fn new(k: usize, entries: Vec<Vec<u64>>) -> Result<Self, CombinatoricsError> {
        if let Some((index, t)) = entries.iter().enumerate().find(|(_, t)| t.len() != k) {
            return Err(CombinatoricsError::DimensionMismatch { index, found: t.len(), expected: k });
        }
        Ok(NatVecSeq { k, entries })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn component(&self, n: usize, i: usize) -> u64 {
        self.entries[n][i]
    }
}

/// Strictly increasing 0-based positions `σ(0) < σ(1) < ...`; hence
/// `n ≤ σ(n)` holds for every `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubseqIndex(Vec<usize>);

impl SubseqIndex {
    pub fn new(positions: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if let Some(w) = positions.windows(2).find(|w| w[0] >= w[1]) {
            return Err(CombinatoricsError::InvalidIndex(format!("{} is not below {}", w[0], w[1])));
        }
        Ok(SubseqIndex(positions))
    }

    pub fn identity(len: usize) -> Self {
        SubseqIndex((0..len).collect())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> usize {
        self.0[n]
    }

    /// Keeps the first `len` positions.
    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn satisfies_invariant(&self) -> bool {
        self.0.iter().enumerate().all(|(n, &s)| n <= s) && self.0.windows(2).all(|w| w[0] < w[1])
    }
}

/// `(σ₁ ∘ σ₂)(n) = σ₁(σ₂(n))`
pub fn compose_indices(s1: &SubseqIndex, s2: &SubseqIndex) -> Result<SubseqIndex, CombinatoricsError> {
    let positions = s2
        .0
        .iter()
        .map(|&p| {
            s1.0.get(p)
                .copied()
                .ok_or(CombinatoricsError::RangeError { position: p, len: s1.len() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubseqIndex(positions))
}

/// Behaviour of one coordinate along an extracted subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Constant,
    Ascending,
    Descending,
}

impl Label {
    pub fn holds(self, values: &[u64]) -> bool {
        values.windows(2).all(|w| match self {
            Label::Constant => w[0] == w[1],
            Label::Ascending => w[0] < w[1],
            Label::Descending => w[0] > w[1],
        })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Constant => "constant",
            Label::Ascending => "ascending",
            Label::Descending => "descending",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    Found { index: SubseqIndex, labels: Vec<Label> },
    Insufficient,
}

impl Extraction {
    pub fn is_found(&self) -> bool {
        matches!(self, Extraction::Found { .. })
    }
}

/// Extracts `len` positions along which each coordinate is constant,
/// strictly ascending or strictly descending.
///
/// Coordinates are handled in order. For each, the longest of the three
/// patterns among the surviving positions is kept, preferring constant, then
/// ascending, then descending; the final index is cut to `len`.
pub fn omega_extract(seq: &NatVecSeq, len: usize) -> Extraction {
    let mut current = SubseqIndex::identity(seq.len());
    let mut labels = Vec::with_capacity(seq.dimension());
    for i in 0..seq.dimension() {
        let values: Vec<u64> = current.0.iter().map(|&n| seq.component(n, i)).collect();
        let (label, picked) = best_pattern(&values);
        if picked.len() < len {
            return Extraction::Insufficient;
        }
        current = compose_indices(&current, &SubseqIndex(picked)).expect("picked positions are in range");
        labels.push(label);
    }
    if current.len() < len {
        return Extraction::Insufficient;
    }
    current.truncate(len);
    Extraction::Found { index: current, labels }
}

fn best_pattern(values: &[u64]) -> (Label, Vec<usize>) {
    let constant = longest_constant(values);
    let ascending = longest_strict(values, |a, b| a < b);
    let descending = longest_strict(values, |a, b| a > b);
    let mut best = (Label::Constant, constant);
    for candidate in [(Label::Ascending, ascending), (Label::Descending, descending)] {
        if candidate.1.len() > best.1.len() {
            best = candidate;
        }
    }
    best
}

/// Positions of the most frequent value, the smallest such value on ties.
fn longest_constant(values: &[u64]) -> Vec<usize> {
    let mut counts: HashMap<u64, usize> = HashMap::new();
    for &v in values {
        *counts.entry(v).or_default() += 1;
    }
    let Some(target) = counts.iter().map(|(&v, &c)| (std::cmp::Reverse(c), v)).min().map(|p| p.1) else {
        return Vec::new();
    };
    (0..values.len()).filter(|&n| values[n] == target).collect()
}

/// A longest subsequence related pairwise by `rel`, ending as early as
/// possible and taking the earliest predecessor at each step.
fn longest_strict(values: &[u64], rel: impl Fn(u64, u64) -> bool) -> Vec<usize> {
    let n = values.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            if rel(values[i], values[j]) && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
                prev[j] = i;
            }
        }
    }
    let top = *best.iter().max().unwrap();
    let mut j = best.iter().position(|&b| b == top).unwrap();
    let mut out = vec![j];
    while prev[j] != usize::MAX {
        j = prev[j];
        out.push(j);
    }
    out.reverse();
    out
}

/// Longest sequence over `0..values` whose most frequent value, longest
/// strictly ascending and longest strictly descending subsequence all have
/// length below `t`. One coordinate always yields `t` positions once the
/// sequence is longer than this.
pub fn single_coordinate_bound(t: usize, values: usize) -> usize {
    if t == 0 || values == 0 {
        return 0;
    }
    if t > values {
        // monotone runs cannot exceed `values`, so only repetition limits
        return values * (t - 1);
    }
    let mut state = vec![0u8; 3 * values];
    let mut memo = HashMap::new();
    longest_avoiding(&mut state, t as u8, values, &mut memo)
}

// state per value v: count, longest ascending ending at v, longest descending ending at v
fn longest_avoiding(state: &mut Vec<u8>, t: u8, values: usize, memo: &mut HashMap<Vec<u8>, usize>) -> usize {
    if let Some(&r) = memo.get(state.as_slice()) {
        return r;
    }
    let mut best = 0;
    for x in 0..values {
        let count = state[3 * x] + 1;
        let asc = 1 + (0..x).map(|u| state[3 * u + 1]).max().unwrap_or(0);
        let desc = 1 + (x + 1..values).map(|u| state[3 * u + 2]).max().unwrap_or(0);
        if count >= t || asc >= t || desc >= t {
            continue;
        }
        let saved = (state[3 * x], state[3 * x + 1], state[3 * x + 2]);
        state[3 * x] = count;
        state[3 * x + 1] = saved.1.max(asc);
        state[3 * x + 2] = saved.2.max(desc);
        best = best.max(1 + longest_avoiding(state, t, values, memo));
        (state[3 * x], state[3 * x + 1], state[3 * x + 2]) = saved;
    }
    memo.insert(state.clone(), best);
    best
}

/// A length at which [`omega_extract`] always finds `len` positions in any
/// sequence of `k`-tuples with components below `values`.
pub fn sufficient_length(k: usize, len: usize, values: usize) -> usize {
    (0..k).fold(len, |need, _| single_coordinate_bound(need, values) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(k: usize, rows: &[&[u64]]) -> NatVecSeq {
        NatVecSeq::new(k, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn constant_sequence() {
        let s = seq(2, &[&[4, 1], &[4, 1], &[4, 1], &[4, 1]]);
        assert_eq!(
            omega_extract(&s, 3),
            Extraction::Found { index: SubseqIndex::identity(3), labels: vec![Label::Constant; 2] }
        );
    }

    #[test]
    fn ascending_sequence() {
        let s = NatVecSeq::new(1, (1..=6).map(|v| vec![v]).collect()).unwrap();
        assert_eq!(
            omega_extract(&s, 4),
            Extraction::Found { index: SubseqIndex::identity(4), labels: vec![Label::Ascending] }
        );
        assert_eq!(omega_extract(&s, 7), Extraction::Insufficient);
    }

    #[test]
    fn descending_is_a_finite_label() {
        let s = seq(1, &[&[5], &[3], &[3], &[1]]);
        match omega_extract(&s, 3) {
            Extraction::Found { index, labels } => {
                assert_eq!(labels, vec![Label::Descending]);
                assert_eq!(index.positions(), &[0, 1, 3]);
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn composition() {
        let double = SubseqIndex::new((0..10).map(|n| 2 * n).collect()).unwrap();
        let shift = SubseqIndex::new((1..6).collect()).unwrap();
        let c = compose_indices(&double, &shift).unwrap();
        assert_eq!(c.positions(), &[2, 4, 6, 8, 10]);
        assert!(c.satisfies_invariant());
        assert_eq!(compose_indices(&double, &SubseqIndex::identity(10)).unwrap(), double);
        let far = SubseqIndex::new(vec![3, 12]).unwrap();
        assert_eq!(
            compose_indices(&double, &far),
            Err(CombinatoricsError::RangeError { position: 12, len: 10 })
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SubseqIndex::new(vec![0, 0]).is_err());
        assert!(NatVecSeq::new(2, vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(single_coordinate_bound(2, 3), 1);
        assert_eq!(single_coordinate_bound(4, 3), 9);
        assert_eq!(sufficient_length(3, 4, 3), 82);
        assert_eq!(sufficient_length(2, 3, 2), 9);
    }
}
