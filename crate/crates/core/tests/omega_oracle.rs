//! Brute-force oracles for the extraction length bounds.

use fepkit::combinatorics::{omega_extract, single_coordinate_bound, sufficient_length, Extraction, Label, NatVecSeq};

fn longest(values: &[usize], rel: fn(usize, usize) -> bool) -> usize {
    let mut best = vec![1; values.len()];
    for j in 0..values.len() {
        for i in 0..j {
            if rel(values[i], values[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn mode(values: &[usize]) -> usize {
    (0..=values.iter().copied().max().unwrap_or(0)).map(|v| values.iter().filter(|&&x| x == v).count()).max().unwrap_or(0)
}

fn pattern(values: &[usize]) -> usize {
    mode(values).max(longest(values, |a, b| a < b)).max(longest(values, |a, b| a > b))
}

/// Longest sequence over `0..v` with every pattern shorter than `t`, by
/// extending sequences one symbol at a time.
fn h(t: usize, v: usize) -> usize {
    fn go(seq: &mut Vec<usize>, t: usize, v: usize) -> usize {
        let mut best = seq.len();
        for x in 0..v {
            seq.push(x);
            if pattern(seq) < t {
                best = best.max(go(seq, t, v));
            }
            seq.pop();
        }
        best
    }
    go(&mut Vec::new(), t, v)
}

#[test]
fn single_coordinate_bound_matches_search() {
    for v in 1..=3 {
        for t in 1..=5 {
            assert_eq!(single_coordinate_bound(t, v), h(t, v), "t = {t}, v = {v}");
        }
    }
    for (t, v, frozen) in [(3, 3, 6), (3, 4, 8), (4, 4, 12)] {
        assert_eq!(h(t, v), frozen);
        assert_eq!(single_coordinate_bound(t, v), frozen);
    }
}

fn has_extraction(seq: &[Vec<usize>], len: usize) -> bool {
    fn go(seq: &[Vec<usize>], chosen: &mut Vec<usize>, from: usize, len: usize) -> bool {
        if chosen.len() == len {
            return true;
        }
        for n in from..seq.len() {
            let ok = chosen.last().map_or(true, |&p| {
                let first = chosen[0];
                (0..seq[n].len()).all(|i| {
                    let kind = |a: usize, b: usize| a.cmp(&b);
                    let want = if chosen.len() == 1 { kind(seq[p][i], seq[n][i]) } else { kind(seq[first][i], seq[chosen[1]][i]) };
                    kind(seq[p][i], seq[n][i]) == want
                })
            });
            if ok {
                chosen.push(n);
                if go(seq, chosen, n + 1, len) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(seq, &mut Vec::new(), 0, len)
}

/// Smallest `n` such that every sequence of `n` tuples over `0..v` has an
/// extraction of length `len`, by exhausting all sequences.
fn minimal_length(k: usize, len: usize, v: usize) -> usize {
    let symbols: Vec<Vec<usize>> = (0..v.pow(k as u32)).map(|c| (0..k).map(|i| c / v.pow(i as u32) % v).collect()).collect();
    let mut n = len;
    loop {
        let s = symbols.len();
        let all_ok = (0..s.pow(n as u32)).all(|code| {
            let seq: Vec<Vec<usize>> = (0..n).map(|i| symbols[code / s.pow(i as u32) % s].clone()).collect();
            has_extraction(&seq, len)
        });
        if all_ok {
            return n;
        }
        n += 1;
    }
}

#[test]
fn one_coordinate_bound_is_minimal() {
    for v in 1..=3 {
        for len in 1..=4 {
            let n = sufficient_length(1, len, v);
            if v.pow(n as u32) <= 600_000 {
                assert_eq!(minimal_length(1, len, v), n, "len {len}, v {v}");
            }
        }
    }
}

#[test]
fn two_coordinate_bounds_against_exhaustive_search() {
    assert_eq!(minimal_length(2, 2, 2), 2);
    assert_eq!(sufficient_length(2, 2, 2), 2);
    assert_eq!(minimal_length(2, 3, 2), 9);
    assert_eq!(sufficient_length(2, 3, 2), 9);
}

#[test]
fn frozen_lengths_for_three_values() {
    let table: Vec<Vec<usize>> = (1..=3).map(|k| (2..=4).map(|len| sufficient_length(k, len, 3)).collect()).collect();
    assert_eq!(table, vec![vec![2, 7, 10], vec![2, 19, 28], vec![2, 55, 82]]);
}

#[test]
fn extraction_at_bound_on_every_short_sequence() {
    // all sequences of pairs over {0,1} at the guaranteed length
    let n = sufficient_length(2, 3, 2);
    for code in 0..4usize.pow(n as u32) {
        let entries = (0..n).map(|i| {
            let c = code / 4usize.pow(i as u32) % 4;
            vec![(c % 2) as u64, (c / 2) as u64]
        });
        let seq = NatVecSeq::new(2, entries.collect()).unwrap();
        match omega_extract(&seq, 3) {
            Extraction::Found { index, labels } => {
                assert!(index.satisfies_invariant());
                for (i, label) in labels.iter().enumerate() {
                    let values: Vec<u64> = index.positions().iter().map(|&p| seq.component(p, i)).collect();
                    assert!(label.holds(&values));
                    assert_ne!(*label, Label::Descending, "two values cannot descend three times");
                }
            }
            Extraction::Insufficient => panic!("insufficient at guaranteed length: {:?}", seq),
        }
    }
}
