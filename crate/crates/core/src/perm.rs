//! Overlined permutations: the decorated words counted by the triangle.
//!
//! An overlined permutation of length `n` is a permutation of `{1,...,n}` in
//! one-line notation in which any position that heads at least one inversion
//! (some smaller value appears later) may independently carry an overline
//! mark. In particular the last position is never overlinable.
//!
//! Text form: space-separated decimal values, an overlined value suffixed
//! with a single apostrophe, e.g. `3' 2' 4' 5' 1`. Parsing also accepts a
//! `~` prefix (`~3`) for shell friendliness.
//!
//! This module is also the enumeration oracle for the rest of the crate:
//! [`enumerate_bprime`] streams every valid decorated word, and
//! [`count_by_enumeration`] counts them by inversion number.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::numbers::BigNat;

/// Default cap on brute-force enumeration, overridable by callers.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Does position `pos` of `word` head an inversion (a smaller value later)?
pub fn heads_inversion(word: &[usize], pos: usize) -> bool {
    word[pos + 1..].iter().any(|&v| v < word[pos])
}

fn check_is_permutation(word: &[usize]) -> Result<()> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for &v in word {
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidArgument(format!(
                "word {word:?} is not a permutation of 1..={n}"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Validity of a raw (word, flags) pair: every overlined position must head
/// at least one inversion. A non-permutation word is an error rather than
/// `false`.
pub fn is_valid(word: &[usize], overlined: &[bool]) -> Result<bool> {
    check_is_permutation(word)?;
    if overlined.len() != word.len() {
        return Err(Error::InvalidArgument(format!(
            "flag vector length {} does not match word length {}",
            overlined.len(),
            word.len()
        )));
    }
    Ok(overlined
        .iter()
        .enumerate()
        .all(|(pos, &f)| !f || heads_inversion(word, pos)))
}

/// A validated overlined permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlinedPermutation {
    word: Vec<usize>,
    overlined: Vec<bool>,
}

impl OverlinedPermutation {
    pub fn new(word: Vec<usize>, overlined: Vec<bool>) -> Result<Self> {
        if !is_valid(&word, &overlined)? {
            let bad = overlined
                .iter()
                .enumerate()
                .find(|&(pos, &f)| f && !heads_inversion(&word, pos))
                .map(|(pos, _)| pos)
                .expect("some flag is invalid");
            return Err(Error::InvalidArgument(format!(
                "position {} (value {}) is overlined but heads no inversion",
                bad + 1,
                word[bad]
            )));
        }
        Ok(OverlinedPermutation { word, overlined })
    }

    /// A plain (flag-free) permutation.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        Self::new(word, vec![false; n])
    }

    pub fn identity(n: usize) -> Self {
        OverlinedPermutation {
            word: (1..=n).collect(),
            overlined: vec![false; n],
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn flags(&self) -> &[bool] {
        &self.overlined
    }

    pub fn position_of(&self, value: usize) -> usize {
        self.word.iter().position(|&v| v == value).expect("value in word")
    }

    pub fn value_overlined(&self, value: usize) -> bool {
        self.overlined[self.position_of(value)]
    }

    /// Number of index pairs `i < j` with `word[i] > word[j]`. Overline
    /// flags do not affect the count.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn m_stats(&self) -> MStats {
        MStats::of_word(&self.word)
    }

    /// Parse the apostrophe/tilde text form.
    pub fn parse(input: &str) -> Result<Self> {
        let mut word = Vec::new();
        let mut flags = Vec::new();
        for (idx, token) in input.split_whitespace().enumerate() {
            let position = idx + 1;
            let (core, flagged) = if let Some(rest) = token.strip_prefix('~') {
                (rest, true)
            } else if let Some(rest) = token.strip_suffix('\'') {
                (rest, true)
            } else {
                (token, false)
            };
            let value: usize = core.parse().map_err(|_| Error::Parse {
                position,
                message: format!("expected a value like `3`, `3'` or `~3`, got `{token}`"),
            })?;
            word.push(value);
            flags.push(flagged);
        }
        if word.is_empty() {
            return Err(Error::Parse {
                position: 1,
                message: "empty permutation".to_string(),
            });
        }
        // Invalid words or flags keep their own diagnostics, which already
        // name the offending position.
        Self::new(word, flags)
    }
}

impl fmt::Display for OverlinedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &flag) in self.word.iter().zip(&self.overlined) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{v}")?;
            if flag {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// Per-value inversion-heading counts. `values()[i]` is the number of
/// inversions whose first element is the entry of value `i + 1`; the sum
/// over all indices is the inversion count of the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStats {
    m: Vec<usize>,
}

impl MStats {
    pub fn of_word(word: &[usize]) -> Self {
        let n = word.len();
        let mut m = vec![0; n];
        for (i, &v) in word.iter().enumerate() {
            m[v - 1] = word[i + 1..].iter().filter(|&&u| u < v).count();
        }
        MStats { m }
    }

    pub fn values(&self) -> &[usize] {
        &self.m
    }

    /// 1-based lookup: how many inversions the entry of value `v` heads.
    pub fn m_of_value(&self, v: usize) -> usize {
        self.m[v - 1]
    }

    pub fn total(&self) -> usize {
        self.m.iter().sum()
    }

    /// `sum_{i >= lo} m[i]` over 0-based indices.
    pub fn suffix_sum(&self, lo: usize) -> usize {
        if lo >= self.m.len() {
            0
        } else {
            self.m[lo..].iter().sum()
        }
    }
}

/// The reversal `w'[i] = w[n+1-i]` of a plain word. An involution; a word
/// with `k` inversions reverses to one with `n(n-1)/2 - k`.
pub fn backward(word: &[usize]) -> Vec<usize> {
    word.iter().rev().copied().collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    Ok(())
}

/// Stream every valid overlined permutation of length `n` exactly once, in
/// lexicographic order of the word and then of the flag vector read as a
/// binary numeral with position 0 most significant.
pub fn enumerate_bprime(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = OverlinedPermutation>> {
    if n == 0 {
        return Err(Error::InvalidArgument("enumerate_bprime requires n >= 1".into()));
    }
    check_cap(n, cap)?;
    let iter = (1..=n).permutations(n).flat_map(move |word| {
        let heads: Vec<usize> = (0..n).filter(|&p| heads_inversion(&word, p)).collect();
        let f = heads.len();
        (0..1usize << f).map(move |mask| {
            let mut flags = vec![false; n];
            for (i, &p) in heads.iter().enumerate() {
                if mask >> (f - 1 - i) & 1 == 1 {
                    flags[p] = true;
                }
            }
            OverlinedPermutation { word: word.clone(), overlined: flags }
        })
    });
    Ok(iter)
}

/// Brute-force count of overlined permutations of length `n` with exactly
/// `k` inversions.
///
/// Walks plain words only and weights each by `2^d`, where `d` is the number
/// of positions heading at least one inversion; the valid flag vectors of a
/// word are exactly the subsets of those positions.
pub fn count_by_enumeration(n: usize, k: usize, cap: usize) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::InvalidArgument("count_by_enumeration requires n >= 1".into()));
    }
    check_cap(n, cap)?;
    let mut total = BigNat::zero();
    for word in (1..=n).permutations(n) {
        let mut inv = 0;
        for i in 0..n {
            inv += word[i + 1..].iter().filter(|&&u| u < word[i]).count();
        }
        if inv == k {
            let d = (0..n).filter(|&p| heads_inversion(&word, p)).count();
            total += &BigNat::pow2(d);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{double_factorial, max_inversions, row_by_recurrence};
    use std::collections::BTreeSet;

    fn p(s: &str) -> OverlinedPermutation {
        OverlinedPermutation::parse(s).unwrap()
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(OverlinedPermutation::identity(6).inversions(), 0);
        assert_eq!(p("4' 3' 2 1").inversions(), 6);
        assert_eq!(p("3' 2' 4' 5' 1").inversions(), 5);
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid(&[1, 3, 2], &[false, true, false]).unwrap());
        assert!(!is_valid(&[1, 2, 3], &[true, false, false]).unwrap());
        // The last position never heads an inversion.
        assert!(!is_valid(&[3, 2, 1], &[false, false, true]).unwrap());
        assert!(is_valid(&[1, 2], &[false, false, false]).is_err());
        assert!(is_valid(&[1, 1, 2], &[false, false, false]).is_err());
    }

    #[test]
    fn enumerate_b3_matches_published_listing() {
        let listed = [
            "1 2 3", "1 3 2", "1 3' 2", "2 1 3", "2' 1 3", "2 3 1", "2' 3 1",
            "2 3' 1", "2' 3' 1", "3 1 2", "3' 1 2", "3 2 1", "3' 2 1", "3 2' 1",
            "3' 2' 1",
        ];
        let want: BTreeSet<String> = listed.iter().map(|s| p(s).to_string()).collect();
        let got: BTreeSet<String> = enumerate_bprime(3, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(got, want);
        assert_eq!(got.len(), 15);
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let first: Vec<String> = enumerate_bprime(3, 8)
            .unwrap()
            .map(|q| q.to_string())
            .take(6)
            .collect();
        // Word-major, then flag masks with position 0 most significant.
        assert_eq!(first, ["1 2 3", "1 3 2", "1 3' 2", "2 1 3", "2' 1 3", "2 3 1"]);
    }

    #[test]
    fn enumeration_count_is_double_factorial() {
        for n in 1..=5 {
            let count = enumerate_bprime(n, 8).unwrap().count() as u64;
            assert_eq!(BigNat::from(count), double_factorial(2 * n as u64 - 1).unwrap());
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = enumerate_bprime(9, 8).map(|_| ()).unwrap_err();
        assert!(err.to_string().contains("cap of 8"));
        assert!(count_by_enumeration(9, 1, 8).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_by_enumeration(3, 2, 8).unwrap(), BigNat::from(6u64));
        assert_eq!(count_by_enumeration(4, 3, 8).unwrap(), BigNat::from(26u64));
        assert_eq!(count_by_enumeration(5, 10, 8).unwrap(), BigNat::pow2(4));
    }

    #[test]
    fn weighted_count_matches_full_flag_enumeration() {
        // The 2^d shortcut vs. walking every decorated word.
        for n in 1..=5 {
            let mut by_inv = vec![0u64; max_inversions(n) + 1];
            for q in enumerate_bprime(n, 8).unwrap() {
                by_inv[q.inversions()] += 1;
            }
            for (k, &full) in by_inv.iter().enumerate() {
                assert_eq!(
                    count_by_enumeration(n, k, 8).unwrap(),
                    BigNat::from(full),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn oracle_matches_triangle() {
        for n in 1..=6 {
            let row = row_by_recurrence(n).unwrap();
            for (k, want) in row.iter().enumerate() {
                assert_eq!(&count_by_enumeration(n, k, 8).unwrap(), want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn m_stats_examples() {
        let m = p("3' 2' 4' 5' 1").m_stats();
        assert_eq!(m.values(), &[0, 1, 2, 1, 1]);
        assert_eq!(m.m_of_value(3), 2);
        let m = p("1 2 5' 4' 3").m_stats();
        assert_eq!(m.values(), &[0, 0, 0, 1, 2]);
        assert_eq!(MStats::of_word(&[1, 2, 3, 4]).total(), 0);
    }

    #[test]
    fn m_stats_bounds_hold_on_b5() {
        for q in enumerate_bprime(5, 8).unwrap() {
            let m = q.m_stats();
            assert_eq!(m.total(), q.inversions());
            for (i, &mi) in m.values().iter().enumerate() {
                assert!(mi <= i);
            }
        }
    }

    #[test]
    fn backward_examples() {
        assert_eq!(backward(&[1, 2, 3]), vec![3, 2, 1]);
        let w = [2, 4, 3, 1];
        let inv = OverlinedPermutation::from_word(w.to_vec()).unwrap().inversions();
        let binv = OverlinedPermutation::from_word(backward(&w)).unwrap().inversions();
        assert_eq!(inv, 4);
        assert_eq!(binv, max_inversions(4) - inv);
        assert_eq!(backward(&backward(&w)), w.to_vec());
    }

    #[test]
    fn top_inversion_class_is_flagged_reversals() {
        // Words with the maximal inversion count are exactly the flag
        // variants of n, n-1, ..., 1: there are 2^{n-1} of them.
        for n in 2..=5 {
            let top: Vec<OverlinedPermutation> = enumerate_bprime(n, 8)
                .unwrap()
                .filter(|q| q.inversions() == max_inversions(n))
                .collect();
            assert_eq!(top.len(), 1 << (n - 1));
            let reversal: Vec<usize> = (1..=n).rev().collect();
            assert!(top.iter().all(|q| q.word() == reversal.as_slice()));
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3' 2' 4' 5' 1", "1 2 3", "2 3' 1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(OverlinedPermutation::parse("~3 2 1").unwrap().to_string(), "3' 2 1");
        let err = OverlinedPermutation::parse("1 x 2").unwrap_err();
        assert!(matches!(err, Error::Parse { position: 2, .. }));
        assert!(OverlinedPermutation::parse("1' 2 3").is_err());
    }
}
