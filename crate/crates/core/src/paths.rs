//! Constrained lattice paths and the path <-> permutation bijection.
//!
//! Paths run from `(0,0)` to `(n-1,k)` over East `(1,0)`, North `(0,1)` and
//! North-East `(1,1)` steps. Within column `j` (the vertical line `x = j`)
//! the number of North steps is at most `j` when the column was entered by
//! an East step, and at most `j-1` when it was entered by a diagonal step;
//! column 0 admits no North steps.
//!
//! A path encodes an overlined permutation column by column: entering
//! column `j` by East appends the value `j+1` at the right end, entering by
//! North-East inserts `j+1` overlined one position from the right end, and
//! every further North step in column `j` moves `j+1` one more position to
//! the left, adding an inversion each time. North and North-East steps
//! together count the inversions, so a path to `(n-1,k)` yields a
//! permutation with exactly `k` of them.
//!
//! Text form: a compact string over `{E, N, D}` with `D` the diagonal step.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{max_inversions, BigNat};
use crate::perm::OverlinedPermutation;

/// One lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    North,
    NorthEast,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
            Step::NorthEast => 'D',
        }
    }
}

/// An unvalidated step sequence; use [`LatticePath::is_valid`] or the free
/// function [`is_valid_path`] to test the column constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, c) in input.chars().enumerate() {
            steps.push(match c {
                'E' | 'e' => Step::East,
                'N' | 'n' => Step::North,
                'D' | 'd' => Step::NorthEast,
                other => {
                    return Err(Error::Parse {
                        position: i + 1,
                        message: format!("expected one of E, N, D, got `{other}`"),
                    })
                }
            });
        }
        Ok(LatticePath { steps })
    }

    /// Endpoint `(n-1, k)` reached from the origin.
    pub fn endpoint(&self) -> (usize, usize) {
        let x = self
            .steps
            .iter()
            .filter(|s| matches!(s, Step::East | Step::NorthEast))
            .count();
        let y = self
            .steps
            .iter()
            .filter(|s| matches!(s, Step::North | Step::NorthEast))
            .count();
        (x, y)
    }

    pub fn is_valid(&self) -> bool {
        is_valid_path(&self.steps)
    }

    /// Vertices visited, starting from `origin`.
    pub fn vertices(&self, origin: (usize, usize)) -> Vec<(usize, usize)> {
        let mut v = vec![origin];
        let (mut x, mut y) = origin;
        for s in &self.steps {
            match s {
                Step::East => x += 1,
                Step::North => y += 1,
                Step::NorthEast => {
                    x += 1;
                    y += 1;
                }
            }
            v.push((x, y));
        }
        v
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// The per-column North budget: `j` after an East entry, `j-1` after a
/// diagonal entry, none in column 0.
pub fn is_valid_path(steps: &[Step]) -> bool {
    let mut column = 0usize;
    let mut norths_in_column = 0usize;
    let mut entered_by_diagonal = false;
    for s in steps {
        match s {
            Step::East => {
                column += 1;
                norths_in_column = 0;
                entered_by_diagonal = false;
            }
            Step::NorthEast => {
                column += 1;
                norths_in_column = 0;
                entered_by_diagonal = true;
            }
            Step::North => {
                norths_in_column += 1;
                let budget = if entered_by_diagonal { column - 1 } else { column };
                if norths_in_column > budget {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of valid paths from `(0,0)` to `(n-1,k)`, by dynamic programming
/// over columns; zero when `k` is out of range.
///
/// `reach[h]` counts valid prefixes that sit at height `h` with the current
/// column's North steps already spent. An East entry into column `j` allows
/// `0..=j` further Norths, a diagonal entry lifts the height by one and
/// allows `0..=j-1`, which windowed prefix sums turn into O(1) per state.
pub fn count_paths(n: usize, k: usize) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::InvalidArgument("count_paths requires n >= 1".into()));
    }
    if k > max_inversions(n) {
        return Ok(BigNat::zero());
    }
    let mut reach = vec![BigNat::zero(); k + 1];
    reach[0] = BigNat::one();
    for j in 1..n {
        // prefix[h+1] = sum of reach[0..=h]
        let mut prefix = vec![BigNat::zero(); k + 2];
        for h in 0..=k {
            prefix[h + 1] = &prefix[h] + &reach[h];
        }
        let window = |hi: i64, len: usize| -> BigNat {
            // sum of reach[max(0, hi-len+1) ..= hi]
            if hi < 0 {
                return BigNat::zero();
            }
            let hi = hi as usize;
            let lo = hi.saturating_sub(len - 1);
            prefix[hi + 1].checked_sub(&prefix[lo]).expect("prefix sums are monotone")
        };
        let mut next = vec![BigNat::zero(); k + 1];
        for (h, slot) in next.iter_mut().enumerate() {
            let east = window(h as i64, j + 1);
            let diagonal = window(h as i64 - 1, j);
            *slot = east + diagonal;
        }
        reach = next;
    }
    Ok(reach[k].clone())
}

/// Every valid path to `(n-1,k)`, in lexicographic step order with
/// `E < N < D`.
pub fn enumerate_paths(n: usize, k: usize, cap: usize) -> Result<Vec<LatticePath>> {
    if n == 0 {
        return Err(Error::InvalidArgument("enumerate_paths requires n >= 1".into()));
    }
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let mut out = Vec::new();
    if k > max_inversions(n) {
        return Ok(out);
    }
    let mut steps = Vec::new();
    walk_paths(n - 1, k, 0, 0, 0, false, &mut steps, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk_paths(
    target_x: usize,
    target_y: usize,
    x: usize,
    y: usize,
    norths_used: usize,
    entered_by_diagonal: bool,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    if x == target_x && y == target_y {
        out.push(LatticePath::new(steps.clone()));
        return;
    }
    // Height still reachable: the current column's leftover budget plus at
    // most j per future column j (entry gain and North steps combined).
    let budget = if entered_by_diagonal { x.saturating_sub(1) } else { x };
    let here = budget.saturating_sub(norths_used);
    let ahead: usize = (x + 1..=target_x).sum();
    if y > target_y || y + here + ahead < target_y {
        return;
    }
    if x < target_x {
        steps.push(Step::East);
        walk_paths(target_x, target_y, x + 1, y, 0, false, steps, out);
        steps.pop();
    }
    if y < target_y && norths_used < budget {
        steps.push(Step::North);
        walk_paths(target_x, target_y, x, y + 1, norths_used + 1, entered_by_diagonal, steps, out);
        steps.pop();
    }
    if x < target_x && y < target_y {
        steps.push(Step::NorthEast);
        walk_paths(target_x, target_y, x + 1, y + 1, 0, true, steps, out);
        steps.pop();
    }
}

/// The permutation read off a valid path, together with the partial word at
/// every vertex. The first element is the single-letter word `1`; the last
/// is the full permutation.
pub fn path_to_perm_trace(path: &LatticePath) -> Result<Vec<OverlinedPermutation>> {
    if !path.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "path {path} violates the column constraint"
        )));
    }
    let mut word = vec![1usize];
    let mut flags = vec![false];
    let mut column = 0usize;
    let mut cursor = 0usize; // index of the current column's value
    let mut trace = Vec::with_capacity(path.steps.len() + 1);
    let snapshot = |word: &[usize], flags: &[bool]| {
        OverlinedPermutation::new(word.to_vec(), flags.to_vec())
            .expect("construction preserves validity")
    };
    trace.push(snapshot(&word, &flags));
    for s in &path.steps {
        match s {
            Step::East => {
                column += 1;
                word.push(column + 1);
                flags.push(false);
                cursor = word.len() - 1;
            }
            Step::NorthEast => {
                column += 1;
                let at = word.len() - 1;
                word.insert(at, column + 1);
                flags.insert(at, true);
                cursor = at;
            }
            Step::North => {
                word.swap(cursor - 1, cursor);
                flags.swap(cursor - 1, cursor);
                cursor -= 1;
            }
        }
        trace.push(snapshot(&word, &flags));
    }
    Ok(trace)
}

/// The permutation associated to a valid path.
pub fn path_to_perm(path: &LatticePath) -> Result<OverlinedPermutation> {
    Ok(path_to_perm_trace(path)?.pop().expect("trace is nonempty"))
}

/// The unique path mapping back to `p` under [`path_to_perm`]: value `j+1`
/// enters column `j` by a diagonal step when overlined (its first
/// inversion) and by an East step otherwise, followed by one North step per
/// remaining inversion it heads.
pub fn perm_to_path(p: &OverlinedPermutation) -> LatticePath {
    let m = p.m_stats();
    let mut steps = Vec::new();
    for j in 1..p.len() {
        let value = j + 1;
        let mut norths = m.m_of_value(value);
        if p.value_overlined(value) {
            steps.push(Step::NorthEast);
            norths -= 1;
        } else {
            steps.push(Step::East);
        }
        steps.extend(std::iter::repeat_n(Step::North, norths));
    }
    LatticePath::new(steps)
}

/// Tail swap of two paths in the standard offset configuration: `p1` starts
/// at `(0,0)`, `p2` at `(0,1)`. The suffixes after the last common vertex
/// are exchanged; applying the operation twice restores the inputs.
pub fn sagan_switch(p1: &LatticePath, p2: &LatticePath) -> Result<(LatticePath, LatticePath)> {
    let v1 = p1.vertices((0, 0));
    let v2 = p2.vertices((0, 1));
    let set1: HashSet<(usize, usize)> = v1.iter().copied().collect();
    // Common vertices appear in the same order along both monotone paths,
    // so the last one along p2 is the last along p1 as well.
    let v0 = v2.iter().rev().find(|v| set1.contains(v));
    let v0 = match v0 {
        Some(v) => *v,
        None => return Err(Error::NoCommonVertex),
    };
    let i1 = v1.iter().position(|&v| v == v0).expect("v0 on p1");
    let i2 = v2.iter().position(|&v| v == v0).expect("v0 on p2");
    let mut s1 = p1.steps[..i1].to_vec();
    s1.extend_from_slice(&p2.steps[i2..]);
    let mut s2 = p2.steps[..i2].to_vec();
    s2.extend_from_slice(&p1.steps[i1..]);
    Ok((LatticePath::new(s1), LatticePath::new(s2)))
}

/// Outcome of the seeded double-application check on random valid pairs.
#[derive(Clone, Debug, Serialize)]
pub struct SaganReport {
    pub n_max: usize,
    pub seed: u64,
    pub pairs_checked: usize,
    pub pairs_skipped_disjoint: usize,
    pub failures: Vec<String>,
}

impl SaganReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Draw random valid path pairs (same `n <= n_max`, independent heights),
/// keep the ones whose vertex sets intersect in the standard configuration,
/// and check that switching twice is the identity on `target_pairs` of them.
pub fn sagan_involution_check(
    n_max: usize,
    target_pairs: usize,
    seed: u64,
    cap: usize,
) -> Result<SaganReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument("sagan_involution_check requires n_max >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pools: Vec<Vec<Vec<LatticePath>>> = Vec::new();
    for n in 0..=n_max.min(cap) {
        let mut rows = Vec::new();
        if n >= 1 {
            for k in 0..=max_inversions(n) {
                rows.push(enumerate_paths(n, k, cap)?);
            }
        }
        pools.push(rows);
    }
    let n_hi = n_max.min(cap);
    let mut report = SaganReport {
        n_max: n_hi,
        seed,
        pairs_checked: 0,
        pairs_skipped_disjoint: 0,
        failures: Vec::new(),
    };
    while report.pairs_checked < target_pairs {
        let n = rng.gen_range(2..=n_hi);
        let rows = &pools[n];
        let pick = |rng: &mut ChaCha8Rng| -> LatticePath {
            loop {
                let k = rng.gen_range(0..rows.len());
                if !rows[k].is_empty() {
                    let i = rng.gen_range(0..rows[k].len());
                    return rows[k][i].clone();
                }
            }
        };
        let p1 = pick(&mut rng);
        let p2 = pick(&mut rng);
        match sagan_switch(&p1, &p2) {
            Err(Error::NoCommonVertex) => {
                report.pairs_skipped_disjoint += 1;
            }
            Err(e) => return Err(e),
            Ok((q1, q2)) => {
                report.pairs_checked += 1;
                let (r1, r2) = sagan_switch(&q1, &q2)?;
                if r1 != p1 || r2 != p2 {
                    report.failures.push(format!(
                        "double switch of ({p1}, {p2}) gave ({r1}, {r2})"
                    ));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::row_by_recurrence;
    use crate::perm::enumerate_bprime;
    use std::collections::HashSet;

    fn path(s: &str) -> LatticePath {
        LatticePath::parse(s).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(path("ENDNDNN").is_valid());
        assert!(!path("N").is_valid());
        assert!(!path("DN").is_valid());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_paths(4, 2).unwrap(), BigNat::from(16u64));
        for n in 1..=8 {
            assert_eq!(count_paths(n, 0).unwrap(), BigNat::one());
        }
        assert_eq!(count_paths(5, 6).unwrap(), BigNat::from(188u64));
        assert_eq!(count_paths(3, 99).unwrap(), BigNat::zero());
    }

    #[test]
    fn count_matches_recurrence_up_to_n25() {
        for n in 1..=25 {
            let row = row_by_recurrence(n).unwrap();
            for (k, want) in row.iter().enumerate() {
                assert_eq!(&count_paths(n, k).unwrap(), want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_paths(4, 2, 8).unwrap().len(), 16);
        let only = enumerate_paths(1, 0, 8).unwrap();
        assert_eq!(only.len(), 1);
        assert!(only[0].steps().is_empty());
        assert_eq!(enumerate_paths(3, 3, 8).unwrap().len(), 4);
        assert!(enumerate_paths(9, 0, 8).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_valid() {
        let paths = enumerate_paths(4, 3, 8).unwrap();
        let rendered: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
        let mut sorted = rendered.clone();
        // E < N < D in the step ordering; the serialized letters E, N, D
        // happen to sort the same way under ASCII 'D' < 'E' < 'N'? They do
        // not, so compare on the step sequences themselves.
        sorted.sort_by_key(|s| {
            s.chars()
                .map(|c| match c {
                    'E' => 0u8,
                    'N' => 1,
                    _ => 2,
                })
                .collect::<Vec<_>>()
        });
        assert_eq!(rendered, sorted);
        assert!(paths.iter().all(|p| p.is_valid()));
        let distinct: HashSet<String> = rendered.into_iter().collect();
        assert_eq!(distinct.len(), paths.len());
    }

    #[test]
    fn figure_path_to_perm() {
        let p = path_to_perm(&path("ENDNDNN")).unwrap();
        assert_eq!(p.to_string(), "4' 3' 2 1");
        let p = path_to_perm(&path("END")).unwrap();
        assert_eq!(p.to_string(), "2 3' 1");
        let p = path_to_perm(&path("EEE")).unwrap();
        assert_eq!(p.to_string(), "1 2 3 4");
        assert!(path_to_perm(&path("NE")).is_err());
    }

    #[test]
    fn figure_trace_step_for_step() {
        let trace = path_to_perm_trace(&path("ENDNDNN")).unwrap();
        let words: Vec<String> = trace.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            ["1", "1 2", "2 1", "2 3' 1", "3' 2 1", "3' 2 4' 1", "3' 4' 2 1", "4' 3' 2 1"]
        );
    }

    #[test]
    fn perm_to_path_examples() {
        let p = OverlinedPermutation::parse("4' 3' 2 1").unwrap();
        assert_eq!(perm_to_path(&p).to_string(), "ENDNDNN");
        let id = OverlinedPermutation::identity(5);
        assert_eq!(perm_to_path(&id).to_string(), "EEEE");
    }

    #[test]
    fn round_trip_exhaustive_up_to_n6() {
        for n in 1..=6 {
            let mut seen = HashSet::new();
            for q in enumerate_bprime(n, 8).unwrap() {
                let p = perm_to_path(&q);
                assert!(p.is_valid());
                assert_eq!(p.endpoint(), (n - 1, q.inversions()));
                assert_eq!(path_to_perm(&p).unwrap(), q);
                seen.insert(p);
            }
            // One path per permutation: the map is injective.
            let total: usize = (0..=max_inversions(n))
                .map(|k| enumerate_paths(n, k, 8).unwrap().len())
                .sum();
            assert_eq!(seen.len(), total);
        }
    }

    #[test]
    fn inversion_preservation() {
        for k in 0..=6 {
            for p in enumerate_paths(4, k, 8).unwrap() {
                assert_eq!(path_to_perm(&p).unwrap().inversions(), k);
            }
        }
    }

    #[test]
    fn sagan_figure_configuration() {
        let p1 = path("ENDD");
        let p2 = path("EEEN");
        let (q1, q2) = sagan_switch(&p1, &p2).unwrap();
        assert_eq!(q1.to_string(), "ENEEN");
        assert_eq!(q2.to_string(), "EDD");
        let (r1, r2) = sagan_switch(&q1, &q2).unwrap();
        assert_eq!((r1, r2), (p1, p2));
    }

    #[test]
    fn sagan_equal_paths_in_offset_configuration() {
        // With the second path shifted up one unit, two copies of EN meet
        // only at (1,1); the tails after it are exchanged, and switching
        // again restores the pair.
        let p = path("EN");
        let (q1, q2) = sagan_switch(&p, &p).unwrap();
        assert_eq!(q1.to_string(), "ENN");
        assert_eq!(q2.to_string(), "E");
        let (r1, r2) = sagan_switch(&q1, &q2).unwrap();
        assert_eq!((r1, r2), (p.clone(), p));
    }

    #[test]
    fn sagan_disjoint_pair_errors() {
        // p1 hugs the floor while p2 rides one unit higher.
        let p1 = path("EEE");
        let p2 = path("EEE");
        assert!(matches!(sagan_switch(&p1, &p2), Err(Error::NoCommonVertex)));
    }

    #[test]
    fn sagan_random_double_application() {
        let report = sagan_involution_check(6, 250, 7, 8).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.pairs_checked, 250);
    }
}
