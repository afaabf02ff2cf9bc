//! Restricted overpartitions and their correspondence with lattice paths.
//!
//! The class counted here: multisets of parts from `1..=n-1` with exactly
//! `k` parts in total, where at most one copy of each value is overlined, a
//! value `j` may carry up to `j` plain copies when not overlined and up to
//! `j-1` plain copies besides the overlined one. Part weights are not
//! constrained.
//!
//! Under the path correspondence, a North step in column `j` contributes a
//! plain part `j` and a diagonal step into column `j` contributes the
//! overlined part `j`.
//!
//! Text form: parts descending inside parentheses, the overlined copy first
//! among equals and suffixed with an apostrophe, e.g. `(3', 3)`; the empty
//! overpartition is `()`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{LatticePath, Step};

/// Plain multiplicity and overline flag for one part value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartMultiplicity {
    pub plain: usize,
    pub overlined: bool,
}

/// A restricted overpartition, stored per part value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overpartition {
    entries: BTreeMap<usize, PartMultiplicity>,
}

impl Overpartition {
    pub fn empty() -> Self {
        Overpartition { entries: BTreeMap::new() }
    }

    /// Build from `(value, overlined)` copies; at most one overlined copy
    /// per value.
    pub fn from_parts<I: IntoIterator<Item = (usize, bool)>>(parts: I) -> Result<Self> {
        let mut entries: BTreeMap<usize, PartMultiplicity> = BTreeMap::new();
        for (value, overlined) in parts {
            if value == 0 {
                return Err(Error::InvalidArgument("parts must be positive".into()));
            }
            let e = entries.entry(value).or_default();
            if overlined {
                if e.overlined {
                    return Err(Error::InvalidArgument(format!(
                        "part {value} carries more than one overline"
                    )));
                }
                e.overlined = true;
            } else {
                e.plain += 1;
            }
        }
        Ok(Overpartition { entries })
    }

    pub fn num_parts(&self) -> usize {
        self.entries
            .values()
            .map(|e| e.plain + usize::from(e.overlined))
            .sum()
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn multiplicity(&self, value: usize) -> PartMultiplicity {
        self.entries.get(&value).copied().unwrap_or_default()
    }

    /// Copies in canonical order: descending by value, the overlined copy
    /// before plain copies of the same value.
    pub fn parts(&self) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for (&value, e) in self.entries.iter().rev() {
            if e.overlined {
                out.push((value, true));
            }
            out.extend(std::iter::repeat_n((value, false), e.plain));
        }
        out
    }

    /// Multiplicity bounds, largest part at most `n-1`, exactly `k` parts.
    pub fn is_valid_for(&self, n: usize, k: usize) -> bool {
        if self.num_parts() != k {
            return false;
        }
        if self.largest_part().unwrap_or(0) + 1 > n {
            return false;
        }
        self.entries.iter().all(|(&j, e)| {
            if e.overlined {
                e.plain < j
            } else {
                e.plain <= j
            }
        })
    }

    /// Parse the canonical text form, e.g. `(3', 3)` or `()`.
    pub fn parse(input: &str) -> Result<Self> {
        let inner = input
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                position: 1,
                message: "overpartition must be parenthesized, e.g. (3', 3)".into(),
            })?;
        let mut parts = Vec::new();
        for (idx, raw) in inner.split(',').enumerate() {
            let token = raw.trim();
            if token.is_empty() {
                if inner.trim().is_empty() && idx == 0 {
                    break;
                }
                return Err(Error::Parse {
                    position: idx + 1,
                    message: "empty part".into(),
                });
            }
            let (core, flagged) = match token.strip_suffix('\'') {
                Some(rest) => (rest, true),
                None => (token, false),
            };
            let value: usize = core.parse().map_err(|_| Error::Parse {
                position: idx + 1,
                message: format!("expected a part like `3` or `3'`, got `{token}`"),
            })?;
            parts.push((value, flagged));
        }
        Self::from_parts(parts)
    }

    fn sort_key(&self) -> Vec<(usize, bool)> {
        // Descending values first; overlined before plain at equal value.
        self.parts()
            .into_iter()
            .map(|(v, over)| (usize::MAX - v, !over))
            .collect()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (value, over)) in self.parts().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{value}")?;
            if over {
                write!(f, "'")?;
            }
        }
        write!(f, ")")
    }
}

impl PartialOrd for Overpartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Overpartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// Every valid overpartition for `(n, k)`, in canonical order.
pub fn enumerate_overpartitions(n: usize, k: usize, cap: usize) -> Result<Vec<Overpartition>> {
    if n == 0 {
        return Err(Error::InvalidArgument("enumerate_overpartitions requires n >= 1".into()));
    }
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, PartMultiplicity)> = Vec::new();
    descend(n - 1, k, &mut chosen, &mut out);
    out.sort();
    return Ok(out);

    fn descend(
        value: usize,
        parts_left: usize,
        chosen: &mut Vec<(usize, PartMultiplicity)>,
        out: &mut Vec<Overpartition>,
    ) {
        if value == 0 {
            if parts_left == 0 {
                out.push(Overpartition {
                    entries: chosen.iter().copied().collect(),
                });
            }
            return;
        }
        for overlined in [false, true] {
            let max_plain = if overlined { value - 1 } else { value };
            for plain in 0..=max_plain.min(parts_left) {
                let used = plain + usize::from(overlined);
                if used > parts_left {
                    continue;
                }
                if used == 0 {
                    descend(value - 1, parts_left, chosen, out);
                } else {
                    chosen.push((value, PartMultiplicity { plain, overlined }));
                    descend(value - 1, parts_left - used, chosen, out);
                    chosen.pop();
                }
            }
        }
    }
}

/// Read the overpartition off a valid path: plain part `j` per North step
/// in column `j`, overlined part `j` per diagonal step into column `j`.
pub fn path_to_overpartition(path: &LatticePath) -> Result<Overpartition> {
    if !path.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "path {path} violates the column constraint"
        )));
    }
    let mut parts = Vec::new();
    let mut column = 0usize;
    for s in path.steps() {
        match s {
            Step::East => column += 1,
            Step::NorthEast => {
                column += 1;
                parts.push((column, true));
            }
            Step::North => parts.push((column, false)),
        }
    }
    Overpartition::from_parts(parts)
}

/// The unique valid path for `(n, number of parts)` mapping to `q`.
pub fn overpartition_to_path(q: &Overpartition, n: usize) -> Result<LatticePath> {
    let k = q.num_parts();
    if !q.is_valid_for(n, k) {
        return Err(Error::InvalidArgument(format!(
            "{q} is not a valid overpartition for n = {n}"
        )));
    }
    let mut steps = Vec::new();
    for j in 1..n {
        let m = q.multiplicity(j);
        steps.push(if m.overlined { Step::NorthEast } else { Step::East });
        steps.extend(std::iter::repeat_n(Step::North, m.plain));
    }
    Ok(LatticePath::new(steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{row_by_recurrence, BigNat};
    use crate::paths::enumerate_paths;

    fn op(s: &str) -> Overpartition {
        Overpartition::parse(s).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(op("(3, 3)").is_valid_for(4, 2));
        assert!(op("(3', 3)").is_valid_for(4, 2));
        assert!(!op("(1', 1)").is_valid_for(4, 2));
        assert!(op("()").is_valid_for(4, 0));
        assert!(!op("(3, 3)").is_valid_for(3, 2)); // largest part must be <= n-1
    }

    #[test]
    fn figure_class_for_n4_k2() {
        let want = [
            "(3', 3)", "(3', 2')", "(3', 2)", "(3', 1')", "(3', 1)", "(3, 3)",
            "(3, 2')", "(3, 2)", "(3, 1')", "(3, 1)", "(2', 2)", "(2', 1')",
            "(2', 1)", "(2, 2)", "(2, 1')", "(2, 1)",
        ];
        let got: Vec<String> = enumerate_overpartitions(4, 2, 8)
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn enumeration_boundaries() {
        let empty = enumerate_overpartitions(5, 0, 8).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0], Overpartition::empty());
        assert_eq!(enumerate_overpartitions(3, 3, 8).unwrap().len(), 4);
        assert!(enumerate_overpartitions(9, 1, 8).is_err());
    }

    #[test]
    fn counts_match_triangle() {
        for n in 1..=6 {
            let row = row_by_recurrence(n).unwrap();
            for (k, want) in row.iter().enumerate() {
                let got = enumerate_overpartitions(n, k, 8).unwrap().len();
                assert_eq!(&BigNat::from(got), want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn part_bound_holds_in_enumeration() {
        for q in enumerate_overpartitions(5, 4, 8).unwrap() {
            for (j, m) in (1..5).map(|j| (j, q.multiplicity(j))) {
                if m.overlined {
                    assert!(m.plain < j);
                } else {
                    assert!(m.plain <= j);
                }
            }
        }
    }

    #[test]
    fn path_correspondence_examples() {
        let p = LatticePath::parse("ENENE").unwrap();
        assert_eq!(path_to_overpartition(&p).unwrap().to_string(), "(2, 1)");
        let p = LatticePath::parse("DEEN").unwrap();
        let q = path_to_overpartition(&p).unwrap();
        assert!(q.multiplicity(1).overlined);
        let all_east = LatticePath::parse("EEE").unwrap();
        assert_eq!(path_to_overpartition(&all_east).unwrap(), Overpartition::empty());
    }

    #[test]
    fn inverse_map_examples() {
        let q = op("(2, 1)");
        assert_eq!(overpartition_to_path(&q, 4).unwrap().to_string(), "ENENE");
        let empty = Overpartition::empty();
        assert_eq!(overpartition_to_path(&empty, 4).unwrap().to_string(), "EEE");
        assert!(overpartition_to_path(&op("(1', 1)"), 4).is_err());
    }

    #[test]
    fn round_trip_both_ways_up_to_n6() {
        for n in 1..=6usize {
            for k in 0..=n * (n - 1) / 2 {
                let paths = enumerate_paths(n, k, 8).unwrap();
                let classes = enumerate_overpartitions(n, k, 8).unwrap();
                assert_eq!(paths.len(), classes.len(), "n={n} k={k}");
                for p in &paths {
                    let q = path_to_overpartition(p).unwrap();
                    assert!(q.is_valid_for(n, k));
                    assert_eq!(&overpartition_to_path(&q, n).unwrap(), p);
                }
                for q in &classes {
                    let p = overpartition_to_path(q, n).unwrap();
                    assert!(p.is_valid());
                    assert_eq!(&path_to_overpartition(&p).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["()", "(3', 3)", "(2, 1)", "(3', 2', 1')"] {
            assert_eq!(op(s).to_string(), s);
        }
        assert!(Overpartition::parse("3, 3").is_err());
        assert!(Overpartition::parse("(3'', 3)").is_err());
        assert!(Overpartition::parse("(3', 3', 3)").is_err());
    }
}
