//! Constructive log-concavity: an explicit injection from
//! `I(n,k+1) x I(n,k-1)` into `I(n,k) x I(n,k)`, where `I(n,k)` is the set
//! of overlined permutations of length `n` with `k` inversions, plus the
//! row-level checks it certifies (log-concavity, unimodality, modes).
//!
//! The injection redistributes inversions around a pivot entry. Writing
//! `m_j` for the number of inversions headed by the value `j+1`, the pivot
//! index `I` is the largest index in `1..=n-1` such that
//!
//! * `sum_{j>=I} m^don_j >= sum_{j>=I+1} m^rec_j + 1`, strictly when the
//!   donor's entry `I+1` is overlined, and
//! * whenever `sum_{j>=I} m^don_j < sum_{j>=I} m^rec_j + 1`, additionally
//!   `sum_{j>=I} m^rec_j + 1 - sum_{j>=I+1} m^don_j <= I`,
//!
//! where the donor is the side giving up an inversion and the receiver the
//! side gaining one. Both outputs are then produced by the same four-pass
//! rewrite: copy the partner's overlines onto entries `I+2..=n`, move each
//! entry `n` down to `I+2` right by its own `m_j` (parking it at the tail),
//! move the pivot entry `I+1` by the transfer amount
//! `delta = 1 + sum_{j>I} m^rec_j - sum_{j>I} m^don_j` (right on the donor
//! side, left on the receiver side), and finally move entries `I+2..=n`
//! left by the partner's `m_j`. Entries keep their own overline while
//! moving; only the first pass rewrites flags.
//!
//! The donor side ends with the receiver's inversion count plus one and
//! vice versa, so the forward map sends `(k+1, k-1)` pairs to `(k, k)`
//! pairs, and the same rewrite with the roles swapped inverts it.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{max_inversions, BigNat, RowMethod, Triangle};
use crate::perm::{enumerate_bprime, MStats, OverlinedPermutation};

/// A domain element of the forward injection: `sigma` carries `k+1`
/// inversions and `tau` carries `k-1`.
#[derive(Clone, Debug)]
pub struct InjectionInput {
    sigma: OverlinedPermutation,
    tau: OverlinedPermutation,
    k: usize,
}

impl InjectionInput {
    pub fn new(sigma: OverlinedPermutation, tau: OverlinedPermutation) -> Result<Self> {
        if sigma.len() != tau.len() {
            return Err(Error::InvalidArgument(format!(
                "length mismatch: sigma has {}, tau has {}",
                sigma.len(),
                tau.len()
            )));
        }
        let (a, b) = (sigma.inversions(), tau.inversions());
        if a != b + 2 {
            return Err(Error::InvalidArgument(format!(
                "inversion counts must differ by exactly 2: sigma has {a}, tau has {b}"
            )));
        }
        Ok(InjectionInput { sigma, tau, k: b + 1 })
    }

    pub fn sigma(&self) -> &OverlinedPermutation {
        &self.sigma
    }

    pub fn tau(&self) -> &OverlinedPermutation {
        &self.tau
    }

    /// The target inversion count of both outputs.
    pub fn k(&self) -> usize {
        self.k
    }
}

/// How one pivot candidate fared, recorded top-down from `n-1`.
#[derive(Clone, Debug, Serialize)]
pub struct PivotCandidate {
    pub candidate: usize,
    /// Whether the donor's entry `candidate + 1` is overlined, which makes
    /// the primary inequality strict.
    pub strict: bool,
    pub lhs: usize,
    pub rhs: usize,
    pub primary_holds: bool,
    /// `Some((lhs, holds))` when the auxiliary bound had to be consulted.
    pub auxiliary: Option<(usize, bool)>,
    pub accepted: bool,
}

/// Pivot search result: the chosen index plus the audit trail.
#[derive(Clone, Debug, Serialize)]
pub struct PivotSearch {
    pub pivot: usize,
    pub audit: Vec<PivotCandidate>,
}

fn pivot_search(
    donor: &OverlinedPermutation,
    receiver: &OverlinedPermutation,
) -> Result<PivotSearch> {
    let n = donor.len();
    let md = donor.m_stats();
    let mr = receiver.m_stats();
    let mut audit = Vec::new();
    for candidate in (1..n).rev() {
        let lhs = md.suffix_sum(candidate);
        let rhs = mr.suffix_sum(candidate + 1) + 1;
        let strict = donor.value_overlined(candidate + 1);
        let primary_holds = if strict { lhs > rhs } else { lhs >= rhs };
        let mut auxiliary = None;
        let mut accepted = primary_holds;
        if primary_holds && md.suffix_sum(candidate) < mr.suffix_sum(candidate) + 1 {
            let aux_lhs = mr.suffix_sum(candidate) + 1 - md.suffix_sum(candidate + 1);
            let holds = aux_lhs <= candidate;
            auxiliary = Some((aux_lhs, holds));
            accepted = holds;
        }
        audit.push(PivotCandidate {
            candidate,
            strict,
            lhs,
            rhs,
            primary_holds,
            auxiliary,
            accepted,
        });
        if accepted {
            return Ok(PivotSearch { pivot: candidate, audit });
        }
    }
    Err(Error::NoValidPivot {
        sigma: donor.to_string(),
        tau: receiver.to_string(),
    })
}

/// Mutable word/flag pair that records a snapshot after every visible
/// change. The recorded chain reproduces the arrow traces: one entry for
/// the initial word, one after the overline-transfer pass when it changed
/// anything, and one per nonzero move.
struct Rewrite {
    word: Vec<usize>,
    flags: Vec<bool>,
    trace: Vec<(Vec<usize>, Vec<bool>)>,
}

impl Rewrite {
    fn start(p: &OverlinedPermutation) -> Self {
        let word = p.word().to_vec();
        let flags = p.flags().to_vec();
        Rewrite { trace: vec![(word.clone(), flags.clone())], word, flags }
    }

    fn snapshot(&mut self) {
        self.trace.push((self.word.clone(), self.flags.clone()));
    }

    fn set_flags_from(&mut self, partner: &OverlinedPermutation, first_value: usize) {
        let mut changed = false;
        for value in first_value..=self.word.len() {
            let pos = self.word.iter().position(|&v| v == value).expect("value present");
            let flag = partner.value_overlined(value);
            if self.flags[pos] != flag {
                self.flags[pos] = flag;
                changed = true;
            }
        }
        if changed {
            self.snapshot();
        }
    }

    /// Remove the entry of `value` and reinsert it `offset` slots away
    /// (positive = rightward), other entries closing ranks.
    fn shift(&mut self, value: usize, offset: isize) {
        if offset == 0 {
            return;
        }
        let from = self.word.iter().position(|&v| v == value).expect("value present");
        let to = from as isize + offset;
        assert!(
            to >= 0 && (to as usize) < self.word.len(),
            "move of {value} by {offset} leaves the word"
        );
        let v = self.word.remove(from);
        let f = self.flags.remove(from);
        self.word.insert(to as usize, v);
        self.flags.insert(to as usize, f);
        self.snapshot();
    }

    fn finish(self, expected_inversions: usize, side: &str) -> Result<Chain> {
        let render = |word: &[usize], flags: &[bool]| {
            OverlinedPermutation::new(word.to_vec(), flags.to_vec())
        };
        let chain_text: Vec<String> = self
            .trace
            .iter()
            .map(|(w, f)| {
                w.iter()
                    .zip(f)
                    .map(|(v, &fl)| if fl { format!("{v}'") } else { v.to_string() })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let result = render(&self.word, &self.flags).map_err(|e| Error::InternalConsistency {
            detail: format!(
                "{side} output carries an invalid overline ({e}); chain: {}",
                chain_text.join(" -> ")
            ),
        })?;
        if result.inversions() != expected_inversions {
            return Err(Error::InternalConsistency {
                detail: format!(
                    "{side} output has {} inversions, expected {expected_inversions}; chain: {}",
                    result.inversions(),
                    chain_text.join(" -> ")
                ),
            });
        }
        // Intermediate words may carry flags on non-heading positions (the
        // right-move pass parks entries at the tail still overlined); only
        // the endpoints are members of the class, so trace entries stay raw.
        Ok(Chain { result, words: chain_text })
    }
}

/// One side's rewrite outcome: the final permutation and the rendered
/// arrow-chain words, initial word first.
#[derive(Clone, Debug, Serialize)]
pub struct Chain {
    #[serde(serialize_with = "serialize_perm")]
    pub result: OverlinedPermutation,
    pub words: Vec<String>,
}

fn serialize_perm<S: serde::Serializer>(
    p: &OverlinedPermutation,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Full outcome of one application of the transfer.
#[derive(Clone, Debug, Serialize)]
pub struct InjectionOutcome {
    pub pivot: usize,
    pub delta: usize,
    pub pivot_audit: Vec<PivotCandidate>,
    /// Chain of the pair's first component: derived from `sigma` going
    /// forward, from `theta` coming back.
    pub first_chain: Chain,
    /// Chain of the pair's second component: from `tau` forward, from `pi`
    /// coming back.
    pub second_chain: Chain,
}

impl InjectionOutcome {
    pub fn pair(&self) -> (&OverlinedPermutation, &OverlinedPermutation) {
        (&self.first_chain.result, &self.second_chain.result)
    }
}

fn transfer(
    donor: &OverlinedPermutation,
    receiver: &OverlinedPermutation,
) -> Result<InjectionOutcome> {
    let n = donor.len();
    let search = pivot_search(donor, receiver)?;
    let pivot = search.pivot;
    let md = donor.m_stats();
    let mr = receiver.m_stats();
    // Transfer amount, in the role-symmetric suffix form; on the forward
    // domain it equals the prefix form
    // sum_{i<=I} m^don_i - sum_{i<=I} m^rec_i - 1.
    let gain = 1 + mr.suffix_sum(pivot + 1);
    let loss = md.suffix_sum(pivot + 1);
    if gain < loss {
        return Err(Error::InternalConsistency {
            detail: format!(
                "negative transfer at pivot {pivot} for ({donor}, {receiver})"
            ),
        });
    }
    let delta = gain - loss;
    // Well-definedness bounds at the chosen pivot.
    if delta > md.m_of_value(pivot + 1) {
        return Err(Error::InternalConsistency {
            detail: format!(
                "transfer {delta} exceeds the donor pivot budget {} for ({donor}, {receiver})",
                md.m_of_value(pivot + 1)
            ),
        });
    }
    if mr.m_of_value(pivot + 1) + delta > pivot {
        return Err(Error::InternalConsistency {
            detail: format!(
                "receiver pivot would head {} inversions, above the bound {pivot}",
                mr.m_of_value(pivot + 1) + delta
            ),
        });
    }

    let run_side = |start: &OverlinedPermutation,
                    partner: &OverlinedPermutation,
                    own: &MStats,
                    other: &MStats,
                    pivot_rightward: bool|
     -> Result<Chain> {
        let mut rw = Rewrite::start(start);
        rw.set_flags_from(partner, pivot + 2);
        for value in (pivot + 2..=n).rev() {
            rw.shift(value, own.m_of_value(value) as isize);
        }
        let signed = if pivot_rightward { delta as isize } else { -(delta as isize) };
        rw.shift(pivot + 1, signed);
        for value in pivot + 2..=n {
            rw.shift(value, -(other.m_of_value(value) as isize));
        }
        // The donor side sheds exactly one inversion, the receiver side
        // gains exactly one.
        let expected = if pivot_rightward {
            start.inversions() - 1
        } else {
            start.inversions() + 1
        };
        rw.finish(expected, if pivot_rightward { "donor" } else { "receiver" })
    };

    let donor_chain = run_side(donor, receiver, &md, &mr, true)?;
    let receiver_chain = run_side(receiver, donor, &mr, &md, false)?;
    Ok(InjectionOutcome {
        pivot,
        delta,
        pivot_audit: search.audit,
        first_chain: donor_chain,
        second_chain: receiver_chain,
    })
}

/// Pivot search over a forward-domain pair, with the audit trail.
pub fn find_pivot(input: &InjectionInput) -> Result<PivotSearch> {
    pivot_search(&input.sigma, &input.tau)
}

/// The forward injection: maps `(sigma, tau)` with `(k+1, k-1)` inversions
/// to a pair with `k` inversions each, first component derived from
/// `sigma`.
pub fn apply_injection(input: &InjectionInput) -> Result<InjectionOutcome> {
    transfer(&input.sigma, &input.tau)
}

/// The reverse direction: `theta` and `pi` carry equal inversion counts
/// `k >= 1`; returns the unique forward preimage, first component the one
/// that regains the extra inversion (derived from `theta`).
pub fn apply_injection_inverse(
    theta: &OverlinedPermutation,
    pi: &OverlinedPermutation,
) -> Result<InjectionOutcome> {
    if theta.len() != pi.len() {
        return Err(Error::InvalidArgument(format!(
            "length mismatch: theta has {}, pi has {}",
            theta.len(),
            pi.len()
        )));
    }
    if theta.inversions() != pi.inversions() {
        return Err(Error::InvalidArgument(format!(
            "inverse direction needs equal inversion counts, got {} and {}",
            theta.inversions(),
            pi.inversions()
        )));
    }
    if theta.inversions() == 0 {
        return Err(Error::InvalidArgument(
            "inverse direction needs at least one inversion".into(),
        ));
    }
    // pi donates the inversion back to theta's side; present sigma (the
    // receiver side, derived from theta) first to mirror the forward order.
    let outcome = transfer(pi, theta)?;
    Ok(InjectionOutcome {
        pivot: outcome.pivot,
        delta: outcome.delta,
        pivot_audit: outcome.pivot_audit,
        first_chain: outcome.second_chain,
        second_chain: outcome.first_chain,
    })
}

/// One failed pair inside an [`InjectivityReport`].
#[derive(Clone, Debug, Serialize)]
pub struct InjectionFailure {
    pub sigma: String,
    pub tau: String,
    pub reason: String,
}

/// Exhaustive check of the injection over `I(n,k+1) x I(n,k-1)`.
#[derive(Clone, Debug, Serialize)]
pub struct InjectivityReport {
    pub n: usize,
    pub k: usize,
    pub pairs_checked: usize,
    pub failures: Vec<InjectionFailure>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run the injection on every element of `I(n,k+1) x I(n,k-1)` and verify:
/// outputs in `I(n,k)^2`, pairwise distinct, the well-definedness bounds at
/// the chosen pivot, and recovery of the pair through the inverse
/// direction. An out-of-range `k` yields a vacuous pass over the empty
/// domain. The domain is split across parallel workers per pair.
pub fn verify_injectivity(n: usize, k: usize, cap: usize) -> Result<InjectivityReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("verify_injectivity requires n >= 1".into()));
    }
    let mut report = InjectivityReport { n, k, pairs_checked: 0, failures: Vec::new() };
    if k == 0 || k + 1 > max_inversions(n) {
        return Ok(report);
    }
    let sigmas: Vec<OverlinedPermutation> = enumerate_bprime(n, cap)?
        .filter(|p| p.inversions() == k + 1)
        .collect();
    let taus: Vec<OverlinedPermutation> = enumerate_bprime(n, cap)?
        .filter(|p| p.inversions() == k - 1)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..sigmas.len())
        .flat_map(|i| (0..taus.len()).map(move |j| (i, j)))
        .collect();
    report.pairs_checked = pairs.len();

    struct PairResult {
        key: Option<(OverlinedPermutation, OverlinedPermutation)>,
        failure: Option<InjectionFailure>,
    }

    let results: Vec<PairResult> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let sigma = &sigmas[i];
            let tau = &taus[j];
            let fail = |reason: String| PairResult {
                key: None,
                failure: Some(InjectionFailure {
                    sigma: sigma.to_string(),
                    tau: tau.to_string(),
                    reason,
                }),
            };
            let outcome = match transfer(sigma, tau) {
                Ok(o) => o,
                Err(e) => return fail(e.to_string()),
            };
            let (theta, pi) = outcome.pair();
            if theta.inversions() != k || pi.inversions() != k {
                return fail(format!(
                    "outputs have {} and {} inversions, expected {k}",
                    theta.inversions(),
                    pi.inversions()
                ));
            }
            match apply_injection_inverse(theta, pi) {
                Ok(back) => {
                    let (s2, t2) = back.pair();
                    if s2 != sigma || t2 != tau {
                        return fail(format!(
                            "inverse returned ({s2}, {t2}) instead of the original pair"
                        ));
                    }
                }
                Err(e) => return fail(format!("inverse failed: {e}")),
            }
            PairResult { key: Some((theta.clone(), pi.clone())), failure: None }
        })
        .collect();

    let mut seen: HashMap<(OverlinedPermutation, OverlinedPermutation), usize> = HashMap::new();
    for (idx, r) in results.into_iter().enumerate() {
        if let Some(f) = r.failure {
            report.failures.push(f);
            continue;
        }
        if let Some(key) = r.key {
            if let Some(&other) = seen.get(&key) {
                let (i, j) = pairs[idx];
                let (oi, oj) = pairs[other];
                report.failures.push(InjectionFailure {
                    sigma: sigmas[i].to_string(),
                    tau: taus[j].to_string(),
                    reason: format!(
                        "collides with ({}, {}) on output ({}, {})",
                        sigmas[oi], taus[oj], key.0, key.1
                    ),
                });
            } else {
                seen.insert(key, idx);
            }
        }
    }
    Ok(report)
}

/// Row-by-row exact log-concavity check.
#[derive(Clone, Debug, Serialize)]
pub struct LogConcavityReport {
    pub n_max: usize,
    pub cells_checked: usize,
    /// `(n, k)` cells where `i(n,k)^2 < i(n,k-1) * i(n,k+1)`.
    pub failures: Vec<(usize, usize)>,
}

impl LogConcavityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify `i(n,k)^2 >= i(n,k-1) * i(n,k+1)` for every `n <= n_max` and
/// `0 < k <= n(n-1)/2`, in exact arithmetic.
pub fn check_logconcavity(n_max: usize) -> Result<LogConcavityReport> {
    let triangle = Triangle::new(RowMethod::Recurrence);
    let mut report = LogConcavityReport { n_max, cells_checked: 0, failures: Vec::new() };
    for n in 1..=n_max {
        let row = triangle.row(n)?;
        for k in 1..row.len() {
            report.cells_checked += 1;
            let square = &row[k] * &row[k];
            let neighbors = &row[k - 1] * &row.get(k + 1).cloned().unwrap_or_else(BigNat::zero);
            if square < neighbors {
                report.failures.push((n, k));
            }
        }
    }
    Ok(report)
}

/// Nondecreasing up to some index, nonincreasing after it.
pub fn is_unimodal(row: &[BigNat]) -> bool {
    let rise_end = row.windows(2).take_while(|w| w[0] <= w[1]).count();
    row[rise_end..].windows(2).all(|w| w[0] >= w[1])
}

/// The maximal entry of a row and where it sits.
#[derive(Clone, Debug, Serialize)]
pub struct ModeReport {
    pub n: usize,
    pub mode_value: BigNat,
    pub mode_positions: Vec<usize>,
    pub unimodal: bool,
}

/// Empirical mode finder; also confirms the unimodal shape of the row.
/// Where the modes land in general is an open problem, so this reports and
/// claims nothing more.
pub fn find_modes(n: usize) -> Result<ModeReport> {
    let row = crate::numbers::row_by_recurrence(n)?;
    let mode_value = row.iter().max().expect("rows are nonempty").clone();
    let mode_positions = row
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == mode_value)
        .map(|(k, _)| k)
        .collect();
    Ok(ModeReport { n, mode_value, mode_positions, unimodal: is_unimodal(&row) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::row_by_recurrence;

    fn p(s: &str) -> OverlinedPermutation {
        OverlinedPermutation::parse(s).unwrap()
    }

    fn worked_example() -> InjectionInput {
        InjectionInput::new(p("3' 2' 4' 5' 1"), p("1 2 5' 4' 3")).unwrap()
    }

    #[test]
    fn worked_example_pivot() {
        let search = find_pivot(&worked_example()).unwrap();
        assert_eq!(search.pivot, 1);
        // Candidates are visited from n-1 = 4 downward; 4 fails the strict
        // inequality (1 > 1 is false).
        let first = &search.audit[0];
        assert_eq!(first.candidate, 4);
        assert!(first.strict);
        assert_eq!((first.lhs, first.rhs), (1, 1));
        assert!(!first.accepted);
        assert_eq!(search.audit.len(), 4);
    }

    #[test]
    fn worked_example_outputs_and_chains() {
        let outcome = apply_injection(&worked_example()).unwrap();
        assert_eq!(outcome.pivot, 1);
        assert_eq!(outcome.delta, 0);
        let (theta, pi) = outcome.pair();
        assert_eq!(theta.to_string(), "2' 1 5' 4' 3");
        assert_eq!(pi.to_string(), "3' 1 4' 5' 2");
        assert_eq!(theta.inversions(), 4);
        assert_eq!(pi.inversions(), 4);
        assert_eq!(
            outcome.first_chain.words,
            [
                "3' 2' 4' 5' 1",
                "3 2' 4' 5' 1",
                "3 2' 4' 1 5'",
                "3 2' 1 4' 5'",
                "2' 1 3 4' 5'",
                "2' 1 4' 3 5'",
                "2' 1 5' 4' 3",
            ]
        );
        assert_eq!(
            outcome.second_chain.words,
            [
                "1 2 5' 4' 3",
                "1 2 5' 4' 3'",
                "1 2 4' 3' 5'",
                "1 2 3' 4' 5'",
                "3' 1 2 4' 5'",
                "3' 1 4' 2 5'",
                "3' 1 4' 5' 2",
            ]
        );
    }

    #[test]
    fn worked_example_inverse() {
        let outcome = apply_injection(&worked_example()).unwrap();
        let (theta, pi) = outcome.pair();
        let back = apply_injection_inverse(theta, pi).unwrap();
        let (sigma, tau) = back.pair();
        assert_eq!(sigma, worked_example().sigma());
        assert_eq!(tau, worked_example().tau());
    }

    #[test]
    fn smallest_nondegenerate_case() {
        // n = 2, k = 1: the only pair is (2' 1 or 2 1 with 1 inversion...)
        // here sigma must have 2 inversions, impossible at n = 2, so the
        // domain is empty; n = 3, k = 2 is the first populated cell.
        let report = verify_injectivity(3, 2, 8).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs_checked, 16);
    }

    #[test]
    fn input_validation() {
        assert!(InjectionInput::new(p("2' 1"), p("1 2")).is_err()); // gap 1
        assert!(InjectionInput::new(p("2 1 3"), p("1 2")).is_err()); // lengths
        let ok = InjectionInput::new(p("3 1 2"), p("1 2 3")).unwrap();
        assert_eq!(ok.k(), 1);
    }

    #[test]
    fn injectivity_at_4_3() {
        let report = verify_injectivity(4, 3, 8).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert_eq!(report.pairs_checked, 28 * 16);
    }

    #[test]
    fn injectivity_all_k_at_n4() {
        for k in 0..=max_inversions(4) {
            let report = verify_injectivity(4, k, 8).unwrap();
            assert!(report.passed(), "k={k}: {:?}", report.failures.first());
        }
    }

    #[test]
    fn inverse_characterizes_the_image_at_3_2() {
        // The reverse direction succeeds exactly on pairs the forward map
        // can produce; elsewhere the pivot search comes up empty.
        let class: Vec<OverlinedPermutation> = enumerate_bprime(3, 8)
            .unwrap()
            .filter(|q| q.inversions() == 2)
            .collect();
        let mut image = std::collections::HashSet::new();
        for sigma in enumerate_bprime(3, 8).unwrap().filter(|q| q.inversions() == 3) {
            for tau in enumerate_bprime(3, 8).unwrap().filter(|q| q.inversions() == 1) {
                let outcome =
                    apply_injection(&InjectionInput::new(sigma.clone(), tau).unwrap()).unwrap();
                let (theta, pi) = outcome.pair();
                image.insert((theta.clone(), pi.clone()));
            }
        }
        assert_eq!(image.len(), 16);
        let mut recovered = 0;
        let mut rejected = 0;
        for theta in &class {
            for pi in &class {
                match apply_injection_inverse(theta, pi) {
                    Ok(_) => {
                        assert!(image.contains(&(theta.clone(), pi.clone())));
                        recovered += 1;
                    }
                    Err(Error::NoValidPivot { .. }) => {
                        assert!(!image.contains(&(theta.clone(), pi.clone())));
                        rejected += 1;
                    }
                    Err(e) => panic!("unexpected error: {e}"),
                }
            }
        }
        assert_eq!((recovered, rejected), (16, 20));
    }

    #[test]
    fn conservation_of_inversions() {
        let input = worked_example();
        let outcome = apply_injection(&input).unwrap();
        let (theta, pi) = outcome.pair();
        assert_eq!(
            theta.inversions() + pi.inversions(),
            input.sigma().inversions() + input.tau().inversions()
        );
    }

    #[test]
    fn pivot_audit_matches_recomputation() {
        let input = worked_example();
        let outcome = apply_injection(&input).unwrap();
        let ms = input.sigma().m_stats();
        let mt = input.tau().m_stats();
        for cand in &outcome.pivot_audit {
            assert_eq!(cand.lhs, ms.suffix_sum(cand.candidate));
            assert_eq!(cand.rhs, mt.suffix_sum(cand.candidate + 1) + 1);
            assert_eq!(cand.strict, input.sigma().value_overlined(cand.candidate + 1));
        }
        assert_eq!(outcome.pivot_audit.last().unwrap().candidate, outcome.pivot);
    }

    #[test]
    fn logconcavity_small() {
        let report = check_logconcavity(12).unwrap();
        assert!(report.passed());
        // Spot value: 26^2 = 676 >= 16 * 28 = 448 in row 4.
        let row = row_by_recurrence(4).unwrap();
        assert!(&row[3] * &row[3] >= &row[2] * &row[4]);
        assert!(check_logconcavity(1).unwrap().passed());
    }

    #[test]
    fn modes_examples() {
        let m = find_modes(5).unwrap();
        assert_eq!(m.mode_value, BigNat::from(188u64));
        assert_eq!(m.mode_positions, vec![6]);
        assert!(m.unimodal);
        let m1 = find_modes(1).unwrap();
        assert_eq!(m1.mode_positions, vec![0]);
        assert_eq!(m1.mode_value, BigNat::one());
        let m12 = find_modes(12).unwrap();
        assert!(m12.unimodal);
        assert!(!m12.mode_positions.is_empty());
    }

    #[test]
    fn unimodality_checker_rejects_bumpy_rows() {
        let ups_downs: Vec<BigNat> = [1u64, 2, 2, 1].iter().map(|&v| BigNat::from(v)).collect();
        assert!(is_unimodal(&ups_downs));
        let bumpy: Vec<BigNat> = [1u64, 3, 2, 4].iter().map(|&v| BigNat::from(v)).collect();
        assert!(!is_unimodal(&bumpy));
    }
}
