//! The over-Mahonian triangle and its scalar identities, computed by
//! independent algebraic methods.
//!
//! Row `n` of the triangle holds the counts `i(n,k)` of overlined
//! permutations of length `n` with exactly `k` inversions, for
//! `0 <= k <= n(n-1)/2`. Three routes to the same row are provided:
//!
//! * [`row_by_recurrence`]: `i(n,k) = i(n-1,k) + 2 * sum_{j=1}^{n-1} i(n-1,k-j)`
//! * [`row_by_alt_recurrence`]:
//!   `i(n,k) = i(n,k-1) + i(n-1,k) + i(n-1,k-1) - 2 * i(n-1,k-n)`
//! * [`row_by_genfun`]: coefficients of
//!   `(1+2z)(1+2z+2z^2)...(1+2z+...+2z^{n-1})`
//!
//! Row sums equal the double factorial `(2n-1)!!`, and the first moment of
//! row `n` equals the total inversion count over all overlined permutations
//! of length `n`, which also satisfies a closed recursion.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer. All counts in this crate live
/// here from the start; `(2n-1)!!` exceeds 64 bits near `n = 17`.
///
/// Subtraction is checked: a negative result is a contract violation and
/// surfaces as [`Error::SubtractionUnderflow`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigNat(BigUint);

impl BigNat {
    pub fn zero() -> Self {
        BigNat(BigUint::zero())
    }

    pub fn one() -> Self {
        BigNat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `2^exp`.
    pub fn pow2(exp: usize) -> Self {
        BigNat(BigUint::one() << exp)
    }

    /// Checked subtraction; underflow is an error, never a wrap.
    pub fn checked_sub(&self, rhs: &BigNat) -> Result<BigNat> {
        if self.0 >= rhs.0 {
            Ok(BigNat(&self.0 - &rhs.0))
        } else {
            Err(Error::SubtractionUnderflow(format!("{} - {}", self, rhs)))
        }
    }
}

impl From<u64> for BigNat {
    fn from(v: u64) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<usize> for BigNat {
    fn from(v: usize) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BigNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigNat)
            .map_err(|e| Error::InvalidArgument(format!("not a nonnegative integer: {e}")))
    }
}

impl std::ops::Add<&BigNat> for &BigNat {
    type Output = BigNat;
    fn add(self, rhs: &BigNat) -> BigNat {
        BigNat(&self.0 + &rhs.0)
    }
}

impl std::ops::Add for BigNat {
    type Output = BigNat;
    fn add(self, rhs: BigNat) -> BigNat {
        BigNat(self.0 + rhs.0)
    }
}

impl std::ops::AddAssign<&BigNat> for BigNat {
    fn add_assign(&mut self, rhs: &BigNat) {
        self.0 += &rhs.0;
    }
}

impl std::ops::Mul<&BigNat> for &BigNat {
    type Output = BigNat;
    fn mul(self, rhs: &BigNat) -> BigNat {
        BigNat(&self.0 * &rhs.0)
    }
}

impl std::ops::Mul<u64> for &BigNat {
    type Output = BigNat;
    fn mul(self, rhs: u64) -> BigNat {
        BigNat(&self.0 * rhs)
    }
}

// JSON-friendly form: decimal strings, so values survive any reader.
impl Serialize for BigNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for BigNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense polynomial with [`BigNat`] coefficients, index = exponent.
///
/// The highest stored coefficient is nonzero unless the polynomial is the
/// zero polynomial, which is represented as `[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePolynomial {
    coeffs: Vec<BigNat>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<BigNat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(BigNat::is_zero) == Some(true) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigNat::zero());
        }
        DensePolynomial { coeffs }
    }

    pub fn one() -> Self {
        DensePolynomial { coeffs: vec![BigNat::one()] }
    }

    pub fn coefficients(&self) -> &[BigNat] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the stored degree.
    pub fn coefficient(&self, i: usize) -> BigNat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigNat::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Schoolbook product. Degrees stay tiny at desk scale, so nothing
    /// faster is warranted.
    pub fn mul(&self, other: &DensePolynomial) -> DensePolynomial {
        if self.coeffs == [BigNat::zero()] || other.coeffs == [BigNat::zero()] {
            return DensePolynomial::new(vec![BigNat::zero()]);
        }
        let mut out = vec![BigNat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        DensePolynomial::new(out)
    }
}

/// `n(n-1)/2`, the largest inversion count at length `n`.
pub fn max_inversions(n: usize) -> usize {
    n * (n - 1) / 2
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} requires n >= 1")));
    }
    Ok(())
}

fn row_get(row: &[BigNat], k: i64) -> BigNat {
    if k < 0 || k as usize >= row.len() {
        BigNat::zero()
    } else {
        row[k as usize].clone()
    }
}

fn next_row_main(prev: &[BigNat], n: usize) -> Vec<BigNat> {
    let len = max_inversions(n) + 1;
    let mut row = Vec::with_capacity(len);
    for k in 0..len {
        // i(n,k) = i(n-1,k) + 2 * sum_{j=1}^{n-1} i(n-1,k-j)
        let mut sum = BigNat::zero();
        for j in 1..n {
            if k >= j && k - j < prev.len() {
                sum += &prev[k - j];
            }
        }
        let mut v = if k < prev.len() { prev[k].clone() } else { BigNat::zero() };
        v += &sum;
        v += &sum;
        row.push(v);
    }
    row
}

fn next_row_alt(prev: &[BigNat], n: usize) -> Result<Vec<BigNat>> {
    let len = max_inversions(n) + 1;
    let mut row: Vec<BigNat> = Vec::with_capacity(len);
    row.push(BigNat::one());
    for k in 1..len {
        // i(n,k) = i(n,k-1) + i(n-1,k) + i(n-1,k-1) - 2 * i(n-1,k-n)
        let mut v = row[k - 1].clone();
        if let Some(x) = prev.get(k) {
            v += x;
        }
        if let Some(x) = prev.get(k - 1) {
            v += x;
        }
        if k >= n {
            if let Some(x) = prev.get(k - n) {
                v = v.checked_sub(&(x + x))?;
            }
        }
        row.push(v);
    }
    Ok(row)
}

/// Row `n` of the triangle via the first-element removal recurrence.
pub fn row_by_recurrence(n: usize) -> Result<Vec<BigNat>> {
    require_positive(n, "row_by_recurrence")?;
    let mut row = vec![BigNat::one()];
    for m in 2..=n {
        row = next_row_main(&row, m);
    }
    Ok(row)
}

/// Row `n` via the four-term recurrence. The checked subtraction can only
/// underflow on a transcription bug, so it aborts loudly instead of wrapping.
pub fn row_by_alt_recurrence(n: usize) -> Result<Vec<BigNat>> {
    require_positive(n, "row_by_alt_recurrence")?;
    let mut row = vec![BigNat::one()];
    for m in 2..=n {
        row = next_row_alt(&row, m)?;
    }
    Ok(row)
}

/// Coefficient list of one generating-function factor: `1 + 2z + ... + 2z^m`.
fn genfun_factor(m: usize) -> DensePolynomial {
    let mut coeffs = vec![BigNat::from(2u64); m + 1];
    coeffs[0] = BigNat::one();
    DensePolynomial::new(coeffs)
}

/// Row generating function `f_n(z) = prod_{m=1}^{n-1} (1 + 2z + ... + 2z^m)`,
/// with `f_1 = 1`. Its coefficient list is row `n` of the triangle.
pub fn row_by_genfun(n: usize) -> Result<DensePolynomial> {
    require_positive(n, "row_by_genfun")?;
    let mut poly = DensePolynomial::one();
    for m in 1..n {
        poly = poly.mul(&genfun_factor(m));
    }
    Ok(poly)
}

/// Sum of row `n`; equals `(2n-1)!!`.
pub fn row_sum(n: usize) -> Result<BigNat> {
    let row = row_by_recurrence(n)?;
    let mut total = BigNat::zero();
    for v in &row {
        total += v;
    }
    Ok(total)
}

/// Double factorial `m!! = 1 * 3 * ... * m` for odd `m`.
pub fn double_factorial(m: u64) -> Result<BigNat> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "double_factorial requires an odd positive integer, got {m}"
        )));
    }
    let mut acc = BigNat::one();
    let mut i = 1u64;
    while i <= m {
        acc = &acc * i;
        i += 2;
    }
    Ok(acc)
}

/// Total inversion count over all overlined permutations of length `n`,
/// via the recursion `T(1) = 0`, `T(n) = (2n-3)!! n(n-1) + (2n-1) T(n-1)`.
pub fn total_inversions_by_recursion(n: usize) -> Result<BigNat> {
    require_positive(n, "total_inversions_by_recursion")?;
    let mut total = BigNat::zero();
    for m in 2..=n {
        let m64 = m as u64;
        let head = &double_factorial(2 * m64 - 3)? * (m64 * (m64 - 1));
        total = head + (&total * (2 * m64 - 1));
    }
    Ok(total)
}

/// Total inversion count as the first moment of row `n`:
/// `sum_k k * i(n,k)`.
pub fn total_inversions_by_moment(n: usize) -> Result<BigNat> {
    let row = row_by_recurrence(n)?;
    let mut total = BigNat::zero();
    for (k, v) in row.iter().enumerate() {
        total += &(v * (k as u64));
    }
    Ok(total)
}

/// One named identity check over a single row.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    /// `(n, k)` of the first offending entry when the check fails.
    pub offending: Option<(usize, usize)>,
}

/// Outcome of the per-row identity checks: top entry `2^{n-1}`, entry at
/// `k = 1` equal to `2(n-1)`, and evenness of every entry with `k >= 1`
/// when `n >= 2`. Checks (b) and (c) pass vacuously at `n = 1`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn identity_suite(n: usize) -> Result<IdentityReport> {
    let row = row_by_recurrence(n)?;
    let top_k = max_inversions(n);

    let top_ok = row[top_k] == BigNat::pow2(n.saturating_sub(1));
    let top = IdentityCheck {
        name: "top_entry_is_2_pow_n_minus_1",
        passed: top_ok,
        offending: (!top_ok).then_some((n, top_k)),
    };

    let k1_ok = n < 2 || row[1] == BigNat::from(2 * (n as u64 - 1));
    let k1 = IdentityCheck {
        name: "entry_at_k1_is_2n_minus_2",
        passed: k1_ok,
        offending: (!k1_ok).then_some((n, 1)),
    };

    let two = BigNat::from(2u64);
    let mut odd_at = None;
    if n >= 2 {
        for (k, v) in row.iter().enumerate().skip(1) {
            if (&v.0 % &two.0) != BigUint::zero() {
                odd_at = Some((n, k));
                break;
            }
        }
    }
    let parity = IdentityCheck {
        name: "entries_even_for_k_ge_1",
        passed: odd_at.is_none(),
        offending: odd_at,
    };

    Ok(IdentityReport { n, checks: vec![top, k1, parity] })
}

/// Which route a [`Triangle`] cache uses to extend itself row by row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowMethod {
    Recurrence,
    AltRecurrence,
    GenFun,
}

/// Session-scoped row cache. Rows are built bottom-up on demand and shared
/// via `Arc`; the lock serializes writers while readers clone cheaply.
/// Cross-checking code holds one cache per method so the routes stay
/// independent.
pub struct Triangle {
    method: RowMethod,
    rows: Mutex<Vec<Arc<Vec<BigNat>>>>,
}

impl Triangle {
    pub fn new(method: RowMethod) -> Self {
        Triangle { method, rows: Mutex::new(Vec::new()) }
    }

    pub fn method(&self) -> RowMethod {
        self.method
    }

    /// Row `n` (1-based), computed and cached along with every row below it.
    pub fn row(&self, n: usize) -> Result<Arc<Vec<BigNat>>> {
        require_positive(n, "Triangle::row")?;
        let mut rows = self.rows.lock().expect("triangle cache poisoned");
        while rows.len() < n {
            let m = rows.len() + 1;
            let next = if m == 1 {
                vec![BigNat::one()]
            } else {
                let prev = &rows[m - 2];
                match self.method {
                    RowMethod::Recurrence => next_row_main(prev, m),
                    RowMethod::AltRecurrence => next_row_alt(prev, m)?,
                    RowMethod::GenFun => {
                        DensePolynomial::new(prev.as_ref().clone()).mul(&genfun_factor(m - 1)).coeffs
                    }
                }
            };
            rows.push(Arc::new(next));
        }
        Ok(rows[n - 1].clone())
    }

    /// `i(n,k)` with the boundary convention: zero for `k` outside
    /// `[0, n(n-1)/2]`. `k` is signed so callers can probe freely.
    pub fn value(&self, n: usize, k: i64) -> Result<BigNat> {
        let row = self.row(n)?;
        Ok(row_get(&row, k))
    }
}
