//! Closed-form counts of positive and blobbed elements, with exhaustive
//! oracles that recount them from generated block sequences.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::grid::is_blobbed;
use crate::normal_forms::{for_each_positive_blocks, PositiveBlocks};
use crate::triangles::{blobbed_entry, BigNat};
use crate::words::Rank;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    A,
    B,
    D,
    IT,
    JT,
    INr,
    JNr,
}

impl CountKind {
    pub const ALL: [CountKind; 7] =
        [CountKind::A, CountKind::B, CountKind::D, CountKind::IT, CountKind::JT, CountKind::INr, CountKind::JNr];

    pub fn name(self) -> &'static str {
        match self {
            CountKind::A => "a",
            CountKind::B => "b",
            CountKind::D => "d",
            CountKind::IT => "i_t",
            CountKind::JT => "j_t",
            CountKind::INr => "i_nr",
            CountKind::JNr => "j_nr",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CountKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown count kind {s:?}")))
    }
}

fn check_n(n: usize) -> Result<()> {
    Rank::new(n).map(|_| ())
}

fn c(i: usize, j: usize) -> BigNat {
    blobbed_entry(i as i64, j as i64)
}

fn half(v: BigNat, what: &str) -> Result<BigNat> {
    if v.bit(0) {
        return Err(Error::Inconsistency(format!("{what} = {v} is odd and cannot be halved")));
    }
    Ok(v >> 1u32)
}

/// `a_n^s = C_{2n,2s}`, the number of positive elements of affine length `s`.
pub fn a_count(n: usize, s: usize) -> Result<BigNat> {
    check_n(n)?;
    Ok(c(2 * n, 2 * s))
}

pub fn i_t(n: usize, t: usize) -> Result<BigNat> {
    check_n(n)?;
    Ok(if n.is_multiple_of(2) { c(n, 2 * t) } else { c(n, 2 * t + 1) })
}

pub fn j_t(n: usize, t: usize) -> Result<BigNat> {
    check_n(n)?;
    let full = if n.is_multiple_of(2) { c(n + 1, 2 * t + 1) } else { c(n + 1, 2 * t) };
    half(full, "j_t")
}

fn check_r(n: usize, r: usize) -> Result<()> {
    check_n(n)?;
    if r >= n {
        return Err(Error::Precondition(format!("r = {r} must be below n = {n}")));
    }
    Ok(())
}

pub fn i_nr(n: usize, r: usize) -> Result<BigNat> {
    check_r(n, r)?;
    if n % 2 == 1 {
        return Ok(BigNat::zero());
    }
    Ok(blobbed_entry(n as i64 - 2 - r as i64, r as i64))
}

/// At `r = n - 1` the entry `C_{0,n-1}` is 1 and the count is 1 (the only
/// grid is `G(w_n^J)` itself), so that the `j_{n,r}` sum to `j_n^0`.
pub fn j_nr(n: usize, r: usize) -> Result<BigNat> {
    check_r(n, r)?;
    if n.is_multiple_of(2) {
        return Ok(BigNat::zero());
    }
    if r == n - 1 {
        return Ok(BigNat::one());
    }
    half(c(n - 1 - r, r), "j_nr")
}

fn product_sum(f: impl Fn(usize) -> Result<BigNat>, g: impl Fn(usize) -> Result<BigNat>, top: usize) -> Result<BigNat> {
    let mut acc = BigNat::zero();
    for k in 0..=top {
        acc += f(k)? * g(top - k)?;
    }
    Ok(acc)
}

/// `d_n^s` for `2 <= s <= n` as sums of products of `i_n^t` and `j_n^t`.
pub fn d_count_sums(n: usize, s: usize) -> Result<BigNat> {
    check_n(n)?;
    if !(2..=n).contains(&s) {
        return Err(Error::Precondition(format!("s = {s} outside 2..={n}")));
    }
    type Count = fn(usize, usize) -> Result<BigNat>;
    let (x, y): (Count, Count) = if n.is_multiple_of(2) { (i_t, j_t) } else { (j_t, i_t) };
    let xx = product_sum(|k| x(n, k), |k| x(n, k), s - 1)?;
    let yy = product_sum(|k| y(n, k), |k| y(n, k), s - 2)?;
    let xy = product_sum(|k| x(n, k), |k| y(n, k), s - 2)?;
    let pos = xx + yy;
    let neg = xy * 2u32;
    if neg > pos {
        return Err(Error::Inconsistency(format!("d({n},{s}) would be negative")));
    }
    Ok(pos - neg)
}

/// `d_n^s` for `2 <= s <= n` written directly in triangle entries.
pub fn d_count_closed(n: usize, s: usize) -> Result<BigNat> {
    check_n(n)?;
    if !(2..=n).contains(&s) {
        return Err(Error::Precondition(format!("s = {s} outside 2..={n}")));
    }
    let ci = |i: usize, j: i64| BigInt::from(blobbed_entry(i as i64, j));
    let s = s as i64;
    // four times the value, so the quarter terms stay integral
    let mut four = BigInt::zero();
    if n.is_multiple_of(2) {
        for k in 0..=s - 2 {
            four += ci(n, 2 * k) * (ci(n, 2 * (s - 1 - k)) - ci(n + 1, 2 * (s - k) - 3)) * 4;
            four += ci(n + 1, 2 * k + 1) * ci(n + 1, 2 * (s - k) - 3);
        }
        four += ci(n, 2 * (s - 1)) * ci(n, 0) * 4;
    } else {
        for k in 0..=s - 2 {
            four += ci(n, 2 * (s - k) - 3) * (ci(n, 2 * k + 1) - ci(n + 1, 2 * k)) * 4;
        }
        for k in 0..=s - 1 {
            four += ci(n + 1, 2 * k) * ci(n + 1, 2 * (s - 1 - k));
        }
    }
    let (sign, mag) = four.into_parts();
    if sign == Sign::Minus || (&mag % 4u32) != BigNat::zero() {
        return Err(Error::Inconsistency(format!("closed form for d({n},{s}) is not a natural number")));
    }
    Ok(mag >> 2u32)
}

/// `d_n^s`, the number of positive elements of affine length `s` that are not blobbed.
pub fn d_count(n: usize, s: usize) -> Result<BigNat> {
    check_n(n)?;
    if s == 0 {
        return Ok(BigNat::zero());
    }
    if s > n {
        return a_count(n, s);
    }
    if s == 1 {
        let x = if n.is_multiple_of(2) { i_t(n, 0)? } else { j_t(n, 0)? };
        return Ok(&x * &x);
    }
    let sums = d_count_sums(n, s)?;
    let closed = d_count_closed(n, s)?;
    if sums != closed {
        return Err(Error::Inconsistency(format!("d({n},{s}): sums give {sums}, closed form gives {closed}")));
    }
    Ok(sums)
}

/// `b_n^s = a_n^s - d_n^s`, the number of blobbed elements of affine length `s`.
pub fn b_count(n: usize, s: usize) -> Result<BigNat> {
    let a = a_count(n, s)?;
    let d = d_count(n, s)?;
    if d > a {
        return Err(Error::Inconsistency(format!("d({n},{s}) = {d} exceeds a({n},{s}) = {a}")));
    }
    Ok(a - d)
}

/// Dispatches on `kind`; the second index is `s`, `t` or `r` as appropriate.
pub fn count(kind: CountKind, n: usize, s: usize) -> Result<BigNat> {
    match kind {
        CountKind::A => a_count(n, s),
        CountKind::B => b_count(n, s),
        CountKind::D => d_count(n, s),
        CountKind::IT => i_t(n, s),
        CountKind::JT => j_t(n, s),
        CountKind::INr => i_nr(n, s),
        CountKind::JNr => j_nr(n, s),
    }
}

/// `P_n(v) = sum_s b_n^s v^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlobPolynomial {
    n: usize,
    coefficients: Vec<BigNat>,
}

impl BlobPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[BigNat] {
        &self.coefficients
    }

    pub fn eval(&self, v: &BigNat) -> BigNat {
        self.coefficients.iter().rev().fold(BigNat::zero(), |acc, c| acc * v + c)
    }
}

impl fmt::Display for BlobPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match s {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}v")?,
                _ => write!(f, "{c}v^{s}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn blob_polynomial(n: usize) -> Result<BlobPolynomial> {
    let coefficients = (0..=n).map(|s| b_count(n, s)).collect::<Result<_>>()?;
    Ok(BlobPolynomial { n, coefficients })
}

/// `p_n = P_n(1)`, the dimension of the symplectic blob algebra.
pub fn p_dim(n: usize) -> Result<BigNat> {
    Ok(blob_polynomial(n)?.eval(&BigNat::one()))
}

/// Upper bound on the number of elements an oracle may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_elements: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_elements: 5_000_000 }
    }
}

fn oracle_count(n: usize, s: usize, budget: Budget, keep: impl Fn(&PositiveBlocks) -> bool + Sync) -> Result<BigNat> {
    let rank = Rank::new(n)?;
    let last = rank.last();
    let seen = AtomicU64::new(0);
    let visit_all = |prefix: &[(u8, u8)]| -> u64 {
        let mut kept = 0u64;
        for_each_positive_blocks(rank, s, prefix, &mut |b| {
            if seen.fetch_add(1, Ordering::Relaxed) < budget.max_elements && keep(b) {
                kept += 1;
            }
        });
        kept
    };
    let firsts: Vec<(u8, u8)> = (0..=last).flat_map(|r| (0..=r).map(move |l| (l, r))).collect();
    let mut total: u64 = firsts.par_iter().map(|&b| visit_all(&[b])).sum();
    if s == 0 && keep(&PositiveBlocks::identity(rank)) {
        seen.fetch_add(1, Ordering::Relaxed);
        total += 1;
    }
    let visited = seen.load(Ordering::Relaxed);
    if visited > budget.max_elements {
        return Err(Error::BudgetExceeded(format!(
            "n = {n}, s = {s} visits more than {} elements",
            budget.max_elements
        )));
    }
    Ok(BigNat::from(total))
}

/// Number of block sequences with exactly `s` blocks reaching `n`.
pub fn oracle_positive_count(n: usize, s: usize, budget: Budget) -> Result<BigNat> {
    oracle_count(n, s, budget, |_| true)
}

/// Number of those block sequences whose grid avoids both `G(IJI)` and `G(JIJ)`.
pub fn oracle_blobbed_count(n: usize, s: usize, budget: Budget) -> Result<BigNat> {
    oracle_count(n, s, budget, is_blobbed)
}
