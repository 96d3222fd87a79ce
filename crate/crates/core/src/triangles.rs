//! The classical and the blobbed Catalan triangles.
//!
//! Both are indexed from `-1`. The classical triangle `c` starts from a single
//! `1` in the corner; the blobbed triangle `C` starts from two rows of
//! alternating ones. Both then follow `x[i][j] = x[i-1][j-1] + x[i-1][j+1]`.

use std::cell::RefCell;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type BigNat = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Classical,
    Blobbed,
}

/// Memoized rows of one triangle. Row `i` is stored at `rows[i + 1]` and
/// column `j` at `rows[i + 1][j + 1]`.
#[derive(Debug, Clone)]
pub struct TriangleMemo {
    kind: TriangleKind,
    width: usize,
    rows: Vec<Vec<BigNat>>,
}

impl TriangleMemo {
    pub fn new(kind: TriangleKind) -> Self {
        TriangleMemo { kind, width: 0, rows: Vec::new() }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    fn base(&self, i: i64, j: i64) -> BigNat {
        let one = match self.kind {
            TriangleKind::Classical => i == -1 && j == -1,
            TriangleKind::Blobbed => (i == -1 || i == 0) && (i + j).rem_euclid(2) == 0,
        };
        if one {
            BigNat::one()
        } else {
            BigNat::zero()
        }
    }

    // Rebuilds the table from scratch whenever more columns are needed;
    // otherwise appends rows.
    fn ensure(&mut self, i: i64, j: i64) {
        let need_rows = (i + 2) as usize;
        // row r only needs columns up to j + (i - r) of the rows above it
        let need_width = (j + 2) as usize + (i + 1).max(0) as usize;
        if need_width > self.width {
            self.width = need_width.max(2 * self.width);
            self.rows.clear();
        }
        let first_derived = match self.kind {
            TriangleKind::Classical => 0,
            TriangleKind::Blobbed => 1,
        };
        while self.rows.len() < need_rows.max(first_derived as usize + 1) {
            let r = self.rows.len() as i64 - 1;
            let row = if r < first_derived {
                (0..self.width).map(|c| self.base(r, c as i64 - 1)).collect()
            } else {
                let above = &self.rows[self.rows.len() - 1];
                let mut row = vec![BigNat::zero(); self.width];
                for c in 1..self.width {
                    let right = if c + 1 < self.width { &above[c + 1] } else { &above[c] };
                    // the last column is only read for entries that are never requested
                    row[c] = &above[c - 1] + right;
                }
                row
            };
            self.rows.push(row);
        }
    }

    /// Entry `(i, j)` for `i, j >= -1`; total on that domain.
    pub fn entry(&mut self, i: i64, j: i64) -> BigNat {
        if i < -1 || j < -1 {
            return BigNat::zero();
        }
        self.ensure(i, j);
        self.rows[(i + 1) as usize][(j + 1) as usize].clone()
    }
}

thread_local! {
    static CLASSICAL: RefCell<TriangleMemo> = RefCell::new(TriangleMemo::new(TriangleKind::Classical));
    static BLOBBED: RefCell<TriangleMemo> = RefCell::new(TriangleMemo::new(TriangleKind::Blobbed));
}

/// `c_{i,j}` of the classical Catalan triangle; `c_{2n,0}` is the n-th Catalan number.
pub fn classical_entry(i: i64, j: i64) -> BigNat {
    CLASSICAL.with(|m| m.borrow_mut().entry(i, j))
}

/// `C_{i,j}` of the blobbed Catalan triangle.
pub fn blobbed_entry(i: i64, j: i64) -> BigNat {
    BLOBBED.with(|m| m.borrow_mut().entry(i, j))
}

pub fn entry(kind: TriangleKind, i: i64, j: i64) -> BigNat {
    match kind {
        TriangleKind::Classical => classical_entry(i, j),
        TriangleKind::Blobbed => blobbed_entry(i, j),
    }
}

/// `binom(m, k)`, zero outside `0 <= k <= m`.
pub fn binomial(m: i64, k: i64) -> BigNat {
    if m < 0 || k < 0 || k > m {
        return BigNat::zero();
    }
    let k = k.min(m - k) as u64;
    let m = m as u64;
    let mut acc = BigNat::one();
    for t in 0..k {
        acc *= m - t;
        acc /= t + 1;
    }
    acc
}

/// `C_{i,j}` as the sum of `binom(i, k)` for `(i-j)/2 <= k <= (i+j)/2`.
pub fn blobbed_closed(i: i64, j: i64) -> Result<BigNat> {
    if j < 0 || j > i {
        return Err(Error::Precondition(format!("need 0 <= j <= i, got ({i}, {j})")));
    }
    if (i - j) % 2 != 0 {
        return Err(Error::Precondition(format!("i and j must have the same parity, got ({i}, {j})")));
    }
    Ok(((i - j) / 2..=(i + j) / 2).map(|k| binomial(i, k)).sum())
}

/// One weighted term `weight * c_{row,col}` of a binomial decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub k: i64,
    pub weight: BigNat,
    pub row: i64,
    pub col: i64,
    pub entry: BigNat,
}

impl Term {
    pub fn value(&self) -> BigNat {
        &self.weight * &self.entry
    }
}

pub fn sum_terms(terms: &[Term]) -> BigNat {
    terms.iter().map(Term::value).sum()
}

/// `binom(2i, i) = sum_{k=1}^{i} 2^k c_{2i-k-1,k-1}`.
pub fn central_binomial_decomposition(i: i64) -> Result<Vec<Term>> {
    if i < 1 {
        return Err(Error::Precondition(format!("need i >= 1, got {i}")));
    }
    Ok((1..=i)
        .map(|k| {
            let (row, col) = (2 * i - k - 1, k - 1);
            Term { k, weight: BigNat::one() << k as usize, row, col, entry: classical_entry(row, col) }
        })
        .collect())
}

/// `binom(2i-j, i) = sum_{k=1}^{i-j+1} 2^{k-1} c_{2i-k-j,j+k-2}`.
pub fn general_binomial_decomposition(i: i64, j: i64) -> Result<Vec<Term>> {
    if j < 1 || j > i {
        return Err(Error::Precondition(format!("need 1 <= j <= i, got ({i}, {j})")));
    }
    Ok((1..=i - j + 1)
        .map(|k| {
            let (row, col) = (2 * i - k - j, j + k - 2);
            Term { k, weight: BigNat::one() << (k - 1) as usize, row, col, entry: classical_entry(row, col) }
        })
        .collect())
}

/// Rows `0..rows` and columns `0..cols`, zeros included.
pub fn table(kind: TriangleKind, rows: usize, cols: usize) -> Vec<Vec<BigNat>> {
    let mut memo = TriangleMemo::new(kind);
    (0..rows as i64).map(|i| (0..cols as i64).map(|j| memo.entry(i, j)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigNat {
        BigNat::from(x)
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_entry(-1, -1), big(1));
        assert_eq!(classical_entry(6, 2), big(9));
        assert_eq!(classical_entry(10, 0), big(42));
        assert_eq!(classical_entry(3, -1), big(0));
        assert_eq!(classical_entry(2, 5), big(0));
    }

    #[test]
    fn blobbed_values() {
        assert_eq!(blobbed_entry(8, 0), big(70));
        assert_eq!(blobbed_entry(5, 3), big(30));
        assert_eq!(blobbed_entry(7, -1), big(0));
        assert_eq!(blobbed_entry(4, 1), big(0));
        assert_eq!(blobbed_entry(0, 6), big(1));
        assert_eq!(blobbed_entry(3, 7), big(8));
        let row8: Vec<_> = (0..=8).step_by(2).map(|j| blobbed_entry(8, j)).collect();
        assert_eq!(row8, [70, 182, 238, 254, 256].map(big));
    }

    #[test]
    fn memo_grows_both_ways() {
        let mut m = TriangleMemo::new(TriangleKind::Blobbed);
        assert_eq!(m.entry(2, 0), big(2));
        assert_eq!(m.entry(2, 30), big(4));
        assert_eq!(m.entry(12, 0), big(924));
        assert_eq!(m.entry(2, 0), big(2));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(blobbed_closed(8, 2).unwrap(), big(182));
        assert_eq!(blobbed_closed(12, 0).unwrap(), big(924));
        assert_eq!(blobbed_closed(9, 9).unwrap(), big(512));
        assert!(blobbed_closed(4, 1).is_err());
        assert!(blobbed_closed(2, 4).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(30, 15), big(155117520));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(3, -1), big(0));
    }

    #[test]
    fn decomposition_examples() {
        let t = central_binomial_decomposition(3).unwrap();
        let parts: Vec<_> = t.iter().map(|t| (t.row, t.col, t.value())).collect();
        assert_eq!(parts, vec![(4, 0, big(4)), (3, 1, big(8)), (2, 2, big(8))]);
        assert_eq!(sum_terms(&central_binomial_decomposition(1).unwrap()), big(2));
        assert_eq!(sum_terms(&central_binomial_decomposition(5).unwrap()), big(252));
        let t = general_binomial_decomposition(3, 1).unwrap();
        assert_eq!(t.iter().map(Term::value).collect::<Vec<_>>(), [2, 4, 4].map(big));
        assert_eq!(sum_terms(&general_binomial_decomposition(4, 2).unwrap()), big(15));
        assert_eq!(sum_terms(&general_binomial_decomposition(5, 5).unwrap()), big(1));
        assert!(general_binomial_decomposition(2, 3).is_err());
    }

    #[test]
    fn tables_have_explicit_zeros() {
        let t = table(TriangleKind::Classical, 3, 4);
        assert_eq!(t[2], [1, 0, 1, 0].map(big));
    }
}
