//! Normal forms of fully commutative elements.
//!
//! Affine length zero elements are the fully commutative elements of type
//! B, written as products of brackets `[l, g]`. Elements of affine length at
//! least one are written around the occurrences of `t_n`, the generator `n`.

use std::fmt;

use crate::words::{self, Letter, Rank, Word};
use crate::{Error, Result};

mod blocks;
mod generate;
mod positivity;

pub use blocks::{
    blocks_of_word, for_each_positive_blocks, nf_of_positive_blocks, positive_blocks, positive_blocks_of,
    PositiveBlocks,
};
pub use generate::{count_fc, generate_b, generate_fc, normal_form_of_word};
pub use positivity::{
    bar, is_left_positive, is_positive, is_right_positive, left_violation, right_violation, tilde, BarTag,
    LeftViolation, RightViolation,
};

/// `[l, g]`: `l, l+1, ..., g` when `l >= 0` (empty when `l = g + 1`), and
/// `|l|, ..., 1, 0, 1, ..., g` when `l < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bracket {
    pub l: i32,
    pub g: i32,
}

impl Bracket {
    pub fn new(l: i32, g: i32) -> Self {
        Bracket { l, g }
    }

    pub fn push_letters(&self, out: &mut Vec<Letter>) {
        if self.l < 0 {
            out.extend((1..=-self.l).rev().map(|x| x as Letter));
            out.extend((0..=self.g).map(|x| x as Letter));
        } else if self.l <= self.g {
            out.extend((self.l..=self.g).map(|x| x as Letter));
        }
    }

    pub fn push_inverse(&self, out: &mut Vec<Letter>) {
        let start = out.len();
        self.push_letters(out);
        out[start..].reverse();
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.push_letters(&mut out);
        out
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.l, self.g)
    }
}

/// Which of the three shapes a non-identity type B normal form has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BShape {
    Identity,
    /// all `l` positive and strictly decreasing
    StrictlyPositive,
    /// strictly decreasing positive `l`, then at least one zero
    TrailingZeros,
    /// last `l` negative with `l_{r-1} > -l_r > 0`
    Negative,
}

/// A fully commutative element of type B in Stembridge normal form
/// `[l_1, g_1] ... [l_r, g_r]` with `n > g_1 > ... > g_r >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BNormalForm {
    brackets: Vec<Bracket>,
}

impl BNormalForm {
    pub fn identity() -> Self {
        BNormalForm { brackets: Vec::new() }
    }

    pub fn new(rank: Rank, brackets: Vec<Bracket>) -> Result<Self> {
        let nf = BNormalForm { brackets };
        nf.validate(rank)?;
        Ok(nf)
    }

    pub(crate) fn from_trusted(brackets: Vec<Bracket>) -> Self {
        BNormalForm { brackets }
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    pub fn is_identity(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn shape(&self) -> BShape {
        match self.brackets.last() {
            None => BShape::Identity,
            Some(b) if b.l < 0 => BShape::Negative,
            Some(b) if b.l == 0 => BShape::TrailingZeros,
            Some(_) => BShape::StrictlyPositive,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.shape() == BShape::Negative
    }

    pub fn push_letters(&self, out: &mut Vec<Letter>) {
        for b in &self.brackets {
            b.push_letters(out);
        }
    }

    fn validate(&self, rank: Rank) -> Result<()> {
        let n = rank.n() as i32;
        let bad = |msg: String| Err(Error::InvalidNormalForm(msg));
        let mut prev: Option<Bracket> = None;
        for (t, b) in self.brackets.iter().enumerate() {
            if b.g < 0 || b.g >= n || b.l.abs() > b.g {
                return bad(format!("bracket {b} out of range for rank {n}"));
            }
            if b.l < 0 && t + 1 != self.brackets.len() {
                return bad(format!("negative bracket {b} must come last"));
            }
            if let Some(p) = prev {
                if b.g >= p.g {
                    return bad(format!("g must strictly decrease: {p} then {b}"));
                }
                let ok = if p.l == 0 {
                    b.l == 0
                } else if b.l < 0 {
                    -b.l < p.l
                } else {
                    b.l < p.l
                };
                if !ok {
                    return bad(format!("l values {} then {} fit no shape", p.l, b.l));
                }
            }
            prev = Some(*b);
        }
        Ok(())
    }
}

impl fmt::Display for BNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.brackets.is_empty() {
            return f.write_str("1");
        }
        for b in &self.brackets {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The factor after `[i, n-1] t_n` in an affine length one normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthOneTail {
    /// `v` a type B normal form, used when `i > 0`
    Stembridge(BNormalForm),
    /// `([h, n-1])^{-1}`, used when `i <= 0`
    InverseBracket { h: i32 },
    /// `([z, n-1])^{-1} [0, r_1] ... [0, r_m]`, used when `i = 0`
    InverseWithZeros { z: i32, zeros: Vec<i32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    LengthZero(BNormalForm),
    LengthOne {
        i: i32,
        tail: LengthOneTail,
    },
    /// `[i, n-1] t_n ([-(n-1), n-1] t_n)^k ([f, n-1])^{-1}`, affine length `k + 1`
    FirstType {
        i: i32,
        k: u32,
        f: i32,
    },
    /// `[i_1, n-1] t_n ... [i_p, n-1] t_n ([0, n-1] t_n)^k w_r`, affine length `p + k`
    SecondType {
        prefix: Vec<i32>,
        k: u32,
        tail: BNormalForm,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineNormalForm {
    rank: Rank,
    shape: Shape,
}

impl AffineNormalForm {
    /// Checks the side conditions of the normal form. At rank 1 the form
    /// must also be the chosen representative of its element.
    pub fn new(rank: Rank, shape: Shape) -> Result<Self> {
        let nf = AffineNormalForm { rank, shape };
        nf.validate()?;
        if rank.n() == 1 {
            let word = nf.word();
            if !words::is_reduced_fc(&word) || normal_form_of_word(&word)? != nf {
                return Err(Error::InvalidNormalForm(format!("{:?} is not a rank 1 normal form", nf.shape)));
            }
        }
        Ok(nf)
    }

    pub(crate) fn from_trusted(rank: Rank, shape: Shape) -> Self {
        AffineNormalForm { rank, shape }
    }

    pub fn identity(rank: Rank) -> Self {
        AffineNormalForm { rank, shape: Shape::LengthZero(BNormalForm::identity()) }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn affine_length(&self) -> usize {
        match &self.shape {
            Shape::LengthZero(_) => 0,
            Shape::LengthOne { .. } => 1,
            Shape::FirstType { k, .. } => *k as usize + 1,
            Shape::SecondType { prefix, k, .. } => prefix.len() + *k as usize,
        }
    }

    /// The reduced word spelled by the normal form.
    pub fn word(&self) -> Word {
        let n = self.rank.n() as i32;
        let t = self.rank.last();
        let mut out = Vec::new();
        match &self.shape {
            Shape::LengthZero(b) => b.push_letters(&mut out),
            Shape::LengthOne { i, tail } => {
                Bracket::new(*i, n - 1).push_letters(&mut out);
                out.push(t);
                match tail {
                    LengthOneTail::Stembridge(v) => v.push_letters(&mut out),
                    LengthOneTail::InverseBracket { h } => Bracket::new(*h, n - 1).push_inverse(&mut out),
                    LengthOneTail::InverseWithZeros { z, zeros } => {
                        Bracket::new(*z, n - 1).push_inverse(&mut out);
                        for &r in zeros {
                            Bracket::new(0, r).push_letters(&mut out);
                        }
                    }
                }
            }
            Shape::FirstType { i, k, f } => {
                Bracket::new(*i, n - 1).push_letters(&mut out);
                out.push(t);
                for _ in 0..*k {
                    Bracket::new(-(n - 1), n - 1).push_letters(&mut out);
                    out.push(t);
                }
                Bracket::new(*f, n - 1).push_inverse(&mut out);
            }
            Shape::SecondType { prefix, k, tail } => {
                for &i in prefix {
                    Bracket::new(i, n - 1).push_letters(&mut out);
                    out.push(t);
                }
                for _ in 0..*k {
                    Bracket::new(0, n - 1).push_letters(&mut out);
                    out.push(t);
                }
                tail.push_letters(&mut out);
            }
        }
        Word::from_trusted(self.rank, out)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank.n() as i32;
        let bad = |msg: &str| Err(Error::InvalidNormalForm(format!("{msg}: {:?}", self.shape)));
        let open = |x: i32| -n < x && x <= n;
        match &self.shape {
            Shape::LengthZero(b) => b.validate(self.rank),
            Shape::LengthOne { i, tail } => {
                if !open(*i) {
                    return bad("i out of range");
                }
                match tail {
                    LengthOneTail::Stembridge(v) => {
                        v.validate(self.rank)?;
                        if *i <= 0 {
                            return bad("a type B tail needs i > 0");
                        }
                        let ok = v
                            .brackets
                            .iter()
                            .enumerate()
                            .all(|(j, b)| b.l.abs() == n - (j as i32 + 1) || b.l.abs() < *i);
                        if !ok {
                            return bad("tail bracket violates |l_j| = n - j or |l_j| < i");
                        }
                        Ok(())
                    }
                    LengthOneTail::InverseBracket { h } => {
                        if *i > 0 || !open(*h) {
                            return bad("inverse bracket needs i <= 0 and h in (-n, n]");
                        }
                        Ok(())
                    }
                    LengthOneTail::InverseWithZeros { z, zeros } => {
                        let decreasing = zeros.windows(2).all(|w| w[0] > w[1]);
                        let ok = *i == 0
                            && !zeros.is_empty()
                            && decreasing
                            && *zeros.last().unwrap() >= 0
                            && zeros[0] < *z
                            && 2 <= *z
                            && *z <= n;
                        if !ok {
                            return bad("needs i = 0 and 0 <= r_m < ... < r_1 < z <= n with z >= 2");
                        }
                        Ok(())
                    }
                }
            }
            Shape::FirstType { i, k, f } => {
                if *k < 1 || !open(*i) || !open(*f) {
                    return bad("first type needs k >= 1 and i, f in (-n, n]");
                }
                Ok(())
            }
            Shape::SecondType { prefix, k, tail } => {
                tail.validate(self.rank)?;
                let p = prefix.len();
                if p + (*k as usize) < 2 {
                    return bad("affine length must be at least 2");
                }
                if p > 0 {
                    let last = prefix[p - 1];
                    let head_ok = prefix[..p - 1].windows(2).all(|w| w[0] > w[1])
                        && prefix[0] <= n
                        && (p == 1 || prefix[p - 2] > last.abs())
                        && last != 0;
                    if !head_ok {
                        return bad("prefix must satisfy n >= i_1 > ... > i_{p-1} > |i_p| > 0");
                    }
                    if last < 0 && (*k != 0 || !tail.is_identity() || last == -(n - 1)) {
                        return bad("negative i_p needs k = 0, trivial tail and i_p != -(n-1)");
                    }
                }
                if *k > 0 {
                    let zeros = tail.brackets.iter().all(|b| b.l == 0);
                    if !zeros {
                        return bad("k > 0 needs a tail of the form [0, r_1] ... [0, r_u]");
                    }
                } else if p > 0 && prefix[p - 1] > 0 {
                    if let Some(b) = tail.brackets.first() {
                        if b.l.abs() >= prefix[p - 1] {
                            return bad("k = 0 needs |l_1| < i_p");
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

pub fn word_of_normal_form(nf: &AffineNormalForm) -> Word {
    nf.word()
}
