//! Left and right positivity, read off the normal form, and the two
//! length-decreasing maps used to pass to the quotients.

use super::{normal_form_of_word, AffineNormalForm, BNormalForm, Bracket, LengthOneTail, Shape};
use crate::words::{self, Letter, Word};
use crate::{Error, Result};

/// Why an element contains `1,0,1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeftViolation {
    /// affine length at least two, first type
    FirstType,
    /// second type, `k = 0`, `i_p < 0`
    NegativePrefix,
    /// second type, `k = 0`, `i_p > 0`, negative tail
    SecondTypeNegativeTail,
    /// affine length one, `i < 0`, `h >= 0`
    NegativeHead,
    /// affine length one, `i < 0`, `h < 0`
    BothNegative,
    /// affine length one, `i = 0`, `v = [h, n-1]^{-1}` with `h < 0`
    NegativeInverse,
    /// affine length one, `i > 0`, negative tail
    LengthOneNegativeTail,
    /// affine length zero, negative type B element
    NegativeB,
    /// rank 1, found by direct search
    RankOne,
}

/// Why a left-positive element contains `n-1,n,n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RightViolation {
    /// `0 < i < n`, tail starting with `[n-1, g_1]`
    Stembridge,
    /// `i = 0`, `v = [h, n-1]^{-1}` with `0 <= h < n`
    InverseBracket,
    /// `i = 0`, `v = [z, n-1]^{-1} [0, r_1] ... [0, r_m]` with `z < n`
    InverseWithZeros,
    /// not left-positive, or rank 1; found by direct search
    Detected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarTag {
    One,
    KappaR,
}

fn contains(nf: &AffineNormalForm, pattern: [Letter; 3]) -> bool {
    let pattern = Word::from_trusted(nf.rank(), pattern.to_vec());
    words::contains_factor(&nf.word(), &pattern).expect("ranks agree")
}

pub fn left_violation(nf: &AffineNormalForm) -> Option<LeftViolation> {
    use LeftViolation::*;
    if nf.rank().n() == 1 {
        return contains(nf, [1, 0, 1]).then_some(RankOne);
    }
    match nf.shape() {
        Shape::FirstType { .. } => Some(FirstType),
        Shape::SecondType { prefix, k: 0, tail } => match prefix.last() {
            Some(&ip) if ip < 0 => Some(NegativePrefix),
            Some(_) if tail.is_negative() => Some(SecondTypeNegativeTail),
            _ => None,
        },
        Shape::SecondType { .. } => None,
        Shape::LengthOne { i, tail } => match (i.signum(), tail) {
            (-1, LengthOneTail::InverseBracket { h }) if *h >= 0 => Some(NegativeHead),
            (-1, LengthOneTail::InverseBracket { .. }) => Some(BothNegative),
            (0, LengthOneTail::InverseBracket { h }) if *h < 0 => Some(NegativeInverse),
            (1, LengthOneTail::Stembridge(v)) if v.is_negative() => Some(LengthOneNegativeTail),
            _ => None,
        },
        Shape::LengthZero(b) => b.is_negative().then_some(NegativeB),
    }
}

pub fn right_violation(nf: &AffineNormalForm) -> Option<RightViolation> {
    let rank = nf.rank();
    let n = rank.n() as i32;
    if n == 1 || left_violation(nf).is_some() {
        let m = rank.last();
        return contains(nf, [m - 1, m, m - 1]).then_some(RightViolation::Detected);
    }
    match nf.shape() {
        Shape::LengthOne { i, tail } => match tail {
            LengthOneTail::Stembridge(v) => {
                let b = v.brackets();
                let ok = 0 < *i
                    && *i < n
                    && b.first().is_some_and(|b| b.l == n - 1)
                    && b.iter().enumerate().skip(1).all(|(j, b)| b.l == n - 1 - j as i32 || (0 <= b.l && b.l < *i));
                ok.then_some(RightViolation::Stembridge)
            }
            LengthOneTail::InverseBracket { h } => {
                (*i == 0 && 0 <= *h && *h < n).then_some(RightViolation::InverseBracket)
            }
            LengthOneTail::InverseWithZeros { z, .. } => (*z < n).then_some(RightViolation::InverseWithZeros),
        },
        _ => None,
    }
}

pub fn is_left_positive(nf: &AffineNormalForm) -> bool {
    left_violation(nf).is_none()
}

pub fn is_right_positive(nf: &AffineNormalForm) -> bool {
    right_violation(nf).is_none()
}

pub fn is_positive(nf: &AffineNormalForm) -> bool {
    is_left_positive(nf) && is_right_positive(nf)
}

fn normalize(nf: &AffineNormalForm, letters: Vec<Letter>) -> Result<AffineNormalForm> {
    normal_form_of_word(&Word::from_trusted(nf.rank(), letters))
}

fn flip_last(b: &BNormalForm) -> BNormalForm {
    let mut brackets = b.brackets().to_vec();
    if let Some(last) = brackets.last_mut() {
        last.l = -last.l;
    }
    BNormalForm::from_trusted(brackets)
}

/// The shorter element `w̄` attached to a non-left-positive `w`, with the tag
/// of the scalar relating their images in the left quotient.
pub fn bar(nf: &AffineNormalForm) -> Result<(AffineNormalForm, BarTag)> {
    let violation = left_violation(nf).ok_or_else(|| Error::Precondition(format!("{} is left-positive", nf.word())))?;
    let rank = nf.rank();
    let n = rank.n() as i32;
    if violation == LeftViolation::RankOne {
        // the only such element is 1,0,1, sent to 1
        return Ok((normalize(nf, vec![1])?, BarTag::One));
    }
    let replaced = match nf.shape() {
        Shape::FirstType { i, k, f } => {
            if *f < 0 {
                let shape = Shape::FirstType { i: *i, k: *k, f: -f };
                return Ok((AffineNormalForm::from_trusted(rank, shape), BarTag::One));
            }
            if *k == 1 && *f == n && *i == n {
                let t = rank.last();
                return Ok((normalize(nf, vec![t, t - 1, t])?, BarTag::One));
            }
            let shorter = Shape::FirstType { i: *i, k: k - 1, f: *f };
            if *k > 1 {
                return Ok((AffineNormalForm::from_trusted(rank, shorter), BarTag::KappaR));
            }
            let word = AffineNormalForm::from_trusted(rank, shorter).word();
            return Ok((normal_form_of_word(&word)?, BarTag::KappaR));
        }
        Shape::SecondType { prefix, k, tail } => {
            let mut prefix = prefix.clone();
            let mut tail = tail.clone();
            match violation {
                LeftViolation::NegativePrefix => {
                    let last = prefix.last_mut().expect("violation needs a prefix");
                    *last = -*last;
                }
                _ => tail = flip_last(&tail),
            }
            Shape::SecondType { prefix, k: *k, tail }
        }
        Shape::LengthOne { i, tail } => match (violation, tail) {
            (LeftViolation::NegativeHead, _) => Shape::LengthOne { i: -i, tail: tail.clone() },
            (_, LengthOneTail::InverseBracket { h }) => {
                Shape::LengthOne { i: *i, tail: LengthOneTail::InverseBracket { h: -h } }
            }
            (_, LengthOneTail::Stembridge(v)) => {
                Shape::LengthOne { i: *i, tail: LengthOneTail::Stembridge(flip_last(v)) }
            }
            _ => return Err(Error::Inconsistency(format!("unexpected violation {violation:?}"))),
        },
        Shape::LengthZero(b) => Shape::LengthZero(flip_last(b)),
    };
    let word = AffineNormalForm::from_trusted(rank, replaced).word();
    Ok((normal_form_of_word(&word)?, BarTag::One))
}

/// The shorter positive element `w̃` attached to a left-positive element
/// that is not right-positive.
pub fn tilde(nf: &AffineNormalForm) -> Result<AffineNormalForm> {
    let not_applicable = || Error::Precondition(format!("{} is not left- but not right-positive", nf.word()));
    if left_violation(nf).is_some() {
        return Err(not_applicable());
    }
    let violation = right_violation(nf).ok_or_else(not_applicable)?;
    let n = nf.rank().n() as i32;
    let mut out: Vec<Letter> = Vec::new();
    match (violation, nf.shape()) {
        // rank 1: the only such element is 0,1,0, sent to 0
        (RightViolation::Detected, _) => out.push(0),
        (RightViolation::Stembridge, Shape::LengthOne { i, tail: LengthOneTail::Stembridge(v) }) => {
            let b = v.brackets();
            // length of the initial run l_j = n - j; a later l_j = n - j
            // does not chain with the contracted braid
            let alpha = (1..=b.len()).take_while(|&j| b[j - 1].l == n - j as i32).count();
            let l_alpha = b[alpha - 1].l;
            if *i <= l_alpha {
                Bracket::new(*i, l_alpha).push_letters(&mut out);
            } else {
                Bracket::new(l_alpha, *i).push_inverse(&mut out);
            }
            for br in &b[alpha..] {
                br.push_letters(&mut out);
            }
        }
        (RightViolation::InverseBracket, Shape::LengthOne { tail: LengthOneTail::InverseBracket { h }, .. }) => {
            if *h > 0 {
                Bracket::new(0, *h).push_letters(&mut out);
            } else {
                out.extend([0, 1, 0]);
            }
        }
        (
            RightViolation::InverseWithZeros,
            Shape::LengthOne { tail: LengthOneTail::InverseWithZeros { z, zeros }, .. },
        ) => {
            Bracket::new(0, *z).push_letters(&mut out);
            for &r in zeros {
                Bracket::new(0, r).push_letters(&mut out);
            }
        }
        _ => return Err(Error::Inconsistency(format!("unexpected violation {violation:?}"))),
    }
    normalize(nf, out)
}
