use std::collections::HashSet;

use rayon::prelude::*;

use super::{reduce, AlgebraLevel, Parameter, Scalar};
use crate::grid::{blobbed_bar, blobbed_tilde, is_blobbed, is_i_blobbed};
use crate::normal_forms::{
    bar, blocks_of_word, is_left_positive, is_positive, normal_form_of_word, positive_blocks, tilde, BarTag,
};
use crate::words::{self, Rank, Word};
use crate::{Error, Result};

/// Canonical words of the blobbed elements, which index the basis of the
/// symplectic blob algebra. Sorted by length, then lexicographically.
pub fn blobbed_basis(rank: Rank) -> Vec<Word> {
    let mut out: Vec<Word> = (0..=rank.n())
        .flat_map(|s| positive_blocks(rank, s))
        .filter(is_blobbed)
        .map(|b| words::lex_min_representative(&b.word()))
        .collect();
    out.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    out
}

fn precondition(e: Error) -> Error {
    Error::Precondition(e.to_string())
}

/// For a word indexing a basis element of `from` but not of `to`, checks
/// that its image in `to` is the predicted multiple of the image of the
/// shorter element attached to it.
pub fn quotient_image_check(from: AlgebraLevel, to: AlgebraLevel, word: &Word) -> Result<bool> {
    let kappa = |p| Scalar::param(p);
    let (target, factor) = match (from, to) {
        (AlgebraLevel::TL, AlgebraLevel::TwoBoundary) => {
            let nf = normal_form_of_word(word).map_err(precondition)?;
            if is_positive(&nf) {
                return Err(Error::Precondition(format!("{word} is positive")));
            }
            if !is_left_positive(&nf) {
                let (shorter, tag) = bar(&nf)?;
                let factor = match tag {
                    BarTag::One => kappa(Parameter::KappaL),
                    BarTag::KappaR => &kappa(Parameter::KappaL) * &kappa(Parameter::KappaR),
                };
                (shorter.word(), factor)
            } else {
                (tilde(&nf)?.word(), kappa(Parameter::KappaR))
            }
        }
        (AlgebraLevel::TwoBoundary, AlgebraLevel::SymplecticBlob) => {
            let blocks = blocks_of_word(word).map_err(precondition)?;
            if is_blobbed(&blocks) {
                return Err(Error::Precondition(format!("{word} is blobbed")));
            }
            let shorter = if is_i_blobbed(&blocks) { blobbed_tilde(&blocks)? } else { blobbed_bar(&blocks)? };
            (shorter, kappa(Parameter::Kappa))
        }
        _ => return Err(Error::Precondition(format!("{from} -> {to} is not a quotient step"))),
    };
    let (c1, w1) = reduce(to, word);
    let (c2, w2) = reduce(to, &target);
    Ok(w1 == w2 && c1 == &factor * &c2)
}

/// `b_x b_y = scalar * b_z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureEntry {
    pub x: Word,
    pub y: Word,
    pub scalar: Scalar,
    pub z: Word,
}

/// The full multiplication table of the symplectic blob algebra on its
/// blobbed basis, failing if some product leaves the basis.
pub fn structure_constants(level: AlgebraLevel, rank: Rank, max_entries: usize) -> Result<Vec<StructureEntry>> {
    if level != AlgebraLevel::SymplecticBlob {
        return Err(Error::Precondition(format!("{level} has an infinite basis")));
    }
    let basis = blobbed_basis(rank);
    let size = basis.len() * basis.len();
    if size > max_entries {
        return Err(Error::BudgetExceeded(format!("{size} table entries exceed {max_entries}")));
    }
    let members: HashSet<&Word> = basis.iter().collect();
    let pairs: Vec<(&Word, &Word)> = basis.iter().flat_map(|x| basis.iter().map(move |y| (x, y))).collect();
    pairs
        .par_iter()
        .map(|&(x, y)| {
            let (scalar, z) = reduce(level, &x.concat(y)?);
            if !members.contains(&z) {
                return Err(Error::Inconsistency(format!("[{x}] * [{y}] reduces to [{z}] outside the basis")));
            }
            Ok(StructureEntry { x: x.clone(), y: y.clone(), scalar, z })
        })
        .collect()
}
