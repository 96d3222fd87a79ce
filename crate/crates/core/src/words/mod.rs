//! Generator words and commutation classes.
//!
//! Generators are numbered `0..=n`: `0` is the special end node, `1..n`
//! are the interior nodes and `n` is the affine node. Two generators
//! commute when their indices differ by more than one.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::{Error, Result};

pub(crate) mod trace;

pub(crate) use trace::{Pattern, Trace};

pub type Letter = u8;

/// Default hard cap on the size of an enumerated commutation class.
pub const CLASS_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(u8);

impl Rank {
    pub const MAX: usize = 200;

    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX {
            return Err(Error::InvalidRank { n, max: Self::MAX });
        }
        Ok(Rank(n as u8))
    }

    pub fn n(self) -> usize {
        self.0 as usize
    }

    /// The affine generator `n`.
    pub fn last(self) -> Letter {
        self.0
    }

    pub fn check(self, index: usize) -> Result<Letter> {
        if index > self.n() {
            Err(Error::LetterOutOfRange { index, n: self.n() })
        } else {
            Ok(index as Letter)
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn commutes(rank: Rank, i: usize, j: usize) -> Result<bool> {
    rank.check(i)?;
    rank.check(j)?;
    Ok(i.abs_diff(j) > 1)
}

pub fn braid_order(rank: Rank, i: usize, j: usize) -> Result<u32> {
    rank.check(i)?;
    rank.check(j)?;
    if i == j {
        return Err(Error::EqualGenerators(i));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    let n = rank.n();
    Ok(if hi - lo > 1 {
        2
    } else if lo == 0 || hi == n {
        4
    } else {
        3
    })
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: Rank,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(rank: Rank, letters: Vec<Letter>) -> Result<Self> {
        for &x in &letters {
            rank.check(x as usize)?;
        }
        Ok(Word { rank, letters })
    }

    pub fn from_indices(rank: Rank, indices: &[usize]) -> Result<Self> {
        let letters = indices.iter().map(|&i| rank.check(i)).collect::<Result<_>>()?;
        Ok(Word { rank, letters })
    }

    pub fn identity(rank: Rank) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// Parses the comma-separated text form, e.g. `"1,0,1"`.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::identity(rank));
        }
        let indices = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad generator {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::from_indices(rank, &indices)
    }

    pub(crate) fn from_trusted(rank: Rank, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&x| (x as usize) <= rank.n()));
        Word { rank, letters }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank.n(), other.rank.n()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { rank: self.rank, letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// All words reachable from `word` by swapping adjacent commuting letters.
pub fn commutation_class(word: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.letters.clone());
    queue.push_back(word.letters.clone());
    while let Some(w) = queue.pop_front() {
        for k in 1..w.len() {
            if w[k - 1].abs_diff(w[k]) > 1 {
                let mut v = w.clone();
                v.swap(k - 1, k);
                if !seen.contains(&v) {
                    if seen.len() >= cap {
                        return Err(Error::ClassTooLarge { cap });
                    }
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen.into_iter().map(|letters| Word { rank: word.rank, letters }).collect())
}

/// Lexicographically least member of the commutation class of `letters`.
///
/// Repeatedly takes the smallest letter that can be moved to the front.
pub(crate) fn lex_min(n: usize, letters: &[Letter]) -> Vec<Letter> {
    let len = letters.len();
    let mut used = vec![false; len];
    let mut blocked = vec![false; n + 2];
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        blocked.fill(false);
        let mut best: Option<(Letter, usize)> = None;
        for q in 0..len {
            if used[q] {
                continue;
            }
            let c = letters[q];
            if !blocked[c as usize] {
                if best.is_none_or(|(b, _)| c < b) {
                    best = Some((c, q));
                }
                if c == 0 {
                    break;
                }
            }
            let ci = c as usize;
            blocked[ci.saturating_sub(1)] = true;
            blocked[ci] = true;
            blocked[ci + 1] = true;
        }
        let (c, q) = best.expect("some letter is always movable to the front");
        used[q] = true;
        out.push(c);
    }
    out
}

/// Lexicographically least member of the commutation class; defined for
/// every word, reduced or not.
pub fn lex_min_representative(word: &Word) -> Word {
    Word { rank: word.rank, letters: lex_min(word.rank.n(), &word.letters) }
}

fn forbidden_factors(rank: Rank) -> Vec<Pattern> {
    let n = rank.last();
    let mut out = Vec::new();
    for s in 0..=n {
        out.push(vec![s, s]);
    }
    for s in 0..n {
        let t = s + 1;
        if s == 0 || t == n {
            out.push(vec![s, t, s, t]);
            out.push(vec![t, s, t, s]);
        } else {
            out.push(vec![s, t, s]);
            out.push(vec![t, s, t]);
        }
    }
    out.iter().map(|u| Pattern::new(rank, u).expect("braid factors are connected")).collect()
}

/// Whether `word` is a reduced word of a fully commutative element, i.e. no
/// member of its commutation class has a factor `ss`, or a braid factor
/// `sts` / `stst` of full length.
pub fn is_reduced_fc(word: &Word) -> bool {
    if word.len() < 2 {
        return true;
    }
    let trace = Trace::new(word.rank, &word.letters);
    !forbidden_factors(word.rank).iter().any(|p| trace.contains(p))
}

/// The representative used throughout: the lexicographically least member
/// of the commutation class.
pub fn canonical_word(word: &Word) -> Result<Word> {
    if !is_reduced_fc(word) {
        return Err(Error::NotReducedFc(word.to_string()));
    }
    Ok(lex_min_representative(word))
}

/// Whether some member of the class of `word` has some member of the class
/// of `pattern` as a contiguous factor. Enumerates both classes.
pub fn contains_pattern(word: &Word, pattern: &Word) -> Result<bool> {
    contains_pattern_capped(word, pattern, CLASS_CAP)
}

pub fn contains_pattern_capped(word: &Word, pattern: &Word, cap: usize) -> Result<bool> {
    if word.rank != pattern.rank {
        return Err(Error::RankMismatch(word.rank.n(), pattern.rank.n()));
    }
    if pattern.is_empty() {
        return Ok(true);
    }
    if pattern.len() > word.len() {
        return Ok(false);
    }
    let targets: HashSet<Vec<Letter>> = commutation_class(pattern, cap)?.into_iter().map(Word::into_letters).collect();
    let m = pattern.len();
    Ok(commutation_class(word, cap)?.iter().any(|w| w.letters.windows(m).any(|f| targets.contains(f))))
}

/// Heap-based containment test; agrees with [`contains_pattern`] and does not
/// enumerate classes. Disconnected patterns fall back to class enumeration.
pub fn contains_factor(word: &Word, pattern: &Word) -> Result<bool> {
    if word.rank != pattern.rank {
        return Err(Error::RankMismatch(word.rank.n(), pattern.rank.n()));
    }
    if pattern.is_empty() {
        return Ok(true);
    }
    match Pattern::new(word.rank, &pattern.letters) {
        Some(p) => Ok(Trace::new(word.rank, &word.letters).contains(&p)),
        None => contains_pattern(word, pattern),
    }
}

/// Number of occurrences of the affine generator `n`.
pub fn affine_length(word: &Word) -> usize {
    let n = word.rank.last();
    word.letters.iter().filter(|&&x| x == n).count()
}
