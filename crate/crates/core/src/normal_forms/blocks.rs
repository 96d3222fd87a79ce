//! Positive elements as products of rigid blocks `<l, r> = l, l+1, ..., r`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::{is_positive, normal_form_of_word, AffineNormalForm};
use crate::words::{self, Letter, Rank, Word};
use crate::{Error, Result};

/// `<l_1, r_1> ... <l_k, r_k>` with both sequences weakly decreasing,
/// `l_i <= r_i`, repeated `l` only at 0 and repeated `r` only at `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveBlocks {
    rank: Rank,
    blocks: Vec<(Letter, Letter)>,
}

fn may_follow(n: Letter, prev: (Letter, Letter), next: (Letter, Letter)) -> bool {
    let ((l0, r0), (l1, r1)) = (prev, next);
    l1 <= l0 && r1 <= r0 && (l1 < l0 || l0 == 0) && (r1 < r0 || r0 == n)
}

impl PositiveBlocks {
    pub fn new(rank: Rank, blocks: Vec<(usize, usize)>) -> Result<Self> {
        let n = rank.n();
        let mut out = Vec::with_capacity(blocks.len());
        for &(l, r) in &blocks {
            if l > r || r > n {
                return Err(Error::InvalidBlocks(format!("<{l},{r}> is not a block for rank {n}")));
            }
            out.push((l as Letter, r as Letter));
        }
        for w in out.windows(2) {
            if !may_follow(rank.last(), w[0], w[1]) {
                return Err(Error::InvalidBlocks(format!(
                    "<{},{}> cannot follow <{},{}>",
                    w[1].0, w[1].1, w[0].0, w[0].1
                )));
            }
        }
        Ok(PositiveBlocks { rank, blocks: out })
    }

    pub fn identity(rank: Rank) -> Self {
        PositiveBlocks { rank, blocks: Vec::new() }
    }

    /// Parses `"l:r,l:r,..."`; the empty string is the identity.
    pub fn parse(rank: Rank, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::identity(rank));
        }
        let blocks = text
            .split(',')
            .map(|pair| {
                let (l, r) = pair.split_once(':').ok_or_else(|| Error::Parse(format!("bad block {pair:?}")))?;
                let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad block {pair:?}")));
                Ok((num(l)?, num(r)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, blocks)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn blocks(&self) -> &[(Letter, Letter)] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of blocks reaching `n`, which is the affine length.
    pub fn affine_length(&self) -> usize {
        self.blocks.iter().filter(|b| b.1 == self.rank.last()).count()
    }

    pub fn word(&self) -> Word {
        let letters = self.blocks.iter().flat_map(|&(l, r)| l..=r).collect();
        Word::from_trusted(self.rank, letters)
    }
}

impl fmt::Display for PositiveBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (l, r)) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}:{r}")?;
        }
        Ok(())
    }
}

fn extend(rank: Rank, remaining: usize, current: &mut Vec<(Letter, Letter)>, visit: &mut dyn FnMut(&PositiveBlocks)) {
    let n = rank.last();
    if remaining == 0 {
        visit(&PositiveBlocks { rank, blocks: current.clone() });
    }
    let prev = current.last().copied();
    let (lmax, rmax) = prev.unwrap_or((n, n));
    for r in (0..=rmax).rev() {
        if r == n && remaining == 0 {
            continue;
        }
        for l in (0..=lmax.min(r)).rev() {
            if prev.is_none_or(|p| may_follow(n, p, (l, r))) {
                current.push((l, r));
                extend(rank, remaining - usize::from(r == n), current, visit);
                current.pop();
            }
        }
    }
}

/// Calls `visit` on every block sequence with exactly `s` blocks reaching
/// `n` that extends `prefix` (which must itself be valid).
pub fn for_each_positive_blocks(
    rank: Rank,
    s: usize,
    prefix: &[(Letter, Letter)],
    visit: &mut dyn FnMut(&PositiveBlocks),
) {
    let n = rank.last();
    let used = prefix.iter().filter(|b| b.1 == n).count();
    if used > s {
        return;
    }
    let mut current = prefix.to_vec();
    extend(rank, s - used, &mut current, visit);
}

pub fn positive_blocks(rank: Rank, s: usize) -> Vec<PositiveBlocks> {
    let mut out = Vec::new();
    for_each_positive_blocks(rank, s, &[], &mut |b| out.push(b.clone()));
    out
}

type Index = HashMap<Vec<Letter>, PositiveBlocks>;

fn index(rank: Rank, s: usize) -> Arc<Index> {
    type Cache = Mutex<HashMap<(Rank, usize), Arc<OnceLock<Arc<Index>>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let slot = {
        let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
        cache.entry((rank, s)).or_default().clone()
    };
    slot.get_or_init(|| {
        let map =
            positive_blocks(rank, s).into_iter().map(|b| (words::lex_min(rank.n(), b.word().letters()), b)).collect();
        Arc::new(map)
    })
    .clone()
}

/// The block sequence of a positive element, found by search.
pub fn positive_blocks_of(nf: &AffineNormalForm) -> Result<PositiveBlocks> {
    if !is_positive(nf) {
        return Err(Error::Precondition(format!("{} is not positive", nf.word())));
    }
    blocks_of_word(&nf.word())
}

/// The block sequence whose word lies in the class of `word`, if any.
pub fn blocks_of_word(word: &Word) -> Result<PositiveBlocks> {
    let rank = word.rank();
    let key = words::lex_min(rank.n(), word.letters());
    index(rank, words::affine_length(word))
        .get(&key)
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("{word} is not a product of rigid blocks")))
}

pub fn nf_of_positive_blocks(blocks: &PositiveBlocks) -> Result<AffineNormalForm> {
    normal_form_of_word(&blocks.word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn validation() {
        let r = rank(8);
        let b = PositiveBlocks::parse(r, "7:8,4:8,3:7,1:4,0:1,0:0").unwrap();
        assert_eq!(b.affine_length(), 2);
        assert_eq!(b.to_string(), "7:8,4:8,3:7,1:4,0:1,0:0");
        assert!(PositiveBlocks::parse(r, "3:7,3:6").is_err());
        assert!(PositiveBlocks::parse(r, "3:7,2:7").is_err());
        assert!(PositiveBlocks::parse(r, "3:2").is_err());
        assert!(PositiveBlocks::parse(r, "3:9").is_err());
        assert!(PositiveBlocks::parse(r, "3-9").is_err());
        assert!(PositiveBlocks::parse(r, "").unwrap().is_empty());
    }

    #[test]
    fn counts_match_blobbed_triangle() {
        // C_{2n, 2s}
        assert_eq!(positive_blocks(rank(1), 0).len(), 2);
        assert_eq!(positive_blocks(rank(1), 1).len(), 4);
        assert_eq!(positive_blocks(rank(1), 5).len(), 4);
        assert_eq!(positive_blocks(rank(2), 0).len(), 6);
        assert_eq!(positive_blocks(rank(2), 1).len(), 14);
        assert_eq!(positive_blocks(rank(2), 2).len(), 16);
        assert_eq!(positive_blocks(rank(3), 2).len(), 62);
    }

    #[test]
    fn round_trip() {
        let r = rank(3);
        for s in 0..3 {
            for b in positive_blocks(r, s) {
                let nf = nf_of_positive_blocks(&b).unwrap();
                assert!(is_positive(&nf));
                assert_eq!(positive_blocks_of(&nf).unwrap(), b);
            }
        }
    }
}
