//! Reduction of words in the generators `U_0, ..., U_n` to a scalar times a
//! monomial basis element, in the Temperley-Lieb algebra of type affine C
//! and its two quotients.
//!
//! Every relation other than commutation has the form `lhs = scalar * rhs`
//! with `rhs` shorter than `lhs`. Redexes are found modulo commutation, so
//! reduction runs on the lex-min representative and stops at a word with
//! no occurrence of any left-hand side.

mod checks;
mod scalar;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

pub use checks::{blobbed_basis, quotient_image_check, structure_constants, StructureEntry};
pub use scalar::{Exponents, Parameter, Scalar};

use crate::grid::{oblique_i, oblique_j, w_i_blocks, w_j_blocks};
use crate::normal_forms::PositiveBlocks;
use crate::words::{self, braid_order, trace::Pattern, trace::Trace, Letter, Rank, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraLevel {
    /// Temperley-Lieb algebra of type affine C.
    TL,
    /// Two-boundary Temperley-Lieb algebra.
    TwoBoundary,
    /// Symplectic blob algebra.
    SymplecticBlob,
}

impl AlgebraLevel {
    pub const ALL: [AlgebraLevel; 3] = [AlgebraLevel::TL, AlgebraLevel::TwoBoundary, AlgebraLevel::SymplecticBlob];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraLevel::TL => "tl",
            AlgebraLevel::TwoBoundary => "2btl",
            AlgebraLevel::SymplecticBlob => "sb",
        }
    }
}

impl fmt::Display for AlgebraLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraLevel::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown algebra level {s:?}")))
    }
}

/// `lhs = parameter * rhs`, or `lhs = rhs` when there is no parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
    pub parameter: Option<Parameter>,
}

struct CompiledRule {
    rule: Rule,
    pattern: Pattern,
}

fn delta(rank: Rank, s: Letter) -> Parameter {
    if s == 0 {
        Parameter::DeltaL
    } else if s == rank.last() {
        Parameter::DeltaR
    } else {
        Parameter::Delta
    }
}

fn tl_rules(rank: Rank) -> Vec<Rule> {
    let n = rank.last();
    let mut out = Vec::new();
    for s in 0..=n {
        out.push(Rule { lhs: vec![s, s], rhs: vec![s], parameter: Some(delta(rank, s)) });
    }
    for s in 0..n {
        let t = s + 1;
        if braid_order(rank, s as usize, t as usize).expect("in range") == 3 {
            out.push(Rule { lhs: vec![s, t, s], rhs: vec![s], parameter: None });
            out.push(Rule { lhs: vec![t, s, t], rhs: vec![t], parameter: None });
        } else {
            let k = if s == 0 { Parameter::KappaL } else { Parameter::KappaR };
            out.push(Rule { lhs: vec![s, t, s, t], rhs: vec![s, t], parameter: Some(k) });
            out.push(Rule { lhs: vec![t, s, t, s], rhs: vec![t, s], parameter: Some(k) });
        }
    }
    out
}

fn blocks_letters(rank: Rank, blocks: Vec<(usize, usize)>) -> Vec<Letter> {
    PositiveBlocks::new(rank, blocks).expect("pattern blocks are valid").word().into_letters()
}

/// The relations of `level`, in the order they are tried. Rules whose
/// left-hand side already occurs earlier are dropped, which only happens
/// at rank 1 where `IJI` and `JIJ` coincide with the boundary relations.
pub fn rules(level: AlgebraLevel, rank: Rank) -> Vec<Rule> {
    let n = rank.last();
    let mut out = tl_rules(rank);
    if level >= AlgebraLevel::TwoBoundary {
        out.push(Rule { lhs: vec![1, 0, 1], rhs: vec![1], parameter: Some(Parameter::KappaL) });
        out.push(Rule { lhs: vec![n - 1, n, n - 1], rhs: vec![n - 1], parameter: Some(Parameter::KappaR) });
    }
    if level == AlgebraLevel::SymplecticBlob {
        let k = Some(Parameter::Kappa);
        out.push(Rule {
            lhs: blocks_letters(rank, w_i_blocks(rank.n())),
            rhs: oblique_i(rank).generators().to_vec(),
            parameter: k,
        });
        out.push(Rule {
            lhs: blocks_letters(rank, w_j_blocks(rank.n())),
            rhs: oblique_j(rank).generators().to_vec(),
            parameter: k,
        });
    }
    let mut seen: Vec<Vec<Letter>> = Vec::new();
    out.retain(|r| {
        let key = words::lex_min(rank.n(), &r.lhs);
        if seen.contains(&key) {
            return false;
        }
        seen.push(key);
        true
    });
    out
}

fn compiled(level: AlgebraLevel, rank: Rank) -> Arc<Vec<CompiledRule>> {
    type Cache = Mutex<HashMap<(AlgebraLevel, Rank), Arc<Vec<CompiledRule>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
    cache
        .entry((level, rank))
        .or_insert_with(|| {
            let rules = rules(level, rank)
                .into_iter()
                .map(|rule| {
                    let pattern = Pattern::new(rank, &rule.lhs).expect("relation left-hand sides are connected");
                    CompiledRule { rule, pattern }
                })
                .collect();
            Arc::new(rules)
        })
        .clone()
}

/// Which redex to contract when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// the occurrence whose first position is smallest
    #[default]
    Leftmost,
    /// the occurrence whose last position is largest
    Rightmost,
}

/// `word = scalar * b_w` where `w` is the returned canonical word.
pub fn reduce(level: AlgebraLevel, word: &Word) -> (Scalar, Word) {
    reduce_with(level, word, Strategy::Leftmost)
}

pub fn reduce_with(level: AlgebraLevel, word: &Word, strategy: Strategy) -> (Scalar, Word) {
    let rank = word.rank();
    let rules = compiled(level, rank);
    let mut letters = words::lex_min(rank.n(), word.letters());
    let mut exponents: Exponents = [0; 6];
    loop {
        let trace = Trace::new(rank, &letters);
        let mut best: Option<(usize, &CompiledRule, Vec<usize>)> = None;
        for rule in rules.iter() {
            for occ in trace.occurrences(&rule.pattern) {
                let key = match strategy {
                    Strategy::Leftmost => *occ.iter().min().unwrap(),
                    Strategy::Rightmost => usize::MAX - *occ.iter().max().unwrap(),
                };
                if best.as_ref().is_none_or(|b| key < b.0) {
                    best = Some((key, rule, occ));
                }
            }
        }
        let Some((_, rule, occ)) = best else {
            break;
        };
        let next = trace.rewrite(&occ, &rule.rule.rhs);
        assert!(next.len() < letters.len(), "rewriting must shorten the word");
        if let Some(p) = rule.rule.parameter {
            exponents[p as usize] += 1;
        }
        letters = words::lex_min(rank.n(), &next);
    }
    (Scalar::monomial(exponents), Word::from_trusted(rank, letters))
}

/// Whether `word` is irreducible at `level`, i.e. indexes a basis element.
pub fn is_basis_word(level: AlgebraLevel, word: &Word) -> bool {
    let (scalar, w) = reduce(level, word);
    scalar.is_one() && w.len() == word.len()
}

/// A monomial basis element `b_w`, stored by canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    level: AlgebraLevel,
    word: Word,
}

impl BasisElement {
    pub fn new(level: AlgebraLevel, word: &Word) -> Result<Self> {
        if !is_basis_word(level, word) {
            return Err(Error::Precondition(format!("{word} does not index a basis element of {level}")));
        }
        Ok(BasisElement { level, word: words::lex_min_representative(word) })
    }

    pub fn identity(level: AlgebraLevel, rank: Rank) -> Self {
        BasisElement { level, word: Word::identity(rank) }
    }

    pub fn level(&self) -> AlgebraLevel {
        self.level
    }

    pub fn word(&self) -> &Word {
        &self.word
    }
}

fn check_same(x: &BasisElement, y: &BasisElement) -> Result<()> {
    if x.level != y.level {
        return Err(Error::LevelMismatch(x.level.to_string(), y.level.to_string()));
    }
    if x.word.rank() != y.word.rank() {
        return Err(Error::RankMismatch(x.word.rank().n(), y.word.rank().n()));
    }
    Ok(())
}

/// `b_x b_y = scalar * b_z`.
pub fn multiply(x: &BasisElement, y: &BasisElement) -> Result<(Scalar, BasisElement)> {
    check_same(x, y)?;
    let (scalar, word) = reduce(x.level, &x.word.concat(&y.word)?);
    Ok((scalar, BasisElement { level: x.level, word }))
}

/// A finite linear combination of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    level: AlgebraLevel,
    rank: Rank,
    terms: BTreeMap<Word, Scalar>,
}

impl AlgebraElement {
    pub fn zero(level: AlgebraLevel, rank: Rank) -> Self {
        AlgebraElement { level, rank, terms: BTreeMap::new() }
    }

    pub fn from_basis(b: &BasisElement) -> Self {
        let mut out = AlgebraElement::zero(b.level, b.word.rank());
        out.terms.insert(b.word.clone(), Scalar::one());
        out
    }

    /// The image of an arbitrary word of generators.
    pub fn from_word(level: AlgebraLevel, word: &Word) -> Self {
        let (scalar, w) = reduce(level, word);
        let mut out = AlgebraElement::zero(level, word.rank());
        out.add_term(w, scalar);
        out
    }

    pub fn level(&self) -> AlgebraLevel {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level.to_string(), other.level.to_string()));
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank.n(), other.rank.n()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.level, self.rank);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), c * d);
        }
        out
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = AlgebraElement::zero(self.level, self.rank);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (s, z) = reduce(self.level, &x.concat(y)?);
                out.add_term(z, &(a * b) * &s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) * [{w}]")?;
        }
        Ok(())
    }
}
