use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::{AffineNormalForm, BNormalForm, Bracket, LengthOneTail, Shape};
use crate::words::{self, Letter, Rank, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Positive,
    Zeros,
    Closed,
}

fn extend_b(n: i32, current: &mut Vec<Bracket>, phase: Phase, out: &mut Vec<BNormalForm>) {
    let (prev_g, prev_l) = match current.last() {
        Some(b) => (b.g, Some(b.l)),
        None => (n, None),
    };
    if phase == Phase::Closed {
        return;
    }
    for g in (0..prev_g).rev() {
        let mut choices: Vec<(i32, Phase)> = Vec::new();
        match phase {
            Phase::Zeros => choices.push((0, Phase::Zeros)),
            Phase::Positive => {
                let cap = prev_l.map_or(g, |l| g.min(l - 1));
                choices.extend((1..=cap).rev().map(|l| (l, Phase::Positive)));
                choices.push((0, Phase::Zeros));
                choices.extend((1..=cap).map(|m| (-m, Phase::Closed)));
            }
            Phase::Closed => unreachable!(),
        }
        for (l, next) in choices {
            current.push(Bracket::new(l, g));
            out.push(BNormalForm::from_trusted(current.clone()));
            extend_b(n, current, next, out);
            current.pop();
        }
    }
}

/// Every fully commutative element of type B_n in normal form, identity first.
pub fn generate_b(rank: Rank) -> Vec<BNormalForm> {
    let mut out = vec![BNormalForm::identity()];
    extend_b(rank.n() as i32, &mut Vec::new(), Phase::Positive, &mut out);
    out
}

fn zero_tails(n: i32) -> Vec<BNormalForm> {
    // [0, r_1] ... [0, r_u] with n > r_1 > ... > r_u >= 0, identity included
    fn rec(below: i32, cur: &mut Vec<Bracket>, out: &mut Vec<BNormalForm>) {
        out.push(BNormalForm::from_trusted(cur.clone()));
        for r in (0..below).rev() {
            cur.push(Bracket::new(0, r));
            rec(r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

fn length_zero(rank: Rank) -> Vec<Shape> {
    generate_b(rank).into_iter().map(Shape::LengthZero).collect()
}

fn length_one(rank: Rank) -> Vec<Shape> {
    let n = rank.n() as i32;
    let bs = generate_b(rank);
    let mut out = Vec::new();
    for i in (-n + 1..=n).rev() {
        if i > 0 {
            for v in &bs {
                let ok = v.brackets().iter().enumerate().all(|(j, b)| b.l.abs() == n - (j as i32 + 1) || b.l.abs() < i);
                if ok {
                    out.push(Shape::LengthOne { i, tail: LengthOneTail::Stembridge(v.clone()) });
                }
            }
        } else {
            for h in (-n + 1..=n).rev() {
                out.push(Shape::LengthOne { i, tail: LengthOneTail::InverseBracket { h } });
            }
            if i == 0 {
                // z = 1 would spell the same word as h = 0
                for z in (2..=n).rev() {
                    for tail in zero_tails(z) {
                        if tail.is_identity() {
                            continue;
                        }
                        let zeros = tail.brackets().iter().map(|b| b.g).collect();
                        out.push(Shape::LengthOne { i, tail: LengthOneTail::InverseWithZeros { z, zeros } });
                    }
                }
            }
        }
    }
    out
}

// n >= i_1 > ... > i_{p-1} > |i_p| > 0
fn prefixes(n: i32, p: usize) -> Vec<Vec<i32>> {
    fn rec(n: i32, p: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() + 1 == p {
            let bound = cur.last().map_or(n + 1, |&x| x);
            for x in (1..bound.min(n + 1)).rev() {
                for last in [x, -x] {
                    cur.push(last);
                    out.push(cur.clone());
                    cur.pop();
                }
            }
            return;
        }
        let bound = cur.last().map_or(n + 1, |&x| x);
        for x in (1..bound.min(n + 1)).rev() {
            cur.push(x);
            rec(n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p == 0 {
        out.push(Vec::new());
    } else {
        rec(n, p, &mut Vec::new(), &mut out);
    }
    out
}

fn length_at_least_two(rank: Rank, s: usize) -> Vec<Shape> {
    let n = rank.n() as i32;
    let mut out = Vec::new();
    let k = (s - 1) as u32;
    for i in (-n + 1..=n).rev() {
        for f in (-n + 1..=n).rev() {
            out.push(Shape::FirstType { i, k, f });
        }
    }
    let bs = generate_b(rank);
    let zeros = zero_tails(n);
    for p in 0..=s.min(rank.n()) {
        let k = (s - p) as u32;
        for prefix in prefixes(n, p) {
            let last = prefix.last().copied();
            if let Some(ip) = last.filter(|&x| x < 0) {
                if k == 0 && ip != -(n - 1) {
                    out.push(Shape::SecondType { prefix, k, tail: BNormalForm::identity() });
                }
                continue;
            }
            if k > 0 {
                for tail in &zeros {
                    out.push(Shape::SecondType { prefix: prefix.clone(), k, tail: tail.clone() });
                }
            } else {
                let ip = last.expect("k = 0 forces p = s >= 2");
                for tail in bs.iter().filter(|v| v.brackets().first().is_none_or(|b| b.l.abs() < ip)) {
                    out.push(Shape::SecondType { prefix: prefix.clone(), k, tail: tail.clone() });
                }
            }
        }
    }
    out
}

/// All fully commutative elements of affine length `s`, each exactly once,
/// enumerated from the parameters of their normal forms.
///
/// At rank 1 the parametrisation overcounts (the group is finite there), so
/// the candidates are filtered for full commutativity and deduplicated.
pub fn generate_fc(rank: Rank, s: usize) -> Vec<AffineNormalForm> {
    let shapes = match s {
        0 => length_zero(rank),
        1 => length_one(rank),
        _ => length_at_least_two(rank, s),
    };
    let forms = shapes.into_iter().map(|shape| AffineNormalForm::from_trusted(rank, shape));
    if rank.n() > 1 {
        return forms.collect();
    }
    let mut seen = HashSet::new();
    forms
        .filter(|nf| {
            let w = nf.word();
            words::is_reduced_fc(&w) && seen.insert(words::lex_min(1, w.letters()))
        })
        .collect()
}

pub fn count_fc(rank: Rank, s: usize) -> usize {
    generate_fc(rank, s).len()
}

type Index = HashMap<Vec<Letter>, AffineNormalForm>;

fn index(rank: Rank, s: usize) -> Arc<Index> {
    type Cache = Mutex<HashMap<(Rank, usize), Arc<OnceLock<Arc<Index>>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let slot = {
        let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
        cache.entry((rank, s)).or_default().clone()
    };
    slot.get_or_init(|| {
        let map =
            generate_fc(rank, s).into_iter().map(|nf| (words::lex_min(rank.n(), nf.word().letters()), nf)).collect();
        Arc::new(map)
    })
    .clone()
}

/// The normal form of the element represented by `word`, found by search
/// among the generated forms of the same affine length.
pub fn normal_form_of_word(word: &Word) -> Result<AffineNormalForm> {
    if !words::is_reduced_fc(word) {
        return Err(Error::NotReducedFc(word.to_string()));
    }
    let rank = word.rank();
    let s = words::affine_length(word);
    let key = words::lex_min(rank.n(), word.letters());
    index(rank, s).get(&key).cloned().ok_or_else(|| Error::Inconsistency(format!("no normal form found for {word}")))
}
