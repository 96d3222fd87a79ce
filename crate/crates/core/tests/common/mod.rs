//! Brute-force oracles shared by the integration tests. None of these use
//! the library's search code; they work directly on letter vectors.
#![allow(dead_code)]

pub mod tables;

use std::collections::{BTreeSet, HashSet, VecDeque};

use fcblob::{Rank, Word};
use proptest::prelude::*;

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn word(n: usize, letters: &[u8]) -> Word {
    Word::new(rank(n), letters.to_vec()).unwrap()
}

pub fn m(n: usize, a: u8, b: u8) -> usize {
    let (a, b) = (a.min(b) as usize, a.max(b) as usize);
    if a == b {
        1
    } else if b - a > 1 {
        2
    } else if a == 0 || b == n {
        4
    } else {
        3
    }
}

fn closure(start: &[u8], moves: impl Fn(&[u8]) -> Vec<Vec<u8>>) -> HashSet<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        for v in moves(&w) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

fn swaps(w: &[u8]) -> Vec<Vec<u8>> {
    (1..w.len())
        .filter(|&k| w[k - 1].abs_diff(w[k]) > 1)
        .map(|k| {
            let mut v = w.to_vec();
            v.swap(k - 1, k);
            v
        })
        .collect()
}

/// Words reachable by swapping adjacent commuting letters.
pub fn class(w: &[u8]) -> HashSet<Vec<u8>> {
    closure(w, swaps)
}

fn alternating_at(n: usize, w: &[u8], k: usize) -> Option<usize> {
    let (a, b) = (*w.get(k)?, *w.get(k + 1)?);
    if a.abs_diff(b) != 1 {
        return None;
    }
    let len = m(n, a, b);
    let ok = (0..len).all(|i| w.get(k + i) == Some(if i % 2 == 0 { &a } else { &b }));
    ok.then_some(len)
}

/// Words reachable by commutations and braid moves.
pub fn braid_closure(n: usize, w: &[u8]) -> HashSet<Vec<u8>> {
    closure(w, |w| {
        let mut out = swaps(w);
        for k in 0..w.len() {
            if let Some(len) = alternating_at(n, w, k) {
                let mut v = w.to_vec();
                for i in 0..len {
                    v[k + i] = if i % 2 == 0 { w[k + 1] } else { w[k] };
                }
                out.push(v);
            }
        }
        out
    })
}

fn has_forbidden_factor(n: usize, v: &[u8]) -> bool {
    v.windows(2).any(|p| p[0] == p[1]) || (0..v.len()).any(|k| alternating_at(n, v, k).is_some())
}

/// No class member has a factor `ss` or an alternating factor of length `m(s,t)`.
pub fn is_reduced_fc(n: usize, w: &[u8]) -> bool {
    !class(w).iter().any(|v| has_forbidden_factor(n, v))
}

pub fn canonical(w: &[u8]) -> Vec<u8> {
    class(w).into_iter().min().unwrap()
}

/// Some reduced expression of `w` has some reduced expression of `p` as a factor.
pub fn contains(n: usize, w: &[u8], p: &[u8]) -> bool {
    if p.is_empty() {
        return true;
    }
    let targets = braid_closure(n, p);
    braid_closure(n, w).iter().any(|v| v.windows(p.len()).any(|f| targets.contains(f)))
}

pub fn affine_length(n: usize, w: &[u8]) -> usize {
    w.iter().filter(|&&x| x as usize == n).count()
}

/// Canonical words of all fully commutative elements with affine length
/// at most `s`, grown one letter at a time from the identity, bucketed by
/// affine length.
pub fn brute_fc(n: usize, s: usize) -> Vec<BTreeSet<Vec<u8>>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut frontier = vec![Vec::new()];
    seen.insert(Vec::new());
    while let Some(w) = frontier.pop() {
        for x in 0..=n as u8 {
            let mut v = w.clone();
            v.push(x);
            if affine_length(n, &v) > s {
                continue;
            }
            let members = class(&v);
            if members.iter().any(|u| has_forbidden_factor(n, u)) {
                continue;
            }
            let c = members.into_iter().min().unwrap();
            if seen.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let mut out = vec![BTreeSet::new(); s + 1];
    for w in seen {
        out[affine_length(n, &w)].insert(w);
    }
    out
}

/// Random reduced fully commutative words: letters are appended greedily,
/// skipping any that would break full commutativity.
pub fn fc_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<u8>)> {
    (1..=max_n).prop_flat_map(move |n| {
        (Just(n), prop::collection::vec(0..=n as u8, 0..3 * max_len)).prop_map(move |(n, raw)| {
            let mut w = Vec::new();
            for x in raw {
                if w.len() == max_len {
                    break;
                }
                w.push(x);
                if !is_reduced_fc(n, &w) {
                    w.pop();
                }
            }
            (n, w)
        })
    })
}

/// The two maximal sets of commuting generators: odd and even letters.
pub fn long_patterns(n: usize) -> (Vec<u8>, Vec<u8>) {
    let odd: Vec<u8> = (0..=n as u8).filter(|x| x % 2 == 1).collect();
    let even: Vec<u8> = (0..=n as u8).filter(|x| x % 2 == 0).collect();
    let iji = [&odd[..], &even[..], &odd[..]].concat();
    let jij = [&even[..], &odd[..], &even[..]].concat();
    (iji, jij)
}

/// Positive and blobbed elements counted by affine length, from the word
/// definitions: avoid `1,0,1` and `n-1,n,n-1`, then also `IJI` and `JIJ`.
pub fn brute_positive_and_blobbed(n: usize, s: usize) -> Vec<(usize, usize)> {
    let left = [1, 0, 1];
    let right = [n as u8 - 1, n as u8, n as u8 - 1];
    let (iji, jij) = long_patterns(n);
    brute_fc(n, s)
        .iter()
        .map(|bucket| {
            let positive: Vec<&Vec<u8>> =
                bucket.iter().filter(|w| !contains(n, w, &left) && !contains(n, w, &right)).collect();
            let blobbed = positive.iter().filter(|w| !contains(n, w, &iji) && !contains(n, w, &jij)).count();
            (positive.len(), blobbed)
        })
        .collect()
}

/// Membership in the index set of each algebra, straight from the
/// definitions: fully commutative, then avoiding the two boundary braids,
/// then avoiding the long patterns.
pub fn in_index_set(level: fcblob::algebra::AlgebraLevel, w: &Word) -> bool {
    use fcblob::algebra::AlgebraLevel;
    use fcblob::words::{contains_pattern, is_reduced_fc};

    let n = w.rank().n();
    if !is_reduced_fc(w) {
        return false;
    }
    if level == AlgebraLevel::TL {
        return true;
    }
    let (iji, jij) = long_patterns(n);
    let mut avoided = vec![vec![1, 0, 1], vec![n as u8 - 1, n as u8, n as u8 - 1]];
    if level == AlgebraLevel::SymplecticBlob {
        avoided.extend([iji, jij]);
    }
    avoided.iter().all(|p| !contains_pattern(w, &word(n, p)).unwrap())
}
