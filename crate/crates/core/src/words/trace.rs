//! Factor search modulo commutation.
//!
//! A word over the generators is read as a heap: position `p` sits below
//! position `q` when `p < q` and their letters do not commute. A member of
//! the commutation class has `u` as a contiguous factor exactly when the
//! heap contains a convex subheap isomorphic to the heap of `u`. We find
//! such subheaps by anchoring the first letter of `u` and following the
//! projections of the word onto pairs of non-commuting letters.

use super::{Letter, Rank};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Link {
    other: Letter,
    target: usize,
    forward: bool,
}

/// A connected pattern prepared for matching.
#[derive(Debug, Clone)]
pub(crate) struct Pattern {
    letters: Vec<Letter>,
    links: Vec<Vec<Link>>,
}

fn dependent(rank: Rank, a: Letter) -> impl Iterator<Item = Letter> {
    let lo = a.saturating_sub(1);
    let hi = (a as usize + 1).min(rank.n()) as Letter;
    lo..=hi
}

impl Pattern {
    /// Returns `None` when the heap of `letters` is empty or disconnected.
    pub(crate) fn new(rank: Rank, letters: &[Letter]) -> Option<Self> {
        if letters.is_empty() {
            return None;
        }
        let mut links = vec![Vec::new(); letters.len()];
        for (a, &x) in letters.iter().enumerate() {
            for b in dependent(rank, x) {
                let in_proj = |c: &usize| letters[*c] == x || letters[*c] == b;
                if let Some(c) = (a + 1..letters.len()).find(in_proj) {
                    links[a].push(Link { other: b, target: c, forward: true });
                }
                if let Some(c) = (0..a).rev().find(in_proj) {
                    links[a].push(Link { other: b, target: c, forward: false });
                }
            }
        }
        let mut seen = vec![false; letters.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for link in &links[a] {
                if !seen[link.target] {
                    seen[link.target] = true;
                    stack.push(link.target);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Some(Pattern { letters: letters.to_vec(), links })
        } else {
            None
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.letters.len()
    }
}

/// Occurrence tables for one word.
pub(crate) struct Trace<'a> {
    width: usize,
    letters: &'a [Letter],
    next: Vec<u32>,
    prev: Vec<u32>,
}

impl<'a> Trace<'a> {
    pub(crate) fn new(rank: Rank, letters: &'a [Letter]) -> Self {
        let width = rank.n() + 1;
        let len = letters.len();
        let mut next = vec![NONE; (len + 1) * width];
        for p in (0..len).rev() {
            let (head, tail) = next.split_at_mut((p + 1) * width);
            head[p * width..].copy_from_slice(&tail[..width]);
            head[p * width + letters[p] as usize] = p as u32;
        }
        let mut prev = vec![NONE; (len + 1) * width];
        for p in 0..len {
            let (head, tail) = prev.split_at_mut((p + 1) * width);
            tail[..width].copy_from_slice(&head[p * width..]);
            tail[letters[p] as usize] = p as u32;
        }
        Trace { width, letters, next, prev }
    }

    // first q > p whose letter is letters[p] or b
    fn next_in(&self, p: usize, b: Letter) -> u32 {
        let row = (p + 1) * self.width;
        self.next[row + self.letters[p] as usize].min(self.next[row + b as usize])
    }

    // last q < p whose letter is letters[p] or b
    fn prev_in(&self, p: usize, b: Letter) -> u32 {
        let row = p * self.width;
        let x = self.prev[row + self.letters[p] as usize];
        let y = self.prev[row + b as usize];
        match (x, y) {
            (NONE, y) => y,
            (x, NONE) => x,
            (x, y) => x.max(y),
        }
    }

    fn match_at(&self, pattern: &Pattern, anchor: usize, map: &mut [u32]) -> bool {
        map.fill(NONE);
        map[0] = anchor as u32;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            let p = map[a] as usize;
            for link in &pattern.links[a] {
                let q = if link.forward { self.next_in(p, link.other) } else { self.prev_in(p, link.other) };
                if q == NONE || self.letters[q as usize] != pattern.letters[link.target] {
                    return false;
                }
                match map[link.target] {
                    NONE => {
                        map[link.target] = q;
                        stack.push(link.target);
                    }
                    old if old != q => return false,
                    _ => {}
                }
            }
        }
        self.is_convex(map)
    }

    fn closure_flags(&self, in_s: &[bool]) -> (Vec<bool>, Vec<bool>) {
        let len = self.letters.len();
        let mut above = vec![false; len];
        let mut below = vec![false; len];
        let mut reach = vec![false; self.width];
        for p in 0..len {
            let x = self.letters[p] as usize;
            let lo = x.saturating_sub(1);
            let hi = (x + 1).min(self.width - 1);
            let hit = reach[lo..=hi].iter().any(|&r| r);
            above[p] = !in_s[p] && hit;
            reach[x] = in_s[p] || hit;
        }
        reach.fill(false);
        for p in (0..len).rev() {
            let x = self.letters[p] as usize;
            let lo = x.saturating_sub(1);
            let hi = (x + 1).min(self.width - 1);
            let hit = reach[lo..=hi].iter().any(|&r| r);
            below[p] = !in_s[p] && hit;
            reach[x] = in_s[p] || hit;
        }
        (above, below)
    }

    fn is_convex(&self, map: &[u32]) -> bool {
        let mut in_s = vec![false; self.letters.len()];
        for &p in map {
            if in_s[p as usize] {
                return false;
            }
            in_s[p as usize] = true;
        }
        let (above, below) = self.closure_flags(&in_s);
        !above.iter().zip(&below).any(|(&a, &b)| a && b)
    }

    /// Every occurrence of `pattern`, as positions indexed like the pattern.
    pub(crate) fn occurrences(&self, pattern: &Pattern) -> Vec<Vec<usize>> {
        let mut map = vec![NONE; pattern.len()];
        let mut out = Vec::new();
        for p in 0..self.letters.len() {
            if self.letters[p] == pattern.letters[0] && self.match_at(pattern, p, &mut map) {
                out.push(map.iter().map(|&q| q as usize).collect());
            }
        }
        out
    }

    pub(crate) fn contains(&self, pattern: &Pattern) -> bool {
        let mut map = vec![NONE; pattern.len()];
        (0..self.letters.len()).any(|p| self.letters[p] == pattern.letters[0] && self.match_at(pattern, p, &mut map))
    }

    /// Replaces the convex factor at `positions` by `replacement`, keeping
    /// everything below or beside it in front and everything above it behind.
    pub(crate) fn rewrite(&self, positions: &[usize], replacement: &[Letter]) -> Vec<Letter> {
        let mut in_s = vec![false; self.letters.len()];
        for &p in positions {
            in_s[p] = true;
        }
        let (above, _) = self.closure_flags(&in_s);
        let mut out = Vec::with_capacity(self.letters.len() - positions.len() + replacement.len());
        out.extend((0..self.letters.len()).filter(|&p| !in_s[p] && !above[p]).map(|p| self.letters[p]));
        out.extend_from_slice(replacement);
        out.extend((0..self.letters.len()).filter(|&p| above[p]).map(|p| self.letters[p]));
        out
    }
}
