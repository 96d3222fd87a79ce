//! Grids of positive elements, obliques and blobbedness.
//!
//! Block `i` of a positive element becomes row `i` of its grid, occupying
//! the columns `l_i..=r_i`. The point `(i, j)` lies on oblique number
//! `j + 2i`; sweeping these in increasing order gives sets of pairwise
//! commuting generators whose product, in order, spells the element.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::normal_forms::PositiveBlocks;
use crate::words::{Letter, Rank, Word};
use crate::{Error, Result};

/// A finite set of `(row, column)` points with columns in `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    rank: Rank,
    points: BTreeSet<(i32, Letter)>,
}

impl Grid {
    pub fn new(rank: Rank, points: impl IntoIterator<Item = (i32, usize)>) -> Result<Self> {
        let points = points.into_iter().map(|(i, j)| Ok((i, rank.check(j)?))).collect::<Result<BTreeSet<_>>>()?;
        Ok(Grid { rank, points })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn points(&self) -> &BTreeSet<(i32, Letter)> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains_point(&self, row: i32, col: Letter) -> bool {
        self.points.contains(&(row, col))
    }

    pub fn with_point(&self, row: i32, col: usize) -> Result<Grid> {
        let mut points = self.points.clone();
        points.insert((row, self.rank.check(col)?));
        Ok(Grid { rank: self.rank, points })
    }

    fn row_span(&self) -> Option<(i32, i32)> {
        let lo = self.points.iter().map(|p| p.0).min()?;
        let hi = self.points.iter().map(|p| p.0).max()?;
        Some((lo, hi))
    }
}

pub fn grid_of(blocks: &PositiveBlocks) -> Grid {
    let points =
        blocks.blocks().iter().enumerate().flat_map(|(i, &(l, r))| (l..=r).map(move |j| (i as i32 + 1, j))).collect();
    Grid { rank: blocks.rank(), points }
}

/// A set of pairwise commuting generators, kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Oblique {
    generators: Vec<Letter>,
}

impl Oblique {
    pub fn new(rank: Rank, mut generators: Vec<usize>) -> Result<Self> {
        generators.sort_unstable();
        generators.dedup();
        let generators = generators.into_iter().map(|j| rank.check(j)).collect::<Result<Vec<_>>>()?;
        if generators.windows(2).any(|w| w[1] - w[0] < 2) {
            return Err(Error::Precondition("oblique generators must pairwise commute".into()));
        }
        Ok(Oblique { generators })
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }
}

/// `I`, the product of the odd generators.
pub fn oblique_i(rank: Rank) -> Oblique {
    Oblique { generators: (1..=rank.last()).step_by(2).collect() }
}

/// `J`, the product of the even generators.
pub fn oblique_j(rank: Rank) -> Oblique {
    Oblique { generators: (0..=rank.last()).step_by(2).collect() }
}

pub fn obliques_of(grid: &Grid) -> Vec<Oblique> {
    let mut keyed: Vec<(i32, Letter)> = grid.points.iter().map(|&(i, j)| (j as i32 + 2 * i, j)).collect();
    keyed.sort_unstable();
    let mut out: Vec<Oblique> = Vec::new();
    let mut current = None;
    for (c, j) in keyed {
        if current != Some(c) {
            out.push(Oblique { generators: Vec::new() });
            current = Some(c);
        }
        out.last_mut().unwrap().generators.push(j);
    }
    out
}

fn word_of_obliques<'a>(rank: Rank, obliques: impl IntoIterator<Item = &'a Oblique>) -> Word {
    let letters = obliques.into_iter().flat_map(|o| o.generators.iter().copied()).collect();
    Word::from_trusted(rank, letters)
}

/// The oblique form: the obliques' generators concatenated in sweep order.
pub fn oblique_word(grid: &Grid) -> Word {
    word_of_obliques(grid.rank, &obliques_of(grid))
}

fn blocks_grid(rank: Rank, blocks: Vec<(usize, usize)>) -> Grid {
    grid_of(&PositiveBlocks::new(rank, blocks).expect("pattern blocks are valid"))
}

fn singletons(rank: Rank, start: usize) -> Grid {
    let mut cols: Vec<_> = (start..=rank.n()).step_by(2).map(|j| (j, j)).collect();
    cols.reverse();
    blocks_grid(rank, cols)
}

pub fn pattern_i(rank: Rank) -> Grid {
    singletons(rank, 1)
}

pub fn pattern_j(rank: Rank) -> Grid {
    singletons(rank, 0)
}

/// `G(IJI)`, the grid of the element `IJI`.
pub fn pattern_iji(rank: Rank) -> Grid {
    blocks_grid(rank, w_i_blocks(rank.n()))
}

/// `G(JIJ)`, the grid of the element `JIJ`.
pub fn pattern_jij(rank: Rank) -> Grid {
    blocks_grid(rank, w_j_blocks(rank.n()))
}

fn alternating(first: (usize, usize), last: (usize, usize)) -> Vec<(usize, usize)> {
    // first, then <l-2, l>, ... while l >= 2, then last
    let mut blocks = vec![first];
    let mut l = first.0;
    while l >= 2 {
        let next = (l - 2, l);
        blocks.push(next);
        l = next.0;
    }
    blocks.push(last);
    blocks
}

/// Blocks of `IJI`.
pub fn w_i_blocks(n: usize) -> Vec<(usize, usize)> {
    if n == 1 {
        return vec![(1, 1), (0, 1)];
    }
    if n.is_multiple_of(2) {
        // <n-1,n><n-3,n-1>...<1,3><0,1>
        alternating((n - 1, n), (0, 1))
    } else {
        // <n,n><n-2,n><n-4,n-2>...<1,3><0,1>
        let mut blocks = vec![(n, n)];
        blocks.extend(alternating((n - 2, n), (0, 1)));
        blocks
    }
}

/// Blocks of `JIJ`.
pub fn w_j_blocks(n: usize) -> Vec<(usize, usize)> {
    if n == 1 {
        return vec![(0, 1), (0, 0)];
    }
    if n.is_multiple_of(2) {
        // <n,n><n-2,n><n-4,n-2>...<0,2><0,0>
        let mut blocks = vec![(n, n)];
        blocks.extend(alternating((n - 2, n), (0, 0)));
        blocks
    } else {
        // <n-1,n><n-3,n-1>...<0,2><0,0>
        alternating((n - 1, n), (0, 0))
    }
}

/// Whether some row translate of `pattern` lies inside `grid`.
pub fn contains_grid(grid: &Grid, pattern: &Grid) -> Result<bool> {
    if grid.rank != pattern.rank {
        return Err(Error::RankMismatch(grid.rank.n(), pattern.rank.n()));
    }
    let Some(&(pi, pj)) = pattern.points.iter().next() else {
        return Ok(true);
    };
    Ok(grid.points.iter().filter(|p| p.1 == pj).any(|&(gi, _)| {
        let t = gi - pi;
        pattern.points.iter().all(|&(i, j)| grid.points.contains(&(i + t, j)))
    }))
}

pub fn is_i_blobbed(blocks: &PositiveBlocks) -> bool {
    !contains_grid(&grid_of(blocks), &pattern_iji(blocks.rank())).expect("same rank")
}

pub fn is_j_blobbed(blocks: &PositiveBlocks) -> bool {
    !contains_grid(&grid_of(blocks), &pattern_jij(blocks.rank())).expect("same rank")
}

pub fn is_blobbed(blocks: &PositiveBlocks) -> bool {
    is_i_blobbed(blocks) && is_j_blobbed(blocks)
}

/// `O_1 ... O_r (IJ)^k I O'_1 ... O'_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObliqueFactorization {
    pub prefix: Vec<Oblique>,
    pub k: usize,
    pub suffix: Vec<Oblique>,
}

fn find_alternation(obliques: &[Oblique], a: &Oblique, b: &Oblique) -> Option<(usize, usize)> {
    let start = obliques.windows(3).position(|w| &w[0] == a && &w[1] == b && &w[2] == a)?;
    let mut k = 1;
    while obliques.get(start + 2 * k + 1) == Some(b) && obliques.get(start + 2 * k + 2) == Some(a) {
        k += 1;
    }
    Some((start, k))
}

pub fn oblique_factorization(blocks: &PositiveBlocks) -> Result<ObliqueFactorization> {
    let rank = blocks.rank();
    let obliques = obliques_of(&grid_of(blocks));
    let (start, k) = find_alternation(&obliques, &oblique_i(rank), &oblique_j(rank))
        .ok_or_else(|| Error::Precondition(format!("{blocks} avoids IJI")))?;
    Ok(ObliqueFactorization { prefix: obliques[..start].to_vec(), k, suffix: obliques[start + 2 * k + 1..].to_vec() })
}

/// Replaces `(IJ)^k I` by `(IJ)^{k-1} I` in the oblique form.
pub fn blobbed_bar(blocks: &PositiveBlocks) -> Result<Word> {
    let rank = blocks.rank();
    let f = oblique_factorization(blocks)?;
    let (i, j) = (oblique_i(rank), oblique_j(rank));
    let mut middle = Vec::new();
    for _ in 1..f.k {
        middle.push(&i);
        middle.push(&j);
    }
    middle.push(&i);
    Ok(word_of_obliques(rank, f.prefix.iter().chain(middle).chain(&f.suffix)))
}

/// Replaces `JIJ` by `J` in the oblique form of an I-blobbed element.
pub fn blobbed_tilde(blocks: &PositiveBlocks) -> Result<Word> {
    let rank = blocks.rank();
    if !is_i_blobbed(blocks) {
        return Err(Error::Precondition(format!("{blocks} contains IJI")));
    }
    let obliques = obliques_of(&grid_of(blocks));
    let j = oblique_j(rank);
    let (start, k) = find_alternation(&obliques, &j, &oblique_i(rank))
        .ok_or_else(|| Error::Precondition(format!("{blocks} avoids JIJ")))?;
    debug_assert_eq!(k, 1);
    let kept = obliques[..start].iter().chain([&j]).chain(&obliques[start + 3..]);
    Ok(word_of_obliques(rank, kept))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

const PITCH: i32 = 24;

pub fn render(grid: &Grid, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(grid),
        RenderFormat::Svg => render_svg(grid),
    }
}

fn render_ascii(grid: &Grid) -> String {
    let cols = grid.rank.n() + 1;
    let (lo, hi) = grid.row_span().unwrap_or((1, 0));
    let rows = (hi - lo + 1).max(0) as usize;
    let width = 2 * cols + rows.saturating_sub(1);
    let rule = format!("+{}+\n", "-".repeat(width));
    let mut out = rule.clone();
    for (k, i) in (lo..=hi).enumerate() {
        let mut line = " ".repeat(k);
        for j in 0..cols {
            line.push_str(if grid.contains_point(i, j as Letter) { "* " } else { "  " });
        }
        let _ = writeln!(out, "|{line:width$}|");
    }
    out.push_str(&rule);
    out
}

fn render_svg(grid: &Grid) -> String {
    let cols = grid.rank.n() as i32 + 1;
    let (lo, hi) = grid.row_span().unwrap_or((1, 0));
    let rows = (hi - lo + 1).max(0);
    let width = PITCH * cols + PITCH / 2 * (rows - 1).max(0);
    let height = PITCH * rows.max(1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{width}" height="{height}" fill="white" stroke="black"/>"#);
    for &(i, j) in &grid.points {
        let cx = PITCH / 2 + PITCH * j as i32 + PITCH / 2 * (i - lo);
        let cy = PITCH / 2 + PITCH * (i - lo);
        let _ = writeln!(out, r#"  <circle cx="{cx}" cy="{cy}" r="8" fill="black"/>"#);
    }
    out.push_str("</svg>\n");
    out
}
