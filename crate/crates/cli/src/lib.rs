//! Command-line front end for the `fcblob` library.
//!
//! [`run`] parses arguments, writes data to `out` and diagnostics to `err`,
//! and returns the process exit code: 0 on success, 1 when a verification
//! finds a mismatch, 2 on malformed input.

pub mod golden;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use fcblob::algebra::{quotient_image_check, reduce, structure_constants, AlgebraLevel};
use fcblob::enumeration::{
    b_count, blob_polynomial, count, d_count, oracle_blobbed_count, oracle_positive_count, p_dim, Budget, CountKind,
};
use fcblob::grid::{grid_of, is_blobbed, render, RenderFormat};
use fcblob::normal_forms::{blocks_of_word, generate_fc, is_left_positive, positive_blocks, PositiveBlocks};
use fcblob::triangles::{
    binomial, blobbed_closed, blobbed_entry, central_binomial_decomposition, general_binomial_decomposition, sum_terms,
    table, TriangleKind,
};
use fcblob::{Rank, Word};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "fcblob", version, about = "Fully commutative elements of affine type C and blob algebra tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a block of the classical or blobbed Catalan triangle.
    Triangle {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Evaluate a counting formula. `--n` and `--s` accept `k` or `a..b`.
    Count {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        s: Span,
        #[arg(long, value_parser = parse_kind)]
        which: CountKind,
        #[arg(long, value_enum, default_value = "text")]
        format: CountFormat,
    },
    /// List positive or blobbed elements of a given affine length.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, conflicts_with = "positive")]
        blobbed: bool,
        #[arg(long)]
        positive: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: JsonFormat,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Draw the grid of a positive element.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "word", conflicts_with = "word")]
        blocks: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_parser = parse_render, default_value = "ascii")]
        render: RenderFormat,
    },
    /// Reduce a word in the generators to a scalar times a basis element.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_level)]
        level: AlgebraLevel,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Dimension of the symplectic blob algebra and its graded pieces.
    Dim {
        #[arg(long)]
        n: usize,
    },
    /// Recompute published values and cross-check formulas against oracles.
    Verify {
        /// all suites when omitted
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Classical,
    Blobbed,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CountFormat {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum JsonFormat {
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Oracle,
    Triangle,
    Algebra,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Tables, Suite::Oracle, Suite::Triangle, Suite::Algebra];
}

/// An inclusive range of integers, written `k` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num =
            |t: &str| t.trim().parse::<usize>().map_err(|_| format!("expected a number or a range a..b, got {s:?}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span { start, end })
    }
}

fn parse_kind(s: &str) -> Result<CountKind, String> {
    s.parse().map_err(|e: fcblob::Error| e.to_string())
}

fn parse_level(s: &str) -> Result<AlgebraLevel, String> {
    s.parse().map_err(|e: fcblob::Error| e.to_string())
}

fn parse_render(s: &str) -> Result<RenderFormat, String> {
    s.parse().map_err(|e: fcblob::Error| e.to_string())
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or an input the library rejects.
    Input(String),
    /// The library reported an internal inconsistency.
    Internal(String),
    /// Writing to the output failed.
    Io(std::io::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "error: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
            Failure::Io(e) => write!(f, "write error: {e}"),
        }
    }
}

impl From<fcblob::Error> for Failure {
    fn from(e: fcblob::Error) -> Self {
        match e {
            fcblob::Error::Inconsistency(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite, checks: 0, mismatches: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }

    fn expect(&mut self, label: impl fmt::Display, expected: &BigUint, got: fcblob::Result<BigUint>) {
        match got {
            Ok(v) => self.check(&v == expected, || format!("{label}: expected {expected}, got {v}")),
            Err(e) => self.check(false, || format!("{label}: expected {expected}, got error {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub type CountFn = fn(usize, usize) -> fcblob::Result<BigUint>;

/// The formulas checked by the tables suite, replaceable for testing the
/// checker itself.
#[derive(Clone, Copy)]
pub struct TableFormulas {
    pub d: CountFn,
    pub b: CountFn,
    pub p: fn(usize) -> fcblob::Result<BigUint>,
}

impl Default for TableFormulas {
    fn default() -> Self {
        TableFormulas { d: d_count, b: b_count, p: p_dim }
    }
}

pub fn verify_tables(max_n: usize) -> Report {
    verify_tables_with(TableFormulas::default(), max_n)
}

/// Compares `d`, `b` and `p` against the golden values for `n <= max_n`
/// (at most 9) and `s <= 9`.
pub fn verify_tables_with(f: TableFormulas, max_n: usize) -> Report {
    let mut r = Report::new(Suite::Tables);
    for n in 1..=max_n.min(9) {
        for s in 0..=9 {
            r.expect(format_args!("d({n},{s})"), &golden::D[n - 1][s].into(), (f.d)(n, s));
            r.expect(format_args!("b({n},{s})"), &golden::B[n - 1][s].into(), (f.b)(n, s));
        }
        r.expect(format_args!("p({n})"), &golden::P[n - 1].into(), (f.p)(n));
    }
    r
}

/// Exhaustive counts against the closed formulas, `s <= min(n + 1, 6)`.
pub fn verify_oracle(max_n: usize) -> Report {
    let mut r = Report::new(Suite::Oracle);
    for n in 1..=max_n {
        for s in 0..=(n + 1).min(6) {
            let a = blobbed_entry(2 * n as i64, 2 * s as i64);
            r.expect(format_args!("positive({n},{s})"), &a, oracle_positive_count(n, s, Budget::default()));
            match b_count(n, s) {
                Ok(b) => r.expect(format_args!("blobbed({n},{s})"), &b, oracle_blobbed_count(n, s, Budget::default())),
                Err(e) => r.check(false, || format!("b({n},{s}): {e}")),
            }
        }
    }
    r
}

/// Closed form, the three identities and the two binomial decompositions.
pub fn verify_triangle() -> Report {
    let mut r = Report::new(Suite::Triangle);
    for i in 0..=64i64 {
        for j in (i % 2..=i).step_by(2) {
            r.expect(format_args!("closed C({i},{j})"), &blobbed_entry(i, j), blobbed_closed(i, j));
        }
    }
    for j in 0..=40 {
        r.check(blobbed_entry(j, 0) == blobbed_entry(j - 1, 1), || format!("C({j},0) = C({},1)", j - 1));
    }
    for i in 1..=40i64 {
        for j in 1..=40i64 {
            let two: BigUint = (0..=j).map(|k| blobbed_entry(i - 1 - k, j + 1 - k)).sum();
            let three: BigUint = (0..=i).map(|k| blobbed_entry(i - 1 - k, j - 1 + k)).sum();
            let c = blobbed_entry(i, j);
            r.check(c == two, || format!("second identity at ({i},{j})"));
            r.check(c == three, || format!("third identity at ({i},{j})"));
        }
    }
    for i in 1..=30i64 {
        let central = central_binomial_decomposition(i).map(|t| sum_terms(&t));
        r.expect(format_args!("central decomposition {i}"), &binomial(2 * i, i), central);
        for j in 1..=i {
            let general = general_binomial_decomposition(i, j).map(|t| sum_terms(&t));
            r.expect(format_args!("general decomposition ({i},{j})"), &binomial(2 * i - j, i), general);
        }
    }
    r
}

/// Quotient identities on small elements and closure of the blob algebra
/// multiplication table, for `n <= max_n` (at most 3).
pub fn verify_algebra(max_n: usize) -> Report {
    use AlgebraLevel::*;
    let mut r = Report::new(Suite::Algebra);
    let max_n = max_n.min(3);
    for n in 1..=max_n {
        let rank = Rank::new(n).expect("small rank");
        for s in 0..=2 {
            for nf in generate_fc(rank, s).into_iter().filter(|nf| !is_left_positive(nf)) {
                let ok = quotient_image_check(TL, TwoBoundary, &nf.word()).unwrap_or(false);
                r.check(ok, || format!("tl -> 2btl image of [{}]", nf.word()));
            }
            // at rank 1 the long patterns coincide with the boundary relations
            if n > 1 {
                for b in positive_blocks(rank, s).into_iter().filter(|b| !is_blobbed(b)) {
                    let ok = quotient_image_check(TwoBoundary, SymplecticBlob, &b.word()).unwrap_or(false);
                    r.check(ok, || format!("2btl -> sb image of [{}]", b.word()));
                }
            }
        }
        match structure_constants(SymplecticBlob, rank, usize::MAX) {
            Ok(t) => {
                let expected = golden::P[n - 1] * golden::P[n - 1];
                r.check(t.len() as u64 == expected, || format!("sb table at n = {n} has {} entries", t.len()));
            }
            Err(e) => r.check(false, || format!("sb table at n = {n}: {e}")),
        }
    }
    if max_n >= 3 {
        let chain = Word::new(Rank::new(3).expect("small rank"), vec![2, 3, 2, 1, 0, 1, 2, 3]).expect("valid word");
        let (c, w) = reduce(TwoBoundary, &chain);
        let got = format!("{c} * [{w}]");
        r.check(got == "kL*kR * [2,3]", || format!("chain instance gives {got}"));
    }
    r
}

/// Runs the suites on separate threads; reports come back in suite order.
pub fn verify(suites: &[Suite], max_n: Option<usize>) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| {
                scope.spawn(move || match suite {
                    Suite::Tables => verify_tables(max_n.unwrap_or(9)),
                    Suite::Oracle => verify_oracle(max_n.unwrap_or(5)),
                    Suite::Triangle => verify_triangle(),
                    Suite::Algebra => verify_algebra(max_n.unwrap_or(3)),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    })
}

fn rank(n: usize) -> Result<Rank, Failure> {
    Ok(Rank::new(n)?)
}

fn count_record(kind: CountKind, n: usize, s: usize, value: &BigUint) -> Value {
    json!({ "kind": kind.name(), "n": n, "s": s, "value": value.to_string() })
}

fn cmd_triangle(out: &mut dyn Write, kind: Kind, rows: usize, cols: usize, format: TableFormat) -> Result<(), Failure> {
    let kind = match kind {
        Kind::Classical => TriangleKind::Classical,
        Kind::Blobbed => TriangleKind::Blobbed,
    };
    let t = table(kind, rows, cols);
    match format {
        TableFormat::Csv => {
            for row in &t {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        TableFormat::Json => {
            let rows: Vec<Vec<String>> = t.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
            let name = match kind {
                TriangleKind::Classical => "classical",
                TriangleKind::Blobbed => "blobbed",
            };
            writeln!(out, "{}", json!({ "kind": name, "rows": rows }))?;
        }
    }
    Ok(())
}

fn cmd_count(out: &mut dyn Write, n: Span, s: Span, which: CountKind, format: CountFormat) -> Result<(), Failure> {
    let mut cells = Vec::new();
    for n in n.start..=n.end {
        for s in s.start..=s.end {
            cells.push((n, s, count(which, n, s)?));
        }
    }
    match format {
        CountFormat::Text if cells.len() == 1 => writeln!(out, "{}", cells[0].2)?,
        CountFormat::Text => {
            for (n, s, v) in &cells {
                writeln!(out, "{which}({n},{s}) = {v}")?;
            }
        }
        CountFormat::Csv => {
            writeln!(out, "kind,n,s,value")?;
            for (n, s, v) in &cells {
                writeln!(out, "{which},{n},{s},{v}")?;
            }
        }
        CountFormat::Json => {
            let records: Vec<Value> = cells.iter().map(|(n, s, v)| count_record(which, *n, *s, v)).collect();
            writeln!(out, "{}", Value::Array(records))?;
        }
    }
    Ok(())
}

fn cmd_enumerate(out: &mut dyn Write, n: usize, s: usize, blobbed: bool, limit: Option<usize>) -> Result<(), Failure> {
    let all: Vec<PositiveBlocks> =
        positive_blocks(rank(n)?, s).into_iter().filter(|b| !blobbed || is_blobbed(b)).collect();
    let elements: Vec<Value> = all
        .iter()
        .take(limit.unwrap_or(usize::MAX))
        .map(|b| json!({ "blocks": b.to_string(), "word": b.word().to_string() }))
        .collect();
    let filter = if blobbed { "blobbed" } else { "positive" };
    let doc = json!({ "n": n, "s": s, "filter": filter, "count": all.len(), "elements": elements });
    writeln!(out, "{doc}")?;
    Ok(())
}

fn cmd_grid(
    out: &mut dyn Write,
    n: usize,
    blocks: Option<String>,
    word: Option<String>,
    format: RenderFormat,
) -> Result<(), Failure> {
    let r = rank(n)?;
    let b = match (blocks, word) {
        (Some(text), _) => PositiveBlocks::parse(r, &text)?,
        (None, Some(text)) => blocks_of_word(&Word::parse(r, &text)?)?,
        (None, None) => return Err(Failure::Input("one of --blocks or --word is required".into())),
    };
    let picture = render(&grid_of(&b), format);
    write!(out, "{picture}")?;
    if !picture.ends_with('\n') {
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_reduce(out: &mut dyn Write, n: usize, level: AlgebraLevel, word: &str) -> Result<(), Failure> {
    let w = Word::parse(rank(n)?, word)?;
    let (c, v) = reduce(level, &w);
    writeln!(out, "{c} * [{v}]")?;
    Ok(())
}

fn cmd_dim(out: &mut dyn Write, n: usize) -> Result<(), Failure> {
    let p = blob_polynomial(n)?;
    let coefficients: Vec<String> = p.coefficients().iter().map(ToString::to_string).collect();
    writeln!(out, "{}", p_dim(n)?)?;
    writeln!(out, "[{}]", coefficients.join(", "))?;
    Ok(())
}

fn cmd_verify(out: &mut dyn Write, suite: Option<Suite>, max_n: Option<usize>) -> Result<bool, Failure> {
    if max_n == Some(0) {
        return Err(Failure::Input("--max-n must be at least 1".into()));
    }
    let suites = match suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let reports = verify(&suites, max_n);
    for r in &reports {
        let name = r.suite.to_possible_value().expect("not skipped").get_name().to_string();
        writeln!(out, "{name}: {} checks, {} mismatches", r.checks, r.mismatches.len())?;
        for m in &r.mismatches {
            writeln!(out, "  mismatch: {m}")?;
        }
    }
    Ok(reports.iter().all(Report::passed))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<bool, Failure> {
    match command {
        Command::Triangle { kind, rows, cols, format } => cmd_triangle(out, kind, rows, cols, format)?,
        Command::Count { n, s, which, format } => cmd_count(out, n, s, which, format)?,
        Command::Enumerate { n, s, blobbed, positive: _, format: JsonFormat::Json, limit } => {
            cmd_enumerate(out, n, s, blobbed, limit)?
        }
        Command::Grid { n, blocks, word, render } => cmd_grid(out, n, blocks, word, render)?,
        Command::Reduce { n, level, word } => cmd_reduce(out, n, level, &word)?,
        Command::Dim { n } => cmd_dim(out, n)?,
        Command::Verify { suite, max_n } => return cmd_verify(out, suite, max_n),
    }
    Ok(true)
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            match f {
                Failure::Input(_) => 2,
                Failure::Internal(_) | Failure::Io(_) => 1,
            }
        }
    }
}
