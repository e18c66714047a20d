//! Command-line front end. [`run`] does everything except touching the
//! process streams, so it can be driven from tests.
//!
//! Exit status: 0 on success, 2 when the request is rejected before or
//! during validation, 1 when an internal consistency check fails.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::detformulas::{
    circular_fence_order_polynomial, gk_cylindric_order_polynomial, kreweras_order_polynomial, kreweras_value,
};
use crate::exactpoly::{factorial, Polynomial, Rational};
use crate::geometry::{match_shard_to_fence, shard_ehrhart, stretched_pp, Arc, HStarVector};
use crate::harness::{self, CrossReport, Family, ScanOptions, ScanSummary};
use crate::posets::{
    cell_poset, coefficients_by_recursion, cylindric_cell_poset, order_polynomial, parse_named_poset,
    shifted_cell_poset, width_two_poset, Poset, PosetError,
};
use crate::schubert::{
    hook_pp, macdonald_expansion_search, macdonald_pp, reduced_words, ExpansionVerdict, Permutation,
};
use crate::shapes::{parse_shape, CylindricShape, Partition, Shape, ShapeError, ShiftedSkewShape, SkewShape};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Ideal-lattice count on the cell poset.
    Bruteforce,
    Kreweras,
    Gk,
    Macdonald,
    Recursion,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Bruteforce => "bruteforce",
            Engine::Kreweras => "kreweras",
            Engine::Gk => "gk",
            Engine::Macdonald => "macdonald",
            Engine::Recursion => "recursion",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "orderpoly", version, about = "Exact order polynomials of posets from shapes")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value = "plain")]
    pub format: Format,
    #[arg(long, value_enum, global = true)]
    pub engine: Option<Engine>,
    /// Multiply by |P|! and print integer coefficients.
    #[arg(long, global = true)]
    pub normalize: bool,
    /// Worker threads for parallel engines (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Skew `λ/μ`, cylindric `λ/μ/d` or `shifted:λ/μ`.
    #[arg(long)]
    pub shape: Option<String>,
    /// zigzag:n, circular-zigzag:n, complement-zigzag:n, faulhaber:n,
    /// fig-2covers, chain:n, antichain:n.
    #[arg(long)]
    pub poset: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order polynomial of a shape or named poset.
    Omega(Target),
    /// Kreweras determinant of a skew shape.
    Kreweras {
        #[arg(long)]
        shape: String,
        /// Evaluate Ω(t) at this point instead (plane partitions with entries below t).
        #[arg(long)]
        at: Option<u64>,
    },
    /// Order polynomial of a cylindric shape, or of the circular fence on a
    /// ribbon.
    Cylindric {
        #[arg(long, required_unless_present = "ribbon", conflicts_with = "ribbon")]
        shape: Option<String>,
        #[arg(long)]
        ribbon: Option<String>,
    },
    /// Order polynomial of a shifted skew shape.
    Shifted {
        #[arg(long)]
        shape: String,
    },
    /// Order polynomial of the width-two poset of `λ/μ` in an m×n rectangle.
    Width2 {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Permutation data, or the reduced-word formula for a straight shape.
    Schubert {
        #[arg(long, required_unless_present = "shape", conflicts_with = "shape")]
        perm: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        /// List the reduced words.
        #[arg(long, requires = "perm")]
        words: bool,
        /// Search for an expansion over the factors t, t+1, …, t+M.
        #[arg(long, requires = "shape")]
        expand: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Plane partitions of the hook (a+1, 1^b).
    Hook {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// h* vector of the order polytope.
    Hstar(Target),
    /// Ehrhart polynomial of a shard polytope, written `a,b;A;B`.
    Shard {
        #[arg(long)]
        arc: String,
    },
    /// Plane partitions of kλ/kμ bounded by t, as a polynomial in k.
    Stretched {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        t: u64,
    },
    /// Exhaustive scan of a family with an optional resumable store.
    Scan {
        #[arg(long, required_unless_present = "resume")]
        family: Option<String>,
        #[arg(long, required_unless_present = "resume")]
        max_size: Option<usize>,
        #[arg(long)]
        store: Option<PathBuf>,
        /// Continue the scan recorded in --store.
        #[arg(long, requires = "store", conflicts_with_all = ["family", "max_size"])]
        resume: bool,
        /// Report wall-clock time (makes the output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Runs every applicable pair of engines on all shapes up to the cap.
    CrossValidate {
        #[arg(long)]
        max_size: usize,
    },
}

/// What a run produced: both streams and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Result rendered in all three formats.
struct Report {
    plain: String,
    latex: String,
    json: Value,
}

impl Report {
    fn render(&self, f: Format) -> String {
        match f {
            Format::Plain => self.plain.clone(),
            Format::Latex => self.latex.clone(),
            Format::Json => serde_json::to_string(&self.json).expect("serialisable"),
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

macro_rules! lib_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Lib(e.into())
            }
        }
    )*};
}
lib_from!(
    crate::exactpoly::PolyError,
    ShapeError,
    PosetError,
    crate::detformulas::DetError,
    crate::schubert::SchubertError,
    crate::geometry::GeometryError,
    crate::harness::HarnessError
);

/// Maps a failure to its exit status and diagnostic prefix.
fn classify(f: Failure) -> (i32, String) {
    use crate::detformulas::DetError as D;
    use crate::harness::HarnessError as H;
    use crate::schubert::SchubertError as S;
    match f {
        Failure::Usage(m) => (2, format!("usage error: {m}")),
        Failure::Lib(e) => {
            let e = e.root();
            let text = e.to_string();
            match e {
                Error::EngineMismatch(_) => (2, format!("engine mismatch: {text}")),
                Error::Shape(_) => (2, format!("malformed shape: {text}")),
                Error::Poset(PosetError::UnknownName(_)) => (2, format!("unknown poset: {text}")),
                Error::Poset(PosetError::CapExceeded { .. } | PosetError::TooLarge { .. })
                | Error::Schubert(S::CapExceeded { .. }) => (2, format!("cap exceeded: {text}")),
                Error::Geometry(crate::geometry::GeometryError::BadArc { .. }) => (2, format!("malformed arc: {text}")),
                Error::Schubert(S::NotPermutation(_)) => (2, format!("malformed permutation: {text}")),
                Error::Harness(H::UnknownFamily(_)) => (2, format!("unknown family: {text}")),
                Error::Harness(H::CorruptStore { .. } | H::StoreMismatch { .. } | H::Io { .. }) => {
                    (2, format!("store error: {text}"))
                }
                Error::Harness(H::Invariant { .. } | H::Disagreement { .. }) => (1, format!("internal error: {text}")),
                Error::Det(D::EmptyShape | D::NotRibbon | D::NotClosed | D::NotProper(_))
                | Error::Poset(_)
                | Error::Schubert(S::NotInStaircase { .. }) => (2, format!("invalid input: {text}")),
                _ => (1, format!("internal error: {text}")),
            }
        }
    }
}

/// Parses and runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { code: 0, stdout: e.render().to_string(), stderr: String::new() }
                }
                ErrorKind::InvalidSubcommand => {
                    Output { code: 2, stdout: String::new(), stderr: format!("unknown subcommand: {}", first_line(&e)) }
                }
                _ => Output { code: 2, stdout: String::new(), stderr: format!("usage error: {}", e.render()) },
            };
        }
    };
    if let Some(w) = cli.workers {
        // Ignored if a pool already exists (repeated calls in one process).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = report.render(cli.format);
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output { code: 0, stdout, stderr: String::new() }
        }
        Err(f) => {
            let (code, msg) = classify(f);
            Output { code, stdout: String::new(), stderr: format!("{msg}\n") }
        }
    }
}

fn first_line(e: &clap::Error) -> String {
    let text = e.render().to_string();
    let line = text.lines().next().unwrap_or_default();
    format!("{}\n", line.trim_start_matches("error: "))
}

/// Only these engines make sense for the request; `default` is used when
/// none was given.
fn pick(requested: Option<Engine>, allowed: &[Engine], default: Engine, what: &str) -> Result<Engine, Error> {
    match requested {
        None => Ok(default),
        Some(e) if allowed.contains(&e) => Ok(e),
        Some(e) => Err(Error::EngineMismatch(format!(
            "engine {} does not apply to {what} (allowed: {})",
            e.name(),
            allowed.iter().map(|e| e.name()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn no_engine(requested: Option<Engine>, what: &str) -> Result<(), Error> {
    match requested {
        None => Ok(()),
        Some(e) => {
            Err(Error::EngineMismatch(format!("{what} has a single engine; --engine {} is not accepted", e.name())))
        }
    }
}

fn from_recursion(p: &Poset) -> Result<Polynomial, Error> {
    let coeffs = coefficients_by_recursion(p)?;
    Ok(Polynomial::new(std::iter::once(Rational::default()).chain(coeffs).collect()))
}

fn poset_engine(p: &Poset, engine: Engine) -> Result<Polynomial, Error> {
    match engine {
        Engine::Recursion => from_recursion(p),
        _ => Ok(order_polynomial(p)?),
    }
}

fn parse_skew(text: &str) -> Result<SkewShape, Failure> {
    match parse_shape(text)? {
        Shape::Skew(s) => Ok(s),
        _ => Err(ShapeError::Malformed { text: text.to_string(), reason: "expected a skew shape λ/μ".into() }.into()),
    }
}

fn parse_cylindric(text: &str) -> Result<CylindricShape, Failure> {
    match parse_shape(text)? {
        Shape::Cylindric(c) => Ok(c),
        _ => {
            Err(ShapeError::Malformed { text: text.to_string(), reason: "expected a cylindric shape λ/μ/d".into() }
                .into())
        }
    }
}

fn parse_shifted(text: &str) -> Result<ShiftedSkewShape, Failure> {
    let full =
        if text.trim_start().starts_with("shifted:") { text.to_string() } else { format!("shifted:{}", text.trim()) };
    match parse_shape(&full)? {
        Shape::Shifted(s) => Ok(s),
        _ => Err(ShapeError::Malformed { text: text.to_string(), reason: "expected a shifted shape".into() }.into()),
    }
}

fn omega_of(target: &Target, requested: Option<Engine>) -> Result<(Polynomial, usize), Error> {
    match &target.poset {
        Some(name) => omega_of_named(name, requested),
        None => omega_of_shape(target.shape.as_deref().unwrap_or_default(), requested),
    }
}

/// Order polynomial of a named poset and its size. Named posets take the
/// ideal-lattice count (default) or the coefficient recursion.
pub fn omega_of_named(name: &str, requested: Option<Engine>) -> Result<(Polynomial, usize), Error> {
    use Engine::*;
    let p = parse_named_poset(name)?;
    let e = pick(requested, &[Bruteforce, Recursion], Bruteforce, "a named poset")?;
    Ok((poset_engine(&p, e)?, p.len()))
}

/// Order polynomial of a skew, cylindric or shifted shape and its size.
/// Without a forced engine: Kreweras for skew shapes, the cylindric sum
/// for cylindric shapes, the ideal lattice for shifted shapes.
pub fn omega_of_shape(text: &str, requested: Option<Engine>) -> Result<(Polynomial, usize), Error> {
    use Engine::*;
    match parse_shape(text)? {
        Shape::Skew(s) => {
            let allowed: &[Engine] = if s.is_straight() {
                &[Kreweras, Bruteforce, Recursion, Macdonald]
            } else {
                &[Kreweras, Bruteforce, Recursion]
            };
            let what = if s.is_straight() { "a straight shape" } else { "a skew shape" };
            let e = pick(requested, allowed, Kreweras, what)?;
            let p = match e {
                Kreweras => kreweras_order_polynomial(&s)?,
                Macdonald => macdonald_pp(&Partition::new(s.lambda().to_vec())?)?.shift(-1),
                _ => poset_engine(&cell_poset(&s)?, e)?,
            };
            Ok((p, s.size()))
        }
        Shape::Cylindric(c) => {
            let e = pick(requested, &[Gk, Bruteforce, Recursion], Gk, "a cylindric shape")?;
            let p = match e {
                Gk => gk_cylindric_order_polynomial(&c)?,
                _ => poset_engine(&cylindric_cell_poset(&c)?, e)?,
            };
            Ok((p, c.size()))
        }
        Shape::Shifted(s) => {
            let e = pick(requested, &[Bruteforce, Recursion], Bruteforce, "a shifted shape")?;
            Ok((poset_engine(&shifted_cell_poset(&s)?, e)?, s.size()))
        }
    }
}

fn poly_report(p: &Polynomial) -> Report {
    Report { plain: p.to_string(), latex: p.to_latex(), json: serde_json::to_value(p).expect("serialisable") }
}

/// Polynomial output, multiplied by `n!` under `--normalize`.
fn order_report(cli: &Cli, p: &Polynomial, n: usize) -> Result<Report, Failure> {
    if !cli.normalize {
        return Ok(poly_report(p));
    }
    let scaled = p.scale(&Rational::from_integer(factorial(n).into()));
    if !scaled.has_integer_coeffs() {
        return Err(Error::Harness(harness::HarnessError::Invariant {
            key: p.to_string(),
            what: format!("{n}!·Ω is not integral"),
        })
        .into());
    }
    Ok(poly_report(&scaled))
}

fn no_normalize(cli: &Cli, what: &str) -> Result<(), Failure> {
    if cli.normalize {
        Err(Failure::Usage(format!("--normalize does not apply to {what}")))
    } else {
        Ok(())
    }
}

fn key_value_report(rows: &[(&str, String)], json: Value) -> Report {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let plain = rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n");
    let latex = format!(
        "\\begin{{tabular}}{{ll}}\n{}\n\\end{{tabular}}",
        rows.iter().map(|(k, v)| format!("{k} & {v} \\\\")).collect::<Vec<_>>().join("\n")
    );
    Report { plain, latex, json }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    use Engine::*;
    match &cli.command {
        Command::Omega(target) => {
            let (p, n) = omega_of(target, cli.engine)?;
            order_report(cli, &p, n)
        }
        Command::Kreweras { shape, at } => {
            pick(cli.engine, &[Kreweras], Kreweras, "the kreweras command")?;
            let s = parse_skew(shape)?;
            match at {
                Some(t) => {
                    no_normalize(cli, "an evaluation")?;
                    let v = kreweras_value(&s, *t)?;
                    Ok(Report { plain: v.to_string(), latex: v.to_string(), json: json!(v.to_string()) })
                }
                None => order_report(cli, &kreweras_order_polynomial(&s)?, s.size()),
            }
        }
        Command::Cylindric { shape, ribbon } => {
            if let Some(r) = ribbon {
                let s = parse_skew(r)?;
                let e = pick(cli.engine, &[Gk, Bruteforce, Recursion], Gk, "a circular fence")?;
                let p = match (cli.engine, e) {
                    (None, _) => circular_fence_order_polynomial(&s)?,
                    (_, Gk) => {
                        circular_fence_order_polynomial(&s)?;
                        gk_cylindric_order_polynomial(&CylindricShape::circular_fence(&s)?)?
                    }
                    _ => {
                        circular_fence_order_polynomial(&s)?;
                        poset_engine(&cylindric_cell_poset(&CylindricShape::circular_fence(&s)?)?, e)?
                    }
                };
                return order_report(cli, &p, s.size());
            }
            let c = parse_cylindric(shape.as_deref().unwrap_or_default())?;
            let e = pick(cli.engine, &[Gk, Bruteforce, Recursion], Gk, "a cylindric shape")?;
            let p = match e {
                Gk => gk_cylindric_order_polynomial(&c)?,
                _ => poset_engine(&cylindric_cell_poset(&c)?, e)?,
            };
            order_report(cli, &p, c.size())
        }
        Command::Shifted { shape } => {
            let s = parse_shifted(shape)?;
            let e = pick(cli.engine, &[Bruteforce, Recursion], Bruteforce, "a shifted shape")?;
            order_report(cli, &poset_engine(&shifted_cell_poset(&s)?, e)?, s.size())
        }
        Command::Width2 { shape, m, n } => {
            let s = parse_skew(shape)?;
            let e = pick(cli.engine, &[Bruteforce, Recursion], Bruteforce, "a width-two poset")?;
            order_report(cli, &poset_engine(&width_two_poset(&s, *m, *n)?, e)?, m + n)
        }
        Command::Schubert { perm, shape, words, expand, budget } => {
            pick(cli.engine, &[Macdonald], Macdonald, "the schubert command")?;
            if let Some(text) = perm {
                no_normalize(cli, "permutation data")?;
                return permutation_report(text, *words);
            }
            let s = parse_skew(shape.as_deref().unwrap_or_default())?;
            if let Some(m) = expand {
                no_normalize(cli, "an expansion search")?;
                return expansion_report(&s, *m, *budget);
            }
            if !s.is_straight() {
                return Err(Error::EngineMismatch("the reduced-word formula needs a straight shape".into()).into());
            }
            let pp = macdonald_pp(&Partition::new(s.lambda().to_vec())?)?;
            order_report(cli, &pp, s.size())
        }
        Command::Hook { a, b } => {
            no_engine(cli.engine, "hook")?;
            order_report(cli, &hook_pp(*a, *b), a + b + 1)
        }
        Command::Hstar(target) => {
            no_normalize(cli, "an h* vector")?;
            let (p, n) = omega_of(target, cli.engine)?;
            let h = HStarVector::from_ehrhart(&p.shift(1), n)?;
            let entries: Vec<String> = h.coeffs.iter().map(|c| c.to_string()).collect();
            let real_rooted = h.is_real_rooted()?;
            let rows = [
                ("h*", entries.join(" ")),
                ("sum", h.sum().to_string()),
                ("nonnegative", h.is_nonnegative().to_string()),
                ("log-concave", h.is_log_concave().to_string()),
                ("real-rooted", real_rooted.to_string()),
            ];
            let json = json!({
                "hstar": entries,
                "sum": h.sum().to_string(),
                "nonnegative": h.is_nonnegative(),
                "log_concave": h.is_log_concave(),
                "real_rooted": real_rooted,
            });
            Ok(key_value_report(&rows, json))
        }
        Command::Shard { arc } => {
            no_engine(cli.engine, "shard")?;
            no_normalize(cli, "an Ehrhart polynomial")?;
            let a: Arc = arc.parse()?;
            let p = shard_ehrhart(&a)?;
            let fence = match_shard_to_fence(&a, a.b - a.a)?;
            let fence_text = fence.as_ref().map_or_else(|| "none".to_string(), |f| f.to_string());
            let rows = [
                ("arc", a.to_string()),
                ("ehrhart", p.to_string()),
                ("nonnegative", p.has_nonnegative_coeffs().to_string()),
                ("fence", fence_text),
            ];
            let mut report = key_value_report(
                &rows,
                json!({
                    "arc": a,
                    "ehrhart": p,
                    "nonnegative": p.has_nonnegative_coeffs(),
                    "fence": fence.map(|f| f.to_string()),
                }),
            );
            report.latex = report.latex.replace(&p.to_string(), &format!("${}$", p.to_latex()));
            Ok(report)
        }
        Command::Stretched { shape, t } => {
            no_engine(cli.engine, "stretched")?;
            no_normalize(cli, "a stretched count")?;
            Ok(poly_report(&stretched_pp(&parse_skew(shape)?, *t)?))
        }
        Command::Scan { family, max_size, store, resume, timing } => {
            no_engine(cli.engine, "scan")?;
            no_normalize(cli, "a scan")?;
            let workers = cli.workers.unwrap_or(0);
            let summary = if *resume {
                harness::resume(store.as_ref().expect("clap requires --store"), workers)?
            } else {
                let family: Family = family.as_deref().unwrap_or_default().parse()?;
                let opts =
                    ScanOptions { family, size_cap: max_size.unwrap_or_default(), workers, store: store.clone() };
                harness::scan(&opts)?.0
            };
            Ok(scan_report(&summary, *timing))
        }
        Command::CrossValidate { max_size } => {
            no_engine(cli.engine, "cross-validate")?;
            no_normalize(cli, "cross-validation")?;
            Ok(cross_report(&harness::cross_validate(*max_size)?))
        }
    }
}

fn permutation_report(text: &str, list_words: bool) -> Result<Report, Failure> {
    let w: Permutation = text.parse()?;
    let words = reduced_words(&w)?;
    let shape = w.vexillary_shape();
    let mut rows = vec![
        ("permutation", w.to_string()),
        ("length", w.length().to_string()),
        ("dominant", w.is_dominant().to_string()),
        ("vexillary", w.is_vexillary().to_string()),
        ("shape", shape.as_ref().map_or_else(|| "none".to_string(), |s| s.to_string())),
        ("reduced words", words.len().to_string()),
    ];
    let word_text: Vec<String> =
        words.iter().map(|w| w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")).collect();
    if list_words {
        for wt in &word_text {
            rows.push(("word", wt.clone()));
        }
    }
    let mut json = json!({
        "permutation": w.to_string(),
        "length": w.length(),
        "dominant": w.is_dominant(),
        "vexillary": w.is_vexillary(),
        "shape": shape.map(|s| s.to_string()),
        "reduced_words": words.len(),
    });
    if list_words {
        json["words"] = json!(words);
    }
    Ok(key_value_report(&rows, json))
}

fn expansion_report(s: &SkewShape, m: usize, budget: u64) -> Result<Report, Failure> {
    let r = macdonald_expansion_search(s, m, budget)?;
    let (verdict, nodes, terms) = match &r.verdict {
        ExpansionVerdict::Found { terms, nodes } => ("found", *nodes, Some(terms.clone())),
        ExpansionVerdict::Exhausted { nodes } => ("exhausted", *nodes, None),
        ExpansionVerdict::BudgetExceeded { nodes } => ("budget exceeded", *nodes, None),
    };
    let term_text = |terms: &[(Vec<usize>, usize)]| {
        terms
            .iter()
            .map(|(a, mult)| {
                let factors: Vec<String> = a
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let base = if i == 0 { "t".to_string() } else { format!("(t+{i})") };
                        if e == 1 {
                            base
                        } else {
                            format!("{base}^{e}")
                        }
                    })
                    .collect();
                format!("{mult}·{}", factors.join(""))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let mut rows = vec![
        ("shape", r.shape.to_string()),
        ("conjugated", r.conjugated.to_string()),
        ("support", format!("0..={}", r.support_max)),
        ("verdict", verdict.to_string()),
        ("nodes", nodes.to_string()),
    ];
    if let Some(t) = &terms {
        rows.push(("expansion", term_text(t)));
    }
    let json = json!({
        "shape": r.shape.to_string(),
        "conjugated": r.conjugated,
        "support_max": r.support_max,
        "verdict": verdict,
        "nodes": nodes,
        "terms": terms,
    });
    Ok(key_value_report(&rows, json))
}

fn scan_report(s: &ScanSummary, timing: bool) -> Report {
    let s = if timing { s.clone() } else { s.without_timing() };
    let min_c1 = match (&s.min_c1, &s.min_c1_key) {
        (Some(c), Some(k)) => format!("{c} ({k})"),
        _ => "none".to_string(),
    };
    let mut rows = vec![
        ("family", s.family.to_string()),
        ("max size", s.size_cap.to_string()),
        ("members", s.members.to_string()),
        ("verified", s.verified.to_string()),
        ("skipped", s.skipped.to_string()),
        ("counterexamples", s.counterexamples.len().to_string()),
        ("min c1", min_c1),
        ("not real-rooted", s.not_real_rooted.to_string()),
        ("h* not log-concave", s.not_log_concave_hstar.to_string()),
        ("new records", s.new_records.to_string()),
    ];
    for k in &s.counterexamples {
        rows.push(("counterexample", k.clone()));
    }
    if timing {
        rows.push(("elapsed ms", s.elapsed_ms.to_string()));
    }
    let mut json = serde_json::to_value(&s).expect("serialisable");
    if !timing {
        json.as_object_mut().expect("object").remove("elapsed_ms");
    }
    key_value_report(&rows, json)
}

fn cross_report(r: &CrossReport) -> Report {
    let mut rows: Vec<(&str, String)> = vec![("max size", r.size_cap.to_string())];
    for (pair, count) in &r.pairs {
        rows.push((pair.as_str(), count.to_string()));
    }
    key_value_report(&rows, serde_json::to_value(r).expect("serialisable"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Output {
        run(std::iter::once("orderpoly").chain(args.iter().copied()))
    }

    #[test]
    fn zigzag_normalized() {
        let out = go(&["omega", "--poset", "zigzag:6", "--normalize"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "61t^6 + 183t^5 + 235t^4 + 165t^3 + 64t^2 + 12t\n");
    }

    #[test]
    fn json_round_trips() {
        let out = go(&["omega", "--shape", "6533/21", "--format", "json"]);
        assert_eq!(out.code, 0);
        let p = Polynomial::from_json(out.stdout.trim()).unwrap();
        assert_eq!(p.degree(), Some(14));
    }

    #[test]
    fn engines_agree_and_mismatches_exit_2() {
        let a = go(&["omega", "--shape", "331/1", "--engine", "kreweras"]);
        let b = go(&["omega", "--shape", "331/1", "--engine", "recursion"]);
        assert_eq!(a, b);
        let bad = go(&["omega", "--shape", "331/1", "--engine", "gk"]);
        assert_eq!(bad.code, 2);
        assert!(bad.stderr.starts_with("engine mismatch:"));
        let mac = go(&["omega", "--shape", "311", "--engine", "macdonald"]);
        assert_eq!(mac.stdout, go(&["omega", "--shape", "311"]).stdout);
        assert_eq!(go(&["omega", "--shape", "31/1", "--engine", "macdonald"]).code, 2);
    }

    #[test]
    fn diagnostics_have_distinct_prefixes() {
        let cases = [
            (vec!["frobnicate"], "unknown subcommand:"),
            (vec!["omega", "--shape", "3x/1"], "malformed shape:"),
            (vec!["omega", "--poset", "dodecahedron:3"], "unknown poset:"),
            (vec!["schubert", "--perm", "4231", "--engine", "gk"], "engine mismatch:"),
            (vec!["omega"], "usage error:"),
            (vec!["shard", "--arc", "1,4;2;2"], "malformed arc:"),
            (vec!["scan", "--family", "hexagons", "--max-size", "3"], "unknown family:"),
        ];
        for (args, prefix) in cases {
            let out = go(&args);
            assert_eq!(out.code, 2, "{args:?}");
            assert!(out.stderr.starts_with(prefix), "{args:?}: {}", out.stderr);
            assert!(out.stdout.is_empty());
        }
    }

    #[test]
    fn help_exits_zero() {
        let out = go(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("omega"));
    }
}
