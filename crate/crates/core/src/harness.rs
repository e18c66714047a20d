//! Family scans with an append-only record store, resumption, and the
//! cross-engine validation matrix.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detformulas::{
    c1_skew, circular_fence_order_polynomial, gk_cylindric_order_polynomial, kreweras_order_polynomial,
    zigzag_determinant, DetError,
};
use crate::exactpoly::{analyze, factorial, rational_to_string, PolyError, Polynomial, Rational};
use crate::geometry::{shard_ehrhart, stretched_pp, Arc, GeometryError, HStarVector};
use crate::posets::{
    bruteforce_order_polynomial, cell_poset, coefficients_by_recursion, complement_zigzag, cylindric_cell_poset,
    order_polynomial, shifted_cell_poset, width_two_poset, PosetError,
};
use crate::schubert::{coefficients_via_esym, hook_pp, macdonald_pp, SchubertError};
use crate::shapes::{
    connected_ribbons, cylindric_shapes_up_to, parse_shape, shapes_in_rectangle, shifted_shapes_of_size,
    skew_shapes_up_to, CylindricShape, Partition, Shape, ShapeError, ShiftedSkewShape, SkewShape,
};

/// Batch size between store writes: progress survives an interruption at
/// this granularity.
const CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("store {path}: corrupt record after byte {offset}")]
    CorruptStore { path: String, offset: u64 },
    #[error("store {path} was written for {found}, not {expected}")]
    StoreMismatch { path: String, found: String, expected: String },
    #[error("store {path}: {message}")]
    Io { path: String, message: String },
    #[error("{key}: {what}")]
    Invariant { key: String, what: String },
    #[error("{key}: {left_engine} gives {left}, {right_engine} gives {right}")]
    Disagreement { key: String, left_engine: String, right_engine: String, left: String, right: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Det(#[from] DetError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Skew,
    Ribbon,
    Cylindric,
    CircularFence,
    Shifted,
    WidthTwo,
    ComplementZigzag,
    Stretched,
    Shard,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Skew,
        Family::Ribbon,
        Family::Cylindric,
        Family::CircularFence,
        Family::Shifted,
        Family::WidthTwo,
        Family::ComplementZigzag,
        Family::Stretched,
        Family::Shard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Skew => "skew",
            Family::Ribbon => "ribbon",
            Family::Cylindric => "cylindric",
            Family::CircularFence => "circular_fence",
            Family::Shifted => "shifted",
            Family::WidthTwo => "width_two",
            Family::ComplementZigzag => "complement_zigzag",
            Family::Stretched => "stretched",
            Family::Shard => "shard",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = HarnessError;

    /// Accepts `_` or `-` as separator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('-', "_");
        Family::ALL.into_iter().find(|f| f.name() == norm).ok_or_else(|| HarnessError::UnknownFamily(s.to_string()))
    }
}

/// Largest stretching bound `t` scanned for the stretched family.
pub const STRETCHED_T_MAX: u64 = 3;

/// One member of a family, with its canonical key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Member {
    Skew(SkewShape),
    Ribbon(SkewShape),
    Cylindric(CylindricShape),
    CircularFence(SkewShape),
    Shifted(ShiftedSkewShape),
    WidthTwo { shape: SkewShape, m: usize, n: usize },
    ComplementZigzag(usize),
    Stretched { shape: SkewShape, t: u64 },
    Shard(Arc),
}

/// Width-two shapes keep their padding to `m` rows: `(1)/(1)` and the
/// empty shape give different posets.
fn padded_text(s: &SkewShape, m: usize) -> String {
    let row = |v: &[usize]| (0..m).map(|i| v.get(i).copied().unwrap_or(0).to_string()).collect::<Vec<_>>().join(",");
    format!("{}/{}", row(s.lambda()), row(s.mu()))
}

fn parse_padded(text: &str) -> Option<SkewShape> {
    let (l, u) = text.split_once('/')?;
    let row = |t: &str| t.split(',').map(|x| x.trim().parse::<usize>().ok()).collect::<Option<Vec<_>>>();
    SkewShape::new(row(l)?, row(u)?).ok()
}

impl Member {
    pub fn key(&self) -> String {
        match self {
            Member::Skew(s) | Member::Ribbon(s) => s.to_string(),
            Member::Cylindric(c) => c.to_string(),
            Member::CircularFence(s) => CylindricShape::circular_fence(s).map(|c| c.to_string()).unwrap_or_default(),
            Member::Shifted(s) => Shape::Shifted(s.clone()).to_string(),
            Member::WidthTwo { shape, m, n } => format!("{m}x{n}:{}", padded_text(shape, *m)),
            Member::ComplementZigzag(n) => format!("complement-zigzag:{n}"),
            Member::Stretched { shape, t } => format!("{shape}@{t}"),
            Member::Shard(a) => a.to_string(),
        }
    }

    /// Parses a key back into a member of `family`.
    pub fn from_key(family: Family, key: &str) -> Result<Member, HarnessError> {
        let skew = |text: &str| -> Result<SkewShape, HarnessError> {
            match parse_shape(text)? {
                Shape::Skew(s) => Ok(s),
                _ => {
                    Err(ShapeError::Malformed { text: text.to_string(), reason: "expected a skew shape".into() }.into())
                }
            }
        };
        let malformed = || {
            HarnessError::Shape(ShapeError::Malformed { text: key.to_string(), reason: format!("not a {family} key") })
        };
        Ok(match family {
            Family::Skew => Member::Skew(skew(key)?),
            Family::Ribbon => Member::Ribbon(skew(key)?),
            Family::Cylindric | Family::CircularFence => match parse_shape(key)? {
                Shape::Cylindric(c) if family == Family::Cylindric => Member::Cylindric(c),
                Shape::Cylindric(c) => Member::CircularFence(c.skew()?),
                _ => return Err(malformed()),
            },
            Family::Shifted => match parse_shape(key)? {
                Shape::Shifted(s) => Member::Shifted(s),
                _ => return Err(malformed()),
            },
            Family::WidthTwo => {
                let (dims, shape) = key.split_once(':').ok_or_else(malformed)?;
                let (m, n) = dims.split_once('x').ok_or_else(malformed)?;
                Member::WidthTwo {
                    shape: parse_padded(shape).ok_or_else(malformed)?,
                    m: m.parse().map_err(|_| malformed())?,
                    n: n.parse().map_err(|_| malformed())?,
                }
            }
            Family::ComplementZigzag => {
                let n = key.strip_prefix("complement-zigzag:").and_then(|n| n.parse().ok()).ok_or_else(malformed)?;
                Member::ComplementZigzag(n)
            }
            Family::Stretched => {
                let (shape, t) = key.rsplit_once('@').ok_or_else(malformed)?;
                Member::Stretched { shape: skew(shape)?, t: t.parse().map_err(|_| malformed())? }
            }
            Family::Shard => Member::Shard(key.parse()?),
        })
    }
}

/// Connected ribbons with `μ_ℓ = 0` that close into a circular fence
/// without a cycle (everything except columns of two or more cells).
fn closable_ribbons(cap: usize) -> Vec<SkewShape> {
    (1..=cap)
        .flat_map(connected_ribbons)
        .filter(|r| r.mu()[r.len() - 1] == 0 && (r.len() == 1 || r.lambda()[0] >= 2))
        .collect()
}

/// Members of `family` up to `cap`, in the documented scan order.
///
/// The cap is the cell count for shape families, `m, n ≤ cap` for width
/// two, `n ≤ cap` for complement zig-zags, cell count with `t ≤ 3` for
/// stretched shapes, and `b − a ≤ cap` for shard arcs.
pub fn family_members(family: Family, cap: usize) -> Vec<Member> {
    match family {
        Family::Skew => skew_shapes_up_to(cap).into_iter().map(Member::Skew).collect(),
        Family::Ribbon => (1..=cap).flat_map(connected_ribbons).map(Member::Ribbon).collect(),
        Family::Cylindric => cylindric_shapes_up_to(cap).into_iter().map(Member::Cylindric).collect(),
        Family::CircularFence => closable_ribbons(cap).into_iter().map(Member::CircularFence).collect(),
        Family::Shifted => (1..=cap).flat_map(shifted_shapes_of_size).map(Member::Shifted).collect(),
        Family::WidthTwo => {
            let mut out = Vec::new();
            for m in 1..=cap {
                for n in 1..=cap {
                    for shape in shapes_in_rectangle(m, n) {
                        out.push(Member::WidthTwo { shape, m, n });
                    }
                }
            }
            out
        }
        Family::ComplementZigzag => (1..=cap).map(Member::ComplementZigzag).collect(),
        Family::Stretched => skew_shapes_up_to(cap)
            .into_iter()
            .flat_map(|shape| (0..=STRETCHED_T_MAX).map(move |t| Member::Stretched { shape: shape.clone(), t }))
            .collect(),
        Family::Shard => Arc::all_up_to(cap).into_iter().map(Member::Shard).collect(),
    }
}

/// Summary judgements recomputable from the stored polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub positive: bool,
    pub c1: String,
    pub real_rooted: bool,
    pub log_concave_hstar: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Verified,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: Family,
    pub key: String,
    pub status: RecordStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    pub engine: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub timestamp: u64,
}

impl ScanRecord {
    /// The record without its timestamp, for comparisons across runs.
    pub fn content(&self) -> (Family, &str, RecordStatus, Option<&Polynomial>, Option<&Verdicts>, &str) {
        (self.family, &self.key, self.status, self.polynomial.as_ref(), self.verdicts.as_ref(), &self.engine)
    }
}

/// What a member evaluates to: the polynomial, the variable's meaning, and
/// the engine used.
struct Evaluation {
    polynomial: Polynomial,
    engine: &'static str,
    kind: PolyKind,
}

enum PolyKind {
    /// An order polynomial of a poset with this many elements.
    Order(usize),
    /// An Ehrhart polynomial (constant term 1).
    Ehrhart,
}

fn evaluate(member: &Member) -> Result<Evaluation, HarnessError> {
    let order = |polynomial: Polynomial, engine, n| Evaluation { polynomial, engine, kind: PolyKind::Order(n) };
    Ok(match member {
        Member::Skew(s) | Member::Ribbon(s) => order(kreweras_order_polynomial(s)?, "kreweras", s.size()),
        Member::Cylindric(c) => order(gk_cylindric_order_polynomial(c)?, "gk", c.size()),
        Member::CircularFence(s) => order(circular_fence_order_polynomial(s)?, "circular_fence", s.size()),
        Member::Shifted(s) => order(order_polynomial(&shifted_cell_poset(s)?)?, "bruteforce", s.size()),
        Member::WidthTwo { shape, m, n } => {
            order(order_polynomial(&width_two_poset(shape, *m, *n)?)?, "bruteforce", m + n)
        }
        Member::ComplementZigzag(n) => order(order_polynomial(&complement_zigzag(*n))?, "bruteforce", *n),
        Member::Stretched { shape, t } => {
            Evaluation { polynomial: stretched_pp(shape, *t)?, engine: "kreweras_stretched", kind: PolyKind::Ehrhart }
        }
        Member::Shard(a) => Evaluation { polynomial: shard_ehrhart(a)?, engine: "shard_dp", kind: PolyKind::Ehrhart },
    })
}

fn is_cap_error(e: &HarnessError) -> bool {
    matches!(e, HarnessError::Poset(PosetError::CapExceeded { .. } | PosetError::TooLarge { .. }))
}

/// Checks the structural invariants and computes the verdicts.
fn judge(key: &str, ev: &Evaluation) -> Result<Verdicts, HarnessError> {
    let p = &ev.polynomial;
    let violation = |what: &str| HarnessError::Invariant { key: key.to_string(), what: what.to_string() };
    let one = Rational::from_integer(1.into());
    let (positive, ehr, dim) = match ev.kind {
        PolyKind::Order(n) => {
            if p.eval_int(1) != one {
                return Err(violation("Ω(1) ≠ 1"));
            }
            if p.degree() != Some(n) {
                return Err(violation("degree differs from the number of elements"));
            }
            let scaled = p.scale(&Rational::from_integer(factorial(n).into()));
            if !scaled.has_integer_coeffs() {
                return Err(violation("n!·Ω is not integral"));
            }
            (p.has_nonnegative_coeffs(), p.shift(1), n)
        }
        PolyKind::Ehrhart => {
            if p.eval_int(0) != one {
                return Err(violation("Ehrhart constant term ≠ 1"));
            }
            (p.has_nonnegative_coeffs(), p.clone(), p.degree().unwrap_or(0))
        }
    };
    let hstar = HStarVector::from_ehrhart(&ehr, dim)?;
    Ok(Verdicts {
        positive,
        c1: rational_to_string(&p.coeff(1)),
        real_rooted: analyze(p)?.real_rooted,
        log_concave_hstar: hstar.is_nonnegative() && hstar.is_log_concave(),
    })
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Computes one record. Engine caps become skipped records; every other
/// failure is an error.
pub fn scan_member(family: Family, member: &Member) -> Result<ScanRecord, HarnessError> {
    let key = member.key();
    let timestamp = now();
    match evaluate(member) {
        Ok(ev) => {
            let verdicts = judge(&key, &ev)?;
            Ok(ScanRecord {
                family,
                key,
                status: RecordStatus::Verified,
                polynomial: Some(ev.polynomial),
                verdicts: Some(verdicts),
                engine: ev.engine.to_string(),
                reason: None,
                timestamp,
            })
        }
        Err(e) if is_cap_error(&e) => Ok(ScanRecord {
            family,
            key,
            status: RecordStatus::Skipped,
            polynomial: None,
            verdicts: None,
            engine: String::new(),
            reason: Some(e.to_string()),
            timestamp,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub family: Family,
    pub size_cap: usize,
    pub members: usize,
    pub verified: usize,
    pub skipped: usize,
    /// Keys whose polynomial has a negative coefficient.
    pub counterexamples: Vec<String>,
    pub min_c1: Option<String>,
    pub min_c1_key: Option<String>,
    pub not_real_rooted: usize,
    pub not_log_concave_hstar: usize,
    /// Records appended by this run.
    pub new_records: usize,
    pub elapsed_ms: u64,
}

impl ScanSummary {
    /// Summary with the timing zeroed, for reproducible output.
    pub fn without_timing(&self) -> Self {
        ScanSummary { elapsed_ms: 0, ..self.clone() }
    }
}

fn summarize(
    family: Family,
    size_cap: usize,
    records: &[ScanRecord],
    new_records: usize,
    started: Instant,
) -> ScanSummary {
    let mut counterexamples = Vec::new();
    let mut min_c1: Option<(Rational, String, String)> = None;
    let (mut verified, mut skipped, mut not_real_rooted, mut not_lc) = (0, 0, 0, 0);
    for r in records {
        let Some(v) = &r.verdicts else {
            skipped += 1;
            continue;
        };
        verified += 1;
        if !v.positive {
            counterexamples.push(r.key.clone());
        }
        not_real_rooted += usize::from(!v.real_rooted);
        not_lc += usize::from(!v.log_concave_hstar);
        let c1 = r.polynomial.as_ref().map(|p| p.coeff(1)).unwrap_or_default();
        if min_c1.as_ref().is_none_or(|(m, _, _)| c1 < *m) {
            min_c1 = Some((c1, v.c1.clone(), r.key.clone()));
        }
    }
    ScanSummary {
        family,
        size_cap,
        members: records.len(),
        verified,
        skipped,
        counterexamples,
        min_c1: min_c1.as_ref().map(|m| m.1.clone()),
        min_c1_key: min_c1.map(|m| m.2),
        not_real_rooted,
        not_log_concave_hstar: not_lc,
        new_records,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

/// First line of every store.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoreHeader {
    pub family: Family,
    pub size_cap: usize,
}

impl fmt::Display for StoreHeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} up to {}", self.family, self.size_cap)
    }
}

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    header: StoreHeader,
}

/// Newline-delimited JSON store: a header line, then one record per line.
pub struct Store {
    path: PathBuf,
    file: File,
    pub header: StoreHeader,
    pub records: Vec<ScanRecord>,
}

impl Store {
    fn io(path: &Path, e: impl fmt::Display) -> HarnessError {
        HarnessError::Io { path: path.display().to_string(), message: e.to_string() }
    }

    /// Opens or creates a store. A trailing partial line is cut off; a
    /// complete line that does not parse is reported as corruption.
    pub fn open(path: &Path, expected: Option<&StoreHeader>) -> Result<Store, HarnessError> {
        let mut file =
            OpenOptions::new().read(true).append(true).create(true).open(path).map_err(|e| Self::io(path, e))?;
        let mut text = String::new();
        file.read_to_string(&mut text).map_err(|e| Self::io(path, e))?;
        let mut offset = 0u64;
        let mut header: Option<StoreHeader> = None;
        let mut records = Vec::new();
        let mut rest = text.as_str();
        while let Some(end) = rest.find('\n') {
            let line = &rest[..end];
            let corrupt = || HarnessError::CorruptStore { path: path.display().to_string(), offset };
            if header.is_none() {
                header = Some(serde_json::from_str::<HeaderLine>(line).map_err(|_| corrupt())?.header);
            } else {
                records.push(serde_json::from_str::<ScanRecord>(line).map_err(|_| corrupt())?);
            }
            offset += end as u64 + 1;
            rest = &rest[end + 1..];
        }
        if !rest.is_empty() {
            file.set_len(offset).map_err(|e| Self::io(path, e))?;
        }
        let header = match (header, expected) {
            (Some(found), Some(exp)) if &found != exp => {
                return Err(HarnessError::StoreMismatch {
                    path: path.display().to_string(),
                    found: found.to_string(),
                    expected: exp.to_string(),
                });
            }
            (Some(found), _) => found,
            (None, Some(exp)) => {
                let line = serde_json::to_string(&HeaderLine { header: exp.clone() }).expect("serialisable");
                file.write_all(format!("{line}\n").as_bytes()).map_err(|e| Self::io(path, e))?;
                exp.clone()
            }
            (None, None) => {
                return Err(Self::io(path, "store is empty and no family was given"));
            }
        };
        Ok(Store { path: path.to_path_buf(), file, header, records })
    }

    /// One `write` per record, so a crash leaves at most one partial line.
    fn append(&mut self, record: &ScanRecord) -> Result<(), HarnessError> {
        let line = format!("{}\n", serde_json::to_string(record).expect("serialisable"));
        self.file.write_all(line.as_bytes()).map_err(|e| Self::io(&self.path, e))?;
        self.records.push(record.clone());
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub family: Family,
    pub size_cap: usize,
    /// Worker threads; `0` means the rayon default.
    pub workers: usize,
    pub store: Option<PathBuf>,
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, HarnessError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| HarnessError::Io { path: String::new(), message: e.to_string() })
}

/// Scans every member; with a store, members already recorded are skipped
/// and new records are appended in scan order.
pub fn scan(opts: &ScanOptions) -> Result<(ScanSummary, Vec<ScanRecord>), HarnessError> {
    let started = Instant::now();
    let header = StoreHeader { family: opts.family, size_cap: opts.size_cap };
    let mut store = match &opts.store {
        Some(path) => Some(Store::open(path, Some(&header))?),
        None => None,
    };
    let done: HashSet<String> =
        store.as_ref().map(|s| s.records.iter().map(|r| r.key.clone()).collect()).unwrap_or_default();
    let members = family_members(opts.family, opts.size_cap);
    let todo: Vec<&Member> = members.iter().filter(|m| !done.contains(&m.key())).collect();
    let pool = pool(opts.workers)?;
    let mut fresh = Vec::with_capacity(todo.len());
    for chunk in todo.chunks(CHUNK) {
        let records: Vec<ScanRecord> =
            pool.install(|| chunk.par_iter().map(|m| scan_member(opts.family, m)).collect::<Result<_, _>>())?;
        if let Some(store) = store.as_mut() {
            for r in &records {
                store.append(r)?;
            }
        }
        fresh.extend(records);
    }
    let new_records = fresh.len();
    let mut all = match store {
        Some(s) => s.records,
        None => fresh,
    };
    let order: BTreeMap<String, usize> = members.iter().enumerate().map(|(i, m)| (m.key(), i)).collect();
    all.sort_by_key(|r| order.get(&r.key).copied().unwrap_or(usize::MAX));
    Ok((summarize(opts.family, opts.size_cap, &all, new_records, started), all))
}

/// Continues the scan recorded in `path`.
pub fn resume(path: &Path, workers: usize) -> Result<ScanSummary, HarnessError> {
    let header = Store::open(path, None)?.header;
    let opts =
        ScanOptions { family: header.family, size_cap: header.size_cap, workers, store: Some(path.to_path_buf()) };
    Ok(scan(&opts)?.0)
}

/// Engine pairs exercised by [`cross_validate`] and how often.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub size_cap: usize,
    pub pairs: BTreeMap<String, usize>,
}

type Checks = Vec<(&'static str, String, Result<(), HarnessError>)>;

fn agree(
    key: &str,
    left_engine: &str,
    left: &Polynomial,
    right_engine: &str,
    right: &Polynomial,
) -> Result<(), HarnessError> {
    if left == right {
        Ok(())
    } else {
        Err(HarnessError::Disagreement {
            key: key.to_string(),
            left_engine: left_engine.to_string(),
            right_engine: right_engine.to_string(),
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}

/// Largest size at which the map-counting brute force joins the matrix.
const MAP_COUNT_CAP: usize = 6;
/// Largest straight shape sent through the reduced-word engines.
const WORD_CAP: usize = 7;

fn hook_arms(s: &SkewShape) -> Option<(usize, usize)> {
    let l = s.lambda();
    (s.is_straight() && l[1..].iter().all(|&x| x == 1)).then(|| (l[0] - 1, l.len() - 1))
}

fn skew_checks(s: &SkewShape) -> Result<Vec<&'static str>, HarnessError> {
    let key = s.to_string();
    let mut pairs = Vec::new();
    let kw = kreweras_order_polynomial(s)?;
    let p = cell_poset(s)?;
    agree(&key, "kreweras", &kw, "bruteforce", &order_polynomial(&p)?)?;
    pairs.push("kreweras=bruteforce");
    let rec = Polynomial::new(std::iter::once(Rational::default()).chain(coefficients_by_recursion(&p)?).collect());
    agree(&key, "kreweras", &kw, "recursion", &rec)?;
    pairs.push("kreweras=recursion");
    if c1_skew(s) != kw.coeff(1) {
        return Err(HarnessError::Disagreement {
            key,
            left_engine: "kreweras".into(),
            right_engine: "c1_closed_form".into(),
            left: rational_to_string(&kw.coeff(1)),
            right: rational_to_string(&c1_skew(s)),
        });
    }
    pairs.push("kreweras=c1_closed_form");
    if s.size() <= MAP_COUNT_CAP {
        agree(&key, "bruteforce", &order_polynomial(&p)?, "map_count", &bruteforce_order_polynomial(&p))?;
        pairs.push("bruteforce=map_count");
    }
    if s.is_straight() && s.size() <= WORD_CAP {
        let lambda = Partition::new(s.lambda().to_vec())?;
        agree(&key, "kreweras", &kw, "macdonald", &macdonald_pp(&lambda)?.shift(-1))?;
        pairs.push("kreweras=macdonald");
        let esym =
            Polynomial::new(std::iter::once(Rational::default()).chain(coefficients_via_esym(&lambda)?).collect());
        agree(&key, "kreweras", &kw, "esym", &esym)?;
        pairs.push("kreweras=esym");
        if let Some((a, b)) = hook_arms(s) {
            agree(&key, "kreweras", &kw, "hook", &hook_pp(a, b).shift(-1))?;
            pairs.push("kreweras=hook");
        }
    }
    Ok(pairs)
}

/// Runs every applicable pair of engines on all shapes up to `size_cap`
/// and stops at the first disagreement.
pub fn cross_validate(size_cap: usize) -> Result<CrossReport, HarnessError> {
    let mut report = CrossReport { size_cap, pairs: BTreeMap::new() };
    let mut tally = |pairs: Vec<&'static str>| {
        for p in pairs {
            *report.pairs.entry(p.to_string()).or_default() += 1;
        }
    };
    let skew: Vec<Vec<&'static str>> =
        skew_shapes_up_to(size_cap).par_iter().map(skew_checks).collect::<Result<_, _>>()?;
    skew.into_iter().for_each(&mut tally);

    for n in 1..=size_cap {
        let z = SkewShape::zigzag(n);
        agree(
            &format!("zigzag:{n}"),
            "kreweras",
            &kreweras_order_polynomial(&z)?,
            "zigzag_determinant",
            &zigzag_determinant(n),
        )?;
        tally(vec!["kreweras=zigzag_determinant"]);
    }

    let cyl: Checks = cylindric_shapes_up_to(size_cap)
        .par_iter()
        .map(|c| {
            let key = c.to_string();
            let res = (|| {
                let gk = gk_cylindric_order_polynomial(c)?;
                agree(&key, "gk", &gk, "bruteforce", &order_polynomial(&cylindric_cell_poset(c)?)?)
            })();
            ("gk=bruteforce", key, res)
        })
        .collect();
    let fences: Checks = closable_ribbons(size_cap)
        .par_iter()
        .map(|r| {
            let key = r.to_string();
            let res = (|| {
                let compact = circular_fence_order_polynomial(r)?;
                agree(
                    &key,
                    "circular_fence",
                    &compact,
                    "gk",
                    &gk_cylindric_order_polynomial(&CylindricShape::circular_fence(r)?)?,
                )
            })();
            ("circular_fence=gk", key, res)
        })
        .collect();
    for (pair, _, res) in cyl.into_iter().chain(fences) {
        res?;
        tally(vec![pair]);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("circular-fence".parse::<Family>().unwrap(), Family::CircularFence);
        assert!("hexagons".parse::<Family>().is_err());
    }

    #[test]
    fn keys_round_trip() {
        for f in Family::ALL {
            for m in family_members(f, 3) {
                assert_eq!(Member::from_key(f, &m.key()).unwrap(), m, "{f} {}", m.key());
            }
        }
    }

    #[test]
    fn small_skew_scan() {
        let opts = ScanOptions { family: Family::Skew, size_cap: 5, workers: 2, store: None };
        let (summary, records) = scan(&opts).unwrap();
        assert_eq!(summary.members, 1 + 3 + 9 + 28 + 87);
        assert!(summary.counterexamples.is_empty());
        assert_eq!(summary.skipped, 0);
        assert_eq!(records[0].key, "1");
        let again = scan(&ScanOptions { workers: 1, ..opts }).unwrap();
        assert_eq!(summary.without_timing(), again.0.without_timing());
    }

    #[test]
    fn cross_validation_small() {
        let r = cross_validate(5).unwrap();
        assert!(r.pairs.len() >= 5, "{:?}", r.pairs);
    }

    #[test]
    fn store_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.jsonl");
        let opts = ScanOptions { family: Family::Ribbon, size_cap: 5, workers: 1, store: Some(path.clone()) };
        let (first, _) = scan(&opts).unwrap();
        assert_eq!(first.new_records, 1 + 2 + 4 + 8 + 16);
        let again = resume(&path, 1).unwrap();
        assert_eq!(again.new_records, 0);
        assert_eq!(again.members, first.members);

        // Cut the last record in half.
        let text = std::fs::read_to_string(&path).unwrap();
        let keep = text.len() - 20;
        std::fs::write(&path, &text[..keep]).unwrap();
        let healed = resume(&path, 1).unwrap();
        assert_eq!(healed.new_records, 1);
        assert_eq!(healed.without_timing().members, first.members);

        let other = ScanOptions { family: Family::Skew, ..opts };
        assert!(matches!(scan(&other), Err(HarnessError::StoreMismatch { .. })));
    }

    #[test]
    fn corrupt_store_reports_offset() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.jsonl");
        let opts = ScanOptions { family: Family::Ribbon, size_cap: 2, workers: 1, store: Some(path.clone()) };
        scan(&opts).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let first_line = text.find('\n').unwrap() as u64 + 1;
        std::fs::write(&path, text.replacen("\"status\"", "\"stat", 1)).unwrap();
        assert_eq!(
            resume(&path, 1),
            Err(HarnessError::CorruptStore { path: path.display().to_string(), offset: first_line })
        );
    }

    #[test]
    fn empty_store_is_fresh_scan() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.jsonl");
        let opts = ScanOptions { family: Family::Shard, size_cap: 3, workers: 1, store: Some(path) };
        let (s, _) = scan(&opts).unwrap();
        assert_eq!(s.new_records, 7);
        assert!(s.counterexamples.is_empty());
    }
}
