use crate::emit::{emit_result, Format};
use crate::error::{engine_exit_code, EXIT_INTERNAL};
use crate::{CliError, InstanceDocument, ResultDocument};
use parbetti::engine::{applicable_methods, compare, CompareReport};
use parbetti::parabolic::semistability_witness;
use parbetti::rank2::exists_stable_rank2;
use parbetti::{compute, BettiResult, ComputeOptions, Method, Rank2Profile};
use rayon::prelude::*;
use std::fmt::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

/// Worker-count variable; unset means one worker per core.
pub const THREADS_VAR: &str = "PARBETTI_THREADS";

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: 0 }
    }

    pub fn from_error(e: &CliError) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

/// Sizes the global pool from [`THREADS_VAR`]. Call once, before any work.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR}={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size worker pool: {e}")))
}

/// Parses an inclusive range written `a..b` (or a single value).
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Usage(format!("{s:?} is not a range of the form a..b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), s.trim()),
    };
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

/// Per-invocation overrides of the document options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub method: Option<Method>,
    pub truncation: Option<i64>,
    pub force: bool,
    pub timing: bool,
}

impl RunOptions {
    fn resolve(&self, doc: &InstanceDocument) -> Result<(Method, ComputeOptions), CliError> {
        let method = match self.method {
            Some(m) => m,
            None => doc.method()?,
        };
        let mut opts = doc.compute_options()?;
        if self.truncation.is_some() {
            opts.truncation = self.truncation;
        }
        opts.force |= self.force;
        Ok((method, opts))
    }
}

pub fn cmd_compute(doc: &InstanceDocument, run: &RunOptions, format: Format) -> Outcome {
    let go = || -> Result<String, CliError> {
        let instance = doc.to_instance()?;
        let (method, opts) = run.resolve(doc)?;
        let start = Instant::now();
        let result = compute(&instance, method, &opts)?;
        let timing = run.timing.then(|| start.elapsed().as_secs_f64());
        Ok(emit_result(&ResultDocument::from_result(&result, timing), format))
    };
    go().map_or_else(|e| Outcome::from_error(&e), Outcome::ok)
}

pub fn cmd_compare(doc: &InstanceDocument, run: &RunOptions) -> Outcome {
    let instance = match doc.to_instance() {
        Ok(i) => i,
        Err(e) => return Outcome::from_error(&e),
    };
    let opts = match run.resolve(doc) {
        Ok((_, o)) => o,
        Err(e) => return Outcome::from_error(&e),
    };
    let start = Instant::now();
    let report = compare(&instance, &opts);
    let elapsed = start.elapsed().as_secs_f64();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "instance: genus {} degree {} rank {} points {} dim {}",
        instance.genus,
        instance.degree,
        instance.data.rank(),
        instance.data.num_points(),
        instance.moduli_dim()
    );
    for (m, r) in &report.results {
        match r {
            Ok(r) => {
                let b: Vec<String> = r.middle().iter().map(u64::to_string).collect();
                let shown = if r.empty { "empty".to_string() } else { format!("betti to middle {}", b.join(" ")) };
                let _ = writeln!(out, "{:<10} ok     {shown}", m.name());
            }
            Err(e) => {
                let _ = writeln!(out, "{:<10} error  {e}", m.name());
            }
        }
    }
    let code = verdict_code(&report);
    let verdict = match (&report.disagreement, code) {
        (Some(d), _) => {
            format!("DISAGREE at t^{}: {} has {}, {} has {}", d.exponent, d.method, d.got, d.reference, d.expected)
        }
        (None, 0) => "AGREE".to_string(),
        (None, _) => "FAILED".to_string(),
    };
    let _ = writeln!(out, "verdict: {verdict}");
    if run.timing {
        let _ = writeln!(out, "timing: {elapsed:.6}s");
    }
    Outcome { stdout: out, stderr: String::new(), code }
}

fn verdict_code(report: &CompareReport) -> i32 {
    if report.disagreement.is_some() {
        return EXIT_INTERNAL;
    }
    report.results.iter().find_map(|(_, r)| r.as_ref().err().map(engine_exit_code)).unwrap_or(0)
}

pub fn cmd_check(doc: &InstanceDocument) -> Outcome {
    let instance = match doc.to_instance() {
        Ok(i) => i,
        Err(e) => return Outcome::from_error(&e),
    };
    let mut out = String::new();
    match semistability_witness(&instance) {
        None => {
            let _ = writeln!(out, "ss_eq_stable: TRUE");
        }
        Some(w) => {
            let _ = writeln!(out, "ss_eq_stable: FALSE");
            let _ = writeln!(out, "witness: rank {} sub-data {} of degree {}", w.sub.rank(), w.sub, w.degree);
        }
    }
    let _ = writeln!(out, "dim: {}", instance.moduli_dim());
    let methods: Vec<&str> = applicable_methods(&instance).into_iter().map(Method::name).collect();
    let _ = writeln!(out, "methods: {}", methods.join(" "));
    if instance.data.rank() == 2 {
        let verdict = Rank2Profile::from_instance(&instance).and_then(|p| exists_stable_rank2(&p));
        match verdict {
            Ok(true) => {
                let _ = writeln!(out, "exists_stable: TRUE");
            }
            Ok(false) => {
                let _ = writeln!(out, "exists_stable: FALSE");
            }
            Err(e) => {
                let _ = writeln!(out, "exists_stable: undetermined ({e})");
            }
        }
    }
    Outcome::ok(out)
}

/// One `(genus, degree)` cell of a sweep.
#[derive(Clone, Debug)]
pub struct SweepCell {
    pub genus: u32,
    pub degree: i64,
    pub result: Result<BettiResult, String>,
    pub code: i32,
}

/// Betti numbers to the middle dimension over a grid, genus-major.
#[derive(Clone, Debug)]
pub struct SweepTable {
    pub cells: Vec<SweepCell>,
}

/// Computes every cell in parallel; cell order is genus-major, then degree.
pub fn sweep_table(
    doc: &InstanceDocument,
    run: &RunOptions,
    genera: RangeInclusive<i64>,
    degrees: RangeInclusive<i64>,
) -> Result<SweepTable, CliError> {
    let base = doc.to_instance()?;
    let (method, opts) = run.resolve(doc)?;
    if *genera.start() < 0 {
        return Err(CliError::Usage("genus range must be non-negative".into()));
    }
    let grid: Vec<(u32, i64)> = genera.flat_map(|g| degrees.clone().map(move |d| (g as u32, d))).collect();
    let cells = grid
        .par_iter()
        .map(|&(genus, degree)| {
            let inst = base.with_genus(genus).with_degree(degree);
            let (result, code) = match compute(&inst, method, &opts) {
                Ok(r) => (Ok(r), 0),
                Err(e) => (Err(e.to_string()), engine_exit_code(&e)),
            };
            SweepCell { genus, degree, result, code }
        })
        .collect();
    Ok(SweepTable { cells })
}

impl SweepTable {
    fn single_degree(&self) -> bool {
        self.cells.iter().all(|c| c.degree == self.cells[0].degree)
    }

    fn header(&self, c: &SweepCell) -> String {
        if self.single_degree() {
            format!("$g={}$", c.genus)
        } else {
            format!("$g={},d={}$", c.genus, c.degree)
        }
    }

    fn rows(&self) -> usize {
        self.cells.iter().filter_map(|c| c.result.as_ref().ok()).map(|r| r.middle().len()).max().unwrap_or(0).max(1)
    }

    /// The entry of row `i` in a cell: a number, `-` above the middle
    /// dimension, `?` for a failed cell.
    fn entry(c: &SweepCell, i: usize) -> String {
        match &c.result {
            Ok(r) if r.empty => {
                if i == 0 {
                    "0".into()
                } else {
                    "-".into()
                }
            }
            Ok(r) => r.middle().get(i).map_or_else(|| "-".to_string(), u64::to_string),
            Err(_) => {
                if i == 0 {
                    "?".into()
                } else {
                    "-".into()
                }
            }
        }
    }

    /// `beta_i` rows, one column per cell; failures become comments.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "\\begin{{tabular}}{{c|{}}}", "c".repeat(self.cells.len()));
        let heads: Vec<String> = self.cells.iter().map(|c| self.header(c)).collect();
        let _ = writeln!(s, " & {} \\\\ \\hline", heads.join(" & "));
        for i in 0..self.rows() {
            let row: Vec<String> = self.cells.iter().map(|c| Self::entry(c, i)).collect();
            let _ = writeln!(s, "$\\beta_{{{i}}}$ & {} \\\\", row.join(" & "));
        }
        let _ = writeln!(s, "\\end{{tabular}}");
        for c in &self.cells {
            if let Err(e) = &c.result {
                let _ = writeln!(s, "% g={} d={}: {e}", c.genus, c.degree);
            }
        }
        s
    }

    /// One line per cell: `genus,degree,dim,empty,status,b0,...`.
    pub fn to_csv(&self) -> String {
        let rows = self.rows();
        let mut s = String::from("genus,degree,dim,empty,status");
        for i in 0..rows {
            let _ = write!(s, ",b{i}");
        }
        s.push('\n');
        for c in &self.cells {
            match &c.result {
                Ok(r) => {
                    let _ = write!(s, "{},{},{},{},ok", c.genus, c.degree, r.dim, r.empty);
                    for i in 0..rows {
                        let v = r.middle().get(i).map(u64::to_string).unwrap_or_default();
                        let _ = write!(s, ",{v}");
                    }
                }
                Err(e) => {
                    let _ = write!(s, "{},{},,,error: {}", c.genus, c.degree, e.replace([',', '\n'], ";"));
                    s.push_str(&",".repeat(rows));
                }
            }
            s.push('\n');
        }
        s
    }

    /// Zero unless every cell failed, then the first failure's code.
    pub fn exit_code(&self) -> i32 {
        if self.cells.iter().any(|c| c.result.is_ok()) {
            0
        } else {
            self.cells.first().map_or(0, |c| c.code)
        }
    }
}

pub fn cmd_sweep(
    doc: &InstanceDocument,
    run: &RunOptions,
    genera: RangeInclusive<i64>,
    degrees: RangeInclusive<i64>,
    format: Format,
) -> Outcome {
    let table = match sweep_table(doc, run, genera, degrees) {
        Ok(t) => t,
        Err(e) => return Outcome::from_error(&e),
    };
    let stdout = match format {
        Format::Latex => table.to_latex(),
        Format::Csv => table.to_csv(),
        other => return Outcome::from_error(&CliError::Usage(format!("sweep emits latex or csv, not {other:?}"))),
    };
    Outcome { stdout, stderr: String::new(), code: table.exit_code() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..3").unwrap(), 0..=3);
        assert_eq!(parse_range("-2..-1").unwrap(), -2..=-1);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("3..0").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
