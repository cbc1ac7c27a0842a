use crate::{CliError, ResultDocument};
use std::fmt::Write;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            _ => Err(CliError::Usage(format!("unknown format {s:?}; expected json, csv, latex or text"))),
        }
    }
}

pub fn emit_result(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => csv(doc),
        Format::Latex => latex(doc),
        Format::Text => text(doc),
    }
}

fn json(doc: &ResultDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("result documents always serialize");
    s.push('\n');
    s
}

/// Header `dim,empty,b0,...,b(2 dim)` and one data row.
fn csv(doc: &ResultDocument) -> String {
    let mut head = vec!["dim".to_string(), "empty".to_string()];
    let mut row = vec![doc.dim.to_string(), doc.empty.to_string()];
    for (i, b) in doc.betti.iter().enumerate() {
        head.push(format!("b{i}"));
        row.push(b.to_string());
    }
    format!("{}\n{}\n", head.join(","), row.join(","))
}

/// One column of Betti numbers up to the middle dimension.
fn latex(doc: &ResultDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\\begin{{tabular}}{{c|c}}");
    let _ = writeln!(s, " & {} \\\\ \\hline", doc.method);
    let middle = middle(doc);
    if middle.is_empty() {
        let _ = writeln!(s, "$\\beta_{{0}}$ & 0 \\\\");
    }
    for (i, b) in middle.iter().enumerate() {
        let _ = writeln!(s, "$\\beta_{{{i}}}$ & {b} \\\\");
    }
    let _ = writeln!(s, "\\end{{tabular}}");
    s
}

fn text(doc: &ResultDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "method: {}", doc.method);
    let _ = writeln!(s, "dim: {}", doc.dim);
    let _ = writeln!(s, "empty: {}", doc.empty);
    let _ = writeln!(s, "ss_eq_stable: {}", doc.ss_eq_stable);
    let betti: Vec<String> = doc.betti.iter().map(u64::to_string).collect();
    let _ = writeln!(s, "betti: {}", betti.join(" "));
    let _ = writeln!(s, "poincare: {}", poly_string(&doc.polynomial));
    if let Some(t) = doc.timing {
        let _ = writeln!(s, "timing: {t:.6}s");
    }
    s
}

fn middle(doc: &ResultDocument) -> &[u64] {
    let k = if doc.dim >= 0 { (doc.dim + 1) as usize } else { 0 };
    &doc.betti[..k.min(doc.betti.len())]
}

fn poly_string(terms: &[(i64, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(e, c)| match (*e, c.as_str()) {
            (0, c) => c.to_string(),
            (1, "1") => "t".into(),
            (1, c) => format!("{c}t"),
            (e, "1") => format!("t^{e}"),
            (e, c) => format!("{c}t^{e}"),
        })
        .collect();
    parts.join(" + ")
}
