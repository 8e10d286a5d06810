//! Sequence specifications, sequence JSON files and term files.

use std::fs;
use std::path::{Path, PathBuf};

use cfconv_core::families::kbonacci_gf;
use cfconv_core::{kbonacci, named_sequence, CFiniteSequence, Polynomial, Rational, RationalFunction, Recurrence};
use serde_json::Value;

use crate::error::CliError;

/// One `--seq`, `--kbonacci`, `--gf` or `--json` flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    Named(String),
    Kbonacci(i64),
    Gf(String),
    Json(PathBuf),
}

impl SeqSpec {
    pub fn describe(&self) -> String {
        match self {
            SeqSpec::Named(name) => format!("--seq {name}"),
            SeqSpec::Kbonacci(k) => format!("--kbonacci {k}"),
            SeqSpec::Gf(text) => format!("--gf \"{text}\""),
            SeqSpec::Json(path) => format!("--json {}", path.display()),
        }
    }
}

/// A resolved specification: either a recurrence with initial terms or a
/// generating function that has not (yet) been turned into one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Sequence(CFiniteSequence),
    Gf(RationalFunction),
}

impl Source {
    pub fn terms(&self, n: usize) -> Vec<Rational> {
        match self {
            Source::Sequence(s) => s.terms(n),
            Source::Gf(f) => f.series(n),
        }
    }

    pub fn to_gf(&self) -> RationalFunction {
        match self {
            Source::Sequence(s) => s.to_gf(),
            Source::Gf(f) => f.clone(),
        }
    }

    /// The recurrence form; fails for generating functions with a polynomial part.
    pub fn into_sequence(self) -> Result<CFiniteSequence, String> {
        match self {
            Source::Sequence(s) => Ok(s),
            Source::Gf(f) => CFiniteSequence::from_gf(&f).map_err(|e| format!("{f}: {e}")),
        }
    }
}

pub fn resolve(spec: &SeqSpec) -> Result<Source, CliError> {
    let fail = |message: String| CliError::usage(format!("{}: {message}", spec.describe()));
    match spec {
        SeqSpec::Named(name) => named_sequence(name).map(Source::Sequence).map_err(|e| fail(e.to_string())),
        // k = 1 has no recurrence form; its generating function still expands.
        SeqSpec::Kbonacci(1) => Ok(Source::Gf(kbonacci_gf(1).expect("k = 1 is valid"))),
        SeqSpec::Kbonacci(k) => kbonacci(*k).map(Source::Sequence).map_err(|e| fail(e.to_string())),
        SeqSpec::Gf(text) => text.parse().map(Source::Gf).map_err(|e| fail(format!("{e}"))),
        SeqSpec::Json(path) => {
            let value = read_json(path)?;
            sequence_from_json(&value).map_err(fail)
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: invalid JSON: {e}", path.display())))
}

/// A single exact rational such as `-3`, `7/2` or ` 5 `.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let p: Polynomial = text.parse().map_err(|e| format!("'{text}': {e}"))?;
    match p.degree() {
        None | Some(0) => Ok(p.constant_term()),
        Some(_) => Err(format!("'{text}': expected a rational constant")),
    }
}

/// A comma- or whitespace-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(parse_rational).collect()
}

fn json_scalar(value: &Value, what: &str) -> Result<Rational, String> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|e| format!("{what}: {e}")),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(format!("{what}: expected a string or an integer, found {other}")),
    }
}

fn json_scalars(value: &Value, what: &str) -> Result<Vec<Rational>, String> {
    let Value::Array(items) = value else {
        return Err(format!("\"{what}\" must be an array"));
    };
    items.iter().enumerate().map(|(i, v)| json_scalar(v, &format!("{what}[{i}]"))).collect()
}

/// A polynomial given either as text or as an ascending coefficient array.
fn json_polynomial(value: &Value, what: &str) -> Result<Polynomial, String> {
    match value {
        Value::String(s) => s.parse().map_err(|e| format!("{what}: {e}")),
        Value::Array(_) => json_scalars(value, what).map(Polynomial::new),
        _ => Err(format!("\"{what}\" must be a polynomial string or a coefficient array")),
    }
}

/// `{"recurrence": [...], "initial": [...]}` or `{"gf": {"num": ..., "den": ...}}`.
pub fn sequence_from_json(value: &Value) -> Result<Source, String> {
    if let Some(gf) = value.get("gf") {
        let (Some(num), Some(den)) = (gf.get("num"), gf.get("den")) else {
            return Err("\"gf\" needs both \"num\" and \"den\"".into());
        };
        let f = RationalFunction::normalize(json_polynomial(num, "num")?, json_polynomial(den, "den")?)
            .map_err(|e| e.to_string())?;
        return Ok(Source::Gf(f));
    }
    match (value.get("recurrence"), value.get("initial")) {
        (Some(rec), Some(init)) => {
            let recurrence = Recurrence::new(json_scalars(rec, "recurrence")?).map_err(|e| e.to_string())?;
            let initial = json_scalars(init, "initial")?;
            CFiniteSequence::new(recurrence, initial).map(Source::Sequence).map_err(|e| e.to_string())
        }
        _ => Err("expected an object with \"recurrence\" and \"initial\", or with \"gf\"".into()),
    }
}

/// Terms for `guess`: a JSON array of strings or integers, or plain text
/// with comma/whitespace separators.
pub fn read_terms_file(path: &Path) -> Result<Vec<Rational>, CliError> {
    let text = read_text(path)?;
    let fail = |message: String| CliError::usage(format!("{}: {message}", path.display()));
    if text.trim_start().starts_with('[') {
        let value: Value = serde_json::from_str(&text).map_err(|e| fail(format!("invalid JSON: {e}")))?;
        json_scalars(&value, "terms").map_err(fail)
    } else {
        parse_rational_list(&text).map_err(fail)
    }
}
