//! Text, JSON and LaTeX renderings of results.

use std::fmt::Write as _;

use cfconv_core::{CFiniteSequence, GuessResult, IdentityResult, Polynomial, Rational, RationalFunction};
use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::batch::{BatchReport, TableKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

/// Coefficient arrays as strings, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl GfJson {
    pub fn new(f: &RationalFunction) -> Self {
        GfJson { num: coefficient_strings(f.num()), den: coefficient_strings(f.den()) }
    }

    /// Back to a normalized rational function.
    pub fn decode(&self) -> Result<RationalFunction, String> {
        let poly = |coeffs: &[String]| -> Result<Polynomial, String> {
            coeffs.iter().map(|c| crate::input::parse_rational(c)).collect::<Result<_, _>>().map(Polynomial::new)
        };
        RationalFunction::normalize(poly(&self.num)?, poly(&self.den)?).map_err(|e| e.to_string())
    }
}

pub fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

/// The JSON form of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub gf: GfJson,
    pub order_bound: usize,
    pub order_found: usize,
    pub terms_generated: usize,
    pub guard_verified: usize,
    /// `null` unless timings were requested, so repeated runs stay byte-identical.
    pub elapsed_ms: Option<u64>,
    pub operands: String,
}

impl IdentityJson {
    pub fn new(r: &IdentityResult, elapsed_ms: Option<u64>) -> Self {
        IdentityJson {
            gf: GfJson::new(&r.gf),
            order_bound: r.order_bound,
            order_found: r.order_found,
            terms_generated: r.terms_generated,
            guard_verified: r.guard_verified,
            elapsed_ms,
            operands: r.operands.clone(),
        }
    }
}

#[derive(Serialize)]
struct SequenceJson {
    recurrence: Vec<String>,
    initial: Vec<String>,
}

impl SequenceJson {
    fn new(s: &CFiniteSequence) -> Self {
        SequenceJson {
            recurrence: s.recurrence().coeffs().iter().map(ToString::to_string).collect(),
            initial: s.initial().iter().map(ToString::to_string).collect(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Ascending-degree LaTeX, e.g. `1 - 3x - 2x^{2} + 4x^{3}`.
pub fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if k == 0 || !magnitude.is_one() {
            out.push_str(&latex_rational(&magnitude));
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => write!(out, "x^{{{k}}}").expect("writing to a String"),
        }
    }
    out
}

pub fn latex_gf(f: &RationalFunction) -> String {
    if f.den().is_one() {
        latex_polynomial(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_polynomial(f.num()), latex_polynomial(f.den()))
    }
}

pub fn terms(values: &[Rational], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => values.iter().map(|v| format!("{v}\n")).collect(),
        OutputFormat::Json => to_json(&values.iter().map(ToString::to_string).collect::<Vec<_>>()),
        OutputFormat::Latex => {
            let items: Vec<String> = values.iter().map(latex_rational).collect();
            format!("\\[ {}, \\ldots \\]\n", items.join(", "))
        }
    }
}

pub fn gf(f: &RationalFunction, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{f}\n"),
        OutputFormat::Json => to_json(&serde_json::json!({ "gf": GfJson::new(f) })),
        OutputFormat::Latex => format!("\\[ {} \\]\n", latex_gf(f)),
    }
}

pub fn sequence(s: &CFiniteSequence, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            format!("recurrence: {}\ninitial: {}\n", join(s.recurrence().coeffs()), join(s.initial()))
        }
        OutputFormat::Json => to_json(&SequenceJson::new(s)),
        OutputFormat::Latex => latex_recurrence(s),
    }
}

fn latex_recurrence(s: &CFiniteSequence) -> String {
    let mut out = String::from("\\[ a_n = ");
    let mut first = true;
    for (i, c) in s.recurrence().coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let magnitude = c.abs();
        match (first, c.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if !magnitude.is_one() {
            out.push_str(&latex_rational(&magnitude));
        }
        write!(out, "a_{{n-{}}}", i + 1).expect("writing to a String");
        first = false;
    }
    let initial: Vec<String> =
        s.initial().iter().enumerate().map(|(i, v)| format!("a_{{{i}}} = {}", latex_rational(v))).collect();
    writeln!(out, ", \\quad {} \\]", initial.join(", ")).expect("writing to a String");
    out
}

pub fn identity(r: &IdentityResult, elapsed_ms: Option<u64>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => identity_text(r, elapsed_ms),
        OutputFormat::Json => to_json(&IdentityJson::new(r, elapsed_ms)),
        OutputFormat::Latex => format!("\\[ {} \\]\n", latex_gf(&r.gf)),
    }
}

fn identity_text(r: &IdentityResult, elapsed_ms: Option<u64>) -> String {
    let mut out = format!(
        "{}\noperands: {}\norder bound: {}\norder found: {}\nterms generated: {}\nguard verified: {}\n",
        r.gf, r.operands, r.order_bound, r.order_found, r.terms_generated, r.guard_verified
    );
    if let Some(ms) = elapsed_ms {
        writeln!(out, "elapsed ms: {ms}").expect("writing to a String");
    }
    out
}

#[derive(Serialize)]
struct GuessJson {
    gf: GfJson,
    recurrence: Vec<String>,
    initial: Vec<String>,
    order_found: usize,
    terms_used: usize,
    certified: bool,
}

pub fn guess(r: &GuessResult, format: OutputFormat) -> String {
    let s = r.sequence();
    match format {
        OutputFormat::Text => format!(
            "{}\nrecurrence: {}\ninitial: {}\norder found: {}\nterms used: {}\ncertified: {}\n",
            r.gf(),
            join(s.recurrence().coeffs()),
            join(s.initial()),
            r.order_found(),
            r.terms_used(),
            r.certified()
        ),
        OutputFormat::Json => {
            let SequenceJson { recurrence, initial } = SequenceJson::new(&s);
            to_json(&GuessJson {
                gf: GfJson::new(r.gf()),
                recurrence,
                initial,
                order_found: r.order_found(),
                terms_used: r.terms_used(),
                certified: r.certified(),
            })
        }
        OutputFormat::Latex => format!("\\[ {} \\]\n", latex_gf(r.gf())),
    }
}

/// The report printed when `guess` finds nothing within the bound.
pub fn not_found(max_order: usize, terms: usize, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("not found: no recurrence of order <= {max_order} fits all {terms} terms\n"),
        OutputFormat::Json => to_json(&serde_json::json!({ "not_found": { "max_order": max_order, "terms": terms } })),
        OutputFormat::Latex => format!("% not found: no recurrence of order <= {max_order} fits all {terms} terms\n"),
    }
}

#[derive(Serialize)]
struct EntryJson {
    params: serde_json::Value,
    result: IdentityJson,
}

#[derive(Serialize)]
struct TotalsJson {
    count: usize,
    elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct ReportJson {
    table: &'static str,
    k_max: i64,
    entries: Vec<EntryJson>,
    totals: TotalsJson,
}

fn table_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::SelfConvolution => "self",
        TableKind::Cross => "cross",
    }
}

pub fn report(report: &BatchReport, timings: bool, format: OutputFormat) -> String {
    let ms = |v: u64| timings.then_some(v);
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for entry in &report.entries {
                writeln!(out, "[{}]", entry.params.label()).expect("writing to a String");
                out.push_str(&identity_text(&entry.result, ms(entry.elapsed_ms)));
                out.push('\n');
            }
            writeln!(out, "entries: {}", report.entries.len()).expect("writing to a String");
            if timings {
                writeln!(out, "total elapsed ms: {}", report.total_elapsed_ms).expect("writing to a String");
            }
            out
        }
        OutputFormat::Json => to_json(&ReportJson {
            table: table_name(report.kind),
            k_max: report.k_max,
            entries: report
                .entries
                .iter()
                .map(|e| EntryJson {
                    params: e.params.to_json(),
                    result: IdentityJson::new(&e.result, ms(e.elapsed_ms)),
                })
                .collect(),
            totals: TotalsJson { count: report.entries.len(), elapsed_ms: ms(report.total_elapsed_ms) },
        }),
        OutputFormat::Latex => report_latex(report),
    }
}

fn report_latex(report: &BatchReport) -> String {
    let (title, lhs) = match report.kind {
        TableKind::SelfConvolution => (
            "Binomial self-convolutions of the $k$-bonacci numbers",
            "\\sum_{n \\ge 0} \\sum_{j=0}^{n} \\binom{n}{j} T^{(k)}_j T^{(k)}_{n-j} \\, x^n",
        ),
        TableKind::Cross => (
            "Binomial convolutions of the $k_1$- and $k_2$-bonacci numbers",
            "\\sum_{n \\ge 0} \\sum_{j=0}^{n} \\binom{n}{j} T^{(k_1)}_j T^{(k_2)}_{n-j} \\, x^n",
        ),
    };
    let mut out =
        String::from("\\documentclass{article}\n\\usepackage{amsmath}\n\\allowdisplaybreaks\n\\begin{document}\n");
    writeln!(out, "\\section*{{{title}}}").expect("writing to a String");
    for entry in &report.entries {
        writeln!(out, "\\paragraph{{${}$}}", entry.params.label()).expect("writing to a String");
        writeln!(out, "\\[ {lhs} = {} \\]", latex_gf(&entry.result.gf)).expect("writing to a String");
    }
    out.push_str("\\end{document}\n");
    out
}
