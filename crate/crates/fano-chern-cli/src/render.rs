//! Rendering of tables, expansions and invariant summaries in the three
//! output formats. Every rational is emitted exactly, never as a decimal.

use crate::cli::Format;
use fano_chern::coefficients::b_row;
use fano_chern::combinatorics::{bernoulli, c_coeff};
use fano_chern::invariants::{InvariantPair, ModelFamily, PolarizedFamily};
use fano_chern::symbolic::{FormalClass, TermKind};
use fano_chern::Rational;
use serde::Serialize;
use std::fmt::Write as _;

/// Exact TeX form: integers stay plain, everything else becomes a signed
/// `\frac{p}{q}`.
pub fn rational_tex(value: &Rational) -> String {
    if value.is_integer() {
        return value.to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let abs = value.abs();
    format!("{sign}\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
}

fn csv_field(value: &str) -> String {
    if value.contains(',') || value.contains('"') {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_owned()
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("rendered values serialize")
}

#[derive(Serialize)]
struct BernoulliEntry {
    m: u32,
    #[serde(rename = "B")]
    b: String,
}

pub fn bernoulli_table(max_m: u32, format: Format) -> String {
    let values: Vec<Rational> = (0..=max_m).map(bernoulli).collect();
    match format {
        Format::Csv => {
            let mut out = String::from("m,B\n");
            for (m, value) in values.iter().enumerate() {
                writeln!(out, "{m},{value}").unwrap();
            }
            out.pop();
            out
        }
        Format::Json => {
            let entries: Vec<BernoulliEntry> = values
                .iter()
                .enumerate()
                .map(|(m, value)| BernoulliEntry {
                    m: m as u32,
                    b: value.to_string(),
                })
                .collect();
            pretty(&entries)
        }
        Format::Tex => {
            let mut out = String::from("\\begin{array}{rr}\nm & B_m \\\\\n\\hline\n");
            for (m, value) in values.iter().enumerate() {
                writeln!(out, "{m} & {} \\\\", rational_tex(value)).unwrap();
            }
            out.push_str("\\end{array}");
            out
        }
    }
}

#[derive(Serialize)]
struct CoefficientTable {
    j: u32,
    rows: Vec<CoefficientRow>,
}

#[derive(Serialize)]
struct CoefficientRow {
    i: u32,
    b: Vec<String>,
}

pub fn coefficient_table(j: u32, i_max: u32, format: Format) -> fano_chern::error::Result<String> {
    let rows: Vec<(u32, Vec<Rational>)> = (1..=i_max)
        .map(|i| b_row(i, j).map(|row| (i, row)))
        .collect::<fano_chern::error::Result<_>>()?;
    let width = (i_max + j + 1) as usize;
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("i");
            for k in 0..width {
                write!(out, ",k{k}").unwrap();
            }
            out.push('\n');
            for (i, row) in &rows {
                write!(out, "{i}").unwrap();
                for value in row {
                    write!(out, ",{value}").unwrap();
                }
                out.push('\n');
            }
            out.pop();
            out
        }
        Format::Json => {
            let table = CoefficientTable {
                j,
                rows: rows
                    .iter()
                    .map(|(i, row)| CoefficientRow {
                        i: *i,
                        b: row.iter().map(Rational::to_string).collect(),
                    })
                    .collect(),
            };
            pretty(&table)
        }
        Format::Tex => {
            let mut out = format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(width));
            out.push('i');
            for k in 0..width {
                write!(out, " & {k}").unwrap();
            }
            out.push_str(" \\\\\n\\hline\n");
            for (i, row) in &rows {
                write!(out, "{i}").unwrap();
                for slot in 0..width {
                    match row.get(slot) {
                        Some(value) => write!(out, " & {}", rational_tex(value)).unwrap(),
                        None => out.push_str(" &"),
                    }
                }
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{array}");
            out
        }
    })
}

#[derive(Serialize)]
struct CCoeffTable {
    rows: Vec<CCoeffRow>,
}

#[derive(Serialize)]
struct CCoeffRow {
    m: u32,
    c: Vec<String>,
}

pub fn c_coeff_table(m_max: u32, p_max: u32, format: Format) -> String {
    let rows: Vec<(u32, Vec<String>)> = (1..=m_max)
        .map(|m| {
            let values = (1..=p_max).map(|p| c_coeff(m, p).to_string()).collect();
            (m, values)
        })
        .collect();
    match format {
        Format::Csv => {
            let mut out = String::from("m");
            for p in 1..=p_max {
                write!(out, ",p{p}").unwrap();
            }
            out.push('\n');
            for (m, values) in &rows {
                writeln!(out, "{m},{}", values.join(",")).unwrap();
            }
            out.pop();
            out
        }
        Format::Json => {
            let table = CCoeffTable {
                rows: rows
                    .iter()
                    .map(|(m, values)| CCoeffRow {
                        m: *m,
                        c: values.clone(),
                    })
                    .collect(),
            };
            pretty(&table)
        }
        Format::Tex => {
            let mut out = format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(p_max as usize));
            out.push('m');
            for p in 1..=p_max {
                write!(out, " & {p}").unwrap();
            }
            out.push_str(" \\\\\n\\hline\n");
            for (m, values) in &rows {
                writeln!(out, "{m} & {} \\\\", values.join(" & ")).unwrap();
            }
            out.push_str("\\end{array}");
            out
        }
    }
}

fn kind_label(kind: TermKind) -> &'static str {
    match kind {
        TermKind::Pure => "pure",
        TermKind::ScalarChern => "scalar-chern",
        TermKind::CycleChern => "cycle-chern",
    }
}

fn term_tex(term: &fano_chern::symbolic::BasisTerm) -> String {
    let mut parts: Vec<String> = Vec::new();
    if term.chern_index() >= 1 {
        let inner = if term.chern_index() == 1 {
            "c_1(X)".to_owned()
        } else {
            format!("\\mathrm{{ch}}_{{{}}}(X)", term.chern_index())
        };
        parts.push(match term.t_order() {
            0 => inner,
            1 => format!("T({inner})"),
            t => format!("T^{{{t}}}({inner})"),
        });
    }
    if term.l_power() >= 1 {
        let base = format!("c_1(L_{{{}}})", term.depth());
        parts.push(if term.l_power() == 1 {
            base
        } else {
            format!("{base}^{{{}}}", term.l_power())
        });
    }
    if parts.is_empty() {
        return "1".to_owned();
    }
    parts.join(" \\, ")
}

/// Renders an expanded class. Without an explicit format the plain display
/// line is used.
pub fn expansion(class: &FormalClass, format: Option<Format>) -> String {
    match format {
        None => class.to_string(),
        Some(Format::Csv) => {
            let mut out = String::from("k,kind,l_power,coefficient\n");
            for (term, coefficient) in class.terms() {
                writeln!(
                    out,
                    "{},{},{},{coefficient}",
                    term.chern_index(),
                    kind_label(term.kind()),
                    term.l_power()
                )
                .unwrap();
            }
            out.pop();
            out
        }
        Some(Format::Json) => pretty(class),
        Some(Format::Tex) => {
            if class.is_zero() {
                return "0".to_owned();
            }
            let mut out = String::new();
            for (position, (term, coefficient)) in class.terms().enumerate() {
                if position == 0 {
                    write!(out, "{}", rational_tex(coefficient)).unwrap();
                } else if coefficient.is_negative() {
                    write!(out, " - {}", rational_tex(&coefficient.abs())).unwrap();
                } else {
                    write!(out, " + {}", rational_tex(coefficient)).unwrap();
                }
                write!(out, " \\, {}", term_tex(term)).unwrap();
            }
            out
        }
    }
}

#[derive(Serialize)]
struct InvariantsView<'a> {
    model: &'a ModelFamily,
    min_chain_length: u32,
    max_chain_length: u32,
    polarized_family: Option<&'a PolarizedFamily>,
}

const FAMILY_NOT_STATED: &str = "not stated in source";

/// Renders the invariant summary of a model. Without an explicit format a
/// line-per-field text view is used.
pub fn invariants_view(
    model: &ModelFamily,
    pair: &InvariantPair,
    family: Option<&PolarizedFamily>,
    format: Option<Format>,
) -> String {
    let family_text = family
        .map(PolarizedFamily::to_string)
        .unwrap_or_else(|| FAMILY_NOT_STATED.to_owned());
    match format {
        None => format!(
            "model: {model}\nmin_chain_length: {}\nmax_chain_length: {}\npolarized_family: {family_text}",
            pair.min_chain_length, pair.max_chain_length
        ),
        Some(Format::Csv) => {
            let mut out = String::from("field,value\n");
            writeln!(out, "model,{}", csv_field(&model.to_string())).unwrap();
            writeln!(out, "min_chain_length,{}", pair.min_chain_length).unwrap();
            writeln!(out, "max_chain_length,{}", pair.max_chain_length).unwrap();
            write!(out, "polarized_family,{}", csv_field(&family_text)).unwrap();
            out
        }
        Some(Format::Json) => pretty(&InvariantsView {
            model,
            min_chain_length: pair.min_chain_length,
            max_chain_length: pair.max_chain_length,
            polarized_family: family,
        }),
        Some(Format::Tex) => {
            let mut out = String::from("\\begin{array}{ll}\n");
            writeln!(out, "\\text{{model}} & \\text{{{model}}} \\\\").unwrap();
            writeln!(
                out,
                "\\text{{min chain length}} & {} \\\\",
                pair.min_chain_length
            )
            .unwrap();
            writeln!(
                out,
                "\\text{{max chain length}} & {} \\\\",
                pair.max_chain_length
            )
            .unwrap();
            writeln!(out, "\\text{{minimal family}} & \\text{{{family_text}}} \\\\").unwrap();
            out.push_str("\\end{array}");
            out
        }
    }
}
