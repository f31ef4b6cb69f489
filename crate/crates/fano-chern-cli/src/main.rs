mod certificate;
mod cli;
mod render;

use certificate::Certificate;
use clap::Parser;
use cli::{Cli, Command, Format};
use fano_chern::coefficients::{b_coeff, verify_positivity, PositivityReport};
use fano_chern::invariants::{model_invariants, model_polarized_family, ModelFamily};
use fano_chern::symbolic::{expand_chain, ChainConfig};
use fano_chern::{Error, Rational};
use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Depth bound for the recorded-pattern samples printed after a scan.
const PATTERN_SAMPLE_DEPTH: u32 = 20;

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Io(_) => ExitCode::from(3),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Usage(error.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Failure::Io(error)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            match &failure {
                Failure::Usage(message) => eprintln!("error: {message}"),
                Failure::Io(error) => eprintln!("error: {error}"),
            }
            failure.exit_code()
        }
    }
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut text = content.to_owned();
            text.push('\n');
            std::fs::write(path, text)?;
        }
        None => {
            let mut stdout = io::stdout().lock();
            let done = stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.write_all(b"\n"));
            if let Err(err) = done {
                // A consumer hanging up mid-pipe is not a tool failure.
                if err.kind() == io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                return Err(Failure::Io(err));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let format = cli.format;
    let out = cli.out;
    match cli.command {
        Command::Bernoulli { max_m } => {
            let table = render::bernoulli_table(max_m, format.unwrap_or(Format::Csv));
            emit(out.as_deref(), &table)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            j,
            i_max,
            c_coeffs,
            m_max,
            p_max,
        } => {
            let table = if c_coeffs {
                render::c_coeff_table(m_max, p_max, format.unwrap_or(Format::Csv))
            } else {
                let j = j.expect("required unless --c-coeffs");
                let i_max = i_max.expect("required unless --c-coeffs");
                render::coefficient_table(j, i_max, format.unwrap_or(Format::Csv))?
            };
            emit(out.as_deref(), &table)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            i_max,
            i_lo,
            j,
            non_strict,
        } => run_verify(i_lo, i_max, &j, !non_strict, format, out),
        Command::Expand { a, j } => {
            let cfg = ChainConfig::from_step_degrees(a.unwrap_or_default())?;
            let class = expand_chain(&cfg, j)?;
            emit(out.as_deref(), &render::expansion(&class, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { model } => {
            let model: ModelFamily = model.parse()?;
            let pair = model_invariants(&model)?;
            let family = match model_polarized_family(&model) {
                Ok(family) => Some(family),
                Err(Error::NoPolarizedFamily { .. }) => None,
                Err(error) => return Err(error.into()),
            };
            let view = render::invariants_view(&model, &pair, family.as_ref(), format);
            emit(out.as_deref(), &view)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(
    i_lo: u32,
    i_max: u32,
    j_list: &[u32],
    strict: bool,
    format: Option<Format>,
    out: Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    let report = verify_positivity(i_lo, i_max, j_list, strict)?;
    let cert = Certificate::from_report(&report);
    if let Some(path) = &out {
        let mut text = cert.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
    }
    match format {
        Some(Format::Json) => println!("{}", cert.to_json()),
        Some(Format::Csv) => {
            let mut table = String::from("i,j,k,value");
            for violation in &cert.violations {
                write!(
                    table,
                    "\n{},{},{},{}",
                    violation.i, violation.j, violation.k, violation.value
                )
                .unwrap();
            }
            println!("{table}");
        }
        Some(Format::Tex) | None => println!("{}", verify_summary(&report)),
    }
    if report.holds() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn verify_summary(report: &PositivityReport) -> String {
    let relation = if report.strict { "> 0" } else { ">= 0" };
    let j_text: Vec<String> = report.j_list.iter().map(u32::to_string).collect();
    let mut out = format!(
        "scan: b(i, j, k) {relation} for {} <= i <= {}, j in {{{}}}, 1 <= k <= i + j\n",
        report.i_lo,
        report.i_hi,
        j_text.join(", ")
    );
    writeln!(
        out,
        "checked {} values in {:.2}s",
        report.checked,
        report.elapsed.as_secs_f64()
    )
    .unwrap();
    if report.holds() {
        out.push_str("no violations");
    } else {
        let count = report.violations.len();
        let noun = if count == 1 { "violation" } else { "violations" };
        write!(out, "{count} {noun}").unwrap();
        for violation in &report.violations {
            write!(
                out,
                "\nviolation: b({}, {}, {}) = {}",
                violation.index.i(),
                violation.index.j(),
                violation.index.k(),
                violation.value
            )
            .unwrap();
        }
    }
    for note in pattern_notes(report) {
        write!(out, "\n{note}").unwrap();
    }
    out
}

/// Samples two regularities visible in the tables and reports whether they
/// held on the sampled range. They are recorded observations, not
/// assumptions: the scan itself never relies on them.
fn pattern_notes(report: &PositivityReport) -> Vec<String> {
    let sample_hi = report.i_hi.min(PATTERN_SAMPLE_DEPTH);
    if report.i_lo > sample_hi {
        return Vec::new();
    }
    let mut top_holds = true;
    let mut next_holds = true;
    let mut counterexamples: Vec<String> = Vec::new();
    for &j in &report.j_list {
        for i in report.i_lo..=sample_hi {
            let top = b_coeff(i, j, i + j).expect("index in range");
            if top != Rational::one() {
                top_holds = false;
                counterexamples.push(format!("b({i}, {j}, {}) = {top}", i + j));
            }
            let next = b_coeff(i, j, i + j - 1).expect("index in range");
            if next != Rational::new(i64::from(i), 2) {
                next_holds = false;
                counterexamples.push(format!("b({i}, {j}, {}) = {next}", i + j - 1));
            }
        }
    }
    let mut notes = Vec::new();
    if top_holds {
        notes.push(format!(
            "note: b(i, j, i + j) = 1 at every sampled depth (i <= {sample_hi}); recorded, not assumed"
        ));
    }
    if next_holds {
        notes.push(format!(
            "note: b(i, j, i + j - 1) = i/2 at every sampled depth (i <= {sample_hi}); recorded, not assumed"
        ));
    }
    for counterexample in counterexamples {
        notes.push(format!("note: pattern fails at {counterexample}"));
    }
    notes
}
