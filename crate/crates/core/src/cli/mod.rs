//! Command-line front end: argument parsing, orchestration and output.

pub mod job;
pub mod spec;
mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{paving_report, EnumerationOptions, PavingReport, ENUMERATION_GUARD};
use crate::combinatorics::{JordanData, MultiTableau};
use crate::matrixforms::{pivots, rational_form};
use crate::{Error, Result};

pub use job::{Command, Format, Job, JobSpec, OrderArg};
pub use spec::{parse_h_spec, parse_jordan_spec};
pub use verify::{verify, Verification};

/// What a run prints and the status it exits with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs a job, folding errors into the exit code and a message on stderr.
pub fn execute(spec: &JobSpec) -> RunOutput {
    match run(spec) {
        Ok(out) => out,
        Err(e) => RunOutput {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

pub fn run(spec: &JobSpec) -> Result<RunOutput> {
    let job = spec.resolve()?;
    let mt = MultiTableau::new(&job.jordan, &job.order)?;
    let mut out = RunOutput::default();

    if spec.command == Command::Table {
        out.stdout = render_form(&job, &mt, spec.format)?;
        return Ok(out);
    }

    let n = mt.n();
    if n > ENUMERATION_GUARD && spec.force {
        out.stderr.push_str(&format!(
            "warning: enumerating n = {n} > {ENUMERATION_GUARD} because of --force\n"
        ));
    }
    let opts = EnumerationOptions {
        force: spec.force,
        jobs: spec.jobs,
    };
    let report = paving_report(&job.jordan, &job.order, &job.h, opts)?;

    let verification = if spec.command == Command::Verify {
        let v = verify(&job, &mt, &report)?;
        for w in &v.warnings {
            out.stderr.push_str(&format!("warning: {w}\n"));
        }
        if let Some(msg) = &v.first_disagreement {
            out.stderr
                .push_str(&format!("error: {}\n", Error::Disagreement(msg.clone())));
            out.code = Error::Disagreement(String::new()).exit_code();
        }
        Some(v)
    } else {
        None
    };

    out.stdout = match spec.format {
        Format::Json => render_json(&job, &report, verification.as_ref())?,
        Format::Csv => render_csv(spec.command, &report, verification.as_ref())?,
        Format::Table => render_table(spec.command, &job, &mt, &report, verification.as_ref()),
    };
    Ok(out)
}

#[derive(Serialize)]
struct JordanJson<'a> {
    label: &'a str,
    shape: &'a [usize],
}

#[derive(Serialize)]
struct CellJson<'a> {
    filling: &'a crate::combinatorics::Permutation,
    w: &'a crate::combinatorics::Permutation,
    dim: usize,
    schubert_dim: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    n: usize,
    h: Vec<usize>,
    jordan: Vec<JordanJson<'a>>,
    cells: Vec<CellJson<'a>>,
    betti: &'a [u64],
    betti_degrees: Vec<u64>,
    poincare: &'a [u64],
    euler: u64,
    variety_dim: usize,
    top_cell_count: u64,
    min_nonzero_dim: Option<usize>,
    symmetric: bool,
    unimodal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<&'a Verification>,
}

fn jordan_json(jordan: &JordanData) -> Vec<JordanJson<'_>> {
    jordan
        .blocks()
        .iter()
        .map(|b| JordanJson {
            label: b.label(),
            shape: b.shape(),
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::Internal(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn render_json(job: &Job, report: &PavingReport, v: Option<&Verification>) -> Result<String> {
    to_json(&ReportJson {
        n: report.n,
        h: job.h.one_based(),
        jordan: jordan_json(&job.jordan),
        cells: report
            .cells
            .iter()
            .map(|c| CellJson {
                filling: &c.permutation,
                w: &c.permutation,
                dim: c.dimension,
                schubert_dim: c.schubert_dimension,
            })
            .collect(),
        betti: &report.betti,
        betti_degrees: report.betti_by_degree(),
        poincare: report.poincare(),
        euler: report.euler,
        variety_dim: report.variety_dimension,
        top_cell_count: report.top_cell_count,
        min_nonzero_dim: report.min_nonzero_dimension,
        symmetric: report.symmetric,
        unimodal: report.unimodal,
        verification: v,
    })
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row)
            .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv: {e}")))
}

fn row<const N: usize>(cells: [String; N]) -> Vec<String> {
    cells.into()
}

fn render_csv(command: Command, report: &PavingReport, v: Option<&Verification>) -> Result<String> {
    let mut rows = Vec::new();
    match command {
        Command::Cells => {
            rows.push(row(["w".into(), "dim".into(), "schubert_dim".into()]));
            for c in &report.cells {
                rows.push(row([
                    c.permutation.to_string(),
                    c.dimension.to_string(),
                    c.schubert_dimension.to_string(),
                ]));
            }
        }
        Command::Betti => {
            rows.push(row(["dim".into(), "degree".into(), "betti".into()]));
            for (d, b) in report.betti.iter().enumerate() {
                rows.push(row([d.to_string(), (2 * d).to_string(), b.to_string()]));
            }
        }
        Command::Euler => {
            rows.push(row(["euler".into()]));
            rows.push(row([report.euler.to_string()]));
        }
        Command::Verify => {
            let v = v.expect("verify produces a verification");
            rows.push(row(["check".into(), "passed".into()]));
            for (name, ok) in verification_lines(v) {
                rows.push(row([name, ok.to_string()]));
            }
        }
        Command::Table => unreachable!("table is rendered from the operator"),
    }
    csv_string(rows)
}

fn verification_lines(v: &Verification) -> Vec<(String, bool)> {
    let mut lines = vec![
        ("nonempty".to_string(), v.nonempty),
        ("bundle".to_string(), v.bundle),
        ("root".to_string(), v.root),
        ("rank_oracle".to_string(), v.rank_oracle),
    ];
    let by_q: BTreeMap<u64, bool> = v
        .point_count
        .iter()
        .map(|(q, &ok)| (q.parse().expect("numeric key"), ok))
        .collect();
    for (q, ok) in by_q {
        lines.push((format!("point_count_q{q}"), ok));
    }
    for c in &v.closed_forms {
        lines.push((c.name.to_string(), c.passed));
    }
    lines
}

fn jordan_summary(jordan: &JordanData) -> String {
    jordan
        .blocks()
        .iter()
        .map(|b| {
            let parts: Vec<String> = b.shape().iter().map(usize::to_string).collect();
            format!("{}:({})", b.label(), parts.join(","))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// `1 + 2q + q^2`.
pub fn format_poincare(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let coeff = if c == 1 && d > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match d {
                0 => coeff,
                1 => format!("{coeff}q"),
                _ => format!("{coeff}q^{d}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn render_table(
    command: Command,
    job: &Job,
    mt: &MultiTableau,
    report: &PavingReport,
    v: Option<&Verification>,
) -> String {
    let mut s = String::new();
    match command {
        Command::Cells => {
            for (idx, c) in report.cells.iter().enumerate() {
                if idx > 0 {
                    s.push('\n');
                }
                let _ = writeln!(
                    s,
                    "w = {}  dim = {}  schubert_dim = {}",
                    c.permutation, c.dimension, c.schubert_dimension
                );
                s.push_str(&mt.render(c.permutation.images()));
            }
        }
        Command::Euler => {
            let _ = writeln!(s, "euler: {}", report.euler);
        }
        Command::Betti | Command::Verify => {
            let _ = writeln!(s, "n: {}", report.n);
            let _ = writeln!(s, "h: {}", job.h);
            let _ = writeln!(s, "jordan: {}", jordan_summary(&job.jordan));
            let _ = writeln!(s, "cells: {}", report.cells.len());
            let _ = writeln!(s, "dim  degree  betti");
            for (d, b) in report.betti.iter().enumerate() {
                let _ = writeln!(s, "{d:<4} {:<7} {b}", 2 * d);
            }
            let _ = writeln!(s, "poincare: {}", format_poincare(report.poincare()));
            let _ = writeln!(s, "euler: {}", report.euler);
            let _ = writeln!(s, "variety_dim: {}", report.variety_dimension);
            let _ = writeln!(s, "top_cell_count: {}", report.top_cell_count);
            match report.min_nonzero_dimension {
                Some(d) => {
                    let _ = writeln!(s, "min_nonzero_dim: {d}");
                }
                None => {
                    let _ = writeln!(s, "min_nonzero_dim: none");
                }
            }
            let _ = writeln!(s, "symmetric: {}", report.symmetric);
            let _ = writeln!(s, "unimodal: {}", report.unimodal);
            if let Some(v) = v {
                s.push('\n');
                for (name, ok) in verification_lines(v) {
                    let _ = writeln!(s, "{name}: {}", if ok { "ok" } else { "FAIL" });
                }
                let _ = writeln!(s, "verified: {}", if v.passed() { "yes" } else { "no" });
            }
        }
        Command::Table => unreachable!("table is rendered from the operator"),
    }
    s
}

#[derive(Serialize)]
struct FormJson<'a> {
    n: usize,
    h: Vec<usize>,
    jordan: Vec<JordanJson<'a>>,
    base_filling: Vec<usize>,
    operator: Vec<Vec<String>>,
    pivots: Vec<[usize; 2]>,
}

/// Base filling, permuted Jordan form `S + N` and its pivots.
fn render_form(job: &Job, mt: &MultiTableau, format: Format) -> Result<String> {
    let form = rational_form(mt);
    let x = form.operator(&crate::matrixforms::Rationals);
    let pivots: Vec<[usize; 2]> = pivots(&crate::matrixforms::Rationals, &form.n, &form.s)?
        .positions()
        .into_iter()
        .map(|(r, c)| [r + 1, c + 1])
        .collect();
    let base = mt.base_filling();
    match format {
        Format::Table => {
            let mut s = String::from("base filling:\n");
            s.push_str(&base.render());
            s.push_str("\nS + N:\n");
            s.push_str(&x.render());
            let listed: Vec<String> = pivots.iter().map(|[r, c]| format!("({r},{c})")).collect();
            let _ = writeln!(s, "\npivots: {}", listed.join(" "));
            Ok(s)
        }
        Format::Json => to_json(&FormJson {
            n: mt.n(),
            h: job.h.one_based(),
            jordan: jordan_json(&job.jordan),
            base_filling: base.permutation().one_based(),
            operator: x
                .rows()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
            pivots,
        }),
        Format::Csv => csv_string(
            x.rows()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
        ),
    }
}
