use std::io::{self, Write};

use appell_core::physics::MatrixBlock;
use appell_core::verify::VerifyReport;
use appell_core::Evaluation;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// A quadrature (or other oracle) value next to the evaluated one.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Check {
    pub oracle_value: f64,
    pub rel_residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    pub fn new(value: f64, oracle_value: f64, threshold: f64) -> Self {
        let rel_residual = (value - oracle_value).abs() / value.abs().max(oracle_value.abs()).max(1e-300);
        Check { oracle_value, rel_residual, threshold, passed: rel_residual <= threshold }
    }
}

/// Full-precision decimal: 17 significant digits.
pub fn full(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_writer() -> csv::Writer<io::StdoutLock<'static>> {
    csv::Writer::from_writer(io::stdout().lock())
}

fn emit_json(v: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)
}

pub fn evaluation(
    format: Format,
    command: &str,
    inputs: &impl Serialize,
    result: &Evaluation,
    check: Option<&Check>,
) -> io::Result<()> {
    match format {
        Format::Json => {
            let mut v = json!({
                "command": command,
                "inputs": inputs,
                "result": {
                    "value": result.value,
                    "abs_error": result.abs_error,
                    "method": result.method,
                    "terms": result.terms,
                },
            });
            if let Some(c) = check {
                v["check"] = json!(c);
            }
            emit_json(&v)
        }
        Format::Csv => {
            let mut w = csv_writer();
            let mut head = vec!["command", "value", "abs_error", "method", "terms"];
            let mut row = vec![
                command.to_string(),
                full(result.value),
                full(result.abs_error),
                result.method.to_string(),
                result.terms.to_string(),
            ];
            if let Some(c) = check {
                head.extend(["oracle_value", "rel_residual", "passed"]);
                row.extend([full(c.oracle_value), full(c.rel_residual), c.passed.to_string()]);
            }
            w.write_record(&head)?;
            w.write_record(&row)?;
            w.flush()
        }
        Format::Plain => {
            let mut out = io::stdout().lock();
            writeln!(out, "{command} = {}", full(result.value))?;
            writeln!(out, "  abs_error {:e}  method {}  terms {}", result.abs_error, result.method, result.terms)?;
            if let Some(c) = check {
                writeln!(
                    out,
                    "  oracle {}  rel_residual {:e}  {}",
                    full(c.oracle_value),
                    c.rel_residual,
                    if c.passed { "pass" } else { "FAIL" }
                )?;
            }
            Ok(())
        }
    }
}

pub fn verify(format: Format, report: &VerifyReport) -> io::Result<()> {
    match format {
        Format::Json => emit_json(&json!({
            "command": "verify",
            "inputs": { "suite": report.suite, "seed": report.seed, "tol": report.tol },
            "result": {
                "passed": report.passed(),
                "total": report.total,
                "failed": report.failed,
            },
            "cases": report.cases,
        })),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "suite", "case", "identity_id", "params", "lhs", "rhs", "residual", "residual_kind",
                "threshold", "passed", "error",
            ])?;
            let opt = |v: Option<f64>| v.map(full).unwrap_or_default();
            for c in &report.cases {
                w.write_record([
                    c.suite.to_string(),
                    c.case.to_string(),
                    c.identity_id.clone(),
                    c.params.clone(),
                    opt(c.lhs),
                    opt(c.rhs),
                    opt(c.residual),
                    format!("{:?}", c.residual_kind).to_lowercase(),
                    full(c.threshold),
                    c.passed.to_string(),
                    c.error.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()
        }
        Format::Plain => {
            let mut out = io::stdout().lock();
            for c in report.failures() {
                writeln!(
                    out,
                    "FAIL {} #{} {} [{}] residual {:?} threshold {:e}{}",
                    c.suite,
                    c.case,
                    c.identity_id,
                    c.params,
                    c.residual,
                    c.threshold,
                    c.error.as_ref().map(|e| format!(" error: {e}")).unwrap_or_default()
                )?;
            }
            writeln!(
                out,
                "{}: {} of {} cases passed (seed {})",
                report.suite,
                report.total - report.failed,
                report.total,
                report.seed
            )
        }
    }
}

pub fn matrix(
    format: Format,
    inputs: &impl Serialize,
    block: &MatrixBlock,
    energies: Option<&[f64]>,
    eigenvalues: Option<&[f64]>,
) -> io::Result<()> {
    match format {
        Format::Json => {
            let mut v = json!({
                "command": "matrix",
                "inputs": inputs,
                "result": {
                    "size": block.size,
                    "alpha": block.alpha,
                    "basis": block.basis,
                    "entries": block.entries,
                },
            });
            if let Some(e) = energies {
                v["result"]["h0"] = json!(e);
            }
            if let Some(e) = eigenvalues {
                v["result"]["eigenvalues"] = json!(e);
            }
            emit_json(&v)
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "m", "value"])?;
            for (n, row) in block.entries.iter().enumerate() {
                for (m, v) in row.iter().enumerate() {
                    w.write_record([n.to_string(), m.to_string(), full(*v)])?;
                }
            }
            w.flush()?;
            drop(w);
            // Spectra follow as separate tables so the block stays `n,m,value`.
            for (name, values) in [("h0", energies), ("eigenvalue", eigenvalues)] {
                if let Some(values) = values {
                    let mut w = csv_writer();
                    w.write_record(["k", name])?;
                    for (k, v) in values.iter().enumerate() {
                        w.write_record([k.to_string(), full(*v)])?;
                    }
                    w.flush()?;
                }
            }
            Ok(())
        }
        Format::Plain => {
            let mut out = io::stdout().lock();
            for row in &block.entries {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>24.16e}")).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            if let Some(e) = energies {
                writeln!(out, "h0: {}", e.iter().map(|v| full(*v)).collect::<Vec<_>>().join(" "))?;
            }
            if let Some(e) = eigenvalues {
                writeln!(out, "eigenvalues: {}", e.iter().map(|v| full(*v)).collect::<Vec<_>>().join(" "))?;
            }
            Ok(())
        }
    }
}

pub fn appendix_list(format: Format) -> io::Result<()> {
    let entries = appell_core::laplace::APPENDIX.iter();
    match format {
        Format::Json => emit_json(&json!({
            "command": "appendix",
            "result": entries
                .map(|e| json!({ "id": e.id, "params": e.params, "condition": e.condition }))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["id", "params", "condition"])?;
            for e in entries {
                w.write_record([e.id, &e.params.join(" "), e.condition])?;
            }
            w.flush()
        }
        Format::Plain => {
            let mut out = io::stdout().lock();
            for e in entries {
                writeln!(out, "{:<5} ({})  {}", e.id, e.params.join(", "), e.condition)?;
            }
            Ok(())
        }
    }
}

pub fn error(format: Format, command: &str, inputs: &impl Serialize, message: &str) -> io::Result<()> {
    if format == Format::Json {
        emit_json(&json!({ "command": command, "inputs": inputs, "error": message }))?;
    }
    eprintln!("error: {message}");
    Ok(())
}
