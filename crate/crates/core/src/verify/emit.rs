//! Report output: json-lines, tsv and a human-readable table.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use super::report::{format_float, ClaimResult, VerificationReport};
use crate::error::{Error, Result};
use crate::lie::SpaceKind;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    JsonLines,
    Tsv,
    HumanTable,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::JsonLines, Format::Tsv, Format::HumanTable];

    pub fn name(self) -> &'static str {
        match self {
            Format::JsonLines => "json-lines",
            Format::Tsv => "tsv",
            Format::HumanTable => "human-table",
        }
    }
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown format `{s}` (json-lines, tsv, human-table)")))
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn emit(report: &VerificationReport, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::JsonLines => json_lines(report, out)?,
        Format::Tsv => tsv(report, out)?,
        Format::HumanTable => human_table(report, out)?,
    }
    out.flush()?;
    Ok(())
}

pub fn emit_to_path(report: &VerificationReport, format: Format, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    emit(report, format, &mut out)
}

fn json_lines(report: &VerificationReport, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(&report.header)?)?;
    for c in &report.claims {
        writeln!(out, "{}", serde_json::to_string(c)?)?;
    }
    Ok(())
}

fn opt_float(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

fn tol_text(report: &VerificationReport) -> String {
    report
        .header
        .tol_override
        .map(format_float)
        .unwrap_or_else(|| "per-claim".into())
}

fn tsv(report: &VerificationReport, out: &mut dyn Write) -> Result<()> {
    let h = &report.header;
    writeln!(
        out,
        "# {} {} seed={} samples={} tol={} generator={} targets={}",
        h.tool,
        h.version,
        h.seed,
        h.samples,
        tol_text(report),
        h.generator,
        h.targets.join(",")
    )?;
    writeln!(
        out,
        "id\tspace\tparams\tsamples\tmax_residual\tmean_residual\texpected\tmeasured\ttol\tpass\tnote"
    )?;
    for c in &report.claims {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.id,
            c.space,
            c.params,
            c.samples,
            format_float(c.max_residual),
            format_float(c.mean_residual),
            opt_float(c.expected),
            opt_float(c.measured),
            format_float(c.tol),
            c.pass,
            c.note.as_deref().unwrap_or("")
        )?;
    }
    Ok(())
}

fn short(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{v:.10}"),
        None => "-".into(),
    }
}

/// One row of the reproduced table for a concrete size.
struct TableRow<'a> {
    space: &'a str,
    lambda: &'a ClaimResult,
    mu: &'a ClaimResult,
    pass: bool,
    sign: Option<&'a str>,
}

fn table_rows(report: &VerificationReport, kind: SpaceKind) -> Vec<TableRow<'_>> {
    let slug = format!("{}.", kind.slug());
    let mut rows = Vec::new();
    for lambda in report.claims.iter().filter(|c| c.id.starts_with(&slug) && c.id.ends_with(".lambda")) {
        let prefix = lambda.id.trim_end_matches("lambda");
        let Some(mu) = report.claim(&format!("{prefix}mu")) else { continue };
        let related = report.claims.iter().filter(|c| c.id.starts_with(prefix));
        let sign = report
            .claim(&format!("{prefix}lambda-sign"))
            .and_then(|c| c.note.as_deref())
            .and_then(|n| n.split(';').next())
            .map(|s| s.trim_start_matches("resolved sign: "));
        rows.push(TableRow {
            space: &lambda.space,
            lambda,
            mu,
            pass: related.clone().all(|c| c.pass),
            sign,
        });
    }
    rows
}

fn human_table(report: &VerificationReport, out: &mut dyn Write) -> Result<()> {
    let h = &report.header;
    writeln!(
        out,
        "{} {}  seed {}  samples {}  tolerance {}",
        h.tool,
        h.version,
        h.seed,
        h.samples,
        tol_text(report)
    )?;
    let any_space = SpaceKind::ALL.iter().any(|k| !table_rows(report, *k).is_empty());
    if any_space {
        writeln!(out)?;
        let c = ["row", "G/K", "lambda", "mu", "space", "measured", "status"];
        writeln!(
            out,
            "{:<4} {:<22} {:<16} {:<11} | {:<22} {:>16} {:>16}          {:>16} {:>16}  {}",
            c[0], c[1], c[2], c[3], c[4], c[2], c[5], c[3], c[5], c[6]
        )?;
        for kind in SpaceKind::ALL {
            let (lambda, mu) = kind.symbolic_eigenvalues();
            for (i, row) in table_rows(report, kind).iter().enumerate() {
                let (row_no, name, l, m) = if i == 0 {
                    (kind.table_row().to_string(), kind.symbolic_name(), lambda, mu)
                } else {
                    (String::new(), "", "", "")
                };
                let status = if row.pass { "pass" } else { "FAIL" };
                let sign = row.sign.map(|s| format!(" (sign of lambda: {s})")).unwrap_or_default();
                writeln!(
                    out,
                    "{:<4} {:<22} {:<16} {:<11} | {:<22} {:>16} {:>16} {:>8} {:>16} {:>16}  {status}{sign}",
                    row_no,
                    name,
                    l,
                    m,
                    row.space,
                    short(row.lambda.expected),
                    short(row.lambda.measured),
                    "",
                    short(row.mu.expected),
                    short(row.mu.measured),
                )?;
            }
        }
    }
    if !report.claims.is_empty() {
        let passed = report.claims.iter().filter(|c| c.pass).count();
        writeln!(out)?;
        writeln!(out, "{passed}/{} claims pass", report.claims.len())?;
        for c in &report.claims {
            writeln!(
                out,
                "  {} {:<72} max {:.3e}  tol {:.0e}",
                if c.pass { "pass" } else { "FAIL" },
                c.id,
                c.max_residual,
                c.tol
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run, RunConfig, Target};

    fn render(report: &VerificationReport, format: Format) -> String {
        let mut buf = Vec::new();
        emit(report, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_selection_is_header_only() {
        let report = run(&RunConfig::only(Vec::new())).unwrap();
        assert_eq!(render(&report, Format::JsonLines).lines().count(), 1);
        assert_eq!(render(&report, Format::Tsv).lines().count(), 2);
        assert_eq!(render(&report, Format::HumanTable).lines().count(), 1);
    }

    #[test]
    fn json_lines_round_trip() {
        let cfg = RunConfig {
            samples: 5,
            ..RunConfig::only(vec![Target::Space(SpaceKind::SuSp)])
        };
        let report = run(&cfg).unwrap();
        let text = render(&report, Format::JsonLines);
        let back = VerificationReport::from_json_lines(&text).unwrap();
        assert_eq!(back.header, report.header);
        assert_eq!(back.claims, report.claims);
        let table = render(&report, Format::HumanTable);
        assert!(table.contains("SU(2n)/Sp(n)") && table.contains("sign of lambda: negative"), "{table}");
    }

    #[test]
    fn formats_parse() {
        for f in Format::ALL {
            assert_eq!(f.name().parse::<Format>().unwrap(), f);
        }
        assert!("xml".parse::<Format>().is_err());
    }
}
