use std::collections::BTreeMap;
use std::io::Write;

use g2_tokuyama::g2::{
    decorate_infinite, enumerate_infinite, hat_contribution, standard_contribution, G2Pattern,
};
use g2_tokuyama::gk::{
    audit_subcones, gk_lhs_series, gk_pattern_series, partition_sum_series, AuditCell, Subcone,
    SubconeAudit,
};
use g2_tokuyama::report::{diff_polys, Parameters, SCHEMA_VERSION};
use g2_tokuyama::{Census, VerificationReport};
use serde::Serialize;

use crate::output::{json_line, open};
use crate::{Failure, Format, GkArgs, GkMode, EXIT_MISMATCH, EXIT_OK};

pub fn run(args: &GkArgs) -> Result<u8, Failure> {
    match args.mode {
        GkMode::Triple => triple(args),
        GkMode::Audit => audit(args),
    }
}

fn infinite_census(max_degree: i64) -> Result<Census, Failure> {
    let mut census = Census::default();
    for pi in enumerate_infinite(max_degree) {
        let dec = decorate_infinite(&pi)?;
        census.patterns += 1;
        if dec.has_boxed_and_circled() {
            census.zero += 1;
            continue;
        }
        if pi.is_bad_middle() {
            census.bad_middle += 1;
        }
        if hat_contribution(&pi, &dec)? != standard_contribution(&dec) {
            census.altered += 1;
        }
    }
    Ok(census)
}

fn triple(args: &GkArgs) -> Result<u8, Failure> {
    let n = args.max_degree.unwrap_or(12);
    eprintln!("series through total degree {n}");
    let lhs = gk_lhs_series(n);
    let partitions = partition_sum_series(n);
    let patterns = gk_pattern_series(n)?;
    let mut mismatches = diff_polys(&lhs, &partitions);
    mismatches.extend(diff_polys(&lhs, &patterns));
    let report = VerificationReport::new(
        "gk-triple",
        Parameters::Degree { max_degree: n },
        infinite_census(n)?,
        mismatches,
    );
    let mut out = open(args.output.as_deref())?;
    match args.format.unwrap_or(Format::Json) {
        Format::Json => json_line(&mut *out, &report)?,
        Format::Text => {
            writeln!(out, "degree bound      {n}")?;
            writeln!(out, "monomials         {}", lhs.len())?;
            writeln!(out, "patterns          {}", report.counts.patterns)?;
            writeln!(out, "product = partitions  {}", lhs == partitions)?;
            writeln!(out, "product = patterns    {}", lhs == patterns)?;
        }
        Format::Csv => return Err(Failure::Usage("csv is not available for gk".into())),
    }
    out.flush()?;
    Ok(if report.equal { EXIT_OK } else { EXIT_MISMATCH })
}

/// Columns in reading order: fewer generators first, then lexicographic.
fn ordered_columns(audit: &SubconeAudit) -> Vec<(Subcone, &AuditCell)> {
    let mut cols: Vec<(Subcone, &AuditCell)> = audit.columns.iter().map(|(k, v)| (*k, v)).collect();
    cols.sort_by_key(|(k, _)| {
        let g = k.generators();
        (g.len(), g)
    });
    cols
}

#[derive(Serialize)]
struct AuditRows {
    vp: BTreeMap<String, bool>,
    corr: BTreeMap<String, bool>,
}

#[derive(Serialize)]
struct AuditColumn {
    subcone: String,
    patterns: u64,
    vp: bool,
    vp_witnesses: u64,
    corr: bool,
    corr_witnesses: u64,
    hat_vs_partition_witnesses: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    vp_example: Option<G2Pattern>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corr_example: Option<G2Pattern>,
}

#[derive(Serialize)]
struct AuditReport {
    schema_version: u32,
    task: &'static str,
    parameters: Parameters,
    matches_reference: bool,
    outside_discrepancies: u64,
    rows: AuditRows,
    columns: Vec<AuditColumn>,
}

fn audit(args: &GkArgs) -> Result<u8, Failure> {
    let n = args.max_degree.unwrap_or(16);
    eprintln!("auditing patterns through total degree {n}");
    let audit = audit_subcones(n)?;
    let ok = audit.matches_reference();
    let cols = ordered_columns(&audit);
    let mut out = open(args.output.as_deref())?;
    match args.format.unwrap_or(Format::Text) {
        Format::Json => {
            let report = AuditReport {
                schema_version: SCHEMA_VERSION,
                task: "gk-audit",
                parameters: Parameters::Degree { max_degree: n },
                matches_reference: ok,
                outside_discrepancies: audit.outside_discrepancies,
                rows: AuditRows {
                    vp: cols.iter().map(|(k, c)| (k.to_string(), c.vp)).collect(),
                    corr: cols.iter().map(|(k, c)| (k.to_string(), c.corr)).collect(),
                },
                columns: cols
                    .iter()
                    .map(|(k, c)| AuditColumn {
                        subcone: k.to_string(),
                        patterns: c.patterns,
                        vp: c.vp,
                        vp_witnesses: c.vp_witnesses,
                        corr: c.corr,
                        corr_witnesses: c.corr_witnesses,
                        hat_vs_partition_witnesses: c.hat_vs_partition_witnesses,
                        vp_example: c.vp_example,
                        corr_example: c.corr_example,
                    })
                    .collect(),
            };
            json_line(&mut *out, &report)?;
        }
        Format::Text => write_table(&mut *out, &audit, &cols)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "subcone",
                "patterns",
                "vp",
                "vp_witnesses",
                "corr",
                "corr_witnesses",
            ])?;
            for (k, c) in &cols {
                w.write_record([
                    k.to_string(),
                    c.patterns.to_string(),
                    c.vp.to_string(),
                    c.vp_witnesses.to_string(),
                    c.corr.to_string(),
                    c.corr_witnesses.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn write_table(
    out: &mut dyn Write,
    audit: &SubconeAudit,
    cols: &[(Subcone, &AuditCell)],
) -> Result<(), Failure> {
    let width = cols
        .iter()
        .map(|(k, c)| {
            k.to_string()
                .chars()
                .count()
                .max(c.patterns.to_string().len())
        })
        .max()
        .unwrap_or(1)
        + 2;
    let row = |label: &str, cells: Vec<String>| {
        let mut line = format!("{label:<10}");
        for c in cells {
            line.push_str(&format!("{c:>width$}"));
        }
        line
    };
    let mark = |b: bool| if b { "x".to_string() } else { ".".to_string() };
    writeln!(
        out,
        "subcones of C' through degree {} (v1 omitted from labels)",
        audit.max_degree
    )?;
    writeln!(
        out,
        "{}",
        row("", cols.iter().map(|(k, _)| k.to_string()).collect())
    )?;
    writeln!(
        out,
        "{}",
        row("vp", cols.iter().map(|(_, c)| mark(c.vp)).collect())
    )?;
    writeln!(
        out,
        "{}",
        row("corr", cols.iter().map(|(_, c)| mark(c.corr)).collect())
    )?;
    writeln!(
        out,
        "{}",
        row(
            "patterns",
            cols.iter().map(|(_, c)| c.patterns.to_string()).collect()
        )
    )?;
    writeln!(
        out,
        "{}",
        row(
            "vp #",
            cols.iter()
                .map(|(_, c)| c.vp_witnesses.to_string())
                .collect()
        )
    )?;
    writeln!(
        out,
        "{}",
        row(
            "corr #",
            cols.iter()
                .map(|(_, c)| c.corr_witnesses.to_string())
                .collect()
        )
    )?;
    writeln!(out)?;
    for (k, c) in cols {
        if let Some(p) = c.vp_example {
            writeln!(out, "vp witness   {k:<5} {p}")?;
        }
        if let Some(p) = c.corr_example {
            writeln!(out, "corr witness {k:<5} {p}")?;
        }
    }
    writeln!(out)?;
    writeln!(
        out,
        "outside C': {} discrepancies",
        audit.outside_discrepancies
    )?;
    writeln!(
        out,
        "marks match reference: {}",
        if audit.matches_reference() {
            "yes"
        } else {
            "no"
        }
    )?;
    Ok(())
}
