use std::io::Write;

use g2_tokuyama::a2::{pattern_records_a2, verify_tokuyama_a2};
use g2_tokuyama::algebra::TermRecord;
use g2_tokuyama::characters::{shifted_character, tokuyama_numerator};
use g2_tokuyama::g2::pattern_records;
use g2_tokuyama::report::PatternRecord;
use g2_tokuyama::{RootDatum, Weight};

use crate::output::{coeff_list, json_line, monomial_text, open, poly_text};
use crate::{DumpArgs, DumpTarget, Failure, Format, EXIT_MISMATCH, EXIT_OK};

const G2_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
const A2_NAMES: [&str; 3] = ["a", "b", "c"];

pub fn run(args: &DumpArgs) -> Result<u8, Failure> {
    let weight = Weight::new(args.l1, args.l2);
    let mut out = open(args.output.as_deref())?;
    let mut code = EXIT_OK;
    match args.target {
        DumpTarget::Patterns => {
            let records = pattern_records(weight)?;
            eprintln!("B({weight}): {} patterns", records.len());
            write_patterns(&mut *out, &records, &G2_NAMES, args.format)?;
        }
        DumpTarget::A2 => {
            let records = pattern_records_a2(weight)?;
            eprintln!("A2 B({weight}): {} patterns", records.len());
            write_patterns(&mut *out, &records, &A2_NAMES, args.format)?;
            if args.l1 >= 1 && args.l2 >= 1 {
                let theta = Weight::new(args.l1 - 1, args.l2 - 1);
                let report = verify_tokuyama_a2(theta)?;
                eprintln!(
                    "A2 sum over B({weight}) vs numerator for θ = {theta}: {}",
                    if report.equal { "equal" } else { "MISMATCH" }
                );
                if !report.equal {
                    code = EXIT_MISMATCH;
                }
            }
        }
        DumpTarget::Character => {
            let chi = shifted_character(&RootDatum::g2(), weight)?;
            write_terms(&mut *out, &chi.poly.to_records(), args.format)?;
        }
        DumpTarget::Numerator => {
            let n = tokuyama_numerator(&RootDatum::g2(), weight)?;
            write_terms(&mut *out, &n.to_records(), args.format)?;
        }
    }
    out.flush()?;
    Ok(code)
}

fn marked(names: &[&str], flags: &[bool]) -> String {
    names
        .iter()
        .zip(flags)
        .filter(|(_, &f)| f)
        .map(|(n, _)| *n)
        .collect()
}

/// `[3,2_,3,1_,0°][0°]`: boxed entries carry `_`, circled ones `°`.
fn decorated(r: &PatternRecord) -> String {
    let cells: Vec<String> = r
        .entries
        .iter()
        .zip(r.boxed.iter().zip(&r.circled))
        .map(|(v, (&b, &c))| {
            format!(
                "{v}{}{}",
                if b { "_" } else { "" },
                if c { "°" } else { "" }
            )
        })
        .collect();
    let (top, bottom) = cells.split_at(cells.len() - 1);
    format!("[{}][{}]", top.join(","), bottom[0])
}

fn write_patterns(
    out: &mut dyn Write,
    records: &[PatternRecord],
    names: &[&str],
    format: Format,
) -> Result<(), Failure> {
    match format {
        Format::Json => {
            for r in records {
                json_line(out, r)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<&str> = names.to_vec();
            header.extend(["circled", "boxed", "m", "n", "contribution"]);
            w.write_record(&header)?;
            for r in records {
                let mut row: Vec<String> = r.entries.iter().map(i64::to_string).collect();
                row.push(marked(names, &r.circled));
                row.push(marked(names, &r.boxed));
                row.push(r.monomial.m.to_string());
                row.push(r.monomial.n.to_string());
                row.push(coeff_list(&r.contribution));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let texts: Vec<String> = records.iter().map(decorated).collect();
            let width = texts.iter().map(|t| t.chars().count()).max().unwrap_or(0);
            for (r, t) in records.iter().zip(&texts) {
                let pad = width - t.chars().count();
                writeln!(
                    out,
                    "{t}{}  {:<10} {}",
                    " ".repeat(pad),
                    monomial_text(r.monomial.m, r.monomial.n),
                    poly_text(&r.contribution)
                )?;
            }
        }
    }
    Ok(())
}

fn write_terms(out: &mut dyn Write, terms: &[TermRecord], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            for t in terms {
                json_line(out, t)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["m", "n", "coeffs"])?;
            for t in terms {
                w.write_record([t.m.to_string(), t.n.to_string(), coeff_list(&t.coeffs)])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for t in terms {
                writeln!(
                    out,
                    "{:<10} {}",
                    monomial_text(t.m, t.n),
                    poly_text(&t.coeffs)
                )?;
            }
        }
    }
    Ok(())
}
