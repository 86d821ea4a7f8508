use std::io::Write;
use std::time::Instant;

use g2_tokuyama::g2::verify_conjecture;
use g2_tokuyama::report::SCHEMA_VERSION;
use g2_tokuyama::Weight;
use serde::Serialize;

use crate::output::{json_line, open};
use crate::{Failure, VerifyArgs, EXIT_MISMATCH, EXIT_OK};

/// Last line of a `verify` run.
#[derive(Debug, Serialize)]
struct Summary {
    schema_version: u32,
    task: &'static str,
    weights: u64,
    patterns: u64,
    equal: bool,
    failed: Vec<[u32; 2]>,
}

pub fn run(args: &VerifyArgs) -> Result<u8, Failure> {
    let mut out = open(args.output.as_deref())?;
    let mut summary = Summary {
        schema_version: SCHEMA_VERSION,
        task: "conjecture-summary",
        weights: 0,
        patterns: 0,
        equal: true,
        failed: Vec::new(),
    };
    for l1 in args.l1.iter() {
        for l2 in args.l2.iter() {
            let theta = Weight::new(l1, l2);
            let start = Instant::now();
            let mut report = verify_conjecture(theta)?;
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            if args.timings {
                report.elapsed_ms = Some(elapsed);
            }
            eprintln!(
                "θ = {theta}: {} patterns, {} ({elapsed:.0} ms)",
                report.counts.patterns,
                if report.equal { "equal" } else { "MISMATCH" },
            );
            summary.weights += 1;
            summary.patterns += report.counts.patterns;
            if !report.equal {
                summary.equal = false;
                summary.failed.push([l1, l2]);
            }
            json_line(&mut *out, &report)?;
        }
    }
    json_line(&mut *out, &summary)?;
    out.flush()?;
    eprintln!(
        "{} weights, {} patterns, {} mismatched",
        summary.weights,
        summary.patterns,
        summary.failed.len()
    );
    Ok(if summary.equal {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
