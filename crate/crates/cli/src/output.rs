use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use g2_tokuyama::CoeffPoly;
use serde::Serialize;

pub fn open(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), crate::Failure> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// `c0 c1 c2`, used for coefficient lists in CSV cells.
pub fn coeff_list(coeffs: &[i64]) -> String {
    coeffs
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn poly_text(coeffs: &[i64]) -> String {
    CoeffPoly::from_coeffs(coeffs.to_vec()).to_string()
}

pub fn monomial_text(m: i64, n: i64) -> String {
    let var = |name: &str, k: i64| match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    };
    let parts: Vec<String> = [var("x", m), var("y", n)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}
