use std::io::Write;
use std::path::Path;

use super::{ConvergenceRecord, HarnessError};
use crate::bounds::BoundFamily;

pub const CSV_HEADER: &str = "n,target,ritz,nearest,abs_error,family,bound,shift";

/// 17 significant digits; `inf`/`-inf` for infinities.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(records: &[ConvergenceRecord], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.ambient_dim,
            r.target_index,
            num(r.ritz_value),
            num(r.nearest_eigenvalue),
            num(r.abs_error),
            r.family,
            num(r.bound_value),
            r.shift.map(num).unwrap_or_default()
        )?;
    }
    w.flush()
}

pub fn emit_csv(records: &[ConvergenceRecord], path: &Path) -> Result<(), HarnessError> {
    let file = std::fs::File::create(path).map_err(|e| HarnessError::io(path, e))?;
    write_csv(records, std::io::BufWriter::new(file)).map_err(|e| HarnessError::io(path, e))
}

/// Reads back what [`write_csv`] produced.
pub fn parse_csv(text: &str) -> Result<Vec<ConvergenceRecord>, HarnessError> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(HarnessError::config("missing or wrong CSV header"));
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let bad = |what: &str| HarnessError::config(format!("CSV row {}: bad {what}", i + 1));
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 8 {
                return Err(bad("field count"));
            }
            let real = |s: &str, what: &str| s.parse::<f64>().map_err(|_| bad(what));
            Ok(ConvergenceRecord {
                ambient_dim: f[0].parse().map_err(|_| bad("n"))?,
                target_index: f[1].parse().map_err(|_| bad("target"))?,
                ritz_value: real(f[2], "ritz")?,
                nearest_eigenvalue: real(f[3], "nearest")?,
                abs_error: real(f[4], "abs_error")?,
                family: f[5].parse::<BoundFamily>().map_err(|_| bad("family"))?,
                bound_value: real(f[6], "bound")?,
                shift: if f[7].is_empty() {
                    None
                } else {
                    Some(real(f[7], "shift")?)
                },
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> ConvergenceRecord {
        ConvergenceRecord {
            ambient_dim: 3,
            target_index: 1,
            ritz_value: 0.1 + 0.2,
            nearest_eigenvalue: 1.0 / 3.0,
            abs_error: 1e-310,
            family: BoundFamily::InteriorExact,
            bound_value: f64::INFINITY,
            shift: Some(-0.45),
        }
    }

    #[test]
    fn one_row() {
        let mut out = Vec::new();
        write_csv(&[record()], &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.ends_with('\n'));
        let row = text.lines().nth(1).unwrap();
        assert!(row.starts_with("3,1,3.0000000000000004e-1,"), "{row}");
        assert!(
            row.contains(",interior-exact,inf,-4.5000000000000001e-1"),
            "{row}"
        );
    }

    #[test]
    fn header_only() {
        let mut out = Vec::new();
        write_csv(&[], &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let mut r2 = record();
        r2.shift = None;
        r2.family = BoundFamily::ExtremalAsymptotic;
        r2.bound_value = 5e-324;
        let records = vec![record(), r2];
        let mut out = Vec::new();
        write_csv(&records, &mut out).unwrap();
        let back = parse_csv(std::str::from_utf8(&out).unwrap()).unwrap();
        assert_eq!(back, records);
    }
}
