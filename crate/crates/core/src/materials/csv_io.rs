//! CSV emission for curves. UTF-8, LF line endings, `.` decimal separator,
//! numbers in scientific notation with 15 significant digits.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::lifshitz::{CurveRecord, ForceCurve, ValueKind};

pub const CURVE_HEADER: &str = "separation_nm,value,value_kind";
pub const LABELLED_CURVE_HEADER: &str = "separation_nm,value,value_kind,ambient_index";
pub const EPS_RATIO_HEADER: &str = "zeta_over_omega_pD,eps_ratio,ambient_index";
pub const EPS_HEADER: &str = "zeta_eV,eps_izeta";

fn num(v: f64) -> String {
    format!("{v:.14e}")
}

fn emit<W: Write>(mut out: W, text: String) -> Result<usize> {
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(text.len())
}

/// Write `curve` in the curve CSV format; returns the byte count.
pub fn write_curve_csv<W: Write>(curve: &ForceCurve, out: W) -> Result<usize> {
    curve.validate()?;
    let mut text = String::from(CURVE_HEADER);
    text.push('\n');
    for r in &curve.records {
        text.push_str(&format!(
            "{},{},{}\n",
            num(r.separation_nm),
            num(r.value),
            r.kind.as_str()
        ));
    }
    emit(out, text)
}

/// Several curves in one file, each record tagged with the ambient index of
/// the curve it belongs to.
pub fn write_labelled_curves_csv<W: Write>(curves: &[(f64, ForceCurve)], out: W) -> Result<usize> {
    let mut text = String::from(LABELLED_CURVE_HEADER);
    text.push('\n');
    for (label, curve) in curves {
        curve.validate()?;
        for r in &curve.records {
            text.push_str(&format!(
                "{},{},{},{}\n",
                num(r.separation_nm),
                num(r.value),
                r.kind.as_str(),
                num(*label)
            ));
        }
    }
    emit(out, text)
}

/// Parse the curve CSV format back into records.
pub fn read_curve_csv<R: Read>(input: R) -> Result<ForceCurve> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let header = reader.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CURVE_HEADER {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header `{CURVE_HEADER}`, found `{header}`"),
        });
    }
    let mut records = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row?;
        let line = i + 2;
        let bad = |message: String| Error::Parse { line, message };
        if row.len() != 3 {
            return Err(bad(format!("expected 3 fields, found {}", row.len())));
        }
        let field = |k: usize| {
            row[k]
                .parse::<f64>()
                .map_err(|_| bad(format!("`{}` is not a number", &row[k])))
        };
        records.push(CurveRecord {
            separation_nm: field(0)?,
            value: field(1)?,
            kind: ValueKind::parse(&row[2])
                .ok_or_else(|| bad(format!("unknown value kind `{}`", &row[2])))?,
        });
    }
    let curve = ForceCurve {
        records,
        ..Default::default()
    };
    curve.validate()?;
    Ok(curve)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsRatioRecord {
    pub zeta_over_omega_pd: f64,
    pub eps_ratio: f64,
    pub ambient_index: f64,
}

pub fn write_eps_ratio_csv<W: Write>(rows: &[EpsRatioRecord], out: W) -> Result<usize> {
    let mut text = String::from(EPS_RATIO_HEADER);
    text.push('\n');
    for r in rows {
        text.push_str(&format!(
            "{},{},{}\n",
            num(r.zeta_over_omega_pd),
            num(r.eps_ratio),
            num(r.ambient_index)
        ));
    }
    emit(out, text)
}

/// Plain (ζ, ε(iζ)) table.
pub fn write_eps_csv<W: Write>(rows: &[(f64, f64)], out: W) -> Result<usize> {
    let mut text = String::from(EPS_HEADER);
    text.push('\n');
    for (z, e) in rows {
        text.push_str(&format!("{},{}\n", num(*z), num(*e)));
    }
    emit(out, text)
}
