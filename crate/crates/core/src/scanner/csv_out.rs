use std::io::Write;

use super::ScanRecord;
use crate::criteria::CriterionReport;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 10] = [
    "x",
    "y",
    "valid",
    "ppt_verdict",
    "ppt_min_eigenvalue",
    "ccn_trace_norm",
    "ccn_verdict",
    "thm1_threshold",
    "thm1_verdict",
    "concurrence",
];

/// Formats `v` with `digits` significant digits, like C's `%.{digits}g`.
/// Non-finite values format as an empty string.
pub fn format_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return String::new();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn num(v: Option<f64>) -> String {
    v.map(|v| format_sig(v, 10)).unwrap_or_default()
}

fn verdict(r: Option<&CriterionReport>) -> String {
    r.map(|r| r.verdict.to_string()).unwrap_or_default()
}

/// Writes `records` as CSV with a header row. Fields of invalid points,
/// and thresholds that do not exist, are left empty.
pub fn write_csv<W: Write>(records: &[ScanRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Output(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record([
            format_sig(r.point.x, 10),
            format_sig(r.point.y, 10),
            r.valid.to_string(),
            verdict(r.ppt.as_ref()),
            num(r.ppt_min_eigenvalue),
            num(r.ccn.map(|c| c.lhs)),
            verdict(r.ccn.as_ref()),
            num(r.theorem1.map(|t| t.rhs)),
            verdict(r.theorem1.as_ref()),
            num(r.concurrence),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Output(format!("csv: {e}")))?;
    Ok(())
}
