//! Per-run comparison records and their CSV form.

use maxcolor_core::weight::format_weight;
use maxcolor_core::{Error, Weight};
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRecord {
    pub instance: String,
    pub algorithm: String,
    pub b: usize,
    /// `ok`, or the kind of error the algorithm returned.
    pub status: String,
    pub weight: Option<Weight>,
    pub classes: Option<usize>,
    pub opt: Option<Weight>,
    pub opt_classes: Option<usize>,
    /// Wall time in microseconds, only when timing was requested.
    pub wall_micros: Option<u128>,
}

impl RunRecord {
    /// `W / OPT` when both are known.
    pub fn ratio(&self) -> Option<Weight> {
        match (self.weight, self.opt) {
            (Some(w), Some(o)) => Some(maxcolor_core::weight::ratio(&w, &o)),
            _ => None,
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter(_) => "invalid-parameter",
        Error::InvalidStructure(_) => "invalid-structure",
        Error::GuardExceeded { .. } => "guard-exceeded",
        Error::InvalidCertificate(_) => "invalid-certificate",
        Error::Infeasible(_) => "infeasible",
    }
}

fn opt_weight(w: Option<Weight>) -> String {
    w.map(|w| format_weight(&w)).unwrap_or_default()
}

fn opt_count(n: Option<usize>) -> String {
    n.map(|n| n.to_string()).unwrap_or_default()
}

/// Writes a header and one row per record. The timing column is present
/// only if `timing` is set.
pub fn write_csv<W: Write>(out: W, records: &[RunRecord], timing: bool) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["instance", "algorithm", "b", "status", "W", "k", "OPT", "k_opt", "ratio"];
    if timing {
        header.push("wall_us");
    }
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![
            r.instance.clone(),
            r.algorithm.clone(),
            r.b.to_string(),
            r.status.clone(),
            opt_weight(r.weight),
            opt_count(r.classes),
            opt_weight(r.opt),
            opt_count(r.opt_classes),
            opt_weight(r.ratio()),
        ];
        if timing {
            row.push(r.wall_micros.map(|t| t.to_string()).unwrap_or_default());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
