//! Timing of plethysm methods on the same case. Every run gets a fresh
//! [`Context`], so no method profits from caches filled by another run.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::expr::Expr;
use crate::plethysm::Method;
use crate::symfunc::SymFunc;
use crate::Context;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub case: String,
    pub method: String,
    /// Median over the timed repetitions.
    pub millis: f64,
    pub min_millis: f64,
    pub repetitions: usize,
    pub terms: usize,
    pub checksum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

/// Hex SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// First 16 hex digits of the SHA-256 of the canonical text of `f`.
pub fn checksum(f: &SymFunc) -> String {
    digest(&f.to_string())[..16].to_string()
}

fn timed(expr: &Expr, method: Method) -> Result<(f64, SymFunc)> {
    let ctx = Context::new();
    let start = Instant::now();
    let v = expr.evaluate(&ctx, method)?;
    Ok((start.elapsed().as_secs_f64() * 1000.0, v))
}

/// Times each method on `case`: one discarded warm-up run, then
/// `repetitions` timed runs.
pub fn run_bench(case: &str, methods: &[Method], repetitions: usize) -> Result<BenchReport> {
    let expr = Expr::parse(case)?;
    let mut rows = Vec::new();
    for &method in methods {
        let (_, value) = timed(&expr, method)?;
        let mut times = Vec::with_capacity(repetitions);
        for _ in 0..repetitions.max(1) {
            times.push(timed(&expr, method)?.0);
        }
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            case: case.to_string(),
            method: method.to_string(),
            millis: median(&times),
            min_millis: times[0],
            repetitions: times.len(),
            terms: value.len(),
            checksum: checksum(&value),
        });
    }
    Ok(BenchReport { rows })
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

impl BenchReport {
    /// True when all methods agree on each case.
    pub fn consistent(&self) -> bool {
        self.rows
            .iter()
            .all(|r| self.rows.iter().filter(|s| s.case == r.case).all(|s| s.checksum == r.checksum))
    }

    /// Columns `case,method,millis,terms,checksum`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["case", "method", "millis", "terms", "checksum"])
            .expect("writing to memory");
        for r in &self.rows {
            w.write_record([
                r.case.clone(),
                r.method.clone(),
                format!("{:.3}", r.millis),
                r.terms.to_string(),
                r.checksum.clone(),
            ])
            .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 fields")
    }

    pub fn to_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.case.len()).max().unwrap_or(4).max(4);
        let mut out = format!(
            "{:width$}  {:8}  {:>12}  {:>12}  {:>6}  checksum\n",
            "case", "method", "median ms", "min ms", "terms"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:width$}  {:8}  {:>12.3}  {:>12.3}  {:>6}  {}",
                r.case, r.method, r.millis, r.min_millis, r.terms, r.checksum
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_case_agrees() {
        let report = run_bench("s[2][s[2]]", &[Method::SperpRecursive, Method::PowersumOracle], 3).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report.consistent());
        assert!(report.rows.iter().all(|r| r.terms == 2 && r.repetitions == 3));
        let csv = report.to_csv();
        assert!(csv.starts_with("case,method,millis,terms,checksum\n"));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn inapplicable_method_is_an_error() {
        assert!(run_bench("s[2,2][s[2]]", &[Method::ClosedForm], 1).is_err());
    }
}
