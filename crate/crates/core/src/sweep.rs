//! Parameter-space coverage sweep: for every [n, k] with 1 < k <= n/2 and
//! n <= q + 1, run the dispatcher and verify whatever it builds.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{construct_auto, verify_report, Overrides};
use crate::error::{Error, Result};
use crate::field::{Field, FieldRecord};
use crate::linear_code::MdsRoute;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub n_min: usize,
    /// Clamped to q + 1.
    pub n_max: Option<usize>,
    pub budget: u64,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    /// Record per-row wall time. Off by default so output is reproducible.
    pub timings: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { n_min: 1, n_max: None, budget: 1_000_000, threads: 0, timings: false }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Verified,
    NoConstruction,
    BudgetExceeded,
    TheoremViolation,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    /// Construction tag, or "none".
    pub condition: String,
    pub status: RowStatus,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hull_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_mds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mds_route: Option<MdsRoute>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub q: u32,
    pub field: FieldRecord,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn all_verified_or_none(&self) -> bool {
        self.rows
            .iter()
            .all(|r| matches!(r.status, RowStatus::Verified | RowStatus::NoConstruction))
    }
}

/// Every (n, k) the sweep visits, in output order.
pub fn grid(q: u32, n_min: usize, n_max: Option<usize>) -> Vec<(usize, usize)> {
    let top = n_max.map_or(q as usize + 1, |m| m.min(q as usize + 1));
    (n_min.max(1)..=top).flat_map(|n| (2..=n / 2).map(move |k| (n, k))).collect()
}

fn run_row(field: &Field, n: usize, k: usize, opts: &SweepOptions) -> SweepRow {
    let start = Instant::now();
    let mut row = SweepRow {
        n,
        k,
        condition: "none".into(),
        status: RowStatus::NoConstruction,
        verified: false,
        hull_dimension: None,
        is_mds: None,
        mds_route: None,
        min_distance: None,
        detail: None,
        wall_time_ms: None,
    };
    match construct_auto(field, n, k, &Overrides::NONE) {
        Err(Error::NoConstructionApplies { .. }) => {}
        Err(e) => {
            row.status = RowStatus::Error;
            row.detail = Some(e.to_string());
        }
        Ok(report) => {
            row.condition = report.construction.tag().into();
            match verify_report(&report, opts.budget) {
                Ok(v) => {
                    let v = v.verified.expect("verify_report fills the verdict");
                    row.status = RowStatus::Verified;
                    row.verified = true;
                    row.hull_dimension = Some(v.hull_dimension);
                    row.is_mds = Some(v.is_mds);
                    row.mds_route = Some(v.mds_route);
                    row.min_distance = v.min_distance;
                }
                Err(e) => {
                    row.status = match e {
                        Error::BudgetExceeded { .. } => RowStatus::BudgetExceeded,
                        Error::TheoremViolation(_) => RowStatus::TheoremViolation,
                        _ => RowStatus::Error,
                    };
                    row.hull_dimension = Some(report.spec.generator().hull_dimension());
                    row.detail = Some(e.to_string());
                }
            }
        }
    }
    if opts.timings {
        row.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    row
}

/// Runs the sweep on a dedicated pool. Row order is the grid order no
/// matter how many threads run. Per-row failures are recorded in the row.
pub fn sweep(field: &Field, opts: &SweepOptions) -> Result<SweepResult> {
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    if field.order() <= 3 {
        return Err(Error::QTooSmall(field.order()));
    }
    let cells = grid(field.order(), opts.n_min, opts.n_max);
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
    let rows = pool
        .install(|| cells.par_iter().map(|&(n, k)| run_row(field, n, k, opts)).collect::<Vec<_>>());
    Ok(SweepResult { q: field.order(), field: field.record(), rows })
}

/// Plain-text coverage table.
pub fn render_table(result: &SweepResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "q = {}", result.q);
    let _ = writeln!(
        out,
        "{:>4} {:>4}  {:<18} {:<17} {:>4} {:>5} {:<14} {:>3}",
        "n", "k", "condition", "status", "hull", "mds", "route", "d"
    );
    for r in &result.rows {
        let dash = || "-".to_string();
        let status = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from));
        let route = r
            .mds_route
            .and_then(|m| serde_json::to_value(m).ok())
            .and_then(|v| v.as_str().map(String::from));
        let _ = writeln!(
            out,
            "{:>4} {:>4}  {:<18} {:<17} {:>4} {:>5} {:<14} {:>3}",
            r.n,
            r.k,
            r.condition,
            status.unwrap_or_default(),
            r.hull_dimension.map_or_else(dash, |h| h.to_string()),
            r.is_mds.map_or_else(dash, |m| m.to_string()),
            route.unwrap_or_else(dash),
            r.min_distance.map_or_else(dash, |d| d.to_string()),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q5_rows() {
        let f = Field::from_order(5).unwrap();
        let res = sweep(&f, &SweepOptions { n_max: Some(6), ..Default::default() }).unwrap();
        let cells: Vec<_> = res.rows.iter().map(|r| (r.n, r.k)).collect();
        assert_eq!(cells, vec![(4, 2), (5, 2), (6, 2), (6, 3)]);
        assert!(res.rows.iter().all(|r| r.verified && r.hull_dimension == Some(0)));
    }

    #[test]
    fn q7_has_none_row() {
        let f = Field::from_order(7).unwrap();
        let res = sweep(&f, &SweepOptions::default()).unwrap();
        let row = res.rows.iter().find(|r| (r.n, r.k) == (5, 2)).unwrap();
        assert_eq!(row.condition, "none");
        assert_eq!(row.status, RowStatus::NoConstruction);
        assert!(res.all_verified_or_none());
    }

    #[test]
    fn rejects_even_and_small() {
        let opts = SweepOptions::default();
        assert_eq!(
            sweep(&Field::from_order(4).unwrap(), &opts).unwrap_err(),
            Error::EvenCharacteristic
        );
        assert_eq!(sweep(&Field::from_order(3).unwrap(), &opts).unwrap_err(), Error::QTooSmall(3));
    }

    #[test]
    fn tiny_budget_is_recorded_per_row() {
        let f = Field::from_order(5).unwrap();
        let res = sweep(&f, &SweepOptions { budget: 1, ..Default::default() }).unwrap();
        assert!(res.rows.iter().all(|r| r.status == RowStatus::BudgetExceeded));
        assert!(render_table(&res).contains("budget_exceeded"));
    }
}
