use std::fmt::Write as _;

use serde::Serialize;

use super::{check_claim, find_minimal_abc_trees_with, Claim, ClaimEntry, MinimizerRecord, SearchConfig, Status};
use crate::enumerate::CanonicalCode;
use crate::error::{Error, Result};

/// Search result and claim statuses for one order.
#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    pub n: usize,
    pub min_abc: f64,
    pub minimizer_codes: Vec<CanonicalCode>,
    pub claims: Vec<ClaimEntry>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub orders: Vec<OrderReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.orders
            .iter()
            .flat_map(|o| &o.claims)
            .filter(|c| c.status.is_fail())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }
}

/// One claim across every order searched.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: Claim,
    pub n_min: usize,
    pub n_max: usize,
    pub statuses: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        !self.statuses.iter().any(|e| e.status.is_fail())
    }

    /// Orders at which the claim was actually evaluated.
    pub fn applicable(&self) -> usize {
        self.statuses
            .iter()
            .filter(|e| e.status != Status::NotApplicable)
            .count()
    }
}

/// Searches every order in `n_min..=n_max` and checks `claims` on the
/// minimizers of each.
pub fn run_verify(n_min: usize, n_max: usize, claims: &[Claim], config: &SearchConfig) -> Result<VerifyReport> {
    if n_min > n_max {
        return Err(Error::Domain(format!("empty order range {n_min}..={n_max}")));
    }
    let mut orders = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        let record: MinimizerRecord = find_minimal_abc_trees_with(n, config)?;
        let claims = claims.iter().map(|&c| check_claim(c, &record)).collect();
        orders.push(OrderReport {
            n,
            min_abc: record.min_abc,
            minimizer_codes: record.minimizer_codes,
            claims,
        });
    }
    Ok(VerifyReport { orders })
}

/// Regroups a report by claim.
pub fn claim_reports(report: &VerifyReport) -> Vec<ClaimReport> {
    let mut ids: Vec<Claim> = report
        .orders
        .iter()
        .flat_map(|o| o.claims.iter().map(|c| c.id))
        .collect();
    ids.sort();
    ids.dedup();
    let n_min = report.orders.first().map_or(0, |o| o.n);
    let n_max = report.orders.last().map_or(0, |o| o.n);
    ids.into_iter()
        .map(|id| ClaimReport {
            id,
            n_min,
            n_max,
            statuses: report
                .orders
                .iter()
                .flat_map(|o| o.claims.iter().filter(|c| c.id == id).cloned())
                .collect(),
        })
        .collect()
}

/// `n,min_abc,num_minimizers` per order.
pub fn csv_summary(report: &VerifyReport) -> String {
    let mut out = String::from("n,min_abc,num_minimizers\n");
    for o in &report.orders {
        writeln!(out, "{},{:.12},{}", o.n, o.min_abc, o.minimizer_codes.len()).expect("string write");
    }
    out
}
