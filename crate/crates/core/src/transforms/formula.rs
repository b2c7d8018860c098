//! Closed-form deltas and degree-only upper bounds for each case.

use serde::Serialize;

use super::{CaseId, Relationship, TransformCase};
use crate::abc::edge_weight as w;
use crate::analytic::{limit_bound, threshold_du, LimitId};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Increase of `d(u)` under each transformation.
pub fn degree_shift(id: CaseId, dv: usize, n1: usize) -> usize {
    match id {
        CaseId::Switch | CaseId::T => 0,
        CaseId::T1 => 4,
        CaseId::T2 => 3,
        CaseId::T3 | CaseId::T42 => 2,
        CaseId::T41 | CaseId::T5 | CaseId::T6 => 1,
        CaseId::T7 => dv - n1 - 1,
    }
}

/// The change of the index predicted from the degrees around `u` and `v`.
///
/// When `u` is the parent of `v` the term for `v` is left out of the sum
/// over the neighbors of `u`, and `d(u)` stands in for the degree of the
/// parent of `v`; the result then bounds the true change from above.
pub fn formula_delta(t: &Tree, c: &TransformCase) -> f64 {
    let (du, dv) = (c.du, c.dv);
    let k = degree_shift(c.id, dv, c.n1);
    let u_is_vp = matches!(c.relationship, Relationship::C | Relationship::D);
    let sum = |include_u1: bool| -> f64 {
        let drop_v = u_is_vp && c.id != CaseId::T41;
        t.neighbors(c.u)
            .iter()
            .filter(|&&x| (include_u1 || x != c.u1) && !(drop_v && x == c.v))
            .map(|&x| -w(t.degree(x), du) + w(t.degree(x), du + k))
            .sum()
    };
    let dvp = if u_is_vp { du } else { t.degree(c.vp) };
    let vp_term = |dv_after: usize| -w(dvp, dv) + w(dvp, dv_after);
    let u1_term = -w(5, du) + w(4, du + k);

    match c.id {
        CaseId::T => -w(du, 5) + w(du, 4) - w(dv, 3) + w(dv, 4),
        CaseId::T1 => {
            sum(false)
                + u1_term
                + 3.0 * (-w(3, dv) + w(4, du + 4))
                + (-w(3, dv) + w(3, du + 4))
                + vp_term(4)
                + 2.0 * (-w(3, dv) + w(2, 4))
        }
        CaseId::T2 => {
            sum(false) + u1_term + 3.0 * (-w(3, dv) + w(4, du + 3)) + vp_term(dv - 2) + 2.0 * (-w(3, dv) + w(2, 4))
        }
        CaseId::T3 => sum(true) + 2.0 * (-w(3, dv) + w(4, du + 2)) + vp_term(dv - 1) + 2.0 * (-w(3, dv) + w(2, 4)),
        CaseId::T41 => sum(true) + (-w(3, dv) + w(5, du + 1)) + 2.0 * (-w(3, dv) + w(2, dv)),
        CaseId::T42 => sum(false) + u1_term + 2.0 * (-w(3, dv) + w(4, du + 2)) + vp_term(4) + (-w(3, dv) + w(4, 3)),
        CaseId::T5 => sum(false) + u1_term + (-w(3, dv) + w(4, 3)) + (-w(3, dv) + w(4, du + 1)) + vp_term(dv - 1),
        CaseId::T6 => sum(false) + u1_term + (-w(3, dv) + w(4, du + 1)) + vp_term(dv - 1),
        CaseId::T7 => sum(false) + u1_term + k as f64 * (-w(4, dv) + w(4, du + k)) + vp_term(c.n1 + 2),
        CaseId::Switch => unreachable!("no closed form for switching"),
    }
}

fn check_range(id: CaseId, du: usize, dv: usize, n1: Option<usize>) -> Result<usize> {
    let domain = |msg: String| Err(Error::Domain(format!("{id}: {msg}")));
    match id {
        CaseId::Switch => domain("no bound for switching".into()),
        CaseId::T => {
            if dv < 5 || du < dv {
                return domain(format!("need d(u) >= d(v) >= 5, got ({du}, {dv})"));
            }
            Ok(0)
        }
        CaseId::T7 => {
            let Some(n1) = n1 else {
                return domain("n1 is required".into());
            };
            if dv < 5 || !(1..=4).contains(&n1) || dv < n1 + 2 || du < dv {
                return domain(format!(
                    "need d(u) >= d(v) >= max(5, n1 + 2) and 1 <= n1 <= 4, got d(u) = {du}, d(v) = {dv}, n1 = {n1}"
                ));
            }
            Ok(n1)
        }
        _ => {
            let dvs = id.declared_dv().expect("fixed set");
            if !dvs.contains(&dv) {
                return domain(format!("d(v) must be in {dvs:?}, got {dv}"));
            }
            let implied = dv - 1 - id.required_b2().expect("fixed n2");
            if let Some(n1) = n1 {
                if n1 != implied {
                    return domain(format!("d(v) = {dv} forces n1 = {implied}, got {n1}"));
                }
            }
            let min = threshold_du(dv)?.expect("declared d(v) has a threshold");
            if du < min {
                return domain(format!("d(u) must be at least {min} when d(v) = {dv}, got {du}"));
            }
            Ok(implied)
        }
    }
}

/// Upper bound on the change in terms of `d(u)`, `d(v)` and `n1` only.
///
/// `T1` evaluates its bound at `d(u) - 1` so that the smallest admissible
/// degree reproduces the tabulated value.
pub fn evaluate_bound(id: CaseId, du: usize, dv: usize, n1: Option<usize>) -> Result<f64> {
    let n1 = check_range(id, du, dv, n1)?;
    let l54 = limit_bound(LimitId::FiveToFour);
    let l74 = limit_bound(LimitId::SevenToFour);
    let shift = |c: usize| limit_bound(LimitId::Shift { dv, c });
    let value = match id {
        CaseId::T => -w(du, 5) + w(du, 4) - w(dv, 3) + w(dv, 4),
        CaseId::T1 => {
            let d = du - 1;
            l54 + 3.0 * (-w(3, 7) + w(4, d + 4)) + (-w(3, 7) + w(3, d + 4)) + l74 + 2.0 * (-w(3, 7) + w(2, 4))
        }
        CaseId::T2 => l54 + 3.0 * (-w(3, dv) + w(4, du + 3)) + shift(2) + 2.0 * (-w(3, dv) + w(2, 4)),
        CaseId::T3 => 2.0 * (-w(3, dv) + w(4, du + 2)) + shift(1) + 2.0 * (-w(3, dv) + w(2, 4)),
        CaseId::T41 => (-w(3, dv) + w(5, du + 1)) + 2.0 * (-w(3, dv) + w(2, dv)),
        CaseId::T42 => l54 + 2.0 * (-w(3, 7) + w(4, du + 2)) + l74 + (-w(3, 7) + w(4, 3)),
        CaseId::T5 => l54 + (-w(3, dv) + w(4, 3)) + (-w(3, dv) + w(4, du + 1)) + shift(1),
        CaseId::T6 => l54 + (-w(3, dv) + w(4, du + 1)) + shift(1),
        CaseId::T7 => {
            let k = dv - n1 - 1;
            l54 + k as f64 * (-w(4, dv) + w(4, du + k)) + limit_bound(LimitId::Shift { dv, c: dv - n1 - 2 })
        }
        CaseId::Switch => unreachable!(),
    };
    Ok(value)
}

/// [`evaluate_bound`] plus `(d(u) - 2)(-f(4, d(u)) + f(4, d(u) + k))`, the
/// contribution of the neighbors of `u` when all but two have degree at
/// least 4.
pub fn refined_bound(id: CaseId, du: usize, dv: usize, n1: Option<usize>) -> Result<f64> {
    let bound = evaluate_bound(id, du, dv, n1)?;
    let n1 = check_range(id, du, dv, n1)?;
    let k = degree_shift(id, dv, n1);
    Ok(bound + (du as f64 - 2.0) * (-w(4, du) + w(4, du + k)))
}

/// Parameters where the plain bound is non-negative and the refined bound
/// is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionWindow {
    pub dv: usize,
    pub du_min: usize,
    pub du_max: usize,
}

pub fn exception_windows(id: CaseId) -> Vec<ExceptionWindow> {
    let wnd = |dv, du_min, du_max| ExceptionWindow { dv, du_min, du_max };
    match id {
        CaseId::T3 => vec![wnd(5, 13, 13)],
        CaseId::T41 => vec![wnd(5, 13, 16), wnd(6, 25, 69)],
        CaseId::T5 => vec![wnd(5, 13, 34), wnd(6, 25, 48), wnd(7, 67, 83)],
        CaseId::T6 => vec![wnd(5, 13, 17)],
        _ => Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub case: CaseId,
    pub dv: usize,
    pub n1: usize,
    pub du: usize,
    pub bound: f64,
    pub refined: f64,
    pub in_window: bool,
}

/// Bound values over the declared parameter grid of `id`, with `d(u)`
/// running `extra` steps past the end of the last exception window (or
/// past the smallest admissible value).
pub fn bound_table(id: CaseId, extra: usize) -> Result<Vec<BoundRow>> {
    let mut params: Vec<(usize, usize, usize)> = Vec::new();
    match id {
        CaseId::Switch => return Err(Error::Domain("no bound for switching".into())),
        CaseId::T => {
            for dv in 5..=8 {
                let start = dv;
                let end = threshold_du(dv)?.unwrap_or(start) + extra;
                params.push((dv, 0, start.max(5)));
                params.push((dv, 0, end));
            }
        }
        CaseId::T7 => {
            for dv in 5..=8 {
                for n1 in 1..=4.min(dv - 2) {
                    params.push((dv, n1, dv));
                    params.push((dv, n1, dv + extra));
                }
            }
        }
        _ => {
            for &dv in id.declared_dv().expect("fixed set") {
                let n1 = dv - 1 - id.required_b2().expect("fixed n2");
                let start = threshold_du(dv)?.expect("threshold");
                let last = exception_windows(id)
                    .iter()
                    .filter(|wnd| wnd.dv == dv)
                    .map(|wnd| wnd.du_max)
                    .max()
                    .unwrap_or(start);
                params.push((dv, n1, start));
                params.push((dv, n1, last + extra));
            }
        }
    }
    let windows = exception_windows(id);
    let mut rows = Vec::new();
    for pair in params.chunks_exact(2) {
        let (dv, n1, start) = pair[0];
        let end = pair[1].2;
        for du in start..=end {
            let n1_arg = (id == CaseId::T7).then_some(n1);
            rows.push(BoundRow {
                case: id,
                dv,
                n1,
                du,
                bound: evaluate_bound(id, du, dv, n1_arg)?,
                refined: refined_bound(id, du, dv, n1_arg)?,
                in_window: windows
                    .iter()
                    .any(|wnd| wnd.dv == dv && (wnd.du_min..=wnd.du_max).contains(&du)),
            });
        }
    }
    Ok(rows)
}
