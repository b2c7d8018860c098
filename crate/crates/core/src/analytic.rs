//! Real-valued edge-weight calculus: difference functions, their
//! monotonicity on grids, limits and degree thresholds.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Values closer to zero than this are flagged instead of being trusted
/// for a sign decision.
pub const ZERO_TOLERANCE: f64 = 1e-12;

/// Edge weight for real degrees.
pub fn f(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}

pub fn near_zero(x: f64) -> bool {
    x.abs() < ZERO_TOLERANCE
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// `-f(x, y) + f(x + dx, y - dy)`.
    IncreaseXDecreaseY,
    /// `-f(x, y) + f(x - dx, y + dy)`.
    DecreaseXIncreaseY,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DeltaFunction {
    pub dx: f64,
    pub dy: f64,
    pub orientation: Orientation,
}

impl DeltaFunction {
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        match self.orientation {
            Orientation::IncreaseXDecreaseY => g_value(x, y, self.dx, self.dy),
            Orientation::DecreaseXIncreaseY => g_reverse_value(x, y, self.dx, self.dy),
        }
    }
}

fn check_base(x: f64, y: f64, dx: f64, dy: f64) -> Result<()> {
    if !(x >= 2.0 && y >= 2.0) {
        return Err(Error::Domain(format!("need x, y >= 2, got ({x}, {y})")));
    }
    if !(dx >= 0.0 && dy >= 0.0) {
        return Err(Error::Domain(format!("need dx, dy >= 0, got ({dx}, {dy})")));
    }
    Ok(())
}

/// `-f(x, y) + f(x + dx, y - dy)`.
pub fn g_value(x: f64, y: f64, dx: f64, dy: f64) -> Result<f64> {
    check_base(x, y, dx, dy)?;
    if y - dy < 1.0 {
        return Err(Error::Domain(format!("y - dy = {} is below 1", y - dy)));
    }
    Ok(-f(x, y) + f(x + dx, y - dy))
}

/// `-f(x, y) + f(x - dx, y + dy)`.
pub fn g_reverse_value(x: f64, y: f64, dx: f64, dy: f64) -> Result<f64> {
    check_base(x, y, dx, dy)?;
    if x - dx < 1.0 {
        return Err(Error::Domain(format!("x - dx = {} is below 1", x - dx)));
    }
    Ok(-f(x, y) + f(x - dx, y + dy))
}

/// `-f(du, 5) + f(du, 4) - f(dv, 3) + f(dv, 4)`: the change from moving one
/// length-2 arm off a `B_4` child of `u` onto a `B_2` child of `v`.
pub fn g1_value(du: usize, dv: usize) -> Result<f64> {
    if dv < 5 || du < dv {
        return Err(Error::Domain(format!("need du >= dv >= 5, got du = {du}, dv = {dv}")));
    }
    let (u, v) = (du as f64, dv as f64);
    Ok(-f(u, 5.0) + f(u, 4.0) - f(v, 3.0) + f(v, 4.0))
}

/// `lim_{du -> inf} g1(du, dv)`.
pub fn g1_limit(dv: usize) -> f64 {
    let v = dv as f64;
    limit_bound(LimitId::FiveToFour) - f(v, 3.0) + f(v, 4.0)
}

const SCAN_CAP: usize = 1_000_000;

/// Least `du >= dv` with `g1(du, dv) >= 0`, or `None` when the limit in
/// `du` is already negative.
pub fn threshold_du(dv: usize) -> Result<Option<usize>> {
    if dv < 5 {
        return Err(Error::Domain(format!("need dv >= 5, got {dv}")));
    }
    if g1_limit(dv) < 0.0 {
        return Ok(None);
    }
    for du in dv..=SCAN_CAP {
        if g1_value(du, dv)? >= 0.0 {
            return Ok(Some(du));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdRow {
    pub dv: usize,
    pub threshold: Option<usize>,
    pub limit: f64,
    /// `g1` at the threshold and one below it.
    pub at: Option<f64>,
    pub below: Option<f64>,
    /// Some value in the row lies within [`ZERO_TOLERANCE`] of zero.
    pub flagged: bool,
}

pub fn threshold_table(dvs: impl IntoIterator<Item = usize>) -> Result<Vec<ThresholdRow>> {
    dvs.into_iter()
        .map(|dv| {
            let threshold = threshold_du(dv)?;
            let limit = g1_limit(dv);
            let at = threshold.map(|du| g1_value(du, dv)).transpose()?;
            let below = match threshold {
                Some(du) if du > dv => Some(g1_value(du - 1, dv)?),
                _ => None,
            };
            let flagged = [Some(limit), at, below].into_iter().flatten().any(near_zero);
            Ok(ThresholdRow {
                dv,
                threshold,
                limit,
                at,
                below,
                flagged,
            })
        })
        .collect()
}

/// Catalogue of closed-form limits used in the bound arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LimitId {
    /// `lim -f(5, d) + f(4, d + k) = -sqrt(1/5) + sqrt(1/4)`.
    FiveToFour,
    /// `lim -f(d, 7) + f(d, 4) = -sqrt(1/7) + sqrt(1/4)`.
    SevenToFour,
    /// `-sqrt(1/dv) + sqrt(1/(dv - c))`.
    Shift { dv: usize, c: usize },
}

impl fmt::Display for LimitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitId::FiveToFour => f.write_str("five-four"),
            LimitId::SevenToFour => f.write_str("seven-four"),
            LimitId::Shift { dv, c } => write!(f, "shift:{dv}:{c}"),
        }
    }
}

impl FromStr for LimitId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "five-four" => return Ok(LimitId::FiveToFour),
            "seven-four" => return Ok(LimitId::SevenToFour),
            _ => {}
        }
        let parts: Vec<&str> = s.split(':').collect();
        if let ["shift", dv, c] = parts[..] {
            let parse = |p: &str| {
                p.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad integer {p:?} in limit id: {e}")))
            };
            return Ok(LimitId::Shift {
                dv: parse(dv)?,
                c: parse(c)?,
            });
        }
        Err(Error::Parse(format!("unknown limit id {s:?}")))
    }
}

pub fn limit_bound(id: LimitId) -> f64 {
    match id {
        LimitId::FiveToFour => -(0.2f64).sqrt() + 0.5,
        LimitId::SevenToFour => -(1.0f64 / 7.0).sqrt() + 0.5,
        LimitId::Shift { dv, c } => -(1.0 / dv as f64).sqrt() + (1.0 / (dv as f64 - c as f64)).sqrt(),
    }
}

/// Checked variant of [`limit_bound`] for ids built from user input.
pub fn try_limit_bound(id: LimitId) -> Result<f64> {
    if let LimitId::Shift { dv, c } = id {
        if dv == 0 || c >= dv {
            return Err(Error::Domain(format!("shift limit needs 0 <= c < dv, got {id}")));
        }
    }
    Ok(limit_bound(id))
}

/// Which difference function a grid sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GridLemma {
    /// [`g_value`], expected non-decreasing in `x` and non-increasing in `y`.
    IncreaseX,
    /// [`g_reverse_value`], expected non-increasing in `x` and
    /// non-decreasing in `y`.
    DecreaseX,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridPoint {
    pub x: f64,
    pub y: f64,
    pub dx: f64,
    pub dy: f64,
    pub g: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridViolation {
    pub from: GridPoint,
    pub to: GridPoint,
    /// `"x"` or `"y"`: the coordinate that stepped.
    pub axis: char,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridReport {
    pub lemma: GridLemma,
    pub points: usize,
    pub violations: Vec<GridViolation>,
    /// Steps whose difference lies within [`ZERO_TOLERANCE`] of zero while
    /// `(dx, dy) != (0, 0)`.
    pub flat_steps: usize,
}

pub const GRID_MIN: f64 = 2.0;
pub const GRID_MAX: f64 = 50.0;
pub const GRID_STEP: f64 = 0.5;

fn axis_values() -> Vec<f64> {
    let steps = ((GRID_MAX - GRID_MIN) / GRID_STEP).round() as usize;
    (0..=steps).map(|i| GRID_MIN + i as f64 * GRID_STEP).collect()
}

/// `(dx, dy)` pairs swept for each lemma.
pub fn grid_shifts(lemma: GridLemma) -> Vec<(f64, f64)> {
    let (xs, ys): (&[f64], &[f64]) = match lemma {
        GridLemma::IncreaseX => (&[0.0, 1.0, 2.0, 4.0], &[0.0, 1.0, 2.0]),
        GridLemma::DecreaseX => (&[0.0, 1.0, 2.0], &[0.0, 1.0, 2.0, 4.0]),
    };
    xs.iter().flat_map(|&dx| ys.iter().map(move |&dy| (dx, dy))).collect()
}

fn eval(lemma: GridLemma, x: f64, y: f64, dx: f64, dy: f64) -> Option<f64> {
    match lemma {
        GridLemma::IncreaseX => g_value(x, y, dx, dy).ok(),
        GridLemma::DecreaseX => g_reverse_value(x, y, dx, dy).ok(),
    }
}

/// Every in-domain grid value for `lemma`.
pub fn grid_points(lemma: GridLemma) -> Vec<GridPoint> {
    let axis = axis_values();
    let mut out = Vec::new();
    for (dx, dy) in grid_shifts(lemma) {
        for &x in &axis {
            for &y in &axis {
                if let Some(g) = eval(lemma, x, y, dx, dy) {
                    out.push(GridPoint { x, y, dx, dy, g });
                }
            }
        }
    }
    out
}

/// Checks weak monotonicity of the difference function along every grid
/// step in `x` and in `y`.
pub fn check_grid(lemma: GridLemma) -> GridReport {
    let axis = axis_values();
    let mut report = GridReport {
        lemma,
        points: 0,
        violations: Vec::new(),
        flat_steps: 0,
    };
    // Sign of the expected change when x (resp. y) grows.
    let (sx, sy) = match lemma {
        GridLemma::IncreaseX => (1.0, -1.0),
        GridLemma::DecreaseX => (-1.0, 1.0),
    };
    for (dx, dy) in grid_shifts(lemma) {
        let point = |x: f64, y: f64| eval(lemma, x, y, dx, dy).map(|g| GridPoint { x, y, dx, dy, g });
        for (i, &x) in axis.iter().enumerate() {
            for (j, &y) in axis.iter().enumerate() {
                let Some(here) = point(x, y) else { continue };
                report.points += 1;
                let steps = [
                    ('x', axis.get(i + 1).and_then(|&x2| point(x2, y)), sx),
                    ('y', axis.get(j + 1).and_then(|&y2| point(x, y2)), sy),
                ];
                for (axis_name, next, sign) in steps {
                    let Some(next) = next else { continue };
                    let diff = sign * (next.g - here.g);
                    if (dx, dy) != (0.0, 0.0) && near_zero(diff) {
                        report.flat_steps += 1;
                    }
                    if diff < 0.0 && !near_zero(diff) {
                        report.violations.push(GridViolation {
                            from: here,
                            to: next,
                            axis: axis_name,
                        });
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_ratio(num: f64, den: f64) -> f64 {
        (num / den).sqrt()
    }

    #[test]
    fn g_spot_values() {
        assert_eq!(g_value(7.0, 3.0, 0.0, 0.0).unwrap(), 0.0);
        let expect = -sqrt_ratio(8.0, 25.0) + sqrt_ratio(8.0, 24.0);
        assert!((g_value(5.0, 5.0, 1.0, 1.0).unwrap() - expect).abs() < 1e-15);
        assert!(g_value(6.0, 5.0, 1.0, 1.0).unwrap() >= g_value(5.0, 5.0, 1.0, 1.0).unwrap());
        assert!(g_value(5.0, 2.5, 0.0, 2.0).is_err());
        assert!(g_reverse_value(2.0, 5.0, 1.5, 0.0).is_err());
        let d = DeltaFunction {
            dx: 1.0,
            dy: 1.0,
            orientation: Orientation::DecreaseXIncreaseY,
        };
        assert!((d.eval(5.0, 5.0).unwrap() - (-sqrt_ratio(8.0, 25.0) + sqrt_ratio(8.0, 24.0))).abs() < 1e-15);
    }

    #[test]
    fn g1_signs_and_thresholds() {
        for (du, dv) in [(13, 5), (25, 6), (67, 7)] {
            assert!(g1_value(du, dv).unwrap() >= 0.0, "({du}, {dv})");
            assert!(g1_value(du - 1, dv).unwrap() < 0.0, "({}, {dv})", du - 1);
        }
        assert_eq!(threshold_du(5).unwrap(), Some(13));
        assert_eq!(threshold_du(6).unwrap(), Some(25));
        assert_eq!(threshold_du(7).unwrap(), Some(67));
        assert_eq!(threshold_du(8).unwrap(), None);
        assert_eq!(threshold_du(30).unwrap(), None);
        assert!(g1_value(4, 4).is_err());
        assert!(g1_value(6, 7).is_err());
        assert!(threshold_du(4).is_err());
    }

    #[test]
    fn thresholds_match_plain_scan() {
        for dv in 5..=12 {
            let scan = (dv..=20_000).find(|&du| g1_value(du, dv).unwrap() >= 0.0);
            assert_eq!(threshold_du(dv).unwrap(), scan, "dv = {dv}");
        }
    }

    #[test]
    fn limits() {
        assert!((limit_bound(LimitId::FiveToFour) - 0.052_786_404_5).abs() < 1e-9);
        assert!((limit_bound(LimitId::SevenToFour) - 0.122_035_526_4).abs() < 1e-9);
        let du = 10_000.0;
        assert!(-f(5.0, du) + f(4.0, du + 4.0) < limit_bound(LimitId::FiveToFour));
        let id: LimitId = "shift:7:2".parse().unwrap();
        assert_eq!(id, LimitId::Shift { dv: 7, c: 2 });
        assert_eq!(id.to_string(), "shift:7:2");
        assert!((limit_bound(id) - (-(1.0f64 / 7.0).sqrt() + 0.2f64.sqrt())).abs() < 1e-15);
        assert!("nope".parse::<LimitId>().is_err());
        assert!(try_limit_bound(LimitId::Shift { dv: 3, c: 3 }).is_err());
    }

    #[test]
    fn grids_are_monotone() {
        for lemma in [GridLemma::IncreaseX, GridLemma::DecreaseX] {
            let report = check_grid(lemma);
            assert!(report.points > 20_000);
            assert!(report.violations.is_empty(), "{:?}", &report.violations[..1]);
        }
        assert_eq!(grid_shifts(GridLemma::IncreaseX).len(), 12);
    }

    #[test]
    fn table_rows() {
        let rows = threshold_table(5..=8).unwrap();
        assert_eq!(rows[0].threshold, Some(13));
        assert!(rows[0].below.unwrap() < 0.0);
        assert_eq!(rows[3].threshold, None);
        assert!(rows[3].limit < 0.0);
    }
}
