use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{classify, FamilyFn, ScanRecord};
use crate::criteria::{CriterionReport, Verdict};
use crate::error::{Error, Result};
use crate::numerics::Tolerance;
use crate::states::FamilyPoint;

/// What a boundary separates: the physical region, or the entangled region
/// of one criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ScanCriterion {
    Validity,
    Ppt,
    Ccn,
    Theorem1,
}

impl ScanCriterion {
    pub const VERDICTS: [ScanCriterion; 3] = [ScanCriterion::Ppt, ScanCriterion::Ccn, ScanCriterion::Theorem1];

    fn report(self, r: &ScanRecord) -> Option<&CriterionReport> {
        match self {
            ScanCriterion::Validity => None,
            ScanCriterion::Ppt => r.ppt.as_ref(),
            ScanCriterion::Ccn => r.ccn.as_ref(),
            ScanCriterion::Theorem1 => r.theorem1.as_ref(),
        }
    }

    /// Grid-scan predicate. `None` for invalid points under a verdict
    /// criterion, which are skipped.
    fn holds_on(self, r: &ScanRecord) -> Option<bool> {
        match self {
            ScanCriterion::Validity => Some(r.valid),
            _ => self.report(r).map(CriterionReport::is_entangled),
        }
    }

    /// Bisection predicate: invalid points count as `false`.
    fn holds_at(self, family: FamilyFn, p: FamilyPoint, tol: &Tolerance) -> Result<bool> {
        let r = classify(family, p, tol)?;
        Ok(self.holds_on(&r).unwrap_or(false))
    }
}

impl fmt::Display for ScanCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanCriterion::Validity => "PSD",
            ScanCriterion::Ppt => "PPT",
            ScanCriterion::Ccn => "CCN",
            ScanCriterion::Theorem1 => "Theorem1",
        })
    }
}

impl FromStr for ScanCriterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "psd" | "validity" | "valid" => Ok(ScanCriterion::Validity),
            "ppt" => Ok(ScanCriterion::Ppt),
            "ccn" | "realignment" => Ok(ScanCriterion::Ccn),
            "theorem1" | "thm1" => Ok(ScanCriterion::Theorem1),
            _ => Err(Error::UnknownCriterion(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    fn along(self, p: FamilyPoint) -> f64 {
        match self {
            Axis::X => p.x,
            Axis::Y => p.y,
        }
    }

    fn across(self, p: FamilyPoint) -> f64 {
        match self {
            Axis::X => p.y,
            Axis::Y => p.x,
        }
    }

    fn point(self, along: f64, fixed: f64) -> FamilyPoint {
        match self {
            Axis::X => FamilyPoint::new(along, fixed),
            Axis::Y => FamilyPoint::new(fixed, along),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            _ => Err(Error::Parse(format!("unknown axis `{s}`"))),
        }
    }
}

/// A transition of a predicate along `axis` at `fixed` on the other axis,
/// bracketed by `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryEstimate {
    pub criterion: ScanCriterion,
    pub axis: Axis,
    pub fixed: f64,
    pub lo: f64,
    pub hi: f64,
}

impl BoundaryEstimate {
    pub fn value(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }
}

/// Locates the first change of the criterion's predicate along `axis`,
/// using the records whose other coordinate is closest to `fixed`.
pub fn boundary_estimate(
    records: &[ScanRecord],
    criterion: ScanCriterion,
    axis: Axis,
    fixed: f64,
) -> Result<BoundaryEstimate> {
    let nearest = records
        .iter()
        .map(|r| (axis.across(r.point) - fixed).abs())
        .min_by(f64::total_cmp)
        .ok_or(Error::NoTransition)?;
    let line_tol = nearest + 1e-12 * fixed.abs().max(1.0);
    let mut line: Vec<(f64, bool, f64)> = records
        .iter()
        .filter(|r| (axis.across(r.point) - fixed).abs() <= line_tol)
        .filter_map(|r| criterion.holds_on(r).map(|h| (axis.along(r.point), h, axis.across(r.point))))
        .collect();
    line.sort_by(|a, b| a.0.total_cmp(&b.0));
    let pair = line.windows(2).find(|w| w[0].1 != w[1].1).ok_or(Error::NoTransition)?;
    Ok(BoundaryEstimate { criterion, axis, fixed: pair[0].2, lo: pair[0].0, hi: pair[1].0 })
}

/// Refines a boundary by bisection on the predicate between `lo` and `hi`,
/// which must disagree.
#[allow(clippy::too_many_arguments)]
pub fn bisect_boundary(
    family: FamilyFn,
    criterion: ScanCriterion,
    axis: Axis,
    fixed: f64,
    mut lo: f64,
    mut hi: f64,
    iterations: usize,
    tol: &Tolerance,
) -> Result<BoundaryEstimate> {
    let at_lo = criterion.holds_at(family, axis.point(lo, fixed), tol)?;
    let at_hi = criterion.holds_at(family, axis.point(hi, fixed), tol)?;
    if at_lo == at_hi {
        return Err(Error::NoTransition);
    }
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if criterion.holds_at(family, axis.point(mid, fixed), tol)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(BoundaryEstimate { criterion, axis, fixed, lo, hi })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RegionCounts {
    pub entangled: usize,
    pub separable: usize,
    pub invalid: usize,
    pub not_applicable: usize,
}

impl RegionCounts {
    pub fn total(&self) -> usize {
        self.entangled + self.separable + self.invalid + self.not_applicable
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionSummary {
    pub criterion: ScanCriterion,
    pub counts: RegionCounts,
    pub boundary_estimates: Vec<BoundaryEstimate>,
}

/// Counts verdicts and collects one boundary estimate per grid line.
///
/// Boundaries run along y (one per x column) unless the grid is a single
/// column, in which case they run along x.
pub fn summarize(records: &[ScanRecord], criterion: ScanCriterion) -> RegionSummary {
    let mut counts = RegionCounts::default();
    for r in records {
        match (criterion, criterion.report(r)) {
            (ScanCriterion::Validity, _) if r.valid => counts.separable += 1,
            (_, _) if !r.valid => counts.invalid += 1,
            (_, Some(rep)) => match rep.verdict {
                Verdict::Entangled => counts.entangled += 1,
                Verdict::Separable => counts.separable += 1,
                Verdict::NotApplicable => counts.not_applicable += 1,
            },
            (_, None) => counts.invalid += 1,
        }
    }

    let mut xs: Vec<f64> = records.iter().map(|r| r.point.x).collect();
    xs.dedup();
    let mut ys: Vec<f64> = records.iter().map(|r| r.point.y).collect();
    ys.sort_by(f64::total_cmp);
    ys.dedup();
    let (axis, lines) = if ys.len() > 1 { (Axis::Y, xs) } else { (Axis::X, ys) };
    let boundary_estimates =
        lines.iter().filter_map(|&fixed| boundary_estimate(records, criterion, axis, fixed).ok()).collect();
    RegionSummary { criterion, counts, boundary_estimates }
}
