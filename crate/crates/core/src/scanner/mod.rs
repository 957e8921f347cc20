//! Grid scans over two-parameter state families.
//!
//! Every grid point is classified under PPT, realignment and the modified
//! criterion. Points outside the physical region are kept with
//! `valid = false` so that the region boundary itself shows up in the
//! output. Boundaries are located either from a scanned grid (bracket
//! midpoints, [`boundary_estimate`]) or by bisection on the verdict
//! predicate ([`bisect_boundary`]).

mod boundary;
mod csv_out;
mod grid;

pub use boundary::{
    bisect_boundary, boundary_estimate, summarize, Axis, BoundaryEstimate, RegionCounts, RegionSummary, ScanCriterion,
};
pub use csv_out::{format_sig, write_csv, CSV_HEADER};
pub use grid::{axis_values, GridSpec, MAX_AXIS_POINTS};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{
    ccn_verdict, concurrence, corollary1_threshold, ppt_spectrum, ppt_verdict, realignment_breakdown, theorem1_verdict,
    CriterionReport, NegativeBranch,
};
use crate::error::{Error, Result};
use crate::numerics::Tolerance;
use crate::states::{FamilyPoint, XState};

/// Constructor for one member of a family.
pub type FamilyFn = fn(FamilyPoint) -> XState;

/// Named state families available to the scanner.
#[derive(Debug, Clone)]
pub struct FamilyRegistry {
    families: BTreeMap<String, FamilyFn>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut r = Self { families: BTreeMap::new() };
        r.register("rho1", XState::rho1);
        r
    }
}

impl FamilyRegistry {
    pub fn register(&mut self, name: &str, family: FamilyFn) {
        self.families.insert(name.to_string(), family);
    }

    pub fn get(&self, name: &str) -> Result<FamilyFn> {
        self.families.get(name).copied().ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.families.keys().map(String::as_str)
    }
}

/// Classification of one grid point. The criterion fields are `Some`
/// exactly when `valid` is true.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub point: FamilyPoint,
    pub valid: bool,
    pub ppt: Option<CriterionReport>,
    pub ppt_min_eigenvalue: Option<f64>,
    pub ccn: Option<CriterionReport>,
    pub theorem1: Option<CriterionReport>,
    pub concurrence: Option<f64>,
}

/// Classifies a single point of `family`.
pub fn classify(family: FamilyFn, point: FamilyPoint, tol: &Tolerance) -> Result<ScanRecord> {
    let s = family(point);
    if s.validate(tol).is_err() {
        return Ok(ScanRecord {
            point,
            valid: false,
            ppt: None,
            ppt_min_eigenvalue: None,
            ccn: None,
            theorem1: None,
            concurrence: None,
        });
    }
    Ok(ScanRecord {
        point,
        valid: true,
        ppt: Some(ppt_verdict(&s, tol)?),
        ppt_min_eigenvalue: Some(ppt_spectrum(&s, tol)?.min()),
        ccn: Some(ccn_verdict(&s, tol)?),
        theorem1: Some(theorem1_verdict(&s, tol)?),
        concurrence: Some(concurrence(&s, tol)?),
    })
}

fn scan_impl(family: FamilyFn, grid: &GridSpec, tol: &Tolerance, parallel: bool) -> Result<Vec<ScanRecord>> {
    let xs = grid.x_values();
    let ys = grid.y_values();
    let row = |&x: &f64| -> Result<Vec<ScanRecord>> {
        ys.iter().map(|&y| classify(family, FamilyPoint::new(x, y), tol)).collect()
    };
    let rows: Result<Vec<Vec<ScanRecord>>> =
        if parallel { xs.par_iter().map(row).collect() } else { xs.iter().map(row).collect() };
    Ok(rows?.into_iter().flatten().collect())
}

/// Scans `grid` for the registered family `family`, in row-major order
/// (x outer, y inner). Rows are evaluated in parallel; the output order does
/// not depend on the number of workers.
pub fn scan(family: &str, grid: &GridSpec, tol: &Tolerance) -> Result<Vec<ScanRecord>> {
    let f = FamilyRegistry::default().get(family)?;
    scan_impl(f, grid, tol, true)
}

/// Single-threaded [`scan`].
pub fn scan_sequential(family: &str, grid: &GridSpec, tol: &Tolerance) -> Result<Vec<ScanRecord>> {
    let f = FamilyRegistry::default().get(family)?;
    scan_impl(f, grid, tol, false)
}

/// Same as [`scan`] for a family from a custom registry.
pub fn scan_family(family: FamilyFn, grid: &GridSpec, tol: &Tolerance) -> Result<Vec<ScanRecord>> {
    scan_impl(family, grid, tol, true)
}

/// Coherence-free part of `‖R(ρ1)‖₁`: the trace norm of the realigned
/// population block `[[0.35, 0.25], [0.25, 0.15]]`, `√0.29`.
pub fn rho1_diagonal_trace_norm(tol: &Tolerance) -> Result<f64> {
    Ok(realignment_breakdown(&XState::rho1(FamilyPoint::new(0.0, 0.0)), tol)?.trace_norm)
}

/// Smallest `y` (with `y > x`) at which the modified criterion holds for the
/// worked family: `(√2·(0.0625 - x²)^{1/4} - √0.29) / 2`.
pub fn rho1_threshold_y(x: f64, tol: &Tolerance) -> Result<f64> {
    if !x.is_finite() || x.abs() >= 0.25 {
        return Err(Error::Domain(format!("threshold curve needs |x| < 0.25, got {x}")));
    }
    // The λ1 < 0 threshold does not involve ρ23, so y = 0 is as good as any.
    let bound = corollary1_threshold(&XState::rho1(FamilyPoint::new(x, 0.0)), NegativeBranch::Lambda1Negative, tol)?;
    Ok((bound - rho1_diagonal_trace_norm(tol)?) / 2.0)
}

/// Samples the modified-criterion threshold `y = f(x)` over
/// `[x_min, x_max]`. Only the `rho1` family has a closed-form curve.
pub fn threshold_curve(family: &str, x_min: f64, x_max: f64, step: f64, tol: &Tolerance) -> Result<Vec<(f64, f64)>> {
    FamilyRegistry::default().get(family)?;
    if family != "rho1" {
        return Err(Error::Domain(format!("no threshold curve for family `{family}`")));
    }
    axis_values(x_min, x_max, step)?.into_iter().map(|x| rho1_threshold_y(x, tol).map(|y| (x, y))).collect()
}
