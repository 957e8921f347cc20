use serde::{Deserialize, Serialize};

use super::{ppt_spectrum, Criterion, CriterionReport, Verdict};
use crate::error::{Error, Result};
use crate::numerics::{Matrix4, Tolerance};
use crate::states::XState;

/// Radicands in `(-CLAMP_FLOOR, 0)` are rounding noise and clamp to zero.
const CLAMP_FLOOR: f64 = 1e-12;

/// Realignment `R(ρ)`: the rows are the row-stacked blocks `A`, `B`, `B†`,
/// `C` of `ρ = [[A, B], [B†, C]]`.
pub fn realign(m: &Matrix4) -> Matrix4 {
    let mut out = Matrix4::zero();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    out[(2 * a + c, 2 * b + d)] = m[(2 * a + b, 2 * c + d)];
                }
            }
        }
    }
    out
}

/// Closed-form singular values of the realigned X-state.
///
/// `s1 >= s2` come from the population block `[[ρ11, ρ22], [ρ33, ρ44]]`
/// with `s1² + s2² = f`; `s3 >= s4` from the coherence block
/// `[[ρ14, ρ23], [ρ23*, ρ14*]]` with `s3² + s4² = g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealignmentBreakdown {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    pub s4: f64,
    pub f: f64,
    pub g: f64,
    /// `‖R(ρ)‖₁ = s1 + s2 + s3 + s4`.
    pub trace_norm: f64,
    /// Set when a radicand slightly below zero had to be clamped.
    pub clamped: bool,
}

impl RealignmentBreakdown {
    pub fn singular_values(&self) -> [f64; 4] {
        [self.s1, self.s2, self.s3, self.s4]
    }

    /// `P = s1 + s2`.
    pub fn p(&self) -> f64 {
        self.s1 + self.s2
    }

    /// `Q = s3 + s4`.
    pub fn q(&self) -> f64 {
        self.s3 + self.s4
    }
}

fn clamp_radicand(v: f64, clamped: &mut bool) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else if v > -CLAMP_FLOOR {
        *clamped = true;
        Ok(0.0)
    } else {
        Err(Error::NegativeRadicand { value: v })
    }
}

/// `(1/√2)·√(t ± √((t - 2u + 2v)(t + 2u - 2v)))`, larger root first.
fn pair(t: f64, u: f64, v: f64, clamped: &mut bool) -> Result<(f64, f64)> {
    let inner = clamp_radicand((t - 2.0 * u + 2.0 * v) * (t + 2.0 * u - 2.0 * v), clamped)?;
    let r = inner.sqrt();
    let hi = (t + r).sqrt() / std::f64::consts::SQRT_2;
    // The small root from the product `hi·lo = |u - v|`; `t - r` cancels.
    let lo = if hi > 0.0 { (u - v).abs() / hi } else { 0.0 };
    Ok((hi, lo))
}

pub fn realignment_breakdown(s: &XState, tol: &Tolerance) -> Result<RealignmentBreakdown> {
    s.validate(tol).map_err(Error::invalid)?;
    let a14 = s.rho14.norm_sqr();
    let a23 = s.rho23.norm_sqr();
    let f = s.diag().iter().map(|d| d * d).sum::<f64>();
    let g = 2.0 * a14 + 2.0 * a23;
    let mut clamped = false;
    let (s1, s2) = pair(f, s.rho11 * s.rho44, s.rho22 * s.rho33, &mut clamped)?;
    let (s3, s4) = pair(g, a14, a23, &mut clamped)?;
    Ok(RealignmentBreakdown { s1, s2, s3, s4, f, g, trace_norm: s1 + s2 + s3 + s4, clamped })
}

/// Realignment criterion: entangled when `‖R(ρ)‖₁ > 1 + eps_psd`.
pub fn ccn_verdict(s: &XState, tol: &Tolerance) -> Result<CriterionReport> {
    let branch = ppt_spectrum(s, tol)?.negative_branch;
    let norm = realignment_breakdown(s, tol)?.trace_norm;
    let verdict = if norm > 1.0 + tol.eps_psd { Verdict::Entangled } else { Verdict::Separable };
    Ok(CriterionReport::new(Criterion::Ccn, verdict, norm, 1.0, branch))
}
