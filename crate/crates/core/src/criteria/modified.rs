//! The modified realignment criterion.
//!
//! With `λ3 < 0` the state is entangled iff
//! `‖R(ρ)‖₁ >= 2 (λ1 λ2)^{1/4} (λ3 + λ4)^{1/2}`; with `λ1 < 0` the roles of
//! the two eigenvalue pairs swap. The corollary form evaluates the same
//! bound directly from the matrix elements.

use super::{ppt_spectrum, realignment_breakdown, Criterion, CriterionReport, NegativeBranch, PptSpectrum, Verdict};
use crate::error::{Error, Result};
use crate::numerics::Tolerance;
use crate::states::XState;

/// `2·prod^{1/4}·sum^{1/2}`, with `prod` checked against `-eps_psd`.
fn bound(prod: f64, sum: f64, tol: &Tolerance) -> Result<f64> {
    if prod < -tol.eps_psd {
        return Err(Error::NegativeRadicand { value: prod });
    }
    Ok(2.0 * prod.max(0.0).sqrt().sqrt() * sum.max(0.0).sqrt())
}

/// Threshold in eigenvalue form.
pub fn theorem1_threshold(spec: &PptSpectrum, tol: &Tolerance) -> Result<f64> {
    match spec.negative_branch {
        NegativeBranch::Lambda3Negative => bound(spec.lambda1 * spec.lambda2, spec.lambda3 + spec.lambda4, tol),
        NegativeBranch::Lambda1Negative => bound(spec.lambda3 * spec.lambda4, spec.lambda1 + spec.lambda2, tol),
        NegativeBranch::None => Err(Error::BranchUndefined),
    }
}

/// Threshold evaluated from the matrix elements, using
/// `Δ1 = √((ρ11 - ρ44)² + 4|ρ23|²)` or `Δ2 = √((ρ22 - ρ33)² + 4|ρ14|²)`.
pub fn corollary1_threshold(s: &XState, branch: NegativeBranch, tol: &Tolerance) -> Result<f64> {
    match branch {
        NegativeBranch::Lambda3Negative => {
            let a = s.rho11 + s.rho44;
            let delta1 = ((s.rho11 - s.rho44).powi(2) + 4.0 * s.rho23.norm_sqr()).sqrt();
            bound((0.5 * a - 0.5 * delta1) * (0.5 * a + 0.5 * delta1), s.rho22 + s.rho33, tol)
        }
        NegativeBranch::Lambda1Negative => {
            let b = s.rho22 + s.rho33;
            let delta2 = ((s.rho22 - s.rho33).powi(2) + 4.0 * s.rho14.norm_sqr()).sqrt();
            bound((0.5 * b - 0.5 * delta2) * (0.5 * b + 0.5 * delta2), s.rho11 + s.rho44, tol)
        }
        NegativeBranch::None => Err(Error::BranchUndefined),
    }
}

fn verdict_against(
    criterion: Criterion,
    norm: f64,
    threshold: Option<f64>,
    branch: NegativeBranch,
    tol: &Tolerance,
) -> CriterionReport {
    match threshold {
        None => CriterionReport::new(criterion, Verdict::NotApplicable, norm, f64::NAN, branch),
        Some(t) => {
            let verdict = if norm >= t - tol.eps_psd { Verdict::Entangled } else { Verdict::Separable };
            CriterionReport::new(criterion, verdict, norm, t, branch)
        }
    }
}

/// Modified realignment verdict.
///
/// The branch comes from the partial-transpose sign test; without a
/// negative eigenvalue the verdict is `NotApplicable` (the state is
/// separable and no threshold is defined).
pub fn theorem1_verdict(s: &XState, tol: &Tolerance) -> Result<CriterionReport> {
    let spec = ppt_spectrum(s, tol)?;
    let norm = realignment_breakdown(s, tol)?.trace_norm;
    let threshold = match spec.negative_branch {
        NegativeBranch::None => None,
        _ => Some(theorem1_threshold(&spec, tol)?),
    };
    Ok(verdict_against(Criterion::Theorem1, norm, threshold, spec.negative_branch, tol))
}

/// Same decision as [`theorem1_verdict`], with the element-wise threshold.
pub fn corollary1_verdict(s: &XState, tol: &Tolerance) -> Result<CriterionReport> {
    let branch = ppt_spectrum(s, tol)?.negative_branch;
    let norm = realignment_breakdown(s, tol)?.trace_norm;
    let threshold = match branch {
        NegativeBranch::None => None,
        b => Some(corollary1_threshold(s, b, tol)?),
    };
    Ok(verdict_against(Criterion::Corollary1, norm, threshold, branch, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::FamilyPoint;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    // 2·0.0525^{1/4}·0.5^{1/2}, evaluated independently.
    const THRESHOLD_AT_X_01: f64 = 0.67694724277124;

    #[test]
    fn rho1_threshold_lambda1_branch() {
        let s = XState::rho1(FamilyPoint::new(0.1, 0.23));
        let spec = ppt_spectrum(&s, &tol()).unwrap();
        assert_eq!(spec.negative_branch, NegativeBranch::Lambda1Negative);
        assert_abs_diff_eq!(theorem1_threshold(&spec, &tol()).unwrap(), THRESHOLD_AT_X_01, epsilon = 1e-13);
        assert_abs_diff_eq!(
            corollary1_threshold(&s, NegativeBranch::Lambda1Negative, &tol()).unwrap(),
            THRESHOLD_AT_X_01,
            epsilon = 1e-13
        );
    }

    #[test]
    fn rho1_threshold_at_zero_x() {
        let spec = ppt_spectrum(&XState::rho1(FamilyPoint::new(0.0, 0.24)), &tol()).unwrap();
        let t = theorem1_threshold(&spec, &tol()).unwrap();
        assert_abs_diff_eq!(t, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        // √0.29 + 2·f(0) reproduces the same number.
        assert_abs_diff_eq!(0.29_f64.sqrt() + 2.0 * 0.0842951502365486, t, epsilon = 1e-14);
    }

    #[test]
    fn branch_none_is_undefined() {
        let spec = ppt_spectrum(&XState::maximally_mixed(), &tol()).unwrap();
        assert_eq!(theorem1_threshold(&spec, &tol()), Err(Error::BranchUndefined));
        assert_eq!(
            corollary1_threshold(&XState::maximally_mixed(), NegativeBranch::None, &tol()),
            Err(Error::BranchUndefined)
        );
    }

    #[test]
    fn werner_corollary_matches_theorem() {
        let w = XState::werner(0.5).unwrap();
        let spec = ppt_spectrum(&w, &tol()).unwrap();
        let t = theorem1_threshold(&spec, &tol()).unwrap();
        let c = corollary1_threshold(&w, spec.negative_branch, &tol()).unwrap();
        assert!((t - c).abs() <= 1e-12);
    }

    #[test]
    fn theorem1_catches_what_ccn_misses() {
        let r = theorem1_verdict(&XState::rho1(FamilyPoint::new(0.1, 0.23)), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        assert_abs_diff_eq!(r.lhs, 0.9985164807134503, epsilon = 1e-14);
        assert_abs_diff_eq!(r.rhs, THRESHOLD_AT_X_01, epsilon = 1e-13);

        let r = theorem1_verdict(&XState::rho1(FamilyPoint::new(0.1, 0.24)), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        assert_abs_diff_eq!(r.lhs, 1.0185164807134504, epsilon = 1e-14);
    }

    #[test]
    fn maximally_mixed_not_applicable() {
        let r = theorem1_verdict(&XState::maximally_mixed(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(r.rhs.is_nan());
        let r = corollary1_verdict(&XState::maximally_mixed(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn negative_product_is_rejected() {
        let spec = PptSpectrum {
            lambda1: -0.1,
            lambda2: 0.5,
            lambda3: -0.2,
            lambda4: 0.8,
            negative_branch: NegativeBranch::Lambda3Negative,
        };
        assert!(matches!(theorem1_threshold(&spec, &tol()), Err(Error::NegativeRadicand { .. })));
    }
}
