use serde::{Deserialize, Serialize};

use super::{Criterion, CriterionReport, Verdict};
use crate::error::{Error, Result};
use crate::numerics::{Matrix4, Tolerance};
use crate::states::{block_eigenvalues, XState};

/// Which eigenvalue of the partial transpose is negative, if any.
///
/// For a valid two-qubit state at most one can be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NegativeBranch {
    None,
    Lambda1Negative,
    Lambda3Negative,
}

/// Eigenvalues of `ρ^{T_B}` for an X-state, grouped by block:
/// `lambda1 <= lambda2` come from `(ρ11, ρ44, |ρ23|)`, `lambda3 <= lambda4`
/// from `(ρ22, ρ33, |ρ14|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PptSpectrum {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    pub lambda4: f64,
    pub negative_branch: NegativeBranch,
}

impl PptSpectrum {
    pub fn values(&self) -> [f64; 4] {
        [self.lambda1, self.lambda2, self.lambda3, self.lambda4]
    }

    pub fn min(&self) -> f64 {
        self.lambda1.min(self.lambda3)
    }
}

/// Transposes each 2×2 block in place (transpose on the second qubit).
pub fn partial_transpose(m: &Matrix4) -> Matrix4 {
    let mut out = Matrix4::zero();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    out[(2 * a + d, 2 * c + b)] = m[(2 * a + b, 2 * c + d)];
                }
            }
        }
    }
    out
}

/// Closed-form spectrum of the partial transpose.
///
/// The branch is decided on the products: `Lambda3Negative` when
/// `ρ22ρ33 < |ρ14|² - eps_psd`, `Lambda1Negative` when
/// `ρ11ρ44 < |ρ23|² - eps_psd`.
pub fn ppt_spectrum(s: &XState, tol: &Tolerance) -> Result<PptSpectrum> {
    s.validate(tol).map_err(Error::invalid)?;
    let (lambda1, lambda2) = block_eigenvalues(s.rho11, s.rho44, s.rho23.norm_sqr());
    let (lambda3, lambda4) = block_eigenvalues(s.rho22, s.rho33, s.rho14.norm_sqr());
    let negative_branch = if s.rho22 * s.rho33 < s.rho14.norm_sqr() - tol.eps_psd {
        NegativeBranch::Lambda3Negative
    } else if s.rho11 * s.rho44 < s.rho23.norm_sqr() - tol.eps_psd {
        NegativeBranch::Lambda1Negative
    } else {
        NegativeBranch::None
    };
    Ok(PptSpectrum { lambda1, lambda2, lambda3, lambda4, negative_branch })
}

/// PPT verdict. `lhs`/`rhs` are the coherence and population products of
/// the violated condition (`|ρ14|²` vs `ρ22ρ33`, or `|ρ23|²` vs `ρ11ρ44`);
/// without a violation, the pair closest to violating.
pub fn ppt_verdict(s: &XState, tol: &Tolerance) -> Result<CriterionReport> {
    let spec = ppt_spectrum(s, tol)?;
    let inner = (s.rho14.norm_sqr(), s.rho22 * s.rho33);
    let outer = (s.rho23.norm_sqr(), s.rho11 * s.rho44);
    let ((lhs, rhs), verdict) = match spec.negative_branch {
        NegativeBranch::Lambda3Negative => (inner, Verdict::Entangled),
        NegativeBranch::Lambda1Negative => (outer, Verdict::Entangled),
        NegativeBranch::None => {
            let pick = if inner.0 - inner.1 >= outer.0 - outer.1 { inner } else { outer };
            (pick, Verdict::Separable)
        }
    };
    Ok(CriterionReport::new(Criterion::Ppt, verdict, lhs, rhs, spec.negative_branch))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::hermitian_eigenvalues;
    use crate::states::FamilyPoint;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn diagonal_is_fixed_point() {
        let m = Matrix4::diagonal([0.1, 0.2, 0.3, 0.4]);
        assert_eq!(partial_transpose(&m), m);
    }

    #[test]
    fn rho1_partial_transpose_swaps_coherences() {
        let m = XState::rho1(FamilyPoint::new(0.1, 0.2)).to_matrix();
        let want = Matrix4::from_real([
            [0.35, 0.0, 0.0, 0.2],
            [0.0, 0.25, 0.1, 0.0],
            [0.0, 0.1, 0.25, 0.0],
            [0.2, 0.0, 0.0, 0.15],
        ]);
        assert_eq!(partial_transpose(&m), want);
    }

    #[test]
    fn involution() {
        let s = XState::new(
            [0.4, 0.1, 0.2, 0.3],
            num_complex::Complex64::new(0.1, 0.05),
            num_complex::Complex64::new(0.02, -0.1),
        );
        let mut m = s.to_matrix();
        m[(0, 1)] = num_complex::Complex64::new(0.03, 0.07);
        m[(1, 0)] = m[(0, 1)].conj();
        assert_eq!(partial_transpose(&partial_transpose(&m)), m);
    }

    #[test]
    fn bell_partial_transpose_has_minus_half() {
        let pt = partial_transpose(&XState::bell_phi_plus().to_matrix());
        let ev = hermitian_eigenvalues(&pt, &tol()).unwrap();
        assert_abs_diff_eq!(ev[0], -0.5, epsilon = 1e-14);
    }

    #[test]
    fn rho1_spectrum_and_branch() {
        let spec = ppt_spectrum(&XState::rho1(FamilyPoint::new(0.1, 0.24)), &tol()).unwrap();
        for (g, w) in spec.values().iter().zip([-0.01, 0.51, 0.15, 0.35]) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-15);
        }
        assert_eq!(spec.negative_branch, NegativeBranch::Lambda1Negative);
    }

    #[test]
    fn werner_branches() {
        let spec = ppt_spectrum(&XState::werner(0.5).unwrap(), &tol()).unwrap();
        assert_eq!(spec.negative_branch, NegativeBranch::Lambda3Negative);
        let spec = ppt_spectrum(&XState::maximally_mixed(), &tol()).unwrap();
        assert_eq!(spec.values(), [0.25; 4]);
        assert_eq!(spec.negative_branch, NegativeBranch::None);
    }

    #[test]
    fn verdicts() {
        let r = ppt_verdict(&XState::rho1(FamilyPoint::new(0.1, 0.24)), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        assert_abs_diff_eq!(r.lhs, 0.0576, epsilon = 1e-16);
        assert_abs_diff_eq!(r.rhs, 0.0525, epsilon = 1e-16);
        assert_eq!(r.margin, r.lhs - r.rhs);

        for x in [0.0, 0.05, 0.1, 0.2, 0.229] {
            let r = ppt_verdict(&XState::rho1(FamilyPoint::new(x, 0.20)), &tol()).unwrap();
            assert_eq!(r.verdict, Verdict::Separable, "x = {x}");
            let r = ppt_verdict(&XState::rho1(FamilyPoint::new(x, 0.24)), &tol()).unwrap();
            assert_eq!(r.verdict, Verdict::Entangled, "x = {x}");
        }

        let r = ppt_verdict(&XState::werner(1.0 / 3.0).unwrap(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
    }

    #[test]
    fn invalid_state_is_rejected() {
        let err = ppt_spectrum(&XState::rho1(FamilyPoint::new(0.24, 0.1)), &tol()).unwrap_err();
        assert!(matches!(err, Error::InvalidState(_)));
    }
}
