use num_complex::Complex64;

use super::{ppt_spectrum, Criterion, CriterionReport, Verdict};
use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigen, hermitian_eigenvalues, Matrix4, Tolerance};
use crate::states::XState;

/// Closed-form concurrence of an X-state:
/// `2·max(0, |ρ14| - √(ρ22ρ33), |ρ23| - √(ρ11ρ44))`.
pub fn concurrence(s: &XState, tol: &Tolerance) -> Result<f64> {
    s.validate(tol).map_err(Error::invalid)?;
    let a = s.rho14.norm() - (s.rho22 * s.rho33).max(0.0).sqrt();
    let b = s.rho23.norm() - (s.rho11 * s.rho44).max(0.0).sqrt();
    Ok((2.0 * a.max(b).max(0.0)).min(1.0))
}

pub fn concurrence_verdict(s: &XState, tol: &Tolerance) -> Result<CriterionReport> {
    let branch = ppt_spectrum(s, tol)?.negative_branch;
    let c = concurrence(s, tol)?;
    let verdict = if c > tol.eps_psd { Verdict::Entangled } else { Verdict::Separable };
    Ok(CriterionReport::new(Criterion::Concurrence, verdict, c, 0.0, branch))
}

/// Wootters concurrence of an arbitrary two-qubit density matrix, from the
/// spectrum of `√ρ ρ̃ √ρ` with `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`.
///
/// Works on any Hermitian input and does not use the X structure, so it
/// serves as an oracle for [`concurrence`]. Square roots of near-zero
/// eigenvalues limit its accuracy to roughly `1e-8`.
pub fn wootters_concurrence(m: &Matrix4, tol: &Tolerance) -> Result<f64> {
    let eig = hermitian_eigen(m, tol)?;
    let mut root = Matrix4::zero();
    for k in 0..4 {
        root[(k, k)] = Complex64::new(eig.values[k].max(0.0).sqrt(), 0.0);
    }
    let sqrt_rho = eig.vectors * root * eig.vectors.adjoint();

    let flip =
        Matrix4::from_real([[0.0, 0.0, 0.0, -1.0], [0.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0]]);
    let tilde = flip * m.conj() * flip;
    let r = sqrt_rho * tilde * sqrt_rho;
    let r = (r + r.adjoint()).scale(Complex64::new(0.5, 0.0));

    let mu = hermitian_eigenvalues(&r, tol)?;
    let l: Vec<f64> = mu.iter().rev().map(|v| v.max(0.0).sqrt()).collect();
    Ok((l[0] - l[1] - l[2] - l[3]).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::FamilyPoint;
    use approx::assert_abs_diff_eq;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn reference_values() {
        assert_eq!(concurrence(&XState::bell_phi_plus(), &tol()).unwrap(), 1.0);
        assert_eq!(concurrence(&XState::maximally_mixed(), &tol()).unwrap(), 0.0);
        assert_abs_diff_eq!(concurrence(&XState::werner(0.5).unwrap(), &tol()).unwrap(), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn wootters_matches_closed_form() {
        let cases = [
            XState::bell_phi_plus(),
            XState::maximally_mixed(),
            XState::werner(0.5).unwrap(),
            XState::rho1(FamilyPoint::new(0.1, 0.24)),
            XState::new(
                [0.3949407129162019, 0.5922363751276989, 0.011504765988698002, 0.0013181459674011687],
                Complex64::new(0.00931450000720884, 0.018300753841606208),
                Complex64::new(0.05321975422237811, -0.022500951188133115),
            ),
        ];
        for s in cases {
            let closed = concurrence(&s, &tol()).unwrap();
            let oracle = wootters_concurrence(&s.to_matrix(), &tol()).unwrap();
            assert_abs_diff_eq!(closed, oracle, epsilon = 1e-7);
        }
        // numpy/scipy reference for the complex case above.
        let s = cases[4];
        assert_abs_diff_eq!(concurrence(&s, &tol()).unwrap(), 0.06992898435207257, epsilon = 1e-14);
    }

    #[test]
    fn verdict_follows_threshold() {
        let r = concurrence_verdict(&XState::werner(0.5).unwrap(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        let r = concurrence_verdict(&XState::werner(1.0 / 3.0).unwrap(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
    }
}
