//! Fixed-size complex linear algebra: a 4×4 matrix type, a Hermitian
//! eigensolver and singular values.
//!
//! Everything here is dependency-light and exists mainly as an independent
//! oracle for the closed forms used by [`crate::criteria`].

mod jacobi;
mod matrix;

pub use jacobi::HermitianEigen;
pub use matrix::{ComplexScalar, Matrix4};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical thresholds used by every comparison in the library.
///
/// * `eps_herm`: Hermiticity and unit-trace checks.
/// * `eps_psd`: sign decisions on eigenvalues and criterion margins.
/// * `eps_eq`: agreement between a closed form and its oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_herm: f64,
    pub eps_psd: f64,
    pub eps_eq: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps_herm: 1e-10, eps_psd: 1e-10, eps_eq: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps_herm: f64, eps_psd: f64, eps_eq: f64) -> Result<Self> {
        let tol = Self { eps_herm, eps_psd, eps_eq };
        tol.check()?;
        Ok(tol)
    }

    /// Fails unless all three thresholds are finite and strictly positive.
    pub fn check(&self) -> Result<()> {
        for (name, v) in [("eps_herm", self.eps_herm), ("eps_psd", self.eps_psd), ("eps_eq", self.eps_eq)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        Ok(())
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen(m: &Matrix4, tol: &Tolerance) -> Result<HermitianEigen> {
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix"));
    }
    let deviation = m.hermitian_deviation();
    if deviation > tol.eps_herm {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(jacobi::jacobi_eigen(m))
}

/// Real spectrum of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &Matrix4, tol: &Tolerance) -> Result<[f64; 4]> {
    hermitian_eigen(m, tol).map(|e| e.values)
}

/// Singular values, descending, by one-sided Jacobi on the columns of `m`.
pub fn singular_values(m: &Matrix4) -> [f64; 4] {
    let mut out = jacobi::one_sided_jacobi(m);
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// `Tr √(m·m†)`, the sum of the singular values.
pub fn trace_norm(m: &Matrix4) -> f64 {
    singular_values(m).iter().sum()
}
