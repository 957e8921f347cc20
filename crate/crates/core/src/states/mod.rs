//! Two-qubit X-states: construction, validation and named references.
//!
//! An X-state has non-zero entries only on the diagonal and the
//! anti-diagonal of its 4×4 density matrix:
//!
//! ```text
//! ρ11  0    0    ρ14
//! 0    ρ22  ρ23  0
//! 0    ρ23* ρ33  0
//! ρ14* 0    0    ρ44
//! ```
//!
//! The matrix splits into two independent 2×2 blocks, so its spectrum (and
//! positivity) is available in closed form.

mod io;
mod sample;

pub use io::{read_state, write_matrix, write_state, StateFile, StateInput, WireComplex};
pub use sample::{random_x_state, sample_ensemble_state, SamplerParams};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Block, Error, Result};
use crate::numerics::{ComplexScalar, Matrix4, Tolerance};

/// The seven real parameters of a two-qubit X-state.
///
/// Serializes in the state-file X form (see [`StateFile`]).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "StateFile", try_from = "StateFile")]
pub struct XState {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: ComplexScalar,
    pub rho23: ComplexScalar,
}

/// Eigenvalues of the state itself, ascending.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateSpectrum {
    pub eigenvalues: [f64; 4],
}

impl StateSpectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// A point `(x, y)` of a two-parameter state family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyPoint {
    pub x: f64,
    pub y: f64,
}

impl FamilyPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Closed-form eigenvalues `(lower, upper)` of `[[a, z], [z*, b]]`.
pub(crate) fn block_eigenvalues(a: f64, b: f64, z_abs_sq: f64) -> (f64, f64) {
    let mean = 0.5 * (a + b);
    let half_gap = 0.5 * (a - b);
    let r = (half_gap * half_gap + z_abs_sq).sqrt();
    (mean - r, mean + r)
}

impl XState {
    pub fn new(diag: [f64; 4], rho14: ComplexScalar, rho23: ComplexScalar) -> Self {
        Self { rho11: diag[0], rho22: diag[1], rho33: diag[2], rho44: diag[3], rho14, rho23 }
    }

    pub fn diag(&self) -> [f64; 4] {
        [self.rho11, self.rho22, self.rho33, self.rho44]
    }

    pub fn trace(&self) -> f64 {
        self.rho11 + self.rho22 + self.rho33 + self.rho44
    }

    /// `I/4`.
    pub fn maximally_mixed() -> Self {
        Self::new([0.25; 4], Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Projector onto `(|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus() -> Self {
        Self::new([0.5, 0.0, 0.0, 0.5], Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Werner state `p·|Φ⁺⟩⟨Φ⁺| + (1 - p)·I/4`.
    pub fn werner(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("Werner mixing parameter {p} outside [0, 1]")));
        }
        let hi = (1.0 + p) / 4.0;
        let lo = (1.0 - p) / 4.0;
        Ok(Self::new([hi, lo, lo, hi], Complex64::new(p / 2.0, 0.0), Complex64::new(0.0, 0.0)))
    }

    /// The worked two-parameter family with diagonal `(0.35, 0.25, 0.25, 0.15)`
    /// and real coherences `ρ14 = x`, `ρ23 = y`. Construction never fails;
    /// use [`XState::validate`] to find out whether the point is physical.
    pub fn rho1(p: FamilyPoint) -> Self {
        Self::new([0.35, 0.25, 0.25, 0.15], Complex64::new(p.x, 0.0), Complex64::new(p.y, 0.0))
    }

    pub fn is_finite(&self) -> bool {
        self.diag().iter().all(|v| v.is_finite())
            && [self.rho14, self.rho23].iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Closed-form eigenvalues of the `(1,4)` and `(2,3)` blocks, each as
    /// `(lower, upper)`.
    pub fn block_spectra(&self) -> [(f64, f64); 2] {
        [
            block_eigenvalues(self.rho11, self.rho44, self.rho14.norm_sqr()),
            block_eigenvalues(self.rho22, self.rho33, self.rho23.norm_sqr()),
        ]
    }

    /// Checks unit trace and positivity, returning the state's spectrum.
    ///
    /// Eigenvalues in `(-eps_psd, 0)` are accepted; such states sit on the
    /// boundary of the physical region.
    pub fn validate(&self, tol: &Tolerance) -> Result<StateSpectrum> {
        if !self.is_finite() {
            return Err(Error::NonFinite("state parameters"));
        }
        let trace = self.trace();
        if (trace - 1.0).abs() > tol.eps_herm {
            return Err(Error::TraceViolation { trace });
        }
        let [(o_lo, o_hi), (i_lo, i_hi)] = self.block_spectra();
        let (value, block) = if o_lo <= i_lo { (o_lo, Block::Outer) } else { (i_lo, Block::Inner) };
        if value < -tol.eps_psd {
            return Err(Error::NegativeEigenvalue { value, block });
        }
        let mut eigenvalues = [o_lo, i_lo, i_hi, o_hi];
        eigenvalues.sort_by(f64::total_cmp);
        Ok(StateSpectrum { eigenvalues })
    }

    /// Dense matrix form; Hermitian by construction.
    pub fn to_matrix(&self) -> Matrix4 {
        let mut m = Matrix4::diagonal(self.diag());
        m[(0, 3)] = self.rho14;
        m[(3, 0)] = self.rho14.conj();
        m[(1, 2)] = self.rho23;
        m[(2, 1)] = self.rho23.conj();
        m
    }

    /// Extracts the X-state parameters from a dense matrix.
    ///
    /// Requires Hermiticity and unit trace within `eps_herm`, and every
    /// entry off the diagonal and anti-diagonal to be at most `eps_herm` in
    /// magnitude. Positivity is not checked here.
    pub fn from_matrix(m: &Matrix4, tol: &Tolerance) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite("matrix"));
        }
        let deviation = m.hermitian_deviation();
        if deviation > tol.eps_herm {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace().re;
        if (trace - 1.0).abs() > tol.eps_herm {
            return Err(Error::TraceViolation { trace });
        }
        let entries: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && i + j != 3 && m[(i, j)].norm() > tol.eps_herm)
            .collect();
        if !entries.is_empty() {
            return Err(Error::NotXShaped { entries });
        }
        Ok(Self::new([m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re], m[(0, 3)], m[(1, 2)]))
    }

    /// Copy with the coherence phases replaced; magnitudes are kept.
    pub fn with_phases(&self, phase14: f64, phase23: f64) -> Self {
        Self {
            rho14: Complex64::from_polar(self.rho14.norm(), phase14),
            rho23: Complex64::from_polar(self.rho23.norm(), phase23),
            ..*self
        }
    }
}
