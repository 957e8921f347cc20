//! JSON state files.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"diag": [0.35, 0.25, 0.25, 0.15], "rho14": {"re": 0.1, "im": 0.0}, "rho23": {"re": 0.23, "im": 0.0}}
//! {"matrix": [[{"re": 0.25, "im": 0.0}, ...], ...]}
//! ```
//!
//! The writer emits the X form whenever the matrix is X-shaped.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::XState;
use crate::error::{Error, Result};
use crate::numerics::{Matrix4, Tolerance};

/// `{"re": _, "im": _}` as it appears in state files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for WireComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<WireComplex> for Complex64 {
    fn from(z: WireComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// On-disk representation of a state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    X { diag: [f64; 4], rho14: WireComplex, rho23: WireComplex },
    Matrix { matrix: [[WireComplex; 4]; 4] },
}

/// A parsed state file: either already in X form or a dense matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateInput {
    X(XState),
    Matrix(Matrix4),
}

impl StateInput {
    /// Resolves to an X-state, extracting it from a dense matrix if needed.
    pub fn into_x_state(self, tol: &Tolerance) -> Result<XState> {
        match self {
            StateInput::X(s) => Ok(s),
            StateInput::Matrix(m) => XState::from_matrix(&m, tol),
        }
    }
}

impl From<StateFile> for StateInput {
    fn from(file: StateFile) -> Self {
        match file {
            StateFile::X { diag, rho14, rho23 } => StateInput::X(XState::new(diag, rho14.into(), rho23.into())),
            StateFile::Matrix { matrix } => {
                let mut m = Matrix4::zero();
                for (i, row) in matrix.iter().enumerate() {
                    for (j, &z) in row.iter().enumerate() {
                        m[(i, j)] = z.into();
                    }
                }
                StateInput::Matrix(m)
            }
        }
    }
}

impl From<XState> for StateFile {
    fn from(s: XState) -> Self {
        StateFile::X { diag: s.diag(), rho14: s.rho14.into(), rho23: s.rho23.into() }
    }
}

impl TryFrom<StateFile> for XState {
    type Error = Error;

    fn try_from(file: StateFile) -> Result<Self> {
        StateInput::from(file).into_x_state(&Tolerance::default())
    }
}

/// Parses a state file from JSON text.
pub fn read_state(json: &str) -> Result<StateInput> {
    serde_json::from_str::<StateFile>(json).map(StateInput::from).map_err(|e| Error::Parse(e.to_string()))
}

/// Serializes an X-state in the compact X form.
pub fn write_state(s: &XState) -> String {
    serde_json::to_string_pretty(&StateFile::from(*s)).expect("state serialization cannot fail")
}

/// Serializes a dense matrix, using the X form when the matrix qualifies.
pub fn write_matrix(m: &Matrix4, tol: &Tolerance) -> String {
    if let Ok(s) = XState::from_matrix(m, tol) {
        return write_state(&s);
    }
    let matrix = std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)].into()));
    serde_json::to_string_pretty(&StateFile::Matrix { matrix }).expect("state serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::FamilyPoint;

    #[test]
    fn reads_x_form() {
        let json =
            r#"{"diag": [0.35, 0.25, 0.25, 0.15], "rho14": {"re": 0.1, "im": 0.0}, "rho23": {"re": 0.23, "im": 0.0}}"#;
        let s = read_state(json).unwrap().into_x_state(&Tolerance::default()).unwrap();
        assert_eq!(s, XState::rho1(FamilyPoint::new(0.1, 0.23)));
    }

    #[test]
    fn reads_matrix_form() {
        let z = r#"{"re": 0.0, "im": 0.0}"#;
        let q = r#"{"re": 0.25, "im": 0.0}"#;
        let row = |k: usize| {
            let cells: Vec<&str> = (0..4).map(|j| if j == k { q } else { z }).collect();
            format!("[{}]", cells.join(","))
        };
        let json = format!(r#"{{"matrix": [{},{},{},{}]}}"#, row(0), row(1), row(2), row(3));
        let input = read_state(&json).unwrap();
        assert!(matches!(input, StateInput::Matrix(_)));
        assert_eq!(input.into_x_state(&Tolerance::default()).unwrap(), XState::maximally_mixed());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(read_state("{"), Err(Error::Parse(_))));
        assert!(matches!(read_state(r#"{"diag": [1, 0, 0]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn writer_prefers_x_form() {
        let tol = Tolerance::default();
        let s = XState::new([0.4, 0.1, 0.2, 0.3], Complex64::new(0.1, -0.2), Complex64::new(0.05, 0.01));
        let text = write_matrix(&s.to_matrix(), &tol);
        assert!(text.contains("\"diag\""));
        assert_eq!(read_state(&text).unwrap(), StateInput::X(s));

        let mut m = s.to_matrix();
        m[(0, 1)] = Complex64::new(0.01, 0.0);
        m[(1, 0)] = Complex64::new(0.01, 0.0);
        let text = write_matrix(&m, &tol);
        assert!(text.contains("\"matrix\""));
        assert_eq!(read_state(&text).unwrap(), StateInput::Matrix(m));
    }
}
