use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |m(i,j) - conj(m(j,i))| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceViolation { trace: f64 },

    #[error("negative eigenvalue {value:e} in the {block} block")]
    NegativeEigenvalue { value: f64, block: Block },

    /// Entries outside the diagonal/anti-diagonal pattern, as zero-based `(row, col)`.
    #[error("matrix is not X-shaped: offending entries {entries:?}")]
    NotXShaped { entries: Vec<(usize, usize)> },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid state: {0}")]
    InvalidState(Box<Error>),

    #[error("no negative partial-transpose eigenvalue; Theorem-1 branch undefined")]
    BranchUndefined,

    #[error("radicand {value:e} is negative beyond rounding")]
    NegativeRadicand { value: f64 },

    #[error("unknown state family `{0}`")]
    UnknownFamily(String),

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),

    #[error("grid too large: {points} points along one axis (limit {limit})")]
    GridTooLarge { points: f64, limit: f64 },

    #[error("verdict is constant along the slice; no transition found")]
    NoTransition,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("output error: {0}")]
    Output(String),
}

impl Error {
    /// Variant name, for messages and machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotHermitian { .. } => "NotHermitian",
            Error::TraceViolation { .. } => "TraceViolation",
            Error::NegativeEigenvalue { .. } => "NegativeEigenvalue",
            Error::NotXShaped { .. } => "NotXShaped",
            Error::NonFinite(_) => "NonFinite",
            Error::Domain(_) => "Domain",
            Error::InvalidState(inner) => inner.kind(),
            Error::BranchUndefined => "BranchUndefined",
            Error::NegativeRadicand { .. } => "NegativeRadicand",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::UnknownCriterion(_) => "UnknownCriterion",
            Error::GridTooLarge { .. } => "GridTooLarge",
            Error::NoTransition => "NoTransition",
            Error::Parse(_) => "Parse",
            Error::Output(_) => "Output",
        }
    }

    /// True for errors that mean the input does not describe a valid
    /// X-shaped density matrix.
    pub fn is_invalid_state(&self) -> bool {
        matches!(
            self,
            Error::NotHermitian { .. }
                | Error::TraceViolation { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::NotXShaped { .. }
                | Error::NonFinite(_)
                | Error::InvalidState(_)
        )
    }
}

/// Which 2×2 block of an X-state a closed-form eigenvalue belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Block {
    /// Rows/columns 1 and 4 (`ρ11`, `ρ44`, `ρ14`).
    Outer,
    /// Rows/columns 2 and 3 (`ρ22`, `ρ33`, `ρ23`).
    Inner,
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Block::Outer => f.write_str("(1,4)"),
            Block::Inner => f.write_str("(2,3)"),
        }
    }
}

impl Error {
    pub(crate) fn invalid(self) -> Error {
        match self {
            e @ Error::InvalidState(_) => e,
            e => Error::InvalidState(Box::new(e)),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
