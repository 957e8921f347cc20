//! Entanglement detection for two-qubit X-states.
//!
//! The crate implements three criteria side by side on the seven-parameter
//! X-state family:
//!
//! * positive partial transpose (exact for two qubits),
//! * the computable cross norm / realignment criterion `‖R(ρ)‖₁ > 1`,
//! * a modified realignment criterion whose threshold depends on the
//!   partial-transpose spectrum, which closes the gap left by the plain
//!   realignment test.
//!
//! ```
//! use xrealign::criteria::{ccn_verdict, theorem1_verdict, Verdict};
//! use xrealign::numerics::Tolerance;
//! use xrealign::states::{FamilyPoint, XState};
//!
//! let tol = Tolerance::default();
//! let state = XState::rho1(FamilyPoint::new(0.1, 0.23));
//! assert_eq!(ccn_verdict(&state, &tol)?.verdict, Verdict::Separable);
//! assert_eq!(theorem1_verdict(&state, &tol)?.verdict, Verdict::Entangled);
//! # Ok::<(), xrealign::Error>(())
//! ```

pub mod audit;
pub mod criteria;
mod error;
pub mod numerics;
pub mod scanner;
pub mod states;

pub use error::{Block, Error, Result};

/// The guide's code samples, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/x-states.md")]
    mod x_states {}
    #[doc = include_str!("../../../book/src/ppt.md")]
    mod ppt {}
    #[doc = include_str!("../../../book/src/realignment.md")]
    mod realignment {}
    #[doc = include_str!("../../../book/src/modified-criterion.md")]
    mod modified_criterion {}
    #[doc = include_str!("../../../book/src/concurrence.md")]
    mod concurrence {}
    #[doc = include_str!("../../../book/src/scanning.md")]
    mod scanning {}
    #[doc = include_str!("../../../book/src/audits.md")]
    mod audits {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
