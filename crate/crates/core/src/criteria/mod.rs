//! Entanglement criteria for two-qubit X-states.
//!
//! * [`ppt_verdict`]: positive partial transpose. Exact for two qubits and
//!   used as ground truth.
//! * [`ccn_verdict`]: the computable cross norm (realignment) criterion,
//!   `‖R(ρ)‖₁ > 1`. Necessary only.
//! * [`theorem1_verdict`] / [`corollary1_verdict`]: the modified realignment
//!   criterion, comparing `‖R(ρ)‖₁` with a state-dependent threshold built from
//!   the partial-transpose spectrum.
//! * [`concurrence`]: Wootters concurrence, an independent oracle.
//! * [`derivation_diagnostics`]: the inequality chain behind the modified
//!   criterion, evaluated term by term.

mod concurrence;
mod diagnostics;
mod modified;
mod ppt;
mod realign;
mod report;

pub use concurrence::{concurrence, concurrence_verdict, wootters_concurrence};
pub use diagnostics::{derivation_diagnostics, DerivationReport, InequalityCheck, Relation};
pub use modified::{corollary1_threshold, corollary1_verdict, theorem1_threshold, theorem1_verdict};
pub use ppt::{partial_transpose, ppt_spectrum, ppt_verdict, NegativeBranch, PptSpectrum};
pub use realign::{ccn_verdict, realign, realignment_breakdown, RealignmentBreakdown};
pub use report::{Criterion, CriterionReport, Verdict};

use crate::error::Result;
use crate::numerics::Tolerance;
use crate::states::XState;

/// Every criterion report for `s`, in the order PPT, CCN, Theorem-1,
/// Corollary-1, concurrence.
pub fn evaluate_all(s: &XState, tol: &Tolerance) -> Result<Vec<CriterionReport>> {
    Ok(vec![
        ppt_verdict(s, tol)?,
        ccn_verdict(s, tol)?,
        theorem1_verdict(s, tol)?,
        corollary1_verdict(s, tol)?,
        concurrence_verdict(s, tol)?,
    ])
}
