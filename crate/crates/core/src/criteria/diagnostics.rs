//! Term-by-term evaluation of the inequality chain that leads from the
//! singular values of `R(ρ)` to the modified realignment bound.
//!
//! The chain is written for `λ3 < 0`. For `λ1 < 0` the state is relabeled
//! `(ρ11, ρ44, ρ23) ↔ (ρ22, ρ33, ρ14)`, which leaves `P` and `Q` unchanged
//! and swaps the roles of the two eigenvalue pairs. Without a negative
//! eigenvalue only the branch-independent steps are evaluated; the rest are
//! reported as not applicable.
//!
//! Checks are recorded, never asserted: some steps of the chain do not hold
//! for every state (see `q-diag` on `I/4`).

use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

use super::{ppt_spectrum, realignment_breakdown, NegativeBranch};
use crate::error::Result;
use crate::numerics::Tolerance;
use crate::states::XState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `lhs >= rhs`
    #[serde(rename = ">=")]
    Ge,
    /// `lhs <= rhs`
    #[serde(rename = "<=")]
    Le,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub id: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub applicable: bool,
    /// Whether the inequality holds within `eps_psd`; always `false` when
    /// not applicable.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivationReport {
    /// `s1 + s2`
    pub p: f64,
    /// `s3 + s4`
    pub q: f64,
    /// `‖R(ρ)‖₁`
    pub s: f64,
    pub branch: NegativeBranch,
    pub checks: Vec<InequalityCheck>,
}

impl DerivationReport {
    pub fn check(&self, id: &str) -> Option<&InequalityCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn applicable(&self) -> impl Iterator<Item = &InequalityCheck> {
        self.checks.iter().filter(|c| c.applicable)
    }

    pub fn holding(&self) -> usize {
        self.checks.iter().filter(|c| c.holds).count()
    }
}

fn evaluated(id: &str, lhs: f64, relation: Relation, rhs: f64, tol: &Tolerance) -> InequalityCheck {
    let holds = match relation {
        Relation::Ge => lhs >= rhs - tol.eps_psd,
        Relation::Le => lhs <= rhs + tol.eps_psd,
    };
    InequalityCheck { id: id.to_string(), lhs, relation, rhs, applicable: true, holds }
}

fn skipped(id: &str, relation: Relation) -> InequalityCheck {
    InequalityCheck { id: id.to_string(), lhs: f64::NAN, relation, rhs: f64::NAN, applicable: false, holds: false }
}

/// Evaluates the chain for `s`. With `pos` the eigenvalue pair assumed
/// non-negative and `neg` the pair holding the negative eigenvalue, the ids
/// are:
///
/// | id | inequality |
/// |----|------------|
/// | `p-norm` | `P >= √(Σ ρii²)` |
/// | `p-diag` | `P >= (pos diagonal sum)/√2` |
/// | `q-diag` | `Q >= (neg diagonal sum)/√2` |
/// | `p-eigen` | `P >= (pos sum)/√2` |
/// | `am-gm` | `(pos sum)/√2 >= √2·√(pos product)` |
/// | `q-eigen` | `Q >= (neg sum)/√2` |
/// | `pq-lower` | `P·Q >= √(pos product)·(neg sum)` |
/// | `pq-upper` | `P·Q <= ‖R(ρ)‖₁²/4` |
/// | `final-bound` | `‖R(ρ)‖₁ >= 2·(pos product)^{1/4}·(neg sum)^{1/2}` |
///
/// Without a negative eigenvalue the labels default to the `λ3 < 0`
/// assignment and only `p-norm`, `p-diag`, `q-diag` and `pq-upper` are
/// evaluated.
pub fn derivation_diagnostics(s: &XState, tol: &Tolerance) -> Result<DerivationReport> {
    let spec = ppt_spectrum(s, tol)?;
    let rb = realignment_breakdown(s, tol)?;
    let (p, q, total) = (rb.p(), rb.q(), rb.trace_norm);

    // "pos" is the eigenvalue pair assumed non-negative, "neg" the pair
    // holding the negative eigenvalue; the diagonal sums follow the labels.
    let (pos, neg, pos_diag, neg_diag) = match spec.negative_branch {
        NegativeBranch::Lambda1Negative => {
            ((spec.lambda3, spec.lambda4), (spec.lambda1, spec.lambda2), s.rho22 + s.rho33, s.rho11 + s.rho44)
        }
        _ => ((spec.lambda1, spec.lambda2), (spec.lambda3, spec.lambda4), s.rho11 + s.rho44, s.rho22 + s.rho33),
    };

    use Relation::{Ge, Le};
    let mut checks = vec![
        evaluated("p-norm", p, Ge, rb.f.sqrt(), tol),
        evaluated("p-diag", p, Ge, pos_diag / SQRT_2, tol),
        evaluated("q-diag", q, Ge, neg_diag / SQRT_2, tol),
    ];

    if spec.negative_branch == NegativeBranch::None {
        checks.extend([skipped("p-eigen", Ge), skipped("am-gm", Ge), skipped("q-eigen", Ge), skipped("pq-lower", Ge)]);
        checks.push(evaluated("pq-upper", p * q, Le, total * total / 4.0, tol));
        checks.push(skipped("final-bound", Ge));
    } else {
        let pos_prod = (pos.0 * pos.1).max(0.0);
        let pos_sum = pos.0 + pos.1;
        let neg_sum = neg.0 + neg.1;
        checks.extend([
            evaluated("p-eigen", p, Ge, pos_sum / SQRT_2, tol),
            evaluated("am-gm", pos_sum / SQRT_2, Ge, SQRT_2 * pos_prod.sqrt(), tol),
            evaluated("q-eigen", q, Ge, neg_sum / SQRT_2, tol),
            evaluated("pq-lower", p * q, Ge, pos_prod.sqrt() * neg_sum, tol),
            evaluated("pq-upper", p * q, Le, total * total / 4.0, tol),
            evaluated("final-bound", total, Ge, 2.0 * pos_prod.sqrt().sqrt() * neg_sum.max(0.0).sqrt(), tol),
        ]);
    }
    Ok(DerivationReport { p, q, s: total, branch: spec.negative_branch, checks })
}
