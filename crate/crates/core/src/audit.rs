//! Seeded random-ensemble audits.
//!
//! An audit draws `n` states from the sampler, classifies each under every
//! criterion and tallies how the criteria relate: how many PPT-entangled
//! states realignment misses, whether the modified bound catches them, and
//! whether any PPT-entangled state fails the modified bound. Every count is
//! a finding, not an assertion; callers decide what to enforce.
//!
//! Samples are indexed, each with its own random stream, and folded in index
//! order, so a summary is bit-for-bit reproducible from `(n, seed, params)`
//! regardless of thread count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{
    ccn_verdict, concurrence, corollary1_threshold, derivation_diagnostics, ppt_spectrum, ppt_verdict,
    theorem1_threshold, theorem1_verdict, CriterionReport, NegativeBranch,
};
use crate::error::Result;
use crate::numerics::Tolerance;
use crate::states::{sample_ensemble_state, SamplerParams, XState};

/// A PPT-entangled sample on which the modified bound fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Disagreement {
    pub index: u64,
    pub state: XState,
    pub ppt: CriterionReport,
    pub theorem1: CriterionReport,
}

/// Aggregate outcome of an audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditSummary {
    pub seed: u64,
    pub max_coherence: f64,
    pub samples: usize,
    pub ppt_entangled: usize,
    pub ccn_detected: usize,
    pub thm1_detected: usize,
    pub ccn_missed_but_thm1_caught: usize,
    /// Samples where PPT and `concurrence > eps_psd` disagree.
    pub concurrence_disagreements: usize,
    /// PPT-separable samples that realignment flags as entangled.
    pub ccn_necessity_violations: usize,
    /// Largest gap between the eigenvalue and element-wise thresholds.
    pub max_corollary_deviation: f64,
    /// Per inequality id, the number of PPT-entangled samples on which that
    /// step of the derivation chain fails.
    pub derivation_failures: BTreeMap<String, usize>,
    pub disagreements: Vec<Disagreement>,
}

impl AuditSummary {
    pub fn disagreement_count(&self) -> usize {
        self.disagreements.len()
    }
}

struct Outcome {
    index: u64,
    state: XState,
    ppt: CriterionReport,
    theorem1: CriterionReport,
    ccn: bool,
    concurrence_entangled: bool,
    corollary_deviation: Option<f64>,
    failed_steps: Vec<String>,
}

fn evaluate(index: u64, seed: u64, params: &SamplerParams, tol: &Tolerance) -> Result<Outcome> {
    let state = sample_ensemble_state(seed, index, params);
    let ppt = ppt_verdict(&state, tol)?;
    let theorem1 = theorem1_verdict(&state, tol)?;
    let ccn = ccn_verdict(&state, tol)?.is_entangled();
    let concurrence_entangled = concurrence(&state, tol)? > tol.eps_psd;

    let spec = ppt_spectrum(&state, tol)?;
    let corollary_deviation = match spec.negative_branch {
        NegativeBranch::None => None,
        branch => Some((theorem1_threshold(&spec, tol)? - corollary1_threshold(&state, branch, tol)?).abs()),
    };
    let failed_steps = if ppt.is_entangled() {
        derivation_diagnostics(&state, tol)?
            .checks
            .into_iter()
            .filter(|c| c.applicable && !c.holds)
            .map(|c| c.id)
            .collect()
    } else {
        Vec::new()
    };
    Ok(Outcome { index, state, ppt, theorem1, ccn, concurrence_entangled, corollary_deviation, failed_steps })
}

/// Runs an audit over `n` samples of the ensemble keyed by `seed`.
pub fn run_audit(n: usize, seed: u64, params: &SamplerParams, tol: &Tolerance) -> Result<AuditSummary> {
    tol.check()?;
    let outcomes: Vec<Outcome> =
        (0..n as u64).into_par_iter().map(|i| evaluate(i, seed, params, tol)).collect::<Result<_>>()?;

    let mut summary = AuditSummary {
        seed,
        max_coherence: params.max_coherence,
        samples: n,
        ppt_entangled: 0,
        ccn_detected: 0,
        thm1_detected: 0,
        ccn_missed_but_thm1_caught: 0,
        concurrence_disagreements: 0,
        ccn_necessity_violations: 0,
        max_corollary_deviation: 0.0,
        derivation_failures: BTreeMap::new(),
        disagreements: Vec::new(),
    };
    for o in outcomes {
        let ppt = o.ppt.is_entangled();
        let thm1 = o.theorem1.is_entangled();
        summary.ppt_entangled += ppt as usize;
        summary.ccn_detected += o.ccn as usize;
        summary.thm1_detected += thm1 as usize;
        summary.ccn_missed_but_thm1_caught += (!o.ccn && thm1) as usize;
        summary.concurrence_disagreements += (ppt != o.concurrence_entangled) as usize;
        summary.ccn_necessity_violations += (!ppt && o.ccn) as usize;
        if let Some(d) = o.corollary_deviation {
            summary.max_corollary_deviation = summary.max_corollary_deviation.max(d);
        }
        for id in o.failed_steps {
            *summary.derivation_failures.entry(id).or_insert(0) += 1;
        }
        if ppt && !thm1 {
            summary.disagreements.push(Disagreement {
                index: o.index,
                state: o.state,
                ppt: o.ppt,
                theorem1: o.theorem1,
            });
        }
    }
    Ok(summary)
}
