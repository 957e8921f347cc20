use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::NegativeBranch;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "PPT")]
    Ppt,
    #[serde(rename = "CCN")]
    Ccn,
    Theorem1,
    Corollary1,
    Concurrence,
}

impl Criterion {
    pub const ALL: [Criterion; 5] =
        [Criterion::Ppt, Criterion::Ccn, Criterion::Theorem1, Criterion::Corollary1, Criterion::Concurrence];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Ppt => "PPT",
            Criterion::Ccn => "CCN",
            Criterion::Theorem1 => "Theorem1",
            Criterion::Corollary1 => "Corollary1",
            Criterion::Concurrence => "Concurrence",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "ppt" => Ok(Criterion::Ppt),
            "ccn" | "realignment" => Ok(Criterion::Ccn),
            "theorem1" | "thm1" => Ok(Criterion::Theorem1),
            "corollary1" => Ok(Criterion::Corollary1),
            "concurrence" => Ok(Criterion::Concurrence),
            _ => Err(Error::UnknownCriterion(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Entangled,
    Separable,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Entangled => "Entangled",
            Verdict::Separable => "Separable",
            Verdict::NotApplicable => "NotApplicable",
        })
    }
}

/// Outcome of one criterion on one state.
///
/// `margin` is always `lhs - rhs`. Criteria without a threshold for the
/// given state (Theorem-1 with no negative branch) carry `NaN` in `rhs` and
/// `margin`, serialized as JSON `null`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub verdict: Verdict,
    #[serde(with = "nan_as_null")]
    pub lhs: f64,
    #[serde(with = "nan_as_null")]
    pub rhs: f64,
    #[serde(with = "nan_as_null")]
    pub margin: f64,
    pub branch: NegativeBranch,
}

impl CriterionReport {
    pub fn new(criterion: Criterion, verdict: Verdict, lhs: f64, rhs: f64, branch: NegativeBranch) -> Self {
        Self { criterion, verdict, lhs, rhs, margin: lhs - rhs, branch }
    }

    pub fn is_entangled(&self) -> bool {
        self.verdict == Verdict::Entangled
    }
}

mod nan_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}
