//! JSON problem files.
//!
//! ```json
//! {
//!   "roots": [{"lambda": -0.5, "multiplicity": 1}, {"lambda": -3.0, "multiplicity": 2}],
//!   "rhs": [1, 0, 0],
//!   "hermite": [[1.0], [0.0, 2.0]]
//! }
//! ```
//!
//! `rhs` and `hermite` are optional; `solve` and `interpolate` require them.

use serde::Deserialize;

use super::CliError;
use crate::error::CvmError;
use crate::hermite::HermiteData;
use crate::poly::RootSpec;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRoot {
    lambda: f64,
    multiplicity: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    roots: Vec<RawRoot>,
    #[serde(default)]
    rhs: Option<Vec<f64>>,
    #[serde(default)]
    hermite: Option<Vec<Vec<f64>>>,
}

/// A validated problem file.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub roots: RootSpec,
    pub rhs: Option<Vec<f64>>,
    pub hermite: Option<Vec<Vec<f64>>>,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawProblem =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;

        let mut pairs = Vec::with_capacity(raw.roots.len());
        for (i, root) in raw.roots.iter().enumerate() {
            let m = usize::try_from(root.multiplicity)
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| {
                    CliError::Validation(format!(
                        "roots[{i}].multiplicity must be a positive integer, got {}",
                        root.multiplicity
                    ))
                })?;
            pairs.push((root.lambda, m));
        }
        let roots = RootSpec::new(pairs).map_err(|e| CliError::Validation(describe(&e)))?;

        if let Some(rhs) = &raw.rhs {
            if rhs.len() != roots.n() {
                return Err(CliError::Validation(format!(
                    "rhs has {} entries, expected n = {}",
                    rhs.len(),
                    roots.n()
                )));
            }
        }
        if let Some(hermite) = &raw.hermite {
            HermiteData::new(roots.clone(), hermite.clone())
                .map_err(|e| CliError::Validation(format!("hermite: {e}")))?;
        }
        Ok(Self {
            roots,
            rhs: raw.rhs,
            hermite: raw.hermite,
        })
    }
}

fn describe(err: &CvmError) -> String {
    match err {
        CvmError::EmptySpec => "roots must not be empty".to_string(),
        CvmError::ZeroMultiplicity { index } => {
            format!("roots[{index}].multiplicity must be a positive integer")
        }
        CvmError::NonFiniteRoot { index, lambda } => {
            format!("roots[{index}].lambda must be finite, got {lambda}")
        }
        CvmError::DuplicateRoot { index, first, .. } => {
            format!("roots[{index}].lambda duplicates roots[{first}].lambda")
        }
        other => other.to_string(),
    }
}
