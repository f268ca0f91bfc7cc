//! Exhaustive verification of the pair model over GF(p) x GF(p).

mod checks;
mod instance;
mod report;

use rayon::prelude::*;
use thiserror::Error;

use crate::error::AlgebraError;

pub use checks::{
    check_division_theorems, check_negative_theorems, check_regularity_and_bases,
    check_s_associative, check_s_structure, check_scalar_field_iso, check_unity_and_inverses,
    check_wheel_distributive,
};
pub use instance::{FiniteInstance, LambdaSet};
pub use report::{AxiomReport, CheckResult, Verdict};

/// Largest modulus `run_full_suite` accepts; the wheel law alone is p^6 cases.
pub const MAX_SUITE_MODULUS: u64 = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("cannot build instance: {0}")]
    Construction(String),
    #[error("no witness found for {0}; the implementation contradicts a proven property")]
    FalsifiedClaim(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

type Check = fn(&FiniteInstance) -> Result<AxiomReport, LabError>;

const SUITE: [Check; 8] = [
    check_s_structure,
    check_wheel_distributive,
    check_s_associative,
    check_negative_theorems,
    check_regularity_and_bases,
    check_unity_and_inverses,
    check_scalar_field_iso,
    check_division_theorems,
];

/// Runs every check on GF(p) x GF(p). Checks run in parallel; the report
/// keeps the fixed check order.
pub fn run_full_suite(p: u64) -> Result<AxiomReport, LabError> {
    if p > MAX_SUITE_MODULUS {
        return Err(LabError::Construction(format!(
            "modulus {p} exceeds the suite limit of {MAX_SUITE_MODULUS}"
        )));
    }
    let inst = FiniteInstance::new(p)?;
    let parts = SUITE
        .par_iter()
        .map(|check| check(&inst))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = AxiomReport::new(inst.modulus());
    for part in parts {
        report.extend(part);
    }
    Ok(report)
}
