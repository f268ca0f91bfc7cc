use std::fmt::Write as _;

use serde::Serialize;

use crate::element::SElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A negative claim backed by a concrete witness.
    Witnessed,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        !matches!(self, Verdict::Fail)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Witnessed => "witnessed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub cases: u64,
    /// Counterexample for a failed check, or the witness for a negative claim.
    pub witness: Option<Vec<SElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub modulus: u32,
    pub checks: Vec<CheckResult>,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    name: &'a str,
    verdict: Verdict,
    cases: u64,
    witness: Option<Vec<[String; 2]>>,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    modulus: u32,
    passed: bool,
    checks: Vec<CheckRecord<'a>>,
}

impl AxiomReport {
    pub fn new(modulus: u32) -> Self {
        AxiomReport {
            modulus,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        debug_assert_eq!(self.modulus, other.modulus);
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_success())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.verdict.is_success())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        writeln!(out, "axiom suite over GF({})", self.modulus).unwrap();
        writeln!(
            out,
            "{:<width$}  {:<9}  {:>9}  witness",
            "check", "verdict", "cases"
        )
        .unwrap();
        for c in &self.checks {
            let witness = c
                .witness
                .as_ref()
                .map(|w| {
                    w.iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            let line = format!(
                "{:<width$}  {:<9}  {:>9}  {}",
                c.name,
                c.verdict.as_str(),
                c.cases,
                witness
            );
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
        let failed = self.failures().count();
        writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let record = ReportRecord {
            modulus: self.modulus,
            passed: self.all_passed(),
            checks: self
                .checks
                .iter()
                .map(|c| CheckRecord {
                    name: &c.name,
                    verdict: c.verdict,
                    cases: c.cases,
                    witness: c.witness.as_ref().map(|w| {
                        w.iter()
                            .map(|s| [s.x().to_string(), s.y().to_string()])
                            .collect()
                    }),
                })
                .collect(),
        };
        serde_json::to_value(record).expect("report serializes")
    }
}
