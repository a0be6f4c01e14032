use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub max_residual: f64,
    pub detail: String,
}

impl Check {
    /// A yes/no condition with no numerical tolerance.
    pub fn exact(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            max_residual: 0.0,
            detail: detail.into(),
        }
    }

    /// Passes iff `residual < eps`; NaN always fails.
    pub fn float(name: impl Into<String>, residual: f64, eps: f64, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if residual < eps { Status::Pass } else { Status::Fail },
            max_residual: residual,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Checks are kept sorted by name so the order never depends on how they
    /// were produced.
    pub fn new(mut checks: Vec<Check>, notes: Vec<String>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { checks, notes }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }
}
