use serde::Serialize;
use serde_json::{json, Value};

use gradtilt::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub algebra: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(check: &str, algebra: &str, ok: bool, witness: Value) -> Check {
        Check {
            check: check.into(),
            algebra: algebra.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn skipped(check: &str, algebra: &str, reason: &str) -> Check {
        Check {
            check: check.into(),
            algebra: algebra.into(),
            status: Status::Skipped,
            witness: json!({ "reason": reason }),
        }
    }

    /// A check whose computation may fail; errors become failures.
    pub fn run(check: &str, algebra: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Check {
        match f() {
            Ok((ok, witness)) => Check::new(check, algebra, ok, witness),
            Err(e) => Check::new(check, algebra, false, json!({ "error": e.to_string() })),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}
