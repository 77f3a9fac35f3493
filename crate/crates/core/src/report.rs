//! Machine-checkable inequality records shared by the replay and
//! certificate reports.

use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

/// One instantiated relation `lhs relation rhs` and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub relation: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, lhs: impl Display, relation: &str, rhs: impl Display, pass: bool) -> Self {
        Check {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: relation.to_string(),
            pass,
        }
    }

    pub fn le<T: PartialOrd + Display>(name: &str, lhs: T, rhs: T) -> Self {
        let pass = lhs <= rhs;
        Self::new(name, lhs, "<=", rhs, pass)
    }

    pub fn ge<T: PartialOrd + Display>(name: &str, lhs: T, rhs: T) -> Self {
        let pass = lhs >= rhs;
        Self::new(name, lhs, ">=", rhs, pass)
    }

    pub fn eq<T: PartialEq + Display>(name: &str, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        Self::new(name, lhs, "==", rhs, pass)
    }

    /// A predicate that was evaluated by a scan.
    pub fn holds(name: &str, what: impl Display, pass: bool) -> Self {
        Self::new(name, what, "holds", true, pass)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn checks_to_json(checks: &[Check]) -> Value {
    serde_json::to_value(checks).expect("checks serialize")
}
