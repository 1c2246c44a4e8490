//! Pass/fail records produced by verification routines.

use std::fmt::Debug;
use std::time::Duration;

use serde::Serialize;

use crate::element::{Element, Monomial};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The identity being checked, in formula form.
    pub anchor: String,
    pub status: Status,
    /// Offending input and both sides, present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Computed value worth showing even on success.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
            detail: None,
            wall_time: Duration::ZERO,
        }
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { status: Status::Fail, witness: Some(witness.into()), ..Check::pass(name, anchor) }
    }

    pub fn from_result(name: impl Into<String>, anchor: impl Into<String>, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Check::pass(name, anchor),
            Err(w) => Check::fail(name, anchor, w),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `Ok` when both sides agree, otherwise a witness naming the input.
pub fn compare<M: Monomial>(input: &str, lhs: &Element<M>, rhs: &Element<M>) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("input: {input}; lhs: {lhs:?}; rhs: {rhs:?}; difference: {:?}", lhs - rhs))
    }
}

/// Runs `f` and records its wall time on the produced check.
pub fn timed(f: impl FnOnce() -> Check) -> Check {
    let start = std::time::Instant::now();
    let mut c = f();
    c.wall_time = start.elapsed();
    c
}

/// Collects the first failure of a sequence of comparisons.
pub fn all_ok(results: impl IntoIterator<Item = Result<(), String>>) -> Result<(), String> {
    for r in results {
        r?;
    }
    Ok(())
}
