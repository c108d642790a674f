//! Check results shared by every suite and the CLI emitters.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Detail {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub detail: Detail,
}

impl CheckResult {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckResult { check: check.into(), status: Status::Pass, detail: Detail::default() }
    }

    pub fn fail(check: impl Into<String>, message: impl Into<String>) -> Self {
        CheckResult {
            check: check.into(),
            status: Status::Fail,
            detail: Detail { message: Some(message.into()), ..Detail::default() },
        }
    }

    /// Pass when `ok`, otherwise fail with `message`.
    pub fn from_bool(check: impl Into<String>, ok: bool, message: impl Into<String>) -> Self {
        if ok {
            CheckResult::pass(check)
        } else {
            CheckResult::fail(check, message)
        }
    }

    pub fn with_message(mut self, message: impl Into<String>) -> Self {
        self.detail.message = Some(message.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.detail;
        match self.status {
            Status::Pass => write!(f, "{}: PASS", self.check)?,
            Status::Fail => write!(f, "{}: FAIL", self.check)?,
        }
        if let Some(m) = &d.first_mismatch {
            write!(f, " at q^{} lhs={} rhs={}", m.exponent, m.lhs, m.rhs)?;
        }
        if let Some(n) = d.order {
            write!(f, " order={n}")?;
        }
        if let Some(s) = &d.scalar {
            write!(f, " scalar={s}")?;
        }
        if let Some(ev) = &d.eigenvalues {
            write!(f, " eigenvalues=({})", ev.join(", "))?;
        }
        if let Some(m) = &d.message {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}
