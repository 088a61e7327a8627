//! Pass/fail reports produced by the verification routines.

use std::fmt;

use crate::polymatrix::PolyMatrix;

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
    /// Offending matrix difference when a matrix identity fails.
    pub difference: Option<PolyMatrix>,
}

impl Check {
    pub fn new(label: impl Into<String>, passed: bool) -> Self {
        Check {
            label: label.into(),
            passed,
            detail: None,
            difference: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Compares two matrices, keeping their difference on failure.
    pub fn matrices(label: impl Into<String>, left: &PolyMatrix, right: &PolyMatrix) -> Self {
        let mut check = Check::new(label, left == right);
        if !check.passed {
            check.difference = left.try_sub(right).ok();
            if check.difference.is_none() {
                check.detail = Some(format!("shapes {:?} vs {:?}", left.shape(), right.shape()));
            }
        }
        check
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            write!(f, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.label)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{}: {}/{} passed",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.passed_count(),
            self.checks.len()
        )
    }
}
