//! Outcome type shared by the verifiers.

use alloc::string::{String, ToString};
use core::fmt;

/// A failed identity: what was compared, and both sides in full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    pub fn new(
        label: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Mismatch {
            label: label.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\n  expected: {}\n  actual:   {}",
            self.label, self.expected, self.actual
        )
    }
}

/// `Ok(())` when the identity holds, otherwise the first mismatch found.
pub type Verification = Result<(), Mismatch>;

/// Compares two values, reporting both in full on failure.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    label: impl FnOnce() -> String,
    expected: &T,
    actual: &T,
) -> Verification {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch::new(label(), expected, actual))
    }
}
