use std::fmt;

use crate::error::{Error, Result};

/// Working precision, truncation budget and target tolerance for numeric
/// evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionContext {
    digits: u32,
    budget: u64,
    tolerance: f64,
}

impl PrecisionContext {
    /// Largest digit count binary64 can honour.
    pub const MAX_DIGITS: u32 = 16;

    pub fn new(digits: u32, budget: u64, tolerance: f64) -> Result<Self> {
        if digits < 15 {
            return Err(Error::domain(format!("precision must be at least 15 digits, got {digits}")));
        }
        if budget < 1000 {
            return Err(Error::domain(format!("truncation budget must be at least 1000, got {budget}")));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::domain(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(PrecisionContext { digits, budget, tolerance })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(self, tolerance: f64) -> Result<Self> {
        Self::new(self.digits, self.budget, tolerance)
    }

    pub fn with_budget(self, budget: u64) -> Result<Self> {
        Self::new(self.digits, budget, self.tolerance)
    }

    pub(crate) fn check_representable(&self) -> Result<()> {
        if self.digits > Self::MAX_DIGITS {
            return Err(Error::PrecisionUnreachable(format!(
                "{} digits requested but evaluation runs in binary64 (at most {})",
                self.digits,
                Self::MAX_DIGITS
            )));
        }
        Ok(())
    }
}

impl Default for PrecisionContext {
    /// 15 digits, cutoff budget `10^5`, tolerance `1e-12`.
    fn default() -> Self {
        PrecisionContext { digits: 15, budget: 100_000, tolerance: 1e-12 }
    }
}

/// A value with a guaranteed absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate { value, error: 0.0 }
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.error
    }
}

/// `1.2020569032 ± 3e-11`
impl fmt::Display for Estimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.10} ± {:.0e}", self.value, self.error)
    }
}
