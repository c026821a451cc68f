//! Structured verification outcomes.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::poly::Poly;

/// A parameter recorded in a [`CongruenceReport`]; almost always an integer,
/// with factorial-ratio specs carried as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => write!(f, "{s}"),
        }
    }
}

/// Outcome of one verification: which family was checked, at which
/// parameters, whether the congruence holds, and the residual witness.
///
/// `holds` is true exactly when `remainder` is the zero polynomial. For
/// congruences modulo `Phi_n(q)^k` the remainder is the difference numerator
/// reduced mod `Phi_n(q)^k`; for expansion checks it is the first
/// non-matching coefficient written as a polynomial in the root generator.
/// `params` always includes `n` and `k`.
#[derive(Debug, Clone)]
pub struct CongruenceReport {
    pub family: String,
    pub params: BTreeMap<String, ParamValue>,
    pub holds: bool,
    pub remainder: Poly,
    pub elapsed: Duration,
}

impl CongruenceReport {
    pub fn new(family: &str) -> Self {
        CongruenceReport {
            family: family.to_string(),
            params: BTreeMap::new(),
            holds: false,
            remainder: Poly::zero(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_family(mut self, family: &str) -> Self {
        self.family = family.to_string();
        self
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), ParamValue::Int(value));
        self
    }

    pub fn with_text_param(mut self, key: &str, value: &str) -> Self {
        self.params
            .insert(key.to_string(), ParamValue::Text(value.to_string()));
        self
    }

    /// Sets the outcome from a remainder, keeping `holds <=> remainder = 0`.
    pub fn with_remainder(mut self, remainder: Poly) -> Self {
        self.holds = remainder.is_zero();
        self.remainder = remainder;
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// One-line human-readable summary.
    pub fn summary(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        if self.holds {
            format!("{} {params}: HOLDS", self.family)
        } else {
            format!(
                "{} {params}: FAILS (remainder {})",
                self.family, self.remainder
            )
        }
    }
}
