//! Search caps, overridable through `MCG_SEARCH_BUDGET`.

use serde::Serialize;

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "MCG_SEARCH_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Entry bound for the brute-force root oracle.
    pub brute: u64,
    /// Largest exponent tried by `lift_exponent`.
    pub lift: u32,
    /// Vertex limit for graph automorphism search.
    pub graph: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { brute: 5, lift: 64, graph: 12 }
    }
}

impl SearchBudget {
    /// Parses `key=value` pairs separated by commas, e.g. `brute=5,lift=64,graph=12`.
    /// Missing keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = Self::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("budget entry `{item}` is not key=value")))?;
            let bad = || Error::InvalidInput(format!("budget value `{value}` for `{key}` is not a positive integer"));
            let n: u64 = value.trim().parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            match key.trim() {
                "brute" => b.brute = n,
                "lift" => b.lift = u32::try_from(n).map_err(|_| bad())?,
                "graph" => b.graph = usize::try_from(n).map_err(|_| bad())?,
                other => return Err(Error::InvalidInput(format!("unknown budget key `{other}`"))),
            }
        }
        Ok(b)
    }

    /// Reads the environment; unset means defaults.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}
