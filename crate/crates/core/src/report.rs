//! Uniform result envelope for exhaustive and randomized searches.

use serde::{Deserialize, Serialize};
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

/// What a search established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    /// The exact value of the searched quantity.
    Exact { value: u64 },
    /// Bounds on the value; `upper = None` means unbounded.
    Interval { lower: u64, upper: Option<u64> },
    /// A universally quantified property was verified.
    Holds,
    /// The property fails; the witness is a counterexample.
    Fails,
    /// A witness object was found.
    Found,
    /// The search space holds no witness.
    Exhausted,
    /// The budget ran out before the property was settled.
    Undecided,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub command: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub nodes: u64,
    /// True when the node budget stopped the search early.
    pub budget_exhausted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Free-form extra data owned by the producing module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    /// Wall time in milliseconds; dropped by [`SearchReport::to_json_stable`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl SearchReport {
    pub fn new(command: impl Into<String>, outcome: Outcome) -> Self {
        SearchReport {
            schema_version: SCHEMA_VERSION,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            outcome,
            witness: None,
            nodes: 0,
            budget_exhausted: false,
            seed: None,
            details: None,
            elapsed_ms: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Serialize) -> Self {
        self.witness = Some(serde_json::to_value(witness).expect("witness serializes"));
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = nodes;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_details(mut self, details: impl Serialize) -> Self {
        self.details = Some(serde_json::to_value(details).expect("details serialize"));
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        self
    }

    /// Lower and upper bound on the value, when the outcome carries one.
    pub fn bounds(&self) -> Option<(u64, Option<u64>)> {
        match self.outcome {
            Outcome::Exact { value } => Some((value, Some(value))),
            Outcome::Interval { lower, upper } => Some((lower, upper)),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without timing, byte-identical across identical invocations.
    pub fn to_json_stable(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = None;
        copy.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_json_drops_timing() {
        let r = SearchReport::new("x", Outcome::Exact { value: 6 })
            .with_nodes(10)
            .timed(Instant::now());
        assert!(r.elapsed_ms.is_some());
        let stable = r.to_json_stable();
        assert!(!stable.contains("elapsed_ms"));
        let back: SearchReport = serde_json::from_str(&stable).unwrap();
        assert_eq!(back.outcome, Outcome::Exact { value: 6 });
        assert_eq!(back.bounds(), Some((6, Some(6))));
    }
}
