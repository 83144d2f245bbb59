use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one verification run. A check passes iff `violations == 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub parameters: Value,
    pub examined: u64,
    pub violations: u64,
    /// Wall-clock seconds; left out of serialized output unless set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
    /// Check-specific counts and tallies.
    pub details: Value,
    /// A few offending items (graph6 strings or names), for diagnosis.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<String>,
}

const MAX_SAMPLES: usize = 20;

impl Report {
    pub fn new(check: &str, parameters: Value) -> Self {
        Report {
            check: check.to_string(),
            parameters,
            examined: 0,
            violations: 0,
            elapsed: None,
            details: Value::Null,
            samples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn violation(&mut self, sample: impl Into<String>) {
        self.violations += 1;
        if self.samples.len() < MAX_SAMPLES {
            self.samples.push(sample.into());
        }
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.elapsed = Some(start.elapsed().as_secs_f64());
        self
    }

    /// Drops the timing so that output is reproducible byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
