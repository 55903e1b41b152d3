use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::cycle_type::CycleType;
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Used only for open conjectures, never gates anything.
    ReportOnly,
}

/// Counterexample attached to a failed verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub n: u32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cycle_types: Vec<CycleType>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sizes: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new(n: u32, detail: impl Into<String>) -> Self {
        Witness { n, cycle_types: Vec::new(), sizes: Vec::new(), detail: detail.into() }
    }

    pub fn with_types(mut self, types: impl IntoIterator<Item = CycleType>) -> Self {
        self.cycle_types.extend(types);
        self
    }

    pub fn with_sizes<T: ToString>(mut self, sizes: impl IntoIterator<Item = T>) -> Self {
        self.sizes.extend(sizes.into_iter().map(|s| s.to_string()));
        self
    }
}

/// Outcome of one claim checked over a range of degrees.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<Group>,
    pub range: Vec<u32>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Observed values (diameters, component structure, counts).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
    #[serde(rename = "wall_ms", skip_serializing_if = "Option::is_none", serialize_with = "ser_ms")]
    pub wall_time: Option<Duration>,
}

fn ser_ms<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_f64((d.as_secs_f64() * 1e6).round() / 1e3),
        None => s.serialize_none(),
    }
}

impl VerdictReport {
    pub fn new(claim: &str, group: Option<Group>, range: Vec<u32>) -> Self {
        VerdictReport {
            claim: claim.to_owned(),
            group,
            range,
            verdict: Verdict::Pass,
            witness: None,
            data: BTreeMap::new(),
            wall_time: None,
        }
    }

    pub fn fail(mut self, witness: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    /// Records the first failure only; later ones are dropped.
    pub fn fail_once(&mut self, witness: Witness) {
        if self.verdict != Verdict::Fail {
            self.verdict = Verdict::Fail;
            self.witness = Some(witness);
        }
    }

    pub fn record(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_owned(), value.into());
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn timed_since(mut self, start: Instant) -> Self {
        self.wall_time = Some(start.elapsed());
        self
    }

    /// Copy with the wall time removed, for byte-stable output.
    pub fn without_timing(&self) -> Self {
        VerdictReport { wall_time: None, ..self.clone() }
    }
}
