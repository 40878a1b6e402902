//! JSON verification reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::canon::{canonical_code, CANON_MAX_ORDER};
use crate::graph::Graph;
use crate::graph6::to_graph6_string;

/// Graphs listed per report field; the corresponding count is always exact.
pub const MAX_LISTED: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunMode {
    Exhaustive,
    Sampled,
    Exploration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportVerdict {
    Pass,
    Fail,
    /// Sampled runs never claim a proof.
    SampledNoCounterexample,
}

/// One named property check inside a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: &str) -> Check {
        Check {
            name: name.to_string(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn record(&mut self, ok: bool, g: &Graph) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(to_graph6_string(g));
            }
        }
    }

    pub fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
    }
}

/// Outcome of one theorem verification or exploration run.
///
/// Field order is the serialization order. Reals are decimal strings with
/// 12 significant digits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, Value>,
    pub mode: RunMode,
    pub verdict: ReportVerdict,
    pub checked: u64,
    pub qualifying: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<String>,
    pub extremal_attainers: Vec<String>,
    pub threshold_rho: Option<String>,
    pub ties: Vec<String>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(theorem: &str, mode: RunMode) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            params: BTreeMap::new(),
            mode,
            verdict: ReportVerdict::Pass,
            checked: 0,
            qualifying: 0,
            counterexample_count: 0,
            counterexamples: Vec::new(),
            extremal_attainers: Vec::new(),
            threshold_rho: None,
            ties: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Sets the verdict from the counterexamples and checks.
    pub(crate) fn conclude(&mut self) {
        let clean = self.counterexample_count == 0 && self.checks.iter().all(Check::passed);
        self.verdict = match (clean, self.mode) {
            (false, _) => ReportVerdict::Fail,
            (true, RunMode::Sampled) => ReportVerdict::SampledNoCounterexample,
            (true, _) => ReportVerdict::Pass,
        };
    }

    pub fn passed(&self) -> bool {
        self.verdict != ReportVerdict::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without the timing field: byte-identical across repeated runs.
    pub fn to_canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        let mut value = serde_json::to_value(&copy).expect("report serializes");
        if let Value::Object(map) = &mut value {
            map.remove("wall_time_ms");
        }
        serde_json::to_string_pretty(&value).expect("report serializes")
    }
}

/// Decimal string with 12 significant digits.
pub fn format_real(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return format!("{:.*}", (DIGITS - 1) as usize, 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (DIGITS - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding may have carried into a new leading digit
    let rounded: f64 = s.parse().unwrap_or(x);
    if decimals > 0 && rounded.abs().log10().floor() as i32 > magnitude {
        format!("{x:.*}", decimals - 1)
    } else {
        s
    }
}

/// Graphs gathered during a scan, kept in scan order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub qualifying: u64,
    pub counterexamples: Vec<Graph>,
    pub counterexample_count: u64,
    pub attainers: Vec<Graph>,
    pub ties: Vec<Graph>,
}

impl Tally {
    pub fn counterexample(&mut self, g: &Graph) {
        self.counterexample_count += 1;
        if self.counterexamples.len() < MAX_LISTED {
            self.counterexamples.push(g.clone());
        }
    }

    pub fn attainer(&mut self, g: &Graph) {
        push_distinct(&mut self.attainers, g);
    }

    pub fn tie(&mut self, g: &Graph) {
        push_distinct(&mut self.ties, g);
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.qualifying += other.qualifying;
        self.counterexample_count += other.counterexample_count;
        for g in other.counterexamples {
            if self.counterexamples.len() < MAX_LISTED {
                self.counterexamples.push(g);
            }
        }
        for g in &other.attainers {
            push_distinct(&mut self.attainers, g);
        }
        for g in &other.ties {
            push_distinct(&mut self.ties, g);
        }
    }

    /// Copies the tallies into `report`, listing graphs up to isomorphism
    /// when canonical codes are available.
    pub fn fill(self, report: &mut VerificationReport) {
        report.checked = self.checked;
        report.qualifying = self.qualifying;
        report.counterexample_count = self.counterexample_count;
        report.counterexamples = listing(&self.counterexamples);
        report.extremal_attainers = listing(&self.attainers);
        report.ties = listing(&self.ties);
    }
}

fn key(g: &Graph) -> Vec<u8> {
    if g.order() <= CANON_MAX_ORDER {
        canonical_code(g).expect("order checked")
    } else {
        crate::graph6::write_graph6(g)
    }
}

fn push_distinct(list: &mut Vec<Graph>, g: &Graph) {
    if list.len() >= MAX_LISTED {
        return;
    }
    let k = key(g);
    if !list.iter().any(|h| key(h) == k) {
        list.push(g.clone());
    }
}

fn listing(graphs: &[Graph]) -> Vec<String> {
    let mut seen: Vec<Vec<u8>> = Vec::new();
    let mut out = Vec::new();
    for g in graphs {
        let k = key(g);
        if !seen.contains(&k) {
            out.push(String::from_utf8(k.clone()).expect("graph6 is ASCII"));
            seen.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_real(4.0), "4.00000000000");
        assert_eq!(format_real(0.0), "0.00000000000");
        assert_eq!(format_real(15.123456789012345), "15.1234567890");
        assert_eq!(format_real(-2.5), "-2.50000000000");
        assert_eq!(format_real(9.9999999999999), "10.0000000000");
        assert_eq!(format_real(0.001234), "0.00123400000000");
        assert_eq!(format_real(123456789012345.0), "123456789012345");
    }

    #[test]
    fn verdicts() {
        let mut r = VerificationReport::new("x", RunMode::Sampled);
        r.conclude();
        assert_eq!(r.verdict, ReportVerdict::SampledNoCounterexample);
        r.counterexample_count = 1;
        r.conclude();
        assert_eq!(r.verdict, ReportVerdict::Fail);
        let mut r = VerificationReport::new("x", RunMode::Exhaustive);
        let mut c = Check::new("c");
        c.record(true, &Graph::complete(2).unwrap());
        r.checks.push(c);
        r.conclude();
        assert_eq!(r.verdict, ReportVerdict::Pass);
        assert!(!r.to_canonical_json().contains("wall_time_ms"));
        assert!(r.to_json().contains("wall_time_ms"));
    }
}
