//! Exhaustive identity suites and the e-positivity scan.
//!
//! Every suite walks a deterministic list of instances, checks each one
//! independently on a rayon pool, and aggregates in instance order, so a
//! report depends only on the suite and its bounds, never on the worker
//! count. Failures are data: a suite returns `Ok` with witnesses attached.

mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::csf::CsfReport;
use crate::error::{Error, Result};

pub use suites::{
    scan_e_positivity, verify_gasharov, verify_inverse_kostka, verify_lemma1, verify_ordinal_sum_identity,
    verify_sigma, verify_sink_theorem, verify_specialization, verify_theorem1,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 2;
pub const EXIT_CONJECTURE_VIOLATION: i32 = 3;

/// A failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: String,
    pub message: String,
    /// Full coefficient data, attached by the positivity scan.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<CsfReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub bounds: BTreeMap<String, usize>,
    pub instances: u64,
    pub passes: u64,
    /// sorted by instance id
    pub failures: Vec<Witness>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        match (self.passed(), self.suite.as_str()) {
            (true, _) => EXIT_PASS,
            (false, "e-positivity") => EXIT_CONJECTURE_VIOLATION,
            (false, _) => EXIT_IDENTITY_FAILURE,
        }
    }

    /// Everything except the wall time, which is the one field that varies
    /// between identical runs.
    pub fn same_outcome(&self, other: &Report) -> bool {
        Report { wall_time_ms: 0, ..self.clone() } == Report { wall_time_ms: 0, ..other.clone() }
    }

    /// Deterministic human summary, one witness per line.
    pub fn summary(&self) -> String {
        let bounds: Vec<String> = self.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!(
            "{}: {} ({})\ninstances: {}\npasses: {}\nfailures: {}\n",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            bounds.join(" "),
            self.instances,
            self.passes,
            self.failures.len()
        );
        for w in &self.failures {
            out.push_str(&format!("  {}: {}\n", w.instance, w.message));
        }
        out
    }
}

/// Instance-parallel driver. `check` returns the failure messages of one
/// instance; an empty list is a pass.
pub(crate) fn run<T, F>(suite: &str, bounds: &[(&str, usize)], jobs: usize, instances: Vec<(String, T)>, check: F) -> Result<Report>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<String>> + Sync,
{
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    let outcomes: Vec<Vec<String>> = pool.install(|| instances.par_iter().map(|(_, t)| check(t)).collect::<Result<_>>())?;
    let mut failures: Vec<Witness> = instances
        .iter()
        .zip(outcomes)
        .filter(|(_, msgs)| !msgs.is_empty())
        .map(|((id, _), msgs)| Witness {
            instance: id.clone(),
            message: msgs.join("; "),
            report: None,
        })
        .collect();
    failures.sort_by(|a, b| a.instance.cmp(&b.instance));
    let total = instances.len() as u64;
    Ok(Report {
        suite: suite.to_string(),
        bounds: bounds.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        instances: total,
        passes: total - failures.len() as u64,
        failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Named suites as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Gasharov,
    Theorem1,
    Lemma1,
    SinkTheorem,
    Sigma,
    OrdinalSum,
    InverseKostka,
    Specialization,
    EPositivity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Gasharov,
        Suite::Theorem1,
        Suite::Lemma1,
        Suite::SinkTheorem,
        Suite::Sigma,
        Suite::OrdinalSum,
        Suite::InverseKostka,
        Suite::Specialization,
        Suite::EPositivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gasharov => "gasharov",
            Suite::Theorem1 => "theorem1",
            Suite::Lemma1 => "lemma1",
            Suite::SinkTheorem => "sink-theorem",
            Suite::Sigma => "sigma",
            Suite::OrdinalSum => "ordinal-sum",
            Suite::InverseKostka => "inverse-kostka",
            Suite::Specialization => "specialization",
            Suite::EPositivity => "e-positivity",
        }
    }

    /// Default for the main bound (`--max-n`).
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::EPositivity | Suite::OrdinalSum => 6,
            Suite::InverseKostka => 8,
            _ => 5,
        }
    }

    /// Default graph bound, for suites that also sweep arbitrary graphs.
    pub fn default_max_graph_n(self) -> Option<usize> {
        match self {
            Suite::SinkTheorem => Some(5),
            _ => None,
        }
    }

    /// Warnings for bounds above the defaults.
    pub fn warnings(self, max_n: usize, max_graph_n: Option<usize>) -> Vec<String> {
        let mut out = Vec::new();
        if max_n > self.default_max_n() {
            out.push(format!(
                "warning: --max-n {max_n} exceeds the default {} for {}; expect a long run",
                self.default_max_n(),
                self.name()
            ));
        }
        if let (Some(g), Some(d)) = (max_graph_n, self.default_max_graph_n()) {
            if g > d {
                out.push(format!(
                    "warning: --max-graph-n {g} exceeds the default {d} for {}; expect a long run",
                    self.name()
                ));
            }
        }
        out
    }

    /// Runs the suite; missing bounds take their defaults.
    pub fn run(self, max_n: Option<usize>, max_graph_n: Option<usize>, jobs: usize) -> Result<Report> {
        let n = max_n.unwrap_or(self.default_max_n());
        match self {
            Suite::Gasharov => verify_gasharov(n, jobs),
            Suite::Theorem1 => verify_theorem1(n, jobs),
            Suite::Lemma1 => verify_lemma1(n, jobs),
            Suite::SinkTheorem => {
                let g = max_graph_n.or(self.default_max_graph_n()).unwrap_or(5);
                verify_sink_theorem(n, g, jobs)
            }
            Suite::Sigma => verify_sigma(n, jobs),
            Suite::OrdinalSum => verify_ordinal_sum_identity(n, jobs),
            Suite::InverseKostka => verify_inverse_kostka(n, jobs),
            Suite::Specialization => verify_specialization(n, jobs),
            Suite::EPositivity => scan_e_positivity(n, jobs),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of: {}", names.join(", "))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn exit_codes() {
        let mut r = Report {
            suite: "lemma1".into(),
            bounds: BTreeMap::new(),
            instances: 1,
            passes: 1,
            failures: vec![],
            wall_time_ms: 0,
        };
        assert_eq!(r.exit_code(), EXIT_PASS);
        r.failures.push(Witness {
            instance: "x".into(),
            message: "y".into(),
            report: None,
        });
        assert_eq!(r.exit_code(), EXIT_IDENTITY_FAILURE);
        r.suite = "e-positivity".into();
        assert_eq!(r.exit_code(), EXIT_CONJECTURE_VIOLATION);
    }

    #[test]
    fn warnings_only_above_defaults() {
        assert!(Suite::Lemma1.warnings(5, None).is_empty());
        assert_eq!(Suite::Lemma1.warnings(6, None).len(), 1);
        assert_eq!(Suite::SinkTheorem.warnings(6, Some(6)).len(), 2);
    }

    #[test]
    fn failing_instances_become_sorted_witnesses() {
        let items: Vec<(String, usize)> = (0..20).map(|i| (format!("i{i:03}"), i)).collect();
        for jobs in [1, 4] {
            let r = run("toy", &[("max_n", 20)], jobs, items.clone(), |&i| {
                Ok(if i % 7 == 3 { vec![format!("{i} is bad")] } else { vec![] })
            })
            .unwrap();
            assert_eq!(r.instances, 20);
            assert_eq!(r.passes, 17);
            let ids: Vec<&str> = r.failures.iter().map(|w| w.instance.as_str()).collect();
            assert_eq!(ids, vec!["i003", "i010", "i017"]);
        }
    }
}
