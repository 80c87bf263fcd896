//! Check reports: per-group outcomes, the aggregate, and its text and JSON
//! renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use frlab_core::{Caps, Error as CoreError};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

pub type Detail = BTreeMap<String, String>;

/// Builds a [`Detail`] from key/value pairs.
pub fn detail<K: ToString, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Detail {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A counterexample for a check, a witness for a search.
    Fail(Detail),
    Undecided(Detail),
}

impl Outcome {
    pub fn fail<K: ToString, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Outcome {
        Outcome::Fail(detail(pairs))
    }

    /// Folds an error of the group computations: cap exceedance and
    /// undecidable centrality are undecided, everything else is a failure.
    pub fn from_result(r: frlab_core::Result<Outcome>) -> Outcome {
        match r {
            Ok(o) => o,
            Err(e @ (CoreError::OrderCapExceeded { .. } | CoreError::Undecidable(_) | CoreError::MissingOutData(_))) => {
                Outcome::Undecided(detail([("reason", e.to_string())]))
            }
            Err(e) => Outcome::Fail(detail([("error", e.to_string())])),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Check,
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapsRecord {
    pub table_order: usize,
    pub subgroup_enumeration: usize,
    pub automorphism: usize,
    pub construction: usize,
    pub central_semidirect: usize,
    pub abelian_section: usize,
}

impl From<&Caps> for CapsRecord {
    fn from(c: &Caps) -> Self {
        CapsRecord {
            table_order: c.table_order,
            subgroup_enumeration: c.subgroup_enumeration,
            automorphism: c.automorphism,
            construction: c.construction,
            central_semidirect: c.central_semidirect,
            abelian_section: c.abelian_section,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub tier: String,
    pub size: usize,
    pub caps: CapsRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub group: String,
    pub detail: Detail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub check: String,
    pub kind: ReportKind,
    pub params: Detail,
    pub universe: Universe,
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
    /// Counterexamples of a check or witnesses of a search, by group label.
    pub witnesses: Vec<Witness>,
    pub undecided_entries: Vec<Witness>,
    pub wall_time_ms: u64,
}

impl CheckReport {
    /// Aggregates per-group outcomes; entries are ordered by group label.
    pub fn tally(
        check: &str,
        kind: ReportKind,
        params: Detail,
        tier: &str,
        caps: &Caps,
        outcomes: Vec<(String, Outcome)>,
        started: Instant,
    ) -> CheckReport {
        let size = outcomes.len();
        let (mut pass, mut witnesses, mut undecided_entries) = (0, Vec::new(), Vec::new());
        for (group, o) in outcomes {
            match o {
                Outcome::Pass => pass += 1,
                Outcome::Fail(detail) => witnesses.push(Witness { group, detail }),
                Outcome::Undecided(detail) => undecided_entries.push(Witness { group, detail }),
            }
        }
        witnesses.sort_by(|a, b| a.group.cmp(&b.group));
        undecided_entries.sort_by(|a, b| a.group.cmp(&b.group));
        CheckReport {
            schema: SCHEMA,
            check: check.to_string(),
            kind,
            params,
            universe: Universe {
                tier: tier.to_string(),
                size,
                caps: caps.into(),
            },
            pass,
            fail: witnesses.len(),
            undecided: undecided_entries.len(),
            witnesses,
            undecided_entries,
            wall_time_ms: started.elapsed().as_millis() as u64,
        }
    }

    /// `pass + fail + undecided = size` and `fail > 0 ⇒ witnesses ≠ ∅`.
    pub fn invariant_holds(&self) -> bool {
        self.pass + self.fail + self.undecided == self.universe.size
            && (self.fail == 0 || !self.witnesses.is_empty())
            && self.fail == self.witnesses.len()
            && self.undecided == self.undecided_entries.len()
    }

    /// Checks succeed without counterexamples; searches always succeed.
    pub fn succeeded(&self) -> bool {
        self.kind == ReportKind::Search || self.fail == 0
    }

    /// The same report with the wall time cleared, for reproducibility
    /// comparisons.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<CheckReport> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = match (self.kind, self.succeeded()) {
            (ReportKind::Search, _) if self.fail == 0 => "none <= cap",
            (ReportKind::Search, _) => "witnesses found",
            (ReportKind::Check, true) => "PASS",
            (ReportKind::Check, false) => "FAIL",
        };
        let _ = writeln!(
            s,
            "{} [{}] tier={} size={}: pass={} fail={} undecided={} ({} ms) {verdict}",
            self.check,
            match self.kind {
                ReportKind::Check => "check",
                ReportKind::Search => "search",
            },
            self.universe.tier,
            self.universe.size,
            self.pass,
            self.fail,
            self.undecided,
            self.wall_time_ms
        );
        for (k, v) in &self.params {
            let _ = writeln!(s, "  {k}: {v}");
        }
        let label = match self.kind {
            ReportKind::Check => "counterexample",
            ReportKind::Search => "witness",
        };
        for w in &self.witnesses {
            let _ = writeln!(s, "  {label} {}: {}", w.group, fmt_detail(&w.detail));
        }
        for w in &self.undecided_entries {
            let _ = writeln!(s, "  undecided {}: {}", w.group, fmt_detail(&w.detail));
        }
        s
    }
}

fn fmt_detail(d: &Detail) -> String {
    d.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CheckReport {
        CheckReport::tally(
            "demo",
            ReportKind::Check,
            detail([("class", "nilpotent")]),
            "tiny",
            &Caps::default(),
            vec![
                ("B".into(), Outcome::fail([("why", "x")])),
                ("A".into(), Outcome::Pass),
                (
                    "C".into(),
                    Outcome::from_result(Err(CoreError::OrderCapExceeded {
                        what: "t",
                        needed: 9,
                        cap: 1,
                    })),
                ),
                ("D".into(), Outcome::from_result(Err(CoreError::RouteDisagreement("r".into())))),
            ],
            Instant::now(),
        )
    }

    #[test]
    fn arithmetic_and_classification() {
        let r = sample();
        assert!(r.invariant_holds());
        assert_eq!((r.pass, r.fail, r.undecided), (1, 2, 1));
        assert_eq!(r.witnesses[0].group, "B");
        assert!(!r.succeeded());
        assert!(r.to_text().contains("FAIL"));
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = CheckReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().contains("\"schema\": 1"));
    }
}
