//! Verification reports.
//!
//! A [`Report`] is a flat list of claims, each with the value computed by
//! this crate and, when there is one, the value it is checked against.
//! The status is derived, never set by hand: `PASS` iff every line that
//! carries an expectation matches it exactly, `INFO` if no line carries one.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Printed in the published argument being checked.
    Published,
    /// Immediate from definitions.
    Trivial,
    /// Computed by an independent route inside this crate (enumeration,
    /// brute force, a second algorithm).
    Derived,
    /// Informational line with no expectation.
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INFO")]
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub claim: String,
    pub expected: Option<String>,
    pub computed: String,
    pub provenance: Source,
}

impl Detail {
    pub fn matches(&self) -> bool {
        self.expected.as_ref().is_none_or(|e| *e == self.computed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check_name: String,
    pub status: Status,
    pub details: Vec<Detail>,
    pub seed: Option<u64>,
    #[serde(serialize_with = "serialize_elapsed")]
    pub elapsed: Duration,
}

fn serialize_elapsed<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Serialize)]
struct Versioned<'a> {
    schema: u32,
    #[serde(flatten)]
    report: &'a Report,
}

impl Report {
    /// Starts a report; the status is fixed by [`ReportBuilder::finish`].
    #[allow(clippy::new_ret_no_self)]
    pub fn new(check_name: impl Into<String>) -> ReportBuilder {
        ReportBuilder {
            check_name: check_name.into(),
            details: Vec::new(),
            seed: None,
            started: Instant::now(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.matches())
    }

    /// JSON object with a leading `"schema": 1` and the report fields in
    /// declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Versioned {
            schema: 1,
            report: self,
        })
        .expect("report serializes")
    }

    /// Concatenates sub-reports, prefixing each claim with its check name.
    pub fn combine(check_name: &str, seed: Option<u64>, parts: &[Report]) -> Report {
        let mut b = Report::new(check_name);
        b.seed = seed;
        for part in parts {
            for d in &part.details {
                b.details.push(Detail {
                    claim: format!("{}: {}", part.check_name, d.claim),
                    ..d.clone()
                });
            }
        }
        let mut r = b.finish();
        r.elapsed = parts.iter().map(|p| p.elapsed).sum();
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} [{}]", self.check_name, self.status)?;
        for d in &self.details {
            let mark = match (&d.expected, d.matches()) {
                (None, _) => "info",
                (Some(_), true) => " ok ",
                (Some(_), false) => "FAIL",
            };
            match &d.expected {
                Some(e) => writeln!(
                    f,
                    "  [{mark}] {}: computed {} expected {} ({:?})",
                    d.claim, d.computed, e, d.provenance
                )?,
                None => writeln!(f, "  [{mark}] {}: {}", d.claim, d.computed)?,
            }
        }
        if let Some(seed) = self.seed {
            writeln!(f, "  seed {seed}")?;
        }
        write!(f, "  elapsed {:.3}s", self.elapsed.as_secs_f64())
    }
}

pub struct ReportBuilder {
    check_name: String,
    details: Vec<Detail>,
    seed: Option<u64>,
    started: Instant,
}

impl ReportBuilder {
    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn check(
        &mut self,
        claim: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        provenance: Source,
    ) -> &mut Self {
        self.details.push(Detail {
            claim: claim.into(),
            expected: Some(expected.to_string()),
            computed: computed.to_string(),
            provenance,
        });
        self
    }

    pub fn info(&mut self, claim: impl Into<String>, value: impl ToString) -> &mut Self {
        self.details.push(Detail {
            claim: claim.into(),
            expected: None,
            computed: value.to_string(),
            provenance: Source::Info,
        });
        self
    }

    pub fn finish(self) -> Report {
        let status = if self.details.iter().all(|d| d.expected.is_none()) {
            Status::Info
        } else if self.details.iter().all(Detail::matches) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            check_name: self.check_name,
            status,
            details: self.details,
            seed: self.seed,
            elapsed: self.started.elapsed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_details() {
        let mut b = Report::new("x");
        b.info("note", 3);
        assert_eq!(b.finish().status, Status::Info);

        let mut b = Report::new("x");
        b.check("a", 1, 1, Source::Trivial).info("note", 3);
        assert_eq!(b.finish().status, Status::Pass);

        let mut b = Report::new("x");
        b.check("a", 1, 1, Source::Trivial)
            .check("b", 2, 3, Source::Derived);
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_has_schema_first_and_stable_keys() {
        let mut b = Report::new("demo").seed(7);
        b.check("a", 1, 1, Source::Published);
        let json = b.finish().to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "schema",
                "check_name",
                "status",
                "details",
                "seed",
                "elapsed"
            ]
        );
        assert_eq!(v["schema"], 1);
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["details"][0]["provenance"], "published");
    }
}
