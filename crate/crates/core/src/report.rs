//! Structured results of statement checks.
//!
//! Reports serialize as one JSON object per line with the fields
//! `statement_id`, `instance`, `verdict`, `outside_hypothesis`, `clauses`,
//! `witnesses`, `seed` and `detail`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    PreconditionUnmet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PreconditionUnmet => "precondition-unmet",
        })
    }
}

/// A named piece of evidence: a labeled set such as `{a,b}`, or the full
/// text of a matroid or graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub role: String,
    pub value: String,
}

/// One independently evaluated part of a statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    /// The clause's own premise was false, so it holds trivially.
    pub vacuous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub statement_id: String,
    /// Digest of the instance the check ran on.
    pub instance: String,
    pub verdict: Verdict,
    /// Set when a hypothesis failed but the conclusion was evaluated anyway.
    pub outside_hypothesis: bool,
    pub clauses: Vec<Clause>,
    pub witnesses: Vec<Witness>,
    pub seed: Option<u64>,
    pub detail: String,
}

impl CheckReport {
    pub fn new(statement_id: &str, instance: String) -> Self {
        CheckReport {
            statement_id: statement_id.to_string(),
            instance,
            verdict: Verdict::Pass,
            outside_hypothesis: false,
            clauses: Vec::new(),
            witnesses: Vec::new(),
            seed: None,
            detail: String::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn witness(&mut self, role: &str, value: impl Into<String>) -> &mut Self {
        self.witnesses.push(Witness {
            role: role.to_string(),
            value: value.into(),
        });
        self
    }

    pub fn find_witness(&self, role: &str) -> Option<&str> {
        self.witnesses
            .iter()
            .find(|w| w.role == role)
            .map(|w| w.value.as_str())
    }

    /// Records a clause; a clause that does not hold turns the verdict to fail.
    pub fn clause(&mut self, name: &str, holds: bool, vacuous: bool) -> &mut Self {
        self.clauses.push(Clause {
            name: name.to_string(),
            holds,
            vacuous,
        });
        if !holds {
            self.verdict = Verdict::Fail;
        }
        self
    }

    pub fn note(&mut self, text: impl AsRef<str>) -> &mut Self {
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(text.as_ref());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}",
            self.statement_id, self.instance, self.verdict
        )?;
        if self.outside_hypothesis {
            f.write_str(" (outside hypothesis)")?;
        }
        for c in &self.clauses {
            let state = match (c.holds, c.vacuous) {
                (true, true) => "vacuous",
                (true, false) => "holds",
                (false, _) => "FAILS",
            };
            write!(f, "\n  clause {}: {}", c.name, state)?;
        }
        for w in &self.witnesses {
            if w.value.contains('\n') {
                write!(f, "\n  witness {}:\n{}", w.role, indent(&w.value))?;
            } else {
                write!(f, "\n  witness {}: {}", w.role, w.value)?;
            }
        }
        if let Some(seed) = self.seed {
            write!(f, "\n  seed: {seed}")?;
        }
        if !self.detail.is_empty() {
            write!(f, "\n  detail: {}", self.detail)?;
        }
        Ok(())
    }
}

fn indent(text: &str) -> String {
    text.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
