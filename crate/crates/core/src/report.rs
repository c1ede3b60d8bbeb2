//! Law-check reports shared by every checker in the crate.

use serde::{Deserialize, Serialize};

/// Outcome of a checker or a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

/// Three-valued verdict for fuel-bounded equality procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl Verdict {
    pub fn is_equal(self) -> bool {
        self == Verdict::Equal
    }
}

/// One law violation (or informational note) with witnesses.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntry {
    /// Stable identifier of the law that was checked, e.g. `ax3_associativity`.
    pub law: String,
    /// Elements involved in the violation, printed forms.
    pub witnesses: Vec<String>,
    pub message: String,
    /// Informational entries (e.g. truncation boundaries) do not fail the report.
    #[serde(default)]
    pub informational: bool,
}

/// Result of running a checker: pass/fail/unknown plus itemized entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub status: Status,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), status: Status::Pass, entries: Vec::new() }
    }

    pub fn violation(
        &mut self,
        law: &str,
        witnesses: Vec<String>,
        message: impl Into<String>,
    ) {
        self.status = match self.status {
            Status::Unknown => Status::Unknown,
            _ => Status::Fail,
        };
        if self.status == Status::Fail {
            // keep unknown sticky only when no hard failure exists
        }
        self.status = Status::Fail;
        self.entries.push(ReportEntry {
            law: law.to_string(),
            witnesses,
            message: message.into(),
            informational: false,
        });
    }

    /// Mark the report unknown (fuel exhaustion); failures take precedence.
    pub fn unknown(&mut self, law: &str, witnesses: Vec<String>, message: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Unknown;
        }
        self.entries.push(ReportEntry {
            law: law.to_string(),
            witnesses,
            message: message.into(),
            informational: false,
        });
    }

    pub fn note(&mut self, law: &str, witnesses: Vec<String>, message: impl Into<String>) {
        self.entries.push(ReportEntry {
            law: law.to_string(),
            witnesses,
            message: message.into(),
            informational: true,
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// True when some entry carries the given law id and the report failed.
    pub fn violates(&self, law: &str) -> bool {
        self.status == Status::Fail && self.entries.iter().any(|e| !e.informational && e.law == law)
    }

    /// Merge a sub-report, prefixing its law ids.
    pub fn absorb(&mut self, prefix: &str, sub: Report) {
        match (self.status, sub.status) {
            (_, Status::Fail) => self.status = Status::Fail,
            (Status::Pass, Status::Unknown) => self.status = Status::Unknown,
            _ => {}
        }
        for mut e in sub.entries {
            e.law = format!("{prefix}.{}", e.law);
            self.entries.push(e);
        }
    }

    /// Render as line-delimited JSON: one line per entry plus a summary line.
    pub fn to_ndjson(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("report entry serializes"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&serde_json::json!({
                "subject": self.subject,
                "status": self.status,
                "entries": self.entries.len(),
            }))
            .expect("summary serializes"),
        );
        out.push('\n');
        out
    }
}
