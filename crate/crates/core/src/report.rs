//! Pass/fail reports returned by the verifiers.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), entries: Vec::new() }
    }

    pub fn record(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.entries.push(Entry { label: label.into(), passed, detail: detail.into() });
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.record(label, true, "");
    }

    pub fn fail(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.record(label, false, detail);
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(f, "{}: {} checks, {} failed", self.name, self.entries.len(), failed)?;
        for e in self.failures() {
            writeln!(f, "  FAIL {}: {}", e.label, e.detail)?;
        }
        Ok(())
    }
}
