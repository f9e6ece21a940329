//! Key-value tree reports with a stable key order.
//!
//! The format is a plain-text indented tree: `key: value` scalars, `key:`
//! section headers whose children indent by two spaces, and `- ` prefixed
//! list entries. Keys appear exactly in insertion order, so a report is
//! byte-stable for fixed inputs and suitable for golden-file comparison.
//! Every report starts with a `schema_version` scalar.

use std::collections::BTreeMap;
use std::fmt::Display;

/// Version of the report layout emitted by this binary.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Report {
    lines: Vec<String>,
    indent: usize,
    pending_item: bool,
}

impl Report {
    pub fn new() -> Self {
        let mut report = Report {
            lines: Vec::new(),
            indent: 0,
            pending_item: false,
        };
        report.kv("schema_version", SCHEMA_VERSION);
        report
    }

    fn prefix(&mut self) -> String {
        let mut p = "  ".repeat(self.indent);
        if self.pending_item {
            // First line of a list entry: replace the last indent step with
            // the dash marker.
            p.truncate(p.len() - 2);
            p.push_str("- ");
            self.pending_item = false;
        }
        p
    }

    /// Writes `key: value`.
    pub fn kv(&mut self, key: &str, value: impl Display) {
        let prefix = self.prefix();
        self.lines.push(format!("{prefix}{key}: {value}"));
    }

    /// Writes `key:` and indents the body by one step.
    pub fn section(&mut self, key: &str, body: impl FnOnce(&mut Self)) {
        let prefix = self.prefix();
        self.lines.push(format!("{prefix}{key}:"));
        self.indent += 1;
        body(self);
        self.indent -= 1;
    }

    /// Writes one `- ` list entry; the entry's first `kv`/`section` carries
    /// the dash.
    pub fn entry(&mut self, body: impl FnOnce(&mut Self)) {
        self.indent += 1;
        self.pending_item = true;
        body(self);
        self.pending_item = false;
        self.indent -= 1;
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Formats a histogram map as `{key: count, ...}` in ascending key order.
pub fn histogram<K: Display, V: Display>(map: &BTreeMap<K, V>) -> String {
    let body: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", body.join(", "))
}
