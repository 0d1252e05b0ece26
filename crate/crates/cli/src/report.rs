use std::fmt::Display;

use liecomp_core::Error;
use serde_json::json;

/// Ordered report lines; the JSON form carries the same keys and texts.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
    failed: bool,
}

impl Report {
    pub fn line(&mut self, key: &str, text: impl Display) {
        self.lines.push((key.to_string(), text.to_string()));
    }

    pub fn fail(&mut self, key: &str, text: impl Display) {
        self.failed = true;
        self.line(key, text);
    }

    /// Records a failed check without adding a line.
    pub fn mark_failed(&mut self) {
        self.failed = true;
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (_, text) in &self.lines {
            out.push_str(text);
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self, command: &str) -> String {
        let lines: Vec<_> = self
            .lines
            .iter()
            .map(|(k, t)| json!({ "key": k, "text": t }))
            .collect();
        let doc = json!({
            "command": command,
            "passed": !self.failed,
            "lines": lines,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

/// Errors that mean a mathematical check failed rather than bad input.
pub fn is_check_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotAnIdeal { .. }
            | Error::NotEntangled { .. }
            | Error::NotAutomorphism(_)
            | Error::InvalidAutomorphism(_)
            | Error::LemmaViolation { .. }
            | Error::InternalInvariantViolation(_)
    )
}

pub fn vector<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn vectors<T: Display>(vs: &[Vec<T>]) -> String {
    if vs.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> = vs.iter().map(|v| vector(v)).collect();
    parts.join("; ")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}
