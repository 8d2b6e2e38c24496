//! Deterministic key-value reports with exact values only.

use sha2::{Digest, Sha256};

/// Ordered key-value report. Rendered as `key value` lines or as a JSON
/// object with string values; key order is insertion order in both forms.
pub struct Report {
    pairs: Vec<(String, String)>,
    operations: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        let mut r = Report { pairs: Vec::new(), operations: Vec::new() };
        r.push("command", command);
        r.push("version", env!("CARGO_PKG_VERSION"));
        r
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    pub fn digest(&mut self, name: &str, bytes: &[u8]) {
        let mut h = Sha256::new();
        h.update(bytes);
        let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        self.push(&format!("digest.{name}"), hex);
    }

    pub fn record_op(&mut self, op: &str) {
        self.operations.push(op.to_string());
    }

    pub fn render(&self, json: bool) -> String {
        let mut pairs = self.pairs.clone();
        pairs.push(("provenance".to_string(), self.operations.join(", ")));
        if json {
            let mut out = String::from("{");
            for (i, (k, v)) in pairs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push(':');
                out.push_str(&serde_json::to_string(v).unwrap());
            }
            out.push_str("}\n");
            out
        } else {
            let mut out = String::new();
            for (k, v) in &pairs {
                out.push_str(k);
                out.push(' ');
                out.push_str(v);
                out.push('\n');
            }
            out
        }
    }
}
