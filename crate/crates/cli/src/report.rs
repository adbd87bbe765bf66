use std::fmt::{self, Write as _};

use serde::Serialize;
use serde_json::Value;

/// Failure classes, mapped to exit codes 2 and 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Operation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Operation(_) => 1,
        }
    }

    fn parts(&self) -> (&'static str, &str) {
        match self {
            CliError::Validation(m) => ("validation", m),
            CliError::Operation(m) => ("operation", m),
        }
    }

    pub fn to_json(&self, command: &str) -> Value {
        let (kind, message) = self.parts();
        serde_json::json!({ "command": command, "error": { "kind": kind, "message": message } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, message) = self.parts();
        write!(f, "{kind} error: {message}")
    }
}

pub fn invalid(e: impl fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

pub fn failed(e: impl fmt::Display) -> CliError {
    CliError::Operation(e.to_string())
}

/// What a command hands back to the dispatcher.
pub struct Outcome {
    pub inputs: Value,
    pub seed: Option<u64>,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Outcome {
    pub fn new(inputs: Value, result: impl Serialize) -> Result<Self, CliError> {
        let result = serde_json::to_value(result).map_err(failed)?;
        Ok(Outcome { inputs, seed: None, result, warnings: Vec::new() })
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn warn(mut self, w: impl IntoIterator<Item = String>) -> Self {
        self.warnings.extend(w);
        self
    }
}

/// The top-level report shape.
#[derive(Serialize)]
pub struct Report<'a> {
    pub command: &'a str,
    pub inputs: &'a Value,
    pub seed: Option<u64>,
    pub result: &'a Value,
    pub warnings: &'a [String],
}

impl Report<'_> {
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed: {seed}").unwrap();
        }
        out.push_str("inputs:\n");
        render(&mut out, self.inputs, 1);
        out.push_str("result:\n");
        render(&mut out, self.result, 1);
        if self.warnings.is_empty() {
            out.push_str("warnings: none\n");
        } else {
            out.push_str("warnings:\n");
            for w in self.warnings {
                writeln!(out, "  - {w}").unwrap();
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}
