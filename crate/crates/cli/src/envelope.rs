use serde_json::{Map, Value};

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    TheoremViolation,
    Unresolved,
    ConjectureReport,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::TheoremViolation => "theorem-violation",
            Status::Unresolved => "unresolved",
            Status::ConjectureReport => "conjecture-report",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::ConjectureReport => crate::EXIT_OK,
            Status::TheoremViolation | Status::Unresolved => crate::EXIT_VIOLATION,
        }
    }

    /// `Ok` when every check passed.
    pub fn from_checks(all_pass: bool) -> Status {
        if all_pass {
            Status::Ok
        } else {
            Status::TheoremViolation
        }
    }
}

/// One command's output: the JSON envelope plus its text rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub citations: Vec<String>,
    pub status: Status,
    pub text: String,
}

impl Report {
    pub fn new(command: &str, inputs: Map<String, Value>) -> Report {
        Report { command: command.to_string(), inputs, result: Value::Null, citations: Vec::new(), status: Status::Ok, text: String::new() }
    }

    pub fn envelope(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("result".into(), self.result.clone());
        m.insert("citations".into(), Value::Array(self.citations.iter().cloned().map(Value::String).collect()));
        m.insert("status".into(), Value::String(self.status.label().into()));
        Value::Object(m)
    }

    pub fn render_json(&self) -> String {
        json::render(&self.envelope())
    }

    pub fn render_text(&self) -> String {
        let mut out = self.text.clone();
        if !out.is_empty() && !out.ends_with('\n') {
            out.push('\n');
        }
        for c in &self.citations {
            out.push_str(&format!("cites: {c}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status.label()));
        out
    }
}
