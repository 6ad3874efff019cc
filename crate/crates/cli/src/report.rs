//! Report rendering. A report is an ordered list of fields plus an outcome;
//! text output prints one `key: value` line per field, JSON output a single
//! object on one line.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Failed,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Failed
        }
    }

    pub fn and(self, other: Outcome) -> Self {
        Outcome::from_bool(self == Outcome::Ok && other == Outcome::Ok)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    fields: Vec<(String, Value)>,
    pub outcome: Outcome,
}

impl Report {
    pub fn new(outcome: Outcome) -> Self {
        Report {
            fields: Vec::new(),
            outcome,
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let body: Vec<String> = self
                    .fields
                    .iter()
                    .map(|(k, v)| format!("{}:{}", Value::from(k.as_str()), v))
                    .collect();
                format!("{{{}}}", body.join(","))
            }
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

/// A 0-based pair `(x, b)` as its 1-based two-element array.
pub fn pair(p: (usize, usize)) -> Value {
    Value::from(vec![p.0 + 1, p.1 + 1])
}

pub fn one_based(labels: &[usize]) -> Value {
    Value::from(labels.iter().map(|v| v + 1).collect::<Vec<_>>())
}
