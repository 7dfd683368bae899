use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// The subcommand and its canonicalized arguments.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub command: String,
    pub args: BTreeMap<String, String>,
}

impl Query {
    pub fn new(command: &str) -> Self {
        Query {
            command: command.to_string(),
            args: BTreeMap::new(),
        }
    }

    pub fn arg(mut self, key: &str, value: impl ToString) -> Self {
        self.args.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum Value {
    Scalar(String),
    Series(Vec<String>),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct QueryResult {
    pub query: Query,
    pub value: Value,
    pub method: String,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<CaseResult>,
}

impl QueryResult {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            let mark = if case.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {}", case.case));
            if !case.detail.is_empty() {
                out.push_str(&format!("  {}", case.detail));
            }
            out.push('\n');
        }
        let value = match &self.value {
            Value::Scalar(s) => s.clone(),
            Value::Series(v) => format!("[{}]", v.join(", ")),
        };
        out.push_str(&format!(
            "{value}  [{}; {} ms]",
            self.method, self.elapsed_ms
        ));
        out
    }
}
