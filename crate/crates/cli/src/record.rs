use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// One command's output. Rationals are canonical `num/den` strings and
/// polynomials ascending coefficient arrays; maps are ordered so the JSON is
/// byte-stable across runs.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_detail: Option<String>,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit_code: i32,
}

impl OutputRecord {
    pub fn ok(command: &str, inputs: BTreeMap<String, Value>, result: Value, text: String) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs,
            result,
            status: Status::Ok,
            error_detail: None,
            text,
            exit_code: 0,
        }
    }

    pub fn error(command: &str, inputs: BTreeMap<String, Value>, detail: String, exit_code: i32) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs,
            result: Value::Null,
            status: Status::Error,
            text: format!("error: {detail}"),
            error_detail: Some(detail),
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.text.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Builds an input map from `(name, value)` pairs, skipping `None`s.
pub fn inputs<const N: usize>(pairs: [(&str, Option<Value>); N]) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
}

/// Decimal rendering of an exact value, always flagged as approximate.
pub fn approx_label(x: f64) -> String {
    format!("~{x} (approximate)")
}
