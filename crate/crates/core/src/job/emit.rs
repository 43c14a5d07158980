use std::sync::OnceLock;

use serde_json::Value;

use super::run::Report;
use crate::error::{Error, Result};

/// JSON schema every emitted report conforms to.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let schema: Value = serde_json::from_str(REPORT_SCHEMA).expect("bundled schema is JSON");
        jsonschema::validator_for(&schema).expect("bundled schema compiles")
    })
}

/// Check a report document against [`REPORT_SCHEMA`].
pub fn validate_report(doc: &Value) -> Result<()> {
    let errors: Vec<String> = validator().iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(Error::Invariant(format!("report violates its schema: {}", errors.join("; "))))
    }
}

/// Serialize, validate and pretty-print a report; the text ends with a newline.
pub fn render_report(report: &Report) -> Result<String> {
    let doc = serde_json::to_value(report).map_err(|e| Error::Invariant(format!("report serialization: {e}")))?;
    validate_report(&doc)?;
    let mut text = serde_json::to_string_pretty(&doc).expect("values serialize");
    text.push('\n');
    Ok(text)
}
