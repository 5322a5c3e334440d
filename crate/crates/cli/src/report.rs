use fences::{TheoremTag, Verdict};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;
use crate::CliError;

/// What a command produced, ready for any of the output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Header row first.
    pub csv: Option<Vec<Vec<String>>>,
}

impl Report {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
            csv: None,
        }
    }

    pub fn of<T: Serialize + ?Sized>(value: &T, text: impl Into<String>) -> Result<Self, CliError> {
        Ok(Report::new(to_json(value)?, text))
    }

    pub fn with_csv(mut self, rows: Vec<Vec<String>>) -> Self {
        self.csv = Some(rows);
        self
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => {
                let mut t = self.text.clone();
                if !t.is_empty() && !t.ends_with('\n') {
                    t.push('\n');
                }
                Ok(t)
            }
            Format::Json => Ok(format!("{}\n", self.json)),
            Format::Csv => {
                let rows = self
                    .csv
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("this command has no csv output".into()))?;
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in rows {
                    w.write_record(row)
                        .map_err(|e| CliError::Lib(fences::Error::Internal(e.to_string())))?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| CliError::Lib(fences::Error::Internal(e.to_string())))?;
                String::from_utf8(bytes)
                    .map_err(|e| CliError::Lib(fences::Error::Internal(e.to_string())))
            }
        }
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<Value, CliError> {
    serde_json::to_value(value).map_err(|e| CliError::Lib(fences::Error::Internal(e.to_string())))
}

/// The verdict with each provenance step's citation attached, plus the inputs.
pub fn verdict_report(verdict: &Verdict, inputs: Value) -> Result<Report, CliError> {
    let mut json = to_json(verdict)?;
    if let Some(steps) = json.get_mut("provenance").and_then(Value::as_array_mut) {
        for (step, p) in steps.iter_mut().zip(&verdict.provenance) {
            step["citation"] = json!(p.tag.citation());
        }
    }
    json["inputs"] = inputs;
    Ok(Report::new(json, verdict_text(verdict)))
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = v.value.to_string();
    for p in &v.provenance {
        out.push_str(&format!(
            "\n  [{}] {}: {}",
            p.tag,
            p.tag.citation(),
            p.detail
        ));
        if let Some(walk) = &p.walk {
            let steps: Vec<String> = walk.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "\n    walk ({} steps): {}",
                walk.len(),
                steps.join(" ")
            ));
        }
    }
    out
}

pub fn tags_field(tags: &[TheoremTag]) -> String {
    tags.iter().map(|t| t.name()).collect::<Vec<_>>().join(";")
}
