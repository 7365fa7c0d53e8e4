use std::fmt::Write;

use clap::ValueEnum;
use jackpow::verify::{Report, Summary, Verdict, Witness};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Result of one command, rendered after the computation finishes.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            failed: false,
        }
    }

    pub fn value<T: serde::Serialize + std::fmt::Display>(v: &T) -> anyhow::Result<Self> {
        Ok(Output::new(serde_json::to_value(v)?, v.to_string()))
    }

    pub fn reports(reports: Vec<Report>) -> anyhow::Result<Self> {
        let summary = Summary::of(&reports);
        let mut text = String::new();
        for r in &reports {
            writeln!(text, "{}", report_line(r))?;
        }
        write!(
            text,
            "total {}, pass {}, fail {}, finding {}",
            summary.total, summary.pass, summary.fail, summary.finding
        )?;
        let failed = summary.fail > 0;
        let json = json!({
            "reports": serde_json::to_value(&reports)?,
            "summary": serde_json::to_value(&summary)?,
        });
        Ok(Output { json, text, failed })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Text => format!("{}\n", self.text),
        }
    }
}

fn report_line(r: &Report) -> String {
    let verdict = match r.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Finding => "finding",
    };
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut line = format!("{verdict:<8}{} {}", r.check_id, params.join(" "));
    match &r.witness {
        Some(Witness::Difference { value }) => {
            let _ = write!(line, "  lhs - rhs = {value}");
        }
        Some(Witness::Audit { summary, .. }) => {
            let _ = write!(
                line,
                "  nonneg={} integer={} unit={}",
                summary.nonneg, summary.integer, summary.unit
            );
        }
        Some(Witness::Note { text }) => {
            let _ = write!(line, "  {text}");
        }
        None => {}
    }
    if let Some(ms) = r.runtime_ms {
        let _ = write!(line, "  [{ms} ms]");
    }
    line
}

pub fn error(e: &anyhow::Error, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", json!({ "error": format!("{e:#}") })),
        Format::Text => format!("error: {e:#}\n"),
    }
}
