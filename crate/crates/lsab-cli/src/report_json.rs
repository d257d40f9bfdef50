//! Machine-readable rendering of check reports:
//! `{"verdict", "identity", "violations": [{"indices", "residual"}]}`,
//! with violations already sorted lexicographically by index tuple.

use lsab_core::report::CheckReport;
use serde_json::{json, Value};

use crate::doc::{emit_document, Document};

pub fn report_to_json(object: &str, report: &CheckReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let residual: Vec<String> = v.residual.iter().map(|s| s.to_string()).collect();
            match &v.note {
                Some(note) => json!({
                    "indices": v.indices,
                    "residual": residual,
                    "note": note,
                }),
                None => json!({ "indices": v.indices, "residual": residual }),
            }
        })
        .collect();
    let mut out = json!({
        "object": object,
        "identity": report.identity,
        "verdict": if report.passes() { "pass" } else { "fail" },
        "violations": violations,
    });
    if !report.notes.is_empty() {
        out["notes"] = json!(report.notes);
    }
    out
}

pub fn outcome_to_json(reports: &[(String, CheckReport)], document: Option<&Document>) -> Value {
    let reports: Vec<Value> = reports
        .iter()
        .map(|(object, r)| report_to_json(object, r))
        .collect();
    match document {
        Some(doc) => {
            let doc_value: Value =
                serde_json::from_str(&emit_document(doc)).expect("emitted documents are valid");
            json!({ "reports": reports, "document": doc_value })
        }
        None => json!({ "reports": reports }),
    }
}
