//! Rendering of result documents.
//!
//! Every command produces a JSON object. A `rows` array of flat objects, when
//! present, is the tabular part: CSV emits only the rows, text prints the
//! scalar fields followed by an aligned table.

use serde_json::{Map, Value};

use crate::job::OutputFormat;

pub fn render(doc: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(doc),
        OutputFormat::Text => render_text(doc),
    }
}

/// Scalar text for a value; `{num, den}` objects print as `num/den`.
pub fn flatten(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(flatten).collect::<Vec<_>>().join(" "),
        Value::Object(map) => match (map.get("num"), map.get("den")) {
            (Some(num), Some(Value::String(den))) if map.len() == 2 => {
                if den == "1" {
                    flatten(num)
                } else {
                    format!("{}/{den}", flatten(num))
                }
            }
            _ => serde_json::to_string(value).expect("serializable value"),
        },
    }
}

fn scalar_fields(map: &Map<String, Value>) -> Vec<(&str, String)> {
    map.iter()
        .filter(|(k, _)| k.as_str() != "rows")
        .map(|(k, v)| (k.as_str(), flatten(v)))
        .collect()
}

fn rows(doc: &Value) -> Option<&Vec<Value>> {
    doc.get("rows").and_then(Value::as_array)
}

fn table(rows: &[Value]) -> (Vec<String>, Vec<Vec<String>>) {
    let header: Vec<String> = rows
        .first()
        .and_then(Value::as_object)
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();
    let body = rows
        .iter()
        .map(|row| header.iter().map(|k| row.get(k).map(flatten).unwrap_or_default()).collect())
        .collect();
    (header, body)
}

fn render_csv(doc: &Value) -> String {
    let (header, body) = match rows(doc) {
        Some(rows) => table(rows),
        None => {
            let fields = doc.as_object().map(scalar_fields).unwrap_or_default();
            (
                fields.iter().map(|(k, _)| k.to_string()).collect(),
                vec![fields.into_iter().map(|(_, v)| v).collect()],
            )
        }
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    if !header.is_empty() {
        writer.write_record(&header).expect("in-memory write");
    }
    for record in body {
        writer.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 fields")
}

fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    if let Some(map) = doc.as_object() {
        let fields = scalar_fields(map);
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in fields {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
    }
    if let Some(rows) = rows(doc) {
        let (header, body) = table(rows);
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                body.iter()
                    .map(|r| r[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&line(&header));
        for r in &body {
            out.push_str(&line(r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rationals_and_lists_flatten() {
        assert_eq!(flatten(&json!({"num": "17", "den": "3"})), "17/3");
        assert_eq!(flatten(&json!({"num": "2", "den": "1"})), "2");
        assert_eq!(flatten(&json!([1, -2])), "1 -2");
        assert_eq!(flatten(&Value::Null), "");
    }

    #[test]
    fn formats() {
        let doc = json!({"group": "A1", "rows": [{"weight": [1], "mult": 1}, {"weight": [-1], "mult": 1}]});
        assert_eq!(render(&doc, OutputFormat::Csv), "weight,mult\n1,1\n-1,1\n");
        let text = render(&doc, OutputFormat::Text);
        assert!(text.starts_with("group  A1\n\nweight  mult\n"));
        let flat = json!({"group": "B2", "height": {"num": "17", "den": "3"}});
        assert_eq!(render(&flat, OutputFormat::Csv), "group,height\nB2,17/3\n");
        assert!(render(&flat, OutputFormat::Json).ends_with("}\n"));
    }
}
