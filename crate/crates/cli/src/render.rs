//! Plain-text rendering of the JSON payloads, so both formats carry the
//! same data.

use std::fmt::Write;

use serde_json::Value;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    block(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::Number(_) | Value::String(_))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        _ => None,
    }
}

fn is_matrix(a: &[Value]) -> bool {
    a.iter().all(|r| matches!(r, Value::Array(x) if x.iter().all(Value::is_number)))
}

fn block(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        block(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) if is_matrix(a) => {
            let cells: Vec<Vec<String>> = a
                .iter()
                .map(|r| r.as_array().unwrap().iter().map(|x| x.to_string()).collect())
                .collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{pad}{}", line.join(" ")).unwrap();
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}[{i}]").unwrap();
                        block(out, x, indent + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}
