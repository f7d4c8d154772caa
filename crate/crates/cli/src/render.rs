use itertools::Itertools;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// JSON is pretty-printed with sorted keys; the table is one `key  value`
/// line per leaf, nested keys joined by dots.
pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Format::Table => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            Some(format!("[{}]", items.iter().map(|x| scalar(x).unwrap_or_else(|| x.to_string())).join(", ")))
        }
        Value::Object(_) | Value::Array(_) => None,
        other => Some(other.to_string()),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    if let Some(s) = scalar(v) {
        out.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(map) => map.iter().for_each(|(k, x)| flatten(&key(k), x, out)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, x)| flatten(&format!("{prefix}[{i}]"), x, out)),
        _ => unreachable!(),
    }
}
