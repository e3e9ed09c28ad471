//! Aligned plain-text rendering of the JSON results.

use serde_json::{Map, Value};

fn index_text(v: &[Value]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn is_index(v: &Value) -> bool {
    v.as_array().is_some_and(|a| !a.is_empty() && a.iter().all(Value::is_u64))
}

fn is_index_list(a: &[Value]) -> bool {
    !a.is_empty() && a.iter().all(|x| x.as_array().is_some_and(|i| i.iter().all(Value::is_u64)))
}

fn is_term(v: &Value) -> bool {
    v.as_object().is_some_and(|o| o.len() == 2 && o.contains_key("coeff") && o.contains_key("index"))
}

fn is_slot(v: &Value) -> bool {
    v.as_object().is_some_and(|o| {
        o.len() == 2 && o.contains_key("degree") && o.get("index").and_then(Value::as_array).is_some_and(|i| i.iter().all(Value::is_u64))
    })
}

fn combination(terms: &[Value]) -> String {
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let coeff = t.get("coeff").map(inline).unwrap_or_default();
        let index = match t.get("index") {
            Some(Value::Array(i)) if i.is_empty() => String::new(),
            Some(i) => inline(i),
            None => String::new(),
        };
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, coeff),
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if index.is_empty() {
            out.push_str(&mag);
            continue;
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('·');
        }
        out.push('e');
        out.push_str(&index);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// One-line form of a value.
pub fn inline(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(a) if a.is_empty() => "-".into(),
        Value::Array(a) if is_index(v) => index_text(a),
        Value::Array(a) if is_index_list(a) => {
            a.iter().map(|i| index_text(i.as_array().expect("index"))).collect::<Vec<_>>().join(" ")
        }
        Value::Array(a) if a.iter().all(is_term) => combination(a),
        Value::Array(a) if !a.is_empty() && a.iter().all(is_slot) => {
            let slot = |s: &Value| match s["index"].as_array() {
                Some(i) if i.is_empty() => "1".to_string(),
                _ => format!("e{}", inline(&s["index"])),
            };
            a.iter().map(slot).collect::<Vec<_>>().join("⊗")
        }
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(o) => match (o.get("degree"), o.get("terms").and_then(Value::as_array)) {
            (Some(_), Some(terms)) if o.len() == 2 => combination(terms),
            _ => Value::Object(o.clone()).to_string(),
        },
        other => other.to_string(),
    }
}

fn table(rows: &[&Map<String, Value>], indent: &str) -> String {
    let mut keys: Vec<&String> = Vec::new();
    for r in rows {
        for k in r.keys() {
            if !keys.contains(&k) {
                keys.push(k);
            }
        }
    }
    let cells: Vec<Vec<String>> = rows.iter().map(|r| keys.iter().map(|k| r.get(*k).map(inline).unwrap_or_default()).collect()).collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(c, k)| cells.iter().map(|row| row[c].chars().count()).chain([k.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| -> String {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}", w = *w)).collect();
        format!("{indent}{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(keys.iter().map(|k| k.as_str()).collect());
    for row in &cells {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn objects(v: &Value) -> Option<Vec<&Map<String, Value>>> {
    let a = v.as_array()?;
    if a.is_empty() || is_index(v) || a.iter().all(is_slot) || a.iter().all(is_term) {
        return None;
    }
    a.iter().map(Value::as_object).collect()
}

pub fn text(v: &Value) -> String {
    if let Some(rows) = objects(v) {
        return table(&rows, "");
    }
    match v {
        Value::Array(a) => a.iter().map(|x| format!("{}\n", inline(x))).collect(),
        Value::Object(o) if !(o.len() == 2 && o.contains_key("terms")) => {
            let width = o.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, x) in o {
                match objects(x) {
                    Some(rows) => {
                        out.push_str(&format!("{k}:\n"));
                        out.push_str(&table(&rows, "  "));
                    }
                    None => {
                        out.push_str(format!("{k:<width$}  {}", inline(x)).trim_end());
                        out.push('\n');
                    }
                }
            }
            out
        }
        other => format!("{}\n", inline(other)),
    }
}
