//! Deterministic report model and emitters.
//!
//! Every command produces a [`Report`]; the text, JSON, and CSV emitters
//! render it with a stable field order and fixed 17-significant-digit float
//! formatting, so identical configurations produce byte-identical output.

use std::fmt::Write as _;

/// A single report value.
#[derive(Debug, Clone)]
pub enum Value {
    Num(f64),
    Int(u64),
    Str(String),
    Bool(bool),
    Null,
}

impl Value {
    fn to_json(&self) -> String {
        match self {
            Value::Num(x) => fmt_f64(*x),
            Value::Int(n) => n.to_string(),
            Value::Str(s) => format!("\"{}\"", escape_json(s)),
            Value::Bool(b) => b.to_string(),
            Value::Null => "null".into(),
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Value::Num(x) => fmt_f64(*x),
            Value::Int(n) => n.to_string(),
            Value::Str(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => "null".into(),
        }
    }
}

/// 17 significant digits — enough to round-trip any f64 bit pattern.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// The structured result of one command invocation: the command name, the
/// echoed parameters, one or more result rows (a sweep emits one row per
/// grid point), and run diagnostics.
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(String, String)>,
    pub results: Vec<Vec<(&'static str, Value)>>,
    pub diagnostics: Vec<(&'static str, Value)>,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for (i, row) in self.results.iter().enumerate() {
            if self.results.len() > 1 {
                let _ = writeln!(out, "result[{i}]:");
            }
            for (k, v) in row {
                let _ = writeln!(out, "  {k} = {}", v.to_plain());
            }
        }
        for (k, v) in &self.diagnostics {
            let _ = writeln!(out, "# {k} = {}", v.to_plain());
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{");
        let _ = write!(out, "\"command\":\"{}\"", escape_json(self.command));
        out.push_str(",\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\":\"{}\"", escape_json(k), escape_json(v));
        }
        out.push_str("},\"results\":[");
        for (i, row) in self.results.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('{');
            for (j, (k, v)) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "\"{}\":{}", escape_json(k), v.to_json());
            }
            out.push('}');
        }
        out.push_str("],\"diagnostics\":{");
        for (i, (k, v)) in self.diagnostics.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\":{}", escape_json(k), v.to_json());
        }
        out.push_str("}}");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(first) = self.results.first() {
            let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
            let _ = writeln!(out, "{}", header.join(","));
            for row in &self.results {
                let cells: Vec<String> = row.iter().map(|(_, v)| csv_cell(v)).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        out
    }
}

fn csv_cell(v: &Value) -> String {
    let plain = v.to_plain();
    if plain.contains(',') || plain.contains('"') || plain.contains('\n') {
        format!("\"{}\"", plain.replace('"', "\"\""))
    } else {
        plain
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            command: "k0",
            params: vec![("x".into(), "0.5".into())],
            results: vec![vec![
                ("value", Value::Num(0.924_419_071_227_665_9)),
                ("terms", Value::Int(12)),
                ("note", Value::Null),
            ]],
            diagnostics: vec![("tol", Value::Num(1e-10))],
        }
    }

    #[test]
    fn json_shape_and_float_width() {
        let j = sample().to_json();
        assert!(j.starts_with("{\"command\":\"k0\""));
        assert!(j.contains("\"value\":9.2441907122766587e-1"), "{j}");
        assert!(j.contains("\"note\":null"));
        assert!(j.ends_with("}}\n"));
    }

    #[test]
    fn csv_header_comes_from_row_keys() {
        let c = sample().to_csv();
        assert!(c.starts_with("value,terms,note\n"));
        assert!(c.lines().count() == 2);
    }

    #[test]
    fn emission_is_deterministic() {
        assert_eq!(sample().to_json(), sample().to_json());
        assert_eq!(sample().to_text(), sample().to_text());
        assert_eq!(sample().to_csv(), sample().to_csv());
    }

    #[test]
    fn json_escapes_strings() {
        let r = Report {
            command: "fp",
            params: vec![("path".into(), "a\\b\"c".into())],
            results: vec![],
            diagnostics: vec![],
        };
        assert!(r.to_json().contains("\"path\":\"a\\\\b\\\"c\""));
    }
}
