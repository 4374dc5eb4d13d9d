//! Reports: a key-ordered JSON document, and a text rendering derived from it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use weakhopf::{AxiomReport, LinMap};

use crate::format::to_matrix;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone)]
enum Section {
    Entries(Vec<Value>),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    digest: String,
    sections: BTreeMap<String, Section>,
    derived: Map<String, Value>,
    errors: Vec<String>,
}

pub fn matrix_value(f: &LinMap) -> Value {
    json!(to_matrix(f))
}

fn entry(name: &str, holds: bool) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("name".into(), json!(name));
    m.insert("holds".into(), json!(holds));
    m
}

impl Report {
    pub fn new(command: &str, digest: String) -> Self {
        Report {
            command: command.to_string(),
            digest,
            sections: BTreeMap::new(),
            derived: Map::new(),
            errors: Vec::new(),
        }
    }

    fn entries(&mut self, section: &str) -> &mut Vec<Value> {
        let s = self
            .sections
            .entry(section.to_string())
            .or_insert_with(|| Section::Entries(Vec::new()));
        if let Section::Skipped(_) = s {
            *s = Section::Entries(Vec::new());
        }
        match s {
            Section::Entries(v) => v,
            Section::Skipped(_) => unreachable!(),
        }
    }

    /// Appends every check of `rep`; a failing check records the first
    /// entry where its two sides differ.
    pub fn add_axioms(&mut self, section: &str, rep: &AxiomReport) {
        let out = self.entries(section);
        for c in &rep.entries {
            let mut e = entry(&c.name, c.holds);
            if let Some(w) = &c.witness {
                e.insert("witness".into(), witness(&w.lhs, &w.rhs));
            }
            out.push(Value::Object(e));
        }
    }

    pub fn add_flag(&mut self, section: &str, name: &str, holds: bool) {
        self.entries(section)
            .push(Value::Object(entry(name, holds)));
    }

    /// A family of checks summarised by how many instances were made.
    pub fn add_family(&mut self, section: &str, name: &str, holds: bool, instances: usize) {
        let mut e = entry(name, holds);
        e.insert("instances".into(), json!(instances));
        self.entries(section).push(Value::Object(e));
    }

    pub fn skip(&mut self, section: &str, reason: &str) {
        self.sections
            .insert(section.to_string(), Section::Skipped(reason.to_string()));
    }

    pub fn derive(&mut self, key: &str, value: Value) {
        self.derived.insert(key.to_string(), value);
    }

    pub fn error(&mut self, message: String) {
        self.errors.push(message);
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty()
            && self.sections.values().all(|s| match s {
                Section::Entries(v) => v.iter().all(|e| e["holds"] == json!(true)),
                Section::Skipped(_) => true,
            })
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn to_value(&self) -> Value {
        let mut sections = Map::new();
        for (name, s) in &self.sections {
            let v = match s {
                Section::Entries(entries) => {
                    let ok = entries.iter().all(|e| e["holds"] == json!(true));
                    json!({"status": if ok { "pass" } else { "fail" }, "entries": entries})
                }
                Section::Skipped(reason) => json!({"status": "skipped", "reason": reason}),
            };
            sections.insert(name.clone(), v);
        }
        json!({
            "tool": {"name": "weakhopf", "version": env!("CARGO_PKG_VERSION")},
            "input": {"sha256": self.digest},
            "command": self.command,
            "sections": sections,
            "derived": self.derived,
            "errors": self.errors,
            "status": if self.passed() { "pass" } else { "fail" },
            "exit_code": self.exit_code(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("json values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        render_text(&self.to_value())
    }
}

fn witness(lhs: &LinMap, rhs: &LinMap) -> Value {
    let mut w = Map::new();
    w.insert("shape".into(), json!([lhs.cod(), lhs.dom()]));
    if (lhs.cod(), lhs.dom()) == (rhs.cod(), rhs.dom()) {
        'find: for c in 0..lhs.dom() {
            for r in 0..lhs.cod() {
                let (a, b) = (lhs.get(r, c), rhs.get(r, c));
                if a != b {
                    w.insert("entry".into(), json!([r, c]));
                    w.insert("lhs".into(), json!(a.to_string()));
                    w.insert("rhs".into(), json!(b.to_string()));
                    break 'find;
                }
            }
        }
    }
    Value::Object(w)
}

fn is_matrix(v: &Value) -> bool {
    match v.as_array() {
        Some(rows) => {
            !rows.is_empty()
                && rows
                    .iter()
                    .all(|r| r.as_array().is_some_and(|c| c.iter().all(Value::is_string)))
        }
        None => false,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    if is_matrix(v) {
        let _ = writeln!(out, "{pad}{key}:");
        for row in v.as_array().unwrap() {
            let cells: Vec<String> = row.as_array().unwrap().iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}  [{}]", cells.join(" "));
        }
    } else if let Some(obj) = v.as_object() {
        let _ = writeln!(out, "{pad}{key}:");
        for (k, inner) in obj {
            render_value(out, k, inner, indent + 2);
        }
    } else if let Some(arr) = v.as_array() {
        let cells: Vec<String> = arr.iter().map(scalar_text).collect();
        let _ = writeln!(out, "{pad}{key}: [{}]", cells.join(", "));
    } else {
        let _ = writeln!(out, "{pad}{key}: {}", scalar_text(v));
    }
}

/// Text form of a report value. Everything shown is read from `v`, so the
/// two formats cannot disagree.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {}  {}  sha256:{}",
        scalar_text(&v["tool"]["name"]),
        scalar_text(&v["tool"]["version"]),
        scalar_text(&v["command"]),
        scalar_text(&v["input"]["sha256"])
    );
    if let Some(sections) = v["sections"].as_object() {
        for (name, s) in sections {
            let status = scalar_text(&s["status"]);
            if status == "skipped" {
                let _ = writeln!(out, "== {name}: skipped ({})", scalar_text(&s["reason"]));
                continue;
            }
            let _ = writeln!(out, "== {name}: {status}");
            for e in s["entries"].as_array().into_iter().flatten() {
                let mark = if e["holds"] == json!(true) {
                    "ok  "
                } else {
                    "FAIL"
                };
                let mut line = format!("  {mark} {}", scalar_text(&e["name"]));
                if let Some(n) = e.get("instances") {
                    let _ = write!(line, " ({n} instances)");
                }
                if let Some(w) = e.get("witness") {
                    if let Some(at) = w.get("entry") {
                        let _ = write!(
                            line,
                            "  at ({}, {}): lhs {}, rhs {}",
                            at[0],
                            at[1],
                            scalar_text(&w["lhs"]),
                            scalar_text(&w["rhs"])
                        );
                    }
                }
                let _ = writeln!(out, "{line}");
            }
        }
    }
    if let Some(derived) = v["derived"].as_object() {
        if !derived.is_empty() {
            let _ = writeln!(out, "== derived");
            for (k, inner) in derived {
                render_value(&mut out, k, inner, 2);
            }
        }
    }
    for e in v["errors"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "error: {}", scalar_text(e));
    }
    let _ = writeln!(
        out,
        "status: {} (exit {})",
        scalar_text(&v["status"]),
        v["exit_code"]
    );
    out
}
