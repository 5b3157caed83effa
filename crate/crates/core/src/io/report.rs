use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::algebra::Presentation;
use crate::tilting::StratTree;

use super::doc::FORMAT_VERSION;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Provenance {
    Fixture(String),
    Digest(String),
}

impl Provenance {
    pub fn digest(bytes: &[u8]) -> Provenance {
        let d = Sha256::digest(bytes);
        Provenance::Digest(d.iter().map(|b| format!("{b:02x}")).collect())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format_version: String,
    pub command: Vec<String>,
    pub provenance: Option<Provenance>,
    pub result: Value,
}

impl Report {
    pub fn new(command: Vec<String>, provenance: Option<Provenance>, result: Value) -> Report {
        Report {
            format_version: FORMAT_VERSION.into(),
            command,
            provenance,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        super::doc::to_json(self)
    }

    /// Indented `key: value` lines of the result.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        text_lines(&self.result, 0, &mut out);
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            xs.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", ")
        )),
        Value::Object(m) if m.len() <= 2 && m.contains_key("kind") => {
            let kind = m["kind"].as_str().unwrap_or("?").to_string();
            match m.get("value") {
                Some(v) => scalar_text(v).map(|t| format!("{kind}({t})")),
                None if m.len() == 1 => Some(kind),
                None => None,
            }
        }
        _ => None,
    }
}

fn text_lines(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(t) => out.push_str(&format!("{pad}{k}: {t}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_lines(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match scalar_text(x) {
                    Some(t) => out.push_str(&format!("{pad}- {t}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text_lines(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn quiver_dot(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut out = format!("digraph {} {{\n", quote(p.name.as_deref().unwrap_or("quiver")));
    for v in &q.vertices {
        out.push_str(&format!("  {};\n", quote(v)));
    }
    for a in &q.arrows {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            quote(&q.vertices[a.source]),
            quote(&q.vertices[a.target]),
            quote(&a.id)
        ));
    }
    out.push_str("}\n");
    out
}

pub fn tree_dot(t: &StratTree) -> String {
    let mut out = String::from("digraph stratification {\n");
    let mut next = 0;
    tree_nodes(t, &mut next, &mut out);
    out.push_str("}\n");
    out
}

fn tree_nodes(t: &StratTree, next: &mut usize, out: &mut String) -> usize {
    let id = *next;
    *next += 1;
    match t {
        StratTree::Leaf { vertex, signature } => {
            out.push_str(&format!(
                "  n{id} [shape=box, label={}];\n",
                quote(&format!("{vertex}: dim {}, center {}", signature.dim, signature.center_dim))
            ));
        }
        StratTree::Node {
            vertex,
            dim,
            quotient,
            factor,
        } => {
            out.push_str(&format!(
                "  n{id} [label={}];\n",
                quote(&format!("split {vertex} (dim {dim})"))
            ));
            let q = tree_nodes(quotient, next, out);
            let f = tree_nodes(factor, next, out);
            out.push_str(&format!("  n{id} -> n{q} [label=\"A/AeA\"];\n"));
            out.push_str(&format!("  n{id} -> n{f} [label=\"eAe\"];\n"));
        }
    }
    id
}
