use std::collections::HashMap;

use serde_json::Value;

use super::Graph;
use crate::error::{Error, Result};

/// On-disk graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `{"vertices": [...], "edges": [[a, b], ...]}`
    Json,
    /// One edge `a b` per line; isolated vertices on a `vertices:` line.
    Text,
}

impl GraphFormat {
    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn detect(source: &str) -> GraphFormat {
        if source.trim_start().starts_with('{') {
            GraphFormat::Json
        } else {
            GraphFormat::Text
        }
    }
}

pub fn parse_graph(source: &str, format: Option<GraphFormat>) -> Result<Graph> {
    match format.unwrap_or_else(|| GraphFormat::detect(source)) {
        GraphFormat::Json => parse_json_graph(source),
        GraphFormat::Text => parse_text_graph(source),
    }
}

fn vertex_name(v: &Value, field: &str) -> Result<String> {
    match v {
        Value::String(s) if !s.is_empty() => Ok(s.clone()),
        Value::Number(n) if n.is_u64() => Ok(n.to_string()),
        other => Err(Error::input(format!(
            "field `{field}`: expected a vertex name (string or nonnegative integer), found {other}"
        ))),
    }
}

pub fn parse_json_graph(source: &str) -> Result<Graph> {
    let doc: Value = serde_json::from_str(source)
        .map_err(|e| Error::input(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = doc.as_object().ok_or_else(|| Error::input("top-level JSON value must be an object"))?;
    if let Some(key) = obj.keys().find(|k| *k != "vertices" && *k != "edges") {
        return Err(Error::input(format!("field `{key}`: unknown field")));
    }
    let vertices = match obj.get("vertices") {
        Some(Value::Array(vs)) => vs,
        Some(_) => return Err(Error::input("field `vertices`: expected an array")),
        None => return Err(Error::input("field `vertices`: missing")),
    };
    let mut names = Vec::with_capacity(vertices.len());
    let mut index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let field = format!("vertices[{i}]");
        let name = vertex_name(v, &field)?;
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::input(format!("field `{field}`: duplicate vertex {name:?}")));
        }
        names.push(name);
    }
    let mut edges = Vec::new();
    match obj.get("edges") {
        None => {}
        Some(Value::Array(es)) => {
            for (i, e) in es.iter().enumerate() {
                let pair = match e.as_array() {
                    Some(p) if p.len() == 2 => p,
                    _ => return Err(Error::input(format!("field `edges[{i}]`: expected a two-element array"))),
                };
                let mut ends = [0usize; 2];
                for (k, end) in pair.iter().enumerate() {
                    let field = format!("edges[{i}][{k}]");
                    let name = vertex_name(end, &field)?;
                    ends[k] = *index
                        .get(&name)
                        .ok_or_else(|| Error::input(format!("field `{field}`: unknown vertex {name:?}")))?;
                }
                if ends[0] == ends[1] {
                    return Err(Error::input(format!("field `edges[{i}]`: self-loop at vertex {:?}", names[ends[0]])));
                }
                edges.push((ends[0], ends[1]));
            }
        }
        Some(_) => return Err(Error::input("field `edges`: expected an array")),
    }
    Graph::new(names, &edges)
}

pub fn parse_text_graph(source: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut intern = |name: &str| -> usize {
        if let Some(&i) = index.get(name) {
            return i;
        }
        names.push(name.to_string());
        index.insert(name.to_string(), names.len() - 1);
        names.len() - 1
    };
    let mut edges = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            for name in rest.split_whitespace() {
                intern(name);
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::input(format!(
                "line {lineno}: expected an edge `a b` or a `vertices:` line, found {line:?}"
            )));
        }
        if tokens[0] == tokens[1] {
            return Err(Error::input(format!("line {lineno}: self-loop at vertex {:?}", tokens[0])));
        }
        let a = intern(tokens[0]);
        let b = intern(tokens[1]);
        edges.push((a, b));
    }
    Graph::new(names, &edges)
}
