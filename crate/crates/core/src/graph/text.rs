//! Edge-list text format:
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! Exactly one `n` line must precede every `e` line. Blank lines and `#`
//! comments are ignored.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::HashSet;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("{what} {t:?} is not a non-negative integer"))),
        None => parse_err(line, format!("missing {what}")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("n") => {
                if n.is_some() {
                    return parse_err(line, "second vertex-count line");
                }
                n = Some(number(toks.next(), line, "vertex count")?);
            }
            Some("e") => {
                let Some(count) = n else {
                    return parse_err(line, "edge before the vertex-count line");
                };
                let a = number(toks.next(), line, "endpoint")?;
                let b = number(toks.next(), line, "endpoint")?;
                if a >= count || b >= count {
                    return parse_err(line, format!("edge {a}-{b} out of range for n = {count}"));
                }
                if a == b {
                    return parse_err(line, format!("self-loop at vertex {a}"));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return parse_err(line, format!("duplicate edge {a}-{b}"));
                }
                edges.push((a, b));
            }
            Some(other) => return parse_err(line, format!("unknown record {other:?}")),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return parse_err(line, "trailing tokens");
        }
    }
    let Some(n) = n else {
        return parse_err(0, "missing vertex-count line");
    };
    Graph::new(n, edges)
}

/// Canonical text form, without a trailing newline.
pub fn serialize_graph(g: &Graph) -> String {
    let mut lines = vec![format!("n {}", g.n())];
    lines.extend(g.edges().iter().map(|(a, b)| format!("e {a} {b}")));
    lines.join("\n")
}
