//! DIMACS-style edge lists.
//!
//! ```text
//! c optional comment lines
//! p edge <n> <m>
//! e <u> <v>        (1-based, m of these)
//! ```

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    HeaderMismatch { declared: usize, found: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    IndexOutOfRange { line: usize, vertex: usize, n: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} `{tok}` is not a non-negative integer")))
}

/// Parses an edge list into a 0-based [`Graph`].
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` line"));
                }
                if toks.next() != Some("edge") {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before `p` line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::IndexOutOfRange { line, vertex: x, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                let e = Edge::new(u - 1, v - 1);
                if !seen.insert(e) {
                    return Err(ParseError::DuplicateEdge { line, u, v });
                }
                edges.push(e);
            }
            Some(other) => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| syntax(0, "missing `p edge` header"))?;
    if m != edges.len() {
        return Err(ParseError::HeaderMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges.into_iter().map(|e| (e.0, e.1))).expect("validated above"))
}

/// Canonical text: header then edges in sorted order, 1-based.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.0 + 1, e.1 + 1).unwrap();
    }
    out
}
