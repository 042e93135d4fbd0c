//! Plain-text edge lists.
//!
//! ```text
//! # optional comments, anywhere after '#'
//! n m
//! u v      (m lines, 0-based)
//! ```
//!
//! [`to_edge_list`] writes the canonical form: header, then edges as
//! `u v` with `u < v` in lexicographic order, one per line, no comments.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{build_graph, Edge, Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_pair(line_no: usize, tokens: &[&str]) -> Result<(usize, usize), ParseError> {
    if tokens.len() != 2 {
        return Err(ParseError::Syntax {
            line: line_no,
            msg: format!("expected two integers, found {} tokens", tokens.len()),
        });
    }
    let num = |t: &str| {
        t.parse::<usize>().map_err(|_| ParseError::Syntax {
            line: line_no,
            msg: format!("`{t}` is not a non-negative integer"),
        })
    };
    Ok((num(tokens[0])?, num(tokens[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let pair = parse_pair(idx + 1, &tokens)?;
        if header.is_none() {
            header = Some(pair);
        } else {
            edges.push(pair);
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(build_graph(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

pub fn write_edge_list(path: &Path, g: &Graph) -> Result<(), ParseError> {
    std::fs::write(path, to_edge_list(g)).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}
