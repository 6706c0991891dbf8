//! Plain-text edge lists.
//!
//! One `u v` pair per line, 0-based, `#` starts a comment. The first data
//! line is read as an `n m` header when exactly `m` data lines follow it and
//! every label on them is below `n`; otherwise it is an edge and `n` is the
//! largest label plus one. [`write_edge_list`] always emits the header.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
}

struct DataLine {
    line: usize,
    a: usize,
    b: usize,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(EdgeListError::Syntax {
                line,
                message: format!("expected two integers, found {} fields", fields.len()),
            });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| EdgeListError::Syntax {
                line,
                message: format!("`{s}` is not a non-negative integer"),
            })
        };
        rows.push(DataLine {
            line,
            a: num(fields[0])?,
            b: num(fields[1])?,
        });
    }

    let (n, body) = match rows.split_first() {
        None => return Ok(Graph::empty(0)),
        Some((first, rest))
            if rest.len() == first.b && rest.iter().all(|r| r.a < first.a && r.b < first.a) =>
        {
            (first.a, rest)
        }
        Some(_) => {
            let n = rows.iter().map(|r| r.a.max(r.b) + 1).max().unwrap_or(0);
            (n, &rows[..])
        }
    };

    // Validate line by line so errors carry the offending line number.
    let mut seen = std::collections::HashSet::new();
    for r in body {
        let invalid = |source| EdgeListError::Invalid {
            line: r.line,
            source,
        };
        if r.a == r.b {
            return Err(invalid(GraphError::SelfLoop(r.a)));
        }
        if !seen.insert((r.a.min(r.b), r.a.max(r.b))) {
            return Err(invalid(GraphError::DuplicateEdge(
                r.a.min(r.b),
                r.a.max(r.b),
            )));
        }
    }
    Graph::new(n, body.iter().map(|r| (r.a, r.b))).map_err(|source| EdgeListError::Invalid {
        line: body.first().map_or(1, |r| r.line),
        source,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}
