//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first data line is `n m`, followed by exactly `m` lines `u v` with
//! `0 <= u < v < n`. Writers sort edges lexicographically and end every
//! line with `\n`.

use std::fmt::Write as _;

use gpvar::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

fn numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let bad = |message: String| ParseError::Line { line, message };
    let mut fields = text.split_ascii_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let f = fields.next().ok_or_else(|| bad("expected two integers".into()))?;
        f.parse().map_err(|_| bad(format!("not a nonnegative integer: {f:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(bad("expected two integers".into()));
    }
    Ok(pair)
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = data.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = numbers(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in data {
        let (u, v) = numbers(line, text)?;
        if !(u < v && v < n) {
            return Err(ParseError::Line {
                line,
                message: format!("edge \"{u} {v}\" needs 0 <= u < v < {n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|e| ParseError::Line {
        line: header_line,
        message: e.to_string(),
    })
}

pub fn write(g: &Graph) -> String {
    write_with_comments(g, &[])
}

pub fn write_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
