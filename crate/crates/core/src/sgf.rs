//! SGF, a line-oriented text format for signed graphs.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v s      (m lines, 0 <= u < v < n, s is '+' or '-')
//! ```
//!
//! Blank lines and lines whose first non-blank character is `#` are ignored.
//! Output uses LF line endings and lists edges sorted by `(u, v)`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SgfErrorKind {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("malformed header, expected `n m`")]
    MalformedHeader,
    #[error("malformed edge line, expected `u v s`")]
    MalformedEdge,
    #[error("invalid vertex index `{0}`")]
    InvalidVertex(String),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoints must satisfy u < v, got {u} {v}")]
    MisorderedEdge { u: usize, v: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("invalid sign token `{0}`, expected `+` or `-`")]
    InvalidSign(String),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("edge count {m} exceeds n(n-1)/2 for n = {n}")]
    TooManyEdges { n: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct SgfError {
    pub line: usize,
    pub kind: SgfErrorKind,
}

fn err(line: usize, kind: SgfErrorKind) -> SgfError {
    SgfError { line, kind }
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, SgfError> {
    let v: usize = tok
        .parse()
        .map_err(|_| err(line, SgfErrorKind::InvalidVertex(tok.to_string())))?;
    if v >= n {
        return Err(err(line, SgfErrorKind::VertexOutOfRange { vertex: v, n }));
    }
    Ok(v)
}

pub fn parse_sgf(text: &str) -> Result<SignedGraph, SgfError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = content.next().ok_or(err(1, SgfErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(err(header_line, SgfErrorKind::MalformedHeader)),
        },
        _ => return Err(err(header_line, SgfErrorKind::MalformedHeader)),
    };
    if m > n * n.saturating_sub(1) / 2 {
        return Err(err(header_line, SgfErrorKind::TooManyEdges { n, m }));
    }

    let mut seen = vec![false; n * n];
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in content {
        last_line = line;
        if edges.len() == m {
            return Err(err(
                line,
                SgfErrorKind::EdgeCountMismatch { declared: m, found: m + 1 },
            ));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [tu, tv, ts] = toks.as_slice() else {
            return Err(err(line, SgfErrorKind::MalformedEdge));
        };
        let u = parse_vertex(tu, n, line)?;
        let v = parse_vertex(tv, n, line)?;
        if u == v {
            return Err(err(line, SgfErrorKind::SelfLoop(u)));
        }
        if u > v {
            return Err(err(line, SgfErrorKind::MisorderedEdge { u, v }));
        }
        let sign = match *ts {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(err(line, SgfErrorKind::InvalidSign(other.to_string()))),
        };
        if seen[u * n + v] {
            return Err(err(line, SgfErrorKind::DuplicateEdge { u, v }));
        }
        seen[u * n + v] = true;
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            SgfErrorKind::EdgeCountMismatch { declared: m, found: edges.len() },
        ));
    }
    Ok(SignedGraph::new(n, edges).expect("edges validated during parsing"))
}

pub fn write_sgf(g: &SignedGraph) -> String {
    let mut out = String::with_capacity(8 + 8 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.sign);
    }
    out
}

/// Single-line form used inside JSON reports: `n m;u v s;...`.
pub fn write_sgf_inline(g: &SignedGraph) -> String {
    write_sgf(g).trim_end().replace('\n', ";")
}

/// Inverse of [`write_sgf_inline`].
pub fn parse_sgf_inline(text: &str) -> Result<SignedGraph, SgfError> {
    parse_sgf(&text.replace(';', "\n"))
}
