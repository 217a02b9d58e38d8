//! Plain-text mixed graph files.
//!
//! ```text
//! # comment
//! mixedgraph 3
//! 0 -- 1      # undirected edge
//! 1 -> 2      # arc from 1 to 2
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeKind, EdgeSpec, MixedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn strip_comment(s: &str) -> &str {
    s.split_once('#').map_or(s, |(body, _)| body).trim()
}

pub fn parse_mg(text: &str) -> Result<MixedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(ParseError {
            line: 1,
            message: "missing `mixedgraph <n>` header".into(),
        });
    };
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["mixedgraph", n] => n.parse::<usize>().map_err(|_| ParseError {
            line: hline,
            message: format!("bad vertex count `{n}`"),
        })?,
        _ => {
            return Err(ParseError {
                line: hline,
                message: format!("expected `mixedgraph <n>`, found `{header}`"),
            })
        }
    };
    let mut g = MixedGraph::empty(n);
    for (line, body) in lines {
        let err = |message: String| ParseError { line, message };
        let (u, v, spec) = match body.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, "--", v] => (*u, *v, EdgeSpec::Undirected),
            [u, "->", v] => (*u, *v, EdgeSpec::Arc),
            _ => return Err(err(format!("expected `u -- v` or `u -> v`, found `{body}`"))),
        };
        let u: usize = u.parse().map_err(|_| err(format!("bad vertex `{u}`")))?;
        let v: usize = v.parse().map_err(|_| err(format!("bad vertex `{v}`")))?;
        if u >= n || v >= n {
            return Err(err(format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        if g.adjacent(u, v) {
            return Err(err(format!("pair ({u}, {v}) listed twice")));
        }
        let kind = match spec {
            EdgeSpec::Undirected => EdgeKind::Undirected,
            EdgeSpec::Arc => EdgeKind::ArcOut,
        };
        g.set_kind(u, v, kind);
    }
    Ok(g)
}

/// Canonical text: header then one line per pair in increasing `(min, max)`
/// order.
pub fn serialize_mg(g: &MixedGraph) -> String {
    let mut out = format!("mixedgraph {}\n", g.n());
    for (u, v, k) in g.edges() {
        let _ = match k {
            EdgeKind::ArcOut => writeln!(out, "{u} -> {v}"),
            EdgeKind::ArcIn => writeln!(out, "{v} -> {u}"),
            _ => writeln!(out, "{u} -- {v}"),
        };
    }
    out
}
