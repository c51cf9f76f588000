//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 1
//! 1 2
//! 0 2
//! ```
//!
//! The first non-comment line is the vertex count; every following non-empty
//! line holds two whitespace-separated 0-based vertex indices. CRLF input is
//! accepted, LF is emitted.

use crate::error::{Error, Result};
use crate::graph::{Graph, SimpleGraph};

/// Parses an edge list without requiring connectivity.
pub fn read_simple_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            let tok = tok.ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "missing field".into(),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("`{tok}` is not a non-negative integer"),
            })
        };
        match n {
            None => {
                n = Some(parse(fields.next())?);
            }
            Some(_) => {
                let u = parse(fields.next())?;
                let v = parse(fields.next())?;
                edges.push((u, v));
            }
        }
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing fields".into(),
            });
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count".into(),
    })?;
    SimpleGraph::new(n, &edges)
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    Graph::from_simple(read_simple_edge_list(text)?)
}

pub fn write_edge_list<G: AsRef<SimpleGraph>>(g: &G) -> String {
    let g = g.as_ref();
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
