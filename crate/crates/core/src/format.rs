//! Plain-text graph format.
//!
//! ```text
//! # comment
//! vertices 4
//! edge 1 2 +-
//! edge 2 3 +
//! edge 1 3 -
//! ```
//!
//! The first significant line declares the vertex count; every further line
//! adds one pair with sign tag `+`, `-`, or `+-` (double edge). Blank lines
//! and `#` comments are ignored. Errors carry 1-based line numbers.

use std::collections::BTreeMap;

use crate::graph::{EdgeTag, GraphError, SignedGraph};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `vertices N`, got `{got}`")]
    ExpectedHeader { line: usize, got: String },
    #[error("line {line}: bad vertex count `{got}`")]
    BadVertexCount { line: usize, got: String },
    #[error("line {line}: expected `edge I J SIGN`, got `{got}`")]
    BadEdgeLine { line: usize, got: String },
    #[error("line {line}: bad sign tag `{got}` (expected +, - or +-)")]
    BadSignTag { line: usize, got: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing `vertices N` header")]
    MissingHeader,
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut vertex_count: Option<(usize, usize)> = None; // (count, header line)
    let mut edges: Vec<(usize, usize, EdgeTag)> = Vec::new();
    let mut edge_lines: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if vertex_count.is_none() {
            if fields.len() != 2 || fields[0] != "vertices" {
                return Err(ParseError::ExpectedHeader {
                    line: line_no,
                    got: line.to_string(),
                });
            }
            let n: usize = fields[1].parse().map_err(|_| ParseError::BadVertexCount {
                line: line_no,
                got: fields[1].to_string(),
            })?;
            vertex_count = Some((n, line_no));
            continue;
        }
        if fields.len() != 4 || fields[0] != "edge" {
            return Err(ParseError::BadEdgeLine {
                line: line_no,
                got: line.to_string(),
            });
        }
        let parse_vertex = |s: &str| -> Result<usize, ParseError> {
            s.parse().map_err(|_| ParseError::BadEdgeLine {
                line: line_no,
                got: line.to_string(),
            })
        };
        let i = parse_vertex(fields[1])?;
        let j = parse_vertex(fields[2])?;
        let tag = match fields[3] {
            "+" => EdgeTag::Pos,
            "-" => EdgeTag::Neg,
            "+-" | "-+" => EdgeTag::Double,
            other => {
                return Err(ParseError::BadSignTag {
                    line: line_no,
                    got: other.to_string(),
                })
            }
        };
        edges.push((i, j, tag));
        edge_lines.entry((i.min(j), i.max(j))).or_insert(line_no);
    }
    let (count, header_line) = vertex_count.ok_or(ParseError::MissingHeader)?;
    SignedGraph::build(count, &edges).map_err(|e| {
        let line = match &e {
            GraphError::Loop(v) => edges
                .iter()
                .position(|&(a, b, _)| a == *v && b == *v)
                .map(|k| find_nth_edge_line(text, k))
                .unwrap_or(header_line),
            GraphError::VertexOutOfRange { vertex, .. } => edges
                .iter()
                .position(|&(a, b, _)| a == *vertex || b == *vertex)
                .map(|k| find_nth_edge_line(text, k))
                .unwrap_or(header_line),
            GraphError::DuplicatePair(i, j) => find_duplicate_line(text, *i, *j),
            _ => header_line,
        };
        ParseError::Graph { line, source: e }
    })
}

/// Line number of the k-th (0-based) edge line in the text.
fn find_nth_edge_line(text: &str, k: usize) -> usize {
    let mut seen = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.starts_with("edge") {
            if seen == k {
                return idx + 1;
            }
            seen += 1;
        }
    }
    1
}

/// Line number of the second occurrence of the pair `{i, j}`.
fn find_duplicate_line(text: &str, i: usize, j: usize) -> usize {
    let mut seen = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 4 && fields[0] == "edge" {
            if let (Ok(a), Ok(b)) = (fields[1].parse::<usize>(), fields[2].parse::<usize>()) {
                if (a.min(b), a.max(b)) == (i, j) {
                    seen += 1;
                    if seen == 2 {
                        return idx + 1;
                    }
                }
            }
        }
    }
    1
}

/// Serializes in the same format `parse_graph` reads. Doubles print as `+-`.
pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    let mut pairs: Vec<(usize, usize)> = g
        .pos_edges()
        .union(g.neg_edges())
        .copied()
        .collect();
    pairs.sort_unstable();
    for (i, j) in pairs {
        let tag = match (g.has_edge(i, j, crate::graph::Sign::Pos), g.has_edge(i, j, crate::graph::Sign::Neg)) {
            (true, true) => "+-",
            (true, false) => "+",
            (false, true) => "-",
            (false, false) => unreachable!(),
        };
        out.push_str(&format!("edge {i} {j} {tag}\n"));
    }
    out
}
