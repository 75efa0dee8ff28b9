//! Text and JSON encodings of hypergraphs and partitions.
//!
//! The text form is a header line `N r m` followed by `m` edge lines, each a
//! space-separated increasing vertex tuple, edges in lexicographic order, LF
//! terminated. The JSON form mirrors it as `{"n":N,"r":r,"edges":[[..],..]}`.

use serde::{Deserialize, Serialize};

use crate::constructions::PartiteStructure;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.vertex_count(), h.uniformity(), h.edge_count());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(Vertex::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the text form. Edge lines may list vertices in any order; the
/// result is canonical either way. The declared edge count must match.
pub fn parse_text(input: &str) -> Result<Hypergraph> {
    let mut lines = input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".into() })?;
    let header = parse_numbers(header, 1)?;
    let [vertex_count, uniformity, declared] = header[..] else {
        return Err(Error::Parse { line: 1, message: "header must be `N r m`".into() });
    };
    let mut edges = Vec::with_capacity(declared);
    for (idx, line) in lines {
        let edge = parse_numbers(line, idx + 1)?;
        if edge.len() != uniformity {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected {uniformity} vertices, found {}", edge.len()),
            });
        }
        edges.push(edge);
    }
    if edges.len() != declared {
        return Err(Error::Parse {
            line: 1,
            message: format!("header declares {declared} edges but {} were given", edges.len()),
        });
    }
    Hypergraph::new(vertex_count, uniformity, edges)
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse { line: line_no, message: format!("`{tok}` is not a vertex index") })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    r: usize,
    edges: Vec<Vec<Vertex>>,
}

pub fn to_json(h: &Hypergraph) -> String {
    let doc = HypergraphJson { n: h.vertex_count(), r: h.uniformity(), edges: h.edges().to_vec() };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn parse_json(input: &str) -> Result<Hypergraph> {
    let doc: HypergraphJson = serde_json::from_str(input)?;
    Hypergraph::new(doc.n, doc.r, doc.edges)
}

/// Accepts either encoding, choosing JSON when the first non-blank byte is `{`.
pub fn parse_any(input: &str) -> Result<Hypergraph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn partition_to_json(parts: &PartiteStructure) -> String {
    serde_json::to_string(parts).expect("plain data serializes")
}
