use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

/// Input text formats.
///
/// * `EdgeList`: one `u v` pair per line, 0-indexed, `#` comments, blank lines ignored.
///   A line holding a single id only declares that vertex. The vertex count is
///   the largest id plus one.
/// * `Dimacs`: a `p edge <n> <m>` header followed by `m` lines `e <u> <v>`,
///   1-indexed, `c` comment lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" | "dimacs-like" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edge-list",
            Format::Dimacs => "dimacs",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> GraphError {
    GraphError::Parse(ParseError { line, kind })
}

fn malformed(line: usize, what: impl Into<String>) -> GraphError {
    err(line, ParseErrorKind::Malformed(what.into()))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let ids = content
            .split_whitespace()
            .map(|f| f.parse::<usize>().map_err(|_| malformed(line, format!("`{f}` is not a vertex id"))))
            .collect::<Result<Vec<_>, _>>()?;
        let (u, v) = match ids[..] {
            [u, v] => (u, v),
            [u] => {
                n = n.max(u + 1);
                continue;
            }
            _ => return Err(malformed(line, format!("expected one or two vertex ids, got `{content}`"))),
        };
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u)));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        let mut fields = content.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(malformed(line, "duplicate `p` header"));
                }
                let rest: Vec<&str> = fields.collect();
                let ["edge", n, m] = rest[..] else {
                    return Err(malformed(line, "expected `p edge <n> <m>`"));
                };
                let n = n
                    .parse()
                    .map_err(|_| malformed(line, format!("bad vertex count `{n}`")))?;
                let m = m
                    .parse()
                    .map_err(|_| malformed(line, format!("bad edge count `{m}`")))?;
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(malformed(line, "edge line before `p edge` header"));
                };
                let rest: Vec<&str> = fields.collect();
                let [a, b] = rest[..] else {
                    return Err(malformed(line, format!("expected `e <u> <v>`, got `{content}`")));
                };
                let mut ids = [0usize; 2];
                for (slot, tok) in ids.iter_mut().zip([a, b]) {
                    let id: usize = tok
                        .parse()
                        .map_err(|_| malformed(line, format!("`{tok}` is not a vertex id")))?;
                    if id == 0 || id > n {
                        return Err(err(line, ParseErrorKind::OutOfRange { vertex: id, n }));
                    }
                    *slot = id - 1;
                }
                if ids[0] == ids[1] {
                    return Err(err(line, ParseErrorKind::SelfLoop(ids[0])));
                }
                edges.push((ids[0], ids[1]));
            }
            Some(other) => {
                return Err(malformed(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(malformed(text.lines().count().max(1), "missing `p edge` header"));
    };
    if edges.len() != m {
        return Err(malformed(
            header_line,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Serializes `g` so that [`parse_graph`] reads it back unchanged.
pub fn write_graph(g: &Graph, format: Format) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").expect("writing to a String");
            }
            if n > 0 && g.degree(n - 1) == 0 {
                writeln!(out, "{}", n - 1).expect("writing to a String");
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {n} {}", g.edge_count()).expect("writing to a String");
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
            }
        }
    }
    out
}
