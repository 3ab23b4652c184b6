//! Plain-text graph files.
//!
//! ```text
//! # optional comment lines anywhere
//! n m
//! a b c
//! ...
//! ```
//!
//! The header gives the vertex count and the number of edge lines. Each edge
//! line lists strictly increasing vertex indices below `n`, separated by single
//! spaces: three per line for a 3-graph, two for a 2-graph. Every line,
//! including the last, ends in `\n`. Serialized files list edges in colex
//! order and carry no comments.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{SimpleGraph, ThreeGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorCode {
    Empty,
    MissingTrailingNewline,
    BadHeader,
    BadNumber,
    WrongArity,
    MixedArity,
    OutOfRange,
    NotIncreasing,
    DuplicateEdge,
    EdgeCountMismatch,
}

impl ParseErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorCode::Empty => "E001-empty",
            ParseErrorCode::MissingTrailingNewline => "E002-no-trailing-newline",
            ParseErrorCode::BadHeader => "E003-bad-header",
            ParseErrorCode::BadNumber => "E004-bad-number",
            ParseErrorCode::WrongArity => "E005-wrong-arity",
            ParseErrorCode::MixedArity => "E006-mixed-arity",
            ParseErrorCode::OutOfRange => "E007-out-of-range",
            ParseErrorCode::NotIncreasing => "E008-not-increasing",
            ParseErrorCode::DuplicateEdge => "E009-duplicate-edge",
            ParseErrorCode::EdgeCountMismatch => "E010-edge-count-mismatch",
        }
    }
}

/// A diagnostic pointing at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub code: ParseErrorCode,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: [{}] {}",
            self.line,
            self.column,
            self.code.as_str(),
            self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Three(ThreeGraph),
    Two(SimpleGraph),
}

fn err(line: usize, column: usize, code: ParseErrorCode, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        code,
        message: message.into(),
    }
}

/// Splits on single spaces, returning (column, token) pairs.
fn tokens(line_no: usize, text: &str) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in text.split(' ') {
        if tok.is_empty() {
            return Err(err(
                line_no,
                col,
                ParseErrorCode::BadNumber,
                "expected a single space between numbers",
            ));
        }
        let value =
            if tok.bytes().all(|b| b.is_ascii_digit()) && (tok == "0" || !tok.starts_with('0')) {
                tok.parse::<usize>().ok()
            } else {
                None
            };
        match value {
            Some(v) => out.push((col, v)),
            None => {
                return Err(err(
                    line_no,
                    col,
                    ParseErrorCode::BadNumber,
                    format!("`{tok}` is not a decimal integer"),
                ))
            }
        }
        col += tok.len() + 1;
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<ParsedGraph, ParseError> {
    if text.is_empty() {
        return Err(err(1, 1, ParseErrorCode::Empty, "empty input"));
    }
    let body = match text.strip_suffix('\n') {
        Some(b) => b,
        None => {
            let line = text.lines().count();
            let col = text.lines().last().map_or(0, str::len) + 1;
            return Err(err(
                line,
                col,
                ParseErrorCode::MissingTrailingNewline,
                "file must end with a newline",
            ));
        }
    };
    let mut lines = body
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (hline, htext) = lines
        .next()
        .ok_or_else(|| err(1, 1, ParseErrorCode::BadHeader, "missing `n m` header"))?;
    let header = tokens(hline, htext).map_err(|e| ParseError {
        code: ParseErrorCode::BadHeader,
        ..e
    })?;
    let [(_, n), (_, m)] = header[..] else {
        return Err(err(
            hline,
            1,
            ParseErrorCode::BadHeader,
            "header must be exactly `n m`",
        ));
    };

    let mut arity: Option<usize> = None;
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    let mut last_line = hline;
    for (line_no, text) in lines {
        last_line = line_no;
        let toks = tokens(line_no, text)?;
        if toks.len() != 2 && toks.len() != 3 {
            return Err(err(
                line_no,
                1,
                ParseErrorCode::WrongArity,
                format!("edge lines hold 2 or 3 vertices, found {}", toks.len()),
            ));
        }
        match arity {
            None => arity = Some(toks.len()),
            Some(a) if a != toks.len() => {
                return Err(err(
                    line_no,
                    1,
                    ParseErrorCode::MixedArity,
                    format!(
                        "expected {a} vertices per line as on earlier lines, found {}",
                        toks.len()
                    ),
                ))
            }
            _ => {}
        }
        for &(col, v) in &toks {
            if v >= n {
                return Err(err(
                    line_no,
                    col,
                    ParseErrorCode::OutOfRange,
                    format!("vertex {v} is not below n = {n}"),
                ));
            }
        }
        for w in toks.windows(2) {
            if w[0].1 >= w[1].1 {
                return Err(err(
                    line_no,
                    w[1].0,
                    ParseErrorCode::NotIncreasing,
                    "vertices on a line must be strictly increasing",
                ));
            }
        }
        let edge: Vec<Vertex> = toks.iter().map(|&(_, v)| v).collect();
        if !seen.insert(edge.clone()) {
            return Err(err(
                line_no,
                1,
                ParseErrorCode::DuplicateEdge,
                format!("edge {edge:?} repeated"),
            ));
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            1,
            ParseErrorCode::EdgeCountMismatch,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    // Every check that the constructors repeat has already passed.
    Ok(match arity {
        Some(2) => ParsedGraph::Two(
            SimpleGraph::with_vertices(n, edges.iter().map(|e| (e[0], e[1]))).expect("validated"),
        ),
        _ => ParsedGraph::Three(
            ThreeGraph::new(n, edges.iter().map(|e| [e[0], e[1], e[2]])).expect("validated"),
        ),
    })
}

/// Parses a file that must describe a 3-graph.
pub fn parse_three_graph(text: &str) -> Result<ThreeGraph, ParseError> {
    match parse(text)? {
        ParsedGraph::Three(g) => Ok(g),
        ParsedGraph::Two(_) => Err(err(
            1,
            1,
            ParseErrorCode::WrongArity,
            "expected a 3-graph, found pair lines",
        )),
    }
}

pub fn serialize_three_graph(g: &ThreeGraph) -> String {
    let mut edges: Vec<_> = g.edges().collect();
    edges.sort_by_key(|&[a, b, c]| (c, b, a));
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for [a, b, c] in edges {
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

/// Writes node positions `0..len`, not host labels.
pub fn serialize_simple_graph(h: &SimpleGraph) -> String {
    let adj = h.adjacency();
    let mut edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(a, nb)| nb.range(a + 1..).map(move |&b| (a, b)))
        .collect();
    edges.sort_by_key(|&(a, b)| (b, a));
    let mut out = format!("{} {}\n", h.len(), edges.len());
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
