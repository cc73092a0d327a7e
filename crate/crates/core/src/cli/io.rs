//! Plain-text graph formats.
//!
//! Edge list: a header line `n m` followed by exactly `m` lines `u v`.
//! DIMACS: `c` comment lines, one `p edge n m` line, then `m` lines
//! `e u v`. Blank lines are ignored in both, as are `#` comments in the
//! edge-list format. Vertices are 1-based.

use std::fmt::{self, Write as _};

use clap::ValueEnum;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum GraphFormat {
    #[value(name = "edgelist")]
    EdgeList,
    #[value(name = "dimacs")]
    Dimacs,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

/// DIMACS if the first meaningful line starts with `p` or `c`, otherwise
/// edge list.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.chars().next()) {
        Some('p') | Some('c') => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

struct Cursor<'a> {
    line: usize,
    line_len: usize,
    tokens: std::vec::IntoIter<Token<'a>>,
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        Cursor {
            line,
            line_len: text.chars().count(),
            tokens: tokens(text).into_iter(),
        }
    }

    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        let end = self.line_len + 1;
        self.tokens
            .next()
            .ok_or_else(|| self.error(end, format!("expected {what}")))
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        let token = self.next(what)?;
        token
            .text
            .parse::<usize>()
            .map(|v| (v, token.column))
            .map_err(|_| self.error(token.column, format!("expected {what}, found `{}`", token.text)))
    }

    fn keyword(&mut self, expected: &[&str]) -> Result<(), ParseError> {
        let token = self.next(&format!("`{}`", expected[0]))?;
        if expected.contains(&token.text) {
            Ok(())
        } else {
            Err(self.error(
                token.column,
                format!("expected `{}`, found `{}`", expected[0], token.text),
            ))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.tokens.next() {
            Some(t) => Err(self.error(t.column, format!("unexpected trailing `{}`", t.text))),
            None => Ok(()),
        }
    }
}

struct Builder {
    n: usize,
    declared: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn push(&mut self, cursor: &mut Cursor<'_>) -> Result<(), ParseError> {
        let (u, cu) = cursor.number("vertex")?;
        let (v, cv) = cursor.number("vertex")?;
        cursor.finish()?;
        for (vertex, column) in [(u, cu), (v, cv)] {
            if vertex == 0 || vertex > self.n {
                return Err(cursor.error(
                    column,
                    format!("vertex {vertex} out of range 1..={}", self.n),
                ));
            }
        }
        if u == v {
            return Err(cursor.error(cu, format!("self-loop at vertex {u}")));
        }
        if self.edges.len() == self.declared {
            return Err(cursor.error(1, format!("more than the declared {} edges", self.declared)));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn build(self, last_line: usize) -> Result<Graph, ParseError> {
        if self.edges.len() != self.declared {
            return Err(ParseError {
                line: last_line,
                column: 1,
                message: format!(
                    "declared {} edges but found {}",
                    self.declared,
                    self.edges.len()
                ),
            });
        }
        Graph::new(self.n, self.edges).map_err(|e| ParseError {
            line: last_line,
            column: 1,
            message: e.to_string(),
        })
    }
}

fn header_error(line: usize, e: GraphError) -> ParseError {
    ParseError {
        line,
        column: 1,
        message: e.to_string(),
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    let mut builder: Option<Builder> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut cursor = Cursor::new(line, raw);
        match format {
            GraphFormat::EdgeList => {
                if trimmed.starts_with('#') {
                    continue;
                }
                match builder.as_mut() {
                    None => {
                        let (n, _) = cursor.number("vertex count")?;
                        let (m, _) = cursor.number("edge count")?;
                        cursor.finish()?;
                        if n == 0 {
                            return Err(header_error(line, GraphError::NoVertices));
                        }
                        builder = Some(Builder {
                            n,
                            declared: m,
                            edges: Vec::with_capacity(m),
                        });
                    }
                    Some(b) => b.push(&mut cursor)?,
                }
            }
            GraphFormat::Dimacs => match trimmed.chars().next() {
                Some('c') => continue,
                Some('p') => {
                    if builder.is_some() {
                        return Err(cursor.error(1, "duplicate problem line"));
                    }
                    cursor.keyword(&["p"])?;
                    cursor.keyword(&["edge", "col"])?;
                    let (n, _) = cursor.number("vertex count")?;
                    let (m, _) = cursor.number("edge count")?;
                    cursor.finish()?;
                    if n == 0 {
                        return Err(header_error(line, GraphError::NoVertices));
                    }
                    builder = Some(Builder {
                        n,
                        declared: m,
                        edges: Vec::with_capacity(m),
                    });
                }
                Some('e') => {
                    let Some(b) = builder.as_mut() else {
                        return Err(cursor.error(1, "edge line before the problem line"));
                    };
                    cursor.keyword(&["e"])?;
                    b.push(&mut cursor)?;
                }
                _ => {
                    let column = raw.chars().take_while(|c| c.is_whitespace()).count() + 1;
                    return Err(cursor.error(column, "expected a `c`, `p` or `e` line"));
                }
            },
        }
    }
    match builder {
        Some(b) => b.build(last_line),
        None => Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing header".into(),
        }),
    }
}

/// Edges are written sorted, each as `min max`.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "{} {}", g.order(), g.size()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.order(), g.size()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {u} {v}").unwrap();
            }
        }
    }
    out
}
