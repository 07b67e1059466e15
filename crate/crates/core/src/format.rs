//! Text formats: graph6 (short form) and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte offset by
//! 63. Only the short form (`n ≤ 62`, single header byte) is supported.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("byte {offset}: long-form graph6 (n > {GRAPH6_MAX_N}) is not supported")]
    LongForm { offset: usize },
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated adjacency data, expected {expected} data bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: trailing data after the adjacency bytes")]
    TrailingData { offset: usize },
    #[error("byte {offset}: padding bits are not zero")]
    NonZeroPadding { offset: usize },
    #[error("graph with {0} vertices cannot be written in short-form graph6")]
    TooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some((&head, data)) = body.split_first() else {
        return Err(Graph6Error::EmptyInput);
    };
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::InvalidByte {
            offset: skip,
            byte: head,
        });
    }
    if head == 126 {
        return Err(Graph6Error::LongForm { offset: skip });
    }
    let n = (head - 63) as usize;
    let expected = data_len(n);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: skip + 1 + i,
                byte: b,
            });
        }
    }
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: skip + 1 + data.len(),
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: skip + 1 + expected,
        });
    }

    let mut g = Graph::empty(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for pad in pairs..expected * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonZeroPadding {
                offset: skip + 1 + pad / 6,
            });
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut bytes = vec![0u8; data_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bytes[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(bytes.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(bytes.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Splits a multi-graph graph6 file into `(line number, line)` pairs,
/// skipping blank lines and a bare header line. Line numbers are 1-based.
pub fn graph6_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty() && *l != GRAPH6_HEADER)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex-count header line")]
    MissingHeader,
    #[error("line {line}: `{token}` is not a non-negative integer")]
    NotAnInteger { line: usize, token: String },
    #[error("line {line}: expected `u v`, found {found} tokens")]
    MalformedLine { line: usize, found: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
}

/// Parses `n` on the first line followed by one `u v` pair per line
/// (0-based). Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let int = |line: usize, tok: &str| {
        tok.parse::<usize>().map_err(|_| EdgeListError::NotAnInteger {
            line,
            token: tok.to_string(),
        })
    };

    let (line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 1 {
        return Err(EdgeListError::MalformedLine {
            line,
            found: head.len(),
        });
    }
    let n = int(line, head[0])?;
    let mut g = Graph::empty(n);
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(EdgeListError::MalformedLine {
                line,
                found: toks.len(),
            });
        }
        let u = int(line, toks[0])?;
        let v = int(line, toks[1])?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::OutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn decodes_hand_encoded_line() {
        // 'D' = 5 vertices; "?{" = 000000 111100: bits 6..9 are (0,4) (1,4) (2,4) (3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(">>graph6<<@\n").unwrap(), Graph::empty(1));
        assert_eq!(write_graph6(&generators::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::EmptyInput));
        assert_eq!(parse_graph6(">>graph6<<"), Err(Graph6Error::EmptyInput));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::LongForm { offset: 0 }));
        assert_eq!(
            parse_graph6("D? "),
            Err(Graph6Error::InvalidByte { offset: 2, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(" "),
            Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::Truncated {
                offset: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph6("D???"), Err(Graph6Error::TrailingData { offset: 3 }));
        // 'D' needs 10 bits; '@' sets bit 11 which is padding.
        assert_eq!(parse_graph6("D?@"), Err(Graph6Error::NonZeroPadding { offset: 2 }));
        assert_eq!(write_graph6(&Graph::empty(63)), Err(Graph6Error::TooLarge(63)));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), generators::path(3));
        assert_eq!(
            parse_edge_list("2\n0 0"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            parse_edge_list("2\n0 1\n1 0"),
            Err(EdgeListError::DuplicateEdge { line: 3, u: 1, v: 0 })
        );
        assert_eq!(
            parse_edge_list("2\n0 2"),
            Err(EdgeListError::OutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert_eq!(
            parse_edge_list("2\n0 x"),
            Err(EdgeListError::NotAnInteger {
                line: 2,
                token: "x".into()
            })
        );
        assert_eq!(parse_edge_list("  \n"), Err(EdgeListError::MissingHeader));
        assert_eq!(
            parse_edge_list("3\n0 1 2"),
            Err(EdgeListError::MalformedLine { line: 2, found: 3 })
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generators::wheel(5).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
