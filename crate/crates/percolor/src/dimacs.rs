//! DIMACS edge-format I/O.
//!
//! Reads and writes the plain text format with a `p edge <n> <m>` problem
//! line followed by `e <u> <v>` lines (1-indexed). Parsing is strict:
//! unknown line types, self-loops, duplicate edges, out-of-range endpoints
//! and a wrong edge count are all rejected rather than repaired, so corpus
//! errors surface early.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing problem line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found} edge lines")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph construction failed: {0}")]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> DimacsError {
    DimacsError::Parse { line, msg: msg.into() }
}

pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj = [0u64; MAX_VERTICES];

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(parse_err(lineno, format!("expected 'p edge <n> <m>', got {line:?}")));
                }
                let n: usize = tokens[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "vertex count is not an integer"))?;
                let m: usize = tokens[3]
                    .parse()
                    .map_err(|_| parse_err(lineno, "edge count is not an integer"))?;
                if n > MAX_VERTICES {
                    return Err(parse_err(
                        lineno,
                        format!("graphs are capped at {MAX_VERTICES} vertices, header says {n}"),
                    ));
                }
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge line before problem line"))?;
                if tokens.len() != 3 {
                    return Err(parse_err(lineno, format!("expected 'e <u> <v>', got {line:?}")));
                }
                let u: usize = tokens[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "endpoint is not an integer"))?;
                let v: usize = tokens[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "endpoint is not an integer"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("endpoint out of range 1..={n}")));
                }
                let (a, b) = (u - 1, v - 1);
                if a == b {
                    return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
                }
                if adj[a] >> b & 1 == 1 {
                    return Err(parse_err(lineno, format!("duplicate edge ({u}, {v})")));
                }
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                edges.push((a, b));
            }
            _ => return Err(parse_err(lineno, format!("unrecognized line {line:?}"))),
        }
    }

    let (n, m) = header.ok_or(DimacsError::MissingHeader)?;
    if edges.len() != m {
        return Err(DimacsError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, edges)?)
}

pub fn read_dimacs<P: AsRef<Path>>(path: P) -> Result<Graph, DimacsError> {
    parse_dimacs(BufReader::new(File::open(path)?))
}

pub fn write_dimacs_to<W: Write>(graph: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "p edge {} {}", graph.n(), graph.num_edges())?;
    for &(u, v) in graph.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn write_dimacs<P: AsRef<Path>>(graph: &Graph, path: P) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_dimacs_to(graph, &mut w)?;
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    fn parse(s: &str) -> Result<Graph, DimacsError> {
        parse_dimacs(s.as_bytes())
    }

    #[test]
    fn round_trip_k5() {
        let k5 = complete(5).unwrap();
        let mut buf = Vec::new();
        write_dimacs_to(&k5, &mut buf).unwrap();
        let back = parse_dimacs(buf.as_slice()).unwrap();
        assert_eq!(back, k5);
    }

    #[test]
    fn accepts_comments_and_blank_lines() {
        let g = parse("c a triangle\n\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, complete(3).unwrap());
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse("p edge 3 1\ne 1 1\n").unwrap_err();
        assert!(matches!(err, DimacsError::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse("p edge 3 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert!(err.to_string().contains("duplicate edge"));
    }

    #[test]
    fn rejects_edge_count_mismatch() {
        let err = parse("p edge 3 3\ne 1 2\ne 2 3\n").unwrap_err();
        assert!(matches!(err, DimacsError::EdgeCountMismatch { declared: 3, found: 2 }));
    }

    #[test]
    fn rejects_out_of_range_and_malformed() {
        assert!(parse("p edge 3 1\ne 1 4\n").is_err());
        assert!(parse("p edge 3 1\ne 0 2\n").is_err());
        assert!(parse("e 1 2\n").is_err(), "edge before header");
        assert!(parse("p col 3 0\n").is_err(), "wrong format token");
        assert!(parse("q edge 3 0\n").is_err(), "unknown line type");
        assert!(matches!(parse(""), Err(DimacsError::MissingHeader)));
    }
}
