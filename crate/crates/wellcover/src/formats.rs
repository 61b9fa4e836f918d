//! DIMACS edge and CNF formats.
//!
//! Graphs use `p edge <n> <m>` followed by `m` lines `e <u> <v>` with
//! 1-based endpoints. Vertex labels travel in comment lines
//! `c v <i> <label>`, which other DIMACS tools ignore. Formulas use
//! `p cnf <n> <m>` followed by zero-terminated clauses of exactly three
//! literals.

use std::fmt::Write as _;

use thiserror::Error;
use wellcover_core::graph::GraphBuilder;
use wellcover_core::{CnfFormula, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| err(line, format!("{what} {token:?} is not a valid number")))
}

/// Parses a DIMACS edge file. Parallel edges collapse; self-loops are errors.
pub fn parse_dimacs_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut edge_lines = 0usize;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None => {}
            Some("c") => {
                if tokens.next() == Some("v") {
                    let v: usize = number(line, tokens.next(), "labelled vertex")?;
                    let label = tokens.collect::<Vec<_>>().join(" ");
                    labels.push((line, v, label));
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "duplicate \"p\" line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(err(line, "malformed header, expected \"p edge <n> <m>\""));
                }
                let n = number(line, tokens.next(), "vertex count")?;
                let m = number(line, tokens.next(), "edge count")?;
                if tokens.next().is_some() {
                    return Err(err(line, "malformed header, trailing tokens"));
                }
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
            }
            Some("e") => {
                let (Some((n, _)), Some(b)) = (header, builder.as_mut()) else {
                    return Err(err(line, "edge line before the \"p edge\" header"));
                };
                let u: usize = number(line, tokens.next(), "endpoint")?;
                let v: usize = number(line, tokens.next(), "endpoint")?;
                if tokens.next().is_some() {
                    return Err(err(line, "edge line has trailing tokens"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..{n}")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                b.add_edge(u - 1, v - 1)
                    .map_err(|e| err(line, e.to_string()))?;
                edge_lines += 1;
            }
            Some(other) => return Err(err(line, format!("unknown line type {other:?}"))),
        }
    }
    let (Some((n, m)), Some(b)) = (header, builder) else {
        return Err(err(
            text.lines().count().max(1),
            "missing \"p edge <n> <m>\" header",
        ));
    };
    if edge_lines != m {
        return Err(err(
            text.lines().count().max(1),
            format!("header announces {m} edges, found {edge_lines}"),
        ));
    }
    let mut g = b.build();
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|v| (v + 1).to_string()).collect();
        for (line, v, label) in labels {
            if v == 0 || v > n {
                return Err(err(line, format!("labelled vertex {v} outside 1..{n}")));
            }
            names[v - 1] = label;
        }
        g = g.with_labels(names);
    }
    Ok(g)
}

/// Emits `g` with edges in lexicographic order, preceded by label comments
/// when `g` carries labels.
pub fn emit_dimacs_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        for (v, label) in labels.iter().enumerate() {
            writeln!(out, "c v {} {label}", v + 1).unwrap();
        }
    }
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a DIMACS CNF file whose clauses all have exactly three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut pending: Vec<i32> = Vec::new();
    let mut pending_line = 0;
    let mut last_line = 1;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(err(line, "duplicate \"p\" line"));
            }
            let mut tokens = trimmed.split_whitespace().skip(1);
            if tokens.next() != Some("cnf") {
                return Err(err(line, "malformed header, expected \"p cnf <n> <m>\""));
            }
            let n = number(line, tokens.next(), "variable count")?;
            let m = number(line, tokens.next(), "clause count")?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err(line, "clause before the \"p cnf\" header"));
        };
        for token in trimmed.split_whitespace() {
            let lit: i32 = number(line, Some(token), "literal")?;
            if lit == 0 {
                let clause: [i32; 3] = pending.as_slice().try_into().map_err(|_| {
                    err(
                        pending_line.max(1),
                        format!(
                            "clause has {} literals; only 3-SAT instances with exactly three literals per clause are accepted",
                            pending.len()
                        ),
                    )
                })?;
                clauses.push(clause);
                pending.clear();
                continue;
            }
            if lit.unsigned_abs() as usize > n {
                return Err(err(
                    line,
                    format!("literal {lit} refers to a variable outside 1..{n}"),
                ));
            }
            if pending.is_empty() {
                pending_line = line;
            }
            pending.push(lit);
        }
    }
    let Some((n, m)) = header else {
        return Err(err(last_line, "missing \"p cnf <n> <m>\" header"));
    };
    if !pending.is_empty() {
        return Err(err(pending_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(err(
            last_line,
            format!("header announces {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses).map_err(|e| err(last_line, e.to_string()))
}

pub fn emit_dimacs_cnf(f: &CnfFormula) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", f.num_vars(), f.clauses().len()).unwrap();
    for [a, b, c] in f.clauses() {
        writeln!(out, "{a} {b} {c} 0").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_examples() {
        assert_eq!(
            parse_dimacs_graph("p edge 2 1\ne 1 2").unwrap(),
            Graph::complete(2)
        );
        let k3 = parse_dimacs_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(emit_dimacs_graph(&k3), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn graph_errors_cite_lines() {
        let e = parse_dimacs_graph("c hi\np edge 2 1\ne 1 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_dimacs_graph("p edge 2 1\np edge 2 1\ne 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("duplicate"));
        let e = parse_dimacs_graph("p edg 2 1\n").unwrap_err();
        assert!(e.message.contains("malformed header"));
        assert!(parse_dimacs_graph("p edge 2 1\ne 2 2\n").is_err());
        assert!(parse_dimacs_graph("e 1 2\n").is_err());
    }

    #[test]
    fn labels_round_trip() {
        let g = Graph::path(3).with_labels(vec!["a".into(), "b c".into(), "d".into()]);
        let text = emit_dimacs_graph(&g);
        assert_eq!(parse_dimacs_graph(&text).unwrap(), g);
    }

    #[test]
    fn cnf_examples() {
        let f = parse_dimacs_cnf("c fig\np cnf 3 2\n1 2 3 0\n-1 -2\n-3 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, 2, 3], [-1, -2, -3]]);
        assert_eq!(parse_dimacs_cnf(&emit_dimacs_cnf(&f)).unwrap(), f);
        let e = parse_dimacs_cnf("p cnf 3 1\n1 2 0\n").unwrap_err();
        assert!(e.message.contains("3-SAT"));
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n").is_err());
    }
}
