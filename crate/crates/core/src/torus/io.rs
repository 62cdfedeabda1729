//! Text edge-list format.
//!
//! ```text
//! p torus <n> <m> <r>
//! e <i1> <j1> <i2> <j2> <h|v>
//! ```
//!
//! Edges are sorted by (smaller linear index, larger linear index) and the
//! first endpoint is the one with the smaller linear index. Blank lines and
//! lines starting with `#` are ignored when parsing.

use std::fmt::Write as _;

use super::{EdgeKind, TorusGraph, TorusParams, VertexId};
use crate::error::{Error, Result};
use crate::graph::EdgeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    pub a: VertexId,
    pub b: VertexId,
    pub kind: EdgeKind,
}

impl TorusGraph {
    pub fn edge_record(&self, e: EdgeId) -> EdgeRecord {
        let (a, b) = self.graph().edge(e);
        EdgeRecord {
            a: self.coords(a),
            b: self.coords(b),
            kind: self.edge_kind(e),
        }
    }

    /// One `e` line without the trailing newline.
    pub fn edge_line(&self, e: EdgeId) -> String {
        let EdgeRecord { a, b, kind } = self.edge_record(e);
        format!("e {} {} {} {} {}", a.i, a.j, b.i, b.j, kind.tag())
    }

    pub fn header_line(&self) -> String {
        let TorusParams { n, m, r } = self.params();
        format!("p torus {n} {m} {r}")
    }

    /// The whole graph in edge-list format.
    pub fn to_edge_list(&self) -> String {
        self.edge_list_of((0..self.graph().size()).collect::<Vec<_>>())
    }

    /// A header plus the given edges, sorted.
    pub fn edge_list_of(&self, mut edges: Vec<EdgeId>) -> String {
        edges.sort_unstable();
        let mut out = self.header_line();
        out.push('\n');
        for e in edges {
            let _ = writeln!(out, "{}", self.edge_line(e));
        }
        out
    }

    /// Resolves parsed records against this graph.
    pub fn resolve_records(&self, records: &[EdgeRecord]) -> Result<Vec<EdgeId>> {
        records
            .iter()
            .map(|rec| {
                let in_range =
                    |v: VertexId| v.i < self.rows() && v.j < self.cols();
                if !in_range(rec.a) || !in_range(rec.b) {
                    return Err(Error::NotAMatching(format!(
                        "vertex out of range in edge {}-{}",
                        rec.a, rec.b
                    )));
                }
                let a = self.vertex(rec.a.i, rec.a.j);
                let b = self.vertex(rec.b.i, rec.b.j);
                let e = self.edge_between(a, b).ok_or_else(|| {
                    Error::NotAMatching(format!("{} and {} are not adjacent", rec.a, rec.b))
                })?;
                if self.edge_kind(e) != rec.kind {
                    return Err(Error::NotAMatching(format!(
                        "edge {}-{} is not {:?}",
                        rec.a, rec.b, rec.kind
                    )));
                }
                Ok(e)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedEdgeList {
    pub params: Option<TorusParams>,
    pub edges: Vec<EdgeRecord>,
}

pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut params = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(&format!("bad integer `{s}`")));
        match fields.as_slice() {
            ["p", "torus", n, m, r] => {
                if params.is_some() {
                    return Err(err("duplicate header"));
                }
                params = Some(
                    TorusParams::new(num(n)?, num(m)?, num(r)?)
                        .map_err(|e| err(&e.to_string()))?,
                );
            }
            ["e", i1, j1, i2, j2, kind] => {
                let kind = match *kind {
                    "h" => EdgeKind::Horizontal,
                    "v" => EdgeKind::Vertical,
                    other => return Err(err(&format!("bad edge kind `{other}`"))),
                };
                edges.push(EdgeRecord {
                    a: VertexId {
                        i: num(i1)?,
                        j: num(j1)?,
                    },
                    b: VertexId {
                        i: num(i2)?,
                        j: num(j2)?,
                    },
                    kind,
                });
            }
            _ => return Err(err("expected `p torus n m r` or `e i1 j1 i2 j2 h|v`")),
        }
    }
    Ok(ParsedEdgeList { params, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::build_torus;

    #[test]
    fn export_format() {
        let t = build_torus(TorusParams::new(3, 8, 4).unwrap()).unwrap();
        let text = t.to_edge_list();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p torus 3 8 4");
        assert_eq!(lines.len(), 49);
        assert_eq!(lines[1], "e 0 0 0 1 h");
        assert_eq!(lines[2], "e 0 0 0 7 h");
        assert_eq!(lines[3], "e 0 0 1 0 v");
        assert!(lines[1..].iter().all(|l| l.starts_with("e ")));
    }

    #[test]
    fn parse_round_trip() {
        let t = build_torus(TorusParams::new(4, 7, 5).unwrap()).unwrap();
        let parsed = parse_edge_list(&t.to_edge_list()).unwrap();
        assert_eq!(parsed.params, Some(t.params()));
        let ids = t.resolve_records(&parsed.edges).unwrap();
        assert_eq!(ids, (0..t.graph().size()).collect::<Vec<_>>());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_edge_list("p torus 3 8 4\n\ne 0 0 0 x h\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_edge_list("q 1 2\n").is_err());
    }
}
