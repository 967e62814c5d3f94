//! Graph and sequence file formats.
//!
//! Two graph formats round-trip losslessly:
//!
//! - text: a `p N` header followed by `e u w` lines; `#` starts a
//!   comment; blank lines are ignored.
//! - JSON: `{"p": N, "edges": [[u, w], ...], "labels": [...]}` with
//!   `labels` optional.
//!
//! Sequences are whitespace-separated tokens `v:<id>` and `e:<u>-<w>`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Element, Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown sequence token `{0}` (expected v:<id> or e:<u>-<w>)")]
    UnknownToken(String),
    #[error("no edge {0}-{1} in the graph")]
    NoSuchEdge(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocFormat {
    Text,
    Json,
    /// Sniff: JSON if the first non-space byte is `{`.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub p: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn parse(input: &str, format: DocFormat) -> Result<GraphDocument, FormatError> {
        match format {
            DocFormat::Text => Self::parse_text(input),
            DocFormat::Json => Self::parse_json(input),
            DocFormat::Auto => {
                if input.trim_start().starts_with('{') {
                    Self::parse_json(input)
                } else {
                    Self::parse_text(input)
                }
            }
        }
    }

    pub fn parse_text(input: &str) -> Result<GraphDocument, FormatError> {
        let mut p: Option<usize> = None;
        let mut edges = Vec::new();
        for (line_idx, raw) in input.lines().enumerate() {
            let line_no = line_idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            let mut tokens = tokens_with_columns(line);
            let Some((col, head)) = tokens.next() else {
                continue;
            };
            match head {
                "p" => {
                    if p.is_some() {
                        return Err(syntax(line_no, col, "duplicate `p` header"));
                    }
                    let (ncol, n) = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, col, "`p` needs a vertex count"))?;
                    p = Some(parse_usize(n, line_no, ncol)?);
                }
                "e" => {
                    if p.is_none() {
                        return Err(syntax(line_no, col, "`e` line before `p` header"));
                    }
                    let (ucol, u) = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, col, "`e` needs two endpoints"))?;
                    let (wcol, w) = tokens
                        .next()
                        .ok_or_else(|| syntax(line_no, col, "`e` needs two endpoints"))?;
                    edges.push((
                        parse_usize(u, line_no, ucol)?,
                        parse_usize(w, line_no, wcol)?,
                    ));
                }
                other => {
                    return Err(syntax(line_no, col, &format!("unknown directive `{other}`")));
                }
            }
            if let Some((col, tok)) = tokens.next() {
                return Err(syntax(line_no, col, &format!("trailing token `{tok}`")));
            }
        }
        let p = p.ok_or_else(|| syntax(1, 1, "missing `p` header"))?;
        Ok(GraphDocument {
            p,
            edges,
            labels: None,
        })
    }

    pub fn parse_json(input: &str) -> Result<GraphDocument, FormatError> {
        serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.p);
        for &(u, w) in &self.edges {
            out.push_str(&format!("e {u} {w}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::build(self.p, &self.edges)
    }

    pub fn from_graph(g: &Graph) -> GraphDocument {
        GraphDocument {
            p: g.vertex_count(),
            edges: g.edge_pairs().to_vec(),
            labels: None,
        }
    }
}

fn syntax(line: usize, column: usize, message: &str) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.to_owned(),
    }
}

fn parse_usize(token: &str, line: usize, column: usize) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, column, &format!("expected a number, got `{token}`")))
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, tok)
    })
}

/// Parses a whitespace-separated element token list against a graph.
/// The result still needs `ConstructionSequence::validate`.
pub fn parse_sequence(g: &Graph, input: &str) -> Result<Vec<Element>, FormatError> {
    input.split_whitespace().map(|tok| parse_element(g, tok)).collect()
}

fn parse_element(g: &Graph, token: &str) -> Result<Element, FormatError> {
    if let Some(v) = token.strip_prefix("v:") {
        let v: usize = v
            .parse()
            .map_err(|_| FormatError::UnknownToken(token.to_owned()))?;
        if v >= g.vertex_count() {
            return Err(FormatError::UnknownToken(token.to_owned()));
        }
        return Ok(Element::Vertex(crate::graph::VertexId(v)));
    }
    if let Some(pair) = token.strip_prefix("e:") {
        let (u, w) = pair
            .split_once('-')
            .ok_or_else(|| FormatError::UnknownToken(token.to_owned()))?;
        let u: usize = u
            .parse()
            .map_err(|_| FormatError::UnknownToken(token.to_owned()))?;
        let w: usize = w
            .parse()
            .map_err(|_| FormatError::UnknownToken(token.to_owned()))?;
        if u >= g.vertex_count() || w >= g.vertex_count() {
            return Err(FormatError::UnknownToken(token.to_owned()));
        }
        let e = g
            .edge_between(crate::graph::VertexId(u), crate::graph::VertexId(w))
            .ok_or(FormatError::NoSuchEdge(u, w))?;
        return Ok(Element::Edge(e));
    }
    Err(FormatError::UnknownToken(token.to_owned()))
}

/// Canonical token for an element: `v:<id>` or `e:<u>-<w>`.
pub fn element_token(g: &Graph, el: Element) -> String {
    match el {
        Element::Vertex(v) => format!("v:{}", v.0),
        Element::Edge(e) => {
            let (u, w) = g.endpoints(e);
            format!("e:{}-{}", u.0, w.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use crate::sequence::ConstructionSequence;

    #[test]
    fn parse_text_p3() {
        let doc = GraphDocument::parse_text("p 3\ne 0 1\ne 1 2\n").unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
    }

    #[test]
    fn parse_text_with_comments() {
        let doc =
            GraphDocument::parse_text("# a star\np 4\ne 0 1 # spoke\n\ne 0 2\ne 0 3\n").unwrap();
        assert_eq!(doc.edges.len(), 3);
    }

    #[test]
    fn parse_json_star() {
        let doc = GraphDocument::parse_json(r#"{"p":4,"edges":[[0,1],[0,2],[0,3]]}"#).unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!(g.degree(VertexId(0)), 3);
    }

    #[test]
    fn out_of_range_edge_is_graph_error() {
        let doc = GraphDocument::parse_text("p 3\ne 0 5\n").unwrap();
        assert!(matches!(
            doc.to_graph(),
            Err(GraphError::VertexOutOfRange { vertex: 5, p: 3 })
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = GraphDocument::parse_text("p 3\nq 0 1\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 2,
                column: 1,
                message: "unknown directive `q`".into()
            }
        );
        let err = GraphDocument::parse_text("p x\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, column: 3, .. }));
    }

    #[test]
    fn round_trip_both_formats() {
        let doc = GraphDocument::parse_text("p 4\ne 0 1\ne 2 3\n").unwrap();
        assert_eq!(GraphDocument::parse_text(&doc.to_text()).unwrap(), doc);
        assert_eq!(GraphDocument::parse_json(&doc.to_json()).unwrap(), doc);
        assert_eq!(
            GraphDocument::parse(&doc.to_json(), DocFormat::Auto).unwrap(),
            doc
        );
    }

    #[test]
    fn sequence_tokens_round_trip() {
        let g = GraphDocument::parse_text("p 3\ne 0 1\ne 1 2\n")
            .unwrap()
            .to_graph()
            .unwrap();
        let order = parse_sequence(&g, "v:0 v:1 v:2 e:0-1 e:1-2").unwrap();
        let s = ConstructionSequence::validate(&g, &order).unwrap();
        assert_eq!(s.total_cost().unwrap().total, 10);
        let rendered: Vec<String> = order.iter().map(|&el| element_token(&g, el)).collect();
        assert_eq!(rendered.join(" "), "v:0 v:1 v:2 e:0-1 e:1-2");
        // reversed endpoint order also resolves
        assert!(parse_sequence(&g, "e:1-0 v:0").is_ok());
    }

    #[test]
    fn bad_sequence_tokens() {
        let g = GraphDocument::parse_text("p 3\ne 0 1\n").unwrap().to_graph().unwrap();
        assert!(matches!(
            parse_sequence(&g, "v:9"),
            Err(FormatError::UnknownToken(_))
        ));
        assert_eq!(
            parse_sequence(&g, "e:0-2").unwrap_err(),
            FormatError::NoSuchEdge(0, 2)
        );
        assert!(matches!(
            parse_sequence(&g, "x:1"),
            Err(FormatError::UnknownToken(_))
        ));
    }
}
