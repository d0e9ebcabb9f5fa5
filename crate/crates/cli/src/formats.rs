//! JSON graph and incidence files.
//!
//! A graph file is `{"n": .., "edges": [[i, j], ..], "d": ..}` with `d`
//! optional; an incidence file is `{"d": .., "n": .., "facets": [[..], ..]}`.

use std::fmt::{self, Write as _};
use std::path::Path;

use polyrec_core::{Graph, VertexFacetIncidence};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The input could not be read as a graph or incidence file.
#[derive(Debug)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceFile {
    pub d: usize,
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Graph(GraphFile),
    Incidence(IncidenceFile),
}

impl GraphFile {
    pub fn from_graph(g: &Graph, d: Option<usize>) -> Self {
        GraphFile {
            n: g.num_vertices(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            d,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, ParseError> {
        let mut seen = std::collections::HashSet::new();
        for &[i, j] in &self.edges {
            if i >= j || j >= self.n {
                return Err(ParseError(format!("edge [{i}, {j}] must satisfy 0 <= i < j < n = {}", self.n)));
            }
            if !seen.insert((i, j)) {
                return Err(ParseError(format!("edge [{i}, {j}] appears twice")));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[i, j]| (i, j)).collect();
        Graph::new(self.n, &edges).map_err(|e| ParseError(e.to_string()))
    }

    /// Edges one per line, two-space indent.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::from("{\n");
        writeln!(out, "  \"n\": {},", self.n).unwrap();
        if let Some(d) = self.d {
            writeln!(out, "  \"d\": {d},").unwrap();
        }
        let rows: Vec<String> = self.edges.iter().map(|[i, j]| format!("[{i}, {j}]")).collect();
        write_rows(&mut out, "edges", &rows);
        out.push_str("}\n");
        out
    }
}

impl IncidenceFile {
    /// Facets sorted within and across.
    pub fn from_incidence(p: &VertexFacetIncidence) -> Self {
        IncidenceFile {
            d: p.dim(),
            n: p.num_vertices(),
            facets: p.canonical_facets(),
        }
    }

    pub fn to_incidence(&self) -> Result<VertexFacetIncidence, ParseError> {
        VertexFacetIncidence::new(self.d, self.n, &self.facets).map_err(|e| ParseError(e.to_string()))
    }

    /// Facets one per line, two-space indent.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::from("{\n");
        writeln!(out, "  \"d\": {},", self.d).unwrap();
        writeln!(out, "  \"n\": {},", self.n).unwrap();
        let rows: Vec<String> = self
            .facets
            .iter()
            .map(|f| {
                let items: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                format!("[{}]", items.join(", "))
            })
            .collect();
        write_rows(&mut out, "facets", &rows);
        out.push_str("}\n");
        out
    }
}

fn write_rows(out: &mut String, key: &str, rows: &[String]) {
    if rows.is_empty() {
        writeln!(out, "  \"{key}\": []").unwrap();
        return;
    }
    writeln!(out, "  \"{key}\": [").unwrap();
    for (i, row) in rows.iter().enumerate() {
        let comma = if i + 1 < rows.len() { "," } else { "" };
        writeln!(out, "    {row}{comma}").unwrap();
    }
    out.push_str("  ]\n");
}

pub fn parse_input(text: &str) -> Result<InputFile, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError("top level must be a JSON object".into()))?;
    let decode = |e: serde_json::Error| ParseError(e.to_string());
    if obj.contains_key("facets") {
        serde_json::from_value(value).map(InputFile::Incidence).map_err(decode)
    } else if obj.contains_key("edges") {
        serde_json::from_value(value).map(InputFile::Graph).map_err(decode)
    } else {
        Err(ParseError("expected an \"edges\" or a \"facets\" key".into()))
    }
}

pub fn read_input(path: &Path) -> Result<InputFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|ParseError(msg)| ParseError(format!("{}: {msg}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyrec_core::catalogue::pentasm;

    #[test]
    fn canonical_incidence_round_trips() {
        let p = pentasm(4).unwrap();
        let file = IncidenceFile::from_incidence(&p);
        let text = file.to_canonical_json();
        assert!(text.starts_with("{\n  \"d\": 4,\n  \"n\": 9,\n  \"facets\": [\n    [0, "));
        match parse_input(&text).unwrap() {
            InputFile::Incidence(back) => assert_eq!(back.to_incidence().unwrap(), p.canonicalized()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn graph_files_are_checked() {
        let ok = parse_input(r#"{"n": 3, "edges": [[0, 1], [1, 2]], "d": 2}"#).unwrap();
        let InputFile::Graph(g) = ok else { panic!() };
        assert_eq!(g.d, Some(2));
        assert_eq!(g.to_graph().unwrap().num_edges(), 2);
        let reversed = GraphFile {
            n: 3,
            edges: vec![[1, 0]],
            d: None,
        };
        assert!(reversed.to_graph().is_err());
        let twice = GraphFile {
            n: 3,
            edges: vec![[0, 1], [0, 1]],
            d: None,
        };
        assert!(twice.to_graph().is_err());
        assert!(parse_input("{\"n\": 3").is_err());
        assert!(parse_input("[1, 2]").is_err());
        assert!(parse_input(r#"{"n": 3}"#).is_err());
        assert!(parse_input(r#"{"n": 3, "edges": [], "extra": 1}"#).is_err());
    }
}
