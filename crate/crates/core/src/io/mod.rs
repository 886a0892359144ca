//! Text formats for graphs: the standard graph6 encoding and a plain
//! edge list with an `n m` header.

pub mod edgelist;
pub mod graph6;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("no graph found in input")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Guesses the format from the first meaningful line.
pub fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(graph6::HEADER) => Format::Graph6,
        Some(l) if l.bytes().all(|b| (63..=126).contains(&b)) => Format::Graph6,
        _ => Format::EdgeList,
    }
}

/// Reads one graph in either format.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    match detect(text) {
        Format::Graph6 => read_graphs(text)?.into_iter().next().ok_or(FormatError::Empty),
        Format::EdgeList => edgelist::decode(text),
    }
}

/// Reads every graph of a graph6 corpus file (one per line), or the single
/// graph of an edge-list file.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>, FormatError> {
    match detect(text) {
        Format::EdgeList => Ok(vec![edgelist::decode(text)?]),
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(graph6::decode)
            .collect(),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => edgelist::encode(g),
        Format::Graph6 => {
            let mut s = graph6::encode(g);
            s.push('\n');
            s
        }
    }
}
