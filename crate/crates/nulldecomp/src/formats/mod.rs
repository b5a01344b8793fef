//! Text formats: labelled edge lists, graph6, and DOT output.

mod dot;
mod edge_list;
mod graph6;

pub use dot::{export_dot, Role};
pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{encode_graph6, parse_graph6};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadChecksumChar { offset: usize, byte: u8 },
    #[error("graph6: payload has {found} bytes, expected {expected}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("graph6: {extra} unexpected bytes after the payload")]
    TrailingData { extra: usize },
}
