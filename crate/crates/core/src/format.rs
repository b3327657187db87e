//! Line-oriented text formats for graphs and list assignments.
//!
//! Graph files hold one line per vertex, `v: n1 n2 n3 ...`, listing the
//! clockwise rotation at `v`. List files use the same shape, `v: c1 c2 c3`,
//! with colors in place of neighbors. `#` starts a comment and blank lines
//! are ignored.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::coloring::{Color, ListAssignment};
use crate::plane_graph::{GraphError, Label, PlaneGraph, RotationTable};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("list file names vertex {0}, which is not in the graph")]
    UnknownVertex(Label),
    #[error("list file has no entry for vertex {0}")]
    MissingList(Label),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses `key: v1 v2 ...` lines into a map. Duplicate keys are an error.
fn parse_rows(text: &str) -> Result<BTreeMap<u32, Vec<u32>>, FormatError> {
    let mut rows = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let colon = body
            .find(':')
            .ok_or_else(|| parse_error(line_no, 1, "expected `v: ...`"))?;
        let key_text = body[..colon].trim();
        let key_col = body.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
        let key: u32 = key_text
            .parse()
            .map_err(|_| parse_error(line_no, key_col, format!("bad vertex `{key_text}`")))?;
        if key == 0 {
            return Err(parse_error(line_no, key_col, "vertices must be positive"));
        }
        let mut values = Vec::new();
        let rest = &body[colon + 1..];
        let mut offset = colon + 1;
        for token in rest.split_whitespace() {
            let at = body[offset..]
                .find(token)
                .map(|p| p + offset)
                .unwrap_or(offset);
            offset = at + token.len();
            let value: u32 = token
                .parse()
                .map_err(|_| parse_error(line_no, at + 1, format!("bad number `{token}`")))?;
            values.push(value);
        }
        if rows.insert(key, values).is_some() {
            return Err(parse_error(
                line_no,
                key_col,
                format!("vertex {key} listed twice"),
            ));
        }
    }
    Ok(rows)
}

pub fn parse_rotation(text: &str) -> Result<RotationTable, FormatError> {
    let rows = parse_rows(text)?;
    for row in rows.values() {
        if row.contains(&0) {
            return Err(parse_error(0, 0, "vertices must be positive"));
        }
    }
    Ok(rows)
}

pub fn parse_graph(text: &str) -> Result<PlaneGraph, FormatError> {
    Ok(PlaneGraph::build_from_rotation(&parse_rotation(text)?)?)
}

pub fn read_graph(path: &Path) -> Result<PlaneGraph, FormatError> {
    parse_graph(&read(path)?)
}

/// Parses a list file against `g`; every vertex must have an entry.
pub fn parse_lists(g: &PlaneGraph, text: &str) -> Result<ListAssignment, FormatError> {
    let rows = parse_rows(text)?;
    let mut lists = vec![Vec::new(); g.vertex_count()];
    for (label, colors) in rows {
        let v = g
            .vertex_of(label)
            .ok_or(FormatError::UnknownVertex(label))?;
        lists[v] = colors;
    }
    for v in g.vertices() {
        if lists[v].is_empty() {
            return Err(FormatError::MissingList(g.label(v)));
        }
    }
    Ok(ListAssignment::new(lists))
}

pub fn read_lists(g: &PlaneGraph, path: &Path) -> Result<ListAssignment, FormatError> {
    parse_lists(g, &read(path)?)
}

/// Renders lists in the list-file format.
pub fn render_lists(g: &PlaneGraph, lists: &ListAssignment) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("{}:", g.label(v)));
        for c in lists.get(v) {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

/// Renders a total coloring as `v: c` lines.
pub fn render_coloring(g: &PlaneGraph, colors: &[Color]) -> String {
    g.vertices()
        .map(|v| format!("{}: {}\n", g.label(v), colors[v]))
        .collect()
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let g = parse_graph("# triangle\n1: 2 3\n\n2: 3 1  # second\n3: 1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.face_count(), 2);
    }

    #[test]
    fn reports_line_and_column() {
        match parse_graph("1: 2\n2: x\n") {
            Err(FormatError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_graph("1 2 3\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("1: 2\n1: 2\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn edges_must_appear_at_both_ends() {
        assert!(matches!(
            parse_graph("1: 2\n2:\n"),
            Err(FormatError::Graph(_))
        ));
    }

    #[test]
    fn list_file_round_trip() {
        let g = parse_graph("1: 2\n2: 1\n").unwrap();
        let l = parse_lists(&g, "1: 3 1 2\n2: 7\n").unwrap();
        assert_eq!(l.get(0), &[1, 2, 3]);
        assert_eq!(render_lists(&g, &l), "1: 1 2 3\n2: 7\n");
        assert!(matches!(
            parse_lists(&g, "1: 1\n"),
            Err(FormatError::MissingList(2))
        ));
        assert!(matches!(
            parse_lists(&g, "1: 1\n2: 1\n5: 1\n"),
            Err(FormatError::UnknownVertex(5))
        ));
    }
}
