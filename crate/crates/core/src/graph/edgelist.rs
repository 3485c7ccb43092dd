//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let [u, v] = parse_pair(line, content)?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, message: format!("vertex out of range 0..{n}") });
        }
        if u == v {
            return Err(Error::Parse { line, message: format!("self-loop at vertex {u}") });
        }
        edges.push((line, u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header announces {m} edges but {} were given", edges.len()),
        });
    }

    let mut seen = std::collections::BTreeSet::new();
    for &(line, u, v) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, message: format!("duplicate edge {{{u}, {v}}}") });
        }
    }
    Graph::new(n, edges.into_iter().map(|(_, u, v)| (u, v)))
        .map_err(|e| Error::Parse { line: header_line, message: e.to_string() })
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_edge_list(&text)
}

/// Serializes with `u < v` on each line, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found {:?}", content),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| Error::Parse { line, message: format!("`{s}`: {e}") })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1\n\n# middle\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
    }

    #[test]
    fn rejects_duplicates_and_loops() {
        let dup = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }));
        let lp = parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert!(matches!(lp, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_bad_counts_and_tokens() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("0 0\n").is_err());
    }

    #[test]
    fn writer_output_parses_back() {
        let g = Graph::smith_f8();
        let text = to_edge_list(&g);
        assert!(text.starts_with("8 7\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
