//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-indexed).
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList { line, reason: reason.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let token = fields.next().ok_or_else(|| err(line_no, format!("missing {what}")))?;
        token.parse().map_err(|_| err(line_no, format!("invalid {what} `{token}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(err(line_no, format!("more than the declared {m} edges")));
        }
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(err(text.lines().count().max(1), format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n2 0\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::LoopEdge(1)));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { line: 1, .. })));
    }
}
