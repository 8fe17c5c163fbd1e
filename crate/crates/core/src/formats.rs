//! graph6, plain edge-list text, and DOT export.
//!
//! graph6 follows the public format description: a size header of one byte
//! (`n + 63`, n ≤ 62), or `~` plus three bytes (n ≤ 258047), or `~~` plus
//! six bytes, followed by the upper triangle of the adjacency matrix taken
//! column by column, packed six bits per byte with an offset of 63. The
//! trailing pad bits must be zero.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let s = s.trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let sextet = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| g6_err("truncated size header"))
    };
    let (n, body) = if bytes[0] != 126 {
        (sextet(0)?, &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        if n < 63 {
            return Err(g6_err(format!("size {n} uses the long header but fits in one byte")));
        }
        (n, &bytes[4..])
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sextet(i)?;
        }
        if n < 258048 {
            return Err(g6_err(format!("size {n} uses the eight-byte header needlessly")));
        }
        (n, &bytes[8..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} edge bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if (b >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(adj))
}

/// `n` on the first line, then one `u v` line per edge (`u < v`, sorted).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments (whole-line or
/// trailing) are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::EdgeList { line: 0, msg: "missing vertex count".into() })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line,
        msg: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(Error::EdgeList { line, msg: format!("expected \"u v\", found {l:?}") })
            }
        }
    }
    Graph::new(n, &edges).map_err(|e| match e {
        Error::TooManyVertices { .. } => e,
        other => Error::EdgeList { line: 0, msg: other.to_string() },
    })
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // petgraph's reference string for this 5-vertex graph
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::new(2, &[(0, 1)]).unwrap()), "A_");
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn long_header() {
        let e: Vec<_> = (1..64).map(|i| (i - 1, i)).collect();
        let p64 = Graph::new(64, &e).unwrap();
        let s = to_graph6(&p64);
        assert!(s.starts_with("~?@?"));
        assert_eq!(from_graph6(&s).unwrap(), p64);
        assert!(matches!(
            from_graph6("~??~"),
            Err(Error::Graph6(_))
        ));
    }

    #[test]
    fn malformed_graph6() {
        // 2 vertices: one bit, five pad bits; "A`" sets a pad bit.
        assert!(matches!(from_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C~~"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("C }"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6(""), Err(Error::Graph6(_))));
        // 65 vertices is above the ceiling
        let mut s = String::from("~?@@");
        s.extend(std::iter::repeat_n('?', (65 * 64 / 2usize).div_ceil(6)));
        assert!(matches!(from_graph6(&s), Err(Error::TooManyVertices { n: 65, .. })));
    }

    #[test]
    fn edge_list_parsing() {
        let g = from_edge_list("# triangle\n3\n0 1\n1 2 # closing\n\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(to_edge_list(&g), "3\n0 1\n0 2\n1 2\n");
        assert!(from_edge_list("3\n0 3\n").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n");
    }
}
