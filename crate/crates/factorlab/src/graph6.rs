//! Reader for the standard graph6 ASCII format (simple graphs only).
//!
//! Supports the short size header (`n <= 62`); the extended headers used for
//! larger graphs are rejected. Multigraphs are out of the format's reach and
//! use the edge-list text format instead.

use crate::graph::{Graph, GraphError};

/// Decodes a single graph6 line. A leading `>>graph6<<` marker is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Parse {
            line: 1,
            msg: "empty graph6 string".into(),
        });
    }
    if bytes[0] == 126 {
        return Err(GraphError::Parse {
            line: 1,
            msg: "extended graph6 size header (n > 62) not supported".into(),
        });
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(GraphError::Parse {
            line: 1,
            msg: format!("invalid size byte {}", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(GraphError::Parse {
            line: 1,
            msg: format!(
                "truncated bit field: need {} bytes, found {}",
                nbytes,
                body.len()
            ),
        });
    }
    if body.len() > nbytes {
        return Err(GraphError::Parse {
            line: 1,
            msg: "trailing bytes after bit field".into(),
        });
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("invalid character {}", b),
            });
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut pairs = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                pairs.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, pairs)
}

/// Reads a whole file: one graph per line, blank lines skipped, a
/// `>>graph6<<` header line tolerated. Yields one result per data line.
pub fn parse_graph6_stream(text: &str) -> impl Iterator<Item = Result<Graph, GraphError>> + '_ {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != ">>graph6<<")
        .map(parse_graph6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4() {
        // 'C' = 63+4, '~' = 63+63 = all six bits set
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert!(g.is_cubic());
    }

    #[test]
    fn decodes_single_edge() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.endpoints(0), (0, 1));
    }

    #[test]
    fn decodes_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // truncated
        assert!(parse_graph6("C~~").is_err()); // trailing
        assert!(parse_graph6("C\t!").is_err()); // invalid characters
        assert!(parse_graph6("~??").is_err()); // extended header
    }

    #[test]
    fn stream_skips_header_and_blanks() {
        let graphs: Vec<_> = parse_graph6_stream(">>graph6<<\nC~\n\nA_\n")
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 4);
        assert_eq!(graphs[1].n(), 2);
    }
}
