//! The graph6 line format: a size prefix followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable byte
//! (value + 63).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line; a leading `>>graph6<<` header and a trailing
/// newline are accepted. Padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(malformed(skip + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let six = |i: usize| -> Result<usize> {
        body.get(i).map(|&b| (b - BIAS) as usize).ok_or_else(|| malformed(skip + i, "truncated size prefix"))
    };
    let (n, mut pos) = match body.first() {
        None => return Err(malformed(skip, "empty line")),
        Some(b'~') if body.get(1) == Some(&b'~') => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - BIAS) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != pos + needed {
        return Err(malformed(
            skip + body.len().min(pos + needed),
            format!("expected {needed} adjacency bytes for n={n}, found {}", body.len().saturating_sub(pos)),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("each pair appears once");
            }
            k += 1;
        }
    }
    pos += needed;
    if bits % 6 != 0 {
        let last = body[pos - 1] - BIAS;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed(skip + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses every non-empty line, tagging errors with the 0-based line number.
pub fn read_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i, parse_graph6(l.trim()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn tiny_graphs() {
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&named::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&named::complete(4)), "C~");
        assert_eq!(parse_graph6("A_").unwrap(), named::complete(2));
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), named::complete(2));
    }

    #[test]
    fn known_encoding() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn large_size_prefix() {
        let g = named::path(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::MalformedGraph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A_?"), Err(Error::MalformedGraph6 { .. })));
        assert!(matches!(parse_graph6("A "), Err(Error::MalformedGraph6 { offset: 1, .. })));
        // A` sets a padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::MalformedGraph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::MalformedGraph6 { .. })));
    }

    #[test]
    fn line_reader_skips_blanks() {
        let lines = read_graph6_lines("A_\n\nC~\nbad!\n");
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1].0, 2);
        assert!(lines[2].1.is_err());
    }
}
