//! graph6, the undirected format used by nauty.
//!
//! The order `n` comes first: one byte `n + 63` for `n <= 62`, the byte 126
//! followed by three 6-bit groups for `n <= 258047`, or two 126 bytes and
//! six groups beyond that. The upper triangle of the adjacency matrix
//! follows, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six
//! bits per byte with the high bit first, each byte offset by 63.

use nulldecomp_core::Graph;

use super::ParseError;

const HEADER: &str = ">>graph6<<";

fn check_byte(offset: usize, byte: u8) -> Result<u8, ParseError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(ParseError::BadChecksumChar { offset, byte })
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let trimmed = line.trim();
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let truncated = |expected: usize| ParseError::TruncatedPayload {
        expected,
        found: body.len(),
    };
    if body.is_empty() {
        return Err(truncated(1));
    }

    let group = |range: std::ops::Range<usize>| -> Result<usize, ParseError> {
        if body.len() < range.end {
            return Err(truncated(range.end));
        }
        range.into_iter().try_fold(0usize, |acc, i| {
            Ok((acc << 6) | check_byte(skip + i, body[i])? as usize)
        })
    };
    let (n, start) = if body[0] != 126 {
        (group(0..1)?, 1)
    } else if body.get(1) != Some(&126) {
        (group(1..4)?, 4)
    } else {
        (group(2..8)?, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let payload_len = bits.div_ceil(6);
    let end = start + payload_len;
    if body.len() < end {
        return Err(truncated(end));
    }
    if body.len() > end {
        return Err(ParseError::TrailingData {
            extra: body.len() - end,
        });
    }
    let payload = body[start..end]
        .iter()
        .enumerate()
        .map(|(i, &b)| check_byte(skip + start + i, b))
        .collect::<Result<Vec<u8>, _>>()?;

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if payload[k / 6] & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 cannot encode loops or repeated edges"))
}

/// Encodes `g` as graph6, without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_groups = |out: &mut Vec<u8>, count: usize| {
        for i in (0..count).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, 6);
    }

    let mut current = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            current <<= 1;
            if g.has_edge(i.into(), j.into()) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use nulldecomp_core::VertexId;

    #[test]
    fn small_codes() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        // 'w' = 119 = 63 + 0b111000: x(0,1), x(0,2), x(1,2) all set.
        let c3 = parse_graph6("Bw\n").unwrap();
        assert_eq!(c3.size(), 3);
        assert!(c3.has_edge(VertexId(1), VertexId(2)));
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn malformed_codes() {
        assert_eq!(
            parse_graph6("A"),
            Err(ParseError::TruncatedPayload {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6(""),
            Err(ParseError::TruncatedPayload {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(ParseError::TrailingData { extra: 1 })
        );
        assert_eq!(
            parse_graph6("A "),
            Err(ParseError::TruncatedPayload {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("A!"),
            Err(ParseError::BadChecksumChar {
                offset: 1,
                byte: b'!'
            })
        );
        assert!(matches!(
            parse_graph6(":Fa@x^"),
            Err(ParseError::BadChecksumChar { offset: 0, .. })
        ));
    }

    #[test]
    fn long_order_prefix() {
        // n = 63 needs the four-byte form: 126, then 0, 0, 63 in 6-bit groups.
        let g = Graph::empty(63);
        let code = encode_graph6(&g);
        assert_eq!(&code.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn encodes_known_codes() {
        assert_eq!(encode_graph6(&parse_graph6("Bw").unwrap()), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(2)), "A?");
    }
}
