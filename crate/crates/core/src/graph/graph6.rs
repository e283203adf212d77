//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Header byte is `63 + n`; the upper triangle is read column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte MSB
//! first, each byte offset by 63, with the last byte zero-padded.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii_end();
    let (&head, body) = text.split_first().ok_or(Error::BadLength {
        expected: 1,
        found: 0,
    })?;
    if !(63..=63 + MAX_GRAPH6_ORDER as u8).contains(&head) {
        return Err(Error::BadHeader(head));
    }
    let n = (head - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    if let Some(&c) = body.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(Error::BadChar(c));
    }

    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut body = vec![0u8; body_len(n)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((63 + n as u8) as char);
    out.extend(body.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_round_trip() {
        let k2 = parse_graph6(b"A_").unwrap();
        assert_eq!(k2.order(), 2);
        assert_eq!(k2.edges(), vec![(0, 1)]);
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
    }

    #[test]
    fn single_vertex() {
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::new(1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_graph6(b"A"),
            Err(Error::BadLength {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6(b"~"), Err(Error::BadHeader(b'~')));
        assert_eq!(parse_graph6(b"!"), Err(Error::BadHeader(b'!')));
        assert_eq!(parse_graph6(b"A "), Err(Error::BadLength { expected: 1, found: 0 }));
        assert_eq!(parse_graph6(b"B\x20"), Err(Error::BadLength { expected: 1, found: 0 }));
        assert_eq!(parse_graph6(b"B!"), Err(Error::BadChar(b'!')));
        assert_eq!(to_graph6(&Graph::new(63)), Err(Error::TooLarge(63)));
    }

    #[test]
    fn known_small_encoding() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }
}
