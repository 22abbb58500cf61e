//! The graph6 format: `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), …`),
//! six bits per byte, each byte offset by 63.

use ramseylab_core::Graph;
use thiserror::Error;

/// Largest order the 8-byte size prefix can express.
pub const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("expected {expected} adjacency bytes for {n} vertices, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("padding bits are not zero")]
    Padding,
    #[error("order {0} is too large")]
    TooLarge(usize),
}

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, v: usize| out.push((63 + (v & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut six = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, offset });
        }
        six.push(byte - 63);
    }
    let (n, body) = if six[0] != 63 {
        (six[0] as usize, &six[1..])
    } else if six.len() >= 2 && six[1] == 63 {
        if six.len() < 8 {
            return Err(Graph6Error::Length { n: 0, expected: 8, found: six.len() });
        }
        (six[2..8].iter().fold(0usize, |a, &b| a << 6 | b as usize), &six[8..])
    } else {
        if six.len() < 4 {
            return Err(Graph6Error::Length { n: 0, expected: 4, found: six.len() });
        }
        (six[1..4].iter().fold(0usize, |a, &b| a << 6 | b as usize), &six[4..])
    };
    if n > MAX_ORDER || n > 1 << 20 {
        return Err(Graph6Error::TooLarge(n));
    }
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { n, expected, found: body.len() });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if total % 6 != 0 {
        let spare = 6 - total % 6;
        if body[expected - 1] & ((1 << spare) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // Reference strings as produced by networkx / nauty.
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        let p = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&p), "DhC");
        let petersen = ramseylab_core::families::petersen();
        assert_eq!(encode(&petersen), "IheA@GUAo");
        assert_eq!(decode("IheA@GUAo").unwrap(), petersen);
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_form() {
        let g = Graph::complete(70);
        let s = encode(&g);
        assert!(s.starts_with("~?@E"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("C~~"), Err(Graph6Error::Length { .. })));
        assert!(matches!(decode("C\x10"), Err(Graph6Error::BadByte { .. })));
        assert_eq!(decode("A`"), Err(Graph6Error::Padding));
    }
}
