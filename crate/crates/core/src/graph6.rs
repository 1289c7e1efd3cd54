//! graph6 encoding as defined by the nauty formats document.
//!
//! A string is `N(n) R(x)`: the vertex count header followed by the upper
//! triangle of the adjacency matrix read column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into 6-bit groups,
//! each biased by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_header(out: &mut Vec<u8>, n: usize) {
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

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_header(&mut out, n);
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
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Error::format(offset, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(Error::format(offset, "unexpected end of input")),
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` prefix is accepted;
/// anything after the last data byte (including newlines) is rejected.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };

    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if bytes.get(pos + 1) == Some(&126) {
        let mut n = 0usize;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, pos + 2 + k)? as usize;
        }
        if n <= 258_047 {
            return Err(Error::format(pos, "8-byte length header used for n <= 258047"));
        }
        pos += 8;
        n
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, pos + 1 + k)? as usize;
        }
        if n <= 62 {
            return Err(Error::format(pos, "4-byte length header used for n <= 62"));
        }
        pos += 4;
        n
    };
    if n > MAX_VERTICES {
        return Err(Error::format(0, format!("n = {n} exceeds supported maximum {MAX_VERTICES}")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let mut g = Graph::empty(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..data_len {
        let offset = pos + k;
        let s = sextet(bytes, offset)?;
        for b in (0..6).rev() {
            let set = (s >> b) & 1 == 1;
            if j < n {
                if set {
                    g.set_edge(i, j);
                }
                i += 1;
                if i == j {
                    j += 1;
                    i = 0;
                }
            } else if set {
                return Err(Error::format(offset, "non-zero padding bits"));
            }
        }
    }
    let end = pos + data_len;
    if end < bytes.len() {
        return Err(Error::format(end, "trailing bytes after graph data"));
    }
    Ok(g)
}

/// Decodes one graph per line, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn decode_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::from(e))),
        };
        let text = line.trim_end_matches(['\r', '\n', ' ', '\t']);
        if text.is_empty() {
            return None;
        }
        Some(decode(text).map_err(|e| Error::Input { line: i + 1, message: e.to_string() }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // petgraph test vector: A-C, A-E, B-D, D-E on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        // nauty reference examples.
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(encode(&k3), "Bw");
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
    }

    #[test]
    fn null_and_singleton() {
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(decode("?").unwrap().n(), 0);
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode("@").unwrap().n(), 1);
    }

    #[test]
    fn long_header_for_n_63() {
        let g = Graph::from_edges(63, &[(0, 62), (10, 11)]).unwrap();
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(decode(&s).unwrap(), g);
        let g64 = Graph::from_edges(64, &[(5, 63)]).unwrap();
        assert_eq!(decode(&encode(&g64)).unwrap(), g64);
    }

    #[test]
    fn optional_prefix() {
        assert_eq!(decode(">>graph6<<Bw").unwrap().edge_count(), 3);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(decode("").unwrap_err(), Error::format(0, "unexpected end of input"));
        match decode("B").unwrap_err() {
            Error::Format { offset, .. } => assert_eq!(offset, 1),
            e => panic!("{e:?}"),
        }
        match decode("Bw\n").unwrap_err() {
            Error::Format { offset, .. } => assert_eq!(offset, 2),
            e => panic!("{e:?}"),
        }
        match decode("D Q").unwrap_err() {
            Error::Format { offset, .. } => assert_eq!(offset, 1),
            e => panic!("{e:?}"),
        }
        // "Bx": 3 edge bits then non-zero padding.
        match decode("Bx").unwrap_err() {
            Error::Format { offset, message } => {
                assert_eq!(offset, 1);
                assert!(message.contains("padding"));
            }
            e => panic!("{e:?}"),
        }
        // n = 65 is well-formed graph6 but beyond the vertex cap.
        assert!(decode("~?A_").is_err());
        // Long header must not encode small n.
        assert!(decode("~??E").is_err());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let text = "Bw\n\nC~\r\nC~~\n";
        let out: Vec<_> = decode_lines(text.as_bytes()).collect();
        assert_eq!(out.len(), 3);
        assert_eq!(out[1].as_ref().unwrap().n(), 4);
        assert!(matches!(out[2], Err(Error::Input { line: 4, .. })));
    }
}
