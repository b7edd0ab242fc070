//! Headerless graph6, one graph per line.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_N: usize = 68_719_476_735;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - BIAS) as u64),
        Some(&b) => Err(err(offset, format!("byte 0x{b:02x} outside the graph6 range"))),
        None => Err(err(offset, "unexpected end of line")),
    }
}

/// Decodes one line; trailing `\n`/`\r\n` is ignored.
pub fn decode(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty line"));
    }
    if bytes.starts_with(b">>graph6<<") {
        return Err(err(0, "headers are not accepted"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)?;
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)?;
        }
        (n as usize, 8)
    };
    if n > MAX_N {
        return Err(err(0, "vertex count too large"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(err(
            bytes.len().min(pos + need),
            format!("expected {need} edge bytes for n = {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    let mut cur = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = sextet(bytes, pos)?;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 && cur & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(err(pos - 1, "non-zero padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// Reads every non-blank line of a graph6 stream. The error offset of a bad
/// line is relative to that line; the line number is prefixed to the reason.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| err(0, format!("line {}: {e}", lineno + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode(&line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => err(offset, format!("line {}: {reason}", lineno + 1)),
            other => other,
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference strings produced by networkx.to_graph6_bytes.
    #[test]
    fn matches_reference_encoder() {
        assert_eq!(encode(&Graph::complete(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(encode(&Graph::complete(7)), "F~~~w");
        assert_eq!(encode(&Graph::cycle(5).unwrap()), "Dhc");
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert!(encode(&Graph::path(70)).starts_with("~?@EhCGGC@"));
    }

    #[test]
    fn decodes_reference_strings() {
        assert_eq!(decode("IheA@GUAo\n").unwrap(), Graph::petersen());
        assert_eq!(decode("F~~~w").unwrap(), Graph::complete(7));
        let long = encode(&Graph::path(70));
        assert_eq!(decode(&long).unwrap(), Graph::path(70));
    }

    #[test]
    fn rejects_garbage() {
        let e = decode("garbage\x01").unwrap_err();
        assert!(matches!(e, Error::Graph6 { .. }), "{e}");
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        // K3 needs one edge byte
        assert!(matches!(decode("B"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode("Bww"), Err(Error::Graph6 { .. })));
        // padding bits set: K3 is "Bw" (111000), "Bx" sets a padding bit
        assert!(matches!(decode("Bx"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(decode(">>graph6<<Bw").is_err());
    }

    #[test]
    fn reads_streams() {
        let text = "Bw\n\n@\nDhc\n";
        let gs = read_all(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 3);
        let bad = read_all("Bw\nB\n".as_bytes()).unwrap_err();
        assert!(bad.to_string().contains("line 2"));
    }
}
