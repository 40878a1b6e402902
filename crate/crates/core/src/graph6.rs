//! graph6 encoding for graphs of order at most 64.
//!
//! Layout: a size header (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte
//! with 63 added to each byte. Unused bits of the final byte must be zero.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

fn header(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + OFFSET);
        out.push(((n >> 6) & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }
}

/// Encodes `g` as graph6 bytes (no trailing newline).
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    header(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}

/// [`write_graph6`] as a `String`; graph6 is always printable ASCII.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(write_graph6(g)).expect("graph6 is ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Error::Graph6(format!(
            "byte {b} outside the printable range 63..=126"
        )))
    }
}

/// Decodes a single graph6 record. Trailing `\n`/`\r` are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut s = text;
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    if let Some(rest) = s.strip_prefix(b">>graph6<<") {
        s = rest;
    }
    let (n, body) = match s {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => {
            return Err(Error::Graph6(format!(
                "8-byte size header unsupported (order > {MAX_ORDER})"
            )))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            let n = ((sextet(rest[0])? as usize) << 12)
                | ((sextet(rest[1])? as usize) << 6)
                | sextet(rest[2])? as usize;
            if n <= 62 {
                return Err(Error::Graph6(format!(
                    "long size header used for order {n}"
                )));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)? as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!(
            "graph6 order {n} exceeds the {MAX_ORDER}-vertex limit"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == bits {
                break 'outer;
            }
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(body[expected - 1])?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("trailing bits nonzero".into()));
        }
    }
    Ok(g)
}

/// Reads one graph per line. Blank lines are skipped; errors carry the
/// 1-based line number.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.split(b'\n').enumerate() {
        let line = line?;
        if line.iter().all(|b| b.is_ascii_whitespace()) {
            continue;
        }
        let g = parse_graph6(&line).map_err(|e| Error::Graph6Line {
            line: i + 1,
            message: match e {
                Error::Graph6(m) | Error::Capacity(m) => m,
                other => other.to_string(),
            },
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent decoder: expand every byte into bits, then walk the
    /// column-ordered upper triangle.
    fn oracle_bits(n: usize, data: &[u8]) -> Vec<(usize, usize)> {
        let bits: Vec<u8> = data
            .iter()
            .flat_map(|b| (0..6).rev().map(move |k| ((b - 63) >> k) & 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges
    }

    #[test]
    fn known_vectors() {
        let k3 = parse_graph6(b"Bw").unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(oracle_bits(3, b"w"), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()), b"A_");
        assert_eq!(parse_graph6(b"B?").unwrap(), Graph::empty(3).unwrap());
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), b"?");
        assert_eq!(parse_graph6(b"?").unwrap().order(), 0);
        assert_eq!(parse_graph6(b"Bw\n").unwrap(), k3);
    }

    #[test]
    fn long_header_round_trip() {
        let k63 = Graph::complete(63).unwrap();
        let enc = write_graph6(&k63);
        assert_eq!(&enc[..4], &[126, 63, 63 + 0, 63 + 63]);
        assert_eq!(parse_graph6(&enc).unwrap(), k63);
        let k64 = Graph::complete(64).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&k64)).unwrap(), k64);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6(_))));
        // order 3 needs exactly one data byte
        assert!(parse_graph6(b"B").is_err());
        assert!(parse_graph6(b"Bww").is_err());
        // 3 bits used, low 3 bits of 'x' (120-63=57=0b111001) are nonzero
        let err = parse_graph6(b"Bx").unwrap_err();
        assert_eq!(err, Error::Graph6("trailing bits nonzero".into()));
        // order 65 via the long header
        assert!(matches!(
            parse_graph6(&[126, 63, 64, 65]),
            Err(Error::Capacity(_))
        ));
        assert!(parse_graph6(b"B\x20").is_err());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let data = b"A_\nBw\nBx\n";
        let err = read_graph6_stream(&data[..]).unwrap_err();
        assert_eq!(
            err,
            Error::Graph6Line {
                line: 3,
                message: "trailing bits nonzero".into()
            }
        );
        let ok = read_graph6_stream(&b"A_\n\nBw\n"[..]).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
