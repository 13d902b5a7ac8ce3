//! graph6 reading and writing.
//!
//! Each byte carries six bits offset by 63. The header holds the order,
//! followed by the upper triangle of the adjacency matrix in column-major
//! order (x(0,1), x(0,2), x(1,2), x(0,3), ...), zero-padded to a whole byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    // Orders up to 62 fit in a single header byte.
    out.push(n as u8 + OFFSET);
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
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

fn sextet(byte: u8) -> Result<u8> {
    if !(OFFSET..=OFFSET + 63).contains(&byte) {
        return Err(Error::Graph6(format!("byte {byte:#04x} out of range")));
    }
    Ok(byte - OFFSET)
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut data = text.strip_prefix(HEADER).unwrap_or(text);
    while let Some((&last, rest)) = data.split_last() {
        if last.is_ascii_whitespace() {
            data = rest;
        } else {
            break;
        }
    }
    let (&first, rest) = data
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    let (order, body) = if first == 126 {
        // Long header forms: 126 + 3 sextets, or 126 126 + 6 sextets.
        let (len, skip) = if rest.first() == Some(&126) { (6, 1) } else { (3, 0) };
        let digits = rest
            .get(skip..skip + len)
            .ok_or_else(|| Error::Graph6("truncated order header".into()))?;
        let mut n = 0u64;
        for &d in digits {
            n = (n << 6) | sextet(d)? as u64;
        }
        (n, &rest[skip + len..])
    } else {
        (sextet(first)? as u64, rest)
    };
    if order == 0 || order as usize > MAX_ORDER {
        return Err(Error::Graph6(format!(
            "order {order} unsupported (1..={MAX_ORDER})"
        )));
    }
    let n = order as usize;
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated bit data: need {need} bytes, got {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: expected {need} bytes, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let word = sextet(body[pos / 6])?;
            if word >> (5 - pos % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            pos += 1;
        }
    }
    if pos % 6 != 0 {
        let word = sextet(body[pos / 6])?;
        if word & ((1 << (6 - pos % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parses a newline-separated stream, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim().as_bytes()).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}
