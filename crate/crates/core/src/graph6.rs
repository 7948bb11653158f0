//! graph6 encoding restricted to `n <= 16` (single-byte vertex count).

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

const OFFSET: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 record. A trailing `\n` (or `\r\n`) is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| err(0, "empty record"))?;
    if !(OFFSET..=126).contains(&head) {
        return Err(err(0, format!("byte {head:#04x} is not a graph6 character")));
    }
    let n = (head - OFFSET) as usize;
    if n == 126 - OFFSET as usize {
        return Err(err(0, format!("multi-byte vertex counts exceed the {MAX_VERTICES}-vertex limit")));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            1 + body.len().min(expected),
            format!("expected {expected} data bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (i, &byte) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(err(i + 1, format!("byte {byte:#04x} is not a graph6 character")));
        }
        let chunk = byte - OFFSET;
        for bit in (0..6).rev() {
            let set = (chunk >> bit) & 1 == 1;
            if k < nbits {
                if set {
                    let (a, b) = pair_of(k);
                    g.add_edge(a, b)?;
                }
            } else if set {
                return Err(err(i + 1, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Inverse of the upper-triangle index `b(b-1)/2 + a`.
fn pair_of(k: usize) -> (usize, usize) {
    let mut b = 1;
    while b * (b + 1) / 2 <= k {
        b += 1;
    }
    (k - b * (b - 1) / 2, b)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + OFFSET) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for b in 1..n {
        for a in 0..b {
            chunk = (chunk << 1) | g.has_edge(a, b) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + OFFSET) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + OFFSET) as char);
    }
    out
}

/// Streams graphs from graph6 text, one record per line. Errors carry the
/// 1-based line number.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        self.buf.clear();
        match self.inner.read_line(&mut self.buf) {
            Ok(0) => None,
            Ok(_) => {
                self.line += 1;
                Some(parse_graph6(&self.buf).map_err(|e| Error::Census {
                    line: self.line,
                    source: Box::new(e),
                }))
            }
            Err(e) => Some(Err(e.into())),
        }
    }
}
