//! graph6 and plain edge-list text formats.
//!
//! graph6 follows McKay's `formats.txt`: a size header followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte (offset 63).

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    size_prefix(n, &mut out);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 line (trailing newline and the optional `>>graph6<<`
/// header are accepted). `line_no` is only used for error positions.
pub fn parse_graph6_line(text: &str, line_no: usize) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (body, col0) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len() + 1),
        None => (text, 1),
    };
    let bytes = body.as_bytes();
    let err = |idx: usize, msg: &str| Error::parse(line_no, col0 + idx, msg);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the graph6 range 63..=126"));
        }
    }
    let six = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - OFFSET) as usize)
            .ok_or_else(|| err(i, "truncated size header"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - OFFSET) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expect = pos + bits.div_ceil(6);
    if bytes.len() != expect {
        return Err(err(
            bytes.len().min(expect),
            &format!(
                "expected {} bytes for order {n}, found {}",
                expect,
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - OFFSET;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses every non-empty line as a graph6 graph.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

/// `n m` header then `m` lines `u v` (0-based). Blank lines and text after `#`
/// are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut tokens = Vec::new();
        let mut rest = content;
        let mut col_base = 1;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            tokens.push((col_base + start, &tail[..len]));
            col_base += start + len;
            rest = &tail[len..];
        }
        if tokens.len() != 2 {
            return Err(Error::parse(
                line_no,
                tokens.get(2).map_or(1, |t| t.0),
                format!("expected two integers, found {} tokens", tokens.len()),
            ));
        }
        let mut nums = [0usize; 2];
        for (slot, (col, tok)) in nums.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| Error::parse(line_no, *col, format!("invalid integer `{tok}`")))?;
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some((n, _)) => {
                for (i, &v) in nums.iter().enumerate() {
                    if v >= n {
                        return Err(Error::parse(
                            line_no,
                            tokens[i].0,
                            format!("vertex {v} out of range for order {n}"),
                        ));
                    }
                }
                if nums[0] == nums[1] {
                    return Err(Error::parse(line_no, tokens[0].0, "self-loop"));
                }
                edges.push((nums[0], nums[1]));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(1, 1, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
