//! graph6 / sparse6 encoders and decoders, and the embedding JSON format.

use serde::{Deserialize, Serialize};

use crate::embedding::plane::PlaneGraph;
use crate::error::{EmbeddingError, ParseError};
use crate::graph::Graph;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
}

fn decode_n(bytes: &[u8], base: usize) -> Result<(usize, usize), ParseError> {
    let sextet = |i: usize| -> Result<usize, ParseError> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(_) => Err(ParseError::new(base + i, "byte outside 63..=126")),
            None => Err(ParseError::new(base + i, "truncated order field")),
        }
    };
    if bytes.first() != Some(&126) {
        return Ok((sextet(0)?, 1));
    }
    if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(i)?;
        }
        return Ok((n, 4));
    }
    let mut n = 0;
    for i in 2..8 {
        n = (n << 6) | sextet(i)?;
    }
    Ok((n, 8))
}

fn pack_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for i in 0..6 {
            x <<= 1;
            if chunk.get(i).copied().unwrap_or(false) {
                x |= 1;
            }
        }
        out.push(x + 63);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, ParseError> {
    let (s, base) = match s.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, 10),
        None => (s, 0),
    };
    let bytes = s.trim_end().as_bytes();
    let (n, off) = decode_n(bytes, base)?;
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let data = &bytes[off..];
    if data.len() != need {
        return Err(ParseError::new(
            base + off + data.len().min(need),
            format!("expected {need} data bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(ParseError::new(base + off + k / 6, "byte outside 63..=126"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| ParseError::new(base, e.to_string()))
}

fn sparse6_k(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

/// sparse6 encoding following the published layout (and its padding rule).
pub fn to_sparse6(g: &Graph) -> String {
    let n = g.order();
    let k = sparse6_k(n);
    let enc = |x: usize, bits: &mut Vec<bool>| {
        for i in (0..k).rev() {
            bits.push(x >> i & 1 == 1);
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();
    let mut bits = Vec::new();
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            bits.push(false);
            enc(u, &mut bits);
        } else if v == cur + 1 {
            cur += 1;
            bits.push(true);
            enc(u, &mut bits);
        } else {
            cur = v;
            bits.push(true);
            enc(v, &mut bits);
            bits.push(false);
            enc(u, &mut bits);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k && cur + 1 < n {
        bits.push(false);
    }
    let pad = (6 - bits.len() % 6) % 6;
    bits.extend(std::iter::repeat_n(true, pad));
    let mut out = vec![b':'];
    encode_n(n, &mut out);
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("sparse6 bytes are printable ASCII")
}

pub fn from_sparse6(s: &str) -> Result<Graph, ParseError> {
    let (s, base) = match s.strip_prefix(">>sparse6<<") {
        Some(rest) => (rest, 11),
        None => (s, 0),
    };
    let bytes = s.trim_end().as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(ParseError::new(base, "sparse6 must start with ':'"));
    }
    let (n, off) = decode_n(&bytes[1..], base + 1)?;
    let data = &bytes[1 + off..];
    let mut bits = Vec::with_capacity(data.len() * 6);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(base + 1 + off + i, "byte outside 63..=126"));
        }
        for s in (0..6).rev() {
            bits.push((b - 63) >> s & 1 == 1);
        }
    }
    let k = sparse6_k(n);
    let mut pos = 0;
    let mut v = 0;
    let mut edges = Vec::new();
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| acc << 1 | bit as usize);
        pos += 1 + k;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| ParseError::new(base, e.to_string()))
}

/// Parses one line as graph6 or sparse6 (by its leading byte).
pub fn parse_graph_line(line: &str) -> Result<Graph, ParseError> {
    let t = line.trim();
    if t.starts_with(':') || t.starts_with(">>sparse6<<") {
        from_sparse6(t)
    } else {
        from_graph6(t)
    }
}

/// Parses a file body of graph6/sparse6 lines, skipping blank lines.
pub fn parse_graph_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(parse_graph_line(line).map_err(|e| ParseError::new(offset + e.offset, e.message))?);
        }
        offset += line.len();
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub outer_face: Vec<usize>,
}

pub fn to_embedding_json(pg: &PlaneGraph) -> EmbeddingJson {
    let outer_face = match pg.outer_dart() {
        None => Vec::new(),
        Some(d) => {
            let rot = pg.rotation();
            let mut walk = Vec::new();
            let (mut a, mut b) = d;
            loop {
                walk.push(a);
                let i = rot[b].iter().position(|&x| x == a).expect("dart in rotation");
                let c = rot[b][(i + 1) % rot[b].len()];
                a = b;
                b = c;
                if (a, b) == d {
                    break;
                }
            }
            walk
        }
    };
    EmbeddingJson {
        n: pg.order(),
        rotation: pg.rotation().to_vec(),
        outer_face,
    }
}

pub fn write_embedding_json(pg: &PlaneGraph) -> String {
    serde_json::to_string(&to_embedding_json(pg)).expect("embedding serializes")
}

pub fn read_embedding_json(s: &str) -> Result<PlaneGraph, crate::Error> {
    let j: EmbeddingJson = serde_json::from_str(s).map_err(|e| {
        ParseError::new(byte_offset(s, e.line(), e.column()), e.to_string())
    })?;
    from_embedding_json(&j)
}

pub fn from_embedding_json(j: &EmbeddingJson) -> Result<PlaneGraph, crate::Error> {
    if j.rotation.len() != j.n {
        return Err(EmbeddingError::BadRotation(j.rotation.len().min(j.n)).into());
    }
    let mut adj = j.rotation.clone();
    for l in &mut adj {
        l.sort_unstable();
    }
    let g = Graph::from_adjacency(adj)?;
    let outer = (!j.outer_face.is_empty()).then_some(j.outer_face.as_slice());
    Ok(PlaneGraph::new(g, j.rotation.clone(), outer)?)
}

fn byte_offset(s: &str, line: usize, column: usize) -> usize {
    let before: usize = s.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_graph6() {
        assert_eq!(to_graph6(&k4()), "C~");
        assert_eq!(from_graph6("C~").unwrap(), k4());
    }

    #[test]
    fn single_vertex_graph6() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn petersen_graph6() {
        // the well-known graph6 string of the Petersen graph
        let g = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert_eq!(to_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn malformed_graph6_reports_offset() {
        let e = from_graph6("C~~").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = from_graph6("C\x01").unwrap_err();
        assert!(e.offset <= 1);
    }

    #[test]
    fn sparse6_known_strings() {
        // path 0-1-2 and K4, checked against the reference encoder
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_sparse6(&p), ":Bd");
        assert_eq!(from_sparse6(":Bd").unwrap(), p);
        assert_eq!(to_sparse6(&k4()), ":CcKI");
        assert_eq!(from_sparse6(":CcKI").unwrap(), k4());
    }

    #[test]
    fn large_order_field() {
        let g = Graph::from_edges(100, &[(0, 99), (5, 6)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
        assert_eq!(from_sparse6(&to_sparse6(&g)).unwrap(), g);
    }
}
