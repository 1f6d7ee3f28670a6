//! graph6 / digraph6 (McKay) and the edge-list JSON schema.
//!
//! graph6 stores the upper triangle column by column, `x(0,1) x(0,2) x(1,2)
//! x(0,3) …`, packed six bits per byte with 63 added. digraph6 is `&`
//! followed by the size and the full adjacency matrix in row-major order.
//! Vertex counts up to 62 use one size byte; larger counts use `~` followed
//! by three bytes (18 bits). The eight-byte form is rejected.

use serde::{Deserialize, Serialize};

use super::{Digraph, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the codecs (the 18-bit size form),
/// for JSON input as well.
pub const GRAPH6_MAX_VERTICES: usize = (1 << 18) - 1;

const GRAPH6_HEADER: &str = ">>graph6<<";
const DIGRAPH6_HEADER: &str = ">>digraph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Graph6,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDigraph {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

/// Graphs serialise as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = to_graph6(self).map_err(serde::ser::Error::custom)?;
        s.serialize_str(&text)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph(&text).map_err(serde::de::Error::custom)
    }
}

/// Digraphs serialise as their digraph6 string.
impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = to_digraph6(self).map_err(serde::ser::Error::custom)?;
        s.serialize_str(&text)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_digraph(&text).map_err(serde::de::Error::custom)
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Skips leading whitespace and an optional header; returns the start offset of the payload.
fn payload_start(bytes: &[u8], header: &str) -> usize {
    let start = bytes.iter().take_while(|b| b.is_ascii_whitespace()).count();
    if bytes[start..].starts_with(header.as_bytes()) {
        start + header.len()
    } else {
        start
    }
}

fn payload_end(bytes: &[u8]) -> usize {
    bytes.len() - bytes.iter().rev().take_while(|b| b.is_ascii_whitespace()).count()
}

fn json_offset(text: &str, err: &serde_json::Error) -> usize {
    // serde_json reports 1-based line/column; column counts bytes within the line.
    let line = err.line().max(1);
    let col = err.column();
    let line_start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (line_start + col.saturating_sub(1)).min(text.len())
}

/// Parses graph6 or edge-list JSON, detected from the first non-blank byte.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let start = bytes.iter().take_while(|b| b.is_ascii_whitespace()).count();
    match bytes.get(start) {
        None => Err(parse_err(start, "empty input")),
        // '{' is also the graph6 size byte for n = 60, but graph6 data bytes
        // are never whitespace or quotes.
        Some(b'{') if looks_like_json(&bytes[start + 1..]) => parse_json_graph(text),
        Some(b'&') => Err(parse_err(
            start,
            "digraph6 input where an undirected graph was expected",
        )),
        Some(b':') => Err(parse_err(start, "sparse6 is not supported")),
        Some(_) => parse_graph6(text),
    }
}

fn looks_like_json(after_brace: &[u8]) -> bool {
    match after_brace.first() {
        None => true,
        Some(b) => b.is_ascii_whitespace() || *b == b'"' || after_brace == b"}",
    }
}

/// Parses digraph6 or arc-list JSON.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let bytes = text.as_bytes();
    let start = bytes.iter().take_while(|b| b.is_ascii_whitespace()).count();
    match bytes.get(start) {
        None => Err(parse_err(start, "empty input")),
        Some(b'{') => parse_json_digraph(text),
        _ => parse_digraph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Json => Ok(serde_json::to_string(&JsonGraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        })
        .expect("edge list serialises")),
    }
}

pub fn serialize_digraph(d: &Digraph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => to_digraph6(d),
        Format::Json => Ok(serde_json::to_string(&JsonDigraph {
            n: d.n(),
            arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
        })
        .expect("arc list serialises")),
    }
}

fn parse_json_graph(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| parse_err(json_offset(text, &e), e.to_string()))?;
    Error::check_cap("JSON vertex count", GRAPH6_MAX_VERTICES, raw.n)?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::from_edges(raw.n, &edges)
}

fn parse_json_digraph(text: &str) -> Result<Digraph> {
    let raw: JsonDigraph = serde_json::from_str(text).map_err(|e| parse_err(json_offset(text, &e), e.to_string()))?;
    Error::check_cap("JSON vertex count", GRAPH6_MAX_VERTICES, raw.n)?;
    let arcs: Vec<(usize, usize)> = raw.arcs.iter().map(|e| (e[0], e[1])).collect();
    Digraph::from_arcs(raw.n, &arcs)
}

fn encode_size(n: usize, out: &mut Vec<u8>) -> Result<()> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= GRAPH6_MAX_VERTICES {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::Param(format!(
            "{n} vertices exceeds the graph6 limit of {GRAPH6_MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Returns `(n, offset of first data byte)`.
fn decode_size(bytes: &[u8], at: usize, end: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<u8> {
        if i >= end {
            return Err(parse_err(i, "truncated size field"));
        }
        let b = bytes[i];
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                i,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
        Ok(b - 63)
    };
    let first = byte(at)?;
    if first < 63 {
        return Ok((first as usize, at + 1));
    }
    let second = byte(at + 1)?;
    if second == 63 {
        return Err(parse_err(
            at + 1,
            "eight-byte size form exceeds the supported vertex limit",
        ));
    }
    let n = ((second as usize) << 12) | ((byte(at + 2)? as usize) << 6) | byte(at + 3)? as usize;
    Ok((n, at + 4))
}

struct BitWriter {
    out: Vec<u8>,
    acc: u8,
    filled: u8,
}

impl BitWriter {
    fn push(&mut self, bit: bool) {
        self.acc = (self.acc << 1) | bit as u8;
        self.filled += 1;
        if self.filled == 6 {
            self.out.push(self.acc + 63);
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn finish(mut self) -> Vec<u8> {
        if self.filled > 0 {
            self.out.push((self.acc << (6 - self.filled)) + 63);
        }
        self.out
    }
}

/// Reads the packed bit payload `bytes[start..end]`, which must hold exactly `nbits` bits.
fn read_bits(bytes: &[u8], start: usize, end: usize, nbits: u64) -> Result<Vec<bool>> {
    let expected = nbits.div_ceil(6);
    let got = (end - start) as u64;
    if got < expected {
        return Err(parse_err(end, format!("expected {expected} data bytes, found {got}")));
    }
    if got > expected {
        return Err(parse_err(start + expected as usize, "trailing bytes after graph data"));
    }
    let mut bits = Vec::with_capacity(nbits as usize);
    for (i, &b) in bytes[start..end].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                start + i,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            let bit = (v >> k) & 1 == 1;
            if (bits.len() as u64) < nbits {
                bits.push(bit);
            } else if bit {
                return Err(parse_err(start + i, "non-zero padding bits"));
            }
        }
    }
    Ok(bits)
}

fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out)?;
    let mut w = BitWriter { out, acc: 0, filled: 0 };
    for j in 1..n {
        for i in 0..j {
            w.push(g.has_edge(i, j));
        }
    }
    Ok(String::from_utf8(w.finish()).expect("graph6 is ASCII"))
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let start = payload_start(bytes, GRAPH6_HEADER);
    let end = payload_end(bytes).max(start);
    let (n, data) = decode_size(bytes, start, end)?;
    let nbits = (n as u64) * (n as u64).saturating_sub(1) / 2;
    let bits = read_bits(bytes, data, end, nbits)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges_dedup(n, edges))
}

fn to_digraph6(d: &Digraph) -> Result<String> {
    let n = d.n();
    let mut out = vec![b'&'];
    encode_size(n, &mut out)?;
    let mut w = BitWriter { out, acc: 0, filled: 0 };
    for i in 0..n {
        for j in 0..n {
            w.push(d.has_arc(i, j));
        }
    }
    Ok(String::from_utf8(w.finish()).expect("digraph6 is ASCII"))
}

fn parse_digraph6(text: &str) -> Result<Digraph> {
    let bytes = text.as_bytes();
    let start = payload_start(bytes, DIGRAPH6_HEADER);
    let end = payload_end(bytes).max(start);
    if bytes.get(start) != Some(&b'&') {
        return Err(parse_err(start, "digraph6 must start with '&'"));
    }
    let (n, data) = decode_size(bytes, start + 1, end)?;
    let nbits = (n as u64) * (n as u64);
    let bits = read_bits(bytes, data, end, nbits)?;
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(Error::Validation(format!("loop at vertex {i}")));
                }
                arcs.push((i, j));
            }
        }
    }
    Ok(Digraph::from_arcs_dedup(n, arcs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph6_strings() {
        assert_eq!(serialize_graph(&Graph::complete(2), Format::Graph6).unwrap(), "A_");
        assert_eq!(serialize_graph(&Graph::empty(1), Format::Graph6).unwrap(), "@");
        assert_eq!(serialize_graph(&Graph::empty(0), Format::Graph6).unwrap(), "?");
        let k3 = parse_graph("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn json_order_is_capped() {
        let huge = r#"{"n":444444444444444444442,"arcs":[[0,0]]}"#;
        assert!(parse_digraph(huge).is_err());
        let big = format!(r#"{{"n":{},"edges":[]}}"#, GRAPH6_MAX_VERTICES + 1);
        assert!(matches!(parse_graph(&big), Err(Error::Cap { .. })));
        let arcs = format!(r#"{{"n":{},"arcs":[]}}"#, GRAPH6_MAX_VERTICES + 1);
        assert!(matches!(parse_digraph(&arcs), Err(Error::Cap { .. })));
    }

    #[test]
    fn json_examples() {
        let k2 = parse_graph(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(k2, Graph::complete(2));
        assert!(matches!(
            parse_graph(r#"{"n":3,"edges":[[0,0]]}"#),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_graph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn json_syntax_error_reports_offset() {
        let text = "{\"n\":2,\n \"edges\": [[0,1]";
        match parse_graph(text) {
            Err(Error::Parse { offset, .. }) => assert!(offset <= text.len()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn graph6_errors_name_offsets() {
        // K_3 needs one data byte.
        assert!(matches!(parse_graph("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph("Bww"), Err(Error::Parse { offset: 2, .. })));
        // 'x' = 57+63: padding bit set.
        assert!(matches!(parse_graph("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph("B\x20"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("~~??????"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn header_and_whitespace_are_tolerated() {
        assert_eq!(parse_graph(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
        let d = Digraph::directed_cycle(3);
        let text = serialize_digraph(&d, Format::Graph6).unwrap();
        assert_eq!(parse_digraph(&format!(">>digraph6<<{text}\n")).unwrap(), d);
    }

    #[test]
    fn sixty_vertex_graph6_is_not_mistaken_for_json() {
        let g = Graph::cycle(60);
        let text = serialize_graph(&g, Format::Graph6).unwrap();
        assert!(text.starts_with('{'));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn long_size_form_round_trips() {
        let g = Graph::cycle(70);
        let text = serialize_graph(&g, Format::Graph6).unwrap();
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn digraph6_rejects_loops() {
        // n = 1, single bit set on the diagonal.
        assert!(matches!(parse_digraph("&@_"), Err(Error::Validation(_))));
    }

    #[test]
    fn serde_uses_six_formats() {
        let json = serde_json::to_string(&Graph::complete(3)).unwrap();
        assert_eq!(json, "\"Bw\"");
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), Graph::complete(3));
        let d = Digraph::directed_path(3);
        let back: Digraph = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn digraph_json_round_trip() {
        let d = Digraph::directed_path(4);
        let text = serialize_digraph(&d, Format::Json).unwrap();
        assert_eq!(text, r#"{"n":4,"arcs":[[0,1],[1,2],[2,3]]}"#);
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }
}
