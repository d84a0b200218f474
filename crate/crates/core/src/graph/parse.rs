use std::collections::{BTreeMap, BTreeSet};

use super::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Result of reading an edge list: the compacted graph plus ingestion notes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    /// Number of repeated edges that were collapsed.
    pub duplicate_edges: usize,
    /// Original id of each dense vertex index, in increasing order.
    pub labels: Vec<u64>,
}

impl EdgeList {
    pub fn had_duplicates(&self) -> bool {
        self.duplicate_edges > 0
    }
}

/// Parses whitespace-separated `u v` pairs, one per line. Lines starting with
/// `#` and blank lines are skipped. Vertex ids are compacted to `0..k` in
/// increasing order of their original value.
pub fn parse_edge_list(text: &str) -> Result<EdgeList, GraphError> {
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        pairs.push(parse_pair(line, idx + 1)?);
    }
    build_edge_list(pairs)
}

/// Parses the inline form `"u v;u v;..."`.
pub fn parse_inline(text: &str) -> Result<EdgeList, GraphError> {
    let mut pairs = Vec::new();
    for (idx, chunk) in text.split(';').enumerate() {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        pairs.push(parse_pair(chunk, idx + 1)?);
    }
    build_edge_list(pairs)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(u64, u64), GraphError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(GraphError::WrongArity { line: line_no, found: tokens.len() });
    }
    let parse = |t: &str| {
        t.parse::<u64>().map_err(|_| GraphError::MalformedToken {
            line: line_no,
            token: t.to_string(),
        })
    };
    Ok((parse(tokens[0])?, parse(tokens[1])?))
}

fn build_edge_list(pairs: Vec<(u64, u64)>) -> Result<EdgeList, GraphError> {
    if pairs.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let mut ids = BTreeSet::new();
    for &(u, v) in &pairs {
        if u == v {
            return Err(GraphError::SelfLoop(u as usize));
        }
        ids.insert(u);
        ids.insert(v);
    }
    let index: BTreeMap<u64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut graph = Graph::empty(ids.len());
    let mut duplicate_edges = 0;
    for (u, v) in pairs {
        match graph.try_add_edge(index[&u], index[&v]) {
            Ok(()) => {}
            Err(GraphError::DuplicateEdge(..)) => duplicate_edges += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(EdgeList { graph, duplicate_edges, labels: ids.into_iter().collect() })
}

/// Decodes a single graph6 record. A leading `>>graph6<<` header and
/// trailing line terminators are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let record = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let record = record.trim_end_matches(['\n', '\r']).as_bytes();
    if record.is_empty() {
        return Err(GraphError::EmptyRecord);
    }
    if matches!(record[0], b':' | b'&') {
        return Err(GraphError::UnsupportedFormat);
    }
    for (offset, &byte) in record.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(GraphError::BadByte { byte, offset });
        }
    }
    let (n, body) = decode_order(record)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(GraphError::Truncated { n });
    }
    if body.len() > need {
        return Err(GraphError::TrailingBytes);
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.try_add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_order(record: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let sextets = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if record[0] != 126 {
        return Ok(((record[0] - 63) as usize, &record[1..]));
    }
    if record.len() >= 2 && record[1] == 126 {
        if record.len() < 8 {
            return Err(GraphError::Truncated { n: 0 });
        }
        Ok((sextets(&record[2..8]), &record[8..]))
    } else {
        if record.len() < 4 {
            return Err(GraphError::Truncated { n: 0 });
        }
        Ok((sextets(&record[1..4]), &record[4..]))
    }
}

/// Parses a graph6 corpus: one record per non-empty line, header optional.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER)
        .map(parse_graph6)
        .collect()
}

/// Encodes a graph as a graph6 record (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}
