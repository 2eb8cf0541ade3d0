//! Text formats for graph fixtures.
//!
//! Two formats are supported:
//!
//! * **Edge list**: first line `n m`, followed by `m` lines `u v` with
//!   0-based endpoints. Blank lines are ignored.
//! * **graph6**: the compact ASCII encoding used by standard small-graph
//!   corpora. One graph per line. The order is encoded as `n + 63` for
//!   `n <= 62`, or as `'~'` followed by three bytes carrying 18 bits
//!   big-endian (each 6-bit group + 63) for larger orders. Edge bits are
//!   the upper triangle column by column — for j = 1..n-1 and i = 0..j-1,
//!   bit (i, j) — padded with zeros to a multiple of 6, each 6-bit group
//!   emitted as `group + 63`, most significant bit first.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatError {
    Empty,
    BadHeader { line: String },
    BadEdgeLine { lineno: usize, line: String },
    EdgeCountMismatch { declared: usize, found: usize },
    InvalidGraph6Byte { byte: u8 },
    Truncated { expected: usize, found: usize },
    Graph(GraphError),
    Io(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Empty => write!(f, "no graph data found"),
            FormatError::BadHeader { line } => write!(f, "expected header \"n m\", got {line:?}"),
            FormatError::BadEdgeLine { lineno, line } => {
                write!(f, "line {lineno}: expected edge \"u v\", got {line:?}")
            }
            FormatError::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} edge lines follow")
            }
            FormatError::InvalidGraph6Byte { byte } => {
                write!(f, "invalid graph6 byte {byte} (0x{byte:02x})")
            }
            FormatError::Truncated { expected, found } => {
                write!(f, "graph6 record too short: expected {expected} edge bytes, found {found}")
            }
            FormatError::Graph(e) => write!(f, "{e}"),
            FormatError::Io(msg) => write!(f, "I/O error: {msg}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<GraphError> for FormatError {
    fn from(e: GraphError) -> Self {
        FormatError::Graph(e)
    }
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(FormatError::Empty)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(FormatError::BadHeader { line: header.to_string() }),
        },
        _ => return Err(FormatError::BadHeader { line: header.to_string() }),
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(u), Ok(v)) => edges.push((u, v)),
                _ => return Err(FormatError::BadEdgeLine { lineno: lineno + 1, line: line.to_string() }),
            },
            _ => return Err(FormatError::BadEdgeLine { lineno: lineno + 1, line: line.to_string() }),
        }
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, &edges)?)
}

/// Writes the `n m` / `u v` edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph as one graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(group + 63);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((group << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 record.
pub fn from_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim_end_matches(['\n', '\r']);
    // Optional format header used by some corpus files.
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidGraph6Byte { byte: b });
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            // The 8-byte form encodes orders beyond 258047, far past our cap.
            return Err(FormatError::Graph(GraphError::TooManyVertices { n: usize::MAX }));
        }
        let n = (((bytes[1] - 63) as usize) << 12) | (((bytes[2] - 63) as usize) << 6) | ((bytes[3] - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(FormatError::Graph(GraphError::TooManyVertices { n }));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < need {
        return Err(FormatError::Truncated { expected: need, found: body.len() });
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[pos / 6] - 63;
            if group & (0x20 >> (pos % 6)) != 0 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Parses a multi-line graph6 file body, one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut graphs = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(from_graph6(line)?);
    }
    if graphs.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(graphs)
}

/// Loads a single graph from a file. Files ending in `.g6` are parsed as
/// graph6 (first record); anything else as the edge-list format.
pub fn load_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let text = fs::read_to_string(path).map_err(|e| FormatError::Io(e.to_string()))?;
    if path.extension().is_some_and(|ext| ext == "g6") {
        let first = text.lines().find(|l| !l.trim().is_empty()).ok_or(FormatError::Empty)?;
        from_graph6(first)
    } else {
        parse_edge_list(&text)
    }
}
