//! The graph-expression mini-language used on the command line.
//!
//! Grammar (whitespace around tokens is ignored):
//!
//! ```text
//! expr   := "K" digits                      complete graph
//!         | "C" digits                      cycle
//!         | "E" digits                      edgeless graph
//!         | "T(" digits "," digits ")"      Turán graph T(n, r)
//!         | "blowup(" expr ",[" sizes "])"  blowup with one size per vertex
//!         | "file:" path                    fixture file (.g6 or edge list)
//! sizes  := digits ("," digits)*
//! ```
//!
//! Anything else is rejected outright; the parser never guesses.

use std::fmt;
use std::path::Path;

use crate::graph::{Graph, GraphError, PartSpec};
use crate::hom::{HomError, Pattern};
use crate::io::{load_graph_file, FormatError};

#[derive(Clone, Debug, PartialEq)]
pub enum ExprError {
    BadSyntax { input: String, reason: String },
    Graph(GraphError),
    Format(FormatError),
    Hom(HomError),
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::BadSyntax { input, reason } => {
                write!(f, "cannot parse graph expression {input:?}: {reason}")
            }
            ExprError::Graph(e) => write!(f, "{e}"),
            ExprError::Format(e) => write!(f, "{e}"),
            ExprError::Hom(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExprError {}

impl From<GraphError> for ExprError {
    fn from(e: GraphError) -> Self {
        ExprError::Graph(e)
    }
}

impl From<FormatError> for ExprError {
    fn from(e: FormatError) -> Self {
        ExprError::Format(e)
    }
}

fn bad(input: &str, reason: impl Into<String>) -> ExprError {
    ExprError::BadSyntax { input: input.to_string(), reason: reason.into() }
}

/// Parses a graph expression.
pub fn parse_graph_expr(input: &str) -> Result<Graph, ExprError> {
    let s = input.trim();
    if let Some(path) = s.strip_prefix("file:") {
        return Ok(load_graph_file(Path::new(path.trim()))?);
    }
    if let Some(rest) = s.strip_prefix("blowup(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| bad(input, "missing closing ')'"))?;
        let split = top_level_comma(inner).ok_or_else(|| bad(input, "expected blowup(expr,[sizes])"))?;
        let (base_str, sizes_str) = inner.split_at(split);
        let sizes_str = sizes_str[1..].trim();
        let sizes_str = sizes_str
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad(input, "sizes must be bracketed like [2,2,1]"))?;
        let base = parse_graph_expr(base_str)?;
        let mut sizes = Vec::new();
        for part in sizes_str.split(',') {
            let size: usize = part.trim().parse().map_err(|_| bad(input, format!("bad part size {part:?}")))?;
            sizes.push(size);
        }
        return Ok(base.blowup(&PartSpec::new(sizes)?)?);
    }
    if let Some(rest) = s.strip_prefix("T(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| bad(input, "missing closing ')'"))?;
        let (n_str, r_str) = inner.split_once(',').ok_or_else(|| bad(input, "expected T(n,r)"))?;
        let n: usize = n_str.trim().parse().map_err(|_| bad(input, format!("bad order {n_str:?}")))?;
        let r: usize = r_str.trim().parse().map_err(|_| bad(input, format!("bad part count {r_str:?}")))?;
        return Ok(Graph::turan(n, r)?);
    }
    if let Some(digits) = s.strip_prefix('K') {
        let r: usize = digits.trim().parse().map_err(|_| bad(input, "expected K<order>"))?;
        return Ok(Graph::complete(r)?);
    }
    if let Some(digits) = s.strip_prefix('C') {
        let r: usize = digits.trim().parse().map_err(|_| bad(input, "expected C<order>"))?;
        return Ok(Graph::cycle(r)?);
    }
    if let Some(digits) = s.strip_prefix('E') {
        let n: usize = digits.trim().parse().map_err(|_| bad(input, "expected E<order>"))?;
        return Ok(Graph::empty(n)?);
    }
    Err(bad(input, "expected K<r>, C<r>, E<n>, T(n,r), blowup(...), or file:<path>"))
}

/// Position of the comma separating the blowup base from its size list,
/// skipping commas nested in parentheses or brackets.
fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Parses a pattern expression: a graph expression prepared for counting.
pub fn parse_pattern_expr(input: &str) -> Result<Pattern, ExprError> {
    Pattern::new(parse_graph_expr(input)?).map_err(ExprError::Hom)
}

/// Parses one pattern expression per element.
pub fn parse_family_exprs(inputs: &[String]) -> Result<Vec<Pattern>, ExprError> {
    inputs.iter().map(|s| parse_pattern_expr(s)).collect()
}
