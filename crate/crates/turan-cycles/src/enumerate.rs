//! Isomorph-free exhaustive generation of small graphs, plus labeled and
//! sampled streams.
//!
//! Up to 7 vertices the generator walks every labeled graph (an edge-mask
//! counter) and deduplicates by canonical form. At 8 and 9 vertices it
//! extends each (n-1)-vertex representative by one new vertex with every
//! possible neighborhood and deduplicates the results; every class on n
//! vertices arises this way because deleting a vertex lands in some class
//! on n-1 vertices. Freeness filters prune parents before extension, since
//! a supergraph of a non-free graph is never free.
//!
//! Generation is single-threaded per stream; consumers are free to fan the
//! results out across workers.

use std::collections::HashSet;
use std::fmt;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::hom::{is_free, Pattern};
use crate::io::to_graph6;

/// Cap for exhaustive isomorph-free generation. The class counts grow from
/// 12346 at n = 8 to 274668 at n = 9; beyond that desk-scale scans stop
/// being interactive.
pub const MAX_CLASS_ORDER: usize = 9;

/// Cap for exhaustive labeled streams (2^21 graphs at n = 7).
pub const MAX_LABELED_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq)]
pub enum EnumError {
    OrderCap { n: usize, cap: usize },
    BadProbability { p: f64 },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::OrderCap { n, cap } => {
                write!(f, "enumeration at order {n} exceeds the cap of {cap}")
            }
            EnumError::BadProbability { p } => {
                write!(f, "edge probability {p} outside [0, 1]")
            }
        }
    }
}

impl std::error::Error for EnumError {}

/// A stream of graphs of one order: exhaustive up to isomorphism,
/// exhaustive labeled, or reproducible random samples.
pub struct GraphStream {
    order: usize,
    descriptor: String,
    inner: StreamInner,
}

impl fmt::Debug for GraphStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphStream({})", self.descriptor)
    }
}

enum StreamInner {
    Eager(std::vec::IntoIter<Graph>),
    Labeled { n: usize, next: u64, end: u64 },
    Random { n: usize, p: f64, remaining: usize, rng: ChaCha8Rng },
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Human-readable provenance, embedded in reports.
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// Exact number of graphs remaining, when known up front.
    pub fn remaining(&self) -> Option<usize> {
        match &self.inner {
            StreamInner::Eager(it) => Some(it.len()),
            StreamInner::Labeled { next, end, .. } => Some((end - next) as usize),
            StreamInner::Random { remaining, .. } => Some(*remaining),
        }
    }

    /// Drains the stream into graph6 lines; returns how many were written.
    pub fn spool_graph6<W: Write>(self, mut w: W) -> std::io::Result<usize> {
        let mut count = 0;
        for g in self {
            writeln!(w, "{}", to_graph6(&g))?;
            count += 1;
        }
        Ok(count)
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            StreamInner::Eager(it) => it.next(),
            StreamInner::Labeled { n, next, end } => {
                if next == end {
                    return None;
                }
                let g = graph_from_edge_mask(*n, *next);
                *next += 1;
                Some(g)
            }
            StreamInner::Random { n, p, remaining, rng } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in (u + 1)..*n {
                        if rng.gen_bool(*p) {
                            edges.push((u, v));
                        }
                    }
                }
                Some(Graph::new(*n, &edges).expect("sampled edges are in range"))
            }
        }
    }
}

/// Builds the graph whose edges are the set bits of `mask`, in row-major
/// pair order (0,1), (0,2), ..., (0,n-1), (1,2), ...
fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1u64 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("mask edges are in range")
}

fn class_reps(n: usize, family: &[Pattern]) -> Vec<Graph> {
    let mut certs: HashSet<CanonicalForm> = HashSet::new();
    if n <= MAX_LABELED_ORDER {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..(1u64 << pairs) {
            let g = graph_from_edge_mask(n, mask);
            if !family.is_empty() && !is_free(&g, family) {
                continue;
            }
            certs.insert(canonical_form(&g));
        }
    } else {
        let parents = class_reps(n - 1, family);
        let masks = 1u64 << (n - 1);
        for parent in &parents {
            for mask in 0..masks {
                let candidate = parent.add_vertex(mask).expect("order stays within cap");
                if !family.is_empty() && !is_free(&candidate, family) {
                    continue;
                }
                certs.insert(canonical_form(&candidate));
            }
        }
    }
    let mut certs: Vec<CanonicalForm> = certs.into_iter().collect();
    certs.sort();
    certs.iter().map(CanonicalForm::to_graph).collect()
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// in canonical-certificate order.
pub fn all_graphs(n: usize) -> Result<GraphStream, EnumError> {
    all_graphs_filtered(n, &[])
}

/// One representative per isomorphism class of `family`-free graphs on `n`
/// vertices, in canonical-certificate order.
pub fn all_graphs_filtered(n: usize, family: &[Pattern]) -> Result<GraphStream, EnumError> {
    if n > MAX_CLASS_ORDER {
        return Err(EnumError::OrderCap { n, cap: MAX_CLASS_ORDER });
    }
    let reps = class_reps(n, family);
    let descriptor = if family.is_empty() {
        format!("classes(n={n})")
    } else {
        format!("classes(n={n}, filtered by {} forbidden patterns)", family.len())
    };
    Ok(GraphStream { order: n, descriptor, inner: StreamInner::Eager(reps.into_iter()) })
}

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn all_labeled_graphs(n: usize) -> Result<GraphStream, EnumError> {
    if n > MAX_LABELED_ORDER {
        return Err(EnumError::OrderCap { n, cap: MAX_LABELED_ORDER });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok(GraphStream {
        order: n,
        descriptor: format!("labeled(n={n})"),
        inner: StreamInner::Labeled { n, next: 0, end: 1u64 << pairs },
    })
}

/// `count` reproducible G(n, p) samples. The same seed always yields the
/// same stream.
pub fn random_graphs(n: usize, p: f64, seed: u64, count: usize) -> Result<GraphStream, EnumError> {
    if n > crate::graph::MAX_VERTICES {
        return Err(EnumError::OrderCap { n, cap: crate::graph::MAX_VERTICES });
    }
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(EnumError::BadProbability { p });
    }
    Ok(GraphStream {
        order: n,
        descriptor: format!("random(n={n}, p={p}, seed={seed}, count={count})"),
        inner: StreamInner::Random { n, p, remaining: count, rng: ChaCha8Rng::seed_from_u64(seed) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence_small() {
        // 1, 2, 4, 11, 34 classes for n = 1..5.
        for (n, expected) in [(0usize, 1usize), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            assert_eq!(all_graphs(n).unwrap().count(), expected, "n = {n}");
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        assert_eq!(all_graphs(10).unwrap_err(), EnumError::OrderCap { n: 10, cap: 9 });
        assert_eq!(all_labeled_graphs(8).unwrap_err(), EnumError::OrderCap { n: 8, cap: 7 });
    }

    #[test]
    fn triangle_free_classes_on_three_vertices() {
        let k3 = Pattern::new(Graph::complete(3).unwrap()).unwrap();
        let reps: Vec<Graph> = all_graphs_filtered(3, &[k3]).unwrap().collect();
        // Empty, single edge, path: the triangle is excluded.
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|g| g.edge_count() < 3));
    }

    #[test]
    fn edge_free_means_empty_only() {
        let k2 = Pattern::new(Graph::complete(2).unwrap()).unwrap();
        let reps: Vec<Graph> = all_graphs_filtered(4, &[k2]).unwrap().collect();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].edge_count(), 0);
    }

    #[test]
    fn filtered_includes_turan_witness() {
        let k4 = Pattern::new(Graph::complete(4).unwrap()).unwrap();
        let reps: Vec<Graph> = all_graphs_filtered(5, &[k4]).unwrap().collect();
        let want = canonical_form(&Graph::turan(5, 3).unwrap());
        assert!(reps.iter().any(|g| canonical_form(g) == want));
    }

    #[test]
    fn no_duplicate_classes_at_six() {
        let reps: Vec<Graph> = all_graphs(6).unwrap().collect();
        assert_eq!(reps.len(), 156);
        let certs: HashSet<CanonicalForm> = reps.iter().map(canonical_form).collect();
        assert_eq!(certs.len(), 156);
    }

    #[test]
    fn labeled_stream_counts() {
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(all_labeled_graphs(0).unwrap().count(), 1);
    }

    #[test]
    fn random_streams_are_reproducible() {
        let a: Vec<Graph> = random_graphs(8, 0.4, 99, 20).unwrap().collect();
        let b: Vec<Graph> = random_graphs(8, 0.4, 99, 20).unwrap().collect();
        assert_eq!(a, b);
        let c: Vec<Graph> = random_graphs(8, 0.4, 100, 20).unwrap().collect();
        assert_ne!(a, c);
    }

    #[test]
    fn random_extremes() {
        assert!(random_graphs(6, 0.0, 1, 10).unwrap().all(|g| g.edge_count() == 0));
        assert!(random_graphs(6, 1.0, 1, 10).unwrap().all(|g| g.edge_count() == 15));
        assert!(random_graphs(6, 1.5, 1, 1).is_err());
    }

    #[test]
    fn spool_writes_one_line_per_graph() {
        let mut buf = Vec::new();
        let written = all_graphs(4).unwrap().spool_graph6(&mut buf).unwrap();
        assert_eq!(written, 11);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 11);
        let parsed = crate::io::parse_graph6_lines(&text).unwrap();
        assert_eq!(parsed.len(), 11);
    }
}
