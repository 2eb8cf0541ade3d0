//! Canonical forms for isomorphism testing and deduplication.
//!
//! The certificate of a graph is the lexicographically smallest adjacency
//! encoding reachable by relabeling, searched over an equitable-partition
//! backtracking tree rather than all n! orderings. Two graphs are
//! isomorphic iff their certificates are equal: equal certificates decode
//! to a common relabeling, and the search tree is built only from
//! label-invariant data, so isomorphic graphs walk matching trees.

use crate::graph::Graph;

/// Label-invariant certificate: order byte followed by the packed upper
/// triangle of the canonically relabeled adjacency matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    cert: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.cert
    }

    pub fn hex(&self) -> String {
        self.cert.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Decodes the certificate back into the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.cert[0] as usize;
        let mut edges = Vec::new();
        let mut bit = 0usize;
        for i in 0..n {
            for j in (i + 1)..n {
                let byte = self.cert[1 + bit / 8];
                if byte & (0x80 >> (bit % 8)) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).expect("certificate encodes a valid graph")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.hex())
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n <= 1 {
        return CanonicalForm { cert: vec![n as u8] };
    }
    let mut search = Search { g, best: None };
    let cells = vec![(0..n).collect::<Vec<usize>>()];
    search.descend(cells);
    CanonicalForm { cert: search.best.expect("search visits at least one leaf") }
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Vec<u8>>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.g, &mut cells);
        let target = cells.iter().position(|c| c.len() > 1);
        match target {
            None => {
                let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let cert = encode(self.g, &perm);
                if self.best.as_ref().map_or(true, |b| cert < *b) {
                    self.best = Some(cert);
                }
            }
            Some(k) => {
                if interchangeable(self.g, &cells, k) {
                    // Any ordering inside this cell extends to an automorphism,
                    // so one branch covers them all.
                    let next = individualize(&cells, k, 0);
                    self.descend(next);
                } else {
                    for i in 0..cells[k].len() {
                        let next = individualize(&cells, k, i);
                        self.descend(next);
                    }
                }
            }
        }
    }
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. Subcells are ordered by ascending count, which
/// depends only on the graph up to isomorphism.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        'targets: for t in 0..cells.len() {
            let t_mask = cell_mask(&cells[t]);
            for c in 0..cells.len() {
                if cells[c].len() <= 1 {
                    continue;
                }
                let counts: Vec<u32> = cells[c].iter().map(|&v| (g.row(v) & t_mask).count_ones()).collect();
                if counts.iter().any(|&x| x != counts[0]) {
                    let mut keyed: Vec<(u32, usize)> =
                        counts.into_iter().zip(cells[c].iter().copied()).collect();
                    keyed.sort_by_key(|&(count, _)| count);
                    let mut replacement: Vec<Vec<usize>> = Vec::new();
                    for (count, v) in keyed {
                        match replacement.last_mut() {
                            Some(last) if (g.row(last[0]) & t_mask).count_ones() == count => last.push(v),
                            _ => replacement.push(vec![v]),
                        }
                    }
                    cells.splice(c..=c, replacement);
                    changed = true;
                    break 'targets;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// A cell whose vertices are pairwise exchangeable by automorphisms:
/// internally complete or empty, and complete or empty toward every other
/// cell. Valid to test via one member because the partition is equitable.
fn interchangeable(g: &Graph, cells: &[Vec<usize>], k: usize) -> bool {
    let cell = &cells[k];
    let v0 = cell[0];
    let c_mask = cell_mask(cell);
    let internal = (g.row(v0) & c_mask).count_ones() as usize;
    if internal != 0 && internal != cell.len() - 1 {
        return false;
    }
    for (i, other) in cells.iter().enumerate() {
        if i == k {
            continue;
        }
        let cnt = (g.row(v0) & cell_mask(other)).count_ones() as usize;
        if cnt != 0 && cnt != other.len() {
            return false;
        }
    }
    true
}

fn individualize(cells: &[Vec<usize>], k: usize, i: usize) -> Vec<Vec<usize>> {
    let mut next = Vec::with_capacity(cells.len() + 1);
    for (c, cell) in cells.iter().enumerate() {
        if c == k {
            next.push(vec![cell[i]]);
            let rest: Vec<usize> = cell.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            next.push(rest);
        } else {
            next.push(cell.clone());
        }
    }
    next
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// Packs the upper triangle of the relabeled adjacency matrix, row-major,
/// most significant bit first, prefixed with the order byte.
fn encode(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = perm.len();
    let bits = n * (n - 1) / 2;
    let mut cert = vec![0u8; 1 + bits.div_ceil(8)];
    cert[0] = n as u8;
    let mut bit = 0usize;
    for i in 0..n {
        let row = g.row(perm[i]);
        for &pj in &perm[(i + 1)..] {
            if row & (1u64 << pj) != 0 {
                cert[1 + bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    cert
}
