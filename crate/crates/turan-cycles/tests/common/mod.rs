//! Naive oracles shared by the integration tests.
//!
//! Everything here recomputes results by brute force, independently of the
//! library's search plans, so the tests cross different implementations
//! rather than one implementation against itself.

#![allow(dead_code)]

use turan_cycles::Graph;

/// All-maps homomorphism count: walks every one of n^k maps.
pub fn naive_hom(pattern: &Graph, host: &Graph) -> u64 {
    let k = pattern.n();
    let n = host.n();
    let pattern_edges = pattern.edges();
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut map = vec![0usize; k];
    let mut count = 0u64;
    loop {
        if pattern_edges.iter().all(|&(u, v)| host.has_edge(map[u], map[v])) {
            count += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// All-maps injective homomorphism count.
pub fn naive_inj(pattern: &Graph, host: &Graph) -> u64 {
    let k = pattern.n();
    let n = host.n();
    let pattern_edges = pattern.edges();
    if k == 0 {
        return 1;
    }
    if k > n {
        return 0;
    }
    let mut map = vec![0usize; k];
    let mut count = 0u64;
    loop {
        let mut seen = 0u64;
        let injective = map.iter().all(|&v| {
            let bit = 1u64 << v;
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        });
        if injective && pattern_edges.iter().all(|&(u, v)| host.has_edge(map[u], map[v])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Per-vertex coverage by all-maps enumeration.
pub fn naive_degree_profile(pattern: &Graph, host: &Graph) -> Vec<u64> {
    let k = pattern.n();
    let n = host.n();
    let pattern_edges = pattern.edges();
    let mut per_vertex = vec![0u64; n];
    if k == 0 || k > n || n == 0 {
        return per_vertex;
    }
    let mut map = vec![0usize; k];
    loop {
        let mut seen = 0u64;
        let injective = map.iter().all(|&v| {
            let bit = 1u64 << v;
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        });
        if injective && pattern_edges.iter().all(|&(u, v)| host.has_edge(map[u], map[v])) {
            for &v in &map {
                per_vertex[v] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return per_vertex;
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive isomorphism test over all n! label permutations.
pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        (0..n).all(|u| (0..n).all(|v| u == v || a.has_edge(u, v) == b.has_edge(p[u], p[v])))
    })
}

fn permutations(perm: &mut Vec<usize>, k: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return found(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, found) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Minimum edge deletions for a homomorphism into `target`, by walking all
/// |target|^|g| maps.
pub fn naive_edit_distance(g: &Graph, target: &Graph) -> u64 {
    let n = g.n();
    let t = target.n();
    let edges = g.edges();
    if n == 0 {
        return 0;
    }
    assert!(t > 0, "naive edit distance needs a nonempty target");
    let mut map = vec![0usize; n];
    let mut best = u64::MAX;
    loop {
        let violations = edges.iter().filter(|&&(u, v)| !target.has_edge(map[u], map[v])).count() as u64;
        best = best.min(violations);
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            map[i] += 1;
            if map[i] < t {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// The Petersen graph: outer pentagon, inner pentagram, spokes.
pub fn petersen() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ],
    )
    .unwrap()
}

/// Builds the graph on `n` vertices whose edges are the set bits of `mask`
/// in row-major pair order — the labeled-enumeration convention.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1u64 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}
