//! Exact homomorphism and embedding counting.
//!
//! Everything here is backtracking over bitmask candidate sets: a pattern
//! vertex's candidates are the intersection of the host neighborhoods of
//! its already-placed pattern neighbors. The traversal order is chosen
//! once per pattern to maximize how many neighbors are already placed at
//! each depth, which is what keeps the search tree narrow.
//!
//! Counters are 64-bit with explicit overflow detection; a count that does
//! not fit is reported as an error, never wrapped.

use crate::graph::Graph;
use crate::ratio::Rat;

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomError {
    /// A count exceeded 64 bits.
    CountOverflow,
    /// An exhaustive map search exceeded its node budget.
    BudgetExceeded { budget: u64 },
    /// A map into the empty graph was requested for a nonempty source.
    EmptyTarget,
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::CountOverflow => write!(f, "count exceeds 64 bits"),
            HomError::BudgetExceeded { budget } => {
                write!(f, "map search exceeded its budget of {budget} nodes")
            }
            HomError::EmptyTarget => write!(f, "cannot map a nonempty graph into the empty graph"),
        }
    }
}

impl std::error::Error for HomError {}

/// A traversal order over some pattern vertices plus, per depth, the list
/// of earlier depths holding pattern neighbors of that depth's vertex.
#[derive(Clone, Debug)]
struct Plan {
    order: Vec<usize>,
    back_edges: Vec<Vec<usize>>,
}

/// Greedy plan: repeatedly place the vertex with the most already-placed
/// neighbors, breaking ties by higher degree, then lower index.
fn make_plan(g: &Graph, verts: &[usize]) -> Plan {
    let mut order = Vec::with_capacity(verts.len());
    let mut placed_mask = 0u64;
    let mut remaining: Vec<usize> = verts.to_vec();
    while !remaining.is_empty() {
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|&(_, &v)| {
                ((g.row(v) & placed_mask).count_ones(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("remaining is nonempty");
        let v = remaining.swap_remove(idx);
        order.push(v);
        placed_mask |= 1u64 << v;
    }
    let back_edges = (0..order.len())
        .map(|d| (0..d).filter(|&e| g.has_edge(order[e], order[d])).collect())
        .collect();
    Plan { order, back_edges }
}

fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = 0u64;
    let mut components = Vec::new();
    for start in 0..n {
        if seen & (1u64 << start) != 0 {
            continue;
        }
        let mut comp_mask = 1u64 << start;
        loop {
            let mut grown = comp_mask;
            let mut m = comp_mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= g.row(v);
            }
            if grown == comp_mask {
                break;
            }
            comp_mask = grown;
        }
        seen |= comp_mask;
        let mut verts = Vec::new();
        let mut m = comp_mask;
        while m != 0 {
            verts.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        components.push(verts);
    }
    components
}

/// A pattern graph prepared for counting: a fixed traversal order and its
/// automorphism count, computed once as the number of self-embeddings.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    /// Plan over the non-isolated vertices; isolated vertices contribute
    /// closed-form falling-factorial factors instead of search depth.
    core: Plan,
    isolated: usize,
    /// One plan per connected component, for homomorphism counts, which
    /// factor over components.
    components: Vec<Plan>,
    aut_count: u64,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Self, HomError> {
        let core_verts: Vec<usize> = (0..graph.n()).filter(|&v| graph.degree(v) > 0).collect();
        let core = make_plan(&graph, &core_verts);
        let isolated = graph.n() - core_verts.len();
        let components = connected_components(&graph)
            .into_iter()
            .map(|comp| make_plan(&graph, &comp))
            .collect();
        let aut_count = count_inj_parts(&core, isolated, &graph)?;
        Ok(Pattern { graph, core, isolated, components, aut_count })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of automorphisms, i.e. self-embeddings.
    pub fn aut_count(&self) -> u64 {
        self.aut_count
    }

    /// The traversal order as a permutation of all pattern vertices.
    pub fn traversal_order(&self) -> Vec<usize> {
        let mut order = self.core.order.clone();
        order.extend((0..self.graph.n()).filter(|&v| self.graph.degree(v) == 0));
        order
    }
}

struct Embedder<'a> {
    plan: &'a Plan,
    host: &'a Graph,
    injective: bool,
    full: u64,
    images: Vec<usize>,
}

impl<'a> Embedder<'a> {
    fn new(plan: &'a Plan, host: &'a Graph, injective: bool) -> Self {
        Embedder {
            plan,
            host,
            injective,
            full: host.vertex_mask(),
            images: vec![0; plan.order.len()],
        }
    }

    #[inline]
    fn candidates(&self, depth: usize, used: u64) -> u64 {
        let mut cand = self.full;
        for &e in &self.plan.back_edges[depth] {
            cand &= self.host.row(self.images[e]);
        }
        if self.injective {
            cand &= !used;
        }
        cand
    }

    fn count(&mut self, depth: usize, used: u64) -> Result<u64, HomError> {
        if depth == self.plan.order.len() {
            return Ok(1);
        }
        let mut cand = self.candidates(depth, used);
        let mut total: u64 = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.images[depth] = v;
            let below = self.count(depth + 1, used | (1u64 << v))?;
            total = total.checked_add(below).ok_or(HomError::CountOverflow)?;
        }
        Ok(total)
    }

    /// Like `count`, but also tallies, per host vertex, how many complete
    /// embeddings used it as an image.
    fn count_covering(&mut self, depth: usize, used: u64, covered: &mut [u64]) -> Result<u64, HomError> {
        if depth == self.plan.order.len() {
            for &img in &self.images {
                covered[img] = covered[img].checked_add(1).ok_or(HomError::CountOverflow)?;
            }
            return Ok(1);
        }
        let mut cand = self.candidates(depth, used);
        let mut total: u64 = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.images[depth] = v;
            let below = self.count_covering(depth + 1, used | (1u64 << v), covered)?;
            total = total.checked_add(below).ok_or(HomError::CountOverflow)?;
        }
        Ok(total)
    }

    fn find_first(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.plan.order.len() {
            return true;
        }
        let mut cand = self.candidates(depth, used);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.images[depth] = v;
            if self.find_first(depth + 1, used | (1u64 << v)) {
                return true;
            }
        }
        false
    }
}

/// Product of `m (m-1) ... (m-s+1)`, the number of ordered injections of an
/// `s`-set into an `m`-set.
fn falling_factorial(m: usize, s: usize) -> Result<u64, HomError> {
    if s > m {
        return Ok(0);
    }
    let mut acc: u64 = 1;
    for i in 0..s {
        acc = acc.checked_mul((m - i) as u64).ok_or(HomError::CountOverflow)?;
    }
    Ok(acc)
}

fn count_inj_parts(core: &Plan, isolated: usize, host: &Graph) -> Result<u64, HomError> {
    let k = core.order.len();
    if k + isolated > host.n() {
        return Ok(0);
    }
    let core_count = Embedder::new(core, host, true).count(0, 0)?;
    let free = falling_factorial(host.n() - k, isolated)?;
    core_count.checked_mul(free).ok_or(HomError::CountOverflow)
}

/// Number of homomorphisms (edge-preserving maps) from the pattern to `g`.
pub fn count_hom(q: &Pattern, g: &Graph) -> Result<u64, HomError> {
    let mut total: u64 = 1;
    for comp in &q.components {
        let c = Embedder::new(comp, g, false).count(0, 0)?;
        total = total.checked_mul(c).ok_or(HomError::CountOverflow)?;
    }
    Ok(total)
}

/// Number of injective homomorphisms (labeled embeddings) of the pattern
/// into `g`.
pub fn count_inj(q: &Pattern, g: &Graph) -> Result<u64, HomError> {
    count_inj_parts(&q.core, q.isolated, g)
}

/// Number of unlabeled copies of the pattern in `g`: embeddings divided by
/// automorphisms. The division is always exact; a remainder would mean the
/// counting engine is inconsistent with itself, so it panics.
pub fn copy_count(q: &Pattern, g: &Graph) -> Result<u64, HomError> {
    let inj = count_inj(q, g)?;
    assert_eq!(
        inj % q.aut_count,
        0,
        "automorphism count {} does not divide embedding count {inj}",
        q.aut_count
    );
    Ok(inj / q.aut_count)
}

/// Per-vertex embedding coverage: entry `v` counts the embeddings of the
/// pattern whose image contains `v`, together with min/avg summaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    per_vertex: Vec<u64>,
    min: u64,
    max: u64,
    sum: u64,
}

impl DegreeProfile {
    pub fn per_vertex(&self) -> &[u64] {
        &self.per_vertex
    }

    /// Minimum pattern degree over the host vertices (0 for an empty host).
    pub fn min(&self) -> u64 {
        self.min
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// Average pattern degree as an exact rational (0 for an empty host).
    pub fn avg(&self) -> Rat {
        if self.per_vertex.is_empty() {
            Rat::zero()
        } else {
            Rat::new(self.sum as i128, self.per_vertex.len() as i128)
        }
    }
}

/// Computes the pattern-degree profile of `g`: for each vertex, the number
/// of injective homomorphisms of `q` whose image contains it.
pub fn degree_profile(q: &Pattern, g: &Graph) -> Result<DegreeProfile, HomError> {
    let n = g.n();
    let k = q.core.order.len();
    let s = q.isolated;
    let mut per_vertex = vec![0u64; n];
    if k + s <= n {
        let mut embedder = Embedder::new(&q.core, g, true);
        let mut core_cover = vec![0u64; n];
        let core_count = embedder.count_covering(0, 0, &mut core_cover)?;
        if s == 0 {
            per_vertex = core_cover;
        } else {
            // Isolated pattern vertices take images injectively among the
            // n-k vertices missed by the core embedding. With
            // a = (n-k)(n-k-1)...(n-k-s+1) completions per core embedding and
            // b = those avoiding one fixed extra vertex, vertex v is covered
            // a times when the core covers it and a-b times otherwise.
            let a = falling_factorial(n - k, s)?;
            let b = if n - k >= 1 { falling_factorial(n - k - 1, s)? } else { 0 };
            let extra = a - b;
            for v in 0..n {
                let covering = core_cover[v].checked_mul(a).ok_or(HomError::CountOverflow)?;
                let missing = (core_count - core_cover[v])
                    .checked_mul(extra)
                    .ok_or(HomError::CountOverflow)?;
                per_vertex[v] = covering.checked_add(missing).ok_or(HomError::CountOverflow)?;
            }
        }
    }
    let min = per_vertex.iter().copied().min().unwrap_or(0);
    let max = per_vertex.iter().copied().max().unwrap_or(0);
    let mut sum: u64 = 0;
    for &d in &per_vertex {
        sum = sum.checked_add(d).ok_or(HomError::CountOverflow)?;
    }
    Ok(DegreeProfile { per_vertex, min, max, sum })
}

/// Does `g` contain an injective copy of the pattern?
pub fn contains(q: &Pattern, g: &Graph) -> bool {
    if q.graph.n() > g.n() {
        return false;
    }
    Embedder::new(&q.core, g, true).find_first(0, 0)
}

/// True iff `g` contains no member of `family` as a subgraph.
pub fn is_free(g: &Graph, family: &[Pattern]) -> bool {
    !family.iter().any(|f| contains(f, g))
}

/// Searches for a homomorphism `g -> h`. Returns one witness map (indexed
/// by vertex of `g`) if any exists.
pub fn is_colorable(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let verts: Vec<usize> = (0..g.n()).collect();
    let plan = make_plan(g, &verts);
    let mut embedder = Embedder::new(&plan, h, false);
    if !embedder.find_first(0, 0) {
        return None;
    }
    let mut witness = vec![0usize; g.n()];
    for (depth, &v) in plan.order.iter().enumerate() {
        witness[v] = embedder.images[depth];
    }
    Some(witness)
}

/// Result of a minimum edge-deletion search: the smallest number of edges
/// of the source whose removal admits a homomorphism into the target, and
/// a map attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditDistance {
    pub distance: u64,
    pub witness: Vec<usize>,
}

/// Minimum number of edges of `g` to delete so that `g` becomes
/// `h`-colorable; equivalently the minimum, over all maps V(g) -> V(h), of
/// the number of `g`-edges sent to non-edges of `h`. Branch-and-bound over
/// all maps, with `budget` bounding the number of search nodes.
pub fn edit_distance_to_colorable(g: &Graph, h: &Graph, budget: u64) -> Result<EditDistance, HomError> {
    if g.n() == 0 {
        return Ok(EditDistance { distance: 0, witness: Vec::new() });
    }
    if h.n() == 0 {
        return Err(HomError::EmptyTarget);
    }
    let verts: Vec<usize> = (0..g.n()).collect();
    let plan = make_plan(g, &verts);
    let mut search = EditSearch {
        plan: &plan,
        target: h,
        images: vec![0; g.n()],
        best: g.edge_count() as u64,
        best_map: vec![0; g.n()],
        nodes: 0,
        budget,
    };
    search.run(0, 0)?;
    let mut witness = vec![0usize; g.n()];
    for (depth, &v) in plan.order.iter().enumerate() {
        witness[v] = search.best_map[depth];
    }
    Ok(EditDistance { distance: search.best, witness })
}

struct EditSearch<'a> {
    plan: &'a Plan,
    target: &'a Graph,
    images: Vec<usize>,
    /// Best violation count so far; initialized to the all-to-one-vertex
    /// map, which violates every edge.
    best: u64,
    best_map: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> EditSearch<'a> {
    fn run(&mut self, depth: usize, violations: u64) -> Result<(), HomError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(HomError::BudgetExceeded { budget: self.budget });
        }
        if violations >= self.best {
            return Ok(());
        }
        if depth == self.plan.order.len() {
            self.best = violations;
            self.best_map.copy_from_slice(&self.images);
            return Ok(());
        }
        // Try target vertices in order of added violations so good bounds
        // appear early.
        let mut scored: Vec<(u64, usize)> = (0..self.target.n())
            .map(|hv| {
                let added = self.plan.back_edges[depth]
                    .iter()
                    .filter(|&&e| !self.target.has_edge(self.images[e], hv))
                    .count() as u64;
                (added, hv)
            })
            .collect();
        scored.sort_unstable();
        for (added, hv) in scored {
            self.images[depth] = hv;
            self.run(depth + 1, violations + added)?;
        }
        Ok(())
    }
}

/// Default node budget for edit-distance searches.
pub const DEFAULT_EDIT_BUDGET: u64 = 200_000_000;
