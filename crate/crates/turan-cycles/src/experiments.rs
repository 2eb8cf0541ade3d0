//! Experiment harness: exact extremal values at small orders, degree-ratio
//! scans against colorability, vertex extendability, and edit-distance
//! measurements.
//!
//! Every scan is exhaustive over isomorphism classes at the given order,
//! and every reported ratio is an exact rational, so reruns with the same
//! parameters reproduce reports byte for byte. Scans fan the per-graph
//! work across worker threads; results are collected in stream order and
//! then sorted, so scheduling never changes a report.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumerate::{all_graphs_filtered, EnumError};
use crate::graph::{Graph, GraphError};
use crate::hom::{
    count_inj, degree_profile, edit_distance_to_colorable, is_colorable, is_free, HomError,
    Pattern,
};
use crate::io::to_graph6;
use crate::ratio::Rat;

/// Upper bound on how many witnesses a report lists in full; the total
/// count is always reported.
pub const WITNESS_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub enum ExpError {
    Enumerate(EnumError),
    Hom(HomError),
    Graph(GraphError),
    /// The forbidden family admits no graphs at this order at all.
    EmptyClass { n: usize },
}

impl fmt::Display for ExpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpError::Enumerate(e) => write!(f, "{e}"),
            ExpError::Hom(e) => write!(f, "{e}"),
            ExpError::Graph(e) => write!(f, "{e}"),
            ExpError::EmptyClass { n } => {
                write!(f, "no graphs on {n} vertices avoid the forbidden family")
            }
        }
    }
}

impl std::error::Error for ExpError {}

impl From<EnumError> for ExpError {
    fn from(e: EnumError) -> Self {
        ExpError::Enumerate(e)
    }
}

impl From<HomError> for ExpError {
    fn from(e: HomError) -> Self {
        ExpError::Hom(e)
    }
}

impl From<GraphError> for ExpError {
    fn from(e: GraphError) -> Self {
        ExpError::Graph(e)
    }
}

/// A witness graph, reported as its certificate plus graph6 encoding.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessEntry {
    pub cert: String,
    pub graph6: String,
}

fn witness_entry(g: &Graph) -> WitnessEntry {
    WitnessEntry { cert: canonical_form(g).hex(), graph6: to_graph6(g) }
}

/// Exact maximum embedding count over all family-free graphs of one order.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub pattern_graph6: String,
    pub pattern_order: usize,
    pub pattern_aut_count: u64,
    pub family_graph6: Vec<String>,
    /// Maximum number of labeled embeddings of the pattern.
    pub value: u64,
    pub classes_scanned: usize,
    pub witness_total: usize,
    /// Maximizing classes, capped at [`WITNESS_CAP`], certificate order.
    pub witnesses: Vec<WitnessEntry>,
    /// value / C(n, pattern order); zero when the binomial vanishes.
    pub density: Rat,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn family_graph6(family: &[Pattern]) -> Vec<String> {
    family.iter().map(|p| to_graph6(p.graph())).collect()
}

/// Enumerates all family-free classes at order `n` along with each one's
/// embedding count of `q`.
fn scan_class_counts(
    n: usize,
    q: &Pattern,
    family: &[Pattern],
) -> Result<Vec<(Graph, u64)>, ExpError> {
    let reps: Vec<Graph> = all_graphs_filtered(n, family)?.collect();
    if reps.is_empty() {
        return Err(ExpError::EmptyClass { n });
    }
    let counted: Result<Vec<(Graph, u64)>, HomError> = reps
        .into_par_iter()
        .map(|g| count_inj(q, &g).map(|c| (g, c)))
        .collect();
    Ok(counted?)
}

/// Maximizes the embedding count of `q` over family-free graphs on `n`
/// vertices, reporting the value, all maximizing classes, and the density.
pub fn extremal_search(n: usize, q: &Pattern, family: &[Pattern]) -> Result<ExtremalResult, ExpError> {
    let counted = scan_class_counts(n, q, family)?;
    let classes_scanned = counted.len();
    let value = counted.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let mut witnesses: Vec<WitnessEntry> = counted
        .iter()
        .filter(|&&(_, c)| c == value)
        .map(|(g, _)| witness_entry(g))
        .collect();
    witnesses.sort_by(|a, b| a.cert.cmp(&b.cert));
    let witness_total = witnesses.len();
    witnesses.truncate(WITNESS_CAP);
    let vq = q.graph().n();
    let binom = binomial(n, vq);
    let density = if binom == 0 { Rat::zero() } else { Rat::new(value as i128, binom as i128) };
    Ok(ExtremalResult {
        n,
        pattern_graph6: to_graph6(q.graph()),
        pattern_order: vq,
        pattern_aut_count: q.aut_count(),
        family_graph6: family_graph6(family),
        value,
        classes_scanned,
        witness_total,
        witnesses,
        density,
    })
}

/// Average pentagon degree of the Turán graph T(n, r), exactly.
pub fn turan_degree_reference(n: usize, r: usize) -> Result<Rat, ExpError> {
    if r < 3 {
        return Err(ExpError::Graph(GraphError::OrderOutOfRange {
            what: "reference parts",
            got: r,
            min: 3,
            max: crate::graph::MAX_VERTICES,
        }));
    }
    if n < 5 {
        return Err(ExpError::Graph(GraphError::OrderOutOfRange {
            what: "reference order",
            got: n,
            min: 5,
            max: crate::graph::MAX_VERTICES,
        }));
    }
    let turan = Graph::turan(n, r)?;
    let pentagon = Pattern::new(Graph::cycle(5)?)?;
    Ok(degree_profile(&pentagon, &turan)?.avg())
}

/// One row of a degree-stability scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub cert: String,
    pub graph6: String,
    pub embeddings: u64,
    pub min_degree: u64,
    /// min_degree * n / (pattern order * extremal value), exactly.
    pub ratio: Rat,
    pub colorable: bool,
}

/// Full degree-threshold scan of one (pattern, family, target) triple.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityScanResult {
    pub n: usize,
    pub pattern_graph6: String,
    pub family_graph6: Vec<String>,
    pub target_graph6: String,
    pub extremal_value: u64,
    pub classes_scanned: usize,
    /// Every family-free class, sorted by descending ratio then certificate.
    pub rows: Vec<ScanRow>,
    /// Largest ratio attained by a non-colorable class, when one exists:
    /// the empirical threshold above which everything lands in the target
    /// family at this order.
    pub critical_ratio: Option<Rat>,
    pub noncolorable_total: usize,
}

/// For every family-free class on `n` vertices, records its normalized
/// minimum pattern-degree ratio and whether it maps into `target`, and
/// reports the largest ratio of any class that does not.
pub fn degree_stability_scan(
    n: usize,
    q: &Pattern,
    family: &[Pattern],
    target: &Graph,
) -> Result<StabilityScanResult, ExpError> {
    let counted = scan_class_counts(n, q, family)?;
    let classes_scanned = counted.len();
    let extremal_value = counted.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let vq = q.graph().n();
    let rows: Result<Vec<ScanRow>, HomError> = counted
        .par_iter()
        .map(|(g, embeddings)| {
            let profile = degree_profile(q, g)?;
            let min_degree = profile.min();
            let ratio = if extremal_value == 0 || vq == 0 {
                Rat::zero()
            } else {
                Rat::new(
                    min_degree as i128 * n as i128,
                    vq as i128 * extremal_value as i128,
                )
            };
            Ok(ScanRow {
                cert: canonical_form(g).hex(),
                graph6: to_graph6(g),
                embeddings: *embeddings,
                min_degree,
                ratio,
                colorable: is_colorable(g, target).is_some(),
            })
        })
        .collect();
    let mut rows = rows?;
    rows.sort_by(|a, b| b.ratio.cmp(&a.ratio).then_with(|| a.cert.cmp(&b.cert)));
    let critical_ratio = rows.iter().filter(|r| !r.colorable).map(|r| r.ratio).max();
    let noncolorable_total = rows.iter().filter(|r| !r.colorable).count();
    Ok(StabilityScanResult {
        n,
        pattern_graph6: to_graph6(q.graph()),
        family_graph6: family_graph6(family),
        target_graph6: to_graph6(target),
        extremal_value,
        classes_scanned,
        rows,
        critical_ratio,
        noncolorable_total,
    })
}

/// One vertex-extendability instance, with the hypothesis legs evaluated
/// independently of the conclusion.
#[derive(Clone, Debug, Serialize)]
pub struct ExtendabilityResult {
    pub graph6: String,
    pub vertex: usize,
    pub pattern_graph6: String,
    pub family_graph6: Vec<String>,
    pub target_graph6: String,
    /// Requested fraction of the extremal normalized degree.
    pub ratio: Rat,
    /// ratio * pattern order * extremal value / n: the degree bound tested.
    pub threshold: Rat,
    pub extremal_value: u64,
    pub min_degree: u64,
    pub family_free: bool,
    pub degree_ok: bool,
    pub minus_vertex_colorable: bool,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
}

/// Evaluates one (graph, vertex) extendability instance: whether the graph
/// is family-free with minimum pattern degree at least `ratio` times the
/// extremal average, whether deleting `vertex` lands in the target family,
/// and — independently — whether the graph itself does.
pub fn vertex_extendability_check(
    g: &Graph,
    vertex: usize,
    q: &Pattern,
    family: &[Pattern],
    target: &Graph,
    ratio: Rat,
) -> Result<ExtendabilityResult, ExpError> {
    let n = g.n();
    if vertex >= n {
        return Err(ExpError::Graph(GraphError::VertexOutOfRange { v: vertex, n }));
    }
    let extremal_value = extremal_search(n, q, family)?.value;
    let instance = check_instance(g, vertex, q, family, target, ratio, extremal_value, true)?;
    Ok(instance)
}

#[allow(clippy::too_many_arguments)]
fn check_instance(
    g: &Graph,
    vertex: usize,
    q: &Pattern,
    family: &[Pattern],
    target: &Graph,
    ratio: Rat,
    extremal_value: u64,
    check_free: bool,
) -> Result<ExtendabilityResult, ExpError> {
    let n = g.n();
    let vq = q.graph().n();
    let profile = degree_profile(q, g)?;
    let min_degree = profile.min();
    let threshold = ratio * Rat::new(vq as i128 * extremal_value as i128, n as i128);
    let degree_ok = Rat::from_int(min_degree as i128) >= threshold;
    let family_free = if check_free { is_free(g, family) } else { true };
    let minus_vertex_colorable = is_colorable(&g.delete_vertex(vertex), target).is_some();
    let hypothesis_met = family_free && degree_ok && minus_vertex_colorable;
    let conclusion_holds = is_colorable(g, target).is_some();
    Ok(ExtendabilityResult {
        graph6: to_graph6(g),
        vertex,
        pattern_graph6: to_graph6(q.graph()),
        family_graph6: family_graph6(family),
        target_graph6: to_graph6(target),
        ratio,
        threshold,
        extremal_value,
        min_degree,
        family_free,
        degree_ok,
        minus_vertex_colorable,
        hypothesis_met,
        conclusion_holds,
    })
}

/// Batch extendability scan over every (class, vertex) pair at one order.
#[derive(Clone, Debug, Serialize)]
pub struct ExtendabilityScanResult {
    pub n: usize,
    pub pattern_graph6: String,
    pub family_graph6: Vec<String>,
    pub target_graph6: String,
    pub ratio: Rat,
    pub extremal_value: u64,
    pub classes_scanned: usize,
    pub instances_checked: usize,
    pub hypothesis_met_total: usize,
    /// Instances meeting the hypothesis, capped at [`WITNESS_CAP`].
    pub hypothesis_met: Vec<WitnessInstance>,
    /// Instances meeting the hypothesis whose conclusion fails — empirical
    /// counterexamples at this order. Never capped.
    pub violations: Vec<WitnessInstance>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessInstance {
    pub cert: String,
    pub graph6: String,
    pub vertex: usize,
}

/// Runs [`vertex_extendability_check`] over every family-free class at
/// order `n` and every vertex, collecting hypothesis-met instances and any
/// conclusion violations.
pub fn vertex_extendability_scan(
    n: usize,
    q: &Pattern,
    family: &[Pattern],
    target: &Graph,
    ratio: Rat,
) -> Result<ExtendabilityScanResult, ExpError> {
    let counted = scan_class_counts(n, q, family)?;
    let classes_scanned = counted.len();
    let extremal_value = counted.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let per_class: Result<Vec<(Vec<WitnessInstance>, Vec<WitnessInstance>)>, ExpError> = counted
        .par_iter()
        .map(|(g, _)| {
            let cert = canonical_form(g).hex();
            let mut met = Vec::new();
            let mut bad = Vec::new();
            for v in 0..n {
                let r = check_instance(g, v, q, family, target, ratio, extremal_value, false)?;
                if r.hypothesis_met {
                    let instance =
                        WitnessInstance { cert: cert.clone(), graph6: r.graph6.clone(), vertex: v };
                    if !r.conclusion_holds {
                        bad.push(instance.clone());
                    }
                    met.push(instance);
                }
            }
            Ok((met, bad))
        })
        .collect();
    let per_class = per_class?;
    let mut hypothesis_met: Vec<WitnessInstance> = Vec::new();
    let mut violations: Vec<WitnessInstance> = Vec::new();
    for (met, bad) in per_class {
        hypothesis_met.extend(met);
        violations.extend(bad);
    }
    hypothesis_met.sort_by(|a, b| a.cert.cmp(&b.cert).then(a.vertex.cmp(&b.vertex)));
    violations.sort_by(|a, b| a.cert.cmp(&b.cert).then(a.vertex.cmp(&b.vertex)));
    let hypothesis_met_total = hypothesis_met.len();
    hypothesis_met.truncate(WITNESS_CAP);
    Ok(ExtendabilityScanResult {
        n,
        pattern_graph6: to_graph6(q.graph()),
        family_graph6: family_graph6(family),
        target_graph6: to_graph6(target),
        ratio,
        extremal_value,
        classes_scanned,
        instances_checked: classes_scanned * n,
        hypothesis_met_total,
        hypothesis_met,
        violations,
    })
}

/// Edit-distance histogram over near-extremal classes.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeStabilityReport {
    pub n: usize,
    pub pattern_graph6: String,
    pub family_graph6: Vec<String>,
    pub target_graph6: String,
    /// Inclusion threshold: classes with embeddings >= near * extremal.
    pub near: Rat,
    pub extremal_value: u64,
    pub classes_scanned: usize,
    pub considered: usize,
    pub max_distance: u64,
    /// max_distance / n^2, the scale on which edge edits are measured.
    pub max_normalized: Rat,
    pub histogram: Vec<HistogramBin>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HistogramBin {
    pub distance: u64,
    pub classes: usize,
}

/// Over family-free classes whose embedding count is at least
/// `near * extremal`, measures the minimum edge deletions to reach
/// target-colorability, reporting the maximum and a histogram normalized
/// by n^2.
pub fn edge_stability_measure(
    n: usize,
    q: &Pattern,
    family: &[Pattern],
    target: &Graph,
    near: Rat,
    budget: u64,
) -> Result<EdgeStabilityReport, ExpError> {
    let counted = scan_class_counts(n, q, family)?;
    let classes_scanned = counted.len();
    let extremal_value = counted.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let threshold = near * Rat::from_int(extremal_value as i128);
    let qualifying: Vec<&(Graph, u64)> = counted
        .iter()
        .filter(|(_, c)| Rat::from_int(*c as i128) >= threshold)
        .collect();
    let distances: Result<Vec<u64>, HomError> = qualifying
        .par_iter()
        .map(|(g, _)| edit_distance_to_colorable(g, target, budget).map(|d| d.distance))
        .collect();
    let distances = distances?;
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for &d in &distances {
        *histogram.entry(d).or_insert(0) += 1;
    }
    let max_distance = distances.iter().copied().max().unwrap_or(0);
    Ok(EdgeStabilityReport {
        n,
        pattern_graph6: to_graph6(q.graph()),
        family_graph6: family_graph6(family),
        target_graph6: to_graph6(target),
        near,
        extremal_value,
        classes_scanned,
        considered: distances.len(),
        max_distance,
        max_normalized: Rat::new(max_distance as i128, (n * n) as i128),
        histogram: histogram
            .into_iter()
            .map(|(distance, classes)| HistogramBin { distance, classes })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> Pattern {
        Pattern::new(Graph::cycle(5).unwrap()).unwrap()
    }

    fn k(r: usize) -> Pattern {
        Pattern::new(Graph::complete(r).unwrap()).unwrap()
    }

    #[test]
    fn pentagon_extremal_in_triangle_free_five() {
        let result = extremal_search(5, &pentagon(), &[k(3)]).unwrap();
        assert_eq!(result.value, 10);
        assert_eq!(result.witness_total, 1);
        assert_eq!(result.witnesses[0].cert, canonical_form(&Graph::cycle(5).unwrap()).hex());
        assert_eq!(result.density, Rat::from_int(10));
    }

    #[test]
    fn pentagon_extremal_no_room() {
        let result = extremal_search(4, &pentagon(), &[k(4)]).unwrap();
        assert_eq!(result.value, 0);
        assert_eq!(result.density, Rat::zero());
        // Every class attains zero.
        assert_eq!(result.witness_total, result.classes_scanned);
    }

    #[test]
    fn empty_class_is_reported() {
        let k1 = Pattern::new(Graph::complete(1).unwrap()).unwrap();
        assert_eq!(extremal_search(3, &pentagon(), &[k1]).unwrap_err(), ExpError::EmptyClass { n: 3 });
    }

    #[test]
    fn reference_degree_at_five_three() {
        assert_eq!(turan_degree_reference(5, 3).unwrap(), Rat::from_int(40));
        assert!(turan_degree_reference(4, 3).is_err());
        assert!(turan_degree_reference(7, 2).is_err());
    }

    #[test]
    fn extendability_on_turan_graph() {
        // T(6,3) is K4-free and 3-partite; any vertex deletion stays
        // 3-colorable, so hypothesis and conclusion both hold at ratio 0.
        let g = Graph::turan(6, 3).unwrap();
        let r = vertex_extendability_check(&g, 0, &pentagon(), &[k(4)], &Graph::complete(3).unwrap(), Rat::zero()).unwrap();
        assert!(r.family_free && r.degree_ok && r.minus_vertex_colorable);
        assert!(r.hypothesis_met);
        assert!(r.conclusion_holds);
    }

    #[test]
    fn extendability_isolated_vertex_fails_degree_leg() {
        // Pentagon plus an isolated vertex: minimum pentagon degree is 0,
        // so any positive ratio knocks out the hypothesis.
        let g = Graph::cycle(5).unwrap().add_vertex(0).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let r = vertex_extendability_check(&g, 5, &pentagon(), &[k(3)], &c5, Rat::new(1, 2)).unwrap();
        assert!(!r.degree_ok);
        assert!(!r.hypothesis_met);
        assert!(r.conclusion_holds);
        assert_eq!(r.min_degree, 0);
    }

    #[test]
    fn scan_rows_are_sorted_and_consistent() {
        let result = degree_stability_scan(5, &pentagon(), &[k(4)], &Graph::complete(3).unwrap()).unwrap();
        assert_eq!(result.extremal_value, 40);
        for pair in result.rows.windows(2) {
            assert!(pair[0].ratio >= pair[1].ratio);
        }
        if let Some(critical) = result.critical_ratio {
            for row in &result.rows {
                if row.ratio > critical {
                    assert!(row.colorable);
                }
            }
        } else {
            assert!(result.rows.iter().all(|r| r.colorable));
        }
    }

    #[test]
    fn edge_stability_extremal_witnesses_are_colorable() {
        let report = edge_stability_measure(
            5,
            &pentagon(),
            &[k(4)],
            &Graph::complete(3).unwrap(),
            Rat::one(),
            crate::hom::DEFAULT_EDIT_BUDGET,
        )
        .unwrap();
        assert_eq!(report.max_distance, 0);
        assert_eq!(report.histogram, vec![HistogramBin { distance: 0, classes: report.considered }]);
    }
}
