//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with its runtime. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines for passing criteria too).

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use common::*;
use turan_cycles::*;

fn pattern(g: Graph) -> Pattern {
    Pattern::new(g).unwrap()
}

fn standard_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", Graph::complete(2).unwrap()),
        ("K3", Graph::complete(3).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
        ("C7", Graph::cycle(7).unwrap()),
    ]
}

fn check_time(criterion: u32, start: Instant, budget: Duration) -> Duration {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "criterion {criterion}: runtime {elapsed:?} exceeds budget {budget:?}"
    );
    elapsed
}

/// Criterion 1: engine counts match the all-maps oracle on every host with
/// at most 6 vertices, for patterns K2, K3, K4, C5, C7. Runtime < 2 min.
#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let patterns: Vec<(&str, Graph, Pattern)> = standard_patterns()
        .into_iter()
        .map(|(name, g)| (name, g.clone(), pattern(g)))
        .collect();
    let mut hosts = 0usize;
    for n in 0..=6 {
        for host in all_graphs(n).unwrap() {
            hosts += 1;
            for (name, raw, prepared) in &patterns {
                let hom = count_hom(prepared, &host).unwrap();
                let inj = count_inj(prepared, &host).unwrap();
                assert_eq!(hom, naive_hom(raw, &host), "hom({name}, {host:?})");
                assert_eq!(inj, naive_inj(raw, &host), "inj({name}, {host:?})");
            }
        }
    }
    let elapsed = check_time(1, start, Duration::from_secs(120));
    println!(
        "acceptance criterion 1: PASS — hom/inj match the all-maps oracle on {hosts} hosts x 5 patterns ({elapsed:?})"
    );
}

/// Criterion 2: the coverage-sum identity and automorphism divisibility
/// hold over 10^4 seeded random (pattern, host) pairs with n <= 8. < 1 min.
#[test]
fn criterion_2_counting_identities() {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut seed = 0u64;
    'outer: loop {
        for pattern_order in 1..=5usize {
            for host_order in 0..=8usize {
                for &p in &[0.25, 0.5, 0.85] {
                    seed += 1;
                    let q_graph = random_graphs(pattern_order, p, seed, 1).unwrap().next().unwrap();
                    let host = random_graphs(host_order, p, seed ^ 0xABCD, 1).unwrap().next().unwrap();
                    let q = pattern(q_graph);
                    let inj = count_inj(&q, &host).unwrap();
                    let profile = degree_profile(&q, &host).unwrap();
                    assert_eq!(
                        profile.sum(),
                        pattern_order as u64 * inj,
                        "sum identity failed (pattern order {pattern_order}, host order {host_order}, seed {seed})"
                    );
                    assert_eq!(
                        inj % q.aut_count(),
                        0,
                        "aut divisibility failed (pattern order {pattern_order}, host order {host_order}, seed {seed})"
                    );
                    assert!(profile.min() <= profile.max());
                    pairs += 1;
                    if pairs >= 10_000 {
                        break 'outer;
                    }
                }
            }
        }
    }
    let elapsed = check_time(2, start, Duration::from_secs(60));
    println!("acceptance criterion 2: PASS — identities hold on {pairs} random pairs ({elapsed:?})");
}

/// Criterion 3: construction goldens — pentagon self-count, doubled blowup
/// count (oracle-confirmed live), and Turán graphs clique-free and
/// clique-colorable for 2 <= r <= n <= 10.
#[test]
fn criterion_3_construction_goldens() {
    let start = Instant::now();
    let c5 = Graph::cycle(5).unwrap();
    let pentagon = pattern(c5.clone());
    assert_eq!(count_inj(&pentagon, &c5).unwrap(), 10);

    let doubled = c5.blowup(&PartSpec::uniform(5, 2).unwrap()).unwrap();
    assert_eq!(count_inj(&pentagon, &doubled).unwrap(), 320);
    assert_eq!(naive_inj(&c5, &doubled), 320, "blowup golden disagrees with the oracle");

    for n in 2..=10usize {
        for r in 2..=n {
            let t = Graph::turan(n, r).unwrap();
            let forbidden = pattern(Graph::complete(r + 1).unwrap());
            assert!(is_free(&t, &[forbidden]), "T({n},{r}) contains K{}", r + 1);
            let target = Graph::complete(r).unwrap();
            let witness = is_colorable(&t, &target)
                .unwrap_or_else(|| panic!("T({n},{r}) should be K{r}-colorable"));
            for (u, v) in t.edges() {
                assert!(target.has_edge(witness[u], witness[v]));
            }
        }
    }
    let elapsed = check_time(3, start, Duration::from_secs(60));
    println!("acceptance criterion 3: PASS — construction goldens hold ({elapsed:?})");
}

/// Criterion 4: isomorph-free enumeration counts match the classical
/// sequence for n = 1..8, cross-checked at n <= 6 against labeled
/// enumeration deduplicated by a minimum-over-all-permutations canonical
/// form. n = 8 under 5 minutes.
#[test]
fn criterion_4_enumeration_counts() {
    let start = Instant::now();
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        if n <= 6 {
            let independent = labeled_dedup_class_count(n);
            assert_eq!(independent, want, "independent dedup count at n = {n}");
        }
        let got = all_graphs(n).unwrap().count();
        assert_eq!(got, want, "class count at n = {n}");
    }
    let elapsed = check_time(4, start, Duration::from_secs(300));
    println!("acceptance criterion 4: PASS — class counts 1,2,4,11,34,156,1044,12346 ({elapsed:?})");
}

/// Labeled enumeration + naive canonical dedup, fully independent of the
/// crate's canonical form: the certificate is the minimum upper-triangle
/// bitmask over all n! relabelings.
fn labeled_dedup_class_count(n: usize) -> usize {
    let pairs = n * (n - 1) / 2;
    let mut classes: HashSet<u64> = HashSet::new();
    for mask in 0u64..(1 << pairs) {
        let g = graph_from_mask(n, mask);
        classes.insert(naive_min_mask(&g));
    }
    classes.len()
}

fn naive_min_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(perm[u], perm[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Criterion 5: extremal values against live exhaustive oracles.
///
/// The oracle value for (7, C7, {C5}) is 28, attained by a unique class
/// that is not the heptagon (the heptagon attains 14), so the stated
/// expectation that the witness list includes C7 cannot hold; this test
/// reports that discrepancy and fails on that clause, honestly.
#[test]
fn criterion_5_extremal_values() {
    let start = Instant::now();
    let c5 = Graph::cycle(5).unwrap();
    let c7 = Graph::cycle(7).unwrap();
    let pentagon = pattern(c5.clone());
    let heptagon = pattern(c7.clone());
    let k3 = pattern(Graph::complete(3).unwrap());
    let k4 = pattern(Graph::complete(4).unwrap());
    let minute = Duration::from_secs(60);

    // (5, C5, {K3}): oracle over all 1024 labeled graphs.
    let part = Instant::now();
    let oracle_k3 = oracle_extremal_labeled(5, &c5, &Graph::complete(3).unwrap());
    let result = extremal_search(5, &pentagon, &[k3]).unwrap();
    assert_eq!(result.value, 10);
    assert_eq!(result.value, oracle_k3);
    assert_eq!(result.witness_total, 1);
    assert_eq!(result.witnesses[0].cert, canonical_form(&c5).hex(), "witness should be the pentagon");
    assert!(part.elapsed() < minute);

    // (5, C5, {K4}): oracle expected 40 with witness T(5,3).
    let part = Instant::now();
    let oracle_k4 = oracle_extremal_labeled(5, &c5, &Graph::complete(4).unwrap());
    let result = extremal_search(5, &pentagon, &[k4]).unwrap();
    assert_eq!(result.value, oracle_k4);
    assert_eq!(result.value, 40);
    assert_eq!(result.witness_total, 1);
    assert_eq!(
        result.witnesses[0].cert,
        canonical_form(&Graph::turan(5, 3).unwrap()).hex(),
        "witness should be T(5,3)"
    );
    assert!(part.elapsed() < minute);

    // (7, C7, {C5}): compare against the independent labeled-exhaustive
    // oracle over all 2^21 graphs.
    let part = Instant::now();
    let oracle_c7 = oracle_extremal_7_c7_c5free();
    let result = extremal_search(7, &heptagon, &[pattern(c5.clone())]).unwrap();
    assert_eq!(result.value, oracle_c7, "engine maximum disagrees with the labeled oracle");
    // Third route: the reported witnesses really are C5-free and attain the
    // value, per the all-maps oracle.
    for w in &result.witnesses {
        let g = turan_cycles::io::from_graph6(&w.graph6).unwrap();
        assert_eq!(naive_inj(&c5, &g), 0, "witness contains a pentagon");
        assert_eq!(naive_inj(&c7, &g), result.value, "witness does not attain the maximum");
    }
    assert!(part.elapsed() < minute);
    let elapsed = start.elapsed();

    let c7_cert = canonical_form(&c7).hex();
    let includes_c7 = result.witnesses.iter().any(|w| w.cert == c7_cert);
    if !includes_c7 {
        let c7_attains = count_inj(&heptagon, &c7).unwrap();
        println!(
            "acceptance criterion 5: FAIL — oracle equalities hold (10, 40, {}), but the witness \
             list for (7, C7, {{C5}}) is {:?} and does not include C7: the heptagon attains only \
             {} of the oracle maximum {}, so the stated witness expectation is unattainable at n = 7 \
             ({elapsed:?})",
            result.value,
            result.witnesses.iter().map(|w| w.graph6.as_str()).collect::<Vec<_>>(),
            c7_attains,
            result.value,
        );
    } else {
        println!("acceptance criterion 5: PASS — extremal values 10, 40, {} with expected witnesses ({elapsed:?})", result.value);
    }
    assert!(
        includes_c7,
        "witness list for (7, C7, {{C5}}) does not include C7: C7 attains 14 < {} (see printed analysis)",
        result.value
    );
}

/// Exhaustive oracle: maximum naive embedding count of `pattern` over all
/// labeled graphs on `n` vertices avoiding `forbidden`.
fn oracle_extremal_labeled(n: usize, pattern: &Graph, forbidden: &Graph) -> u64 {
    let pairs = n * (n - 1) / 2;
    let mut best = 0u64;
    for mask in 0u64..(1 << pairs) {
        let g = graph_from_mask(n, mask);
        if naive_inj(forbidden, &g) > 0 {
            continue;
        }
        best = best.max(naive_inj(pattern, &g));
    }
    best
}

/// Self-contained exhaustive oracle for inj(7, C7, {C5}) over all 2^21
/// labeled graphs: adjacency bytes, subset-based pentagon detection, and
/// backtracking Hamiltonian-walk counting, sharing nothing with the
/// library's search plans.
fn oracle_extremal_7_c7_c5free() -> u64 {
    let subsets: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        for mask in 0u32..(1 << 7) {
            if mask.count_ones() == 5 {
                out.push((0..7).filter(|&v| mask & (1 << v) != 0).collect());
            }
        }
        out
    };
    let cycles = pentagon_cyclic_orders();
    let mut max_inj = 0u64;
    for mask in 0u64..(1 << 21) {
        let mut adj = [0u8; 7];
        let mut bit = 0;
        for u in 0..7 {
            for v in (u + 1)..7 {
                if mask & (1u64 << bit) != 0 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        let has_c5 = subsets.iter().any(|subset| {
            cycles
                .iter()
                .any(|cycle| cycle.iter().all(|&(a, b)| adj[subset[a]] & (1 << subset[b]) != 0))
        });
        if has_c5 {
            continue;
        }
        max_inj = max_inj.max(7 * directed_hamiltonian_from_zero(&adj));
    }
    max_inj
}

/// The 12 cyclic orders of five positions as adjacent-pair lists, fixing
/// position 0 and quotienting by direction.
fn pentagon_cyclic_orders() -> Vec<[(usize, usize); 5]> {
    let mut out = Vec::new();
    let mut rest = [1usize, 2, 3, 4];
    fn permute(arr: &mut [usize; 4], k: usize, out: &mut Vec<[(usize, usize); 5]>) {
        if k == 4 {
            if arr[0] < arr[3] {
                out.push([(0, arr[0]), (arr[0], arr[1]), (arr[1], arr[2]), (arr[2], arr[3]), (arr[3], 0)]);
            }
            return;
        }
        for i in k..4 {
            arr.swap(k, i);
            permute(arr, k + 1, out);
            arr.swap(k, i);
        }
    }
    permute(&mut rest, 0, &mut out);
    out
}

fn directed_hamiltonian_from_zero(adj: &[u8; 7]) -> u64 {
    fn rec(adj: &[u8; 7], current: usize, used: u8, depth: usize) -> u64 {
        if depth == 7 {
            return u64::from(adj[current] & 1 != 0);
        }
        let mut total = 0;
        let mut cand = adj[current] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            total += rec(adj, v, used | (1 << v), depth + 1);
        }
        total
    }
    rec(adj, 0, 1, 1)
}

/// Criterion 6: odd-cycle colorability table matches the exhaustive map
/// search, and colorability into C_{2r+1} forces shorter odd cycles out,
/// over all graphs on <= 7 vertices for r <= 3. < 3 minutes.
#[test]
fn criterion_6_colorability_oracle() {
    let start = Instant::now();
    // Table: C_{2k+1} -> C_{2j+1} colorable iff j <= k.
    for k in 1..=4usize {
        for j in 1..=4usize {
            let source = Graph::cycle(2 * k + 1).unwrap();
            let target = Graph::cycle(2 * j + 1).unwrap();
            let witness = is_colorable(&source, &target);
            assert_eq!(witness.is_some(), j <= k, "colorable(C{}, C{})", 2 * k + 1, 2 * j + 1);
            match witness {
                Some(map) => {
                    for (u, v) in source.edges() {
                        assert!(target.has_edge(map[u], map[v]));
                    }
                    // Independent positive witness: walk forward, then fold
                    // the leftover even stretch across one target edge.
                    let fold = fold_map(2 * k + 1, 2 * j + 1);
                    for (u, v) in source.edges() {
                        assert!(target.has_edge(fold[u], fold[v]), "fold witness broken");
                    }
                }
                None => {
                    // Independent negative check: no map among all |T|^|S|.
                    assert_eq!(naive_hom(&source, &target), 0, "oracle found a map the engine missed");
                }
            }
        }
    }
    // Odd-girth invariant over every class on <= 7 vertices.
    let c3 = pattern(Graph::cycle(3).unwrap());
    let c5 = pattern(Graph::cycle(5).unwrap());
    let mut checked = 0usize;
    for n in 0..=7usize {
        for g in all_graphs(n).unwrap() {
            if is_colorable(&g, &Graph::cycle(5).unwrap()).is_some() {
                assert_eq!(count_inj(&c3, &g).unwrap(), 0, "C5-colorable graph contains a triangle");
            }
            if is_colorable(&g, &Graph::cycle(7).unwrap()).is_some() {
                assert_eq!(count_inj(&c3, &g).unwrap(), 0);
                assert_eq!(count_inj(&c5, &g).unwrap(), 0, "C7-colorable graph contains a pentagon");
            }
            checked += 1;
        }
    }
    let elapsed = check_time(6, start, Duration::from_secs(180));
    println!(
        "acceptance criterion 6: PASS — colorability table and odd-girth invariant over {checked} classes ({elapsed:?})"
    );
}

/// Maps C_m onto C_n (m >= n, both odd): the first n vertices walk the
/// target cycle once; the remaining even stretch alternates across the
/// edge {n-2, n-1}.
fn fold_map(m: usize, n: usize) -> Vec<usize> {
    let mut map: Vec<usize> = (0..n).collect();
    for i in 0..(m - n) {
        map.push(if i % 2 == 0 { n - 2 } else { n - 1 });
    }
    map
}

/// Criterion 7: the (5, C5, {K4}, K3) scan is internally consistent and
/// its CLI report is byte-identical across two runs with the same config.
#[test]
fn criterion_7_stability_scan_consistency() {
    let start = Instant::now();
    let pentagon = pattern(Graph::cycle(5).unwrap());
    let k4 = pattern(Graph::complete(4).unwrap());
    let k3 = Graph::complete(3).unwrap();
    let scan = degree_stability_scan(5, &pentagon, &[k4], &k3).unwrap();
    assert_eq!(scan.extremal_value, 40);
    // Everything above the critical ratio is colorable; with no critical
    // ratio, everything is.
    match scan.critical_ratio {
        Some(critical) => {
            for row in &scan.rows {
                if row.ratio > critical {
                    assert!(row.colorable, "row above critical ratio is not colorable: {}", row.graph6);
                }
            }
        }
        None => assert!(scan.rows.iter().all(|r| r.colorable)),
    }
    // Every extremal witness is colorable or explicitly surfaces as a
    // non-colorable row (a finite-n counterexample).
    for row in scan.rows.iter().filter(|r| r.embeddings == scan.extremal_value) {
        assert!(
            row.colorable || scan.critical_ratio == Some(row.ratio),
            "extremal witness neither colorable nor reported: {}",
            row.graph6
        );
    }

    // Byte-identical CLI reports under an identical configuration.
    let bin = env!("CARGO_BIN_EXE_turan-cycles");
    let run = || {
        std::process::Command::new(bin)
            .args([
                "scan", "--n", "5", "--pattern", "C5", "--forbid", "K4", "--target", "K3",
                "--format", "json", "--workers", "2",
            ])
            .output()
            .expect("scan run")
    };
    let first = run();
    let second = run();
    assert!(first.status.success() && second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "scan reports differ between identical runs");
    let elapsed = check_time(7, start, Duration::from_secs(120));
    println!("acceptance criterion 7: PASS — scan consistent, reports byte-identical ({elapsed:?})");
}

/// Criterion 8: edit distance is zero exactly on colorable inputs over all
/// classes on <= 5 vertices against K3 and C5, and the K4 -> K3 distance
/// is 1. < 2 minutes.
#[test]
fn criterion_8_edit_distance_soundness() {
    let start = Instant::now();
    let targets = [Graph::complete(3).unwrap(), Graph::cycle(5).unwrap()];
    let mut checked = 0usize;
    for n in 0..=5usize {
        for g in all_graphs(n).unwrap() {
            for target in &targets {
                let d = edit_distance_to_colorable(&g, target, DEFAULT_EDIT_BUDGET).unwrap();
                let colorable = is_colorable(&g, target).is_some();
                assert_eq!(d.distance == 0, colorable, "distance/colorability mismatch on {g:?}");
                assert_eq!(d.distance, naive_edit_distance(&g, target), "distance oracle mismatch on {g:?}");
                checked += 1;
            }
        }
    }
    let k4k3 = edit_distance_to_colorable(
        &Graph::complete(4).unwrap(),
        &Graph::complete(3).unwrap(),
        DEFAULT_EDIT_BUDGET,
    )
    .unwrap();
    assert_eq!(k4k3.distance, 1);
    let elapsed = check_time(8, start, Duration::from_secs(120));
    println!(
        "acceptance criterion 8: PASS — edit distance sound on {checked} (graph, target) pairs ({elapsed:?})"
    );
}
