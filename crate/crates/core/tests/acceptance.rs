//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line and
//! then asserts. Run with `cargo test -p korient --test acceptance -- --nocapture`
//! to see the report.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

use common::{complete, cycle, doubled_triangle, multiplied, small_family, wheel};
use korient::oracle::{
    all_orientations, enumerate_via_extension_oracle, oracle_edge_connectivity, oracle_is_k_connected,
    oracle_k_connected, oracle_lambda, oracle_sequences,
};
use korient::{
    class_size_lower_bound, class_size_lower_bound_check, enumerate_alpha, enumerate_alpha_metered,
    enumerate_k_connected, enumerate_k_connected_metered, enumerate_outdegree_sequences,
    find_k_connected_orientation, is_flippable_pair, lambda_at_least, local_arc_connectivity, reverse_path,
    DegreeSequence, DelayMeter, DirectedPath, Multigraph, Orientation,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Time limit for the α-orientation oracle comparison.
const ALPHA_TIME_LIMIT: Duration = Duration::from_secs(120);
/// Sample sizes for the randomized criteria.
const MENGER_SAMPLES: usize = 10_000;
const FLIP_SAMPLES: usize = 1_000;
/// Amortized-cost constant c = C_NUM / C_DEN for k = 2, calibrated once on
/// the smallest family member with a 2-connected orientation (n = 2, four
/// parallel edges): 119 operations for 6 solutions at m^2 = 16.
const C_NUM: u64 = 119;
const C_DEN: u64 = 96;
/// Frozen counts for the stand-in experiment on the doubled 5-rim wheel
/// (n = 6, m = 20), derived once by the brute-force oracle.
const WHEEL_STRONG: u64 = 878_528;
const WHEEL_TWO_CONNECTED: u64 = 326_688;

fn report(id: &str, what: &str, ok: bool, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {id}: {what} ({detail})");
    assert!(ok, "{id} failed: {what} ({detail})");
}

/// Oracle α-classes: every orientation grouped by its outdegree sequence.
fn classes(g: &Multigraph) -> BTreeMap<DegreeSequence, BTreeSet<String>> {
    let mut out: BTreeMap<DegreeSequence, BTreeSet<String>> = BTreeMap::new();
    for d in all_orientations(g).unwrap() {
        out.entry(d.outdegrees()).or_default().insert(d.to_string());
    }
    out
}

fn random_orientation<'g>(g: &'g Multigraph, rng: &mut ChaCha8Rng) -> Orientation<'g> {
    let dirs = (0..g.edge_count()).map(|_| rng.gen()).collect();
    Orientation::from_directions(g, dirs).unwrap()
}

#[test]
fn c1_alpha_orientations_match_oracle() {
    let start = Instant::now();
    let mut classes_checked = 0usize;
    let mut failures = Vec::new();
    for (gi, g) in small_family().iter().enumerate() {
        for (alpha, expected) in classes(g) {
            let mut emitted = Vec::new();
            let count = enumerate_alpha(g, &alpha, |d| {
                if d.outdegrees() != alpha {
                    failures.push(format!("graph {gi}: wrong outdegrees {d}"));
                }
                emitted.push(d.to_string());
            })
            .unwrap();
            let set: BTreeSet<String> = emitted.iter().cloned().collect();
            if set.len() != emitted.len() || set != expected || count as usize != emitted.len() {
                failures.push(format!("graph {gi} alpha {alpha}"));
            }
            classes_checked += 1;
        }
        // An unattainable sequence: everything out of vertex 0.
        let mut lopsided = vec![0; g.vertex_count()];
        lopsided[0] = g.edge_count();
        if g.degree(0) < g.edge_count()
            && enumerate_alpha(g, &DegreeSequence::new(lopsided), |_| {}).unwrap() != 0
        {
            failures.push(format!("graph {gi}: infeasible alpha produced output"));
        }
    }
    let elapsed = start.elapsed();
    report(
        "criterion 1",
        "alpha-orientation enumeration equals the brute-force class, no duplicates",
        failures.is_empty() && elapsed < ALPHA_TIME_LIMIT,
        format!(
            "{} graphs, {classes_checked} classes, {} mismatches, {:.1?}",
            small_family().len(),
            failures.len(),
            elapsed
        ),
    );
}

#[test]
fn c2_connected_orientations_and_sequences_match_oracle() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (gi, g) in small_family().iter().enumerate() {
        for k in [1, 2] {
            let expected = oracle_k_connected(g, k).unwrap();
            let mut emitted = Vec::new();
            let mut class_order: Vec<DegreeSequence> = Vec::new();
            let mut closed = HashSet::new();
            let mut contiguous = true;
            enumerate_k_connected(g, k, |d| {
                emitted.push(d.to_string());
                let seq = d.outdegrees();
                if class_order.last() != Some(&seq) {
                    if let Some(prev) = class_order.last() {
                        closed.insert(prev.clone());
                    }
                    if closed.contains(&seq) {
                        contiguous = false;
                    }
                    class_order.push(seq);
                }
            })
            .unwrap();
            let set: BTreeSet<String> = emitted.iter().cloned().collect();
            if set.len() != emitted.len() || set != expected || !contiguous {
                failures.push(format!("graph {gi} k={k}: orientations"));
            }

            let expected_seqs = oracle_sequences(g, k).unwrap();
            let mut seqs = Vec::new();
            if let Some(seed) = find_k_connected_orientation(g, k).unwrap() {
                enumerate_outdegree_sequences(g, k, &seed, |s, _| seqs.push(s.clone())).unwrap();
            }
            let seq_set: BTreeSet<DegreeSequence> = seqs.iter().cloned().collect();
            if seq_set.len() != seqs.len() || seq_set != expected_seqs || seqs != class_order {
                failures.push(format!("graph {gi} k={k}: sequences"));
            }
            checked += 1;
        }
    }
    let k4 = enumerate_k_connected(&complete(4), 1, |_| {}).unwrap();
    let c4 = enumerate_k_connected(&cycle(4), 1, |_| {}).unwrap();
    report(
        "criterion 2",
        "k-connected orientations and outdegree sequences equal the oracle sets (k = 1, 2)",
        failures.is_empty() && k4 == 24 && c4 == 2,
        format!(
            "{checked} (graph, k) runs, {} mismatches, K4 strong = {k4}, C4 strong = {c4}",
            failures.len()
        ),
    );
}

#[test]
fn c3_menger_agreement() {
    let family = small_family();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut mismatches = 0;
    for _ in 0..MENGER_SAMPLES {
        let g = family.choose(&mut rng).unwrap();
        let d = random_orientation(g, &mut rng);
        let n = g.vertex_count();
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let by_reversal = local_arc_connectivity(&d, u, v).unwrap();
        let by_cuts = oracle_lambda(&d, u, v).unwrap();
        let capped =
            lambda_at_least(&d, u, v, by_cuts).unwrap() && !lambda_at_least(&d, u, v, by_cuts + 1).unwrap();
        if by_reversal != by_cuts || !capped {
            mismatches += 1;
        }
    }
    report(
        "criterion 3",
        "lambda by successive path reversal equals the subset min-cut",
        mismatches == 0,
        format!("{MENGER_SAMPLES} triples, {mismatches} mismatches"),
    );
}

/// A random vertex-simple directed path from `u` to `v` (randomized DFS),
/// if one exists.
fn random_path(d: &Orientation<'_>, u: usize, v: usize, rng: &mut ChaCha8Rng) -> Option<DirectedPath> {
    fn dfs(
        d: &Orientation<'_>,
        x: usize,
        v: usize,
        seen: &mut [bool],
        stack: &mut Vec<usize>,
        rng: &mut ChaCha8Rng,
    ) -> bool {
        if x == v {
            return true;
        }
        seen[x] = true;
        let mut out: Vec<usize> = d
            .graph()
            .incident(x)
            .iter()
            .copied()
            .filter(|&e| d.tail(e) == x)
            .collect();
        out.shuffle(rng);
        for e in out {
            let y = d.head(e);
            if !seen[y] {
                stack.push(e);
                if dfs(d, y, v, seen, stack, rng) {
                    return true;
                }
                stack.pop();
            }
        }
        false
    }
    let mut seen = vec![false; d.graph().vertex_count()];
    let mut stack = Vec::new();
    dfs(d, u, v, &mut seen, &mut stack, rng).then(|| DirectedPath::from_edges(d, &stack).unwrap())
}

#[test]
fn c4_path_flipping_law() {
    let family = small_family();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut violations = 0;
    let mut sampled = 0;
    while sampled < FLIP_SAMPLES {
        let g = family.choose(&mut rng).unwrap();
        let d = random_orientation(g, &mut rng);
        let n = g.vertex_count();
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let Some(path) = random_path(&d, u, v, &mut rng) else {
            continue;
        };
        sampled += 1;
        let flipped = reverse_path(&d, &path).unwrap();
        let before = oracle_lambda(&d, u, v).unwrap();
        if oracle_lambda(&flipped, u, v).unwrap() + 1 != before {
            violations += 1;
        }
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let new = oracle_lambda(&flipped, a, b).unwrap();
                    let old = oracle_lambda(&d, a, b).unwrap();
                    if new < (before - 1).min(old) {
                        violations += 1;
                    }
                }
            }
        }
        // Cut outdegrees move by +1 on u-out/v-in cuts, -1 on u-in/v-out.
        for set in 1u32..(1 << n) - 1 {
            let cut = |o: &Orientation<'_>| {
                (0..g.edge_count())
                    .filter(|&e| set >> o.tail(e) & 1 == 1 && set >> o.head(e) & 1 == 0)
                    .count() as i64
            };
            let (iu, iv) = (set >> u & 1 == 1, set >> v & 1 == 1);
            let expected = match (iu, iv) {
                (false, true) => 1,
                (true, false) => -1,
                _ => 0,
            };
            if cut(&flipped) - cut(&d) != expected {
                violations += 1;
            }
        }
    }
    report(
        "criterion 4",
        "reversing a u->v path lowers lambda(u,v) by one and respects the min bound",
        violations == 0,
        format!("{sampled} reversals, {violations} violations"),
    );
}

#[test]
fn c5_degree_difference_witnesses() {
    let mut violations = 0;
    let mut pairs = 0u64;
    for g in small_family() {
        let n = g.vertex_count();
        for k in [1, 2] {
            let orientations: Vec<Orientation<'_>> = all_orientations(g)
                .unwrap()
                .filter(|d| oracle_is_k_connected(d, k).unwrap())
                .collect();
            let sequences: BTreeSet<DegreeSequence> = orientations.iter().map(|d| d.outdegrees()).collect();
            for d in &orientations {
                let flippable: Vec<Vec<bool>> = (0..n)
                    .map(|a| {
                        (0..n)
                            .map(|b| a != b && is_flippable_pair(d, a, b, k).unwrap())
                            .collect()
                    })
                    .collect();
                let here = d.outdegrees();
                // Pairs (D, D') only matter through the outdegrees of D'.
                for other in &sequences {
                    pairs += 1;
                    for v in 0..n {
                        if here[v] < other[v] && !(0..n).any(|u| here[u] > other[u] && flippable[u][v]) {
                            violations += 1;
                        }
                        if here[v] > other[v] && !(0..n).any(|u| here[u] < other[u] && flippable[v][u]) {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    report(
        "criterion 5",
        "every outdegree gap between k-connected orientations has a flippable witness",
        violations == 0,
        format!("{pairs} (orientation, sequence) pairs, {violations} violations"),
    );
}

#[test]
fn c6_class_size_lower_bound() {
    let mut violations = 0;
    let mut classes_checked = 0;
    for g in small_family() {
        let n = g.vertex_count();
        for k in [1, 2] {
            let Some(seed) = find_k_connected_orientation(g, k).unwrap() else {
                continue;
            };
            let mut seqs = Vec::new();
            enumerate_outdegree_sequences(g, k, &seed, |s, _| seqs.push(s.clone())).unwrap();
            for s in seqs {
                classes_checked += 1;
                let size = enumerate_alpha(g, &s, |_| {}).unwrap() as usize;
                if size < class_size_lower_bound(n, k) || !class_size_lower_bound_check(g, &s, k).unwrap() {
                    violations += 1;
                }
            }
        }
    }
    report(
        "criterion 6",
        "every k-connected alpha-class has at least (k-1)n+2 members",
        violations == 0 && classes_checked > 0,
        format!("{classes_checked} classes, {violations} violations"),
    );
}

#[test]
fn c7_nash_williams() {
    let mut violations = 0;
    let mut runs = 0;
    for g in small_family() {
        let lambda = g.edge_connectivity().unwrap();
        if lambda != oracle_edge_connectivity(g).unwrap() {
            violations += 1;
        }
        for k in [1, 2, 3] {
            runs += 1;
            let found = find_k_connected_orientation(g, k).unwrap();
            let exists = !oracle_k_connected(g, k).unwrap().is_empty();
            let ok = match &found {
                Some(d) => lambda >= 2 * k && exists && oracle_is_k_connected(d, k).unwrap(),
                None => lambda < 2 * k && !exists,
            };
            if !ok {
                violations += 1;
            }
        }
    }
    report(
        "criterion 7",
        "a k-connected orientation is found iff edge connectivity >= 2k (k = 1, 2, 3)",
        violations == 0,
        format!("{runs} (graph, k) runs, {violations} violations"),
    );
}

fn delay_graphs() -> Vec<Multigraph> {
    let mut graphs: Vec<Multigraph> = small_family().to_vec();
    graphs.extend([
        cycle(4),
        complete(4),
        complete(5),
        doubled_triangle(),
        multiplied(&cycle(5), 2),
        multiplied(&wheel(4), 2),
        multiplied(&complete(4), 2),
    ]);
    graphs
}

#[test]
fn c8_delay_bounds() {
    let graphs = delay_graphs();
    let mut alpha_violations = 0;
    let mut worst_alpha = 0.0f64;
    for g in &graphs {
        let m = g.edge_count() as u64;
        let d = find_k_connected_orientation(g, 1)
            .unwrap()
            .unwrap_or_else(|| Orientation::all_forward(g));
        let mut alphas = vec![d.outdegrees()];
        let mut lopsided = vec![0; g.vertex_count()];
        lopsided[0] = g.edge_count();
        alphas.push(DegreeSequence::new(lopsided));
        for alpha in alphas {
            let mut meter = DelayMeter::with_log();
            enumerate_alpha_metered(g, &alpha, &mut meter, |_| {}).unwrap();
            let max_bfs = meter.max_gap().path_searches;
            if max_bfs > 2 * m {
                alpha_violations += 1;
            }
            worst_alpha = worst_alpha.max(max_bfs as f64 / (2 * m).max(1) as f64);
        }
    }

    let mut amortized_violations = 0;
    let mut worst_c = [0.0f64; 2];
    let mut runs = 0;
    for k in [1, 2] {
        for g in &graphs {
            let mut meter = DelayMeter::new();
            let count = enumerate_k_connected_metered(g, k, &mut meter, |_| {}).unwrap();
            if count == 0 {
                continue;
            }
            let m2 = (g.edge_count() * g.edge_count()) as u64;
            let total = meter.total().ops();
            worst_c[k - 1] = worst_c[k - 1].max(total as f64 / (count * m2) as f64);
            // Only k = 2 carries the amortized guarantee; k = 1 is reported.
            if k == 2 {
                runs += 1;
                if total * C_DEN > C_NUM * count * m2 {
                    amortized_violations += 1;
                }
            }
        }
    }
    println!(
        "amortized ops/(sol*m^2): k=1 worst {:.4} (report only), k=2 worst {:.4}",
        worst_c[0], worst_c[1]
    );
    report(
        "criterion 8",
        "alpha path searches per gap <= 2m; k=2 amortized ops <= c*m^2 with fixed c",
        alpha_violations == 0 && amortized_violations == 0,
        format!(
            "{} graphs, worst searches/2m = {worst_alpha:.3}, {runs} k=2 runs, worst ops/(sol*m^2) = {:.4} vs c = {C_NUM}/{C_DEN}",
            graphs.len(),
            worst_c[1]
        ),
    );
}

#[test]
fn c9_extension_oracle_backtracking_agrees() {
    let mut mismatches = 0;
    let mut runs = 0;
    for g in small_family() {
        for k in [1, 2] {
            runs += 1;
            let mut a = BTreeSet::new();
            let mut b = BTreeSet::new();
            enumerate_via_extension_oracle(g, k, |d| {
                a.insert(d.to_string());
            })
            .unwrap();
            enumerate_k_connected(g, k, |d| {
                b.insert(d.to_string());
            })
            .unwrap();
            if a != b {
                mismatches += 1;
            }
        }
    }
    report(
        "criterion 9",
        "extension-oracle backtracking emits the same set as path/cycle reversal",
        mismatches == 0,
        format!("{runs} (graph, k) runs, {mismatches} mismatches"),
    );
}

#[test]
fn stand_in_wheel_counts() {
    let g = multiplied(&wheel(5), 2);
    let strong = enumerate_k_connected(&g, 1, |_| {}).unwrap();
    let two = enumerate_k_connected(&g, 2, |_| {}).unwrap();
    let oracle_strong = oracle_k_connected(&g, 1).unwrap().len() as u64;
    let oracle_two = oracle_k_connected(&g, 2).unwrap().len() as u64;
    println!("wheel: strong {strong}/{oracle_strong}, two {two}/{oracle_two}");
    report(
        "wheel check",
        "doubled wheel counts match the frozen oracle values",
        strong == oracle_strong && two == oracle_two && strong == WHEEL_STRONG && two == WHEEL_TWO_CONNECTED,
        format!("strong = {strong}, 2-arc-connected = {two}"),
    );
}
