//! Structural theorem suites beyond the acceptance gate: contraction
//! reachability, coloring-aware operation round trips, Black-White coloring
//! equivalences and petal facts, and the fence structure results.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use triangulata::bwcolor::{
    all_cycles, bw_operation, classify_closed, inner_semi, is_proper, petal_diagnostics,
    side_2colorable, split_on_cycle, ClosedKind, SemiMpg,
};
use triangulata::coloring::{
    bicolored_subgraph, classify_coloring, enumerate_partitions, enumerate_partitions_upto4,
    fence_analyze, union_report, union_two_bicolored, ColoringKind, FenceParameter,
};
use triangulata::embedding::{CanonicalCode, PlaneTriangulation};
use triangulata::fixtures;
use triangulata::generator::{generate_22fwf, CatalogSet};
use triangulata::wheelops::{
    compound_contract, contract3, contract4, contract4_pairs, contract4_recorded, contract5,
    contract5_pairs, contract_cascade_any, contract_wheel_under_coloring, extend3_recorded,
    extend4_recorded, extend4_under_coloring, extend5_recorded, extend5_under_coloring, replay,
    Funnel,
};

static CATALOGS: OnceLock<BTreeMap<usize, Vec<PlaneTriangulation>>> = OnceLock::new();

fn catalogs(max: usize) -> &'static BTreeMap<usize, Vec<PlaneTriangulation>> {
    CATALOGS.get_or_init(|| {
        let mut set = CatalogSet::new();
        let mut out = BTreeMap::new();
        for n in 6..=11 {
            let cat = set.get(n).expect("catalog");
            out.insert(n, cat.entries.iter().map(|e| e.graph.clone()).collect());
        }
        out
    });
    assert!(max <= 11);
    CATALOGS.get().unwrap()
}

#[test]
fn contraction_reaches_k3() {
    // Every catalog graph contracts to K3 through a sequence of wheel
    // contractions; identifications may pass through transient parallel
    // edges that resolve by lens collapse and 2-wheel deletion.
    fn reaches(g: &PlaneTriangulation, memo: &mut BTreeMap<CanonicalCode, bool>) -> bool {
        if g.n() == 3 {
            return true;
        }
        let code = g.canonical_code();
        if let Some(&r) = memo.get(&code) {
            return r;
        }
        memo.insert(code.clone(), false);
        let mut ok = false;
        'search: for v in 0..g.n() {
            match g.degree(v) {
                3 => {
                    if contract3(g, v).map(|h| reaches(&h, memo)).unwrap_or(false) {
                        ok = true;
                        break 'search;
                    }
                }
                4 => {
                    for pair in contract4_pairs(g, v).unwrap() {
                        if let Ok(h) = contract_cascade_any(g, v, pair) {
                            if reaches(&h, memo) {
                                ok = true;
                                break 'search;
                            }
                        }
                    }
                }
                5 => {
                    for pair in contract5_pairs(g, v).unwrap() {
                        if let Ok(h) = contract_cascade_any(g, v, pair) {
                            if reaches(&h, memo) {
                                ok = true;
                                break 'search;
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        memo.insert(code, ok);
        ok
    }
    let mut memo = BTreeMap::new();
    assert!(reaches(&fixtures::k4(), &mut memo));
    for n in 6..=11usize {
        for g in &catalogs(11)[&n] {
            assert!(reaches(g, &mut memo), "no contraction path to K3 at order {n}");
        }
    }
    // Plain simple-graph contraction cannot leave the octahedron: both
    // pairs of every vertex clash, so the transient multigraph step above
    // is essential.
    let oct = fixtures::octahedron();
    for v in 0..oct.n() {
        for pair in contract4_pairs(&oct, v).unwrap() {
            assert!(contract4(&oct, v, pair).is_err());
        }
    }
}

#[test]
fn contractible_subgraph_degrees() {
    // Removed vertices of a compound contraction have degree 4 or 5, with
    // at most two fives.
    let mut checked = 0;
    for n in 9..=11usize {
        for g in &catalogs(11)[&n] {
            for v in 0..g.n() {
                let pairs = match g.degree(v) {
                    4 => contract4_pairs(g, v).unwrap().to_vec(),
                    5 => contract5_pairs(g, v).unwrap(),
                    _ => continue,
                };
                for pair in pairs {
                    if let Ok((h, sub)) = compound_contract(g, v, pair) {
                        assert!(h.min_degree() >= 4);
                        assert!(sub.removed.iter().all(|&(_, d)| d == 4 || d == 5));
                        assert!(sub.removed.iter().filter(|&&(_, d)| d == 5).count() <= 2);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn contract4_size_bookkeeping_and_double_errors() {
    // Size drops by two; the octahedron clashes on both pairs of each
    // vertex, forcing the compound path.
    let g = fixtures::octahedron();
    for v in 0..g.n() {
        for pair in contract4_pairs(&g, v).unwrap() {
            assert!(contract4(&g, v, pair).is_err());
        }
    }
    let mut both_error_witnesses = 0;
    for n in 6..=10usize {
        for g in &catalogs(11)[&n] {
            for v in 0..g.n() {
                if g.degree(v) != 4 {
                    continue;
                }
                let pairs = contract4_pairs(g, v).unwrap();
                let results: Vec<_> = pairs.iter().map(|&p| contract4(g, v, p)).collect();
                for r in &results {
                    if let Ok(h) = r {
                        assert_eq!(h.n(), g.n() - 2);
                    }
                }
                if results.iter().all(|r| r.is_err()) {
                    both_error_witnesses += 1;
                }
            }
        }
    }
    assert!(both_error_witnesses >= 1);
}

#[test]
fn records_replay() {
    let g = fixtures::icosahedron();
    let v = 0;
    let r = g.rotation(v).to_vec();
    let (h1, rec1) = extend4_recorded(&g, r[0], v, r[2]).unwrap();
    let (h2, rec2) = extend5_recorded(
        &g,
        &Funnel {
            top: r[0],
            middle: v,
            bottoms: (r[2], r[3]),
        },
    )
    .unwrap();
    let (h3, rec3) = extend3_recorded(&g, g.faces()[0]).unwrap();
    for (h, rec) in [(&h1, &rec1), (&h2, &rec2), (&h3, &rec3)] {
        let again = replay(&g, rec).unwrap();
        assert_eq!(again.canonical_code(), h.canonical_code());
        assert_eq!(again.canonical_code().hex(), rec.result_code);
        // The record survives a JSON round trip.
        let line = rec.to_json_line();
        let back: triangulata::wheelops::WheelOpRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(replay(&g, &back).unwrap().canonical_code(), h.canonical_code());
    }
    // Contraction records replay as well.
    let c = h1.n() - 1;
    let (back, rec) = contract4_recorded(&h1, c, (v, h1.n() - 2)).unwrap();
    assert_eq!(back.canonical_code(), g.canonical_code());
    assert_eq!(
        replay(&h1, &rec).unwrap().canonical_code(),
        g.canonical_code()
    );
    let c5 = h2.n() - 1;
    let back5 = triangulata::wheelops::contract5(&h2, c5, (v, h2.n() - 2)).unwrap();
    assert_eq!(back5.canonical_code(), g.canonical_code());
}

#[test]
fn colored_contract_restores() {
    // Contracting a wheel under a coloring and replaying the inverse
    // extension restores the graph up to isomorphism with a proper coloring
    // of the same class sizes.
    let mut restored = 0;
    for n in 7..=9usize {
        for g in &catalogs(11)[&n] {
            let parts = enumerate_partitions(g);
            let f = &parts[0];
            for v in 0..g.n() {
                let k = g.degree(v);
                if k != 4 && k != 5 {
                    continue;
                }
                let Ok((h, f2, rec)) = contract_wheel_under_coloring(g, f, v) else {
                    continue;
                };
                assert_eq!(rec.identified.len(), 1);
                let map: BTreeMap<usize, usize> = rec.id_map.iter().copied().collect();
                let (p, q) = rec.identified[0];
                let merged = map[&p];
                // The inverse object: for a 4-wheel the split path through
                // the merged vertex; for a 5-wheel the funnel rooted at it.
                let wheel = &rec.wheel;
                let qi = wheel.iter().position(|&w| w == q).unwrap_or_else(|| {
                    wheel.iter().position(|&w| w == p).unwrap()
                });
                let restoredpair = if k == 4 {
                    let x = map[&wheel[(qi + 1) % 4]];
                    let y = map[&wheel[(qi + 3) % 4]];
                    extend4_under_coloring(&h, &f2, x, merged, y)
                        .or_else(|_| extend4_under_coloring(&h, &f2, y, merged, x))
                } else {
                    let t = map[&wheel[(qi + 1) % 5]];
                    let (b1, b2) = (map[&wheel[(qi + 2) % 5]], map[&wheel[(qi + 3) % 5]]);
                    extend5_under_coloring(
                        &h,
                        &f2,
                        &Funnel {
                            top: t,
                            middle: merged,
                            bottoms: (b1, b2),
                        },
                    )
                    .or_else(|_| {
                        let t = map[&wheel[(qi + 4) % 5]];
                        let (b1, b2) = (map[&wheel[(qi + 3) % 5]], map[&wheel[(qi + 2) % 5]]);
                        extend5_under_coloring(
                            &h,
                            &f2,
                            &Funnel {
                                top: t,
                                middle: merged,
                                bottoms: (b1, b2),
                            },
                        )
                    })
                };
                let Ok((g2, f3)) = restoredpair else { continue };
                if g2.canonical_code() == g.canonical_code() {
                    // The center takes the deleted vertex's recorded color.
                    let mut colors = f3.colors().to_vec();
                    let center = g2.n() - 1;
                    colors[center] = rec.vertex_color;
                    let f3 = triangulata::coloring::ColorPartition::from_colors(&g2, &colors)
                        .expect("recorded center color stays proper");
                    let mut a: Vec<usize> =
                        f.classes().iter().map(|c| c.len()).filter(|&l| l > 0).collect();
                    let mut b: Vec<usize> =
                        f3.classes().iter().map(|c| c.len()).filter(|&l| l > 0).collect();
                    a.sort_unstable();
                    b.sort_unstable();
                    assert_eq!(a, b);
                    restored += 1;
                }
            }
        }
    }
    assert!(restored >= 10, "restored only {restored} contractions");
}

#[test]
fn colored_contract_high_degree() {
    // Degree >= 6 wheels contract under a coloring to a valid triangulation
    // with a proper induced partition, deterministically.
    let mut checked = 0;
    for n in 8..=10usize {
        for g in &catalogs(11)[&n] {
            let parts = enumerate_partitions(g);
            if parts.is_empty() {
                continue;
            }
            let f = &parts[0];
            for v in 0..g.n() {
                if g.degree(v) < 6 {
                    continue;
                }
                match contract_wheel_under_coloring(g, f, v) {
                    Err(_) => {}
                    Ok((h, f2, rec)) => {
                        assert!(h.diagnose().is_valid());
                        assert_eq!(h.n(), g.n() - 1 - rec.identified.len());
                        assert!(f2.nonempty_classes() <= 4);
                        // Determinism of the choice sequence.
                        let (h2, _, rec2) = contract_wheel_under_coloring(g, f, v).unwrap();
                        assert_eq!(h2, h);
                        assert_eq!(rec2.identified, rec.identified);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked >= 10, "checked only {checked} high-degree wheels");
}

#[test]
fn neighbor_cycles_on_indivisible_graphs() {
    for n in 6..=10usize {
        for g in &catalogs(11)[&n] {
            if g.is_divisible() {
                continue;
            }
            for v in 0..g.n() {
                let c = g.neighbor_cycle(v);
                assert_eq!(
                    c.as_basic().map(|c| c.len()),
                    Some(g.degree(v)),
                    "order {n} vertex {v}"
                );
            }
        }
    }
    // The divisible order-10 graph has a separating triangle.
    let div: Vec<&PlaneTriangulation> = catalogs(11)[&10]
        .iter()
        .filter(|g| g.degree_sequence_string() == "4444445577")
        .collect();
    assert_eq!(div.len(), 2);
    assert_eq!(div.iter().filter(|g| g.is_divisible()).count(), 1);
}

// ---- coloring structure -----------------------------------------------------

#[test]
fn union_structure_suite() {
    // Theorem 5.6 contrapositive and the all-common-on-a-cycle properties.
    let mut fence_cases = 0;
    let mut order3_cases = 0;
    for n in 6..=10usize {
        for g in &catalogs(11)[&n] {
            for f in enumerate_partitions(g) {
                let is_tree = classify_coloring(g, &f).kind == ColoringKind::Tree;
                for common in 1..=4usize {
                    let rest: Vec<usize> = (1..=4).filter(|&c| c != common).collect();
                    for a in 0..3 {
                        for b in a + 1..3 {
                            let (o1, o2) = (rest[a], rest[b]);
                            let u = union_two_bicolored(g, &f, common, (o1, o2));
                            let rep = fence_analyze(&u);
                            // Minimum degree at least four: even suspending
                            // count and exactly two common-color vertices
                            // whenever a factor has order three.
                            let f12 = bicolored_subgraph(g, &f, common, o1);
                            if f12.order() == 3 {
                                assert_eq!(rep.suspending_vertices.len() % 2, 0);
                                let ones = f12
                                    .vertices
                                    .iter()
                                    .filter(|&&v| f.color_of(v) == common)
                                    .count();
                                assert_eq!(ones, 2);
                                order3_cases += 1;
                            }
                            // All common-color vertices on one cycle of a
                            // tree-coloring union: the chained 4-gon shape.
                            let ones: Vec<usize> = u
                                .vertices
                                .iter()
                                .copied()
                                .filter(|&v| f.color_of(v) == common)
                                .collect();
                            let core = u.two_core();
                            if is_tree
                                && !ones.is_empty()
                                && ones.iter().all(|v| core.contains(v))
                                && u.has_cycle()
                            {
                                let cycles = u.simple_cycles();
                                let on_one_cycle = cycles
                                    .iter()
                                    .any(|c| ones.iter().all(|v| c.contains(v)));
                                // Shape gate: each non-suspending edge lies
                                // on one or two 4-cycles (the chained-4-gon
                                // form the properties describe).
                                let chained = u.edges().iter().all(|&(x, y)| {
                                    if u.degree(x) <= 1 || u.degree(y) <= 1 {
                                        return true;
                                    }
                                    let count = cycles
                                        .iter()
                                        .filter(|c| {
                                            c.len() == 4
                                                && c.contains(&x)
                                                && c.contains(&y)
                                        })
                                        .count();
                                    count == 1 || count == 2
                                });
                                if on_one_cycle && chained {
                                    let a_count = ones.len();
                                    let b_count = u
                                        .vertices
                                        .iter()
                                        .filter(|&&v| f.color_of(v) == o1)
                                        .count();
                                    let c_count = u
                                        .vertices
                                        .iter()
                                        .filter(|&&v| f.color_of(v) == o2)
                                        .count();
                                    for i in 1..a_count {
                                        let expect = a_count - i;
                                        let actual = cycles
                                            .iter()
                                            .filter(|c| c.len() == 2 * i + 2)
                                            .count();
                                        assert_eq!(actual, expect, "cycles of length {}", 2 * i + 2);
                                    }
                                    let suspending = u
                                        .vertices
                                        .iter()
                                        .filter(|&&v| u.degree(v) <= 1)
                                        .count();
                                    assert_eq!(suspending, b_count + c_count - a_count);
                                    fence_cases += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(fence_cases >= 5, "found only {fence_cases} all-on-a-cycle unions");
    assert!(order3_cases >= 5);
}

#[test]
fn mirror_graph_fences() {
    // The order-9 pure-tree graph: bicolored subgraphs are paths of length
    // 3 or 4; the union of two length-4 paths is a 0-fence with two
    // 6-cycles and one 4-cycle.
    let nine: Vec<&PlaneTriangulation> = catalogs(11)[&9]
        .iter()
        .filter(|g| g.degree_sequence_string() == "444555555")
        .collect();
    assert_eq!(nine.len(), 1);
    let g = nine[0];
    let mut zero_fence_seen = false;
    for f in enumerate_partitions(g) {
        for i in 1..=4usize {
            for j in i + 1..=4 {
                let sub = bicolored_subgraph(g, &f, i, j);
                assert!(!sub.has_cycle());
                assert!(sub.is_connected());
                assert!(sub.edge_count() == 3 || sub.edge_count() == 4);
            }
        }
        for common in 1..=4usize {
            let rest: Vec<usize> = (1..=4).filter(|&c| c != common).collect();
            for a in 0..3 {
                for b in a + 1..3 {
                    let f1 = bicolored_subgraph(g, &f, common, rest[a]);
                    let f2 = bicolored_subgraph(g, &f, common, rest[b]);
                    if f1.edge_count() == 4 && f2.edge_count() == 4 {
                        let u = union_two_bicolored(g, &f, common, (rest[a], rest[b]));
                        let rep = fence_analyze(&u);
                        assert!(rep.fence);
                        assert_eq!(rep.t, FenceParameter::Finite(0));
                        let cycles = u.simple_cycles();
                        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 2);
                        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 1);
                        zero_fence_seen = true;
                    }
                }
            }
        }
    }
    assert!(zero_fence_seen);
    // Icosahedron unions are 1-fences with two suspending vertices.
    let ico = fixtures::icosahedron();
    let f = &enumerate_partitions(&ico)[0];
    let (_, rep) = union_report(&ico, f, 1, (2, 3));
    assert!(rep.fence.fence);
    assert_eq!(rep.fence.t, FenceParameter::Finite(1));
    assert_eq!(rep.fence.suspending_vertices.len(), 2);
}

#[test]
fn family_central_vertex_facts() {
    // Each degree-3 vertex of a family member has exactly one degree-4
    // neighbor (orders >= 6), and nonadjacent-type members have one and only
    // one (n-1)-degree vertex whose color class is a singleton.
    for n in 6..=9usize {
        for e in generate_22fwf(n) {
            let g = &e.graph;
            for v in 0..g.n() {
                if g.degree(v) != 3 {
                    continue;
                }
                let fours = g.neighbors(v).iter().filter(|&&w| g.degree(w) == 4).count();
                assert_eq!(fours, 1, "order {n} vertex {v}");
            }
            if !e.adjacent_type {
                let centers: Vec<usize> =
                    (0..g.n()).filter(|&v| g.degree(v) == g.n() - 1).collect();
                assert_eq!(centers.len(), 1);
                let parts = enumerate_partitions(g);
                assert_eq!(parts.len(), 1);
                let class = parts[0]
                    .classes()
                    .into_iter()
                    .find(|c| c.contains(&centers[0]))
                    .unwrap();
                assert_eq!(class.len(), 1);
            }
        }
    }
}

// ---- Black-White coloring ------------------------------------------------------

fn even_cycle_semis(g: &PlaneTriangulation) -> Vec<(Vec<usize>, SemiMpg, SemiMpg)> {
    all_cycles(g, 4, None)
        .into_iter()
        .filter(|c| c.len() % 2 == 0)
        .map(|c| {
            let (s1, s2) = split_on_cycle(g, &c).expect("split");
            (c, s1, s2)
        })
        .collect()
}

#[test]
fn bw_unique_and_petal_theorems() {
    // Unique stops decide 2-colorability by properness; improper unique
    // stops coincide with petal flags; petal sets stay within size four;
    // petal syndrome at a stopped state implies the cycle is not
    // 2-colorable.
    let mut unique_stops = 0;
    let mut petal_states = 0;
    let mut syndrome_states = 0;
    for n in 6..=9usize {
        for g in &catalogs(11)[&n] {
            let parts = enumerate_partitions_upto4(g);
            for (cycle, s1, s2) in even_cycle_semis(g) {
                let oracle = parts.iter().any(|p| {
                    let used: BTreeSet<usize> = cycle.iter().map(|&v| p.color_of(v)).collect();
                    used.len() == 2
                });
                let st1 = bw_operation(&s1);
                let st2 = bw_operation(&s2);
                for (s, st) in [(&s1, &st1), (&s2, &st2)] {
                    // Properness of a finished state matches the definition.
                    assert_eq!(st.proper, is_proper(s, &st.black, &st.white));
                    let boundary: BTreeSet<usize> = s.boundary.iter().copied().collect();
                    let initially_proper = s.bipartite_on(&boundary);
                    if st.unique && initially_proper {
                        // Improper at a unique stop iff petal-vertices were
                        // flagged on the way.
                        assert_eq!(!st.proper, st.petal_appeared);
                        unique_stops += 1;
                    }
                    if !st.grey.is_empty() {
                        let rep = petal_diagnostics(s, st);
                        assert!(rep.max_set_size <= 4);
                        if !rep.petal_pairs.is_empty() {
                            petal_states += 1;
                        }
                        if rep.petal_syndrome {
                            syndrome_states += 1;
                            assert!(!oracle, "petal syndrome on a 2-colorable cycle");
                        }
                    }
                }
                if st1.unique && st2.unique {
                    assert_eq!(st1.proper && st2.proper, oracle);
                }
            }
        }
    }
    assert!(unique_stops >= 100);
    assert!(petal_states >= 1, "no petal structures found");
    let _ = syndrome_states;
}

#[test]
fn bw_forced_pairs_match_petal_relations() {
    // For stopped states with few grey vertices, exhaustively determine
    // which adjacent grey pairs are forced to equal/different colors and
    // compare with the petal-edge/petal-path characterization.
    let mut checked_pairs = 0;
    for n in 6..=9usize {
        for g in &catalogs(11)[&n] {
            for (_, s1, s2) in even_cycle_semis(g) {
                for s in [&s1, &s2] {
                    let st = bw_operation(s);
                    let a: Vec<usize> = st.grey.iter().copied().collect();
                    if a.is_empty() || a.len() > 12 || !st.proper {
                        continue;
                    }
                    // All proper completions of the grey set.
                    let mut completions: Vec<Vec<bool>> = Vec::new();
                    for mask in 0u32..(1 << a.len()) {
                        let mut black = st.black.clone();
                        let mut white = st.white.clone();
                        for (i, &v) in a.iter().enumerate() {
                            if mask & (1 << i) != 0 {
                                black.insert(v);
                            } else {
                                white.insert(v);
                            }
                        }
                        if is_proper(s, &black, &white) {
                            completions.push((0..a.len()).map(|i| mask & (1 << i) != 0).collect());
                        }
                    }
                    if completions.is_empty() {
                        continue;
                    }
                    let rep = petal_diagnostics(s, &st);
                    for i in 0..a.len() {
                        for j in i + 1..a.len() {
                            if !s.adjacent(a[i], a[j]) {
                                continue;
                            }
                            let forced_diff =
                                completions.iter().all(|c| c[i] != c[j]);
                            let is_petal_edge = rep
                                .petal_pairs
                                .iter()
                                .any(|&(u, v)| {
                                    (u, v) == (a[i].min(a[j]), a[i].max(a[j]))
                                        || (v, u) == (a[i].min(a[j]), a[i].max(a[j]))
                                });
                            assert_eq!(forced_diff, is_petal_edge, "pair {:?}", (a[i], a[j]));
                            let forced_same = completions.iter().all(|c| c[i] == c[j]);
                            if forced_same {
                                // Both ends on a petal-path at even distance.
                                let dist = petal_graph_distance(&rep.petal_pairs, a[i], a[j]);
                                assert!(matches!(dist, Some(d) if d % 2 == 0));
                            }
                            checked_pairs += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked_pairs >= 3, "checked only {checked_pairs} grey pairs");
}

fn petal_graph_distance(pairs: &[(usize, usize)], from: usize, to: usize) -> Option<usize> {
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    dist.insert(from, 0);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            return Some(dist[&u]);
        }
        for &(a, b) in pairs {
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !dist.contains_key(&w) {
                dist.insert(w, dist[&u] + 1);
                queue.push_back(w);
            }
        }
    }
    None
}

#[test]
fn closed_classification_and_recursion() {
    // Closed cycle-cycle instances decide through the enclosed cycle;
    // closed cycle-tree instances are 2-colorable.
    let mut cycle_cycle = 0;
    let mut cycle_tree = 0;
    for n in 6..=10usize {
        for g in &catalogs(11)[&n] {
            for (_, s1, s2) in even_cycle_semis(g) {
                for s in [&s1, &s2] {
                    match classify_closed(s) {
                        ClosedKind::CycleCycle { inner_even } => {
                            cycle_cycle += 1;
                            let decision = side_2colorable(s);
                            if !inner_even {
                                assert!(!decision, "odd enclosing cycle cannot be 2-colorable");
                            } else {
                                let inner = inner_semi(s).expect("inner side");
                                assert_eq!(decision, side_2colorable(&inner));
                            }
                        }
                        ClosedKind::CycleTree => {
                            cycle_tree += 1;
                            assert!(side_2colorable(s), "cycle-tree must be 2-colorable");
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    assert!(cycle_cycle >= 1, "no closed cycle-cycle instances found");
    assert!(cycle_tree >= 1, "no closed cycle-tree instances found");
}

#[test]
fn tree_colorings_never_bicolor_cycles() {
    // The icosahedron's colorings are tree-colorings, so none of its even
    // cycles is 2-colorable (checked through the classifications).
    let g = fixtures::icosahedron();
    for f in enumerate_partitions(&g) {
        assert_eq!(classify_coloring(&g, &f).kind, ColoringKind::Tree);
    }
}
