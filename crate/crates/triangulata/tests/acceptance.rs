//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use std::time::Instant;

use triangulata::bwcolor::{
    all_cycles, even_cycle_census, is_2colorable_cycle, neighbor_cycle_length,
};
use triangulata::coloring::{
    bicolored_subgraph, classify_coloring, classify_graph, count_labeled_colorings,
    enumerate_partitions, enumerate_partitions_upto4, union_two_bicolored, ColoringKind,
    GraphColoringClass,
};
use triangulata::embedding::PlaneTriangulation;
use triangulata::fixtures;
use triangulata::generator::{
    children, generate_22fwf, generate_recursive, parents, star_extend, CatalogSet,
};

static CATALOGS: OnceLock<BTreeMap<usize, Vec<PlaneTriangulation>>> = OnceLock::new();

fn catalogs() -> &'static BTreeMap<usize, Vec<PlaneTriangulation>> {
    CATALOGS.get_or_init(|| {
        let mut set = CatalogSet::new();
        let mut out = BTreeMap::new();
        for n in 6..=13 {
            let cat = set.get(n).expect("catalog");
            out.insert(n, cat.entries.iter().map(|e| e.graph.clone()).collect());
        }
        out
    })
}

#[test]
fn criterion_01_generation_counts() {
    let t = Instant::now();
    let cats = catalogs();
    let counts: Vec<usize> = (6..=13).map(|n| cats[&n].len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 12, 34, 130, 525]);
    // Closure: every graph of order >= 9 has a parent reachable by a
    // compound contraction, and the plus-two children of every entry stay
    // inside the next catalog.
    for n in 9..=13usize {
        for g in &cats[&n] {
            assert!(!parents(g).is_empty(), "orphan at order {n}");
        }
    }
    println!(
        "criterion 1 PASS: catalog sizes 6..13 = {counts:?} in {:?}",
        t.elapsed()
    );
}

/// Expected census row: exact cycle/tree counts, or a starred row with the
/// flags the published data states (None = not stated).
#[derive(Debug, Clone)]
enum Row {
    Counts(usize, usize),
    Starred {
        divisible: Option<bool>,
        three: Option<bool>,
    },
}

fn expected_census() -> Vec<(usize, &'static str, Row)> {
    use Row::*;
    let d = |v| Starred {
        divisible: Some(v),
        three: None,
    };
    let t3 = || Starred {
        divisible: None,
        three: Some(true),
    };
    vec![
        (7, "4444455", Counts(5, 0)),
        (8, "44444466", t3()),
        (8, "44445555", Counts(2, 1)),
        (
            9,
            "444444666",
            Starred {
                divisible: Some(true),
                three: Some(true),
            },
        ),
        (9, "444455556", Counts(6, 0)),
        (9, "444555555", Counts(0, 2)),
        (9, "444444477", Counts(17, 0)),
        (9, "444445566", Counts(9, 0)),
        (10, "4455555555", Counts(8, 0)),
        (10, "4445555556", Counts(6, 0)),
        (10, "4444555566", Counts(14, 0)),
        (10, "4444555566", Counts(13, 0)),
        (10, "4444555566", Counts(4, 1)),
        (10, "4444455567", Counts(7, 0)),
        (10, "4444455666", Counts(14, 0)),
        (10, "4444445577", Counts(10, 1)),
        (10, "4444445577", d(true)),
        (10, "4444446666", t3()),
        (10, "4444445667", d(true)),
        (10, "4444444488", t3()),
        (11, "44555555556", Counts(8, 0)),
        (11, "44455555566", Counts(6, 1)),
        (11, "44455555566", Counts(10, 0)),
        (11, "44445555666", Counts(12, 1)),
        (11, "44445555666", Counts(16, 0)),
        (11, "44445555666", Counts(9, 0)),
        (11, "44445555666", Counts(10, 0)),
        (11, "44445555567", Counts(11, 0)),
        (11, "44445555567", Counts(2, 2)),
        (11, "44445555567", Counts(13, 0)),
        (11, "44444555667", Counts(22, 0)),
        (11, "44444555667", Counts(8, 0)),
        (11, "44444555667", Counts(11, 0)),
        (11, "44444555667", d(true)),
        (11, "44444556666", Counts(29, 0)),
        (11, "44444556666", Counts(17, 0)),
        (11, "44444555577", Counts(10, 0)),
        (11, "44444555577", Counts(5, 1)),
        (11, "44444455677", d(true)),
        (11, "44444455677", d(true)),
        (11, "44444455677", Counts(10, 0)),
        (11, "44444455677", d(true)),
        (11, "44444455578", Counts(14, 0)),
        (11, "44444455578", d(true)),
        (11, "44444466666", t3()),
        (11, "44444456667", Counts(21, 0)),
        (11, "44444455668", Counts(13, 0)),
        (11, "44444455668", d(true)),
        (11, "44444455668", d(true)),
        (
            11,
            "44444446668",
            Starred {
                divisible: Some(true),
                three: Some(true),
            },
        ),
        (11, "44444446677", Counts(41, 0)),
        (11, "44444445588", d(true)),
        (11, "44444445588", Counts(25, 0)),
        (11, "44444444499", Counts(85, 0)),
    ]
}

fn row_matches(expected: &Row, actual: &(usize, usize, bool, bool)) -> bool {
    let (cn, tn, div, three) = *actual;
    match expected {
        Row::Counts(ecn, etn) => !div && !three && cn == *ecn && tn == *etn,
        Row::Starred { divisible, three: t } => {
            (div || three)
                && divisible.map_or(true, |x| x == div)
                && t.map_or(true, |x| x == three)
        }
    }
}

/// Exact matching of expected rows to actual rows within one degree
/// sequence group (groups are tiny, so backtracking suffices).
fn match_group(expected: &[Row], actual: &[(usize, usize, bool, bool)]) -> bool {
    if expected.len() != actual.len() {
        return false;
    }
    fn rec(expected: &[Row], actual: &[(usize, usize, bool, bool)], used: &mut Vec<bool>) -> bool {
        let i = used.iter().filter(|&&u| u).count();
        if i == expected.len() {
            return true;
        }
        for (j, a) in actual.iter().enumerate() {
            if used[j] || !row_matches(&expected[i], a) {
                continue;
            }
            used[j] = true;
            if rec(expected, actual, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    rec(expected, actual, &mut vec![false; expected.len()])
}

/// Published census values, asserted verbatim. Three rows fail: independent
/// exhaustive recounts (see `census_recount_verified` below and the notes in
/// the failure message) show the published table miscounts them.
#[test]
fn criterion_02_coloring_census() {
    let t = Instant::now();
    let cats = catalogs();
    let expected = expected_census();
    let mut total_rows = 0;
    let mut mismatches: Vec<String> = Vec::new();
    for n in 7..=11usize {
        // Group expectations and measurements by degree sequence.
        let mut exp: BTreeMap<&str, Vec<Row>> = BTreeMap::new();
        for (order, seq, row) in &expected {
            if *order == n {
                exp.entry(seq).or_default().push(row.clone());
            }
        }
        let mut act: BTreeMap<String, Vec<(usize, usize, bool, bool)>> = BTreeMap::new();
        for g in &cats[&n] {
            let c = classify_graph(g);
            act.entry(g.degree_sequence_string()).or_default().push((
                c.cycle_count,
                c.tree_count,
                c.divisible,
                c.three_chromatic,
            ));
        }
        assert_eq!(
            exp.keys().copied().collect::<Vec<_>>(),
            act.keys().map(|s| s.as_str()).collect::<Vec<_>>(),
            "degree sequence sets differ at order {n}"
        );
        for (seq, rows) in &exp {
            if match_group(rows, &act[&seq.to_string()]) {
                total_rows += rows.len();
            } else {
                mismatches.push(format!(
                    "order {n} {seq}: published {rows:?}, computed {:?}",
                    act[&seq.to_string()]
                ));
            }
        }
    }
    // Cross-totals as published: 533 colorings over non-starred rows, 10 trees.
    let mut cn_total = 0;
    let mut tn_total = 0;
    for n in 7..=11usize {
        for g in &cats[&n] {
            let c = classify_graph(g);
            if !c.divisible && !c.three_chromatic {
                cn_total += c.cycle_count;
                tn_total += c.tree_count;
            }
        }
    }
    if cn_total + tn_total != 533 || tn_total != 10 {
        mismatches.push(format!(
            "published totals 523+10=533; computed {cn_total}+{tn_total}={}",
            cn_total + tn_total
        ));
    }
    println!(
        "criterion 2: {total_rows} rows match the published census in {:?}",
        t.elapsed()
    );
    assert!(
        mismatches.is_empty(),
        "criterion 2 FAIL: {} published rows contradict exhaustive recounts \
         (two independent backtracking routes plus a raw 4^n sweep with \
         union-find classification agree on the computed values):\n{}",
        mismatches.len(),
        mismatches.join("\n")
    );
}

/// Regression guard for the census machinery itself: the three rows where
/// the published table is contradicted by exhaustive recounts, frozen at the
/// triple-verified values, plus the corrected totals.
#[test]
fn census_recount_verified() {
    let cats = catalogs();
    let mut rows: Vec<(usize, String, usize, usize)> = Vec::new();
    for n in [9usize, 11] {
        for g in &cats[&n] {
            let c = classify_graph(g);
            if c.divisible || c.three_chromatic {
                continue;
            }
            rows.push((
                n,
                g.degree_sequence_string(),
                c.cycle_count,
                c.tree_count,
            ));
        }
    }
    let find = |n: usize, seq: &str| -> Vec<(usize, usize)> {
        rows.iter()
            .filter(|r| r.0 == n && r.1 == seq)
            .map(|r| (r.2, r.3))
            .collect()
    };
    // The order-9 double wheel: 21 partitions, all cycle-colorings
    // (the partition count equals the 3-class partitions of the 7-cycle,
    // 126/3! = 21).
    assert_eq!(find(9, "444444477"), vec![(21, 0)]);
    // One coloring of this graph is a tree-coloring.
    let mut v = find(11, "44445555567");
    v.sort();
    assert_eq!(v, vec![(2, 2), (11, 0), (12, 1)]);
    // 29 partitions, not 21.
    assert_eq!(find(11, "44444456667"), vec![(29, 0)]);
    let mut cn_total = 0;
    let mut tn_total = 0;
    for n in 7..=11usize {
        for g in &cats[&n] {
            let c = classify_graph(g);
            if !c.divisible && !c.three_chromatic {
                cn_total += c.cycle_count;
                tn_total += c.tree_count;
            }
        }
    }
    assert_eq!((cn_total, tn_total), (534, 11));
    println!("census recount: corrected totals {cn_total}+{tn_total}={}", cn_total + tn_total);
}

#[test]
fn criterion_03_labeled_identity() {
    let t = Instant::now();
    let cats = catalogs();
    let mut checked = 0;
    for n in 6..=11usize {
        for g in &cats[&n] {
            let parts = enumerate_partitions(g).len() as u64;
            let labeled = count_labeled_colorings(g);
            assert_eq!(labeled, 24 * parts, "order {n}");
            checked += 1;
        }
    }
    println!("criterion 3 PASS: labeled = 24 x partitions on {checked} graphs in {:?}", t.elapsed());
}

#[test]
fn criterion_04_pure_tree_graphs() {
    let t = Instant::now();
    let cats = catalogs();
    let mut pure_tree: Vec<(usize, String)> = Vec::new();
    for n in 6..=12usize {
        for g in &cats[&n] {
            if classify_graph(g).class == GraphColoringClass::PureTree {
                pure_tree.push((n, g.degree_sequence_string()));
            }
        }
    }
    pure_tree.sort();
    assert_eq!(
        pure_tree,
        vec![
            (9, "444555555".to_string()),
            (12, "555555555555".to_string())
        ],
        "pure-tree graphs of order <= 12 are the 9-mirror graph and the icosahedron"
    );
    // The icosahedron: exactly ten partitions, all tree.
    let ico = fixtures::icosahedron();
    let ico_code = ico.canonical_code();
    assert!(cats[&12].iter().any(|g| g.canonical_code() == ico_code));
    let parts = enumerate_partitions(&ico);
    assert_eq!(parts.len(), 10);
    for p in &parts {
        assert_eq!(classify_coloring(&ico, p).kind, ColoringKind::Tree);
    }
    // Order 13: exactly one pure-tree graph (the 13-mirror graph), whose
    // bicolored subgraphs are paths of length 5 or 6 or trees of maximum
    // degree three.
    let thirteens: Vec<&PlaneTriangulation> = cats[&13]
        .iter()
        .filter(|g| classify_graph(g).class == GraphColoringClass::PureTree)
        .collect();
    assert_eq!(thirteens.len(), 1, "exactly one pure-tree graph of order 13");
    let mirror13 = thirteens[0];
    for p in enumerate_partitions(mirror13) {
        for i in 1..=4 {
            for j in i + 1..=4 {
                let sub = bicolored_subgraph(mirror13, &p, i, j);
                assert!(!sub.has_cycle());
                let max_deg = sub.vertices.iter().map(|&v| sub.degree(v)).max().unwrap();
                let is_path = max_deg <= 2 && sub.is_connected();
                if is_path {
                    assert!(sub.edge_count() == 5 || sub.edge_count() == 6);
                } else {
                    assert!(max_deg == 3);
                }
            }
        }
    }
    println!(
        "criterion 4 PASS: pure-tree = 9-mirror + icosahedron (<=12), unique 13-mirror confirmed in {:?}",
        t.elapsed()
    );
}

#[test]
fn criterion_05_recursive_family() {
    let t = Instant::now();
    // Counts of the two-degree-3-vertex family.
    let gammas: Vec<usize> = (5..=9).map(|n| generate_22fwf(n).len()).collect();
    assert_eq!(gammas, vec![1, 1, 2, 3, 6]);
    // Every recursive triangulation through order 12 is uniquely 4-colorable.
    let recursive = generate_recursive(12);
    let mut total = 0;
    for (n, graphs) in &recursive {
        for g in graphs {
            assert_eq!(
                enumerate_partitions(g).len(),
                1,
                "recursive graph of order {n} not uniquely colorable"
            );
            total += 1;
        }
    }
    // Extending the 4-wheel through the two degree-3 vertices and the
    // central axis always breaks unique colorability.
    let mut star_checked = 0;
    for n in 5..=9usize {
        for e in generate_22fwf(n) {
            let g = &e.graph;
            let (x, u, y) = (0, 3, g.n() - 1);
            assert!(g.adjacent(x, u) && g.adjacent(y, u));
            for (a, b) in [(x, y), (y, x)] {
                let (h, f) = star_extend(g, a, u, b).expect("star extension");
                let parts = enumerate_partitions(&h);
                assert!(
                    parts.len() >= 2,
                    "order {n} star extension stayed uniquely colorable"
                );
                assert!(parts.contains(&f), "natural coloring missing");
                star_checked += 1;
            }
        }
    }
    println!(
        "criterion 5 PASS: family counts {gammas:?}; {total} recursive graphs uniquely colorable; {star_checked} star extensions non-unique in {:?}",
        t.elapsed()
    );
}

#[test]
fn criterion_06_parents_children() {
    let t = Instant::now();
    let ico = fixtures::icosahedron();
    let ps = parents(&ico);
    assert_eq!(ps.len(), 1, "icosahedron has exactly one parent");
    assert_eq!(ps[0].n(), 9);
    let kids = children(&ico);
    assert_eq!(kids.len(), 12, "icosahedron has exactly twelve children");
    // Duality: the icosahedron is a parent of each of its children.
    let code = ico.canonical_code();
    for k in &kids {
        assert!(parents(k).iter().any(|p| p.canonical_code() == code));
    }
    println!("criterion 6 PASS: 1 parent, 12 children in {:?}", t.elapsed());
}

#[test]
fn criterion_07_bw_agreement() {
    let t = Instant::now();
    let cats = catalogs();
    let mut cycles_checked = 0usize;
    let mut positives = 0usize;
    for n in 6..=10usize {
        for g in &cats[&n] {
            let parts = enumerate_partitions_upto4(g);
            for cycle in all_cycles(g, 4, None) {
                if cycle.len() % 2 != 0 {
                    continue;
                }
                let (decision, cert) = is_2colorable_cycle(g, &cycle).expect("decision");
                let oracle = parts.iter().any(|p| {
                    let used: BTreeSet<usize> = cycle.iter().map(|&v| p.color_of(v)).collect();
                    used.len() == 2
                });
                assert_eq!(
                    decision, oracle,
                    "disagreement at order {n}, cycle {cycle:?}"
                );
                if decision {
                    assert!(cert.is_some());
                    positives += 1;
                }
                cycles_checked += 1;
            }
        }
    }
    println!(
        "criterion 7 PASS: {cycles_checked} even cycles, 0 disagreements ({positives} 2-colorable) in {:?}",
        t.elapsed()
    );
}

#[test]
fn criterion_08_length_formulas() {
    let t = Instant::now();
    let cats = catalogs();
    let mut instances = 0usize;
    let mut path_instances = 0usize;
    for n in 6..=10usize {
        for g in &cats[&n] {
            // Every vertex subset; connected induced subgraphs whose
            // neighbors induce a cycle.
            for mask in 1u32..(1 << g.n()) {
                let h: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
                if h.len() > g.n() - 3 {
                    continue;
                }
                if let Some((pred, meas)) = neighbor_cycle_length(g, &h) {
                    assert_eq!(pred, meas, "order {n}, subset {h:?}");
                    instances += 1;
                    // Induced paths specialize to the degree-sum formula.
                    let degs: Vec<usize> = h
                        .iter()
                        .map(|&v| {
                            h.iter()
                                .filter(|&&w| w != v && g.adjacent(v, w))
                                .count()
                        })
                        .collect();
                    let is_path = h.len() == 1
                        || (degs.iter().filter(|&&d| d == 1).count() == 2
                            && degs.iter().all(|&d| d <= 2));
                    if is_path {
                        let sum: usize = h.iter().map(|&v| g.degree(v)).sum();
                        assert_eq!(meas, sum - 4 * (h.len() - 1));
                        path_instances += 1;
                    }
                }
            }
            // Census inequality: basic cycles bounded by half the
            // semi-maximal count minus the chord cycles.
            let census = even_cycle_census(g, None);
            assert!(
                census.basic_cycles
                    <= census.semi_mpg_count / 2 - census.chord_cycles
            );
        }
    }
    assert!(instances >= 500, "expected a large instance base, found {instances}");
    assert!(path_instances >= 200);
    println!(
        "criterion 8 PASS: {instances} neighbor-cycle instances ({path_instances} paths) match; census inequality holds in {:?}",
        t.elapsed()
    );
}

#[test]
fn criterion_09_structural_suite() {
    let t = Instant::now();
    let cats = catalogs();
    let mut union_checks = 0usize;
    let mut path_checks = 0usize;
    for n in 6..=11usize {
        for g in &cats[&n] {
            for p in enumerate_partitions(g) {
                for common in 1..=4usize {
                    let rest: Vec<usize> = (1..=4).filter(|&c| c != common).collect();
                    for a in 0..3 {
                        for b in a + 1..3 {
                            let u = union_two_bicolored(g, &p, common, (rest[a], rest[b]));
                            assert!(!u.has_odd_cycle(), "odd cycle in union, order {n}");
                            union_checks += 1;
                            if !u.is_connected() {
                                continue;
                            }
                            // Every path between the two non-common colors
                            // has an odd number of vertices.
                            let v1: Vec<usize> = u
                                .vertices
                                .iter()
                                .copied()
                                .filter(|&v| p.color_of(v) == rest[a])
                                .collect();
                            let v2: Vec<usize> = u
                                .vertices
                                .iter()
                                .copied()
                                .filter(|&v| p.color_of(v) == rest[b])
                                .collect();
                            for &x in &v1 {
                                for &y in &v2 {
                                    for path in u.simple_paths(x, y) {
                                        assert!(path.len() % 2 == 1);
                                        path_checks += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Degree-3 facts over every recursive triangulation and every
    // triangulation of order at most 9.
    let recursive = generate_recursive(10);
    for (n, graphs) in &recursive {
        if *n < 5 {
            continue;
        }
        for g in graphs {
            let threes: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
            assert!(threes.len() >= 2);
            for (i, &a) in threes.iter().enumerate() {
                for &b in threes.iter().skip(i + 1) {
                    assert!(!g.adjacent(a, b));
                }
            }
        }
    }
    let mut set = CatalogSet::new();
    let mut all_checked = 0usize;
    for n in 4..=9usize {
        for g in set.get_all(n).expect("universe").to_vec() {
            let threes: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
            if threes.len() == 2 {
                assert!(!g.adjacent(threes[0], threes[1]));
            }
            if threes.len() == 3 {
                let adj_all = threes.iter().any(|&a| {
                    threes.iter().all(|&b| b == a || g.adjacent(a, b))
                });
                assert!(!adj_all);
            }
            all_checked += 1;
        }
    }
    println!(
        "criterion 9 PASS: {union_checks} unions odd-cycle-free, {path_checks} paths odd-ordered, degree-3 facts over {all_checked} triangulations in {:?}",
        t.elapsed()
    );
}

#[test]
fn criterion_10_determinism() {
    let t = Instant::now();
    let run = |threads: usize| -> Vec<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let mut set = CatalogSet::new();
            set.get(10).unwrap().graph6_lines()
        })
    };
    let a = run(1);
    let b = run(4);
    let c = run(4);
    assert_eq!(a, b, "one thread versus four");
    assert_eq!(b, c, "repeat run");
    // File-level determinism through the front end.
    let dir1 = std::env::temp_dir().join(format!("triangulata-det1-{}", std::process::id()));
    let dir2 = std::env::temp_dir().join(format!("triangulata-det2-{}", std::process::id()));
    let (n1, c1) = triangulata::cli::write_catalog(&dir1, 9).unwrap();
    let (n2, c2) = triangulata::cli::write_catalog(&dir2, 9).unwrap();
    assert_eq!((n1, c1), (n2, c2));
    let f1 = std::fs::read(dir1.join("n=9.g6")).unwrap();
    let f2 = std::fs::read(dir2.join("n=9.g6")).unwrap();
    assert_eq!(f1, f2);
    let _ = std::fs::remove_dir_all(dir1);
    let _ = std::fs::remove_dir_all(dir2);
    println!("criterion 10 PASS: byte-identical catalogs across thread counts in {:?}", t.elapsed());
}
