use triangulata::coloring::*;
use triangulata::generator::*;
use std::collections::{BTreeMap, BTreeSet};

fn dumb_census(g: &triangulata::PlaneTriangulation) -> (usize, usize, usize) {
    // entirely independent: enumerate all 4^n maps, collect partitions,
    // classify by union-find cycle detection per color pair.
    let n = g.n();
    let edges = g.edges();
    let mut parts: BTreeSet<Vec<usize>> = BTreeSet::new();
    let total = 4usize.pow(n as u32);
    for code in 0..total {
        let mut c = vec![0usize; n];
        let mut x = code;
        for v in 0..n { c[v] = x % 4 + 1; x /= 4; }
        if edges.iter().any(|&(u, v)| c[u] == c[v]) { continue; }
        let used: BTreeSet<usize> = c.iter().copied().collect();
        if used.len() != 4 { continue; }
        let mut relabel = BTreeMap::new();
        let mut norm = Vec::new();
        for &col in &c {
            let next = relabel.len() + 1;
            norm.push(*relabel.entry(col).or_insert(next));
        }
        parts.insert(norm);
    }
    let mut tree = 0;
    let mut cycle = 0;
    for p in &parts {
        let mut has_cycle = false;
        for i in 1..=4usize {
            for j in i+1..=4 {
                let vs: Vec<usize> = (0..n).filter(|&v| p[v] == i || p[v] == j).collect();
                let es: Vec<(usize, usize)> = edges.iter().copied()
                    .filter(|&(u, v)| vs.contains(&u) && vs.contains(&v)).collect();
                // union-find
                let mut parent: BTreeMap<usize, usize> = vs.iter().map(|&v| (v, v)).collect();
                fn find(p: &mut BTreeMap<usize, usize>, x: usize) -> usize {
                    let mut r = x;
                    while p[&r] != r { r = p[&r]; }
                    let mut c = x;
                    while p[&c] != r { let nx = p[&c]; p.insert(c, r); c = nx; }
                    r
                }
                for (u, v) in es {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru == rv { has_cycle = true; } else { parent.insert(ru, rv); }
                }
            }
        }
        if has_cycle { cycle += 1; } else { tree += 1; }
    }
    (parts.len(), cycle, tree)
}

fn main() {
    let mut set = CatalogSet::new();
    let cat = set.get(11).unwrap().clone();
    for e in &cat.entries {
        let ds = e.degree_sequence.as_str();
        if ds == "44445555567" || ds == "44444456667" {
            let c = classify_graph(&e.graph);
            if (ds == "44445555567" && c.tree_count == 1) || ds == "44444456667" {
                let (p, cyc, tr) = dumb_census(&e.graph);
                println!("{ds}: mine CN={} TN={}; dumb: partitions={p} CN={cyc} TN={tr}", c.cycle_count, c.tree_count);
                if ds == "44445555567" && c.tree_count == 1 {
                    // print the tree partition for the record
                    for part in enumerate_partitions(&e.graph) {
                        if classify_coloring(&e.graph, &part).kind == ColoringKind::Tree {
                            println!("  tree partition classes: {:?}", part.classes());
                            println!("  adjacency:");
                            for v in 0..e.graph.n() {
                                println!("    {v}: {:?}", e.graph.neighbors(v));
                            }
                        }
                    }
                }
            }
        }
    }
}
