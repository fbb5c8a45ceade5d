use triangulata::coloring::*;
use triangulata::fixtures;
use triangulata::generator::*;
use std::collections::BTreeSet;

fn main() {
    // Dumb exhaustive count for the order-9 double wheel: all 4^9 maps.
    let g = fixtures::double_wheel(7);
    let n = g.n();
    let edges = g.edges();
    let mut onto = 0u64;
    let mut parts: BTreeSet<Vec<usize>> = BTreeSet::new();
    let total = 4usize.pow(n as u32);
    for code in 0..total {
        let mut c = vec![0usize; n];
        let mut x = code;
        for v in 0..n { c[v] = x % 4 + 1; x /= 4; }
        if edges.iter().any(|&(u, v)| c[u] == c[v]) { continue; }
        let used: BTreeSet<usize> = c.iter().copied().collect();
        if used.len() == 4 {
            onto += 1;
            // normalize to partition
            let mut relabel = std::collections::BTreeMap::new();
            let mut norm = Vec::new();
            for &col in &c {
                let next = relabel.len() + 1;
                norm.push(*relabel.entry(col).or_insert(next));
            }
            parts.insert(norm);
        }
    }
    println!("double wheel C7+2K1: onto labeled = {onto}, partitions = {}", parts.len());
    println!("my enumerate_partitions: {}", enumerate_partitions(&g).len());
    println!("my count_labeled: {}", count_labeled_colorings(&g));

    // Full computed census rows for orders 7..=11.
    let mut set = CatalogSet::new();
    for n in 7..=11usize {
        let cat = set.get(n).unwrap().clone();
        for e in &cat.entries {
            let c = classify_graph(&e.graph);
            println!("{n} {} CN={} TN={} div={} three={}", e.degree_sequence, c.cycle_count, c.tree_count, c.divisible, c.three_chromatic);
        }
    }
}
