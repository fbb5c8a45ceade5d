use triangulata::bwcolor::neighbor_cycle_length;
use triangulata::generator::CatalogSet;

fn main() {
    let mut set = CatalogSet::new();
    let mut instances = 0usize;
    let mut paths = 0usize;
    for n in 6..=10usize {
        let cat = set.get(n).unwrap().clone();
        for e in &cat.entries {
            let g = &e.graph;
            for mask in 1u32..(1 << g.n()) {
                let h: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
                if h.len() > g.n() - 3 { continue; }
                if let Some((pred, meas)) = neighbor_cycle_length(g, &h) {
                    assert_eq!(pred, meas);
                    instances += 1;
                    let degs: Vec<usize> = h.iter().map(|&v| h.iter().filter(|&&w| w != v && g.adjacent(v, w)).count()).collect();
                    let is_path = h.len() == 1 || (degs.iter().filter(|&&d| d == 1).count() == 2 && degs.iter().all(|&d| d <= 2));
                    if is_path { paths += 1; }
                }
            }
        }
    }
    println!("instances={instances} paths={paths}");
}
