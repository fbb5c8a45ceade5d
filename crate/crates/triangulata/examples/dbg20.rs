use triangulata::bwcolor::*;
use triangulata::generator::*;

fn main() {
    let mut set = CatalogSet::new();
    'outer: for n in 6..=10usize {
        let cat = set.get(n).unwrap().clone();
        for e in &cat.entries {
            let g = &e.graph;
            for c in all_cycles(g, 4, None) {
                if c.len() % 2 != 0 { continue; }
                let (s1, s2) = split_on_cycle(g, &c).unwrap();
                for s in [&s1, &s2] {
                    if classify_closed(s) == ClosedKind::CycleTree && !side_2colorable(s) {
                        println!("FAIL instance: n={n} cycle={c:?}");
                        println!("semi: n={} boundary={:?}", s.n(), s.boundary);
                        for v in 0..s.n() {
                            println!("  rot[{v}] = {:?} (host {})", s.neighbors(v), s.host_map[v]);
                        }
                        let out = improved_bw_operation(s);
                        println!("improved: success={} black={:?} white={:?} grey={:?} signs={:?}",
                            out.success, out.black, out.white, out.grey, out.sign_vertices);
                        break 'outer;
                    }
                }
            }
        }
    }
    println!("done");
}
