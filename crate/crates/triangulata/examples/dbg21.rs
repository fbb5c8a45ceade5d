use triangulata::embedding::*;
use triangulata::fixtures;
use triangulata::wheelops::*;
use std::collections::BTreeMap;

fn reaches(g: &PlaneTriangulation, memo: &mut BTreeMap<CanonicalCode, bool>, depth: usize) -> bool {
    if g.n() == 3 { return true; }
    let code = g.canonical_code();
    if let Some(&r) = memo.get(&code) { return r; }
    memo.insert(code.clone(), false);
    let mut ok = false;
    'search: for v in 0..g.n() {
        match g.degree(v) {
            3 => {
                if contract3(g, v).map(|h| reaches(&h, memo, depth+1)).unwrap_or(false) { ok = true; break 'search; }
            }
            4 => {
                for pair in contract4_pairs(g, v).unwrap() {
                    if let Ok(h) = contract4(g, v, pair) {
                        if reaches(&h, memo, depth+1) { ok = true; break 'search; }
                    }
                }
            }
            5 => {
                for pair in contract5_pairs(g, v).unwrap() {
                    if let Ok(h) = contract5(g, v, pair) {
                        if reaches(&h, memo, depth+1) { ok = true; break 'search; }
                    }
                }
            }
            _ => {}
        }
    }
    memo.insert(code, ok);
    ok
}

fn main() {
    let g = fixtures::eight_vertex_4455();
    let mut memo = BTreeMap::new();
    println!("4455 reaches K3: {}", reaches(&g, &mut memo, 0));
    // try contract5 options directly
    for v in 0..g.n() {
        if g.degree(v) != 5 { continue; }
        for pair in contract5_pairs(&g, v).unwrap() {
            match contract5(&g, v, pair) {
                Ok(h) => println!("contract5({v},{pair:?}) -> n={} degseq {} reach={}", h.n(), h.degree_sequence_string(), reaches(&h, &mut memo, 0)),
                Err(e) => println!("contract5({v},{pair:?}) err: {e}"),
            }
        }
    }
    // the order-8 double wheel too
    let dw = fixtures::double_wheel(6);
    println!("C6+2K1 reaches: {}", reaches(&dw, &mut BTreeMap::new(), 0));
}
