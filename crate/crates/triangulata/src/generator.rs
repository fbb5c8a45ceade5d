//! Isomorph-free exhaustive generation of minimum-degree-4 triangulations,
//! parent/child sets, recursive triangulations, and the two-degree-3-vertex
//! family with its color-sequence encoding.

use crate::coloring::ColorPartition;
use crate::embedding::{
    graph6_canonical, CanonicalCode, FaceTriple, PlaneTriangulation, Vertex,
};
use crate::error::{GraphError, Result};
use crate::fixtures;
use crate::wheelops::{
    compound_2_2_4, compound_2_4, compound_2_5, compound_contract, contract4_pairs,
    contract5_pairs, extend3, extend4, extend5, Funnel,
};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub graph: PlaneTriangulation,
    pub code: CanonicalCode,
    pub degree_sequence: String,
    pub provenance: String,
}

/// All minimum-degree-4 triangulations of one order, codes pairwise distinct,
/// sorted by code.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub order: usize,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn codes(&self) -> BTreeSet<CanonicalCode> {
        self.entries.iter().map(|e| e.code.clone()).collect()
    }

    pub fn graph6_lines(&self) -> Vec<String> {
        self.entries.iter().map(|e| graph6_canonical(&e.graph)).collect()
    }

    fn from_graphs(order: usize, graphs: Vec<(PlaneTriangulation, String)>) -> Catalog {
        let mut by_code: BTreeMap<CanonicalCode, CatalogEntry> = BTreeMap::new();
        for (g, prov) in graphs {
            let code = g.canonical_code();
            by_code.entry(code.clone()).or_insert_with(|| CatalogEntry {
                degree_sequence: g.degree_sequence_string(),
                graph: g,
                code,
                provenance: prov,
            });
        }
        Catalog {
            order,
            entries: by_code.into_values().collect(),
        }
    }
}

/// The order-(n+2) children: all minimum-degree-4 results of extending a
/// 4-wheel on an induced 2-path or a 5-wheel on an induced funnel.
pub fn children_plus2(g: &PlaneTriangulation) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        let nb = g.neighbors(u).to_vec();
        for &x in &nb {
            for &y in &nb {
                if x == y || g.adjacent(x, y) {
                    continue;
                }
                if let Ok(h) = extend4(g, x, u, y) {
                    if h.min_degree() >= 4 {
                        out.push(h);
                    }
                }
            }
        }
    }
    for f in g.faces() {
        let [a, b, c] = f.vertices();
        for (m, b1, b2) in [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ] {
            for &t in g.neighbors(m) {
                if t == b1 || t == b2 || g.adjacent(t, b1) || g.adjacent(t, b2) {
                    continue;
                }
                let funnel = Funnel {
                    top: t,
                    middle: m,
                    bottoms: (b1, b2),
                };
                if let Ok(h) = extend5(g, &funnel) {
                    if h.min_degree() >= 4 {
                        out.push(h);
                    }
                }
            }
        }
    }
    dedup_by_code(out)
}

/// The order-(n+3) children: a 2- or 3-wheel pre-step followed by the 4- or
/// 5-wheel covering the low-degree vertex.
pub fn children_plus3(g: &PlaneTriangulation) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    // 2-wheel then 4-wheel: lens on (a, b) through (a, b, p); path c-a-y.
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            for p in edge_face_mates(g, a, b) {
                for &y in g.neighbors(a) {
                    if y == b {
                        continue;
                    }
                    if let Ok(h) = compound_2_4(g, a, b, p, y) {
                        if h.min_degree() >= 4 {
                            out.push(h);
                        }
                    }
                }
            }
        }
    }
    // 2-wheel then 5-wheel: lens on (a, b); funnel top is the lens vertex.
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            for f in g.faces() {
                let s = f.vertices();
                if !s.contains(&a) || s.contains(&b) {
                    continue;
                }
                let rest: Vec<Vertex> = s.into_iter().filter(|&w| w != a).collect();
                for (b1, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    if let Ok(h) = compound_2_5(g, a, b, b1, b2) {
                        if h.min_degree() >= 4 {
                            out.push(h);
                        }
                    }
                }
            }
        }
    }
    // 3-wheel then 5-wheel: the embedded vertex is the top or a bottom.
    for f in g.faces() {
        if let Ok(h) = extend3(g, f) {
            let w = g.n();
            out.extend(funnel_extensions_involving(&h, w));
        }
    }
    dedup_by_code(out)
}

fn funnel_extensions_involving(h: &PlaneTriangulation, w: Vertex) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    for f in h.faces() {
        let [a, b, c] = f.vertices();
        for (m, b1, b2) in [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ] {
            for &t in h.neighbors(m) {
                if t == b1 || t == b2 || h.adjacent(t, b1) || h.adjacent(t, b2) {
                    continue;
                }
                if t != w && b1 != w && b2 != w {
                    continue;
                }
                let funnel = Funnel {
                    top: t,
                    middle: m,
                    bottoms: (b1, b2),
                };
                if let Ok(r) = extend5(h, &funnel) {
                    if r.min_degree() >= 4 {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// The order-(n+4) children: two pre-steps (2-2, 2-3 or 3-3) followed by the
/// covering 4- or 5-wheel.
pub fn children_plus4(g: &PlaneTriangulation) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    // Two lenses around a common middle, then the 4-wheel.
    for u in 0..g.n() {
        let nb = g.neighbors(u).to_vec();
        for &x1 in &nb {
            for p1 in edge_face_mates(g, u, x1) {
                for &x2 in &nb {
                    if x2 == x1 {
                        continue;
                    }
                    for p2 in edge_face_mates(g, u, x2) {
                        if let Ok(h) = compound_2_2_4(g, u, x1, p1, x2, p2) {
                            if h.min_degree() >= 4 {
                                out.push(h);
                            }
                        }
                    }
                }
            }
        }
    }
    // One embedded 3-wheel, then a lens compound covering both.
    for f in g.faces() {
        if let Ok(h) = extend3(g, f) {
            let w = g.n();
            // 2-3 + 4: path ends are the lens vertex and w.
            for &a in h.neighbors(w) {
                for &b in h.neighbors(a) {
                    if b == w {
                        continue;
                    }
                    for p in edge_face_mates(&h, a, b) {
                        if let Ok(r) = compound_2_4(&h, a, b, p, w) {
                            if r.min_degree() >= 4 {
                                out.push(r);
                            }
                        }
                    }
                }
            }
            // 2-3 + 5: funnel top is the lens vertex, w a bottom.
            for face in h.faces() {
                let s = face.vertices();
                if !s.contains(&w) {
                    continue;
                }
                for &a in &s {
                    if a == w {
                        continue;
                    }
                    let rest: Vec<Vertex> = s.into_iter().filter(|&x| x != a).collect();
                    for (b1, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                        for &b in h.neighbors(a) {
                            if b == b1 || b == b2 {
                                continue;
                            }
                            if let Ok(r) = compound_2_5(&h, a, b, b1, b2) {
                                if r.min_degree() >= 4 {
                                    out.push(r);
                                }
                            }
                        }
                    }
                }
            }
            // 3-3 pre-steps.
            for f2 in h.faces() {
                if let Ok(h2) = extend3(&h, f2) {
                    let w2 = h.n();
                    // 3-3 + 4: path w-u-w2.
                    let common: Vec<Vertex> = h2
                        .neighbors(w)
                        .iter()
                        .copied()
                        .filter(|&u| u != w2 && h2.adjacent(u, w2))
                        .collect();
                    if !h2.adjacent(w, w2) {
                        for u in common {
                            for (x, y) in [(w, w2), (w2, w)] {
                                if let Ok(r) = extend4(&h2, x, u, y) {
                                    if r.min_degree() >= 4 {
                                        out.push(r);
                                    }
                                }
                            }
                        }
                    }
                    // 3-3 + 5: top and one bottom are the embedded vertices.
                    for r in funnel_extensions_involving_pair(&h2, w, w2) {
                        if r.min_degree() >= 4 {
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
    dedup_by_code(out)
}

fn funnel_extensions_involving_pair(
    h: &PlaneTriangulation,
    w1: Vertex,
    w2: Vertex,
) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    for f in h.faces() {
        let [a, b, c] = f.vertices();
        for (m, b1, b2) in [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ] {
            for &t in h.neighbors(m) {
                if t == b1 || t == b2 || h.adjacent(t, b1) || h.adjacent(t, b2) {
                    continue;
                }
                let covered = (t == w1 && (b1 == w2 || b2 == w2))
                    || (t == w2 && (b1 == w1 || b2 == w1));
                if !covered {
                    continue;
                }
                let funnel = Funnel {
                    top: t,
                    middle: m,
                    bottoms: (b1, b2),
                };
                if let Ok(r) = extend5(h, &funnel) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn edge_face_mates(g: &PlaneTriangulation, a: Vertex, b: Vertex) -> Vec<Vertex> {
    g.faces()
        .iter()
        .filter(|f| {
            let s = f.vertices();
            s.contains(&a) && s.contains(&b)
        })
        .map(|f| f.vertices().into_iter().find(|&w| w != a && w != b).unwrap())
        .collect()
}

fn dedup_by_code(graphs: Vec<PlaneTriangulation>) -> Vec<PlaneTriangulation> {
    let mut by_code: BTreeMap<CanonicalCode, PlaneTriangulation> = BTreeMap::new();
    for g in graphs {
        by_code.entry(g.canonical_code()).or_insert(g);
    }
    by_code.into_values().collect()
}

/// The child set: minimum-degree-4 results of the eleven extending-wheel
/// operation patterns, deduplicated. The patterns fix where the low-degree
/// pre-step vertices sit relative to the covering wheel: a 4-wheel on an
/// induced path or any path through a fresh lens vertex, a 5-wheel on an
/// induced funnel possibly rooted at fresh low-degree vertices, and the
/// double-pre-step forms including the dumbbell.
pub fn children(g: &PlaneTriangulation) -> Vec<PlaneTriangulation> {
    let mut out: Vec<PlaneTriangulation> = Vec::new();
    let keep = |out: &mut Vec<PlaneTriangulation>, h: PlaneTriangulation| {
        if h.min_degree() >= 4 {
            out.push(h);
        }
    };
    // 4-wheel on an induced 2-path; 5-wheel on an induced funnel.
    out.extend(children_plus2(g));
    // 2-wheel then 4-wheel: the lens vertex is one path end, the far end free.
    for a in 0..g.n() {
        for &b in g.neighbors(a).to_vec().iter() {
            for p in edge_face_mates(g, a, b) {
                for &y in g.neighbors(a).to_vec().iter() {
                    if y == b {
                        continue;
                    }
                    if let Ok(h) = compound_2_4(g, a, b, p, y) {
                        keep(&mut out, h);
                    }
                }
            }
        }
    }
    // 2-wheel then 5-wheel: lens partner detached from the funnel face.
    for a in 0..g.n() {
        for &b in g.neighbors(a).to_vec().iter() {
            for f in g.faces() {
                let s = f.vertices();
                if !s.contains(&a) || s.contains(&b) {
                    continue;
                }
                let rest: Vec<Vertex> = s.into_iter().filter(|&w| w != a).collect();
                if g.adjacent(b, rest[0]) || g.adjacent(b, rest[1]) {
                    continue;
                }
                for (b1, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    if let Ok(h) = compound_2_5(g, a, b, b1, b2) {
                        keep(&mut out, h);
                    }
                }
            }
        }
    }
    // 3-wheel then 5-wheel, fresh vertex on top of an induced funnel.
    for f in g.faces() {
        let h = extend3(g, f).expect("face");
        let w = g.n();
        for face in h.faces() {
            let s = face.vertices();
            if s.contains(&w) {
                continue;
            }
            for &m in &s {
                if !h.adjacent(m, w) {
                    continue;
                }
                let rest: Vec<Vertex> = s.into_iter().filter(|&x| x != m).collect();
                if h.adjacent(w, rest[0]) || h.adjacent(w, rest[1]) {
                    continue;
                }
                for (b1, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    let funnel = Funnel {
                        top: w,
                        middle: m,
                        bottoms: (b1, b2),
                    };
                    if let Ok(r) = extend5(&h, &funnel) {
                        keep(&mut out, r);
                    }
                }
            }
        }
        // 3-wheel then 5-wheel, fresh vertex as a bottom, top fully detached
        // from the host face.
        for face in h.faces() {
            let s = face.vertices();
            if !s.contains(&w) {
                continue;
            }
            for &m in &s {
                if m == w {
                    continue;
                }
                let b2 = s.iter().copied().find(|&x| x != w && x != m).unwrap();
                let third = f.vertices().iter().copied().find(|&x| x != m && x != b2);
                for &t in h.neighbors(m).to_vec().iter() {
                    if t == w || t == b2 || h.adjacent(t, w) || h.adjacent(t, b2) {
                        continue;
                    }
                    if let Some(x) = third {
                        if h.adjacent(t, x) {
                            continue;
                        }
                    }
                    for (x1, x2) in [(w, b2), (b2, w)] {
                        let funnel = Funnel {
                            top: t,
                            middle: m,
                            bottoms: (x1, x2),
                        };
                        if let Ok(r) = extend5(&h, &funnel) {
                            keep(&mut out, r);
                        }
                    }
                }
            }
        }
    }
    // Two 2-wheels on detached edges, then the 4-wheel through both.
    for u in 0..g.n() {
        let nb = g.neighbors(u).to_vec();
        for &x1 in &nb {
            for p1 in edge_face_mates(g, u, x1) {
                for &x2 in &nb {
                    if x2 == x1 || g.adjacent(x1, x2) {
                        continue;
                    }
                    for p2 in edge_face_mates(g, u, x2) {
                        if p1 == x2 || p2 == x1 {
                            continue;
                        }
                        if let Ok(h) = compound_2_2_4(g, u, x1, p1, x2, p2) {
                            keep(&mut out, h);
                        }
                    }
                }
            }
        }
    }
    // 2- and 3-wheel pre-steps then the covering 4-wheel: the lens sits on a
    // wheel edge of the embedded vertex.
    for f in g.faces() {
        let h = extend3(g, f).expect("face");
        let w = g.n();
        for &a in h.neighbors(w).to_vec().iter() {
            for &b in h.neighbors(a).to_vec().iter() {
                if b == w || !f.vertices().contains(&b) {
                    continue;
                }
                for p in edge_face_mates(&h, a, b) {
                    if let Ok(r) = compound_2_4(&h, a, b, p, w) {
                        keep(&mut out, r);
                    }
                }
            }
        }
        // 2- and 3-wheel pre-steps then the 5-wheel: lens partner on the
        // host face, fresh vertex a bottom.
        for face in h.faces() {
            let s = face.vertices();
            if !s.contains(&w) {
                continue;
            }
            for &a in &s {
                if a == w {
                    continue;
                }
                let rest: Vec<Vertex> = s.into_iter().filter(|&x| x != a).collect();
                for (b1, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    for &b in h.neighbors(a).to_vec().iter() {
                        if b == b1 || b == b2 || !f.vertices().contains(&b) {
                            continue;
                        }
                        if let Ok(r) = compound_2_5(&h, a, b, b1, b2) {
                            keep(&mut out, r);
                        }
                    }
                }
            }
        }
    }
    // The dumbbell: two 3-wheels in faces sharing exactly the path middle.
    for f1 in g.faces() {
        let h1 = extend3(g, f1).expect("face");
        let w1 = g.n();
        for f2 in h1.faces() {
            let shared = f1
                .vertices()
                .iter()
                .filter(|x| f2.vertices().contains(x))
                .count();
            if shared != 1 || f2.vertices().contains(&w1) {
                continue;
            }
            let h2 = extend3(&h1, f2).expect("face");
            let w2 = h1.n();
            if h2.adjacent(w1, w2) {
                continue;
            }
            let common: Vec<Vertex> = h2
                .neighbors(w1)
                .iter()
                .copied()
                .filter(|&u| h2.adjacent(u, w2))
                .collect();
            for u in common {
                for (x, y) in [(w1, w2), (w2, w1)] {
                    if let Ok(r) = extend4(&h2, x, u, y) {
                        keep(&mut out, r);
                    }
                }
            }
        }
        // Two 3-wheels in faces sharing an edge, then the 5-wheel with the
        // fresh vertices as top and a bottom.
        for f2 in h1.faces() {
            let shared = f1
                .vertices()
                .iter()
                .filter(|x| f2.vertices().contains(x))
                .count();
            if shared != 2 || f2.vertices().contains(&w1) {
                continue;
            }
            let h2 = extend3(&h1, f2).expect("face");
            let w2 = h1.n();
            for face in h2.faces() {
                let [a, b, c] = face.vertices();
                for (m, b1, b2) in [
                    (a, b, c),
                    (a, c, b),
                    (b, a, c),
                    (b, c, a),
                    (c, a, b),
                    (c, b, a),
                ] {
                    for &t in h2.neighbors(m).to_vec().iter() {
                        if t == b1 || t == b2 || h2.adjacent(t, b1) || h2.adjacent(t, b2) {
                            continue;
                        }
                        let covered = (t == w1 && (b1 == w2 || b2 == w2))
                            || (t == w2 && (b1 == w1 || b2 == w1));
                        if !covered {
                            continue;
                        }
                        let funnel = Funnel {
                            top: t,
                            middle: m,
                            bottoms: (b1, b2),
                        };
                        if let Ok(r) = extend5(&h2, &funnel) {
                            keep(&mut out, r);
                        }
                    }
                }
            }
        }
    }
    dedup_by_code(out)
}

/// Parent set: every minimum-degree-4 result of a compound contracting wheel
/// operation, deduplicated.
pub fn parents(g: &PlaneTriangulation) -> Vec<PlaneTriangulation> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let pairs: Vec<(Vertex, Vertex)> = match g.degree(v) {
            4 => contract4_pairs(g, v).map(|p| p.to_vec()).unwrap_or_default(),
            5 => contract5_pairs(g, v).unwrap_or_default(),
            _ => Vec::new(),
        };
        for pair in pairs {
            if let Ok((h, _)) = compound_contract(g, v, pair) {
                if h.min_degree() >= 4 && h.n() >= 6 {
                    out.push(h);
                }
            }
        }
    }
    dedup_by_code(out)
}

/// Vertex split, the inverse of an edge contraction: the new vertex takes
/// the rotation arc of `v` from position `ia` to `ib` inclusive, an edge
/// joins the halves, and the arc ends stay adjacent to both. Positions must
/// differ and both arcs must keep at least two members.
pub fn split_vertex(
    g: &PlaneTriangulation,
    v: Vertex,
    ia: usize,
    ib: usize,
) -> Option<PlaneTriangulation> {
    let r = g.rotation(v);
    let d = r.len();
    if ia == ib || ia >= d || ib >= d {
        return None;
    }
    let a = r[ia];
    let b = r[ib];
    let v2 = g.n();
    let mut rot: Vec<Vec<Vertex>> = (0..g.n()).map(|w| g.rotation(w).to_vec()).collect();
    let mut arc1 = Vec::new();
    let mut k = ia;
    loop {
        arc1.push(r[k]);
        if k == ib {
            break;
        }
        k = (k + 1) % d;
    }
    let mut arc2 = Vec::new();
    let mut k = ib;
    loop {
        arc2.push(r[k]);
        if k == ia {
            break;
        }
        k = (k + 1) % d;
    }
    rot[v] = arc2;
    rot[v].push(v2);
    let mut rv2 = arc1.clone();
    rv2.push(v);
    for &w in &arc1[1..arc1.len() - 1] {
        let pos = rot[w].iter().position(|&x| x == v).unwrap();
        rot[w][pos] = v2;
    }
    // The new vertex sits just before v around `a` and just after around `b`.
    let pa = rot[a].iter().position(|&x| x == v).unwrap();
    rot[a].insert(pa, v2);
    let pb = rot[b].iter().position(|&x| x == v).unwrap();
    rot[b].insert(pb + 1, v2);
    rot.push(rv2);
    let outer = [v2, rot[v2][0], rot[v2][1]];
    // The surgery is shape-safe; an exhaustive small-order test validates it.
    Some(PlaneTriangulation::from_rotation_unchecked(rot, outer))
}

/// All triangulations per order up to `max_n`, generated by vertex
/// splitting from K4 (every simple triangulation on five or more vertices
/// has a contractible edge, so the closure is exhaustive).
pub fn all_triangulations(max_n: usize) -> BTreeMap<usize, Vec<PlaneTriangulation>> {
    let mut out: BTreeMap<usize, Vec<PlaneTriangulation>> = BTreeMap::new();
    out.insert(4, vec![fixtures::k4()]);
    for n in 5..=max_n {
        let level = splitter_level(&out[&(n - 1)]);
        out.insert(n, level);
    }
    out
}

fn splitter_level(parents: &[PlaneTriangulation]) -> Vec<PlaneTriangulation> {
    let chunks: Vec<Vec<(CanonicalCode, PlaneTriangulation)>> = parents
        .par_iter()
        .map(|g| {
            let mut out = Vec::new();
            for v in 0..g.n() {
                let d = g.degree(v);
                for ia in 0..d {
                    // Swapping the arcs relabels the halves, so half the
                    // position pairs suffice.
                    for ib in ia + 1..d {
                        if let Some(h) = split_vertex(g, v, ia, ib) {
                            out.push((h.canonical_code(), h));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut seen: BTreeMap<CanonicalCode, PlaneTriangulation> = BTreeMap::new();
    for (c, h) in chunks.into_iter().flatten() {
        seen.entry(c).or_insert(h);
    }
    seen.into_values().collect()
}

/// Generation cache for the minimum-degree-4 catalogs.
#[derive(Default)]
pub struct CatalogSet {
    by_order: BTreeMap<usize, Catalog>,
    all_orders: BTreeMap<usize, Vec<PlaneTriangulation>>,
}

impl CatalogSet {
    pub fn new() -> Self {
        CatalogSet::default()
    }

    pub fn get(&mut self, n: usize) -> Result<&Catalog> {
        self.ensure(n)?;
        Ok(&self.by_order[&n])
    }

    /// All triangulations of one order (vertex-splitting closure), cached.
    pub fn get_all(&mut self, n: usize) -> Result<&[PlaneTriangulation]> {
        if n < 4 {
            return Err(GraphError::Unsupported("order below 4".into()));
        }
        self.ensure_all(n);
        Ok(&self.all_orders[&n])
    }

    fn ensure_all(&mut self, n: usize) {
        if self.all_orders.contains_key(&n) {
            return;
        }
        if n == 4 {
            self.all_orders.insert(4, vec![fixtures::k4()]);
            return;
        }
        self.ensure_all(n - 1);
        let level = splitter_level(&self.all_orders[&(n - 1)]);
        self.all_orders.insert(n, level);
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        if self.by_order.contains_key(&n) {
            return Ok(());
        }
        if n < 6 {
            return Err(GraphError::Unsupported(format!(
                "no minimum-degree-4 triangulation has order {n}"
            )));
        }
        // The wheel-operation recipe: extension children of the catalogs two,
        // three and four below, seeded where no such ancestors exist.
        let mut graphs = match n {
            6 => vec![(fixtures::octahedron(), "seed".into())],
            7 => vec![(fixtures::double_wheel(5), "seed".into())],
            8 => {
                self.ensure(6)?;
                let mut graphs = self.extend_layer(6, n)?;
                graphs.push((fixtures::eight_vertex_4455(), "seed".into()));
                graphs
            }
            9 => {
                self.ensure(7)?;
                self.ensure(6)?;
                let mut graphs = self.extend_layer(7, n)?;
                graphs.extend(self.extend_layer(6, n)?);
                graphs
            }
            _ => {
                self.ensure(n - 2)?;
                self.ensure(n - 3)?;
                self.ensure(n - 4)?;
                let mut graphs = self.extend_layer(n - 2, n)?;
                graphs.extend(self.extend_layer(n - 3, n)?);
                graphs.extend(self.extend_layer(n - 4, n)?);
                graphs
            }
        };
        // Completion sweep: the recipe misses the divisible graphs whose
        // every compound contraction cascades more than four vertices (they
        // exist from order ten on), so the classical edge-contraction
        // closure backs it up.
        if n >= 10 {
            self.ensure_all(n);
            graphs.extend(
                self.all_orders[&n]
                    .iter()
                    .filter(|g| g.min_degree() >= 4)
                    .map(|g| (g.clone(), "split-closure".into())),
            );
        }
        self.by_order.insert(n, Catalog::from_graphs(n, graphs));
        Ok(())
    }

    /// Children of every entry of the `from`-catalog that land at order `to`.
    fn extend_layer(&self, from: usize, to: usize) -> Result<Vec<(PlaneTriangulation, String)>> {
        let parent = &self.by_order[&from];
        let step = to - from;
        let results: Vec<Vec<(PlaneTriangulation, String)>> = parent
            .entries
            .par_iter()
            .map(|e| {
                let kids = match step {
                    2 => children_plus2(&e.graph),
                    3 => children_plus3(&e.graph),
                    4 => children_plus4(&e.graph),
                    _ => unreachable!(),
                };
                kids.into_iter()
                    .map(|k| (k, format!("{}+{}", e.code.hex(), step)))
                    .collect()
            })
            .collect();
        Ok(results.into_iter().flatten().collect())
    }
}

/// Generate the order-n catalog (with all needed lower orders).
pub fn generate_delta4(n: usize) -> Result<Catalog> {
    let mut set = CatalogSet::new();
    set.get(n).cloned()
}

// ---- recursive triangulations -------------------------------------------------------

/// All triangulations obtainable from K4 by repeatedly embedding degree-3
/// vertices, per order up to `max_n`.
pub fn generate_recursive(max_n: usize) -> BTreeMap<usize, Vec<PlaneTriangulation>> {
    let mut out: BTreeMap<usize, Vec<PlaneTriangulation>> = BTreeMap::new();
    out.insert(4, vec![fixtures::k4()]);
    for n in 5..=max_n {
        let prev = out[&(n - 1)].clone();
        let mut seen: BTreeMap<CanonicalCode, PlaneTriangulation> = BTreeMap::new();
        for g in prev {
            for f in g.faces() {
                let h = extend3(&g, f).expect("face embedding");
                seen.entry(h.canonical_code()).or_insert(h);
            }
        }
        out.insert(n, seen.into_values().collect());
    }
    out
}

/// Membership test by stripping degree-3 vertices with backtracking.
pub fn is_recursive(g: &PlaneTriangulation) -> bool {
    fn rec(g: &PlaneTriangulation, memo: &mut BTreeMap<CanonicalCode, bool>) -> bool {
        if g.n() == 4 {
            return true;
        }
        let code = g.canonical_code();
        if let Some(&r) = memo.get(&code) {
            return r;
        }
        let mut ok = false;
        for v in 0..g.n() {
            if g.degree(v) == 3 {
                if let Ok(h) = crate::wheelops::contract3(g, v) {
                    if rec(&h, memo) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        memo.insert(code, ok);
        ok
    }
    if g.n() < 4 {
        return false;
    }
    rec(g, &mut BTreeMap::new())
}

// ---- the two-degree-3-vertex family ---------------------------------------------------

pub const COLOR_LETTERS: [char; 4] = ['y', 'g', 'b', 'r'];

/// A construction-labeled member of the family: recursive, exactly two
/// degree-3 vertices at distance two, grown inside one fixed K4 region.
#[derive(Debug, Clone)]
pub struct DoubleThreeEntry {
    pub graph: PlaneTriangulation,
    pub code: CanonicalCode,
    /// Lexicographically least generating color sequence.
    pub sequence: String,
    pub adjacent_type: bool,
}

fn seq_of_colors(colors: &[usize]) -> String {
    colors.iter().map(|&c| COLOR_LETTERS[c - 1]).collect()
}

/// Enumerate the family at order `n` (n >= 5): vertex 0 stays degree 3, each
/// new vertex lands in a face at the previous one avoiding vertex 0, and the
/// final two degree-3 vertices are at distance two.
pub fn generate_22fwf(n: usize) -> Vec<DoubleThreeEntry> {
    assert!(n >= 5);
    // Construction states: (graph, colors). Vertex ids follow embedding order.
    let k4 = fixtures::k4();
    let mut states: Vec<(PlaneTriangulation, Vec<usize>)> = Vec::new();
    // Step 5: embed in the face {1, 2, 3} (the fixed region).
    let g5 = extend3(&k4, FaceTriple::new(1, 2, 3)).unwrap();
    states.push((g5, vec![1, 2, 3, 4, 1]));
    if n >= 6 {
        let mut next = Vec::new();
        for (g, colors) in states {
            // Agreement: the sixth vertex goes into the face {1, 3, 4}.
            let h = extend3(&g, FaceTriple::new(1, 3, 4)).unwrap();
            let mut c = colors.clone();
            c.push(3);
            next.push((h, c));
        }
        states = next;
    }
    for step in 7..=n {
        let mut next = Vec::new();
        for (g, colors) in states {
            let prev = step - 2; // id of the previous embedded vertex
            for f in g.faces() {
                let s = f.vertices();
                if s.contains(&0) || !s.contains(&prev) {
                    continue;
                }
                let h = extend3(&g, f).unwrap();
                let used: BTreeSet<usize> = s.iter().map(|&v| colors[v]).collect();
                let color = (1..=4).find(|k| !used.contains(k)).unwrap();
                let mut c = colors.clone();
                c.push(color);
                next.push((h, c));
            }
        }
        states = next;
    }
    let mut by_code: BTreeMap<CanonicalCode, DoubleThreeEntry> = BTreeMap::new();
    for (g, colors) in states {
        let last = g.n() - 1;
        // Family membership: exactly two degree-3 vertices at distance two.
        let threes: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
        if threes != vec![0, last] && threes != vec![last, 0] {
            continue;
        }
        if g.adjacent(0, last) {
            continue;
        }
        let dist2 = g
            .neighbors(0)
            .iter()
            .any(|&w| g.adjacent(w, last));
        if !dist2 {
            continue;
        }
        let seq = seq_of_colors(&colors);
        let code = g.canonical_code();
        let adjacent_type = {
            let t0: BTreeSet<Vertex> = g.neighbors(0).iter().copied().collect();
            let t1: BTreeSet<Vertex> = g.neighbors(last).iter().copied().collect();
            t0.intersection(&t1).count() >= 2
        };
        match by_code.get_mut(&code) {
            None => {
                by_code.insert(
                    code.clone(),
                    DoubleThreeEntry {
                        graph: g,
                        code,
                        sequence: seq,
                        adjacent_type,
                    },
                );
            }
            Some(e) => {
                if seq < e.sequence {
                    e.sequence = seq;
                    e.graph = g;
                    e.adjacent_type = adjacent_type;
                }
            }
        }
    }
    by_code.into_values().collect()
}

/// Decode a color sequence into its construction-labeled graph.
pub fn color_sequence_decode(s: &str) -> Result<PlaneTriangulation> {
    let colors: Vec<usize> = s
        .chars()
        .map(|ch| {
            COLOR_LETTERS
                .iter()
                .position(|&l| l == ch)
                .map(|i| i + 1)
                .ok_or_else(|| GraphError::BadOperand(format!("bad color letter {ch}")))
        })
        .collect::<Result<_>>()?;
    if colors.len() < 4 || colors[..4] != [1, 2, 3, 4] {
        return Err(GraphError::BadOperand(
            "sequence must start with ygbr".into(),
        ));
    }
    let mut g = fixtures::k4();
    let mut assigned = vec![1usize, 2, 3, 4];
    for (i, &c) in colors.iter().enumerate().skip(4) {
        let prev = i - 1;
        // The unique face at the previous vertex, avoiding vertex 0, whose
        // missing color is c.
        let mut target = None;
        for f in g.faces() {
            let s = f.vertices();
            if s.contains(&0) || !s.contains(&prev) {
                continue;
            }
            let used: BTreeSet<usize> = s.iter().map(|&v| assigned[v]).collect();
            if used.contains(&c) {
                continue;
            }
            if target.is_some() {
                return Err(GraphError::BadOperand(format!(
                    "ambiguous face at position {}",
                    i + 1
                )));
            }
            target = Some(f);
        }
        let f = target.ok_or_else(|| {
            GraphError::BadOperand(format!("no consistent face at position {}", i + 1))
        })?;
        g = extend3(&g, f)?;
        assigned.push(c);
    }
    // Validate family membership.
    let last = g.n() - 1;
    let threes: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    let sorted = {
        let mut t = threes.clone();
        t.sort_unstable();
        t
    };
    if g.n() > 4 {
        if sorted != vec![0, last] {
            return Err(GraphError::BadOperand("wrong degree-3 vertex set".into()));
        }
        if g.adjacent(0, last) || !g.neighbors(0).iter().any(|&w| g.adjacent(w, last)) {
            return Err(GraphError::BadOperand(
                "degree-3 vertices not at distance two".into(),
            ));
        }
    }
    Ok(g)
}

/// Encode a construction-labeled family member back into its color sequence.
pub fn color_sequence_encode(g: &PlaneTriangulation) -> Result<String> {
    // Strip in reverse label order, recording each vertex's face colors.
    let mut colors = vec![0usize; g.n()];
    colors[0] = 1;
    colors[1] = 2;
    colors[2] = 3;
    colors[3] = 4;
    let mut current = g.clone();
    let mut stack: Vec<(usize, [Vertex; 3])> = Vec::new();
    while current.n() > 4 {
        let v = current.n() - 1;
        if current.degree(v) != 3 {
            return Err(GraphError::BadOperand(
                "not construction-labeled: last vertex is not degree 3".into(),
            ));
        }
        let nb = current.neighbors(v).to_vec();
        stack.push((v, [nb[0], nb[1], nb[2]]));
        current = crate::wheelops::contract3(&current, v)?;
        if current.n() != v {
            return Err(GraphError::BadOperand("unexpected compaction".into()));
        }
    }
    for (v, nb) in stack.into_iter().rev() {
        let used: BTreeSet<usize> = nb.iter().map(|&w| colors[w]).collect();
        let c = (1..=4)
            .find(|k| !used.contains(k))
            .ok_or_else(|| GraphError::BadOperand("face not properly colored".into()))?;
        colors[v] = c;
    }
    Ok(seq_of_colors(&colors))
}

/// Extend a 4-wheel on the path through the two degree-3 vertices and the
/// central vertex, together with the natural coloring.
pub fn star_extend(
    g: &PlaneTriangulation,
    x: Vertex,
    u: Vertex,
    y: Vertex,
) -> Result<(PlaneTriangulation, ColorPartition)> {
    let colors = unique_coloring(g)?;
    let part = ColorPartition::from_colors(g, &colors)?;
    crate::wheelops::extend4_under_coloring(g, &part, x, u, y)
}

fn unique_coloring(g: &PlaneTriangulation) -> Result<Vec<usize>> {
    let parts = crate::coloring::enumerate_partitions(g);
    if parts.len() != 1 {
        return Err(GraphError::BadOperand(format!(
            "expected a uniquely 4-colorable graph, found {} partitions",
            parts.len()
        )));
    }
    Ok(parts[0].colors().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_vertex_always_valid() {
        let all = all_triangulations(8);
        for (_, graphs) in all {
            for g in graphs {
                for v in 0..g.n() {
                    let d = g.degree(v);
                    for ia in 0..d {
                        for ib in ia + 1..d {
                            let h = split_vertex(&g, v, ia, ib).unwrap();
                            assert!(h.diagnose().is_valid(), "split {v} {ia} {ib}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn splitter_counts_match_known_triangulation_numbers() {
        let all = all_triangulations(9);
        let counts: Vec<usize> = (4..=9).map(|n| all[&n].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 50]);
    }

    #[test]
    fn table_counts_through_order_10() {
        let mut set = CatalogSet::new();
        assert_eq!(set.get(6).unwrap().len(), 1);
        assert_eq!(set.get(7).unwrap().len(), 1);
        assert_eq!(set.get(8).unwrap().len(), 2);
        assert_eq!(set.get(9).unwrap().len(), 5);
        assert_eq!(set.get(10).unwrap().len(), 12);
    }

    #[test]
    fn order9_degree_sequences() {
        let mut set = CatalogSet::new();
        let mut seqs: Vec<String> = set
            .get(9)
            .unwrap()
            .entries
            .iter()
            .map(|e| e.degree_sequence.clone())
            .collect();
        seqs.sort();
        assert_eq!(
            seqs,
            vec![
                "444444477".to_string(),
                "444444666".to_string(),
                "444445566".to_string(),
                "444455556".to_string(),
                "444555555".to_string(),
            ]
        );
    }

    #[test]
    fn octahedron_single_plus2_child() {
        let g = fixtures::octahedron();
        let kids = children_plus2(&g);
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].degree_sequence_string(), "44444466");
    }

    #[test]
    fn recursive_counts_small() {
        let rec = generate_recursive(8);
        assert_eq!(rec[&4].len(), 1);
        assert_eq!(rec[&5].len(), 1);
        assert_eq!(rec[&6].len(), 1);
        assert!(is_recursive(&fixtures::k4()));
        assert!(!is_recursive(&fixtures::octahedron()));
    }

    #[test]
    fn family_counts() {
        assert_eq!(generate_22fwf(5).len(), 1);
        assert_eq!(generate_22fwf(6).len(), 1);
        assert_eq!(generate_22fwf(7).len(), 2);
        assert_eq!(generate_22fwf(8).len(), 3);
        assert_eq!(generate_22fwf(9).len(), 6);
    }

    #[test]
    fn decode_example_sequence() {
        let g = color_sequence_decode("ygbrybgyg").unwrap();
        assert_eq!(g.n(), 9);
        let back = color_sequence_encode(&g).unwrap();
        assert_eq!(back, "ygbrybgyg");
    }

    #[test]
    fn decode_k4() {
        let g = color_sequence_decode("ygbr").unwrap();
        assert_eq!(g.canonical_code(), fixtures::k4().canonical_code());
    }

    #[test]
    fn sequence_prefix_convention() {
        // The first six letters are fixed, and the seventh is y or g; the
        // adjacent type always reads y there.
        for n in 5..=9 {
            for e in generate_22fwf(n) {
                assert!(e.sequence.starts_with("ygbry"));
                if n >= 6 {
                    assert_eq!(e.sequence.as_bytes()[5], b'b');
                }
                if n >= 7 {
                    let c7 = e.sequence.as_bytes()[6] as char;
                    assert!(c7 == 'y' || c7 == 'g', "c7 = {c7}");
                    if e.adjacent_type {
                        assert_eq!(c7, 'y');
                    }
                    if c7 == 'g' {
                        assert!(!e.adjacent_type);
                    }
                }
            }
        }
    }
}
