//! Semi-maximal planar graphs, the Black-White coloring operation and its
//! improved backtracking variant, petal diagnostics, the even-cycle census,
//! and the 2-colorable-cycle decision with an independent brute-force oracle.

use crate::coloring::{enumerate_partitions_upto4, EmbeddedSubgraph};
use crate::embedding::{PlaneTriangulation, Vertex};
use crate::error::{GraphError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// One side of a cycle of length >= 4: the boundary plus that side's
/// interior, all inner faces triangles. Vertices are local ids; `host_map`
/// translates back.
#[derive(Debug, Clone)]
pub struct SemiMpg {
    rot: Vec<Vec<usize>>,
    pub boundary: Vec<usize>,
    pub host_map: Vec<Vertex>,
}

impl SemiMpg {
    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn interior(&self) -> Vec<usize> {
        let b: BTreeSet<usize> = self.boundary.iter().copied().collect();
        (0..self.n()).filter(|v| !b.contains(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rot[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// No odd cycle within the given vertex set.
    pub fn bipartite_on(&self, verts: &BTreeSet<usize>) -> bool {
        let mut side: BTreeMap<usize, u8> = BTreeMap::new();
        for &s in verts {
            if side.contains_key(&s) {
                continue;
            }
            side.insert(s, 0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[&u];
                for &w in &self.rot[u] {
                    if !verts.contains(&w) {
                        continue;
                    }
                    match side.get(&w) {
                        None => {
                            side.insert(w, 1 - su);
                            queue.push_back(w);
                        }
                        Some(&sw) => {
                            if sw == su {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Interior vertices adjacent to both parity classes of the boundary.
    pub fn gamma_star(&self) -> BTreeSet<usize> {
        let even: BTreeSet<usize> = self.boundary.iter().step_by(2).copied().collect();
        let odd: BTreeSet<usize> = self.boundary.iter().skip(1).step_by(2).copied().collect();
        self.interior()
            .into_iter()
            .filter(|&v| {
                let mut has_even = false;
                let mut has_odd = false;
                for &w in &self.rot[v] {
                    has_even |= even.contains(&w);
                    has_odd |= odd.contains(&w);
                }
                has_even && has_odd
            })
            .collect()
    }

    /// Interior vertices adjacent to any boundary vertex.
    pub fn gamma(&self) -> BTreeSet<usize> {
        let b: BTreeSet<usize> = self.boundary.iter().copied().collect();
        self.interior()
            .into_iter()
            .filter(|&v| self.rot[v].iter().any(|w| b.contains(w)))
            .collect()
    }

    /// Embedded view of the subgraph induced by a set of local vertices.
    pub fn induced(&self, verts: &BTreeSet<usize>) -> LocalSubgraph {
        LocalSubgraph {
            rot: verts
                .iter()
                .map(|&v| {
                    (
                        v,
                        self.rot[v]
                            .iter()
                            .copied()
                            .filter(|w| verts.contains(w))
                            .collect(),
                    )
                })
                .collect(),
        }
    }
}

/// Induced subgraph of a semi-maximal planar graph with inherited rotation.
#[derive(Debug, Clone)]
pub struct LocalSubgraph {
    pub rot: BTreeMap<usize, Vec<usize>>,
}

impl LocalSubgraph {
    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.values().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut out = Vec::new();
        for &s in self.rot.keys() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.rot[&u] {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_single_cycle(&self) -> Option<Vec<usize>> {
        if self.rot.is_empty() || self.rot.values().any(|r| r.len() != 2) {
            return None;
        }
        if self.components().len() != 1 {
            return None;
        }
        // Walk the cycle.
        let &start = self.rot.keys().next().unwrap();
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = self.rot[&start][0];
        while cur != start {
            cycle.push(cur);
            let next = self.rot[&cur]
                .iter()
                .copied()
                .find(|&w| w != prev)
                .unwrap();
            prev = cur;
            cur = next;
        }
        Some(cycle)
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        let mut edges = 0;
        for c in &comps {
            edges += c
                .iter()
                .map(|v| self.rot[v].iter().filter(|w| c.contains(w)).count())
                .sum::<usize>()
                / 2;
        }
        edges + comps.len() == self.order()
    }

    pub fn has_odd_cycle(&self) -> bool {
        let mut side: BTreeMap<usize, u8> = BTreeMap::new();
        for &s in self.rot.keys() {
            if side.contains_key(&s) {
                continue;
            }
            side.insert(s, 0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[&u];
                for &w in &self.rot[&u] {
                    match side.get(&w) {
                        None => {
                            side.insert(w, 1 - su);
                            queue.push_back(w);
                        }
                        Some(&sw) if sw == su => return true,
                        _ => {}
                    }
                }
            }
        }
        false
    }

    /// Face walks traced on the inherited rotations.
    pub fn face_walks(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut out = Vec::new();
        for (&u, r) in &self.rot {
            for &v in r {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a, b));
                    walk.push(a);
                    let rb = &self.rot[&b];
                    let pos = rb.iter().position(|&x| x == a).unwrap();
                    let w = rb[(pos + rb.len() - 1) % rb.len()];
                    a = b;
                    b = w;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                out.push(walk);
            }
        }
        out
    }
}

/// Split a host triangulation along a cycle into its two semi-maximal
/// planar graphs.
pub fn split_on_cycle(g: &PlaneTriangulation, cycle: &[Vertex]) -> Result<(SemiMpg, SemiMpg)> {
    let k = cycle.len();
    if k < 4 {
        return Err(GraphError::BadOperand("cycle must have length >= 4".into()));
    }
    let set: BTreeSet<Vertex> = cycle.iter().copied().collect();
    if set.len() != k {
        return Err(GraphError::BadOperand("repeated cycle vertex".into()));
    }
    for i in 0..k {
        if !g.adjacent(cycle[i], cycle[(i + 1) % k]) {
            return Err(GraphError::BadOperand("not a cycle of the graph".into()));
        }
    }
    let cyc_edges: BTreeSet<(Vertex, Vertex)> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    let faces = g.faces();
    let mut edge_faces: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        let [a, b, c] = f.vertices();
        for (u, v) in [(a, b), (b, c), (c, a)] {
            edge_faces.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    // Dual BFS without crossing cycle edges splits the faces into two sides.
    let mut side = vec![usize::MAX; faces.len()];
    let mut nsides = 0;
    for start in 0..faces.len() {
        if side[start] != usize::MAX {
            continue;
        }
        side[start] = nsides;
        let mut queue = VecDeque::from([start]);
        while let Some(fi) = queue.pop_front() {
            let [a, b, c] = faces[fi].vertices();
            for (u, v) in [(a, b), (b, c), (c, a)] {
                let key = (u.min(v), u.max(v));
                if cyc_edges.contains(&key) {
                    continue;
                }
                for &fj in &edge_faces[&key] {
                    if side[fj] == usize::MAX {
                        side[fj] = nsides;
                        queue.push_back(fj);
                    }
                }
            }
        }
        nsides += 1;
    }
    if nsides != 2 {
        return Err(GraphError::BadOperand(format!(
            "cycle does not split the sphere into two sides (got {nsides})"
        )));
    }
    let build = |want: usize| -> SemiMpg {
        // An edge belongs to the side of its faces; cycle edges to both.
        let mut keep_edge: BTreeSet<(Vertex, Vertex)> = cyc_edges.clone();
        for (&e, fs) in &edge_faces {
            if cyc_edges.contains(&e) {
                continue;
            }
            if fs.iter().all(|&f| side[f] == want) {
                keep_edge.insert(e);
            }
        }
        let mut verts: BTreeSet<Vertex> = set.clone();
        for &(u, v) in &keep_edge {
            verts.insert(u);
            verts.insert(v);
        }
        let mut host_map: Vec<Vertex> = cycle.to_vec();
        host_map.extend(verts.iter().copied().filter(|v| !set.contains(v)));
        let local: BTreeMap<Vertex, usize> =
            host_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let rot: Vec<Vec<usize>> = host_map
            .iter()
            .map(|&v| {
                g.rotation(v)
                    .iter()
                    .copied()
                    .filter(|&w| {
                        let key = (v.min(w), v.max(w));
                        keep_edge.contains(&key)
                    })
                    .map(|w| local[&w])
                    .collect()
            })
            .collect();
        SemiMpg {
            rot,
            boundary: (0..k).collect(),
            host_map,
        }
    };
    Ok((build(0), build(1)))
}

// ---- Black-White coloring ------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceReason {
    ForcedBlack,
    ForcedWhite,
    PetalBlack,
}

/// Result of the plain Black-White coloring operation.
#[derive(Debug, Clone)]
pub struct BwState {
    pub black: BTreeSet<usize>,
    pub white: BTreeSet<usize>,
    pub grey: BTreeSet<usize>,
    pub trace: Vec<(usize, usize, TraceReason)>, // (wave, vertex, reason)
    pub petal_appeared: bool,
    pub unique: bool,
    pub proper: bool,
}

/// Layered Black-White coloring: the boundary turns black and forced
/// assignments propagate in waves until nothing is determined; a vertex
/// infeasible both ways is flagged as a petal-vertex and colored black.
pub fn bw_operation(s: &SemiMpg) -> BwState {
    let mut black: BTreeSet<usize> = s.boundary.iter().copied().collect();
    let mut white: BTreeSet<usize> = BTreeSet::new();
    let mut grey: BTreeSet<usize> = s.interior().into_iter().collect();
    let mut trace = Vec::new();
    let mut petal = false;
    let mut wave = 0;
    loop {
        wave += 1;
        // One determined vertex per step, so the state stays proper until a
        // petal-vertex forces an impropriety.
        let mut assigned = None;
        if s.bipartite_on(&black) && s.bipartite_on(&white) {
            for &v in &grey {
                let mut b2 = black.clone();
                b2.insert(v);
                let black_ok = s.bipartite_on(&b2);
                let mut w2 = white.clone();
                w2.insert(v);
                let white_ok = s.bipartite_on(&w2);
                match (black_ok, white_ok) {
                    (false, false) => {
                        assigned = Some((v, true, TraceReason::PetalBlack));
                        petal = true;
                        break;
                    }
                    (true, false) => {
                        assigned = Some((v, true, TraceReason::ForcedBlack));
                        break;
                    }
                    (false, true) => {
                        assigned = Some((v, false, TraceReason::ForcedWhite));
                        break;
                    }
                    (true, true) => {}
                }
            }
        }
        let Some((v, to_black, reason)) = assigned else {
            break;
        };
        grey.remove(&v);
        if to_black {
            black.insert(v);
        } else {
            white.insert(v);
        }
        trace.push((wave, v, reason));
    }
    let proper = s.bipartite_on(&black) && s.bipartite_on(&white);
    BwState {
        unique: grey.is_empty(),
        proper,
        black,
        white,
        grey,
        trace,
        petal_appeared: petal,
    }
}

/// Proper test on an explicit bipartition.
pub fn is_proper(s: &SemiMpg, black: &BTreeSet<usize>, white: &BTreeSet<usize>) -> bool {
    s.bipartite_on(black) && s.bipartite_on(white)
}

/// Result of the improved operation: either a full proper coloring or a
/// failure with grey vertices remaining.
#[derive(Debug, Clone)]
pub struct ImprovedOutcome {
    pub success: bool,
    pub black: BTreeSet<usize>,
    pub white: BTreeSet<usize>,
    pub grey: BTreeSet<usize>,
    pub sign_vertices: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq)]
enum Assign {
    Black,
    White,
}

/// Improved Black-White coloring: layered forcing plus sign-vertex branching
/// with chronological backtracking (black first, then white), a complete
/// search over the grey vertices with unit propagation.
pub fn improved_bw_operation(s: &SemiMpg) -> ImprovedOutcome {
    let n = s.n();
    let mut color: Vec<Option<Assign>> = vec![None; n];
    for &b in &s.boundary {
        color[b] = Some(Assign::Black);
    }
    let mut trail: Vec<usize> = Vec::new();
    // (vertex, trail length before its assignment, tried_white)
    let mut decisions: Vec<(usize, usize, bool)> = Vec::new();
    let mut sign_vertices: Vec<usize> = Vec::new();

    let set_of = |color: &Vec<Option<Assign>>, which: Assign| -> BTreeSet<usize> {
        (0..n)
            .filter(|&v| color[v] == Some(which))
            .collect::<BTreeSet<usize>>()
    };

    fn propagate(
        s: &SemiMpg,
        color: &mut Vec<Option<Assign>>,
        trail: &mut Vec<usize>,
    ) -> bool {
        loop {
            let black: BTreeSet<usize> = (0..s.n())
                .filter(|&v| color[v] == Some(Assign::Black))
                .collect();
            let white: BTreeSet<usize> = (0..s.n())
                .filter(|&v| color[v] == Some(Assign::White))
                .collect();
            if !s.bipartite_on(&black) || !s.bipartite_on(&white) {
                return false;
            }
            let mut acted = false;
            for v in 0..s.n() {
                if color[v].is_some() {
                    continue;
                }
                let mut b2 = black.clone();
                b2.insert(v);
                let black_ok = s.bipartite_on(&b2);
                let mut w2 = white.clone();
                w2.insert(v);
                let white_ok = s.bipartite_on(&w2);
                match (black_ok, white_ok) {
                    (false, false) => return false,
                    (true, false) => {
                        color[v] = Some(Assign::Black);
                        trail.push(v);
                        acted = true;
                    }
                    (false, true) => {
                        color[v] = Some(Assign::White);
                        trail.push(v);
                        acted = true;
                    }
                    (true, true) => {}
                }
                if acted {
                    break;
                }
            }
            if !acted {
                return true;
            }
        }
    }

    let mut ok = propagate(s, &mut color, &mut trail);
    loop {
        if !ok {
            // Chronological backtracking: recolor the latest black
            // sign-vertex white, greying out everything after it.
            let mut repaired = false;
            while let Some((v, mark, tried_white)) = decisions.pop() {
                while trail.len() > mark {
                    let u = trail.pop().unwrap();
                    color[u] = None;
                }
                color[v] = None;
                if !tried_white {
                    color[v] = Some(Assign::White);
                    trail.push(v);
                    decisions.push((v, mark, true));
                    repaired = true;
                    break;
                }
            }
            if !repaired {
                let black = set_of(&color, Assign::Black);
                let white = set_of(&color, Assign::White);
                let grey: BTreeSet<usize> = (0..n).filter(|&v| color[v].is_none()).collect();
                return ImprovedOutcome {
                    success: false,
                    black,
                    white,
                    grey,
                    sign_vertices,
                };
            }
            ok = propagate(s, &mut color, &mut trail);
            continue;
        }
        let grey: Vec<usize> = (0..n).filter(|&v| color[v].is_none()).collect();
        if grey.is_empty() {
            let black = set_of(&color, Assign::Black);
            let white = set_of(&color, Assign::White);
            return ImprovedOutcome {
                success: true,
                black,
                white,
                grey: BTreeSet::new(),
                sign_vertices,
            };
        }
        // Sign-vertex: most colored neighbors, smallest id breaking ties.
        let v = grey
            .iter()
            .copied()
            .max_by_key(|&v| {
                let colored = s.rot[v].iter().filter(|&&w| color[w].is_some()).count();
                (colored, usize::MAX - v)
            })
            .unwrap();
        let mark = trail.len();
        color[v] = Some(Assign::Black);
        trail.push(v);
        decisions.push((v, mark, false));
        if !sign_vertices.contains(&v) {
            sign_vertices.push(v);
        }
        ok = propagate(s, &mut color, &mut trail);
    }
}

/// Certificate of a positive decision: the proper side colorings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BwCertificate {
    pub side1_black: Vec<Vertex>,
    pub side1_white: Vec<Vertex>,
    pub side2_black: Vec<Vertex>,
    pub side2_white: Vec<Vertex>,
}

/// Decide whether the even cycle is 2-colorable by running the improved
/// operation on both semi-maximal planar graphs.
pub fn is_2colorable_cycle(
    g: &PlaneTriangulation,
    cycle: &[Vertex],
) -> Result<(bool, Option<BwCertificate>)> {
    if cycle.len() % 2 != 0 {
        return Err(GraphError::BadOperand("cycle must be even".into()));
    }
    let (s1, s2) = split_on_cycle(g, cycle)?;
    let r1 = improved_bw_operation(&s1);
    if !r1.success {
        return Ok((false, None));
    }
    let r2 = improved_bw_operation(&s2);
    if !r2.success {
        return Ok((false, None));
    }
    let to_host = |s: &SemiMpg, set: &BTreeSet<usize>| -> Vec<Vertex> {
        set.iter().map(|&v| s.host_map[v]).collect()
    };
    Ok((
        true,
        Some(BwCertificate {
            side1_black: to_host(&s1, &r1.black),
            side1_white: to_host(&s1, &r1.white),
            side2_black: to_host(&s2, &r2.black),
            side2_white: to_host(&s2, &r2.white),
        }),
    ))
}

/// Brute-force oracle: the cycle is 2-colorable exactly when some proper
/// color-class partition of the host colors it with two classes.
pub fn oracle_2colorable(g: &PlaneTriangulation, cycle: &[Vertex]) -> bool {
    for p in enumerate_partitions_upto4(g) {
        let used: BTreeSet<usize> = cycle.iter().map(|&v| p.color_of(v)).collect();
        if used.len() == 2 {
            return true;
        }
    }
    false
}

/// One-sided decision on a semi-maximal planar graph (even boundary).
pub fn side_2colorable(s: &SemiMpg) -> bool {
    if s.boundary.len() % 2 != 0 {
        return false;
    }
    improved_bw_operation(s).success
}

// ---- petal diagnostics ------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PetalReport {
    pub petal_pairs: Vec<(usize, usize)>,
    /// Maximal petal-sets (cliques in the petal-graph).
    pub petal_sets: Vec<Vec<usize>>,
    pub max_set_size: usize,
    pub petal_graph_vertices: Vec<usize>,
    /// Petal-graph edges (same as pairs) and whether it has an odd cycle.
    pub petal_graph_has_odd_cycle: bool,
    pub exclusive_petal_graph: bool,
    pub exclusive_black_white_path: bool,
    /// Petal-syndrome: a general petal-vertex exists.
    pub petal_syndrome: bool,
    pub general_petal_vertices: Vec<usize>,
}

fn with<T: Ord + Copy>(base: &BTreeSet<T>, extra: &[T]) -> BTreeSet<T> {
    let mut s = base.clone();
    s.extend(extra.iter().copied());
    s
}

/// Unit propagation of one tentative recoloring; returns the fixed sets
/// (black additions, white additions) or None on immediate contradiction.
fn fixed_sets(
    s: &SemiMpg,
    black: &BTreeSet<usize>,
    white: &BTreeSet<usize>,
    grey: &BTreeSet<usize>,
    v: usize,
    to_black: bool,
) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let mut b = black.clone();
    let mut w = white.clone();
    let mut g = grey.clone();
    g.remove(&v);
    if to_black {
        b.insert(v);
    } else {
        w.insert(v);
    }
    loop {
        if !s.bipartite_on(&b) || !s.bipartite_on(&w) {
            return None;
        }
        let mut acted = false;
        for &u in g.clone().iter() {
            let bu = with(&b, &[u]);
            let wu = with(&w, &[u]);
            let black_ok = s.bipartite_on(&bu);
            let white_ok = s.bipartite_on(&wu);
            match (black_ok, white_ok) {
                (false, false) => return None,
                (true, false) => {
                    b.insert(u);
                    g.remove(&u);
                    acted = true;
                }
                (false, true) => {
                    w.insert(u);
                    g.remove(&u);
                    acted = true;
                }
                (true, true) => {}
            }
        }
        if !acted {
            let db: BTreeSet<usize> = b.difference(black).copied().collect();
            let dw: BTreeSet<usize> = w.difference(white).copied().collect();
            return Some((db, dw));
        }
    }
}

/// Pairwise petal relations among the grey vertices of a stopped state.
pub fn petal_diagnostics(s: &SemiMpg, state: &BwState) -> PetalReport {
    let a: Vec<usize> = state.grey.iter().copied().collect();
    let mut pairs = Vec::new();
    for (i, &u) in a.iter().enumerate() {
        for &v in a.iter().skip(i + 1) {
            let bb = !s.bipartite_on(&with(&state.black, &[u, v]));
            let ww = !s.bipartite_on(&with(&state.white, &[u, v]));
            if bb && ww {
                pairs.push((u, v));
            }
        }
    }
    let pg_vertices: BTreeSet<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let pg_adj: BTreeMap<usize, BTreeSet<usize>> = pg_vertices
        .iter()
        .map(|&v| {
            (
                v,
                pairs
                    .iter()
                    .filter_map(|&(x, y)| {
                        if x == v {
                            Some(y)
                        } else if y == v {
                            Some(x)
                        } else {
                            None
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    // Maximal cliques by brute force (petal-graphs are tiny).
    let pg: Vec<usize> = pg_vertices.iter().copied().collect();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let m = pg.len();
    for mask in 1u64..(1 << m.min(20)) {
        let members: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| pg[i]).collect();
        if members.len() < 2 {
            continue;
        }
        let ok = members.iter().enumerate().all(|(i, &u)| {
            members
                .iter()
                .skip(i + 1)
                .all(|&v| pg_adj[&u].contains(&v))
        });
        if ok {
            cliques.push(members);
        }
    }
    let maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|c| {
            !cliques
                .iter()
                .any(|d| d.len() > c.len() && c.iter().all(|x| d.contains(x)))
        })
        .cloned()
        .collect();
    let max_set_size = maximal.iter().map(|c| c.len()).max().unwrap_or(0);
    // Odd cycle in the petal-graph.
    let pg_odd = {
        let mut side: BTreeMap<usize, u8> = BTreeMap::new();
        let mut odd = false;
        for &s0 in &pg {
            if side.contains_key(&s0) {
                continue;
            }
            side.insert(s0, 0);
            let mut queue = VecDeque::from([s0]);
            while let Some(u) = queue.pop_front() {
                let su = side[&u];
                for &w in &pg_adj[&u] {
                    match side.get(&w) {
                        None => {
                            side.insert(w, 1 - su);
                            queue.push_back(w);
                        }
                        Some(&sw) if sw == su => odd = true,
                        _ => {}
                    }
                }
            }
        }
        odd
    };
    // Exclusive petal-graph: bipartite with parts (X, Y) satisfying the two
    // stated odd-cycle conditions.
    let exclusive_pg = if !pg.is_empty() && !pg_odd {
        let (x, y) = bipartition(&pg, &pg_adj);
        let xb = !s.bipartite_on(&with(&state.black, &x));
        let yb = !s.bipartite_on(&with(&state.black, &y));
        let xw = !s.bipartite_on(&with(&state.white, &x));
        // The second disjunct of each written condition names W u X twice.
        let cond1 = (xb && yb) || xw;
        let cond2 = (xb && xw) || (yb && xw);
        cond1 && cond2
    } else {
        false
    };
    // General petal-vertices (petal-syndrome).
    let mut general = Vec::new();
    for &u in &a {
        let white_side = fixed_sets(s, &state.black, &state.white, &state.grey, u, false);
        let black_side = fixed_sets(s, &state.black, &state.white, &state.grey, u, true);
        let bad_white = white_side.is_none();
        let bad_black = black_side.is_none();
        let mut is_general = bad_white && bad_black;
        if !is_general {
            // Conditions on the petal-graphs of the extended colorings.
            let check = |ext: &Option<(BTreeSet<usize>, BTreeSet<usize>)>| -> (bool, bool) {
                match ext {
                    None => (true, false),
                    Some((db, dw)) => {
                        let b2 = with(&state.black, &db.iter().copied().collect::<Vec<_>>());
                        let w2 = with(&state.white, &dw.iter().copied().collect::<Vec<_>>());
                        let odd = !s.bipartite_on(&b2) || !s.bipartite_on(&w2);
                        let mut g2 = state.grey.clone();
                        g2.remove(&u);
                        for x in db.iter().chain(dw.iter()) {
                            g2.remove(x);
                        }
                        let sub_state = BwState {
                            black: b2,
                            white: w2,
                            grey: g2,
                            trace: Vec::new(),
                            petal_appeared: false,
                            unique: false,
                            proper: true,
                        };
                        let sub_pairs = petal_pairs_only(s, &sub_state);
                        let cyc = petal_graph_cycle_flags(&sub_pairs);
                        (odd, cyc.0 || cyc.1)
                    }
                }
            };
            let (odd_w, pg_cycle_w) = check(&white_side);
            let (odd_b, pg_cycle_b) = check(&black_side);
            is_general = (odd_w && odd_b)
                || (pg_cycle_w && pg_cycle_b)
                || (odd_w && pg_cycle_b)
                || (odd_b && pg_cycle_w);
        }
        if is_general {
            general.push(u);
        }
    }
    // Exclusive Black-White paths: adjacent grey runs whose two tentative
    // recolorings both end in odd cycles among the fixed sets.
    let mut exclusive_path = false;
    for &u in &a {
        let w_side = fixed_sets(s, &state.black, &state.white, &state.grey, u, false);
        let b_side = fixed_sets(s, &state.black, &state.white, &state.grey, u, true);
        match (&b_side, &w_side) {
            (None, None) => exclusive_path = true,
            (Some((db, dw)), Some((eb, ew))) => {
                let odd_b = subset_odd(s, db) || subset_odd(s, dw);
                let odd_w = subset_odd(s, eb) || subset_odd(s, ew);
                if odd_b && odd_w {
                    exclusive_path = true;
                }
            }
            _ => {}
        }
    }
    PetalReport {
        petal_syndrome: !general.is_empty(),
        general_petal_vertices: general,
        petal_pairs: pairs,
        petal_sets: maximal,
        max_set_size,
        petal_graph_vertices: pg,
        petal_graph_has_odd_cycle: pg_odd,
        exclusive_petal_graph: exclusive_pg,
        exclusive_black_white_path: exclusive_path,
    }
}

fn subset_odd(s: &SemiMpg, set: &BTreeSet<usize>) -> bool {
    !s.bipartite_on(set)
}

fn petal_pairs_only(s: &SemiMpg, state: &BwState) -> Vec<(usize, usize)> {
    let a: Vec<usize> = state.grey.iter().copied().collect();
    let mut pairs = Vec::new();
    for (i, &u) in a.iter().enumerate() {
        for &v in a.iter().skip(i + 1) {
            let bb = !s.bipartite_on(&with(&state.black, &[u, v]));
            let ww = !s.bipartite_on(&with(&state.white, &[u, v]));
            if bb && ww {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

fn petal_graph_cycle_flags(pairs: &[(usize, usize)]) -> (bool, bool) {
    // (has a cycle, has an odd cycle)
    let vs: BTreeSet<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let adj: BTreeMap<usize, Vec<usize>> = vs
        .iter()
        .map(|&v| {
            (
                v,
                pairs
                    .iter()
                    .filter_map(|&(x, y)| {
                        if x == v {
                            Some(y)
                        } else if y == v {
                            Some(x)
                        } else {
                            None
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let edges = pairs.len();
    let mut comps = 0;
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut odd = false;
    let mut side: BTreeMap<usize, u8> = BTreeMap::new();
    for &s0 in &vs {
        if seen.contains(&s0) {
            continue;
        }
        comps += 1;
        side.insert(s0, 0);
        seen.insert(s0);
        let mut queue = VecDeque::from([s0]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                if seen.insert(w) {
                    side.insert(w, 1 - side[&u]);
                    queue.push_back(w);
                } else if side[&w] == side[&u] {
                    odd = true;
                }
            }
        }
    }
    (edges + comps > vs.len(), odd)
}

fn bipartition(
    vs: &[usize],
    adj: &BTreeMap<usize, BTreeSet<usize>>,
) -> (Vec<usize>, Vec<usize>) {
    let mut side: BTreeMap<usize, u8> = BTreeMap::new();
    for &s0 in vs {
        if side.contains_key(&s0) {
            continue;
        }
        side.insert(s0, 0);
        let mut queue = VecDeque::from([s0]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                if !side.contains_key(&w) {
                    side.insert(w, 1 - side[&u]);
                    queue.push_back(w);
                }
            }
        }
    }
    let x = vs.iter().copied().filter(|v| side[v] == 0).collect();
    let y = vs.iter().copied().filter(|v| side[v] == 1).collect();
    (x, y)
}

// ---- even-cycle census ---------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleCensus {
    pub basic_cycles: usize,
    pub chord_cycles: usize,
    pub even_cycles: usize,
    pub odd_cycles: usize,
    pub semi_mpg_count: usize,
    pub by_length_basic: BTreeMap<usize, usize>,
    pub by_length_chord: BTreeMap<usize, usize>,
}

/// All simple cycles of length >= `min_len` (and at most `max_len` when
/// given), each reported once with its minimum vertex first.
pub fn all_cycles(
    g: &PlaneTriangulation,
    min_len: usize,
    max_len: Option<usize>,
) -> Vec<Vec<Vertex>> {
    let cap = max_len.unwrap_or(g.n());
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on: BTreeSet<Vertex> = BTreeSet::from([s]);
        cycles_rec(g, s, &mut path, &mut on, min_len, cap, &mut out);
    }
    out
}

fn cycles_rec(
    g: &PlaneTriangulation,
    s: Vertex,
    path: &mut Vec<Vertex>,
    on: &mut BTreeSet<Vertex>,
    min_len: usize,
    cap: usize,
    out: &mut Vec<Vec<Vertex>>,
) {
    let u = *path.last().unwrap();
    for &w in g.neighbors(u) {
        if w == s && path.len() >= min_len && path[1] < *path.last().unwrap() {
            out.push(path.clone());
        } else if w > s && !on.contains(&w) && path.len() < cap {
            path.push(w);
            on.insert(w);
            cycles_rec(g, s, path, on, min_len, cap, out);
            path.pop();
            on.remove(&w);
        }
    }
}

pub fn is_basic_cycle(g: &PlaneTriangulation, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 1..k {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == k - 1);
            if !adjacent_on_cycle && g.adjacent(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

pub fn even_cycle_census(g: &PlaneTriangulation, max_len: Option<usize>) -> CycleCensus {
    let cycles = all_cycles(g, 4, max_len);
    let mut census = CycleCensus {
        basic_cycles: 0,
        chord_cycles: 0,
        even_cycles: 0,
        odd_cycles: 0,
        semi_mpg_count: 0,
        by_length_basic: BTreeMap::new(),
        by_length_chord: BTreeMap::new(),
    };
    for c in &cycles {
        if is_basic_cycle(g, c) {
            census.basic_cycles += 1;
            *census.by_length_basic.entry(c.len()).or_insert(0) += 1;
        } else {
            census.chord_cycles += 1;
            *census.by_length_chord.entry(c.len()).or_insert(0) += 1;
        }
        if c.len() % 2 == 0 {
            census.even_cycles += 1;
        } else {
            census.odd_cycles += 1;
        }
        census.semi_mpg_count += 2;
    }
    census
}

/// Predicted and measured length of the cycle induced by the neighbors of a
/// connected induced subgraph `h` of `g`: the degree sum minus internal
/// degrees minus the boundary-walk length.
pub fn neighbor_cycle_length(g: &PlaneTriangulation, h: &[Vertex]) -> Option<(usize, usize)> {
    let hset: BTreeSet<Vertex> = h.iter().copied().collect();
    let sub = EmbeddedSubgraph::from_edge_filter(g, h, |_, _| true);
    if !sub.is_connected() {
        return None;
    }
    let nbrs: Vec<Vertex> = (0..g.n())
        .filter(|&v| !hset.contains(&v) && g.neighbors(v).iter().any(|w| hset.contains(w)))
        .collect();
    let nb_sub = EmbeddedSubgraph::from_edge_filter(g, &nbrs, |_, _| true);
    // The neighbor set must induce a single cycle.
    if nbrs.is_empty() || nbrs.iter().any(|&v| nb_sub.degree(v) != 2) || !nb_sub.is_connected() {
        return None;
    }
    if nb_sub.edge_count() != nbrs.len() {
        return None;
    }
    let measured = nbrs.len();
    let boundary = if h.len() == 1 {
        0
    } else {
        // The unique face walk of the subgraph that is not a host face.
        let walks = sub.face_walks();
        let host_faces: BTreeSet<[Vertex; 3]> = g.faces().iter().map(|f| f.sorted()).collect();
        let mut outer = None;
        for w in &walks {
            let is_host_face = w.len() == 3 && {
                let mut t = [w[0], w[1], w[2]];
                t.sort_unstable();
                host_faces.contains(&t)
            };
            if !is_host_face {
                if outer.is_some() {
                    return None;
                }
                outer = Some(w.len());
            }
        }
        outer?
    };
    let dg: usize = h.iter().map(|&v| g.degree(v)).sum();
    let dh: usize = 2 * sub.edge_count();
    let predicted = dg.checked_sub(dh + boundary)?;
    Some((predicted, measured))
}

// ---- closed-cycle classification -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedKind {
    NotClosed,
    CycleCycle { inner_even: bool },
    CycleTree,
    CycleFence { fence: bool },
}

/// Closed test and subcase classification of a semi-maximal planar graph.
/// Boundary chords put a side outside the closed taxonomy: the taxonomy's
/// reduction arguments read the boundary as a basic cycle.
pub fn classify_closed(s: &SemiMpg) -> ClosedKind {
    let k = s.boundary.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && s.adjacent(s.boundary[i], s.boundary[j]) {
                return ClosedKind::NotClosed;
            }
        }
    }
    let gamma = s.gamma();
    let gamma_star = s.gamma_star();
    if gamma != gamma_star {
        return ClosedKind::NotClosed;
    }
    let interior: BTreeSet<usize> = s.interior().into_iter().collect();
    let ind = s.induced(&gamma_star);
    if let Some(cycle) = ind.is_single_cycle() {
        return ClosedKind::CycleCycle {
            inner_even: cycle.len() % 2 == 0,
        };
    }
    if ind.is_forest() && gamma_star == interior {
        return ClosedKind::CycleTree;
    }
    // Fence when every face of the induced layer is even (no odd cycles).
    let fence = !ind.has_odd_cycle() && ind.face_walks().iter().all(|w| w.len() % 2 == 0);
    ClosedKind::CycleFence { fence }
}

/// The inner semi-maximal planar graph of a closed cycle-cycle instance:
/// interior of `s` with the enclosing layer as its boundary.
pub fn inner_semi(s: &SemiMpg) -> Option<SemiMpg> {
    let gamma_star = s.gamma_star();
    let ind = s.induced(&gamma_star);
    let cycle = ind.is_single_cycle()?;
    let interior: BTreeSet<usize> = s.interior().into_iter().collect();
    let mut host_map: Vec<Vertex> = cycle.iter().map(|&v| s.host_map[v]).collect();
    let mut order: Vec<usize> = cycle.clone();
    for &v in &interior {
        if !cycle.contains(&v) {
            order.push(v);
            host_map.push(s.host_map[v]);
        }
    }
    let local: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rot: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            s.rot[v]
                .iter()
                .copied()
                .filter(|w| interior.contains(w))
                .map(|w| local[&w])
                .collect()
        })
        .collect();
    Some(SemiMpg {
        rot,
        boundary: (0..cycle.len()).collect(),
        host_map,
    })
}
