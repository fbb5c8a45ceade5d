//! Combinatorial-embedding representation of plane triangulations.
//!
//! A triangulation is stored as a rotation system: for every vertex the
//! clockwise cyclic sequence of its neighbors, plus a designated outer face.
//! All operations treat the value as immutable; surgery produces new values.

use crate::error::{GraphError, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

pub type Vertex = usize;

/// An oriented triangular face, normalized to start at its smallest vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceTriple(pub [Vertex; 3]);

impl FaceTriple {
    /// Normalize a boundary walk `(a, b, c)`: rotate so the smallest vertex
    /// comes first, keeping the orientation.
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        while t[0] != a.min(b).min(c) {
            t.rotate_left(1);
        }
        FaceTriple(t)
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    /// Set comparison that ignores orientation.
    pub fn same_set(&self, other: &FaceTriple) -> bool {
        let mut a = self.0;
        let mut b = other.0;
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn sorted(&self) -> [Vertex; 3] {
        let mut t = self.0;
        t.sort_unstable();
        t
    }
}

/// Iso-invariant byte label; equal codes identify isomorphic triangulations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Outcome of `validate_maximal_planar`; `Valid` or the first violated invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnosis {
    Valid,
    TooFewVertices(usize),
    Loop(Vertex),
    RepeatedNeighbor(Vertex, Vertex),
    Asymmetric(Vertex, Vertex),
    WrongEdgeCount { expected: usize, actual: usize },
    Disconnected,
    NonTriangularFace(Vec<Vertex>),
    WrongFaceCount { expected: usize, actual: usize },
    OuterNotAFace([Vertex; 3]),
}

impl Diagnosis {
    pub fn is_valid(&self) -> bool {
        matches!(self, Diagnosis::Valid)
    }
}

/// A maximal planar graph with its planar embedding and outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTriangulation {
    rot: Vec<Vec<Vertex>>,
    outer: [Vertex; 3],
}

impl PlaneTriangulation {
    /// Build from a rotation system, validating every invariant.
    pub fn from_rotation(rot: Vec<Vec<Vertex>>, outer: [Vertex; 3]) -> Result<Self> {
        let g = PlaneTriangulation { rot, outer };
        match g.diagnose() {
            Diagnosis::Valid => Ok(g),
            d => Err(GraphError::Structural(format!("{d:?}"))),
        }
    }

    /// Build without validation, for surgery whose output shape is already
    /// certain (validated in debug builds by the callers).
    pub fn from_rotation_unchecked(rot: Vec<Vec<Vertex>>, outer: [Vertex; 3]) -> Self {
        PlaneTriangulation { rot, outer }
    }

    /// Build from an (unoriented) list of triangular faces. Orientations are
    /// assigned by breadth-first propagation from the lexicographically
    /// smallest face, so the result is deterministic.
    pub fn from_faces(n: usize, faces: &[[Vertex; 3]]) -> Result<Self> {
        if n < 3 {
            return Err(GraphError::Structural("need at least 3 vertices".into()));
        }
        if faces.len() != 2 * n - 4 {
            return Err(GraphError::Structural(format!(
                "face count {} != 2n-4 = {}",
                faces.len(),
                2 * n - 4
            )));
        }
        // Each undirected edge must lie in exactly two faces.
        let mut edge_faces: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            let [a, b, c] = *f;
            if a == b || b == c || a == c || a >= n || b >= n || c >= n {
                return Err(GraphError::Structural(format!("bad face {f:?}")));
            }
            for (u, v) in [(a, b), (b, c), (c, a)] {
                edge_faces
                    .entry((u.min(v), u.max(v)))
                    .or_default()
                    .push(i);
            }
        }
        for (e, fs) in &edge_faces {
            if fs.len() != 2 {
                return Err(GraphError::Structural(format!(
                    "edge {e:?} lies in {} faces, expected 2",
                    fs.len()
                )));
            }
        }
        // Orient faces consistently: faces sharing an edge traverse it in
        // opposite directions.
        let seed = (0..faces.len())
            .min_by_key(|&i| {
                let mut t = faces[i];
                t.sort_unstable();
                t
            })
            .unwrap();
        let mut oriented: Vec<Option<[Vertex; 3]>> = vec![None; faces.len()];
        let mut s = faces[seed];
        s.sort_unstable();
        oriented[seed] = Some(s);
        let mut queue = VecDeque::from([seed]);
        while let Some(i) = queue.pop_front() {
            let [a, b, c] = oriented[i].unwrap();
            for (u, v) in [(a, b), (b, c), (c, a)] {
                let key = (u.min(v), u.max(v));
                for &j in &edge_faces[&key] {
                    if j == i || oriented[j].is_some() {
                        continue;
                    }
                    // Face j must traverse this edge as v -> u.
                    let [x, y, z] = faces[j];
                    let w = [x, y, z].iter().copied().find(|&w| w != u && w != v).unwrap();
                    oriented[j] = Some([v, u, w]);
                    queue.push_back(j);
                }
            }
        }
        if oriented.iter().any(|o| o.is_none()) {
            return Err(GraphError::Structural("face complex is disconnected".into()));
        }
        // Check every directed edge is used exactly once.
        let mut darts: HashSet<(Vertex, Vertex)> = HashSet::new();
        for f in oriented.iter().flatten() {
            let [a, b, c] = *f;
            for d in [(a, b), (b, c), (c, a)] {
                if !darts.insert(d) {
                    return Err(GraphError::Structural(format!(
                        "directed edge {d:?} used twice; face set not orientable"
                    )));
                }
            }
        }
        // Around v the oriented face (a, v, b) forces b immediately before a
        // in rot(v) under the tracing convention below.
        let mut succ: Vec<HashMap<Vertex, Vertex>> = vec![HashMap::new(); n];
        for f in oriented.iter().flatten() {
            let [a, b, c] = *f;
            // At b: (c, a) consecutive; at c: (a, b); at a: (b, c).
            succ[b].insert(c, a);
            succ[c].insert(a, b);
            succ[a].insert(b, c);
        }
        let mut rot: Vec<Vec<Vertex>> = Vec::with_capacity(n);
        for v in 0..n {
            let deg = succ[v].len();
            if deg == 0 {
                return Err(GraphError::Structural(format!("isolated vertex {v}")));
            }
            let start = *succ[v].keys().min().unwrap();
            let mut cycle = vec![start];
            let mut cur = start;
            loop {
                cur = *succ[v]
                    .get(&cur)
                    .ok_or_else(|| GraphError::Structural(format!("broken link at {v}")))?;
                if cur == start {
                    break;
                }
                cycle.push(cur);
                if cycle.len() > deg {
                    return Err(GraphError::Structural(format!(
                        "rotation at {v} does not close into one cycle"
                    )));
                }
            }
            if cycle.len() != deg {
                return Err(GraphError::Structural(format!(
                    "rotation at {v} splits into several cycles"
                )));
            }
            rot.push(cycle);
        }
        let outer = {
            let f = oriented.iter().flatten().min_by_key(|f| f.iter().min().copied()).unwrap();
            let ft = FaceTriple::new(f[0], f[1], f[2]);
            ft.0
        };
        let mut g = PlaneTriangulation { rot, outer };
        g.outer = g.faces().into_iter().min_by_key(|f| f.sorted()).unwrap().0;
        match g.diagnose() {
            Diagnosis::Valid => Ok(g),
            d => Err(GraphError::Structural(format!("{d:?}"))),
        }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.rot.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.rot.iter().map(|r| r.len()).collect();
        d.sort_unstable();
        d
    }

    pub fn degree_sequence_string(&self) -> String {
        self.degree_sequence().iter().map(|d| d.to_string()).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.rot.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rot[u].contains(&v)
    }

    pub fn outer_face(&self) -> [Vertex; 3] {
        self.outer
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.rot[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Trace all faces of the embedding. The directed edge `(u, v)` continues
    /// to `(v, w)` where `w` immediately precedes `u` in the rotation at `v`.
    pub fn faces(&self) -> Vec<FaceTriple> {
        let mut seen: HashSet<(Vertex, Vertex)> = HashSet::new();
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.rot[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut walk = vec![u];
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a, b));
                    let pos = self.rot[b].iter().position(|&x| x == a).unwrap();
                    let w = self.rot[b][(pos + self.rot[b].len() - 1) % self.rot[b].len()];
                    walk.push(b);
                    a = b;
                    b = w;
                    if a == u && b == v {
                        break;
                    }
                    if walk.len() > 3 * self.n() {
                        break;
                    }
                }
                walk.pop();
                if walk.len() == 3 {
                    out.push(FaceTriple::new(walk[0], walk[1], walk[2]));
                } else {
                    out.push(FaceTriple([walk[0], walk[0], walk[0]]));
                }
            }
        }
        out
    }

    /// Face walks of arbitrary length (used by diagnosis before triangularity
    /// is known).
    fn face_walks(&self) -> Vec<Vec<Vertex>> {
        let mut seen: HashSet<(Vertex, Vertex)> = HashSet::new();
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.rot[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a, b));
                    walk.push(a);
                    let pos = match self.rot[b].iter().position(|&x| x == a) {
                        Some(p) => p,
                        None => return vec![walk],
                    };
                    let w = self.rot[b][(pos + self.rot[b].len() - 1) % self.rot[b].len()];
                    a = b;
                    b = w;
                    if (a, b) == (u, v) {
                        break;
                    }
                    if walk.len() > 6 * self.n() + 6 {
                        break;
                    }
                }
                out.push(walk);
            }
        }
        out
    }

    pub fn is_face(&self, f: &FaceTriple) -> bool {
        self.faces().iter().any(|g| g.same_set(f))
    }

    /// Full invariant check; returns the first violation found.
    pub fn diagnose(&self) -> Diagnosis {
        let n = self.n();
        if n < 3 {
            return Diagnosis::TooFewVertices(n);
        }
        for v in 0..n {
            let mut seen = HashSet::new();
            for &u in &self.rot[v] {
                if u == v {
                    return Diagnosis::Loop(v);
                }
                if !seen.insert(u) {
                    return Diagnosis::RepeatedNeighbor(v, u);
                }
                if u >= n || !self.rot[u].contains(&v) {
                    return Diagnosis::Asymmetric(v, u);
                }
            }
        }
        let m = self.m();
        if m != 3 * n - 6 {
            return Diagnosis::WrongEdgeCount {
                expected: 3 * n - 6,
                actual: m,
            };
        }
        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.rot[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != n {
            return Diagnosis::Disconnected;
        }
        let walks = self.face_walks();
        for w in &walks {
            if w.len() != 3 {
                return Diagnosis::NonTriangularFace(w.clone());
            }
        }
        if walks.len() != 2 * n - 4 {
            return Diagnosis::WrongFaceCount {
                expected: 2 * n - 4,
                actual: walks.len(),
            };
        }
        let outer = FaceTriple::new(self.outer[0], self.outer[1], self.outer[2]);
        if !self.faces().iter().any(|f| f.same_set(&outer)) {
            return Diagnosis::OuterNotAFace(self.outer);
        }
        Diagnosis::Valid
    }

    /// Re-root the embedding at a different outer face; the underlying map is
    /// unchanged, so the canonical code is too.
    pub fn reroot_outer_face(&self, f: FaceTriple) -> Result<Self> {
        let face = self
            .faces()
            .into_iter()
            .find(|g| g.same_set(&f))
            .ok_or(GraphError::NotAFace(f.0))?;
        Ok(PlaneTriangulation {
            rot: self.rot.clone(),
            outer: face.0,
        })
    }

    /// Mirror image: all rotations reversed. Same abstract graph.
    pub fn mirrored(&self) -> Self {
        let rot = self
            .rot
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.reverse();
                r
            })
            .collect();
        PlaneTriangulation {
            rot,
            outer: [self.outer[0], self.outer[2], self.outer[1]],
        }
    }

    fn code_from(&self, u0: Vertex, v0: Vertex, dir: isize, best: Option<&[u8]>) -> Option<Vec<u8>> {
        let n = self.n();
        const UNSET: usize = usize::MAX;
        let mut lab = vec![UNSET; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        let mut entry: Vec<Vertex> = vec![UNSET; n];
        lab[u0] = 0;
        lab[v0] = 1;
        order.push(u0);
        order.push(v0);
        entry[u0] = v0;
        entry[v0] = u0;
        let mut out: Vec<u8> = Vec::with_capacity(2 * self.m() + n);
        let mut next = 2;
        let mut i = 0;
        // Prune only while the prefix still ties the incumbent.
        let mut tied = best.is_some();
        while i < order.len() {
            let x = order[i];
            let r = &self.rot[x];
            let d = r.len();
            let start = r.iter().position(|&w| w == entry[x]).unwrap();
            for k in 0..d {
                let idx = ((start as isize + dir * k as isize).rem_euclid(d as isize)) as usize;
                let w = r[idx];
                if lab[w] == UNSET {
                    lab[w] = next;
                    next += 1;
                    order.push(w);
                    entry[w] = x;
                }
                out.push((lab[w] + 1) as u8);
                if tied {
                    let b = best.unwrap();
                    let pos = out.len() - 1;
                    if pos >= b.len() || out[pos] > b[pos] {
                        return None;
                    }
                    if out[pos] < b[pos] {
                        tied = false;
                    }
                }
            }
            out.push(0);
            if tied {
                let b = best.unwrap();
                let pos = out.len() - 1;
                if pos >= b.len() || out[pos] > b[pos] {
                    return None;
                }
                if out[pos] < b[pos] {
                    tied = false;
                }
            }
            i += 1;
        }
        Some(out)
    }

    /// Minimal breadth-first embedding code over rooted darts and both
    /// orientations. Two triangulations get equal codes exactly when the
    /// abstract graphs are isomorphic. The first block of a code lists the
    /// root's neighbors as fresh labels followed by a separator, so codes
    /// rooted at minimum-degree vertices are strictly smaller; other roots
    /// need not be tried.
    pub fn canonical_code(&self) -> CanonicalCode {
        let dmin = self.min_degree();
        let mut best: Option<Vec<u8>> = None;
        for u in 0..self.n() {
            if self.rot[u].len() != dmin {
                continue;
            }
            for &v in &self.rot[u] {
                for dir in [1isize, -1] {
                    if let Some(code) = self.code_from(u, v, dir, best.as_deref()) {
                        if best.as_ref().map_or(true, |b| code < *b) {
                            best = Some(code);
                        }
                    }
                }
            }
        }
        CanonicalCode(best.unwrap())
    }

    /// All automorphisms of the abstract graph (map automorphisms plus
    /// reflections), as vertex permutations.
    pub fn automorphisms(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let dmin = self.min_degree();
        let mut best: Option<Vec<u8>> = None;
        let mut labelings: Vec<Vec<usize>> = Vec::new();
        for u in 0..n {
            if self.rot[u].len() != dmin {
                continue;
            }
            for &v in &self.rot[u] {
                for dir in [1isize, -1] {
                    if let Some(code) = self.code_from_with_labels(u, v, dir) {
                        match &best {
                            None => {
                                best = Some(code.0);
                                labelings = vec![code.1];
                            }
                            Some(b) => {
                                if code.0 < *b {
                                    best = Some(code.0);
                                    labelings = vec![code.1];
                                } else if code.0 == *b {
                                    labelings.push(code.1);
                                }
                            }
                        }
                    }
                }
            }
        }
        let base = &labelings[0];
        let mut inv_base = vec![0usize; n];
        for (v, &l) in base.iter().enumerate() {
            inv_base[l] = v;
        }
        let mut perms: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        for lab in &labelings {
            // sigma sends v to inv_base[lab[v]]
            let mut sigma = vec![0usize; n];
            for v in 0..n {
                sigma[v] = inv_base[lab[v]];
            }
            perms.insert(sigma);
        }
        perms.into_iter().collect()
    }

    fn code_from_with_labels(&self, u0: Vertex, v0: Vertex, dir: isize) -> Option<(Vec<u8>, Vec<usize>)> {
        let n = self.n();
        const UNSET: usize = usize::MAX;
        let mut lab = vec![UNSET; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        let mut entry: Vec<Vertex> = vec![UNSET; n];
        lab[u0] = 0;
        lab[v0] = 1;
        order.push(u0);
        order.push(v0);
        entry[u0] = v0;
        entry[v0] = u0;
        let mut out: Vec<u8> = Vec::with_capacity(2 * self.m() + n);
        let mut next = 2;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            let r = &self.rot[x];
            let d = r.len();
            let start = r.iter().position(|&w| w == entry[x]).unwrap();
            for k in 0..d {
                let idx = ((start as isize + dir * k as isize).rem_euclid(d as isize)) as usize;
                let w = r[idx];
                if lab[w] == UNSET {
                    lab[w] = next;
                    next += 1;
                    order.push(w);
                    entry[w] = x;
                }
                out.push((lab[w] + 1) as u8);
            }
            out.push(0);
            i += 1;
        }
        Some((out, lab))
    }

    /// Subgraph induced by the neighbors of `v`, classified.
    pub fn neighbor_cycle(&self, v: Vertex) -> NeighborClass {
        let nb: Vec<Vertex> = self.rot[v].clone();
        let set: HashSet<Vertex> = nb.iter().copied().collect();
        let mut deg: HashMap<Vertex, usize> = HashMap::new();
        let mut triangle = false;
        for (i, &a) in nb.iter().enumerate() {
            for &b in nb.iter().skip(i + 1) {
                if self.adjacent(a, b) {
                    *deg.entry(a).or_insert(0) += 1;
                    *deg.entry(b).or_insert(0) += 1;
                    for &c in nb.iter() {
                        if c > b && self.adjacent(a, c) && self.adjacent(b, c) {
                            triangle = true;
                        }
                    }
                }
            }
        }
        let all_two = nb.iter().all(|&a| deg.get(&a).copied().unwrap_or(0) == 2);
        if all_two && set.len() == nb.len() {
            // Connected 2-regular on d(v) vertices: a single cycle of length d(v).
            let cycle = self.rot[v].clone();
            let ok = cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .all(|(&a, &b)| self.adjacent(a, b));
            if ok {
                return NeighborClass::BasicCycle(cycle);
            }
        }
        if triangle {
            NeighborClass::TriangleContaining
        } else {
            NeighborClass::ChordCycle
        }
    }

    /// All 3-cycles that are not faces. Empty exactly when the graph is
    /// indivisible.
    pub fn separating_triangles(&self) -> Vec<[Vertex; 3]> {
        let faces: HashSet<[Vertex; 3]> = self.faces().iter().map(|f| f.sorted()).collect();
        let mut out = Vec::new();
        let n = self.n();
        for a in 0..n {
            for &b in &self.rot[a] {
                if b <= a {
                    continue;
                }
                for &c in &self.rot[b] {
                    if c <= b || !self.adjacent(a, c) {
                        continue;
                    }
                    if !faces.contains(&[a, b, c]) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    pub fn is_divisible(&self) -> bool {
        !self.separating_triangles().is_empty()
    }

    /// Delete a set of vertices and compact ids (descending-id swap), keeping
    /// the face structure of the remainder only if it is still valid. Used by
    /// contraction machinery via faces; exposed for id bookkeeping.
    pub fn adjacency_sets(&self) -> Vec<BTreeSet<Vertex>> {
        self.rot.iter().map(|r| r.iter().copied().collect()).collect()
    }
}

/// Classification of the subgraph induced by a vertex neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborClass {
    /// Induced neighbors form a single cycle, listed in rotation order.
    BasicCycle(Vec<Vertex>),
    ChordCycle,
    TriangleContaining,
}

impl NeighborClass {
    pub fn as_basic(&self) -> Option<&[Vertex]> {
        match self {
            NeighborClass::BasicCycle(c) => Some(c),
            _ => None,
        }
    }
}

/// Kinds of subgraph whose automorphism orbits we enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphKind {
    Edge,
    Path2,
    Triangle,
    Funnel,
}

/// One orbit of occurrences under `Aut(G)`.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub representative: Vec<Vertex>,
    pub size: usize,
}

/// Occurrences of the requested pattern, one representative per orbit.
pub fn automorphism_orbits(g: &PlaneTriangulation, kind: SubgraphKind) -> Vec<Orbit> {
    let occurrences = enumerate_occurrences(g, kind);
    orbits_of(g, occurrences, kind)
}

pub(crate) fn enumerate_occurrences(g: &PlaneTriangulation, kind: SubgraphKind) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut occ = Vec::new();
    match kind {
        SubgraphKind::Edge => {
            for (u, v) in g.edges() {
                occ.push(vec![u, v]);
            }
        }
        SubgraphKind::Path2 => {
            // (x, u, y) with x < y and the ends nonadjacent, so the pattern
            // is the induced 2-path.
            for u in 0..n {
                let nb = g.neighbors(u);
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        if g.adjacent(nb[i], nb[j]) {
                            continue;
                        }
                        let (x, y) = (nb[i].min(nb[j]), nb[i].max(nb[j]));
                        occ.push(vec![x, u, y]);
                    }
                }
            }
        }
        SubgraphKind::Triangle => {
            for a in 0..n {
                for &b in g.neighbors(a) {
                    if b <= a {
                        continue;
                    }
                    for &c in g.neighbors(b) {
                        if c > b && g.adjacent(a, c) {
                            occ.push(vec![a, b, c]);
                        }
                    }
                }
            }
        }
        SubgraphKind::Funnel => {
            // (top, middle, b1, b2): top-middle edge, (middle,b1,b2) a face,
            // and the top adjacent to neither bottom (it has degree one in
            // the pattern). Bottoms ordered b1 < b2.
            for f in g.faces() {
                let [m0, m1, m2] = f.vertices();
                for (m, b1, b2) in [(m0, m1, m2), (m1, m2, m0), (m2, m0, m1)] {
                    let (lo, hi) = (b1.min(b2), b1.max(b2));
                    for &t in g.neighbors(m) {
                        if t != lo && t != hi && !g.adjacent(t, lo) && !g.adjacent(t, hi) {
                            occ.push(vec![t, m, lo, hi]);
                        }
                    }
                }
            }
            occ.sort_unstable();
            occ.dedup();
        }
    }
    occ
}

fn normalize_occurrence(kind: SubgraphKind, occ: &[Vertex]) -> Vec<Vertex> {
    match kind {
        SubgraphKind::Edge => {
            let mut v = occ.to_vec();
            v.sort_unstable();
            v
        }
        SubgraphKind::Path2 => {
            vec![occ[0].min(occ[2]), occ[1], occ[0].max(occ[2])]
        }
        SubgraphKind::Triangle => {
            let mut v = occ.to_vec();
            v.sort_unstable();
            v
        }
        SubgraphKind::Funnel => {
            vec![occ[0], occ[1], occ[2].min(occ[3]), occ[2].max(occ[3])]
        }
    }
}

pub(crate) fn orbits_of(
    g: &PlaneTriangulation,
    occurrences: Vec<Vec<Vertex>>,
    kind: SubgraphKind,
) -> Vec<Orbit> {
    let autos = g.automorphisms();
    let mut by_rep: BTreeMap<Vec<Vertex>, BTreeSet<Vec<Vertex>>> = BTreeMap::new();
    for occ in occurrences {
        let norm = normalize_occurrence(kind, &occ);
        let mut rep = norm.clone();
        let mut members = BTreeSet::new();
        for sigma in &autos {
            let img: Vec<Vertex> = occ.iter().map(|&v| sigma[v]).collect();
            let img = normalize_occurrence(kind, &img);
            members.insert(img.clone());
            if img < rep {
                rep = img;
            }
        }
        by_rep.entry(rep).or_default().extend(members);
    }
    by_rep
        .into_iter()
        .map(|(rep, members)| Orbit {
            representative: rep,
            size: members.len(),
        })
        .collect()
}

// ---- graph6 interchange ----------------------------------------------------

/// Encode the abstract graph in standard graph6 (short form, n <= 62).
pub fn graph6_encode(g: &PlaneTriangulation) -> String {
    adjacency_to_graph6(g.n(), &g.adjacency_sets())
}

pub fn adjacency_to_graph6(n: usize, adj: &[BTreeSet<Vertex>]) -> String {
    assert!(n <= 62, "short-form graph6 only");
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i].contains(&j));
        }
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        s.push((val + 63) as char);
    }
    s
}

pub fn graph6_parse(text: &str) -> Result<Vec<BTreeSet<Vertex>>> {
    let bytes: Vec<u8> = text.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty record".into()));
    }
    if bytes[0] == b'~' {
        return Err(GraphError::Graph6("long-form graph6 not supported".into()));
    }
    let n = (bytes[0].checked_sub(63)).ok_or_else(|| GraphError::Graph6("bad header".into()))? as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(GraphError::Graph6(format!(
            "record length {} != expected {}",
            bytes.len(),
            1 + need
        )));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &b in &bytes[1..] {
        let v = b
            .checked_sub(63)
            .ok_or_else(|| GraphError::Graph6("byte out of range".into()))?;
        if v >= 64 {
            return Err(GraphError::Graph6("byte out of range".into()));
        }
        for k in 0..6 {
            bits.push(v & (1 << (5 - k)) != 0);
        }
    }
    let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            idx += 1;
        }
    }
    Ok(adj)
}

/// Decode graph6 into an embedded triangulation. The embedding is recovered
/// by taking as faces exactly the triangles whose removal leaves the rest
/// connected; for a maximal planar graph this reconstructs the unique
/// embedding up to reflection, and the reflection with the smaller directed
/// code is kept.
pub fn graph6_decode(text: &str) -> Result<PlaneTriangulation> {
    let adj = graph6_parse(text)?;
    embed_adjacency(&adj)
}

pub fn embed_adjacency(adj: &[BTreeSet<Vertex>]) -> Result<PlaneTriangulation> {
    let n = adj.len();
    if n < 3 {
        return Err(GraphError::Graph6("need n >= 3".into()));
    }
    let m: usize = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
    if m != 3 * n - 6 {
        return Err(GraphError::Graph6(format!(
            "edge count {m} != 3n-6; not a maximal planar graph"
        )));
    }
    if n == 3 {
        return PlaneTriangulation::from_rotation(
            vec![vec![1, 2], vec![2, 0], vec![0, 1]],
            [0, 1, 2],
        );
    }
    // Faces are the non-separating triangles.
    let mut faces = Vec::new();
    for a in 0..n {
        for &b in adj[a].iter() {
            if b <= a {
                continue;
            }
            for &c in adj[b].iter() {
                if c <= b || !adj[a].contains(&c) {
                    continue;
                }
                if triangle_is_face(adj, [a, b, c]) {
                    faces.push([a, b, c]);
                }
            }
        }
    }
    let g = PlaneTriangulation::from_faces(n, &faces)
        .map_err(|e| GraphError::Graph6(format!("not maximal planar: {e}")))?;
    // Normalize the reflection deterministically.
    let mirrored = g.mirrored();
    let ga = g.code_from(0, g.rot[0][0], 1, None).unwrap();
    let gb = mirrored.code_from(0, mirrored.rot[0][0], 1, None).unwrap();
    Ok(if ga <= gb { g } else { mirrored })
}

fn triangle_is_face(adj: &[BTreeSet<Vertex>], t: [Vertex; 3]) -> bool {
    let n = adj.len();
    if n == 4 {
        return true;
    }
    let mut seen = vec![false; n];
    for &v in &t {
        seen[v] = true;
    }
    let start = (0..n).find(|&v| !seen[v]).unwrap();
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in adj[u].iter() {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == n - 3
}

/// Emit the graph relabeled by its canonical labeling, so equal codes give
/// byte-identical graph6 records.
pub fn graph6_canonical(g: &PlaneTriangulation) -> String {
    let n = g.n();
    let dmin = g.min_degree();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for u in 0..n {
        if g.degree(u) != dmin {
            continue;
        }
        for &v in g.rotation(u) {
            for dir in [1isize, -1] {
                if let Some(code) = g.code_from_with_labels(u, v, dir) {
                    if best.as_ref().map_or(true, |b| code.0 < b.0) {
                        best = Some(code);
                    }
                }
            }
        }
    }
    let lab = best.unwrap().1;
    let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    for (u, v) in g.edges() {
        adj[lab[u]].insert(lab[v]);
        adj[lab[v]].insert(lab[u]);
    }
    adjacency_to_graph6(n, &adj)
}

// ---- DOT export -------------------------------------------------------------

/// DOT rendering; `class_of` may assign a color-class index (1..=4) per vertex
/// and `fill` paints black/white/grey fills instead.
pub fn to_dot(
    g: &PlaneTriangulation,
    class_of: Option<&dyn Fn(Vertex) -> usize>,
    fill: Option<&dyn Fn(Vertex) -> &'static str>,
) -> String {
    let shapes = ["circle", "box", "diamond", "triangle"];
    let mut s = String::from("graph {\n");
    for v in 0..g.n() {
        let mut attrs = Vec::new();
        if let Some(f) = class_of {
            let c = f(v);
            attrs.push(format!("shape={}", shapes[(c.saturating_sub(1)) % 4]));
            attrs.push(format!("label=\"{v}:{c}\""));
        }
        if let Some(f) = fill {
            attrs.push("style=filled".to_string());
            attrs.push(format!("fillcolor={}", f(v)));
            if f(v) == "black" {
                attrs.push("fontcolor=white".to_string());
            }
        }
        if attrs.is_empty() {
            s.push_str(&format!("  {v};\n"));
        } else {
            s.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
