//! 4-coloring enumeration up to chromatic isomorphism, tree/cycle
//! classification, and the bicolored-subgraph structure analysis.

use crate::embedding::{PlaneTriangulation, Vertex};
use crate::error::{GraphError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A color-class partition: colors 1..=4 per vertex. Equality is partition
/// equality (classes compared in order of their smallest vertex).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColorPartition {
    colors: Vec<usize>,
}

impl PartialEq for ColorPartition {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}
impl Eq for ColorPartition {}
impl PartialOrd for ColorPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ColorPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.normalized().cmp(&other.normalized())
    }
}

impl ColorPartition {
    pub fn from_colors(g: &PlaneTriangulation, colors: &[usize]) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(GraphError::BadOperand("color vector length".into()));
        }
        if colors.iter().any(|&c| !(1..=4).contains(&c)) {
            return Err(GraphError::BadOperand("colors must be 1..=4".into()));
        }
        for (u, v) in g.edges() {
            if colors[u] == colors[v] {
                return Err(GraphError::BadOperand(format!(
                    "improper: {u} and {v} share color {}",
                    colors[u]
                )));
            }
        }
        Ok(ColorPartition {
            colors: colors.to_vec(),
        })
    }

    pub(crate) fn from_raw(colors: Vec<usize>) -> Result<Self> {
        if colors.iter().any(|&c| !(1..=4).contains(&c)) {
            return Err(GraphError::BadOperand("colors must be 1..=4".into()));
        }
        Ok(ColorPartition { colors })
    }

    pub fn color_of(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Color vector relabeled by first occurrence, the partition's canonical
    /// form (classes in order of smallest contained vertex id).
    pub fn normalized(&self) -> Vec<usize> {
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut out = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let next = relabel.len() + 1;
            out.push(*relabel.entry(c).or_insert(next));
        }
        out
    }

    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let k = self.colors.iter().copied().max().unwrap_or(0);
        let mut cl = vec![Vec::new(); k];
        for (v, &c) in self.colors.iter().enumerate() {
            cl[c - 1].push(v);
        }
        cl
    }

    pub fn nonempty_classes(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn class_vertices(&self, c: usize) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }
}

fn bfs_order_from_face(g: &PlaneTriangulation) -> Vec<Vertex> {
    let [a, b, c] = g.outer_face();
    let mut order = vec![a, b, c];
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    seen[b] = true;
    seen[c] = true;
    let mut queue: VecDeque<Vertex> = order.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
                queue.push_back(v);
            }
        }
    }
    order
}

fn enumerate_raw(g: &PlaneTriangulation) -> Vec<Vec<usize>> {
    // Fix the outer face to colors 1, 2, 3; every partition has exactly one
    // such representative because a face meets three distinct classes.
    let order = bfs_order_from_face(g);
    let n = g.n();
    let mut colors = vec![0usize; n];
    colors[order[0]] = 1;
    colors[order[1]] = 2;
    colors[order[2]] = 3;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(3, 0)];
    while let Some((depth, next_color)) = stack.pop() {
        if next_color > 0 {
            colors[order[depth]] = 0;
        }
        let mut c = next_color + 1;
        if depth == n {
            if next_color == 0 {
                out.push(colors.clone());
                continue;
            }
            continue;
        }
        let v = order[depth];
        while c <= 4 {
            let ok = g.neighbors(v).iter().all(|&w| colors[w] != c);
            if ok {
                colors[v] = c;
                stack.push((depth, c));
                stack.push((depth + 1, 0));
                break;
            }
            c += 1;
        }
    }
    out
}

/// The chromatic-isomorphism classes using exactly four colors.
pub fn enumerate_partitions(g: &PlaneTriangulation) -> Vec<ColorPartition> {
    let mut parts: Vec<ColorPartition> = enumerate_raw(g)
        .into_iter()
        .filter(|c| c.iter().collect::<BTreeSet<_>>().len() == 4)
        .map(|c| ColorPartition { colors: c })
        .collect();
    parts.sort();
    parts.dedup();
    parts
}

/// All proper color-class partitions into at most four classes.
pub fn enumerate_partitions_upto4(g: &PlaneTriangulation) -> Vec<ColorPartition> {
    let mut parts: Vec<ColorPartition> = enumerate_raw(g)
        .into_iter()
        .map(|c| ColorPartition { colors: c })
        .collect();
    parts.sort();
    parts.dedup();
    parts
}

pub fn is_three_chromatic(g: &PlaneTriangulation) -> bool {
    enumerate_raw(g)
        .into_iter()
        .any(|c| c.iter().collect::<BTreeSet<_>>().len() <= 3)
}

/// Labeled colorings that use all four colors, counted by direct
/// backtracking in vertex-id order with no symmetry fixing.
pub fn count_labeled_colorings(g: &PlaneTriangulation) -> u64 {
    let n = g.n();
    let mut colors = vec![0usize; n];
    fn rec(g: &PlaneTriangulation, colors: &mut Vec<usize>, v: usize, count: &mut u64) {
        if v == colors.len() {
            let used: BTreeSet<usize> = colors.iter().copied().collect();
            if used.len() == 4 {
                *count += 1;
            }
            return;
        }
        for c in 1..=4 {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                rec(g, colors, v + 1, count);
                colors[v] = 0;
            }
        }
    }
    let mut count = 0;
    rec(g, &mut colors, 0, &mut count);
    count
}

// ---- embedded subgraphs ----------------------------------------------------------

/// A subgraph carrying its inherited cyclic rotations, for face tracing.
#[derive(Debug, Clone)]
pub struct EmbeddedSubgraph {
    pub vertices: Vec<Vertex>,
    rot: BTreeMap<Vertex, Vec<Vertex>>,
}

impl EmbeddedSubgraph {
    pub fn from_edge_filter<F: Fn(Vertex, Vertex) -> bool>(
        g: &PlaneTriangulation,
        vertices: &[Vertex],
        keep_edge: F,
    ) -> Self {
        let vs: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let mut rot = BTreeMap::new();
        for &v in &vs {
            let r: Vec<Vertex> = g
                .rotation(v)
                .iter()
                .copied()
                .filter(|&w| vs.contains(&w) && (keep_edge(v, w) || keep_edge(w, v)))
                .collect();
            rot.insert(v, r);
        }
        EmbeddedSubgraph {
            vertices: vs.into_iter().collect(),
            rot,
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[&v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[&v].len()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.values().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (&v, r) in &self.rot {
            for &w in r {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut comps = Vec::new();
        for &s in &self.vertices {
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
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when some component contains a cycle.
    pub fn has_cycle(&self) -> bool {
        let comps = self.components();
        for comp in comps {
            let edges = comp
                .iter()
                .map(|v| self.rot[v].iter().filter(|w| comp.contains(w)).count())
                .sum::<usize>()
                / 2;
            if edges >= comp.len() {
                return true;
            }
        }
        false
    }

    /// Odd-cycle-free test (bipartite by BFS 2-coloring).
    pub fn has_odd_cycle(&self) -> bool {
        let mut side: BTreeMap<Vertex, u8> = BTreeMap::new();
        for &s in &self.vertices {
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
                        Some(&sw) => {
                            if sw == su {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// A deterministic witness cycle (vertex list), if any cycle exists.
    pub fn find_cycle(&self) -> Option<Vec<Vertex>> {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut state: BTreeMap<Vertex, u8> = BTreeMap::new();
        for &s in &self.vertices {
            if state.contains_key(&s) {
                continue;
            }
            let mut stack = vec![(s, usize::MAX)];
            while let Some((u, from)) = stack.pop() {
                if state.contains_key(&u) {
                    continue;
                }
                state.insert(u, 1);
                if from != usize::MAX {
                    parent.insert(u, from);
                }
                for &w in self.rot[&u].iter().rev() {
                    if Some(&w) == parent.get(&u) {
                        continue;
                    }
                    if state.contains_key(&w) {
                        // Back edge u-w: walk parents from u to w.
                        let mut cycle = vec![u];
                        let mut x = u;
                        while x != w {
                            x = *parent.get(&x)?;
                            cycle.push(x);
                        }
                        return Some(cycle);
                    }
                    stack.push((w, u));
                }
            }
        }
        None
    }

    /// Face walks traced on the inherited rotations (per component).
    pub fn face_walks(&self) -> Vec<Vec<Vertex>> {
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
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

    /// Vertices on some cycle (the 2-core).
    pub fn two_core(&self) -> BTreeSet<Vertex> {
        let mut deg: BTreeMap<Vertex, usize> =
            self.vertices.iter().map(|&v| (v, self.degree(v))).collect();
        let mut removed: BTreeSet<Vertex> = BTreeSet::new();
        loop {
            let next = deg
                .iter()
                .find(|&(v, &d)| d <= 1 && !removed.contains(v))
                .map(|(&v, _)| v);
            match next {
                None => break,
                Some(v) => {
                    removed.insert(v);
                    *deg.get_mut(&v).unwrap() = 0;
                    for &w in &self.rot[&v] {
                        if !removed.contains(&w) {
                            *deg.get_mut(&w).unwrap() -= 1;
                        }
                    }
                }
            }
        }
        self.vertices
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .collect()
    }

    /// All simple paths between two vertices.
    pub fn simple_paths(&self, from: Vertex, to: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let mut path = vec![from];
        let mut on_path: BTreeSet<Vertex> = BTreeSet::from([from]);
        self.paths_rec(to, &mut path, &mut on_path, &mut out);
        out
    }

    fn paths_rec(
        &self,
        to: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut BTreeSet<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let u = *path.last().unwrap();
        if u == to {
            out.push(path.clone());
            return;
        }
        for &w in &self.rot[&u] {
            if !on_path.contains(&w) {
                path.push(w);
                on_path.insert(w);
                self.paths_rec(to, path, on_path, out);
                path.pop();
                on_path.remove(&w);
            }
        }
    }

    /// All simple cycles, each listed once as a vertex sequence.
    pub fn simple_cycles(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        let vs = self.vertices.clone();
        for &s in &vs {
            // Cycles whose minimum vertex is s.
            let mut path = vec![s];
            let mut on_path = BTreeSet::from([s]);
            self.cycles_rec(s, &mut path, &mut on_path, &mut out);
        }
        out
    }

    fn cycles_rec(
        &self,
        s: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut BTreeSet<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let u = *path.last().unwrap();
        for &w in &self.rot[&u] {
            if w == s && path.len() >= 3 && path[1] < *path.last().unwrap() {
                out.push(path.clone());
            } else if w > s && !on_path.contains(&w) {
                path.push(w);
                on_path.insert(w);
                self.cycles_rec(s, path, on_path, out);
                path.pop();
                on_path.remove(&w);
            }
        }
    }
}

/// Bicolored subgraph G[i, j]: the subgraph induced by two color classes.
pub fn bicolored_subgraph(
    g: &PlaneTriangulation,
    f: &ColorPartition,
    i: usize,
    j: usize,
) -> EmbeddedSubgraph {
    let verts: Vec<Vertex> = (0..g.n())
        .filter(|&v| f.color_of(v) == i || f.color_of(v) == j)
        .collect();
    EmbeddedSubgraph::from_edge_filter(g, &verts, |_, _| true)
}

/// Union of the two bicolored subgraphs with `common` color: vertices of the
/// three classes, with only common-to-other edges kept.
pub fn union_two_bicolored(
    g: &PlaneTriangulation,
    f: &ColorPartition,
    common: usize,
    others: (usize, usize),
) -> EmbeddedSubgraph {
    let keep = [common, others.0, others.1];
    let verts: Vec<Vertex> = (0..g.n()).filter(|&v| keep.contains(&f.color_of(v))).collect();
    EmbeddedSubgraph::from_edge_filter(g, &verts, |u, v| {
        f.color_of(u) == common || f.color_of(v) == common
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColoringKind {
    Tree,
    Cycle,
}

/// Classification of a single partition, with every bicolored pair that
/// contains a cycle and a witness.
#[derive(Debug, Clone)]
pub struct ColoringClassification {
    pub kind: ColoringKind,
    pub bicolored_cycles: Vec<((usize, usize), Vec<Vertex>)>,
}

pub fn classify_coloring(g: &PlaneTriangulation, f: &ColorPartition) -> ColoringClassification {
    let mut cyc = Vec::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            let sub = bicolored_subgraph(g, f, i, j);
            if let Some(w) = sub.find_cycle() {
                cyc.push(((i, j), w));
            }
        }
    }
    ColoringClassification {
        kind: if cyc.is_empty() {
            ColoringKind::Tree
        } else {
            ColoringKind::Cycle
        },
        bicolored_cycles: cyc,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphColoringClass {
    PureTree,
    PureCycle,
    Impure,
    ThreeChromatic,
    Divisible,
}

/// Census over all partitions of one graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphClassification {
    pub partitions: usize,
    pub tree_count: usize,
    pub cycle_count: usize,
    pub divisible: bool,
    pub three_chromatic: bool,
    pub class: GraphColoringClass,
}

pub fn classify_graph(g: &PlaneTriangulation) -> GraphClassification {
    let divisible = g.is_divisible();
    let three_chromatic = is_three_chromatic(g);
    let parts = enumerate_partitions(g);
    let mut tree = 0;
    let mut cycle = 0;
    for p in &parts {
        match classify_coloring(g, p).kind {
            ColoringKind::Tree => tree += 1,
            ColoringKind::Cycle => cycle += 1,
        }
    }
    let class = if divisible {
        GraphColoringClass::Divisible
    } else if three_chromatic {
        GraphColoringClass::ThreeChromatic
    } else if cycle == 0 {
        GraphColoringClass::PureTree
    } else if tree == 0 {
        GraphColoringClass::PureCycle
    } else {
        GraphColoringClass::Impure
    };
    GraphClassification {
        partitions: parts.len(),
        tree_count: tree,
        cycle_count: cycle,
        divisible,
        three_chromatic,
        class,
    }
}

// ---- fences ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FenceParameter {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FenceReport {
    pub fence: bool,
    pub t: FenceParameter,
    pub suspending_vertices: Vec<Vertex>,
    pub weld_vertices: Vec<Vertex>,
}

/// Fence test on an embedded subgraph: every face walk even, at least one
/// cycle; `t` is the maximum suspending-vertex distance to its weld vertex.
pub fn fence_analyze(h: &EmbeddedSubgraph) -> FenceReport {
    let has_cycle = h.has_cycle();
    let all_even = h
        .face_walks()
        .iter()
        .all(|w| w.len() % 2 == 0 || w.len() < 3);
    // A face walk of odd length >= 3 breaks the fence property; walks of
    // length < 3 only arise from isolated edges.
    let every_face_even = h.face_walks().iter().all(|w| w.len() % 2 == 0);
    let _ = all_even;
    let fence = has_cycle && every_face_even;
    let core = h.two_core();
    let suspending: Vec<Vertex> = h
        .vertices
        .iter()
        .copied()
        .filter(|&v| h.degree(v) <= 1)
        .collect();
    let mut t = FenceParameter::Finite(0);
    let mut welds = BTreeSet::new();
    for &v in &suspending {
        // BFS to the 2-core.
        let mut dist: BTreeMap<Vertex, usize> = BTreeMap::from([(v, 0)]);
        let mut queue = VecDeque::from([v]);
        let mut found = None;
        while let Some(u) = queue.pop_front() {
            if core.contains(&u) {
                found = Some((u, dist[&u]));
                break;
            }
            for &w in h.neighbors(u) {
                if !dist.contains_key(&w) {
                    dist.insert(w, dist[&u] + 1);
                    queue.push_back(w);
                }
            }
        }
        match found {
            None => {
                t = FenceParameter::Infinite;
            }
            Some((weld, d)) => {
                welds.insert(weld);
                if let FenceParameter::Finite(cur) = t {
                    if d > cur {
                        t = FenceParameter::Finite(d);
                    }
                }
            }
        }
    }
    FenceReport {
        fence,
        t,
        suspending_vertices: suspending,
        weld_vertices: welds.into_iter().collect(),
    }
}

/// Structure report for the union of two bicolored subgraphs with a common
/// color.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnionReport {
    pub no_odd_cycle: bool,
    pub fence: FenceReport,
    /// When the coloring is a tree-coloring and a factor has order >= 4 the
    /// union must be a 0- or 1-fence.
    pub tree_fence_ok: bool,
    /// Every suspending vertex is colored with a non-common color and hangs
    /// off a common-colored vertex.
    pub suspending_ok: bool,
}

pub fn union_report(
    g: &PlaneTriangulation,
    f: &ColorPartition,
    common: usize,
    others: (usize, usize),
) -> (EmbeddedSubgraph, UnionReport) {
    let u = union_two_bicolored(g, f, common, others);
    let no_odd = !u.has_odd_cycle();
    let fence = fence_analyze(&u);
    let is_tree_coloring = classify_coloring(g, f).kind == ColoringKind::Tree;
    let f1 = bicolored_subgraph(g, f, common, others.0).order();
    let f2 = bicolored_subgraph(g, f, common, others.1).order();
    let tree_fence_ok = if is_tree_coloring && (f1 >= 4 || f2 >= 4) {
        fence.fence
            && matches!(fence.t, FenceParameter::Finite(t) if t <= 1)
    } else {
        true
    };
    let suspending_ok = fence.suspending_vertices.iter().all(|&v| {
        f.color_of(v) != common
            && u.neighbors(v).iter().all(|&w| f.color_of(w) == common)
    });
    (
        u,
        UnionReport {
            no_odd_cycle: no_odd,
            fence,
            tree_fence_ok,
            suspending_ok,
        },
    )
}

// ---- tricolored checks --------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TricoloredReport {
    /// Theorem over each choice of deleted class: the classification of the
    /// coloring equals the classification on the tricolored subgraph, where
    /// cycle on the graph side may show as cycle or as a disconnected
    /// bicolored factor on the tricolored side.
    pub classification_equivalent: bool,
    /// Which deleted-class choices fired the disconnected disjunct.
    pub disconnected_cases: Vec<usize>,
    /// Triangle count of G - V4 equals 2n - 4 - sum of degrees over V4.
    pub triangle_formula_ok: bool,
    /// Paths between the two non-common colors in connected unions have an
    /// odd number of vertices.
    pub odd_path_vertices_ok: bool,
    /// Path counts between ends of inter-class edges are even, and such an
    /// edge closes exactly that many odd cycles.
    pub path_parity_ok: bool,
}

fn triangles_in(g: &PlaneTriangulation, keep: &BTreeSet<Vertex>) -> usize {
    let mut count = 0;
    let vs: Vec<Vertex> = keep.iter().copied().collect();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if !g.adjacent(a, b) {
                continue;
            }
            for &c in vs.iter().skip(j + 1) {
                if g.adjacent(a, c) && g.adjacent(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

pub fn tricolored_checks(g: &PlaneTriangulation, f: &ColorPartition) -> TricoloredReport {
    let full_kind = classify_coloring(g, f).kind;
    let mut equivalent = true;
    let mut disconnected_cases = Vec::new();
    let mut triangle_ok = true;
    for deleted in 1..=4 {
        let kept: Vec<usize> = (1..=4).filter(|&c| c != deleted).collect();
        let keep_set: BTreeSet<Vertex> = (0..g.n())
            .filter(|&v| f.color_of(v) != deleted)
            .collect();
        // Tricolored classification: cycle in some bicolored factor.
        let mut tri_cycle = false;
        let mut tri_disconnected = false;
        for a in 0..3 {
            for b in a + 1..3 {
                let (i, j) = (kept[a], kept[b]);
                let sub = bicolored_subgraph(g, f, i, j);
                if sub.find_cycle().is_some() {
                    tri_cycle = true;
                }
                if !sub.is_connected() {
                    tri_disconnected = true;
                }
            }
        }
        let graph_cycle = full_kind == ColoringKind::Cycle;
        let tri_side = tri_cycle || tri_disconnected;
        if graph_cycle != tri_side {
            equivalent = false;
        }
        if !tri_cycle && tri_disconnected && graph_cycle {
            disconnected_cases.push(deleted);
        }
        let dsum: usize = f.class_vertices(deleted).iter().map(|&v| g.degree(v)).sum();
        let expected = (2 * g.n()).saturating_sub(4 + dsum);
        if triangles_in(g, &keep_set) != expected {
            triangle_ok = false;
        }
    }
    // Path checks on the union of the two bicolored subgraphs sharing a
    // common color (every choice is exercised). The path-count parity claim
    // concerns the fence structure, so it applies to tree-colorings.
    let is_tree = full_kind == ColoringKind::Tree;
    let mut odd_ok = true;
    let mut parity_ok = true;
    for common in 1..=4 {
        let rest: Vec<usize> = (1..=4).filter(|&c| c != common).collect();
        for a in 0..3 {
            for b in a + 1..3 {
                let (o1, o2) = (rest[a], rest[b]);
                let u = union_two_bicolored(g, f, common, (o1, o2));
                if !u.is_connected() {
                    continue;
                }
                let core = u.two_core();
                let v1: Vec<Vertex> = u
                    .vertices
                    .iter()
                    .copied()
                    .filter(|&v| f.color_of(v) == o1)
                    .collect();
                let v2: Vec<Vertex> = u
                    .vertices
                    .iter()
                    .copied()
                    .filter(|&v| f.color_of(v) == o2)
                    .collect();
                for &x in &v1 {
                    for &y in &v2 {
                        let paths = u.simple_paths(x, y);
                        if paths.iter().any(|p| p.len() % 2 == 0) {
                            odd_ok = false;
                        }
                        if g.adjacent(x, y) {
                            // Path-count parity for ends on cycles of the
                            // union (the cycle-cycle edges).
                            if is_tree
                                && core.contains(&x)
                                && core.contains(&y)
                                && paths.len() % 2 != 0
                            {
                                parity_ok = false;
                            }
                            // Each path plus the edge is an odd cycle.
                            if paths.iter().any(|p| (p.len() - 1) % 2 != 0) {
                                odd_ok = false;
                            }
                        }
                    }
                }
            }
        }
    }
    TricoloredReport {
        classification_equivalent: equivalent,
        disconnected_cases,
        triangle_formula_ok: triangle_ok,
        odd_path_vertices_ok: odd_ok,
        path_parity_ok: parity_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_single_partition() {
        let g = fixtures::k4();
        assert_eq!(enumerate_partitions(&g).len(), 1);
        assert_eq!(count_labeled_colorings(&g), 24);
    }

    #[test]
    fn octahedron_three_partitions_and_flag() {
        let g = fixtures::octahedron();
        assert_eq!(enumerate_partitions(&g).len(), 3);
        assert!(is_three_chromatic(&g));
        assert_eq!(count_labeled_colorings(&g), 72);
    }

    #[test]
    fn seven_vertex_five_partitions() {
        let g = fixtures::double_wheel(5);
        assert_eq!(enumerate_partitions(&g).len(), 5);
        assert_eq!(count_labeled_colorings(&g), 120);
    }

    #[test]
    fn icosahedron_ten_tree_partitions() {
        let g = fixtures::icosahedron();
        let parts = enumerate_partitions(&g);
        assert_eq!(parts.len(), 10);
        assert_eq!(count_labeled_colorings(&g), 240);
        for p in &parts {
            assert_eq!(classify_coloring(&g, p).kind, ColoringKind::Tree);
        }
        assert_eq!(classify_graph(&g).class, GraphColoringClass::PureTree);
    }

    #[test]
    fn double_wheel_pure_cycle() {
        for k in [4usize, 5, 6, 7] {
            let g = fixtures::double_wheel(k);
            let c = classify_graph(&g);
            if c.divisible || c.three_chromatic {
                continue;
            }
            assert_eq!(c.class, GraphColoringClass::PureCycle, "k={k}");
        }
    }

    #[test]
    fn icosahedron_bicolored_paths_of_length5() {
        let g = fixtures::icosahedron();
        for p in enumerate_partitions(&g) {
            for i in 1..=4 {
                for j in i + 1..=4 {
                    let sub = bicolored_subgraph(&g, &p, i, j);
                    assert!(!sub.has_cycle());
                    assert_eq!(sub.edge_count(), 5, "paths of length 5");
                    assert!(sub.is_connected());
                }
            }
        }
    }

    #[test]
    fn k4_bicolored_single_edges() {
        let g = fixtures::k4();
        let p = &enumerate_partitions(&g)[0];
        for i in 1..=4 {
            for j in i + 1..=4 {
                let sub = bicolored_subgraph(&g, p, i, j);
                assert_eq!(sub.order(), 2);
                assert_eq!(sub.edge_count(), 1);
            }
        }
    }

    #[test]
    fn union_reports_hold_on_icosahedron() {
        let g = fixtures::icosahedron();
        for p in enumerate_partitions(&g) {
            for common in 1..=4 {
                let rest: Vec<usize> = (1..=4).filter(|&c| c != common).collect();
                for a in 0..3 {
                    for b in a + 1..3 {
                        let (_, rep) = union_report(&g, &p, common, (rest[a], rest[b]));
                        assert!(rep.no_odd_cycle);
                        assert!(rep.tree_fence_ok);
                        assert!(rep.suspending_ok);
                    }
                }
            }
        }
    }

    #[test]
    fn tricolored_checks_pass_small() {
        for g in [fixtures::double_wheel(5), fixtures::eight_vertex_4455()] {
            for p in enumerate_partitions(&g) {
                let rep = tricolored_checks(&g, &p);
                assert!(rep.classification_equivalent);
                assert!(rep.triangle_formula_ok);
                assert!(rep.odd_path_vertices_ok);
                assert!(rep.path_parity_ok);
            }
        }
    }
}
