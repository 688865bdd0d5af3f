//! Structure recognizers for the decomposition outcome classes: ring
//! decompositions and their witness search, generalised (double-)wheels,
//! thickened and sprinkled complete-bipartite shapes, the quasi-5 test,
//! good/bad torsos, the α-factor, and the angry classifier.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::connectivity::{is_k_connected, is_quasi_k_connected};
use crate::decomp::{compressed_torso, interlaces, Star, TorsoResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separation::{corner_diagram, crossing_classification, crosses};
use crate::tetra::TetraSeparation;

/// A cyclic sequence of parts covering a host graph, with constant-size
/// adhesions between consecutive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDecomposition {
    pub parts: Vec<VertexSet>,
    pub adhesion_size: usize,
}

impl RingDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Adhesion i sits between parts i and i+1 (mod m).
    pub fn adhesion(&self, i: usize) -> VertexSet {
        let m = self.parts.len();
        self.parts[i]
            .intersection(&self.parts[(i + 1) % m])
            .copied()
            .collect()
    }

    /// Torso of part i: the induced subgraph with both adhesions cliqued.
    pub fn torso(&self, g: &Graph, i: usize) -> Graph {
        let m = self.parts.len();
        let part = &self.parts[i];
        let mut edges: BTreeSet<(Vertex, Vertex)> = g
            .edges()
            .filter(|(u, v)| part.contains(u) && part.contains(v))
            .collect();
        for adh in [self.adhesion((i + m - 1) % m), self.adhesion(i)] {
            let vs: Vec<Vertex> = adh.iter().copied().collect();
            for (a, &u) in vs.iter().enumerate() {
                for &v in &vs[a + 1..] {
                    edges.insert(crate::graph::edge(u, v));
                }
            }
        }
        Graph::new(part.iter().copied(), edges).unwrap()
    }

    /// Checks (H1) covering of vertices and edges, (H2) cyclic-interval
    /// holders, and the declared adhesion size.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let m = self.parts.len();
        if m < 3 {
            return Err(Error::invariant("a ring needs at least 3 parts"));
        }
        let covered: VertexSet = self.parts.iter().flatten().copied().collect();
        if covered != g.vertex_set() {
            return Err(Error::invariant("ring parts do not cover the vertex set"));
        }
        for (u, v) in g.edges() {
            if !self
                .parts
                .iter()
                .any(|p| p.contains(&u) && p.contains(&v))
            {
                return Err(Error::invariant(format!(
                    "edge ({u},{v}) is covered by no part"
                )));
            }
        }
        for i in 0..m {
            if self.adhesion(i).len() != self.adhesion_size {
                return Err(Error::invariant(format!(
                    "adhesion {i} has size {} instead of {}",
                    self.adhesion(i).len(),
                    self.adhesion_size
                )));
            }
        }
        for v in g.vertices() {
            let holders: Vec<usize> = (0..m).filter(|&i| self.parts[i].contains(&v)).collect();
            if !cyclic_interval(&holders, m) {
                return Err(Error::invariant(format!(
                    "vertex {v} sits in a non-contiguous run of parts"
                )));
            }
        }
        Ok(())
    }
}

fn cyclic_interval(sorted: &[usize], m: usize) -> bool {
    if sorted.len() <= 1 || sorted.len() == m {
        return true;
    }
    let mut gaps = 0;
    for w in 0..sorted.len() {
        let a = sorted[w];
        let b = sorted[(w + 1) % sorted.len()];
        if (b + m - a) % m != 1 {
            gaps += 1;
        }
    }
    gaps <= 1
}

pub fn is_triangle(g: &Graph) -> bool {
    g.vertex_count() == 3 && g.edge_count() == 3
}

pub fn is_4_cycle(g: &Graph) -> bool {
    g.vertex_count() == 4 && g.edge_count() == 4 && g.vertices().all(|v| g.degree(v) == 2)
}

pub fn is_k2(g: &Graph) -> bool {
    g.vertex_count() == 2 && g.edge_count() == 1
}

pub fn is_3_connected_on_le5(g: &Graph) -> bool {
    g.vertex_count() <= 5 && is_k_connected(g, 3)
}

/// Default size bound for the exhaustive ring search.
pub const RING_SEARCH_BOUND: usize = 18;

/// Exhaustive witness search for a cycle-decomposition with constant
/// adhesion size whose torsos all satisfy `torso_pred` (and whose parts
/// have at most `max_part` vertices; all predicates used here bound the
/// torso size, which for graph-decompositions equals the part size).
/// When `tutte_rule` is set, neighbouring triangle-torsos must have their
/// shared adhesion spanned by an edge of the host.
/// When `ring_filter` is given, whole witnesses failing it are skipped and
/// the search continues.
pub fn find_ring_decomposition(
    g: &Graph,
    adhesion: usize,
    max_part: usize,
    torso_pred: &dyn Fn(&Graph) -> bool,
    tutte_rule: bool,
    ring_filter: Option<&dyn Fn(&Graph, &RingDecomposition) -> bool>,
    bound: usize,
) -> Result<Option<RingDecomposition>> {
    assert!(adhesion == 1 || adhesion == 2);
    if g.vertex_count() > bound {
        return Err(Error::capability(format!(
            "ring search limited to {bound} vertices, got {}",
            g.vertex_count()
        )));
    }
    if g.vertex_count() < 3 {
        return Ok(None);
    }
    let verts: Vec<Vertex> = g.vertices().collect();

    // Parts are built left to right starting from a first adhesion S0.
    // A part is the current adhesion plus a few fresh vertices; the next
    // adhesion is a subset of the part. Two prunes keep this tractable:
    // a fresh vertex with a neighbour outside the part must go into the
    // next adhesion, and a vertex whose run ends must already share parts
    // with all its neighbours (members of the first part are exempt, their
    // runs may wrap through the closing seam).
    struct Search<'a> {
        g: &'a Graph,
        verts: &'a [Vertex],
        adhesion: usize,
        max_part: usize,
        torso_pred: &'a dyn Fn(&Graph) -> bool,
        tutte_rule: bool,
        ring_filter: Option<&'a dyn Fn(&Graph, &RingDecomposition) -> bool>,
    }

    struct State {
        parts: Vec<VertexSet>,
        torsos: Vec<Graph>,
        used: VertexSet,
        /// For each vertex, everything that has shared a part with it.
        co_seen: std::collections::BTreeMap<Vertex, VertexSet>,
        /// First-adhesion vertices whose runs wrap: once re-entered they
        /// must persist in every later adhesion until the ring closes.
        reentered: VertexSet,
    }

    impl Search<'_> {
        fn torso_of(&self, part: &VertexSet, prev: &VertexSet, next: &VertexSet) -> Graph {
            let mut edges: BTreeSet<(Vertex, Vertex)> = self
                .g
                .edges()
                .filter(|(u, v)| part.contains(u) && part.contains(v))
                .collect();
            for adh in [prev, next] {
                let vs: Vec<Vertex> = adh.iter().copied().collect();
                for (a, &u) in vs.iter().enumerate() {
                    for &v in &vs[a + 1..] {
                        edges.insert(crate::graph::edge(u, v));
                    }
                }
            }
            Graph::new(part.iter().copied(), edges).unwrap()
        }

        fn seam_ok(&self, left_torso: &Graph, adh: &VertexSet, right_torso: &Graph) -> bool {
            if !self.tutte_rule || !is_triangle(left_torso) || !is_triangle(right_torso) {
                return true;
            }
            let vs: Vec<Vertex> = adh.iter().copied().collect();
            vs.len() == 2 && self.g.has_edge(vs[0], vs[1])
        }

        fn push_part(&self, st: &mut State, part: &VertexSet, torso: Graph) {
            for &v in part {
                st.used.insert(v);
                let entry = st.co_seen.entry(v).or_default();
                entry.extend(part.iter().copied());
            }
            st.parts.push(part.clone());
            st.torsos.push(torso);
        }

        fn pop_part(&self, st: &mut State, fresh: &[Vertex], part: &VertexSet) {
            st.parts.pop();
            st.torsos.pop();
            for v in fresh {
                st.used.remove(v);
                st.co_seen.remove(v);
            }
            for &v in part {
                if let Some(entry) = st.co_seen.get_mut(&v) {
                    for w in part {
                        // Keep co-membership only if some remaining part
                        // still holds both; recompute cheaply.
                        if !st.parts.iter().any(|p| p.contains(&v) && p.contains(w)) {
                            entry.remove(w);
                        }
                    }
                }
            }
        }

        fn try_close(&self, st: &mut State, s_cur: &VertexSet, s0: &VertexSet) -> Option<RingDecomposition> {
            if st.parts.len() < 2 {
                return None;
            }
            let base: VertexSet = s_cur.union(s0).copied().collect();
            let interior: VertexSet = self
                .verts
                .iter()
                .copied()
                .filter(|v| !st.used.contains(v) && !base.contains(v))
                .collect();
            let part: VertexSet = base.union(&interior).copied().collect();
            if part.len() > self.max_part
                || !interior
                    .iter()
                    .all(|&v| self.g.neighbors(v).is_subset(&part))
            {
                return None;
            }
            let torso = self.torso_of(&part, s_cur, s0);
            if !(self.torso_pred)(&torso)
                || !self.seam_ok(st.torsos.last().unwrap(), s_cur, &torso)
                || !self.seam_ok(&torso, s0, &st.torsos[0])
            {
                return None;
            }
            let mut ring_parts = st.parts.clone();
            ring_parts.push(part);
            let ring = RingDecomposition {
                parts: ring_parts,
                adhesion_size: self.adhesion,
            };
            if ring.validate(self.g).is_ok() && self.ring_filter.is_none_or(|f| f(self.g, &ring))
            {
                Some(ring)
            } else {
                None
            }
        }

        fn dfs(&self, st: &mut State, s_cur: &VertexSet, s0: &VertexSet) -> Option<RingDecomposition> {
            if let Some(ring) = self.try_close(st, s_cur, s0) {
                return Some(ring);
            }
            // Every part adds a fresh vertex or re-enters a first-adhesion
            // vertex, and each of those re-enters at most once.
            if st.parts.len() > self.verts.len() + self.adhesion {
                return None;
            }
            // Part extension candidates: fresh vertices, plus members of
            // the first adhesion whose runs wrap backward through the
            // closing seam and re-enter here (they then persist in every
            // later adhesion until the ring closes).
            let free: Vec<Vertex> = self
                .verts
                .iter()
                .copied()
                .filter(|v| {
                    !st.used.contains(v)
                        || (s0.contains(v) && !s_cur.contains(v) && !st.reentered.contains(v))
                })
                .collect();
            let room = self.max_part - s_cur.len();
            let first_part: VertexSet = st.parts.first().cloned().unwrap_or_default();
            for size in 1..=room.min(free.len()) {
                for combo in free.iter().copied().combinations(size) {
                    let mut part: VertexSet = s_cur.clone();
                    part.extend(combo.iter().copied());
                    let newly_reentered: VertexSet = combo
                        .iter()
                        .copied()
                        .filter(|v| st.used.contains(v))
                        .collect();
                    // Forced next-adhesion members: fresh vertices with
                    // neighbours outside the part, current-adhesion
                    // vertices that would retire with uncovered edges, and
                    // every re-entered vertex.
                    let mut forced: VertexSet = newly_reentered.clone();
                    forced.extend(st.reentered.iter().copied());
                    for &v in &combo {
                        if !self.g.neighbors(v).is_subset(&part) {
                            forced.insert(v);
                        }
                    }
                    for &v in s_cur.iter() {
                        if first_part.contains(&v) || s0.contains(&v) {
                            continue;
                        }
                        let mut covered = st.co_seen.get(&v).cloned().unwrap_or_default();
                        covered.extend(part.iter().copied());
                        if !self.g.neighbors(v).is_subset(&covered) {
                            forced.insert(v);
                        }
                    }
                    if forced.len() > self.adhesion {
                        continue;
                    }
                    let part_vec: Vec<Vertex> = part.iter().copied().collect();
                    for s_next_vec in part_vec.iter().copied().combinations(self.adhesion) {
                        let s_next: VertexSet = s_next_vec.into_iter().collect();
                        if s_next == *s_cur || s_next == *s0 {
                            continue;
                        }
                        if !forced.is_subset(&s_next) {
                            continue;
                        }
                        let torso = self.torso_of(&part, s_cur, &s_next);
                        if !(self.torso_pred)(&torso) {
                            continue;
                        }
                        if let Some(prev) = st.torsos.last() {
                            if !self.seam_ok(prev, s_cur, &torso) {
                                continue;
                            }
                        }
                        let actually_fresh: Vec<Vertex> = combo
                            .iter()
                            .copied()
                            .filter(|v| !st.used.contains(v))
                            .collect();
                        self.push_part(st, &part, torso);
                        st.reentered.extend(newly_reentered.iter().copied());
                        if let Some(found) = self.dfs(st, &s_next, s0) {
                            return Some(found);
                        }
                        for v in &newly_reentered {
                            st.reentered.remove(v);
                        }
                        self.pop_part(st, &actually_fresh, &part);
                    }
                }
            }
            None
        }
    }

    let search = Search {
        g,
        verts: &verts,
        adhesion,
        max_part,
        torso_pred,
        tutte_rule,
        ring_filter,
    };
    for s0 in verts
        .iter()
        .copied()
        .combinations(adhesion)
        .map(|c| c.into_iter().collect::<VertexSet>())
    {
        let mut st = State {
            parts: Vec::new(),
            torsos: Vec::new(),
            used: s0.clone(),
            co_seen: Default::default(),
            reentered: VertexSet::new(),
        };
        // Seed the first part directly on S0 so the wrap exemption in the
        // retirement prune has a well-defined first part.
        let free: Vec<Vertex> = verts.iter().copied().filter(|v| !s0.contains(v)).collect();
        let room = max_part - s0.len();
        for size in 1..=room.min(free.len()) {
            for combo in free.iter().copied().combinations(size) {
                let mut part: VertexSet = s0.clone();
                part.extend(combo.iter().copied());
                let part_vec: Vec<Vertex> = part.iter().copied().collect();
                let mut forced = VertexSet::new();
                for &v in &combo {
                    if !g.neighbors(v).is_subset(&part) {
                        forced.insert(v);
                    }
                }
                if forced.len() > adhesion {
                    continue;
                }
                for s_next_vec in part_vec.iter().copied().combinations(adhesion) {
                    let s_next: VertexSet = s_next_vec.into_iter().collect();
                    if s_next == s0 || !forced.is_subset(&s_next) {
                        continue;
                    }
                    let torso = search.torso_of(&part, &s0, &s_next);
                    if !(search.torso_pred)(&torso) {
                        continue;
                    }
                    search.push_part(&mut st, &part, torso);
                    if let Some(ring) = search.dfs(&mut st, &s_next, &s0) {
                        return Ok(Some(ring));
                    }
                    search.pop_part(&mut st, &combo, &part);
                }
            }
        }
    }
    Ok(None)
}

fn k2_or_triangle(g: &Graph) -> bool {
    is_k2(g) || is_triangle(g)
}

/// Ring of K2's and triangles glued at single vertices, the rim shape of
/// generalised (double-)wheels. Fast-paths the pure-cycle rim.
pub fn rim_ring(g: &Graph, bound: usize) -> Result<Option<RingDecomposition>> {
    if g.vertex_count() >= 3
        && g.is_connected()
        && g.vertices().all(|v| g.degree(v) == 2)
    {
        // A plain cycle: ring of K2 parts along the cycle.
        let mut order = vec![g.vertices().next().unwrap()];
        let mut prev = None;
        while order.len() < g.vertex_count() {
            let cur = *order.last().unwrap();
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| Some(w) != prev)
                .unwrap();
            prev = Some(cur);
            order.push(next);
        }
        let m = order.len();
        let parts = (0..m)
            .map(|i| VertexSet::from([order[i], order[(i + 1) % m]]))
            .collect();
        return Ok(Some(RingDecomposition {
            parts,
            adhesion_size: 1,
        }));
    }
    find_ring_decomposition(g, 1, 3, &k2_or_triangle, false, None, bound)
}

/// Generalised double-wheel recognizer: a pair of vertices whose removal
/// leaves a ring of K2's and triangles glued at single vertices, with the
/// whole graph 4-connected.
pub fn recognize_generalised_double_wheel(
    x: &Graph,
    bound: usize,
) -> Result<Option<((Vertex, Vertex), RingDecomposition)>> {
    if !is_k_connected(x, 4) {
        return Ok(None);
    }
    let verts: Vec<Vertex> = x.vertices().collect();
    for pair in verts.iter().copied().combinations(2) {
        let (u, v) = (pair[0], pair[1]);
        if let Some(ring) = gdw_ring_for_centre(x, u, v, bound)? {
            return Ok(Some(((u, v), ring)));
        }
    }
    Ok(None)
}

/// The rim ring of x − u − v, if the designated centre pair works.
pub fn gdw_ring_for_centre(
    x: &Graph,
    u: Vertex,
    v: Vertex,
    bound: usize,
) -> Result<Option<RingDecomposition>> {
    let rest: VertexSet = x.vertices().filter(|&w| w != u && w != v).collect();
    if rest.len() < 3 {
        return Ok(None);
    }
    let h = x.induced_subgraph(&rest).unwrap();
    rim_ring(&h, bound)
}

/// Generalised wheel recognizer (single centre), used after the apex
/// pullback for 3-connected graphs.
pub fn recognize_generalised_wheel(
    x: &Graph,
    bound: usize,
) -> Result<Option<(Vertex, RingDecomposition)>> {
    if !is_k_connected(x, 3) {
        return Ok(None);
    }
    for v in x.vertices().collect::<Vec<_>>() {
        let rest: VertexSet = x.vertices().filter(|&w| w != v).collect();
        if rest.len() < 3 {
            continue;
        }
        let h = x.induced_subgraph(&rest).unwrap();
        if let Some(ring) = rim_ring(&h, bound)? {
            return Ok(Some((v, ring)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompleteSideKind {
    Thickened,
    Sprinkled,
}

/// Finds a `side`-sized left set whose complement is independent and fully
/// joined to it. Thickened means the left side induces a clique.
pub fn recognize_complete_side(
    x: &Graph,
    side: usize,
) -> Option<(CompleteSideKind, VertexSet, usize)> {
    let verts: Vec<Vertex> = x.vertices().collect();
    if verts.len() < side {
        return None;
    }
    for z in verts.iter().copied().combinations(side) {
        let z: VertexSet = z.into_iter().collect();
        if let Some(kind) = complete_side_kind(x, &z) {
            let m = x.vertex_count() - side;
            return Some((kind, z, m));
        }
    }
    None
}

/// Checks a designated left side.
pub fn complete_side_kind(x: &Graph, z: &VertexSet) -> Option<CompleteSideKind> {
    let rest: VertexSet = x.vertices().filter(|v| !z.contains(v)).collect();
    for &r in &rest {
        if !z.iter().all(|&zv| x.has_edge(r, zv)) {
            return None;
        }
        if x.neighbors(r).iter().any(|w| rest.contains(w)) {
            return None;
        }
    }
    let zs: Vec<Vertex> = z.iter().copied().collect();
    let complete = zs
        .iter()
        .enumerate()
        .all(|(i, &u)| zs[i + 1..].iter().all(|&v| x.has_edge(u, v)));
    Some(if complete {
        CompleteSideKind::Thickened
    } else {
        CompleteSideKind::Sprinkled
    })
}

pub fn recognize_k4m(x: &Graph) -> Option<(CompleteSideKind, VertexSet, usize)> {
    recognize_complete_side(x, 4)
}

pub fn recognize_k3m(x: &Graph) -> Option<(CompleteSideKind, VertexSet, usize)> {
    recognize_complete_side(x, 3)
}

pub fn recognize_quasi_5_connected(x: &Graph) -> bool {
    is_quasi_k_connected(x, 5)
}

/// Good torso in the Tutte-bagel sense: 3-connected and big, or rescued by
/// its neighbours.
pub fn good_torso(g: &Graph, ring: &RingDecomposition, index: usize) -> bool {
    let m = ring.len();
    let torso = ring.torso(g, index);
    if !is_k_connected(&torso, 3) {
        return false;
    }
    if torso.vertex_count() >= 6 {
        return true;
    }
    let prev = ring.torso(g, (index + m - 1) % m);
    let next = ring.torso(g, (index + 1) % m);
    if is_4_cycle(&prev) || is_4_cycle(&next) {
        return true;
    }
    if is_triangle(&prev) && is_triangle(&next) {
        return true;
    }
    torso.vertex_count() == 5 && (is_triangle(&prev) || is_triangle(&next))
}

/// α-factor of a Tutte-bagel ring: furious elements plus ⌈2|Δ|/3⌉ over
/// triangle-strips. A furious edge joins two 3-connected torsos; a furious
/// node carries a 4-cycle torso; a triangle-strip is a maximal cyclic run
/// of triangle-torso nodes.
pub fn alpha_factor(g: &Graph, ring: &RingDecomposition) -> usize {
    let m = ring.len();
    let torsos: Vec<Graph> = (0..m).map(|i| ring.torso(g, i)).collect();
    let three_connected: Vec<bool> = torsos.iter().map(|t| is_k_connected(t, 3)).collect();
    let triangle: Vec<bool> = torsos.iter().map(is_triangle).collect();
    let mut alpha = 0;
    for i in 0..m {
        if three_connected[i] && three_connected[(i + 1) % m] {
            alpha += 1; // furious edge between parts i and i+1
        }
        if is_4_cycle(&torsos[i]) {
            alpha += 1; // furious node
        }
    }
    if triangle.iter().all(|&t| t) {
        return alpha + (2 * m).div_ceil(3);
    }
    let mut i = 0;
    while i < m {
        if triangle[i] && !triangle[(i + m - 1) % m] {
            let mut len = 0usize;
            let mut j = i;
            while triangle[j] {
                len += 1;
                j = (j + 1) % m;
            }
            alpha += (2 * len).div_ceil(3);
        }
        i += 1;
    }
    alpha
}

/// Classification verdict for a torso of the canonical decomposition.
#[derive(Debug, Clone)]
pub enum TorsoClass {
    Quasi5Connected,
    CycleOfSmallTorsos(RingDecomposition),
    GeneralisedDoubleWheel {
        centre: (Vertex, Vertex),
        ring: RingDecomposition,
    },
    ThickenedK4m {
        left: VertexSet,
        m: usize,
    },
    SprinkledK4m {
        left: VertexSet,
        m: usize,
    },
}

impl TorsoClass {
    pub fn name(&self) -> &'static str {
        match self {
            TorsoClass::Quasi5Connected => "quasi-5-connected",
            TorsoClass::CycleOfSmallTorsos(_) => "cycle-of-small-torsos",
            TorsoClass::GeneralisedDoubleWheel { .. } => "generalised-double-wheel",
            TorsoClass::ThickenedK4m { .. } => "thickened-K4m",
            TorsoClass::SprinkledK4m { .. } => "sprinkled-K4m",
        }
    }

    /// Re-checks the witness against the defining property of the verdict.
    pub fn verify(&self, torso: &Graph) -> Result<()> {
        let ok = match self {
            TorsoClass::Quasi5Connected => recognize_quasi_5_connected(torso),
            TorsoClass::CycleOfSmallTorsos(ring) => {
                ring.validate(torso)?;
                ring.adhesion_size == 2
                    && (0..ring.len()).all(|i| {
                        let t = ring.torso(torso, i);
                        is_triangle(&t) || is_3_connected_on_le5(&t)
                    })
            }
            TorsoClass::GeneralisedDoubleWheel { centre, ring } => {
                let rest: VertexSet = torso
                    .vertices()
                    .filter(|&w| w != centre.0 && w != centre.1)
                    .collect();
                let h = torso.induced_subgraph(&rest)?;
                ring.validate(&h)?;
                is_k_connected(torso, 4)
                    && ring.adhesion_size == 1
                    && (0..ring.len()).all(|i| {
                        let t = ring.torso(&h, i);
                        is_k2(&t) || is_triangle(&t)
                    })
            }
            TorsoClass::ThickenedK4m { left, m } => {
                complete_side_kind(torso, left) == Some(CompleteSideKind::Thickened)
                    && torso.vertex_count() - left.len() == *m
            }
            TorsoClass::SprinkledK4m { left, m } => {
                complete_side_kind(torso, left).is_some()
                    && torso.vertex_count() - left.len() == *m
                    && *m >= 4
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invariant(format!(
                "torso fails its {} witness re-check",
                self.name()
            )))
        }
    }
}

fn small_cycle_part(t: &Graph) -> bool {
    is_triangle(t) || is_3_connected_on_le5(t)
}

/// Classifies the torso at a splitting star of the totally-nested set.
/// `all` must be the full enumerated tetra-separation set of `g`. Picks
/// the lexicographically least interlacing separation and least crossing
/// partner; any recognizer failure after dispatch is an invariant error.
pub fn classify_torso(
    g: &Graph,
    star: &Star,
    all: &[TetraSeparation],
    ring_bound: usize,
) -> Result<(TorsoResult, TorsoClass)> {
    let result = compressed_torso(g, star)?;
    let torso = &result.torso;
    let interlacer = all.iter().find(|t| interlaces(t.sep(), star));
    let Some(interlacer) = interlacer else {
        if recognize_quasi_5_connected(torso) {
            return Ok((result, TorsoClass::Quasi5Connected));
        }
        // A K4 torso is a thickened K4,0 and cannot be quasi-5-connected.
        if torso.vertex_count() == 4 && torso.edge_count() == 6 {
            let left = torso.vertex_set();
            return Ok((result, TorsoClass::ThickenedK4m { left, m: 0 }));
        }
        return Err(Error::invariant(
            "uninterlaced torso is neither quasi-5-connected nor a K4",
        ));
    };
    let partner = all
        .iter()
        .find(|t| crosses(t.sep(), interlacer.sep()))
        .ok_or_else(|| Error::invariant("interlacing separation is not crossed by anything"))?;
    let diagram = corner_diagram(g, interlacer.sep(), partner.sep())?;
    let class = crossing_classification(g, &diagram)?;
    let centre = class.vertex_centre;
    match centre.len() {
        0 => {
            let ring = find_ring_decomposition(
                torso,
                2,
                5,
                &small_cycle_part,
                false,
                None,
                ring_bound,
            )?
            .ok_or_else(|| {
                Error::invariant("no cycle of small torsos found for an empty vertex-centre")
            })?;
            let class = TorsoClass::CycleOfSmallTorsos(ring);
            class.verify(torso)?;
            Ok((result, class))
        }
        2 => {
            let mut mapped = centre.iter().map(|&z| {
                result
                    .class_of(z)
                    .ok_or_else(|| Error::invariant(format!("centre vertex {z} left the torso")))
            });
            let u = mapped.next().unwrap()?;
            let v = mapped.next().unwrap()?;
            if u == v {
                return Err(Error::invariant("centre pair collapsed inside the torso"));
            }
            let ring = gdw_ring_for_centre(torso, u, v, ring_bound)?.ok_or_else(|| {
                Error::invariant("centre pair does not leave a K2/triangle ring")
            })?;
            let class = TorsoClass::GeneralisedDoubleWheel {
                centre: (u, v),
                ring,
            };
            class.verify(torso)?;
            Ok((result, class))
        }
        4 => {
            let left: VertexSet = centre
                .iter()
                .map(|&z| {
                    result.class_of(z).ok_or_else(|| {
                        Error::invariant(format!("centre vertex {z} left the torso"))
                    })
                })
                .collect::<Result<_>>()?;
            if left.len() != 4 {
                return Err(Error::invariant("vertex-centre collapsed inside the torso"));
            }
            let m = torso.vertex_count() - 4;
            let class = if star.is_empty() {
                TorsoClass::SprinkledK4m { left, m }
            } else {
                TorsoClass::ThickenedK4m { left, m }
            };
            class.verify(torso)?;
            Ok((result, class))
        }
        n => Err(Error::invariant(format!(
            "vertex-centre of a crossing pair has size {n}"
        ))),
    }
}

/// One of the shapes of the angry classification.
#[derive(Debug, Clone)]
pub enum AngryShape {
    Quasi5Connected,
    BadTutteBagel {
        ring: RingDecomposition,
        alpha: usize,
    },
    DoubleWheel {
        centre: (Vertex, Vertex),
        rim_length: usize,
    },
    DoubleWheelOfTriangles {
        centre: (Vertex, Vertex),
        rim_length: usize,
    },
    SprinkledK4m {
        left: VertexSet,
        m: usize,
    },
}

impl AngryShape {
    pub fn index(&self) -> usize {
        match self {
            AngryShape::Quasi5Connected => 1,
            AngryShape::BadTutteBagel { .. } => 2,
            AngryShape::DoubleWheel { .. } | AngryShape::DoubleWheelOfTriangles { .. } => 3,
            AngryShape::SprinkledK4m { .. } => 4,
        }
    }
}

#[derive(Debug, Clone)]
pub enum AngryVerdict {
    Angry(AngryShape),
    NotAngry { nested_witness: TetraSeparation },
}

fn tutte_bagel_part(t: &Graph) -> bool {
    is_triangle(t) || is_4_cycle(t) || is_3_connected_on_le5(t)
}

/// Plain double-wheel check: some vertex pair leaves a cycle of length
/// ≥ 4, respectively an all-triangle unit-adhesion ring of length ≥ 4.
fn double_wheel_shape(g: &Graph, bound: usize) -> Result<Option<AngryShape>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    for pair in verts.iter().copied().combinations(2) {
        let (u, v) = (pair[0], pair[1]);
        let rest: VertexSet = g.vertices().filter(|&w| w != u && w != v).collect();
        if rest.len() < 4 {
            continue;
        }
        let h = g.induced_subgraph(&rest).unwrap();
        if h.is_connected() && h.vertices().all(|w| h.degree(w) == 2) {
            return Ok(Some(AngryShape::DoubleWheel {
                centre: (u, v),
                rim_length: rest.len(),
            }));
        }
        let all_triangles =
            find_ring_decomposition(&h, 1, 3, &is_triangle, false, None, bound)?;
        if let Some(ring) = all_triangles {
            if ring.len() >= 4 {
                return Ok(Some(AngryShape::DoubleWheelOfTriangles {
                    centre: (u, v),
                    rim_length: ring.len(),
                }));
            }
        }
    }
    Ok(None)
}

/// The angry classifier: decides 4-angriness and, when angry, names a
/// shape with a verified witness; when not angry, returns a totally-nested
/// witness.
pub fn classify_4_angry(
    g: &Graph,
    bounds: crate::tetra::EnumBounds,
    ring_bound: usize,
) -> Result<AngryVerdict> {
    if !is_k_connected(g, 4) {
        return Err(Error::input("angry classification requires a 4-connected graph"));
    }
    if g.vertex_count() < 8 {
        return Err(Error::input("angry classification requires at least 8 vertices"));
    }
    let nested = crate::tetra::totally_nested_set(g, crate::tetra::NestednessMethod::Both, bounds)?;
    if let Some(witness) = nested.into_iter().next() {
        return Ok(AngryVerdict::NotAngry {
            nested_witness: witness,
        });
    }
    if recognize_quasi_5_connected(g) {
        return Ok(AngryVerdict::Angry(AngryShape::Quasi5Connected));
    }
    // The shapes overlap (a K4,4 is also a cycle of four K4-torsos); the
    // sprinkled and double-wheel shapes are reported preferentially and
    // the expensive bagel search runs last.
    if let Some((_, left, m)) = recognize_k4m(g) {
        if m >= 4 {
            return Ok(AngryVerdict::Angry(AngryShape::SprinkledK4m { left, m }));
        }
    }
    if let Some(shape) = double_wheel_shape(g, ring_bound)? {
        return Ok(AngryVerdict::Angry(shape));
    }
    let all_bad_and_angry = |host: &Graph, ring: &RingDecomposition| {
        (0..ring.len()).all(|i| !good_torso(host, ring, i)) && alpha_factor(host, ring) >= 4
    };
    if let Some(ring) = find_ring_decomposition(
        g,
        2,
        5,
        &tutte_bagel_part,
        true,
        Some(&all_bad_and_angry),
        ring_bound,
    )? {
        let alpha = alpha_factor(g, &ring);
        return Ok(AngryVerdict::Angry(AngryShape::BadTutteBagel { ring, alpha }));
    }
    Err(Error::invariant(
        "4-angry graph matches none of the four shapes",
    ))
}
