//! Tetra-separations: enumeration, the degree and matching conditions, the
//! four reductions with their exact characterization, the external
//! 5-connectivity predicate suite, and total-nestedness by two independent
//! methods.
//!
//! A tetra-separation is a proper mixed-4-separation (A,B) where every cut
//! vertex has at least two neighbours in each strict side and the crossing
//! edges form a matching. The central cross-check of this crate is that a
//! tetra-separation is nested with every other one exactly when it is
//! externally 5-connected, and `totally_nested_set` can compute the set
//! both ways and insist the answers agree.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use crate::connectivity::{is_k_connected, max_independent_paths};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};
use crate::separation::{crosses, is_nested, MixedSeparation, SepElement};

/// Enumeration refuses rather than subsamples beyond these bounds.
#[derive(Debug, Clone, Copy)]
pub struct EnumBounds {
    pub max_vertices: usize,
    pub max_vertices_plus_edges: usize,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            max_vertices: 24,
            max_vertices_plus_edges: 120,
        }
    }
}

impl EnumBounds {
    pub fn check(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.max_vertices
            || g.vertex_count() + g.edge_count() > self.max_vertices_plus_edges
        {
            return Err(Error::capability(format!(
                "graph with {} vertices and {} edges exceeds the enumeration bound \
                 (|V| ≤ {}, |V|+|E| ≤ {})",
                g.vertex_count(),
                g.edge_count(),
                self.max_vertices,
                self.max_vertices_plus_edges
            )));
        }
        Ok(())
    }
}

/// A validated tetra-separation of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TetraSeparation(pub MixedSeparation);

impl TetraSeparation {
    pub fn new(g: &Graph, s: MixedSeparation) -> Result<Self> {
        match check_tetra(g, &s) {
            TetraCheck::Ok => Ok(TetraSeparation(s)),
            reason => Err(Error::input(format!("not a tetra-separation: {reason:?}"))),
        }
    }

    pub fn sep(&self) -> &MixedSeparation {
        &self.0
    }

    pub fn separator_elements(&self, g: &Graph) -> Vec<SepElement> {
        self.0.separator(g).elements()
    }

    pub fn reverse(&self) -> TetraSeparation {
        TetraSeparation(self.0.reverse())
    }
}

/// Outcome of the tetra-separation test; names the first failed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TetraCheck {
    Ok,
    NotProper,
    WrongOrder(usize),
    DegreeCondition(Vertex),
    MatchingCondition(Edge, Edge),
}

pub fn check_tetra(g: &Graph, s: &MixedSeparation) -> TetraCheck {
    if !s.is_proper() {
        return TetraCheck::NotProper;
    }
    let sep = s.separator(g);
    if sep.order() != 4 {
        return TetraCheck::WrongOrder(sep.order());
    }
    let sa = s.strict_a();
    let sb = s.strict_b();
    for &v in &sep.vertices {
        let da = g.neighbors(v).intersection(&sa).count();
        let db = g.neighbors(v).intersection(&sb).count();
        if da < 2 || db < 2 {
            return TetraCheck::DegreeCondition(v);
        }
    }
    let es: Vec<Edge> = sep.edges.iter().copied().collect();
    for i in 0..es.len() {
        for j in (i + 1)..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                return TetraCheck::MatchingCondition(es[i], es[j]);
            }
        }
    }
    TetraCheck::Ok
}

pub fn is_tetra_separation(g: &Graph, s: &MixedSeparation) -> bool {
    check_tetra(g, s) == TetraCheck::Ok
}

/// All matchings of exactly `size` edges whose endpoints avoid `forbidden`.
fn matchings(edges: &[Edge], size: usize, forbidden: &VertexSet) -> Vec<Vec<Edge>> {
    let usable: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|(u, v)| !forbidden.contains(u) && !forbidden.contains(v))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(
        usable: &[Edge],
        start: usize,
        size: usize,
        current: &mut Vec<Edge>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<Edge>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if usable.len() - start < size - current.len() {
            return;
        }
        for i in start..usable.len() {
            let (u, v) = usable[i];
            if used.contains(&u) || used.contains(&v) {
                continue;
            }
            used.insert(u);
            used.insert(v);
            current.push((u, v));
            recurse(usable, i + 1, size, current, used, out);
            current.pop();
            used.remove(&u);
            used.remove(&v);
        }
    }
    recurse(&usable, 0, size, &mut current, &mut VertexSet::new(), &mut out);
    out
}

/// Expands one candidate separator (T, M) into all proper mixed
/// k-separations with exactly that separator: 2-color the components of
/// g − T − M so that every M-edge joins opposite sides.
fn expand_candidate(g: &Graph, cut: &VertexSet, matching: &[Edge]) -> Vec<MixedSeparation> {
    let rest: VertexSet = g.vertices().filter(|v| !cut.contains(v)).collect();
    let removed: BTreeSet<Edge> = matching.iter().copied().collect();
    // Components of g − T with the matching edges deleted.
    let mut comp_of: std::collections::BTreeMap<Vertex, usize> = Default::default();
    let mut comps: Vec<VertexSet> = Vec::new();
    for &v in &rest {
        if comp_of.contains_key(&v) {
            continue;
        }
        let id = comps.len();
        let mut comp = VertexSet::new();
        let mut stack = vec![v];
        comp_of.insert(v, id);
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in g.neighbors(u) {
                if !rest.contains(&w) || removed.contains(&edge(u, w)) {
                    continue;
                }
                if let std::collections::btree_map::Entry::Vacant(e) = comp_of.entry(w) {
                    e.insert(id);
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
    }
    // Matching edges must join distinct components, which then must be
    // colored oppositely.
    let mut constraint: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for &(u, v) in matching {
        let (cu, cv) = (comp_of[&u], comp_of[&v]);
        if cu == cv {
            return Vec::new();
        }
        constraint[cu].push(cv);
        constraint[cv].push(cu);
    }
    // 2-color each constraint piece; pieces flip independently.
    let mut color = vec![usize::MAX; comps.len()];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    for start in 0..comps.len() {
        if color[start] != usize::MAX {
            continue;
        }
        let mut piece = vec![start];
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &d in &constraint[c] {
                if color[d] == usize::MAX {
                    color[d] = color[c] ^ 1;
                    piece.push(d);
                    stack.push(d);
                } else if color[d] == color[c] {
                    return Vec::new(); // odd constraint cycle
                }
            }
        }
        pieces.push(piece);
    }
    let mut out = Vec::new();
    for flips in 0..(1u64 << pieces.len()) {
        let mut side = vec![0u8; comps.len()];
        for (pi, piece) in pieces.iter().enumerate() {
            let flip = (flips >> pi) & 1;
            for &c in piece {
                side[c] = (color[c] as u64 ^ flip) as u8;
            }
        }
        let mut a: VertexSet = cut.clone();
        let mut b: VertexSet = cut.clone();
        let mut a_strict = false;
        let mut b_strict = false;
        for (ci, comp) in comps.iter().enumerate() {
            if side[ci] == 0 {
                a.extend(comp.iter().copied());
                a_strict = true;
            } else {
                b.extend(comp.iter().copied());
                b_strict = true;
            }
        }
        if a_strict && b_strict {
            out.push(MixedSeparation::new(a, b));
        }
    }
    out
}

/// All proper mixed-k-separations satisfying the degree- and
/// matching-conditions, both orientations, in canonical order.
fn enumerate_conditioned(g: &Graph, k: usize) -> Vec<MixedSeparation> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let all_edges: Vec<Edge> = g.edges().collect();
    let mut candidates: Vec<(VertexSet, Vec<Edge>)> = Vec::new();
    for t in 0..=k {
        for cut in verts.iter().copied().combinations(t) {
            let cut: VertexSet = cut.into_iter().collect();
            for m in matchings(&all_edges, k - t, &cut) {
                candidates.push((cut.clone(), m));
            }
        }
    }
    let mut found: Vec<MixedSeparation> = candidates
        .par_iter()
        .flat_map_iter(|(cut, m)| {
            expand_candidate(g, cut, m)
                .into_iter()
                .filter(|s| check_tetra_order_k(g, s, k))
        })
        .collect();
    found.sort();
    found.dedup();
    found
}

fn check_tetra_order_k(g: &Graph, s: &MixedSeparation, k: usize) -> bool {
    if !s.is_proper() {
        return false;
    }
    let sep = s.separator(g);
    if sep.order() != k {
        return false;
    }
    let sa = s.strict_a();
    let sb = s.strict_b();
    sep.vertices.iter().all(|&v| {
        g.neighbors(v).intersection(&sa).count() >= 2
            && g.neighbors(v).intersection(&sb).count() >= 2
    })
    // The matching-condition holds by construction of the candidates.
}

/// Exactly the set of all tetra-separations of a 4-connected graph, both
/// orientations, sorted by (side A, side B).
pub fn enumerate_tetra_separations(g: &Graph, bounds: EnumBounds) -> Result<Vec<TetraSeparation>> {
    if !is_k_connected(g, 4) {
        return Err(Error::input("tetra enumeration requires a 4-connected graph"));
    }
    bounds.check(g)?;
    Ok(enumerate_conditioned(g, 4)
        .into_iter()
        .map(TetraSeparation)
        .collect())
}

/// The order-3 analogue, used by the 3-connected pipeline as an oracle for
/// the apex bijection.
pub fn enumerate_strict_tri_separations(g: &Graph, bounds: EnumBounds) -> Result<Vec<MixedSeparation>> {
    if !is_k_connected(g, 3) {
        return Err(Error::input(
            "strict tri-separation enumeration requires a 3-connected graph",
        ));
    }
    bounds.check(g)?;
    Ok(enumerate_conditioned(g, 3))
}

/// All proper mixed-separations⁺ of the given order, by exhaustive trinary
/// assignment. Strictly a desk-scale sweep.
pub fn all_mixed_separations_plus(g: &Graph, order: usize, max_vertices: usize) -> Result<Vec<MixedSeparation>> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::capability(format!(
            "mixed-separation sweep limited to {max_vertices} vertices"
        )));
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    let total = 3usize.pow(n as u32);
    let mut out: Vec<MixedSeparation> = (0..total)
        .into_par_iter()
        .filter_map(|mut mask| {
            let mut a = VertexSet::new();
            let mut b = VertexSet::new();
            for &v in &verts {
                match mask % 3 {
                    0 => {
                        a.insert(v);
                    }
                    1 => {
                        b.insert(v);
                    }
                    _ => {
                        a.insert(v);
                        b.insert(v);
                    }
                }
                mask /= 3;
            }
            let s = MixedSeparation::new(a, b);
            (s.order(g) == order).then_some(s)
        })
        .collect();
    out.sort();
    out
        .dedup();
    Ok(out)
}

/// Left-reduction: drop from A the cut vertices with at most one neighbour
/// in A∖B.
pub fn left_reduction(g: &Graph, s: &MixedSeparation) -> MixedSeparation {
    let sa = s.strict_a();
    let drop: VertexSet = s
        .cut_vertices()
        .into_iter()
        .filter(|&v| g.neighbors(v).intersection(&sa).count() <= 1)
        .collect();
    MixedSeparation::new(
        s.side_a.difference(&drop).copied().collect(),
        s.side_b.clone(),
    )
}

/// Right-reduction: drop from B the cut vertices with at most one
/// neighbour in B∖A.
pub fn right_reduction(g: &Graph, s: &MixedSeparation) -> MixedSeparation {
    left_reduction(g, &s.reverse()).reverse()
}

pub fn left_right_reduction(g: &Graph, s: &MixedSeparation) -> MixedSeparation {
    right_reduction(g, &left_reduction(g, s))
}

pub fn right_left_reduction(g: &Graph, s: &MixedSeparation) -> MixedSeparation {
    left_reduction(g, &right_reduction(g, s))
}

/// The three-condition test for whether the left-right-reduction of a
/// mixed-4-separation⁺ of a 4-connected graph is a tetra-separation.
pub fn reduction_characterization(g: &Graph, s: &MixedSeparation) -> bool {
    let sa = s.strict_a();
    let sb = s.strict_b();
    if sa.len() < 2 {
        return false;
    }
    let sep = s.separator(g);
    let few_left_neighbours = sep
        .vertices
        .iter()
        .filter(|&&v| g.neighbors(v).intersection(&sa).count() <= 1)
        .count();
    if few_left_neighbours + sb.len() < 2 {
        return false;
    }
    sb.len() >= 2 || sep.edges.len() <= 1
}

/// Half-connected: at least one strict side induces a connected subgraph.
pub fn is_half_connected(g: &Graph, t: &TetraSeparation) -> bool {
    let a = g.induced_subgraph(&t.sep().strict_a()).unwrap();
    let b = g.induced_subgraph(&t.sep().strict_b()).unwrap();
    a.is_connected() || b.is_connected()
}

/// Whether the pair {x1,x2} of separator elements is 3-linked around the
/// separator: the other two elements include an edge, or one of the pair is
/// a vertex joined by an x̂1–x̂2 edge, or three independent x̂1–x̂2 paths
/// survive deleting the other two elements.
pub fn is_3_linked_pair(g: &Graph, t: &TetraSeparation, pair: [SepElement; 2]) -> Result<bool> {
    let elements = t.separator_elements(g);
    let others: Vec<SepElement> = elements
        .iter()
        .copied()
        .filter(|e| *e != pair[0] && *e != pair[1])
        .collect();
    if others.len() != 2 {
        return Err(Error::input("pair must consist of two separator elements"));
    }
    if others.iter().any(|e| e.is_edge()) {
        return Ok(true);
    }
    let h1 = pair[0].hat();
    let h2 = pair[1].hat();
    if !pair[0].is_edge() || !pair[1].is_edge() {
        let has_hat_edge = h1
            .iter()
            .any(|&u| g.neighbors(u).iter().any(|w| h2.contains(w)));
        if has_hat_edge {
            return Ok(true);
        }
    }
    // Both remaining elements are vertices here.
    let deleted: VertexSet = others.iter().filter_map(|e| e.as_vertex()).collect();
    let remaining: VertexSet = g.vertices().filter(|v| !deleted.contains(v)).collect();
    let sub = g.induced_subgraph(&remaining).unwrap();
    Ok(max_independent_paths(&sub, &h1, &h2)?.count >= 3)
}

pub fn is_3_linked(g: &Graph, t: &TetraSeparation) -> Result<bool> {
    let elements = t.separator_elements(g);
    for pair in elements.iter().copied().combinations(2) {
        if !is_3_linked_pair(g, t, [pair[0], pair[1]])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which side of (A,B) a predicate is anchored at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// X-weird: the pair is an edge plus a vertex, and the vertex has exactly
/// one neighbour in X apart from the edge's X-side endpoint.
pub fn is_weird(g: &Graph, t: &TetraSeparation, pair: [SepElement; 2], side: Side) -> bool {
    let (e, v) = match (pair[0], pair[1]) {
        (SepElement::Edge(e), SepElement::Vertex(v)) => (e, v),
        (SepElement::Vertex(v), SepElement::Edge(e)) => (e, v),
        _ => return false,
    };
    let (x_set, x_strict) = match side {
        Side::A => (&t.sep().side_a, t.sep().strict_a()),
        Side::B => (&t.sep().side_b, t.sep().strict_b()),
    };
    let a_end = if x_strict.contains(&e.0) { e.0 } else { e.1 };
    g.neighbors(v)
        .iter()
        .filter(|&&w| x_set.contains(&w) && w != a_end)
        .count()
        == 1
}

/// A balanced bipartition of the four separator elements into two classes
/// of size two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedBipartition {
    pub part1: [SepElement; 2],
    pub part2: [SepElement; 2],
}

pub fn balanced_bipartitions(g: &Graph, t: &TetraSeparation) -> Vec<BalancedBipartition> {
    let e = t.separator_elements(g);
    debug_assert_eq!(e.len(), 4);
    vec![
        BalancedBipartition {
            part1: [e[0], e[1]],
            part2: [e[2], e[3]],
        },
        BalancedBipartition {
            part1: [e[0], e[2]],
            part2: [e[1], e[3]],
        },
        BalancedBipartition {
            part1: [e[0], e[3]],
            part2: [e[1], e[2]],
        },
    ]
}

fn part_vertices(part: &[SepElement; 2]) -> VertexSet {
    part.iter().filter_map(|e| e.as_vertex()).collect()
}

fn part_hat(part: &[SepElement; 2]) -> VertexSet {
    let mut out = VertexSet::new();
    for e in part {
        out.extend(e.hat());
    }
    out
}

/// Any edge between a vertex element of `p` and a vertex of `hat_q`.
fn exists_part_hat_edge(g: &Graph, p: &[SepElement; 2], hat_q: &VertexSet) -> bool {
    part_vertices(p)
        .iter()
        .any(|&u| g.neighbors(u).iter().any(|w| hat_q.contains(w)))
}

fn zero_potter_linked(g: &Graph, bip: &BalancedBipartition) -> Result<bool> {
    let h1 = part_hat(&bip.part1);
    let h2 = part_hat(&bip.part2);
    if exists_part_hat_edge(g, &bip.part1, &h2) || exists_part_hat_edge(g, &bip.part2, &h1) {
        return Ok(true);
    }
    Ok(max_independent_paths(g, &h1, &h2)?.count >= 5)
}

fn one_potter_linked_directed(
    g: &Graph,
    t: &TetraSeparation,
    p: &[SepElement; 2],
    q: &[SepElement; 2],
    side: Side,
) -> Result<bool> {
    if !is_weird(g, t, *p, side) {
        return Ok(true);
    }
    let y: &VertexSet = match side {
        Side::A => &t.sep().side_b,
        Side::B => &t.sep().side_a,
    };
    let hat_p_y: VertexSet = part_hat(p).intersection(y).copied().collect();
    let hat_q_y: VertexSet = part_hat(q).intersection(y).copied().collect();
    if exists_part_hat_edge(g, p, &hat_q_y) || exists_part_hat_edge(g, q, &hat_p_y) {
        return Ok(true);
    }
    if hat_p_y.is_empty() || hat_q_y.is_empty() {
        return Ok(false);
    }
    let sub = g.induced_subgraph(y).unwrap();
    Ok(max_independent_paths(&sub, &hat_p_y, &hat_q_y)?.count >= 3)
}

fn one_potter_linked(g: &Graph, t: &TetraSeparation, bip: &BalancedBipartition) -> Result<bool> {
    for side in [Side::A, Side::B] {
        if !one_potter_linked_directed(g, t, &bip.part1, &bip.part2, side)?
            || !one_potter_linked_directed(g, t, &bip.part2, &bip.part1, side)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn two_potter_linked(g: &Graph, t: &TetraSeparation, bip: &BalancedBipartition) -> bool {
    for (x, y) in [(Side::A, Side::B), (Side::B, Side::A)] {
        if is_weird(g, t, bip.part1, x) && is_weird(g, t, bip.part2, y) {
            return false;
        }
    }
    true
}

pub fn is_potter_linked(
    g: &Graph,
    t: &TetraSeparation,
    bip: &BalancedBipartition,
    h: u8,
) -> Result<bool> {
    match h {
        0 => zero_potter_linked(g, bip),
        1 => one_potter_linked(g, t, bip),
        2 => Ok(two_potter_linked(g, t, bip)),
        _ => Err(Error::input("h must be 0, 1 or 2")),
    }
}

/// Externally 5-connected: half-connected, 3-linked, and h-potter-linked
/// for every h and every balanced bipartition. Evaluated lazily with a
/// short-circuit on the first failed predicate.
pub fn is_externally_5_connected(g: &Graph, t: &TetraSeparation) -> Result<bool> {
    if !is_half_connected(g, t) {
        return Ok(false);
    }
    if !is_3_linked(g, t)? {
        return Ok(false);
    }
    for bip in balanced_bipartitions(g, t) {
        if !two_potter_linked(g, t, &bip) {
            return Ok(false);
        }
        if !zero_potter_linked(g, &bip)? {
            return Ok(false);
        }
        if !one_potter_linked(g, t, &bip)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How to compute the set of totally-nested tetra-separations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NestednessMethod {
    /// Keep the separations nested with every enumerated one.
    Oracle,
    /// Keep the externally 5-connected separations.
    Characterization,
    /// Run both and insist on exact agreement.
    Both,
}

pub fn totally_nested_set(
    g: &Graph,
    method: NestednessMethod,
    bounds: EnumBounds,
) -> Result<Vec<TetraSeparation>> {
    let all = enumerate_tetra_separations(g, bounds)?;
    totally_nested_among(g, &all, method)
}

/// Same as `totally_nested_set` but reusing an already-enumerated set.
pub fn totally_nested_among(
    g: &Graph,
    all: &[TetraSeparation],
    method: NestednessMethod,
) -> Result<Vec<TetraSeparation>> {
    let by_oracle = || -> Vec<TetraSeparation> {
        all.par_iter()
            .filter(|t| all.iter().all(|u| is_nested(t.sep(), u.sep())))
            .cloned()
            .collect()
    };
    let by_characterization = || -> Result<Vec<TetraSeparation>> {
        let flags: Vec<Result<bool>> = all
            .par_iter()
            .map(|t| is_externally_5_connected(g, t))
            .collect();
        let mut out = Vec::new();
        for (t, flag) in all.iter().zip(flags) {
            if flag? {
                out.push(t.clone());
            }
        }
        Ok(out)
    };
    match method {
        NestednessMethod::Oracle => Ok(by_oracle()),
        NestednessMethod::Characterization => by_characterization(),
        NestednessMethod::Both => {
            let oracle = by_oracle();
            let characterization = by_characterization()?;
            if oracle != characterization {
                let only_oracle: Vec<_> = oracle
                    .iter()
                    .filter(|t| !characterization.contains(t))
                    .collect();
                let only_char: Vec<_> = characterization
                    .iter()
                    .filter(|t| !oracle.contains(t))
                    .collect();
                return Err(Error::invariant(format!(
                    "totally-nested methods disagree: {} only by oracle, {} only by \
                     external 5-connectivity: {only_oracle:?} vs {only_char:?}",
                    only_oracle.len(),
                    only_char.len()
                )));
            }
            Ok(oracle)
        }
    }
}

/// 4-angry: 4-connected with every tetra-separation crossed by another.
pub fn is_4_angry(g: &Graph, bounds: EnumBounds) -> Result<bool> {
    if !is_k_connected(g, 4) {
        return Ok(false);
    }
    Ok(totally_nested_set(g, NestednessMethod::Both, bounds)?.is_empty())
}

/// Precondition-checked crossing classification: verifies that both inputs
/// are tetra-separations of a 4-connected host and that they cross (input
/// errors otherwise), then classifies per the crossing trichotomy, where
/// any structural failure is an invariant error.
pub fn classify_crossing(
    g: &Graph,
    s1: &MixedSeparation,
    s2: &MixedSeparation,
) -> Result<crate::separation::CrossingClass> {
    if !is_k_connected(g, 4) {
        return Err(Error::input("crossing classification requires a 4-connected host"));
    }
    for s in [s1, s2] {
        if !is_tetra_separation(g, s) {
            return Err(Error::input(format!("not a tetra-separation: {s:?}")));
        }
    }
    if !crosses(s1, s2) {
        return Err(Error::input("separations are nested, not crossing"));
    }
    let d = crate::separation::corner_diagram(g, s1, s2)?;
    crate::separation::crossing_classification(g, &d)
}

/// Convenience wrapper: all crossing pairs among an enumerated set, each
/// unordered pair once.
pub fn crossing_pairs<'a>(
    all: &'a [TetraSeparation],
) -> impl Iterator<Item = (&'a TetraSeparation, &'a TetraSeparation)> + 'a {
    all.iter()
        .enumerate()
        .flat_map(move |(i, t)| all[i + 1..].iter().map(move |u| (t, u)))
        .filter(|(t, u)| crosses(t.sep(), u.sep()))
}
