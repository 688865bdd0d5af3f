//! Stars, interlacing, splitting stars, the mixed-tree-decomposition
//! determined by a nested symmetric set of mixed-separations, and both
//! torso notions (expanded and compressed).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};
use crate::separation::{is_nested, MixedSeparation};

/// A star: a set of oriented mixed-separations⁺ with (Ai,Bi) ≤ (Bj,Aj) for
/// all distinct members. Stored sorted for canonical identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Star {
    elements: Vec<MixedSeparation>,
}

impl Star {
    pub fn new(mut elements: Vec<MixedSeparation>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        for (i, s) in elements.iter().enumerate() {
            for (j, t) in elements.iter().enumerate() {
                if i != j && !s.le(&t.reverse()) {
                    return Err(Error::input(format!(
                        "not a star: {s:?} is not below the reverse of {t:?}"
                    )));
                }
            }
        }
        Ok(Star { elements })
    }

    pub fn empty() -> Self {
        Star {
            elements: Vec::new(),
        }
    }

    pub fn elements(&self) -> &[MixedSeparation] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, s: &MixedSeparation) -> bool {
        self.elements.binary_search(s).is_ok()
    }

    /// Bag of the star: the intersection of the B-sides, or all of V(G)
    /// for the empty star.
    pub fn bag(&self, g: &Graph) -> VertexSet {
        let mut iter = self.elements.iter();
        let Some(first) = iter.next() else {
            return g.vertex_set();
        };
        let mut out = first.side_b.clone();
        for s in iter {
            out = out.intersection(&s.side_b).copied().collect();
        }
        out
    }
}

/// (C,D) interlaces the star iff it lies strictly above every member in
/// one of its two orientations. The empty star is interlaced vacuously.
pub fn interlaces(s: &MixedSeparation, star: &Star) -> bool {
    star.elements()
        .iter()
        .all(|m| m.lt(s) || m.lt(&s.reverse()))
}

/// Splitting-star test by the interlacing characterization: a star inside
/// a nested symmetric set is splitting iff no element of the set
/// interlaces it.
pub fn is_splitting_star(star: &Star, set: &[MixedSeparation]) -> Result<bool> {
    for s in star.elements() {
        if !set.contains(s) {
            return Err(Error::input("star is not included in the ambient set"));
        }
    }
    Ok(!set.iter().any(|s| interlaces(s, star)))
}

fn check_nested_symmetric_proper(set: &[MixedSeparation]) -> Result<()> {
    for s in set {
        if !s.is_proper() {
            return Err(Error::input("ambient set contains an improper separation"));
        }
        if !set.contains(&s.reverse()) {
            return Err(Error::input("ambient set is not symmetric"));
        }
    }
    for (i, s) in set.iter().enumerate() {
        for t in &set[i + 1..] {
            if !is_nested(s, t) {
                return Err(Error::input(format!(
                    "ambient set is not nested: {s:?} crosses {t:?}"
                )));
            }
        }
    }
    Ok(())
}

/// All splitting stars of a nested symmetric proper set: for each oriented
/// member (A,B), the star {(A,B)} ∪ Max{(C,D) ∈ S : (C,D) < (B,A)}; plus
/// the empty star when the set is empty. The constructive rule is checked
/// against the interlacing characterization, and the stars must partition
/// the oriented members.
pub fn splitting_stars(set: &[MixedSeparation]) -> Result<Vec<Star>> {
    check_nested_symmetric_proper(set)?;
    if set.is_empty() {
        return Ok(vec![Star::empty()]);
    }
    let mut stars: BTreeSet<Star> = BTreeSet::new();
    for anchor in set {
        let reversed = anchor.reverse();
        let below: Vec<&MixedSeparation> = set.iter().filter(|c| (*c).lt(&reversed)).collect();
        let maximal: Vec<MixedSeparation> = below
            .iter()
            .filter(|c| !below.iter().any(|d| (**c).lt(d)))
            .map(|c| (**c).clone())
            .collect();
        let mut elements = maximal;
        elements.push(anchor.clone());
        let star = Star::new(elements).map_err(|e| {
            Error::invariant(format!("splitting-star construction broke the star law: {e}"))
        })?;
        stars.insert(star);
    }
    let stars: Vec<Star> = stars.into_iter().collect();
    // Validation against the definition, never silently resolved.
    let mut seen: BTreeMap<MixedSeparation, usize> = BTreeMap::new();
    for star in &stars {
        if !is_splitting_star(star, set)? {
            return Err(Error::invariant(format!(
                "constructed star fails the interlacing characterization: {star:?}"
            )));
        }
        for s in star.elements() {
            *seen.entry(s.clone()).or_insert(0) += 1;
        }
    }
    for s in set {
        if seen.get(s).copied().unwrap_or(0) != 1 {
            return Err(Error::invariant(format!(
                "oriented separation lies in {} splitting stars instead of 1: {s:?}",
                seen.get(s).copied().unwrap_or(0)
            )));
        }
    }
    Ok(stars)
}

/// The mixed-tree-decomposition determined by a nested symmetric set. Node
/// identities are the splitting stars themselves, so the output is
/// canonical.
#[derive(Debug, Clone)]
pub struct MixedTreeDecomposition {
    pub nodes: Vec<Star>,
    /// Tree edges as index pairs (i < j).
    pub edges: Vec<(usize, usize)>,
    pub bags: Vec<VertexSet>,
    /// Oriented edge (from, to) ↦ the induced separation whose B-side
    /// contains the bag of `to`.
    pub edge_map: BTreeMap<(usize, usize), MixedSeparation>,
}

impl MixedTreeDecomposition {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

pub fn build_decomposition(g: &Graph, set: &[MixedSeparation]) -> Result<MixedTreeDecomposition> {
    for s in set {
        if !s.covers(g) {
            return Err(Error::input("separation does not cover the host graph"));
        }
    }
    let nodes = splitting_stars(set)?;
    let bags: Vec<VertexSet> = nodes.iter().map(|n| n.bag(g)).collect();
    let mut edges = Vec::new();
    let mut edge_map = BTreeMap::new();
    for (i, ni) in nodes.iter().enumerate() {
        for (j, nj) in nodes.iter().enumerate().skip(i + 1) {
            let mut linking: Vec<&MixedSeparation> = ni
                .elements()
                .iter()
                .filter(|s| nj.contains(&s.reverse()))
                .collect();
            linking.sort();
            linking.dedup();
            if linking.is_empty() {
                continue;
            }
            if linking.len() > 1 {
                return Err(Error::invariant(format!(
                    "nodes {i},{j} joined by {} separations",
                    linking.len()
                )));
            }
            edges.push((i, j));
            // (A,B) ∈ ni means ni sits on the B-side: oriented (j -> i).
            let s = linking[0].clone();
            edge_map.insert((j, i), s.clone());
            edge_map.insert((i, j), s.reverse());
        }
    }
    let t = MixedTreeDecomposition {
        nodes,
        edges,
        bags,
        edge_map,
    };
    verify_decomposition(g, &t, set)?;
    Ok(t)
}

fn verify_decomposition(
    g: &Graph,
    t: &MixedTreeDecomposition,
    set: &[MixedSeparation],
) -> Result<()> {
    let n = t.nodes.len();
    // Tree-ness: connected with n-1 edges.
    if n == 0 {
        return Err(Error::invariant("decomposition has no nodes"));
    }
    if t.edges.len() + 1 != n {
        return Err(Error::invariant(format!(
            "decomposition graph has {} nodes and {} edges",
            n,
            t.edges.len()
        )));
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in &t.edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::invariant("decomposition graph is disconnected"));
    }
    // (M1): bags cover V(G).
    let covered: VertexSet = t.bags.iter().flatten().copied().collect();
    if covered != g.vertex_set() {
        return Err(Error::invariant("bags do not cover the vertex set"));
    }
    // (M2): each vertex's bag-nodes induce a connected subtree.
    for v in g.vertices() {
        let holders: Vec<usize> = (0..n).filter(|&i| t.bags[i].contains(&v)).collect();
        if holders.is_empty() {
            return Err(Error::invariant(format!("vertex {v} is in no bag")));
        }
        let inside: BTreeSet<usize> = holders.iter().copied().collect();
        let mut seen: BTreeSet<usize> = BTreeSet::from([holders[0]]);
        let mut stack = vec![holders[0]];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != holders.len() {
            return Err(Error::invariant(format!(
                "vertex {v} appears in a disconnected set of bags"
            )));
        }
    }
    // Edge map: bijection onto the set, reverse-compatible.
    let image: BTreeSet<&MixedSeparation> = t.edge_map.values().collect();
    let set_sorted: BTreeSet<&MixedSeparation> = set.iter().collect();
    if image != set_sorted {
        return Err(Error::invariant(
            "edge map image does not recover the input set",
        ));
    }
    if t.edge_map.len() != set.len() {
        return Err(Error::invariant("edge map is not injective"));
    }
    for (&(i, j), s) in &t.edge_map {
        if t.edge_map.get(&(j, i)) != Some(&s.reverse()) {
            return Err(Error::invariant("edge map is not reverse-compatible"));
        }
    }
    Ok(())
}

/// λ(A,B): the separator vertices plus the A∖B endpoint of each separator
/// edge.
pub fn lambda_set(g: &Graph, s: &MixedSeparation) -> VertexSet {
    s.lambda(g)
}

/// Expanded torso of a star: the subgraph induced on the bag together with
/// all λ-sets, with every λ-set completed to a clique.
pub fn expanded_torso(g: &Graph, star: &Star) -> Result<Graph> {
    let mut verts = star.bag(g);
    let mut cliques = Vec::new();
    for s in star.elements() {
        let lam = s.lambda(g);
        verts.extend(lam.iter().copied());
        cliques.push(lam);
    }
    let mut edges: BTreeSet<Edge> = g
        .edges()
        .filter(|(u, v)| verts.contains(u) && verts.contains(v))
        .collect();
    for lam in cliques {
        let vs: Vec<Vertex> = lam.iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                edges.insert(edge(u, v));
            }
        }
    }
    Graph::new(verts, edges)
}

/// Compressed torso plus the vertex mapping back to the host graph.
#[derive(Debug, Clone)]
pub struct TorsoResult {
    pub torso: Graph,
    /// Torso vertex ↦ the set of host vertices it represents. Singletons
    /// except where separator edges were contracted.
    pub origin: BTreeMap<Vertex, VertexSet>,
}

impl TorsoResult {
    /// The torso vertex whose class contains the given host vertex.
    pub fn class_of(&self, host: Vertex) -> Option<Vertex> {
        self.origin
            .iter()
            .find(|(_, class)| class.contains(&host))
            .map(|(&v, _)| v)
    }
}

/// Compressed torso: the expanded torso with every separator edge whose
/// ends are both present contracted, representatives being minimum labels.
pub fn compressed_torso(g: &Graph, star: &Star) -> Result<TorsoResult> {
    let expanded = expanded_torso(g, star)?;
    let mut contract: BTreeSet<Edge> = BTreeSet::new();
    for s in star.elements() {
        for e in s.separator(g).edges {
            if expanded.has_vertex(e.0) && expanded.has_vertex(e.1) {
                contract.insert(e);
            }
        }
    }
    // Union-find over expanded vertices.
    let verts: Vec<Vertex> = expanded.vertices().collect();
    let mut parent: BTreeMap<Vertex, Vertex> = verts.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
        let mut r = v;
        while parent[&r] != r {
            r = parent[&r];
        }
        let mut c = v;
        while parent[&c] != r {
            let next = parent[&c];
            parent.insert(c, r);
            c = next;
        }
        r
    }
    for &(u, v) in &contract {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
            parent.insert(hi, lo);
        }
    }
    let mut origin: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
    for &v in &verts {
        let r = find(&mut parent, v);
        origin.entry(r).or_default().insert(v);
    }
    let torso_edges: BTreeSet<Edge> = expanded
        .edges()
        .map(|(u, v)| (find(&mut parent, u), find(&mut parent, v)))
        .filter(|&(u, v)| u != v)
        .map(|(u, v)| edge(u, v))
        .collect();
    let torso = Graph::new(origin.keys().copied(), torso_edges)?;
    Ok(TorsoResult { torso, origin })
}
