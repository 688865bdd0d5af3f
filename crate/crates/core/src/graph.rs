//! Immutable finite simple graphs with integer-labeled vertices.
//!
//! Labels need not be contiguous and are never renumbered implicitly. All
//! returned collections iterate in sorted label order, so independent runs
//! agree bit for bit.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type VertexSet = BTreeSet<Vertex>;

/// Undirected edge, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Normalizes an endpoint pair into the canonical edge representation.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph. No loops, no parallel edges, every
/// edge endpoint a vertex. Immutable after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
    edges: BTreeSet<Edge>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges
        )
    }
}

impl Graph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut adj: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
        for v in vertices {
            adj.entry(v).or_default();
        }
        let mut es = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            if !adj.contains_key(&u) || !adj.contains_key(&v) {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside the vertex set"
                )));
            }
            es.insert(edge(u, v));
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj, edges: es })
    }

    /// Builds a graph, taking the vertex set as the union of edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let es: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let vs: VertexSet = es.iter().flat_map(|&(u, v)| [u, v]).collect();
        Graph::new(vs, es)
    }

    pub fn empty() -> Self {
        Graph {
            adj: BTreeMap::new(),
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: u32) -> Self {
        let mut es = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                es.push((u, v));
            }
        }
        Graph::new(0..n, es).unwrap()
    }

    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(0..n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        static EMPTY: VertexSet = VertexSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Neighbourhood of a vertex set: all vertices adjacent to the set but
    /// not in it.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &v in s {
            for &w in self.neighbors(v) {
                if !s.contains(&w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.adj.values().map(|n| n.len()).collect();
        ds.sort_unstable();
        ds
    }

    /// Maximal connected vertex sets, sorted by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in self.neighbors(u) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        for v in s {
            if !self.has_vertex(*v) {
                return Err(Error::input(format!("unknown vertex label {v}")));
            }
        }
        let es = self
            .edges
            .iter()
            .filter(|(u, v)| s.contains(u) && s.contains(v))
            .copied();
        Graph::new(s.iter().copied(), es)
    }

    /// Contracts edge `e` into `representative`, which must be one of its
    /// endpoints. Loops are discarded and parallel edges merged. The
    /// returned map sends every old label to its new label.
    pub fn contract_edge(
        &self,
        e: (Vertex, Vertex),
        representative: Vertex,
    ) -> Result<(Graph, BTreeMap<Vertex, Vertex>)> {
        let (u, v) = e;
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("({u},{v}) is not an edge")));
        }
        if representative != u && representative != v {
            return Err(Error::input(format!(
                "representative {representative} is not an endpoint of ({u},{v})"
            )));
        }
        let gone = if representative == u { v } else { u };
        let mut map = BTreeMap::new();
        for w in self.vertices() {
            map.insert(w, if w == gone { representative } else { w });
        }
        let vs = self.vertices().filter(|&w| w != gone);
        let es = self
            .edges
            .iter()
            .map(|&(a, b)| (map[&a], map[&b]))
            .filter(|&(a, b)| a != b);
        Ok((Graph::new(vs, es)?, map))
    }

    /// Isomorphic copy under a relabeling whose domain is the vertex set.
    pub fn apply_relabeling(&self, relabeling: &VertexRelabeling) -> Result<Graph> {
        if relabeling.domain() != self.vertex_set() {
            return Err(Error::input(
                "relabeling domain does not equal the vertex set",
            ));
        }
        let vs = self.vertices().map(|v| relabeling.map(v));
        let es = self
            .edges
            .iter()
            .map(|&(u, v)| (relabeling.map(u), relabeling.map(v)));
        Graph::new(vs, es)
    }
}

/// A bijective relabeling between two vertex-label sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRelabeling {
    mapping: BTreeMap<Vertex, Vertex>,
}

impl VertexRelabeling {
    pub fn new(mapping: BTreeMap<Vertex, Vertex>) -> Result<Self> {
        let images: BTreeSet<Vertex> = mapping.values().copied().collect();
        if images.len() != mapping.len() {
            return Err(Error::input("relabeling is not injective"));
        }
        Ok(VertexRelabeling { mapping })
    }

    pub fn identity(vertices: &VertexSet) -> Self {
        VertexRelabeling {
            mapping: vertices.iter().map(|&v| (v, v)).collect(),
        }
    }

    pub fn domain(&self) -> VertexSet {
        self.mapping.keys().copied().collect()
    }

    pub fn map(&self, v: Vertex) -> Vertex {
        self.mapping[&v]
    }

    pub fn map_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|&v| self.map(v)).collect()
    }

    pub fn map_edge(&self, e: Edge) -> Edge {
        edge(self.map(e.0), self.map(e.1))
    }

    pub fn inverse(&self) -> VertexRelabeling {
        VertexRelabeling {
            mapping: self.mapping.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }
}

/// Default size bound for the exact isomorphism search.
pub const ISO_BOUND: usize = 12;

/// Exact isomorphism test by backtracking with degree pruning. Only meant
/// for desk-scale graphs; refuses anything larger than `bound`.
pub fn is_isomorphic_bounded(g: &Graph, h: &Graph, bound: usize) -> Result<bool> {
    if g.vertex_count() > bound || h.vertex_count() > bound {
        return Err(Error::capability(format!(
            "isomorphism search limited to {bound} vertices"
        )));
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let gv: Vec<Vertex> = g.vertices().collect();
    let hv: Vec<Vertex> = h.vertices().collect();
    // Assign high-degree vertices first; fewer candidates per slot.
    let mut order: Vec<usize> = (0..gv.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.degree(gv[i])));

    fn extend(
        g: &Graph,
        h: &Graph,
        gv: &[Vertex],
        hv: &[Vertex],
        order: &[usize],
        depth: usize,
        assignment: &mut BTreeMap<Vertex, Vertex>,
        used: &mut BTreeSet<Vertex>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = gv[order[depth]];
        for &x in hv {
            if used.contains(&x) || g.degree(u) != h.degree(x) {
                continue;
            }
            let consistent = assignment
                .iter()
                .all(|(&a, &b)| g.has_edge(u, a) == h.has_edge(x, b));
            if !consistent {
                continue;
            }
            assignment.insert(u, x);
            used.insert(x);
            if extend(g, h, gv, hv, order, depth + 1, assignment, used) {
                return true;
            }
            assignment.remove(&u);
            used.remove(&x);
        }
        false
    }

    let mut assignment = BTreeMap::new();
    let mut used = BTreeSet::new();
    Ok(extend(
        g,
        h,
        &gv,
        &hv,
        &order,
        0,
        &mut assignment,
        &mut used,
    ))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_bounded(g, h, ISO_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn components_empty_graph() {
        assert!(Graph::empty().components().is_empty());
    }

    #[test]
    fn components_two_disjoint_triangles() {
        let g = Graph::new(0..6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], VertexSet::from([0, 1, 2]));
        assert_eq!(comps[1], VertexSet::from([3, 4, 5]));
    }

    #[test]
    fn components_circular_saw_is_connected() {
        let g = generate::circular_saw(10, 4).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 20);
        // BFS oracle: grow from an arbitrary vertex and compare.
        let mut reached = VertexSet::from([0]);
        loop {
            let grown: VertexSet = reached
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .chain(reached.iter().copied())
                .collect();
            if grown == reached {
                break;
            }
            reached = grown;
        }
        assert_eq!(reached, comps[0]);
    }

    #[test]
    fn components_partition_and_connectivity() {
        let g = generate::double_wheel(5, false).unwrap();
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.vertex_count());
        for c in &comps {
            assert!(g.induced_subgraph(c).unwrap().is_connected());
        }
    }

    #[test]
    fn induced_subgraph_of_k4_is_triangle() {
        let k4 = Graph::complete(4);
        let s = VertexSet::from([0, 1, 3]);
        let t = k4.induced_subgraph(&s).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_empty_set() {
        let g = Graph::complete(4);
        let t = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(t.vertex_count(), 0);
        assert_eq!(t.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_alternate_vertices_of_c6() {
        let c6 = Graph::cycle(6);
        let t = c6.induced_subgraph(&VertexSet::from([0, 2, 4])).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 0);
    }

    #[test]
    fn induced_subgraph_unknown_vertex_is_input_error() {
        let g = Graph::complete(3);
        assert!(matches!(
            g.induced_subgraph(&VertexSet::from([0, 7])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn contract_triangle_edge_gives_k2() {
        let g = Graph::complete(3);
        let (h, map) = g.contract_edge((0, 1), 0).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(map[&1], 0);
        assert_eq!(map[&2], 2);
    }

    #[test]
    fn contract_k4_edge_gives_triangle() {
        let g = Graph::complete(4);
        let (h, _) = g.contract_edge((2, 3), 2).unwrap();
        assert!(is_isomorphic(&h, &Graph::complete(3)).unwrap());
    }

    #[test]
    fn contract_non_edge_is_input_error() {
        let g = Graph::cycle(4);
        assert!(matches!(g.contract_edge((0, 2), 0), Err(Error::Input(_))));
    }

    #[test]
    fn contract_rim_edge_of_double_wheel() {
        let g = generate::double_wheel(5, false).unwrap();
        let (h, _) = g.contract_edge((0, 1), 0).unwrap();
        let target = generate::double_wheel(4, false).unwrap();
        assert!(is_isomorphic(&h, &target).unwrap());
    }

    #[test]
    fn relabeling_identity_and_swap() {
        let k4 = Graph::complete(4);
        let id = VertexRelabeling::identity(&k4.vertex_set());
        assert_eq!(k4.apply_relabeling(&id).unwrap(), k4);
        let swap = VertexRelabeling::new(BTreeMap::from([(0, 1), (1, 0), (2, 2), (3, 3)])).unwrap();
        assert_eq!(k4.apply_relabeling(&swap).unwrap(), k4);
    }

    #[test]
    fn relabeling_preserves_degrees_and_edges() {
        let g = generate::circular_saw(8, 3).unwrap();
        let verts: Vec<Vertex> = g.vertices().collect();
        let shifted: BTreeMap<Vertex, Vertex> =
            verts.iter().map(|&v| (v, (v + 5) % 16 + 100)).collect();
        let pi = VertexRelabeling::new(shifted).unwrap();
        let h = g.apply_relabeling(&pi).unwrap();
        assert_eq!(g.degree_sequence(), h.degree_sequence());
        assert_eq!(g.edge_count(), h.edge_count());
        assert!(is_isomorphic(&g, &h).is_err(), "16 > bound, refused");
        assert!(is_isomorphic_bounded(&g, &h, 16).unwrap());
    }

    #[test]
    fn relabeling_non_bijection_is_input_error() {
        assert!(matches!(
            VertexRelabeling::new(BTreeMap::from([(0, 1), (1, 1)])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn isomorphism_basics() {
        let k4 = Graph::complete(4);
        let relabeled = Graph::new([10, 20, 30, 40], [
            (10, 20),
            (10, 30),
            (10, 40),
            (20, 30),
            (20, 40),
            (30, 40),
        ])
        .unwrap();
        assert!(is_isomorphic(&k4, &relabeled).unwrap());
        assert!(!is_isomorphic(&Graph::cycle(5), &Graph::cycle(6)).unwrap());
    }

    #[test]
    fn octahedron_is_hubless_double_wheel_of_rim_4() {
        // K2,2,2: classes {0,3}, {1,4}, {2,5}.
        let mut es = Vec::new();
        for u in 0..6u32 {
            for v in (u + 1)..6 {
                if u % 3 != v % 3 {
                    es.push((u, v));
                }
            }
        }
        let octa = Graph::new(0..6, es).unwrap();
        let dw = generate::double_wheel(4, false).unwrap();
        assert!(is_isomorphic(&octa, &dw).unwrap());
    }
}
