//! Constructors for the named graph families, with deterministic labeling
//! schemes so tests can refer to stable labels.
//!
//! Labeling conventions:
//! - `circular_saw(n, k)`: vertex (v,0) is label v, vertex (v,1) is n+v.
//! - `double_wheel(rim, _)`: rim cycle 0..rim, hubs rim and rim+1.
//! - `double_wheel_of_triangles(m)`: shared rim vertices 0..m, triangle
//!   tips m..2m (tip i sits on the rim edge i, i+1 mod m), hubs 2m, 2m+1.
//! - `k4m`/`k3m`: left side 0..4 (or 0..3), right side following.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separation::MixedSeparation;

/// The circular saw on Z_n × Z_2: every vertex (v,0) sends edges to the k
/// vertices (v,1), …, (v+k−1,1).
pub fn circular_saw(n: u32, k: u32) -> Result<Graph> {
    if n < 2 * k + 2 {
        return Err(Error::input(format!(
            "circular saw needs n ≥ 2k+2, got n={n}, k={k}"
        )));
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for i in 0..k {
            edges.push((v, n + (v + i) % n));
        }
    }
    Graph::new(0..2 * n, edges)
}

/// Double-wheel: a rim cycle plus two hubs adjacent to every rim vertex.
pub fn double_wheel(rim: u32, hub_edge: bool) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::input("double-wheel needs rim length ≥ 3"));
    }
    let (h1, h2) = (rim, rim + 1);
    let mut edges: Vec<(Vertex, Vertex)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    for r in 0..rim {
        edges.push((r, h1));
        edges.push((r, h2));
    }
    if hub_edge {
        edges.push((h1, h2));
    }
    Graph::new(0..rim + 2, edges)
}

/// Double-wheel of triangles: a ring of `rim` triangles glued at single
/// vertices, plus two hubs adjacent to every ring vertex.
pub fn double_wheel_of_triangles(rim: u32) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::input("double-wheel of triangles needs rim length ≥ 3"));
    }
    let m = rim;
    let (h1, h2) = (2 * m, 2 * m + 1);
    let mut edges = Vec::new();
    for i in 0..m {
        let a = i;
        let b = (i + 1) % m;
        let tip = m + i;
        edges.push((a, b));
        edges.push((a, tip));
        edges.push((tip, b));
    }
    for v in 0..2 * m {
        edges.push((v, h1));
        edges.push((v, h2));
    }
    Graph::new(0..2 * m + 2, edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K4mKind {
    /// No edges inside the left side.
    Pure,
    /// Left side completed to a clique.
    Thickened,
    /// The given extra edges inside the left side.
    Sprinkled(Vec<(Vertex, Vertex)>),
}

fn complete_bipartite_plus(left: u32, m: u32, kind: &K4mKind) -> Result<Graph> {
    let mut edges = Vec::new();
    for z in 0..left {
        for p in 0..m {
            edges.push((z, left + p));
        }
    }
    match kind {
        K4mKind::Pure => {}
        K4mKind::Thickened => {
            for u in 0..left {
                for v in (u + 1)..left {
                    edges.push((u, v));
                }
            }
        }
        K4mKind::Sprinkled(extra) => {
            for &(u, v) in extra {
                if u >= left || v >= left || u == v {
                    return Err(Error::input(format!(
                        "sprinkle edge ({u},{v}) is not inside the left {left}-set"
                    )));
                }
                edges.push((u, v));
            }
        }
    }
    Graph::new(0..left + m, edges)
}

/// K4,m with the left 4-set possibly thickened or sprinkled.
pub fn k4m(kind: K4mKind, m: u32) -> Result<Graph> {
    complete_bipartite_plus(4, m, &kind)
}

/// K3,m with the left 3-set possibly thickened or sprinkled.
pub fn k3m(kind: K4mKind, m: u32) -> Result<Graph> {
    complete_bipartite_plus(3, m, &kind)
}

/// One rim piece of a generalised (double-)wheel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RimPiece {
    K2,
    Triangle,
}

#[derive(Debug, Clone)]
pub struct GeneralisedDoubleWheel {
    pub graph: Graph,
    pub hubs: (Vertex, Vertex),
    /// The ring parts of the rim (vertex sets of the K2/triangle pieces).
    pub ring_parts: Vec<VertexSet>,
}

/// Rim per the cyclic K2/triangle pattern plus two hubs adjacent to all
/// rim vertices. The result must come out 4-connected.
pub fn generalised_double_wheel(pattern: &[RimPiece], hub_edge: bool) -> Result<GeneralisedDoubleWheel> {
    let m = pattern.len() as u32;
    if m < 3 {
        return Err(Error::input("rim pattern needs length ≥ 3"));
    }
    let mut edges = Vec::new();
    let mut ring_parts = Vec::new();
    let mut next_tip = m;
    for (i, piece) in pattern.iter().enumerate() {
        let a = i as u32;
        let b = ((i + 1) % pattern.len()) as u32;
        edges.push((a, b));
        match piece {
            RimPiece::K2 => ring_parts.push(VertexSet::from([a, b])),
            RimPiece::Triangle => {
                let tip = next_tip;
                next_tip += 1;
                edges.push((a, tip));
                edges.push((tip, b));
                ring_parts.push(VertexSet::from([a, b, tip]));
            }
        }
    }
    let (h1, h2) = (next_tip, next_tip + 1);
    for v in 0..next_tip {
        edges.push((v, h1));
        edges.push((v, h2));
    }
    if hub_edge {
        edges.push((h1, h2));
    }
    let graph = Graph::new(0..next_tip + 2, edges)?;
    if !is_k_connected(&graph, 4) {
        return Err(Error::input(
            "generalised double-wheel construction is not 4-connected",
        ));
    }
    Ok(GeneralisedDoubleWheel {
        graph,
        hubs: (h1, h2),
        ring_parts,
    })
}

/// A graph glued cyclically from pieces, together with its ground-truth
/// ring of parts.
#[derive(Debug, Clone)]
pub struct GluedRing {
    pub graph: Graph,
    pub parts: Vec<VertexSet>,
}

/// One piece for `cycle_of_graphs`: a small graph with an entry pair and
/// an exit pair of marked vertices. The exit pair of each piece is
/// identified with the entry pair of the next, cyclically.
#[derive(Debug, Clone)]
pub struct RingPiece {
    pub graph: Graph,
    pub entry: (Vertex, Vertex),
    pub exit: (Vertex, Vertex),
}

pub fn cycle_of_graphs(pieces: &[RingPiece]) -> Result<GluedRing> {
    if pieces.len() < 3 {
        return Err(Error::input("a ring needs at least 3 pieces"));
    }
    for p in pieces {
        for v in [p.entry.0, p.entry.1, p.exit.0, p.exit.1] {
            if !p.graph.has_vertex(v) {
                return Err(Error::input(format!("marked vertex {v} not in piece")));
            }
        }
        if p.entry.0 == p.entry.1 || p.exit.0 == p.exit.1 {
            return Err(Error::input("adhesion pairs must consist of two vertices"));
        }
    }
    // Disjoint global ids, then union-find identification of exit_i with
    // entry_{i+1}, componentwise.
    let mut offset = Vec::new();
    let mut total = 0u32;
    for p in pieces {
        offset.push(total);
        total += p.graph.vertices().max().map_or(0, |v| v + 1);
    }
    let mut parent: Vec<u32> = (0..total).collect();
    fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut c = x;
        while parent[c as usize] != r {
            let next = parent[c as usize];
            parent[c as usize] = r;
            c = next;
        }
        r
    }
    let union = |parent: &mut Vec<u32>, a: u32, b: u32| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    };
    let m = pieces.len();
    for i in 0..m {
        let j = (i + 1) % m;
        union(&mut parent, offset[i] + pieces[i].exit.0, offset[j] + pieces[j].entry.0);
        union(&mut parent, offset[i] + pieces[i].exit.1, offset[j] + pieces[j].entry.1);
    }
    let mut verts = VertexSet::new();
    let mut edges = Vec::new();
    let mut parts = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let mut part = VertexSet::new();
        for v in p.graph.vertices() {
            let r = find(&mut parent, offset[i] + v);
            verts.insert(r);
            part.insert(r);
        }
        for (u, v) in p.graph.edges() {
            let (ru, rv) = (
                find(&mut parent, offset[i] + u),
                find(&mut parent, offset[i] + v),
            );
            if ru == rv {
                return Err(Error::input("gluing collapsed an edge"));
            }
            edges.push((ru, rv));
        }
        parts.push(part);
    }
    // Compact to contiguous labels 0..n in sorted representative order.
    let relabel: std::collections::BTreeMap<u32, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let verts: VertexSet = relabel.values().copied().collect();
    let edges: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(u, v)| (relabel[&u], relabel[&v]))
        .collect();
    let parts: Vec<VertexSet> = parts
        .into_iter()
        .map(|p| p.into_iter().map(|v| relabel[&v]).collect())
        .collect();
    let graph = Graph::new(verts, edges)?;
    // Sanity of the ring: adjacent parts share exactly the adhesion pair,
    // and every vertex lies in a contiguous run of parts.
    for i in 0..m {
        let j = (i + 1) % m;
        let shared: VertexSet = parts[i].intersection(&parts[j]).copied().collect();
        if shared.len() != 2 {
            return Err(Error::input(format!(
                "adjacent parts {i},{j} share {} vertices instead of 2",
                shared.len()
            )));
        }
    }
    for v in graph.vertices() {
        let holders: Vec<usize> = (0..m).filter(|&i| parts[i].contains(&v)).collect();
        if !is_cyclic_interval(&holders, m) {
            return Err(Error::input(format!(
                "vertex {v} appears in a non-contiguous run of parts {holders:?}"
            )));
        }
    }
    Ok(GluedRing { graph, parts })
}

fn is_cyclic_interval(sorted: &[usize], m: usize) -> bool {
    if sorted.len() <= 1 || sorted.len() == m {
        return true;
    }
    // Exactly one "gap" larger than 1 when read cyclically.
    let mut gaps = 0;
    for w in 0..sorted.len() {
        let a = sorted[w];
        let b = sorted[(w + 1) % sorted.len()];
        let diff = (b + m - a) % m;
        if diff != 1 {
            gaps += 1;
        }
    }
    gaps <= 1
}

/// A ring of `count` complete graphs K_k glued along disjoint vertex pairs.
pub fn cycle_of_cliques(count: usize, k: u32) -> Result<GluedRing> {
    if k < 4 {
        return Err(Error::input("clique ring pieces need k ≥ 4"));
    }
    let piece = RingPiece {
        graph: Graph::complete(k),
        entry: (0, 1),
        exit: (2, 3),
    };
    cycle_of_graphs(&vec![piece; count])
}

/// Splitmix-initialized xorshift64*; tiny, stable across platforms, and
/// good enough to sample test graphs.
#[derive(Debug, Clone)]
pub struct Xorshift(u64);

impl Xorshift {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E3779B97F4A7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        Xorshift((z ^ (z >> 31)) | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Seeded sampler: add uniformly random non-edges to an empty graph on n
/// vertices until the result is 4-connected.
pub fn random_4_connected(n: u32, seed: u64) -> Result<Graph> {
    if n < 5 {
        return Err(Error::input("a 4-connected graph needs at least 5 vertices"));
    }
    let mut rng = Xorshift::new(seed ^ u64::from(n) << 32);
    let mut non_edges: Vec<(Vertex, Vertex)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            non_edges.push((u, v));
        }
    }
    let mut edges = Vec::new();
    loop {
        let g = Graph::new(0..n, edges.iter().copied())?;
        if is_k_connected(&g, 4) {
            return Ok(g);
        }
        if non_edges.is_empty() {
            return Err(Error::invariant("complete graph failed 4-connectivity"));
        }
        let i = rng.below(non_edges.len() as u64) as usize;
        edges.push(non_edges.swap_remove(i));
    }
}

/// A fixed ten-vertex graph with two crossing tetra-separations whose
/// corner between the A-link and the C-link is potter. Labels:
/// 0=u1, 1=u2, 2=u3, 3=u4, 4=v1, 5=v2, 6=w3, 7=w4, 8=x, 9=y, where
/// u1u2u3u4 is the dangling-edge path of the potter corner.
pub fn potter_witness() -> (Graph, MixedSeparation, MixedSeparation) {
    let edges = [
        (2, 3),
        (0, 1),
        (1, 2),
        (1, 6),
        (1, 7),
        (4, 0),
        (4, 8),
        (5, 0),
        (5, 8),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (2, 4),
        (2, 5),
        (6, 3),
        (7, 9),
        (0, 8),
        (0, 2),
        (8, 2),
        (3, 9),
        (3, 7),
        (9, 6),
        (6, 7),
        (4, 5),
        (9, 1),
    ];
    let g = Graph::new(0..10, edges).unwrap();
    let a: VertexSet = [0, 8, 2, 1, 4, 5].into_iter().collect();
    let b: VertexSet = [3, 9, 6, 7, 1, 4, 5].into_iter().collect();
    let c: VertexSet = [3, 9, 1, 2, 6, 7].into_iter().collect();
    let d: VertexSet = [0, 8, 4, 5, 2, 6, 7].into_iter().collect();
    (
        g,
        MixedSeparation::new(a, b),
        MixedSeparation::new(c, d),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::separation::crosses;
    use crate::tetra::is_tetra_separation;

    #[test]
    fn saw_8_3_has_expected_size() {
        let g = circular_saw(8, 3).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.edge_count(), 24);
    }

    #[test]
    fn saw_too_small_is_input_error() {
        assert!(circular_saw(9, 4).is_err());
    }

    #[test]
    fn saw_12_4_is_4_connected() {
        assert!(is_k_connected(&circular_saw(12, 4).unwrap(), 4));
    }

    #[test]
    fn double_wheel_connectivity_facts() {
        assert!(is_k_connected(&double_wheel(4, false).unwrap(), 4));
        assert!(is_k_connected(&double_wheel(3, true).unwrap(), 4));
        assert!(!is_k_connected(&double_wheel(3, false).unwrap(), 4));
        assert!(is_k_connected(&double_wheel_of_triangles(4).unwrap(), 4));
    }

    #[test]
    fn k4m_instances() {
        let k4 = k4m(K4mKind::Thickened, 0).unwrap();
        assert!(is_isomorphic(&k4, &Graph::complete(4)).unwrap());
        assert!(is_k_connected(&k4m(K4mKind::Pure, 4).unwrap(), 4));
        assert!(k4m(K4mKind::Sprinkled(vec![(0, 5)]), 4).is_err());
    }

    #[test]
    fn sprinkled_k44_has_all_links_empty_crossing() {
        let g = k4m(K4mKind::Sprinkled(vec![(0, 1), (2, 3)]), 4).unwrap();
        let z: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let mk = |right: [Vertex; 2], other: [Vertex; 2]| {
            let mut a = z.clone();
            a.extend(right);
            let mut b = z.clone();
            b.extend(other);
            MixedSeparation::new(a, b)
        };
        let s1 = mk([4, 5], [6, 7]);
        let s2 = mk([4, 6], [5, 7]);
        assert!(is_tetra_separation(&g, &s1));
        assert!(is_tetra_separation(&g, &s2));
        assert!(crosses(&s1, &s2));
        let d = crate::separation::corner_diagram(&g, &s1, &s2).unwrap();
        assert!(d.links.iter().all(|l| l.is_empty()));
    }

    #[test]
    fn generalised_double_wheel_patterns() {
        use RimPiece::*;
        let all_k2 = generalised_double_wheel(&[K2; 5], false).unwrap();
        assert!(is_isomorphic(&all_k2.graph, &double_wheel(5, false).unwrap()).unwrap());
        let all_tri = generalised_double_wheel(&[Triangle; 4], false).unwrap();
        assert!(
            is_isomorphic(&all_tri.graph, &double_wheel_of_triangles(4).unwrap()).unwrap()
        );
        let mixed = generalised_double_wheel(&[K2, Triangle, K2, Triangle, K2], false).unwrap();
        assert!(is_k_connected(&mixed.graph, 4));
        assert_eq!(mixed.ring_parts.len(), 5);
    }

    #[test]
    fn clique_ring_shares_pairs() {
        let ring = cycle_of_cliques(6, 5).unwrap();
        assert_eq!(ring.graph.vertex_count(), 18);
        assert!(is_k_connected(&ring.graph, 4));
        for i in 0..6 {
            let j = (i + 1) % 6;
            assert_eq!(
                ring.parts[i].intersection(&ring.parts[j]).count(),
                2
            );
        }
    }

    #[test]
    fn invalid_gluing_is_rejected() {
        let piece = RingPiece {
            graph: Graph::complete(4),
            entry: (0, 0),
            exit: (2, 3),
        };
        assert!(cycle_of_graphs(&vec![piece; 3]).is_err());
    }

    #[test]
    fn random_sampler_is_deterministic_and_4_connected() {
        let a = random_4_connected(9, 42).unwrap();
        let b = random_4_connected(9, 42).unwrap();
        assert_eq!(a, b);
        assert!(is_k_connected(&a, 4));
        let c = random_4_connected(9, 43).unwrap();
        assert!(a != c, "different seeds should almost surely differ");
    }

    #[test]
    fn potter_witness_is_a_crossing_tetra_pair() {
        let (g, s1, s2) = potter_witness();
        assert!(is_k_connected(&g, 4), "witness graph must be 4-connected");
        assert!(is_tetra_separation(&g, &s1));
        assert!(is_tetra_separation(&g, &s2));
        assert!(crosses(&s1, &s2));
    }
}
