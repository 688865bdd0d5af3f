//! The algebra of mixed-separations: separators, order, the side-containment
//! partial order, nestedness, crossing diagrams (corners, links, centre),
//! potter corners, and edge-role classification.
//!
//! A mixed-separation⁺ of a graph G is an ordered pair (A,B) of vertex sets
//! with A ∪ B = V(G). Its separator mixes the vertices of A ∩ B with the
//! edges running between the strict sides, and the order counts both.
//! Orientation matters throughout: (A,B) and (B,A) are distinct values.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};

/// Ordered pair (A,B) with A ∪ B = V(host). Stored by both sides rather
/// than side + separator, because reductions move vertices between sides
/// and the separator is derived.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixedSeparation {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// The separator of a mixed-separation: cut vertices A ∩ B and the edges
/// between A∖B and B∖A.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Separator {
    pub vertices: VertexSet,
    pub edges: BTreeSet<Edge>,
}

impl Separator {
    pub fn order(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    /// All separator members as elements.
    pub fn elements(&self) -> Vec<SepElement> {
        let mut out: Vec<SepElement> = self.vertices.iter().map(|&v| SepElement::Vertex(v)).collect();
        out.extend(self.edges.iter().map(|&e| SepElement::Edge(e)));
        out.sort();
        out
    }
}

/// A separator member: either a cut vertex or a crossing edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SepElement {
    Vertex(Vertex),
    Edge(Edge),
}

impl SepElement {
    /// The hat operator: a vertex maps to itself, an edge to its endpoints.
    pub fn hat(&self) -> VertexSet {
        match self {
            SepElement::Vertex(v) => VertexSet::from([*v]),
            SepElement::Edge((u, v)) => VertexSet::from([*u, *v]),
        }
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, SepElement::Edge(_))
    }

    pub fn as_vertex(&self) -> Option<Vertex> {
        match self {
            SepElement::Vertex(v) => Some(*v),
            SepElement::Edge(_) => None,
        }
    }

    pub fn as_edge(&self) -> Option<Edge> {
        match self {
            SepElement::Edge(e) => Some(*e),
            SepElement::Vertex(_) => None,
        }
    }
}

/// Union of hats over a set of elements.
pub fn hat_union<'a>(elements: impl IntoIterator<Item = &'a SepElement>) -> VertexSet {
    let mut out = VertexSet::new();
    for e in elements {
        out.extend(e.hat());
    }
    out
}

impl MixedSeparation {
    pub fn new(side_a: VertexSet, side_b: VertexSet) -> Self {
        MixedSeparation { side_a, side_b }
    }

    /// Checks the covering condition against a host graph.
    pub fn covers(&self, g: &Graph) -> bool {
        g.vertices()
            .all(|v| self.side_a.contains(&v) || self.side_b.contains(&v))
            && self.side_a.iter().all(|v| g.has_vertex(*v))
            && self.side_b.iter().all(|v| g.has_vertex(*v))
    }

    pub fn reverse(&self) -> MixedSeparation {
        MixedSeparation::new(self.side_b.clone(), self.side_a.clone())
    }

    pub fn strict_a(&self) -> VertexSet {
        self.side_a.difference(&self.side_b).copied().collect()
    }

    pub fn strict_b(&self) -> VertexSet {
        self.side_b.difference(&self.side_a).copied().collect()
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.side_a.intersection(&self.side_b).copied().collect()
    }

    /// Proper: both strict sides nonempty.
    pub fn is_proper(&self) -> bool {
        !self.strict_a().is_empty() && !self.strict_b().is_empty()
    }

    pub fn separator(&self, g: &Graph) -> Separator {
        let cut = self.cut_vertices();
        let sa = self.strict_a();
        let sb = self.strict_b();
        let edges = g
            .edges()
            .filter(|(u, v)| {
                (sa.contains(u) && sb.contains(v)) || (sa.contains(v) && sb.contains(u))
            })
            .collect();
        Separator {
            vertices: cut,
            edges,
        }
    }

    pub fn order(&self, g: &Graph) -> usize {
        self.separator(g).order()
    }

    /// λ(A,B): separator vertices plus, for each separator edge, its
    /// endvertex in A∖B.
    pub fn lambda(&self, g: &Graph) -> VertexSet {
        let sep = self.separator(g);
        let sa = self.strict_a();
        let mut out = sep.vertices;
        for (u, v) in sep.edges {
            out.insert(if sa.contains(&u) { u } else { v });
        }
        out
    }

    /// Side-containment partial order: (A,B) ≤ (C,D) iff A ⊆ C and B ⊇ D.
    pub fn le(&self, other: &MixedSeparation) -> bool {
        self.side_a.is_subset(&other.side_a) && self.side_b.is_superset(&other.side_b)
    }

    pub fn lt(&self, other: &MixedSeparation) -> bool {
        self.le(other) && self != other
    }

    /// Strongly separates X and Y: X ⊆ A∖B and Y ⊆ B∖A.
    pub fn strongly_separates(&self, x: &VertexSet, y: &VertexSet) -> bool {
        x.is_subset(&self.strict_a()) && y.is_subset(&self.strict_b())
    }
}

pub fn separator_of(g: &Graph, s: &MixedSeparation) -> Result<Separator> {
    if !s.covers(g) {
        return Err(Error::input("separation sides do not cover the vertex set"));
    }
    Ok(s.separator(g))
}

/// Nested: after possibly exchanging the name A with B or C with D, one
/// pair is below the other.
pub fn is_nested(s1: &MixedSeparation, s2: &MixedSeparation) -> bool {
    let r1 = s1.reverse();
    s1.le(s2) || s2.le(s1) || r1.le(s2) || s2.le(&r1)
}

pub fn crosses(s1: &MixedSeparation, s2: &MixedSeparation) -> bool {
    !is_nested(s1, s2)
}

/// One of the four sides in a crossing diagram of (A,B) and (C,D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SideId {
    A,
    B,
    C,
    D,
}

/// One of the four corners; `AC` is the corner for the pair {A, C}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CornerId {
    AC,
    AD,
    BC,
    BD,
}

impl CornerId {
    pub const ALL: [CornerId; 4] = [CornerId::AC, CornerId::AD, CornerId::BC, CornerId::BD];

    pub fn sides(self) -> (SideId, SideId) {
        match self {
            CornerId::AC => (SideId::A, SideId::C),
            CornerId::AD => (SideId::A, SideId::D),
            CornerId::BC => (SideId::B, SideId::C),
            CornerId::BD => (SideId::B, SideId::D),
        }
    }

    pub fn opposite(self) -> CornerId {
        match self {
            CornerId::AC => CornerId::BD,
            CornerId::AD => CornerId::BC,
            CornerId::BC => CornerId::AD,
            CornerId::BD => CornerId::AC,
        }
    }
}

/// A dangling edge with its role: the edge lies in the `through` link and
/// has an endvertex that is a vertex of the `from` link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DanglingEdge {
    pub edge: Edge,
    pub from: SideId,
    pub through: SideId,
}

/// The full crossing diagram of two proper mixed-separations.
#[derive(Debug, Clone)]
pub struct CrossDiagram {
    /// Corner vertex sets in the order AC, AD, BC, BD.
    pub corners: [VertexSet; 4],
    /// Links in the order A, B, C, D. The A- and B-links consist of
    /// elements of S(C,D); the C- and D-links of elements of S(A,B).
    pub links: [BTreeSet<SepElement>; 4],
    pub vertex_centre: VertexSet,
    pub diagonal_edges: BTreeSet<Edge>,
    pub jumping_edges: BTreeSet<Edge>,
    pub dangling_edges: BTreeSet<DanglingEdge>,
}

impl CrossDiagram {
    pub fn corner(&self, c: CornerId) -> &VertexSet {
        &self.corners[match c {
            CornerId::AC => 0,
            CornerId::AD => 1,
            CornerId::BC => 2,
            CornerId::BD => 3,
        }]
    }

    pub fn link(&self, s: SideId) -> &BTreeSet<SepElement> {
        &self.links[match s {
            SideId::A => 0,
            SideId::B => 1,
            SideId::C => 2,
            SideId::D => 3,
        }]
    }

    /// Centre: vertex-centre plus diagonal edges.
    pub fn centre_size(&self) -> usize {
        self.vertex_centre.len() + self.diagonal_edges.len()
    }

    /// Corner-separator for a corner: the union of its two adjacent links,
    /// the vertex-centre, and the diagonal edges with an end in the corner.
    pub fn corner_separator(&self, c: CornerId) -> BTreeSet<SepElement> {
        let (x, y) = c.sides();
        let mut out: BTreeSet<SepElement> = self.link(x).clone();
        out.extend(self.link(y).iter().copied());
        out.extend(self.vertex_centre.iter().map(|&v| SepElement::Vertex(v)));
        let corner = self.corner(c);
        for &(u, v) in &self.diagonal_edges {
            if corner.contains(&u) || corner.contains(&v) {
                out.insert(SepElement::Edge((u, v)));
            }
        }
        out
    }
}

/// Computes the crossing diagram of two proper mixed-separations.
pub fn corner_diagram(g: &Graph, s1: &MixedSeparation, s2: &MixedSeparation) -> Result<CrossDiagram> {
    if !s1.covers(g) || !s2.covers(g) {
        return Err(Error::input("separation sides do not cover the vertex set"));
    }
    if !s1.is_proper() || !s2.is_proper() {
        return Err(Error::input("corner diagrams require proper separations"));
    }
    let (sa, sb) = (s1.strict_a(), s1.strict_b());
    let (sc, sd) = (s2.strict_a(), s2.strict_b());
    let sep1 = s1.separator(g);
    let sep2 = s2.separator(g);

    let inter = |x: &VertexSet, y: &VertexSet| -> VertexSet { x.intersection(y).copied().collect() };
    let corners = [
        inter(&sa, &sc),
        inter(&sa, &sd),
        inter(&sb, &sc),
        inter(&sb, &sd),
    ];
    let vertex_centre: VertexSet = sep1
        .vertices
        .intersection(&sep2.vertices)
        .copied()
        .collect();

    let corner_of = |v: Vertex| -> Option<CornerId> {
        if corners[0].contains(&v) {
            Some(CornerId::AC)
        } else if corners[1].contains(&v) {
            Some(CornerId::AD)
        } else if corners[2].contains(&v) {
            Some(CornerId::BC)
        } else if corners[3].contains(&v) {
            Some(CornerId::BD)
        } else {
            None
        }
    };

    let mut diagonal_edges = BTreeSet::new();
    for (u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (corner_of(u), corner_of(v)) {
            if cu == cv.opposite() {
                diagonal_edges.insert(edge(u, v));
            }
        }
    }

    // The link for a side of one separation collects elements of the OTHER
    // separation's separator: its vertices strictly inside the side, and
    // its non-diagonal edges with an end in a corner containing the side.
    let link_for = |side: &VertexSet,
                    own_sep: &Separator,
                    c1: usize,
                    c2: usize|
     -> BTreeSet<SepElement> {
        let mut out = BTreeSet::new();
        for &v in &own_sep.vertices {
            if side.contains(&v) {
                out.insert(SepElement::Vertex(v));
            }
        }
        for &(u, v) in &own_sep.edges {
            if diagonal_edges.contains(&edge(u, v)) {
                continue;
            }
            if corners[c1].contains(&u)
                || corners[c1].contains(&v)
                || corners[c2].contains(&u)
                || corners[c2].contains(&v)
            {
                out.insert(SepElement::Edge(edge(u, v)));
            }
        }
        out
    };

    // A-link ⊆ S(C,D): vertices of S(C,D) in A∖B, edges with an end in AC or AD.
    let a_link = link_for(&sa, &sep2, 0, 1);
    let b_link = link_for(&sb, &sep2, 2, 3);
    // C-link ⊆ S(A,B): vertices of S(A,B) in C∖D, edges with an end in AC or BC.
    let c_link = link_for(&sc, &sep1, 0, 2);
    let d_link = link_for(&sd, &sep1, 1, 3);

    let link_vertices = |l: &BTreeSet<SepElement>| -> VertexSet {
        l.iter().filter_map(|e| e.as_vertex()).collect()
    };
    let av = link_vertices(&a_link);
    let bv = link_vertices(&b_link);
    let cv = link_vertices(&c_link);
    let dv = link_vertices(&d_link);

    let mut jumping_edges = BTreeSet::new();
    for (u, v) in g.edges() {
        let opposite_pair = (av.contains(&u) && bv.contains(&v))
            || (av.contains(&v) && bv.contains(&u))
            || (cv.contains(&u) && dv.contains(&v))
            || (cv.contains(&v) && dv.contains(&u));
        if opposite_pair {
            jumping_edges.insert(edge(u, v));
        }
    }

    let mut dangling_edges = BTreeSet::new();
    let links = [&a_link, &b_link, &c_link, &d_link];
    let ids = [SideId::A, SideId::B, SideId::C, SideId::D];
    for (ti, through) in ids.iter().enumerate() {
        for (fi, from) in ids.iter().enumerate() {
            // The through-link holds the edge, the from-link the vertex;
            // they belong to different separations by construction.
            let same_separation = ti / 2 == fi / 2;
            if same_separation {
                continue;
            }
            let from_vertices = link_vertices(links[fi]);
            for el in links[ti].iter() {
                if let Some((u, v)) = el.as_edge() {
                    if from_vertices.contains(&u) || from_vertices.contains(&v) {
                        dangling_edges.insert(DanglingEdge {
                            edge: (u, v),
                            from: *from,
                            through: *through,
                        });
                    }
                }
            }
        }
    }

    Ok(CrossDiagram {
        corners,
        links: [a_link, b_link, c_link, d_link],
        vertex_centre,
        diagonal_edges,
        jumping_edges,
        dangling_edges,
    })
}

/// Whether the given corner is potter: it is empty, its two adjacent links
/// have size two, and a path u1 u2 u3 u4 exists where u1u2 dangles from the
/// vertex u2 in one adjacent link through the other, and u3u4 dangles the
/// other way around.
pub fn is_potter_corner(g: &Graph, d: &CrossDiagram, corner: CornerId) -> bool {
    if !d.corner(corner).is_empty() {
        return false;
    }
    let (x, y) = corner.sides();
    if d.link(x).len() != 2 || d.link(y).len() != 2 {
        return false;
    }
    let witnesses = |through: SideId, from: SideId| -> Vec<(Vertex, Vertex)> {
        // pairs (u1, u2): edge u1u2 in the through-link, u2 a from-link vertex
        let from_vertices: VertexSet = d.link(from).iter().filter_map(|e| e.as_vertex()).collect();
        let mut out = Vec::new();
        for el in d.link(through) {
            if let Some((p, q)) = el.as_edge() {
                if from_vertices.contains(&q) {
                    out.push((p, q));
                }
                if from_vertices.contains(&p) {
                    out.push((q, p));
                }
            }
        }
        out
    };
    // u1u2 dangles from the y-link through the x-link; u3u4 from the x-link
    // through the y-link; u2u3 must be an edge of the host.
    for (u1, u2) in witnesses(x, y) {
        for (u4, u3) in witnesses(y, x) {
            let distinct = u1 != u3 && u1 != u4 && u2 != u3 && u2 != u4 && u1 != u2 && u3 != u4;
            if distinct && g.has_edge(u2, u3) {
                return true;
            }
        }
    }
    false
}

/// Evidence returned by the crossing classification.
#[derive(Debug, Clone)]
pub struct CrossingClass {
    /// Common link size: 0, 1 or 2.
    pub link_size: usize,
    pub vertex_centre: VertexSet,
    pub potter_corners: Vec<CornerId>,
}

/// Classifies how two crossing tetra-separations of a 4-connected host
/// cross. The preconditions are verified by the caller (`tetra` module);
/// here every structural claim of the classification is asserted and any
/// failure is an invariant error.
pub fn crossing_classification(g: &Graph, d: &CrossDiagram) -> Result<CrossingClass> {
    let sizes: Vec<usize> = d.links.iter().map(|l| l.len()).collect();
    let link_size = sizes[0];
    if sizes.iter().any(|&s| s != link_size) || link_size > 2 {
        return Err(Error::invariant(format!(
            "crossing links must share a size in {{0,1,2}}, got {sizes:?}"
        )));
    }
    if !d.diagonal_edges.is_empty() {
        return Err(Error::invariant("crossing pair has a diagonal edge"));
    }
    if !d.jumping_edges.is_empty() {
        return Err(Error::invariant("crossing pair has a jumping edge"));
    }
    if d.centre_size() != 4 - 2 * link_size {
        return Err(Error::invariant(format!(
            "centre size {} does not match link size {link_size}",
            d.centre_size()
        )));
    }
    let potter_corners: Vec<CornerId> = CornerId::ALL
        .into_iter()
        .filter(|&c| is_potter_corner(g, d, c))
        .collect();
    for de in &d.dangling_edges {
        if link_size != 2 {
            return Err(Error::invariant(
                "dangling edge outside the all-links-size-two case",
            ));
        }
        let corner = corner_between(de.from, de.through)
            .ok_or_else(|| Error::invariant("dangling edge between links of one separation"))?;
        if !potter_corners.contains(&corner) {
            return Err(Error::invariant(format!(
                "dangling edge at corner {corner:?} without that corner being potter"
            )));
        }
    }
    // Element partition: every separator element of each input separation
    // lies in exactly one link or in the centre.
    let accounted: usize = sizes.iter().sum::<usize>() + 2 * d.centre_size();
    if accounted != 8 {
        return Err(Error::invariant(
            "separator elements are not partitioned into links and centre",
        ));
    }
    Ok(CrossingClass {
        link_size,
        vertex_centre: d.vertex_centre.clone(),
        potter_corners,
    })
}

fn corner_between(s1: SideId, s2: SideId) -> Option<CornerId> {
    use SideId::*;
    match (s1.min(s2), s1.max(s2)) {
        (A, C) => Some(CornerId::AC),
        (A, D) => Some(CornerId::AD),
        (B, C) => Some(CornerId::BC),
        (B, D) => Some(CornerId::BD),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn separator_of_c4_bipartition() {
        let g = c4();
        let s = MixedSeparation::new(VertexSet::from([0, 1]), VertexSet::from([2, 3]));
        let sep = separator_of(&g, &s).unwrap();
        assert!(sep.vertices.is_empty());
        assert_eq!(sep.edges.len(), 2);
        assert_eq!(sep.order(), 2);
    }

    #[test]
    fn separator_of_degenerate_full_overlap() {
        let g = Graph::complete(5);
        let all = g.vertex_set();
        let s = MixedSeparation::new(all.clone(), all);
        let sep = separator_of(&g, &s).unwrap();
        assert_eq!(sep.vertices.len(), 5);
        assert!(sep.edges.is_empty());
        assert_eq!(sep.order(), 5);
    }

    #[test]
    fn separator_cover_violation_is_input_error() {
        let g = Graph::complete(3);
        let s = MixedSeparation::new(VertexSet::from([0]), VertexSet::from([1]));
        assert!(matches!(separator_of(&g, &s), Err(Error::Input(_))));
    }

    #[test]
    fn saw_neighbourhood_separation_has_order_k() {
        let g = generate::circular_saw(12, 4).unwrap();
        // Cut off vertex (0,0) = label 0 by its neighbourhood.
        let nbrs = g.neighbors(0).clone();
        let mut a = nbrs.clone();
        a.insert(0);
        let b: VertexSet = g.vertices().filter(|&v| v != 0).collect();
        let s = MixedSeparation::new(a, b);
        assert_eq!(s.order(&g), 4);
        assert_eq!(s.separator(&g).vertices, nbrs);
    }

    #[test]
    fn nestedness_reflexive_and_symmetric() {
        let s1 = MixedSeparation::new(VertexSet::from([0, 1, 2]), VertexSet::from([2, 3]));
        let s2 = MixedSeparation::new(VertexSet::from([0, 1]), VertexSet::from([1, 2, 3]));
        assert!(is_nested(&s1, &s1));
        assert_eq!(is_nested(&s1, &s2), is_nested(&s2, &s1));
    }

    #[test]
    fn growing_a_side_stays_nested() {
        let small = MixedSeparation::new(VertexSet::from([0, 1]), VertexSet::from([1, 2, 3, 4]));
        let large = MixedSeparation::new(VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4]));
        assert!(small.le(&large));
        assert!(is_nested(&small, &large));
    }

    #[test]
    fn perpendicular_bipartitions_of_k44_cross() {
        let g = generate::k4m(generate::K4mKind::Pure, 4).unwrap();
        // Left side Z = {0,1,2,3}; right side {4,5,6,7}.
        let z = VertexSet::from([0, 1, 2, 3]);
        let mut a = z.clone();
        a.extend([4, 5]);
        let mut b = z.clone();
        b.extend([6, 7]);
        let s1 = MixedSeparation::new(a, b);
        let mut c = z.clone();
        c.extend([4, 6]);
        let mut d = z.clone();
        d.extend([5, 7]);
        let s2 = MixedSeparation::new(c, d);
        assert!(crosses(&s1, &s2));
        let diagram = corner_diagram(&g, &s1, &s2).unwrap();
        assert!(diagram.links.iter().all(|l| l.is_empty()));
        assert_eq!(diagram.vertex_centre, z);
        assert!(diagram.diagonal_edges.is_empty());
    }

    #[test]
    fn double_wheel_rim_cuts_cross_with_unit_links() {
        let g = generate::double_wheel(6, false).unwrap();
        let hubs = [6u32, 7u32];
        // Separator {hubs} ∪ {rim edges (5,0),(2,3)} vs {(0,1),(3,4)}.
        let mk = |rims_a: &[u32]| {
            let mut a: VertexSet = rims_a.iter().copied().collect();
            a.extend(hubs);
            let b: VertexSet = (0..6)
                .filter(|v| !rims_a.contains(v))
                .chain(hubs)
                .collect();
            MixedSeparation::new(a, b)
        };
        let s1 = mk(&[0, 1, 2]);
        let s2 = mk(&[1, 2, 3]);
        assert!(crosses(&s1, &s2));
        let d = corner_diagram(&g, &s1, &s2).unwrap();
        assert!(d.links.iter().all(|l| l.len() == 1));
        assert_eq!(d.vertex_centre, VertexSet::from([6, 7]));
    }

    #[test]
    fn k4_ring_arc_cuts_cross_with_links_of_size_two() {
        let ring = generate::cycle_of_cliques(4, 4).unwrap();
        let g = &ring.graph;
        // Arc cuts at opposite adhesion pairs interleave.
        let arc = |parts: [usize; 2]| -> VertexSet {
            parts
                .iter()
                .flat_map(|&i| ring.parts[i].iter().copied())
                .collect()
        };
        let s1 = MixedSeparation::new(arc([0, 1]), arc([2, 3]));
        let s2 = MixedSeparation::new(arc([1, 2]), arc([3, 0]));
        assert_eq!(s1.order(g), 4);
        assert!(crosses(&s1, &s2));
        let d = corner_diagram(g, &s1, &s2).unwrap();
        assert!(d.links.iter().all(|l| l.len() == 2));
        assert!(d.vertex_centre.is_empty());
        assert!(d.diagonal_edges.is_empty());
        assert!(d.jumping_edges.is_empty());
    }

    #[test]
    fn nested_pair_has_an_empty_corner() {
        let g = Graph::cycle(6);
        let s1 = MixedSeparation::new(VertexSet::from([0, 1, 2]), VertexSet::from([2, 3, 4, 5, 0]));
        let s2 = MixedSeparation::new(
            VertexSet::from([0, 1, 2, 3]),
            VertexSet::from([3, 4, 5, 0]),
        );
        assert!(is_nested(&s1, &s2));
        let d = corner_diagram(&g, &s1, &s2).unwrap();
        assert!(d.corners.iter().any(|c| c.is_empty()));
    }

    #[test]
    fn all_links_empty_diagram_is_never_potter() {
        let g = generate::k4m(generate::K4mKind::Pure, 4).unwrap();
        let z = VertexSet::from([0, 1, 2, 3]);
        let mut a = z.clone();
        a.extend([4, 5]);
        let mut b = z.clone();
        b.extend([6, 7]);
        let mut c = z.clone();
        c.extend([4, 6]);
        let mut d_side = z.clone();
        d_side.extend([5, 7]);
        let s1 = MixedSeparation::new(a, b);
        let s2 = MixedSeparation::new(c, d_side);
        let d = corner_diagram(&g, &s1, &s2).unwrap();
        for corner in CornerId::ALL {
            assert!(!is_potter_corner(&g, &d, corner));
        }
    }

    #[test]
    fn unit_link_diagram_is_never_potter() {
        let g = generate::double_wheel(6, false).unwrap();
        let hubs = [6u32, 7u32];
        let mk = |rims_a: &[u32]| {
            let mut a: VertexSet = rims_a.iter().copied().collect();
            a.extend(hubs);
            let b: VertexSet = (0..6)
                .filter(|v| !rims_a.contains(v))
                .chain(hubs)
                .collect();
            MixedSeparation::new(a, b)
        };
        let d = corner_diagram(&g, &mk(&[0, 1, 2]), &mk(&[1, 2, 3])).unwrap();
        for corner in CornerId::ALL {
            assert!(!is_potter_corner(&g, &d, corner));
        }
    }

    #[test]
    fn potter_configuration_graph() {
        let (g, s1, s2) = generate::potter_witness();
        let d = corner_diagram(&g, &s1, &s2).unwrap();
        assert!(d.corner(CornerId::AC).is_empty());
        assert_eq!(d.link(SideId::A).len(), 2);
        assert_eq!(d.link(SideId::C).len(), 2);
        assert!(is_potter_corner(&g, &d, CornerId::AC));
        assert!(!is_potter_corner(&g, &d, CornerId::AD));
        assert!(!is_potter_corner(&g, &d, CornerId::BC));
    }

    #[test]
    fn submodularity_of_opposite_corner_separators() {
        // |L(A,C)| + |L(B,D)| ≤ |S(A,B)| + |S(C,D)| over assorted pairs.
        let g = generate::double_wheel(6, true).unwrap();
        let hubs = [6u32, 7u32];
        let mk = |rims_a: &[u32]| {
            let mut a: VertexSet = rims_a.iter().copied().collect();
            a.extend(hubs);
            let b: VertexSet = (0..6)
                .filter(|v| !rims_a.contains(v))
                .chain(hubs)
                .collect();
            MixedSeparation::new(a, b)
        };
        let seps = [mk(&[0, 1]), mk(&[1, 2, 3]), mk(&[2, 3]), mk(&[0, 1, 2])];
        for s1 in &seps {
            for s2 in &seps {
                if s1 == s2 {
                    continue;
                }
                let d = corner_diagram(&g, s1, s2).unwrap();
                let lhs = d.corner_separator(CornerId::AC).len()
                    + d.corner_separator(CornerId::BD).len();
                let rhs = s1.order(&g) + s2.order(&g);
                assert!(lhs <= rhs, "submodularity failed: {lhs} > {rhs}");
            }
        }
    }
}
