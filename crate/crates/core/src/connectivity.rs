//! Vertex connectivity tests and the Menger variant for independent path
//! systems between vertex sets, implemented by unit-capacity flow.
//!
//! "Independent" X–Y paths are internally disjoint and their interiors
//! avoid X ∪ Y; paths may share endpoints inside X or Y. Every X–Y edge of
//! the graph counts as a length-one path, and the remaining paths are
//! pairwise disjoint interior paths of G − (X ∪ Y), which is exactly the
//! reduction that makes unit-capacity flow applicable.

use std::collections::{BTreeMap, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separation::MixedSeparation;

/// One witnessing family member: the full vertex sequence from X to Y.
pub type Path = Vec<Vertex>;

#[derive(Debug, Clone)]
pub struct PathSystem {
    pub count: usize,
    pub paths: Vec<Path>,
}

const INF: i32 = i32::MAX / 2;

/// Unit-capacity max flow between two vertex sets after vertex splitting.
/// Interior vertices have capacity 1; source and sink arcs are uncapped, so
/// minimum cuts consist of interior vertices and interior edges only.
struct SplitNetwork {
    /// Interior vertices of G − (X ∪ Y), in sorted order.
    interior: Vec<Vertex>,
    /// cap[a][b] for nodes: 0 = source, 1 = sink, 2+2i = v_in, 3+2i = v_out.
    cap: Vec<Vec<i32>>,
}

impl SplitNetwork {
    fn build(g: &Graph, x: &VertexSet, y: &VertexSet) -> Self {
        let interior: Vec<Vertex> = g
            .vertices()
            .filter(|v| !x.contains(v) && !y.contains(v))
            .collect();
        let index: BTreeMap<Vertex, usize> =
            interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = 2 + 2 * interior.len();
        let mut cap = vec![vec![0i32; n]; n];
        for (i, &v) in interior.iter().enumerate() {
            cap[2 + 2 * i][3 + 2 * i] = 1;
            let nbrs = g.neighbors(v);
            if nbrs.iter().any(|w| x.contains(w)) {
                cap[0][2 + 2 * i] = INF;
            }
            if nbrs.iter().any(|w| y.contains(w)) {
                cap[3 + 2 * i][1] = INF;
            }
            for &w in nbrs {
                if let Some(&j) = index.get(&w) {
                    cap[3 + 2 * i][2 + 2 * j] = 1;
                }
            }
        }
        SplitNetwork { interior, cap }
    }

    /// Edmonds–Karp; capacities are tiny so this is plenty.
    fn max_flow(&mut self) -> i32 {
        let n = self.cap.len();
        let mut flow = 0;
        loop {
            let mut parent = vec![usize::MAX; n];
            parent[0] = 0;
            let mut queue = VecDeque::from([0usize]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if parent[v] == usize::MAX && self.cap[u][v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[1] == usize::MAX {
                return flow;
            }
            let mut v = 1;
            let mut bottleneck = INF;
            while v != 0 {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u][v]);
                v = u;
            }
            let mut v = 1;
            while v != 0 {
                let u = parent[v];
                self.cap[u][v] -= bottleneck;
                self.cap[v][u] += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
    }

    /// Nodes reachable from the source in the residual network.
    fn residual_reachable(&self) -> Vec<bool> {
        let n = self.cap.len();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && self.cap[u][v] > 0 {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Decomposes the integral flow into vertex-disjoint interior paths.
    fn decompose(&mut self, original: &SplitNetwork) -> Vec<Vec<Vertex>> {
        let n = self.cap.len();
        // flow on (a,b) = original cap - residual cap, positive part
        let mut flow = vec![vec![0i32; n]; n];
        for a in 0..n {
            for b in 0..n {
                flow[a][b] = (original.cap[a][b] - self.cap[a][b]).max(0);
            }
        }
        let mut paths = Vec::new();
        loop {
            let Some(mut cur) = (0..n).find(|&b| flow[0][b] > 0) else {
                break;
            };
            flow[0][cur] -= 1;
            let mut path = Vec::new();
            while cur != 1 {
                // cur alternates v_in -> v_out; record on v_in
                if cur >= 2 && (cur - 2) % 2 == 0 {
                    path.push(self.interior[(cur - 2) / 2]);
                }
                let next = (0..n).find(|&b| flow[cur][b] > 0).expect("broken flow");
                flow[cur][next] -= 1;
                cur = next;
            }
            paths.push(path);
        }
        paths
    }
}

fn check_xy(x: &VertexSet, y: &VertexSet) -> Result<()> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::input("X and Y must be nonempty"));
    }
    if x.intersection(y).next().is_some() {
        return Err(Error::input("X and Y must be disjoint"));
    }
    Ok(())
}

/// Maximum number of independent X–Y paths plus one witnessing family.
pub fn max_independent_paths(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<PathSystem> {
    check_xy(x, y)?;
    let mut paths: Vec<Path> = Vec::new();
    for &u in x {
        for &v in g.neighbors(u) {
            if y.contains(&v) {
                paths.push(vec![u, v]);
            }
        }
    }
    let fresh = SplitNetwork::build(g, x, y);
    let mut net = SplitNetwork::build(g, x, y);
    let flow = net.max_flow();
    for interior in net.decompose(&fresh) {
        let first = *interior.first().expect("interior path is nonempty");
        let last = *interior.last().unwrap();
        let sx = *g
            .neighbors(first)
            .iter()
            .find(|w| x.contains(w))
            .expect("path start touches X");
        let sy = *g
            .neighbors(last)
            .iter()
            .find(|w| y.contains(w))
            .expect("path end touches Y");
        let mut full = vec![sx];
        full.extend(interior);
        full.push(sy);
        paths.push(full);
    }
    let count = paths.len();
    debug_assert_eq!(count as i32, flow + (count as i32 - flow));
    verify_independent(g, x, y, &paths)?;
    Ok(PathSystem { count, paths })
}

/// Checks the defining properties of an independent X–Y path family.
fn verify_independent(g: &Graph, x: &VertexSet, y: &VertexSet, paths: &[Path]) -> Result<()> {
    let mut used_interior = VertexSet::new();
    for p in paths {
        if p.len() < 2 || !x.contains(&p[0]) || !y.contains(p.last().unwrap()) {
            return Err(Error::invariant("witness path does not join X to Y"));
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::invariant("witness path uses a non-edge"));
            }
        }
        for &v in &p[1..p.len() - 1] {
            if x.contains(&v) || y.contains(&v) {
                return Err(Error::invariant("witness path interior meets X ∪ Y"));
            }
            if !used_interior.insert(v) {
                return Err(Error::invariant("witness paths share an interior vertex"));
            }
        }
    }
    Ok(())
}

/// Minimum order of a mixed-separation of `g` that strongly separates X
/// from Y, together with a witnessing separation. Equality with the path
/// count is asserted on every call.
pub fn min_strong_separation(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<(usize, MixedSeparation)> {
    check_xy(x, y)?;
    let path_count = max_independent_paths(g, x, y)?.count;
    let mut net = SplitNetwork::build(g, x, y);
    net.max_flow();
    let reach = net.residual_reachable();
    let mut side_a: VertexSet = x.clone();
    let mut cut: VertexSet = VertexSet::new();
    for (i, &v) in net.interior.iter().enumerate() {
        let v_in = reach[2 + 2 * i];
        let v_out = reach[3 + 2 * i];
        if v_out {
            side_a.insert(v);
        } else if v_in {
            cut.insert(v);
        }
    }
    let mut a = side_a.clone();
    a.extend(cut.iter().copied());
    let b: VertexSet = g
        .vertices()
        .filter(|v| !side_a.contains(v))
        .collect();
    let sep = MixedSeparation::new(a, b);
    let order = sep.separator(g).order();
    if order != path_count {
        return Err(Error::invariant(format!(
            "max-flow/min-cut duality failed: {path_count} paths vs separation order {order}"
        )));
    }
    if !sep.strongly_separates(x, y) {
        return Err(Error::invariant(
            "minimum separation does not strongly separate X and Y",
        ));
    }
    Ok((order, sep))
}

/// Plain k-connectivity: more than k vertices and no vertex set of size
/// < k disconnects the graph. Exhaustive over candidate separators, which
/// is exactly right at desk scale.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.vertex_count() <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    for size in 1..k {
        if size >= g.vertex_count() {
            break;
        }
        for cut in verts.iter().copied().combinations(size) {
            let rest: VertexSet = g.vertices().filter(|v| !cut.contains(v)).collect();
            if rest.is_empty() {
                continue;
            }
            if !g.induced_subgraph(&rest).unwrap().is_connected() {
                return false;
            }
        }
    }
    true
}

/// Quasi-k-connected: (k−1)-connected and every genuine (k−1)-separation
/// has a singleton strict side. Separators are enumerated exhaustively.
pub fn is_quasi_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 2, "quasi-k-connectivity needs k >= 2");
    if !is_k_connected(g, k - 1) {
        return false;
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    if verts.len() < k {
        return true;
    }
    for cut in verts.iter().copied().combinations(k - 1) {
        let rest: VertexSet = g.vertices().filter(|v| !cut.contains(v)).collect();
        let comps = g.induced_subgraph(&rest).unwrap().components();
        if comps.len() < 2 {
            continue;
        }
        // Every bipartition of the components into two nonempty groups is a
        // (k−1)-separation; all of them need a singleton strict side.
        let m = comps.len();
        for mask in 1..(1u32 << (m - 1)) {
            let left: usize = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| comps[i].len())
                .sum();
            let right: usize = comps.iter().map(|c| c.len()).sum::<usize>() - left;
            if left != 1 && right != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::edge;

    #[test]
    fn single_edge_has_one_path_and_cut() {
        let g = Graph::from_edges([(0, 1)]).unwrap();
        let x = VertexSet::from([0]);
        let y = VertexSet::from([1]);
        let ps = max_independent_paths(&g, &x, &y).unwrap();
        assert_eq!(ps.count, 1);
        let (order, sep) = min_strong_separation(&g, &x, &y).unwrap();
        assert_eq!(order, 1);
        let s = sep.separator(&g);
        assert!(s.vertices.is_empty());
        assert_eq!(s.edges, std::collections::BTreeSet::from([edge(0, 1)]));
    }

    #[test]
    fn overlapping_sets_are_input_error() {
        let g = Graph::complete(4);
        let x = VertexSet::from([0, 1]);
        let y = VertexSet::from([1, 2]);
        assert!(matches!(
            max_independent_paths(&g, &x, &y),
            Err(Error::Input(_))
        ));
    }

    /// Brute-force maximum independent path packing, for cross-checking the
    /// flow implementation on tiny graphs. Enumerates all simple X–Y paths
    /// and searches for the largest interior-disjoint subfamily.
    fn brute_force_packing(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
        fn all_paths(
            g: &Graph,
            x: &VertexSet,
            y: &VertexSet,
            cur: &mut Vec<Vertex>,
            out: &mut Vec<Vec<Vertex>>,
        ) {
            let last = *cur.last().unwrap();
            for &w in g.neighbors(last) {
                if cur.contains(&w) || x.contains(&w) {
                    continue;
                }
                if y.contains(&w) {
                    let mut p = cur.clone();
                    p.push(w);
                    out.push(p);
                } else {
                    cur.push(w);
                    all_paths(g, x, y, cur, out);
                    cur.pop();
                }
            }
        }
        let mut paths = Vec::new();
        for &s in x {
            all_paths(g, x, y, &mut vec![s], &mut paths);
        }
        fn search(paths: &[Vec<Vertex>], from: usize, used: &mut VertexSet, best: &mut usize, count: usize) {
            *best = (*best).max(count);
            for i in from..paths.len() {
                let interior = &paths[i][1..paths[i].len() - 1];
                if interior.iter().any(|v| used.contains(v)) {
                    continue;
                }
                for &v in interior {
                    used.insert(v);
                }
                search(paths, i + 1, used, best, count + 1);
                for v in interior {
                    used.remove(v);
                }
            }
        }
        let mut best = 0;
        search(&paths, 0, &mut VertexSet::new(), &mut best, 0);
        best
    }

    #[test]
    fn k5_pair_sets_have_five_paths() {
        let g = Graph::complete(5);
        let x = VertexSet::from([1, 2]);
        let y = VertexSet::from([3, 4]);
        assert_eq!(brute_force_packing(&g, &x, &y), 5);
        assert_eq!(max_independent_paths(&g, &x, &y).unwrap().count, 5);
    }

    #[test]
    fn flow_agrees_with_brute_force_on_small_graphs() {
        let cases = [
            Graph::cycle(6),
            generate::double_wheel(4, true).unwrap(),
            generate::k4m(generate::K4mKind::Pure, 3).unwrap(),
            Graph::complete(6),
        ];
        for g in &cases {
            let vs: Vec<Vertex> = g.vertices().collect();
            let x = VertexSet::from([vs[0]]);
            let y = VertexSet::from([vs[vs.len() - 1], vs[vs.len() - 2]]);
            if x.intersection(&y).next().is_some() {
                continue;
            }
            assert_eq!(
                max_independent_paths(g, &x, &y).unwrap().count,
                brute_force_packing(g, &x, &y),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn saw_hub_edge_neighbourhoods_have_many_paths() {
        let g = generate::circular_saw(20, 4).unwrap();
        // Edges (0,0)-(0,1) and (10,0)-(10,1); labels v and 20+v.
        let x = g.neighborhood_of_set(&VertexSet::from([0, 20]));
        let y = g.neighborhood_of_set(&VertexSet::from([10, 30]));
        let ps = max_independent_paths(&g, &x, &y).unwrap();
        assert!(ps.count >= 6, "expected ≥ 2(k−1) = 6 paths, got {}", ps.count);
    }

    /// Exhaustive mixed-separation sweep: every (A,B) with A ∪ B = V is
    /// generated from a base-3 assignment. Independent of the flow path.
    fn brute_force_min_strong_separation(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
        let verts: Vec<Vertex> = g.vertices().collect();
        let n = verts.len();
        let mut best = usize::MAX;
        for mut mask in 0..3usize.pow(n as u32) {
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
            let sep = MixedSeparation::new(a, b);
            if !sep.is_proper() || !sep.strongly_separates(x, y) {
                continue;
            }
            best = best.min(sep.separator(g).order());
        }
        best
    }

    #[test]
    fn c6_opposite_neighbourhoods_separate_at_order_two() {
        let g = Graph::cycle(6);
        let x = g.neighborhood_of_set(&VertexSet::from([0]));
        let y = g.neighborhood_of_set(&VertexSet::from([3]));
        assert_eq!(brute_force_min_strong_separation(&g, &x, &y), 2);
        let (order, _) = min_strong_separation(&g, &x, &y).unwrap();
        assert_eq!(order, 2);
    }

    #[test]
    fn k_connected_graphs_have_k_paths_between_any_sets() {
        let g = generate::circular_saw(12, 4).unwrap();
        assert!(is_k_connected(&g, 4));
        let x = VertexSet::from([0, 1]);
        let y = VertexSet::from([6, 7]);
        assert!(max_independent_paths(&g, &x, &y).unwrap().count >= 4);
    }

    #[test]
    fn is_k_connected_basics() {
        assert!(is_k_connected(&Graph::complete(5), 4));
        assert!(!is_k_connected(&Graph::cycle(6), 3));
        assert!(is_k_connected(&Graph::cycle(6), 2));
        assert!(!is_k_connected(&Graph::complete(4), 4), "|V| must exceed k");
    }

    #[test]
    fn quasi_connectivity_examples() {
        assert!(is_quasi_k_connected(&Graph::complete(5), 5));
        assert!(is_quasi_k_connected(
            &generate::circular_saw(12, 4).unwrap(),
            5
        ));
        let dw = generate::double_wheel(6, false).unwrap();
        assert!(!is_quasi_k_connected(&dw, 5));
        // Witness: two opposite rim vertices plus the two hubs leave two
        // rim arcs of size two each.
        let cut = VertexSet::from([0, 3, 6, 7]);
        let rest: VertexSet = dw.vertices().filter(|v| !cut.contains(v)).collect();
        let comps = dw.induced_subgraph(&rest).unwrap().components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }
}
