use std::collections::BTreeMap;

use super::{Digraph, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_ORIENTATION_EDGE_CAP: usize = 20;

/// Number of subdivision vertices placed on each edge.
///
/// Counts are stored in the lexicographic edge order of the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionProfile {
    counts: Vec<usize>,
}

impl SubdivisionProfile {
    pub fn uniform(g: &Graph, k: usize) -> Self {
        SubdivisionProfile { counts: vec![k; g.m()] }
    }

    /// Counts in lexicographic edge order; the length must equal `‖g‖`.
    pub fn from_counts(g: &Graph, counts: Vec<usize>) -> Result<Self> {
        if counts.len() != g.m() {
            return Err(Error::Param(format!(
                "profile has {} entries for {} edges",
                counts.len(),
                g.m()
            )));
        }
        Ok(SubdivisionProfile { counts })
    }

    /// The map's keys must be exactly the edge set of `g` (as `(min, max)` pairs).
    pub fn from_map(g: &Graph, map: &BTreeMap<(usize, usize), usize>) -> Result<Self> {
        let mut counts = Vec::with_capacity(g.m());
        for (u, v) in g.edges() {
            match map.get(&(u, v)) {
                Some(&k) => counts.push(k),
                None => return Err(Error::Param(format!("profile misses edge ({u},{v})"))),
            }
        }
        if map.len() != g.m() {
            return Err(Error::Param("profile names pairs that are not edges".into()));
        }
        Ok(SubdivisionProfile { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

/// A subdivided graph together with the path replacing each source edge.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    /// For each source edge `(u, v)`, `u < v`, the full vertex path `u, x_1, …, x_k, v`.
    pub paths: Vec<((usize, usize), Vec<usize>)>,
}

/// Replaces every edge by a path; originals keep indices `0..n`, new
/// vertices are appended edge by edge (lexicographic) and along each path
/// from the smaller endpoint.
pub fn subdivide_with_paths(g: &Graph, profile: &SubdivisionProfile) -> Result<Subdivision> {
    if profile.counts.len() != g.m() {
        return Err(Error::Param(format!(
            "profile has {} entries for {} edges",
            profile.counts.len(),
            g.m()
        )));
    }
    let total: usize = g.n() + profile.counts.iter().sum::<usize>();
    let mut next = g.n();
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(g.m());
    for ((u, v), &k) in g.edges().zip(&profile.counts) {
        let mut path = Vec::with_capacity(k + 2);
        path.push(u);
        path.extend(next..next + k);
        path.push(v);
        next += k;
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        paths.push(((u, v), path));
    }
    Ok(Subdivision {
        graph: Graph::from_edges_dedup(total, edges),
        paths,
    })
}

pub fn subdivide(g: &Graph, profile: &SubdivisionProfile) -> Result<Graph> {
    Ok(subdivide_with_paths(g, profile)?.graph)
}

/// `G^(p)`: every edge replaced by a path with `p` internal vertices.
pub fn subdivide_exact(g: &Graph, p: usize) -> Graph {
    subdivide_with_paths(g, &SubdivisionProfile::uniform(g, p))
        .expect("uniform profile matches edge set")
        .graph
}

/// Lexicographic product `G[K_k]`; vertex `(u, i)` gets index `u*k + i`.
pub fn blow_up(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Param("blow-up factor must be positive".into()));
    }
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((u * k + i, u * k + j));
            }
        }
    }
    for (u, v) in g.edges() {
        for i in 0..k {
            for j in 0..k {
                edges.push((u * k + i, v * k + j));
            }
        }
    }
    Ok(Graph::from_edges_dedup(g.n() * k, edges))
}

/// Distance power: `u ~ v` iff `0 < dist(u, v) ≤ d`.
pub fn power(g: &Graph, d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::Param("power exponent must be positive".into()));
    }
    let mut edges = Vec::new();
    for u in 0..g.n() {
        let dist = g.distances_from(u);
        for (v, &dv) in dist.iter().enumerate().skip(u + 1) {
            if dv <= d {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges_dedup(g.n(), edges))
}

pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for part in parts {
        edges.extend(part.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += part.n();
    }
    Graph::from_edges_dedup(offset, edges)
}

/// Orients every edge from the earlier to the later vertex of `order`.
pub fn acyclic_orientation(g: &Graph, order: &[usize]) -> Result<Digraph> {
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::Param(format!(
            "order has {} entries for {n} vertices",
            order.len()
        )));
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || rank[v] != usize::MAX {
            return Err(Error::Param("order is not a permutation of the vertices".into()));
        }
        rank[v] = i;
    }
    Ok(Digraph::from_arcs_dedup(
        n,
        g.edges()
            .map(|(u, v)| if rank[u] < rank[v] { (u, v) } else { (v, u) })
            .collect::<Vec<_>>(),
    ))
}

/// Iterator over all `2^‖G‖` orientations.
///
/// Orientation `i` directs edge `j` (lexicographic order) from the smaller
/// endpoint to the larger one iff bit `j` of `i` is clear.
pub struct Orientations {
    n: usize,
    edges: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for Orientations {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let arcs = self
            .edges
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| if mask >> j & 1 == 0 { (u, v) } else { (v, u) });
        Some(Digraph::from_arcs_dedup(self.n, arcs.collect::<Vec<_>>()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn orientations(g: &Graph, edge_cap: usize) -> Result<Orientations> {
    let cap = edge_cap.min(62);
    if g.m() > cap {
        return Err(Error::cap("orientations (edge count)", cap, g.m()));
    }
    Ok(Orientations {
        n: g.n(),
        edges: g.edge_list(),
        next: 0,
        end: 1u64 << g.m(),
    })
}

/// A shortest cycle as a vertex sequence, or `None` for forests.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|b| len < b.0) {
                        best = Some((len, u, w, parent.clone()));
                    }
                }
            }
        }
    }
    let (_, u, w, parent) = best?;
    let climb = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let mut left = climb(u);
    let right = climb(w);
    // Both climbs end at the BFS root; a minimum-length closed walk is a simple cycle.
    left.reverse();
    left.extend_from_slice(&right[..right.len() - 1]);
    Some(left)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        canonical_form(a) == canonical_form(b)
    }

    #[test]
    fn subdivision_examples() {
        let k4 = Graph::complete(4);
        let s = subdivide_exact(&k4, 1);
        assert_eq!((s.n(), s.m()), (10, 12));
        assert_eq!(subdivide_exact(&Graph::cycle(5), 0), Graph::cycle(5));
        assert!(isomorphic(&subdivide_exact(&Graph::complete(3), 1), &Graph::cycle(6)));
        let k3 = Graph::complete(3);
        let profile = SubdivisionProfile::from_counts(&k3, vec![1, 1, 0]).unwrap();
        assert!(isomorphic(&subdivide(&k3, &profile).unwrap(), &Graph::cycle(5)));
        for n in 2..7 {
            let g = subdivide_exact(&Graph::complete(n), 3);
            assert_eq!(g.n(), n + 3 * n * (n - 1) / 2);
        }
    }

    #[test]
    fn subdivision_vertex_order_is_documented_order() {
        let s = subdivide_with_paths(&Graph::path(3), &SubdivisionProfile::uniform(&Graph::path(3), 2)).unwrap();
        assert_eq!(s.paths[0].1, vec![0, 3, 4, 1]);
        assert_eq!(s.paths[1].1, vec![1, 5, 6, 2]);
    }

    #[test]
    fn profile_from_map_requires_exact_edge_set() {
        let p3 = Graph::path(3);
        let mut map = BTreeMap::from([((0, 1), 1)]);
        assert!(SubdivisionProfile::from_map(&p3, &map).is_err());
        map.insert((1, 2), 0);
        assert_eq!(SubdivisionProfile::from_map(&p3, &map).unwrap().counts(), &[1, 0]);
        map.insert((0, 2), 0);
        assert!(SubdivisionProfile::from_map(&p3, &map).is_err());
    }

    #[test]
    fn blow_up_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(blow_up(&c5, 1).unwrap(), c5);
        let b = blow_up(&c5, 2).unwrap();
        assert_eq!((b.n(), b.m()), (10, 25));
        assert!(blow_up(&c5, 0).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&Graph::path(3), 2).unwrap(), Graph::complete(3));
        let c6 = Graph::cycle(6);
        assert_eq!(power(&c6, 1).unwrap(), c6);
        let sq = power(&c6, 2).unwrap();
        assert!((0..6).all(|v| sq.degree(v) == 4));
    }

    #[test]
    fn orientation_counts() {
        assert_eq!(orientations(&Graph::complete(2), 20).unwrap().count(), 2);
        assert_eq!(orientations(&Graph::path(3), 20).unwrap().count(), 4);
        let all: Vec<_> = orientations(&Graph::complete(3), 20).unwrap().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all.iter().filter(|d| !d.is_acyclic()).count(), 2);
        assert!(all.iter().all(|d| d.is_oriented() && d.arc_count() == 3));
        assert!(matches!(orientations(&Graph::complete(7), 20), Err(Error::Cap { .. })));
    }

    #[test]
    fn acyclic_orientation_examples() {
        let t = acyclic_orientation(&Graph::complete(3), &[0, 1, 2]).unwrap();
        assert_eq!(t.arc_list(), vec![(0, 1), (0, 2), (1, 2)]);
        let c = acyclic_orientation(&Graph::cycle(4), &[0, 1, 2, 3]).unwrap();
        assert!(c.is_acyclic());
        let c = acyclic_orientation(&Graph::cycle(4), &[2, 0, 3, 1]).unwrap();
        assert!(c.is_acyclic());
        assert!(acyclic_orientation(&Graph::cycle(4), &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(5)), Some(5));
        assert_eq!(girth(&Graph::path(5)), None);
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Some(4));
        let c = shortest_cycle(&Graph::cycle(7)).unwrap();
        assert_eq!(c.len(), 7);
        let g = Graph::cycle(7);
        for i in 0..7 {
            assert!(g.has_edge(c[i], c[(i + 1) % 7]));
        }
    }
}
