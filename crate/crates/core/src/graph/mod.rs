//! Finite simple graphs and loopless digraphs on dense `0..n` vertex indices.
//!
//! Both types are immutable after construction. Neighbour lists are kept
//! sorted so iteration order, and therefore every search built on top of
//! these types, is deterministic.

mod canon;
mod codec;
mod corpus;
mod generate;
mod ops;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use codec::{parse_digraph, parse_graph, serialize_digraph, serialize_graph, Format, GRAPH6_MAX_VERTICES};
pub use corpus::{all_graphs, connected_graphs, Corpus};
pub use generate::{generate, mycielskian, split_seed, Family, GeneratorSeed, GraphSpec};
pub use ops::{
    acyclic_orientation, blow_up, disjoint_union, girth, orientations, power, shortest_cycle, subdivide,
    subdivide_exact, subdivide_with_paths, Orientations, Subdivision, SubdivisionProfile, DEFAULT_ORIENTATION_EDGE_CAP,
};

use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::Validation(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Internal constructor for edge lists known to be simple up to duplicates,
    /// which are silently merged.
    pub(crate) fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { adj, m: m / 2 }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Self::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{s,t}` with parts `0..s` and `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        Self::from_edges_dedup(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
    }

    /// Vertex count `|G|`.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count `‖G‖`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Subgraph induced by `vertices`, relabelled in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && index[w] > i)
                .map(move |&w| (i, index[w]))
        });
        Graph::from_edges_dedup(vertices.len(), edges.collect::<Vec<_>>())
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let edges = self.edges().filter(|&e| e != (u.min(v), u.max(v)));
        Graph::from_edges_dedup(self.n(), edges.collect::<Vec<_>>())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// A loopless directed graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arcs: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arcs: 0,
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "arc ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("loop at vertex {u}")));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Validation(format!("duplicate arc ({u},{})", w[0])));
            }
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        Ok(Digraph {
            out,
            inn,
            arcs: arcs.len(),
        })
    }

    pub(crate) fn from_arcs_dedup(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            debug_assert!(u != v && u < n && v < n);
            out[u].push(v);
        }
        let mut inn = vec![Vec::new(); n];
        let mut count = 0;
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            count += list.len();
            for &v in list.iter() {
                inn[v].push(u);
            }
        }
        Digraph { out, inn, arcs: count }
    }

    /// Each edge of `g` becomes a pair of opposite arcs.
    pub fn symmetric(g: &Graph) -> Self {
        Self::from_arcs_dedup(g.n(), g.edges().flat_map(|(u, v)| [(u, v), (v, u)]))
    }

    /// Directed path `0 → 1 → … → n-1`.
    pub fn directed_path(n: usize) -> Self {
        Self::from_arcs_dedup(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`; `n` must be at least 2.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 2, "directed cycle needs at least two vertices");
        Self::from_arcs_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn arc_list(&self) -> Vec<(usize, usize)> {
        self.arcs().collect()
    }

    /// True when no pair of opposite arcs exists.
    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Kahn's algorithm; `None` when a directed cycle exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.inn[v].len()).collect();
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &w in &self.out[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Number of vertices on a longest directed path, or `None` if the digraph has a cycle.
    pub fn longest_path_vertices(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut best = vec![1usize; self.n()];
        for &u in order.iter().rev() {
            for &w in &self.out[u] {
                best[u] = best[u].max(best[w] + 1);
            }
        }
        Some(best.into_iter().max().unwrap_or(0))
    }

    /// Underlying simple graph (opposite arcs merge into one edge).
    pub fn underlying(&self) -> Graph {
        Graph::from_edges_dedup(self.n(), self.arcs().map(|(u, v)| (u.min(v), u.max(v))))
    }

    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let arcs: Vec<_> = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| {
                let index = &index;
                self.out[v]
                    .iter()
                    .filter(move |&&w| index[w] != usize::MAX)
                    .map(move |&w| (i, index[w]))
            })
            .collect();
        Digraph::from_arcs_dedup(vertices.len(), arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_loops_and_duplicates() {
        assert!(matches!(Graph::from_edges(3, &[(0, 0)]), Err(Error::Validation(_))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::Validation(_))));
    }

    #[test]
    fn standard_families_have_expected_sizes() {
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::cycle(5).m(), 5);
        assert_eq!(Graph::path(4).m(), 3);
        assert_eq!(Graph::complete_bipartite(2, 3).m(), 6);
    }

    #[test]
    fn longest_path_and_acyclicity() {
        let p = Digraph::directed_path(4);
        assert_eq!(p.longest_path_vertices(), Some(4));
        assert!(Digraph::directed_cycle(3).topological_order().is_none());
        assert!(Digraph::symmetric(&Graph::path(2)).longest_path_vertices().is_none());
        assert!(!Digraph::symmetric(&Graph::path(2)).is_oriented());
    }

    #[test]
    fn induced_subgraph_relabels_in_given_order() {
        let c = Graph::cycle(5);
        let h = c.induced_subgraph(&[4, 0, 1]);
        assert_eq!(h.edge_list(), vec![(0, 1), (1, 2)]);
    }
}
