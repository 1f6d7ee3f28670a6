//! Canonical labelling by individualisation-refinement.
//!
//! Colour refinement is run on an ordered partition; when it stalls, each
//! vertex of the first non-singleton cell is individualised in turn and the
//! search recurses. Every leaf is a discrete partition, i.e. a labelling;
//! the canonical form is the lexicographically smallest upper-triangle bit
//! string over all leaves. Refinement only ever looks at neighbour counts
//! and cell positions, never at vertex indices, so the result is an
//! isomorphism invariant. No automorphism pruning: graphs here are small.

use super::Graph;

/// Isomorphism-invariant encoding: `(n, packed upper-triangle bits)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let n = g.n();
    loop {
        let mut changed = false;
        'splitters: for s in 0..cells.len() {
            let mut counts = vec![0usize; n];
            for &v in &cells[s] {
                for &w in g.neighbors(v) {
                    counts[w] += 1;
                }
            }
            for c in 0..cells.len() {
                let cell = &cells[c];
                if cell.len() < 2 {
                    continue;
                }
                let first = counts[cell[0]];
                if cell.iter().all(|&v| counts[v] == first) {
                    continue;
                }
                let mut sorted = cell.clone();
                sorted.sort_by_key(|&v| counts[v]);
                let mut pieces: Partition = Vec::new();
                for v in sorted {
                    match pieces.last_mut() {
                        Some(p) if counts[p[0]] == counts[v] => p.push(v),
                        _ => pieces.push(vec![v]),
                    }
                }
                cells.splice(c..=c, pieces);
                changed = true;
                break 'splitters;
            }
        }
        if !changed {
            return cells;
        }
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = encode(g, &order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
        }
        Some(target) => {
            for &v in &cells[target] {
                let mut next = cells.clone();
                let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
                next.splice(target..=target, [vec![v], rest]);
                search(g, next, best);
            }
        }
    }
}

/// `order[i]` is the original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut cells: Partition = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    best.expect("non-empty graph has a leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let order = canonical_labeling(g);
    CanonicalForm {
        n: g.n(),
        bits: encode(g, &order),
    }
}

impl CanonicalForm {
    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges_dedup(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(g.n(), &g.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabelled_graphs_share_a_form() {
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 5, 4, 6];
        assert_eq!(canonical_form(&petersen), canonical_form(&relabel(&petersen, &perm)));
        let back = canonical_form(&petersen).to_graph();
        assert_eq!(canonical_form(&back), canonical_form(&petersen));
    }

    #[test]
    fn non_isomorphic_regular_graphs_differ() {
        // C_6 and two disjoint triangles are both 2-regular on 6 vertices.
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_triangles));
        // K_{3,3} and the triangular prism are both 3-regular on 6 vertices.
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_ne!(canonical_form(&Graph::complete_bipartite(3, 3)), canonical_form(&prism));
    }
}
