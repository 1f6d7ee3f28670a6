use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub value: usize,
    /// Removal order: each vertex has at most `value` neighbours later in it.
    pub ordering: Vec<usize>,
}

/// Smallest-last ordering by bucket queue. Buckets are ordered sets so
/// ties go to the lowest vertex index, at a `log n` factor.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut value = 0;
    let mut low: usize = 0;
    for _ in 0..n {
        // Removing a vertex lowers neighbour degrees by one, so the minimum
        // can drop by at most one per step.
        low = low.saturating_sub(1);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        value = value.max(low);
        removed[v] = true;
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
    }
    Degeneracy { value, ordering }
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// `2m / n`; zero for the empty graph.
pub fn average_degree(g: &Graph) -> Ratio<usize> {
    if g.n() == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(2 * g.m(), g.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, subdivide_exact};

    /// Max over all induced subgraphs of the minimum degree.
    fn degeneracy_oracle(g: &Graph) -> usize {
        let n = g.n();
        (1u32..1 << n)
            .map(|s| {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                let h = g.induced_subgraph(&vs);
                (0..h.n()).map(|v| h.degree(v)).min().unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    fn check_ordering(g: &Graph, d: &Degeneracy) {
        let mut pos = vec![0; g.n()];
        for (i, &v) in d.ordering.iter().enumerate() {
            pos[v] = i;
        }
        for v in 0..g.n() {
            let later = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count();
            assert!(later <= d.value);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(degeneracy(&Graph::path(6)).value, 1);
        assert_eq!(degeneracy(&Graph::complete(5)).value, 4);
        let c5k2 = blow_up(&Graph::cycle(5), 2).unwrap();
        let d = degeneracy(&c5k2);
        // C_5[K_2] is 5-regular, so every subgraph peel starts at degree 5.
        assert_eq!(d.value, 5);
        assert_eq!(d.value, degeneracy_oracle(&c5k2));
        check_ordering(&c5k2, &d);
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        for g in crate::graph::all_graphs(6) {
            let d = degeneracy(&g);
            assert_eq!(d.value, degeneracy_oracle(&g));
            check_ordering(&g, &d);
        }
    }

    #[test]
    fn degree_statistics() {
        assert_eq!(max_degree(&Graph::complete_bipartite(1, 7)), 7);
        assert_eq!(average_degree(&Graph::cycle(9)), Ratio::from_integer(2));
        let k4s = subdivide_exact(&Graph::complete(4), 1);
        assert_eq!(average_degree(&k4s), Ratio::new(24, 10));
    }
}
