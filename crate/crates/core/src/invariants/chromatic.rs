use super::clique::max_clique;
use super::{Budget, Caps, Certificate, Coloring, ColoringKind, InvariantResult, LowerBound};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact chromatic number. The lower-bound witness is a maximum clique when
/// that is tight, otherwise a vertex-critical induced subgraph.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<InvariantResult> {
    Error::check_cap("chromatic_number", caps.chromatic, g.n())?;
    let adj = bits::adjacency(g, "chromatic_number")?;
    let all = bits::full(g.n());
    let clique = max_clique(&adj, all);
    let mut k = clique.count_ones() as usize;
    let assignment = loop {
        if let Some(a) = color_set(&adj, all, k, caps.search_budget)? {
            break a;
        }
        k += 1;
    };
    let lower_bound = if k == clique.count_ones() as usize {
        LowerBound::Clique {
            vertices: bits::to_vec(clique),
        }
    } else {
        let mut keep = all;
        for v in 0..g.n() {
            let without = keep & !(1 << v);
            if color_set(&adj, without, k - 1, caps.search_budget)?.is_none() {
                keep = without;
            }
        }
        LowerBound::CriticalSubgraph {
            vertices: bits::to_vec(keep),
        }
    };
    let coloring = Coloring::new(assignment, ColoringKind::Proper);
    debug_assert_eq!(coloring.num_colors, k);
    Ok(InvariantResult {
        value: k,
        certificate: Certificate::Coloring(coloring),
        lower_bound,
    })
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_coloring(g: &Graph, k: usize, caps: &Caps) -> Result<Option<Coloring>> {
    Error::check_cap("k_coloring", caps.chromatic, g.n())?;
    let adj = bits::adjacency(g, "k_coloring")?;
    Ok(color_set(&adj, bits::full(g.n()), k, caps.search_budget)?.map(|a| Coloring::new(a, ColoringKind::Proper)))
}

/// Proper `k`-colouring of the subgraph induced by `set`; vertices outside
/// `set` get colour 0 in the returned assignment.
pub(crate) fn color_set(adj: &[Mask], set: Mask, k: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    let mut color = vec![0usize; adj.len()];
    if set == 0 {
        return Ok(Some(color));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Dsatur {
        adj,
        set,
        k,
        color: &mut color,
        budget: Budget::new("chromatic search", budget),
    };
    if search.run(0, 0)? {
        Ok(Some(color))
    } else {
        Ok(None)
    }
}

struct Dsatur<'a> {
    adj: &'a [Mask],
    set: Mask,
    k: usize,
    color: &'a mut Vec<usize>,
    budget: Budget,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize, colored: Mask) -> Mask {
        bits::iter(self.adj[v] & colored).fold(0, |f, w| f | 1 << self.color[w])
    }

    fn run(&mut self, colored: Mask, used: usize) -> Result<bool> {
        self.budget.tick()?;
        let open = self.set & !colored;
        if open == 0 {
            return Ok(true);
        }
        let mut pick = None;
        let mut key = (0u32, 0u32);
        for v in bits::iter(open) {
            let sat = self.forbidden(v, colored).count_ones();
            if sat as usize >= self.k {
                return Ok(false);
            }
            let deg = (self.adj[v] & open).count_ones();
            if pick.is_none() || (sat, deg) > key {
                pick = Some(v);
                key = (sat, deg);
            }
        }
        let v = pick.expect("open set is non-empty");
        let forb = self.forbidden(v, colored);
        for c in 0..self.k.min(used + 1) {
            if forb >> c & 1 == 1 {
                continue;
            }
            self.color[v] = c;
            if self.run(colored | 1 << v, used.max(c + 1))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        Graph::from_edges(10, &edges).unwrap()
    }

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &Caps::default()).unwrap().value
    }

    #[test]
    fn examples() {
        assert_eq!(chi(&Graph::complete(5)), 5);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(chi(&Graph::cycle(6)), 2);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&petersen()), 3);
    }

    #[test]
    fn critical_subgraph_witness_for_odd_cycle() {
        let mut g = Graph::cycle(7);
        g = crate::graph::disjoint_union(&[g, Graph::path(3)]);
        let r = chromatic_number(&g, &Caps::default()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(
            r.lower_bound,
            LowerBound::CriticalSubgraph {
                vertices: (0..7).collect()
            }
        );
    }

    #[test]
    fn grotzsch_needs_four() {
        let g = crate::graph::mycielskian(&Graph::cycle(5));
        assert_eq!(chi(&g), 4);
        assert!(k_coloring(&g, 3, &Caps::default()).unwrap().is_none());
    }
}
