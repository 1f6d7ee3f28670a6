use super::{Caps, Certificate, InvariantResult, LowerBound};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact clique number with a witness clique.
pub fn clique_number(g: &Graph, caps: &Caps) -> Result<InvariantResult> {
    Error::check_cap("clique_number", caps.clique, g.n())?;
    let adj = bits::adjacency(g, "clique_number")?;
    let best = max_clique(&adj, bits::full(g.n()));
    let vertices = bits::to_vec(best);
    Ok(InvariantResult {
        value: vertices.len(),
        lower_bound: LowerBound::Clique {
            vertices: vertices.clone(),
        },
        certificate: Certificate::Clique { vertices },
    })
}

/// Maximum clique inside `cand`, branch and bound with greedy colouring bounds.
pub(crate) fn max_clique(adj: &[Mask], cand: Mask) -> Mask {
    let mut best = 0;
    expand(adj, 0, cand, &mut best);
    best
}

fn expand(adj: &[Mask], current: Mask, mut cand: Mask, best: &mut Mask) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let (order, bound) = color_sort(adj, cand);
    let size = current.count_ones();
    for i in (0..order.len()).rev() {
        if size + bound[i] <= best.count_ones() {
            return;
        }
        let v = order[i];
        expand(adj, current | 1 << v, cand & adj[v], best);
        cand &= !(1 << v);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

/// Greedy colour classes of `cand`; `bound[i]` is the colour of `order[i]`.
fn color_sort(adj: &[Mask], cand: Mask) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bound = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            bound.push(color);
        }
    }
    (order, bound)
}

/// Largest `r` with `K_{r,r}` as a (not necessarily induced) subgraph.
pub fn biclique_number(g: &Graph, caps: &Caps) -> Result<InvariantResult> {
    Error::check_cap("biclique_number", caps.biclique, g.n())?;
    let adj = bits::adjacency(g, "biclique_number")?;
    let mut search = BicliqueSearch {
        adj: &adj,
        best: 0,
        best_sides: (0, 0),
    };
    let all = bits::full(g.n());
    for v in bits::iter(all) {
        let rest = all & !(bits::full(v + 1));
        search.grow(1 << v, adj[v], rest);
    }
    let r = search.best;
    let (a, b) = search.best_sides;
    let left: Vec<usize> = bits::iter(a).take(r).collect();
    let right: Vec<usize> = bits::iter(b).take(r).collect();
    Ok(InvariantResult {
        value: r,
        certificate: Certificate::Biclique { left, right },
        lower_bound: LowerBound::Trivial,
    })
}

struct BicliqueSearch<'a> {
    adj: &'a [Mask],
    best: usize,
    best_sides: (Mask, Mask),
}

impl BicliqueSearch<'_> {
    /// `side` is one part, `common` its common neighbourhood, `rest` the
    /// vertices (larger than every member of `side`) that may still join it.
    fn grow(&mut self, side: Mask, common: Mask, rest: Mask) {
        let a = side.count_ones() as usize;
        let b = common.count_ones() as usize;
        if a.min(b) > self.best {
            self.best = a.min(b);
            self.best_sides = (side, common);
        }
        if b <= self.best || a + rest.count_ones() as usize <= self.best {
            return;
        }
        let mut rest = rest;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            let next = common & self.adj[v];
            if (next.count_ones() as usize) > self.best {
                self.grow(side | 1 << v, next, rest);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blow_up;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(
            clique_number(&Graph::complete_bipartite(3, 3), &caps()).unwrap().value,
            2
        );
        assert_eq!(clique_number(&Graph::cycle(5), &caps()).unwrap().value, 2);
        assert_eq!(clique_number(&Graph::complete(6), &caps()).unwrap().value, 6);
        assert_eq!(clique_number(&Graph::empty(0), &caps()).unwrap().value, 0);
        let b = blow_up(&Graph::cycle(5), 2).unwrap();
        let r = clique_number(&b, &caps()).unwrap();
        assert_eq!(r.value, 4);
        let Certificate::Clique { vertices } = r.certificate else {
            panic!()
        };
        assert!(b.is_clique(&vertices));
    }

    #[test]
    fn biclique_examples() {
        assert_eq!(
            biclique_number(&Graph::complete_bipartite(3, 3), &caps())
                .unwrap()
                .value,
            3
        );
        assert_eq!(biclique_number(&Graph::cycle(5), &caps()).unwrap().value, 1);
        assert_eq!(biclique_number(&Graph::cycle(4), &caps()).unwrap().value, 2);
        assert_eq!(biclique_number(&Graph::empty(3), &caps()).unwrap().value, 0);
        assert_eq!(biclique_number(&Graph::complete(5), &caps()).unwrap().value, 2);
        let b = blow_up(&Graph::cycle(5), 2).unwrap();
        let r = biclique_number(&b, &caps()).unwrap();
        assert_eq!(r.value, 2);
        let Certificate::Biclique { left, right } = r.certificate else {
            panic!()
        };
        for &u in &left {
            for &v in &right {
                assert!(b.has_edge(u, v));
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            clique: 3,
            ..Caps::default()
        };
        assert!(matches!(
            clique_number(&Graph::complete(4), &caps),
            Err(Error::Cap { .. })
        ));
    }
}
