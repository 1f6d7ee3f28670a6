use super::clique::max_clique;
use super::{Budget, Caps, Certificate, Coloring, ColoringKind, InvariantResult, LowerBound};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact star chromatic number: the fewest colours in a proper colouring
/// where any two colour classes induce a star forest.
pub fn star_chromatic_number(g: &Graph, caps: &Caps) -> Result<InvariantResult> {
    Error::check_cap("star_chromatic_number", caps.star, g.n())?;
    let adj = bits::adjacency(g, "star_chromatic_number")?;
    let clique = max_clique(&adj, bits::full(g.n()));
    let omega = clique.count_ones() as usize;
    let mut k = omega;
    let coloring = loop {
        if let Some(c) = search(&adj, k, caps.search_budget)? {
            break c;
        }
        k += 1;
    };
    let lower_bound = if k == omega {
        LowerBound::Clique {
            vertices: bits::to_vec(clique),
        }
    } else {
        LowerBound::Exhaustive { colors: k - 1 }
    };
    Ok(InvariantResult {
        value: k,
        certificate: Certificate::Coloring(coloring),
        lower_bound,
    })
}

/// A star colouring with at most `k` colours, if one exists.
pub fn star_coloring_with(g: &Graph, k: usize, caps: &Caps) -> Result<Option<Coloring>> {
    Error::check_cap("star_coloring_with", caps.star, g.n())?;
    let adj = bits::adjacency(g, "star_coloring_with")?;
    search(&adj, k, caps.search_budget)
}

fn search(adj: &[Mask], k: usize, budget: u64) -> Result<Option<Coloring>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new(), ColoringKind::Star)));
    }
    let mut s = StarSearch {
        adj,
        k,
        color: vec![usize::MAX; n],
        class: vec![0; k],
        budget: Budget::new("star colouring search", budget),
    };
    if k > 0 && s.run(0, 0)? {
        Ok(Some(Coloring::new(s.color, ColoringKind::Star)))
    } else {
        Ok(None)
    }
}

struct StarSearch<'a> {
    adj: &'a [Mask],
    k: usize,
    color: Vec<usize>,
    class: Vec<Mask>,
    budget: Budget,
}

impl StarSearch<'_> {
    fn forbidden(&self, v: usize) -> Mask {
        (0..self.k).fold(0, |f, c| {
            if self.class[c] & self.adj[v] != 0 {
                f | 1 << c
            } else {
                f
            }
        })
    }

    fn run(&mut self, colored: Mask, used: usize) -> Result<bool> {
        self.budget.tick()?;
        let open = bits::full(self.adj.len()) & !colored;
        if open == 0 {
            return Ok(true);
        }
        let mut pick = None;
        let mut key = (0u32, 0u32);
        for v in bits::iter(open) {
            let sat = self.forbidden(v).count_ones();
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
        let forb = self.forbidden(v);
        for c in 0..self.k.min(used + 1) {
            if forb >> c & 1 == 1 || !self.keeps_stars(v, c, forb) {
                continue;
            }
            self.color[v] = c;
            self.class[c] |= 1 << v;
            if self.run(colored | 1 << v, used.max(c + 1))? {
                return Ok(true);
            }
            self.class[c] &= !(1 << v);
            self.color[v] = usize::MAX;
        }
        Ok(false)
    }

    /// Whether colouring `v` with `c` keeps every two-coloured component
    /// through `v` a star.
    fn keeps_stars(&self, v: usize, c: usize, neighbour_colors: Mask) -> bool {
        bits::iter(neighbour_colors).all(|d| {
            let set = self.class[c] | self.class[d] | 1 << v;
            let comp = component(self.adj, set, v);
            is_star(self.adj, comp)
        })
    }
}

fn component(adj: &[Mask], set: Mask, v: usize) -> Mask {
    let mut comp = 1 << v;
    let mut frontier = comp;
    while frontier != 0 {
        let next = bits::iter(frontier).fold(0, |m, w| m | adj[w]) & set & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

fn is_star(adj: &[Mask], comp: Mask) -> bool {
    let size = comp.count_ones();
    if size <= 2 {
        return true;
    }
    let twice_edges: u32 = bits::iter(comp).map(|x| (adj[x] & comp).count_ones()).sum();
    twice_edges == 2 * (size - 1) && bits::iter(comp).any(|x| (adj[x] & comp).count_ones() == size - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::subdivide_exact;
    use crate::invariants::validate_coloring;

    fn chi_s(g: &Graph) -> usize {
        let r = star_chromatic_number(g, &Caps::default()).unwrap();
        assert!(validate_coloring(g, r.coloring().unwrap()).unwrap().is_pass());
        r.value
    }

    #[test]
    fn examples() {
        assert_eq!(chi_s(&Graph::cycle(4)), 3);
        assert_eq!(chi_s(&Graph::complete(5)), 5);
        assert_eq!(chi_s(&subdivide_exact(&Graph::complete(3), 1)), 3);
        assert_eq!(chi_s(&Graph::path(3)), 2);
        assert_eq!(chi_s(&Graph::path(4)), 3);
        // Three colours on C_5 repeat one colour pair along a P_4.
        assert_eq!(chi_s(&Graph::cycle(5)), 4);
        assert_eq!(chi_s(&Graph::empty(0)), 0);
    }

    #[test]
    fn two_colours_refuted_on_c4() {
        assert!(star_coloring_with(&Graph::cycle(4), 2, &Caps::default())
            .unwrap()
            .is_none());
    }
}
