//! `u128` vertex sets for the exact solvers (at most 128 vertices).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Mask = u128;

pub const MAX_MASK_VERTICES: usize = 128;

pub fn adjacency(g: &Graph, what: &'static str) -> Result<Vec<Mask>> {
    Error::check_cap(what, MAX_MASK_VERTICES, g.n())?;
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect())
}

pub fn full(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn iter(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn to_vec(m: Mask) -> Vec<usize> {
    iter(m).collect()
}

/// Connected components of the subgraph induced by `set`.
pub fn components(adj: &[Mask], set: Mask) -> Vec<Mask> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in iter(frontier) {
                next |= adj[v];
            }
            next &= set & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}
