//! Holes: induced cycles of length at least 4.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::{blow_up, disjoint_union, Graph};
use crate::invariants::{clique_number, Budget, Caps};

/// A chordless cycle, stored as its lexicographically least rotation or
/// reflection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole(Vec<usize>);

impl Hole {
    /// Canonicalises a cyclic vertex sequence. Does not check the graph.
    pub fn new(cycle: &[usize]) -> Result<Hole> {
        if cycle.len() < 4 {
            return Err(Error::Param(format!(
                "hole of length {} is shorter than 4",
                cycle.len()
            )));
        }
        let k = cycle.len();
        let (start, _) = cycle.iter().enumerate().min_by_key(|&(_, v)| v).expect("non-empty");
        let forward: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
        Ok(Hole(forward.min(backward)))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks adjacency of consecutive vertices, no chords and no repeats.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let k = self.0.len();
        if k < 4 {
            return Err(format!("length {k} is below 4"));
        }
        if let Some(&v) = self.0.iter().find(|&&v| v >= g.n()) {
            return Err(format!("vertex {v} outside the graph"));
        }
        for i in 0..k {
            for j in i + 1..k {
                let (u, v) = (self.0[i], self.0[j]);
                if u == v {
                    return Err(format!("vertex {u} repeats"));
                }
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(u, v) != consecutive {
                    return Err(if consecutive {
                        format!("missing cycle edge ({u},{v})")
                    } else {
                        format!("chord ({u},{v})")
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Hole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleCaps {
    pub vertices: usize,
    pub search_budget: u64,
}

impl Default for HoleCaps {
    fn default() -> Self {
        HoleCaps {
            vertices: 64,
            search_budget: 200_000_000,
        }
    }
}

/// Calls `visit` once per hole of length `4..=max_len`, in no particular order.
///
/// Each hole is grown from its least vertex as a chordless path whose
/// second vertex is smaller than its last.
fn for_each_hole(
    g: &Graph,
    max_len: usize,
    caps: &HoleCaps,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    Error::check_cap("hole enumeration", caps.vertices, g.n())?;
    let adj = bits::adjacency(g, "hole enumeration")?;
    let mut budget = Budget::new("hole enumeration", caps.search_budget);
    for a in 0..g.n() {
        let above = bits::full(g.n()) & !bits::full(a + 1);
        for v1 in bits::iter(adj[a] & above) {
            let mut path = vec![a, v1];
            if grow(&adj, above, max_len, &mut path, 1 << v1, &mut budget, visit)?.is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// `path` is chordless; `on_path` holds every vertex but the anchor.
fn grow(
    adj: &[Mask],
    above: Mask,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: Mask,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    budget.tick()?;
    let (a, v1, last) = (path[0], path[1], *path.last().expect("non-empty"));
    let interior = on_path & !(1 << last);
    for y in bits::iter(adj[last] & above & !on_path) {
        if adj[y] & interior != 0 {
            continue;
        }
        if adj[y] >> a & 1 == 1 {
            if path.len() >= 3 && v1 < y {
                path.push(y);
                let flow = visit(path);
                path.pop();
                if flow.is_break() {
                    return Ok(flow);
                }
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(y);
            let flow = grow(adj, above, max_len, path, on_path | 1 << y, budget, visit)?;
            path.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Every hole of length `4..=max_len`, sorted.
pub fn enumerate_holes(g: &Graph, max_len: usize, caps: &HoleCaps) -> Result<Vec<Hole>> {
    let mut out = Vec::new();
    for_each_hole(g, max_len, caps, &mut |c| {
        out.push(Hole::new(c).expect("length at least 4"));
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// `h_len(g)`: the number of holes of exactly `len` vertices.
pub fn count_holes(g: &Graph, len: usize, caps: &HoleCaps) -> Result<u64> {
    let mut count = 0;
    for_each_hole(g, len, caps, &mut |c| {
        if c.len() == len {
            count += 1;
        }
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Hole counts by length, for lengths `4..=max_len`.
pub fn hole_profile(g: &Graph, max_len: usize, caps: &HoleCaps) -> Result<BTreeMap<usize, u64>> {
    let mut out = BTreeMap::new();
    for_each_hole(g, max_len, caps, &mut |c| {
        *out.entry(c.len()).or_insert(0) += 1;
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenHoleCheck {
    pub even_hole_free: bool,
    /// An even hole when `even_hole_free` is false.
    pub witness: Option<Hole>,
}

pub fn is_even_hole_free(g: &Graph, caps: &HoleCaps) -> Result<EvenHoleCheck> {
    let mut witness = None;
    for_each_hole(g, g.n(), caps, &mut |c| {
        if c.len() % 2 == 0 {
            witness = Some(Hole::new(c).expect("length at least 4"));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(EvenHoleCheck {
        even_hole_free: witness.is_none(),
        witness,
    })
}

/// The disjoint union of `copies` copies of `C_g[K_{ω/2}]`.
pub fn hole_density_family(g_odd: usize, omega_even: usize, copies: usize) -> Result<Graph> {
    if g_odd <= 3 || g_odd.is_multiple_of(2) {
        return Err(Error::Param(format!("cycle length {g_odd} must be odd and above 3")));
    }
    if omega_even < 2 || omega_even % 2 == 1 {
        return Err(Error::Param(format!(
            "clique number {omega_even} must be even and at least 2"
        )));
    }
    if copies == 0 {
        return Err(Error::Param("at least one copy is required".into()));
    }
    let piece = blow_up(&Graph::cycle(g_odd), omega_even / 2)?;
    Ok(disjoint_union(&vec![piece; copies]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleDensityReport {
    pub g: usize,
    pub omega: usize,
    pub copies: usize,
    pub graph: Graph,
    pub order: usize,
    pub holes: u64,
    /// `(ω/2)^(g−1) · |G| / g`.
    pub expected: Ratio<u64>,
    pub clique_number: usize,
    pub even_hole_free: bool,
    pub pass: bool,
}

/// Counts `g`-holes of the extremal family exactly and compares with the
/// closed form; also confirms the clique number and even-hole-freeness.
pub fn verify_hole_density(
    g_odd: usize,
    omega_even: usize,
    copies: usize,
    caps: &HoleCaps,
) -> Result<HoleDensityReport> {
    let graph = hole_density_family(g_odd, omega_even, copies)?;
    let n = graph.n();
    let holes = count_holes(&graph, g_odd, caps)?;
    let half = (omega_even / 2) as u64;
    let expected = Ratio::new(half.pow(g_odd as u32 - 1) * n as u64, g_odd as u64);
    let omega = clique_number(&graph, &Caps::default())?.value;
    let even_hole_free = is_even_hole_free(&graph, caps)?.even_hole_free;
    let pass = Ratio::from_integer(holes) == expected && omega == omega_even && even_hole_free;
    Ok(HoleDensityReport {
        g: g_odd,
        omega: omega_even,
        copies,
        graph,
        order: n,
        holes,
        expected,
        clique_number: omega,
        even_hole_free,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> HoleCaps {
        HoleCaps::default()
    }

    #[test]
    fn canonical_form() {
        let h = Hole::new(&[3, 1, 4, 2]).unwrap();
        assert_eq!(h.vertices(), &[1, 3, 2, 4]);
        assert_eq!(Hole::new(&[2, 4, 1, 3]).unwrap(), h);
        assert!(Hole::new(&[0, 1, 2]).is_err());
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            enumerate_holes(&Graph::cycle(5), 9, &caps()).unwrap(),
            vec![Hole::new(&[0, 1, 2, 3, 4]).unwrap()]
        );
        assert!(enumerate_holes(&Graph::complete(4), 9, &caps()).unwrap().is_empty());
        let c6 = is_even_hole_free(&Graph::cycle(6), &caps()).unwrap();
        assert!(!c6.even_hole_free);
        assert_eq!(c6.witness.unwrap().len(), 6);
        assert_eq!(count_holes(&Graph::cycle(5), 5, &caps()).unwrap(), 1);
        assert_eq!(count_holes(&Graph::complete_bipartite(2, 3), 4, &caps()).unwrap(), 3);
    }

    #[test]
    fn blow_up_counts() {
        let c5k2 = blow_up(&Graph::cycle(5), 2).unwrap();
        assert_eq!(count_holes(&c5k2, 5, &caps()).unwrap(), 32);
        assert!(is_even_hole_free(&c5k2, &caps()).unwrap().even_hole_free);
        let c7k2 = blow_up(&Graph::cycle(7), 2).unwrap();
        assert_eq!(count_holes(&c7k2, 7, &caps()).unwrap(), 128);
    }

    #[test]
    fn density_examples() {
        for (g, w, c, h) in [(5, 2, 3, 3), (5, 4, 1, 32), (7, 2, 1, 1)] {
            let r = verify_hole_density(g, w, c, &caps()).unwrap();
            assert!(r.pass);
            assert_eq!(r.holes, h);
        }
        assert!(matches!(verify_hole_density(6, 2, 1, &caps()), Err(Error::Param(_))));
        assert!(matches!(verify_hole_density(5, 3, 1, &caps()), Err(Error::Param(_))));
        assert!(matches!(verify_hole_density(3, 2, 1, &caps()), Err(Error::Param(_))));
    }
}
