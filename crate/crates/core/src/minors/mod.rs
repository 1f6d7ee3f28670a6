//! Shallow topological minors.
//!
//! `H ∈ TM_r(G)` when some subdivision of `H` with at most `r` new vertices
//! per edge is a subgraph of `G`. `H ∈ ITM_r^e(G)` when the exact
//! subdivision `H^(r)` is an induced subgraph of `G`. Both are witnessed by
//! a [`TopoMinorEmbedding`].

mod itm;
mod route;
mod tm;

pub use itm::{enumerate_itm_exact, is_induced_exact_subdivision, ItmEnumeration, ItmPattern};
pub use tm::{chi_tm, find_subdivided_clique, omega_tm, ChiTm, OmegaTm};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Branch vertices plus one path per pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopoMinorEmbedding {
    pub pattern: Graph,
    /// `branch_map[x]` is the image of pattern vertex `x`.
    pub branch_map: Vec<usize>,
    /// One path per edge of `pattern`, in `pattern.edges()` order, listed
    /// from the image of the smaller endpoint to the image of the larger.
    pub paths: Vec<Vec<usize>>,
}

impl TopoMinorEmbedding {
    /// Checks the embedding as a `≤ r`-subdivision subgraph of `g`.
    pub fn validate_tm(&self, g: &Graph, r: usize) -> Result<(), String> {
        self.validate_paths(g, |internal| {
            if internal > r {
                Err(format!("path with {internal} internal vertices exceeds {r}"))
            } else {
                Ok(())
            }
        })
    }

    /// Checks the embedding as an induced copy of the exact `r`-subdivision.
    pub fn validate_itm(&self, g: &Graph, r: usize) -> Result<(), String> {
        self.validate_paths(g, |internal| {
            if internal != r {
                Err(format!("path with {internal} internal vertices, expected exactly {r}"))
            } else {
                Ok(())
            }
        })?;
        let mut expected = BTreeSet::new();
        for path in &self.paths {
            for w in path.windows(2) {
                expected.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let used: Vec<usize> = self.vertex_set().into_iter().collect();
        for (i, &u) in used.iter().enumerate() {
            for &v in &used[i + 1..] {
                let (a, b) = (u.min(v), u.max(v));
                if g.has_edge(a, b) != expected.contains(&(a, b)) {
                    return Err(if g.has_edge(a, b) {
                        format!("extra edge ({a},{b}) inside the image")
                    } else {
                        format!("missing edge ({a},{b}) inside the image")
                    });
                }
            }
        }
        Ok(())
    }

    /// Every vertex of `G` used by the embedding.
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.branch_map
            .iter()
            .copied()
            .chain(self.paths.iter().flatten().copied())
            .collect()
    }

    fn validate_paths(&self, g: &Graph, length_ok: impl Fn(usize) -> Result<(), String>) -> Result<(), String> {
        let h = &self.pattern;
        if self.branch_map.len() != h.n() {
            return Err(format!(
                "{} branch vertices for a {}-vertex pattern",
                self.branch_map.len(),
                h.n()
            ));
        }
        let branch: BTreeSet<usize> = self.branch_map.iter().copied().collect();
        if branch.len() != h.n() {
            return Err("branch map is not injective".into());
        }
        if let Some(&v) = branch.iter().find(|&&v| v >= g.n()) {
            return Err(format!("branch vertex {v} outside the host"));
        }
        if self.paths.len() != h.m() {
            return Err(format!("{} paths for {} pattern edges", self.paths.len(), h.m()));
        }
        let mut interior = BTreeSet::new();
        for ((x, y), path) in h.edges().zip(&self.paths) {
            let (a, b) = (self.branch_map[x], self.branch_map[y]);
            if path.len() < 2 || path[0] != a || path[path.len() - 1] != b {
                return Err(format!("path for edge ({x},{y}) does not join {a} and {b}"));
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path for edge ({x},{y}) uses non-edge ({},{})", w[0], w[1]));
                }
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(&v) || !interior.insert(v) {
                    return Err(format!("vertex {v} is shared between paths or branch vertices"));
                }
            }
            length_ok(path.len() - 2)?;
        }
        Ok(())
    }
}

/// Size limits for the embedding searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCaps {
    /// Host size for subdivided-clique and induced-subdivision search.
    pub host: usize,
    pub clique: usize,
    /// Host size for `chi_tm` and `enumerate_itm_exact`.
    pub enumeration_host: usize,
    pub pattern: usize,
    pub search_budget: u64,
}

impl Default for MinorCaps {
    fn default() -> Self {
        MinorCaps {
            host: 40,
            clique: 8,
            enumeration_host: 24,
            pattern: 8,
            search_budget: 500_000_000,
        }
    }
}
