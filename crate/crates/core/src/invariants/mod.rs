//! Exact invariants with independently checkable certificates.
//!
//! | invariant | function | certificate |
//! |-----------|----------|-------------|
//! | `ω`  | [`clique_number`] | clique |
//! | `bω` | [`biclique_number`] | two disjoint sides |
//! | `χ`  | [`chromatic_number`] | proper colouring + clique / critical subgraph |
//! | `td` | [`tree_depth`] | elimination forest |
//! | `χ_s` | [`star_chromatic_number`] | star colouring |
//! | `χ_p` | [`chi_p`] | low tree-depth colouring |
//!
//! A `χ_p` colouring uses colours such that every set `I` of at most `p`
//! colours induces a subgraph of tree-depth at most `|I|`. For `p = 1` this
//! is a proper colouring; for `p = 2` it is a star colouring.

mod chip;
pub(crate) mod chromatic;
pub(crate) mod clique;
mod construct;
mod degeneracy;
mod star;
mod treedepth;
mod validate;

pub use chip::{chi_p, chi_p_bounds, chi_p_coloring_with, chi_p_with_hint, ChiPBounds};
pub use chromatic::{chromatic_number, k_coloring};
pub use clique::{biclique_number, clique_number};
pub use construct::{
    color_class_subgraph, depth_coloring, product_chi_p_coloring, subdivision_chi_p_coloring,
    subdivision_position_coloring, SubColorings,
};
pub use degeneracy::{average_degree, degeneracy, max_degree, Degeneracy};
pub use star::{star_chromatic_number, star_coloring_with};
pub use treedepth::{long_path, tree_depth, tree_depth_of_path, EliminationForest};
pub use validate::{validate_coloring, Verdict, Violation};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which guarantee a colouring claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColoringKind {
    Proper,
    Star,
    ChiP { p: usize },
}

/// Vertex colouring with colours `0..num_colors`, every colour used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
    #[serde(flatten)]
    pub kind: ColoringKind,
}

impl Coloring {
    /// Renumbers the colour values to `0..k` (keeping their relative order)
    /// so that every colour is used.
    pub fn new(assignment: Vec<usize>, kind: ColoringKind) -> Self {
        let mut values = assignment.clone();
        values.sort_unstable();
        values.dedup();
        let assignment = assignment
            .iter()
            .map(|c| values.binary_search(c).expect("value present"))
            .collect();
        Coloring {
            assignment,
            num_colors: values.len(),
            kind,
        }
    }

    pub fn with_kind(mut self, kind: ColoringKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Vertices carrying a colour in `colors`, ascending.
    pub fn vertices_with(&self, colors: &[usize]) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| colors.contains(&self.assignment[v]))
            .collect()
    }
}

/// Lower-bound evidence accompanying an optimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LowerBound {
    /// The value is at most the number of vertices, or otherwise immediate.
    Trivial,
    /// A clique on these vertices.
    Clique { vertices: Vec<usize> },
    /// An induced subgraph on which the bound already holds and that becomes
    /// colourable with one colour fewer after deleting any vertex.
    CriticalSubgraph { vertices: Vec<usize> },
    /// A path on these vertices; `td(P_k) = ⌈log₂(k+1)⌉`, and a `χ_p`
    /// colouring with at most `p` colours needs tree-depth at most `p`.
    Path { vertices: Vec<usize> },
    /// Exhaustive search found no colouring with `colors` colours.
    Exhaustive { colors: usize },
    /// Elimination forest optimality established by exhaustive search.
    TreeDepth { value: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Coloring(Coloring),
    Forest(EliminationForest),
    Clique { vertices: Vec<usize> },
    Biclique { left: Vec<usize>, right: Vec<usize> },
    Ordering { order: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: usize,
    pub certificate: Certificate,
    pub lower_bound: LowerBound,
}

impl InvariantResult {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.certificate {
            Certificate::Coloring(c) => Some(c),
            _ => None,
        }
    }
}

/// Size limits for the exact solvers. Exceeding one is an [`Error::Cap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub clique: usize,
    pub biclique: usize,
    pub chromatic: usize,
    /// Largest connected component handed to the tree-depth table.
    pub tree_depth: usize,
    pub star: usize,
    pub chi_p_two: usize,
    pub chi_p_high: usize,
    /// Node budget for a single colouring search.
    pub search_budget: u64,
}

/// Absolute limit for the subset-memoised tree-depth table.
pub const TREE_DEPTH_HARD_CAP: usize = 24;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            clique: 128,
            biclique: 64,
            chromatic: 32,
            tree_depth: 16,
            star: 14,
            chi_p_two: 14,
            chi_p_high: 12,
            search_budget: 200_000_000,
        }
    }
}

impl Caps {
    /// Same vertex cap for every colouring solver; tree-depth is clamped to its hard cap.
    pub fn uniform(n: usize) -> Self {
        Caps {
            chromatic: n,
            tree_depth: n.min(TREE_DEPTH_HARD_CAP),
            star: n,
            chi_p_two: n,
            chi_p_high: n,
            ..Caps::default()
        }
    }

    /// Search cap used by the exact `χ_p` solver for this `p`.
    pub fn chi_p_cap(&self, p: usize) -> usize {
        match p {
            1 => self.chromatic,
            2 => self.chi_p_two,
            _ => self.chi_p_high,
        }
    }

    pub(crate) fn tree_depth_cap(&self) -> usize {
        self.tree_depth.min(TREE_DEPTH_HARD_CAP)
    }
}

/// Node counter shared by the backtracking searches.
pub(crate) struct Budget {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Budget { what, used: 0, limit }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget {
                what: self.what,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
