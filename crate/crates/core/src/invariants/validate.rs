use serde::{Deserialize, Serialize};

use super::treedepth::TdSolver;
use super::{Coloring, ColoringKind, TREE_DEPTH_HARD_CAP};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    Malformed {
        reason: String,
    },
    MonochromaticEdge {
        u: usize,
        v: usize,
    },
    /// A path `a-b-c-d` coloured `x, y, x, y`.
    BicoloredP4 {
        path: [usize; 4],
    },
    ExcessTreeDepth {
        colors: Vec<usize>,
        tree_depth: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Checks `c` against the guarantee named by its kind.
///
/// The only error is a colour-class union whose component is too large for
/// the exact tree-depth table.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<Verdict> {
    if let Some(reason) = malformed(g, c) {
        return Ok(Verdict::Fail(Violation::Malformed { reason }));
    }
    for (u, v) in g.edges() {
        if c.assignment[u] == c.assignment[v] {
            return Ok(Verdict::Fail(Violation::MonochromaticEdge { u, v }));
        }
    }
    match c.kind {
        ColoringKind::Proper | ColoringKind::ChiP { p: 1 } => Ok(Verdict::Pass),
        ColoringKind::Star => {
            Ok(bicolored_p4(g, c).map_or(Verdict::Pass, |path| Verdict::Fail(Violation::BicoloredP4 { path })))
        }
        ColoringKind::ChiP { p } => low_tree_depth(g, c, p),
    }
}

fn malformed(g: &Graph, c: &Coloring) -> Option<String> {
    if c.assignment.len() != g.n() {
        return Some(format!("{} colours for {} vertices", c.assignment.len(), g.n()));
    }
    if let ColoringKind::ChiP { p: 0 } = c.kind {
        return Some("chi_p needs p ≥ 1".into());
    }
    let mut used = vec![false; c.num_colors];
    for (v, &col) in c.assignment.iter().enumerate() {
        if col >= c.num_colors {
            return Some(format!("vertex {v} has colour {col} ≥ {}", c.num_colors));
        }
        used[col] = true;
    }
    used.iter()
        .position(|u| !u)
        .map(|col| format!("colour {col} is unused"))
}

fn bicolored_p4(g: &Graph, c: &Coloring) -> Option<[usize; 4]> {
    let col = &c.assignment;
    for (b, cc) in g.edges() {
        for &a in g.neighbors(b) {
            if a == cc || col[a] != col[cc] {
                continue;
            }
            for &d in g.neighbors(cc) {
                if d != b && d != a && col[d] == col[b] {
                    return Some([a, b, cc, d]);
                }
            }
        }
    }
    None
}

fn low_tree_depth(g: &Graph, c: &Coloring, p: usize) -> Result<Verdict> {
    let adj = bits::adjacency(g, "validate_coloring")?;
    let mut classes = vec![0 as Mask; c.num_colors];
    for (v, &col) in c.assignment.iter().enumerate() {
        classes[col] |= 1 << v;
    }
    let mut subset = Vec::new();
    let mut found = None;
    for size in 2..=p.min(c.num_colors) {
        subsets(c.num_colors, size, 0, &mut subset, &mut |colors| {
            if found.is_some() {
                return Ok(());
            }
            let set = colors.iter().fold(0, |m, &i| m | classes[i]);
            for comp in bits::components(&adj, set) {
                Error::check_cap(
                    "validate_coloring component",
                    TREE_DEPTH_HARD_CAP,
                    comp.count_ones() as usize,
                )?;
            }
            let td = TdSolver::new(&adj).of_set(set);
            if td > colors.len() {
                found = Some(Violation::ExcessTreeDepth {
                    colors: colors.to_vec(),
                    tree_depth: td,
                });
            }
            Ok(())
        })?;
        if let Some(v) = found {
            return Ok(Verdict::Fail(v));
        }
    }
    Ok(Verdict::Pass)
}

fn subsets(
    k: usize,
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if current.len() == size {
        return f(current);
    }
    for i in start..k {
        if k - i < size - current.len() {
            break;
        }
        current.push(i);
        subsets(k, size, i + 1, current, f)?;
        current.pop();
    }
    Ok(())
}
