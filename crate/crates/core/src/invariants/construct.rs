//! Constructive colourings: depth colourings of elimination forests, the
//! product colouring built from colourings of small colour-class unions,
//! and colourings of exact subdivisions.

use std::collections::BTreeMap;

use super::{validate_coloring, Coloring, ColoringKind, EliminationForest};
use crate::error::{Error, Result};
use crate::graph::{subdivide_with_paths, Graph, SubdivisionProfile};

/// Colour every vertex by its depth in the forest.
pub fn depth_coloring(forest: &EliminationForest) -> Coloring {
    let depth = forest.depths().expect("forest is acyclic");
    Coloring::new(
        depth,
        ColoringKind::ChiP {
            p: forest.height.max(1),
        },
    )
}

/// Induced subgraph on the vertices whose base colour lies in `colors`,
/// with its vertex list (ascending).
pub fn color_class_subgraph(g: &Graph, base: &Coloring, colors: &[usize]) -> (Graph, Vec<usize>) {
    let vs = base.vertices_with(colors);
    (g.induced_subgraph(&vs), vs)
}

/// Colourings `γ_I` keyed by sorted colour sets `I`.
pub type SubColorings = BTreeMap<Vec<usize>, Coloring>;

/// Product colouring from a proper base colouring `c` with `χ` colours.
///
/// With `q = min(p, χ)`, every vertex `v` gets the pair `(c(v), g_v)` where
/// `g_v` maps each `q`-set `I ∋ c(v)` of base colours to `γ_I(v)`. Any set
/// `J` of at most `p` product colours meets at most `q` base colours, so it
/// lies inside one `G_I` and is coloured by at most `|J|` colours of `γ_I`.
/// Uses at most `χ·a^C(χ−1, q−1)` colours, `a` the largest palette among
/// the `γ_I`.
pub fn product_chi_p_coloring(g: &Graph, p: usize, base: &Coloring, sub_colorings: &SubColorings) -> Result<Coloring> {
    if p == 0 {
        return Err(Error::Param("chi_p needs p ≥ 1".into()));
    }
    let proper = base.clone().with_kind(ColoringKind::Proper);
    if !validate_coloring(g, &proper)?.is_pass() {
        return Err(Error::Input("base colouring is not proper".into()));
    }
    let chi = base.num_colors;
    let q = p.min(chi);
    let mut sets = Vec::new();
    k_subsets(chi, q, 0, &mut Vec::new(), &mut sets);
    let mut keys: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for set in &sets {
        let gamma = sub_colorings
            .get(set)
            .ok_or_else(|| Error::Input(format!("missing colouring for colour set {set:?}")))?;
        let (h, vs) = color_class_subgraph(g, base, set);
        let as_chi_p = gamma.clone().with_kind(ColoringKind::ChiP { p });
        if !validate_coloring(&h, &as_chi_p)?.is_pass() {
            return Err(Error::Input(format!("colouring for colour set {set:?} is invalid")));
        }
        for (i, &v) in vs.iter().enumerate() {
            keys[v].push(gamma.assignment[i]);
        }
    }
    // keys[v] lists γ_I(v) over the q-sets containing c(v), in the fixed
    // order of `sets`, which is the same for all vertices of one base colour.
    let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    let mut assignment = Vec::with_capacity(g.n());
    for (v, key) in keys.into_iter().enumerate() {
        let key = (base.assignment[v], key);
        let next = ids.len();
        assignment.push(*ids.entry(key).or_insert(next));
    }
    Ok(Coloring::new(assignment, ColoringKind::ChiP { p }))
}

fn k_subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        k_subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Colouring of `G^(p)` from a proper colouring `base` of `G` with `k`
/// colours, using at most `max(k, p + 2)` colours: originals keep their
/// colour, and the `p` internal vertices of each path get the `p` smallest
/// palette colours different from both endpoint colours, in path order
/// from the lower endpoint.
pub fn subdivision_chi_p_coloring(g: &Graph, p: usize, base: &Coloring) -> Coloring {
    let sub = subdivide_with_paths(g, &SubdivisionProfile::uniform(g, p)).expect("uniform profile");
    let palette = base.num_colors.max(p + 2);
    let mut assignment = vec![0; sub.graph.n()];
    assignment[..g.n()].copy_from_slice(&base.assignment);
    for ((u, v), path) in &sub.paths {
        let (cu, cv) = (base.assignment[*u], base.assignment[*v]);
        let mut free = (0..palette).filter(|&c| c != cu && c != cv);
        for &x in &path[1..path.len() - 1] {
            assignment[x] = free.next().expect("palette has p free colours");
        }
    }
    Coloring::new(assignment, ColoringKind::ChiP { p: p + 1 })
}

/// Colouring of `G^(p)` with `p + 1` colours: originals get 0 and the
/// internal vertices of each path get `1..=p` in order from the lower
/// endpoint.
pub fn subdivision_position_coloring(g: &Graph, p: usize) -> Coloring {
    let sub = subdivide_with_paths(g, &SubdivisionProfile::uniform(g, p)).expect("uniform profile");
    let mut assignment = vec![0; sub.graph.n()];
    for (_, path) in &sub.paths {
        for (i, &x) in path[1..path.len() - 1].iter().enumerate() {
            assignment[x] = i + 1;
        }
    }
    Coloring::new(assignment, ColoringKind::ChiP { p })
}
