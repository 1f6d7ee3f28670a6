use serde::{Deserialize, Serialize};

use super::clique::max_clique;
use super::treedepth::{long_path, tree_depth_of_path, TdSolver};
use super::{
    depth_coloring, validate_coloring, Budget, Caps, Certificate, Coloring, ColoringKind, InvariantResult, LowerBound,
};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

const PATH_SEARCH_BUDGET: u64 = 1_000_000;

/// Certified bounds on `χ_p` obtained without colouring search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiPBounds {
    pub lower: usize,
    pub lower_bound: LowerBound,
    pub upper: usize,
    pub coloring: Coloring,
}

impl ChiPBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Exact `χ_p`.
pub fn chi_p(g: &Graph, p: usize, caps: &Caps) -> Result<InvariantResult> {
    chi_p_with_hint(g, p, None, caps)
}

/// Exact `χ_p`, seeded with a candidate colouring. The hint only helps if
/// it validates; an invalid hint is ignored.
///
/// Components are solved separately and combined by maximum. A component
/// whose certified bounds already meet needs no search, so it may exceed
/// the search cap.
pub fn chi_p_with_hint(g: &Graph, p: usize, hint: Option<&Coloring>, caps: &Caps) -> Result<InvariantResult> {
    combine(g, p, hint, caps, |h, p, hint, caps| {
        let b = component_bounds(h, p, hint, caps)?;
        if b.is_exact() {
            return Ok((b.lower, b.lower_bound, b.coloring));
        }
        Error::check_cap("chi_p", caps.chi_p_cap(p), h.n())?;
        let adj = bits::adjacency(h, "chi_p")?;
        let mut td = TdSolver::new(&adj);
        for k in b.lower..b.upper {
            if let Some(a) = search(&adj, p, k, caps.search_budget, &mut td)? {
                let lower_bound = if k == b.lower {
                    b.lower_bound
                } else {
                    LowerBound::Exhaustive { colors: k - 1 }
                };
                return Ok((k, lower_bound, Coloring::new(a, ColoringKind::ChiP { p })));
            }
        }
        Ok((b.upper, LowerBound::Exhaustive { colors: b.upper - 1 }, b.coloring))
    })
    .map(|(value, lower_bound, coloring)| InvariantResult {
        value,
        certificate: Certificate::Coloring(coloring),
        lower_bound,
    })
}

/// Lower and upper bounds on `χ_p` from cliques, long paths, tree-depth and
/// an optional hint, combined over components.
pub fn chi_p_bounds(g: &Graph, p: usize, hint: Option<&Coloring>, caps: &Caps) -> Result<ChiPBounds> {
    let mut upper = 0;
    let (lower, lower_bound, coloring) = combine(g, p, hint, caps, |h, p, hint, caps| {
        let b = component_bounds(h, p, hint, caps)?;
        upper = upper.max(b.upper);
        Ok((b.lower, b.lower_bound, b.coloring))
    })?;
    let upper = upper.max(coloring.num_colors);
    Ok(ChiPBounds {
        lower,
        lower_bound,
        upper,
        coloring,
    })
}

/// A `χ_p` colouring with at most `k` colours, if one exists.
pub fn chi_p_coloring_with(g: &Graph, p: usize, k: usize, caps: &Caps) -> Result<Option<Coloring>> {
    check_p(p)?;
    Error::check_cap("chi_p_coloring_with", caps.chi_p_cap(p), g.n())?;
    let adj = bits::adjacency(g, "chi_p_coloring_with")?;
    let mut td = TdSolver::new(&adj);
    Ok(search(&adj, p, k, caps.search_budget, &mut td)?.map(|a| Coloring::new(a, ColoringKind::ChiP { p })))
}

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        Err(Error::Param("chi_p needs p ≥ 1".into()))
    } else {
        Ok(())
    }
}

type Solved = (usize, LowerBound, Coloring);

fn combine(
    g: &Graph,
    p: usize,
    hint: Option<&Coloring>,
    caps: &Caps,
    mut solve: impl FnMut(&Graph, usize, Option<Coloring>, &Caps) -> Result<Solved>,
) -> Result<Solved> {
    check_p(p)?;
    if let Some(h) = hint {
        if h.assignment.len() != g.n() {
            return Err(Error::Input(format!(
                "hint colours {} vertices, graph has {}",
                h.assignment.len(),
                g.n()
            )));
        }
    }
    let mut assignment = vec![0; g.n()];
    let mut best: Option<(usize, LowerBound)> = None;
    let mut lower_bound = LowerBound::Trivial;
    let mut value = 0;
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        let local_hint = hint.map(|c| {
            Coloring::new(
                comp.iter().map(|&v| c.assignment[v]).collect(),
                ColoringKind::ChiP { p },
            )
        });
        let (k, lb, coloring) = solve(&h, p, local_hint, caps)?;
        for (i, &v) in comp.iter().enumerate() {
            assignment[v] = coloring.assignment[i];
        }
        if best.as_ref().is_none_or(|(b, _)| k > *b) {
            lower_bound = relabel(lb.clone(), &comp);
            best = Some((k, lb));
            value = k;
        }
    }
    Ok((value, lower_bound, Coloring::new(assignment, ColoringKind::ChiP { p })))
}

fn relabel(lb: LowerBound, comp: &[usize]) -> LowerBound {
    let map = |vs: Vec<usize>| vs.into_iter().map(|v| comp[v]).collect();
    match lb {
        LowerBound::Clique { vertices } => LowerBound::Clique {
            vertices: map(vertices),
        },
        LowerBound::CriticalSubgraph { vertices } => LowerBound::CriticalSubgraph {
            vertices: map(vertices),
        },
        LowerBound::Path { vertices } => LowerBound::Path {
            vertices: map(vertices),
        },
        other => other,
    }
}

fn component_bounds(h: &Graph, p: usize, hint: Option<Coloring>, caps: &Caps) -> Result<ChiPBounds> {
    let n = h.n();
    let adj = bits::adjacency(h, "chi_p")?;
    let clique = max_clique(&adj, bits::full(n));
    let mut lower = clique.count_ones() as usize;
    let mut lower_bound = LowerBound::Clique {
        vertices: bits::to_vec(clique),
    };
    // With at most p colours the whole graph is one admissible colour set,
    // so χ_p ≥ min(p + 1, td) ≥ min(p + 1, td(P)) for any path P.
    if p >= 2 && lower <= p {
        let target = 1usize << p.min(usize::BITS as usize - 2);
        let path = long_path(h, target, PATH_SEARCH_BUDGET);
        let bound = tree_depth_of_path(path.len()).min(p + 1);
        if bound > lower {
            lower = bound;
            lower_bound = LowerBound::Path { vertices: path };
        }
    }

    let kind = ColoringKind::ChiP { p };
    let mut upper = n;
    let mut coloring = Coloring::new((0..n).collect(), kind);
    if n <= caps.tree_depth_cap() {
        let mut td = TdSolver::new(&adj);
        let forest = td.forest(bits::full(n));
        if forest.height <= p {
            // Exact: χ_p ≥ min(p + 1, td) = td.
            return Ok(ChiPBounds {
                lower: forest.height,
                lower_bound: LowerBound::TreeDepth { value: forest.height },
                upper: forest.height,
                coloring: depth_coloring(&forest).with_kind(kind),
            });
        }
        if lower <= p {
            lower = p + 1;
            lower_bound = LowerBound::TreeDepth { value: forest.height };
        }
        if forest.height < upper {
            upper = forest.height;
            coloring = depth_coloring(&forest).with_kind(kind);
        }
    }
    if let Some(hint) = hint {
        if hint.num_colors < upper && validate_coloring(h, &hint)?.is_pass() {
            upper = hint.num_colors;
            coloring = hint;
        }
    }
    Ok(ChiPBounds {
        lower,
        lower_bound,
        upper,
        coloring,
    })
}

fn search<'a>(adj: &'a [Mask], p: usize, k: usize, budget: u64, td: &mut TdSolver<'a>) -> Result<Option<Vec<usize>>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = ChiPSearch {
        adj,
        p,
        k,
        color: vec![usize::MAX; n],
        class: vec![0; k],
        td,
        budget: Budget::new("chi_p search", budget),
    };
    Ok(if s.run(0, 0)? { Some(s.color) } else { None })
}

struct ChiPSearch<'a, 'b> {
    adj: &'a [Mask],
    p: usize,
    k: usize,
    color: Vec<usize>,
    class: Vec<Mask>,
    td: &'b mut TdSolver<'a>,
    budget: Budget,
}

impl ChiPSearch<'_, '_> {
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
            if forb >> c & 1 == 1 {
                continue;
            }
            self.class[c] |= 1 << v;
            self.color[v] = c;
            if self.admissible(v, c, used.max(c + 1)) && self.run(colored | 1 << v, used.max(c + 1))? {
                return Ok(true);
            }
            self.class[c] &= !(1 << v);
            self.color[v] = usize::MAX;
        }
        Ok(false)
    }

    /// Every colour set `I ∋ c` with `2 ≤ |I| ≤ p` still induces tree-depth
    /// at most `|I|` around `v`.
    fn admissible(&mut self, v: usize, c: usize, used: usize) -> bool {
        let others: Vec<usize> = (0..used).filter(|&d| d != c).collect();
        let mut chosen = Vec::new();
        self.check_subsets(v, c, &others, 0, &mut chosen)
    }

    fn check_subsets(&mut self, v: usize, c: usize, others: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if !chosen.is_empty() {
            let set = chosen.iter().fold(self.class[c], |m, &d| m | self.class[d]);
            let comp = component(self.adj, set, v);
            // A colour of I missing from the component reduces to a smaller
            // set with a stricter bound, which is checked separately.
            if chosen.iter().all(|&d| comp & self.class[d] != 0) {
                let bound = chosen.len() + 1;
                if comp.count_ones() as usize > bound && !self.td.at_most(comp, bound) {
                    return false;
                }
            }
        }
        if chosen.len() + 1 == self.p {
            return true;
        }
        for i in start..others.len() {
            chosen.push(others[i]);
            let ok = self.check_subsets(v, c, others, i + 1, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
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
