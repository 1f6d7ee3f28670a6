//! Digraph homomorphisms, restricted duals and walk powers.
//!
//! Undirected graphs enter as symmetric digraphs ([`Digraph::symmetric`]).

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::invariants::clique::max_clique;
use crate::invariants::{degeneracy, Budget};

/// A vertex map that sends every arc of the source to an arc of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomMapping(pub Vec<usize>);

impl HomMapping {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Checks the map arc by arc.
    pub fn validate(&self, source: &Digraph, target: &Digraph) -> Result<(), String> {
        if self.0.len() != source.n() {
            return Err(format!("map has {} entries for {} vertices", self.0.len(), source.n()));
        }
        if let Some(&x) = self.0.iter().find(|&&x| x >= target.n()) {
            return Err(format!("image {x} outside the target"));
        }
        match source.arcs().find(|&(u, v)| !target.has_arc(self.0[u], self.0[v])) {
            Some((u, v)) => Err(format!("arc ({u},{v}) maps to non-arc ({},{})", self.0[u], self.0[v])),
            None => Ok(()),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomMapping) -> HomMapping {
        HomMapping(self.0.iter().map(|&x| other.0[x]).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCaps {
    pub source: usize,
    pub target: usize,
    pub search_budget: u64,
}

impl Default for HomCaps {
    fn default() -> Self {
        HomCaps {
            source: 40,
            target: 16,
            search_budget: 50_000_000,
        }
    }
}

fn masks(d: &Digraph, what: &'static str) -> Result<(Vec<Mask>, Vec<Mask>)> {
    Error::check_cap(what, bits::MAX_MASK_VERTICES, d.n())?;
    let to_mask = |list: &[usize]| list.iter().fold(0 as Mask, |m, &w| m | 1 << w);
    Ok((
        (0..d.n()).map(|v| to_mask(d.out_neighbors(v))).collect(),
        (0..d.n()).map(|v| to_mask(d.in_neighbors(v))).collect(),
    ))
}

/// A homomorphism `f → g`, or `None` when none exists.
///
/// Source vertices are assigned in order of decreasing total degree, ties
/// to the lower index; target vertices are tried in increasing order. Each
/// assignment narrows the candidate sets of unassigned neighbours.
pub fn homomorphism(f: &Digraph, g: &Digraph, caps: &HomCaps) -> Result<Option<HomMapping>> {
    Error::check_cap("homomorphism source", caps.source, f.n())?;
    Error::check_cap("homomorphism target", caps.target, g.n())?;
    let mut budget = Budget::new("homomorphism", caps.search_budget);
    hom_with(f, g, &mut budget)
}

fn hom_with(f: &Digraph, g: &Digraph, budget: &mut Budget) -> Result<Option<HomMapping>> {
    if f.n() == 0 {
        return Ok(Some(HomMapping(Vec::new())));
    }
    if g.n() == 0 {
        return Ok(None);
    }
    let (g_out, g_in) = masks(g, "homomorphism target")?;
    let mut order: Vec<usize> = (0..f.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(f.out_neighbors(v).len() + f.in_neighbors(v).len()), v));
    let mut search = HomSearch {
        f,
        g_out: &g_out,
        g_in: &g_in,
        order,
        image: vec![usize::MAX; f.n()],
        budget,
    };
    let domains = vec![bits::full(g.n()); f.n()];
    let found = search.assign(0, domains)?;
    Ok(found.then_some(HomMapping(search.image)))
}

struct HomSearch<'a> {
    f: &'a Digraph,
    g_out: &'a [Mask],
    g_in: &'a [Mask],
    order: Vec<usize>,
    image: Vec<usize>,
    budget: &'a mut Budget,
}

impl HomSearch<'_> {
    fn assign(&mut self, i: usize, domains: Vec<Mask>) -> Result<bool> {
        self.budget.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        'candidates: for x in bits::iter(domains[v]) {
            let mut next = domains.clone();
            next[v] = 1 << x;
            for &w in self.f.out_neighbors(v) {
                next[w] &= self.g_out[x];
                if next[w] == 0 {
                    continue 'candidates;
                }
            }
            for &w in self.f.in_neighbors(v) {
                next[w] &= self.g_in[x];
                if next[w] == 0 {
                    continue 'candidates;
                }
            }
            self.image[v] = x;
            if self.assign(i + 1, next)? {
                return Ok(true);
            }
        }
        self.image[v] = usize::MAX;
        Ok(false)
    }
}

/// Vertices `0..k`, arc `(i, j)` exactly when `i < j`.
pub fn transitive_tournament(k: usize) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    Digraph::from_arcs(k, &arcs).expect("simple arcs")
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WalkPowerError {
    #[error("walk length must be positive")]
    ZeroLength,
    /// A closed directed walk of the requested length; first and last entries agree.
    #[error("closed walk of length {} at vertex {vertex}", walk.len() - 1)]
    Loop { vertex: usize, walk: Vec<usize> },
    #[error(transparent)]
    Size(#[from] Error),
}

/// The digraph with an arc `u → v` (`u ≠ v`) whenever `d` has a directed
/// walk of exactly `len` arcs from `u` to `v`. A closed walk of that length
/// is reported as [`WalkPowerError::Loop`] at the least such vertex.
pub fn walk_power(d: &Digraph, len: usize) -> Result<Digraph, WalkPowerError> {
    if len == 0 {
        return Err(WalkPowerError::ZeroLength);
    }
    let (out, _) = masks(d, "walk_power")?;
    let n = d.n();
    // reach[i][u]: vertices at the end of a walk of exactly i arcs from u.
    let mut reach: Vec<Vec<Mask>> = vec![(0..n).map(|u| 1 << u).collect()];
    for i in 0..len {
        let next = (0..n)
            .map(|u| bits::iter(reach[i][u]).fold(0 as Mask, |m, w| m | out[w]))
            .collect();
        reach.push(next);
    }
    if let Some(u) = (0..n).find(|&u| reach[len][u] >> u & 1 == 1) {
        let mut walk = vec![u];
        let mut cur = u;
        for i in 1..len {
            cur = bits::iter(out[cur])
                .find(|&w| reach[len - i][w] >> u & 1 == 1)
                .expect("walk continues");
            walk.push(cur);
        }
        walk.push(u);
        return Err(WalkPowerError::Loop { vertex: u, walk });
    }
    Ok(Digraph::from_arcs_dedup(
        n,
        (0..n)
            .flat_map(|u| bits::iter(reach[len][u]).map(move |v| (u, v)))
            .collect::<Vec<_>>(),
    ))
}

/// How one sample `G` sits relative to `F` and its candidate dual `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "side", rename_all = "snake_case")]
pub enum SampleOutcome {
    /// `F ↛ G` and `G → D`.
    MapsToDual { to_dual: HomMapping },
    /// `F → G` and `G ↛ D`.
    ReceivesF { from_f: HomMapping },
    /// Both or neither of `F → G` and `G → D`.
    Violation {
        from_f: Option<HomMapping>,
        to_dual: Option<HomMapping>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub f: Digraph,
    pub d: Digraph,
    /// A homomorphism `F → D`; its presence alone fails the check.
    pub f_to_d: Option<HomMapping>,
    /// Outcomes in sample order, ending at the first violation.
    pub outcomes: Vec<SampleOutcome>,
    pub pass: bool,
    /// Index of the violating sample, if any.
    pub violating_sample: Option<usize>,
}

/// Checks that `D` is a restricted dual of `F` on `samples`: `F ↛ D`, and
/// for each sample `G`, `F ↛ G` exactly when `G → D`.
pub fn verify_restricted_dual(f: &Digraph, d: &Digraph, samples: &[Digraph], caps: &HomCaps) -> Result<DualityReport> {
    let mut report = DualityReport {
        f: f.clone(),
        d: d.clone(),
        f_to_d: homomorphism(f, d, caps)?,
        outcomes: Vec::new(),
        pass: false,
        violating_sample: None,
    };
    if report.f_to_d.is_some() {
        return Ok(report);
    }
    for (i, g) in samples.iter().enumerate() {
        let outcome = classify(f, d, g, caps)?;
        let bad = matches!(outcome, SampleOutcome::Violation { .. });
        report.outcomes.push(outcome);
        if bad {
            report.violating_sample = Some(i);
            return Ok(report);
        }
    }
    report.pass = true;
    Ok(report)
}

/// The outcome for one sample, with both searches run.
pub fn classify(f: &Digraph, d: &Digraph, g: &Digraph, caps: &HomCaps) -> Result<SampleOutcome> {
    let from_f = homomorphism(f, g, caps)?;
    let to_dual = homomorphism(g, d, caps)?;
    Ok(match (from_f, to_dual) {
        (None, Some(to_dual)) => SampleOutcome::MapsToDual { to_dual },
        (Some(from_f), None) => SampleOutcome::ReceivesF { from_f },
        (from_f, to_dual) => SampleOutcome::Violation { from_f, to_dual },
    })
}

/// Result of [`h_coloring_with_witness`]: exactly one of the two shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum HColoring {
    Mapping(HomMapping),
    /// A vertex set `X` with `G[X] ↛ H`.
    Witness {
        vertices: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HColoringConfig {
    pub clique_threshold: usize,
    pub degeneracy_threshold: usize,
}

/// Either an `H`-colouring of `g` or a small vertex set that has none.
///
/// When the degeneracy of `g` exceeds the threshold, the subgraph of
/// minimum degree above it is searched for a `clique_threshold`-clique,
/// returned as the witness if it does not map to `h`. Otherwise a bounded
/// homomorphism search runs; when it fails, the vertex set is shrunk
/// greedily while it still has no homomorphism. Both shapes are
/// re-validated before returning.
pub fn h_coloring_with_witness(g: &Graph, h: &Digraph, config: &HColoringConfig, caps: &HomCaps) -> Result<HColoring> {
    Error::check_cap("h_coloring_with_witness source", caps.source, g.n())?;
    Error::check_cap("h_coloring_with_witness target", caps.target, h.n())?;
    let mut budget = Budget::new("h_coloring_with_witness", caps.search_budget);
    let maps = |vs: &[usize], budget: &mut Budget| -> Result<bool> {
        Ok(hom_with(&Digraph::symmetric(&g.induced_subgraph(vs)), h, budget)?.is_some())
    };

    let deg = degeneracy(g);
    if deg.value > config.degeneracy_threshold && config.clique_threshold > 0 {
        let adj = bits::adjacency(g, "h_coloring_with_witness")?;
        let mut core = bits::full(g.n());
        for &v in &deg.ordering {
            if ((adj[v] & core).count_ones() as usize) > config.degeneracy_threshold {
                break;
            }
            core &= !(1 << v);
        }
        let clique = max_clique(&adj, core);
        if clique.count_ones() as usize >= config.clique_threshold {
            let x: Vec<usize> = bits::iter(clique).take(config.clique_threshold).collect();
            if !maps(&x, &mut budget)? {
                return Ok(HColoring::Witness { vertices: x });
            }
        }
    }

    let whole = Digraph::symmetric(g);
    if let Some(m) = hom_with(&whole, h, &mut budget)? {
        m.validate(&whole, h).map_err(Error::Validation)?;
        return Ok(HColoring::Mapping(m));
    }
    let mut x: Vec<usize> = (0..g.n()).collect();
    let mut i = 0;
    while i < x.len() {
        let mut smaller = x.clone();
        smaller.remove(i);
        if maps(&smaller, &mut budget)? {
            i += 1;
        } else {
            x = smaller;
        }
    }
    if maps(&x, &mut budget)? {
        return Err(Error::Validation("witness maps to the target".into()));
    }
    Ok(HColoring::Witness { vertices: x })
}
