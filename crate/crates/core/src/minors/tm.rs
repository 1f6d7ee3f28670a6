use serde::{Deserialize, Serialize};

use super::route::{all_distances, Goal, Router};
use super::{MinorCaps, TopoMinorEmbedding};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::chromatic::color_set;
use crate::invariants::Budget;

/// Some `≤ r`-subdivision of `K_k` as a subgraph of `g`, if one exists.
///
/// Branch sets are tried in lexicographic order. A vertex qualifies only
/// with degree at least `k − 1`, every two branch vertices must be within
/// distance `r + 1`, and the distances must leave room for disjoint
/// interiors among the remaining vertices.
pub fn find_subdivided_clique(g: &Graph, k: usize, r: usize, caps: &MinorCaps) -> Result<Option<TopoMinorEmbedding>> {
    if k == 0 {
        return Err(Error::Param("clique size must be at least 1".into()));
    }
    Error::check_cap("find_subdivided_clique host", caps.host, g.n())?;
    Error::check_cap("find_subdivided_clique k", caps.clique, k)?;
    let adj = bits::adjacency(g, "find_subdivided_clique")?;
    let dist = all_distances(&adj);
    let mut budget = Budget::new("find_subdivided_clique", caps.search_budget);
    let mut search = CliqueSearch {
        g,
        adj: &adj,
        dist: &dist,
        k,
        r,
        budget: &mut budget,
    };
    let mut chosen = Vec::new();
    search.branch(&mut chosen, 0, 0)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    adj: &'a [Mask],
    dist: &'a [Vec<usize>],
    k: usize,
    r: usize,
    budget: &'a mut Budget,
}

struct AllPairs;

impl Goal for AllPairs {
    fn all_required(&self) -> bool {
        true
    }
    fn viable(&mut self, _: &[usize], _: &[usize]) -> Result<bool> {
        Ok(true)
    }
    fn accept(&mut self, _: &[usize]) -> Result<bool> {
        Ok(true)
    }
}

impl CliqueSearch<'_> {
    fn branch(&mut self, chosen: &mut Vec<usize>, start: usize, interior: usize) -> Result<Option<TopoMinorEmbedding>> {
        let n = self.g.n();
        if chosen.len() == self.k {
            return self.route(chosen);
        }
        for v in start..n {
            if n - v < self.k - chosen.len() {
                break;
            }
            if self.g.degree(v) + 1 < self.k {
                continue;
            }
            let mut extra = 0;
            let mut ok = true;
            for &b in chosen.iter() {
                let d = self.dist[b][v];
                if d == usize::MAX || d > self.r + 1 {
                    ok = false;
                    break;
                }
                extra += d - 1;
            }
            if !ok || interior + extra > n - self.k {
                continue;
            }
            chosen.push(v);
            let found = self.branch(chosen, v + 1, interior + extra)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn route(&mut self, chosen: &[usize]) -> Result<Option<TopoMinorEmbedding>> {
        let pattern = Graph::complete(self.k);
        let pairs: Vec<(usize, usize)> = pattern.edges().map(|(i, j)| (chosen[i], chosen[j])).collect();
        let mut router = Router {
            adj: self.adj,
            dist: self.dist,
            r: self.r,
            pairs,
            paths: Vec::new(),
            budget: self.budget,
        };
        let blocked = chosen.iter().fold(0, |m, &v| m | 1 << v);
        if router.run(blocked, &mut AllPairs)? {
            Ok(Some(TopoMinorEmbedding {
                pattern,
                branch_map: chosen.to_vec(),
                paths: router.paths.into_iter().map(|p| p.expect("all pairs routed")).collect(),
            }))
        } else {
            Ok(None)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTm {
    pub value: usize,
    /// Embedding of `K_value`; `None` only for the empty graph.
    pub witness: Option<TopoMinorEmbedding>,
}

/// Largest `k` with `K_k ∈ TM_r(g)`. The search starts at the clique
/// number and stops at the first `k` without an embedding, since every
/// embedding of `K_{k+1}` contains one of `K_k`.
pub fn omega_tm(g: &Graph, r: usize, caps: &MinorCaps) -> Result<OmegaTm> {
    if g.n() == 0 {
        return Ok(OmegaTm {
            value: 0,
            witness: None,
        });
    }
    let adj = bits::adjacency(g, "omega_tm")?;
    let omega = crate::invariants::clique::max_clique(&adj, bits::full(g.n())).count_ones() as usize;
    let mut k = omega.max(1);
    let mut witness = find_subdivided_clique(g, k, r, caps)?;
    debug_assert!(witness.is_some());
    loop {
        // Branch vertices of `K_{k+1}` have degree at least `k`.
        if (0..g.n()).filter(|&v| g.degree(v) >= k).count() <= k {
            return Ok(OmegaTm { value: k, witness });
        }
        if k + 1 > caps.clique {
            return Err(Error::cap("omega_tm k", caps.clique, k + 1));
        }
        match find_subdivided_clique(g, k + 1, r, caps)? {
            Some(e) => {
                witness = Some(e);
                k += 1;
            }
            None => return Ok(OmegaTm { value: k, witness }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiTm {
    /// Largest `χ(H)` over `H ∈ TM_r(g)` with at most `max_pattern_size` vertices.
    pub value: usize,
    pub witness: Option<TopoMinorEmbedding>,
    /// True when `max_pattern_size < |g|`, so `value` may undercount the
    /// unrestricted maximum.
    pub cap_active: bool,
}

/// Largest chromatic number of a pattern in `TM_r(g)` on at most
/// `max_pattern_size` vertices.
///
/// For each target `c` it looks for a pattern with `χ ≥ c`. A `c`-chromatic
/// pattern contains a `c`-critical one of minimum degree `c − 1`, so only
/// branch sets whose reachable pairs keep every degree at `c − 1` or more
/// are routed, and routing is cut as soon as the routed plus still
/// routable pairs become `(c − 1)`-colourable.
pub fn chi_tm(g: &Graph, r: usize, max_pattern_size: usize, caps: &MinorCaps) -> Result<ChiTm> {
    Error::check_cap("chi_tm host", caps.enumeration_host, g.n())?;
    let s = max_pattern_size.min(g.n());
    let cap_active = max_pattern_size < g.n();
    if s == 0 {
        return Ok(ChiTm {
            value: 0,
            witness: None,
            cap_active,
        });
    }
    let adj = bits::adjacency(g, "chi_tm")?;
    let dist = all_distances(&adj);
    let mut budget = Budget::new("chi_tm", caps.search_budget);
    let mut best = 1;
    let mut witness = Some(TopoMinorEmbedding {
        pattern: Graph::empty(1),
        branch_map: vec![0],
        paths: Vec::new(),
    });
    loop {
        let c = best + 1;
        if c > s {
            break;
        }
        let mut search = ChiSearch {
            g,
            adj: &adj,
            dist: &dist,
            r,
            c,
            s,
            color_budget: caps.search_budget,
            budget: &mut budget,
        };
        match search.branch(&mut Vec::new(), 0)? {
            Some(e) => {
                let h = &e.pattern;
                best = chromatic(h, caps.search_budget)?;
                witness = Some(e);
            }
            None => break,
        }
    }
    Ok(ChiTm {
        value: best,
        witness,
        cap_active,
    })
}

fn chromatic(h: &Graph, budget: u64) -> Result<usize> {
    let adj = bits::adjacency(h, "chi_tm pattern")?;
    let all = bits::full(h.n());
    let mut k = 0;
    while color_set(&adj, all, k, budget)?.is_none() {
        k += 1;
    }
    Ok(k)
}

struct ChiSearch<'a> {
    g: &'a Graph,
    adj: &'a [Mask],
    dist: &'a [Vec<usize>],
    r: usize,
    c: usize,
    s: usize,
    color_budget: u64,
    budget: &'a mut Budget,
}

impl ChiSearch<'_> {
    fn reach(&self, a: usize, b: usize) -> bool {
        self.dist[a][b] <= self.r + 1
    }

    fn branch(&mut self, chosen: &mut Vec<usize>, start: usize) -> Result<Option<TopoMinorEmbedding>> {
        if chosen.len() >= self.c {
            if let Some(e) = self.route(chosen)? {
                return Ok(Some(e));
            }
        }
        if chosen.len() == self.s {
            return Ok(None);
        }
        for v in start..self.g.n() {
            if self.g.degree(v) + 1 < self.c {
                continue;
            }
            chosen.push(v);
            let found = self.branch(chosen, v + 1)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn route(&mut self, chosen: &[usize]) -> Result<Option<TopoMinorEmbedding>> {
        let k = chosen.len();
        let mut local: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.reach(chosen[i], chosen[j]) {
                    local.push((i, j));
                }
            }
        }
        let mut goal = ChromaticGoal {
            k,
            c: self.c,
            pairs: local.clone(),
            budget: self.color_budget,
        };
        if !goal.colourable_at_least_c(&(0..local.len()).collect::<Vec<_>>())? {
            return Ok(None);
        }
        let mut router = Router {
            adj: self.adj,
            dist: self.dist,
            r: self.r,
            pairs: local.iter().map(|&(i, j)| (chosen[i], chosen[j])).collect(),
            paths: Vec::new(),
            budget: self.budget,
        };
        let blocked = chosen.iter().fold(0, |m, &v| m | 1 << v);
        if !router.run(blocked, &mut goal)? {
            return Ok(None);
        }
        let routed: Vec<(usize, Vec<usize>)> = router
            .paths
            .iter()
            .enumerate()
            .filter_map(|(t, p)| p.clone().map(|p| (t, p)))
            .collect();
        let edges: Vec<(usize, usize)> = routed.iter().map(|(t, _)| local[*t]).collect();
        let pattern = Graph::from_edges(k, &edges).expect("distinct pairs");
        let paths = pattern
            .edges()
            .map(|e| {
                let t = routed.iter().position(|(t, _)| local[*t] == e).expect("edge routed");
                routed[t].1.clone()
            })
            .collect();
        Ok(Some(TopoMinorEmbedding {
            pattern,
            branch_map: chosen.to_vec(),
            paths,
        }))
    }
}

struct ChromaticGoal {
    k: usize,
    c: usize,
    pairs: Vec<(usize, usize)>,
    budget: u64,
}

impl ChromaticGoal {
    /// Whether the pattern on the listed pairs needs at least `c` colours.
    fn colourable_at_least_c(&self, pairs: &[usize]) -> Result<bool> {
        let mut adj = vec![0 as Mask; self.k];
        for &t in pairs {
            let (i, j) = self.pairs[t];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        // A c-critical subgraph has minimum degree c − 1; peel vertices below it.
        let mut alive = bits::full(self.k);
        loop {
            let low = bits::iter(alive).find(|&v| ((adj[v] & alive).count_ones() as usize) + 1 < self.c);
            match low {
                Some(v) => alive &= !(1 << v),
                None => break,
            }
        }
        if (alive.count_ones() as usize) < self.c {
            return Ok(false);
        }
        Ok(color_set(&adj, alive, self.c - 1, self.budget)?.is_none())
    }
}

impl Goal for ChromaticGoal {
    fn all_required(&self) -> bool {
        false
    }

    fn viable(&mut self, routed: &[usize], open: &[usize]) -> Result<bool> {
        let all: Vec<usize> = routed.iter().chain(open).copied().collect();
        self.colourable_at_least_c(&all)
    }

    fn accept(&mut self, routed: &[usize]) -> Result<bool> {
        self.colourable_at_least_c(routed)
    }
}
