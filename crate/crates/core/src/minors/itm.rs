use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{MinorCaps, TopoMinorEmbedding};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, subdivide_with_paths, CanonicalForm, Graph, SubdivisionProfile};
use crate::invariants::chromatic::color_set;
use crate::invariants::clique::max_clique;
use crate::invariants::{average_degree, Budget};

/// A branch pair and its candidate connecting paths.
type Connector = ((usize, usize), Vec<Vec<usize>>);

/// An induced copy of `H^(r)` in `g`, if one exists.
pub fn is_induced_exact_subdivision(
    h: &Graph,
    r: usize,
    g: &Graph,
    caps: &MinorCaps,
) -> Result<Option<TopoMinorEmbedding>> {
    Error::check_cap("is_induced_exact_subdivision host", caps.host, g.n())?;
    let sub = subdivide_with_paths(h, &SubdivisionProfile::uniform(h, r))?;
    let t = &sub.graph;
    if t.n() > g.n() || t.m() > g.m() {
        return Ok(None);
    }
    let host = bits::adjacency(g, "is_induced_exact_subdivision")?;
    let pattern = bits::adjacency(t, "is_induced_exact_subdivision pattern")?;
    let mut search = Induced {
        host: &host,
        pattern: &pattern,
        order: match_order(&pattern),
        image: vec![usize::MAX; t.n()],
        budget: Budget::new("is_induced_exact_subdivision", caps.search_budget),
    };
    if !search.assign(0, 0, 0)? {
        return Ok(None);
    }
    let image = search.image;
    Ok(Some(TopoMinorEmbedding {
        pattern: h.clone(),
        branch_map: image[..h.n()].to_vec(),
        paths: sub
            .paths
            .iter()
            .map(|(_, path)| path.iter().map(|&x| image[x]).collect())
            .collect(),
    }))
}

/// Pattern vertices in matching order: each next vertex has the most
/// already-ordered neighbours, then the highest degree, then the lowest index.
fn match_order(adj: &[Mask]) -> Vec<usize> {
    let n = adj.len();
    let mut placed: Mask = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (adj[v] & placed).count_ones(),
                    adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

struct Induced<'a> {
    host: &'a [Mask],
    pattern: &'a [Mask],
    order: Vec<usize>,
    image: Vec<usize>,
    budget: Budget,
}

impl Induced<'_> {
    fn assign(&mut self, i: usize, placed: Mask, used: Mask) -> Result<bool> {
        self.budget.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let t = self.order[i];
        let mapped_nbrs = self.pattern[t] & placed;
        let expected = bits::iter(mapped_nbrs).fold(0 as Mask, |m, x| m | 1 << self.image[x]);
        let candidates = match bits::iter(mapped_nbrs).next() {
            Some(x) => self.host[self.image[x]] & !used,
            None => bits::full(self.host.len()) & !used,
        };
        let need = self.pattern[t].count_ones();
        for v in bits::iter(candidates) {
            if self.host[v].count_ones() < need || self.host[v] & used != expected {
                continue;
            }
            self.image[t] = v;
            if self.assign(i + 1, placed | 1 << t, used | 1 << v)? {
                return Ok(true);
            }
        }
        self.image[t] = usize::MAX;
        Ok(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItmPattern {
    pub pattern: Graph,
    pub embedding: TopoMinorEmbedding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItmEnumeration {
    /// One representative per isomorphism class, ordered by canonical form.
    pub patterns: Vec<ItmPattern>,
    pub max_average_degree: Ratio<usize>,
    pub max_clique: usize,
    pub max_chromatic: usize,
}

/// Every `H` on at most `max_pattern_size` vertices whose exact
/// `r`-subdivision is an induced subgraph of `g`, up to isomorphism.
///
/// For `r ≥ 1` branch sets are independent sets; each pair of branch
/// vertices may be joined by an induced path with exactly `r` interior
/// vertices that avoids the rest of the image. Every pattern found is
/// confirmed by [`is_induced_exact_subdivision`].
pub fn enumerate_itm_exact(g: &Graph, r: usize, max_pattern_size: usize, caps: &MinorCaps) -> Result<ItmEnumeration> {
    Error::check_cap("enumerate_itm_exact host", caps.enumeration_host, g.n())?;
    Error::check_cap("enumerate_itm_exact pattern", caps.pattern, max_pattern_size)?;
    let adj = bits::adjacency(g, "enumerate_itm_exact")?;
    let mut found: BTreeMap<CanonicalForm, TopoMinorEmbedding> = BTreeMap::new();
    let mut e = Enumerator {
        adj: &adj,
        r,
        s: max_pattern_size,
        found: &mut found,
        budget: Budget::new("enumerate_itm_exact", caps.search_budget),
    };
    e.branch_sets(&mut Vec::new(), 0)?;

    let mut patterns = Vec::with_capacity(found.len());
    let mut out = ItmEnumeration {
        patterns: Vec::new(),
        max_average_degree: Ratio::from_integer(0),
        max_clique: 0,
        max_chromatic: 0,
    };
    for (_, embedding) in found {
        embedding
            .validate_itm(g, r)
            .map_err(|e| Error::Validation(format!("enumerated embedding invalid: {e}")))?;
        let h = embedding.pattern.clone();
        if is_induced_exact_subdivision(&h, r, g, caps)?.is_none() {
            return Err(Error::Validation("enumerated pattern not confirmed".into()));
        }
        let hadj = bits::adjacency(&h, "enumerate_itm_exact pattern")?;
        let all = bits::full(h.n());
        out.max_average_degree = out.max_average_degree.max(average_degree(&h));
        out.max_clique = out.max_clique.max(max_clique(&hadj, all).count_ones() as usize);
        let mut chi = 0;
        while color_set(&hadj, all, chi, caps.search_budget)?.is_none() {
            chi += 1;
        }
        out.max_chromatic = out.max_chromatic.max(chi);
        patterns.push(ItmPattern { pattern: h, embedding });
    }
    out.patterns = patterns;
    Ok(out)
}

struct Enumerator<'a> {
    adj: &'a [Mask],
    r: usize,
    s: usize,
    found: &'a mut BTreeMap<CanonicalForm, TopoMinorEmbedding>,
    budget: Budget,
}

impl Enumerator<'_> {
    fn branch_sets(&mut self, chosen: &mut Vec<usize>, start: usize) -> Result<()> {
        if !chosen.is_empty() {
            self.families(chosen)?;
        }
        if chosen.len() == self.s {
            return Ok(());
        }
        for v in start..self.adj.len() {
            // With r = 0 branch vertices may be adjacent; the pattern is
            // then just the induced subgraph.
            if self.r > 0 && chosen.iter().any(|&b| self.adj[b] >> v & 1 == 1) {
                continue;
            }
            chosen.push(v);
            self.branch_sets(chosen, v + 1)?;
            chosen.pop();
        }
        Ok(())
    }

    fn families(&mut self, branch: &[usize]) -> Result<()> {
        let k = branch.len();
        let bmask = branch.iter().fold(0 as Mask, |m, &v| m | 1 << v);
        if self.r == 0 {
            let edges: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| self.adj[branch[i]] >> branch[j] & 1 == 1)
                .collect();
            let paths = edges.iter().map(|&(i, j)| vec![branch[i], branch[j]]).collect();
            self.record(branch, edges, paths);
            return Ok(());
        }
        let mut connectors = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let others = bmask & !(1 << branch[i]) & !(1 << branch[j]);
                let paths = self.connectors(branch[i], branch[j], bmask, others)?;
                if !paths.is_empty() {
                    connectors.push(((i, j), paths));
                }
            }
        }
        let mut chosen = Vec::new();
        self.choose(branch, &connectors, 0, 0, &mut chosen)
    }

    /// Induced `a`–`b` paths with exactly `r` interior vertices, none in
    /// `branch` and none adjacent to `others`.
    fn connectors(&mut self, a: usize, b: usize, branch: Mask, others: Mask) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut path = vec![a];
        self.grow(b, branch, others, &mut path, &mut out)?;
        Ok(out)
    }

    fn grow(
        &mut self,
        b: usize,
        branch: Mask,
        others: Mask,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        self.budget.tick()?;
        let x = *path.last().expect("non-empty");
        let interior = path.len() - 1;
        if interior == self.r {
            if self.adj[x] >> b & 1 == 1 {
                let mut full = path.clone();
                full.push(b);
                out.push(full);
            }
            return Ok(());
        }
        let on_path = path.iter().fold(0 as Mask, |m, &v| m | 1 << v);
        let last_step = interior + 1 == self.r;
        for y in bits::iter(self.adj[x] & !on_path & !branch) {
            if self.adj[y] & others != 0 {
                continue;
            }
            // Chordless: y touches only x on the path so far, and touches b
            // only as the last interior vertex.
            if self.adj[y] & on_path != 1 << x {
                continue;
            }
            if !last_step && self.adj[y] >> b & 1 == 1 {
                continue;
            }
            path.push(y);
            self.grow(b, branch, others, path, out)?;
            path.pop();
        }
        Ok(())
    }

    fn choose(
        &mut self,
        branch: &[usize],
        connectors: &[Connector],
        t: usize,
        used: Mask,
        chosen: &mut Vec<(usize, usize)>,
    ) -> Result<()> {
        self.budget.tick()?;
        if t == connectors.len() {
            let mut edges = Vec::new();
            let mut paths = Vec::new();
            for &(ci, pi) in chosen.iter() {
                edges.push(connectors[ci].0);
                paths.push(connectors[ci].1[pi].clone());
            }
            self.record(branch, edges, paths);
            return Ok(());
        }
        let (_, options) = &connectors[t];
        for (pi, path) in options.iter().enumerate() {
            let interior = path[1..path.len() - 1].iter().fold(0 as Mask, |m, &v| m | 1 << v);
            if interior & used != 0 {
                continue;
            }
            if bits::iter(interior).any(|x| self.adj[x] & used != 0) {
                continue;
            }
            chosen.push((t, pi));
            self.choose(branch, connectors, t + 1, used | interior, chosen)?;
            chosen.pop();
        }
        self.choose(branch, connectors, t + 1, used, chosen)
    }

    fn record(&mut self, branch: &[usize], edges: Vec<(usize, usize)>, paths: Vec<Vec<usize>>) {
        let pattern = Graph::from_edges(branch.len(), &edges).expect("distinct pairs");
        let form = canonical_form(&pattern);
        if self.found.contains_key(&form) {
            return;
        }
        // Edges were produced in lexicographic order, matching pattern.edges().
        debug_assert!(pattern.edges().eq(edges.iter().copied()));
        self.found.insert(
            form,
            TopoMinorEmbedding {
                pattern,
                branch_map: branch.to_vec(),
                paths,
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::subdivide_exact;

    fn caps() -> MinorCaps {
        MinorCaps::default()
    }

    #[test]
    fn exact_subdivision_examples() {
        let k3 = Graph::complete(3);
        let c6 = Graph::cycle(6);
        let e = is_induced_exact_subdivision(&k3, 1, &c6, &caps()).unwrap().unwrap();
        e.validate_itm(&c6, 1).unwrap();
        assert!(is_induced_exact_subdivision(&k3, 1, &Graph::complete(6), &caps())
            .unwrap()
            .is_none());
        let k4s = subdivide_exact(&Graph::complete(4), 1);
        let e = is_induced_exact_subdivision(&Graph::complete(4), 1, &k4s, &caps())
            .unwrap()
            .unwrap();
        e.validate_itm(&k4s, 1).unwrap();
        // C_7 contains no induced C_6.
        assert!(is_induced_exact_subdivision(&k3, 1, &Graph::cycle(7), &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn enumeration_examples() {
        let c6 = enumerate_itm_exact(&Graph::cycle(6), 1, 4, &caps()).unwrap();
        assert!(c6
            .patterns
            .iter()
            .any(|p| canonical_form(&p.pattern) == canonical_form(&Graph::complete(3))));
        let k5 = enumerate_itm_exact(&Graph::complete(5), 1, 4, &caps()).unwrap();
        assert!(k5.patterns.iter().all(|p| p.pattern.m() == 0));
        assert_eq!(k5.patterns.len(), 1);
        let k4s = enumerate_itm_exact(&subdivide_exact(&Graph::complete(4), 1), 1, 4, &caps()).unwrap();
        assert_eq!(k4s.max_average_degree, Ratio::from_integer(3));
        assert_eq!(k4s.max_clique, 4);
        assert_eq!(k4s.max_chromatic, 4);
    }

    #[test]
    fn depth_zero_is_induced_subgraphs() {
        let e = enumerate_itm_exact(&Graph::cycle(5), 0, 5, &caps()).unwrap();
        // Induced subgraphs of C_5 up to isomorphism: K1, 2K1, K2, P3, K1+K2, P4, C5.
        assert_eq!(e.patterns.len(), 7);
    }
}
