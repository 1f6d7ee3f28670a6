use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Caps, Certificate, InvariantResult, LowerBound};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rooted forest whose ancestor closure contains the certified graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationForest {
    pub parent: Vec<Option<usize>>,
    pub height: usize,
}

impl EliminationForest {
    /// Depth of every vertex (roots have depth 0), or `None` if `parent` has a cycle.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.parent.len();
        let mut depth = vec![usize::MAX; n];
        for v in 0..n {
            let mut chain = Vec::new();
            let mut x = v;
            loop {
                if depth[x] != usize::MAX {
                    break;
                }
                if chain.len() > n {
                    return None;
                }
                chain.push(x);
                match self.parent[x] {
                    Some(p) if p < n => x = p,
                    Some(_) => return None,
                    None => {
                        depth[x] = 0;
                        chain.pop();
                        break;
                    }
                }
            }
            while let Some(y) = chain.pop() {
                depth[y] = depth[self.parent[y].expect("non-root")] + 1;
            }
        }
        Some(depth)
    }

    pub fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        loop {
            if v == a {
                return true;
            }
            match self.parent[v] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }

    /// Checks acyclicity, the ancestor condition on every edge, and `height`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.parent.len() != g.n() {
            return Err(format!(
                "forest has {} vertices, graph has {}",
                self.parent.len(),
                g.n()
            ));
        }
        let depth = self.depths().ok_or("parent map is not a forest")?;
        let height = depth.iter().map(|d| d + 1).max().unwrap_or(0);
        if height != self.height {
            return Err(format!("claimed height {} but forest height is {height}", self.height));
        }
        for (u, v) in g.edges() {
            if !self.is_ancestor(u, v) && !self.is_ancestor(v, u) {
                return Err(format!("edge ({u},{v}) joins incomparable vertices"));
            }
        }
        Ok(())
    }
}

/// `td(P_k) = ⌈log₂(k+1)⌉`.
pub fn tree_depth_of_path(k: usize) -> usize {
    (usize::BITS - k.leading_zeros()) as usize
}

/// Exact tree-depth with an optimal elimination forest.
pub fn tree_depth(g: &Graph, caps: &Caps) -> Result<InvariantResult> {
    let adj = bits::adjacency(g, "tree_depth")?;
    let all = bits::full(g.n());
    let cap = caps.tree_depth_cap();
    for comp in bits::components(&adj, all) {
        Error::check_cap("tree_depth component", cap, comp.count_ones() as usize)?;
    }
    let mut solver = TdSolver::new(&adj);
    let value = solver.of_set(all);
    let forest = solver.forest(all);
    debug_assert_eq!(forest.height, value);
    Ok(InvariantResult {
        value,
        certificate: Certificate::Forest(forest),
        lower_bound: LowerBound::TreeDepth { value },
    })
}

/// Memoised exact tree-depth over vertex subsets of one fixed graph.
pub(crate) struct TdSolver<'a> {
    adj: &'a [Mask],
    memo: HashMap<Mask, (u8, u8)>,
}

impl<'a> TdSolver<'a> {
    pub(crate) fn new(adj: &'a [Mask]) -> Self {
        TdSolver {
            adj,
            memo: HashMap::new(),
        }
    }

    /// Tree-depth of the subgraph induced by `set`.
    pub(crate) fn of_set(&mut self, set: Mask) -> usize {
        bits::components(self.adj, set)
            .into_iter()
            .map(|c| self.connected(c))
            .max()
            .unwrap_or(0)
    }

    /// Whether `td(G[set]) ≤ bound`.
    pub(crate) fn at_most(&mut self, set: Mask, bound: usize) -> bool {
        if (set.count_ones() as usize) <= bound {
            return true;
        }
        bits::components(self.adj, set)
            .into_iter()
            .all(|c| c.count_ones() as usize <= bound || self.connected(c) <= bound)
    }

    fn connected(&mut self, s: Mask) -> usize {
        let size = s.count_ones() as usize;
        if size <= 2 {
            return size;
        }
        if let Some(&(td, _)) = self.memo.get(&s) {
            return td as usize;
        }
        let (td, root) = self.solve(s, size);
        self.memo.insert(s, (td as u8, root as u8));
        td
    }

    fn solve(&mut self, s: Mask, size: usize) -> (usize, usize) {
        let degree = |v: usize| (self.adj[v] & s).count_ones() as usize;
        let mut order: Vec<usize> = bits::iter(s).collect();
        if order.iter().all(|&v| degree(v) == size - 1) {
            return (size, order[0]);
        }
        let lower = 1 + degeneracy_of(self.adj, s);
        order.sort_by_key(|&v| std::cmp::Reverse(degree(v)));
        let mut best = size;
        let mut best_root = order[0];
        for &v in &order {
            let mut comps = bits::components(self.adj, s & !(1 << v));
            comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
            let mut worst = 0;
            for c in comps {
                if c.count_ones() as usize <= worst {
                    continue;
                }
                worst = worst.max(self.connected(c));
                if 1 + worst >= best {
                    break;
                }
            }
            if 1 + worst < best {
                best = 1 + worst;
                best_root = v;
                if best <= lower {
                    break;
                }
            }
        }
        (best, best_root)
    }

    /// Optimal elimination forest of the subgraph induced by `set`
    /// (vertices outside `set` are left as isolated roots).
    pub(crate) fn forest(&mut self, set: Mask) -> EliminationForest {
        let mut parent = vec![None; self.adj.len()];
        let height = self.build(set, None, &mut parent);
        EliminationForest { parent, height }
    }

    fn build(&mut self, set: Mask, above: Option<usize>, parent: &mut [Option<usize>]) -> usize {
        let mut height = 0;
        for c in bits::components(self.adj, set) {
            let size = c.count_ones() as usize;
            let root = if size <= 2 {
                c.trailing_zeros() as usize
            } else {
                self.connected(c);
                self.memo[&c].1 as usize
            };
            parent[root] = above;
            let below = self.build(c & !(1 << root), Some(root), parent);
            height = height.max(1 + below);
        }
        height
    }
}

fn degeneracy_of(adj: &[Mask], s: Mask) -> usize {
    let mut rest = s;
    let mut best = 0;
    while rest != 0 {
        let v = bits::iter(rest)
            .min_by_key(|&v| (adj[v] & rest).count_ones())
            .expect("non-empty");
        best = best.max((adj[v] & rest).count_ones() as usize);
        rest &= !(1 << v);
    }
    best
}

/// A simple path with at least `target` vertices if the bounded DFS finds
/// one, otherwise the longest path it saw.
pub fn long_path(g: &Graph, target: usize, budget: u64) -> Vec<usize> {
    let mut best = Vec::new();
    let mut path = Vec::new();
    let mut left = budget;
    for s in 0..g.n() {
        path.push(s);
        extend(g, &mut path, &mut vec![false; g.n()], target, &mut left, &mut best);
        path.clear();
        if best.len() >= target || left == 0 {
            break;
        }
    }
    best
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    target: usize,
    left: &mut u64,
    best: &mut Vec<usize>,
) {
    if path.len() > best.len() {
        *best = path.clone();
    }
    if best.len() >= target || *left == 0 {
        return;
    }
    *left -= 1;
    let last = *path.last().expect("non-empty");
    on_path[last] = true;
    for &w in g.neighbors(last) {
        if !on_path[w] {
            path.push(w);
            extend(g, path, on_path, target, left, best);
            path.pop();
            if best.len() >= target || *left == 0 {
                break;
            }
        }
    }
    on_path[last] = false;
}
