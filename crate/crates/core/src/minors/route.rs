//! Backtracking router for internally disjoint short paths between branch
//! vertices. Pairs are handled in the given order and each pair tries its
//! paths shortest first, neighbours in ascending order.

use crate::bits::{self, Mask};
use crate::error::Result;
use crate::invariants::Budget;

/// Pairwise BFS distances; `usize::MAX` when disconnected.
pub(crate) fn all_distances(adj: &[Mask]) -> Vec<Vec<usize>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut seen: Mask = 1 << s;
            let mut frontier: Mask = 1 << s;
            let mut d = 0;
            while frontier != 0 {
                d += 1;
                let next = bits::iter(frontier).fold(0, |m, v| m | adj[v]) & !seen;
                for v in bits::iter(next) {
                    dist[v] = d;
                }
                seen |= next;
                frontier = next;
            }
            dist
        })
        .collect()
}

/// What the router is asked to achieve.
pub(crate) trait Goal {
    /// Whether every pair must be routed (otherwise each may be skipped).
    fn all_required(&self) -> bool;
    /// Called before deciding pair `t`: `routed` lists decided pairs that
    /// got paths, `open` the undecided pairs that remain routable.
    fn viable(&mut self, routed: &[usize], open: &[usize]) -> Result<bool>;
    /// Called once every pair is decided.
    fn accept(&mut self, routed: &[usize]) -> Result<bool>;
}

pub(crate) struct Router<'a> {
    pub adj: &'a [Mask],
    pub dist: &'a [Vec<usize>],
    /// Maximum internal vertices per path.
    pub r: usize,
    pub pairs: Vec<(usize, usize)>,
    pub paths: Vec<Option<Vec<usize>>>,
    pub budget: &'a mut Budget,
}

impl Router<'_> {
    /// Runs the search with `blocked` (normally the branch vertices) unusable
    /// as interior vertices. On success `self.paths` holds the witness.
    pub(crate) fn run(&mut self, blocked: Mask, goal: &mut dyn Goal) -> Result<bool> {
        self.paths = vec![None; self.pairs.len()];
        let mut routed = Vec::new();
        self.route(0, blocked, &mut routed, goal)
    }

    fn route(&mut self, t: usize, used: Mask, routed: &mut Vec<usize>, goal: &mut dyn Goal) -> Result<bool> {
        self.budget.tick()?;
        if t == self.pairs.len() {
            return goal.accept(routed);
        }
        let open: Vec<usize> = (t..self.pairs.len()).filter(|&i| self.routable(i, used)).collect();
        if goal.all_required() && open.len() != self.pairs.len() - t {
            return Ok(false);
        }
        if !goal.viable(routed, &open)? {
            return Ok(false);
        }
        if open.first() == Some(&t) {
            let (a, b) = self.pairs[t];
            let lo = self.dist[a][b];
            for len in lo..=self.r + 1 {
                let mut path = vec![a];
                if self.extend(t, b, len, used, &mut path, routed, goal)? {
                    return Ok(true);
                }
            }
        }
        if !goal.all_required() {
            self.paths[t] = None;
            return self.route(t + 1, used, routed, goal);
        }
        Ok(false)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        t: usize,
        b: usize,
        len: usize,
        used: Mask,
        path: &mut Vec<usize>,
        routed: &mut Vec<usize>,
        goal: &mut dyn Goal,
    ) -> Result<bool> {
        self.budget.tick()?;
        let x = *path.last().expect("path starts at a branch vertex");
        let left = len + 1 - path.len();
        if left == 1 {
            if self.adj[x] >> b & 1 == 0 {
                return Ok(false);
            }
            path.push(b);
            self.paths[t] = Some(path.clone());
            path.pop();
            routed.push(t);
            let interior = bits_of(&path[1..]);
            if self.route(t + 1, used | interior, routed, goal)? {
                return Ok(true);
            }
            routed.pop();
            self.paths[t] = None;
            return Ok(false);
        }
        let on_path = bits_of(path);
        for y in bits::iter(self.adj[x] & !used & !on_path) {
            if self.dist[y][b] > left - 1 {
                continue;
            }
            path.push(y);
            let done = self.extend(t, b, len, used, path, routed, goal)?;
            path.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether pair `i` still has a path with at most `r` interior vertices
    /// avoiding `used`.
    fn routable(&self, i: usize, used: Mask) -> bool {
        let (a, b) = self.pairs[i];
        if self.adj[a] >> b & 1 == 1 {
            return true;
        }
        let mut seen: Mask = 1 << a;
        let mut frontier: Mask = 1 << a;
        for _ in 0..self.r {
            let next = bits::iter(frontier).fold(0, |m, v| m | self.adj[v]) & !used & !seen & !(1 << b);
            if next == 0 {
                return false;
            }
            if bits::iter(next).any(|v| self.adj[v] >> b & 1 == 1) {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        false
    }
}

fn bits_of(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}
