//! S5: maximum degree of `K_{1,t}`-free graphs against a binomial bound.

use chibound_core::graph::{generate, split_seed, Family};
use chibound_core::invariants::{clique_number, max_degree, Caps};
use chibound_core::{Error, Graph};
use serde_json::{json, Value};

use super::{check_all, g6, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

const DENSITIES: [f64; 5] = [0.5, 0.6, 0.7, 0.8, 0.9];
const MAX_ATTEMPTS: u64 = 2_000_000;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Largest independent set inside a neighbourhood, found as a clique of
/// the complement.
fn max_independent_neighbourhood(g: &Graph, caps: &Caps) -> Result<(usize, usize)> {
    let mut best = (0, 0);
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        let k = nbrs.len();
        let complement: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(nbrs[i], nbrs[j]))
            .collect();
        let alpha = clique_number(&Graph::from_edges(k, &complement)?, caps)?.value;
        if alpha > best.0 {
            best = (alpha, v);
        }
    }
    Ok(best)
}

pub(super) fn k1t_degree(config: &SuiteConfig) -> Result<(Value, Vec<Instance>, Value)> {
    let ts = config.list("t", &[3, 4])?;
    let count = config.value("count", 200)?;
    let (lo, hi) = (config.value("min_n", 6)?, config.value("max_n", 14)?);
    config.check_order(hi)?;
    let caps = config.caps();
    let mut samples: Vec<(usize, u64, Graph)> = Vec::new();
    let mut rejected = Vec::new();
    for &t in &ts {
        let stream = split_seed(split_seed(config.seed, 5), t as u64);
        let mut attempt = 0u64;
        let mut accepted = 0;
        while accepted < count {
            if attempt == MAX_ATTEMPTS {
                return Err(Error::Budget {
                    what: "K_{1,t}-free rejection sampling",
                    limit: MAX_ATTEMPTS,
                }
                .into());
            }
            let n = lo + (attempt as usize) % (hi - lo + 1);
            let p = DENSITIES[(attempt as usize / (hi - lo + 1)) % DENSITIES.len()];
            let seed = split_seed(stream, attempt);
            attempt += 1;
            let g = generate(&Family::RandomGnp { n, p }, seed)?;
            if max_independent_neighbourhood(&g, &caps)?.0 < t {
                samples.push((t, seed, g));
                accepted += 1;
            }
        }
        rejected.push(json!({ "t": t, "attempts": attempt, "accepted": accepted }));
    }
    let instances = check_all(&samples, |(t, seed, g)| {
        let t = *t;
        let omega = clique_number(g, &caps)?;
        let delta = max_degree(g);
        let (alpha, centre) = max_independent_neighbourhood(g, &caps)?;
        let bound = binomial((omega.value + t - 2) as u64, (t - 1) as u64);
        Ok(Instance {
            graph6: g6(g),
            params: json!({ "t": t, "seed": seed, "n": g.n() }),
            measured: json!({
                "max_degree": delta,
                "omega": omega.value,
                "claw_free": alpha < t,
            }),
            expected: json!({ "max_degree_below": bound }),
            pass: (delta as u64) < bound && alpha < t,
            witness: Some(json!({ "largest_independent_neighbourhood": alpha, "at_vertex": centre })),
        })
    })?;
    Ok((
        json!({ "t": ts, "count": count, "n": [lo, hi], "densities": DENSITIES }),
        instances,
        json!({ "sampling": rejected }),
    ))
}
