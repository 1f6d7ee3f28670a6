//! Seeded graph families.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! a 64-bit value through `SeedableRng::seed_from_u64`. Independent
//! sub-streams are derived with [`split_seed`], so a run is reproducible
//! from its top-level seed alone.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{shortest_cycle, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Complete {
        n: usize,
    },
    CompleteBipartite {
        s: usize,
        t: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// `K_{1,t}`, centre at vertex 0.
    Star {
        t: usize,
    },
    /// `iterations` applications of the Mycielski construction to `base`.
    Mycielski {
        base: GraphSpec,
        iterations: usize,
    },
    RandomGnp {
        n: usize,
        p: f64,
    },
    /// Random near-`degree`-regular graph with every cycle shorter than `girth` destroyed.
    HighGirth {
        n: usize,
        degree: usize,
        girth: usize,
    },
}

/// A graph embedded in a family description, stored as graph6.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GraphSpec(pub String);

impl GraphSpec {
    pub fn of(g: &Graph) -> Self {
        GraphSpec(super::serialize_graph(g, super::Format::Graph6).expect("small graph encodes"))
    }
}

/// Seed plus the family it parameterises; identical values reproduce identical graphs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSeed {
    pub seed: u64,
    #[serde(flatten)]
    pub family: Family,
}

impl GeneratorSeed {
    pub fn generate(&self) -> Result<Graph> {
        generate(&self.family, self.seed)
    }
}

/// Derives the seed of sub-stream `index` from `seed`.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng.next_u64()
}

pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Complete { n } => Ok(Graph::complete(*n)),
        Family::CompleteBipartite { s, t } => Ok(Graph::complete_bipartite(*s, *t)),
        Family::Cycle { n } => {
            if *n < 3 {
                return Err(Error::Param(format!("cycle needs at least 3 vertices, got {n}")));
            }
            Ok(Graph::cycle(*n))
        }
        Family::Path { n } => Ok(Graph::path(*n)),
        Family::Star { t } => Ok(Graph::complete_bipartite(1, *t)),
        Family::Mycielski { base, iterations } => {
            let mut g = super::parse_graph(&base.0)?;
            for _ in 0..*iterations {
                g = mycielskian(&g);
            }
            Ok(g)
        }
        Family::RandomGnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::Param(format!("edge probability {p} outside [0, 1]")));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.random::<f64>() < *p {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges_dedup(*n, edges))
        }
        Family::HighGirth { n, degree, girth } => high_girth(*n, *degree, *girth, &mut rng),
    }
}

/// Mycielski construction: vertices `0..n` original, `n..2n` shadows, `2n` apex.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((n + u, v));
        edges.push((u, n + v));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    Graph::from_edges_dedup(2 * n + 1, edges)
}

fn high_girth(n: usize, degree: usize, girth: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if girth < 3 {
        return Err(Error::Param(format!("girth bound must be at least 3, got {girth}")));
    }
    if degree == 0 || degree >= n {
        return Err(Error::Param(format!("degree {degree} infeasible on {n} vertices")));
    }
    if (n * degree) % 2 == 1 {
        return Err(Error::Param(format!("n·d = {} is odd", n * degree)));
    }
    // Random stub pairing; loops and repeated pairs are dropped, so the
    // result is only near-regular.
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    stubs.shuffle(rng);
    let edges = stubs
        .chunks_exact(2)
        .filter(|c| c[0] != c[1])
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])));
    let mut g = Graph::from_edges_dedup(n, edges.collect::<Vec<_>>());
    // Erasure: delete a random edge of a shortest cycle until none is short.
    while let Some(cycle) = shortest_cycle(&g) {
        if cycle.len() >= girth {
            break;
        }
        let i = rng.random_range(0..cycle.len());
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        g = g.remove_edge(u, v);
    }
    debug_assert!(super::girth(&g).is_none_or(|len| len >= girth));
    Ok(g)
}
