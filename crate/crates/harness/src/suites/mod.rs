//! Registered claim suites. Each suite builds its instance list, checks the
//! instances in parallel and assembles the report in instance order.

mod chain;
mod degree;
mod duality;
mod holes;
mod minor;
mod product;
mod subdivision;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use chibound_core::graph::{generate, serialize_digraph, serialize_graph, split_seed, Corpus, Family, Format};
use chibound_core::invariants::{chi_p_bounds, chi_p_with_hint, Caps, Coloring, LowerBound};
use chibound_core::{Digraph, Error, Graph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{HarnessError, Result};
use crate::report::{Instance, Report, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
    S10,
    S11,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::S1,
        Claim::S2,
        Claim::S3,
        Claim::S4,
        Claim::S5,
        Claim::S6,
        Claim::S7,
        Claim::S8,
        Claim::S9,
        Claim::S10,
        Claim::S11,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::S1 => "S1",
            Claim::S2 => "S2",
            Claim::S3 => "S3",
            Claim::S4 => "S4",
            Claim::S5 => "S5",
            Claim::S6 => "S6",
            Claim::S7 => "S7",
            Claim::S8 => "S8",
            Claim::S9 => "S9",
            Claim::S10 => "S10",
            Claim::S11 => "S11",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Claim::S1 => "chip-subdivided-clique",
            Claim::S2 => "wood",
            Claim::S3 => "chip-sub-sandwich",
            Claim::S4 => "chiptm-lower",
            Claim::S5 => "k1t-degree",
            Claim::S6 => "bipartite-weak",
            Claim::S7 => "hole-density",
            Claim::S8 => "product-coloring",
            Claim::S9 => "gallai-roy-dual",
            Claim::S10 => "lemma9-growth",
            Claim::S11 => "chi-chain",
        }
    }

    /// The checked statement, in the notation used throughout the reports.
    pub fn anchor(self) -> &'static str {
        match self {
            Claim::S1 => "chi_p(K_n^(p)) = p+1, omega(TM_p(K_n^(p))) = n, omega(TM_{p-1}(K_n^(p))) = 2",
            Claim::S2 => "chi(G) <= chi_s(G^(1))^2 and chi_s(G^(1)) <= max(chi(G), 3)",
            Claim::S3 => "chi(G) <= chi_{p+1}(G^(p))^(p+1) and chi_{p+1}(G^(p)) <= max(chi(G), p+2)",
            Claim::S4 => "chi_p(G)^p >= chi(TM_{p-1}(G))",
            Claim::S5 => "K_{1,t}-free G: Delta(G) < C(omega(G)+t-2, t-1)",
            Claim::S6 => "chi_p(K_{s,t}) <= s+1 and chi_p(K_{s,t}) <= omega(TM_1(K_{s,t}))^2",
            Claim::S7 => "h_g(G) = (1/g) (omega/2)^(g-1) |G| for copies of C_g[K_{omega/2}]",
            Claim::S8 => "product colouring zeta is a chi_p colouring with at most chi * a^(chi-1) colours",
            Claim::S9 => "P_{k+1} -/-> G iff G -> T_k",
            Claim::S10 => "chi_s(G^(1))^2 >= chi(G) on high-girth bases",
            Claim::S11 => "chi_1 <= chi_2 <= chi_3 <= td and bomega >= floor(omega/2)",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.name())
    }
}

impl FromStr for Claim {
    type Err = HarnessError;

    /// Accepts the short id (`S4`, case-insensitive) or the long name.
    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s) || c.name() == s)
            .ok_or_else(|| HarnessError::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest graph any suite may process; larger instances are a cap error.
    pub cap_n: Option<usize>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub corpus_cache: Option<PathBuf>,
    /// Parameter overrides, `key → comma-separated values`.
    pub overrides: BTreeMap<String, String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 20_240_601,
            cap_n: None,
            jobs: None,
            corpus_cache: None,
            overrides: BTreeMap::new(),
        }
    }
}

impl SuiteConfig {
    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.overrides.insert(key.to_string(), value.to_string());
        self
    }

    pub(crate) fn list(&self, key: &str, default: &[usize]) -> Result<Vec<usize>> {
        match self.overrides.get(key) {
            None => Ok(default.to_vec()),
            Some(text) => text
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| HarnessError::Usage(format!("{key}: {s:?} is not a non-negative integer")))
                })
                .collect(),
        }
    }

    pub(crate) fn value(&self, key: &str, default: usize) -> Result<usize> {
        match self.list(key, &[default])?.as_slice() {
            [v] => Ok(*v),
            _ => Err(HarnessError::Usage(format!("{key} takes a single value"))),
        }
    }

    pub(crate) fn check_order(&self, n: usize) -> Result<()> {
        if let Some(cap) = self.cap_n {
            if n > cap {
                return Err(Error::Cap {
                    what: "instance order (--cap-n)",
                    limit: cap,
                    actual: n,
                }
                .into());
            }
        }
        Ok(())
    }

    /// All connected graphs on `1..=max_n` vertices.
    pub(crate) fn corpus(&self, max_n: usize) -> Result<Vec<Graph>> {
        self.check_order(max_n)?;
        if let Some(dir) = &self.corpus_cache {
            std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir.display().to_string(), e))?;
        }
        Ok(Corpus::connected_up_to(max_n, self.corpus_cache.as_deref())?.graphs)
    }

    /// `count` seeded `G(n, p)` graphs cycling through `n ∈ n_range` and a
    /// fixed list of densities; graph `i` uses sub-stream `i` of `stream`.
    pub(crate) fn random_graphs(&self, stream: u64, count: usize, n_range: (usize, usize)) -> Result<Vec<Graph>> {
        const DENSITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];
        let (lo, hi) = n_range;
        self.check_order(hi)?;
        let base = split_seed(self.seed, stream);
        (0..count)
            .map(|i| {
                let n = lo + i % (hi - lo + 1);
                let p = DENSITIES[(i / (hi - lo + 1)) % DENSITIES.len()];
                Ok(generate(&Family::RandomGnp { n, p }, split_seed(base, i as u64))?)
            })
            .collect()
    }

    pub(crate) fn caps(&self) -> Caps {
        Caps::default()
    }
}

/// Runs one suite and times it.
pub fn run_suite(claim: Claim, config: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let run = || -> Result<(Value, Vec<Instance>, Value)> {
        match claim {
            Claim::S1 => subdivision::subdivided_clique(config),
            Claim::S2 => subdivision::wood(config),
            Claim::S3 => subdivision::sandwich(config),
            Claim::S4 => minor::chi_tm_lower(config),
            Claim::S5 => degree::k1t_degree(config),
            Claim::S6 => minor::bipartite(config),
            Claim::S7 => holes::hole_density(config),
            Claim::S8 => product::product_coloring(config),
            Claim::S9 => duality::gallai_roy(config),
            Claim::S10 => subdivision::growth(config),
            Claim::S11 => chain::chi_chain(config),
        }
    };
    let (mut params, instances, observations) = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HarnessError::Usage(format!("--jobs {jobs}: {e}")))?
            .install(run)?,
        None => run()?,
    };
    if let Value::Object(map) = &mut params {
        map.insert("name".into(), json!(claim.name()));
    }
    Ok(Report {
        claim: claim.id().to_string(),
        anchor: claim.anchor().to_string(),
        config: params,
        summary: Summary::of(&instances, observations),
        instances,
        seed: config.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Applies `check` to every item in parallel, keeping item order.
pub(crate) fn check_all<T: Sync, R: Send>(
    items: &[T],
    check: impl Fn(&T) -> Result<R> + Sync + Send,
) -> Result<Vec<R>> {
    items.par_iter().map(check).collect()
}

pub(crate) fn g6(g: &Graph) -> String {
    serialize_graph(g, Format::Graph6).expect("suite graphs are small")
}

pub(crate) fn d6(d: &Digraph) -> String {
    serialize_digraph(d, Format::Graph6).expect("suite digraphs are small")
}

pub(crate) fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("suite values serialise")
}

/// Certified bounds on `χ_p`, exact whenever the graph is within the
/// search cap or the bounds already meet.
pub(crate) struct ChiPCertified {
    pub lower: usize,
    pub upper: usize,
    pub lower_bound: LowerBound,
    pub coloring: Coloring,
}

impl ChiPCertified {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn measured(&self) -> Value {
        json!({ "lower": self.lower, "upper": self.upper, "exact": self.exact() })
    }

    pub fn witness(&self) -> Value {
        json!({ "coloring": to_value(&self.coloring), "lower_bound": to_value(&self.lower_bound) })
    }
}

pub(crate) fn chi_p_certified(g: &Graph, p: usize, hint: Option<&Coloring>, caps: &Caps) -> Result<ChiPCertified> {
    let b = chi_p_bounds(g, p, hint, caps)?;
    if b.is_exact() || g.n() > caps.chi_p_cap(p) {
        return Ok(ChiPCertified {
            lower: b.lower,
            upper: b.upper,
            lower_bound: b.lower_bound,
            coloring: b.coloring,
        });
    }
    let r = chi_p_with_hint(g, p, hint.or(Some(&b.coloring)), caps)?;
    Ok(ChiPCertified {
        lower: r.value,
        upper: r.value,
        coloring: r.coloring().expect("chi_p certificate is a colouring").clone(),
        lower_bound: r.lower_bound,
    })
}
