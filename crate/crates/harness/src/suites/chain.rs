//! S11: the colouring chain plus certificate, embedding and walk-power
//! property checks on every instance.

use chibound_core::graph::split_seed;
use chibound_core::hom::{walk_power, WalkPowerError};
use chibound_core::invariants::{
    biclique_number, chi_p, chromatic_number, clique_number, k_coloring, star_chromatic_number, tree_depth,
    validate_coloring, Caps, Certificate, InvariantResult, LowerBound,
};
use chibound_core::minors::{is_induced_exact_subdivision, omega_tm, MinorCaps};
use chibound_core::{Digraph, Graph};
use serde_json::{json, Value};

use super::{check_all, g6, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

const WALK_LENGTHS: [usize; 4] = [1, 2, 3, 4];

pub(super) fn chi_chain(config: &SuiteConfig) -> Result<(Value, Vec<Instance>, Value)> {
    let max_n = config.value("max_n", 7)?;
    let random = config.value("random", 500)?;
    let (lo, hi) = (config.value("random_min_n", 2)?, config.value("random_max_n", 10)?);
    let mut graphs = config.corpus(max_n)?;
    graphs.extend(config.random_graphs(11, random, (lo, hi))?);
    let indexed: Vec<(usize, Graph)> = graphs.into_iter().enumerate().collect();
    let caps = config.caps();
    let instances = check_all(&indexed, |(i, g)| check(*i, g, config.seed, &caps))?;
    Ok((
        json!({ "max_n": max_n, "random": random, "random_n": [lo, hi], "walk_lengths": WALK_LENGTHS }),
        instances,
        Value::Null,
    ))
}

fn coloring_ok(g: &Graph, r: &InvariantResult) -> Result<bool> {
    let c = r.coloring().expect("colouring certificate");
    Ok(c.num_colors == r.value && validate_coloring(g, c)?.is_pass())
}

fn chromatic_lower_ok(g: &Graph, r: &InvariantResult, caps: &Caps) -> Result<bool> {
    Ok(match &r.lower_bound {
        LowerBound::Trivial => r.value <= 1,
        LowerBound::Clique { vertices } => vertices.len() == r.value && g.is_clique(vertices),
        LowerBound::CriticalSubgraph { vertices } => {
            k_coloring(&g.induced_subgraph(vertices), r.value - 1, caps)?.is_none()
        }
        _ => false,
    })
}

/// An orientation with both acyclic and cyclic outcomes across instances.
fn orient(g: &Graph, salt: u64) -> Digraph {
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            if split_seed(salt, (u * g.n() + v) as u64).is_multiple_of(3) {
                (v, u)
            } else {
                (u, v)
            }
        })
        .collect();
    Digraph::from_arcs(g.n(), &arcs).expect("one arc per edge")
}

/// Walk counts by repeated multiplication of the 0/1 adjacency matrix.
fn walk_matrix(d: &Digraph, len: usize) -> Vec<Vec<u64>> {
    let n = d.n();
    let mut p: Vec<Vec<u64>> = (0..n).map(|u| (0..n).map(|v| (u == v) as u64).collect()).collect();
    for _ in 0..len {
        p = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        (0..n)
                            .filter(|&w| d.has_arc(w, v))
                            .map(|w| p[u][w])
                            .sum::<u64>()
                            .min(1 << 32)
                    })
                    .collect()
            })
            .collect();
    }
    p
}

fn walk_power_agrees(d: &Digraph, len: usize) -> bool {
    let m = walk_matrix(d, len);
    let closed = (0..d.n()).find(|&u| m[u][u] > 0);
    match walk_power(d, len) {
        Ok(p) => closed.is_none() && (0..d.n()).all(|u| (0..d.n()).all(|v| p.has_arc(u, v) == (u != v && m[u][v] > 0))),
        Err(WalkPowerError::Loop { vertex, walk }) => {
            Some(vertex) == closed
                && walk.len() == len + 1
                && walk.first() == Some(&vertex)
                && walk.last() == Some(&vertex)
                && walk.windows(2).all(|w| d.has_arc(w[0], w[1]))
        }
        Err(_) => false,
    }
}

fn check(index: usize, g: &Graph, seed: u64, caps: &Caps) -> Result<Instance> {
    let chi = chromatic_number(g, caps)?;
    let chi_s = star_chromatic_number(g, caps)?;
    let chi_3 = chi_p(g, 3, caps)?;
    let td = tree_depth(g, caps)?;
    let omega = clique_number(g, caps)?;
    let bomega = biclique_number(g, caps)?;

    let forest_ok = match &td.certificate {
        Certificate::Forest(f) => f.height == td.value && f.validate(g).is_ok(),
        _ => false,
    };
    let clique_ok = match &omega.certificate {
        Certificate::Clique { vertices } => vertices.len() == omega.value && g.is_clique(vertices),
        _ => false,
    };
    let biclique_ok = match &bomega.certificate {
        Certificate::Biclique { left, right } => {
            left.len() == bomega.value
                && right.len() == bomega.value
                && left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v)))
        }
        _ => false,
    };
    let certificates = json!({
        "chromatic": coloring_ok(g, &chi)? && chromatic_lower_ok(g, &chi, caps)?,
        "star": coloring_ok(g, &chi_s)?,
        "chi_3": coloring_ok(g, &chi_3)?,
        "forest": forest_ok,
        "clique": clique_ok,
        "biclique": biclique_ok,
    });

    let defaults = MinorCaps::default();
    let minor_caps = MinorCaps {
        clique: defaults.clique.max(g.n()),
        ..defaults
    };
    let tm = omega_tm(g, 1, &minor_caps)?;
    let tm_ok = tm
        .witness
        .as_ref()
        .is_some_and(|w| w.pattern.n() == tm.value && w.validate_tm(g, 1).is_ok());
    let itm_ok = is_induced_exact_subdivision(&Graph::complete(3), 1, g, &minor_caps)?
        .is_none_or(|e| e.validate_itm(g, 1).is_ok());
    let d = orient(g, split_seed(seed, index as u64));
    let walks_ok = WALK_LENGTHS.iter().all(|&len| walk_power_agrees(&d, len));

    let chain = chi.value <= chi_s.value && chi_s.value <= chi_3.value && chi_3.value <= td.value;
    let biclique_bound = bomega.value >= omega.value / 2;
    let all_certificates = certificates
        .as_object()
        .expect("object")
        .values()
        .all(|v| v == &json!(true));
    let pass = chain && biclique_bound && all_certificates && tm_ok && itm_ok && walks_ok;
    Ok(Instance {
        graph6: g6(g),
        params: json!({ "index": index, "n": g.n() }),
        measured: json!({
            "chi_1": chi.value,
            "chi_2": chi_s.value,
            "chi_3": chi_3.value,
            "td": td.value,
            "omega": omega.value,
            "bomega": bomega.value,
            "certificates": certificates,
            "embeddings_valid": tm_ok && itm_ok,
            "walk_power_agrees": walks_ok,
        }),
        expected: json!({
            "chain": "chi_1 <= chi_2 <= chi_3 <= td",
            "bomega_at_least": omega.value / 2,
            "certificates": "all valid",
        }),
        pass,
        witness: (!pass).then(|| json!({ "orientation": super::d6(&d) })),
    })
}
