//! Suites on subdivided graphs: S1, S2, S3 and S10.

use std::collections::BTreeMap;

use chibound_core::graph::{generate, mycielskian, split_seed, subdivide_exact, Family};
use chibound_core::invariants::{
    chromatic_number, subdivision_chi_p_coloring, subdivision_position_coloring, validate_coloring, ColoringKind,
};
use chibound_core::minors::{omega_tm, MinorCaps};
use chibound_core::Graph;
use serde_json::{json, Value};

use super::{check_all, chi_p_certified, g6, to_value, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

type SuiteOutput = (Value, Vec<Instance>, Value);

pub(super) fn subdivided_clique(config: &SuiteConfig) -> Result<SuiteOutput> {
    let ps = config.list("p", &[1, 2, 3])?;
    let ns = config.list("n", &[3, 4, 5])?;
    let grid: Vec<(usize, usize)> = ps.iter().flat_map(|&p| ns.iter().map(move |&n| (p, n))).collect();
    let caps = config.caps();
    let minor_caps = MinorCaps::default();
    let instances = check_all(&grid, |&(p, n)| {
        if p == 0 {
            return Err(chibound_core::Error::Param("p must be at least 1".into()).into());
        }
        let g = subdivide_exact(&Graph::complete(n), p);
        config.check_order(g.n())?;
        let hint = subdivision_position_coloring(&Graph::complete(n), p);
        let chi_p = chi_p_certified(&g, p, Some(&hint), &caps)?;
        let coloring_ok = validate_coloring(&g, &chi_p.coloring)?.is_pass();
        let at_p = omega_tm(&g, p, &minor_caps)?;
        let below = omega_tm(&g, p - 1, &minor_caps)?;
        let embeddings_ok = [(&at_p, p), (&below, p - 1)]
            .iter()
            .all(|(o, r)| o.witness.as_ref().is_some_and(|w| w.validate_tm(&g, *r).is_ok()));
        let pass = chi_p.exact() == Some(p + 1) && at_p.value == n && below.value == 2 && coloring_ok && embeddings_ok;
        Ok(Instance {
            graph6: g6(&g),
            params: json!({ "p": p, "n": n }),
            measured: json!({
                "chi_p": chi_p.measured(),
                "omega_tm_p": at_p.value,
                "omega_tm_p_minus_1": below.value,
                "certificates_valid": coloring_ok && embeddings_ok,
            }),
            expected: json!({ "chi_p": p + 1, "omega_tm_p": n, "omega_tm_p_minus_1": 2 }),
            pass,
            witness: Some(json!({
                "chi_p": chi_p.witness(),
                "tm_p": to_value(&at_p.witness),
                "tm_p_minus_1": to_value(&below.witness),
            })),
        })
    })?;
    Ok((json!({ "p": ps, "n": ns }), instances, Value::Null))
}

/// χ of `g`, its proper colouring, and certified bounds on `χ_{q}(g^(p))`
/// seeded with the constructive colouring.
struct Sandwich {
    chi: usize,
    sub: Graph,
    construct_valid: bool,
    construct_colors: usize,
    bounds: super::ChiPCertified,
}

fn sandwich_of(g: &Graph, p: usize, config: &SuiteConfig) -> Result<Sandwich> {
    let caps = config.caps();
    let chi = chromatic_number(g, &caps)?;
    let base = chi.coloring().expect("chromatic certificate is a colouring");
    let sub = subdivide_exact(g, p);
    config.check_order(sub.n())?;
    let construct = subdivision_chi_p_coloring(g, p, base);
    debug_assert_eq!(construct.kind, ColoringKind::ChiP { p: p + 1 });
    let construct_valid = validate_coloring(&sub, &construct)?.is_pass();
    let bounds = chi_p_certified(&sub, p + 1, Some(&construct), &caps)?;
    Ok(Sandwich {
        chi: chi.value,
        sub,
        construct_valid,
        construct_colors: construct.num_colors,
        bounds,
    })
}

pub(super) fn wood(config: &SuiteConfig) -> Result<SuiteOutput> {
    let max_n = config.value("max_n", 7)?;
    let random = config.value("random", 64)?;
    let mut graphs = config.corpus(max_n)?;
    graphs.extend(config.random_graphs(2, random, (5, 9))?);
    let instances = check_all(&graphs, |g| {
        let s = sandwich_of(g, 1, config)?;
        let cap = s.chi.max(3);
        let pass = s.bounds.lower * s.bounds.lower >= s.chi && s.bounds.upper <= cap && s.construct_valid;
        Ok(Instance {
            graph6: g6(g),
            params: json!({ "n": g.n() }),
            measured: json!({ "chi": s.chi, "chi_s_subdivision": s.bounds.measured() }),
            expected: json!({ "chi_s_squared_at_least": s.chi, "chi_s_at_most": cap }),
            pass,
            witness: Some(json!({ "subdivision": g6(&s.sub), "chi_s": s.bounds.witness() })),
        })
    })?;
    Ok((
        json!({ "max_n": max_n, "random": random, "random_n": [5, 9] }),
        instances,
        Value::Null,
    ))
}

pub(super) fn sandwich(config: &SuiteConfig) -> Result<SuiteOutput> {
    let ps = config.list("p", &[1, 2])?;
    let max_n = config.value("max_n", 5)?;
    let corpus = config.corpus(max_n)?;
    let items: Vec<(usize, &Graph)> = ps.iter().flat_map(|&p| corpus.iter().map(move |g| (p, g))).collect();
    let instances = check_all(&items, |&(p, g)| {
        let s = sandwich_of(g, p, config)?;
        let cap = s.chi.max(p + 2);
        let pass = s.chi <= s.bounds.lower.pow(p as u32 + 1)
            && s.bounds.upper <= cap
            && s.construct_valid
            && s.construct_colors <= cap;
        Ok(Instance {
            graph6: g6(g),
            params: json!({ "p": p, "n": g.n() }),
            measured: json!({
                "chi": s.chi,
                "chi_p_plus_1_subdivision": s.bounds.measured(),
                "construction_colors": s.construct_colors,
                "construction_valid": s.construct_valid,
            }),
            expected: json!({ "power_at_least": s.chi, "at_most": cap }),
            pass,
            witness: Some(json!({ "subdivision": g6(&s.sub), "chi_p_plus_1": s.bounds.witness() })),
        })
    })?;
    Ok((json!({ "p": ps, "max_n": max_n }), instances, Value::Null))
}

pub(super) fn growth(config: &SuiteConfig) -> Result<SuiteOutput> {
    let ns = config.list("n", &[10, 14, 18, 22, 26])?;
    let per_n = config.value("per_n", 3)?;
    let mycielski = config.value("mycielski", 3)?;
    let mut bases: Vec<(Value, Graph)> = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        for j in 0..per_n {
            let family = Family::HighGirth { n, degree: 3, girth: 5 };
            let seed = split_seed(split_seed(config.seed, 10), (i * per_n + j) as u64);
            let g = generate(&family, seed)?;
            bases.push((json!({ "family": to_value(&family), "seed": seed }), g));
        }
    }
    let mut m = Graph::complete(2);
    for it in 1..=mycielski {
        m = mycielskian(&m);
        bases.push((
            json!({ "family": "mycielski", "base": "K2", "iterations": it }),
            m.clone(),
        ));
    }
    let instances = check_all(&bases, |(params, g)| {
        let s = sandwich_of(g, 1, config)?;
        let pass = s.bounds.lower * s.bounds.lower >= s.chi && s.construct_valid;
        Ok(Instance {
            graph6: g6(g),
            params: params.clone(),
            measured: json!({ "chi": s.chi, "chi_s_subdivision": s.bounds.measured() }),
            expected: json!({ "chi_s_squared_at_least": s.chi }),
            pass,
            witness: Some(json!({ "subdivision": g6(&s.sub), "chi_s": s.bounds.witness() })),
        })
    })?;
    Ok((
        json!({ "n": ns, "per_n": per_n, "degree": 3, "girth": 5, "mycielski": mycielski }),
        instances.clone(),
        trend(&instances),
    ))
}

/// Bounds on `χ_s(G^(1))` grouped by `χ(G)`, and whether the group maxima
/// of the upper bound are non-decreasing in `χ`.
fn trend(instances: &[Instance]) -> Value {
    let mut by_chi: BTreeMap<u64, (usize, u64, u64)> = BTreeMap::new();
    for i in instances {
        let chi = i.measured["chi"].as_u64().expect("chi recorded");
        let b = &i.measured["chi_s_subdivision"];
        let (lo, hi) = (b["lower"].as_u64().expect("lower"), b["upper"].as_u64().expect("upper"));
        let e = by_chi.entry(chi).or_insert((0, u64::MAX, 0));
        *e = (e.0 + 1, e.1.min(lo), e.2.max(hi));
    }
    let uppers: Vec<u64> = by_chi.values().map(|e| e.2).collect();
    json!({
        "by_chi": by_chi
            .iter()
            .map(|(chi, (count, lo, hi))| json!({ "chi": chi, "instances": count, "min_lower": lo, "max_upper": hi }))
            .collect::<Vec<_>>(),
        "upper_non_decreasing": uppers.windows(2).all(|w| w[0] <= w[1]),
    })
}
