//! S7: hole counts of blown-up odd cycles.

use chibound_core::holes::{count_holes, is_even_hole_free, verify_hole_density, HoleCaps};
use chibound_core::invariants::clique_number;
use num_rational::Ratio;
use serde_json::{json, Value};

use super::{check_all, g6, to_value, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

/// Counts fixed by hand. A hole of `C_g[K_2]` takes one vertex from each
/// bag, so there are `2^g` of them.
const REFERENCE: [((usize, usize, usize), u64); 3] = [((5, 2, 1), 1), ((5, 4, 1), 32), ((7, 4, 1), 128)];

pub(super) fn hole_density(config: &SuiteConfig) -> Result<(Value, Vec<Instance>, Value)> {
    let gs = config.list("g", &[5, 7])?;
    let omegas = config.list("omega", &[2, 4])?;
    let copies = config.list("copies", &[1, 2, 3])?;
    let mut grid = Vec::new();
    for &g in &gs {
        for &w in &omegas {
            for &c in &copies {
                grid.push((g, w, c));
            }
        }
    }
    let caps = HoleCaps::default();
    let instances = check_all(&grid, |&(g, w, c)| {
        config.check_order(g * w / 2 * c)?;
        let r = verify_hole_density(g, w, c, &caps)?;
        let reference = REFERENCE.iter().find(|(k, _)| *k == (g, w, c)).map(|(_, h)| *h);
        let pass = r.pass && reference.is_none_or(|h| h == r.holes);
        Ok(Instance {
            graph6: g6(&r.graph),
            params: json!({ "g": g, "omega": w, "copies": c }),
            measured: json!({
                "holes": r.holes,
                "order": r.order,
                "clique_number": r.clique_number,
                "even_hole_free": r.even_hole_free,
            }),
            expected: json!({
                "holes": to_value(&r.expected),
                "holes_reference": reference,
                "clique_number": w,
                "even_hole_free": true,
            }),
            pass,
            witness: None,
        })
    })?;
    let observations = density_ratios(config)?;
    Ok((
        json!({ "g": gs, "omega": omegas, "copies": copies }),
        instances,
        observations,
    ))
}

/// `h_5(G) / (|G| (ω/2)^4 / 5)` over even-hole-free graphs from the corpus
/// and from seeded random graphs. Reported only.
fn density_ratios(config: &SuiteConfig) -> Result<Value> {
    let max_n = config.value("ratio_corpus_n", 7)?;
    let random = config.value("ratio_random", 200)?;
    let mut graphs = config.corpus(max_n)?;
    graphs.extend(config.random_graphs(7, random, (8, 14))?);
    let caps = HoleCaps::default();
    let ratios = check_all(&graphs, |g| {
        if !is_even_hole_free(g, &caps)?.even_hole_free {
            return Ok(None);
        }
        let h5 = count_holes(g, 5, &caps)?;
        if h5 == 0 {
            return Ok(Some((g.n(), None)));
        }
        let w = clique_number(g, &config.caps())?.value as u64;
        let ratio = Ratio::new(80 * h5, g.n() as u64 * w.pow(4));
        Ok(Some((g.n(), Some(ratio))))
    })?;
    let considered: Vec<_> = ratios.into_iter().flatten().collect();
    let with_holes: Vec<Ratio<u64>> = considered.iter().filter_map(|(_, r)| *r).collect();
    Ok(json!({
        "even_hole_free_graphs": considered.len(),
        "with_five_holes": with_holes.len(),
        "max_ratio": to_value(&with_holes.iter().max()),
    }))
}
