//! Suites comparing low tree-depth colourings with topological minors: S4 and S6.

use chibound_core::invariants::{chi_p, validate_coloring};
use chibound_core::minors::{chi_tm, omega_tm, MinorCaps};
use chibound_core::Graph;
use serde_json::{json, Value};

use super::{check_all, g6, to_value, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

type SuiteOutput = (Value, Vec<Instance>, Value);

pub(super) fn chi_tm_lower(config: &SuiteConfig) -> Result<SuiteOutput> {
    let ps = config.list("p", &[2, 3])?;
    let max_ns = config.list("max_n", &[8, 7])?;
    if max_ns.len() != ps.len() {
        return Err(crate::HarnessError::Usage("max_n needs one value per p".into()));
    }
    let mut items: Vec<(usize, Graph)> = Vec::new();
    for (&p, &max_n) in ps.iter().zip(&max_ns) {
        items.extend(config.corpus(max_n)?.into_iter().map(|g| (p, g)));
    }
    let caps = config.caps();
    let minor_caps = MinorCaps::default();
    let instances = check_all(&items, |(p, g)| {
        let p = *p;
        if p == 0 {
            return Err(chibound_core::Error::Param("p must be at least 1".into()).into());
        }
        let c = chi_p(g, p, &caps)?;
        let coloring = c.coloring().expect("chi_p certificate is a colouring");
        let coloring_ok = validate_coloring(g, coloring)?.is_pass();
        let tm = chi_tm(g, p - 1, g.n(), &minor_caps)?;
        let embedding_ok = tm.witness.as_ref().is_none_or(|w| w.validate_tm(g, p - 1).is_ok());
        let pass = c.value.pow(p as u32) >= tm.value && coloring_ok && embedding_ok && !tm.cap_active;
        Ok(Instance {
            graph6: g6(g),
            params: json!({ "p": p, "n": g.n() }),
            measured: json!({ "chi_p": c.value, "chi_p_power": c.value.pow(p as u32), "chi_tm": tm.value }),
            expected: json!({ "chi_p_power_at_least": tm.value }),
            pass,
            witness: Some(json!({
                "chi_p": to_value(coloring),
                "chi_p_lower_bound": to_value(&c.lower_bound),
                "tm_pattern": to_value(&tm.witness),
            })),
        })
    })?;
    Ok((json!({ "p": ps, "max_n": max_ns }), instances, Value::Null))
}

pub(super) fn bipartite(config: &SuiteConfig) -> Result<SuiteOutput> {
    let max_s = config.value("max_s", 4)?;
    let max_t = config.value("max_t", 5)?;
    let ps = config.list("p", &[2, 3, 4, 5])?;
    let mut items = Vec::new();
    for s in 1..=max_s {
        for t in s..=max_t {
            for &p in &ps {
                items.push((s, t, p));
            }
        }
    }
    let caps = config.caps();
    let minor_caps = MinorCaps::default();
    let instances = check_all(&items, |&(s, t, p)| {
        let g = Graph::complete_bipartite(s, t);
        config.check_order(g.n())?;
        let c = chi_p(&g, p, &caps)?;
        let coloring = c.coloring().expect("chi_p certificate is a colouring");
        let coloring_ok = validate_coloring(&g, coloring)?.is_pass();
        let tm = omega_tm(&g, 1, &minor_caps)?;
        let embedding_ok = tm.witness.as_ref().is_some_and(|w| w.validate_tm(&g, 1).is_ok());
        let pass = c.value <= s + 1 && c.value <= tm.value * tm.value && coloring_ok && embedding_ok;
        Ok(Instance {
            graph6: g6(&g),
            params: json!({ "s": s, "t": t, "p": p }),
            measured: json!({ "chi_p": c.value, "omega_tm_1": tm.value }),
            expected: json!({ "chi_p_at_most": (s + 1).min(tm.value * tm.value) }),
            pass,
            witness: Some(json!({ "chi_p": to_value(coloring), "tm_1": to_value(&tm.witness) })),
        })
    })?;
    Ok((
        json!({ "max_s": max_s, "max_t": max_t, "p": ps }),
        instances,
        Value::Null,
    ))
}
