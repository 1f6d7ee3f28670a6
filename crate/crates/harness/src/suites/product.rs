//! S8: the product colouring built from a proper colouring and `χ_p`
//! colourings of the colour-class unions.

use chibound_core::invariants::{
    chi_p, chromatic_number, color_class_subgraph, product_chi_p_coloring, validate_coloring, SubColorings,
};
use chibound_core::Graph;
use serde_json::{json, Value};

use super::{check_all, g6, to_value, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

fn subsets(k: usize, q: usize) -> Vec<Vec<usize>> {
    (0u32..1 << k)
        .filter(|s| s.count_ones() as usize == q)
        .map(|s| (0..k).filter(|&c| s >> c & 1 == 1).collect())
        .collect()
}

pub(super) fn product_coloring(config: &SuiteConfig) -> Result<(Value, Vec<Instance>, Value)> {
    let p = config.value("p", 2)?;
    let max_n = config.value("max_n", 6)?;
    let graphs = config.corpus(max_n)?;
    let caps = config.caps();
    let instances = check_all(&graphs, |g: &Graph| {
        let chi = chromatic_number(g, &caps)?;
        let base = chi.coloring().expect("chromatic certificate is a colouring");
        let k = base.num_colors;
        let mut subs = SubColorings::new();
        let mut a = 0;
        for set in subsets(k, p.min(k)) {
            let (h, _) = color_class_subgraph(g, base, &set);
            let gamma = chi_p(&h, p, &caps)?;
            let coloring = gamma.coloring().expect("chi_p certificate is a colouring").clone();
            a = a.max(coloring.num_colors);
            subs.insert(set, coloring);
        }
        let zeta = product_chi_p_coloring(g, p, base, &subs)?;
        let valid = validate_coloring(g, &zeta)?.is_pass();
        let bound = k * a.pow(k.saturating_sub(1) as u32);
        Ok(Instance {
            graph6: g6(g),
            params: json!({ "p": p, "n": g.n() }),
            measured: json!({ "chi": k, "a": a, "colors": zeta.num_colors, "valid": valid }),
            expected: json!({ "colors_at_most": bound, "valid": true }),
            pass: valid && zeta.num_colors <= bound,
            witness: Some(json!({ "base": to_value(base), "zeta": to_value(&zeta) })),
        })
    })?;
    Ok((json!({ "p": p, "max_n": max_n }), instances, Value::Null))
}
