//! S9: directed paths and transitive tournaments as restricted duals over
//! all orientations of small graphs.

use chibound_core::graph::{all_graphs, orientations, DEFAULT_ORIENTATION_EDGE_CAP};
use chibound_core::hom::{transitive_tournament, verify_restricted_dual, HomCaps};
use chibound_core::Digraph;
use serde_json::{json, Value};

use super::{check_all, d6, to_value, SuiteConfig};
use crate::error::Result;
use crate::report::Instance;

pub(super) fn gallai_roy(config: &SuiteConfig) -> Result<(Value, Vec<Instance>, Value)> {
    let ks = config.list("k", &[1, 2, 3])?;
    let max_n = config.value("max_n", 4)?;
    config.check_order(max_n)?;
    let mut samples = Vec::new();
    for n in 1..=max_n {
        for g in all_graphs(n) {
            samples.extend(orientations(&g, DEFAULT_ORIENTATION_EDGE_CAP)?);
        }
    }
    let caps = HomCaps::default();
    let instances = check_all(&ks, |&k| {
        let f = Digraph::directed_path(k + 1);
        let d = transitive_tournament(k);
        let r = verify_restricted_dual(&f, &d, &samples, &caps)?;
        let witness = match r.violating_sample {
            Some(i) => Some(json!({
                "sample_index": i,
                "sample": d6(&samples[i]),
                "outcome": to_value(&r.outcomes[i]),
            })),
            None if r.f_to_d.is_some() => Some(json!({ "f_to_d": to_value(&r.f_to_d) })),
            None => None,
        };
        Ok(Instance {
            graph6: d6(&f),
            params: json!({ "k": k, "dual": d6(&d) }),
            measured: json!({ "f_maps_to_dual": r.f_to_d.is_some(), "samples_checked": r.outcomes.len() }),
            expected: json!({ "f_maps_to_dual": false, "samples_checked": samples.len() }),
            pass: r.pass,
            witness,
        })
    })?;
    Ok((
        json!({ "k": ks, "max_n": max_n, "samples": samples.len() }),
        instances,
        Value::Null,
    ))
}
