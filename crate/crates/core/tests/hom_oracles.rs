//! Homomorphism search, walk powers and duality checks against brute force.

#![allow(clippy::needless_range_loop)]

use chibound_core::graph::{all_graphs, orientations, DEFAULT_ORIENTATION_EDGE_CAP};
use chibound_core::hom::{
    h_coloring_with_witness, homomorphism, transitive_tournament, verify_restricted_dual, walk_power, HColoring,
    HColoringConfig, HomCaps, SampleOutcome, WalkPowerError,
};
use chibound_core::{Digraph, Graph};
use proptest::prelude::*;

fn caps() -> HomCaps {
    HomCaps::default()
}

/// Tries every map `V(f) → V(g)`.
fn hom_oracle(f: &Digraph, g: &Digraph) -> bool {
    let (n, k) = (f.n(), g.n());
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut a = vec![0; n];
    loop {
        if f.arcs().all(|(u, v)| g.has_arc(a[u], a[v])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Integer matrix power: entry `(u, v)` counts walks of length `len`.
fn walk_counts(d: &Digraph, len: usize) -> Vec<Vec<u64>> {
    let n = d.n();
    let a: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| d.has_arc(u, v) as u64).collect())
        .collect();
    let mut p: Vec<Vec<u64>> = (0..n).map(|u| (0..n).map(|v| (u == v) as u64).collect()).collect();
    for _ in 0..len {
        p = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| (0..n).map(|w| p[u][w] * a[w][v]).sum::<u64>().min(1 << 20))
                    .collect()
            })
            .collect();
    }
    p
}

fn all_orientations_up_to(n: usize) -> Vec<Digraph> {
    (1..=n)
        .flat_map(all_graphs)
        .flat_map(|g| {
            orientations(&g, DEFAULT_ORIENTATION_EDGE_CAP)
                .unwrap()
                .collect::<Vec<_>>()
        })
        .collect()
}

#[test]
fn transitive_tournament_targets_follow_longest_paths() {
    let samples = all_orientations_up_to(5);
    for f in &samples {
        for k in 1..=6 {
            let expected = f.longest_path_vertices().is_some_and(|l| l <= k);
            let m = homomorphism(f, &transitive_tournament(k), &caps()).unwrap();
            assert_eq!(m.is_some(), expected, "k={k} {f:?}");
            assert_eq!(expected, hom_oracle(f, &transitive_tournament(k)));
            if let Some(m) = m {
                m.validate(f, &transitive_tournament(k)).unwrap();
            }
        }
    }
}

#[test]
fn path_tournament_duality() {
    let samples = all_orientations_up_to(4);
    for k in 1..=3 {
        let f = Digraph::directed_path(k + 1);
        let d = transitive_tournament(k);
        let r = verify_restricted_dual(&f, &d, &samples, &caps()).unwrap();
        assert!(r.pass, "k={k}");
        assert_eq!(r.outcomes.len(), samples.len());
        for (g, o) in samples.iter().zip(&r.outcomes) {
            match o {
                SampleOutcome::MapsToDual { to_dual } => {
                    to_dual.validate(g, &d).unwrap();
                    assert!(!hom_oracle(&f, g));
                }
                SampleOutcome::ReceivesF { from_f } => {
                    from_f.validate(&f, g).unwrap();
                    assert!(!hom_oracle(g, &d));
                }
                SampleOutcome::Violation { .. } => panic!("violation"),
            }
        }
    }
}

#[test]
fn walk_power_matches_matrix_power_on_small_cycles() {
    for n in 2..=6 {
        let c = Digraph::directed_cycle(n);
        for len in 1..=8 {
            let counts = walk_counts(&c, len);
            match walk_power(&c, len) {
                Ok(p) => {
                    assert!((0..n).all(|u| counts[u][u] == 0));
                    for u in 0..n {
                        for v in 0..n {
                            assert_eq!(p.has_arc(u, v), u != v && counts[u][v] > 0);
                        }
                    }
                }
                Err(WalkPowerError::Loop { vertex, walk }) => {
                    assert!(counts[vertex][vertex] > 0);
                    assert_eq!(len % n, 0);
                    assert_eq!(walk.len(), len + 1);
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n * n).prop_map(move |bits| {
            let arcs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v] == 0)
                .collect();
            Digraph::from_arcs(n, &arcs).unwrap()
        })
    })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| bits[u * n + v])
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn homomorphism_matches_oracle(f in arb_digraph(5), g in arb_digraph(4)) {
        let m = homomorphism(&f, &g, &caps()).unwrap();
        prop_assert_eq!(m.is_some(), hom_oracle(&f, &g));
        if let Some(m) = m {
            prop_assert!(m.validate(&f, &g).is_ok());
        }
    }

    #[test]
    fn homomorphisms_compose(f in arb_digraph(5), g in arb_digraph(5), h in arb_digraph(4)) {
        if let (Some(a), Some(b)) = (homomorphism(&f, &g, &caps()).unwrap(), homomorphism(&g, &h, &caps()).unwrap()) {
            prop_assert!(a.then(&b).validate(&f, &h).is_ok());
        }
    }

    #[test]
    fn tournaments_and_longest_paths(f in arb_digraph(6), k in 1usize..=6) {
        let expected = f.longest_path_vertices().is_some_and(|l| l <= k);
        prop_assert_eq!(homomorphism(&f, &transitive_tournament(k), &caps()).unwrap().is_some(), expected);
    }

    #[test]
    fn walk_power_loop_oracle(d in arb_digraph(8), len in 1usize..=6) {
        let counts = walk_counts(&d, len);
        let closed = (0..d.n()).find(|&u| counts[u][u] > 0);
        match walk_power(&d, len) {
            Ok(p) => {
                prop_assert!(closed.is_none());
                for u in 0..d.n() {
                    for v in 0..d.n() {
                        prop_assert_eq!(p.has_arc(u, v), u != v && counts[u][v] > 0);
                    }
                }
            }
            Err(WalkPowerError::Loop { vertex, walk }) => {
                prop_assert_eq!(Some(vertex), closed);
                prop_assert_eq!(walk.len(), len + 1);
                prop_assert_eq!(walk[0], vertex);
                prop_assert_eq!(walk[len], vertex);
                prop_assert!(walk.windows(2).all(|w| d.has_arc(w[0], w[1])));
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn h_coloring_shapes_validate(g in arb_graph(8), h in arb_graph(4), c in 2usize..=5, t in 1usize..=4) {
        let hd = Digraph::symmetric(&h);
        let config = HColoringConfig { clique_threshold: c, degeneracy_threshold: t };
        match h_coloring_with_witness(&g, &hd, &config, &caps()).unwrap() {
            HColoring::Mapping(m) => {
                prop_assert!(m.validate(&Digraph::symmetric(&g), &hd).is_ok());
                prop_assert!(hom_oracle(&Digraph::symmetric(&g), &hd));
            }
            HColoring::Witness { vertices } => {
                prop_assert!(!vertices.is_empty());
                let sub = Digraph::symmetric(&g.induced_subgraph(&vertices));
                prop_assert!(!hom_oracle(&sub, &hd));
            }
        }
    }
}
