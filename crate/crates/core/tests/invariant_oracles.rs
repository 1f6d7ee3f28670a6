//! Solvers against brute-force oracles that follow the definitions directly.

use chibound_core::graph::{blow_up, connected_graphs, generate, subdivide_exact, Family};
use chibound_core::invariants::{
    biclique_number, chi_p, chromatic_number, clique_number, star_chromatic_number, tree_depth, validate_coloring,
    Caps, Certificate, LowerBound,
};
use chibound_core::Graph;
use proptest::prelude::*;

/// Every vertex set of `g` as an adjacency-list graph, by bitmask.
fn induced(g: &Graph, set: u32) -> Graph {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| set >> v & 1 == 1).collect();
    g.induced_subgraph(&vs)
}

/// `td(G) = max over components`, `td(connected) = 1 + min_v td(G - v)`.
fn td_oracle(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps.iter().map(|c| td_oracle(&g.induced_subgraph(c))).max().unwrap();
    }
    1 + (0..g.n()).map(|v| td_oracle(&g.remove_vertex(v))).min().unwrap()
}

/// Calls `f` on every assignment of `k` colours, stopping when it returns true.
fn any_coloring(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if n == 0 {
        return f(&[]);
    }
    if k == 0 {
        return false;
    }
    let mut a = vec![0; n];
    loop {
        if f(&a) {
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

fn proper(g: &Graph, a: &[usize]) -> bool {
    g.edges().all(|(u, v)| a[u] != a[v])
}

fn chi_oracle(g: &Graph) -> usize {
    (0..).find(|&k| any_coloring(g.n(), k, |a| proper(g, a))).unwrap()
}

/// Every union of at most `p` colour classes has tree-depth at most the
/// number of classes.
fn low_td(g: &Graph, a: &[usize], k: usize, p: usize) -> bool {
    (1u32..1 << k).filter(|s| s.count_ones() as usize <= p).all(|s| {
        let set = (0..g.n()).filter(|&v| s >> a[v] & 1 == 1).fold(0u32, |m, v| m | 1 << v);
        td_oracle(&induced(g, set)) <= s.count_ones() as usize
    })
}

fn chi_p_oracle(g: &Graph, p: usize) -> usize {
    (0..).find(|&k| any_coloring(g.n(), k, |a| low_td(g, a, k, p))).unwrap()
}

/// Proper and every two colour classes induce a forest of stars.
fn star_ok(g: &Graph, a: &[usize], k: usize) -> bool {
    if !proper(g, a) {
        return false;
    }
    for c in 0..k {
        for d in c + 1..k {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| a[v] == c || a[v] == d).collect();
            let h = g.induced_subgraph(&vs);
            for comp in h.components() {
                let sub = h.induced_subgraph(&comp);
                let is_tree = sub.m() + 1 == sub.n();
                let centre = (0..sub.n()).any(|x| sub.degree(x) + 1 == sub.n());
                if !(is_tree && (sub.n() <= 2 || centre)) {
                    return false;
                }
            }
        }
    }
    true
}

fn star_oracle(g: &Graph) -> usize {
    (0..).find(|&k| any_coloring(g.n(), k, |a| star_ok(g, a, k))).unwrap()
}

fn omega_oracle(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn biclique_oracle(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for a in 1u32..1 << n {
        let common = (0..n)
            .filter(|&w| a >> w & 1 == 0 && (0..n).all(|v| a >> v & 1 == 0 || g.has_edge(v, w)))
            .count();
        best = best.max(common.min(a.count_ones() as usize));
    }
    best
}

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn chromatic_matches_oracle_on_connected_up_to_7() {
    for n in 1..=7 {
        for g in connected_graphs(n) {
            let r = chromatic_number(&g, &caps()).unwrap();
            assert_eq!(r.value, chi_oracle(&g), "{g:?}");
            assert!(validate_coloring(&g, r.coloring().unwrap()).unwrap().is_pass());
            match &r.lower_bound {
                LowerBound::Clique { vertices } => {
                    assert!(g.is_clique(vertices));
                    assert_eq!(vertices.len(), r.value);
                }
                LowerBound::CriticalSubgraph { vertices } => {
                    let h = g.induced_subgraph(vertices);
                    assert_eq!(chi_oracle(&h), r.value);
                    for v in 0..h.n() {
                        assert_eq!(chi_oracle(&h.remove_vertex(v)), r.value - 1);
                    }
                }
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }
}

#[test]
fn clique_biclique_td_match_oracles_up_to_7() {
    for n in 1..=7 {
        for g in connected_graphs(n) {
            assert_eq!(clique_number(&g, &caps()).unwrap().value, omega_oracle(&g));
            let b = biclique_number(&g, &caps()).unwrap();
            assert_eq!(b.value, biclique_oracle(&g), "{g:?}");
            let Certificate::Biclique { left, right } = &b.certificate else {
                panic!()
            };
            assert_eq!((left.len(), right.len()), (b.value, b.value));
            assert!(left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v))));
            let t = tree_depth(&g, &caps()).unwrap();
            assert_eq!(t.value, td_oracle(&g));
            let Certificate::Forest(f) = &t.certificate else {
                panic!()
            };
            f.validate(&g).unwrap();
        }
    }
}

#[test]
fn star_and_chi_p_match_oracles_up_to_6() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let s = star_chromatic_number(&g, &caps()).unwrap();
            assert_eq!(s.value, star_oracle(&g), "{g:?}");
            assert!(validate_coloring(&g, s.coloring().unwrap()).unwrap().is_pass());
        }
    }
    for n in 1..=6 {
        for g in connected_graphs(n) {
            for p in 2..=4 {
                let r = chi_p(&g, p, &caps()).unwrap();
                assert_eq!(r.value, chi_p_oracle(&g, p), "p={p} {g:?}");
                assert!(
                    validate_coloring(&g, r.coloring().unwrap()).unwrap().is_pass(),
                    "p={p} {g:?}"
                );
            }
        }
    }
}

#[test]
fn small_reference_values() {
    assert_eq!(
        star_chromatic_number(&Graph::cycle(4), &caps()).unwrap().value,
        star_oracle(&Graph::cycle(4))
    );
    let k31 = subdivide_exact(&Graph::complete(3), 1);
    assert_eq!(star_oracle(&k31), 3);
    let c5k2 = blow_up(&Graph::cycle(5), 2).unwrap();
    assert_eq!(biclique_number(&c5k2, &caps()).unwrap().value, biclique_oracle(&c5k2));
    assert_eq!(biclique_oracle(&c5k2), 2);
    assert_eq!(omega_oracle(&c5k2), 4);
    assert_eq!(td_oracle(&Graph::path(4)), 3);
    let k23 = Graph::complete_bipartite(2, 3);
    for p in 3..=5 {
        assert_eq!(chi_p(&k23, p, &caps()).unwrap().value, chi_p_oracle(&k23, p));
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.2..0.8f64).prop_map(|(n, seed, p)| generate(&Family::RandomGnp { n, p }, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chi_chain_and_biclique_bound(g in arb_graph(9)) {
        let chi = chromatic_number(&g, &caps()).unwrap().value;
        let chis = star_chromatic_number(&g, &caps()).unwrap().value;
        let chi3 = chi_p(&g, 3, &caps()).unwrap().value;
        let td = tree_depth(&g, &caps()).unwrap().value;
        prop_assert!(chi <= chis && chis <= chi3 && chi3 <= td);
        prop_assert_eq!(chi_p(&g, g.n(), &caps()).unwrap().value, td);
        let omega = clique_number(&g, &caps()).unwrap().value;
        prop_assert!(biclique_number(&g, &caps()).unwrap().value >= omega / 2);
    }

    #[test]
    fn chi_p_certificates_validate(g in arb_graph(9), p in 2usize..=4) {
        let r = chi_p(&g, p, &caps()).unwrap();
        let c = r.coloring().unwrap();
        prop_assert_eq!(c.num_colors, r.value);
        prop_assert!(validate_coloring(&g, c).unwrap().is_pass());
    }

    #[test]
    fn hereditary_under_vertex_deletion(g in arb_graph(8), pick in any::<usize>()) {
        let h = g.remove_vertex(pick % g.n());
        let all = |g: &Graph| [
            chromatic_number(g, &caps()).unwrap().value,
            star_chromatic_number(g, &caps()).unwrap().value,
            chi_p(g, 3, &caps()).unwrap().value,
            tree_depth(g, &caps()).unwrap().value,
            clique_number(g, &caps()).unwrap().value,
            biclique_number(g, &caps()).unwrap().value,
        ];
        let (before, after) = (all(&g), all(&h));
        for i in 0..before.len() {
            prop_assert!(after[i] <= before[i], "invariant {} grew", i);
        }
    }

    #[test]
    fn blow_up_multiplies_clique_number(g in arb_graph(6), k in 1usize..=3) {
        let omega = clique_number(&g, &caps()).unwrap().value;
        let b = blow_up(&g, k).unwrap();
        prop_assert_eq!(clique_number(&b, &caps()).unwrap().value, k * omega);
    }
}
