//! graph6 cross-checked against petgraph's independent codec, plus
//! parse/serialize identities for both text formats.

use chibound_core::graph::{generate, parse_digraph, parse_graph, serialize_digraph, serialize_graph, Family, Format};
use chibound_core::{Digraph, Graph};
use petgraph::graph6::{FromGraph6, ToGraph6};
use proptest::prelude::*;

fn to_petgraph(g: &Graph) -> petgraph::graph::UnGraph<(), ()> {
    let mut pg = petgraph::graph::UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    for (u, v) in g.edges() {
        pg.add_edge(
            petgraph::graph::NodeIndex::new(u),
            petgraph::graph::NodeIndex::new(v),
            (),
        );
    }
    pg
}

fn from_petgraph(pg: &petgraph::graph::UnGraph<(), ()>) -> Graph {
    let edges: Vec<_> = pg
        .edge_indices()
        .map(|e| {
            let (a, b) = pg.edge_endpoints(e).unwrap();
            (a.index().min(b.index()), a.index().max(b.index()))
        })
        .collect();
    Graph::from_edges(pg.node_count(), &edges).unwrap()
}

#[test]
fn reference_codec_agrees_on_fixed_examples() {
    assert_eq!(to_petgraph(&Graph::complete(3)).graph6_string(), "Bw");
    assert_eq!(to_petgraph(&Graph::complete(2)).graph6_string(), "A_");
    assert_eq!(to_petgraph(&Graph::empty(1)).graph6_string(), "@");
    assert_eq!(parse_graph("Bw").unwrap(), Graph::complete(3));
    assert_eq!(serialize_graph(&Graph::complete(2), Format::Graph6).unwrap(), "A_");
    assert_eq!(serialize_graph(&Graph::empty(1), Format::Graph6).unwrap(), "@");
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.0..=1.0f64)
        .prop_map(|(n, seed, p)| generate(&Family::RandomGnp { n, p }, seed).unwrap())
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n, prop::collection::vec(any::<bool>(), max_n * max_n)).prop_map(|(n, bits)| {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && bits[u * n + v])
            .collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_matches_reference(g in arb_graph(62)) {
        let ours = serialize_graph(&g, Format::Graph6).unwrap();
        prop_assert_eq!(&ours, &to_petgraph(&g).graph6_string());
        let theirs = petgraph::graph::UnGraph::<(), ()>::from_graph6_string(ours.clone());
        prop_assert_eq!(from_petgraph(&theirs), g);
    }

    #[test]
    fn parse_inverts_serialize(g in arb_graph(90)) {
        for format in [Format::Graph6, Format::Json] {
            let text = serialize_graph(&g, format).unwrap();
            prop_assert_eq!(&parse_graph(&text).unwrap(), &g);
        }
    }

    #[test]
    fn digraph_parse_inverts_serialize(d in arb_digraph(12)) {
        for format in [Format::Graph6, Format::Json] {
            let text = serialize_digraph(&d, format).unwrap();
            prop_assert_eq!(&parse_digraph(&text).unwrap(), &d);
        }
    }

    #[test]
    fn arbitrary_text_never_panics(text in ".{0,40}") {
        let _ = parse_graph(&text);
        let _ = parse_digraph(&text);
    }
}
