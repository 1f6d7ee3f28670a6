#![no_main]

use chibound_core::graph::{parse_graph, serialize_graph, Format};
use libfuzzer_sys::fuzz_target;

/// graph6 output is quadratic in the order.
const ROUND_TRIP_MAX_ORDER: usize = 1024;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = parse_graph(text) else {
        return;
    };
    if g.n() > ROUND_TRIP_MAX_ORDER {
        return;
    }
    for format in [Format::Graph6, Format::Json] {
        let out = serialize_graph(&g, format).expect("parsed graphs serialise");
        assert_eq!(parse_graph(&out).expect("round trip"), g);
    }
});
