#![no_main]

use chibound_core::graph::{parse_digraph, serialize_digraph, Format};
use libfuzzer_sys::fuzz_target;

/// graph6 output is quadratic in the order.
const ROUND_TRIP_MAX_ORDER: usize = 1024;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = parse_digraph(text) else {
        return;
    };
    if d.n() > ROUND_TRIP_MAX_ORDER {
        return;
    }
    for format in [Format::Graph6, Format::Json] {
        let out = serialize_digraph(&d, format).expect("parsed digraphs serialise");
        assert_eq!(parse_digraph(&out).expect("round trip"), d);
    }
});
