#![no_main]

use chibound_harness::Claim;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(claim) = text.parse::<Claim>() {
        assert_eq!(claim.id().parse::<Claim>().ok(), Some(claim));
        assert_eq!(claim.name().parse::<Claim>().ok(), Some(claim));
    }
});
