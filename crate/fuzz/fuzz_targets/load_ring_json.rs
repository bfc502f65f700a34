#![no_main]

use finring::io::{ring_from_json, ring_to_json};
use finring::Limits;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let limits = Limits::new(64);
    if let Ok(r) = ring_from_json(text, limits) {
        let back = ring_from_json(&ring_to_json(&r), limits).expect("saved ring reloads");
        assert_eq!(back.hash(), r.hash());
    }
});
