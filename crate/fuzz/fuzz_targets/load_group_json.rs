#![no_main]

use finring::io::{group_from_json, group_to_json};
use finring::Limits;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let limits = Limits::new(64);
    if let Ok(g) = group_from_json(text, limits) {
        let back = group_from_json(&group_to_json(&g), limits).expect("saved group reloads");
        assert_eq!(back.cayley_rows(), g.cayley_rows());
    }
});
