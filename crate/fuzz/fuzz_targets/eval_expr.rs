#![no_main]

use finring::{Evaluator, Limits, Value};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let limits = Limits::new(64);
    if let Ok(Value::Ring(r)) = Evaluator::new(limits).eval_text(text) {
        let again = Evaluator::new(limits).ring(r.label()).expect("label re-evaluates");
        assert_eq!(again.hash(), r.hash());
    }
});
