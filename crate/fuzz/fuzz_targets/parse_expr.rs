#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = finring::parse(text) {
        let printed = e.canonical();
        let again = finring::parse(&printed).expect("canonical text re-parses");
        assert_eq!(again, e);
        assert_eq!(again.canonical(), printed);
    }
});
