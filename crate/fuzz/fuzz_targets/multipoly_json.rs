#![no_main]

use libfuzzer_sys::fuzz_target;
use overpoly::polyring::MultiPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = MultiPoly::from_json(text) {
        // Accepted input must survive a round trip unchanged.
        let again = MultiPoly::from_json(&p.to_json()).expect("own output parses");
        assert_eq!(p, again);
    }
});
