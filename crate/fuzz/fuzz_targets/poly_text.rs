#![no_main]

use libfuzzer_sys::fuzz_target;
use overpoly::polyring::parse_poly;

const NAMES: [&str; 4] = ["x", "y1", "y2", "y3"];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_poly(text, &NAMES) {
        let names: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
        let shown = p.display_with(&names).to_string();
        assert_eq!(parse_poly(&shown, &NAMES).expect("display parses"), p);
    }
});
