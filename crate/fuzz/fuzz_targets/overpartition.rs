#![no_main]

use libfuzzer_sys::fuzz_target;
use overpoly::enumerator::{Overpartition, PartConfig};

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let cfg = PartConfig::new(2 + (sel % 4) as u32, 1 + (sel / 4 % 4) as u32).expect("valid");
    if let Ok(p) = Overpartition::parse(text, &cfg) {
        for compact in [false, true] {
            let back = Overpartition::parse(&p.render(&cfg, compact), &cfg).expect("render parses");
            assert_eq!(back, p);
        }
    }
});
