#![no_main]

use libfuzzer_sys::fuzz_target;
use loewy::format::{parse_lattice, write_lattice};

fuzz_target!(|text: &str| {
    // any input the parser accepts must survive a canonical round trip
    if let Ok(l) = parse_lattice(text) {
        let canon = write_lattice(&l);
        let back = parse_lattice(&canon).expect("canonical output reparses");
        assert_eq!(back, l);
        assert_eq!(write_lattice(&back), canon);
    }
});
