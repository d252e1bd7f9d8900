#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    // must never panic or hang; errors are the expected outcome on junk
    let _ = loewy::format::parse_lattice(text);
});
