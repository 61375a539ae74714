#![no_main]

use fourhole::scalar::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rational(s) {
        // The canonical p/q form reads back to the same value.
        let again = parse_rational(&format_rational(&r)).expect("formatted rational parses");
        assert_eq!(r, again);
    }
});
