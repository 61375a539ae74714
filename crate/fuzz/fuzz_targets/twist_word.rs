#![no_main]

use fourhole::TwistWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<TwistWord>() {
        let shown = w.to_string();
        assert_eq!(shown.parse::<TwistWord>().expect("display parses"), w);
        assert!(w.concat(&w.inverse()).reduced().is_empty());
    }
});
