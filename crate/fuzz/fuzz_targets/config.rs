#![no_main]

use fourhole::parse::Config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(cfg) = Config::parse(&text) {
        for key in cfg.keys() {
            assert!(cfg.get(key).is_some());
            assert!(cfg.get(&key.replace('-', "_")).is_some());
        }
    }
});
