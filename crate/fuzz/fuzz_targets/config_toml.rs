#![no_main]

use grp_hweno::config::RunConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(cfg) = RunConfig::from_toml_str(text) else { return };
    let _ = cfg.validate();
    // serialize(parse(text)) must be a fixed point
    let once = cfg.to_toml_string().expect("parsed config serialises");
    let again = RunConfig::from_toml_str(&once).expect("serialised config parses");
    assert_eq!(again.to_toml_string().unwrap(), once);
});
