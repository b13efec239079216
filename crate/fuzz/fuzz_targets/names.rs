#![no_main]

use grp_hweno::cases::Case;
use grp_hweno::config::GridFormat;
use grp_hweno::recon::{DerivativeMode, Scheme, Variables};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(case) = Case::from_name(text) {
        assert_eq!(case.name(), text);
    }
    let _ = text.parse::<Scheme>();
    let _ = text.parse::<DerivativeMode>();
    let _ = text.parse::<Variables>();
    let _ = text.parse::<GridFormat>();
});
