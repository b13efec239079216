#![no_main]

use grp_hweno::config::parse_mesh_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(meshes) = parse_mesh_list(text) {
        assert!(!meshes.is_empty());
        let joined: Vec<String> = meshes.iter().map(|m| m.to_string()).collect();
        assert_eq!(parse_mesh_list(&joined.join(",")).unwrap(), meshes);
    }
});
