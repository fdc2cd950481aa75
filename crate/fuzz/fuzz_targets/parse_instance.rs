#![no_main]

use endotop::instance::InstanceFile;
use endotop::output::{basis_document, SpaceChoice};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // parsing and validation must never panic on arbitrary bytes
    let Ok(file) = InstanceFile::from_json(data) else {
        return;
    };
    // an accepted file re-serializes to an equivalent document
    if let Ok(bytes) = serde_json::to_vec(&file) {
        let again = InstanceFile::from_json(&bytes).expect("re-serialized form reparses");
        assert_eq!(
            serde_json::to_value(&file).unwrap(),
            serde_json::to_value(&again).unwrap()
        );
    }
    // construction over validated inputs must never panic either; keep
    // the carrier small so the fuzzer spends its time in the parser
    let Ok(f) = file.endofunction() else {
        return;
    };
    if f.carrier().size() > 8 {
        return;
    }
    let _ = basis_document(&file, SpaceChoice::Tau1, Some(3));
    let _ = basis_document(&file, SpaceChoice::Tau2, Some(3));
    if file.tau3.is_some() {
        let _ = basis_document(&file, SpaceChoice::Tau3, None);
    }
});
