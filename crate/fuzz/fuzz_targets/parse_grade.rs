#![no_main]

use endotop::Grade;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // parsing must never panic, and an accepted grade must round-trip
    // through its canonical string form
    if let Ok(grade) = text.parse::<Grade>() {
        let rendered = grade.to_string();
        let back: Grade = rendered.parse().expect("canonical form reparses");
        assert_eq!(back, grade);
        assert_eq!(back.to_string(), rendered);
    }
});
