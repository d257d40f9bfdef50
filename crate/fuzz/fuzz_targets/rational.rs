#![no_main]

use libfuzzer_sys::fuzz_target;
use lsab_core::scalar::Scalar;

// The rational parsers must never panic; strict acceptances must round-trip
// through the display form, and lenient must accept whatever strict does.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let strict = Scalar::parse_strict(text);
    let lenient = Scalar::parse_lenient(text);
    if let Ok(value) = &strict {
        let printed = value.to_string();
        let again = Scalar::parse_strict(&printed).expect("display form is strict");
        assert_eq!(&again, value);
        assert_eq!(lenient.as_ref().ok(), Some(value));
    }
});
