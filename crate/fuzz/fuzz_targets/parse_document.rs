#![no_main]

use libfuzzer_sys::fuzz_target;

// The document parser must never panic on arbitrary input, and anything it
// accepts must survive an emit/reparse round trip unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for lenient in [false, true] {
        if let Ok(doc) = lsab_cli::parse_document(text, lenient) {
            let emitted = lsab_cli::emit_document(&doc);
            let reparsed = lsab_cli::parse_document(&emitted, false)
                .expect("emitted documents always reparse");
            assert_eq!(doc, reparsed, "round trip changed the document");
        }
    }
});
