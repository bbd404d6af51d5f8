#![no_main]

use cycavoid::bijection::MapId;
use cycavoid::output::SequenceFormat;
use cycavoid::sequences::SequenceFamily;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(map) = text.parse::<MapId>() {
        assert_eq!(map.to_string().parse::<MapId>().ok(), Some(map));
    }
    if let Ok(family) = text.parse::<SequenceFamily>() {
        assert_eq!(family.id().parse::<SequenceFamily>().ok(), Some(family));
    }
    let _ = text.parse::<SequenceFormat>();
});
