#![no_main]

use cycavoid::{count_class, AvoidanceSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(spec) = text.parse::<AvoidanceSpec>() else {
        return;
    };
    let again: AvoidanceSpec = spec.to_string().parse().expect("display output parses");
    assert_eq!(again, spec);
    assert_eq!(spec.mirror().mirror(), spec);
    for n in 1..=5 {
        assert_eq!(count_class(n, &spec), count_class(n, &spec.mirror()));
    }
});
