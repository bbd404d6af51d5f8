#![no_main]

use cycavoid::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(p) = text.parse::<Permutation>() else {
        return;
    };
    let again: Permutation = p.to_string().parse().expect("display output parses");
    assert_eq!(again, p);
    assert_eq!(p.inverse().inverse(), p);
    if let Ok(w) = p.to_standard_cycle_word() {
        assert_eq!(w.to_permutation(), p);
    }
});
