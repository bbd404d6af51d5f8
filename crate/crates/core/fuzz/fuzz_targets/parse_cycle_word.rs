#![no_main]

use cycavoid::CycleWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(w) = text.parse::<CycleWord>() else {
        return;
    };
    assert_eq!(w.at(1), 1);
    let again: CycleWord = w.to_string().parse().expect("display output parses");
    assert_eq!(again, w);
    let p = w.to_permutation();
    assert_eq!(p.to_standard_cycle_word().as_ref(), Ok(&w));
});
