#![no_main]

use cycavoid::Pattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(p) = text.parse::<Pattern>() else {
        return;
    };
    let again: Pattern = p.to_string().parse().expect("display output parses");
    assert_eq!(again, p);
    assert_eq!(p.inverse().inverse(), p);
    assert_eq!(p.reverse().reverse(), p);
});
