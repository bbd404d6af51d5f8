//! Replays the checked-in fuzz seeds so they run under `cargo test` on stable.

use std::fs;
use std::path::PathBuf;

use cycavoid::{AvoidanceSpec, CycleWord, Pattern, Permutation};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn round_trips<T>(text: &str) -> bool
where
    T: std::str::FromStr + ToString + PartialEq + std::fmt::Debug,
{
    match text.parse::<T>() {
        Ok(v) => {
            let again = v.to_string().parse::<T>().ok();
            assert_eq!(again.as_ref(), Some(&v), "{text:?}");
            true
        }
        Err(_) => false,
    }
}

#[test]
fn text_seeds_parse_or_reject_cleanly() {
    let accepted =
        |target: &str, f: fn(&str) -> bool| seeds(target).iter().filter(|s| f(s)).count();
    assert_eq!(accepted("parse_permutation", round_trips::<Permutation>), 4);
    assert_eq!(accepted("parse_cycle_word", round_trips::<CycleWord>), 4);
    assert_eq!(accepted("parse_pattern", round_trips::<Pattern>), 3);
    assert_eq!(accepted("parse_spec", round_trips::<AvoidanceSpec>), 5);
}
