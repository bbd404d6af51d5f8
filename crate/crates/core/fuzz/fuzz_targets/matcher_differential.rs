#![no_main]

use cycavoid::pattern::{brute_force_contains, is_occurrence, Matcher};
use cycavoid::Pattern;
use libfuzzer_sys::fuzz_target;

/// Ranks `keys` into a permutation of `1..=keys.len()`, ties broken by index.
fn standardize(keys: &[u8]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by_key(|&i| (keys[i], i));
    let mut out = vec![0; keys.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let k = 1 + usize::from(k % 5);
    if rest.len() < k {
        return;
    }
    let (pat_keys, word_keys) = rest.split_at(k);
    let word = standardize(&word_keys[..word_keys.len().min(12)]);
    let pattern = Pattern::new(standardize(pat_keys)).expect("standardized keys form a pattern");
    let m = Matcher::new(&pattern);
    assert_eq!(m.contains(&word), brute_force_contains(&word, &pattern));
    if let Some(idx) = m.find(&word) {
        assert!(is_occurrence(&word, &idx, &pattern));
    }
    if m.contains_ending_at_last(&word) {
        assert!(m.contains(&word));
    }
});
