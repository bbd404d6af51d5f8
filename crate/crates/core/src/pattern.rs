//! Classical pattern containment.
//!
//! A word contains a pattern when some subsequence of the word is
//! order-isomorphic to it. The matcher here is a backtracking search that
//! places pattern letters left to right and only keeps a candidate if it falls
//! strictly between the already-placed letters that are its neighbours in
//! value. [`brute_force_contains`] is the plain subset scan kept as a
//! reference.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{check_bijection, parse_digits, parse_numbers};

/// A permutation of `[k]` used as an avoidance target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    letters: Vec<usize>,
}

impl Pattern {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        check_bijection(&letters)?;
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The inverse permutation of the pattern.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.letters.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { letters: inv }
    }

    pub fn reverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.letters.iter().join(" "))
        }
    }
}

/// Digit form (`"4321"`) for k <= 9, or whitespace-separated letters.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(char::is_whitespace) {
            parse_numbers(s)?
        } else {
            parse_digits(s)?
        };
        Self::new(letters)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Precomputed neighbour table for one pattern.
///
/// For pattern position `s`, `below[s]` is the earlier position holding the
/// largest letter smaller than `pattern[s]` and `above[s]` the earlier
/// position holding the smallest letter larger than it.
#[derive(Debug, Clone)]
pub struct Matcher {
    k: usize,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Matcher {
    pub fn new(pattern: &Pattern) -> Self {
        let p = pattern.letters();
        let k = p.len();
        let mut below = Vec::with_capacity(k);
        let mut above = Vec::with_capacity(k);
        for s in 0..k {
            below.push((0..s).filter(|&t| p[t] < p[s]).max_by_key(|&t| p[t]));
            above.push((0..s).filter(|&t| p[t] > p[s]).min_by_key(|&t| p[t]));
        }
        Self { k, below, above }
    }

    pub fn contains(&self, word: &[usize]) -> bool {
        let mut chosen = Vec::with_capacity(self.k);
        self.search(word, &mut chosen, 0, false)
    }

    /// True iff some occurrence uses the last letter of `word`.
    ///
    /// Extending an avoiding word by one letter creates an occurrence only
    /// through that letter, which is what prefix pruning relies on.
    pub fn contains_ending_at_last(&self, word: &[usize]) -> bool {
        let mut chosen = Vec::with_capacity(self.k);
        self.search(word, &mut chosen, 0, true)
    }

    /// Lexicographically smallest occurrence, as 0-based indices.
    pub fn find(&self, word: &[usize]) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(self.k);
        self.search(word, &mut chosen, 0, false).then_some(chosen)
    }

    fn fits(&self, word: &[usize], chosen: &[usize], i: usize) -> bool {
        let s = chosen.len();
        let v = word[i];
        self.below[s].is_none_or(|t| word[chosen[t]] < v)
            && self.above[s].is_none_or(|t| v < word[chosen[t]])
    }

    fn search(
        &self,
        word: &[usize],
        chosen: &mut Vec<usize>,
        start: usize,
        pin_last: bool,
    ) -> bool {
        let s = chosen.len();
        if s == self.k {
            return true;
        }
        let remaining = self.k - s;
        if word.len() < start + remaining {
            return false;
        }
        let last = word.len() - remaining;
        let first = if pin_last && remaining == 1 {
            last
        } else {
            start
        };
        for i in first..=last {
            if self.fits(word, chosen, i) {
                chosen.push(i);
                if self.search(word, chosen, i + 1, pin_last) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

/// True iff `word` (distinct entries) contains `pattern`.
pub fn contains(word: &[usize], pattern: &Pattern) -> bool {
    Matcher::new(pattern).contains(word)
}

/// Lexicographically smallest occurrence of `pattern` in `word`, as 0-based
/// indices, or `None` when the word avoids the pattern.
pub fn find_occurrence(word: &[usize], pattern: &Pattern) -> Option<Vec<usize>> {
    Matcher::new(pattern).find(word)
}

/// Reference containment test: scans every k-subset of positions and
/// compares all pairs.
pub fn brute_force_contains(word: &[usize], pattern: &Pattern) -> bool {
    let p = pattern.letters();
    let k = p.len();
    (0..word.len()).combinations(k).any(|idx| {
        (0..k).all(|s| (s + 1..k).all(|t| (word[idx[s]] > word[idx[t]]) == (p[s] > p[t])))
    })
}

/// True iff `word[idx[..]]` is order-isomorphic to `pattern`.
pub fn is_occurrence(word: &[usize], idx: &[usize], pattern: &Pattern) -> bool {
    let p = pattern.letters();
    idx.len() == p.len()
        && idx.windows(2).all(|w| w[0] < w[1])
        && idx.iter().all(|&i| i < word.len())
        && (0..p.len())
            .all(|s| (s + 1..p.len()).all(|t| (word[idx[s]] > word[idx[t]]) == (p[s] > p[t])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn digits(s: &str) -> Vec<usize> {
        parse_digits(s).unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&digits("24153"), &pat("132")));
        assert!(!contains(&digits("12345"), &pat("21")));
        assert!(!contains(&digits("24153"), &pat("4321")));
        assert!(!contains(&digits("12"), &pat("213")));
    }

    #[test]
    fn witnesses() {
        assert_eq!(
            find_occurrence(&digits("24153"), &pat("132")),
            Some(vec![0, 1, 4])
        );
        assert_eq!(find_occurrence(&digits("123"), &pat("213")), None);
        assert_eq!(
            find_occurrence(&digits("4321"), &pat("4321")),
            Some(vec![0, 1, 2, 3])
        );
    }

    #[test]
    fn pinned_last_letter() {
        let m = Matcher::new(&pat("213"));
        // 3241 contains 213 only as 3,2,4
        assert!(m.contains(&digits("3241")));
        assert!(!m.contains_ending_at_last(&digits("3241")));
        assert!(m.contains_ending_at_last(&digits("324")));
        assert!(!m.contains_ending_at_last(&digits("1")));
    }

    #[test]
    fn pattern_parsing_and_display() {
        assert_eq!(pat("4321").letters(), &[4, 3, 2, 1]);
        assert_eq!(pat("3421").inverse(), pat("4312"));
        assert_eq!(pat("1423").inverse(), pat("1342"));
        assert_eq!(pat("213").reverse(), pat("312"));
        assert!("1224".parse::<Pattern>().is_err());
        let long: Pattern = "1 2 3 4 5 6 7 8 9 10".parse().unwrap();
        assert_eq!(long.to_string(), "1 2 3 4 5 6 7 8 9 10");
        assert_eq!(long.to_string().parse::<Pattern>().unwrap(), long);
        assert_eq!(serde_json::to_string(&pat("213")).unwrap(), "\"213\"");
    }

    #[test]
    fn occurrence_check() {
        assert!(is_occurrence(&digits("24153"), &[0, 3, 4], &pat("132")));
        assert!(!is_occurrence(&digits("24153"), &[0, 1, 2], &pat("132")));
        assert!(!is_occurrence(&digits("24153"), &[3, 0, 4], &pat("132")));
    }
}
