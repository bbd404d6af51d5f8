//! Avoidance classes `A_n(σ_1,…,σ_k; τ)`: cyclic permutations whose one-line
//! form avoids every `σ_i` and whose standard cycle word avoids `τ`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{Matcher, Pattern};
use crate::perm::{one_line_of_cycle, CycleWord};

/// One-line patterns plus one cycle-form pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AvoidanceSpec {
    one_line: Vec<Pattern>,
    cycle: Pattern,
}

impl AvoidanceSpec {
    pub fn new(one_line: Vec<Pattern>, cycle: Pattern) -> Result<Self> {
        for (i, p) in one_line.iter().enumerate() {
            if one_line[..i].contains(p) {
                return Err(Error::DuplicatePattern(p.to_string()));
            }
        }
        Ok(Self { one_line, cycle })
    }

    pub fn one_line_patterns(&self) -> &[Pattern] {
        &self.one_line
    }

    pub fn cycle_pattern(&self) -> &Pattern {
        &self.cycle
    }

    /// The spec satisfied by the inverses of this spec's members.
    ///
    /// Inverting a cyclic permutation reverses its cycle, so the one-line
    /// patterns are inverted and the cycle pattern is reversed. This is exact
    /// as long as the cycle pattern neither starts nor ends with its smallest
    /// letter, since then no occurrence can use the leading 1.
    pub fn mirror(&self) -> Self {
        Self {
            one_line: self.one_line.iter().map(Pattern::inverse).collect(),
            cycle: self.cycle.reverse(),
        }
    }

    pub fn compile(&self) -> CompiledSpec {
        CompiledSpec {
            one_line: self.one_line.iter().map(Matcher::new).collect(),
            cycle: Matcher::new(&self.cycle),
        }
    }

    pub fn in_class(&self, w: &CycleWord) -> bool {
        self.compile().in_class(w.word())
    }
}

/// An [`AvoidanceSpec`] with matchers built once, for use in tight loops.
#[derive(Debug, Clone)]
pub struct CompiledSpec {
    one_line: Vec<Matcher>,
    cycle: Matcher,
}

impl CompiledSpec {
    pub fn cycle_matcher(&self) -> &Matcher {
        &self.cycle
    }

    /// `word` must be a valid cycle word.
    pub fn in_class(&self, word: &[usize]) -> bool {
        !self.cycle.contains(word) && self.one_line_avoids(word)
    }

    /// One-line side only.
    pub fn one_line_avoids(&self, word: &[usize]) -> bool {
        if self.one_line.is_empty() {
            return true;
        }
        let one_line = one_line_of_cycle(word);
        self.one_line.iter().all(|m| !m.contains(&one_line))
    }
}

/// Tests membership of `w` in the class described by `spec`.
pub fn in_class(w: &CycleWord, spec: &AvoidanceSpec) -> bool {
    spec.in_class(w)
}

impl fmt::Display for AvoidanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.one_line.iter().join(","), self.cycle)
    }
}

/// Grammar: comma-separated one-line patterns, `;`, the cycle pattern.
/// The one-line list may be empty (`";213"`).
impl FromStr for AvoidanceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (left, right) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `patterns;cycle`, got {s:?}")))?;
        let one_line = if left.trim().is_empty() {
            Vec::new()
        } else {
            left.split(',')
                .map(str::parse)
                .collect::<Result<Vec<Pattern>>>()?
        };
        Self::new(one_line, right.parse()?)
    }
}

impl Serialize for AvoidanceSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> AvoidanceSpec {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        // 1342 is the cycle of 3142, which avoids 3421 and 4321
        let w: CycleWord = "1342".parse().unwrap();
        assert!(in_class(&w, &spec("3421,4321;213")));
        assert!(!in_class(&"1324".parse().unwrap(), &spec(";213")));
        // increasing word avoids any pattern with a descent on the cycle side
        let inc = CycleWord::increasing(6);
        assert!(!spec("21;213")
            .compile()
            .cycle_matcher()
            .contains(inc.word()));
        assert!(in_class(&CycleWord::increasing(1), &spec("4321;213")));
    }

    #[test]
    fn spec_text() {
        let s = spec("3421,4321;213");
        assert_eq!(s.to_string(), "3421,4321;213");
        assert_eq!(s.one_line_patterns().len(), 2);
        assert_eq!(spec(";213").to_string(), ";213");
        assert!(spec(";213").one_line_patterns().is_empty());
        assert_eq!(
            "4321,4321;213".parse::<AvoidanceSpec>(),
            Err(Error::DuplicatePattern("4321".into()))
        );
        assert!("4321".parse::<AvoidanceSpec>().is_err());
        assert!("4321;".parse::<AvoidanceSpec>().is_err());
        assert!("43x1;213".parse::<AvoidanceSpec>().is_err());
    }

    #[test]
    fn mirrors() {
        assert_eq!(spec("3421,4321;213").mirror(), spec("4312,4321;312"));
        assert_eq!(spec("1324,1423;213").mirror(), spec("1324,1342;312"));
        assert_eq!(spec("3412,4321;213").mirror(), spec("3412,4321;312"));
    }
}
