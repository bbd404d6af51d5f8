//! Permutations in one-line form and cyclic permutations in standard cycle form.
//!
//! Values and positions are 1-based throughout the public API: `p.apply(i)`
//! takes a position in `1..=n` and the stored one-line word is `π_1 … π_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Checks that `values` is a rearrangement of `1..=values.len()`.
pub(crate) fn check_bijection(values: &[usize]) -> Result<()> {
    let n = values.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v > n {
            return Err(Error::OutOfRange { value: v, n });
        }
        if seen[v] {
            return Err(Error::DuplicateValue(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// A bijection on `[n]` stored in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        check_bijection(&values)?;
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `π(i)` for a 1-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// True iff the orbit of 1 has size n.
    pub fn is_cyclic(&self) -> bool {
        let n = self.len();
        let mut x = 1;
        for step in 1..=n {
            x = self.apply(x);
            if x == 1 {
                return step == n;
            }
        }
        false
    }

    /// Walks the orbit of 1: `c_1 = 1`, `c_{i+1} = π(c_i)`.
    pub fn to_standard_cycle_word(&self) -> Result<CycleWord> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let mut word = Vec::with_capacity(self.len());
        let mut x = 1;
        for _ in 0..self.len() {
            word.push(x);
            x = self.apply(x);
        }
        Ok(CycleWord { word })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { values: inv }
    }
}

impl From<&CycleWord> for Permutation {
    fn from(w: &CycleWord) -> Self {
        w.to_permutation()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses space- or comma-separated 1-based values, e.g. `"5 3 4 1 2"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_numbers(s)?;
        Self::from_one_line(values)
    }
}

pub(crate) fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// Parses a run of single decimal digits, e.g. `"15234"`.
pub(crate) fn parse_digits(s: &str) -> Result<Vec<usize>> {
    if s.len() > 9 {
        return Err(Error::Parse(format!(
            "digit form is limited to 9 letters, got {}",
            s.len()
        )));
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
        })
        .collect()
}

/// The standard cycle form `c_1 c_2 … c_n` of a cyclic permutation, `c_1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleWord {
    word: Vec<usize>,
}

impl CycleWord {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        check_bijection(&word)?;
        if word[0] != 1 {
            return Err(Error::NotAnchored(word[0]));
        }
        Ok(Self { word })
    }

    pub(crate) fn new_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(check_bijection(&word).is_ok() && word[0] == 1);
        Self { word }
    }

    /// The increasing word `(1, 2, …, n)`.
    pub fn increasing(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `c_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// 1-based position of `value` in the word.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.word.iter().position(|&c| c == value).map(|i| i + 1)
    }

    /// The permutation sending each `c_i` to `c_{i+1}` (indices mod n).
    pub fn to_permutation(&self) -> Permutation {
        Permutation {
            values: one_line_of_cycle(&self.word),
        }
    }

    /// Compact digit form (`15234`), available only for n <= 9.
    pub fn digits(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.word.iter().map(|c| c.to_string()).collect())
    }
}

/// One-line form of the cyclic permutation whose cycle is `word`.
pub(crate) fn one_line_of_cycle(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut values = vec![0; n];
    for i in 0..n {
        values[word[i] - 1] = word[(i + 1) % n];
    }
    values
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `"(1,5,2,3,4)"` or, for n <= 9, the bare digit form `"15234"`.
impl FromStr for CycleWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if let Some(inner) = s.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse("missing closing parenthesis".into()))?;
            parse_numbers(inner)?
        } else {
            parse_digits(s)?
        };
        Self::new(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::from_one_line(parse_digits(s).unwrap()).unwrap()
    }

    fn w(s: &str) -> CycleWord {
        s.parse().unwrap()
    }

    #[test]
    fn one_line_validation() {
        assert_eq!(
            Permutation::from_one_line(vec![1]).unwrap().one_line(),
            &[1]
        );
        assert_eq!(p("24153").apply(1), 2);
        assert_eq!(p("24153").apply(5), 3);
        assert_eq!(
            Permutation::from_one_line(vec![2, 2, 1]),
            Err(Error::DuplicateValue(2))
        );
        assert_eq!(
            Permutation::from_one_line(vec![1, 4]),
            Err(Error::OutOfRange { value: 4, n: 2 })
        );
        assert_eq!(
            Permutation::from_one_line(vec![0, 1]),
            Err(Error::OutOfRange { value: 0, n: 2 })
        );
        assert_eq!(Permutation::from_one_line(vec![]), Err(Error::Empty));
    }

    #[test]
    fn cyclicity() {
        assert!(p("231").is_cyclic());
        assert!(!p("123").is_cyclic());
        assert!(!p("2143").is_cyclic());
        assert!(p("1").is_cyclic());
        assert!(p("21").is_cyclic());
        assert!(!p("12").is_cyclic());
    }

    #[test]
    fn standard_cycle_word() {
        assert_eq!(p("231").to_standard_cycle_word().unwrap(), w("123"));
        assert_eq!(p("312").to_standard_cycle_word().unwrap(), w("132"));
        assert_eq!(p("53412").to_standard_cycle_word().unwrap(), w("15234"));
        assert_eq!(p("2143").to_standard_cycle_word(), Err(Error::NotCyclic));
    }

    #[test]
    fn cycle_word_to_one_line() {
        assert_eq!(w("123").to_permutation(), p("231"));
        assert_eq!(w("15234").to_permutation(), p("53412"));
        assert_eq!(w("1").to_permutation(), p("1"));
    }

    #[test]
    fn inverses() {
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(p("1").inverse(), p("1"));
        assert_eq!(p("53412").inverse(), p("45231"));
    }

    #[test]
    fn cycle_word_validation() {
        assert_eq!(CycleWord::new(vec![2, 1]), Err(Error::NotAnchored(2)));
        assert_eq!(
            CycleWord::new(vec![1, 3]),
            Err(Error::OutOfRange { value: 3, n: 2 })
        );
        assert!(CycleWord::new(vec![]).is_err());
    }

    #[test]
    fn text_forms() {
        let c = w("(1,5,2,3,4)");
        assert_eq!(c, w("15234"));
        assert_eq!(c.to_string(), "(1,5,2,3,4)");
        assert_eq!(c.digits().as_deref(), Some("15234"));
        assert_eq!(w(" ( 1, 3 ,2 ) ").word(), &[1, 3, 2]);
        assert!("1234567890".parse::<CycleWord>().is_err());
        assert!("(1,2".parse::<CycleWord>().is_err());
        assert!("1a".parse::<CycleWord>().is_err());
        let long: CycleWord = "(1,2,3,4,5,6,7,8,9,10)".parse().unwrap();
        assert_eq!(long.digits(), None);

        let q: Permutation = "5 3 4 1 2".parse().unwrap();
        assert_eq!(q, p("53412"));
        assert_eq!(q.to_string(), "5 3 4 1 2");
        assert!("5 x 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn positions() {
        let c = w("15234");
        assert_eq!(c.at(2), 5);
        assert_eq!(c.position_of(2), Some(3));
        assert_eq!(c.position_of(9), None);
    }
}
