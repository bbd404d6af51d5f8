//! Shift-and-truncate bijections between cycle-word shapes, and sweeps that
//! check them.
//!
//! Every map is defined only on a structured set of cycle words and rejects
//! anything else with [`Error::DomainViolation`]. The forward maps drop a
//! block of consecutive letters from the cycle word and shift the survivors
//! down; the backward maps undo that. For the maps whose one-line image has
//! an explicit description, the forward map checks that description in debug
//! builds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::class::AvoidanceSpec;
use crate::error::{Error, Result};
use crate::perm::{one_line_of_cycle, CycleWord};

fn violation(map: MapId, w: &[usize], reason: impl Into<String>) -> Error {
    Error::DomainViolation {
        map: map.id(),
        word: format!("({})", w.iter().join(",")),
        reason: reason.into(),
    }
}

/// 1-based position of `v` in `w`.
fn pos(w: &[usize], v: usize) -> usize {
    w.iter().position(|&c| c == v).map_or(0, |i| i + 1)
}

/// One-line form of the image predicted from the input's one-line form:
/// keep `positions` of `pi`, subtract `shift` from each value except the
/// one at `special`, which is reduced by `special_shift`.
fn predicted_one_line(
    pi: &[usize],
    positions: impl IntoIterator<Item = usize>,
    shift: usize,
    special: usize,
    special_shift: usize,
) -> Vec<usize> {
    positions
        .into_iter()
        .map(|p| pi[p - 1] - if p == special { special_shift } else { shift })
        .collect()
}

/// `(1, c_2, …, c_{j-1}, 2, 3, …, m+1) ↦ (1, c_2-m, …, c_{j-1}-m)` with
/// `m = n-j+1`. Requires `2 < j <= n`, 2 at position `j`, and the letters
/// after 2 to be exactly `3, …, m+1` in order.
pub fn strip_increasing_tail(w: &CycleWord, j: usize) -> Result<CycleWord> {
    strip_tail(MapId::L22, w.word(), j)
}

fn strip_tail(map: MapId, c: &[usize], j: usize) -> Result<CycleWord> {
    let n = c.len();
    if j <= 2 || j > n {
        return Err(violation(
            map,
            c,
            format!("position {j} of 2 must satisfy 2 < j <= n"),
        ));
    }
    if c[j - 1] != 2 {
        return Err(violation(map, c, format!("2 is not at position {j}")));
    }
    let m = n - j + 1;
    if !c[j..].iter().copied().eq(3..=m + 1) {
        return Err(violation(
            map,
            c,
            format!("letters after 2 are not 3..={}", m + 1),
        ));
    }
    // with the tail fixed, the prefix is automatically {m+2, …, n}
    let out: Vec<usize> = std::iter::once(1)
        .chain(c[1..j - 1].iter().map(|&x| x - m))
        .collect();
    debug_assert_eq!(
        one_line_of_cycle(&out),
        predicted_one_line(
            &one_line_of_cycle(c),
            std::iter::once(1).chain(m + 2..=n),
            m,
            c[j - 2],
            1
        )
    );
    Ok(CycleWord::new_unchecked(out))
}

/// Inverse of [`strip_increasing_tail`]: `(1, d_2, …, d_l) ↦ (1, d_2+m, …, d_l+m, 2, 3, …, m+1)`.
pub fn append_increasing_tail(w: &CycleWord, m: usize) -> Result<CycleWord> {
    append_tail(MapId::L22, w.word(), m)
}

fn append_tail(map: MapId, d: &[usize], m: usize) -> Result<CycleWord> {
    if d.len() < 2 {
        return Err(violation(map, d, "needs a word of length at least 2"));
    }
    if m == 0 {
        return Err(violation(map, d, "shift m must be at least 1"));
    }
    let out = std::iter::once(1)
        .chain(d[1..].iter().map(|&x| x + m))
        .chain(2..=m + 1)
        .collect();
    Ok(CycleWord::new_unchecked(out))
}

/// `(1, m+2, …, n, 2, c_{r+1}, …, c_n) ↦ (1, c_{r+1}-1, …, c_n-1)` with
/// `3 <= r < n` the position of 2 and `m = n-r+1`.
pub fn strip_increasing_head(w: &CycleWord) -> Result<CycleWord> {
    strip_head(MapId::L23, w.word())
}

fn strip_head(map: MapId, c: &[usize]) -> Result<CycleWord> {
    let n = c.len();
    let r = pos(c, 2);
    if r < 3 || r >= n {
        return Err(violation(
            map,
            c,
            "2 must sit at a position r with 3 <= r < n",
        ));
    }
    let m = n - r + 1;
    if !c[1..r - 1].iter().copied().eq(m + 2..=n) {
        return Err(violation(
            map,
            c,
            format!("letters between 1 and 2 are not {}..={n}", m + 2),
        ));
    }
    let out: Vec<usize> = std::iter::once(1)
        .chain(c[r..].iter().map(|&x| x - 1))
        .collect();
    debug_assert_eq!(
        one_line_of_cycle(&out),
        predicted_one_line(&one_line_of_cycle(c), 2..=m + 1, 1, c[n - 1], 0)
    );
    Ok(CycleWord::new_unchecked(out))
}

/// Inverse of [`strip_increasing_head`] producing a word of length `n`.
pub fn prepend_increasing_head(w: &CycleWord, n: usize) -> Result<CycleWord> {
    prepend_head(MapId::L23, w.word(), n)
}

fn prepend_head(map: MapId, d: &[usize], n: usize) -> Result<CycleWord> {
    let m = d.len();
    if m < 2 || n < m + 2 {
        return Err(violation(
            map,
            d,
            format!("cannot lift a word of length {m} to n = {n}"),
        ));
    }
    let out = std::iter::once(1)
        .chain(m + 2..=n)
        .chain(std::iter::once(2))
        .chain(d[1..].iter().map(|&x| x + 1))
        .collect();
    Ok(CycleWord::new_unchecked(out))
}

/// `(1, 2, c_3, …, c_n) ↦ (1, c_3-1, …, c_n-1)`.
pub fn drop_leading_two(w: &CycleWord) -> Result<CycleWord> {
    let c = w.word();
    if c.len() < 2 || c[1] != 2 {
        return Err(violation(MapId::C24, c, "2 must directly follow 1"));
    }
    let n = c.len();
    let out: Vec<usize> = std::iter::once(1)
        .chain(c[2..].iter().map(|&x| x - 1))
        .collect();
    debug_assert_eq!(
        one_line_of_cycle(&out),
        predicted_one_line(&one_line_of_cycle(c), 2..=n, 1, c[n - 1], 0)
    );
    Ok(CycleWord::new_unchecked(out))
}

/// `(1, d_2, …, d_l) ↦ (1, 2, d_2+1, …, d_l+1)`.
pub fn insert_leading_two(w: &CycleWord) -> CycleWord {
    let out = [1, 2]
        .into_iter()
        .chain(w.word()[1..].iter().map(|&x| x + 1))
        .collect();
    CycleWord::new_unchecked(out)
}

/// The standard cycle word of the inverse permutation: the letters after 1
/// in reverse order.
pub fn inverse_symmetry_map(w: &CycleWord) -> CycleWord {
    let c = w.word();
    let out: Vec<usize> = std::iter::once(1)
        .chain(c[1..].iter().rev().copied())
        .collect();
    let out = CycleWord::new_unchecked(out);
    debug_assert_eq!(
        Some(&out),
        w.to_permutation()
            .inverse()
            .to_standard_cycle_word()
            .ok()
            .as_ref()
    );
    out
}

/// Builds `(1, 2, 3, …, r-1, n, r, n-1, r+1, n-2, …)`: value 2 second, `n`
/// at position `r`, then alternating from the low and high ends.
///
/// For `r = 3` or `3 < r < n-1` (and `n >= 6`) this is the only member of
/// `A_n(1324,1423; 213)` with 2 at position 2 and `n` at position `r`.
pub fn zigzag_construct(n: usize, r: usize) -> Result<CycleWord> {
    if n < 6 {
        return Err(Error::InvalidPosition {
            position: r,
            n,
            reason: "the construction needs n >= 6",
        });
    }
    if r < 3 || r + 1 >= n {
        return Err(Error::InvalidPosition {
            position: r,
            n,
            reason: "the cell is a single word only for 3 <= r < n-1",
        });
    }
    let mut word: Vec<usize> = (1..r).collect();
    for p in r..=n {
        let steps = p - r;
        word.push(if steps.is_multiple_of(2) {
            n - steps / 2
        } else {
            r - 1 + steps.div_ceil(2)
        });
    }
    let out = CycleWord::new_unchecked(word);
    debug_assert!(crate::class::in_class(
        &out,
        &"1324,1423;213".parse().expect("valid spec")
    ));
    Ok(out)
}

/// Identifiers of the maps, with their CLI tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapId {
    /// Drop the increasing run `2, 3, …, m+1` that ends the cycle word.
    L22,
    /// Drop the increasing run `m+2, …, n` between 1 and 2.
    L23,
    /// Drop a 2 that directly follows 1.
    C24,
    /// [`MapId::L22`] on words ending `…, 3, 2`.
    L45Rho,
    /// [`MapId::L22`] on words `(…, m+2, 2, 3, …, m+1)` with `3 < r < n`.
    L46Eta,
    /// [`MapId::L23`] on words `(1, n, 2, …)`.
    L43Rho,
    /// Reverse the letters after 1 (inverse permutation).
    Inv,
}

impl MapId {
    pub const ALL: [MapId; 7] = [
        Self::L22,
        Self::L23,
        Self::C24,
        Self::L45Rho,
        Self::L46Eta,
        Self::L43Rho,
        Self::Inv,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::L22 => "L22",
            Self::L23 => "L23",
            Self::C24 => "C24",
            Self::L45Rho => "L45_RHO",
            Self::L46Eta => "L46_ETA",
            Self::L43Rho => "L43_RHO",
            Self::Inv => "INV",
        }
    }

    /// Applies the map, inferring any parameters from the word itself.
    pub fn forward(self, w: &CycleWord) -> Result<CycleWord> {
        let c = w.word();
        let n = c.len();
        let r = pos(c, 2);
        match self {
            Self::L22 => strip_tail(self, c, r),
            Self::L23 => strip_head(self, c),
            Self::C24 => drop_leading_two(w),
            Self::L45Rho => {
                if n < 3 || r != n || c[n - 2] != 3 {
                    return Err(violation(self, c, "word must end with 3, 2"));
                }
                strip_tail(self, c, r)
            }
            Self::L46Eta => {
                if r <= 3 || r >= n {
                    return Err(violation(
                        self,
                        c,
                        "2 must sit at a position r with 3 < r < n",
                    ));
                }
                let m = n - r + 1;
                if c[r - 2] != m + 2 {
                    return Err(violation(
                        self,
                        c,
                        format!("letter before 2 must be {}", m + 2),
                    ));
                }
                strip_tail(self, c, r)
            }
            Self::L43Rho => {
                if r != 3 || n < 4 {
                    return Err(violation(self, c, "word must start 1, n, 2 with n >= 4"));
                }
                strip_head(self, c)
            }
            Self::Inv => Ok(inverse_symmetry_map(w)),
        }
    }

    /// Inverse of [`MapId::forward`], lifting `w` to a word of length `n`.
    pub fn backward(self, w: &CycleWord, n: usize) -> Result<CycleWord> {
        let d = w.word();
        let l = d.len();
        let wrong_len =
            |expected: &str| violation(self, d, format!("cannot lift to n = {n}: {expected}"));
        match self {
            Self::L22 => {
                if n <= l {
                    return Err(wrong_len("n must exceed the word length"));
                }
                append_tail(self, d, n - l)
            }
            Self::L23 => prepend_head(self, d, n),
            Self::C24 => {
                if n != l + 1 {
                    return Err(wrong_len("n must be the word length plus one"));
                }
                Ok(insert_leading_two(w))
            }
            Self::L45Rho => {
                if n != l + 1 || l < 2 || d[l - 1] != 2 {
                    return Err(wrong_len("word must end with 2 and be one letter shorter"));
                }
                append_tail(self, d, 1)
            }
            Self::L46Eta => {
                // image of a word with 2 at position r has length r-1
                if l < 3 || l + 2 > n || d[l - 1] != 2 {
                    return Err(wrong_len("word must end with 2 and have length 3..=n-2"));
                }
                append_tail(self, d, n - l)
            }
            Self::L43Rho => {
                if n != l + 2 {
                    return Err(wrong_len("n must be the word length plus two"));
                }
                prepend_head(self, d, n)
            }
            Self::Inv => {
                if n != l {
                    return Err(wrong_len("n must equal the word length"));
                }
                Ok(inverse_symmetry_map(w))
            }
        }
    }

    /// Word lengths that the images of size-`n` words can have.
    fn image_lengths(self, n: usize) -> Vec<usize> {
        match self {
            Self::L22 => (2..n).collect(),
            Self::L23 => (2..n.saturating_sub(1)).collect(),
            Self::C24 => n.checked_sub(1).into_iter().collect(),
            Self::L45Rho => (n >= 3).then(|| n - 1).into_iter().collect(),
            Self::L46Eta => (3..n.saturating_sub(1)).collect(),
            Self::L43Rho => (n >= 4).then(|| n - 2).into_iter().collect(),
            Self::Inv => vec![n],
        }
    }

    /// Every word of length `n` the map accepts.
    pub fn domain(self, n: usize) -> Vec<CycleWord> {
        all_cycle_words(n)
            .filter(|w| self.forward(w).is_ok())
            .collect()
    }

    /// Every word the backward map lifts to length `n`.
    pub fn codomain(self, n: usize) -> Vec<CycleWord> {
        self.image_lengths(n)
            .into_iter()
            .filter(|&l| l >= 1)
            .flat_map(all_cycle_words)
            .filter(|w| self.backward(w, n).is_ok())
            .collect()
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown map {s:?}")))
    }
}

impl Serialize for MapId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// All `(n-1)!` cycle words of length `n`, in lexicographic order.
pub fn all_cycle_words(n: usize) -> impl Iterator<Item = CycleWord> {
    (2..=n.max(1))
        .permutations(n.saturating_sub(1))
        .map(|tail| {
            let mut word = Vec::with_capacity(tail.len() + 1);
            word.push(1);
            word.extend(tail);
            CycleWord::new_unchecked(word)
        })
}

/// Result of checking that a map is a bijection from its size-`n` domain
/// onto its size-`n` codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub map: MapId,
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    /// Domain words `w` with `backward(forward(w)) != w`.
    pub forward_failures: usize,
    /// Codomain words `v` with `forward(backward(v)) != v`.
    pub backward_failures: usize,
    /// The forward image equals the codomain.
    pub onto: bool,
    pub holds: bool,
}

pub fn round_trip(map: MapId, n: usize) -> RoundTrip {
    let domain = map.domain(n);
    let codomain = map.codomain(n);
    let mut image = BTreeSet::new();
    let mut forward_failures = 0;
    for w in &domain {
        match map.forward(w) {
            Ok(v) => {
                if map.backward(&v, n).ok().as_ref() != Some(w) {
                    forward_failures += 1;
                }
                image.insert(v);
            }
            Err(_) => forward_failures += 1,
        }
    }
    let backward_failures = codomain
        .iter()
        .filter(|v| {
            map.backward(v, n)
                .and_then(|w| map.forward(&w))
                .map_or(true, |back| &back != *v)
        })
        .count();
    let onto = image.len() == codomain.len() && codomain.iter().all(|v| image.contains(v));
    RoundTrip {
        map,
        n,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        forward_failures,
        backward_failures,
        onto,
        holds: forward_failures == 0 && backward_failures == 0 && onto,
    }
}

/// Which domain words a transport check looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    Whole,
    /// Only words with 2 at cycle position at least this value.
    TwoAtOrAfter(usize),
}

impl Restriction {
    pub fn admits(self, w: &CycleWord) -> bool {
        match self {
            Self::Whole => true,
            Self::TwoAtOrAfter(p) => w.position_of(2).is_some_and(|r| r >= p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transport {
    pub map: MapId,
    pub spec_in: AvoidanceSpec,
    pub spec_out: AvoidanceSpec,
    pub restriction: Restriction,
    pub n: usize,
    pub domain_size: usize,
    pub in_class_count: usize,
    /// Words where membership of `w` in `spec_in` differs from membership
    /// of its image in `spec_out`.
    pub mismatches: usize,
    pub holds: bool,
}

/// True iff `w ∈ A(spec_in) ⟺ map(w) ∈ A(spec_out)` on the whole size-`n` domain.
pub fn transport_check(
    map: MapId,
    spec_in: &AvoidanceSpec,
    spec_out: &AvoidanceSpec,
    n: usize,
) -> bool {
    transport(map, spec_in, spec_out, Restriction::Whole, n).holds
}

pub fn transport(
    map: MapId,
    spec_in: &AvoidanceSpec,
    spec_out: &AvoidanceSpec,
    restriction: Restriction,
    n: usize,
) -> Transport {
    let (cin, cout) = (spec_in.compile(), spec_out.compile());
    let mut domain_size = 0;
    let mut in_class_count = 0;
    let mut mismatches = 0;
    for w in map.domain(n).into_iter().filter(|w| restriction.admits(w)) {
        domain_size += 1;
        let inside = cin.in_class(w.word());
        in_class_count += usize::from(inside);
        let image_inside = map.forward(&w).is_ok_and(|v| cout.in_class(v.word()));
        if inside != image_inside {
            mismatches += 1;
        }
    }
    Transport {
        map,
        spec_in: spec_in.clone(),
        spec_out: spec_out.clone(),
        restriction,
        n,
        domain_size,
        in_class_count,
        mismatches,
        holds: mismatches == 0,
    }
}

/// A `(map, spec_in, spec_out)` triple whose transport property is claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportCase {
    pub map: MapId,
    pub spec_in: AvoidanceSpec,
    pub spec_out: AvoidanceSpec,
    pub restriction: Restriction,
}

fn case(map: MapId, spec_in: &str, spec_out: &str, restriction: Restriction) -> TransportCase {
    TransportCase {
        map,
        spec_in: spec_in.parse().expect("valid spec"),
        spec_out: spec_out.parse().expect("valid spec"),
        restriction,
    }
}

/// The specs whose mirror images are checked under [`MapId::Inv`].
pub const MIRRORED_SPECS: [&str; 6] = [
    "3421,4321;213",
    "4321;213",
    "4312,4321;213",
    "3412,4321;213",
    "1324,1423;213",
    "132;213",
];

/// Every transport property the maps are expected to have.
pub fn transport_cases() -> Vec<TransportCase> {
    use Restriction::*;
    let mut cases = Vec::new();
    for s in [
        "3421,4321;213",
        "4321;213",
        "34521,4321;213",
        "43521,4321;213",
        "53421,4321;213",
    ] {
        cases.push(case(MapId::L22, s, s, Whole));
        cases.push(case(MapId::C24, s, s, Whole));
    }
    let s = "1324,1423;213";
    cases.push(case(MapId::L23, s, "132;213", TwoAtOrAfter(4)));
    cases.push(case(MapId::L43Rho, s, s, Whole));
    cases.push(case(MapId::L45Rho, s, s, Whole));
    cases.push(case(MapId::L46Eta, s, s, Whole));
    for s in MIRRORED_SPECS {
        let spec: AvoidanceSpec = s.parse().expect("valid spec");
        cases.push(TransportCase {
            map: MapId::Inv,
            spec_out: spec.mirror(),
            spec_in: spec,
            restriction: Whole,
        });
    }
    cases
}

/// The registered case for `(map, spec_in)`, or a same-spec check on the
/// whole domain (mirror spec for [`MapId::Inv`]) when none is registered.
pub fn default_case(map: MapId, spec_in: &AvoidanceSpec) -> TransportCase {
    transport_cases()
        .into_iter()
        .find(|c| c.map == map && &c.spec_in == spec_in)
        .unwrap_or_else(|| TransportCase {
            map,
            spec_out: if map == MapId::Inv {
                spec_in.mirror()
            } else {
                spec_in.clone()
            },
            spec_in: spec_in.clone(),
            restriction: Restriction::Whole,
        })
}
