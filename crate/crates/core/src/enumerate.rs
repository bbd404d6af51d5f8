//! Generation and counting of avoidance classes.
//!
//! [`enumerate_class`] walks cycle-word prefixes `(1, c_2, …)` depth first in
//! lexicographic order. A prefix that already contains the cycle pattern is
//! cut, since every extension would contain it too; the one-line patterns are
//! checked on complete words. [`naive_count_oracle`] filters all `(n-1)!`
//! cycle words with no pruning and serves as the reference.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::class::{AvoidanceSpec, CompiledSpec};
use crate::error::{Error, Result};
use crate::perm::CycleWord;

/// Largest n accepted by [`sequence`] and the CLI.
pub const PRUNED_CAP: usize = 12;
/// Largest n accepted by [`naive_count_oracle`].
pub const NAIVE_CAP: usize = 10;

/// Streaming depth-first generator over one avoidance class.
#[derive(Debug, Clone)]
pub struct ClassIter {
    n: usize,
    spec: CompiledSpec,
    word: Vec<usize>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    floor: usize,
    done: bool,
}

impl ClassIter {
    pub fn new(n: usize, spec: &AvoidanceSpec) -> Self {
        Self::with_prefix(n, spec.compile(), &[1])
    }

    /// Restricts the walk to words starting with `prefix`, which must start
    /// with 1 and hold distinct values in `1..=n`.
    fn with_prefix(n: usize, spec: CompiledSpec, prefix: &[usize]) -> Self {
        assert!(n >= 1 && !prefix.is_empty() && prefix.len() <= n && prefix[0] == 1);
        let mut used = vec![false; n + 1];
        for &v in prefix {
            assert!(
                (1..=n).contains(&v) && !used[v],
                "invalid prefix {prefix:?}"
            );
            used[v] = true;
        }
        let done = spec.cycle_matcher().contains(prefix);
        let mut cursor = vec![2; n + 1];
        cursor[prefix.len()] = 2;
        Self {
            n,
            spec,
            word: prefix.to_vec(),
            used,
            cursor,
            floor: prefix.len(),
            done,
        }
    }

    fn backtrack(&mut self) {
        if self.word.len() <= self.floor {
            self.done = true;
            return;
        }
        if let Some(v) = self.word.pop() {
            self.used[v] = false;
        }
    }

    /// Pushes the next admissible letter at the current depth.
    fn advance(&mut self) -> bool {
        let d = self.word.len();
        while self.cursor[d] <= self.n {
            let v = self.cursor[d];
            self.cursor[d] += 1;
            if self.used[v] {
                continue;
            }
            self.word.push(v);
            if self
                .spec
                .cycle_matcher()
                .contains_ending_at_last(&self.word)
            {
                self.word.pop();
                continue;
            }
            self.used[v] = true;
            if d + 1 < self.n {
                self.cursor[d + 1] = 2;
            }
            return true;
        }
        false
    }
}

impl Iterator for ClassIter {
    type Item = CycleWord;

    fn next(&mut self) -> Option<CycleWord> {
        while !self.done {
            if self.word.len() == self.n {
                let hit = self
                    .spec
                    .one_line_avoids(&self.word)
                    .then(|| CycleWord::new_unchecked(self.word.clone()));
                self.backtrack();
                if hit.is_some() {
                    return hit;
                }
            } else if !self.advance() {
                self.backtrack();
            }
        }
        None
    }
}

/// Every member of `A_n(spec)`, once each, in lexicographic order.
pub fn enumerate_class(n: usize, spec: &AvoidanceSpec) -> ClassIter {
    ClassIter::new(n, spec)
}

/// `a_n(spec)`. The search is sharded by `c_2` and the shard counts summed.
pub fn count_class(n: usize, spec: &AvoidanceSpec) -> u64 {
    if n <= 2 {
        return ClassIter::new(n, spec).count() as u64;
    }
    let compiled = spec.compile();
    (2..=n)
        .into_par_iter()
        .map(|c2| ClassIter::with_prefix(n, compiled.clone(), &[1, c2]).count() as u64)
        .sum()
}

/// Members of the class listed by filtering every cycle word of length n.
pub fn naive_class(n: usize, spec: &AvoidanceSpec) -> Result<Vec<CycleWord>> {
    if n > NAIVE_CAP {
        return Err(Error::CapExceeded { n, cap: NAIVE_CAP });
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    let compiled = spec.compile();
    let mut members: Vec<CycleWord> = (2..=n)
        .permutations(n - 1)
        .map(|tail| {
            let mut word = Vec::with_capacity(n);
            word.push(1);
            word.extend(tail);
            word
        })
        .filter(|w| compiled.in_class(w))
        .map(CycleWord::new_unchecked)
        .collect();
    members.sort();
    Ok(members)
}

/// Reference count: no pruning, every cycle word tested with [`CompiledSpec::in_class`].
pub fn naive_count_oracle(n: usize, spec: &AvoidanceSpec) -> Result<u64> {
    naive_class(n, spec).map(|m| m.len() as u64)
}

/// Members of a class grouped by the cycle position `j` of the value 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionPartition {
    pub n: usize,
    pub spec: AvoidanceSpec,
    pub counts_by_j: BTreeMap<usize, u64>,
}

impl PositionPartition {
    pub fn total(&self) -> u64 {
        self.counts_by_j.values().sum()
    }

    pub fn count_at(&self, j: usize) -> u64 {
        self.counts_by_j.get(&j).copied().unwrap_or(0)
    }
}

pub fn partition_by_two(n: usize, spec: &AvoidanceSpec) -> Result<PositionPartition> {
    if n < 2 {
        return Err(Error::InvalidPosition {
            position: 2,
            n,
            reason: "the value 2 needs n >= 2",
        });
    }
    let mut counts_by_j: BTreeMap<usize, u64> = (2..=n).map(|j| (j, 0)).collect();
    for w in enumerate_class(n, spec) {
        let j = w.position_of(2).expect("cycle word holds every value");
        *counts_by_j.entry(j).or_default() += 1;
    }
    Ok(PositionPartition {
        n,
        spec: spec.clone(),
        counts_by_j,
    })
}

/// Members with 2 at cycle position `r`, split by whether `c_{r-1} = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlusMinusSplit {
    pub n: usize,
    pub r: usize,
    pub plus_count: u64,
    pub minus_count: u64,
}

pub fn split_plus_minus(n: usize, spec: &AvoidanceSpec, r: usize) -> Result<PlusMinusSplit> {
    if r < 4 || r > n {
        return Err(Error::InvalidPosition {
            position: r,
            n,
            reason: "the split is defined for 4 <= r <= n",
        });
    }
    let mut split = PlusMinusSplit {
        n,
        r,
        plus_count: 0,
        minus_count: 0,
    };
    for w in enumerate_class(n, spec).filter(|w| w.at(r) == 2) {
        if w.at(r - 1) == n {
            split.plus_count += 1;
        } else {
            split.minus_count += 1;
        }
    }
    Ok(split)
}

/// `(n, a_n)` for `n` in `n_min..=n_max`, with the default cap.
pub fn sequence(spec: &AvoidanceSpec, n_min: usize, n_max: usize) -> Result<Vec<(usize, u64)>> {
    sequence_with_cap(spec, n_min, n_max, PRUNED_CAP)
}

pub fn sequence_with_cap(
    spec: &AvoidanceSpec,
    n_min: usize,
    n_max: usize,
    cap: usize,
) -> Result<Vec<(usize, u64)>> {
    check_range(n_min, n_max, cap)?;
    Ok((n_min..=n_max).map(|n| (n, count_class(n, spec))).collect())
}

pub(crate) fn check_range(n_min: usize, n_max: usize, cap: usize) -> Result<()> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidRange {
            from: n_min,
            to: n_max,
        });
    }
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    Ok(())
}
