//! Cyclic permutations avoiding patterns in one-line form and in standard
//! cycle form.
//!
//! A cyclic permutation of `[n]` has a one-line form `π_1 … π_n` and a
//! standard cycle form `(1, c_2, …, c_n)`. The class `A_n(σ_1,…,σ_k; τ)`
//! collects those whose one-line form avoids every `σ_i` and whose standard
//! cycle word avoids `τ`. This crate enumerates such classes, implements the
//! shift-and-truncate bijections between their cells, and checks class
//! sizes against closed forms (Fibonacci, Pell, binomial).

pub mod bijection;
pub mod class;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod output;
pub mod pattern;
pub mod perm;
pub mod sequences;
pub mod shape;
pub mod verify;

pub use class::{in_class, AvoidanceSpec};
pub use enumerate::{
    count_class, enumerate_class, naive_count_oracle, partition_by_two, sequence, split_plus_minus,
};
pub use error::{Error, Result};
pub use pattern::{contains, find_occurrence, Pattern};
pub use perm::{CycleWord, Permutation};
