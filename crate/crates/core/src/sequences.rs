//! Exact integer sequences used as closed forms for class sizes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `P_k` with `P_0 = 0`, `P_1 = 1`, `P_k = 2 P_{k-1} + P_{k-2}`.
pub fn pell(k: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..k {
        let next = &a + &b * 2u32;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product C(n-k+i, i) is an integer
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// Closed-form families that class sizes are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// `F_{2n-3}`
    Fib2nMinus3,
    /// `2^{n-2}`
    Pow2nMinus2,
    /// `P_{n-1}`
    PellNMinus1,
    /// `C(n,3) + 1`
    BinomN3Plus1,
    /// `2n - 6`
    Linear2nMinus6,
    /// `n - 2`
    LinearNMinus2,
    /// `C(n-3,2) + 1`
    BinomNMinus3_2Plus1,
    /// `m - 1`, the size of the 132-avoiding class under 213 in cycle form
    OneLine132Count,
}

impl SequenceFamily {
    pub const ALL: [SequenceFamily; 8] = [
        Self::Fib2nMinus3,
        Self::Pow2nMinus2,
        Self::PellNMinus1,
        Self::BinomN3Plus1,
        Self::Linear2nMinus6,
        Self::LinearNMinus2,
        Self::BinomNMinus3_2Plus1,
        Self::OneLine132Count,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::Fib2nMinus3 => "FIB_2N_MINUS_3",
            Self::Pow2nMinus2 => "POW2_N_MINUS_2",
            Self::PellNMinus1 => "PELL_N_MINUS_1",
            Self::BinomN3Plus1 => "BINOM_N_3_PLUS_1",
            Self::Linear2nMinus6 => "LINEAR_2N_MINUS_6",
            Self::LinearNMinus2 => "LINEAR_N_MINUS_2",
            Self::BinomNMinus3_2Plus1 => "BINOM_N_MINUS_3_2_PLUS_1",
            Self::OneLine132Count => "ONE_LINE_132_COUNT",
        }
    }

    pub fn valid_n_min(self) -> usize {
        match self {
            Self::Fib2nMinus3 | Self::Pow2nMinus2 | Self::OneLine132Count => 2,
            Self::PellNMinus1 => 1,
            Self::BinomN3Plus1 | Self::LinearNMinus2 => 3,
            Self::BinomNMinus3_2Plus1 => 4,
            Self::Linear2nMinus6 => 6,
        }
    }

    /// Human-readable formula.
    pub fn formula(self) -> &'static str {
        match self {
            Self::Fib2nMinus3 => "F(2n-3)",
            Self::Pow2nMinus2 => "2^(n-2)",
            Self::PellNMinus1 => "P(n-1)",
            Self::BinomN3Plus1 => "C(n,3)+1",
            Self::Linear2nMinus6 => "2n-6",
            Self::LinearNMinus2 => "n-2",
            Self::BinomNMinus3_2Plus1 => "C(n-3,2)+1",
            Self::OneLine132Count => "n-1",
        }
    }
}

pub fn closed_form(family: SequenceFamily, n: usize) -> Result<BigUint> {
    let min = family.valid_n_min();
    if n < min {
        return Err(Error::BelowRange {
            family: family.id(),
            n,
            min,
        });
    }
    Ok(match family {
        SequenceFamily::Fib2nMinus3 => fibonacci(2 * n - 3),
        SequenceFamily::Pow2nMinus2 => BigUint::one() << (n - 2),
        SequenceFamily::PellNMinus1 => pell(n - 1),
        SequenceFamily::BinomN3Plus1 => binomial(n, 3) + 1u32,
        SequenceFamily::Linear2nMinus6 => BigUint::from(2 * n - 6),
        SequenceFamily::LinearNMinus2 => BigUint::from(n - 2),
        SequenceFamily::BinomNMinus3_2Plus1 => binomial(n - 3, 2) + 1u32,
        SequenceFamily::OneLine132Count => BigUint::from(n - 1),
    })
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown sequence family {s:?}")))
    }
}

impl Serialize for SequenceFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// Writes a `BigUint` as a JSON number when it fits in `u128`, else as a
/// decimal string.
pub(crate) fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u128::try_from(v) {
        Ok(x) => s.serialize_u128(x),
        Err(_) => s.collect_str(v),
    }
}
