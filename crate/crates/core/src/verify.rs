//! Brute-force verification of closed forms.
//!
//! Each registry entry pairs a brute-force quantity (a class size, one cell
//! of the partition by the position of 2, or the plus-part sum) with a
//! [`SequenceFamily`]. [`verify`] evaluates both for every n in a range.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::class::AvoidanceSpec;
use crate::enumerate::{check_range, count_class, partition_by_two, split_plus_minus, PRUNED_CAP};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::sequences::{closed_form, serialize_biguint, SequenceFamily};

/// What gets counted by brute force for each n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `a_n(spec)`
    ClassSize,
    /// Members with 2 at cycle position 2.
    TwoAtSecond,
    /// Members with 2 at cycle position n.
    TwoAtLast,
    /// Members with 2 at position r and `c_{r-1} = n`, summed over `4 <= r <= n`.
    PlusSum,
}

impl Quantity {
    pub fn measure(self, n: usize, spec: &AvoidanceSpec) -> Result<u64> {
        Ok(match self {
            Self::ClassSize => count_class(n, spec),
            Self::TwoAtSecond => partition_by_two(n, spec)?.count_at(2),
            Self::TwoAtLast => partition_by_two(n, spec)?.count_at(n),
            Self::PlusSum => (4..=n)
                .map(|r| split_plus_minus(n, spec, r).map(|s| s.plus_count))
                .sum::<Result<u64>>()?,
        })
    }
}

/// One verifiable claim: a quantity over a spec equals a closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub spec: AvoidanceSpec,
    pub quantity: Quantity,
    pub family: SequenceFamily,
    /// First n the claim is checked from when no range start is given.
    pub default_from: usize,
}

/// Registry ids accepted by [`lookup`]. `-mirror` may be appended to any id
/// whose quantity is a class size.
pub const THEOREM_IDS: [&str; 10] = [
    "T3.4", "C3.5", "C3.6", "T3.7", "T3.8", "T4.8", "L4.4", "L4.7", "E3", "D132",
];

fn spec(s: &str) -> AvoidanceSpec {
    s.parse().expect("registry specs are well formed")
}

/// Checks that `tau` has length at least 4 and ends with the letters 2, 1.
pub fn validate_tau(tau: &Pattern) -> Result<()> {
    let l = tau.letters();
    if l.len() < 4 {
        return Err(Error::InvalidTau {
            tau: tau.to_string(),
            reason: "length must be at least 4",
        });
    }
    if l[l.len() - 2..] != [2, 1] {
        return Err(Error::InvalidTau {
            tau: tau.to_string(),
            reason: "last two letters must be 2 then 1",
        });
    }
    Ok(())
}

/// Resolves a registry id. `tau` is required by `T3.4` and ignored otherwise.
pub fn lookup(id: &str, tau: Option<&Pattern>) -> Result<Claim> {
    let (base, mirror) = match id.strip_suffix("-mirror") {
        Some(base) => (base, true),
        None => (id, false),
    };
    use Quantity::*;
    use SequenceFamily::*;
    let (s, quantity, family, default_from) = match base {
        "T3.4" => {
            let tau = tau.ok_or_else(|| Error::InvalidTau {
                tau: String::new(),
                reason: "T3.4 needs a tau pattern",
            })?;
            validate_tau(tau)?;
            let four = spec("4321;213");
            let mut one_line = vec![tau.clone()];
            if tau != &four.one_line_patterns()[0] {
                one_line.push(four.one_line_patterns()[0].clone());
            }
            let s = AvoidanceSpec::new(one_line, four.cycle_pattern().clone())?;
            (s, ClassSize, Fib2nMinus3, 2)
        }
        "C3.5" => (spec("3421,4321;213"), ClassSize, Fib2nMinus3, 2),
        "C3.6" => (spec("4321;213"), ClassSize, Fib2nMinus3, 2),
        "T3.7" => (spec("4312,4321;213"), ClassSize, Pow2nMinus2, 2),
        "T3.8" => (spec("3412,4321;213"), ClassSize, PellNMinus1, 2),
        "T4.8" => (spec("1324,1423;213"), ClassSize, BinomN3Plus1, 3),
        "L4.4" => (spec("1324,1423;213"), TwoAtSecond, Linear2nMinus6, 6),
        "L4.7" => (spec("1324,1423;213"), TwoAtLast, LinearNMinus2, 3),
        "E3" => (spec("1324,1423;213"), PlusSum, BinomNMinus3_2Plus1, 4),
        "D132" => (spec("132;213"), ClassSize, OneLine132Count, 2),
        _ => return Err(Error::UnknownTheorem(id.to_string())),
    };
    if mirror && quantity != ClassSize {
        return Err(Error::UnknownTheorem(id.to_string()));
    }
    Ok(Claim {
        id: id.to_string(),
        spec: if mirror { s.mirror() } else { s },
        quantity,
        family,
        default_from,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub brute_force_count: u64,
    #[serde(serialize_with = "serialize_biguint")]
    pub closed_form_value: BigUint,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub spec: AvoidanceSpec,
    pub quantity: Quantity,
    pub family: SequenceFamily,
    pub rows: Vec<ReportRow>,
    pub all_match: bool,
    pub notes: Vec<String>,
}

/// Evaluates `claim` for every n in `n_min..=n_max`.
pub fn verify(claim: &Claim, n_min: usize, n_max: usize) -> Result<VerificationReport> {
    check_range(n_min, n_max, PRUNED_CAP)?;
    let rows = (n_min..=n_max)
        .map(|n| {
            let closed_form_value = closed_form(claim.family, n)?;
            let brute_force_count = claim.quantity.measure(n, &claim.spec)?;
            Ok(ReportRow {
                n,
                brute_force_count,
                matches: BigUint::from(brute_force_count) == closed_form_value,
                closed_form_value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut notes = Vec::new();
    if claim.family == SequenceFamily::PellNMinus1 {
        notes.push("Pell numbers: P(0)=0, P(1)=1, P(k)=2P(k-1)+P(k-2)".to_string());
    }
    Ok(VerificationReport {
        theorem: claim.id.clone(),
        spec: claim.spec.clone(),
        quantity: claim.quantity,
        family: claim.family,
        all_match: rows.iter().all(|r| r.matches),
        rows,
        notes,
    })
}

/// Looks up `id` and verifies it over `n_min..=n_max`.
pub fn verify_theorem(
    id: &str,
    tau: Option<&Pattern>,
    n_min: usize,
    n_max: usize,
) -> Result<VerificationReport> {
    verify(&lookup(id, tau)?, n_min, n_max)
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {}  spec {}  closed form {}",
            self.theorem,
            self.spec,
            self.family.formula()
        )?;
        writeln!(
            f,
            "{:>4}  {:>12}  {:>12}  match",
            "n", "brute force", "closed form"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>12}  {:>12}  {}",
                r.n,
                r.brute_force_count,
                r.closed_form_value.to_string(),
                if r.matches { "yes" } else { "NO" }
            )?;
        }
        writeln!(
            f,
            "all match: {}",
            if self.all_match { "yes" } else { "no" }
        )?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}
