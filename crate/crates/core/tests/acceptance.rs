//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails at the end if any criterion failed.
//!
//! Run with `cargo test -p cycavoid --test acceptance -- --nocapture`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use cycavoid::bijection::{round_trip, transport, transport_cases, zigzag_construct, MapId};
use cycavoid::enumerate::naive_class;
use cycavoid::sequences::{closed_form, SequenceFamily};
use cycavoid::shape::{increasing_after_two, plus_minus_shape, splits_around_two};
use cycavoid::{
    count_class, enumerate_class, naive_count_oracle, partition_by_two, split_plus_minus,
    AvoidanceSpec, CycleWord,
};

const FIB_ODD: [u64; 9] = [1, 2, 5, 13, 34, 89, 233, 610, 1597];
const BINOM3_PLUS_1: [u64; 8] = [2, 5, 11, 21, 36, 57, 85, 121];
const POW2: [u64; 9] = [1, 2, 4, 8, 16, 32, 64, 128, 256];
const PELL: [u64; 9] = [1, 2, 5, 12, 29, 70, 169, 408, 985];

const TAUS: [&str; 3] = ["34521", "43521", "53421"];

/// Every spec the criteria mention, 213 side.
const SPECS_213: [&str; 9] = [
    "3421,4321;213",
    "4321;213",
    "4312,4321;213",
    "3412,4321;213",
    "1324,1423;213",
    "34521,4321;213",
    "43521,4321;213",
    "53421,4321;213",
    "132;213",
];

fn spec(s: &str) -> AvoidanceSpec {
    s.parse().unwrap()
}

fn all_specs() -> Vec<AvoidanceSpec> {
    SPECS_213
        .iter()
        .map(|s| spec(s))
        .flat_map(|s| [s.mirror(), s])
        .collect()
}

type Check = fn(&mut Criterion);

#[derive(Default)]
struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: String, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn expect(&mut self, what: String, ok: bool) {
        if !ok {
            self.failures.push(what);
        }
    }
}

fn counts(s: &AvoidanceSpec, ns: std::ops::RangeInclusive<usize>) -> Vec<u64> {
    ns.map(|n| count_class(n, s)).collect()
}

fn closed(family: SequenceFamily, ns: std::ops::RangeInclusive<usize>) -> Vec<u64> {
    ns.map(|n| u64::try_from(closed_form(family, n).unwrap()).unwrap())
        .collect()
}

fn c1(c: &mut Criterion) {
    let s = spec("3421,4321;213");
    c.expect_eq("a_n".into(), counts(&s, 2..=10), FIB_ODD.to_vec());
    c.expect_eq(
        "F(2n-3)".into(),
        closed(SequenceFamily::Fib2nMinus3, 2..=10),
        FIB_ODD.to_vec(),
    );
}

fn c2(c: &mut Criterion) {
    let s = spec("1324,1423;213");
    c.expect_eq("a_n".into(), counts(&s, 3..=10), BINOM3_PLUS_1.to_vec());
    c.expect_eq(
        "C(n,3)+1".into(),
        closed(SequenceFamily::BinomN3Plus1, 3..=10),
        BINOM3_PLUS_1.to_vec(),
    );
}

fn c3(c: &mut Criterion) {
    c.expect_eq(
        "a_n".into(),
        counts(&spec("4321;213"), 2..=10),
        FIB_ODD.to_vec(),
    );
}

fn c4(c: &mut Criterion) {
    for tau in TAUS {
        let s = spec(&format!("{tau},4321;213"));
        c.expect_eq(
            format!("tau={tau}"),
            counts(&s, 2..=9),
            FIB_ODD[..8].to_vec(),
        );
    }
}

fn c5(c: &mut Criterion) {
    let s = spec("4312,4321;213");
    c.expect_eq("a_n".into(), counts(&s, 2..=10), POW2.to_vec());
    c.expect_eq(
        "2^(n-2)".into(),
        closed(SequenceFamily::Pow2nMinus2, 2..=10),
        POW2.to_vec(),
    );
    for n in 5..=10 {
        let p = partition_by_two(n, &s).unwrap();
        for j in 3..n {
            c.expect_eq(format!("n={n} j={j}"), p.count_at(j), 0);
        }
    }
}

fn c6(c: &mut Criterion) {
    let s = spec("3412,4321;213");
    let a = counts(&s, 2..=10);
    c.expect_eq("a_n".into(), a.clone(), PELL.to_vec());
    c.expect_eq(
        "P(n-1)".into(),
        closed(SequenceFamily::PellNMinus1, 2..=10),
        PELL.to_vec(),
    );
    // a[i] holds a_{i+2}
    for n in 4..=10 {
        let i = n - 2;
        c.expect_eq(format!("recursion n={n}"), a[i], 2 * a[i - 1] + a[i - 2]);
    }
}

fn c7(c: &mut Criterion) {
    let pairs = [
        ("4312,4321;312", "3421,4321;213"),
        ("3421,4321;312", "4312,4321;213"),
        ("3412,4321;312", "3412,4321;213"),
        ("1324,1342;312", "1324,1423;213"),
    ];
    for (mirror, base) in pairs {
        let (m, b) = (spec(mirror), spec(base));
        c.expect_eq(
            format!("{mirror} vs {base}"),
            counts(&m, 2..=8),
            counts(&b, 2..=8),
        );
    }
    for (mirror, base) in pairs {
        c.expect_eq(
            format!("mirror of {base}"),
            spec(base).mirror().to_string(),
            mirror.to_string(),
        );
    }
}

fn c8(c: &mut Criterion) {
    for s in all_specs() {
        for n in 2..=9 {
            let p = partition_by_two(n, &s).unwrap();
            c.expect_eq(format!("{s} n={n} sum"), p.total(), count_class(n, &s));
        }
    }
    let s = spec("1324,1423;213");
    for n in 6..=10 {
        let p = partition_by_two(n, &s).unwrap();
        c.expect_eq(format!("j=2 n={n}"), p.count_at(2), 2 * n as u64 - 6);
    }
    for n in 3..=10 {
        let p = partition_by_two(n, &s).unwrap();
        c.expect_eq(format!("j=n n={n}"), p.count_at(n), n as u64 - 2);
    }
    for n in 6..=10 {
        let plus: u64 = (4..=n)
            .map(|r| split_plus_minus(n, &s, r).unwrap().plus_count)
            .sum();
        let want = closed_form(SequenceFamily::BinomNMinus3_2Plus1, n).unwrap();
        c.expect_eq(format!("plus sum n={n}"), BigUint::from(plus), want);
    }
}

fn c9(c: &mut Criterion) {
    for map in [
        MapId::L22,
        MapId::L23,
        MapId::C24,
        MapId::L46Eta,
        MapId::Inv,
    ] {
        for n in 1..=9 {
            let rt = round_trip(map, n);
            c.expect(format!("round trip {map} n={n}: {rt:?}"), rt.holds);
        }
    }
    for case in transport_cases() {
        for n in 1..=8 {
            let t = transport(case.map, &case.spec_in, &case.spec_out, case.restriction, n);
            c.expect(
                format!(
                    "transport {} {} -> {} n={n}: {} mismatches",
                    case.map, case.spec_in, case.spec_out, t.mismatches
                ),
                t.holds,
            );
        }
    }
}

fn c10(c: &mut Criterion) {
    for s in SPECS_213.map(spec) {
        for n in 1..=9 {
            for w in enumerate_class(n, &s) {
                c.expect(format!("split sets {s} {w}"), splits_around_two(&w));
            }
        }
    }
    let four = spec("4321;213");
    for n in 5..=9 {
        for w in enumerate_class(n, &four).filter(|w| w.at(2) != 2) {
            c.expect(format!("after two {w}"), increasing_after_two(&w));
        }
    }
    let s = spec("1324,1423;213");
    for n in 6..=9 {
        for w in enumerate_class(n, &s) {
            c.expect(format!("plus/minus {w}"), plus_minus_shape(&w));
        }
        let valid_r = std::iter::once(3).chain(4..n - 1);
        for r in valid_r {
            let cell: Vec<CycleWord> = enumerate_class(n, &s)
                .filter(|w| w.at(2) == 2 && w.at(r) == n)
                .collect();
            let built = zigzag_construct(n, r).unwrap();
            c.expect_eq(format!("zigzag n={n} r={r}"), cell, vec![built]);
        }
    }
}

fn c11(c: &mut Criterion) {
    for s in all_specs() {
        for n in 1..=8 {
            let pruned: BTreeSet<CycleWord> = enumerate_class(n, &s).collect();
            let naive: BTreeSet<CycleWord> = naive_class(n, &s).unwrap().into_iter().collect();
            c.expect_eq(format!("{s} n={n} sets"), &pruned, &naive);
            c.expect_eq(
                format!("{s} n={n} counts"),
                count_class(n, &s),
                naive_count_oracle(n, &s).unwrap(),
            );
        }
    }
}

fn c12(c: &mut Criterion) {
    let s = spec("132;213");
    for m in 2..=9 {
        c.expect_eq(
            format!("m={m}"),
            naive_count_oracle(m, &s).unwrap(),
            m as u64 - 1,
        );
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Check); 12] = [
        ("a_n(3421,4321;213) = F(2n-3), n=2..10", c1),
        ("a_n(1324,1423;213) = C(n,3)+1, n=3..10", c2),
        ("a_n(4321;213) = F(2n-3), n=2..10", c3),
        ("a_n(tau,4321;213) = F(2n-3) for three tau, n=2..9", c4),
        ("a_n(4312,4321;213) = 2^(n-2), middle cells empty", c5),
        ("a_n(3412,4321;213) = P(n-1) and its recursion", c6),
        ("mirror classes under 312 match, n=2..8", c7),
        ("partition identities", c8),
        ("bijection round trips n<=9, transports n<=8", c9),
        ("shape predicates n<=9, zigzag cells n=6..9", c10),
        ("pruned enumeration equals naive oracle, n<=8", c11),
        ("a_m(132;213) = m-1, m=2..9", c12),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let mut c = Criterion::default();
        run(&mut c);
        if c.failures.is_empty() {
            println!("PASS criterion {}: {name}", k + 1);
        } else {
            println!("FAIL criterion {}: {name}", k + 1);
            for f in c.failures.iter().take(5) {
                println!("    {f}");
            }
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
