//! Shared strategies, oracles and law checks for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use pqseries::series::{Exps, NVARS};
use pqseries::{geometric_factor, Monomial, MultiSeries, Rational, Truncation, VarId};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// Cases per ring law.
pub const LAW_CASES: u32 = 100;

/// Variables exercised by the random series.
const LAW_VARS: [VarId; 3] = [VarId::Q, VarId::P, VarId::X];

pub fn law_trunc(cap: u32) -> Truncation {
    Truncation::from_caps(&[(VarId::Q, cap), (VarId::P, cap), (VarId::X, cap)]).unwrap()
}

fn arb_exps(cap: u32) -> impl Strategy<Value = Exps> {
    proptest::collection::vec(0..=cap, LAW_VARS.len()).prop_map(|v| {
        let mut e = [0u32; NVARS];
        for (var, x) in LAW_VARS.iter().zip(v) {
            e[var.index()] = x;
        }
        e
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

/// A series with at most 20 terms in `law_trunc(cap)`.
pub fn arb_series(cap: u32) -> impl Strategy<Value = MultiSeries> {
    proptest::collection::vec((arb_exps(cap), arb_rational()), 0..=20)
        .prop_map(move |terms| MultiSeries::from_terms(terms, law_trunc(cap)))
}

/// A series with constant term 1 or an arbitrary nonzero constant.
pub fn arb_unit_series(cap: u32) -> impl Strategy<Value = MultiSeries> {
    (arb_series(cap), arb_rational().prop_filter("nonzero", |c| !c.is_zero())).prop_map(move |(s, c)| {
        let t = law_trunc(cap);
        let shifted = &s - &MultiSeries::constant(s.constant_term(), t);
        &shifted + &MultiSeries::constant(c, t)
    })
}

/// No stored zero coefficient and no exponent beyond the caps.
pub fn canonical(s: &MultiSeries) -> bool {
    s.terms().all(|(e, c)| !c.is_zero() && s.trunc().contains(&e))
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn add_commutes((a, b): (MultiSeries, MultiSeries)) -> Result<(), TestCaseError> {
    let (x, y) = (&a + &b, &b + &a);
    check(x == y && canonical(&x), "a + b != b + a")
}

pub fn add_associates((a, b, c): (MultiSeries, MultiSeries, MultiSeries)) -> Result<(), TestCaseError> {
    check(&(&a + &b) + &c == &a + &(&b + &c), "(a + b) + c != a + (b + c)")
}

pub fn mul_commutes((a, b): (MultiSeries, MultiSeries)) -> Result<(), TestCaseError> {
    let (x, y) = (&a * &b, &b * &a);
    check(x == y && canonical(&x), "a b != b a")
}

pub fn mul_associates((a, b, c): (MultiSeries, MultiSeries, MultiSeries)) -> Result<(), TestCaseError> {
    check(&(&a * &b) * &c == &a * &(&b * &c), "(a b) c != a (b c)")
}

pub fn distributes((a, b, c): (MultiSeries, MultiSeries, MultiSeries)) -> Result<(), TestCaseError> {
    check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "a (b + c) != a b + a c")
}

pub fn additive_inverse(a: MultiSeries) -> Result<(), TestCaseError> {
    let z = &a + &(-&a);
    check(z.is_zero() && z.terms().next().is_none(), "a + (-a) != 0")
}

pub fn inverse_is_inverse(a: MultiSeries) -> Result<(), TestCaseError> {
    let inv = a.inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
    check(canonical(&inv) && &a * &inv == MultiSeries::one(*a.trunc()), "a * inverse(a) != 1")
}

/// Products computed at cap `u` agree with products at `2u` truncated to `u`.
pub fn truncation_sound((a, b, u): (MultiSeries, MultiSeries, u32)) -> Result<(), TestCaseError> {
    let small = law_trunc(u);
    let wide = (&a * &b).truncate(&small);
    let narrow = &a.truncate(&small) * &b.truncate(&small);
    check(wide == narrow && canonical(&narrow), "truncation changed a retained coefficient")
}

pub fn negative_geometric_factor((d, cap): (i64, u32)) -> Result<(), TestCaseError> {
    let t = Truncation::from_caps(&[(VarId::Q, cap)]).unwrap();
    let qd = MultiSeries::from_monomial(&Monomial::var_pow(VarId::Q, d as u32), t);
    let expected = &(-&qd) * &(&MultiSeries::one(t) - &qd).inverse().unwrap();
    check(geometric_factor(-d, t).unwrap() == expected, "geometric_factor(-d) mismatch")
}

fn run<S: Strategy>(strategy: S, law: fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: LAW_CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, law).map_err(|e| e.to_string())
}

/// Every ring law, each on `LAW_CASES` random instances.
pub fn ring_laws() -> Vec<(&'static str, Result<(), String>)> {
    let pair = || (arb_series(8), arb_series(8));
    let triple = || (arb_series(6), arb_series(6), arb_series(6));
    vec![
        ("add commutes", run(pair(), add_commutes)),
        ("add associates", run(triple(), add_associates)),
        ("mul commutes", run(pair(), mul_commutes)),
        ("mul associates", run(triple(), mul_associates)),
        ("mul distributes over add", run(triple(), distributes)),
        ("additive inverse", run(arb_series(8), additive_inverse)),
        ("mul by inverse is one", run(arb_unit_series(6), inverse_is_inverse)),
        (
            "truncation soundness",
            run((1u32..=4).prop_flat_map(|u| (arb_series(2 * u), arb_series(2 * u), Just(u))), truncation_sound),
        ),
        ("negative geometric factor", run((1i64..=12, 1u32..=40), negative_geometric_factor)),
    ]
}

/// `(t-exponent, q-exponent) -> coefficient` of a series in `t` and `q`.
pub fn tq_map(s: &MultiSeries) -> BTreeMap<(u32, u32), i64> {
    s.terms()
        .map(|(e, c)| {
            assert!(c.is_integer());
            ((e[VarId::T.index()], e[VarId::Q.index()]), c.to_string().parse().unwrap())
        })
        .collect()
}

/// Permutations of `1..=n` by Heap's algorithm.
pub fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `sum_sigma t^des q^maj` as `(des, maj) -> count`.
pub fn des_maj_oracle(n: usize) -> BTreeMap<(u32, u32), i64> {
    let mut m = BTreeMap::new();
    for p in heap_permutations(n) {
        let (mut des, mut maj) = (0, 0);
        for i in 1..n {
            if p[i - 1] > p[i] {
                des += 1;
                maj += i as u32;
            }
        }
        *m.entry((des, maj)).or_insert(0) += 1;
    }
    m
}

/// Eulerian numbers from `A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1)`.
pub fn eulerian_numbers(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for m in 1..=n {
        let mut next = vec![0i64; m];
        for k in 0..m {
            let a = if k < row.len() { (k as i64 + 1) * row[k] } else { 0 };
            let b = if k >= 1 && k - 1 < row.len() { (m - k) as i64 * row[k - 1] } else { 0 };
            next[k] = a + b;
        }
        row = next;
    }
    row
}

/// Partitions of `n` into distinct parts with largest - smallest <= gap,
/// by include/exclude over every element of `{1, ..., n}`.
pub fn brute_partitions(n: u32, gap: Option<u32>) -> BTreeSet<Vec<u32>> {
    fn walk(next: u32, left: u32, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(chosen.clone());
            return;
        }
        if next == 0 || next * (next + 1) / 2 < left {
            return;
        }
        if next <= left {
            chosen.push(next);
            walk(next - 1, left - next, chosen, out);
            chosen.pop();
        }
        walk(next - 1, left, chosen, out);
    }
    let mut all = Vec::new();
    walk(n, n, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|p| gap.is_none_or(|g| p[0] - p[p.len() - 1] <= g))
        .collect()
}

/// Divisors of `n` by trial division.
pub fn trial_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
