//! Divisor functions, Lambert series and partitions into distinct parts with
//! the signed smallest-part statistic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::series::{geometric_factor, Monomial, MultiSeries, Rational, Truncation, VarId};

/// `sigma_m(n) = sum_{d | n} d^m`.
pub fn sigma(m: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma is defined for n >= 1");
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += Pow::pow(BigInt::from(d), m);
            let e = n / d;
            if e != d {
                acc += Pow::pow(BigInt::from(e), m);
            }
        }
        d += 1;
    }
    acc
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if n / d != d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `d(n, N)`: divisors of `n` that are at most `bound`.
pub fn divisor_count_bounded(n: u64, bound: u64) -> u64 {
    divisors(n).into_iter().filter(|&d| d <= bound).count() as u64
}

/// A value of `sigma_m(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorRecord {
    pub n: u64,
    pub m: u32,
    pub value: String,
}

impl DivisorRecord {
    pub fn new(m: u32, n: u64) -> Self {
        DivisorRecord { n, m, value: sigma(m, n).to_string() }
    }
}

/// Gap bound for partitions: `g(pi) - s(pi) <= N - 1`, or none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapBound {
    Bounded(u64),
    Unbounded,
}

impl GapBound {
    fn admits(self, largest: u64, smallest: u64) -> bool {
        match self {
            GapBound::Bounded(n) => largest - smallest < n,
            GapBound::Unbounded => true,
        }
    }
}

/// A partition into distinct parts, listed in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<u64>);

impl Partition {
    /// Accepts only strictly decreasing positive parts.
    pub fn new(parts: Vec<u64>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        ok.then_some(Partition(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `g(pi)`.
    pub fn largest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    /// `s(pi)`.
    pub fn smallest(&self) -> Option<u64> {
        self.0.last().copied()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n` into distinct parts with `g - s <= N - 1`, in
/// descending lexicographic order of the (decreasing) part lists.
pub fn partitions_distinct(n: u64, bound: GapBound) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition(Vec::new())];
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    for largest in (1..=n).rev() {
        parts.push(largest);
        extend(n - largest, largest, largest, bound, &mut parts, &mut out);
        parts.pop();
    }
    out
}

/// Appends parts below `prev` summing to `rest`, all within the gap bound
/// of `largest`.
fn extend(
    rest: u64,
    prev: u64,
    largest: u64,
    bound: GapBound,
    parts: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(parts.clone()));
        return;
    }
    // Parts strictly below prev; they must also satisfy the gap with largest.
    let lo = match bound {
        GapBound::Bounded(n) => (largest + 1).saturating_sub(n).max(1),
        GapBound::Unbounded => 1,
    };
    let hi = (prev - 1).min(rest);
    if hi < lo {
        return;
    }
    // rest must be reachable by distinct parts in [lo, hi]
    if max_distinct_sum(lo, hi) < rest {
        return;
    }
    for part in (lo..=hi).rev() {
        debug_assert!(bound.admits(largest, part));
        parts.push(part);
        extend(rest - part, part, largest, bound, parts, out);
        parts.pop();
    }
}

fn max_distinct_sum(lo: u64, hi: u64) -> u64 {
    (lo + hi) * (hi - lo + 1) / 2
}

/// `t(n, N)`: sum of smallest parts over odd-length partitions in `P(n, N)`
/// minus the same over even-length ones. Zero for `n <= 0`.
pub fn t_stat(n: i64, bound: GapBound) -> i64 {
    if n <= 0 {
        return 0;
    }
    partitions_distinct(n as u64, bound)
        .iter()
        .map(|p| {
            let s = p.smallest().unwrap_or(0) as i64;
            if p.len() % 2 == 1 {
                s
            } else {
                -s
            }
        })
        .sum()
}

/// `sum_{n=1}^{Q} sigma_m(n) q^n` built coefficient by coefficient.
pub fn lambert_series(m: u32, trunc: Truncation) -> MultiSeries {
    let cap = trunc.cap(VarId::Q);
    let terms = (1..=cap).map(|n| {
        (Monomial::var_pow(VarId::Q, n).exps, Rational::from_bigint(sigma(m, u64::from(n))))
    });
    MultiSeries::from_terms(terms, trunc)
}

/// `sum_{n>=1} n^m q^n / (1 - q^n)` built from geometric factors; the
/// independent route to [`lambert_series`].
pub fn lambert_series_geometric(m: u32, trunc: Truncation) -> Result<MultiSeries> {
    let cap = trunc.cap(VarId::Q);
    let mut acc = MultiSeries::zero(trunc);
    for n in 1..=cap {
        let coeff = Rational::from_bigint(Pow::pow(BigInt::from(n), m));
        let term = geometric_factor(i64::from(n), trunc)?
            .mul_monomial(&Monomial::new(coeff, Monomial::var_pow(VarId::Q, n).exps));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `sum_{k>=1} q^k / (1 - q^{2k})`, whose coefficients count odd divisors.
pub fn odd_divisor_series(trunc: Truncation) -> Result<MultiSeries> {
    let cap = trunc.cap(VarId::Q);
    let mut acc = MultiSeries::zero(trunc);
    for k in 1..=cap {
        let term = geometric_factor(2 * i64::from(k), trunc)?
            .mul_monomial(&Monomial::var_pow(VarId::Q, k));
        acc = &acc + &term;
    }
    Ok(acc)
}

pub fn odd_divisor_count(n: u64) -> u64 {
    divisors(n).into_iter().filter(|d| d % 2 == 1).count() as u64
}
