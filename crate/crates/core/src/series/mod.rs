//! Truncated multivariate formal power series over exact rationals.
//!
//! A [`MultiSeries`] lives in a box [`Truncation`]: for every variable `v` only
//! exponents `0..=cap(v)` are retained. Exponents are never negative, so every
//! retained coefficient of a sum, product or inverse is exact.
//!
//! Exponent vectors are packed into a `u64`, ten bits per variable. Caps are
//! limited to [`MAX_CAP`] so that the sum of two in-box vectors never carries
//! between fields; that lets the product kernel add keys directly and test
//! box membership with a single mask.

pub mod rational;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Bound, Mul, Neg, Sub};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use rational::Rational;

use crate::error::{Error, Result};

pub const NVARS: usize = 6;
/// Largest per-variable cap a [`Truncation`] accepts.
pub const MAX_CAP: u32 = 255;

const FIELD_BITS: u32 = 10;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;
/// Bit 9 of every field.
const HIGH: u64 = {
    let mut h = 0u64;
    let mut i = 0;
    while i < NVARS {
        h |= 512 << (FIELD_BITS as usize * i);
        i += 1;
    }
    h
};

/// The closed, ordered set of formal variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Q = 0,
    P = 1,
    X = 2,
    Z = 3,
    A = 4,
    T = 5,
}

impl VarId {
    pub const ALL: [VarId; NVARS] = [VarId::Q, VarId::P, VarId::X, VarId::Z, VarId::A, VarId::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["q", "p", "x", "z", "a", "t"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<VarId> {
        VarId::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`VarId::index`].
pub type Exps = [u32; NVARS];

fn pack(e: &Exps) -> u64 {
    e.iter()
        .enumerate()
        .fold(0, |k, (i, &x)| k | (u64::from(x) << (FIELD_BITS as usize * i)))
}

fn unpack(k: u64) -> Exps {
    let mut e = [0u32; NVARS];
    for (i, x) in e.iter_mut().enumerate() {
        *x = ((k >> (FIELD_BITS as usize * i)) & FIELD_MASK) as u32;
    }
    e
}

/// `Some(e - f)` when `f <= e` componentwise (both packed, fields below 512).
fn packed_sub(e: u64, f: u64) -> Option<u64> {
    let d = (e | HIGH).wrapping_sub(f);
    (d & HIGH == HIGH).then_some(d ^ HIGH)
}

/// Per-variable exponent caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    order: Exps,
}

impl Truncation {
    pub fn new(order: Exps) -> Result<Self> {
        for v in VarId::ALL {
            let cap = order[v.index()];
            if cap > MAX_CAP {
                return Err(Error::CapTooLarge { var: v.name(), cap, max: MAX_CAP });
            }
        }
        Ok(Truncation { order })
    }

    /// Box with the listed caps; unlisted variables get cap 0.
    pub fn from_caps(caps: &[(VarId, u32)]) -> Result<Self> {
        let mut order = [0; NVARS];
        for &(v, c) in caps {
            order[v.index()] = c;
        }
        Self::new(order)
    }

    pub fn uniform(cap: u32) -> Result<Self> {
        Self::new([cap; NVARS])
    }

    pub fn cap(&self, v: VarId) -> u32 {
        self.order[v.index()]
    }

    pub fn order(&self) -> &Exps {
        &self.order
    }

    pub fn with_cap(&self, v: VarId, cap: u32) -> Result<Self> {
        let mut order = self.order;
        order[v.index()] = cap;
        Self::new(order)
    }

    pub fn raised(&self, v: VarId, by: u32) -> Result<Self> {
        self.with_cap(v, self.cap(v).saturating_add(by))
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &Truncation) -> Truncation {
        let mut order = self.order;
        for (o, x) in order.iter_mut().zip(other.order) {
            *o = (*o).min(x);
        }
        Truncation { order }
    }

    pub fn contains(&self, e: &Exps) -> bool {
        e.iter().zip(self.order).all(|(x, c)| *x <= c)
    }

    /// Packed-key membership test; fields of `key` must be below 512.
    fn contains_packed(&self, key: u64) -> bool {
        (key.wrapping_add(self.bias())) & HIGH == 0
    }

    fn bias(&self) -> u64 {
        self.order
            .iter()
            .enumerate()
            .fold(0, |b, (i, &c)| b | (u64::from(511 - c) << (FIELD_BITS as usize * i)))
    }
}

/// Serialized as a map `{"q": cap, "p": cap, ...}` in variable order.
impl Serialize for Truncation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(NVARS))?;
        for v in VarId::ALL {
            map.serialize_entry(v.name(), &self.cap(v))?;
        }
        map.end()
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = VarId::ALL
            .iter()
            .filter(|v| self.cap(**v) > 0)
            .map(|v| format!("{}<={}", v, self.cap(*v)))
            .collect();
        if parts.is_empty() {
            f.write_str("constants")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// A rational coefficient times a power product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub exps: Exps,
}

impl Monomial {
    pub fn new(coeff: Rational, exps: Exps) -> Self {
        Monomial { coeff, exps }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(coeff: Rational) -> Self {
        Monomial { coeff, exps: [0; NVARS] }
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial { coeff: Rational::one(), exps }
    }

    pub fn from_powers(coeff: Rational, powers: &[(VarId, u32)]) -> Self {
        let mut exps = [0; NVARS];
        for &(v, e) in powers {
            exps[v.index()] += e;
        }
        Monomial { coeff, exps }
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.exps[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = e.saturating_add(o);
        }
        Monomial { coeff: &self.coeff * &other.coeff, exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e = e.saturating_mul(k);
        }
        Monomial { coeff: self.coeff.pow(k), exps }
    }

    pub fn scaled(&self, c: &Rational) -> Monomial {
        Monomial { coeff: &self.coeff * c, exps: self.exps }
    }
}

/// A truncated power series in the variables of [`VarId`].
///
/// Invariants: no stored coefficient is zero and every stored exponent vector
/// lies inside `trunc`.
#[derive(Clone)]
pub struct MultiSeries {
    trunc: Truncation,
    terms: BTreeMap<u64, Rational>,
}

impl MultiSeries {
    pub fn zero(trunc: Truncation) -> Self {
        MultiSeries { trunc, terms: BTreeMap::new() }
    }

    pub fn one(trunc: Truncation) -> Self {
        Self::constant(Rational::one(), trunc)
    }

    pub fn constant(c: Rational, trunc: Truncation) -> Self {
        Self::from_monomial(&Monomial::constant(c), trunc)
    }

    pub fn from_int(c: i64, trunc: Truncation) -> Self {
        Self::constant(Rational::from_int(c), trunc)
    }

    /// The single-term series `m`, or zero when `m` has zero coefficient or
    /// lies outside the box.
    pub fn from_monomial(m: &Monomial, trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        if !m.coeff.is_zero() && trunc.contains(&m.exps) {
            s.terms.insert(pack(&m.exps), m.coeff.clone());
        }
        s
    }

    pub fn var(v: VarId, trunc: Truncation) -> Self {
        Self::from_monomial(&Monomial::var(v), trunc)
    }

    pub fn from_terms<I>(terms: I, trunc: Truncation) -> Self
    where
        I: IntoIterator<Item = (Exps, Rational)>,
    {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if trunc.contains(&e) && !c.is_zero() {
                *acc.entry(pack(&e)).or_default() += &c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiSeries { trunc, terms: acc }
    }

    /// Sum of a sequence of series; the empty sum is zero in `trunc`.
    pub fn sum<'a, I>(items: I, trunc: Truncation) -> Self
    where
        I: IntoIterator<Item = &'a MultiSeries>,
    {
        items.into_iter().fold(Self::zero(trunc), |acc, s| &acc + s)
    }

    pub fn trunc(&self) -> &Truncation {
        &self.trunc
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (unpack(*k), c))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&0).cloned().unwrap_or_default()
    }

    /// Coefficient of `exps`; `OutOfTruncation` distinguishes "unknown" from
    /// zero.
    pub fn coefficient(&self, exps: &Exps) -> Result<Rational> {
        if !self.trunc.contains(exps) {
            return Err(Error::OutOfTruncation(exps.to_vec()));
        }
        Ok(self.terms.get(&pack(exps)).cloned().unwrap_or_default())
    }

    /// Coefficient of `q^k` (all other exponents zero).
    pub fn coeff_q(&self, k: u32) -> Result<Rational> {
        self.coefficient(&Monomial::var_pow(VarId::Q, k).exps)
    }

    pub fn max_degree(&self, v: VarId) -> Option<u32> {
        self.terms().map(|(e, _)| e[v.index()]).max()
    }

    /// Restricts to the componentwise minimum of the current box and `trunc`.
    pub fn truncate(&self, trunc: &Truncation) -> MultiSeries {
        let t = self.trunc.min(trunc);
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| t.contains_packed(**k))
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        MultiSeries { trunc: t, terms }
    }

    pub fn scale(&self, c: &Rational) -> MultiSeries {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        MultiSeries { trunc: self.trunc, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiSeries {
        if m.coeff.is_zero() || !self.trunc.contains(&m.exps) {
            return Self::zero(self.trunc);
        }
        let shift = pack(&m.exps);
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let key = k + shift;
                self.trunc.contains_packed(key).then(|| (key, c * &m.coeff))
            })
            .collect();
        MultiSeries { trunc: self.trunc, terms }
    }

    pub fn add(&self, other: &MultiSeries) -> MultiSeries {
        let trunc = self.trunc.min(&other.trunc);
        let mut terms: BTreeMap<u64, Rational> = self
            .terms
            .iter()
            .filter(|(k, _)| trunc.contains_packed(**k))
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        for (k, c) in &other.terms {
            if !trunc.contains_packed(*k) {
                continue;
            }
            match terms.get_mut(k) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(k);
                    }
                }
                None => {
                    terms.insert(*k, c.clone());
                }
            }
        }
        MultiSeries { trunc, terms }
    }

    pub fn neg(&self) -> MultiSeries {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c)).collect();
        MultiSeries { trunc: self.trunc, terms }
    }

    pub fn sub(&self, other: &MultiSeries) -> MultiSeries {
        self.add(&other.neg())
    }

    /// Truncated product. Exponents are non-negative, so every retained
    /// coefficient equals the coefficient of the exact product.
    pub fn mul(&self, other: &MultiSeries) -> MultiSeries {
        let trunc = self.trunc.min(&other.trunc);
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let bs: Vec<(u64, &Rational)> = b
            .terms
            .iter()
            .filter(|(k, _)| trunc.contains_packed(**k))
            .map(|(k, c)| (*k, c))
            .collect();
        let bias = trunc.bias();
        let mut acc: HashMap<u64, Rational> = HashMap::new();
        for (ka, ca) in &a.terms {
            if !trunc.contains_packed(*ka) {
                continue;
            }
            for &(kb, cb) in &bs {
                let key = ka + kb;
                if key.wrapping_add(bias) & HIGH != 0 {
                    continue;
                }
                let p = ca * cb;
                acc.entry(key)
                    .and_modify(|v| *v += &p)
                    .or_insert(p);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiSeries { trunc, terms }
    }

    pub fn pow(&self, k: u32) -> MultiSeries {
        let mut acc = Self::one(self.trunc);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by recursion over exponent vectors in
    /// increasing order: `r_e = -(1/c0) * sum_{0 != f <= e} s_f r_{e-f}`.
    pub fn inverse(&self) -> Result<MultiSeries> {
        let c0 = self.constant_term();
        let inv_c0 = c0.recip().ok_or(Error::NonInvertible)?;
        let rest: Vec<(u64, Rational)> = self
            .terms
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, c)| (*k, -(c * &inv_c0)))
            .collect();
        let mut active = [false; NVARS];
        for (k, _) in &rest {
            for (i, e) in unpack(*k).iter().enumerate() {
                active[i] |= *e > 0;
            }
        }
        let vars: Vec<usize> = (0..NVARS).rev().filter(|&i| active[i]).collect();
        let mut r: HashMap<u64, Rational> = HashMap::new();
        r.insert(0, inv_c0.clone());
        let mut out = BTreeMap::new();
        out.insert(0u64, inv_c0);
        // Odometer over the active sub-box; the most significant field is
        // the outermost digit so keys come out in increasing order.
        let mut point = [0u32; NVARS];
        'outer: loop {
            // advance
            let mut pos = vars.len();
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                let v = vars[pos];
                if point[v] < self.trunc.order[v] {
                    point[v] += 1;
                    for &w in &vars[pos + 1..] {
                        point[w] = 0;
                    }
                    break;
                }
            }
            let e = pack(&point);
            let mut acc = Rational::zero();
            for (f, c) in &rest {
                if let Some(d) = packed_sub(e, *f) {
                    if let Some(rv) = r.get(&d) {
                        acc += &(c * rv);
                    }
                }
            }
            if !acc.is_zero() {
                r.insert(e, acc.clone());
                out.insert(e, acc);
            }
        }
        Ok(MultiSeries { trunc: self.trunc, terms: out })
    }

    /// `self / (1 - m)`, via `r_e = s_e + c * r_{e - f}` for `m = c x^f`.
    pub fn div_one_minus(&self, m: &Monomial) -> Result<MultiSeries> {
        if m.is_constant() {
            let d = &Rational::one() - &m.coeff;
            let inv = d.recip().ok_or(Error::NonInvertible)?;
            return Ok(self.scale(&inv));
        }
        if m.coeff.is_zero() || !self.trunc.contains(&m.exps) {
            return Ok(self.clone());
        }
        let f = pack(&m.exps);
        let mut terms = self.terms.clone();
        let mut cursor = match terms.keys().next() {
            Some(k) => *k,
            None => return Ok(self.clone()),
        };
        loop {
            let key = cursor + f;
            if self.trunc.contains_packed(key) {
                let add = &terms[&cursor] * &m.coeff;
                match terms.get_mut(&key) {
                    Some(v) => {
                        *v += &add;
                        if v.is_zero() {
                            terms.remove(&key);
                        }
                    }
                    None => {
                        terms.insert(key, add);
                    }
                }
            }
            match terms.range((Bound::Excluded(cursor), Bound::Unbounded)).next() {
                Some((k, _)) => cursor = *k,
                None => break,
            }
        }
        Ok(MultiSeries { trunc: self.trunc, terms })
    }

    /// Replaces `v^e` by `target^e` in every term; the box is unchanged.
    pub fn substitute(&self, v: VarId, target: &Monomial) -> MultiSeries {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (mut e, c) in self.terms() {
            let k = e[v.index()];
            e[v.index()] = 0;
            let t = target.pow(k);
            let m = Monomial::new(c * &t.coeff, e).mul(&Monomial::new(Rational::one(), t.exps));
            if m.coeff.is_zero() || !self.trunc.contains(&m.exps) {
                continue;
            }
            *acc.entry(pack(&m.exps)).or_default() += &m.coeff;
        }
        acc.retain(|_, c| !c.is_zero());
        MultiSeries { trunc: self.trunc, terms: acc }
    }
}

/// `1/(1 - q^d)` as a power series in `q`. For `d < 0` the pole at the
/// origin is avoided by the rewrite `1/(1 - q^d) = -q^{-d}/(1 - q^{-d})`.
pub fn geometric_factor(d: i64, trunc: Truncation) -> Result<MultiSeries> {
    match d {
        0 => Err(Error::ZeroExponent),
        d if d > 0 => {
            let m = Monomial::var_pow(VarId::Q, exp_u32(d));
            MultiSeries::one(trunc).div_one_minus(&m)
        }
        d => {
            let m = Monomial::var_pow(VarId::Q, exp_u32(-d));
            MultiSeries::from_monomial(&m.scaled(&Rational::from_int(-1)), trunc)
                .div_one_minus(&m)
        }
    }
}

/// Clamps an exponent into `u32`; anything past `MAX_CAP` is outside every box.
pub(crate) fn exp_u32(e: i64) -> u32 {
    debug_assert!(e >= 0);
    e.clamp(0, i64::from(MAX_CAP) + 1) as u32
}

impl PartialEq for MultiSeries {
    /// Equality after aligning both series to the common (minimum) box.
    fn eq(&self, other: &Self) -> bool {
        let t = self.trunc.min(&other.trunc);
        let a = self.terms.iter().filter(|(k, _)| t.contains_packed(**k));
        let b = other.terms.iter().filter(|(k, _)| t.contains_packed(**k));
        a.eq(b)
    }
}

impl<'a> Add<&'a MultiSeries> for &'a MultiSeries {
    type Output = MultiSeries;
    fn add(self, rhs: &MultiSeries) -> MultiSeries {
        MultiSeries::add(self, rhs)
    }
}

impl<'a> Sub<&'a MultiSeries> for &'a MultiSeries {
    type Output = MultiSeries;
    fn sub(self, rhs: &MultiSeries) -> MultiSeries {
        MultiSeries::sub(self, rhs)
    }
}

impl<'a> Mul<&'a MultiSeries> for &'a MultiSeries {
    type Output = MultiSeries;
    fn mul(self, rhs: &MultiSeries) -> MultiSeries {
        MultiSeries::mul(self, rhs)
    }
}

impl Neg for &MultiSeries {
    type Output = MultiSeries;
    fn neg(self) -> MultiSeries {
        MultiSeries::neg(self)
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = VarId::ALL
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self, self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VarId::*;

    fn tq(cap: u32) -> Truncation {
        Truncation::from_caps(&[(Q, cap)]).unwrap()
    }

    fn poly(coeffs: &[i64], trunc: Truncation) -> MultiSeries {
        MultiSeries::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var_pow(Q, i as u32).exps, Rational::from_int(*c))),
            trunc,
        )
    }

    #[test]
    fn from_monomial_cases() {
        let t = tq(10);
        assert_eq!(MultiSeries::from_monomial(&Monomial::one(), t), MultiSeries::one(t));
        let zero_coeff = Monomial::from_powers(Rational::zero(), &[(Q, 3)]);
        assert!(MultiSeries::from_monomial(&zero_coeff, t).is_zero());
        let beyond = Monomial::from_powers(Rational::from_int(-2), &[(Q, 12)]);
        assert!(MultiSeries::from_monomial(&beyond, t).is_zero());
    }

    #[test]
    fn add_cases() {
        let t = tq(10);
        assert_eq!(&poly(&[1, 1], t) + &poly(&[1, -1], t), MultiSeries::from_int(2, t));
        let s = poly(&[3, 0, 5], t);
        assert_eq!(&s + &MultiSeries::zero(t), s);
        let half = MultiSeries::from_monomial(&Monomial::new(Rational::new(1, 2), Monomial::var(Q).exps), t);
        let third = MultiSeries::from_monomial(&Monomial::new(Rational::new(1, 3), Monomial::var(Q).exps), t);
        assert_eq!((&half + &third).coeff_q(1).unwrap(), Rational::new(5, 6));
    }

    #[test]
    fn mul_cases() {
        let u = 7;
        let t = tq(u);
        let geo = poly(&vec![1; u as usize + 1], t);
        assert_eq!(&poly(&[1, -1], t) * &geo, MultiSeries::one(t));
        let t5 = tq(5);
        let q3 = MultiSeries::from_monomial(&Monomial::var_pow(Q, 3), t5);
        let q4 = MultiSeries::from_monomial(&Monomial::var_pow(Q, 4), t5);
        assert!((&q3 * &q4).is_zero());
        assert_eq!(&poly(&[1, 1], t) * &poly(&[1, 1], t), poly(&[1, 2, 1], t));
    }

    #[test]
    fn inverse_cases() {
        let t = tq(8);
        assert_eq!(MultiSeries::one(t).inverse().unwrap(), MultiSeries::one(t));
        assert_eq!(poly(&[1, -1], t).inverse().unwrap(), poly(&[1; 9], t));
        assert_eq!(MultiSeries::var(Q, t).inverse(), Err(Error::NonInvertible));
    }

    #[test]
    fn inverse_multivariate() {
        let t = Truncation::from_caps(&[(Q, 6), (X, 3), (P, 2)]).unwrap();
        let s = MultiSeries::from_terms(
            [
                ([0, 0, 0, 0, 0, 0], Rational::from_int(2)),
                ([1, 0, 1, 0, 0, 0], Rational::from_int(-1)),
                ([0, 1, 0, 0, 0, 0], Rational::new(1, 3)),
                ([2, 0, 0, 0, 0, 0], Rational::from_int(5)),
            ],
            t,
        );
        let r = s.inverse().unwrap();
        assert_eq!(&s * &r, MultiSeries::one(t));
        assert_eq!(MultiSeries::one(t).div_one_minus(&Monomial::from_powers(Rational::one(), &[(Q, 1), (X, 1)])).unwrap(),
            poly(&[1, -1], t).substitute(Q, &Monomial::from_powers(Rational::one(), &[(Q, 1), (X, 1)])).inverse().unwrap());
    }

    #[test]
    fn substitute_cases() {
        let t = Truncation::from_caps(&[(Q, 10), (P, 5), (X, 4), (T, 3)]).unwrap();
        let s = &MultiSeries::one(t) + &MultiSeries::from_monomial(&Monomial::from_powers(Rational::one(), &[(T, 1), (Q, 1)]), t);
        let got = s.substitute(T, &Monomial::var_pow(Q, 2));
        assert_eq!(got, &MultiSeries::one(t) + &MultiSeries::from_monomial(&Monomial::var_pow(Q, 3), t));
        let p3 = MultiSeries::from_terms((0..3).map(|i| (Monomial::var_pow(P, i).exps, Rational::one())), t);
        assert_eq!(p3.substitute(P, &Monomial::one()), MultiSeries::from_int(3, t));
        let x2 = MultiSeries::from_monomial(&Monomial::var_pow(X, 2), t);
        let qp = Monomial::from_powers(Rational::one(), &[(Q, 1), (P, 1)]);
        assert_eq!(x2.substitute(X, &qp), MultiSeries::from_monomial(&Monomial::from_powers(Rational::one(), &[(Q, 2), (P, 2)]), t));
    }

    #[test]
    fn coefficient_cases() {
        let t = tq(10);
        assert_eq!(MultiSeries::zero(t).coeff_q(0).unwrap(), Rational::zero());
        assert!(matches!(MultiSeries::zero(t).coeff_q(11), Err(Error::OutOfTruncation(_))));
    }

    #[test]
    fn geometric_factor_cases() {
        let t = tq(12);
        assert_eq!(geometric_factor(1, t).unwrap(), poly(&[1; 13], t));
        let expect = poly(&[0, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1], t);
        assert_eq!(geometric_factor(-2, t).unwrap(), expect);
        assert_eq!(geometric_factor(0, t).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn caps_are_bounded() {
        assert!(Truncation::uniform(MAX_CAP).is_ok());
        assert!(matches!(Truncation::uniform(MAX_CAP + 1), Err(Error::CapTooLarge { .. })));
    }

    #[test]
    fn packed_helpers() {
        let e = pack(&[3, 2, 0, 1, 0, 5]);
        let f = pack(&[1, 2, 0, 0, 0, 5]);
        assert_eq!(packed_sub(e, f), Some(pack(&[2, 0, 0, 1, 0, 0])));
        assert_eq!(packed_sub(f, e), None);
        let t = Truncation::new([3, 2, 0, 1, 0, 5]).unwrap();
        assert!(t.contains_packed(e));
        assert!(!t.contains_packed(e + f));
    }

    #[test]
    fn display() {
        let t = Truncation::from_caps(&[(Q, 4), (T, 2)]).unwrap();
        let s = MultiSeries::from_terms(
            [([0; 6], Rational::one()), ([1, 0, 0, 0, 0, 1], Rational::from_int(-2)), ([3, 0, 0, 0, 0, 0], Rational::new(1, 2))],
            t,
        );
        assert_eq!(s.to_string(), "1 + 1/2*q^3 - 2*q*t");
    }
}
