//! Build context shared by the side builders.
//!
//! Builders never touch `Monomial::var` directly: every formal symbol goes
//! through [`Ctx::sym`], so a reduction can bind a symbol to a monomial
//! (`p -> 1`, `x -> q^m`, `x -> pq`) before anything is truncated.
//!
//! Identities with negative exponents (`q^{C(k+1,2) - rk}` and friends) are
//! built multiplied through by a fixed monomial `shift`. Every additive term
//! of both sides carries exactly one prefactor made by [`Ctx::mono`], which
//! applies the shift; a probe run in a zero box finds the smallest shift
//! that keeps all prefactors non-negative.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::identities::{Param, Params};
use crate::series::{Exps, Monomial, MultiSeries, Rational, Truncation, VarId, NVARS};

/// Hard stop for infinite sums whose lower bound never leaves the box.
const MAX_TERMS: u32 = 4096;

pub(crate) struct Ctx {
    pub params: Params,
    pub trunc: Truncation,
    binding: [Monomial; NVARS],
    shift: [i64; NVARS],
    deficit: Cell<[i64; NVARS]>,
    stop: Cell<Option<u32>>,
}

impl Ctx {
    pub fn new(params: Params, trunc: Truncation, binding: [Monomial; NVARS], shift: Exps) -> Self {
        Ctx {
            params,
            trunc,
            binding,
            shift: shift.map(i64::from),
            deficit: Cell::new([0; NVARS]),
            stop: Cell::new(None),
        }
    }

    pub fn deficit(&self) -> [i64; NVARS] {
        self.deficit.get()
    }

    pub fn stop_index(&self) -> Option<u32> {
        self.stop.get()
    }

    /// Value of a declared parameter; validation guarantees presence.
    pub fn p(&self, p: Param) -> i64 {
        self.params.get(p).unwrap_or_else(|| panic!("parameter {} missing after validation", p.name()))
    }

    pub fn pu(&self, p: Param) -> u32 {
        u32::try_from(self.p(p)).expect("parameter validated non-negative")
    }

    pub fn cap(&self, v: VarId) -> u32 {
        self.trunc.cap(v)
    }

    /// The monomial standing for symbol `v`.
    pub fn sym(&self, v: VarId) -> Monomial {
        self.binding[v.index()].clone()
    }

    pub fn sym_pow(&self, v: VarId, e: u32) -> Monomial {
        self.binding[v.index()].pow(e)
    }

    /// `sym(q)^e`; `e` must be non-negative.
    pub fn q(&self, e: u32) -> Monomial {
        self.sym_pow(VarId::Q, e)
    }

    /// Prefactor `coeff * prod sym(v)^e`, exponents possibly negative, times
    /// the shift. Must be used exactly once per additive term.
    pub fn mono(&self, coeff: Rational, powers: &[(VarId, i64)]) -> Monomial {
        let mut coeff = coeff;
        let mut exps = self.shift;
        for &(v, e) in powers {
            let target = &self.binding[v.index()];
            let k = e.unsigned_abs() as u32;
            let c = target.coeff.pow(k);
            coeff = if e >= 0 {
                &coeff * &c
            } else {
                &coeff * &c.recip().expect("negative power of a zero symbol")
            };
            for (x, t) in exps.iter_mut().zip(target.exps) {
                *x += e * i64::from(t);
            }
        }
        let mut d = self.deficit.get();
        for (slot, x) in d.iter_mut().zip(exps.iter_mut()) {
            if *x < 0 {
                *slot = (*slot).max(-*x);
                *x = 0;
            }
        }
        self.deficit.set(d);
        Monomial::new(coeff, exps.map(crate::series::exp_u32))
    }

    /// The bare shift monomial, for terms without a prefactor.
    pub fn unit(&self) -> Monomial {
        self.mono(Rational::one(), &[])
    }

    pub fn int(&self, c: i64) -> Monomial {
        self.mono(Rational::from_int(c), &[])
    }

    pub fn series(&self, m: &Monomial) -> MultiSeries {
        MultiSeries::from_monomial(m, self.trunc)
    }

    pub fn one(&self) -> MultiSeries {
        MultiSeries::one(self.trunc)
    }

    pub fn zero(&self) -> MultiSeries {
        MultiSeries::zero(self.trunc)
    }

    /// Whether a summand with the given lower bounds on its symbol exponents
    /// (before the shift) lies wholly outside the box. A bound on a symbol
    /// bound to a constant carries no information and never triggers.
    pub fn beyond(&self, lower: &[(VarId, i64)]) -> bool {
        lower.iter().any(|&(v, e)| {
            let target = &self.binding[v.index()];
            VarId::ALL.iter().any(|w| {
                let t = i64::from(target.exps[w.index()]);
                t > 0 && e * t + self.shift[w.index()] > i64::from(self.trunc.cap(*w))
            })
        })
    }

    /// `numer / prod (1 - d)` over the listed monomials.
    pub fn frac<I>(&self, numer: MultiSeries, denoms: I) -> Result<MultiSeries>
    where
        I: IntoIterator<Item = Monomial>,
    {
        denoms.into_iter().try_fold(numer, |s, d| s.div_one_minus(&d))
    }

    /// `m / prod (1 - d)`.
    pub fn mono_frac<I>(&self, m: &Monomial, denoms: I) -> Result<MultiSeries>
    where
        I: IntoIterator<Item = Monomial>,
    {
        self.frac(self.series(m), denoms)
    }

    /// Sums `term(k)` for `k = start, start+1, ...` up to the first `k` for
    /// which `beyond(k)` holds. `beyond` must be a monotone certificate that
    /// summand `k` and all later ones vanish in the box; the summand at the
    /// stopping index is built and checked to be zero.
    pub fn infinite_sum<B, F>(&self, what: &str, start: u32, beyond: B, mut term: F) -> Result<MultiSeries>
    where
        B: Fn(u32) -> bool,
        F: FnMut(u32) -> Result<MultiSeries>,
    {
        let mut acc = self.zero();
        let mut k = start;
        loop {
            if beyond(k) {
                let dropped = term(k)?;
                if !dropped.is_zero() {
                    return Err(Error::TruncationTooSmall(format!(
                        "{what}: summand {k} is nonzero although its lower bound exceeds the box"
                    )));
                }
                self.stop.set(Some(self.stop.get().map_or(k, |s| s.max(k))));
                return Ok(acc);
            }
            if k - start >= MAX_TERMS {
                return Err(Error::TruncationTooSmall(format!(
                    "{what}: no certified stopping index within {MAX_TERMS} summands"
                )));
            }
            acc = &acc + &term(k)?;
            k += 1;
        }
    }
}

/// Factors `first * base^j`, `j < n`, of `(first; base)_n`.
pub(crate) fn poch(first: &Monomial, base: &Monomial, n: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(n as usize);
    let mut m = first.clone();
    for _ in 0..n {
        out.push(m.clone());
        m = m.mul(base);
    }
    out
}

/// Factors of `(first; base)_inf` that are not identically 1 in `trunc`.
pub(crate) fn poch_inf(first: &Monomial, base: &Monomial, trunc: &Truncation) -> Result<Vec<Monomial>> {
    let n = crate::qtools::pochhammer_inf_len(first, base, trunc)?;
    Ok(poch(first, base, n))
}

/// `s * prod (1 - f)` over the listed monomials.
pub(crate) fn times_poch(s: MultiSeries, factors: &[Monomial]) -> MultiSeries {
    factors.iter().fold(s, |acc, f| {
        let t = acc.mul_monomial(f);
        &acc - &t
    })
}

/// `m` repeated `k` times.
pub(crate) fn rep(m: &Monomial, k: u32) -> impl Iterator<Item = Monomial> + '_ {
    std::iter::repeat_n(m.clone(), k as usize)
}

/// `C(k, 2)` for signed `k`.
pub(crate) fn c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

pub(crate) fn sign(k: i64) -> Rational {
    Rational::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}
