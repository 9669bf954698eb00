//! One-base finite identities: Gaussian-binomial sums, their harmonic
//! right-hand sides, and the Uchimura-type generalizations with `x`.

use crate::error::Result;
use crate::identities::ctx::{c2, poch, rep, sign, times_poch, Ctx};
use crate::identities::Param::*;
use crate::qtools::{binomial, homogeneous_sym, pochhammer, q_binomial, q_integer_in};
use crate::series::{geometric_factor, Monomial, MultiSeries, Rational, VarId};

type Sides = Result<(MultiSeries, MultiSeries)>;

fn qbin(ctx: &Ctx, n: i64, k: i64) -> MultiSeries {
    q_binomial(n, k, &ctx.sym(VarId::Q), ctx.trunc)
}

/// `q^d / (1 - q^d)` for `d != 0`, through [`geometric_factor`].
fn q_over(ctx: &Ctx, d: i64) -> Result<MultiSeries> {
    Ok(&geometric_factor(d, ctx.trunc)? - &ctx.one())
}

/// The terms `q^k / (1 - q^k)`, `k = 1..=n`.
fn lambert_terms(ctx: &Ctx, n: i64) -> Result<Vec<MultiSeries>> {
    (1..=n).map(|k| q_over(ctx, k)).collect()
}

fn lambert_sum(ctx: &Ctx, n: i64) -> Result<MultiSeries> {
    Ok(MultiSeries::sum(&lambert_terms(ctx, n)?, ctx.trunc))
}

/// `c * q^e * [n,k] / prod (1 - d)`.
fn binom_term<I>(ctx: &Ctx, c: Rational, e: i64, n: i64, k: i64, denoms: I) -> Result<MultiSeries>
where
    I: IntoIterator<Item = Monomial>,
{
    let num = qbin(ctx, n, k).mul_monomial(&ctx.mono(c, &[(VarId::Q, e)]));
    ctx.frac(num, denoms)
}

/// `(q; q)_j` factors.
fn qq(ctx: &Ctx, j: i64) -> Vec<Monomial> {
    let q = ctx.sym(VarId::Q);
    poch(&q, &q, j.max(0) as u32)
}

/// `S_j = sum_{k=1}^j q^k (q;q)_{k-1} / (xq;q)_k`.
fn s_sum(ctx: &Ctx, j: i64) -> Result<MultiSeries> {
    let q = ctx.sym(VarId::Q);
    let xq = ctx.sym(VarId::X).mul(&q);
    let mut acc = ctx.zero();
    for k in 1..=j {
        let num = pochhammer(&q, &q, (k - 1) as u32, ctx.trunc).mul_monomial(&ctx.q(k as u32));
        acc = &acc + &ctx.frac(num, poch(&xq, &q, k as u32))?;
    }
    Ok(acc)
}

pub(super) fn hamme(ctx: &Ctx) -> Sides {
    let n = ctx.p(N);
    let mut lhs = ctx.zero();
    for k in 1..=n {
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k + 1), n, k, [ctx.q(k as u32)])?;
    }
    let rhs = lambert_sum(ctx, n)?.mul_monomial(&ctx.unit());
    Ok((lhs, rhs))
}

pub(super) fn uch(ctx: &Ctx) -> Sides {
    let (n, m) = (ctx.p(N), ctx.p(M));
    let mut lhs = ctx.zero();
    let mut rhs = ctx.zero();
    for k in 1..=n {
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k + 1), n, k, [ctx.q((k + m) as u32)])?;
        let inv = qbin(ctx, k + m, m).inverse()?;
        rhs = &rhs + &(&q_over(ctx, k)? * &inv);
    }
    Ok((lhs, rhs.mul_monomial(&ctx.unit())))
}

pub(super) fn dilch(ctx: &Ctx) -> Sides {
    let (m, n) = (ctx.p(M), ctx.p(N));
    let mut lhs = ctx.zero();
    for k in 1..=n {
        let qk = ctx.q(k as u32);
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k) + k * m, n, k, rep(&qk, m as u32))?;
    }
    let rhs = homogeneous_sym(m as usize, &lambert_terms(ctx, n)?, ctx.trunc);
    Ok((lhs, rhs.mul_monomial(&ctx.unit())))
}

pub(super) fn prodinger(ctx: &Ctx) -> Sides {
    let (n, m) = (ctx.p(N), ctx.p(M));
    let mut lhs = ctx.zero();
    let mut harm = ctx.zero();
    for k in (0..=n).filter(|&k| k != m) {
        let t = binom_term(ctx, sign(k - 1), c2(k + 1), n, k, [])?;
        lhs = &lhs + &(&t * &geometric_factor(k - m, ctx.trunc)?);
        harm = &harm + &q_over(ctx, k - m)?;
    }
    let rhs = &binom_term(ctx, sign(m), c2(m + 1), n, m, [])? * &harm;
    Ok((lhs, rhs))
}

pub(super) fn flz(ctx: &Ctx) -> Sides {
    let (i, n, m) = (ctx.p(I), ctx.p(N), ctx.p(M));
    let q = ctx.sym(VarId::Q);
    let z = ctx.sym(VarId::Z);
    let zq = |k: i64| z.mul(&ctx.q(k as u32));
    let mut lhs = ctx.zero();
    for k in i..=n {
        let num = &qbin(ctx, n, k) * &qbin(ctx, k, i);
        let num = num.mul_monomial(&ctx.mono(sign(k - i), &[(VarId::Q, c2(k - i) + k * m)]));
        lhs = &lhs + &ctx.frac(num, rep(&zq(k), m as u32))?;
    }
    let args: Vec<MultiSeries> = (i..=n)
        .map(|j| ctx.mono_frac(&ctx.q(j as u32), [zq(j)]))
        .collect::<Result<_>>()?;
    let h = homogeneous_sym((m - 1) as usize, &args, ctx.trunc);
    let pre = pochhammer(&q, &q, n as u32, ctx.trunc).mul_monomial(&ctx.mono(Rational::one(), &[(VarId::Q, i)]));
    let pre = times_poch(pre, &poch(&z.mul(&q), &q, (i - 1) as u32));
    let mut denoms = poch(&q, &q, i as u32);
    denoms.extend(poch(&z.mul(&q), &q, n as u32));
    let rhs = &ctx.frac(pre, denoms)? * &h;
    Ok((lhs, rhs))
}

/// Cleared partial fractions of `1 / prod_{i=1}^{n+1} (z - x q^i)`.
pub(super) fn star(ctx: &Ctx) -> Sides {
    let n = ctx.p(N);
    let lhs = ctx.series(&ctx.mono(Rational::one(), &[(VarId::X, n), (VarId::Q, c2(n + 1))]));
    let (x, z) = (ctx.sym(VarId::X), ctx.sym(VarId::Z));
    let mut rhs = ctx.zero();
    for k in 0..=n {
        let mut t = ctx.series(&ctx.mono(sign(k), &[(VarId::Q, c2(n - k))]));
        for i in (1..=n + 1).filter(|&i| i != k + 1) {
            let lin = &ctx.series(&z) - &ctx.series(&x.mul(&ctx.q(i as u32)));
            t = &t * &lin;
        }
        let mut denoms = qq(ctx, k);
        denoms.extend(qq(ctx, n - k));
        rhs = &rhs + &ctx.frac(t, denoms)?;
    }
    Ok((lhs, rhs))
}

pub(super) fn uch001(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M), ctx.p(N), ctx.p(R));
    let q = ctx.sym(VarId::Q);
    let x = ctx.sym(VarId::X);
    let mut lhs = ctx.zero();
    for k in 1..=m {
        let pre = ctx.mono(sign(k), &[(VarId::Q, c2(k + 1) - r * k)]);
        let mut denoms = qq(ctx, k);
        denoms.extend(qq(ctx, m - k));
        denoms.extend(poch(&x.mul(&ctx.q(k as u32)), &q, (n + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    for k in 1..=n {
        let pre = ctx.mono(-sign(k), &[(VarId::X, r), (VarId::Q, c2(k + 1) + r * k)]);
        let mut denoms = qq(ctx, k);
        denoms.extend(qq(ctx, n - k));
        denoms.extend(poch(&x.mul(&ctx.q(k as u32)), &q, (m + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    let geo = q_integer_in(r as u32, &x, ctx.trunc).mul_monomial(&ctx.int(-1));
    let sn = s_sum(ctx, n)?.mul_monomial(&ctx.unit());
    let sm = s_sum(ctx, m)?.mul_monomial(&ctx.mono(Rational::one(), &[(VarId::X, r)]));
    let mut denoms = qq(ctx, m);
    denoms.extend(qq(ctx, n));
    let rhs = ctx.frac(&(&geo + &sn) - &sm, denoms)?;
    Ok((lhs, rhs))
}

pub(super) fn uch002(ctx: &Ctx) -> Sides {
    let (m, n) = (ctx.p(M), ctx.p(N));
    let q = ctx.sym(VarId::Q);
    let x = ctx.sym(VarId::X);
    let mut lhs = ctx.zero();
    for (outer, inner, s) in [(m, n, 1), (n, m, -1)] {
        for k in 1..=outer {
            let pre = ctx.mono(sign(k) * Rational::from_int(s), &[(VarId::Q, inner * k + c2(k + 1))]);
            let mut denoms = qq(ctx, k);
            denoms.extend(qq(ctx, outer - k));
            denoms.extend(poch(&x.mul(&ctx.q(k as u32)), &q, (inner + 1) as u32));
            lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
        }
    }
    let mut denoms = qq(ctx, m);
    denoms.extend(qq(ctx, n));
    let diff = &s_sum(ctx, n)? - &s_sum(ctx, m)?;
    let rhs = ctx.frac(diff.mul_monomial(&ctx.unit()), denoms)?;
    Ok((lhs, rhs))
}

/// Telescoping sum, multiplied through by `1 - x`.
pub(super) fn pf12(ctx: &Ctx) -> Sides {
    let n = ctx.p(N);
    let q = ctx.sym(VarId::Q);
    let x = ctx.sym(VarId::X);
    let one_minus_x = &ctx.one() - &ctx.series(&x);
    let lhs = (&s_sum(ctx, n)? * &one_minus_x).mul_monomial(&ctx.unit());
    let ratio = ctx.frac(pochhammer(&q, &q, n as u32, ctx.trunc), poch(&x.mul(&q), &q, n as u32))?;
    let rhs = (&ctx.one() - &ratio).mul_monomial(&ctx.unit());
    Ok((lhs, rhs))
}

pub(super) fn prodnew(ctx: &Ctx) -> Sides {
    let (n, m, r) = (ctx.p(N), ctx.p(M), ctx.p(R));
    let mut lhs = ctx.zero();
    let mut harm = ctx.zero();
    for k in (0..=n).filter(|&k| k != m) {
        let t = binom_term(ctx, sign(k - 1), c2(k + 1) - r * k, n, k, [])?;
        lhs = &lhs + &(&t * &geometric_factor(k - m, ctx.trunc)?);
        harm = &harm + &q_over(ctx, k - m)?;
    }
    let e = c2(m + 1) - r * m;
    let constant = binom_term(ctx, sign(m) * Rational::from_int(r), e, n, m, [])?;
    let rhs = &constant + &(&binom_term(ctx, sign(m), e, n, m, [])? * &harm);
    Ok((lhs, rhs))
}

pub(super) fn rdiv(ctx: &Ctx) -> Sides {
    let (n, r) = (ctx.p(N), ctx.p(R));
    let mut lhs = ctx.zero();
    for k in 1..=n {
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k + 1) - r * k, n, k, [ctx.q(k as u32)])?;
    }
    let rhs = &ctx.series(&ctx.int(r)) + &lambert_sum(ctx, n)?.mul_monomial(&ctx.unit());
    Ok((lhs, rhs))
}

fn dilch_r_lhs(ctx: &Ctx, m: i64, n: i64, r: i64) -> Result<MultiSeries> {
    let mut lhs = ctx.zero();
    for k in 1..=n {
        let qk = ctx.q(k as u32);
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k) + k * (m - r), n, k, rep(&qk, m as u32))?;
    }
    Ok(lhs)
}

pub(super) fn dilchnew(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M), ctx.p(N), ctx.p(R));
    let lhs = dilch_r_lhs(ctx, m, n, r)?;
    let terms = lambert_terms(ctx, n)?;
    let mut rhs = ctx.zero();
    for j in 0..=m {
        let c = Rational::from_bigint(binomial(r, m - j));
        if c.is_zero() {
            continue;
        }
        let h = homogeneous_sym(j as usize, &terms, ctx.trunc);
        rhs = &rhs + &h.mul_monomial(&ctx.mono(c, &[]));
    }
    Ok((lhs, rhs))
}

pub(super) fn dilchcor(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M), ctx.p(N), ctx.p(R));
    let lhs = dilch_r_lhs(ctx, m, n, r)?;
    let mut rhs = ctx.zero();
    for j in 0..=m {
        let c = Rational::from_bigint(binomial(r, m - j));
        if c.is_zero() {
            continue;
        }
        for k in 1..=n {
            let qk = ctx.q(k as u32);
            let t = binom_term(ctx, &sign(k - 1) * &c, c2(k) + k * j, n, k, rep(&qk, j as u32))?;
            rhs = &rhs + &t;
        }
    }
    Ok((lhs, rhs))
}

pub(super) fn qbt1(ctx: &Ctx) -> Sides {
    let n = ctx.p(N);
    let mut lhs = ctx.zero();
    for k in 1..=n {
        lhs = &lhs + &binom_term(ctx, sign(k - 1), c2(k), n, k, [])?;
    }
    Ok((lhs, ctx.series(&ctx.unit())))
}

pub(super) fn mnpq(ctx: &Ctx) -> Sides {
    let (n, r) = (ctx.p(N), ctx.p(R));
    let q = ctx.sym(VarId::Q);
    let mut lhs = ctx.zero();
    for k in 1..=n {
        let num = &ctx.series(&ctx.mono(sign(k - 1), &[(VarId::Q, c2(k + 1) - r * k)]))
            - &ctx.series(&ctx.mono(sign(k - 1), &[(VarId::Q, c2(k + 1) + r * k)]));
        let mut denoms = qq(ctx, k);
        denoms.extend(qq(ctx, n - k));
        denoms.extend(poch(&ctx.q(k as u32), &q, (n + 1) as u32));
        lhs = &lhs + &ctx.frac(num, denoms)?;
    }
    let mut denoms = qq(ctx, n);
    denoms.extend(qq(ctx, n));
    let rhs = ctx.mono_frac(&ctx.int(r), denoms)?;
    Ok((lhs, rhs))
}
