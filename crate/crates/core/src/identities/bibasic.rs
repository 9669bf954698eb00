//! Two-base identities in `p` and `q` (and their one-base specializations).

use crate::error::Result;
use crate::identities::ctx::{c2, poch, poch_inf, sign, times_poch, Ctx};
use crate::identities::Param::*;
use crate::qtools::{pochhammer_inv, q_binomial};
use crate::series::{Monomial, MultiSeries, Rational, Truncation, VarId};

type Sides = Result<(MultiSeries, MultiSeries)>;

/// `sum_{k=from}^{len} pre(k) / ((b;b)_k (b;b)_{len-k} (x b^k; c)_{other+1})`.
#[allow(clippy::too_many_arguments)]
fn half<F>(ctx: &Ctx, b: &Monomial, c: &Monomial, x: &Monomial, len: i64, other: i64, from: i64, pre: F) -> Result<MultiSeries>
where
    F: Fn(i64) -> Monomial,
{
    let mut acc = ctx.zero();
    for k in from..=len {
        let mut denoms = poch(b, b, k as u32);
        denoms.extend(poch(b, b, (len - k) as u32));
        denoms.extend(poch(&x.mul(&b.pow(k as u32)), c, (other + 1) as u32));
        acc = &acc + &ctx.mono_frac(&pre(k), denoms)?;
    }
    Ok(acc)
}

fn new_lhs(ctx: &Ctx, m: i64, n: i64, r: i64) -> Result<MultiSeries> {
    let (p, q, x) = (ctx.sym(VarId::P), ctx.sym(VarId::Q), ctx.sym(VarId::X));
    half(ctx, &p, &q, &x, m, n, 0, |k| ctx.mono(sign(k), &[(VarId::P, c2(k + 1) - r * k)]))
}

fn new_rhs(ctx: &Ctx, m: i64, n: i64, r: i64) -> Result<MultiSeries> {
    let (p, q, x) = (ctx.sym(VarId::P), ctx.sym(VarId::Q), ctx.sym(VarId::X));
    half(ctx, &q, &p, &x, n, m, 0, |k| {
        ctx.mono(sign(k), &[(VarId::X, r), (VarId::Q, c2(k + 1) + r * k)])
    })
}

pub(super) fn new(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M), ctx.p(N), ctx.p(R));
    Ok((new_lhs(ctx, m, n, r)?, new_rhs(ctx, m, n, r)?))
}

pub(super) fn new2(ctx: &Ctx) -> Sides {
    let (m, n) = (ctx.p(M), ctx.p(N));
    let (p, q, x) = (ctx.sym(VarId::P), ctx.sym(VarId::Q), ctx.sym(VarId::X));
    let lhs = half(ctx, &p, &q, &x, m, n, 0, |k| ctx.mono(sign(k), &[(VarId::P, c2(k + 1))]))?;
    let rhs = half(ctx, &q, &p, &x, n, m, 0, |k| ctx.mono(sign(k), &[(VarId::Q, c2(k + 1))]))?;
    Ok((lhs, rhs))
}

/// The transformation as a double binomial series in `x`.
pub(super) fn newpf(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M), ctx.p(N), ctx.p(R));
    let lhs = new_lhs(ctx, m, n, r)?;
    let (p, q) = (ctx.sym(VarId::P), ctx.sym(VarId::Q));
    let rhs = ctx.infinite_sum(
        "x-expansion",
        0,
        |j| ctx.beyond(&[(VarId::X, r + i64::from(j))]),
        |j| {
            let j = i64::from(j);
            let bp = q_binomial(m + j, m, &p, ctx.trunc);
            let bq = q_binomial(n + r + j, n, &q, ctx.trunc);
            Ok((&bp * &bq).mul_monomial(&ctx.mono(Rational::one(), &[(VarId::X, r + j)])))
        },
    )?;
    Ok((lhs, rhs))
}

/// `sum_{k=1}^n u^k/(1 - u^k)` in the symbol monomial `u`.
fn lambert(ctx: &Ctx, u: &Monomial, n: i64) -> Result<MultiSeries> {
    let mut acc = ctx.zero();
    for k in 1..=n {
        let uk = u.pow(k as u32);
        acc = &acc + &ctx.mono_frac(&uk, [uk.clone()])?;
    }
    Ok(acc)
}

fn newnew_r(ctx: &Ctx, m: i64, n: i64, r: i64) -> Sides {
    let (p, q) = (ctx.sym(VarId::P), ctx.sym(VarId::Q));
    let mut lhs = ctx.zero();
    for k in 1..=m {
        let pre = ctx.mono(sign(k), &[(VarId::P, c2(k + 1) - r * k)]);
        let mut denoms = poch(&p, &p, k as u32);
        denoms.extend(poch(&p, &p, (m - k) as u32));
        denoms.extend(poch(&p.pow(k as u32), &q, (n + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    for k in 1..=n {
        let pre = ctx.mono(-sign(k), &[(VarId::Q, c2(k + 1) + r * k)]);
        let mut denoms = poch(&q, &q, k as u32);
        denoms.extend(poch(&q, &q, (n - k) as u32));
        denoms.extend(poch(&q.pow(k as u32), &p, (m + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    let harm = &lambert(ctx, &q, n)? - &lambert(ctx, &p, m)?;
    let inner = &ctx.series(&ctx.int(-r)) + &harm.mul_monomial(&ctx.unit());
    let mut denoms = poch(&p, &p, m as u32);
    denoms.extend(poch(&q, &q, n as u32));
    Ok((lhs, ctx.frac(inner, denoms)?))
}

pub(super) fn newnew(ctx: &Ctx) -> Sides {
    newnew_r(ctx, ctx.p(M), ctx.p(N), ctx.p(R))
}

pub(super) fn cornew(ctx: &Ctx) -> Sides {
    newnew_r(ctx, ctx.p(M), ctx.p(N), 0)
}

/// Bases `q^2` and `q` with equal lengths.
pub(super) fn long(ctx: &Ctx) -> Sides {
    let n = ctx.p(N);
    let q = ctx.sym(VarId::Q);
    let q2 = q.pow(2);
    let mut lhs = ctx.zero();
    for k in 1..=n {
        let pre = ctx.mono(sign(k), &[(VarId::Q, k * (k + 1))]);
        let mut denoms = poch(&q2, &q2, k as u32);
        denoms.extend(poch(&q2, &q2, (n - k) as u32));
        denoms.extend(poch(&q.pow(2 * k as u32), &q, (n + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    for k in 1..=n {
        let pre = ctx.mono(-sign(k), &[(VarId::Q, c2(k + 1))]);
        let mut denoms = poch(&q, &q, k as u32);
        denoms.extend(poch(&q, &q, (n - k) as u32));
        denoms.extend(poch(&q.pow(k as u32), &q2, (n + 1) as u32));
        lhs = &lhs + &ctx.mono_frac(&pre, denoms)?;
    }
    let mut odd = ctx.zero();
    for k in 1..=n {
        odd = &odd + &ctx.mono_frac(&ctx.q(k as u32), [ctx.q(2 * k as u32)])?;
    }
    let mut denoms = poch(&q2, &q2, n as u32);
    denoms.extend(poch(&q, &q, n as u32));
    let rhs = ctx.frac(odd.mul_monomial(&ctx.unit()), denoms)?;
    Ok((lhs, rhs))
}

/// One side of the infinite symmetric transformation in cleared form:
/// `(a;b)_inf/(b;b)_inf sum_k prod_{j<k}(a - b^{j+1}) (x t b^k; c)_inf / ((b;b)_k (x b^k; c)_inf)`.
fn sym_side(ctx: &Ctx, a: VarId, b: VarId, t: VarId, c: VarId, what: &str) -> Result<MultiSeries> {
    let (am, bm, tm, cm, xm) = (ctx.sym(a), ctx.sym(b), ctx.sym(t), ctx.sym(c), ctx.sym(VarId::X));
    let acap = i64::from(ctx.cap(a));
    let mut cleared = ctx.series(&ctx.unit());
    let mut k_done = 0u32;
    let sum = ctx.infinite_sum(
        what,
        0,
        |k| {
            // prod_{j<k}(a - b^{j+1}) keeps a-degree <= cap only through at
            // least k - cap factors b^{j+1}, whose b-degree is >= C(k-cap+1, 2).
            let k = i64::from(k);
            k > acap && ctx.beyond(&[(b, c2(k - acap + 1))])
        },
        |k| {
            while k_done < k {
                let lin = &ctx.series(&am) - &ctx.series(&bm.pow(k_done + 1));
                cleared = &cleared * &lin;
                k_done += 1;
            }
            let bk = bm.pow(k);
            let num = times_poch(cleared.clone(), &poch_inf(&xm.mul(&tm).mul(&bk), &cm, &ctx.trunc)?);
            let mut denoms = poch(&bm, &bm, k);
            denoms.extend(poch_inf(&xm.mul(&bk), &cm, &ctx.trunc)?);
            ctx.frac(num, denoms)
        },
    )?;
    let sum = times_poch(sum, &poch_inf(&am, &bm, &ctx.trunc)?);
    ctx.frac(sum, poch_inf(&bm, &bm, &ctx.trunc)?)
}

pub(super) fn sym(ctx: &Ctx) -> Sides {
    let lhs = sym_side(ctx, VarId::A, VarId::P, VarId::T, VarId::Q, "left sum")?;
    let rhs = sym_side(ctx, VarId::T, VarId::Q, VarId::A, VarId::P, "right sum")?;
    Ok((lhs, rhs))
}

/// The `r = 0` transformation in the form with `x` replaced by `pq`:
/// `sum_k (-1)^k p^{C(k+1,2)} / ((p;p)_k (p;p)_{m-k} (q p^{k+1}; q)_{n+1})`
/// and its mirror image, built without symbol bindings.
pub fn chen_fu_sides(m: u32, n: u32, trunc: Truncation) -> Result<(MultiSeries, MultiSeries)> {
    let side = |b: VarId, c: VarId, len: u32, other: u32| -> Result<MultiSeries> {
        let (bm, cm) = (Monomial::var(b), Monomial::var(c));
        let mut acc = MultiSeries::zero(trunc);
        for k in 0..=len {
            let s = if k % 2 == 0 { 1 } else { -1 };
            let mut t = MultiSeries::from_monomial(
                &Monomial::from_powers(Rational::from_int(s), &[(b, k * (k + 1) / 2)]),
                trunc,
            );
            t = &t * &pochhammer_inv(&bm, &bm, k, trunc)?;
            t = &t * &pochhammer_inv(&bm, &bm, len - k, trunc)?;
            t = &t * &pochhammer_inv(&cm.mul(&bm.pow(k + 1)), &cm, other + 1, trunc)?;
            acc = &acc + &t;
        }
        Ok(acc)
    };
    Ok((side(VarId::P, VarId::Q, m, n)?, side(VarId::Q, VarId::P, n, m)?))
}
