//! Infinite one-base sums and the divisor/partition statements.

use crate::error::Result;
use crate::identities::ctx::{c2, poch, poch_inf, sign, times_poch, Ctx};
use crate::identities::Param::*;
use crate::numbers::{divisor_count_bounded, divisors, t_stat, GapBound};
use crate::series::{MultiSeries, Rational, VarId};

type Sides = Result<(MultiSeries, MultiSeries)>;

/// `sum_{k>=1} q^k/(1-q^k)` to the box, times the shift.
fn lambert_inf(ctx: &Ctx) -> Result<MultiSeries> {
    ctx.infinite_sum(
        "sum q^k/(1-q^k)",
        1,
        |k| ctx.beyond(&[(VarId::Q, i64::from(k))]),
        |k| ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::Q, i64::from(k))]), [ctx.q(k)]),
    )
}

fn u81_r(ctx: &Ctx, r: i64) -> Sides {
    let q = ctx.sym(VarId::Q);
    let lhs = ctx.infinite_sum(
        "alternating sum",
        1,
        |k| {
            let k = i64::from(k);
            k > r && ctx.beyond(&[(VarId::Q, c2(k + 1) - r * k)])
        },
        |k| {
            let kk = i64::from(k);
            let pre = ctx.mono(sign(kk - 1), &[(VarId::Q, c2(kk + 1) - r * kk)]);
            let mut denoms = poch(&q, &q, k);
            denoms.push(ctx.q(k));
            ctx.mono_frac(&pre, denoms)
        },
    )?;
    let rhs = &ctx.series(&ctx.int(r)) + &lambert_inf(ctx)?;
    Ok((lhs, rhs))
}

pub(super) fn u81(ctx: &Ctx) -> Sides {
    u81_r(ctx, 0)
}

pub(super) fn ru81(ctx: &Ctx) -> Sides {
    u81_r(ctx, ctx.p(R))
}

pub(super) fn liu(ctx: &Ctx) -> Sides {
    let a = ctx.sym(VarId::A);
    let lhs = ctx.infinite_sum(
        "left sum",
        1,
        |n| ctx.beyond(&[(VarId::Q, i64::from(n))]),
        |n| ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::A, 1), (VarId::Q, i64::from(n))]), [a.mul(&ctx.q(n))]),
    )?;
    let rhs = ctx.infinite_sum(
        "right sum",
        1,
        |n| {
            let n = i64::from(n);
            ctx.beyond(&[(VarId::Q, n * n), (VarId::A, n)])
        },
        |n| {
            let nn = i64::from(n);
            let pre = ctx.series(&ctx.mono(Rational::one(), &[(VarId::A, nn), (VarId::Q, nn * nn)]));
            let num = times_poch(pre, &[a.mul(&ctx.q(2 * n))]);
            ctx.frac(num, [ctx.q(n), a.mul(&ctx.q(n))])
        },
    )?;
    Ok((lhs, rhs))
}

pub(super) fn agarwal(ctx: &Ctx) -> Sides {
    let (x, t) = (ctx.sym(VarId::X), ctx.sym(VarId::T));
    let lhs = ctx.infinite_sum(
        "left sum",
        0,
        |n| ctx.beyond(&[(VarId::T, i64::from(n))]),
        |n| ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::T, i64::from(n))]), [x.mul(&ctx.q(n))]),
    )?;
    let rhs = ctx.infinite_sum(
        "right sum",
        0,
        |n| {
            let n = i64::from(n);
            ctx.beyond(&[(VarId::Q, n * n), (VarId::X, n), (VarId::T, n)])
        },
        |n| {
            let nn = i64::from(n);
            let pre = ctx.series(&ctx.mono(
                Rational::one(),
                &[(VarId::X, nn), (VarId::T, nn), (VarId::Q, nn * nn)],
            ));
            let num = times_poch(pre, &[x.mul(&t).mul(&ctx.q(2 * n))]);
            ctx.frac(num, [x.mul(&ctx.q(n)), t.mul(&ctx.q(n))])
        },
    )?;
    Ok((lhs, rhs))
}

/// `(q^2;q^2)_inf / (q;q^2)_inf * sum_{k>=0} q^{(2k+1)(k+1)} / ((q^2;q^2)_k (1 - q^{2k+1})^e)`.
fn theta_part(ctx: &Ctx, extra: bool) -> Result<MultiSeries> {
    let q = ctx.sym(VarId::Q);
    let q2 = q.pow(2);
    let sum = ctx.infinite_sum(
        "product-weighted sum",
        0,
        |k| {
            let k = i64::from(k);
            ctx.beyond(&[(VarId::Q, (2 * k + 1) * (k + 1))])
        },
        |k| {
            let kk = i64::from(k);
            let pre = ctx.mono(Rational::one(), &[(VarId::Q, (2 * kk + 1) * (kk + 1))]);
            let mut denoms = poch(&q2, &q2, k);
            if extra {
                denoms.push(ctx.q(2 * k + 1));
            }
            ctx.mono_frac(&pre, denoms)
        },
    )?;
    let sum = times_poch(sum, &poch_inf(&q2, &q2, &ctx.trunc)?);
    ctx.frac(sum, poch_inf(&q, &q2, &ctx.trunc)?)
}

pub(super) fn qsq(ctx: &Ctx) -> Sides {
    let q = ctx.sym(VarId::Q);
    let q2 = q.pow(2);
    let lhs = ctx.infinite_sum(
        "left sum",
        0,
        |k| ctx.beyond(&[(VarId::Q, i64::from(k) * i64::from(k + 1))]),
        |k| {
            let kk = i64::from(k);
            let pre = ctx.series(&ctx.mono(sign(kk), &[(VarId::Q, kk * (kk + 1))]));
            Ok(times_poch(pre, &poch(&q, &q2, k + 1)))
        },
    )?;
    let first = ctx.infinite_sum(
        "first right sum",
        0,
        |k| ctx.beyond(&[(VarId::Q, (2 * i64::from(k) + 1) * i64::from(k))]),
        |k| {
            let kk = i64::from(k);
            let pre = ctx.mono(Rational::one(), &[(VarId::Q, (2 * kk + 1) * kk)]);
            ctx.mono_frac(&pre, poch(&q, &q2, k))
        },
    )?;
    Ok((lhs, &first - &theta_part(ctx, false)?))
}

pub(super) fn longinf(ctx: &Ctx) -> Sides {
    let q = ctx.sym(VarId::Q);
    let q2 = q.pow(2);
    let first = ctx.infinite_sum(
        "first sum",
        1,
        |k| ctx.beyond(&[(VarId::Q, i64::from(k) * i64::from(k + 1))]),
        |k| {
            let kk = i64::from(k);
            let pre = ctx.series(&ctx.mono(sign(kk), &[(VarId::Q, kk * (kk + 1))]));
            ctx.frac(times_poch(pre, &poch(&q, &q2, k)), [ctx.q(2 * k)])
        },
    )?;
    let second = ctx.infinite_sum(
        "second sum",
        1,
        |k| ctx.beyond(&[(VarId::Q, (2 * i64::from(k) + 1) * i64::from(k))]),
        |k| {
            let kk = i64::from(k);
            let pre = ctx.mono(Rational::one(), &[(VarId::Q, (2 * kk + 1) * kk)]);
            let mut denoms = poch(&q, &q2, k);
            denoms.push(ctx.q(2 * k));
            ctx.mono_frac(&pre, denoms)
        },
    )?;
    let lhs = &(&first - &second) + &theta_part(ctx, true)?;
    let rhs = ctx.infinite_sum(
        "odd-divisor sum",
        1,
        |k| ctx.beyond(&[(VarId::Q, i64::from(k))]),
        |k| ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::Q, i64::from(k))]), [ctx.q(2 * k)]),
    )?;
    Ok((lhs, rhs))
}

pub(super) fn odddiv(ctx: &Ctx) -> Sides {
    let lhs = ctx.infinite_sum(
        "q^k/(1-q^{2k})",
        1,
        |k| ctx.beyond(&[(VarId::Q, i64::from(k))]),
        |k| ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::Q, i64::from(k))]), [ctx.q(2 * k)]),
    )?;
    let rhs = ctx.infinite_sum(
        "q^{2k-1}/(1-q^{2k-1})",
        1,
        |k| ctx.beyond(&[(VarId::Q, 2 * i64::from(k) - 1)]),
        |k| {
            let e = 2 * i64::from(k) - 1;
            ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::Q, e)]), [ctx.q(e as u32)])
        },
    )?;
    Ok((lhs, rhs))
}

pub(super) fn vh84(ctx: &Ctx) -> Sides {
    let q = ctx.sym(VarId::Q);
    let lhs = lambert_inf(ctx)?;
    let rhs = ctx.infinite_sum(
        "sum m q^m (q^{m+1};q)_inf",
        1,
        |m| ctx.beyond(&[(VarId::Q, i64::from(m))]),
        |m| {
            let pre = ctx.series(&ctx.mono(Rational::from_int(i64::from(m)), &[(VarId::Q, i64::from(m))]));
            Ok(times_poch(pre, &poch_inf(&ctx.q(m + 1), &q, &ctx.trunc)?))
        },
    )?;
    Ok((lhs, rhs))
}

pub(super) fn gvhser(ctx: &Ctx) -> Sides {
    let big_n = ctx.p(BigN);
    let q = ctx.sym(VarId::Q);
    let mut lhs = ctx.zero();
    for k in 1..=big_n {
        lhs = &lhs + &ctx.mono_frac(&ctx.mono(Rational::one(), &[(VarId::Q, k)]), [ctx.q(k as u32)])?;
    }
    let mut rhs = ctx.zero();
    for (offset, s) in [(0, 1), (big_n, -1)] {
        let part = ctx.infinite_sum(
            "sum m q^m (q^{m+1};q)_{N-1}",
            1,
            |m| ctx.beyond(&[(VarId::Q, i64::from(m) + offset)]),
            |m| {
                let c = Rational::from_int(s * i64::from(m));
                let pre = ctx.series(&ctx.mono(c, &[(VarId::Q, i64::from(m) + offset)]));
                Ok(times_poch(pre, &poch(&ctx.q(m + 1), &q, (big_n - 1) as u32)))
            },
        )?;
        rhs = &rhs + &part;
    }
    Ok((lhs, rhs))
}

/// `sum_{n=1}^{cap} f(n) q^n` with each term carrying the shift.
fn coefficient_series<F: Fn(u64) -> i64>(ctx: &Ctx, f: F) -> MultiSeries {
    let mut acc = ctx.zero();
    for n in 1..=ctx.cap(VarId::Q) {
        let c = f(u64::from(n));
        let m = ctx.mono(Rational::from_int(c), &[(VarId::Q, i64::from(n))]);
        acc = &acc + &ctx.series(&m);
    }
    acc
}

pub(super) fn bs(ctx: &Ctx) -> Sides {
    let lhs = coefficient_series(ctx, |n| divisors(n).len() as i64);
    let rhs = coefficient_series(ctx, |n| t_stat(n as i64, GapBound::Unbounded));
    Ok((lhs, rhs))
}

pub(super) fn gvh(ctx: &Ctx) -> Sides {
    let big_n = ctx.p(BigN);
    let bound = GapBound::Bounded(big_n as u64);
    let lhs = coefficient_series(ctx, |n| divisor_count_bounded(n, big_n as u64) as i64);
    let rhs = coefficient_series(ctx, |n| t_stat(n as i64, bound) - t_stat(n as i64 - big_n, bound));
    Ok((lhs, rhs))
}
