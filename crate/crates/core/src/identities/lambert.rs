//! Lambert series weighted by `[n]_p^m`, `n^m` and `C(n, m)`.

use crate::error::Result;
use crate::identities::ctx::{poch, rep, sign, Ctx};
use crate::identities::Param::*;
use crate::qtools::{binomial, carlitz_eulerian_at, dense_in, eulerian_coeffs, q_integer_in};
use crate::series::{Monomial, MultiSeries, Rational, VarId};
use num_bigint::BigInt;

type Sides = Result<(MultiSeries, MultiSeries)>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Weight {
    /// `[n]_p^j`
    QInt,
    /// `n^j`
    Plain,
}

/// The value of `a`: the formal symbol, `1`, or `-1`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum A {
    Sym,
    One,
    MinusOne,
}

impl A {
    fn sign(self, n: i64) -> Rational {
        match self {
            A::MinusOne => sign(n),
            _ => Rational::one(),
        }
    }

    /// Power list for `a^n` in a prefactor.
    fn powers(self, n: i64) -> Vec<(VarId, i64)> {
        match self {
            A::Sym => vec![(VarId::A, n)],
            _ => vec![],
        }
    }
}

fn weight(ctx: &Ctx, w: Weight, n: i64, j: i64) -> MultiSeries {
    match w {
        Weight::QInt => q_integer_in(n as u32, &ctx.sym(VarId::P), ctx.trunc).pow(j as u32),
        Weight::Plain => MultiSeries::from_int(n.pow(j as u32), ctx.trunc),
    }
}

/// `sum_{n>=1} a w(n)^m q^n / (1 - a q^n)`.
fn left(ctx: &Ctx, w: Weight, a: A, m: i64) -> Result<MultiSeries> {
    ctx.infinite_sum(
        "left sum",
        1,
        |n| ctx.beyond(&[(VarId::Q, i64::from(n))]),
        |n| {
            let nn = i64::from(n);
            let mut pw = a.powers(1);
            pw.push((VarId::Q, nn));
            let c = match a {
                A::MinusOne => -Rational::one(),
                _ => Rational::one(),
            };
            let pre = ctx.series(&ctx.mono(c, &pw));
            let den = match a {
                A::Sym => ctx.sym(VarId::A).mul(&ctx.q(n)),
                A::One => ctx.q(n),
                A::MinusOne => ctx.q(n).scaled(&-Rational::one()),
            };
            ctx.frac(&pre * &weight(ctx, w, nn, m), [den])
        },
    )
}

/// `w(n)^m (1 - a q^{2n}) a^n q^{n^2} / ((1 - q^n)(1 - a q^n))` for one `n`.
fn main_term(ctx: &Ctx, w: Weight, a: A, m: i64, n: u32) -> Result<MultiSeries> {
    let nn = i64::from(n);
    let mut pw = a.powers(nn);
    pw.push((VarId::Q, nn * nn));
    let pre = ctx.series(&ctx.mono(a.sign(nn), &pw));
    let am = match a {
        A::Sym => ctx.sym(VarId::A),
        A::One => Monomial::one(),
        A::MinusOne => Monomial::constant(-Rational::one()),
    };
    let num = &pre - &pre.mul_monomial(&am.mul(&ctx.q(2 * n)));
    ctx.frac(&num * &weight(ctx, w, nn, m), [ctx.q(n), am.mul(&ctx.q(n))])
}

/// `sum_{k=1}^m C(m,k) w(n)^{m-k} a^n p^{kn} q^{n^2+n} A_k(q^n;p)/(q^n;p)_{k+1}`
/// (with `p = 1` and Eulerian polynomials for the plain weight) for one `n`.
fn eulerian_part(ctx: &Ctx, w: Weight, a: A, m: i64, n: u32) -> Result<MultiSeries> {
    let nn = i64::from(n);
    let qn = ctx.q(n);
    let p = ctx.sym(VarId::P);
    let mut acc = ctx.zero();
    for k in 1..=m {
        let mut pw = a.powers(nn);
        pw.push((VarId::Q, nn * nn + nn));
        let (poly, denoms) = match w {
            Weight::QInt => {
                pw.push((VarId::P, k * nn));
                (carlitz_eulerian_at(k as u32, &qn, &p, ctx.trunc), poch(&qn, &p, k as u32 + 1))
            }
            Weight::Plain => (dense_in(&eulerian_coeffs(k as u32), &qn, ctx.trunc), rep(&qn, k as u32 + 1).collect()),
        };
        let c = &a.sign(nn) * &Rational::from_bigint(binomial(m, k));
        let pre = ctx.series(&ctx.mono(c, &pw));
        let num = &(&pre * &poly) * &weight(ctx, w, nn, m - k);
        acc = &acc + &ctx.frac(num, denoms)?;
    }
    Ok(acc)
}

fn right(ctx: &Ctx, w: Weight, a: A, m: i64) -> Result<MultiSeries> {
    ctx.infinite_sum(
        "right sum",
        1,
        |n| {
            let n = i64::from(n);
            ctx.beyond(&[(VarId::Q, n * n)]) || (a == A::Sym && ctx.beyond(&[(VarId::A, n)]))
        },
        |n| Ok(&main_term(ctx, w, a, m, n)? + &eulerian_part(ctx, w, a, m, n)?),
    )
}

pub(super) fn main1(ctx: &Ctx) -> Sides {
    let m = ctx.p(M);
    Ok((left(ctx, Weight::QInt, A::Sym, m)?, right(ctx, Weight::QInt, A::Sym, m)?))
}

pub(super) fn main2(ctx: &Ctx) -> Sides {
    let m = ctx.p(M);
    Ok((left(ctx, Weight::Plain, A::Sym, m)?, right(ctx, Weight::Plain, A::Sym, m)?))
}

/// The `a = 1` and `a = -1` specializations. For `a = -1` both sides are
/// negated so the left side reads `sum w(n)^m q^n/(1+q^n)`; the main term
/// then becomes `(-1)^{n-1} w(n)^m (1+q^{2n}) q^{n^2}/(1-q^{2n})`.
fn at_unit(ctx: &Ctx, w: Weight) -> Sides {
    let (i, m) = (ctx.p(I), ctx.p(M));
    let a = if i == 1 { A::One } else { A::MinusOne };
    let lhs = left(ctx, w, a, m)?;
    let rhs = ctx.infinite_sum(
        "right sum",
        1,
        |n| ctx.beyond(&[(VarId::Q, i64::from(n) * i64::from(n))]),
        |n| {
            let nn = i64::from(n);
            let pre = ctx.series(&ctx.mono(a.sign(nn), &[(VarId::Q, nn * nn)]));
            let main = match a {
                A::MinusOne => {
                    let num = &pre + &pre.mul_monomial(&ctx.q(2 * n));
                    ctx.frac(num, [ctx.q(2 * n)])?
                }
                _ => {
                    let num = &pre + &pre.mul_monomial(&ctx.q(n));
                    ctx.frac(num, [ctx.q(n)])?
                }
            };
            Ok(&(&main * &weight(ctx, w, nn, m)) + &eulerian_part(ctx, w, a, m, n)?)
        },
    )?;
    match a {
        A::MinusOne => Ok((-&lhs, -&rhs)),
        _ => Ok((lhs, rhs)),
    }
}

pub(super) fn apm1(ctx: &Ctx) -> Sides {
    at_unit(ctx, Weight::QInt)
}

pub(super) fn p1(ctx: &Ctx) -> Sides {
    at_unit(ctx, Weight::Plain)
}

/// `sum_n c n^j a^n q^{n^2 + e n} poly(q^n) / (1 - q^n)^d` for one `n`.
fn explicit_term(ctx: &Ctx, c: i64, j: u32, e: i64, poly: &[i64], d: u32, n: u32) -> Result<MultiSeries> {
    let nn = i64::from(n);
    let pre = ctx.series(&ctx.mono(
        Rational::from_int(c * nn.pow(j)),
        &[(VarId::A, nn), (VarId::Q, nn * nn + e * nn)],
    ));
    let coeffs: Vec<BigInt> = poly.iter().map(|&x| BigInt::from(x)).collect();
    let qn = ctx.q(n);
    ctx.frac(&pre * &dense_in(&coeffs, &qn, ctx.trunc), rep(&qn, d))
}

/// `(c, j, e, poly, d)` rows of `explicit_term`.
type Row = (i64, u32, i64, &'static [i64], u32);

fn explicit(ctx: &Ctx, w: Weight, rows: &[Row], m: i64) -> Sides {
    let lhs = left(ctx, w, A::Sym, m)?;
    let rhs = ctx.infinite_sum(
        "right sum",
        1,
        |n| {
            let n = i64::from(n);
            ctx.beyond(&[(VarId::Q, n * n), (VarId::A, n)])
        },
        |n| {
            let mut acc = main_term(ctx, w, A::Sym, m, n)?;
            for &(c, j, e, poly, d) in rows {
                acc = &acc + &explicit_term(ctx, c, j, e, poly, d, n)?;
            }
            Ok(acc)
        },
    )?;
    Ok((lhs, rhs))
}

pub(super) fn m123(ctx: &Ctx) -> Sides {
    let m = ctx.p(M);
    let rows: &[Row] = match m {
        1 => &[(1, 0, 1, &[1], 2)],
        2 => &[(2, 1, 1, &[1], 2), (1, 0, 1, &[1, 1], 3)],
        _ => &[(3, 2, 1, &[1], 2), (3, 1, 1, &[1, 1], 3), (1, 0, 1, &[1, 4, 1], 4)],
    };
    explicit(ctx, Weight::Plain, rows, m)
}

/// `sum_{n>=1} C(n,m) a q^n/(1-aq^n)` against its binomial-convolution expansion.
pub(super) fn main3(ctx: &Ctx) -> Sides {
    let m = ctx.p(M);
    let a = ctx.sym(VarId::A);
    let lhs = ctx.infinite_sum(
        "left sum",
        1,
        |n| ctx.beyond(&[(VarId::Q, i64::from(n))]),
        |n| {
            let nn = i64::from(n);
            let c = Rational::from_bigint(binomial(nn, m));
            ctx.mono_frac(&ctx.mono(c, &[(VarId::A, 1), (VarId::Q, nn)]), [a.mul(&ctx.q(n))])
        },
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
            let qn = ctx.q(n);
            let c = Rational::from_bigint(binomial(nn, m));
            let pre = ctx.series(&ctx.mono(c, &[(VarId::A, nn), (VarId::Q, nn * nn)]));
            let num = &pre - &pre.mul_monomial(&a.mul(&ctx.q(2 * n)));
            let mut acc = ctx.frac(num, [qn.clone(), a.mul(&qn)])?;
            for k in 1..=m {
                let c = Rational::from_bigint(binomial(nn, m - k));
                let pre = ctx.mono(c, &[(VarId::A, nn), (VarId::Q, nn * (nn + k))]);
                acc = &acc + &ctx.mono_frac(&pre, rep(&qn, k as u32 + 1))?;
            }
            Ok(acc)
        },
    )?;
    Ok((lhs, rhs))
}

/// The `m = 2, 3` cases of the binomial-weight expansion, term by term.
pub(super) fn m23(ctx: &Ctx) -> Sides {
    let m = ctx.p(M);
    let a = ctx.sym(VarId::A);
    let lhs = ctx.infinite_sum(
        "left sum",
        1,
        |n| ctx.beyond(&[(VarId::Q, i64::from(n))]),
        |n| {
            let nn = i64::from(n);
            let c = if m == 2 { nn * (nn - 1) / 2 } else { nn * (nn - 1) * (nn - 2) / 6 };
            ctx.mono_frac(&ctx.mono(Rational::from_int(c), &[(VarId::A, 1), (VarId::Q, nn)]), [a.mul(&ctx.q(n))])
        },
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
            let qn = ctx.q(n);
            let c2n = nn * (nn - 1) / 2;
            let lead = if m == 2 { c2n } else { nn * (nn - 1) * (nn - 2) / 6 };
            let pre = ctx.series(&ctx.mono(Rational::from_int(lead), &[(VarId::A, nn), (VarId::Q, nn * nn)]));
            let num = &pre - &pre.mul_monomial(&a.mul(&ctx.q(2 * n)));
            let mut acc = ctx.frac(num, [qn.clone(), a.mul(&qn)])?;
            // (coefficient, extra q-exponent per n, denominator power)
            let rows: &[(i64, i64, u32)] = if m == 2 {
                &[(nn, 1, 2), (1, 2, 3)]
            } else {
                &[(c2n, 1, 2), (nn, 2, 3), (1, 3, 4)]
            };
            for &(c, e, d) in rows {
                let pre = ctx.mono(Rational::from_int(c), &[(VarId::A, nn), (VarId::Q, nn * nn + e * nn)]);
                acc = &acc + &ctx.mono_frac(&pre, rep(&qn, d))?;
            }
            Ok(acc)
        },
    )?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{verify, IdentityId, IdentityInstance, Params};
    use crate::series::Truncation;

    /// The `a = -1` display with `(1+q^n)/(1-q^n)` in the main term, as
    /// printed in the general corollary, differs from the true expansion.
    #[test]
    fn minus_one_main_term_needs_doubled_exponent() {
        let trunc = Truncation::from_caps(&[(VarId::Q, 12), (VarId::P, 6)]).unwrap();
        let literal = |n: u32| {
            let nn = i64::from(n);
            let pre = MultiSeries::from_monomial(&Monomial::var_pow(VarId::Q, n * n).scaled(&sign(nn - 1)), trunc);
            let qn = Monomial::var_pow(VarId::Q, n);
            (&pre + &pre.mul_monomial(&qn)).div_one_minus(&qn).unwrap()
        };
        let mut lit = MultiSeries::zero(trunc);
        for n in 1..=4 {
            lit = &lit + &literal(n);
        }
        // m = 0: the left side is sum q^n/(1+q^n) = q - q^2 + 2q^3 - ...
        let mut lhs = MultiSeries::zero(trunc);
        for n in 1..=12u32 {
            let qn = Monomial::var_pow(VarId::Q, n);
            lhs = &lhs + &MultiSeries::from_monomial(&qn, trunc).div_one_minus(&qn.scaled(&-Rational::one())).unwrap();
        }
        assert_ne!(lhs.coeff_q(2).unwrap(), lit.coeff_q(2).unwrap());
        let inst = IdentityInstance::new(IdentityId::APM1, Params::of(&[("i", 2), ("m", 0)]), trunc);
        assert!(verify(&inst).unwrap().residual_zero);
    }
}
