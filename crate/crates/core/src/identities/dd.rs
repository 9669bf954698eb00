//! Divided-difference identities checked on random rational alphabets.
//!
//! Sample `j` of each side is stored as the coefficient of `q^j`, so a side
//! is an ordinary series and the residual machinery applies unchanged.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::identities::ctx::Ctx;
use crate::identities::Param::*;
use crate::qtools::{divided_difference_chain, Alphabet, AlphabetFn};
use crate::series::{MultiSeries, Rational, VarId};

type Sides = Result<(MultiSeries, MultiSeries)>;

/// Samples per instance when the `q` cap allows it.
pub const SAMPLES: usize = 20;

/// Deterministic generator for sample `j` of an instance.
fn rng(tag: u64, ctx: &Ctx, j: usize) -> ChaCha8Rng {
    let mut seed = tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    for (_, v) in ctx.params.iter() {
        seed = seed.rotate_left(13) ^ (v as u64).wrapping_add(0x5851_F42D_4C95_7F2D);
    }
    ChaCha8Rng::seed_from_u64(seed ^ (j as u64) << 32)
}

/// `count` rationals distinct from each other and from `used`.
fn fresh(rng: &mut ChaCha8Rng, count: usize, used: &mut Vec<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = Rational::new(rng.gen_range(-60..=60), rng.gen_range(1..=12));
        if !used.contains(&r) {
            used.push(r.clone());
            out.push(r);
        }
    }
    out
}

/// Sums `value(j) q^j` over the samples that fit in the box.
fn sampled<F>(ctx: &Ctx, tag: u64, mut value: F) -> Sides
where
    F: FnMut(&mut ChaCha8Rng) -> Result<(Rational, Rational)>,
{
    let count = SAMPLES.min(ctx.cap(VarId::Q) as usize + 1);
    let (mut lhs, mut rhs) = (ctx.zero(), ctx.zero());
    for j in 0..count {
        let (l, r) = value(&mut rng(tag, ctx, j))?;
        let e = [(VarId::Q, j as i64)];
        lhs = &lhs + &ctx.series(&ctx.mono(l, &e));
        rhs = &rhs + &ctx.series(&ctx.mono(r, &e));
    }
    Ok((lhs, rhs))
}

/// `prod_i (x - letters_i)`.
fn prod_diff(x: &Rational, letters: &[Rational]) -> Rational {
    letters.iter().fold(Rational::one(), |acc, l| &acc * &(x - l))
}

fn quotient(num: Rational, den: Rational) -> Rational {
    &num * &den.recip().expect("alphabet letters are distinct")
}

/// `1/(y - a_1) d_1 ... d_n = 1/prod_{i<=n+1}(y - a_i)`.
pub(super) fn dd1(ctx: &Ctx) -> Sides {
    let n = ctx.p(N) as usize;
    sampled(ctx, 1, |rng| {
        let mut used = Vec::new();
        let y = fresh(rng, 1, &mut used).remove(0);
        let a = Alphabet::new(fresh(rng, n + 1, &mut used))?;
        let yy = y.clone();
        let f: AlphabetFn = Arc::new(move |l: &[Rational]| Ok(quotient(Rational::one(), &yy - &l[0])));
        let lhs = divided_difference_chain(f, n)(a.letters())?;
        let rhs = quotient(Rational::one(), prod_diff(&y, a.letters()));
        Ok((lhs, rhs))
    })
}

/// `b_1^r/(b_1 - a) d_1 ... d_m = -a^r/prod_{i<=m+1}(a - b_i)`.
pub(super) fn dd2(ctx: &Ctx) -> Sides {
    let (m, r) = (ctx.p(M) as usize, ctx.pu(R));
    sampled(ctx, 2, |rng| {
        let mut used = Vec::new();
        let a = fresh(rng, 1, &mut used).remove(0);
        let b = Alphabet::new(fresh(rng, m + 1, &mut used))?;
        let aa = a.clone();
        let f: AlphabetFn = Arc::new(move |l: &[Rational]| Ok(quotient(l[0].pow(r), &l[0] - &aa)));
        let lhs = divided_difference_chain(f, m)(b.letters())?;
        let rhs = -quotient(a.pow(r), prod_diff(&a, b.letters()));
        Ok((lhs, rhs))
    })
}

/// With `deg f = r <= m`:
/// `f(b_1)/prod_{i<=n+1}(b_1 - a_i) d^B_1...d^B_m = -f(a_1)/prod_{i<=m+1}(a_1 - b_i) d^A_1...d^A_n`.
pub(super) fn dd3(ctx: &Ctx) -> Sides {
    let (m, n, r) = (ctx.p(M) as usize, ctx.p(N) as usize, ctx.pu(R));
    sampled(ctx, 3, |rng| {
        let mut used = Vec::new();
        let a = Alphabet::new(fresh(rng, n + 1, &mut used))?;
        let b = Alphabet::new(fresh(rng, m + 1, &mut used))?;
        let mut coeffs: Vec<Rational> = (0..=r).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
        if coeffs[r as usize].is_zero() {
            coeffs[r as usize] = Rational::one();
        }
        let poly = Arc::new(move |x: &Rational| coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c));

        let (pa, fa) = (a.letters().to_vec(), poly.clone());
        let over_b: AlphabetFn = Arc::new(move |l: &[Rational]| Ok(quotient(fa(&l[0]), prod_diff(&l[0], &pa))));
        let (pb, fb) = (b.letters().to_vec(), poly);
        let over_a: AlphabetFn = Arc::new(move |l: &[Rational]| Ok(-quotient(fb(&l[0]), prod_diff(&l[0], &pb))));

        let lhs = divided_difference_chain(over_b, m)(b.letters())?;
        let rhs = divided_difference_chain(over_a, n)(a.letters())?;
        Ok((lhs, rhs))
    })
}
