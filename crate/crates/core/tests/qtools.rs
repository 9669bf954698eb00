mod common;

use std::sync::Arc;

use common::*;
use num_bigint::BigInt;
use pqseries::qtools::*;
use pqseries::{Monomial, MultiSeries, Rational, Truncation, VarId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use VarId::*;

fn tq(q: u32, t: u32) -> Truncation {
    Truncation::from_caps(&[(Q, q), (T, t), (P, 6)]).unwrap()
}

#[test]
fn pochhammer_concatenates() {
    let trunc = Truncation::from_caps(&[(Q, 30), (P, 6), (X, 6)]).unwrap();
    let q = Monomial::var(Q);
    let firsts = [
        Monomial::var(X),
        Monomial::from_powers(Rational::new(-2, 3), &[(P, 1), (Q, 2)]),
        Monomial::constant(Rational::new(1, 2)),
    ];
    for a in &firsts {
        for m in 0..=6 {
            for n in 0..=6 {
                let whole = pochhammer(a, &q, m + n, trunc);
                let split = &pochhammer(a, &q, m, trunc) * &pochhammer(&a.mul(&q.pow(m)), &q, n, trunc);
                assert_eq!(whole, split, "a={a:?} m={m} n={n}");
            }
        }
    }
}

#[test]
fn q_binomial_pascal_recurrences() {
    let trunc = Truncation::from_caps(&[(Q, 40)]).unwrap();
    let q = Monomial::var(Q);
    let qb = |n: i64, k: i64| q_binomial(n, k, &q, trunc);
    for n in 1..=10i64 {
        for k in 0..=n {
            let first = &qb(n - 1, k - 1) + &qb(n - 1, k).mul_monomial(&q.pow(k as u32));
            let second = &qb(n - 1, k - 1).mul_monomial(&q.pow((n - k) as u32)) + &qb(n - 1, k);
            assert_eq!(qb(n, k), first, "n={n} k={k}");
            assert_eq!(qb(n, k), second, "n={n} k={k}");
        }
    }
}

#[test]
fn q_binomial_at_one_is_binomial() {
    let trunc = Truncation::from_caps(&[(Q, 40)]).unwrap();
    for n in 0..=10i64 {
        for k in 0..=n {
            let s = q_binomial(n, k, &Monomial::var(Q), trunc).substitute(Q, &Monomial::one());
            let pascal: i64 = (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1));
            assert_eq!(s.constant_term(), Rational::from_int(pascal));
            assert_eq!(s.len(), 1);
        }
    }
}

#[test]
fn carlitz_matches_its_generating_function() {
    let trunc = tq(12, 8);
    for n in 0..=6u32 {
        let lhs = &carlitz_eulerian(n, T, Q, trunc) * &pochhammer(&Monomial::var(T), &Monomial::var(Q), n + 1, trunc).inverse().unwrap();
        let mut rhs = MultiSeries::zero(trunc);
        for j in 0..=8u32 {
            let qint = q_integer_in(j + 1, &Monomial::var(Q), trunc).pow(n);
            rhs = &rhs + &qint.mul_monomial(&Monomial::var_pow(T, j));
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn carlitz_matches_permutation_statistics() {
    let trunc = tq(30, 8);
    for n in 1..=6 {
        let built = tq_map(&carlitz_eulerian(n as u32, T, Q, trunc));
        assert_eq!(built, des_maj_oracle(n), "n={n}");
        assert_eq!(carlitz_eulerian(n as u32, T, Q, trunc), carlitz_eulerian_oracle(n as u32).truncate(&trunc));
    }
}

#[test]
fn carlitz_at_q_one_is_eulerian() {
    let trunc = tq(40, 8);
    for n in 0..=8u32 {
        let at_one = carlitz_eulerian(n, T, Q, trunc).substitute(Q, &Monomial::one());
        assert_eq!(at_one, eulerian(n, T, trunc), "n={n}");
        if n >= 1 {
            let want: Vec<BigInt> = eulerian_numbers(n as usize).into_iter().map(BigInt::from).collect();
            assert_eq!(eulerian_coeffs(n), want, "n={n}");
        }
    }
}

#[test]
fn eulerian_coefficients_are_palindromic() {
    for n in 1..=12u32 {
        let c = eulerian_coeffs(n);
        let mut r = c.clone();
        r.reverse();
        assert_eq!(c, r, "n={n}");
    }
}

#[test]
fn displayed_small_polynomials() {
    let trunc = tq(12, 8);
    let (t, q) = (Monomial::var(T), Monomial::var(Q));
    let s = |m: Monomial| MultiSeries::from_monomial(&m, trunc);
    let one = MultiSeries::one(trunc);
    assert_eq!(carlitz_eulerian(0, T, Q, trunc), one);
    assert_eq!(carlitz_eulerian(1, T, Q, trunc), one);
    assert_eq!(carlitz_eulerian(2, T, Q, trunc), &one + &s(t.mul(&q)));
    let a3 = &(&one + &s(t.mul(&q).scaled(&Rational::from_int(2)))) + &(&s(t.mul(&q.pow(2)).scaled(&Rational::from_int(2))) + &s(t.pow(2).mul(&q.pow(3))));
    assert_eq!(carlitz_eulerian(3, T, Q, trunc), a3);
    let int = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(eulerian_coeffs(1), int(&[1]));
    assert_eq!(eulerian_coeffs(2), int(&[1, 1]));
    assert_eq!(eulerian_coeffs(3), int(&[1, 4, 1]));
    assert_eq!(eulerian_coeffs(4), int(&[1, 11, 11, 1]));
}

#[test]
fn homogeneous_generating_function() {
    let trunc = Truncation::from_caps(&[(Q, 6), (P, 6), (T, 6)]).unwrap();
    let s = |c: (i64, i64), powers: &[(VarId, u32)]| MultiSeries::from_monomial(&Monomial::from_powers(Rational::new(c.0, c.1), powers), trunc);
    let xs = [
        &MultiSeries::one(trunc) + &s((1, 1), &[(Q, 1)]),
        &s((2, 1), &[(P, 1)]) - &s((1, 1), &[(Q, 2)]),
        &MultiSeries::constant(Rational::new(1, 2), trunc) + &s((-3, 2), &[(Q, 1), (P, 1)]),
    ];
    let tvar = MultiSeries::var(T, trunc);
    for n in 0..=3 {
        let args = &xs[..n];
        let mut lhs = MultiSeries::zero(trunc);
        for k in 0..=6u32 {
            lhs = &lhs + &(&homogeneous_sym(k as usize, args, trunc) * &tvar.pow(k));
        }
        let mut rhs = MultiSeries::one(trunc);
        for x in args {
            rhs = &rhs * &(&MultiSeries::one(trunc) - &(x * &tvar)).inverse().unwrap();
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

fn random_letters(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < count {
        let r = Rational::new(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

#[test]
fn divided_difference_of_power_over_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in 0..=4usize {
        for r in 0..=m as u32 {
            for _ in 0..20 {
                let letters = random_letters(&mut rng, m + 2);
                let (a, b) = (letters[0].clone(), letters[1..].to_vec());
                let aa = a.clone();
                let f: AlphabetFn = Arc::new(move |l: &[Rational]| Ok(&l[0].pow(r) / &(&l[0] - &aa)));
                let got = divided_difference_chain(f, m)(&b).unwrap();
                let den = b.iter().fold(Rational::one(), |acc, x| &acc * &(&a - x));
                assert_eq!(got, -(&a.pow(r) / &den), "m={m} r={r}");
            }
        }
    }
}

#[test]
fn divided_difference_rejects_repeated_letters() {
    let f: AlphabetFn = Arc::new(|l: &[Rational]| Ok(l[0].clone()));
    let letters = [Rational::from_int(2), Rational::from_int(2)];
    assert!(matches!(divided_difference(f.clone(), 1)(&letters), Err(pqseries::Error::DegenerateAlphabet(1, 2))));
    assert!(Alphabet::new(letters.to_vec()).is_err());
}
