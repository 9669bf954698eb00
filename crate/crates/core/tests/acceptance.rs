//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use pqseries::identities::*;
use pqseries::numbers::*;
use pqseries::qtools::*;
use pqseries::{Monomial, MultiSeries, Rational, Truncation, VarId};

use VarId::*;

/// Wall-clock budget for the finite catalog sweep.
const FINITE_BUDGET: Duration = Duration::from_secs(300);
/// Wall-clock budget for the infinite catalog sweep.
const INFINITE_BUDGET: Duration = Duration::from_secs(600);
/// Wall-clock budget for the permutation oracle up to n = 6.
const PERMUTATION_BUDGET: Duration = Duration::from_secs(1);

/// Finite entries with the instance count of their default grid.
const FINITE_GRID: [(IdentityId, usize); 19] = [
    (IdentityId::HAMME, 8),
    (IdentityId::UCH, 30),
    (IdentityId::DILCH, 24),
    (IdentityId::PRODINGER, 21),
    (IdentityId::PRODNEW, 91),
    (IdentityId::FLZ, 40),
    (IdentityId::NEW, 75),
    (IdentityId::NEW2, 25),
    (IdentityId::NEWNEW, 125),
    (IdentityId::MNPQ, 25),
    (IdentityId::CORNEW, 25),
    (IdentityId::LONG, 5),
    (IdentityId::UCH001, 75),
    (IdentityId::UCH002, 25),
    (IdentityId::RDIV, 44),
    (IdentityId::DILCHNEW, 54),
    (IdentityId::DILCHCOR, 54),
    (IdentityId::QBT1, 10),
    (IdentityId::PF12, 7),
];

/// Infinite entries with the instance count of their default grid.
const INFINITE_GRID: [(IdentityId, usize); 16] = [
    (IdentityId::U81, 1),
    (IdentityId::RU81, 5),
    (IdentityId::LIU, 1),
    (IdentityId::AGARWAL, 1),
    (IdentityId::QSQ, 1),
    (IdentityId::LONGINF, 1),
    (IdentityId::SYM, 1),
    (IdentityId::MAIN1, 4),
    (IdentityId::MAIN2, 5),
    (IdentityId::APM1, 8),
    (IdentityId::P1, 8),
    (IdentityId::M123, 3),
    (IdentityId::MAIN3, 4),
    (IdentityId::M23, 2),
    (IdentityId::VH84, 1),
    (IdentityId::GVHSER, 8),
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Verifies the default grid of every entry at `trunc`, checking counts,
/// residuals and, if asked, that every instance reports a stopping index.
fn catalog_sweep(grid: &[(IdentityId, usize)], trunc: Truncation, infinite: bool, budget: Duration) -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for &(id, want) in grid {
        let results = sweep(id, &ParamRanges::new(), trunc).map_err(|e| format!("{id}: {e}"))?;
        ensure(results.len() == want, || format!("{id}: {} instances, expected {want}", results.len()))?;
        for r in results {
            let r = r.map_err(|e| format!("{id}: {e}"))?;
            ensure(r.residual_zero, || format!("{}: {} residual terms", r.instance, r.residual_terms))?;
            if infinite {
                ensure(r.stop_index.is_some(), || format!("{}: no stopping index", r.instance))?;
            }
        }
        total += want;
    }
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))?;
    Ok(format!("{total} instances over {} entries residual-zero in {:.1} s", grid.len(), took.as_secs_f64()))
}

fn finite_catalog() -> Outcome {
    let trunc = Truncation::from_caps(&[(Q, 40), (P, 20), (X, 8), (Z, 8), (A, 8), (T, 8)]).unwrap();
    catalog_sweep(&FINITE_GRID, trunc, false, FINITE_BUDGET)
}

fn infinite_catalog() -> Outcome {
    let trunc = Truncation::from_caps(&[(Q, 36), (P, 12), (X, 6), (Z, 6), (A, 6), (T, 6)]).unwrap();
    catalog_sweep(&INFINITE_GRID, trunc, true, INFINITE_BUDGET)
}

fn displayed_values() -> Outcome {
    let trunc = Truncation::from_caps(&[(Q, 12), (T, 8)]).unwrap();
    let (t, q) = (Monomial::var(T), Monomial::var(Q));
    let s = |c: i64, m: Monomial| MultiSeries::from_monomial(&m.scaled(&Rational::from_int(c)), trunc);
    let one = MultiSeries::one(trunc);
    let a2 = &one + &s(1, t.mul(&q));
    let a3 = &(&one + &s(2, t.mul(&q))) + &(&s(2, t.mul(&q.pow(2))) + &s(1, t.pow(2).mul(&q.pow(3))));
    ensure(carlitz_eulerian(2, T, Q, trunc) == a2, || "A_2(t;q) != 1 + tq".into())?;
    ensure(carlitz_eulerian(3, T, Q, trunc) == a3, || "A_3(t;q) != 1 + 2tq(q+1) + t^2 q^3".into())?;
    let e3 = &(&one + &s(4, t.clone())) + &s(1, t.pow(2));
    let e4 = &(&(&one + &s(11, t.clone())) + &s(11, t.pow(2))) + &s(1, t.pow(3));
    ensure(eulerian(3, T, trunc) == e3, || "A_3(t) != 1 + 4t + t^2".into())?;
    ensure(eulerian(4, T, trunc) == e4, || "A_4(t) != 1 + 11t + 11t^2 + t^3".into())?;

    let odd = odd_divisor_series(trunc).map_err(|e| e.to_string())?;
    let got: Vec<Rational> = (1..=9).map(|k| odd.coeff_q(k).unwrap()).collect();
    let want: Vec<Rational> = [1, 1, 2, 1, 2, 2, 2, 1, 3].into_iter().map(Rational::from_int).collect();
    ensure(got == want, || format!("odd-divisor coefficients {got:?}"))?;

    let show = |n, big_n| -> Vec<String> {
        partitions_distinct(n, GapBound::Bounded(big_n)).iter().map(|p| p.to_string()).collect()
    };
    ensure(show(9, 3) == ["(9)", "(5,4)", "(4,3,2)"], || format!("P(9,3) = {:?}", show(9, 3)))?;
    ensure(show(6, 3) == ["(6)", "(4,2)", "(3,2,1)"], || format!("P(6,3) = {:?}", show(6, 3)))?;
    let b = GapBound::Bounded(3);
    let diff = t_stat(9, b) - t_stat(6, b);
    ensure(diff == 2 && divisor_count_bounded(9, 3) == 2, || format!("t(9,3) - t(6,3) = {diff}"))?;
    Ok("A_2(t;q), A_3(t;q), A_3(t), A_4(t), odd-divisor coefficients, P(9,3), P(6,3), t(9,3)-t(6,3) = d(9,3) = 2".into())
}

fn oracles() -> Outcome {
    let trunc = Truncation::from_caps(&[(Q, 30), (T, 8)]).unwrap();
    let start = Instant::now();
    for n in 1..=6 {
        ensure(tq_map(&carlitz_eulerian(n as u32, T, Q, trunc)) == des_maj_oracle(n), || {
            format!("Carlitz A_{n} differs from the des/maj count")
        })?;
    }
    let took = start.elapsed();
    ensure(took < PERMUTATION_BUDGET, || format!("permutation oracle took {took:?}"))?;
    let trunc = Truncation::from_caps(&[(Q, 40), (T, 8)]).unwrap();
    for n in 1..=8u32 {
        let at_one = carlitz_eulerian(n, T, Q, trunc).substitute(Q, &Monomial::one());
        ensure(at_one == eulerian(n, T, trunc), || format!("A_{n}(t;1) != A_{n}(t)"))?;
        let want: Vec<BigInt> = eulerian_numbers(n as usize).into_iter().map(BigInt::from).collect();
        ensure(eulerian_coeffs(n) == want, || format!("A_{n}(t) differs from the recurrence"))?;
    }
    for n in 1..=25u32 {
        let got: BTreeSet<Vec<u32>> = partitions_distinct(u64::from(n), GapBound::Unbounded)
            .iter()
            .map(|p| p.parts().iter().map(|&x| x as u32).collect())
            .collect();
        ensure(got == brute_partitions(n, None), || format!("partitions of {n} differ from brute force"))?;
    }
    Ok(format!("des/maj n<=6 in {:.3} s, Eulerian n<=8, partitions n<=25", took.as_secs_f64()))
}

fn number_sweeps() -> Outcome {
    for n in 1..=60u64 {
        let d = trial_divisors(n).len() as i64;
        ensure(t_stat(n as i64, GapBound::Unbounded) == d, || format!("t({n}) != d({n})"))?;
    }
    for big_n in 1..=12u64 {
        let bound = GapBound::Bounded(big_n);
        for n in 1..=40u64 {
            let d = trial_divisors(n).into_iter().filter(|&x| x <= big_n).count() as i64;
            let t = t_stat(n as i64, bound) - t_stat(n as i64 - big_n as i64, bound);
            ensure(t == d && divisor_count_bounded(n, big_n) as i64 == d, || format!("n={n} N={big_n}: {t} != {d}"))?;
        }
    }
    let trunc = Truncation::from_caps(&[(Q, 50)]).unwrap();
    for m in 0..=3u32 {
        let s = lambert_series(m, trunc);
        ensure(lambert_series_geometric(m, trunc).ok() == Some(s.clone()), || format!("Lambert forms differ at m={m}"))?;
        for n in 1..=50u64 {
            let want: BigInt = trial_divisors(n).into_iter().map(|d| BigInt::from(d).pow(m)).sum();
            ensure(s.coeff_q(n as u32).unwrap() == Rational::from_bigint(want), || format!("sigma_{m}({n})"))?;
        }
    }
    Ok("d(n) = t(n) n<=60, d(n,N) = t(n,N) - t(n-N,N) n<=40 N<=12, Lambert forms m<=3 to q^50".into())
}

fn reductions() -> Outcome {
    let trunc = Truncation::from_caps(&[(Q, 24), (P, 12), (X, 6), (Z, 6), (A, 6), (T, 6)]).unwrap();
    let reds = standard_reductions();
    for red in &reds {
        let ok = reduction_check(red, trunc).map_err(|e| format!("{}: {e}", red.label))?;
        ensure(ok, || red.label.clone())?;
    }
    Ok(format!("{} reductions (MAIN1 at p=1, UCH001/UCH002 at m=0, RDIV at r=0, NEW at r=0)", reds.len()))
}

fn divided_differences() -> Outcome {
    let mut total = 0;
    for (id, want) in [(IdentityId::DD1, 4), (IdentityId::DD2, 10), (IdentityId::DD3, 40)] {
        let plan = plan_sweep(id, &ParamRanges::new()).map_err(|e| e.to_string())?;
        ensure(plan.len() == want, || format!("{id}: {} instances, expected {want}", plan.len()))?;
        for params in plan {
            let inst = IdentityInstance::with_default_trunc(id, params);
            ensure(inst.trunc.cap(Q) as usize + 1 >= SAMPLES, || format!("{inst}: box too small for {SAMPLES} samples"))?;
            let r = verify(&inst).map_err(|e| format!("{inst}: {e}"))?;
            ensure(r.residual_zero, || format!("{inst}: {} residual terms", r.residual_terms))?;
        }
        total += want;
    }
    ensure(SAMPLES == 20, || format!("{SAMPLES} samples per instance"))?;
    Ok(format!("{total} instances with m,n<=3, r<=m at {SAMPLES} random alphabets each"))
}

fn ring_core() -> Outcome {
    let laws = ring_laws();
    let failed: Vec<String> = laws.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}"))).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} laws x {LAW_CASES} random cases", laws.len()))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, finite_catalog),
        (2, infinite_catalog),
        (3, displayed_values),
        (4, oracles),
        (5, number_sweeps),
        (6, reductions),
        (7, divided_differences),
        (8, ring_core),
    ];
    let mut failures = 0;
    for (k, check) in criteria {
        match check() {
            Ok(msg) => println!("criterion {k}: PASS - {msg}"),
            Err(msg) => {
                failures += 1;
                println!("criterion {k}: FAIL - {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
