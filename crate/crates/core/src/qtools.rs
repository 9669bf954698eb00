//! q-analogue building blocks: q-integers, q-Pochhammer symbols, Gaussian
//! binomials, Carlitz q-Eulerian polynomials (with a permutation-statistic
//! oracle), classical Eulerian polynomials, complete homogeneous symmetric
//! polynomials and divided differences over an alphabet.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{Monomial, MultiSeries, Rational, Truncation, VarId};

/// `1 + b + ... + b^{n-1}` for `b = base`; `[0] = 0`.
pub fn q_integer(n: u32, base: VarId, trunc: Truncation) -> MultiSeries {
    q_integer_in(n, &Monomial::var(base), trunc)
}

/// [`q_integer`] with an arbitrary monomial base (a constant base `1` gives `n`).
pub fn q_integer_in(n: u32, base: &Monomial, trunc: Truncation) -> MultiSeries {
    let mut acc = MultiSeries::zero(trunc);
    let mut m = Monomial::one();
    for _ in 0..n {
        acc = &acc + &MultiSeries::from_monomial(&m, trunc);
        m = m.mul(base);
    }
    acc
}

/// `(first; base)_n = prod_{j<n} (1 - first * base^j)`.
pub fn pochhammer(first: &Monomial, base: &Monomial, n: u32, trunc: Truncation) -> MultiSeries {
    let one = MultiSeries::one(trunc);
    let mut acc = one.clone();
    let mut m = first.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &MultiSeries::from_monomial(&m, trunc));
        m = m.mul(base);
    }
    acc
}

/// `1 / (first; base)_n`.
pub fn pochhammer_inv(
    first: &Monomial,
    base: &Monomial,
    n: u32,
    trunc: Truncation,
) -> Result<MultiSeries> {
    let mut acc = MultiSeries::one(trunc);
    let mut m = first.clone();
    for _ in 0..n {
        acc = acc.div_one_minus(&m)?;
        m = m.mul(base);
    }
    Ok(acc)
}

/// Number of factors of `(first; base)_inf` that are not identically 1 in
/// the box: the first `k` with `first * base^k` outside `trunc`.
pub fn pochhammer_inf_len(first: &Monomial, base: &Monomial, trunc: &Truncation) -> Result<u32> {
    if base.is_constant() {
        return Err(Error::NonTruncating);
    }
    let mut k = 0u32;
    let mut m = first.clone();
    while trunc.contains(&m.exps) && !m.coeff.is_zero() {
        k += 1;
        m = m.mul(base);
    }
    // Every later factor is a further multiple of base, hence also outside.
    debug_assert!(!trunc.contains(&first.mul(&base.pow(k)).exps) || first.coeff.is_zero());
    Ok(k)
}

/// `(first; base)_inf`, truncated: the product stops once the factors are
/// identically 1 inside the box.
pub fn pochhammer_inf(first: &Monomial, base: &Monomial, trunc: Truncation) -> Result<MultiSeries> {
    let k = pochhammer_inf_len(first, base, &trunc)?;
    Ok(pochhammer(first, base, k, trunc))
}

/// `1 / (first; base)_inf`.
pub fn pochhammer_inf_inv(
    first: &Monomial,
    base: &Monomial,
    trunc: Truncation,
) -> Result<MultiSeries> {
    let k = pochhammer_inf_len(first, base, &trunc)?;
    pochhammer_inv(first, base, k, trunc)
}

/// Coefficients of the Gaussian polynomial `[n, k]_u` in `u`, by exact
/// division of `(u;u)_n` by `(u;u)_k (u;u)_{n-k}`. Empty for `k < 0` or
/// `k > n`.
pub fn gaussian_coeffs(n: i64, k: i64) -> Vec<BigInt> {
    if k < 0 || n < 0 || k > n {
        return Vec::new();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // [n,k] = prod_{j=1}^{k} (1 - u^{n-k+j}) / (1 - u^j)
    let mut num = vec![BigInt::one()];
    for j in 1..=k {
        num = mul_one_minus(&num, n - k + j);
    }
    for j in 1..=k {
        num = div_one_minus_exact(&num, j);
    }
    debug_assert_eq!(num.len(), k * (n - k) + 1);
    num
}

fn mul_one_minus(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

/// Exact quotient `p / (1 - u^d)`; panics on a nonzero remainder.
fn div_one_minus_exact(p: &[BigInt], d: usize) -> Vec<BigInt> {
    assert!(p.len() > d, "division leaves a remainder");
    let qlen = p.len() - d;
    let mut q = vec![BigInt::zero(); qlen];
    for i in 0..qlen {
        let mut c = p[i].clone();
        if i >= d {
            c += &q[i - d];
        }
        q[i] = c;
    }
    // remainder check on the top d coefficients: p_i = q_i - q_{i-d}
    for i in qlen..p.len() {
        let expect = -q[i - d].clone();
        assert_eq!(p[i], expect, "Gaussian binomial division left a remainder");
    }
    q
}

/// `sum_i coeffs[i] * base^i` in `trunc`.
pub fn dense_in(coeffs: &[BigInt], base: &Monomial, trunc: Truncation) -> MultiSeries {
    let mut terms = Vec::with_capacity(coeffs.len());
    let mut m = Monomial::one();
    for c in coeffs {
        if trunc.contains(&m.exps) {
            terms.push((m.exps, &m.coeff * &Rational::from_bigint(c.clone())));
        }
        m = m.mul(base);
    }
    MultiSeries::from_terms(terms, trunc)
}

/// Gaussian binomial `[n, k]` in the given base; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64, base: &Monomial, trunc: Truncation) -> MultiSeries {
    dense_in(&gaussian_coeffs(n, k), base, trunc)
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Coefficient table `c[i][j]` of `t^i q^j` in the Carlitz polynomial
/// `A_n(t; q)`, from `A_n = (t;q)_{n+1} * sum_j t^j [j+1]_q^n`.
///
/// The sum is cut at `j = n`, which fixes every coefficient up to `t^n`;
/// the coefficient of `t^n` must vanish since `deg_t A_n <= n - 1`.
pub fn carlitz_eulerian_coeffs(n: u32) -> Vec<Vec<BigInt>> {
    let n = n as usize;
    let qdeg = n * n + (n + 1) * n / 2 + 1;
    let zero_row = || vec![BigInt::zero(); qdeg];
    let mut sum: Vec<Vec<BigInt>> = (0..=n).map(|_| zero_row()).collect();
    for (j, row) in sum.iter_mut().enumerate() {
        // [j+1]_q^n
        let mut p = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::zero(); p.len() + j];
            for (i, c) in p.iter().enumerate() {
                for s in 0..=j {
                    next[i + s] += c;
                }
            }
            p = next;
        }
        for (i, c) in p.into_iter().enumerate() {
            row[i] += c;
        }
    }
    // multiply by (t;q)_{n+1} = prod_{i=0}^{n} (1 - t q^i), keeping t <= n
    for i in 0..=n {
        let mut next: Vec<Vec<BigInt>> = sum.clone();
        for td in 0..n {
            for qd in 0..qdeg - i {
                let c = &sum[td][qd];
                if !c.is_zero() {
                    next[td + 1][qd + i] -= c;
                }
            }
        }
        sum = next;
    }
    if n >= 1 {
        assert!(
            sum[n].iter().all(Zero::is_zero),
            "A_{n}(t;q) exceeded its t-degree bound"
        );
        sum.truncate(n);
    }
    for row in sum.iter_mut() {
        while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
            row.pop();
        }
    }
    sum
}

/// Carlitz's q-Eulerian polynomial `A_n(tvar; qvar)` in `trunc`.
pub fn carlitz_eulerian(n: u32, tvar: VarId, qvar: VarId, trunc: Truncation) -> MultiSeries {
    let table = carlitz_eulerian_coeffs(n);
    let t = Monomial::var(tvar);
    let q = Monomial::var(qvar);
    let mut terms = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = t.pow(i as u32).mul(&q.pow(j as u32));
            if trunc.contains(&m.exps) {
                terms.push((m.exps, Rational::from_bigint(c.clone())));
            }
        }
    }
    MultiSeries::from_terms(terms, trunc)
}

/// `A_n(t; q)` with `t` replaced by an arbitrary monomial.
pub fn carlitz_eulerian_at(
    n: u32,
    t: &Monomial,
    qbase: &Monomial,
    trunc: Truncation,
) -> MultiSeries {
    let table = carlitz_eulerian_coeffs(n);
    let mut acc = MultiSeries::zero(trunc);
    for (i, row) in table.iter().enumerate() {
        let ti = t.pow(i as u32);
        if !trunc.contains(&ti.exps) {
            continue;
        }
        let poly = dense_in(row, qbase, trunc);
        acc = &acc + &poly.mul_monomial(&ti);
    }
    acc
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidParams(format!("{values:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Positions `i` (1-based) with `sigma(i) > sigma(i+1)`.
    pub fn descents(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i as u32 + 1)
    }

    pub fn des(&self) -> u32 {
        self.descents().count() as u32
    }

    pub fn maj(&self) -> u32 {
        self.descents().sum()
    }

    /// Next permutation in lexicographic order.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let i = v.windows(2).rposition(|w| w[0] < w[1])?;
        let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Permutation(v))
    }
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn permutations(n: u32) -> impl Iterator<Item = Permutation> {
    std::iter::successors(Some(Permutation::identity(n)), |p| p.next_lex())
}

/// `sum_{sigma in S_n} t^{des sigma} q^{maj sigma}` by enumeration, in the box
/// `t <= n`, `q <= n(n-1)/2`.
pub fn carlitz_eulerian_oracle(n: u32) -> MultiSeries {
    assert!(n <= 7, "permutation oracle is limited to n <= 7");
    let trunc = Truncation::from_caps(&[(VarId::T, n), (VarId::Q, n * n.saturating_sub(1) / 2)])
        .expect("small caps");
    let terms = permutations(n).map(|s| {
        let m = Monomial::from_powers(Rational::one(), &[(VarId::T, s.des()), (VarId::Q, s.maj())]);
        (m.exps, m.coeff)
    });
    MultiSeries::from_terms(terms, trunc)
}

/// Coefficients of the classical Eulerian polynomial `A_n(t)` from
/// `A_n = sum_{k<n} C(n,k) (t-1)^{n-k-1} A_k`, `A_0 = 1`.
pub fn eulerian_coeffs(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut table: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let mut acc = vec![BigInt::zero(); m.max(1)];
        for (k, ak) in table.iter().enumerate() {
            // (t - 1)^{m-k-1}
            let mut pw = vec![BigInt::one()];
            for _ in 0..(m - k - 1) {
                let mut next = vec![BigInt::zero(); pw.len() + 1];
                for (i, c) in pw.iter().enumerate() {
                    next[i] -= c;
                    next[i + 1] += c;
                }
                pw = next;
            }
            let b = binomial(m as i64, k as i64);
            for (i, c) in pw.iter().enumerate() {
                for (j, d) in ak.iter().enumerate() {
                    if i + j >= acc.len() {
                        acc.resize(i + j + 1, BigInt::zero());
                    }
                    acc[i + j] += &b * c * d;
                }
            }
        }
        while acc.len() > 1 && acc.last().is_some_and(Zero::is_zero) {
            acc.pop();
        }
        table.push(acc);
    }
    table.swap_remove(n)
}

/// Classical Eulerian polynomial `A_n(tvar)` in `trunc`.
pub fn eulerian(n: u32, tvar: VarId, trunc: Truncation) -> MultiSeries {
    dense_in(&eulerian_coeffs(n), &Monomial::var(tvar), trunc)
}

/// Complete homogeneous symmetric polynomial `h_k(args)`, via
/// `h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j)`.
pub fn homogeneous_sym(k: usize, args: &[MultiSeries], trunc: Truncation) -> MultiSeries {
    let mut h: Vec<MultiSeries> = (0..=k)
        .map(|j| if j == 0 { MultiSeries::one(trunc) } else { MultiSeries::zero(trunc) })
        .collect();
    for x in args {
        for j in 1..=k {
            let add = x * &h[j - 1];
            h[j] = &h[j] + &add;
        }
    }
    h.swap_remove(k)
}

/// A finite alphabet of pairwise distinct rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(Vec<Rational>);

impl Alphabet {
    pub fn new(letters: Vec<Rational>) -> Result<Self> {
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                if letters[i] == letters[j] {
                    return Err(Error::DegenerateAlphabet(i + 1, j + 1));
                }
            }
        }
        Ok(Alphabet(letters))
    }

    pub fn letters(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A rational-valued function of an alphabet (letters `a_1, a_2, ...`).
pub type AlphabetFn = Arc<dyn Fn(&[Rational]) -> Result<Rational> + Send + Sync>;

/// `f d_i = (f(a_i) - f(a_{i+1})) / (a_i - a_{i+1})` where `f(a_{i+1})`
/// means `f` evaluated with letters `i` and `i+1` exchanged; `i` is 1-based.
pub fn divided_difference(f: AlphabetFn, i: usize) -> AlphabetFn {
    assert!(i >= 1, "divided differences are indexed from 1");
    Arc::new(move |a: &[Rational]| {
        if a.len() <= i {
            return Err(Error::InvalidParams(format!(
                "divided difference {i} needs at least {} letters",
                i + 1
            )));
        }
        let (x, y) = (&a[i - 1], &a[i]);
        if x == y {
            return Err(Error::DegenerateAlphabet(i, i + 1));
        }
        let mut swapped = a.to_vec();
        swapped.swap(i - 1, i);
        let num = &f(a)? - &f(&swapped)?;
        Ok(&num / &(x - y))
    })
}

/// `f d_1 d_2 ... d_n` (operators act on the right, leftmost first).
pub fn divided_difference_chain(f: AlphabetFn, n: usize) -> AlphabetFn {
    (1..=n).fold(f, divided_difference)
}
