//! Machine-readable catalog metadata: parameters, constraints, tail bounds,
//! default grids and default truncation boxes.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{IdentityId, Param, Params};
use crate::series::{Truncation, VarId};

use IdentityId::*;
use Param::*;

/// Decides the default truncation box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Finite sums: `q<=40, p<=20`, other symbols `<=8`.
    Finite,
    /// Infinite sums and products: `q<=36, p<=12`, other symbols `<=6`.
    Infinite,
    /// Divided differences at random rational alphabets, one sample per
    /// power of `q`.
    Sampled,
    /// Coefficientwise divisor/partition statements.
    Arithmetic,
}

impl Family {
    pub fn default_trunc(self) -> Truncation {
        let (q, p, rest) = match self {
            Family::Finite | Family::Sampled | Family::Arithmetic => (40, 20, 8),
            Family::Infinite => (36, 12, 6),
        };
        Truncation::from_caps(&[
            (VarId::Q, q),
            (VarId::P, p),
            (VarId::X, rest),
            (VarId::Z, rest),
            (VarId::A, rest),
            (VarId::T, rest),
        ])
        .expect("default caps are in range")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: IdentityId,
    pub name: &'static str,
    pub statement: &'static str,
    pub params: &'static [Param],
    pub constraints: &'static str,
    /// Lower bound on the summand exponents used to stop infinite sums.
    pub tail_bound: &'static str,
    pub family: Family,
}

impl CatalogEntry {
    pub fn default_trunc(&self) -> Truncation {
        self.family.default_trunc()
    }
}

macro_rules! entry {
    ($id:ident, $name:literal, $stmt:literal, [$($p:ident),*], $cons:literal, $tail:expr, $fam:ident) => {
        CatalogEntry {
            id: $id,
            name: $name,
            statement: $stmt,
            params: &[$($p),*],
            constraints: $cons,
            tail_bound: $tail,
            family: Family::$fam,
        }
    };
}

const FINITE: &str = "finite";

static CATALOG: [CatalogEntry; 43] = [
    entry!(U81, "Kluyver's Lambert series identity",
        "sum_{k>=1} (-1)^{k-1} q^{C(k+1,2)} / ((q;q)_k (1-q^k)) = sum_{k>=1} q^k/(1-q^k)",
        [], "none", "q: k(k+1)/2 on the left, k on the right", Infinite),
    entry!(HAMME, "Van Hamme's finite form",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^k) = sum_{k=1}^n q^k/(1-q^k)",
        [N], "n >= 0", FINITE, Finite),
    entry!(UCH, "Uchimura's shifted denominator",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^{k+m}) = sum_{k=1}^n q^k/(1-q^k) [k+m,m]^{-1}",
        [N, M], "n >= 0, m >= 0", FINITE, Finite),
    entry!(DILCH, "Dilcher's multiple sum",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+km}/(1-q^k)^m = h_m(q^k/(1-q^k) : 1<=k<=n)",
        [M, N], "m >= 1, n >= 0", FINITE, Finite),
    entry!(PRODINGER, "Prodinger's identity",
        "sum_{k=0,k!=m}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^{k-m}) = (-1)^m q^{C(m+1,2)} [n,m] sum_{k!=m} q^{k-m}/(1-q^{k-m})",
        [N, M], "0 <= m <= n", FINITE, Finite),
    entry!(FLZ, "Fu-Lascoux type sum with a z-shifted denominator",
        "sum_{k=i}^n (-1)^{k-i} [n,k][k,i] q^{C(k-i,2)+km}/(1-zq^k)^m = q^i (zq;q)_{i-1}(q;q)_n/((q;q)_i (zq;q)_n) h_{m-1}(q^j/(1-zq^j) : i<=j<=n)",
        [I, N, M], "1 <= i <= n, m >= 1", FINITE, Finite),
    entry!(NEW, "bibasic transformation",
        "sum_{k=0}^m (-1)^k p^{C(k+1,2)-rk}/((p;p)_k (p;p)_{m-k} (xp^k;q)_{n+1}) = x^r sum_{k=0}^n (-1)^k q^{C(k+1,2)+rk}/((q;q)_k (q;q)_{n-k} (xq^k;p)_{m+1})",
        [M, N, R], "m, n >= 0, 0 <= r <= m", FINITE, Finite),
    entry!(LIU, "Liu's Lambert series expansion",
        "sum_{n>=1} aq^n/(1-aq^n) = sum_{n>=1} (1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n))",
        [], "none", "q: n on the left; q: n^2 or a: n on the right", Infinite),
    entry!(AGARWAL, "Agarwal's two-variable generalization",
        "sum_{n>=0} t^n/(1-xq^n) = sum_{n>=0} (1-xtq^{2n}) x^n t^n q^{n^2}/((1-xq^n)(1-tq^n))",
        [], "none", "t: n on the left; t, x: n or q: n^2 on the right", Infinite),
    entry!(MAIN1, "Lambert series with [n]_p^m and q-Eulerian polynomials",
        "sum_{n>=1} a[n]_p^m q^n/(1-aq^n) = sum_{n>=1} [n]_p^m (1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n)) + sum_{k=1}^m C(m,k) sum_{n>=1} [n]_p^{m-k} a^n p^{kn} q^{n^2+n} A_k(q^n;p)/(q^n;p)_{k+1}",
        [M], "m >= 0", "q: n on the left; q: n^2 (n^2+n), a: n, p: kn on the right", Infinite),
    entry!(MAIN2, "Lambert series with n^m and Eulerian polynomials",
        "sum_{n>=1} a n^m q^n/(1-aq^n) = sum_{n>=1} n^m (1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n)) + sum_{k=1}^m C(m,k) sum_{n>=1} n^{m-k} a^n q^{n^2+n} A_k(q^n)/(1-q^n)^{k+1}",
        [M], "m >= 0", "q: n on the left; q: n^2, a: n on the right", Infinite),
    entry!(NEWPF, "bibasic transformation as a double binomial series",
        "sum_{k=0}^m (-1)^k p^{C(k+1,2)-rk}/((p;p)_k (p;p)_{m-k} (xp^k;q)_{n+1}) = sum_{j>=0} x^{r+j} [m+j,m]_p [n+r+j,n]_q",
        [M, N, R], "m, n >= 0, 0 <= r <= m", "x: r+j on the right", Finite),
    entry!(DD1, "divided differences of 1/(y-a_1)",
        "1/(y-a_1) d_1...d_n = 1/((y-a_1)...(y-a_{n+1}))",
        [N], "n >= 0", "one sample per power of q", Sampled),
    entry!(DD2, "divided differences of b_1^r/(b_1-a_1)",
        "b_1^r/(b_1-a_1) d_1...d_m = -a_1^r/((a_1-b_1)...(a_1-b_{m+1}))",
        [M, R], "m >= 0, 0 <= r <= m", "one sample per power of q", Sampled),
    entry!(DD3, "divided-difference exchange lemma",
        "f(b_1)/prod_{i<=n+1}(b_1-a_i) d^B_1...d^B_m = -f(a_1)/prod_{i<=m+1}(a_1-b_i) d^A_1...d^A_n, deg f = r",
        [M, N, R], "m, n >= 0, 0 <= r <= m", "one sample per power of q", Sampled),
    entry!(STAR, "partial fractions of 1/prod(z-xq^i), cleared",
        "x^n q^{C(n+1,2)} = sum_{k=0}^n (-1)^k q^{C(n-k,2)} prod_{i!=k+1} (z-xq^i) / ((q;q)_k (q;q)_{n-k})",
        [N], "n >= 0", FINITE, Finite),
    entry!(NEW2, "symmetric bibasic transformation",
        "sum_{k=0}^m (-1)^k p^{C(k+1,2)}/((p;p)_k (p;p)_{m-k} (xp^k;q)_{n+1}) = sum_{k=0}^n (-1)^k q^{C(k+1,2)}/((q;q)_k (q;q)_{n-k} (xq^k;p)_{m+1})",
        [M, N], "m, n >= 0", FINITE, Finite),
    entry!(SYM, "infinite symmetric bibasic transformation (b written t), cleared",
        "(a;p)_inf/(p;p)_inf sum_k prod_{j<k}(a-p^{j+1}) (xtp^k;q)_inf/((p;p)_k (xp^k;q)_inf) = same with (a,p) <-> (t,q)",
        [], "none", "p: C(k-cap_a+1,2) on the left, q: C(k-cap_t+1,2) on the right", Infinite),
    entry!(QSQ, "base q^2 limit of the bibasic transformation",
        "sum_{k>=0} (-1)^k (q;q^2)_{k+1} q^{k(k+1)} = sum_{k>=0} q^{(2k+1)k}/(q;q^2)_k - (q^2;q^2)_inf/(q;q^2)_inf sum_{k>=0} q^{(2k+1)(k+1)}/(q^2;q^2)_k",
        [], "none", "q: k(k+1), (2k+1)k, (2k+1)(k+1)", Infinite),
    entry!(NEWNEW, "bibasic harmonic sum with r",
        "sum_{k=1}^m (-1)^k p^{C(k+1,2)-rk}/((p;p)_k (p;p)_{m-k} (p^k;q)_{n+1}) - sum_{k=1}^n (-1)^k q^{C(k+1,2)+rk}/((q;q)_k (q;q)_{n-k} (q^k;p)_{m+1}) = (-r + sum_{k=1}^n q^k/(1-q^k) - sum_{k=1}^m p^k/(1-p^k))/((p;p)_m (q;q)_n)",
        [M, N, R], "m, n >= 0, -n <= r <= m", FINITE, Finite),
    entry!(MNPQ, "one-base harmonic sum with r",
        "sum_{k=1}^n (-1)^{k-1} q^{C(k+1,2)-rk}(1-q^{2rk})/((q;q)_k (q;q)_{n-k} (q^k;q)_{n+1}) = r/(q;q)_n^2",
        [N, R], "n >= 0, |r| <= n", FINITE, Finite),
    entry!(CORNEW, "bibasic harmonic sum",
        "sum_{k=1}^m (-1)^k p^{C(k+1,2)}/((p;p)_k (p;p)_{m-k} (p^k;q)_{n+1}) - sum_{k=1}^n (-1)^k q^{C(k+1,2)}/((q;q)_k (q;q)_{n-k} (q^k;p)_{m+1}) = (sum_{k=1}^n q^k/(1-q^k) - sum_{k=1}^m p^k/(1-p^k))/((p;p)_m (q;q)_n)",
        [M, N], "m, n >= 0", FINITE, Finite),
    entry!(LONG, "odd-divisor sum with bases q and q^2",
        "sum_{k=1}^n (-1)^k q^{k(k+1)}/((q^2;q^2)_k (q^2;q^2)_{n-k} (q^{2k};q)_{n+1}) - sum_{k=1}^n (-1)^k q^{C(k+1,2)}/((q;q)_k (q;q)_{n-k} (q^k;q^2)_{n+1}) = sum_{k=1}^n q^k/(1-q^{2k}) / ((q^2;q^2)_n (q;q)_n)",
        [N], "n >= 0", FINITE, Finite),
    entry!(LONGINF, "odd-divisor generating function, infinite form",
        "sum_{k>=1} (-1)^k (q;q^2)_k q^{k(k+1)}/(1-q^{2k}) - sum_{k>=1} q^{(2k+1)k}/((q;q^2)_k (1-q^{2k})) + (q^2;q^2)_inf/(q;q^2)_inf sum_{k>=0} q^{(2k+1)(k+1)}/((q^2;q^2)_k (1-q^{2k+1})) = sum_{k>=1} q^k/(1-q^{2k})",
        [], "none", "q: k(k+1), (2k+1)k, (2k+1)(k+1), k", Infinite),
    entry!(ODDDIV, "two Lambert forms of the odd-divisor function",
        "sum_{k>=1} q^k/(1-q^{2k}) = sum_{k>=1} q^{2k-1}/(1-q^{2k-1})",
        [], "none", "q: k, 2k-1", Infinite),
    entry!(UCH001, "first generalization of Uchimura's identity",
        "sum_{k=1}^m (-1)^k q^{C(k+1,2)-rk}/((q;q)_k (q;q)_{m-k} (xq^k;q)_{n+1}) - x^r sum_{k=1}^n (-1)^k q^{C(k+1,2)+rk}/((q;q)_k (q;q)_{n-k} (xq^k;q)_{m+1}) = (-(1-x^r)/(1-x) + S_n - x^r S_m)/((q;q)_m (q;q)_n), S_j = sum_{k=1}^j q^k (q;q)_{k-1}/(xq;q)_k",
        [M, N, R], "m, n >= 0, 0 <= r <= m", FINITE, Finite),
    entry!(UCH002, "second generalization of Uchimura's identity",
        "sum_{k=1}^m (-1)^k q^{nk+C(k+1,2)}/((q;q)_k (q;q)_{m-k} (xq^k;q)_{n+1}) - sum_{k=1}^n (-1)^k q^{mk+C(k+1,2)}/((q;q)_k (q;q)_{n-k} (xq^k;q)_{m+1}) = (S_n - S_m)/((q;q)_m (q;q)_n)",
        [M, N], "m, n >= 0", FINITE, Finite),
    entry!(PF12, "telescoping sum, cleared of 1/(1-x)",
        "(1-x) sum_{k=1}^n q^k (q;q)_{k-1}/(xq;q)_k = 1 - (q;q)_n/(xq;q)_n",
        [N], "n >= 0", FINITE, Finite),
    entry!(PRODNEW, "generalization of Prodinger's identity",
        "sum_{k=0,k!=m}^n (-1)^{k-1} [n,k] q^{C(k+1,2)-rk}/(1-q^{k-m}) = (-1)^m q^{C(m+1,2)-rm} [n,m] (r + sum_{k!=m} q^{k-m}/(1-q^{k-m}))",
        [N, M, R], "n >= 0, 0 <= m, r <= n", FINITE, Finite),
    entry!(RDIV, "Van Hamme's identity with r",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)-rk}/(1-q^k) = r + sum_{k=1}^n q^k/(1-q^k)",
        [N, R], "0 <= r <= n", FINITE, Finite),
    entry!(RU81, "Kluyver's identity with r",
        "sum_{k>=1} (-1)^{k-1} q^{C(k+1,2)-rk}/((q;q)_k (1-q^k)) = r + sum_{k>=1} q^k/(1-q^k)",
        [R], "r >= 0", "q: C(k+1,2)-rk on the left, k on the right", Infinite),
    entry!(DILCHNEW, "Dilcher's identity with r",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+k(m-r)}/(1-q^k)^m = sum_{j=0}^m C(r,m-j) h_j(q^k/(1-q^k) : 1<=k<=n)",
        [M, N, R], "m, n >= 1, 0 <= r <= m+n-1", FINITE, Finite),
    entry!(DILCHCOR, "Dilcher's identity with r, alternating-sum form",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+k(m-r)}/(1-q^k)^m = sum_{j=0}^m C(r,m-j) sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+kj}/(1-q^k)^j",
        [M, N, R], "m, n >= 1, 0 <= r <= m+n-1", FINITE, Finite),
    entry!(QBT1, "alternating Gaussian binomial sum",
        "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)} = 1",
        [N], "n >= 1", FINITE, Finite),
    entry!(APM1, "Lambert series with [n]_p^m at a = 1 (i=1) and a = -1 (i=2)",
        "i=1: sum [n]_p^m q^n/(1-q^n) = sum [n]_p^m (1+q^n) q^{n^2}/(1-q^n) + E; i=2: sum [n]_p^m q^n/(1+q^n) = sum (-1)^{n-1} [n]_p^m (1+q^{2n}) q^{n^2}/(1-q^{2n}) + E', E the q-Eulerian part",
        [I, M], "i in {1, 2}, m >= 0", "q: n on the left; q: n^2 on the right", Infinite),
    entry!(P1, "Lambert series with n^m at a = 1 (i=1) and a = -1 (i=2)",
        "i=1: sum n^m q^n/(1-q^n) = sum n^m (1+q^n) q^{n^2}/(1-q^n) + E; i=2: sum n^m q^n/(1+q^n) = sum (-1)^{n-1} n^m (1+q^{2n}) q^{n^2}/(1-q^{2n}) + E', E the Eulerian part",
        [I, M], "i in {1, 2}, m >= 0", "q: n on the left; q: n^2 on the right", Infinite),
    entry!(M123, "Lambert series with n^m for m = 1, 2, 3, expanded",
        "sum a n^m q^n/(1-aq^n) with A_1 = 1, A_2 = 1+q^n, A_3 = 1+4q^n+q^{2n} written out",
        [M], "m in {1, 2, 3}", "q: n on the left; q: n^2, a: n on the right", Infinite),
    entry!(MAIN3, "Lambert series with C(n,m) via Chu-Vandermonde",
        "sum C(n,m) aq^n/(1-aq^n) = sum C(n,m) (1-aq^{2n}) a^n q^{n^2}/((1-q^n)(1-aq^n)) + sum_{k=1}^m sum_n C(n,m-k) a^n q^{n(n+k)}/(1-q^n)^{k+1}",
        [M], "m >= 0", "q: n on the left; q: n^2, a: n on the right", Infinite),
    entry!(M23, "Lambert series with C(n,2) and C(n,3), expanded",
        "the m = 2, 3 cases of the C(n,m) expansion written out term by term",
        [M], "m in {2, 3}", "q: n on the left; q: n^2, a: n on the right", Infinite),
    entry!(VH84, "divisor generating function as a sum over products",
        "sum_{k>=1} q^k/(1-q^k) = sum_{m>=1} m q^m (q^{m+1};q)_inf",
        [], "none", "q: k on the left, m on the right", Infinite),
    entry!(BS, "number of divisors equals the signed smallest-part sum",
        "sum_n d(n) q^n = sum_n t(n) q^n",
        [], "none", "coefficientwise up to the q cap", Arithmetic),
    entry!(GVH, "divisors up to N and the bounded-gap smallest-part sum",
        "sum_n d(n,N) q^n = sum_n (t(n,N) - t(n-N,N)) q^n",
        [BigN], "N >= 1", "coefficientwise up to the q cap", Arithmetic),
    entry!(GVHSER, "divisors up to N as a series identity",
        "sum_{k=1}^N q^k/(1-q^k) = sum_{m>=1} m q^m (q^{m+1};q)_{N-1} - sum_{m>=1} m q^{m+N} (q^{m+1};q)_{N-1}",
        [BigN], "N >= 1", "q: m", Infinite),
];

pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn entry(id: IdentityId) -> &'static CatalogEntry {
    CATALOG.iter().find(|e| e.id == id).expect("every id has a catalog entry")
}

/// Parameters are capped well above anything a box of caps <= 255 can use.
const PARAM_LIMIT: i64 = 200;

fn bad(id: IdentityId, params: &Params, why: &str) -> Error {
    Error::InvalidParams(format!("{}({params}): {why}", id.as_str()))
}

/// Checks that exactly the declared parameters are present and satisfy the
/// entry's constraints.
pub fn validate(id: IdentityId, params: &Params) -> Result<()> {
    let e = entry(id);
    for p in Param::ALL {
        match (e.params.contains(&p), params.get(p)) {
            (true, None) => return Err(bad(id, params, &format!("missing parameter {}", p.name()))),
            (false, Some(_)) => {
                return Err(bad(id, params, &format!("unexpected parameter {}", p.name())))
            }
            (_, Some(v)) if v.abs() > PARAM_LIMIT => {
                return Err(bad(id, params, &format!("|{}| exceeds {PARAM_LIMIT}", p.name())))
            }
            _ => {}
        }
    }
    let g = |p: Param| params.get(p).unwrap_or(0);
    let (m, n, r, i, big_n) = (g(M), g(N), g(R), g(I), g(BigN));
    let ok = match id {
        U81 | LIU | AGARWAL | SYM | QSQ | LONGINF | ODDDIV | VH84 | BS => true,
        HAMME | STAR | LONG | PF12 | DD1 => n >= 0,
        UCH => n >= 0 && m >= 0,
        DILCH => m >= 1 && n >= 0,
        PRODINGER => 0 <= m && m <= n,
        FLZ => 1 <= i && i <= n && m >= 1,
        NEW | NEWPF | UCH001 | DD3 => m >= 0 && n >= 0 && 0 <= r && r <= m,
        NEW2 | CORNEW | UCH002 => m >= 0 && n >= 0,
        NEWNEW => m >= 0 && n >= 0 && -n <= r && r <= m,
        MNPQ => n >= 0 && r.abs() <= n,
        PRODNEW => n >= 0 && 0 <= m && m <= n && 0 <= r && r <= n,
        RDIV => 0 <= r && r <= n,
        RU81 => r >= 0,
        DILCHNEW | DILCHCOR => m >= 1 && n >= 1 && 0 <= r && r < m + n,
        QBT1 => n >= 1,
        DD2 => m >= 0 && 0 <= r && r <= m,
        MAIN1 | MAIN2 | MAIN3 => m >= 0,
        APM1 | P1 => (i == 1 || i == 2) && m >= 0,
        M123 => (1..=3).contains(&m),
        M23 => (2..=3).contains(&m),
        GVH | GVHSER => big_n >= 1,
    };
    if ok {
        Ok(())
    } else {
        Err(bad(id, params, &format!("violates {}", e.constraints)))
    }
}

/// Default grid for parameter `p`, given the values already chosen for the
/// parameters listed before it.
pub fn default_range(id: IdentityId, p: Param, cur: &Params) -> RangeInclusive<i64> {
    let g = |p: Param| cur.get(p).unwrap_or(0);
    match (id, p) {
        (HAMME, N) | (RDIV, N) => 1..=8,
        (RDIV, R) => 0..=g(N),
        (UCH, N) => 1..=6,
        (UCH, M) => 0..=4,
        (DILCH, M) => 1..=4,
        (DILCH, N) => 0..=5,
        (PRODINGER, N) | (PRODNEW, N) => 0..=5,
        (PRODINGER, M) | (PRODNEW, M) | (PRODNEW, R) => 0..=g(N),
        (FLZ, I) => 1..=4,
        (FLZ, N) => g(I)..=4,
        (FLZ, M) => 1..=4,
        (NEW | NEWPF | NEW2 | NEWNEW | CORNEW | UCH001 | UCH002, M | N) => 0..=4,
        (NEW | NEWPF | UCH001, R) => 0..=g(M),
        (NEWNEW, R) => -g(N)..=g(M),
        (MNPQ, N) | (LONG, N) => 0..=4,
        (MNPQ, R) => -g(N)..=g(N),
        (DILCHNEW | DILCHCOR, M) => 1..=3,
        (DILCHNEW | DILCHCOR, N) => 1..=4,
        (DILCHNEW | DILCHCOR, R) => 0..=g(M) + g(N) - 1,
        (QBT1, N) => 1..=10,
        (PF12, N) => 0..=6,
        (STAR, N) => 0..=4,
        (DD1, N) | (DD2 | DD3, M) | (DD3, N) => 0..=3,
        (DD2 | DD3, R) => 0..=g(M),
        (RU81, R) => 0..=4,
        (MAIN1, M) | (MAIN3, M) => 0..=3,
        (MAIN2, M) => 0..=4,
        (APM1 | P1, I) => 1..=2,
        (APM1 | P1, M) => 0..=3,
        (M123, M) => 1..=3,
        (M23, M) => 2..=3,
        (GVHSER, BigN) => 1..=8,
        (GVH, BigN) => 1..=12,
        _ => panic!("{} has no parameter {}", id.as_str(), p.name()),
    }
}
