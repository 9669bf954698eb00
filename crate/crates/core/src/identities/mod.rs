//! The identity catalog and its verifier.
//!
//! Each entry builds both sides of an identity as truncated series; an
//! instance passes when `lhs - rhs` vanishes in the box. Infinite sums stop
//! at a certified index (see [`Ctx::infinite_sum`](ctx::Ctx)), and identities
//! with negative exponents are checked multiplied through by a monomial, with
//! the box raised by the same amount.

mod bibasic;
mod catalog;
mod ctx;
mod dd;
mod finite;
mod infinite;
mod lambert;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use bibasic::chen_fu_sides;
pub use catalog::{catalog, default_range, entry, validate, CatalogEntry, Family};
pub use dd::SAMPLES;

use crate::error::{Error, Result};
use crate::series::{Exps, Monomial, MultiSeries, Truncation, VarId, NVARS};
use ctx::Ctx;

macro_rules! identity_ids {
    ($($v:ident),* $(,)?) => {
        /// Identifier of a catalog entry.
        #[allow(clippy::upper_case_acronyms)]
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId { $($v),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v),*];

            pub fn as_str(self) -> &'static str {
                match self { $(IdentityId::$v => stringify!($v)),* }
            }
        }
    };
}

identity_ids!(
    U81, HAMME, UCH, DILCH, PRODINGER, FLZ, NEW, LIU, AGARWAL, MAIN1, MAIN2, NEWPF, DD1, DD2,
    DD3, STAR, NEW2, SYM, QSQ, NEWNEW, MNPQ, CORNEW, LONG, LONGINF, ODDDIV, UCH001, UCH002, PF12,
    PRODNEW, RDIV, RU81, DILCHNEW, DILCHCOR, QBT1, APM1, P1, M123, MAIN3, M23, VH84, BS, GVH,
    GVHSER,
);

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Integer parameter names used across the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    M,
    N,
    R,
    I,
    /// The gap bound `N` of the partition identities.
    BigN,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::M, Param::N, Param::R, Param::I, Param::BigN];

    pub fn name(self) -> &'static str {
        match self {
            Param::M => "m",
            Param::N => "n",
            Param::R => "r",
            Param::I => "i",
            Param::BigN => "N",
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == s)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A partial assignment of the integer parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params([Option<i64>; 5]);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, v: i64) -> Self {
        self.0[p.index()] = Some(v);
        self
    }

    /// Builds from `(name, value)` pairs, e.g. `&[("m", 2), ("n", 3)]`.
    pub fn of(pairs: &[(&str, i64)]) -> Self {
        pairs.iter().fold(Self::new(), |acc, (k, v)| {
            acc.with(Param::from_name(k).unwrap_or_else(|| panic!("unknown parameter {k}")), *v)
        })
    }

    pub fn get(&self, p: Param) -> Option<i64> {
        self.0[p.index()]
    }

    pub fn set(&mut self, p: Param, v: Option<i64>) {
        self.0[p.index()] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Param, i64)> + '_ {
        Param::ALL.into_iter().filter_map(|p| self.get(p).map(|v| (p, v)))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, v)| format!("{}={v}", p.name())).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (p, v) in self.iter() {
            map.serialize_entry(p.name(), &v)?;
        }
        map.end()
    }
}

/// One identity at one parameter point in one box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityInstance {
    pub id: IdentityId,
    pub params: Params,
    pub trunc: Truncation,
}

impl IdentityInstance {
    pub fn new(id: IdentityId, params: Params, trunc: Truncation) -> Self {
        IdentityInstance { id, params, trunc }
    }

    /// The instance in the catalog's default box for `id`.
    pub fn with_default_trunc(id: IdentityId, params: Params) -> Self {
        Self::new(id, params, entry(id).default_trunc())
    }
}

impl fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) @ {}", self.id, self.params, self.trunc)
    }
}

/// Both sides of an instance, as checked.
#[derive(Clone, Debug)]
pub struct Sides {
    pub lhs: MultiSeries,
    pub rhs: MultiSeries,
    /// Largest stopping index over the infinite sums, if any.
    pub stop_index: Option<u32>,
    /// Both sides were multiplied by `prod v^shift[v]`.
    pub shift: Exps,
    /// The box the sides live in: the instance box raised by `shift`.
    pub checked: Truncation,
}

impl Sides {
    pub fn residual(&self) -> MultiSeries {
        &self.lhs - &self.rhs
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationResult {
    pub instance: IdentityInstance,
    pub residual_zero: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub residual_terms: usize,
    pub stop_index: Option<u32>,
    #[serde(serialize_with = "serialize_shift")]
    pub shift: Exps,
    pub checked: Truncation,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn serialize_shift<S: Serializer>(shift: &Exps, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(None)?;
    for v in VarId::ALL {
        if shift[v.index()] > 0 {
            map.serialize_entry(v.name(), &shift[v.index()])?;
        }
    }
    map.end()
}

/// Symbol bindings applied while the sides are built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding([Monomial; NVARS]);

impl Binding {
    pub fn identity() -> Self {
        Binding(VarId::ALL.map(Monomial::var))
    }

    /// Binds symbol `v` to `target`.
    pub fn bind(mut self, v: VarId, target: Monomial) -> Self {
        self.0[v.index()] = target;
        self
    }

    pub fn target(&self, v: VarId) -> &Monomial {
        &self.0[v.index()]
    }
}

impl Default for Binding {
    fn default() -> Self {
        Self::identity()
    }
}

type Builder = fn(&Ctx) -> Result<(MultiSeries, MultiSeries)>;

fn builder(id: IdentityId) -> Builder {
    use IdentityId::*;
    match id {
        HAMME => finite::hamme,
        UCH => finite::uch,
        DILCH => finite::dilch,
        PRODINGER => finite::prodinger,
        FLZ => finite::flz,
        STAR => finite::star,
        UCH001 => finite::uch001,
        UCH002 => finite::uch002,
        PF12 => finite::pf12,
        PRODNEW => finite::prodnew,
        RDIV => finite::rdiv,
        DILCHNEW => finite::dilchnew,
        DILCHCOR => finite::dilchcor,
        QBT1 => finite::qbt1,
        MNPQ => finite::mnpq,
        NEW => bibasic::new,
        NEWPF => bibasic::newpf,
        NEW2 => bibasic::new2,
        NEWNEW => bibasic::newnew,
        CORNEW => bibasic::cornew,
        LONG => bibasic::long,
        SYM => bibasic::sym,
        U81 => infinite::u81,
        RU81 => infinite::ru81,
        LIU => infinite::liu,
        AGARWAL => infinite::agarwal,
        QSQ => infinite::qsq,
        LONGINF => infinite::longinf,
        ODDDIV => infinite::odddiv,
        VH84 => infinite::vh84,
        GVHSER => infinite::gvhser,
        BS => infinite::bs,
        GVH => infinite::gvh,
        MAIN1 => lambert::main1,
        MAIN2 => lambert::main2,
        APM1 => lambert::apm1,
        P1 => lambert::p1,
        M123 => lambert::m123,
        MAIN3 => lambert::main3,
        M23 => lambert::m23,
        DD1 => dd::dd1,
        DD2 => dd::dd2,
        DD3 => dd::dd3,
    }
}

/// Runs `build` with the smallest shift that keeps every prefactor free of
/// negative exponents, found by a probe in the zero box.
fn build_shifted<F>(params: Params, trunc: Truncation, binding: &Binding, build: F) -> Result<Sides>
where
    F: Fn(&Ctx) -> Result<(MultiSeries, MultiSeries)>,
{
    let probe = Ctx::new(params, Truncation::new([0; NVARS])?, binding.0.clone(), [0; NVARS]);
    build(&probe)?;
    let mut shift = [0u32; NVARS];
    for (s, d) in shift.iter_mut().zip(probe.deficit()) {
        *s = u32::try_from(d).map_err(|_| Error::InvalidParams("shift out of range".into()))?;
    }
    let mut checked = trunc;
    for v in VarId::ALL {
        checked = checked.raised(v, shift[v.index()])?;
    }
    let ctx = Ctx::new(params, checked, binding.0.clone(), shift);
    let (lhs, rhs) = build(&ctx)?;
    if ctx.deficit().iter().any(|&d| d > 0) {
        // A summand the probe never reached needed a larger shift.
        return Err(Error::TruncationTooSmall(format!(
            "negative exponents beyond the probe: {:?}",
            ctx.deficit()
        )));
    }
    Ok(Sides { lhs, rhs, stop_index: ctx.stop_index(), shift, checked })
}

/// Both sides of `instance`.
pub fn build_sides(instance: &IdentityInstance) -> Result<Sides> {
    build_bound(instance, &Binding::identity())
}

/// Both sides of `instance` with symbols bound as in `binding`.
pub fn build_bound(instance: &IdentityInstance, binding: &Binding) -> Result<Sides> {
    validate(instance.id, &instance.params)?;
    build_shifted(instance.params, instance.trunc, binding, builder(instance.id))
}

pub fn verify(instance: &IdentityInstance) -> Result<VerificationResult> {
    let start = Instant::now();
    let sides = build_sides(instance)?;
    let residual = sides.residual();
    Ok(VerificationResult {
        instance: *instance,
        residual_zero: residual.is_zero(),
        lhs_terms: sides.lhs.len(),
        rhs_terms: sides.rhs.len(),
        residual_terms: residual.len(),
        stop_index: sides.stop_index,
        shift: sides.shift,
        checked: sides.checked,
        elapsed: start.elapsed(),
    })
}

/// Explicit parameter ranges; unset parameters use the catalog grid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamRanges([Option<RangeInclusive<i64>>; 5]);

impl ParamRanges {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, r: RangeInclusive<i64>) -> Self {
        self.0[p.index()] = Some(r);
        self
    }

    pub fn get(&self, p: Param) -> Option<&RangeInclusive<i64>> {
        self.0[p.index()].as_ref()
    }

    pub fn is_set(&self, p: Param) -> bool {
        self.0[p.index()].is_some()
    }
}

/// Cartesian product of the ranges for the parameters of `id`, in the
/// entry's parameter order. Every instance must satisfy the constraints;
/// ranges given for parameters the entry does not take are rejected.
pub fn plan_sweep(id: IdentityId, ranges: &ParamRanges) -> Result<Vec<Params>> {
    let e = entry(id);
    for p in Param::ALL {
        if ranges.is_set(p) && !e.params.contains(&p) {
            return Err(Error::InvalidParams(format!("{id} takes no parameter {}", p.name())));
        }
    }
    let mut points = vec![Params::new()];
    for &p in e.params {
        let mut next = Vec::new();
        for cur in &points {
            let range = ranges.get(p).cloned().unwrap_or_else(|| default_range(id, p, cur));
            next.extend(range.map(|v| cur.with(p, v)));
        }
        points = next;
    }
    for pt in &points {
        validate(id, pt)?;
    }
    Ok(points)
}

/// Verifies every instance, concurrently, returning results in instance
/// order. Per-instance errors are kept, not propagated.
pub fn verify_all(instances: &[IdentityInstance]) -> Vec<Result<VerificationResult>> {
    instances.par_iter().map(verify).collect()
}

pub fn sweep(
    id: IdentityId,
    ranges: &ParamRanges,
    trunc: Truncation,
) -> Result<Vec<Result<VerificationResult>>> {
    let instances: Vec<IdentityInstance> = plan_sweep(id, ranges)?
        .into_iter()
        .map(|p| IdentityInstance::new(id, p, trunc))
        .collect();
    Ok(verify_all(&instances))
}

/// Scales the special sides before comparison.
pub type SideFactor = Arc<dyn Fn(Truncation) -> Result<MultiSeries> + Send + Sync>;

/// The target of a reduction: a catalog instance or an explicit builder.
#[derive(Clone)]
pub enum Special {
    Entry(IdentityId, Params),
    /// `NEW` at `r = 0` in the displayed form with `x` replaced by `pq`.
    ChenFu { m: u32, n: u32 },
}

/// A claim that `general` at `general_params`, with symbols bound, has the
/// same sides as `special` (times `factor`).
#[derive(Clone)]
pub struct Reduction {
    pub label: String,
    pub general: IdentityId,
    pub general_params: Params,
    pub binding: Binding,
    pub special: Special,
    pub factor: Option<SideFactor>,
}

/// Whether both specialized sides of `general` equal the (scaled) sides of
/// `special` in `trunc`.
pub fn reduction_check(red: &Reduction, trunc: Truncation) -> Result<bool> {
    let g = build_bound(&IdentityInstance::new(red.general, red.general_params, trunc), &red.binding)?;
    let (mut lhs, mut rhs, shift) = match &red.special {
        Special::Entry(id, params) => {
            let s = build_sides(&IdentityInstance::new(*id, *params, trunc))?;
            (s.lhs, s.rhs, s.shift)
        }
        Special::ChenFu { m, n } => {
            let (l, r) = chen_fu_sides(*m, *n, trunc)?;
            (l, r, [0; NVARS])
        }
    };
    if shift != g.shift {
        return Err(Error::InvalidParams(format!(
            "{}: general and special sides use different shifts",
            red.label
        )));
    }
    if let Some(f) = &red.factor {
        let f = f(g.checked)?;
        lhs = &lhs * &f;
        rhs = &rhs * &f;
    }
    Ok(g.lhs == lhs && g.rhs == rhs)
}

/// The reduction claims checked by the test suite, over small grids.
pub fn standard_reductions() -> Vec<Reduction> {
    use IdentityId::*;
    let mut out = Vec::new();
    for m in 0..=3 {
        out.push(Reduction {
            label: format!("MAIN1(m={m}) at p=1 is MAIN2(m={m})"),
            general: MAIN1,
            general_params: Params::of(&[("m", m)]),
            binding: Binding::identity().bind(VarId::P, Monomial::one()),
            special: Special::Entry(MAIN2, Params::of(&[("m", m)])),
            factor: None,
        });
    }
    for n in 0..=4i64 {
        for mt in 0..=4u32 {
            let inv_qq: SideFactor = Arc::new(move |t| {
                crate::qtools::pochhammer_inv(&Monomial::var(VarId::Q), &Monomial::var(VarId::Q), n as u32, t)
            });
            for (general, gp) in [
                (UCH001, Params::of(&[("m", 0), ("n", n), ("r", 0)])),
                (UCH002, Params::of(&[("m", 0), ("n", n)])),
            ] {
                out.push(Reduction {
                    label: format!("{general} at m=0, x=q^{mt} is UCH(n={n}, m={mt}) / (q;q)_{n}"),
                    general,
                    general_params: gp,
                    binding: Binding::identity().bind(VarId::X, Monomial::var_pow(VarId::Q, mt)),
                    special: Special::Entry(UCH, Params::of(&[("n", n), ("m", i64::from(mt))])),
                    factor: Some(inv_qq.clone()),
                });
            }
        }
    }
    for n in 0..=8 {
        out.push(Reduction {
            label: format!("RDIV(n={n}, r=0) is HAMME(n={n})"),
            general: RDIV,
            general_params: Params::of(&[("n", n), ("r", 0)]),
            binding: Binding::identity(),
            special: Special::Entry(HAMME, Params::of(&[("n", n)])),
            factor: None,
        });
    }
    for n in 0..=5 {
        out.push(Reduction {
            label: format!("DILCH(m=1, n={n}) is RDIV(n={n}, r=0)"),
            general: DILCH,
            general_params: Params::of(&[("m", 1), ("n", n)]),
            binding: Binding::identity(),
            special: Special::Entry(RDIV, Params::of(&[("n", n), ("r", 0)])),
            factor: None,
        });
    }
    for m in 0..=4u32 {
        for n in 0..=4u32 {
            let pq = Monomial::var(VarId::P).mul(&Monomial::var(VarId::Q));
            out.push(Reduction {
                label: format!("NEW(m={m}, n={n}, r=0) at x=pq is the Chen-Fu form"),
                general: NEW,
                general_params: Params::of(&[("m", i64::from(m)), ("n", i64::from(n)), ("r", 0)]),
                binding: Binding::identity().bind(VarId::X, pq),
                special: Special::ChenFu { m, n },
                factor: None,
            });
        }
    }
    out
}
