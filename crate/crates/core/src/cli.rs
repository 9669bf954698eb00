//! Command-line driver: catalog listing, verification sweeps with JSON
//! reports, coefficient queries and the partition statistics.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{
    catalog, entry, plan_sweep, verify, IdentityId, IdentityInstance, Param, ParamRanges, VerificationResult,
};
use crate::numbers::{divisor_count_bounded, lambert_series, odd_divisor_series, partitions_distinct, t_stat, GapBound};
use crate::qtools::{carlitz_eulerian, eulerian};
use crate::series::{Truncation, VarId, NVARS};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pqseries", version, about = "Exact verification of (p,q)-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog entries whose id contains FILTER (case-insensitive).
    List { filter: Option<String> },
    /// Verify identities over parameter ranges.
    Verify(VerifyArgs),
    /// Print one exact coefficient of a built-in series.
    Coeff(CoeffArgs),
    /// Enumerate P(n, N) and check d(n,N) = t(n,N) - t(n-N,N).
    Partitions {
        #[arg(long)]
        n: i64,
        #[arg(long = "N")]
        big_n: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Structured,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id; repeatable.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Every catalog entry.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<String>,
    #[arg(long = "N", allow_hyphen_values = true)]
    big_n: Option<String>,
    /// Truncation cap `var=N`; repeatable. Unset variables keep the catalog default.
    #[arg(long = "cap")]
    caps: Vec<String>,
    /// Write the structured report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("series").required(true))]
struct CoeffArgs {
    /// `sum sigma_m(n) q^n`.
    #[arg(long, group = "series")]
    lambert_m: Option<u32>,
    /// `sum_k q^k/(1-q^{2k})`.
    #[arg(long, group = "series")]
    odd_divisor: bool,
    /// Eulerian polynomial `A_n(t)`.
    #[arg(long, group = "series")]
    eulerian: Option<u32>,
    /// Carlitz polynomial `A_n(t;q)`.
    #[arg(long, group = "series")]
    carlitz: Option<u32>,
    /// Exponent of `q`.
    #[arg(long, default_value_t = 0)]
    q: u32,
    /// Exponent of `t`.
    #[arg(long, default_value_t = 0)]
    t: u32,
    #[arg(long = "cap")]
    caps: Vec<String>,
}

/// Echo of the verification configuration in the report.
#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub ids: Vec<IdentityId>,
    pub ranges: Vec<(String, String)>,
    pub caps: Vec<(String, u32)>,
    pub format: Format,
    pub jobs: Option<usize>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Detail {
    Verified(VerificationResult),
    Failed { instance: IdentityInstance, error: String },
}

#[derive(Debug, Serialize)]
pub struct Outcome {
    pub status: Status,
    #[serde(flatten)]
    pub detail: Detail,
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub total_ms: f64,
    pub per_instance_ms: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub config: RunConfig,
    pub results: Vec<Outcome>,
    pub summary: Summary,
    pub timing: Timing,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 && self.summary.error == 0 {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_PASS };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    let res = match cli.command {
        Command::List { filter } => cmd_list(filter.as_deref(), out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Coeff(a) => cmd_coeff(a, out),
        Command::Partitions { n, big_n } => cmd_partitions(n, big_n, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParams(format!("i/o: {e}"))
}

fn cmd_list(filter: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let filter = filter.map(str::to_ascii_uppercase);
    for e in catalog() {
        if filter.as_deref().is_some_and(|f| !e.id.as_str().contains(f)) {
            continue;
        }
        let params: Vec<&str> = e.params.iter().map(|p| p.name()).collect();
        writeln!(out, "{:<10} [{}] {} -- {}", e.id.as_str(), params.join(","), e.constraints, e.name).map_err(io)?;
        writeln!(out, "           {}", e.statement).map_err(io)?;
    }
    Ok(EXIT_PASS)
}

/// `"a..b"` or `"a"`; negative endpoints allowed.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::InvalidParams(format!("range `{s}` is not `a..b` or `a`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// `"var=N"` with `N >= 1`.
pub fn parse_cap(s: &str) -> Result<(VarId, u32)> {
    let bad = || Error::InvalidParams(format!("cap `{s}` is not `var=N` with N >= 1"));
    let (v, n) = s.split_once('=').ok_or_else(bad)?;
    let v = VarId::from_name(v.trim()).ok_or_else(bad)?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    Ok((v, n))
}

fn apply_caps(base: Truncation, caps: &[(VarId, u32)]) -> Result<Truncation> {
    caps.iter().try_fold(base, |t, &(v, n)| t.with_cap(v, n))
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let ids: Vec<IdentityId> = if a.all {
        IdentityId::ALL.to_vec()
    } else if a.ids.is_empty() {
        return Err(Error::InvalidParams("select identities with --id or --all".into()));
    } else {
        a.ids.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let mut ranges = ParamRanges::new();
    let mut echo = Vec::new();
    for (p, s) in [(Param::M, &a.m), (Param::N, &a.n), (Param::R, &a.r), (Param::I, &a.i), (Param::BigN, &a.big_n)] {
        if let Some(s) = s {
            ranges = ranges.with(p, parse_range(s)?);
            echo.push((p.name().to_string(), s.clone()));
        }
    }
    let caps: Vec<(VarId, u32)> = a.caps.iter().map(|s| parse_cap(s)).collect::<Result<_>>()?;
    if a.jobs == Some(0) {
        return Err(Error::InvalidParams("--jobs must be at least 1".into()));
    }

    let mut instances = Vec::new();
    for &id in &ids {
        let e = entry(id);
        // With --all, ranges only constrain the entries that declare them.
        let mut local = ParamRanges::new();
        for p in Param::ALL {
            if let Some(r) = ranges.get(p) {
                if !a.all || e.params.contains(&p) {
                    local = local.with(p, r.clone());
                }
            }
        }
        let trunc = apply_caps(e.default_trunc(), &caps)?;
        for params in plan_sweep(id, &local)? {
            instances.push(IdentityInstance::new(id, params, trunc));
        }
    }

    let start = Instant::now();
    let run_all = || -> Vec<(Result<VerificationResult>, Duration)> {
        instances
            .par_iter()
            .map(|inst| {
                let t = Instant::now();
                let r = verify(inst);
                (r, t.elapsed())
            })
            .collect()
    };
    let raw = match a.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?
            .install(run_all),
        None => run_all(),
    };
    let total = start.elapsed();

    let mut summary = Summary::default();
    let mut results = Vec::with_capacity(raw.len());
    let mut per_instance_ms = Vec::with_capacity(raw.len());
    for (inst, (r, dt)) in instances.iter().zip(raw) {
        per_instance_ms.push(dt.as_secs_f64() * 1e3);
        let outcome = match r {
            Ok(v) if v.residual_zero => {
                summary.pass += 1;
                Outcome { status: Status::Pass, detail: Detail::Verified(v) }
            }
            Ok(v) => {
                summary.fail += 1;
                Outcome { status: Status::Fail, detail: Detail::Verified(v) }
            }
            Err(e) => {
                summary.error += 1;
                Outcome { status: Status::Error, detail: Detail::Failed { instance: *inst, error: e.to_string() } }
            }
        };
        results.push(outcome);
    }
    let report = Report {
        tool_version: env!("CARGO_PKG_VERSION"),
        config: RunConfig {
            ids,
            ranges: echo,
            caps: caps.iter().map(|&(v, n)| (v.name().to_string(), n)).collect(),
            format: a.format,
            jobs: a.jobs,
        },
        results,
        summary,
        timing: Timing { total_ms: total.as_secs_f64() * 1e3, per_instance_ms },
    };

    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = &a.out {
        std::fs::write(path, format!("{json}\n")).map_err(io)?;
    }
    match a.format {
        Format::Structured => writeln!(out, "{json}").map_err(io)?,
        Format::Text => {
            for (o, ms) in report.results.iter().zip(&report.timing.per_instance_ms) {
                let line = match &o.detail {
                    Detail::Verified(v) => {
                        let tag = if v.residual_zero { "PASS" } else { "FAIL" };
                        format!("{tag}  {}  ({} residual terms, {ms:.1} ms)", v.instance, v.residual_terms)
                    }
                    Detail::Failed { instance, error } => format!("ERROR {instance}  {error}"),
                };
                writeln!(out, "{line}").map_err(io)?;
            }
            let s = &report.summary;
            writeln!(out, "pass {} fail {} error {} in {:.1} ms", s.pass, s.fail, s.error, report.timing.total_ms)
                .map_err(io)?;
        }
    }
    Ok(report.exit_code())
}

fn cmd_coeff(a: CoeffArgs, out: &mut dyn Write) -> Result<i32> {
    let caps: Vec<(VarId, u32)> = a.caps.iter().map(|s| parse_cap(s)).collect::<Result<_>>()?;
    let base = Truncation::from_caps(&[(VarId::Q, 40), (VarId::P, 20), (VarId::T, 8)])?;
    let trunc = apply_caps(base, &caps)?;
    let mut exps = [0u32; NVARS];
    exps[VarId::Q.index()] = a.q;
    exps[VarId::T.index()] = a.t;
    let series = if let Some(m) = a.lambert_m {
        lambert_series(m, trunc)
    } else if a.odd_divisor {
        odd_divisor_series(trunc)?
    } else if let Some(n) = a.eulerian {
        eulerian(n, VarId::T, trunc)
    } else if let Some(n) = a.carlitz {
        carlitz_eulerian(n, VarId::T, VarId::Q, trunc)
    } else {
        unreachable!("clap requires one series selector")
    };
    let c = series.coefficient(&exps)?;
    writeln!(out, "{c}").map_err(io)?;
    Ok(EXIT_PASS)
}

fn cmd_partitions(n: i64, big_n: i64, out: &mut dyn Write) -> Result<i32> {
    if n < 1 || big_n < 1 {
        return Err(Error::InvalidParams(format!("partitions needs n >= 1 and N >= 1, got n={n}, N={big_n}")));
    }
    let bound = GapBound::Bounded(big_n as u64);
    let parts: Vec<String> = partitions_distinct(n as u64, bound).iter().map(|p| p.to_string()).collect();
    let t = t_stat(n, bound);
    let t_prev = t_stat(n - big_n, bound);
    let d = divisor_count_bounded(n as u64, big_n as u64) as i64;
    let ok = t - t_prev == d;
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io);
    w(out, format!("P({n},{big_n}) = {{{}}}", parts.join(", ")))?;
    w(out, format!("t({n},{big_n}) = {t}"))?;
    w(out, format!("t({},{big_n}) = {t_prev}", n - big_n))?;
    w(out, format!("d({n},{big_n}) = {d}"))?;
    w(out, format!(
        "check t({n},{big_n}) - t({},{big_n}) = {} {} d({n},{big_n}): {}",
        n - big_n,
        t - t_prev,
        if ok { "=" } else { "!=" },
        if ok { "pass" } else { "fail" }
    ))?;
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}
