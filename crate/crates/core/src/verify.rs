//! Identity checks: evaluate two independent routes for the same series and
//! compare them coefficient by coefficient, exactly.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Result};
use crate::formulas::{self, LciParams};
use crate::partitions::{self, RsnParams};
use crate::qseries::LaurentPoly;
use crate::semigroup::{self, NumericalSemigroup, SearchMode};

/// One way of computing a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `Z_{r,s,n}` from the product formula.
    ClosedForm,
    /// `Z_{r,s,n}` by enumerating `P(r,s,n)`.
    PartitionEnum,
    /// `Z_{r,s,n}` by counting nested monomial ideals in `<r,s>`.
    FlagOracle,
    /// `m = 0` slice of the closed form.
    LePart,
    /// `m >= 1` slices of the closed form.
    RPart,
    /// Enumeration restricted to `mu_1 - mu_s <= r - 1`.
    PartitionEnumLe,
    /// Enumeration restricted to `mu_1 - mu_s = r`.
    PartitionEnumR,
    /// Space-curve Hilbert series from the closed form.
    LciFormula,
    /// Same, for the triple with `x` and `v` exchanged.
    LciFormulaSwapped,
    /// Staircase count in the value semigroup.
    SemigroupOracle,
    /// `q^d` with `d = n k (k+1)/2`.
    MinimalSizeFormula,
    /// `q^d` with `d` the minimal size found by enumeration.
    MinimalSizeEnum,
    /// Staircase counts with the tail from `2 genus` on replaced by the
    /// value at `2 genus`.
    StableTail,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::ClosedForm => "closed_form",
            Route::PartitionEnum => "partition_enum",
            Route::FlagOracle => "flag_oracle",
            Route::LePart => "le_part",
            Route::RPart => "r_part",
            Route::PartitionEnumLe => "partition_enum_le",
            Route::PartitionEnumR => "partition_enum_r",
            Route::LciFormula => "lci_formula",
            Route::LciFormulaSwapped => "lci_formula_swapped",
            Route::SemigroupOracle => "semigroup_oracle",
            Route::MinimalSizeFormula => "minimal_size_formula",
            Route::MinimalSizeEnum => "minimal_size_enum",
            Route::StableTail => "stable_tail",
        }
    }

    fn kind(&self) -> ParamKind {
        match self {
            Route::ClosedForm
            | Route::PartitionEnum
            | Route::FlagOracle
            | Route::LePart
            | Route::RPart
            | Route::PartitionEnumLe
            | Route::PartitionEnumR
            | Route::MinimalSizeFormula
            | Route::MinimalSizeEnum => ParamKind::Rsn,
            Route::LciFormula | Route::LciFormulaSwapped => ParamKind::Lci,
            Route::SemigroupOracle => ParamKind::LciOrGenerators,
            Route::StableTail => ParamKind::Generators,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ParamKind {
    Rsn,
    Lci,
    Generators,
    LciOrGenerators,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorParams {
    pub generators: Vec<u32>,
}

/// Parameters of a check. Serialized untagged: `{"r","s","n"}`,
/// `{"r","t","n"}` or `{"generators"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckParams {
    Rsn(RsnParams),
    Lci(LciParams),
    Generators(GeneratorParams),
}

impl CheckParams {
    fn describe(&self) -> String {
        match self {
            CheckParams::Rsn(p) => format!("(r,s,n)={p}"),
            CheckParams::Lci(p) => format!("(r,t,n)={p}"),
            CheckParams::Generators(g) => format!("<{}>", join(&g.generators)),
        }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// A single comparison to run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    pub params: CheckParams,
    /// Compare coefficients of `q^0 .. q^order`.
    pub order: u32,
    pub routes: [Route; 2],
    /// Test hook: adds 1 to the right-hand coefficient at this exponent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inject_fault: Option<i64>,
}

impl CheckSpec {
    pub fn new(
        name: impl Into<String>,
        params: CheckParams,
        order: u32,
        routes: [Route; 2],
    ) -> Self {
        CheckSpec {
            name: name.into(),
            params,
            order,
            routes,
            inject_fault: None,
        }
    }

    /// Structural validity: distinct routes that accept these parameters.
    pub fn validate(&self) -> Result<()> {
        if self.routes[0] == self.routes[1] {
            return Err(Error::InvalidArgument(format!(
                "{}: routes must differ, both are {}",
                self.name,
                self.routes[0].as_str()
            )));
        }
        for route in self.routes {
            let ok = matches!(
                (route.kind(), &self.params),
                (ParamKind::Rsn, CheckParams::Rsn(_))
                    | (
                        ParamKind::Lci | ParamKind::LciOrGenerators,
                        CheckParams::Lci(_)
                    )
                    | (
                        ParamKind::Generators | ParamKind::LciOrGenerators,
                        CheckParams::Generators(_)
                    )
            );
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "{}: route {} does not accept {}",
                    self.name,
                    route.as_str(),
                    self.params.describe()
                )));
            }
        }
        match &self.params {
            CheckParams::Rsn(p) => {
                RsnParams::new(p.r, p.s, p.n)?;
            }
            CheckParams::Lci(p) => {
                LciParams::new(p.r, p.t, p.n)?;
            }
            CheckParams::Generators(g) => {
                NumericalSemigroup::new(&g.generators, 0)?;
            }
        }
        Ok(())
    }

    /// The hypotheses under which the compared identity is claimed.
    pub fn hypothesis_violation(&self) -> Option<String> {
        let uses = |r: Route| self.routes.contains(&r);
        match &self.params {
            CheckParams::Rsn(p)
                if uses(Route::MinimalSizeFormula) || uses(Route::MinimalSizeEnum) =>
            {
                if p.n < 2 || p.s % p.n != 0 {
                    return Some(format!("s = {} is not n k with n = {} >= 2", p.s, p.n));
                }
                let k = p.s / p.n;
                (k >= p.r).then(|| format!("k = s/n = {k} must be < r = {}", p.r))
            }
            CheckParams::Rsn(p) => p.hypothesis_violation(),
            CheckParams::Lci(p) => p.hypothesis_violation().or_else(|| {
                if !uses(Route::LciFormulaSwapped) {
                    return None;
                }
                match p.swapped() {
                    Ok(q) => q.hypothesis_violation(),
                    Err(e) => Some(e.to_string()),
                }
            }),
            CheckParams::Generators(g) => {
                if !uses(Route::StableTail) {
                    return None;
                }
                let genus = NumericalSemigroup::new(&g.generators, 0).ok()?.genus();
                (self.order <= 2 * genus)
                    .then(|| format!("order {} must exceed 2 * genus = {}", self.order, 2 * genus))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Resource,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub spec: CheckSpec,
    pub status: Status,
    pub lhs: Option<LaurentPoly>,
    pub rhs: Option<LaurentPoly>,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed: Duration,
    /// Ran outside the identity's hypotheses (`force`).
    pub unsupported: bool,
    /// Why a route failed to produce a series, if it did.
    pub message: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    name: String,
    params: CheckParams,
    order: u32,
    routes: [Route; 2],
    status: Status,
    lhs: Option<LaurentPoly>,
    rhs: Option<LaurentPoly>,
    first_mismatch: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mismatch_coefficients: Option<[String; 2]>,
    elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unsupported: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    message: Option<String>,
}

impl Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            name: self.spec.name.clone(),
            params: self.spec.params.clone(),
            order: self.spec.order,
            routes: self.spec.routes,
            status: self.status,
            lhs: self.lhs.clone(),
            rhs: self.rhs.clone(),
            first_mismatch: self.first_mismatch.as_ref().map(|m| m.exponent),
            mismatch_coefficients: self
                .first_mismatch
                .as_ref()
                .map(|m| [m.lhs.to_string(), m.rhs.to_string()]),
            elapsed_ms: self.elapsed.as_millis() as u64,
            unsupported: self.unsupported,
            message: self.message.clone(),
        }
        .serialize(serializer)
    }
}

/// Knobs shared by all checks.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Run even when hypotheses fail; such reports are marked unsupported.
    pub force: bool,
    pub budget: Budget,
    /// Run suite entries concurrently (report order is unaffected).
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            force: false,
            budget: Budget::default(),
            parallel: true,
        }
    }
}

/// Smallest exponent below both precisions where the two series differ.
pub fn first_mismatch(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<Mismatch> {
    let diff = lhs - rhs;
    let exponent = diff.valuation()?;
    Some(Mismatch {
        exponent,
        lhs: lhs.coeff(exponent).expect("below precision"),
        rhs: rhs.coeff(exponent).expect("below precision"),
    })
}

fn rsn(params: &CheckParams) -> RsnParams {
    match params {
        CheckParams::Rsn(p) => *p,
        _ => unreachable!("validated"),
    }
}

fn evaluate(route: Route, spec: &CheckSpec, budget: Budget) -> Result<LaurentPoly> {
    let order = spec.order;
    match route {
        Route::ClosedForm => formulas::z_rsn_closed(&rsn(&spec.params), order),
        Route::PartitionEnum => Ok(partitions::series_from_enumeration(
            &rsn(&spec.params),
            order,
        )),
        Route::FlagOracle => semigroup::flag_series_oracle_with(&rsn(&spec.params), order, budget),
        Route::LePart => formulas::z_le_part(&rsn(&spec.params), order),
        Route::RPart => formulas::z_r_part(&rsn(&spec.params), order),
        Route::PartitionEnumLe => Ok(partitions::series_le_from_enumeration(
            &rsn(&spec.params),
            order,
        )),
        Route::PartitionEnumR => Ok(partitions::series_r_from_enumeration(
            &rsn(&spec.params),
            order,
        )),
        Route::MinimalSizeEnum => {
            let d = partitions::minimal_size(&rsn(&spec.params))?;
            Ok(LaurentPoly::monomial(1, d as i64))
        }
        Route::MinimalSizeFormula => {
            let p = rsn(&spec.params);
            let k = p.s / p.n;
            Ok(LaurentPoly::monomial(
                1,
                formulas::minimal_size_formula(p.n, k) as i64,
            ))
        }
        Route::LciFormula | Route::LciFormulaSwapped => {
            let CheckParams::Lci(p) = &spec.params else {
                unreachable!("validated")
            };
            let p = if route == Route::LciFormulaSwapped {
                p.swapped()?
            } else {
                *p
            };
            formulas::hilb_series_lci(&p, order)
        }
        Route::SemigroupOracle => {
            let sg = semigroup_for(&spec.params, order)?;
            semigroup::hilb_series_oracle_with(&sg, order, SearchMode::Pruned, budget)
        }
        Route::StableTail => {
            let sg = semigroup_for(&spec.params, order)?;
            let series =
                semigroup::hilb_series_oracle_with(&sg, order, SearchMode::Pruned, budget)?;
            let from = 2 * i64::from(sg.genus());
            let tail = series.coeff(from)?;
            let coeffs = (0..=i64::from(order))
                .map(|k| {
                    if k < from {
                        series.coeff(k)
                    } else {
                        Ok(tail.clone())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LaurentPoly::new(0, coeffs, Some(i64::from(order) + 1)))
        }
    }
}

fn semigroup_for(params: &CheckParams, order: u32) -> Result<NumericalSemigroup> {
    let gens = match params {
        CheckParams::Lci(p) => vec![p.t * p.n, (p.r - p.t) * p.n, p.r],
        CheckParams::Generators(g) => g.generators.clone(),
        CheckParams::Rsn(_) => unreachable!("validated"),
    };
    NumericalSemigroup::for_colength(&gens, order)
}

/// Validates, checks hypotheses, then runs one comparison.
pub fn run_check(spec: &CheckSpec, opts: &RunOptions) -> Result<VerificationReport> {
    spec.validate()?;
    let violation = spec.hypothesis_violation();
    if let Some(v) = &violation {
        if !opts.force {
            return Err(Error::Hypothesis(format!("{}: {v}", spec.name)));
        }
    }
    Ok(execute(spec, opts, violation.is_some()))
}

fn execute(spec: &CheckSpec, opts: &RunOptions, unsupported: bool) -> VerificationReport {
    let start = Instant::now();
    let lhs = evaluate(spec.routes[0], spec, opts.budget);
    let rhs = evaluate(spec.routes[1], spec, opts.budget).map(|mut r| {
        if let Some(e) = spec.inject_fault {
            r = &r + &LaurentPoly::monomial(1, e);
        }
        r
    });
    let elapsed = start.elapsed();
    let mut report = VerificationReport {
        spec: spec.clone(),
        status: Status::Pass,
        lhs: None,
        rhs: None,
        first_mismatch: None,
        elapsed,
        unsupported,
        message: None,
    };
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            report.first_mismatch = first_mismatch(&l, &r);
            if report.first_mismatch.is_some() {
                report.status = Status::Fail;
            }
            report.lhs = Some(l);
            report.rhs = Some(r);
        }
        (l, r) => {
            let errors: Vec<Error> = [l.as_ref().err(), r.as_ref().err()]
                .into_iter()
                .flatten()
                .cloned()
                .collect();
            report.status = if errors.iter().any(|e| matches!(e, Error::Resource(_))) {
                Status::Resource
            } else {
                Status::Fail
            };
            report.message = Some(
                errors
                    .iter()
                    .map(Error::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            );
            report.lhs = l.ok();
            report.rhs = r.ok();
        }
    }
    report
}

/// Runs every check. All specs are validated (and hypotheses checked unless
/// `force`) before anything is computed; after that nothing short-circuits.
pub fn run_suite(specs: &[CheckSpec], opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    let mut flags = Vec::with_capacity(specs.len());
    for spec in specs {
        spec.validate()?;
        let violation = spec.hypothesis_violation();
        if let (Some(v), false) = (&violation, opts.force) {
            return Err(Error::Hypothesis(format!("{}: {v}", spec.name)));
        }
        flags.push(violation.is_some());
    }
    let run = |(spec, unsupported): (&CheckSpec, &bool)| execute(spec, opts, *unsupported);
    Ok(if opts.parallel {
        specs.par_iter().zip(flags.par_iter()).map(run).collect()
    } else {
        specs.iter().zip(flags.iter()).map(run).collect()
    })
}

/// All PASS (vacuously true for an empty suite).
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

fn rsn_check(tag: &str, p: RsnParams, order: u32, routes: [Route; 2]) -> CheckSpec {
    CheckSpec::new(
        format!("{tag}/{}~{}{p}", routes[0].as_str(), routes[1].as_str()),
        CheckParams::Rsn(p),
        order,
        routes,
    )
}

/// Closed form, partition enumeration and flag oracle, pairwise.
pub fn plus_curve_specs(p: RsnParams, order: u32, flag_order: u32) -> Vec<CheckSpec> {
    vec![
        rsn_check(
            "plus_curve",
            p,
            order,
            [Route::ClosedForm, Route::PartitionEnum],
        ),
        rsn_check(
            "plus_curve",
            p,
            flag_order,
            [Route::ClosedForm, Route::FlagOracle],
        ),
        rsn_check(
            "plus_curve",
            p,
            flag_order,
            [Route::PartitionEnum, Route::FlagOracle],
        ),
    ]
}

pub fn decomposition_specs(p: RsnParams, order: u32) -> Vec<CheckSpec> {
    vec![
        rsn_check(
            "decomposition",
            p,
            order,
            [Route::LePart, Route::PartitionEnumLe],
        ),
        rsn_check(
            "decomposition",
            p,
            order,
            [Route::RPart, Route::PartitionEnumR],
        ),
    ]
}

pub fn lci_spec(p: LciParams, order: u32) -> CheckSpec {
    CheckSpec::new(
        format!("lci/lci_formula~semigroup_oracle{p}"),
        CheckParams::Lci(p),
        order,
        [Route::LciFormula, Route::SemigroupOracle],
    )
}

pub fn lci_symmetry_spec(p: LciParams, order: u32) -> CheckSpec {
    CheckSpec::new(
        format!("lci_symmetry/lci_formula~lci_formula_swapped{p}"),
        CheckParams::Lci(p),
        order,
        [Route::LciFormula, Route::LciFormulaSwapped],
    )
}

pub fn minimal_size_spec(p: RsnParams) -> CheckSpec {
    rsn_check(
        "minimal_size",
        p,
        0,
        [Route::MinimalSizeEnum, Route::MinimalSizeFormula],
    )
}

pub fn stabilization_spec(generators: &[u32], order: u32) -> CheckSpec {
    CheckSpec::new(
        format!(
            "stabilization/semigroup_oracle~stable_tail<{}>",
            join(generators)
        ),
        CheckParams::Generators(GeneratorParams {
            generators: generators.to_vec(),
        }),
        order,
        [Route::SemigroupOracle, Route::StableTail],
    )
}

/// Three pairwise comparisons of `Z_{r,s,n}` through `q^order`.
pub fn verify_plus_curve(
    p: RsnParams,
    order: u32,
    opts: &RunOptions,
) -> Result<Vec<VerificationReport>> {
    run_suite(&plus_curve_specs(p, order, order), opts)
}

/// The two slices of the closed form against filtered enumeration.
pub fn verify_decomposition(
    p: RsnParams,
    order: u32,
    opts: &RunOptions,
) -> Result<Vec<VerificationReport>> {
    run_suite(&decomposition_specs(p, order), opts)
}

pub fn verify_lci(p: LciParams, order: u32, opts: &RunOptions) -> Result<VerificationReport> {
    run_check(&lci_spec(p, order), opts)
}

pub fn verify_minimal_size(p: RsnParams, opts: &RunOptions) -> Result<VerificationReport> {
    run_check(&minimal_size_spec(p), opts)
}

pub fn verify_stabilization(
    generators: &[u32],
    order: u32,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    run_check(&stabilization_spec(generators, order), opts)
}

/// Triples `(r,s,n)` with `2 <= n < s < r <= max_r` and `gcd(r,s) = 1`.
pub fn plus_curve_grid(max_r: u32) -> Vec<RsnParams> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for s in 2..r {
            for n in 2..s {
                if r.gcd(&s) == 1 {
                    out.push(RsnParams { r, s, n });
                }
            }
        }
    }
    out
}

/// Triples with `s = n k`, `n >= 2`, `k >= 1`, `s < r <= max_r`,
/// `gcd(r,s) = 1`.
pub fn minimal_size_grid(max_r: u32) -> Vec<RsnParams> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for n in 2..r {
            for k in 1.. {
                let s = n * k;
                if s >= r {
                    break;
                }
                if r.gcd(&s) == 1 {
                    out.push(RsnParams { r, s, n });
                }
            }
        }
    }
    out
}

pub const LCI_INSTANCES: [(u32, u32, u32); 5] =
    [(5, 2, 2), (5, 3, 2), (7, 2, 3), (7, 3, 2), (9, 2, 2)];

/// Orders used by [`default_suite`].
pub const PLUS_CURVE_ORDER: u32 = 12;
pub const FLAG_ORDER: u32 = 12;
pub const DECOMPOSITION_ORDER: u32 = 10;
pub const LCI_ORDER: u32 = 8;
/// Stabilization windows run through `2 genus + STABLE_WINDOW`.
pub const STABLE_WINDOW: u32 = 4;

/// Generators checked for stabilization besides the space curves.
pub const STABILIZATION_GENERATORS: [&[u32]; 3] = [&[2, 3], &[4, 5], &[4, 5, 6]];

/// The acceptance suite: every identity on its full grid.
pub fn default_suite() -> Vec<CheckSpec> {
    let mut specs = Vec::new();
    for p in plus_curve_grid(9) {
        specs.extend(plus_curve_specs(p, PLUS_CURVE_ORDER, FLAG_ORDER));
    }
    for (r, s, n) in [(5, 4, 2), (7, 5, 2)] {
        specs.extend(decomposition_specs(
            RsnParams { r, s, n },
            DECOMPOSITION_ORDER,
        ));
    }
    for (r, t, n) in LCI_INSTANCES {
        specs.push(lci_spec(LciParams { r, t, n }, LCI_ORDER));
    }
    specs.push(lci_symmetry_spec(LciParams { r: 5, t: 2, n: 2 }, LCI_ORDER));
    for p in minimal_size_grid(9) {
        specs.push(minimal_size_spec(p));
    }
    let mut gens: Vec<Vec<u32>> = STABILIZATION_GENERATORS
        .iter()
        .map(|g| g.to_vec())
        .collect();
    for (r, t, n) in LCI_INSTANCES {
        gens.push(vec![t * n, (r - t) * n, r]);
    }
    for g in gens {
        let genus = NumericalSemigroup::new(&g, 0).expect("coprime").genus();
        specs.push(stabilization_spec(&g, 2 * genus + STABLE_WINDOW));
    }
    specs
}

/// Caps every window at `max_order`. Stabilization windows keep at least
/// `2 genus + 1` so that the tail is nonempty.
pub fn cap_orders(specs: &mut [CheckSpec], max_order: u32) {
    for spec in specs {
        let floor = match (&spec.params, spec.routes.contains(&Route::StableTail)) {
            (CheckParams::Generators(g), true) => {
                NumericalSemigroup::new(&g.generators, 0).map_or(0, |sg| 2 * sg.genus() + 1)
            }
            _ => 0,
        };
        spec.order = spec.order.min(max_order.max(floor));
    }
}

/// Plain-text table; omits timings so output is reproducible.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.spec.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:>5}  {:<8}  first_mismatch",
        "name", "order", "status"
    );
    for r in reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Resource => "RESOURCE",
        };
        let mismatch = match (&r.first_mismatch, &r.message) {
            (Some(m), _) => format!("q^{}: {} vs {}", m.exponent, m.lhs, m.rhs),
            (None, Some(msg)) => msg.clone(),
            (None, None) => "-".into(),
        };
        let tag = if r.unsupported { " UNSUPPORTED" } else { "" };
        let _ = writeln!(
            out,
            "{:<width$}  {:>5}  {:<8}  {mismatch}{tag}",
            r.spec.name, r.spec.order, status
        );
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{passed}/{} passed", reports.len());
    out
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Parses a JSON array of check specs. Report arrays are accepted too:
/// extra report fields are ignored.
pub fn parse_suite(json: &str) -> Result<Vec<CheckSpec>> {
    serde_json::from_str(json).map_err(|e| Error::InvalidArgument(format!("bad suite: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serial() -> RunOptions {
        RunOptions {
            parallel: false,
            ..RunOptions::default()
        }
    }

    #[test]
    fn plus_curve_542_and_752() {
        for (r, s, n) in [(5, 4, 2), (7, 5, 2)] {
            let reports = verify_plus_curve(RsnParams { r, s, n }, 8, &serial()).unwrap();
            assert_eq!(reports.len(), 3);
            assert!(all_passed(&reports), "{}", render_table(&reports));
        }
    }

    #[test]
    fn hypothesis_errors() {
        let err = verify_plus_curve(RsnParams { r: 6, s: 4, n: 2 }, 4, &serial()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
        let err = verify_minimal_size(RsnParams { r: 7, s: 5, n: 2 }, &serial()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
        let err = verify_stabilization(&[4, 5], 12, &serial()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn force_marks_unsupported() {
        let opts = RunOptions {
            force: true,
            ..serial()
        };
        let reports = verify_plus_curve(RsnParams { r: 6, s: 4, n: 2 }, 4, &opts);
        // gcd(6,4) != 1: the flag oracle refuses, the other routes run
        let reports = reports.unwrap();
        assert!(reports.iter().all(|r| r.unsupported));
        assert_eq!(reports[0].status, Status::Pass);
        assert_eq!(reports[1].status, Status::Fail);
        assert!(reports[1].message.is_some());
    }

    #[test]
    fn decomposition_passes() {
        let reports = verify_decomposition(RsnParams { r: 7, s: 5, n: 2 }, 6, &serial()).unwrap();
        assert!(all_passed(&reports));
    }

    #[test]
    fn lci_and_symmetry() {
        let p = LciParams::new(5, 2, 2).unwrap();
        assert!(verify_lci(p, 8, &serial()).unwrap().passed());
        assert!(run_check(&lci_symmetry_spec(p, 6), &serial())
            .unwrap()
            .passed());
    }

    #[test]
    fn minimal_size_and_stabilization() {
        assert!(
            verify_minimal_size(RsnParams { r: 7, s: 6, n: 2 }, &serial())
                .unwrap()
                .passed()
        );
        assert!(
            verify_minimal_size(RsnParams { r: 5, s: 3, n: 3 }, &serial())
                .unwrap()
                .passed()
        );
        assert!(verify_stabilization(&[2, 3], 8, &serial())
            .unwrap()
            .passed());
        assert!(verify_stabilization(&[1], 5, &serial()).unwrap().passed());
    }

    #[test]
    fn empty_suite_passes() {
        let reports = run_suite(&[], &serial()).unwrap();
        assert!(reports.is_empty());
        assert!(all_passed(&reports));
    }

    #[test]
    fn injected_fault_is_located() {
        let mut specs = plus_curve_specs(RsnParams { r: 5, s: 4, n: 2 }, 6, 6);
        specs[1].inject_fault = Some(3);
        let reports = run_suite(&specs, &RunOptions::default()).unwrap();
        let fails: Vec<_> = reports
            .iter()
            .filter(|r| r.status == Status::Fail)
            .collect();
        assert_eq!(fails.len(), 1);
        let m = fails[0].first_mismatch.as_ref().unwrap();
        assert_eq!(
            (m.exponent, m.lhs.clone(), m.rhs.clone()),
            (3, 1.into(), 2.into())
        );
    }

    #[test]
    fn resource_is_never_pass() {
        let opts = RunOptions {
            budget: Budget::nodes(100),
            ..serial()
        };
        let r = run_check(&lci_spec(LciParams::new(7, 2, 3).unwrap(), 8), &opts).unwrap();
        assert_eq!(r.status, Status::Resource);
        assert!(r.message.unwrap().contains("budget"));
    }

    #[test]
    fn structural_validation() {
        let mut s = minimal_size_spec(RsnParams { r: 5, s: 4, n: 2 });
        s.routes = [Route::ClosedForm, Route::ClosedForm];
        assert!(matches!(s.validate(), Err(Error::InvalidArgument(_))));
        s.routes = [Route::ClosedForm, Route::SemigroupOracle];
        assert!(s.validate().is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let specs = vec![
            lci_spec(LciParams::new(5, 2, 2).unwrap(), 4),
            stabilization_spec(&[2, 3], 6),
            minimal_size_spec(RsnParams { r: 5, s: 4, n: 2 }),
        ];
        let json = serde_json::to_string(&specs).unwrap();
        assert_eq!(parse_suite(&json).unwrap(), specs);
        // reports are valid suites
        let reports = run_suite(&specs, &serial()).unwrap();
        let again = parse_suite(&reports_to_json(&reports)).unwrap();
        assert_eq!(again, specs);
    }

    #[test]
    fn report_json_keys() {
        let r = verify_lci(LciParams::new(5, 2, 2).unwrap(), 2, &serial()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "name",
            "params",
            "order",
            "status",
            "lhs",
            "rhs",
            "first_mismatch",
            "elapsed_ms",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["params"], serde_json::json!({"r": 5, "t": 2, "n": 2}));
    }

    #[test]
    fn cap_orders_keeps_stable_windows() {
        let mut specs = vec![
            stabilization_spec(&[4, 5], 16),
            lci_spec(LciParams::new(5, 2, 2).unwrap(), 8),
        ];
        cap_orders(&mut specs, 2);
        assert_eq!(specs[0].order, 13);
        assert_eq!(specs[1].order, 2);
    }

    #[test]
    fn grids() {
        let grid = plus_curve_grid(9);
        assert!(grid.contains(&RsnParams { r: 5, s: 4, n: 2 }));
        assert!(!grid.contains(&RsnParams { r: 6, s: 4, n: 2 }));
        assert!(grid.iter().all(|p| p.satisfies_hypotheses()));
        let ms = minimal_size_grid(9);
        assert!(ms.contains(&RsnParams { r: 7, s: 6, n: 2 }));
        assert!(ms.contains(&RsnParams { r: 5, s: 2, n: 2 }));
        assert!(ms.iter().all(|p| p.s % p.n == 0 && p.s < p.r));
    }
}
