//! Command-line front end. [`run`] parses arguments, computes, renders and
//! returns the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success, or every check passed            |
//! | 1    | usage error, invalid input, hypothesis    |
//! | 2    | at least one check failed                 |
//! | 3    | a search ran out of budget                |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Budget, Error, Result};
use crate::formulas::{self, LciParams};
use crate::partitions::{self, Partition, RsnParams};
use crate::qseries::LaurentPoly;
use crate::semigroup::{self, NumericalSemigroup, SearchMode};
use crate::verify::{self, RunOptions, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hilbcurve",
    version,
    about = "Exact Hilbert-scheme generating functions of torus-invariant curve singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Run even when the identity's hypotheses fail; output is marked UNSUPPORTED.
    #[arg(long, global = true)]
    force: bool,

    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_NODES)]
    max_nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Z_{r,s,n}(q) through q^order.
    Zseries(ZseriesArgs),
    /// Hilbert series of a monomial curve through q^order.
    Hilb(HilbArgs),
    /// Gaps, conductor and genus of a numerical semigroup.
    Semigroup(SemigroupArgs),
    /// Membership tests and enumeration dumps.
    #[command(subcommand)]
    Partitions(PartitionsCommand),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZMethod {
    Closed,
    Partitions,
    FlagOracle,
}

#[derive(Args, Debug)]
struct ZseriesArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    order: u32,
    #[arg(long, value_enum, default_value_t = ZMethod::Closed)]
    method: ZMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HMethod {
    Formula,
    Oracle,
}

#[derive(Args, Debug)]
struct HilbArgs {
    /// Semigroup generators, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["r", "t", "n"])]
    gens: Option<Vec<u32>>,
    #[arg(long, requires_all = ["t", "n"])]
    r: Option<u32>,
    #[arg(long, requires_all = ["r", "n"])]
    t: Option<u32>,
    #[arg(long, requires_all = ["r", "t"])]
    n: Option<u32>,
    #[arg(long)]
    order: u32,
    /// Defaults to `oracle` with --gens and `formula` with --r/--t/--n.
    #[arg(long, value_enum)]
    method: Option<HMethod>,
}

#[derive(Args, Debug)]
struct SemigroupArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u32>,
}

#[derive(Subcommand, Debug)]
enum PartitionsCommand {
    /// List members of P(r,s,n) with |mu| - s <= budget.
    Rsn {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        budget: u64,
    },
    /// List P(t,m).
    Tm {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m: u32,
    },
    /// Test membership in P(r,s,n), or in P(t,m) with --t/--m.
    Member {
        /// Parts in weakly decreasing order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<u32>,
        #[arg(long, requires_all = ["s", "n"], conflicts_with_all = ["t", "m"])]
        r: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, requires = "m")]
        t: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `default` or a path to a JSON array of checks.
    #[arg(long, default_value = "default")]
    suite: String,
    /// Cap every comparison window at this order.
    #[arg(long)]
    max_order: Option<u32>,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

struct Rendered {
    body: String,
    code: i32,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Rendered {
            body,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let rendered = match dispatch(&cli, stderr) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &rendered.body),
        None => stdout.write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    rendered.code
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: &Cli, stderr: &mut dyn Write) -> Result<Rendered> {
    let budget = Budget::nodes(cli.max_nodes);
    match &cli.command {
        Command::Zseries(a) => zseries(a, cli, budget),
        Command::Hilb(a) => hilb(a, cli, budget),
        Command::Semigroup(a) => semigroup_summary(a, cli.format),
        Command::Partitions(c) => partitions_cmd(c, cli.format),
        Command::Verify(a) => verify_cmd(a, cli, budget, stderr),
    }
}

/// Applies `--force`: a violation is an error unless forced, in which case
/// it becomes the watermark.
fn gate(violation: Option<String>, force: bool) -> Result<Option<String>> {
    match violation {
        Some(v) if !force => Err(Error::Hypothesis(format!(
            "{v} (use --force to run anyway)"
        ))),
        other => Ok(other),
    }
}

fn zseries(a: &ZseriesArgs, cli: &Cli, budget: Budget) -> Result<Rendered> {
    let p = RsnParams::new(a.r, a.s, a.n)?;
    let watermark = gate(p.hypothesis_violation(), cli.force)?;
    let series = match a.method {
        ZMethod::Closed => formulas::z_rsn_closed(&p, a.order)?,
        ZMethod::Partitions => partitions::series_from_enumeration(&p, a.order),
        ZMethod::FlagOracle => semigroup::flag_series_oracle_with(&p, a.order, budget)?,
    };
    let params = json!({"r": p.r, "s": p.s, "n": p.n});
    render_series(&format!("Z{p}"), params, &series, watermark, cli.format)
}

fn hilb(a: &HilbArgs, cli: &Cli, budget: Budget) -> Result<Rendered> {
    let (series, label, params, watermark) = match (&a.gens, a.r, a.t, a.n) {
        (Some(gens), ..) => {
            if a.method == Some(HMethod::Formula) {
                return Err(Error::InvalidArgument(
                    "--method formula needs --r/--t/--n, not --gens".into(),
                ));
            }
            let sg = NumericalSemigroup::for_colength(gens, a.order)?;
            let series =
                semigroup::hilb_series_oracle_with(&sg, a.order, SearchMode::Pruned, budget)?;
            let list = join(gens);
            (
                series,
                format!("H<{list}>"),
                json!({"generators": gens}),
                None,
            )
        }
        (None, Some(r), Some(t), Some(n)) => {
            let p = LciParams::new(r, t, n)?;
            let watermark = gate(p.hypothesis_violation(), cli.force)?;
            let series = match a.method.unwrap_or(HMethod::Formula) {
                HMethod::Formula => formulas::hilb_series_lci(&p, a.order)?,
                HMethod::Oracle => {
                    let sg = semigroup::space_curve_semigroup(&p, 0)?;
                    let sg = NumericalSemigroup::for_colength(sg.generators(), a.order)?;
                    semigroup::hilb_series_oracle_with(&sg, a.order, SearchMode::Pruned, budget)?
                }
            };
            (
                series,
                format!("H{p}"),
                json!({"r": r, "t": t, "n": n}),
                watermark,
            )
        }
        _ => {
            return Err(Error::InvalidArgument(
                "give either --gens or all of --r, --t, --n".into(),
            ))
        }
    };
    render_series(&label, params, &series, watermark, cli.format)
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Exponents from `min(0, valuation)` up to the last known one.
fn window(series: &LaurentPoly) -> std::ops::Range<i64> {
    let lo = series.valuation().map_or(0, |v| v.min(0));
    let hi = series.precision().unwrap_or_else(|| series.end().max(1));
    lo..hi
}

fn render_series(
    label: &str,
    params: serde_json::Value,
    series: &LaurentPoly,
    watermark: Option<String>,
    format: Format,
) -> Result<Rendered> {
    let rows: Vec<(i64, String)> = window(series)
        .map(|k| series.coeff(k).map(|c| (k, c.to_string())))
        .collect::<Result<_>>()?;
    let mut out = String::new();
    match format {
        Format::Text => {
            if let Some(w) = &watermark {
                let _ = writeln!(out, "UNSUPPORTED: {w}");
            }
            let _ = writeln!(out, "{label} = {series}");
            for (k, c) in &rows {
                let _ = writeln!(out, "{k:>4}  {c}");
            }
        }
        Format::Csv => {
            out.push_str("exponent,coefficient\n");
            for (k, c) in &rows {
                let _ = writeln!(out, "{k},{c}");
            }
        }
        Format::Json => {
            let mut v = json!({
                "params": params,
                "series": series,
                "coefficients": rows.iter().map(|(k, c)| json!([k, c])).collect::<Vec<_>>(),
            });
            if let Some(w) = watermark {
                v["unsupported"] = json!(true);
                v["watermark"] = json!(format!("UNSUPPORTED: {w}"));
            }
            out = pretty(&v);
        }
    }
    Ok(Rendered::ok(out))
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(format: Format, what: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::InvalidArgument(format!(
            "csv output is only available for series, not {what}"
        )));
    }
    Ok(())
}

fn semigroup_summary(a: &SemigroupArgs, format: Format) -> Result<Rendered> {
    no_csv(format, "semigroup summaries")?;
    let summary = NumericalSemigroup::new(&a.gens, 0)?.summary();
    Ok(Rendered::ok(match format {
        Format::Json => pretty(&summary),
        _ => format!(
            "generators: {}\nconductor: {}\ngenus: {}\ngaps: {}\n",
            join(&summary.generators),
            summary.conductor,
            summary.genus,
            join(&summary.gaps)
        ),
    }))
}

fn partitions_cmd(c: &PartitionsCommand, format: Format) -> Result<Rendered> {
    no_csv(format, "partitions")?;
    let list = |parts: Vec<Partition>| match format {
        Format::Json => pretty(&parts),
        _ => parts.iter().map(|p| format!("{p}\n")).collect(),
    };
    Ok(Rendered::ok(match c {
        PartitionsCommand::Rsn { r, s, n, budget } => {
            let p = RsnParams::new(*r, *s, *n)?;
            list(partitions::enumerate_rsn(&p, *budget))
        }
        PartitionsCommand::Tm { t, m } => list(partitions::enumerate_tm(*t, *m)),
        PartitionsCommand::Member {
            parts,
            r,
            s,
            n,
            t,
            m,
        } => {
            let mu = Partition::new(parts.clone())?;
            let (member, family) = match (r, s, n, t, m) {
                (Some(r), Some(s), Some(n), None, None) => {
                    let p = RsnParams::new(*r, *s, *n)?;
                    (partitions::is_member_rsn(&mu, &p), format!("P{p}"))
                }
                (None, None, None, Some(t), Some(m)) => {
                    (partitions::is_member_tm(&mu, *t, *m), format!("P({t},{m})"))
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "give either --r/--s/--n or --t/--m".into(),
                    ))
                }
            };
            match format {
                Format::Json => {
                    pretty(&json!({"partition": mu, "family": family, "member": member}))
                }
                _ => format!("{mu} in {family}: {member}\n"),
            }
        }
    }))
}

fn verify_cmd(
    a: &VerifyArgs,
    cli: &Cli,
    budget: Budget,
    stderr: &mut dyn Write,
) -> Result<Rendered> {
    no_csv(cli.format, "verification reports")?;
    let mut specs = if a.suite == "default" {
        verify::default_suite()
    } else {
        let text = std::fs::read_to_string(&a.suite)
            .map_err(|e| Error::InvalidArgument(format!("cannot read suite {}: {e}", a.suite)))?;
        verify::parse_suite(&text)?
    };
    if let Some(max) = a.max_order {
        verify::cap_orders(&mut specs, max);
    }
    let opts = RunOptions {
        force: cli.force,
        budget,
        parallel: true,
    };
    let reports = verify::run_suite(&specs, &opts)?;
    let json = verify::reports_to_json(&reports);
    if let Some(path) = &a.report {
        std::fs::write(path, format!("{json}\n")).map_err(|e| {
            Error::InvalidArgument(format!("cannot write report {}: {e}", path.display()))
        })?;
    }
    let statuses: Vec<Status> = reports.iter().map(|r| r.status).collect();
    let code = if statuses.contains(&Status::Fail) {
        EXIT_FAIL
    } else if statuses.contains(&Status::Resource) {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    if code != EXIT_OK {
        let _ = writeln!(
            stderr,
            "{} of {} checks did not pass",
            statuses.iter().filter(|s| **s != Status::Pass).count(),
            statuses.len()
        );
    }
    let body = match cli.format {
        Format::Json => format!("{json}\n"),
        _ => verify::render_table(&reports),
    };
    Ok(Rendered { body, code })
}
