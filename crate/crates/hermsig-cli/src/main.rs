mod render;
mod spec;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hermsig::oracle::{run_suite, SuiteKind, SuiteReport};
use hermsig::linalg::rat_sign;
use hermsig::realform::is_self_dual;
use hermsig::signature::{gl_sig_degree, ratio_identity, sig_degree_probe};
use hermsig::weylres::{computed_table_row, expected_fold_shapes, expected_table_row, table_row_keys};
use hermsig::{Error, Exec, GroupLabel, PositiveSystem, SignatureEngine};
use render::{Format, RowError, SweepRow, TableCheck};
use spec::{BuiltinParams, Group, LambdaConvention};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }
    pub fn verification(msg: impl Into<String>) -> Self {
        CliError { code: 3, msg: msg.into() }
    }
    pub fn from_lib(e: Error) -> Self {
        CliError { code: if e.is_internal() { 4 } else { 2 }, msg: e.to_string() }
    }
}

#[derive(Parser)]
#[command(name = "hermsig", version, about = "Signatures of invariant Hermitian forms on finite-dimensional representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Signature of one representation.
    Sig(SigArgs),
    /// Restricted root system tables and fold diagrams, checked against the expected rows.
    Tables(TablesArgs),
    /// One row per highest weight in a box.
    Sweep(SweepArgs),
    /// Oracle agreement suites.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// GL, SL, Sp, PSp, PSO, SO, E6, compact or complex.
    #[arg(long, conflicts_with = "spec")]
    builtin: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Cartan type for compact and complex groups, e.g. A2.
    #[arg(long = "type")]
    cartan_type: Option<String>,
    /// JSON group specification.
    #[arg(long)]
    spec: Option<PathBuf>,
}

impl GroupArgs {
    fn load(&self) -> Result<Group, CliError> {
        if let Some(path) = &self.spec {
            return spec::group_from_file(path);
        }
        let name = self
            .builtin
            .as_deref()
            .ok_or_else(|| CliError { code: 1, msg: "one of --builtin or --spec is required".into() })?;
        let params = BuiltinParams { n: self.n, p: self.p, q: self.q, cartan_type: self.cartan_type.clone() };
        spec::group_from_label(spec::builtin_label(name, &params)?)
    }
}

#[derive(Args)]
struct SigArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Comma-separated λ: split-Cartan coordinates for GL and SL, characters of the
    /// built-in torus otherwise, λ_c in T_c coordinates for custom groups.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Real part of ν, comma-separated rationals (custom groups).
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Ranges `lo..hi`, one for every coordinate or one per coordinate, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    sweep: Option<String>,
    /// Keep only weights that carry an invariant Hermitian form.
    #[arg(long)]
    self_dual: bool,
    /// Largest number of weights to enumerate.
    #[arg(long, default_value_t = 10_000)]
    cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Print the CSV columns and exit.
    #[arg(long)]
    schema: bool,
    /// Ray λ₀ for the degree probe (GL only); defaults to (m, …, 1, [0], −1, …, −m).
    #[arg(long, allow_hyphen_values = true)]
    probe: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Level {
    Fast,
    Full,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "level", visible_alias = "verify", value_enum, default_value_t = Level::Fast)]
    level: Level,
    /// Flip ε at this W¹ position in the formula; the run must then report failures.
    #[arg(long, num_args = 0..=1, default_missing_value = "1")]
    inject_fault: Option<usize>,
    /// Dimension cap for the oracles.
    #[arg(long, default_value_t = 400)]
    cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = match cli.cmd {
        Cmd::Sig(a) => cmd_sig(a),
        Cmd::Tables(a) => cmd_tables(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match out {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn cmd_sig(a: SigArgs) -> Result<String, CliError> {
    let group = a.group.load()?;
    let lambda = spec::parse_ints(&a.lambda)?;
    let nu = a.nu.as_deref().map(spec::parse_rats).transpose()?;
    let hw = spec::highest_weight(&group, &lambda, nu.as_deref())?;
    let engine = SignatureEngine::new(&group.rf).map_err(CliError::from_lib)?;
    match engine.compute(&hw) {
        Ok(r) => Ok(render::sig(&r, a.format)),
        Err(Error::NoForm(reason)) => Ok(render::no_form(&group.rf.label().to_string(), &lambda, &reason, a.format)),
        Err(e) => Err(CliError::from_lib(e)),
    }
}

fn cmd_tables(a: TablesArgs) -> Result<String, CliError> {
    let mut checks = Vec::new();
    for (fam, n) in table_row_keys() {
        let computed = computed_table_row(fam, n).map_err(CliError::from_lib)?;
        let expected = expected_table_row(fam, n).map_err(CliError::from_lib)?;
        checks.push(TableCheck { ok: computed == expected, computed, expected });
    }
    let mut folds = Vec::new();
    for label in [GroupLabel::SL(5), GroupLabel::SplitE6] {
        let rf = hermsig::builtin_group(&label).map_err(CliError::from_lib)?;
        let rd = hermsig::restrict(&rf).map_err(CliError::from_lib)?;
        let f = hermsig::restricted::fold_diagram(&rf, &rd).map_err(CliError::from_lib)?;
        let expected = expected_fold_shapes(&label).expect("fold table entry").map(String::from);
        folds.push(render::FoldCheck::new(label.to_string(), f, expected));
    }
    let text = render::tables(&checks, &folds, a.format);
    if checks.iter().all(|c| c.ok) && folds.iter().all(|f| f.ok) {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::verification("computed tables differ from the expected rows"))
    }
}

fn parse_ranges(s: &str, dims: usize) -> Result<Vec<(i64, i64)>, CliError> {
    let parts: Vec<(i64, i64)> = s
        .split(',')
        .map(|r| {
            let (lo, hi) = r
                .split_once("..")
                .ok_or_else(|| CliError::validation(format!("range {r:?} is not of the form lo..hi")))?;
            let lo: i64 = lo.trim().parse().map_err(|_| CliError::validation(format!("bad bound in {r:?}")))?;
            let hi: i64 = hi.trim().parse().map_err(|_| CliError::validation(format!("bad bound in {r:?}")))?;
            if lo > hi {
                return Err(CliError::validation(format!("empty range {r:?}")));
            }
            Ok((lo, hi))
        })
        .collect::<Result<_, _>>()?;
    match parts.len() {
        1 => Ok(vec![parts[0]; dims]),
        k if k == dims => Ok(parts),
        k => Err(CliError::validation(format!("{k} ranges given for {dims} coordinates"))),
    }
}

fn enumerate(ranges: &[(i64, i64)], cap: u64) -> Result<Vec<Vec<i64>>, CliError> {
    let size = ranges.iter().try_fold(1u64, |acc, &(lo, hi)| acc.checked_mul((hi - lo + 1) as u64));
    match size {
        Some(s) if s <= cap => {}
        _ => return Err(CliError::validation(format!("the sweep box exceeds the cap of {cap} weights"))),
    }
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).rev().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

fn cmd_sweep(a: SweepArgs) -> Result<String, CliError> {
    if a.schema {
        return Ok(render::sweep_schema());
    }
    let group = a.group.load()?;
    let rf = &group.rf;
    let dims = match group.convention {
        LambdaConvention::GlSplit(n) => n,
        LambdaConvention::SlSplit => rf.datum().rank() + 1,
        LambdaConvention::Character => rf.datum().rank(),
        LambdaConvention::TcCoordinates => rf.compact_rank(),
    };
    let ranges = parse_ranges(a.sweep.as_deref().unwrap_or("0..2"), dims)?;
    let pos = PositiveSystem::standard(rf.datum());
    let lambdas: Vec<Vec<i64>> = enumerate(&ranges, a.cap)?
        .into_iter()
        .filter(|l| match group.convention {
            LambdaConvention::GlSplit(_) | LambdaConvention::SlSplit => l.windows(2).all(|w| w[0] >= w[1]),
            LambdaConvention::Character => pos.is_dominant(l),
            LambdaConvention::TcCoordinates => true,
        })
        .filter(|l| {
            !a.self_dual
                || match group.convention {
                    LambdaConvention::GlSplit(_) => is_self_dual(l),
                    _ => spec::highest_weight(&group, l, None).map_or(false, |s| s.nu_re.iter().all(|x| rat_sign(x) == 0)),
                }
        })
        .collect();
    let engine = SignatureEngine::new(rf).map_err(CliError::from_lib)?.with_exec(Exec::Sequential);
    // computed in parallel, emitted in enumeration order
    let rows: Vec<SweepRow> = Exec::default().map_range(lambdas.len(), |i| {
        let l = &lambdas[i];
        let res = spec::highest_weight(&group, l, None)
            .map_err(|e| RowError::Invalid(e.msg))
            .and_then(|hw| {
                engine.compute(&hw).map_err(|e| match e {
                    Error::NoForm(_) => RowError::NoForm,
                    Error::Internal(m) => RowError::Internal(m),
                    other => RowError::Invalid(other.to_string()),
                })
            });
        let ratio = match (group.convention, &res) {
            (LambdaConvention::GlSplit(n), Ok(_)) => ratio_identity(n, l).ok().map(|(x, y)| x == y),
            _ => None,
        };
        SweepRow::new(i, l, res, ratio)
    });
    if let Some(bad) = rows.iter().find(|r| r.internal) {
        return Err(CliError { code: 4, msg: format!("λ = {}: {}", bad.lambda, bad.status) });
    }
    let probe = match group.convention {
        LambdaConvention::GlSplit(n) if n >= 2 => {
            let m = n / 2;
            let l0 = match &a.probe {
                Some(s) => spec::parse_ints(s)?,
                None => {
                    let head: Vec<i64> = (1..=m as i64).rev().collect();
                    let mut l = head.clone();
                    if n % 2 == 1 {
                        l.push(0);
                    }
                    l.extend(head.iter().rev().map(|x| -x));
                    l
                }
            };
            Some(sig_degree_probe(n, &l0, gl_sig_degree(n) + 3, Exec::default()).map_err(CliError::from_lib)?)
        }
        _ => None,
    };
    Ok(render::sweep(&rf.label().to_string(), &rows, probe.as_ref(), a.format))
}

fn cmd_verify(a: VerifyArgs) -> Result<String, CliError> {
    let kinds: &[SuiteKind] = match a.level {
        Level::Fast => &[SuiteKind::SplitA1, SuiteKind::SplitA2],
        Level::Full => &SuiteKind::ALL,
    };
    let reports: Vec<SuiteReport> = kinds
        .iter()
        .map(|&k| run_suite(k, a.cap, Exec::default(), a.inject_fault))
        .collect::<Result<_, _>>()
        .map_err(CliError::from_lib)?;
    let text = render::verify(&reports, a.inject_fault, a.format);
    if reports.iter().all(SuiteReport::passed) {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError::verification("oracle and formula disagree"))
    }
}
