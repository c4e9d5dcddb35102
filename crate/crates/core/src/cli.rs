//! The `lgbott` command line.
//!
//! Exit codes: 0 when a run is clean, 1 when violations were found, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bundle::{bundle_cohomology, parse_bundle_expression, twist_scan, weight_of, BundleExpression, Twist};
use crate::error::Error;
use crate::lie::{pair_unchecked, RootSystem};
use crate::pieri::Partition;
use crate::report::{self, Format, ReportJson};
use crate::scan::{enumerate_conditions, verify_chain_criterion, ConditionTuple, Mode, Scanner};

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lgbott", version, about = "Bott cohomology of wedge bundles on Lagrangian Grassmannians")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of ∧^{j_k}Q* ⊗ ... ⊗ ∧^{j_1}Q*(t) on LG(k).
    Cohom(CohomArgs),
    /// Exhaustively check a family of vanishing conditions.
    Verify(VerifyArgs),
    /// Pairings of ω_i + tω_{k+1} + ρ with the positive roots containing α_{k+1}.
    Pairings(PairingsArgs),
}

#[derive(Debug, Args)]
pub struct CohomArgs {
    #[arg(long, required_unless_present = "expr")]
    pub k: Option<usize>,
    /// Exterior degrees, in any order.
    #[arg(long, value_delimiter = ',', conflicts_with = "expr")]
    pub wedges: Option<Vec<u32>>,
    /// A bundle expression such as "w2*w1(-3) @ LG(2)".
    #[arg(long)]
    pub expr: Option<String>,
    /// Twist t; without it every twist with intermediate cohomology is scanned.
    #[arg(long, allow_hyphen_values = true)]
    pub twist: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also list singular summands.
    #[arg(long)]
    pub show_singular: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    /// i = Σ j_q, 0 ≤ j_q ≤ q+1 on LG(k).
    Question1,
    /// ∧^jQ*(t) on each LG(i), 1 ≤ i ≤ k.
    Chain,
    /// List the tuples of the sufficient criterion on IG(k, n).
    SufficientEnumerate,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub criterion: Criterion,
    #[arg(long)]
    pub k: usize,
    /// Projective dimension for sufficient-enumerate (defaults to 2k+1).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, env = "LGBOTT_JOBS", default_value_t = default_jobs())]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write records here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Only scan this tuple (j_1,...,j_k), in slot order.
    #[arg(long, value_delimiter = ',')]
    pub tuple: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct PairingsArgs {
    #[arg(long)]
    pub k: usize,
    /// i in ω_i; 0 gives the line bundle O(t).
    #[arg(long, default_value_t = 0)]
    pub wedge: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub twist: Option<i64>,
    /// Include the roots without α_{k+1}.
    #[arg(long)]
    pub all: bool,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Debug)]
enum CliError {
    Input(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = match &config.command {
        Command::Cohom(a) => cmd_cohom(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Pairings(a) => cmd_pairings(a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn expression(args: &CohomArgs) -> Result<BundleExpression, CliError> {
    let twist = args.twist.map_or(Twist::All, Twist::Fixed);
    if let Some(text) = &args.expr {
        let expr = parse_bundle_expression(text)?;
        if args.k.is_some_and(|k| k != expr.k()) {
            return Err(CliError::Usage(format!("--k disagrees with LG({}) in the expression", expr.k())));
        }
        return Ok(match args.twist {
            Some(_) => expr.with_twist(twist),
            None => expr,
        });
    }
    let k = args.k.expect("clap enforces --k without --expr");
    let wedges = args.wedges.clone().unwrap_or_else(|| vec![0; k]);
    Ok(BundleExpression::from_factors(k, &wedges, twist)?)
}

fn cmd_cohom(args: &CohomArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let expr = expression(args)?;
    let reports = match expr.twist() {
        Twist::Fixed(_) => vec![bundle_cohomology(&expr)?],
        Twist::All => twist_scan(&expr)?,
    };
    match args.format {
        Format::Json => {
            for r in &reports {
                serde_json::to_writer(&mut *out, &ReportJson::from(r)).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
        Format::Text | Format::Csv => {
            writeln!(out, "bundle {expr}")?;
            for r in &reports {
                if expr.twist() == Twist::All && r.is_zero() {
                    continue;
                }
                report::write_report_text(r, args.show_singular, out)?;
            }
            if expr.twist() == Twist::All {
                if let (Some(first), Some(last)) = (reports.first(), reports.last()) {
                    writeln!(
                        out,
                        "twists above {} only have H^0, twists below {} only have H^{}",
                        last.twist,
                        first.twist,
                        crate::bundle::top_degree(expr.k())
                    )?;
                }
            }
        }
    }
    Ok(EXIT_CLEAN)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    match args.criterion {
        Criterion::Question1 => {
            let scanner = Scanner::new(args.k)?;
            let tuples = match &args.tuple {
                Some(t) if t.len() != args.k => {
                    return Err(Error::FactorCount { expected: args.k, found: t.len() }.into());
                }
                Some(t) => vec![ConditionTuple::lagrangian(t.clone())?],
                None => enumerate_conditions(Mode::Lagrangian, args.k, 2 * args.k + 1)?,
            };
            let summary = scanner.verify(&tuples, args.jobs)?;
            emit(args, out, |w| report::write_violations(args.format, &summary.violations, w))?;
            let line = format!(
                "question1 k={}: {} tuples checked, {} violations",
                args.k,
                summary.tuples_checked,
                summary.violations.len()
            );
            finish(args, out, &line)?;
            Ok(if summary.is_clean() { EXIT_CLEAN } else { EXIT_VIOLATIONS })
        }
        Criterion::Chain => {
            let summary = verify_chain_criterion(args.k)?;
            emit(args, out, |w| report::write_chain_failures(args.format, &summary.failures, w))?;
            let line = format!("chain k={}: {} checks, {} failures", args.k, summary.checks, summary.failures.len());
            finish(args, out, &line)?;
            Ok(if summary.is_clean() { EXIT_CLEAN } else { EXIT_VIOLATIONS })
        }
        Criterion::SufficientEnumerate => {
            let n = args.n.unwrap_or(2 * args.k + 1);
            let tuples = enumerate_conditions(Mode::Sufficient, args.k, n)?;
            emit(args, out, |w| report::write_tuples(args.format, &tuples, w))?;
            finish(args, out, &format!("sufficient k={} n={}: {} tuples", args.k, n, tuples.len()))?;
            Ok(EXIT_CLEAN)
        }
    }
}

/// Writes records to `--out` when given, otherwise to `out`.
fn emit(
    args: &VerifyArgs,
    out: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> io::Result<()> {
    match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()
        }
        None => write(out),
    }
}

/// Text runs end with a summary line on stdout; machine formats keep stdout
/// record-only unless the records went to a file.
fn finish(args: &VerifyArgs, out: &mut dyn Write, line: &str) -> io::Result<()> {
    if args.format == Format::Text || args.out.is_some() {
        writeln!(out, "{line}")?;
    } else {
        eprintln!("{line}");
    }
    Ok(())
}

/// `2t + c` with the constant sign-adjusted, or the plain constant when the
/// root has no α_m component.
pub fn symbolic_pairing(slope: i64, constant: i64) -> String {
    let tpart = match slope {
        0 => return constant.to_string(),
        1 => "t".to_string(),
        s => format!("{s}t"),
    };
    match constant {
        0 => tpart,
        c if c > 0 => format!("{tpart}+{c}"),
        c => format!("{tpart}{c}"),
    }
}

/// Positive roots with their pairing against `ω_i + tω_m + ρ`, as
/// `(root label, slope in t, constant)`, sorted by constant. Roots without
/// α_m are skipped unless `all` is set.
pub fn pairing_table(k: usize, wedge: usize, all: bool) -> crate::error::Result<Vec<(String, i64, i64)>> {
    let roots = RootSystem::for_lagrangian(k)?;
    let m = roots.rank();
    if wedge > m {
        return Err(Error::WedgeOutOfRange { j: wedge as u32, rank: m });
    }
    let base = &weight_of(&Partition::column(wedge), 0, m)? + roots.rho();
    let mut rows: Vec<(String, i64, i64, usize)> = roots
        .positive_roots()
        .iter()
        .filter(|r| all || r.last() == 1)
        .map(|r| {
            let c = pair_unchecked(base.coords(), r.coords());
            let height = r.coords().iter().sum::<i64>() as usize;
            (r.label(), 2 * r.last(), c, height)
        })
        .collect();
    rows.sort_by(|a, b| (a.1 == 0).cmp(&(b.1 == 0)).then(a.2.cmp(&b.2)).then(a.3.cmp(&b.3)));
    Ok(rows.into_iter().map(|(l, s, c, _)| (l, s, c)).collect())
}

fn cmd_pairings(args: &PairingsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = pairing_table(args.k, args.wedge, args.all)?;
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (label, slope, c) in rows {
        let value = match args.twist {
            Some(t) => (slope * t + c).to_string(),
            None => symbolic_pairing(slope, c),
        };
        writeln!(out, "{label:<width$}  {value}")?;
    }
    Ok(EXIT_CLEAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("lgbott").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn symbolic_forms() {
        assert_eq!(symbolic_pairing(2, 3), "2t+3");
        assert_eq!(symbolic_pairing(2, -1), "2t-1");
        assert_eq!(symbolic_pairing(2, 0), "2t");
        assert_eq!(symbolic_pairing(0, 4), "4");
    }

    #[test]
    fn cohom_trivial_bundle() {
        let (code, out, _) = run_capture(&["cohom", "--k", "1", "--wedges", "0", "--twist", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("total: H^0 has dimension 1"), "{out}");
    }

    #[test]
    fn cohom_canonical_lg2() {
        let (code, out, _) = run_capture(&["cohom", "--k", "2", "--wedges", "0,0", "--twist", "-4"]);
        assert_eq!(code, 0);
        assert!(out.contains("total: H^6 has dimension 1"), "{out}");
    }

    #[test]
    fn cohom_errors_exit_two() {
        let (code, _, err) = run_capture(&["cohom", "--k", "2", "--wedges", "9,1", "--twist", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("exceeds"), "{err}");
        let (code, _, _) = run_capture(&["cohom", "--expr", "w1(0) LG(1)"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn pairings_numeric() {
        let (code, out, _) = run_capture(&["pairings", "--k", "5", "--wedge", "2", "--twist", "-3"]);
        assert_eq!(code, 0);
        let values: Vec<i64> = out.lines().map(|l| l.split_whitespace().last().unwrap().parse().unwrap()).collect();
        assert_eq!(&values[..6], &[-4, -3, -2, -2, -1, -1]);
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn pairings_line_bundle_are_positive() {
        let (_, out, _) = run_capture(&["pairings", "--k", "4", "--wedge", "0", "--twist", "0"]);
        assert_eq!(out.lines().count(), 15);
        assert!(out.lines().all(|l| l.split_whitespace().last().unwrap().parse::<i64>().unwrap() >= 2));
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_capture(&["verify", "--criterion", "question1", "--k", "3", "--jobs", "2"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) =
            run_capture(&["verify", "--criterion", "question1", "--k", "7", "--tuple", "1,2,3,3,4,5,6"]);
        assert_eq!(code, 1);
        assert!(out.contains("partition=(7,6,5,3,2,1) twist=-9 degree=24"), "{out}");
        let (code, _, _) = run_capture(&["verify", "--criterion", "question1", "--k", "2", "--tuple", "3,0"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["verify", "--criterion", "question1", "--k", "2", "--jobs", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn sufficient_enumerate_lists_tuples() {
        let (code, out, _) = run_capture(&["verify", "--criterion", "sufficient-enumerate", "--k", "1", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("TUPLE")).count(), 14);
        let (code, _, _) = run_capture(&["verify", "--criterion", "sufficient-enumerate", "--k", "1", "--n", "4"]);
        assert_eq!(code, 2);
    }
}
