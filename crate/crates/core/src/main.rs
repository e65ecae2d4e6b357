use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use aluffi_kit::hypersurface::{FamilyPrediction, FamilyStatus, FamilyVerdict};
use aluffi_kit::limits::{self, Limits};
use aluffi_kit::report::{
    analyze_text, corpus, cubic_experiment, family_scan, run_corpus, with_timeout, AnalyzeOptions,
    TrialStatus,
};
use aluffi_kit::Error;

#[derive(Parser)]
#[command(
    name = "aluffi-kit",
    version,
    about = "Linear-type criteria and blowup algebras of hypersurfaces"
)]
struct Cli {
    /// Worker threads for batch commands
    #[arg(long, global = true, env = "ALUFFI_KIT_JOBS")]
    jobs: Option<usize>,
    /// Ceiling on pending critical pairs in any Gröbner basis computation
    #[arg(long, global = true, default_value_t = Limits::default().max_pairs)]
    limit_pairs: usize,
    /// Ceiling on the total number of terms held by an intermediate basis
    #[arg(long, global = true, default_value_t = Limits::default().max_terms)]
    limit_terms: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one affine or projective hypersurface
    Analyze(AnalyzeArgs),
    /// Locally Eulerian verdicts for x^a + x^c y^d + y^b against the predicted cases
    FamilyScan(FamilyArgs),
    /// Run the shipped list of plane curves
    Corpus(JsonArg),
    /// Gradient linear type of random singular cubic surfaces
    CubicExperiment(CubicArgs),
}

#[derive(Args)]
struct JsonArg {
    /// Also write the result as JSON (`-` for stdout instead of the text report)
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Comma-separated variable names
    #[arg(long)]
    vars: String,
    #[arg(long)]
    poly: String,
    /// Treat the polynomial as a homogeneous form on projective space
    #[arg(long)]
    projective: bool,
    /// Include symmetric, Rees and Aluffi presentations
    #[arg(long)]
    presentations: bool,
    /// Also check gradient linear type through the Rees algebra of the gradient ideal
    #[arg(long)]
    deep: bool,
    #[command(flatten)]
    out: JsonArg,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    a_max: u32,
    #[arg(long)]
    b_max: u32,
    #[command(flatten)]
    out: JsonArg,
}

#[derive(Args)]
struct CubicArgs {
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seconds allowed per trial before it is recorded as a timeout
    #[arg(long, default_value_t = 60)]
    trial_timeout: u64,
    #[command(flatten)]
    out: JsonArg,
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => 3,
        e if e.is_precondition() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let limits = Limits {
        max_pairs: cli.limit_pairs,
        max_terms: cli.limit_terms,
        timeout: None,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let result = pool.install(|| limits::scoped(limits, || run(cli.command, limits)));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command, limits: Limits) -> Result<u8, Failure> {
    match command {
        Command::Analyze(args) => {
            let opts = AnalyzeOptions {
                projective: args.projective,
                presentations: args.presentations,
                deep: args.deep,
            };
            let report = analyze_text(&args.vars, &args.poly, opts)?;
            emit(&args.out, &report, || report.to_text())?;
            Ok(0)
        }
        Command::FamilyScan(args) => {
            if args.a_max < 2 || args.b_max < 2 {
                return Err(Failure::Usage(
                    "--a-max and --b-max must be at least 2".into(),
                ));
            }
            let scan = family_scan(args.a_max, args.b_max, limits)?;
            emit(&args.out, &scan, || {
                let mut s = String::from(
                    "a b c d  status      locally Eulerian  prediction         agrees\n",
                );
                for r in &scan.records {
                    s.push_str(&family_line(r));
                }
                s.push_str(&format!(
                    "\nmembers {}  agree {}  disagree {}  unspecified {}  degenerate {}\n",
                    scan.records.len(),
                    scan.agreements,
                    scan.disagreements,
                    scan.unspecified,
                    scan.degenerate
                ));
                s
            })?;
            Ok(if scan.disagreements == 0 { 0 } else { 1 })
        }
        Command::Corpus(out) => {
            let results = run_corpus(&corpus(), limits)?;
            emit(&out, &results, || {
                let mut s = String::new();
                for r in &results {
                    let labels: Vec<String> = r.labels.iter().map(|l| l.to_string()).collect();
                    s.push_str(&format!(
                        "{:<28} gradient linear type: {:<5}  [{}]  {}\n",
                        r.name,
                        r.gradient_linear_type,
                        labels.join(", "),
                        if r.matches { "ok" } else { "MISMATCH" }
                    ));
                }
                let ok = results.iter().filter(|r| r.matches).count();
                s.push_str(&format!("{ok}/{} curves match\n", results.len()));
                s
            })?;
            Ok(if results.iter().all(|r| r.matches) {
                0
            } else {
                1
            })
        }
        Command::CubicExperiment(args) => {
            let per_trial = with_timeout(limits, Duration::from_secs(args.trial_timeout));
            let exp = cubic_experiment(args.trials, args.seed, per_trial)?;
            emit(&args.out, &exp, || {
                let mut s = String::new();
                for t in &exp.trials {
                    let status = match &t.status {
                        TrialStatus::Checked {
                            gradient_linear_type,
                            singular,
                        } => format!(
                            "gradient linear type: {gradient_linear_type}{}",
                            if *singular { "" } else { " (smooth)" }
                        ),
                        TrialStatus::Skipped { reason } => format!("skipped: {reason}"),
                        TrialStatus::Timeout { message } => format!("timeout: {message}"),
                    };
                    s.push_str(&format!("{:>4}  {}  {status}\n", t.trial, t.polynomial));
                }
                s.push_str(&format!(
                    "seed {}  trials {}  linear type {}  not linear type {}  skipped {}  timeouts {}\n",
                    exp.seed,
                    exp.trials.len(),
                    exp.linear_type,
                    exp.not_linear_type,
                    exp.skipped,
                    exp.timeouts
                ));
                for c in &exp.counterexamples {
                    s.push_str(&format!("counterexample candidate: {c}\n"));
                }
                s
            })?;
            Ok(0)
        }
    }
}

fn family_line(r: &FamilyVerdict) -> String {
    let status = match &r.status {
        FamilyStatus::Ok => "ok".to_string(),
        FamilyStatus::Degenerate { .. } => "degenerate".to_string(),
    };
    let prediction = match &r.prediction {
        FamilyPrediction::Case { case } => format!("case {case}"),
        FamilyPrediction::ConditionalOnQh { region } => format!("region {region} (QH)"),
        FamilyPrediction::Unspecified => "unspecified".to_string(),
    };
    let show = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
    format!(
        "{} {} {} {}  {:<10}  {:<16}  {:<17}  {}\n",
        r.a,
        r.b,
        r.c,
        r.d,
        status,
        show(r.locally_eulerian),
        prediction,
        show(r.agrees)
    )
}

/// Text to stdout, and JSON to `--json` (or to stdout in place of the text for `-`).
fn emit<T: Serialize>(
    out: &JsonArg,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), Failure> {
    let json = || serde_json::to_string_pretty(value).expect("serializable report");
    match out.json.as_deref() {
        Some(p) if p == Path::new("-") => stdout(&(json() + "\n")),
        Some(p) => {
            stdout(&text());
            std::fs::write(p, json() + "\n")
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        None => stdout(&text()),
    }
    Ok(())
}

// a closed pipe on the reading side is not an error worth reporting
fn stdout(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}
