//! Command-line front end: single-graph analysis, census runs, and the
//! acceptance-check suite.
//!
//! Exit codes: 0 success, 1 a required acceptance check failed, 2 parse or
//! usage error, 3 order cap exceeded, 4 I/O failure. The `CIRC_CAP`
//! environment variable lowers the order cap below the built-in 64.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use circstab_core::census::{run_census, Census};
use circstab_core::circulant::{ConnectionSet, ConnectionSetError};
use circstab_core::conditions::report::{
    NewConditionHit, StabilityReport, TrivialityReason, Verdict, WilsonHit, WitnessJson,
};
use circstab_core::conditions::stability_verdict;
use circstab_core::verify::{render, required_failures, run_all, VerifyOptions};
use circstab_core::MAX_ORDER;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "circstab",
    version,
    about = "Stability of circulant graphs under the canonical bipartite double cover"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one circulant graph given as a set literal `n:s1,s2,...`
    Analyze {
        /// Connection set literal, e.g. `10:1,2,8,9`
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate every order in a range and classify the surviving graphs
    Census {
        /// Smallest order, inclusive
        #[arg(long)]
        min: usize,
        /// Largest order, inclusive
        #[arg(long)]
        max: usize,
        /// Worker threads; 0 uses every core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the formatted census here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow orders beyond 38
        #[arg(long)]
        extended: bool,
        /// Cache finished orders here and resume from them
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Run the acceptance checks, one reported line each
    Verify {
        /// Worker threads; 0 uses every core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Include the extended-range comparison (hours of compute)
        #[arg(long)]
        extended: bool,
        /// Census cache directory shared across runs
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match order_cap() {
        Ok(cap) => cap,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    match cli.command {
        Command::Analyze { set, format } => cmd_analyze(&set, format, cap),
        Command::Census { min, max, jobs, format, out, extended, cache_dir } => {
            cmd_census(min, max, jobs, format, out.as_deref(), extended, cache_dir.as_deref(), cap)
        }
        Command::Verify { jobs, extended, cache_dir } => cmd_verify(jobs, extended, cache_dir),
    }
}

/// The effective order cap: `CIRC_CAP` when set (1..=64), 64 otherwise.
fn order_cap() -> Result<usize, String> {
    let Some(raw) = std::env::var_os("CIRC_CAP") else {
        return Ok(MAX_ORDER);
    };
    let text = raw.to_string_lossy();
    let value: usize = text
        .trim()
        .parse()
        .map_err(|_| format!("CIRC_CAP must be an integer, got `{text}`"))?;
    if value == 0 || value > MAX_ORDER {
        return Err(format!("CIRC_CAP must lie in 1..={MAX_ORDER}, got {value}"));
    }
    Ok(value)
}

fn cmd_analyze(literal: &str, format: Format, cap: usize) -> ExitCode {
    let set = match ConnectionSet::parse(literal) {
        Ok(set) => set,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                ConnectionSetError::OrderTooLarge(_) => EXIT_CAP,
                _ => EXIT_PARSE,
            };
            return ExitCode::from(code);
        }
    };
    if set.order() > cap {
        eprintln!("error: order {} exceeds cap {cap}", set.order());
        return ExitCode::from(EXIT_CAP);
    }
    let report = stability_verdict(set.graph());
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report_csv(&report)),
        Format::Text => print!("{}", report_text(&report)),
    }
    ExitCode::SUCCESS
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    min: usize,
    max: usize,
    jobs: usize,
    format: Format,
    out: Option<&std::path::Path>,
    extended: bool,
    cache_dir: Option<&std::path::Path>,
    cap: usize,
) -> ExitCode {
    if min == 0 || min > max {
        eprintln!("error: need 1 <= min <= max, got {min}..{max}");
        return ExitCode::from(EXIT_PARSE);
    }
    if max > cap {
        eprintln!("error: order {max} exceeds cap {cap}");
        return ExitCode::from(EXIT_CAP);
    }
    if max > 38 && !extended {
        eprintln!("error: orders beyond 38 need --extended");
        return ExitCode::from(EXIT_PARSE);
    }
    let census = match run_census(min, max, jobs, cache_dir) {
        Ok(census) => census,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let formatted = match format {
        Format::Json => census.summary.to_json() + "\n",
        Format::Csv => census.summary.to_csv(),
        Format::Text => census_text(&census),
    };
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, &formatted) {
                eprintln!("error: writing {}: {err}", path.display());
                return ExitCode::from(EXIT_IO);
            }
            print!("{}", census_text(&census));
        }
        None => print!("{formatted}"),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(jobs: usize, extended: bool, cache_dir: Option<PathBuf>) -> ExitCode {
    let opts = VerifyOptions { jobs, extended, cache_dir };
    let outcomes = run_all(&opts);
    print!("{}", render(&outcomes));
    if required_failures(&outcomes) > 0 {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn wilson_token(hit: &WilsonHit) -> String {
    match hit {
        WilsonHit::C1 { h, vacuous: false } => format!("C1(h={h})"),
        WilsonHit::C1 { h, vacuous: true } => format!("C1(h={h} vacuous)"),
        WilsonHit::C2 { h, vacuous: false } => format!("C2(h={h})"),
        WilsonHit::C2 { h, vacuous: true } => format!("C2(h={h} vacuous)"),
        WilsonHit::C3 { subgroup, d, .. } => format!("C3(subgroup={subgroup} d={d})"),
        WilsonHit::C4 { m } => format!("C4(m={m})"),
    }
}

fn condition_token(hit: &NewConditionHit) -> String {
    match hit {
        NewConditionHit::GeneralizedHk { variant, h, k } => {
            format!("generalized-hk(variant={variant} h={h} k={k})")
        }
        NewConditionHit::IsoTranslate { multiplier: Some(m), .. } => {
            format!("iso-translate(multiplier={m})")
        }
        NewConditionHit::IsoTranslate { multiplier: None, .. } => {
            "iso-translate(explicit map)".to_string()
        }
        NewConditionHit::XeC4 { m } => format!("xe-c4(m={m})"),
        NewConditionHit::XeGeneral { subgroup, .. } => format!("xe-general(subgroup={subgroup})"),
    }
}

fn reason_token(reason: TrivialityReason) -> &'static str {
    match reason {
        TrivialityReason::Disconnected => "disconnected",
        TrivialityReason::Bipartite => "bipartite",
        TrivialityReason::HasTwins => "has-twins",
    }
}

fn verdict_token(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Stable => "stable",
        Verdict::TriviallyUnstable => "trivially-unstable",
        Verdict::NontriviallyUnstable => "nontrivially-unstable",
    }
}

fn join_or_dash(tokens: Vec<String>) -> String {
    if tokens.is_empty() {
        "-".to_string()
    } else {
        tokens.join("; ")
    }
}

fn report_text(report: &StabilityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("set             {}\n", report.set));
    out.push_str(&format!("order           {}\n", report.order));
    out.push_str(&format!("verdict         {}\n", verdict_token(report.verdict)));
    if !report.triviality_reasons.is_empty() {
        let reasons: Vec<String> =
            report.triviality_reasons.iter().map(|&r| reason_token(r).to_string()).collect();
        out.push_str(&format!("reasons         {}\n", reasons.join("; ")));
    }
    out.push_str(&format!("|Aut X|         {}\n", report.aut_x));
    out.push_str(&format!("|Aut BX|        {}\n", report.aut_bx));
    out.push_str(&format!(
        "wilson types    {}\n",
        join_or_dash(report.wilson_types.iter().map(wilson_token).collect())
    ));
    out.push_str(&format!(
        "new conditions  {}\n",
        join_or_dash(report.new_conditions.iter().map(condition_token).collect())
    ));
    let witnesses = report
        .witnesses
        .iter()
        .map(|w| match w {
            WitnessJson::PermPair { .. } => "perm-pair".to_string(),
        })
        .collect::<Vec<_>>();
    out.push_str(&format!("witnesses       {}\n", join_or_dash(witnesses)));
    out.push_str(&format!("unexplained     {}\n", if report.unexplained { "yes" } else { "no" }));
    out
}

fn report_csv(report: &StabilityReport) -> String {
    let mut out = String::from(
        "set,order,verdict,reasons,autX,autBX,wilsonTypes,newConditions,witnesses,unexplained\n",
    );
    let reasons = report.triviality_reasons.iter().map(|&r| reason_token(r).to_string()).collect();
    out.push_str(&format!(
        "\"{}\",{},{},{},{},{},{},{},{},{}\n",
        report.set,
        report.order,
        verdict_token(report.verdict),
        join_or_dash(reasons),
        report.aut_x,
        report.aut_bx,
        join_or_dash(report.wilson_types.iter().map(wilson_token).collect()),
        join_or_dash(report.new_conditions.iter().map(condition_token).collect()),
        report.witnesses.len(),
        report.unexplained
    ));
    out
}

fn census_text(census: &Census) -> String {
    let mut out = String::new();
    out.push_str(
        "order  classes  nontrivial  c1  c2  c3  c4  hk  iso  xe  no-wilson  unexplained\n",
    );
    for o in &census.summary.orders {
        out.push_str(&format!(
            "{:>5}  {:>7}  {:>10}  {:>2}  {:>2}  {:>2}  {:>2}  {:>2}  {:>3}  {:>2}  {:>9}  {:>11}\n",
            o.order,
            o.classes,
            o.nontrivially_unstable,
            o.c1,
            o.c2,
            o.c3,
            o.c4,
            o.general_hk,
            o.iso_translate,
            o.xe,
            o.no_wilson_type,
            o.unexplained
        ));
    }
    out.push_str(&format!(
        "total_nontrivially_unstable={}\n",
        census.summary.total_nontrivially_unstable
    ));
    let no_wilson: Vec<&String> =
        census.summary.orders.iter().flat_map(|o| o.no_wilson_sets.iter()).collect();
    if !no_wilson.is_empty() {
        out.push_str("no-Wilson-type sets:\n");
        for set in no_wilson {
            out.push_str(&format!("  {set}\n"));
        }
    }
    out
}
