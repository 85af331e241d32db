//! Command-line front end for `golayzcp`.
//!
//! [`run`] parses an argument vector, writes the requested artifact to `out`
//! and diagnostics to `err`, and returns the process exit code: 0 on success,
//! 1 when the input is invalid, 2 when a verification finds a violation.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand};
use golayzcp::{
    build_gcp, classify, construct_obzcp, exhaustive_max_zcz, insertion_search, measure_obzcp,
    out_of_zone_floor, Construction, GcpRecipe, InsertionPosition, InsertionSpec, SearchConfig,
    SequencePair, Sign, ZcpReport, ZcpType,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "golayzcp",
    version,
    about = "Golay complementary pairs and odd-length binary Z-complementary pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a GCP from a recipe such as K2*K10 and print its two rows.
    Gcp {
        recipe: GcpRecipe,
        /// Print a JSON record instead of the plain two-line pair.
        #[arg(long)]
        json: bool,
    },
    /// Insert one symbol into each row of a recipe's GCP.
    Zcp(ZcpArgs),
    /// Classify the pair stored in a file and print its JSON report.
    Classify { file: PathBuf },
    /// Exhaustive searches over short pairs or over insertion grids.
    Search(SearchArgs),
    /// Export the autocorrelation-sum profile of a stored pair.
    Profile {
        file: PathBuf,
        #[arg(long, default_value = "csv")]
        format: ProfileFormat,
    },
}

#[derive(Args, Debug)]
struct ZcpArgs {
    recipe: GcpRecipe,
    #[arg(long, value_parser = parse_position)]
    pos: InsertionPosition,
    /// Symbol inserted into the first row: +1, -1, + or -.
    #[arg(long, allow_hyphen_values = true)]
    x: Sign,
    /// Symbol inserted into the second row.
    #[arg(long, allow_hyphen_values = true)]
    y: Sign,
    /// Print the measured classification report.
    #[arg(long, conflicts_with = "predict")]
    report: bool,
    /// Print the predicted profile beside the measured one; fails when the
    /// combination has no prediction.
    #[arg(long)]
    predict: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["max_zcz", "insert", "floor"])))]
struct SearchArgs {
    /// Largest ZCZ width over all pairs of this length.
    #[arg(long, value_name = "N", requires = "zcp_type")]
    max_zcz: Option<usize>,
    #[arg(long = "type", value_name = "1|2", value_parser = parse_type)]
    zcp_type: Option<ZcpType>,
    /// Every single-symbol insertion into a recipe's GCP or a pair file.
    #[arg(long, value_name = "RECIPE|FILE")]
    insert: Option<String>,
    /// Let the two rows take different insertion positions.
    #[arg(long, requires = "insert")]
    unequal: bool,
    /// Check that Z-optimal pairs of odd length N have no out-of-zone zero.
    #[arg(long, value_name = "N")]
    floor: Option<usize>,
}

fn parse_position(s: &str) -> Result<InsertionPosition, String> {
    s.parse().map_err(|e: golayzcp::Error| e.to_string())
}

fn parse_type(s: &str) -> Result<ZcpType, String> {
    s.parse().map_err(|e: golayzcp::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileFormat {
    Csv,
    Json,
}

impl FromStr for ProfileFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(ProfileFormat::Csv),
            "json" => Ok(ProfileFormat::Json),
            other => Err(format!(
                "unknown profile format {other:?} (expected csv or json)"
            )),
        }
    }
}

impl fmt::Display for ProfileFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileFormat::Csv => "csv",
            ProfileFormat::Json => "json",
        })
    }
}

/// Renders a report's profile. CSV has one `tau,aacs_sum,magnitude` row per
/// shift; JSON is the full report.
pub fn export_profile(report: &ZcpReport, format: ProfileFormat) -> String {
    match format {
        ProfileFormat::Csv => {
            let mut s = String::from("tau,aacs_sum,magnitude\n");
            for (tau, v) in report.profile.values().iter().enumerate() {
                s.push_str(&format!("{tau},{v},{}\n", v.unsigned_abs()));
            }
            s
        }
        ProfileFormat::Json => format!("{}\n", report.to_json()),
    }
}

enum Failure {
    Invalid(String),
    Violation { output: String, message: String },
}

impl From<golayzcp::Error> for Failure {
    fn from(e: golayzcp::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    finish(execute(cli.command), out, err)
}

fn finish(outcome: Outcome, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match outcome {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Invalid(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INVALID
        }
        Err(Failure::Violation { output, message }) => {
            let _ = out.write_all(output.as_bytes());
            let _ = writeln!(err, "violation: {message}");
            EXIT_VIOLATION
        }
    }
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Gcp { recipe, json } => gcp(&recipe, json),
        Command::Zcp(args) => zcp(&args),
        Command::Classify { file } => Ok(format!("{}\n", classify(&read_pair(&file)?).to_json())),
        Command::Search(args) => search(&args),
        Command::Profile { file, format } => {
            Ok(export_profile(&classify(&read_pair(&file)?), format))
        }
    }
}

fn read_pair(path: &Path) -> Result<SequencePair, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    SequencePair::from_text(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    format!(
        "{}\n",
        serde_json::to_string(value).expect("plain data serialises")
    )
}

#[derive(Serialize)]
struct GcpRecord<'a> {
    length: usize,
    recipe: &'a GcpRecipe,
    rows: [String; 2],
}

fn gcp(recipe: &GcpRecipe, json: bool) -> Outcome {
    let pair = build_gcp(recipe)?;
    if !json {
        return Ok(pair.to_text());
    }
    Ok(to_json(&GcpRecord {
        length: pair.len(),
        recipe,
        rows: [pair.first().to_string(), pair.second().to_string()],
    }))
}

#[derive(Serialize)]
struct PredictionRecord<'a> {
    recipe: &'a GcpRecipe,
    spec: &'a InsertionSpec,
    prediction: &'a golayzcp::PredictedProfile,
    measured: Vec<u64>,
    holds: bool,
}

fn zcp(args: &ZcpArgs) -> Outcome {
    let spec = InsertionSpec::new(args.pos, args.x, args.y);
    let c: Construction = if args.predict {
        construct_obzcp(&args.recipe, &spec)?
    } else {
        measure_obzcp(&args.recipe, &spec)?
    };

    let output = if args.predict {
        let prediction = c.prediction.as_ref().expect("strict construction predicts");
        to_json(&PredictionRecord {
            recipe: &c.recipe,
            spec: &c.spec,
            prediction,
            measured: c.report.profile.magnitudes(),
            holds: prediction.matches(&c.report.profile),
        })
    } else if args.report {
        format!("{}\n", c.report.to_json())
    } else {
        c.pair.to_text()
    };

    match c.prediction_holds() {
        Some(false) => Err(Failure::Violation {
            output,
            message: format!(
                "measured profile of {} {} differs from the prediction",
                c.recipe, spec.position
            ),
        }),
        _ => Ok(output),
    }
}

fn search(args: &SearchArgs) -> Outcome {
    let config = SearchConfig::from_env();
    if let Some(n) = args.max_zcz {
        let t = args.zcp_type.expect("clap requires --type");
        return Ok(to_json(&exhaustive_max_zcz(n, t, &config)?));
    }
    if let Some(n) = args.floor {
        let floor = out_of_zone_floor(n, &config)?;
        let output = to_json(&floor);
        if !floor.holds() {
            return Err(Failure::Violation {
                output,
                message: format!(
                    "{} Z-optimal pairs of length {n} have an out-of-zone zero",
                    floor.violations
                ),
            });
        }
        return Ok(output);
    }
    let source = args
        .insert
        .as_deref()
        .expect("clap requires one search mode");
    let (pair, label) = match source.parse::<GcpRecipe>() {
        Ok(recipe) => (build_gcp(&recipe)?, recipe.to_string()),
        Err(_) => (read_pair(Path::new(source))?, source.to_string()),
    };
    if !golayzcp::is_gcp(&pair) {
        return Err(Failure::Invalid(format!(
            "{label} is not a Golay complementary pair"
        )));
    }
    Ok(to_json(&insertion_search(
        &pair,
        &label,
        args.unequal,
        &config,
    )?))
}
