//! Command-line front end: `run` parses an argument vector and returns the
//! exit code with the text to print.

mod reference;

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use finitop::{
    characterize_alc, find_counterexample, independence_search, is_variant_open, lc_family, parse_set, parse_space,
    variant_closed_family, variant_open_family, CounterexampleRecord, FiniteSpace, LCVariant, PointSubset, SetFamily,
    Variant,
};
use similar::TextDiff;

/// Exit code when every check holds or a search is exhausted.
pub const EXIT_OK: i32 = 0;
/// Exit code when a counterexample or mismatch is found.
pub const EXIT_FINDING: i32 = 1;
/// Exit code for malformed input or flags.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "finitop",
    version,
    about = "Generalized open and locally closed sets on finite spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a space file and print it in canonical form.
    Check { file: PathBuf },
    /// Print open, closed or locally closed families.
    Families {
        file: PathBuf,
        /// Open or closed family symbol, e.g. aO, SO, eC.
        #[arg(long = "variant")]
        variants: Vec<String>,
        /// Locally closed family symbol, e.g. LC, aLC.
        #[arg(long = "lc")]
        lcs: Vec<String>,
    },
    /// Membership of one subset in every family.
    Classify {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Per-subset membership matrix and the implication arrows.
    Diagram { file: PathBuf },
    /// Search labeled spaces for a counterexample.
    Search(SearchArgs),
    /// Recompute the reference examples and compare with the stored listing.
    VerifyPaper,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Largest space size to search.
    #[arg(long)]
    points: usize,
    /// Implication to refute, e.g. `LC=>aLC`.
    #[arg(long, required_unless_present = "question_3_10", conflicts_with = "question_3_10")]
    claim: Option<String>,
    /// Search both directions between bLC and eLC.
    #[arg(long = "question-3-10")]
    question_3_10: bool,
    /// Report elapsed_ms as 0.
    #[arg(long)]
    no_timing: bool,
}

enum Request {
    Open(Variant),
    Closed(Variant),
    Local(LCVariant),
}

impl Request {
    fn parse_variant(s: &str) -> Result<Request, String> {
        if let Ok(v) = s.parse::<Variant>() {
            return Ok(Request::Open(v));
        }
        Variant::ALL
            .into_iter()
            .find(|v| v.closed_symbol().eq_ignore_ascii_case(s))
            .map(Request::Closed)
            .ok_or_else(|| format!("--variant: unknown family `{s}`"))
    }

    fn label(&self) -> &'static str {
        match self {
            Request::Open(v) => v.symbol(),
            Request::Closed(v) => v.closed_symbol(),
            Request::Local(l) => l.symbol(),
        }
    }

    fn family<'a>(&self, space: &'a FiniteSpace) -> &'a SetFamily {
        match *self {
            Request::Open(v) => variant_open_family(space, v),
            Request::Closed(v) => variant_closed_family(space, v),
            Request::Local(l) => lc_family(space, l),
        }
    }
}

const ARROWS: [(LCVariant, LCVariant); 9] = {
    use LCVariant::*;
    [
        (LC, FLC),
        (LC, AlphaLC),
        (FLC, BLC),
        (FLC, ELC),
        (ALC, FLC),
        (ALC, ELC),
        (ALC, AlphaLC),
        (AlphaLC, ELC),
        (AlphaLC, BLC),
    ]
};

type Outcome = Result<(i32, String), String>;

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Check { file } => check(&file),
        Command::Families { file, variants, lcs } => families(&file, &variants, &lcs),
        Command::Classify { file, set } => classify(&file, &set),
        Command::Diagram { file } => diagram(&file),
        Command::Search(args) => search(&args),
        Command::VerifyPaper => verify_reference(),
    };
    result.unwrap_or_else(|msg| (EXIT_USAGE, format!("error: {msg}\n")))
}

fn load(file: &PathBuf) -> Result<FiniteSpace, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_space(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn check(file: &PathBuf) -> Outcome {
    Ok((EXIT_OK, finitop::format_space(&load(file)?)))
}

fn families(file: &PathBuf, variants: &[String], lcs: &[String]) -> Outcome {
    let space = load(file)?;
    let mut requests = variants
        .iter()
        .map(|s| Request::parse_variant(s))
        .collect::<Result<Vec<_>, _>>()?;
    for s in lcs {
        requests.push(Request::Local(
            s.parse().map_err(|_| format!("--lc: unknown family `{s}`"))?,
        ));
    }
    if requests.is_empty() {
        requests.extend(Variant::ALL.map(Request::Open));
        requests.extend(LCVariant::ALL.map(Request::Local));
    }
    let headed = requests.len() > 1;
    let mut out = String::new();
    for r in &requests {
        if headed {
            let _ = writeln!(out, "# {}", r.label());
        }
        out += &space.format_family(r.family(&space));
    }
    Ok((EXIT_OK, out))
}

fn subset(space: &FiniteSpace, literal: &str) -> Result<PointSubset, String> {
    parse_set(space, literal).map_err(|e| format!("--set {literal}: {e}"))
}

fn classify(file: &PathBuf, literal: &str) -> Outcome {
    let space = load(file)?;
    let a = subset(&space, literal)?;
    let mut out = format!("set: {}\n", space.format_set(a));
    for v in Variant::ALL {
        let _ = writeln!(out, "{}: {}", v.symbol(), is_variant_open(&space, v, a));
    }
    for l in LCVariant::ALL {
        let _ = writeln!(out, "{}: {}", l.symbol(), lc_family(&space, l).contains(a));
    }
    out += "aLC characterization:\n";
    out += &characterize_alc(&space, a).render(&space);
    Ok((EXIT_OK, out))
}

fn diagram(file: &PathBuf) -> Outcome {
    let space = load(file)?;
    let sets: Vec<PointSubset> = SetFamily::power_set(space.n()).iter().copied().collect();
    let labels: Vec<String> = sets.iter().map(|&a| space.format_set(a)).collect();
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(3);
    let mut out = format!("{:width$}", "set");
    for l in LCVariant::ALL {
        let _ = write!(out, " {:>7}", l.symbol());
    }
    out += "\n";
    for (a, label) in sets.iter().zip(&labels) {
        let _ = write!(out, "{label:width$}");
        for l in LCVariant::ALL {
            let _ = write!(out, " {:>7}", if lc_family(&space, l).contains(*a) { "x" } else { "." });
        }
        out += "\n";
    }
    let mut broken = 0;
    for (from, to) in ARROWS {
        match lc_family(&space, from).first_outside(lc_family(&space, to)) {
            None => {
                let _ = writeln!(out, "{from} => {to}: holds");
            }
            Some(a) => {
                broken += 1;
                let _ = writeln!(out, "{from} => {to}: fails at {}", space.format_set(a));
            }
        }
    }
    let _ = writeln!(out, "arrows holding: {}/{}", ARROWS.len() - broken, ARROWS.len());
    Ok((if broken == 0 { EXIT_OK } else { EXIT_FINDING }, out))
}

fn search(args: &SearchArgs) -> Outcome {
    let finish = |r: CounterexampleRecord| if args.no_timing { r.without_timing() } else { r };
    let records = match &args.claim {
        Some(claim) => {
            let claim = claim.parse().map_err(|e| format!("--claim: {e}"))?;
            vec![finish(
                find_counterexample(claim, args.points).map_err(|e| format!("--points: {e}"))?,
            )]
        }
        None => {
            let (a, b) = independence_search(args.points).map_err(|e| format!("--points: {e}"))?;
            vec![finish(a), finish(b)]
        }
    };
    let found = records.iter().any(CounterexampleRecord::is_found);
    let reports: Vec<_> = records.iter().map(CounterexampleRecord::report).collect();
    let json = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .map_err(|e| e.to_string())?;
    Ok((if found { EXIT_FINDING } else { EXIT_OK }, json + "\n"))
}

fn verify_reference() -> Outcome {
    let computed = reference::compute().map_err(|e| e.to_string())?;
    if computed == reference::GOLDEN {
        let sections = computed.lines().filter(|l| l.starts_with("## ")).count();
        return Ok((EXIT_OK, format!("verify-paper: {sections} examples match\n")));
    }
    let diff = TextDiff::from_lines(reference::GOLDEN, &computed)
        .unified_diff()
        .header("expected", "computed")
        .to_string();
    Ok((EXIT_FINDING, format!("verify-paper: mismatch\n{diff}")))
}

/// The reference document as currently computed, for inspection.
pub fn reference_document() -> Result<String, String> {
    reference::compute().map_err(|e| e.to_string())
}
