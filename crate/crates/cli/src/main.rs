//! Command-line front end: continued-fraction slopes in, words, repetition
//! profiles, exact repetition exponents, pattern bounds and verification
//! reports out, as text, CSV or JSON.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sturmrep::contfrac::ContinuedFraction;
use sturmrep::repetition::{r_profile_fast, r_profile_oracle, rep_estimate, RepProfile};
use sturmrep::spectrum::{
    pattern_exclusion_bound, rep_exact_case2, Check, ExclusionMode, QuadJson, Report,
};
use sturmrep::words::{case2_word, characteristic_blocks, sturmian_prefix, BinaryWord, DigitMode};
use sturmrep::{consts, verify, Error, QuadExt, Rational};

/// Decimal digits printed for exact constants and repetition exponents.
const CONSTANT_DIGITS: u32 = 30;

#[derive(Parser)]
#[command(
    name = "sturmrep",
    version,
    about = "Sturmian words, repetition profiles and the exact spectrum of repetition exponents",
    max_term_width = 100
)]
struct Cli {
    /// Write the primary output to a file instead of stdout
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the named spectrum constants, exact and to 30 decimals
    Constants {
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Word generation
    #[command(subcommand)]
    Word(WordCmd),
    /// Repetition profiles and exponents
    #[command(subcommand)]
    Rep(RepCmd),
    /// Partial-quotient pattern bounds
    #[command(subcommand)]
    Pattern(PatternCmd),
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Depth knob: profile entries (words), family cap (spectrum),
        /// index range (congruence)
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Json)]
        format: TextOrJson,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    /// Emit a word prefix as an ASCII 0/1 stream
    Gen {
        #[command(flatten)]
        word: WordArgs,
        /// Prefix length
        #[arg(long)]
        length: usize,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// CSV profile of the repetition function: n, r_n, r_n/n
    Profile {
        #[command(flatten)]
        word: WordArgs,
        /// Largest factor length n
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Engine::Fast)]
        engine: Engine,
    },
    /// Trailing-window estimate of the repetition exponent
    Estimate {
        #[command(flatten)]
        word: WordArgs,
        /// Prefix length to analyze
        #[arg(long)]
        length: usize,
        /// Trailing window fraction (rational in (0,1))
        #[arg(long, default_value = "1/2")]
        window: String,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Exact repetition exponent of the case-2 word of a periodic slope
    Exact {
        /// Period of the slope's partial quotients, comma-separated
        #[arg(long)]
        period: String,
        /// Quotients before the period, comma-separated
        #[arg(long)]
        preperiod: Option<String>,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Subcommand)]
enum PatternCmd {
    /// Certified worst-case bound excluding a quotient pattern
    Bound {
        /// Pattern of partial quotients in {1,2}, comma-separated
        #[arg(long)]
        pattern: String,
        /// rmax | r1 | r2 | r3 | a rational p/q
        #[arg(long)]
        threshold: String,
        #[arg(long, value_enum, default_value_t = ModeArg::B2ThenB1)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Args)]
struct WordArgs {
    /// Slope as a continued fraction: a0;d,d,…,(d,d,…)
    #[arg(long)]
    slope: String,
    /// Intercept as a rational p/q in [0,1)
    #[arg(long, default_value = "0")]
    intercept: String,
    #[arg(long, value_enum, default_value_t = Mode::Floor)]
    mode: Mode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Rotation coding by floors
    Floor,
    /// Rotation coding by ceilings
    Ceiling,
    /// Characteristic word (block limit, intercept ignored)
    Characteristic,
    /// Case-2 word: 1 followed by the characteristic blocks
    Case2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Fast,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Words,
    Spectrum,
    Congruence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Threshold through the q-ratio bound, evaluation through the witness bound
    B2ThenB1,
    /// Threshold through the witness bound, evaluation through the q-ratio bound
    B1ThenB2,
}

impl From<ModeArg> for ExclusionMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::B2ThenB1 => ExclusionMode::B2ThenB1,
            ModeArg::B1ThenB2 => ExclusionMode::B1ThenB2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify_error(&e))
        }
    }
}

/// Usage-class errors exit 2; runtime failures exit 1.
fn classify_error(e: &Error) -> u8 {
    match e {
        Error::InvalidContinuedFraction(_) | Error::InvalidArgument(_) | Error::OutOfRange(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> sturmrep::Result<ExitCode> {
    let (body, ok) = match cli.command {
        Cmd::Constants { format } => (constants_output(format), true),
        Cmd::Word(WordCmd::Gen { word, length }) => {
            let w = build_word(&word, length)?;
            (format!("{w}\n"), true)
        }
        Cmd::Rep(RepCmd::Profile { word, nmax, engine }) => rep_profile(&word, nmax, engine)?,
        Cmd::Rep(RepCmd::Estimate { word, length, window, format }) => {
            rep_estimate_output(&word, length, &window, format)?
        }
        Cmd::Rep(RepCmd::Exact { period, preperiod, format }) => {
            rep_exact_output(&period, preperiod.as_deref(), format)?
        }
        Cmd::Pattern(PatternCmd::Bound { pattern, threshold, mode, format }) => {
            pattern_bound_output(&pattern, &threshold, mode, format)?
        }
        Cmd::Verify { suite, nmax, format } => verify_output(suite, nmax, format)?,
    };
    emit(cli.output.as_deref(), &body)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn emit(target: Option<&std::path::Path>, body: &str) -> sturmrep::Result<()> {
    match target {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))?;
            Ok(())
        }
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
    }
}

fn parse_rational(s: &str) -> sturmrep::Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|_| Error::InvalidArgument(format!("invalid rational {s:?}")))
}

fn parse_digits(s: &str) -> sturmrep::Result<Vec<u64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("invalid partial quotient {tok:?}")))
        })
        .collect()
}

fn parse_threshold(s: &str) -> sturmrep::Result<(String, QuadExt)> {
    let v = match s.trim().to_ascii_lowercase().as_str() {
        "rmax" | "r_max" => consts::r_max(),
        "r1" | "r_1" => consts::r_1(),
        "r2" | "r_2" => consts::r_2(),
        "r3" | "r_3" => consts::r_3(),
        other => QuadExt::from_ratio(&parse_rational(other)?),
    };
    Ok((s.trim().to_string(), v))
}

fn build_word(args: &WordArgs, length: usize) -> sturmrep::Result<BinaryWord> {
    if length == 0 {
        return Err(Error::InvalidArgument("length must be positive".into()));
    }
    let cf = ContinuedFraction::parse(&args.slope)?;
    match args.mode {
        Mode::Case2 => case2_word(&cf, length),
        Mode::Characteristic => {
            let mut k = 4usize;
            loop {
                let blocks = characteristic_blocks(&cf, k)?;
                let big = blocks.last().unwrap();
                if big.len() >= length {
                    return Ok(big.prefix(length));
                }
                k += 2;
            }
        }
        Mode::Floor | Mode::Ceiling => {
            let theta = cf.value()?;
            let rho = parse_rational(&args.intercept)?;
            let mode =
                if args.mode == Mode::Floor { DigitMode::Floor } else { DigitMode::Ceiling };
            sturmian_prefix(&theta, &rho, length, mode)
        }
    }
}

fn constants_output(format: TextOrJson) -> String {
    let table = [
        ("r_max", consts::r_max()),
        ("r_1", consts::r_1()),
        ("r_2", consts::r_2()),
        ("r_3", consts::r_3()),
        ("phi", consts::golden_ratio()),
    ];
    match format {
        TextOrJson::Text => {
            let mut s = String::new();
            for (name, v) in table {
                s.push_str(&format!("{name} = {v} = {}\n", v.to_decimal_string(CONSTANT_DIGITS)));
            }
            s
        }
        TextOrJson::Json => {
            let items: Vec<serde_json::Value> = table
                .iter()
                .map(|(name, v)| {
                    serde_json::json!({
                        "name": name,
                        "value_exact": serde_json::to_value(QuadJson::from(v)).unwrap(),
                        "value_decimal": v.to_decimal_string(CONSTANT_DIGITS),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&items).unwrap();
            s.push('\n');
            s
        }
    }
}

fn profile_for(args: &WordArgs, nmax: usize, oracle: bool) -> sturmrep::Result<RepProfile> {
    // A prefix of length 2·nmax + 2 resolves every r(n) a Sturmian word
    // admits up to nmax.
    let length = 2 * nmax + 2;
    if nmax >= 50_000 {
        eprintln!("# generating a prefix of length {length}");
    }
    let w = build_word(args, length)?;
    if nmax >= 50_000 {
        eprintln!("# profiling up to n = {nmax}");
    }
    Ok(if oracle { r_profile_oracle(&w, nmax) } else { r_profile_fast(&w, nmax) })
}

fn rep_profile(args: &WordArgs, nmax: usize, engine: Engine) -> sturmrep::Result<(String, bool)> {
    if nmax == 0 {
        return Err(Error::InvalidArgument("nmax must be positive".into()));
    }
    match engine {
        Engine::Fast => Ok((profile_for(args, nmax, false)?.csv(), true)),
        Engine::Oracle => Ok((profile_for(args, nmax, true)?.csv(), true)),
        Engine::Both => {
            let fast = profile_for(args, nmax, false)?;
            let oracle = profile_for(args, nmax, true)?;
            for n in 1..=nmax {
                if fast.r(n) != oracle.r(n) {
                    eprintln!(
                        "engine mismatch at n = {n}: fast {:?}, oracle {:?}",
                        fast.r(n),
                        oracle.r(n)
                    );
                    return Ok((String::new(), false));
                }
            }
            Ok((fast.csv(), true))
        }
    }
}

fn rep_estimate_output(
    args: &WordArgs,
    length: usize,
    window: &str,
    format: TextOrJson,
) -> sturmrep::Result<(String, bool)> {
    let fraction = parse_rational(window)?;
    let w = build_word(args, length)?;
    let nmax = length.saturating_sub(1) / 2;
    let profile = r_profile_fast(&w, nmax);
    let est = rep_estimate(&profile, &fraction)?;
    let min_dec = sturmrep::exact::rational_decimal_string(&est.window_min, 12);
    match format {
        TextOrJson::Text => {
            let mut s = String::new();
            s.push_str(&format!("prefix_length = {length}\n"));
            s.push_str(&format!("window = [{}, {}]\n", est.window.0, est.window.1));
            s.push_str(&format!("window_min = {} = {min_dec}\n", est.window_min));
            s.push_str(&format!("record_lows = {}\n", est.record_lows.len()));
            if let Some((n, ratio)) = est.record_lows.last() {
                s.push_str(&format!(
                    "last_record_low = ({n}, {ratio}) = {}\n",
                    sturmrep::exact::rational_decimal_string(ratio, 12)
                ));
            }
            Ok((s, true))
        }
        TextOrJson::Json => {
            let lows: Vec<serde_json::Value> = est
                .record_lows
                .iter()
                .map(|(n, r)| serde_json::json!([n, r.to_string()]))
                .collect();
            let v = serde_json::json!({
                "input": format!("slope {} length {length}", args.slope),
                "window": [est.window.0, est.window.1],
                "window_min": est.window_min.to_string(),
                "window_min_decimal": min_dec,
                "record_lows": lows,
            });
            Ok((format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), true))
        }
    }
}

fn rep_exact_output(
    period: &str,
    preperiod: Option<&str>,
    format: TextOrJson,
) -> sturmrep::Result<(String, bool)> {
    let period = parse_digits(period)?;
    let preperiod = preperiod.map(parse_digits).transpose()?.unwrap_or_default();
    let cf = ContinuedFraction::new(0, preperiod, period)?;
    let result = rep_exact_case2(&cf)?;
    let decimal = result.value.to_decimal_string(CONSTANT_DIGITS);
    match format {
        TextOrJson::Text => {
            let mut s = format!("rep = {} = {decimal}\n", result.value);
            s.push_str(&format!("argmin: phase {} ({})\n", result.argmin_phase, result.argmin_kind));
            if result.argmins.len() > 1 {
                let ties: Vec<String> =
                    result.argmins.iter().map(|(p, k)| format!("phase {p} ({k})")).collect();
                s.push_str(&format!("ties: {}\n", ties.join(", ")));
            }
            if result.extrapolated {
                s.push_str(
                    "note: period outside the published families; value is method-extrapolated\n",
                );
            }
            Ok((s, true))
        }
        TextOrJson::Json => {
            let mut report = Report::new(format!("rep exact --period {}", cf));
            report.value_exact = Some(QuadJson::from(&result.value));
            report.value_decimal = Some(decimal);
            report.argmin_phase = Some(result.argmin_phase);
            report.argmin_kind = Some(result.argmin_kind.to_string());
            report.checks.push(Check::new(
                "proven-family",
                !result.extrapolated,
                if result.extrapolated {
                    "period outside the published families; value is method-extrapolated"
                } else {
                    "period belongs to a published family"
                },
            ));
            Ok((format!("{}\n", report.to_json()), true))
        }
    }
}

fn pattern_bound_output(
    pattern: &str,
    threshold: &str,
    mode: ModeArg,
    format: TextOrJson,
) -> sturmrep::Result<(String, bool)> {
    let digits = parse_digits(pattern)?;
    let (threshold_name, threshold_value) = parse_threshold(threshold)?;
    let bound = pattern_exclusion_bound(&digits, &threshold_value, mode.into())?;
    let verdict = bound.excluded;
    let monotone = match bound.monotonicity {
        std::cmp::Ordering::Greater => "increasing in eta (worst endpoint eta = 1)",
        std::cmp::Ordering::Less => "decreasing in eta (worst endpoint eta = 0)",
        std::cmp::Ordering::Equal => "constant in eta",
    };
    match format {
        TextOrJson::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "pattern: {}\n",
                digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ));
            s.push_str(&format!(
                "threshold: {threshold_name} = {} = {}\n",
                threshold_value,
                threshold_value.to_decimal_string(12)
            ));
            s.push_str(&format!("bound = {} = {}\n", bound.value, bound.value.to_decimal_string(12)));
            s.push_str(&format!("monotonicity: {monotone}\n"));
            s.push_str(&format!(
                "endpoints: eta=0 -> {}, eta=1 -> {}\n",
                bound.at_eta_zero.to_decimal_string(12),
                bound.at_eta_one.to_decimal_string(12)
            ));
            s.push_str(&format!("excluded: {verdict}\n"));
            Ok((s, verdict))
        }
        TextOrJson::Json => {
            let mut report = Report::new(format!(
                "pattern bound --pattern {pattern} --threshold {threshold_name}"
            ));
            report.value_exact = Some(QuadJson::from(&bound.value));
            report.value_decimal = Some(bound.value.to_decimal_string(CONSTANT_DIGITS));
            report.checks.push(Check::new("monotonicity-certificate", true, monotone));
            report.checks.push(Check::new(
                "excluded",
                verdict,
                format!(
                    "bound {} the threshold",
                    if verdict { "lies below" } else { "does not lie below" }
                ),
            ));
            Ok((format!("{}\n", report.to_json()), verdict))
        }
    }
}

fn verify_output(
    suite: Suite,
    nmax: Option<usize>,
    format: TextOrJson,
) -> sturmrep::Result<(String, bool)> {
    let mut checks: Vec<Check> = Vec::new();
    let suite_name = match suite {
        Suite::All => "all",
        Suite::Words => "words",
        Suite::Spectrum => "spectrum",
        Suite::Congruence => "congruence",
    };
    if matches!(suite, Suite::All | Suite::Words) {
        checks.extend(verify::words_suite(nmax.unwrap_or(2000)));
        checks.extend(verify::lower_bound_suite(30_000, 4, 9));
    }
    if matches!(suite, Suite::All | Suite::Spectrum) {
        checks.extend(verify::spectrum_suite(nmax.unwrap_or(20)));
    }
    if matches!(suite, Suite::All | Suite::Congruence) {
        checks.extend(verify::congruence_suite(nmax.unwrap_or(2000)));
    }
    let mut report = Report::new(format!("verify --suite {suite_name}"));
    report.checks = checks;
    let ok = report.all_pass();
    let body = match format {
        TextOrJson::Json => format!("{}\n", report.to_json()),
        TextOrJson::Text => {
            let mut s = String::new();
            for c in &report.checks {
                s.push_str(&format!("{:?}\t{}\t{}\n", c.status, c.name, c.detail));
            }
            s.push_str(&format!("result: {}\n", if ok { "pass" } else { "FAIL" }));
            s
        }
    };
    Ok((body, ok))
}
