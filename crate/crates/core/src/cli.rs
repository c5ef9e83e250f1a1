//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.
//!
//! Exit codes: 0 success (or decoded), 1 usage or parse error, 2 decode
//! incomplete, 3 verification mismatch.

use crate::bench::{bench, CSV_HEADER};
use crate::bounds::{bounds_report, gv_distance};
use crate::channel::{ChannelMode, ChannelSpec, DecoderSelection};
use crate::code::LinearCode;
use crate::codefile::CodeFile;
use crate::decode::{default_md_radius, DecodeOutcome, DecodeStatus};
use crate::error::Error;
use crate::linalg::FqVector;
use crate::verify::{default_check, CrossCheck, VerifyReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "isdecode", version, about = "Information-set decoding of linear block codes")]
struct Cli {
    /// Emit a single JSON object instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random systematic code file.
    Gen {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Brute-force the minimum distance and record it in the file.
        #[arg(long)]
        with_distance: bool,
        /// Write the code file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report code parameters, brute-force structure and bounds.
    Info { file: PathBuf },
    /// Encode a message (symbols land on the information positions).
    Encode {
        file: PathBuf,
        #[arg(long)]
        message: String,
    },
    /// Add channel noise to a word.
    Corrupt {
        file: PathBuf,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decode a received word.
    Decode {
        file: PathBuf,
        #[arg(long)]
        received: String,
        #[command(flatten)]
        decoder: DecoderArgs,
    },
    /// Run seeded trials and cross-check every decode against an oracle.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        decoder: DecoderArgs,
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Patterns inspected per decode against the baseline counts, as CSV.
    Bench {
        file: PathBuf,
        /// Comma-separated error weights.
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        weights: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        decoder: DecoderArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Unique,
    Md,
}

#[derive(Debug, Args)]
struct DecoderArgs {
    #[arg(long, value_enum, default_value = "unique")]
    mode: Mode,
    /// md radius: an integer, or `cover` for the brute-force covering radius.
    /// Defaults to the known distance, else the Gilbert-Varshamov distance.
    #[arg(long)]
    radius: Option<String>,
    /// Minimum distance: an integer, or `brute` to compute it. Overrides the file.
    #[arg(long)]
    distance: Option<String>,
}

#[derive(Debug, Args)]
struct ChannelArgs {
    /// Inject exactly this many errors.
    #[arg(long, conflicts_with = "prob")]
    weight: Option<usize>,
    /// Per-symbol error probability of the q-ary symmetric channel.
    #[arg(long)]
    prob: Option<f64>,
}

/// Failure that maps onto an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::GuardExceeded { .. } => format!("{e}; try a smaller code or fewer parameters"),
            _ => e.to_string(),
        };
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Output of one command: text for stdout and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

/// Runs the program with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Gen {
            q,
            n,
            k,
            seed,
            with_distance,
            output,
        } => cmd_gen(*q, *n, *k, *seed, *with_distance, output.as_ref(), json),
        Command::Info { file } => cmd_info(&load(file)?, json),
        Command::Encode { file, message } => cmd_encode(&load(file)?, message, json),
        Command::Corrupt {
            file,
            word,
            channel,
            seed,
        } => cmd_corrupt(&load(file)?, word, channel, *seed, json),
        Command::Decode {
            file,
            received,
            decoder,
        } => cmd_decode(&load(file)?, received, decoder, json),
        Command::Verify {
            file,
            decoder,
            channel,
            trials,
            seed,
        } => {
            let code = prepare_code(&load(file)?, decoder)?;
            let selection = selection(&code, decoder)?;
            let spec = channel_spec(&code, channel, *seed)?;
            let check = default_check(selection);
            let report = crate::verify::verify_trials(&code, selection, &spec, *trials, check.as_ref())?;
            Ok(render_verify(&report, selection, &spec, json))
        }
        Command::Bench {
            file,
            weights,
            trials,
            seed,
            decoder,
        } => {
            let code = prepare_code(&load(file)?, decoder)?;
            let selection = selection(&code, decoder)?;
            for &w in weights {
                if w > code.n() {
                    return Err(usage(format!("weight {w} exceeds n = {}", code.n())));
                }
            }
            let rows = bench(&code, selection, weights, *trials, *seed)?;
            let text = if json {
                line(json!({ "command": "bench", "seed": seed, "decoder": selection, "rows": rows }))
            } else {
                let mut s = format!("{CSV_HEADER}\n");
                for r in &rows {
                    s.push_str(&r.csv());
                    s.push('\n');
                }
                s
            };
            Ok(Output::ok(text))
        }
    }
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn load(path: &PathBuf) -> CliResult<CodeFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    CodeFile::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_vector(code: &LinearCode, text: &str, len: usize, what: &str) -> CliResult<FqVector> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| usage(format!("{what}: invalid residue {t:?}")))
        })
        .collect::<CliResult<Vec<u32>>>()?;
    if values.len() != len {
        return Err(usage(format!(
            "{what}: expected {len} symbols, found {}",
            values.len()
        )));
    }
    FqVector::new(code.field(), values).map_err(|e| usage(format!("{what}: {e}")))
}

/// Builds the code and applies any `--distance` override.
fn prepare_code(file: &CodeFile, decoder: &DecoderArgs) -> CliResult<LinearCode> {
    let code = file.to_code()?;
    match decoder.distance.as_deref() {
        None => Ok(code),
        Some("brute") => Ok(code.with_computed_distance()?),
        Some(d) => {
            let d: usize = d
                .parse()
                .map_err(|_| usage(format!("--distance: expected an integer or `brute`, got {d:?}")))?;
            Ok(code.with_distance(d)?)
        }
    }
}

fn selection(code: &LinearCode, decoder: &DecoderArgs) -> CliResult<DecoderSelection> {
    match decoder.mode {
        Mode::Unique => {
            if decoder.radius.is_some() {
                return Err(usage("--radius only applies to --mode md"));
            }
            if code.distance().is_none() {
                return Err(usage(
                    "unique decoding needs the minimum distance: add a `d` line or pass --distance <d|brute>",
                ));
            }
            Ok(DecoderSelection::Unique)
        }
        Mode::Md => {
            let radius = match decoder.radius.as_deref() {
                None => default_md_radius(code),
                Some("cover") => code.covering_radius()?,
                Some(r) => r
                    .parse()
                    .map_err(|_| usage(format!("--radius: expected an integer or `cover`, got {r:?}")))?,
            };
            Ok(DecoderSelection::Md { radius })
        }
    }
}

fn channel_spec(code: &LinearCode, channel: &ChannelArgs, seed: u64) -> CliResult<ChannelSpec> {
    let mode = match (channel.weight, channel.prob) {
        (Some(w), None) => {
            if w > code.n() {
                return Err(usage(format!("--weight {w} exceeds n = {}", code.n())));
            }
            ChannelMode::FixedWeight(w)
        }
        (None, Some(p)) => ChannelMode::Symmetric(p),
        _ => return Err(usage("pass exactly one of --weight or --prob")),
    };
    Ok(ChannelSpec::new(code.q(), mode, seed)?)
}

fn cmd_gen(
    q: u32,
    n: usize,
    k: usize,
    seed: u64,
    with_distance: bool,
    output: Option<&PathBuf>,
    json: bool,
) -> CliResult<Output> {
    let mut file = CodeFile::random_systematic(q, n, k, seed)?;
    if with_distance {
        file.distance = Some(file.to_code()?.min_distance()?);
    }
    let text = file.write();
    let stdout = match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            if json {
                line(json!({ "command": "gen", "seed": seed, "path": path.display().to_string() }))
            } else {
                format!("wrote {} (seed {seed})\n", path.display())
            }
        }
        None if json => line(json!({ "command": "gen", "seed": seed, "file": text })),
        None => text,
    };
    Ok(Output::ok(stdout))
}

const GUARD_NOTE: &str = "not computed (guard)";

fn cmd_info(file: &CodeFile, json: bool) -> CliResult<Output> {
    let code = file.to_code()?;
    let (n, k, q) = (code.n(), code.k(), code.q());
    let brute_d = match code.min_distance() {
        Ok(d) => Some(d),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let rho = match code.covering_radius() {
        Ok(r) => Some(r),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let d = brute_d.or(file.distance);
    let bounds = d.map(|d| bounds_report(&code, d)).transpose()?;
    let gv = gv_distance(n, k, q);

    if json {
        let opt = |v: Option<usize>| v.map_or(json!(GUARD_NOTE), |x| json!(x));
        let v = json!({
            "command": "info",
            "q": q,
            "n": n,
            "k": k,
            "rate": code.rate(),
            "d": opt(brute_d),
            "d_file": file.distance,
            "covering_radius": opt(rho),
            "gv_distance": gv,
            "systematic_permutation": code.perm().mapping(),
            "bounds": bounds,
        });
        return Ok(Output::ok(line(v)));
    }

    let show = |v: Option<usize>| v.map_or(GUARD_NOTE.to_string(), |x| x.to_string());
    let mut s = String::new();
    s.push_str(&format!("q = {q}\nn = {n}\nk = {k}\nR = {:.6}\n", code.rate()));
    s.push_str(&format!("d = {}\n", show(brute_d)));
    if let Some(fd) = file.distance {
        s.push_str(&format!("d (file) = {fd}\n"));
    }
    s.push_str(&format!("covering radius = {}\n", show(rho)));
    s.push_str(&format!("gv distance = {gv}\n"));
    if !code.perm().is_identity() {
        s.push_str(&format!("systematic column order = {:?}\n", code.perm().mapping()));
    }
    if let Some(b) = bounds {
        s.push_str(&format!("t = {}\n", b.t));
        s.push_str(&format!("V_{q}(k={k}, t) = {}\n", b.ball_info_set));
        s.push_str(&format!("V_{q}(n={n}, t) = {}\n", b.ball_full));
        s.push_str(&format!("q^k = {}\n", b.codeword_count));
        s.push_str(&format!("exponent unique = {:.6}\n", b.exponent_unique));
        s.push_str(&format!("exponent md = {:.6}\n", b.exponent_md));
    }
    Ok(Output::ok(s))
}

fn cmd_encode(file: &CodeFile, message: &str, json: bool) -> CliResult<Output> {
    let code = file.to_code()?;
    let x = parse_vector(&code, message, code.k(), "message")?;
    let c = code.to_original_order(&code.encode(&x)?)?;
    Ok(Output::ok(if json {
        line(json!({ "command": "encode", "codeword": c.entries() }))
    } else {
        format!("{c}\n")
    }))
}

fn cmd_corrupt(file: &CodeFile, word: &str, channel: &ChannelArgs, seed: u64, json: bool) -> CliResult<Output> {
    let code = file.to_code()?;
    let w = parse_vector(&code, word, code.n(), "word")?;
    let spec = channel_spec(&code, channel, seed)?;
    let e = crate::channel::sample_error(&spec, code.n(), &mut spec.trial_rng(0))?;
    let y = w.add(&e)?;
    Ok(Output::ok(if json {
        line(json!({ "command": "corrupt", "seed": seed, "received": y.entries(), "error": e.entries() }))
    } else {
        format!("{y}\n")
    }))
}

fn cmd_decode(file: &CodeFile, received: &str, decoder: &DecoderArgs, json: bool) -> CliResult<Output> {
    let code = prepare_code(file, decoder)?;
    let selection = selection(&code, decoder)?;
    let y_orig = parse_vector(&code, received, code.n(), "received")?;
    let y = code.to_systematic_order(&y_orig)?;
    let outcome = selection.decode(&code, &y)?.to_original_order(&code)?;
    let code_out = if outcome.is_decoded() {
        EXIT_OK
    } else {
        EXIT_INCOMPLETE
    };
    Ok(Output {
        text: render_decode(&outcome, selection, json),
        code: code_out,
    })
}

fn render_decode(outcome: &DecodeOutcome, selection: DecoderSelection, json: bool) -> String {
    let stats = &outcome.stats;
    if json {
        let mut v = json!({
            "command": "decode",
            "decoder": selection,
            "patterns_inspected": stats.patterns_inspected,
            "syndrome_products": stats.syndrome_products,
        });
        let obj = v.as_object_mut().unwrap();
        match &outcome.status {
            DecodeStatus::Decoded {
                codeword,
                error,
                error_weight,
            } => {
                obj.insert("status".into(), json!("decoded"));
                obj.insert("codeword".into(), json!(codeword.entries()));
                obj.insert("error".into(), json!(error.entries()));
                obj.insert("error_weight".into(), json!(error_weight));
            }
            DecodeStatus::Incomplete => {
                obj.insert("status".into(), json!("incomplete"));
            }
        }
        if let Some(trace) = &stats.best_weight_trace {
            obj.insert("best_weight_trace".into(), json!(trace));
        }
        return line(v);
    }
    let mut s = String::new();
    match &outcome.status {
        DecodeStatus::Decoded {
            codeword,
            error,
            error_weight,
        } => {
            s.push_str("status: decoded\n");
            s.push_str(&format!("codeword: {codeword}\nerror: {error}\nerror_weight: {error_weight}\n"));
        }
        DecodeStatus::Incomplete => s.push_str("status: incomplete\n"),
    }
    s.push_str(&format!(
        "patterns_inspected: {}\nsyndrome_products: {}\n",
        stats.patterns_inspected, stats.syndrome_products
    ));
    s
}

fn render_verify(report: &VerifyReport, selection: DecoderSelection, spec: &ChannelSpec, json: bool) -> Output {
    let code = if report.passed() { EXIT_OK } else { EXIT_MISMATCH };
    let text = if json {
        line(json!({
            "command": "verify",
            "decoder": selection,
            "channel": spec,
            "oracle": report.oracle,
            "report": report.report,
            "mismatches": report.mismatches,
        }))
    } else {
        let r = &report.report;
        let mut s = String::new();
        s.push_str(&format!("seed: {}\n", r.seed));
        s.push_str(&format!("decoder: {}\n", describe_selection(selection)));
        s.push_str(&format!("oracle: {}\n", report.oracle));
        s.push_str(&format!("trials: {}\n", r.trials));
        s.push_str(&format!("decoded_correct: {}\n", r.decoded_correct));
        s.push_str(&format!("decoded_wrong: {}\n", r.decoded_wrong));
        s.push_str(&format!("incomplete: {}\n", r.incomplete));
        s.push_str(&format!("mean_patterns_inspected: {:.3}\n", r.mean_patterns_inspected));
        s.push_str(&format!("max_patterns_inspected: {}\n", r.max_patterns_inspected));
        s.push_str(&format!("mismatches: {}\n", report.mismatches.len()));
        for m in &report.mismatches {
            let y: Vec<String> = m.received.iter().map(u32::to_string).collect();
            s.push_str(&format!(
                "mismatch seed={} trial={} y=\"{}\": {}\n",
                m.seed,
                m.trial,
                y.join(" "),
                m.detail
            ));
        }
        s
    };
    Output { text, code }
}

fn describe_selection(s: DecoderSelection) -> String {
    match s {
        DecoderSelection::Unique => "unique".into(),
        DecoderSelection::Md { radius } => format!("md (radius {radius})"),
    }
}

/// Exit code for a verification report, exposed for harness self-tests
/// that plug in their own [`CrossCheck`].
pub fn verify_exit_code(report: &VerifyReport) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Runs `verify` logic with a caller-supplied cross-check.
pub fn verify_with(
    file: &CodeFile,
    selection: DecoderSelection,
    spec: &ChannelSpec,
    trials: u64,
    check: &dyn CrossCheck,
) -> crate::Result<VerifyReport> {
    let code = file.to_code()?;
    crate::verify::verify_trials(&code, selection, spec, trials, check)
}
