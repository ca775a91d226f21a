//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                                                        |
//! |------|----------------------------------------------------------------|
//! | 0    | success                                                        |
//! | 1    | `verify`: the supplied triple failed verification              |
//! | 2    | unparsable input (polynomial, JSON, or command line)           |
//! | 3    | invalid sequence parameters                                    |
//! | 4    | a generated identity failed its verification gate (internal)   |
//! | 5    | `family` requested for a non-degenerate sequence               |

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{family_sample, general_triple, ClosedFormTriple};
use crate::emit::{parse_poly, render_identity, render_table, Format};
use crate::error::Error;
use crate::exact::{Poly, Rational};
use crate::sequence::{Preset, SeqParams};
use crate::verify::{verify_triple, GATE_N_MAX, VERIFY_N_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_PARAMS: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_NON_DEGENERATE: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "horadam",
    version,
    about = "Closed forms for 2 * sum_{k=1}^{n} P(k) s_{k-1} over generalized Fibonacci sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build, verify and print the identity for one weight polynomial
    Gen(GenArgs),
    /// Check a triple given as JSON (file or standard input)
    Verify(VerifyArgs),
    /// Print the identities for the weights k^0 .. k^d_max
    Table(TableArgs),
    /// Report whether closed-form triples are unique for these parameters
    Classify(ClassifyArgs),
    /// Print several members of the triple family of a degenerate sequence
    Family(FamilyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Latex,
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Latex => Format::Latex,
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PresetArg {
    Fibonacci,
    Lucas,
    Pell,
    Jacobsthal,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Fibonacci => Preset::Fibonacci,
            PresetArg::Lucas => Preset::Lucas,
            PresetArg::Pell => Preset::Pell,
            PresetArg::Jacobsthal => Preset::Jacobsthal,
        }
    }
}

/// Sequence parameters; explicit values override a preset.
#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c0: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<i64>,
    #[arg(long, value_enum)]
    preset: Option<PresetArg>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Weight polynomial in k, e.g. "k^2 + 3k - 1/2"
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = GATE_N_MAX, value_parser = positive)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "latex")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Triple JSON file; standard input when omitted or "-"
    input: Option<PathBuf>,
    #[arg(long, default_value_t = VERIFY_N_MAX, value_parser = positive)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    d_max: usize,
    #[arg(long, value_enum, default_value = "latex")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = 1, value_parser = positive)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = GATE_N_MAX, value_parser = positive)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "latex")]
    format: FormatArg,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    msg: String,
}

impl Exit {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Exit {
            code,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParams(_) => EXIT_INVALID_PARAMS,
            Error::Parse { .. } | Error::Unsupported { .. } => EXIT_PARSE,
            Error::NonDegenerate => EXIT_NON_DEGENERATE,
            _ => EXIT_INTERNAL,
        };
        Exit::new(code, e.to_string())
    }
}

impl ParamArgs {
    fn resolve(&self) -> Result<SeqParams, Exit> {
        let base = self.preset.map(|p| Preset::from(p).tuple());
        let pick = |v: Option<i64>, from_preset: Option<i64>, name: &str| {
            v.or(from_preset).ok_or_else(|| {
                Exit::new(
                    EXIT_INVALID_PARAMS,
                    format!("invalid sequence parameters: missing --{name} (or use --preset)"),
                )
            })
        };
        let a = pick(self.a, base.map(|t| t.0), "a")?;
        let b = pick(self.b, base.map(|t| t.1), "b")?;
        let c0 = pick(self.c0, base.map(|t| t.2), "c0")?;
        let c1 = pick(self.c1, base.map(|t| t.3), "c1")?;
        Ok(SeqParams::new(a, b, c0, c1)?)
    }
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let ok = |out: String| (out, EXIT_OK);
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a).map(ok),
        Command::Verify(a) => cmd_verify(&a, stdin),
        Command::Table(a) => cmd_table(&a).map(ok),
        Command::Classify(a) => cmd_classify(&a).map(ok),
        Command::Family(a) => cmd_family(&a).map(ok),
    };
    match result {
        Ok((out, code)) => {
            let _ = writeln!(stdout, "{out}");
            if code == EXIT_VERIFY_FAILED {
                let _ = writeln!(stderr, "error: identity does not hold");
            }
            code
        }
        Err(Exit { code, msg }) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn gate(t: &ClosedFormTriple, n_max: usize) -> Result<(), Exit> {
    let report = verify_triple(t, n_max);
    match report.first_failure {
        None => Ok(()),
        Some(f) => Err(Exit::new(
            EXIT_INTERNAL,
            format!(
                "internal error: generated identity failed verification at n = {} (lhs {}, rhs {})",
                f.n, f.lhs, f.rhs
            ),
        )),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<String, Exit> {
    let params = args.params.resolve()?;
    let weight = parse_poly(&args.poly)?;
    let t = general_triple(&weight, &params);
    gate(&t, args.n_max)?;
    Ok(render_identity(&t, args.format.into()))
}

fn cmd_table(args: &TableArgs) -> Result<String, Exit> {
    let params = args.params.resolve()?;
    Ok(render_table(&params, args.d_max, args.format.into())?)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<String, Exit> {
    let params = args.params.resolve()?;
    let class = params.classify();
    if let FormatArg::Json = args.format {
        return Ok(serde_json::to_string_pretty(&class).expect("class serializes"));
    }
    let root = class
        .ratio_root
        .as_ref()
        .map_or_else(|| "none".to_string(), Rational::to_string);
    let consequence = if class.is_degenerate() {
        "for every weight polynomial there are infinitely many closed-form triples (the sequence is geometric)"
    } else {
        "for every weight polynomial the closed-form triple is unique"
    };
    Ok(format!(
        "kind: {}\nratio_root: {root}\n{consequence}",
        class.kind.as_str()
    ))
}

/// Free polynomials for `family`: the canonical `F` first, then distinct
/// random integer polynomials drawn from `seed`.
fn draw_free_polys(canonical: &Poly, count: usize, seed: u64) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_deg = canonical.degree().map_or(1, |d| d + 1);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    seen.insert(canonical.clone());
    out.push(canonical.clone());
    while out.len() < count {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        let p = Poly::from_ints(&coeffs);
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

fn cmd_family(args: &FamilyArgs) -> Result<String, Exit> {
    let params = args.params.resolve()?;
    let weight = parse_poly(&args.poly)?;
    if !params.classify().is_degenerate() {
        return Err(Error::NonDegenerate.into());
    }
    let canonical = general_triple(&weight, &params);
    let mut triples = Vec::with_capacity(args.count);
    for free in draw_free_polys(&canonical.f, args.count, args.seed) {
        let t = family_sample(&weight, &params, &free)?;
        gate(&t, args.n_max)?;
        triples.push(t);
    }
    let format: Format = args.format.into();
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&triples).expect("triples serialize"));
    }
    Ok(triples
        .iter()
        .map(|t| render_identity(t, format))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// The report always goes to standard output; a failed check only changes
/// the exit code.
fn cmd_verify(args: &VerifyArgs, stdin: &mut dyn Read) -> Result<(String, i32), Exit> {
    let mut text = String::new();
    match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Exit::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Exit::new(EXIT_PARSE, format!("cannot read standard input: {e}")))?;
        }
    }
    let triple: ClosedFormTriple = serde_json::from_str(&text)
        .map_err(|e| Exit::new(EXIT_PARSE, format!("malformed triple JSON: {e}")))?;
    let report = verify_triple(&triple, args.n_max);
    let out = match args.format {
        FormatArg::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        _ => match &report.first_failure {
            None => format!("ok: identity holds for n = 1..{}", report.checked_n_max),
            Some(f) => format!("FAILED at n = {}: lhs = {}, rhs = {}", f.n, f.lhs, f.rhs),
        },
    };
    let code = if report.ok { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok((out, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_polys_are_distinct_and_start_canonical() {
        let canon = Poly::from_ints(&[1, 2]);
        let v = draw_free_polys(&canon, 6, 7);
        assert_eq!(v[0], canon);
        let set: HashSet<_> = v.iter().cloned().collect();
        assert_eq!(set.len(), 6);
        assert_eq!(v, draw_free_polys(&canon, 6, 7));
    }

    #[test]
    fn preset_then_override() {
        let args = ParamArgs {
            a: None,
            b: None,
            c0: Some(2),
            c1: None,
            preset: Some(PresetArg::Fibonacci),
        };
        assert_eq!(args.resolve().unwrap(), SeqParams::lucas());
    }
}
