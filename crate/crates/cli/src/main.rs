//! `acs`: command-line front end for the arithmetic Chern-Simons toolkit.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use acs_core::cohomology::{
    class_order, cyclic_generator, is_coboundary, parse_cochain, twist_verify, CohomologyError,
};
use acs_core::cs_engine::{
    cs_biquadratic, cs_inert_count, preset_eval, scan_records, BiquadFamilyInput, CsError, CsValue,
    Density, PresetId, QuadFamilyInput,
};
use acs_core::group::{builtin_group, enumerate_split_pairs, parse_group_spec, GroupError, NamedGroup};
use acs_core::number_theory::{factorize, kronecker, splitting_type, Factored, NumberTheoryError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "acs", version, about = "Arithmetic Chern-Simons invariants and group cohomology checks")]
struct Cli {
    /// Output format; overrides `default_format` from the config file.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Config file of `key=value` lines (also read from `ACS_CONFIG`).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kronecker symbol (a/m).
    #[command(allow_negative_numbers = true)]
    Symbol { a: i64, m: i64 },
    /// Decomposition of the prime p in Q(√m).
    #[command(allow_negative_numbers = true)]
    Split { p: u64, m: i64 },
    /// Prime factorization.
    Factor { v: u64 },
    /// Inert-count evaluation for a quadratic family.
    Quad {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        t: u64,
        #[arg(long = "M")]
        m: u64,
        /// Relative discriminant, e.g. `3^4*5^2*29^2`.
        #[arg(long)]
        dlk: String,
    },
    /// Biquadratic family (always 0 on valid input).
    #[command(allow_negative_numbers = true)]
    Biquad {
        #[arg(long = "D1")]
        d1: i64,
        #[arg(long = "D2")]
        d2: i64,
        #[arg(long)]
        t1: u64,
        #[arg(long)]
        t2: u64,
        #[arg(long = "M")]
        m: u64,
    },
    /// Closed-form preset evaluation.
    Preset {
        name: String,
        #[arg(long, default_value_t = 1)]
        alpha: u8,
        #[arg(long)]
        t: u64,
    },
    /// Evaluate a preset over all valid t up to t-max.
    Scan {
        name: String,
        #[arg(long, default_value_t = 1)]
        alpha: u8,
        #[arg(long = "t-max")]
        t_max: u64,
    },
    /// Check that the twisted class pulls back to the generator of H³(Z/n, Z/n).
    Twist {
        /// Builtin name (zn:<n>, s3, d4, q8, heis:<d>:<n>, gl2:<q>) or a group file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
    },
    /// Order of the class Id ∪ δ(Id) in H³(Z/n, Z/n).
    GeneratorOrder {
        #[arg(long)]
        n: u32,
    },
    /// Check a cochain dump for the cocycle and coboundary conditions.
    CochainCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap(_) => 3,
            CliError::Invalid(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::OrderCapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::SizeCapExceeded(_) => CliError::Cap(e.to_string()),
            CohomologyError::Group(g) => g.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CsError> for CliError {
    fn from(e: CsError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<NumberTheoryError> for CliError {
    fn from(e: NumberTheoryError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

fn read_config(path: &Path) -> Result<Option<Format>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
    let mut format = None;
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("config line {line:?} is not key=value")))?;
        match key.trim() {
            "default_format" => {
                format = Some(
                    Format::from_str(value.trim(), true)
                        .map_err(|_| CliError::Invalid(format!("unknown format {:?}", value.trim())))?,
                )
            }
            other => return Err(CliError::Invalid(format!("unknown config key {other:?}"))),
        }
    }
    Ok(format)
}

fn resolve_format(cli: &Cli) -> Result<Format, CliError> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    let path = cli.config.clone().or_else(|| std::env::var_os("ACS_CONFIG").map(PathBuf::from));
    match path {
        Some(p) => Ok(read_config(&p)?.unwrap_or(Format::Human)),
        None => Ok(Format::Human),
    }
}

fn load_group(spec: &str) -> Result<NamedGroup, CliError> {
    if let Some(named) = builtin_group(spec)? {
        return Ok(named);
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| CliError::Invalid(format!("{spec:?} is neither a builtin group nor a readable file: {e}")))?;
    Ok(NamedGroup { group: Arc::new(parse_group_spec(&text)?), split: None })
}

/// Prints one record: the bare value for human output, an object for JSON,
/// a header plus row for CSV.
fn emit(out: &mut impl Write, format: Format, human: &str, fields: &[(&str, serde_json::Value)]) -> Result<(), CliError> {
    match format {
        Format::Human => writeln!(out, "{human}")?,
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(out, "{}", serde_json::Value::Object(obj))?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(fields.iter().map(|(k, _)| *k))?;
            w.write_record(fields.iter().map(|(_, v)| match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            }))?;
            w.flush()?;
        }
    }
    Ok(())
}

fn value_fields(v: CsValue) -> [(&'static str, serde_json::Value); 3] {
    [
        ("value", json!(v.to_string())),
        ("numerator", json!(v.numerator())),
        ("denominator", json!(v.denominator())),
    ]
}

fn scan(out: &mut impl Write, format: Format, name: &str, alpha: u8, t_max: u64) -> Result<(), CliError> {
    let preset: PresetId = name.parse()?;
    let records = scan_records(preset, alpha, t_max)?;
    let density = Density::from_records(&records);
    let summary = format!(
        "count_half={} count_zero={} density={}",
        density.count_half,
        density.count_zero,
        density.render()
    );
    match format {
        Format::Human => writeln!(out, "{summary}")?,
        Format::Json => {
            for r in &records {
                let line = json!({"t": r.t, "preset": preset.to_string(), "alpha": alpha, "value": r.value.to_string()});
                writeln!(out, "{line}")?;
            }
            // density is written as a literal so it keeps exactly six decimals
            writeln!(
                out,
                "{{\"summary\":true,\"preset\":\"{preset}\",\"alpha\":{alpha},\"t_max\":{t_max},\"count_half\":{},\"count_zero\":{},\"density\":{}}}",
                density.count_half,
                density.count_zero,
                density.render()
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["t", "preset", "alpha", "numerator", "denominator"])?;
            let name = preset.to_string();
            for r in &records {
                w.write_record([
                    r.t.to_string(),
                    name.clone(),
                    alpha.to_string(),
                    r.value.numerator().to_string(),
                    r.value.denominator().to_string(),
                ])?;
            }
            w.flush()?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn twist(out: &mut impl Write, format: Format, spec: &str, n: u32) -> Result<(), CliError> {
    let named = load_group(spec)?;
    let result = match named.split.filter(|s| s.n == n as usize) {
        Some(split) => Some(twist_verify(&split.split.phi, &split.split.psi)?),
        None => {
            let pairs = enumerate_split_pairs(&named.group, n as usize)?;
            if pairs.is_empty() {
                None
            } else {
                let mut all = true;
                for pair in &pairs {
                    all &= twist_verify(&pair.phi, &pair.psi)?;
                }
                Some(all)
            }
        }
    };
    let text = match result {
        Some(true) => "true",
        Some(false) => "false",
        None => "no-section",
    };
    emit(out, format, text, &[("group", json!(named.group.name())), ("n", json!(n)), ("result", json!(text))])
}

fn cochain_check(out: &mut impl Write, format: Format, spec: &str, n: u32, degree: usize, file: &Path) -> Result<(), CliError> {
    let named = load_group(spec)?;
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", file.display())))?;
    let c = parse_cochain(&text, named.group)?;
    if c.modulus() != n || c.degree() != degree {
        return Err(CliError::Invalid(format!(
            "dump has degree {} modulus {}, expected degree {degree} modulus {n}",
            c.degree(),
            c.modulus()
        )));
    }
    let cocycle = c.is_cocycle();
    let coboundary = if cocycle { is_coboundary(&c)?.is_coboundary } else { false };
    emit(
        out,
        format,
        &format!("cocycle={cocycle} coboundary={coboundary}"),
        &[("cocycle", json!(cocycle)), ("coboundary", json!(coboundary))],
    )
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let format = resolve_format(&cli)?;
    match cli.command {
        Command::Symbol { a, m } => {
            let s = kronecker(a, m);
            emit(out, format, &s.to_string(), &[("a", json!(a)), ("m", json!(m)), ("symbol", json!(s))])
        }
        Command::Split { p, m } => {
            let t = splitting_type(p, m)?;
            emit(out, format, &t.to_string(), &[("p", json!(p)), ("m", json!(m)), ("type", json!(t))])
        }
        Command::Factor { v } => {
            let f = factorize(v)?;
            let factors: Vec<_> = f.factors().iter().map(|&(p, e)| json!([p, e])).collect();
            emit(out, format, &f.to_string(), &[("value", json!(v)), ("factors", json!(factors))])
        }
        Command::Quad { d, t, m, dlk } => {
            let dlk: Factored = dlk.parse()?;
            let v = cs_inert_count(&QuadFamilyInput { d: factorize(d)?, t, m, dlk })?;
            emit(out, format, &v.to_string(), &value_fields(v))
        }
        Command::Biquad { d1, d2, t1, t2, m } => {
            let v = cs_biquadratic(&BiquadFamilyInput { d1, d2, t1, t2, m })?;
            emit(out, format, &v.to_string(), &value_fields(v))
        }
        Command::Preset { name, alpha, t } => {
            let preset: PresetId = name.parse()?;
            let v = preset_eval(preset, t, alpha)?;
            let mut fields = vec![("preset", json!(preset.to_string())), ("alpha", json!(alpha)), ("t", json!(t))];
            fields.extend(value_fields(v));
            emit(out, format, &v.to_string(), &fields)
        }
        Command::Scan { name, alpha, t_max } => scan(out, format, &name, alpha, t_max),
        Command::Twist { group, n } => twist(out, format, &group, n),
        Command::GeneratorOrder { n } => {
            let order = class_order(&cyclic_generator(n)?)?;
            emit(out, format, &order.to_string(), &[("n", json!(n)), ("order", json!(order))])
        }
        Command::CochainCheck { group, n, degree, file } => cochain_check(out, format, &group, n, degree, &file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
