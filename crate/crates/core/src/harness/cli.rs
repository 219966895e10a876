//! Command-line front end. Exit codes: 0 success or pass, 1 verification
//! failure, 2 input or validation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::examples::{builtin_examples, find_identity, identity_names, IdentityInstance};
use super::io;
use super::verify::{
    example_or_err, ell_family, run_suite, verify_data, verify_ell_independence,
    verify_hadamard_multiplicativity, verify_identity, verify_unit_invariance, Report,
};
use crate::cone::ConeSeries;
use crate::error::{Error, Result};
use crate::ring::{MotivicClass, SpecializationMap};
use crate::zeta::{
    generalized_poincare, motivic_volume, mv_at_least, mv_at_least_with, nearby_cycles,
    poincare_series, zeta_series, EllForm, Gamma, Gauge, ResolutionData,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "motzeta", version, about = "Exact motivic zeta functions from resolution data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a series or class from a dataset.
    Compute(ComputeArgs),
    /// Run a verification and report pass/fail.
    Verify(VerifyArgs),
    /// List the built-in datasets.
    ListExamples,
    /// Write every built-in dataset and verification input as JSON into a directory.
    ExportExamples {
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ComputeKind {
    Poincare,
    Zeta,
    Mv,
    Nearby,
    MvAtLeast,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VerifyKind {
    Identity,
    Unit,
    Hadamard,
    Ell,
    Suite,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Specialize {
    Euler,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GaugeArg {
    Explicit,
    GelfandLeray,
}

#[derive(clap::Args, Debug)]
struct ComputeArgs {
    what: ComputeKind,
    /// Resolution data (JSON).
    #[arg(long, conflicts_with = "example", required_unless_present = "example")]
    input: Option<PathBuf>,
    /// Built-in dataset instead of a file.
    #[arg(long)]
    example: Option<String>,
    /// Threshold `q` or `q/p` for the generalized series.
    #[arg(long)]
    gamma: Option<String>,
    /// `a,b` for `l(n,m) = a n + b m`.
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<String>,
    /// Coefficient range `N1..N2` (inclusive).
    #[arg(long)]
    coeffs: Option<String>,
    #[arg(long)]
    specialize: Option<Specialize>,
    #[arg(long)]
    gauge: Option<GaugeArg>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    what: VerifyKind,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in instance instead of a file (identity and ell only).
    #[arg(long, conflicts_with = "input")]
    example: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    cases: usize,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::ListExamples => list_examples(out),
        Command::ExportExamples { dir } => export_examples(&dir, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load_data(input: &Option<PathBuf>, example: &Option<String>) -> Result<ResolutionData> {
    match (input, example) {
        (Some(path), _) => io::read_data(path),
        (None, Some(name)) => Ok(example_or_err(name)?.data),
        (None, None) => Err(Error::Input("one of --input or --example is required".into())),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Input(format!("cannot parse coefficient range `{s}`; expected N1..N2"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a < 1 || b < a {
        return Err(Error::Input(format!("coefficient range `{s}` must satisfy 1 <= N1 <= N2")));
    }
    Ok((a, b))
}

fn render(class: &MotivicClass, spec: Option<&SpecializationMap>) -> Result<String> {
    match spec {
        None => Ok(class.canonical()),
        Some(m) => Ok(m.apply(class)?.eval_at_one().to_string()),
    }
}

fn render_series(series: &ConeSeries, coeffs: Option<(i64, i64)>, spec: Option<&SpecializationMap>) -> Result<String> {
    let Some((a, b)) = coeffs else {
        if spec.is_some() {
            let lim = series.limit();
            return Ok(format!("limit: {}", render(&lim, spec)?));
        }
        return Ok(series.to_string());
    };
    let mut lines = Vec::new();
    for (i, c) in series.coefficients(a..=b).into_iter().enumerate() {
        lines.push(format!("T^{}: {}", a + i as i64, render(&c, spec)?));
    }
    Ok(lines.join("\n"))
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.input, &a.example)?;
    let gauge = match a.gauge {
        Some(GaugeArg::Explicit) => Gauge::Explicit,
        Some(GaugeArg::GelfandLeray) => Gauge::GelfandLeray,
        None => data.default_gauge(),
    };
    let coeffs = a.coeffs.as_deref().map(parse_range).transpose()?;
    let gamma: Option<Gamma> = a.gamma.as_deref().map(str::parse).transpose()?;
    let ell: Option<EllForm> = a.ell.as_deref().map(str::parse).transpose()?;
    let spec = a.specialize.map(|Specialize::Euler| SpecializationMap::euler(data.euler.clone()));
    let spec = spec.as_ref();

    let text = match a.what {
        ComputeKind::Poincare => {
            let series = match gamma {
                Some(g) => generalized_poincare(&data, g, ell.unwrap_or_default(), gauge)?,
                None => poincare_series(&data, gauge)?,
            };
            render_series(&series, coeffs, spec)?
        }
        ComputeKind::Zeta => render_series(&zeta_series(&data)?, coeffs, spec)?,
        ComputeKind::Mv => render(&motivic_volume(&data, gauge)?.push("k"), spec)?,
        ComputeKind::Nearby => render(&nearby_cycles(&data)?, spec)?,
        ComputeKind::MvAtLeast => {
            let g = gamma.ok_or_else(|| Error::Input("mv-at-least needs --gamma".into()))?;
            let v = match ell {
                Some(e) => mv_at_least_with(&data, g, e, gauge)?,
                None => mv_at_least(&data, g, gauge)?,
            };
            render(&v.push("k"), spec)?
        }
    };
    emit(&text, &a.output, out)?;
    Ok(EXIT_OK)
}

fn emit(text: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(out, "{text}").map_err(|e| Error::Input(e.to_string())),
    }
}

fn load_identity(a: &VerifyArgs) -> Result<IdentityInstance> {
    match (&a.input, &a.example) {
        (Some(p), _) => io::identity_from_json(&io::read_text(p)?),
        (None, Some(name)) => find_identity(name)
            .ok_or_else(|| Error::Input(format!("no identity instance named `{name}`"))),
        (None, None) => Err(Error::Input("verify identity needs --input or --example".into())),
    }
}

fn require_input(a: &VerifyArgs) -> Result<String> {
    let p = a
        .input
        .as_ref()
        .ok_or_else(|| Error::Input("this verification needs --input".into()))?;
    io::read_text(p)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let report: Report = match a.what {
        VerifyKind::Identity => verify_identity(&load_identity(a)?)?,
        VerifyKind::Unit => {
            let u = io::unit_from_json(&require_input(a)?)?;
            verify_unit_invariance(&u.a, &u.b, &u.ident)?
        }
        VerifyKind::Hadamard => {
            let (x, y) = io::pair_from_json(&require_input(a)?)?;
            verify_hadamard_multiplicativity(&x, &y)?
        }
        VerifyKind::Ell => {
            let e = match (&a.input, &a.example) {
                (Some(_), _) => io::ell_from_json(&require_input(a)?)?,
                (None, Some(name)) => {
                    let data = example_or_err(name)?.data;
                    let gamma: Gamma = "1".parse()?;
                    io::EllInput {
                        data,
                        gamma,
                        ells: ell_family(gamma),
                    }
                }
                (None, None) => return Err(Error::Input("verify ell needs --input or --example".into())),
            };
            let gauge = e.data.default_gauge();
            verify_ell_independence(&e.data, e.gamma, &e.ells, gauge, None)?
        }
        VerifyKind::Suite => {
            let mut r = run_suite(a.seed, a.cases)?;
            if let Some(p) = &a.input {
                let data = io::read_data(p)?;
                r.extend(verify_data(&data, &p.display().to_string())?);
            }
            r
        }
    };
    writeln!(out, "{report}").map_err(|e| Error::Input(e.to_string()))?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn list_examples(out: &mut dyn Write) -> Result<i32> {
    let mut text = String::new();
    for e in builtin_examples() {
        text.push_str(&format!("{:<20} {}\n", e.name, e.description));
    }
    for name in identity_names() {
        text.push_str(&format!("{name:<20} identity instance (verify identity --example)\n"));
    }
    write!(out, "{text}").map_err(|e| Error::Input(e.to_string()))?;
    Ok(EXIT_OK)
}

/// File name and contents of every exported document.
pub fn export_documents() -> Vec<(String, String)> {
    let mut docs: Vec<(String, String)> = builtin_examples()
        .into_iter()
        .map(|e| (format!("{}.json", e.name), io::data_to_json(&e.data)))
        .collect();
    for n in 1..=3 {
        let inst = super::examples::identity_xy_plus_z(n).expect("n <= 3");
        docs.push((format!("xy_plus_z{n}.identity.json"), io::identity_to_json(&inst)));
    }
    docs.push((
        "cusp_unit.json".into(),
        io::unit_to_json(&io::UnitInput {
            a: super::examples::cusp(),
            b: super::examples::cusp_twisted(),
            ident: super::examples::cusp_identification(),
        }),
    ));
    docs.push((
        "cusp_x_ball.hadamard.json".into(),
        io::pair_to_json(&super::examples::cusp(), &super::examples::ball_closed(1, 1)),
    ));
    let half: Gamma = "1/2".parse().expect("valid");
    docs.push((
        "cusp.ell.json".into(),
        io::ell_to_json(&io::EllInput {
            data: super::examples::cusp(),
            gamma: half,
            ells: ell_family(half),
        }),
    ));
    docs
}

fn export_examples(dir: &std::path::Path, out: &mut dyn Write) -> Result<i32> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::Input(format!("cannot create {}: {e}", dir.display())))?;
    for (name, text) in export_documents() {
        let path = dir.join(&name);
        std::fs::write(&path, text)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
        writeln!(out, "{}", path.display()).map_err(|e| Error::Input(e.to_string()))?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("motzeta").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..12").unwrap(), (1, 12));
        assert_eq!(parse_range("3..=5").unwrap(), (3, 5));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
    }

    #[test]
    fn closed_ball_volume() {
        let (code, out, _) = run_args(&["compute", "mv", "--example", "ball_closed_3"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "(1*L^3) * [pt; mu=1; base=k]");
    }

    #[test]
    fn missing_file_is_an_input_error() {
        let (code, _, err) = run_args(&["compute", "mv", "--input", "/nonexistent.json"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn unknown_subcommand_is_an_input_error() {
        assert_eq!(run_args(&["compute", "nonsense", "--example", "cusp"]).0, 2);
    }
}
