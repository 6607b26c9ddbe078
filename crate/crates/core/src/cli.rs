//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for invalid flags or parameters, 2 when a
//! verification run (or the run behind a witness) reports a failed check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::LandauError;
use crate::extremal::{build_extremal, sharpness_witness, ExtremalSpec};
use crate::polyfn::PolyFn;
use crate::radii::{landau_radii, profile_value, LandauParams, Variant};
use crate::verify::{generate_admissible, run_suite, sampling, SuiteConfig, SuiteMode, VerificationReport};

pub const SEED_ENV: &str = "LANDAU_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARAMS: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "landau", version, about = "Univalence and schlicht radii for bounded poly-analytic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the radius equation and print both radii as JSON.
    Radius(CommonArgs),
    /// Sweep a shared bound M and print one CSV row per value.
    Table(SweepArgs),
    /// Compare the T2 radius with the single-bound TC radius over a sweep of M.
    Compare(SweepArgs),
    /// Run a verification suite and print the report as JSON.
    Verify(CommonArgs),
    /// Find two points with equal extremal image just beyond the radius.
    Witness(CommonArgs),
    /// Sample the radius profile on its admissible interval.
    Curve(CommonArgs),
    /// Sample the image of the circle |z| = r.
    Boundary(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Admissible,
    Extremal,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Theorem variant: t1, t2, t3, t4, t5, tc or classical.
    #[arg(long, default_value = "t2")]
    pub theorem: Variant,
    /// Order m; defaults to the length of the M list.
    #[arg(long)]
    pub m: Option<usize>,
    /// Bounds M_0,...,M_{m-1}, or a single value shared by all components.
    #[arg(long = "M", value_delimiter = ',')]
    pub bounds: Vec<f64>,
    /// Vanishing orders p_1,...,p_{m-1} (t1 only), or a single shared value.
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Seed for sampling; falls back to LANDAU_SEED.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of samples (curve points, boundary points or grid points for verify).
    #[arg(long)]
    pub samples: Option<usize>,
    /// Radius for witness and boundary.
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "t2")]
    pub theorem: Variant,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Vanishing orders for t1.
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<u32>,
    /// Sweep of the shared bound as start:stop:step (inclusive).
    #[arg(long = "M-sweep")]
    pub sweep: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// `radius` output; re-parsing it recovers the parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport {
    pub variant: Variant,
    pub m: usize,
    #[serde(rename = "M")]
    pub bounds: Vec<f64>,
    pub p: Vec<u32>,
    pub radius: f64,
    pub schlicht_radius: Option<f64>,
    pub degenerate: bool,
    pub residual: f64,
}

impl RadiusReport {
    pub fn params(&self) -> crate::Result<LandauParams> {
        LandauParams::new(self.variant, self.bounds.clone(), self.p.clone())
    }
}

#[derive(Debug)]
enum CliError {
    Params(String),
    /// The report is still written; only the exit code changes.
    Verification {
        report: String,
        failed: String,
    },
}

impl From<LandauError> for CliError {
    fn from(e: LandauError) -> Self {
        CliError::Params(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn params_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Params(msg.into()))
}

/// Builds validated parameters from flags, broadcasting single values.
pub fn parse_params(args: &ParamArgs) -> crate::Result<LandauParams> {
    let bad = |m: String| LandauError::InvalidParams(m);
    if args.bounds.is_empty() {
        return Err(bad("--M is required".into()));
    }
    let m = match args.theorem {
        Variant::Classical => 1,
        _ => args.m.unwrap_or(args.bounds.len()),
    };
    if args.m.is_some_and(|m| m == 0) {
        return Err(bad("--m must be at least 1".into()));
    }
    let bounds = match args.bounds.len() {
        1 => vec![args.bounds[0]; m],
        n if n == m => args.bounds.clone(),
        n => return Err(bad(format!("--M has {n} values but m = {m}"))),
    };
    let orders = match (args.theorem, args.p.len()) {
        (Variant::T1, 1) => vec![args.p[0]; m - 1],
        (_, _) => args.p.clone(),
    };
    LandauParams::new(args.theorem, bounds, orders)
}

/// Inclusive sweep `start:stop:step`.
pub fn parse_sweep(s: &str) -> crate::Result<Vec<f64>> {
    let bad = || LandauError::InvalidParams(format!("sweep {s:?} is not start:stop:step with step > 0"));
    let parts: Vec<f64> = s.split(':').map(|x| x.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let [a, b, step] = parts[..] else { return Err(bad()) };
    if !(step > 0.0 && a.is_finite() && b.is_finite() && a <= b) {
        return Err(bad());
    }
    let n = ((b - a) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| a + i as f64 * step).collect())
}

/// `%g`-style rendering with 15 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Polyline in the unit square, aspect ratio kept, y axis pointing up.
pub fn to_svg(points: &[(f64, f64)]) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 { 1.0 / span } else { 1.0 };
    let mut coords = String::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        if i > 0 {
            coords.push(' ');
        }
        let _ = write!(coords, "{},{}", fmt_num((x - x0) * scale), fmt_num(1.0 - (y - y0) * scale));
    }
    format!("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n<polyline points=\"{coords}\"/>\n</svg>\n")
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii records")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn check_format(given: Option<Format>, allowed: &[Format], command: &str) -> CliResult<Format> {
    match given {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => params_err(format!("format {f:?} is not available for {command}").to_lowercase()),
    }
}

fn seed(given: Option<u64>) -> CliResult<u64> {
    if let Some(s) = given {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().or_else(|_| params_err(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => params_err(format!("a seed is required: pass --seed or set {SEED_ENV}")),
    }
}

fn extremal_spec(params: &LandauParams) -> Option<ExtremalSpec> {
    match params.variant() {
        Variant::T1 => Some(ExtremalSpec::G1(params.clone())),
        Variant::T4 => Some(ExtremalSpec::G4(params.clone())),
        Variant::Classical => Some(ExtremalSpec::ClassicalF0 { bound: params.bounds()[0] }),
        _ => None,
    }
}

fn radius(args: &CommonArgs) -> CliResult<String> {
    check_format(args.output.format, &[Format::Json], "radius")?;
    let params = parse_params(&args.params)?;
    let res = landau_radii(&params)?;
    Ok(json(&RadiusReport {
        variant: params.variant(),
        m: params.m(),
        bounds: params.bounds().to_vec(),
        p: params.orders().to_vec(),
        radius: res.radius,
        schlicht_radius: res.schlicht_radius,
        degenerate: res.degenerate,
        residual: res.residual,
    }))
}

fn sweep_params(variant: Variant, m: usize, p: &[u32], bound: f64) -> crate::Result<LandauParams> {
    let args = ParamArgs { theorem: variant, m: Some(m), bounds: vec![bound], p: p.to_vec() };
    parse_params(&args)
}

fn table(args: &SweepArgs) -> CliResult<String> {
    check_format(args.output.format, &[Format::Csv], "table")?;
    let mut rows = Vec::new();
    for bound in parse_sweep(&args.sweep)? {
        let res = landau_radii(&sweep_params(args.theorem, args.m, &args.p, bound)?)?;
        rows.push(vec![
            fmt_num(bound),
            fmt_num(res.radius),
            res.schlicht_radius.map(fmt_num).unwrap_or_default(),
            res.degenerate.to_string(),
        ]);
    }
    Ok(csv(&["M", "radius", "schlicht_radius", "degenerate"], &rows))
}

fn compare(args: &SweepArgs) -> CliResult<String> {
    check_format(args.output.format, &[Format::Csv], "compare")?;
    let mut rows = Vec::new();
    for bound in parse_sweep(&args.sweep)? {
        let r2 = landau_radii(&sweep_params(Variant::T2, args.m, &[], bound)?)?.radius;
        let r3 = landau_radii(&LandauParams::uniform_bound(args.m, bound)?)?.radius;
        rows.push(vec![fmt_num(bound), fmt_num(r2), fmt_num(r3), (r2 > r3).to_string()]);
    }
    Ok(csv(&["M", "r2_T2", "r3_TC", "improved"], &rows))
}

fn verify(args: &CommonArgs) -> CliResult<String> {
    check_format(args.output.format, &[Format::Json], "verify")?;
    let params = parse_params(&args.params)?;
    let seed = seed(args.seed)?;
    let mode = match args.mode.unwrap_or(Mode::Admissible) {
        Mode::Admissible => SuiteMode::Admissible,
        Mode::Extremal => SuiteMode::Extremal,
    };
    let mut config = SuiteConfig::default();
    if let Some(n) = args.samples {
        if n < 2 {
            return params_err("--samples must be at least 2");
        }
        config.grid_points = n;
    }
    verdict(&run_suite(&params, mode, seed, &config)?)
}

fn verdict(report: &VerificationReport) -> CliResult<String> {
    let text = json(report);
    if report.passed() {
        Ok(text)
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        Err(CliError::Verification { report: text, failed: names.join(", ") })
    }
}

fn witness(args: &CommonArgs) -> CliResult<String> {
    check_format(args.output.format, &[Format::Json], "witness")?;
    let params = parse_params(&args.params)?;
    let spec = match extremal_spec(&params) {
        Some(s @ (ExtremalSpec::G1(_) | ExtremalSpec::G4(_))) => s,
        _ => return params_err("witnesses are available for t1 and t4"),
    };
    let r = match args.r {
        Some(r) => r,
        None => (landau_radii(&params)?.radius + 0.05).min(1.0),
    };
    Ok(json(&sharpness_witness(&spec, r)?))
}

fn curve(args: &CommonArgs) -> CliResult<String> {
    let format = check_format(args.output.format, &[Format::Csv, Format::Svg], "curve")?;
    let params = parse_params(&args.params)?;
    let n = args.samples.unwrap_or(100);
    if n == 0 {
        return params_err("--samples must be positive");
    }
    let (hi, _) = params.admissible();
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let r = i as f64 * hi / n as f64;
        points.push((r, profile_value(&params, r)?));
    }
    Ok(match format {
        Format::Svg => to_svg(&points),
        _ => csv(&["r", "profile"], &points.iter().map(|&(r, v)| vec![fmt_num(r), fmt_num(v)]).collect::<Vec<_>>()),
    })
}

fn boundary_function(args: &CommonArgs, params: &LandauParams) -> CliResult<PolyFn> {
    match (args.mode, extremal_spec(params)) {
        (None | Some(Mode::Extremal), Some(spec)) => Ok(build_extremal(&spec)?),
        (Some(Mode::Extremal), None) => params_err("extremal functions are available for t1, t4 and classical"),
        _ => Ok(generate_admissible(params, SuiteConfig::default().degree, seed(args.seed)?)?),
    }
}

fn boundary(args: &CommonArgs) -> CliResult<String> {
    let format = check_format(args.output.format, &[Format::Csv, Format::Svg], "boundary")?;
    let params = parse_params(&args.params)?;
    let f = boundary_function(args, &params)?;
    let r = match args.r {
        Some(r) => r,
        None => landau_radii(&params)?.radius,
    };
    if !(r > 0.0 && r < 1.0) {
        return params_err(format!("--r = {r} must lie in (0, 1)"));
    }
    let n = args.samples.unwrap_or(512);
    if n == 0 {
        return params_err("--samples must be positive");
    }
    let mut rows = Vec::with_capacity(n + 1);
    for (j, z) in sampling::circle(n, r).into_iter().enumerate() {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        rows.push((theta, f.eval(z)?));
    }
    Ok(match format {
        Format::Svg => {
            let mut pts: Vec<(f64, f64)> = rows.iter().map(|(_, w)| (w.re, w.im)).collect();
            pts.push(pts[0]);
            to_svg(&pts)
        }
        _ => csv(
            &["theta", "re", "im"],
            &rows
                .iter()
                .map(|(t, w): &(f64, Complex64)| vec![fmt_num(*t), fmt_num(w.re), fmt_num(w.im)])
                .collect::<Vec<_>>(),
        ),
    })
}

fn output_of(command: &Command) -> &OutputArgs {
    match command {
        Command::Radius(a) | Command::Verify(a) | Command::Witness(a) | Command::Curve(a) | Command::Boundary(a) => {
            &a.output
        }
        Command::Table(a) | Command::Compare(a) => &a.output,
    }
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_PARAMS } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Radius(a) => radius(a),
        Command::Table(a) => table(a),
        Command::Compare(a) => compare(a),
        Command::Verify(a) => verify(a),
        Command::Witness(a) => witness(a),
        Command::Curve(a) => curve(a),
        Command::Boundary(a) => boundary(a),
    };
    let out = output_of(&cli.command).out.as_ref();
    let (text, code, message) = match result {
        Ok(text) => (text, EXIT_OK, None),
        Err(CliError::Params(msg)) => (String::new(), EXIT_PARAMS, Some(msg)),
        Err(CliError::Verification { report, failed }) => {
            (report, EXIT_VERIFY, Some(format!("failed checks: {failed}")))
        }
    };
    if !text.is_empty() {
        if let Err(e) = emit(&text, out, stdout) {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            return EXIT_PARAMS;
        }
    }
    if let Some(msg) = message {
        let _ = writeln!(stderr, "error: {msg}");
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("landau").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(2.0 - 3f64.sqrt()), "0.267949192431123");
        assert_eq!(fmt_num(1.5e-7), "1.5e-7");
        assert_eq!(fmt_num(-12.25), "-12.25");
        assert_eq!(fmt_num(0.999_999_999_999_999_9), "1");
    }

    #[test]
    fn sweep_parsing() {
        assert_eq!(parse_sweep("1.5:3:0.5").unwrap(), vec![1.5, 2.0, 2.5, 3.0]);
        assert!(parse_sweep("1:2").is_err());
        assert!(parse_sweep("1:2:0").is_err());
        assert!(parse_sweep("2:1:0.5").is_err());
    }

    #[test]
    fn params_from_flags() {
        let a = ParamArgs { theorem: Variant::T1, m: Some(2), bounds: vec![0.5, 1.0], p: vec![1] };
        assert!(parse_params(&a).unwrap_err().to_string().contains("M0 must exceed 1"));
        let a = ParamArgs { theorem: Variant::Classical, m: None, bounds: vec![1.0], p: vec![] };
        assert_eq!(parse_params(&a).unwrap().bounds(), &[1.0]);
        let a = ParamArgs { theorem: Variant::TC, m: Some(3), bounds: vec![2.0], p: vec![] };
        let p = parse_params(&a).unwrap();
        assert_eq!(p.bounds(), &[2.0, 2.0, 2.0]);
        assert!((p.admissible().0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn bad_flags_exit_one() {
        assert_eq!(run_str(&["radius", "--theorem", "t9", "--M", "2"]).0, EXIT_PARAMS);
        assert_eq!(run_str(&["radius", "--theorem", "t1", "--M", "0.5,1", "--p", "1"]).0, EXIT_PARAMS);
        assert_eq!(run_str(&["radius", "--M", "2", "--format", "svg"]).0, EXIT_PARAMS);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn curve_for_unit_t3() {
        let (code, out, _) = run_str(&["curve", "--theorem", "t3", "--m", "2", "--M", "1,1", "--samples", "100"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 101);
        assert_eq!(lines[1], "0,1");
        assert_eq!(lines[51], "0.5,0");
    }

    #[test]
    fn failed_report_maps_to_exit_two() {
        use crate::verify::check_univalence_grid_with;
        let square = PolyFn::analytic(crate::series::AnalyticSeries::from_real(&[0.0, 0.0, 1.0]).unwrap());
        let pair = [Complex64::new(0.3, 0.0), Complex64::new(-0.3, 0.0)];
        let entry = check_univalence_grid_with(&square, 0.5, 200, 1, &pair).unwrap();
        let report = VerificationReport { checks: vec![entry], seed: 1, elapsed: Default::default() };
        match verdict(&report) {
            Err(CliError::Verification { report, failed }) => {
                assert!(report.contains("\"witness\"") && failed == "univalence_grid");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn svg_is_a_bare_polyline() {
        let svg = to_svg(&[(0.0, 0.0), (2.0, 1.0)]);
        assert!(svg.contains("viewBox=\"0 0 1 1\""));
        assert!(svg.contains("points=\"0,1 1,0.5\""));
        assert!(!svg.contains("style") && !svg.contains("stroke"));
    }
}
