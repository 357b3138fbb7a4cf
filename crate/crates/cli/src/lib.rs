//! Command-line front end: argument parsing, validation and the `run`
//! dispatcher. `main.rs` only sets up logging and the thread pool.

pub mod verify;

use std::fmt;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use ronkin_core::amoeba::{membership, translate_coeffs, LogPoint, CONTOUR_TOL};
use ronkin_core::measure::{
    density_2var, density_at, density_grid, DensityFlag, total_mass, total_mass_2var, GridBox, MassOptions,
};
use ronkin_core::ronkin::{
    grad_2var, grad_ronkin, hessian_2var, hessian_closed, hessian_quadrature, ronkin_1var,
    ronkin_2var_closed, ronkin_2var_quadrature, ronkin_3var_quadrature, smyth_2var, smyth_3var,
    value_options, Hessian3,
};
use ronkin_core::serial::{f17, f17_opt, f17_vec, fmt17};
use ronkin_core::Error;

/// Exit status for success, numerical failure and usage errors.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Quadrature,
    Both,
}

#[derive(Parser, Debug, Clone)]
#[command(name = "ronkin", version, about = "Ronkin functions and the Ronkin measure of 1 + z + w + t")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Absolute tolerance of value quadratures.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Coefficients a1 a2 a3 of 1 + a1 z + a2 w + a3 t, each `re` or `re,im`.
    #[arg(long, global = true, num_args = 1..=3, value_parser = parse_complex, allow_negative_numbers = true)]
    pub coeffs: Option<Vec<Complex64>>,
    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug, Clone)]
pub enum CliCommand {
    /// Value of the Ronkin function.
    Eval {
        #[arg(long, num_args = 1..=3, allow_negative_numbers = true, required = true)]
        point: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        vars: u8,
    },
    /// Gradient of the Ronkin function.
    Grad {
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true, required = true)]
        point: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        vars: u8,
    },
    /// Hessian of the Ronkin function.
    Hessian {
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true, required = true)]
        point: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        vars: u8,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Density of the Ronkin measure.
    Density {
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true, required = true)]
        point: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        vars: u8,
    },
    /// Density over a lattice.
    Grid {
        #[arg(long, num_args = 3, allow_negative_numbers = true, required = true)]
        min: Vec<f64>,
        #[arg(long, num_args = 3, allow_negative_numbers = true, required = true)]
        max: Vec<f64>,
        #[arg(long, num_args = 3, required = true)]
        resolution: Vec<usize>,
    },
    /// Total mass of the Ronkin measure over a box.
    Mass {
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true, required = true)]
        min: Vec<f64>,
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true, required = true)]
        max: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        vars: u8,
        #[arg(long)]
        rel_tol: Option<f64>,
        #[arg(long)]
        max_cells: Option<usize>,
        #[arg(long)]
        min_coverage: Option<f64>,
    },
    /// Mahler measures of 1 + z + w and 1 + z + a w + a t.
    Mahler {
        #[arg(long = "a", num_args = 1.., default_values_t = [1.0])]
        a: Vec<f64>,
    },
    /// Runs the invariant suites; exits 0 iff all pass.
    Verify {
        /// Fewer random cases per suite.
        #[arg(long)]
        quick: bool,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("bad number `{t}`: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected `re` or `re,im`, got `{s}`")),
    }
}

/// Validated command with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval { point: Vec<f64>, vars: u8 },
    Grad { point: Vec<f64>, vars: u8 },
    Hessian { point: Vec<f64>, vars: u8, method: Method },
    Density { point: Vec<f64>, vars: u8 },
    Grid { bbox: GridBox, resolution: [usize; 3] },
    Mass { min: Vec<f64>, max: Vec<f64>, vars: u8, opts: MassOptions },
    Mahler { a: Vec<f64> },
    Verify { quick: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub coeffs: [Complex64; 3],
    pub tol: f64,
    pub format: Format,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn check_vars(vars: u8, allowed: &[u8]) -> Result<(), UsageError> {
    if allowed.contains(&vars) {
        Ok(())
    } else {
        Err(usage(format!("--vars must be one of {allowed:?}, got {vars}")))
    }
}

fn check_point(point: &[f64], vars: u8) -> Result<(), UsageError> {
    if point.len() != vars as usize {
        return Err(usage(format!("--point needs {vars} coordinates, got {}", point.len())));
    }
    if point.iter().any(|v| !v.is_finite()) {
        return Err(usage("--point must be finite"));
    }
    Ok(())
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, UsageError> {
        if !(cli.tol > 0.0 && cli.tol.is_finite()) {
            return Err(usage(format!("--tol must be positive, got {}", cli.tol)));
        }
        let mut coeffs = [Complex64::new(1.0, 0.0); 3];
        if let Some(c) = &cli.coeffs {
            for (slot, v) in coeffs.iter_mut().zip(c) {
                if v.norm() == 0.0 || !v.norm().is_finite() {
                    return Err(usage("coefficients must be non-zero and finite"));
                }
                *slot = *v;
            }
        }
        let command = match cli.command {
            CliCommand::Eval { point, vars } => {
                check_vars(vars, &[1, 2, 3])?;
                check_point(&point, vars)?;
                Command::Eval { point, vars }
            }
            CliCommand::Grad { point, vars } => {
                check_vars(vars, &[2, 3])?;
                check_point(&point, vars)?;
                Command::Grad { point, vars }
            }
            CliCommand::Hessian { point, vars, method } => {
                check_vars(vars, &[2, 3])?;
                check_point(&point, vars)?;
                Command::Hessian { point, vars, method }
            }
            CliCommand::Density { point, vars } => {
                check_vars(vars, &[2, 3])?;
                check_point(&point, vars)?;
                Command::Density { point, vars }
            }
            CliCommand::Grid { min, max, resolution } => {
                let bbox = GridBox::new([min[0], min[1], min[2]], [max[0], max[1], max[2]])
                    .map_err(|e| usage(e.to_string()))?;
                if resolution.iter().any(|&n| n < 2) {
                    return Err(usage("--resolution must be at least 2 per axis"));
                }
                Command::Grid { bbox, resolution: [resolution[0], resolution[1], resolution[2]] }
            }
            CliCommand::Mass { min, max, vars, rel_tol, max_cells, min_coverage } => {
                check_vars(vars, &[2, 3])?;
                check_point(&min, vars)?;
                check_point(&max, vars)?;
                if min.iter().zip(&max).any(|(a, b)| a >= b) {
                    return Err(usage("--min must be below --max on every axis"));
                }
                let mut opts = MassOptions::default();
                if let Some(t) = rel_tol {
                    if !(t > 0.0) {
                        return Err(usage("--rel-tol must be positive"));
                    }
                    opts.rel_tol = t;
                }
                if let Some(n) = max_cells {
                    opts.max_cells = n;
                }
                if let Some(c) = min_coverage {
                    if !(0.0..=1.0).contains(&c) {
                        return Err(usage("--min-coverage must lie in [0, 1]"));
                    }
                    opts.min_coverage = c;
                }
                Command::Mass { min, max, vars, opts }
            }
            CliCommand::Mahler { a } => {
                if a.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
                    return Err(usage("--a values must be positive"));
                }
                Command::Mahler { a }
            }
            CliCommand::Verify { quick } => Command::Verify { quick },
        };
        Ok(Self { command, coeffs, tol: cli.tol, format: cli.format, seed: cli.seed })
    }
}

#[derive(Serialize)]
#[serde(transparent)]
struct Row(#[serde(with = "f17_vec")] Vec<f64>);

fn matrix3(h: &Hessian3) -> Vec<Row> {
    h.matrix().iter().map(|r| Row(r.to_vec())).collect()
}

#[derive(Serialize)]
struct EvalReport {
    command: &'static str,
    vars: u8,
    #[serde(with = "f17_vec")]
    point: Vec<f64>,
    #[serde(with = "f17_vec")]
    evaluated_at: Vec<f64>,
    #[serde(with = "f17")]
    value: f64,
    method: &'static str,
    #[serde(with = "f17_opt")]
    closed: Option<f64>,
    #[serde(with = "f17_opt")]
    quadrature: Option<f64>,
    #[serde(with = "f17_opt")]
    difference: Option<f64>,
}

#[derive(Serialize)]
struct GradReport {
    command: &'static str,
    #[serde(with = "f17_vec")]
    point: Vec<f64>,
    #[serde(with = "f17_vec")]
    evaluated_at: Vec<f64>,
    #[serde(with = "f17_vec")]
    grad: Vec<f64>,
    location: String,
    method: &'static str,
}

#[derive(Serialize)]
struct HessianReport {
    command: &'static str,
    #[serde(with = "f17_vec")]
    point: Vec<f64>,
    #[serde(with = "f17_vec")]
    evaluated_at: Vec<f64>,
    location: String,
    method: Method,
    closed: Option<Vec<Row>>,
    quadrature: Option<Vec<Row>>,
    #[serde(with = "f17_opt")]
    max_rel_diff: Option<f64>,
    #[serde(with = "f17_opt")]
    determinant: Option<f64>,
}

#[derive(Serialize)]
struct DensityReport {
    command: &'static str,
    #[serde(with = "f17_vec")]
    point: Vec<f64>,
    #[serde(with = "f17_vec")]
    evaluated_at: Vec<f64>,
    #[serde(with = "f17")]
    density: f64,
    location: String,
    flag: Option<DensityFlag>,
}

#[derive(Serialize)]
struct MahlerRow {
    #[serde(with = "f17")]
    a: f64,
    #[serde(with = "f17")]
    closed: f64,
    #[serde(with = "f17")]
    quadrature: f64,
    #[serde(with = "f17")]
    difference: f64,
}

#[derive(Serialize)]
struct MahlerReport {
    command: &'static str,
    #[serde(with = "f17")]
    smyth_2var_closed: f64,
    #[serde(with = "f17")]
    smyth_2var_quadrature: f64,
    values: Vec<MahlerRow>,
}

/// Failure inside `run`, mapped to an exit status.
#[derive(Debug)]
pub enum RunError {
    Numerical(Error),
    Io(std::io::Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Numerical(e)
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<serde_json::Error> for RunError {
    fn from(e: serde_json::Error) -> Self {
        RunError::Io(e.into())
    }
}

fn translated(point: &[f64], coeffs: &[Complex64; 3]) -> Vec<f64> {
    point.iter().zip(coeffs).map(|(x, a)| x + a.norm().ln()).collect()
}

fn translated3(point: &[f64], coeffs: &[Complex64; 3]) -> Result<LogPoint, Error> {
    translate_coeffs(&LogPoint::new(point[0], point[1], point[2]), *coeffs)
}

/// Flattens a JSON value into `(dotted key, scalar)` rows.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| x.is_number() || x.is_null()) => {
            let cells: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), cells.join(" ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "null".into(),
        Value::Number(n) if n.is_f64() => fmt17(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        other => other.to_string(),
    }
}

fn emit<T: Serialize>(report: &T, format: Format, out: &mut dyn Write) -> Result<(), RunError> {
    let json = serde_json::to_string_pretty(report)?;
    match format {
        Format::Json => writeln!(out, "{json}")?,
        Format::Csv | Format::Text => {
            let value: Value = serde_json::from_str(&json)?;
            let mut rows = Vec::new();
            flatten("", &value, &mut rows);
            if format == Format::Csv {
                writeln!(out, "key,value")?;
                for (k, v) in rows {
                    writeln!(out, "{k},{v}")?;
                }
            } else {
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    writeln!(out, "{k:<width$}  {v}")?;
                }
            }
        }
    }
    Ok(())
}

/// Runs one command, writing results to `out` and diagnostics to stderr.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    run_with(config, out, &mut std::io::stderr())
}

pub fn run_with(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out) {
        Ok(code) => code,
        Err(RunError::Numerical(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NUMERICAL
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NUMERICAL
        }
    }
}

fn dispatch(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    let c = &cfg.coeffs;
    match &cfg.command {
        Command::Eval { point, vars } => {
            let at = translated(point, c);
            let opts = value_options(cfg.tol);
            let report = match vars {
                1 => {
                    // 1 + a z has the single root -1/a.
                    let root = -1.0 / c[0];
                    let v = ronkin_1var(&[root], c[0], point[0])?;
                    EvalReport {
                        command: "eval",
                        vars: 1,
                        point: point.clone(),
                        evaluated_at: point.clone(),
                        value: v,
                        method: "jensen",
                        closed: Some(v),
                        quadrature: None,
                        difference: None,
                    }
                }
                2 => {
                    let closed = ronkin_2var_closed(at[0], at[1]);
                    let quad = ronkin_2var_quadrature(at[0], at[1], &opts)?;
                    EvalReport {
                        command: "eval",
                        vars: 2,
                        point: point.clone(),
                        evaluated_at: at,
                        value: closed,
                        method: "both",
                        closed: Some(closed),
                        quadrature: Some(quad),
                        difference: Some((closed - quad).abs()),
                    }
                }
                _ => {
                    let p = translated3(point, c)?;
                    let v = ronkin_3var_quadrature(&p, &opts)?;
                    EvalReport {
                        command: "eval",
                        vars: 3,
                        point: point.clone(),
                        evaluated_at: p.to_array().to_vec(),
                        value: v,
                        method: "quadrature",
                        closed: None,
                        quadrature: Some(v),
                        difference: None,
                    }
                }
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Grad { point, vars } => {
            let report = if *vars == 2 {
                let at = translated(point, c);
                let inside = ronkin_core::amoeba::in_amoeba_2var(at[0], at[1]);
                GradReport {
                    command: "grad",
                    point: point.clone(),
                    evaluated_at: at.clone(),
                    grad: grad_2var(at[0], at[1]).to_vec(),
                    location: if inside { "inside".into() } else { "outside".into() },
                    method: if inside { "closed" } else { "lattice" },
                }
            } else {
                let p = translated3(point, c)?;
                let g = grad_ronkin(&p)?;
                GradReport {
                    command: "grad",
                    point: point.clone(),
                    evaluated_at: p.to_array().to_vec(),
                    grad: g.grad.to_vec(),
                    location: g.location.tag(),
                    method: if g.location.is_outside() { "lattice" } else { "quadrature" },
                }
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Hessian { point, vars, method } => {
            let report = if *vars == 2 {
                let at = translated(point, c);
                let h = hessian_2var(at[0], at[1]);
                HessianReport {
                    command: "hessian",
                    point: point.clone(),
                    evaluated_at: at.clone(),
                    location: if ronkin_core::amoeba::in_amoeba_2var(at[0], at[1]) {
                        "inside".into()
                    } else {
                        "outside".into()
                    },
                    method: Method::Closed,
                    closed: Some(h.iter().map(|r| Row(r.to_vec())).collect()),
                    quadrature: None,
                    max_rel_diff: None,
                    determinant: Some(density_2var(at[0], at[1])),
                }
            } else {
                let p = translated3(point, c)?;
                let label = membership(&p, CONTOUR_TOL);
                let closed = match method {
                    Method::Closed | Method::Both => Some(hessian_closed(&p)?),
                    Method::Quadrature => None,
                };
                let quad = match method {
                    Method::Quadrature | Method::Both => Some(hessian_quadrature(&p)?),
                    Method::Closed => None,
                };
                let diff = match (&closed, &quad) {
                    (Some(a), Some(b)) => Some(a.max_rel_diff(b, 1e-12)),
                    _ => None,
                };
                let det = closed.as_ref().or(quad.as_ref()).map(Hessian3::det);
                HessianReport {
                    command: "hessian",
                    point: point.clone(),
                    evaluated_at: p.to_array().to_vec(),
                    location: label.tag(),
                    method: *method,
                    closed: closed.as_ref().map(matrix3),
                    quadrature: quad.as_ref().map(matrix3),
                    max_rel_diff: diff,
                    determinant: det,
                }
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Density { point, vars } => {
            let report = if *vars == 2 {
                let at = translated(point, c);
                DensityReport {
                    command: "density",
                    point: point.clone(),
                    evaluated_at: at.clone(),
                    density: density_2var(at[0], at[1]),
                    location: if ronkin_core::amoeba::in_amoeba_2var(at[0], at[1]) {
                        "inside".into()
                    } else {
                        "outside".into()
                    },
                    flag: None,
                }
            } else {
                let p = translated3(point, c)?;
                let d = density_at(&p)?;
                DensityReport {
                    command: "density",
                    point: point.clone(),
                    evaluated_at: p.to_array().to_vec(),
                    density: d.density,
                    location: d.label.tag(),
                    flag: d.flag,
                }
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Grid { bbox, resolution } => {
            // Grids are in the coordinates of the translated polynomial.
            let shift = translated(&[0.0, 0.0, 0.0], c);
            let moved = GridBox::new(
                std::array::from_fn(|i| bbox.min[i] + shift[i]),
                std::array::from_fn(|i| bbox.max[i] + shift[i]),
            )?;
            let mut grid = density_grid(&moved, *resolution)?;
            if shift.iter().any(|s| *s != 0.0) {
                for cell in &mut grid.values {
                    for i in 0..3 {
                        cell.point[i] -= shift[i];
                    }
                }
                for (i, axis) in grid.axes.iter_mut().enumerate() {
                    for v in &mut axis.0 {
                        *v -= shift[i];
                    }
                }
                grid.metadata.bbox = *bbox;
                grid.metadata.polynomial = format!(
                    "1+({})z+({})w+({})t",
                    c[0], c[1], c[2]
                );
            }
            match cfg.format {
                Format::Json => writeln!(out, "{}", grid.to_json()?)?,
                Format::Csv | Format::Text => write!(out, "{}", grid.to_csv())?,
            }
        }
        Command::Mass { min, max, vars, opts } => {
            let shift = translated(&[0.0, 0.0, 0.0], c);
            let report = if *vars == 2 {
                total_mass_2var([min[0] + shift[0], min[1] + shift[1]], [max[0] + shift[0], max[1] + shift[1]], opts)?
            } else {
                let b = GridBox::new(
                    std::array::from_fn(|i| min[i] + shift[i]),
                    std::array::from_fn(|i| max[i] + shift[i]),
                )?;
                total_mass(&b, opts)?
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Mahler { a } => {
            let opts = value_options(cfg.tol);
            let values = a
                .iter()
                .map(|&a| -> Result<MahlerRow, Error> {
                    let closed = smyth_3var(a)?;
                    let la = a.ln();
                    let quad = ronkin_3var_quadrature(&LogPoint::new(0.0, la, la), &opts)?;
                    Ok(MahlerRow { a, closed, quadrature: quad, difference: (closed - quad).abs() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let report = MahlerReport {
                command: "mahler",
                smyth_2var_closed: smyth_2var()?,
                smyth_2var_quadrature: ronkin_2var_quadrature(0.0, 0.0, &opts)?,
                values,
            };
            emit(&report, cfg.format, out)?;
        }
        Command::Verify { quick } => {
            let report = verify::run_suites(cfg.seed, *quick);
            match cfg.format {
                Format::Text => write!(out, "{}", report.text())?,
                f => emit(&report, f, out)?,
            }
            return Ok(if report.passed { EXIT_OK } else { EXIT_NUMERICAL });
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig, UsageError> {
        let cli = Cli::try_parse_from(std::iter::once("ronkin").chain(args.iter().copied()))
            .map_err(|e| UsageError(e.to_string()))?;
        RunConfig::from_cli(cli)
    }

    fn output(args: &[&str]) -> (i32, String) {
        let c = cfg(args).unwrap();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(&c, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn parses_negative_points_and_complex_coeffs() {
        let c = cfg(&["eval", "--point", "-1", "0.5", "-2", "--coeffs", "1", "2,1", "-3"]).unwrap();
        assert_eq!(c.command, Command::Eval { point: vec![-1.0, 0.5, -2.0], vars: 3 });
        assert_eq!(c.coeffs[1], Complex64::new(2.0, 1.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(cfg(&["eval", "--point", "0", "0"]).is_err());
        assert!(cfg(&["grid", "--min", "0", "0", "0", "--max", "1", "1", "1", "--resolution", "1", "2", "2"]).is_err());
        assert!(cfg(&["eval", "--point", "0", "0", "0", "--tol", "-1"]).is_err());
        assert!(cfg(&["frobnicate"]).is_err());
    }

    #[test]
    fn two_var_eval() {
        let (code, out) = output(&["eval", "--point", "0", "0", "--vars", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"].as_f64().unwrap() - 0.323_065_947_2).abs() < 1e-10);
    }

    #[test]
    fn json_round_trips() {
        let (_, out) = output(&["hessian", "--point", "-0.5", "-0.4", "-0.3", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap();
        let v2: Value = serde_json::from_str(&again).unwrap();
        assert_eq!(v, v2);
    }

    #[test]
    fn coefficients_translate() {
        let (_, a) = output(&["eval", "--point", "0", "0", "0", "--coeffs", "2", "1", "1", "--format", "json"]);
        let (_, b) = output(&["eval", "--point", &format!("{}", 2f64.ln()), "0", "0", "--format", "json"]);
        let va: Value = serde_json::from_str(&a).unwrap();
        let vb: Value = serde_json::from_str(&b).unwrap();
        assert!((va["value"].as_f64().unwrap() - vb["value"].as_f64().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn csv_grid_header() {
        let (code, out) = output(&[
            "grid", "--min", "-1", "-1", "-1", "--max", "1", "1", "1", "--resolution", "2", "2", "2", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("x,y,u,density,chamber\n"));
    }
}
