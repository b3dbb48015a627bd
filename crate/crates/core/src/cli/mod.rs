//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 check failed, 2 parse or validation error,
//! 3 degenerate configuration, 4 disks not tangent, 5 degenerate triple,
//! 6 invalid gasket seed, 7 vector not normalized.

pub mod document;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::apollonian::{generate, render_svg, seed_from_curvatures, GenerationLimits, RenderStyle};
use crate::descartes::{descartes_residual, solve_fourth_disk, Quadruple};
use crate::error::Error;
use crate::format::num;
use crate::linalg::Mat4;
use crate::minkowski::{check_generalized, lift, project, CircleVector, Disk};
use crate::nsphere::{check_generalized_n, lift_n, soddy_gosset_residual, NVector};
use document::{parse_document, Configuration, DiskDocument, DiskRecord, SCHEMA_VERSION};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE_CONFIGURATION: i32 = 3;
pub const EXIT_NOT_TANGENT: i32 = 4;
pub const EXIT_DEGENERATE_TRIPLE: i32 = 5;
pub const EXIT_INVALID_SEED: i32 = 6;
pub const EXIT_NOT_NORMALIZED: i32 = 7;

/// Cap on generated disks when no limit is given.
pub const DEFAULT_MAX_COUNT: usize = 1_000_000;
pub const DEFAULT_DEPTH: u32 = 5;

#[derive(Debug, Parser)]
#[command(name = "inversive", version, about = "Disk configurations in Minkowski space")]
pub struct Cli {
    /// Tolerance for every pass/fail check.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check D f⁻¹ Dᵀ = G for four disks (or n+2 spheres when "dim" is set).
    Verify {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Find both disks tangent to three mutually tangent disks.
    Solve4 { input: PathBuf },
    /// Grow an Apollonian gasket.
    Gasket(GasketArgs),
    /// Check the Soddy-Gosset relation (Σb)² = n·Σb².
    Soddy {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        json: bool,
        #[arg(allow_negative_numbers = true, num_args = 0..)]
        curvatures: Vec<f64>,
    },
    /// Print the circle vector of a circle or halfplane.
    Lift {
        kind: DiskKind,
        /// x y r for a circle, nx ny offset for a halfplane.
        #[arg(allow_negative_numbers = true, num_args = 3)]
        values: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Print the disk of a circle vector.
    Project {
        #[arg(allow_negative_numbers = true, num_args = 4)]
        values: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiskKind {
    Circle,
    Halfplane,
}

#[derive(Debug, Args)]
pub struct GasketArgs {
    /// Comma-separated curvatures, three or four of them.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input", required_unless_present = "input")]
    pub seed: Option<String>,
    /// Disk document holding a Descartes quadruple.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub depth: Option<u32>,
    #[arg(long)]
    pub max_curvature: Option<f64>,
    #[arg(long)]
    pub max_count: Option<usize>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Color SVG disks by generation depth.
    #[arg(long)]
    pub fill_by_depth: bool,
    #[arg(long)]
    pub json: bool,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateConfiguration | Error::SingularMatrix => EXIT_DEGENERATE_CONFIGURATION,
            Error::NotTangent { .. } => EXIT_NOT_TANGENT,
            Error::DegenerateTriple => EXIT_DEGENERATE_TRIPLE,
            Error::ComplexRoots { .. } | Error::InvalidSeed(_) | Error::UnboundedLimits => {
                EXIT_INVALID_SEED
            }
            Error::NotNormalized { .. } => EXIT_NOT_NORMALIZED,
            _ => EXIT_PARSE,
        };
        Self { code, message: e.to_string() }
    }
}

type CmdResult = Result<i32, CliError>;

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_PASS
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::parse("--tol must be a finite non-negative number"));
    }
    match &cli.command {
        Command::Verify { input, json } => cmd_verify(input, cli.tol, *json, out),
        Command::Solve4 { input } => cmd_solve4(input, out),
        Command::Gasket(args) => cmd_gasket(args, out),
        Command::Soddy { dim, json, curvatures } => cmd_soddy(curvatures, *dim, cli.tol, *json, out),
        Command::Lift { kind, values, json } => cmd_lift(*kind, values, *json, out),
        Command::Project { values, json } => cmd_project(values, *json, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::parse(format!("cannot write output: {e}")))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    emit(out, &format!("{text}\n"))
}

fn read_document(path: &Path) -> Result<Configuration, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
        .and_then(|doc| doc.validate())
        .map_err(CliError::parse)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn matrix_rows(rows: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    rows.into_iter().map(|r| r.into_iter().map(clean).collect()).collect()
}

fn mat4_rows(m: &Mat4) -> Vec<Vec<f64>> {
    matrix_rows(m.iter().map(|r| r.to_vec()).collect())
}

fn format_matrix(rows: &[Vec<f64>]) -> String {
    rows.iter()
        .map(|r| format!("  {}\n", r.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")))
        .collect()
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    dim: usize,
    gramian: Vec<Vec<f64>>,
    inverse: Vec<Vec<f64>>,
    residual: f64,
    tol: f64,
    pass: bool,
}

fn lift_all(disks: &[Disk]) -> Result<Vec<CircleVector>, CliError> {
    disks.iter().map(|d| lift(d).map_err(|e| CliError::parse(e.to_string()))).collect()
}

pub fn cmd_verify(input: &Path, tol: f64, json: bool, out: &mut dyn Write) -> CmdResult {
    let (dim, gramian, inverse, residual) = match read_document(input)? {
        Configuration::Planar(disks) => {
            if disks.len() != 4 {
                return Err(CliError::parse(format!("expected 4 disks, got {}", disks.len())));
            }
            let c = lift_all(&disks)?;
            let check = check_generalized(&[c[0], c[1], c[2], c[3]])?;
            (2, mat4_rows(&check.gramian), mat4_rows(&check.inverse), check.residual)
        }
        Configuration::Spheres { dim, spheres } => {
            if spheres.len() != dim + 2 {
                return Err(CliError::parse(format!(
                    "expected {} spheres for dim {dim}, got {}",
                    dim + 2,
                    spheres.len()
                )));
            }
            let vectors = spheres
                .iter()
                .map(|s| lift_n(s).map_err(|e| CliError::parse(e.to_string())))
                .collect::<Result<Vec<NVector>, _>>()?;
            let check = check_generalized_n(&vectors, dim)?;
            (dim, matrix_rows(check.gramian.rows()), matrix_rows(check.inverse.rows()), check.residual)
        }
    };
    let pass = residual <= tol;
    if json {
        emit_json(
            out,
            &VerifyReport { schema_version: SCHEMA_VERSION, dim, gramian, inverse, residual, tol, pass },
        )?;
    } else {
        emit(
            out,
            &format!(
                "gramian f:\n{}inverse F:\n{}residual: {}\n{}\n",
                format_matrix(&gramian),
                format_matrix(&inverse),
                num(residual),
                if pass { "pass" } else { "FAIL" }
            ),
        )?;
    }
    Ok(if pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct Solution {
    disk: DiskRecord,
    vector: [f64; 4],
    curvature: f64,
    descartes_residual: f64,
}

#[derive(Serialize)]
struct Solve4Report {
    schema_version: u32,
    /// Both solutions as a disk document.
    disks: Vec<DiskRecord>,
    solutions: Vec<Solution>,
}

pub fn cmd_solve4(input: &Path, out: &mut dyn Write) -> CmdResult {
    let Configuration::Planar(disks) = read_document(input)? else {
        return Err(CliError::parse("solve4 takes planar disks, not spheres"));
    };
    if disks.len() != 3 {
        return Err(CliError::parse(format!("expected 3 disks, got {}", disks.len())));
    }
    let c = lift_all(&disks)?;
    let (x1, x2) = solve_fourth_disk(&c[0], &c[1], &c[2]).map_err(|e| match e {
        Error::NotTangent { i, j, residual } => CliError {
            code: EXIT_NOT_TANGENT,
            message: format!("disks {i} and {j} are not tangent: |<c_i,c_j> - 1| = {}", num(residual)),
        },
        other => other.into(),
    })?;
    let mut solutions = Vec::new();
    for x in [x1, x2] {
        let disk = project(&x)?;
        solutions.push(Solution {
            disk: DiskRecord::from_disk(&disk),
            vector: x.to_array().map(clean),
            curvature: clean(x.beta),
            descartes_residual: descartes_residual(c[0].beta, c[1].beta, c[2].beta, x.beta),
        });
    }
    let report = Solve4Report {
        schema_version: SCHEMA_VERSION,
        disks: solutions.iter().map(|s| s.disk.clone()).collect(),
        solutions,
    };
    emit_json(out, &report)?;
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct GasketReport {
    schema_version: u32,
    disk_count: usize,
    max_depth: u32,
    min_radius: Option<f64>,
    disks_per_depth: Vec<usize>,
}

fn parse_seed(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|t| {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| CliError::parse(format!("invalid curvature {t:?} in --seed")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::parse("curvatures must be finite"))
            }
        })
        .collect()
}

fn gasket_csv(g: &crate::apollonian::Gasket) -> Result<String, CliError> {
    let mut csv = String::from("depth,curvature,x,y\n");
    for (disk, meta) in g.projected()? {
        let (x, y) = match disk {
            Disk::Circle { center, .. } => (num(center[0]), num(center[1])),
            Disk::Halfplane { .. } => (String::new(), String::new()),
        };
        csv.push_str(&format!("{},{},{x},{y}\n", meta.depth, num(meta.vector.beta)));
    }
    Ok(csv)
}

pub fn cmd_gasket(args: &GasketArgs, out: &mut dyn Write) -> CmdResult {
    let seed = match (&args.seed, &args.input) {
        (Some(text), _) => seed_from_curvatures(&parse_seed(text)?)?,
        (None, Some(path)) => {
            let Configuration::Planar(disks) = read_document(path)? else {
                return Err(CliError::parse("gasket seeds are planar disks, not spheres"));
            };
            if disks.len() != 4 {
                return Err(CliError::parse(format!("expected 4 disks, got {}", disks.len())));
            }
            let c = lift_all(&disks)?;
            Quadruple::new([c[0], c[1], c[2], c[3]]).map_err(|e| Error::InvalidSeed(e.to_string()))?
        }
        (None, None) => return Err(CliError::parse("one of --seed or --input is required")),
    };
    let mut limits = GenerationLimits {
        max_depth: args.depth,
        max_curvature: args.max_curvature,
        max_count: args.max_count,
    };
    if limits.max_depth.is_none() && limits.max_curvature.is_none() {
        limits.max_depth = Some(DEFAULT_DEPTH);
    }
    limits.max_count.get_or_insert(DEFAULT_MAX_COUNT);
    if let Some(k) = limits.max_curvature {
        if !(k.is_finite() && k > 0.0) {
            return Err(CliError::parse("--max-curvature must be positive"));
        }
    }
    let gasket = generate(&seed, limits)?;

    if let Some(path) = &args.csv {
        write_file(path, &gasket_csv(&gasket)?)?;
    }
    if let Some(path) = &args.svg {
        let style = if args.fill_by_depth { RenderStyle::by_depth() } else { RenderStyle::default() };
        write_file(path, &render_svg(&gasket, &style)?)?;
    }

    let max_depth = gasket.max_depth();
    let mut per_depth = vec![0usize; max_depth as usize + 1];
    for d in gasket.disks() {
        per_depth[d.depth as usize] += 1;
    }
    if args.json {
        emit_json(
            out,
            &GasketReport {
                schema_version: SCHEMA_VERSION,
                disk_count: gasket.len(),
                max_depth,
                min_radius: gasket.min_radius(),
                disks_per_depth: per_depth,
            },
        )?;
    } else {
        let min_radius = gasket.min_radius().map_or_else(|| "none".into(), num);
        emit(
            out,
            &format!("disks: {}\nmax depth: {max_depth}\nmin radius: {min_radius}\n", gasket.len()),
        )?;
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct SoddyReport {
    schema_version: u32,
    dim: usize,
    residual: f64,
    scale: f64,
    tol: f64,
    pass: bool,
}

pub fn cmd_soddy(curvatures: &[f64], dim: usize, tol: f64, json: bool, out: &mut dyn Write) -> CmdResult {
    if curvatures.iter().any(|b| !b.is_finite()) {
        return Err(CliError::parse("curvatures must be finite"));
    }
    let residual = soddy_gosset_residual(curvatures, dim).map_err(|e| match e {
        Error::WrongCount { expected, got } => {
            CliError::parse(format!("expected {expected} curvatures for dim {dim}, got {got}"))
        }
        other => CliError::parse(other.to_string()),
    })?;
    let scale = curvatures.iter().map(|b| b.abs()).sum::<f64>().powi(2);
    let pass = residual.abs() <= tol * scale;
    if json {
        emit_json(
            out,
            &SoddyReport { schema_version: SCHEMA_VERSION, dim, residual: clean(residual), scale, tol, pass },
        )?;
    } else {
        emit(
            out,
            &format!("residual: {}\n{}\n", num(residual), if pass { "pass" } else { "FAIL" }),
        )?;
    }
    Ok(if pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct LiftReport {
    schema_version: u32,
    vector: [f64; 4],
}

pub fn cmd_lift(kind: DiskKind, values: &[f64], json: bool, out: &mut dyn Write) -> CmdResult {
    let [a, b, c] = values else {
        return Err(CliError::parse("lift takes exactly three numbers"));
    };
    let disk = match kind {
        DiskKind::Circle => Disk::circle(*a, *b, *c),
        DiskKind::Halfplane => Disk::halfplane(*a, *b, *c),
    };
    let v = lift(&disk).map_err(|e| CliError::parse(e.to_string()))?;
    let vector = v.to_array().map(clean);
    if json {
        emit_json(out, &LiftReport { schema_version: SCHEMA_VERSION, vector })?;
    } else {
        emit(out, &format!("{}\n", vector.map(num).join(" ")))?;
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct ProjectReport {
    schema_version: u32,
    disk: DiskRecord,
}

pub fn cmd_project(values: &[f64], json: bool, out: &mut dyn Write) -> CmdResult {
    let [a, b, c, d] = values else {
        return Err(CliError::parse("project takes exactly four numbers"));
    };
    let disk = project(&CircleVector::new(*a, *b, *c, *d))?;
    let record = DiskRecord::from_disk(&disk);
    if json {
        emit_json(out, &ProjectReport { schema_version: SCHEMA_VERSION, disk: record })?;
    } else {
        let text = match disk {
            Disk::Circle { center, radius } => {
                format!("circle ({},{}) r={}\n", num(center[0]), num(center[1]), num(radius))
            }
            Disk::Halfplane { normal, offset } => {
                format!("halfplane n=({},{}) c={}\n", num(normal[0]), num(normal[1]), num(offset))
            }
        };
        emit(out, &text)?;
    }
    Ok(EXIT_PASS)
}

/// Writes a disk document for the given disks.
pub fn document_json(disks: &[Disk]) -> String {
    serde_json::to_string_pretty(&DiskDocument::from_disks(disks)).expect("document serializes")
}
