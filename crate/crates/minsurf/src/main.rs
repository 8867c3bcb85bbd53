//! Command-line front end: surface catalog, verification pipelines, report
//! emission, and OBJ mesh export.
//!
//! Exit codes: 0 success and all verifications passing, 1 verification
//! failure, 2 input error, 3 quadrature non-convergence.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use minsurf::boundary::{
    circle_length, mean_ratio_profile, schwarz_report_with, QuadratureSpec, DEFAULT_EQ_TOL,
};
use minsurf::catalog::{catalog, lookup};
use minsurf::equality::{equality_certificate, VerdictKind};
use minsurf::mesh::{write_obj, MeshSpec};
use minsurf::mobius::{precompose, pullback_identity_residual, DiskMobius};
use minsurf::subharmonic::riesz_balance;
use minsurf::surface::{PolarGrid, Surface, SurfaceData};
use minsurf::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_QUADRATURE: i32 = 3;

#[derive(Parser)]
#[command(name = "minsurf", version, about = "Weierstrass-Enneper minimal surface toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in surfaces.
    Catalog,
    /// Evaluate position, density, and tangents at a point.
    Eval {
        #[arg(long)]
        surface: String,
        /// Complex point as `re,im`.
        #[arg(long)]
        z: String,
    },
    /// Arc length of the image circle F(rT).
    Length {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        r: f64,
    },
    /// CSV of mean ratios l_r / (2 pi r).
    Profile {
        #[arg(long)]
        surface: String,
        /// Comma-separated strictly increasing radii in (0, 1].
        #[arg(long)]
        radii: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Schwarz bound certification report.
    Verify {
        #[arg(long)]
        surface: String,
        /// Grid as `n_r,n_theta,r_max`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        certify_equality: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pullback residual and invariance checks for a disk Mobius map.
    Mobius {
        #[arg(long)]
        surface: String,
        /// Mobius parameter as `re,im`, |a| < 1.
        #[arg(long)]
        a: String,
        #[arg(long)]
        verify: bool,
    },
    /// Riesz representation balance report.
    Riesz {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// 2-D quadrature grid as `n_r,n_theta` (default 200,256).
        #[arg(long)]
        grid: Option<String>,
    },
    /// Triangulated OBJ mesh of the surface patch.
    Export {
        #[arg(long)]
        surface: String,
        /// Mesh as `n_r,n_theta,r_max`.
        #[arg(long)]
        mesh: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::QuadratureNonConvergence { .. } => EXIT_QUADRATURE,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Self {
            code: EXIT_INPUT,
            message: format!("i/o failure: {err}"),
        }
    }
}

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::input(format!(
            "malformed complex literal `{text}`: expected `re,im`"
        )));
    }
    let re: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed complex literal `{text}`")))?;
    let im: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed complex literal `{text}`")))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(Failure::input(format!(
            "complex literal `{text}` must be finite"
        )));
    }
    Ok(Complex64::new(re, im))
}

fn parse_grid(text: &str) -> Result<PolarGrid, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::input(format!(
            "malformed grid `{text}`: expected `n_r,n_theta,r_max`"
        )));
    }
    let n_r = parts[0]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed grid `{text}`")))?;
    let n_theta = parts[1]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed grid `{text}`")))?;
    let r_max = parts[2]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed grid `{text}`")))?;
    Ok(PolarGrid::new(n_r, n_theta, r_max)?)
}

fn parse_mesh(text: &str) -> Result<MeshSpec, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::input(format!(
            "malformed mesh `{text}`: expected `n_r,n_theta,r_max`"
        )));
    }
    let n_r = parts[0]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed mesh `{text}`")))?;
    let n_theta = parts[1]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed mesh `{text}`")))?;
    let r_max = parts[2]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("malformed mesh `{text}`")))?;
    Ok(MeshSpec::new(n_r, n_theta, r_max)?)
}

/// Resolves `--surface` as a catalog name first, then as a JSON file path.
fn resolve_surface(spec: &str) -> Result<(Surface, SurfaceData), Failure> {
    if let Some(entry) = lookup(spec) {
        let data = entry.data();
        return Ok((entry.surface, data));
    }
    let path = PathBuf::from(spec);
    if path.exists() {
        let text = fs::read_to_string(&path)?;
        let data: SurfaceData = serde_json::from_str(&text)
            .map_err(|e| Failure::input(format!("invalid surface file {spec}: {e}")))?;
        let surface = data.build();
        return Ok((surface, data));
    }
    Err(Failure::input(format!(
        "unknown surface `{spec}`: not a catalog name and not a readable file"
    )))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Catalog => {
            let entries: Vec<_> = catalog()
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "surface": e.data(),
                        "closed_forms": e.closed_forms,
                    })
                })
                .collect();
            let doc = json!({ "tool_version": VERSION, "catalog": entries });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(EXIT_OK)
        }
        Command::Eval { surface, z } => {
            let (s, data) = resolve_surface(&surface)?;
            let z = parse_complex(&z)?;
            let position = s.position(z)?;
            let lambda = s.conformal_density(z)?;
            let (fx, fy) = s.tangents(z)?;
            let doc = json!({
                "tool_version": VERSION,
                "surface": data,
                "z": [z.re, z.im],
                "position": position,
                "lambda": lambda,
                "f_x": fx,
                "f_y": fy,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(EXIT_OK)
        }
        Command::Length { surface, r } => {
            let (s, data) = resolve_surface(&surface)?;
            let quad = QuadratureSpec::default();
            let length = circle_length(&s, r, &quad)?;
            let doc = json!({
                "tool_version": VERSION,
                "surface": data,
                "quadrature": quad,
                "r": r,
                "length": length,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(EXIT_OK)
        }
        Command::Profile { surface, radii, out } => {
            let (s, data) = resolve_surface(&surface)?;
            let radii: Vec<f64> = radii
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Failure::input(format!("malformed radius `{t}`")))
                })
                .collect::<Result<_, _>>()?;
            let quad = QuadratureSpec::default();
            let profile = mean_ratio_profile(&s, &radii, &quad)?;
            let mut text = String::from("r,mean_ratio\n");
            for (r, mean) in profile {
                text.push_str(&format!("{r:.16e},{mean:.16e}\n"));
            }
            emit(out.as_ref(), text.trim_end())?;
            let _ = data;
            Ok(EXIT_OK)
        }
        Command::Verify {
            surface,
            grid,
            certify_equality,
            out,
        } => {
            let (s, data) = resolve_surface(&surface)?;
            let grid = match grid {
                Some(text) => parse_grid(&text)?,
                None => PolarGrid::new(200, 256, 0.999).expect("default grid"),
            };
            let quad = QuadratureSpec::default();
            let report = schwarz_report_with(&s, &grid, &quad, DEFAULT_EQ_TOL)?;
            let mut ok = report.holds;
            let mut doc = json!({
                "tool_version": VERSION,
                "surface": data,
                "grid": grid,
                "quadrature": quad,
                "eq_tol": DEFAULT_EQ_TOL,
                "schwarz": report,
            });
            if certify_equality {
                let verdict = equality_certificate(&s, &grid, &quad)?;
                // The theorem forbids equality for non-affine data; flag the
                // combination as a verification failure.
                if verdict.kind == VerdictKind::Equality && !verdict.affine_detected {
                    ok = false;
                }
                doc["equality"] = serde_json::to_value(verdict).unwrap();
            }
            emit(out.as_ref(), &serde_json::to_string_pretty(&doc).unwrap())?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION })
        }
        Command::Mobius { surface, a, verify } => {
            let (s, data) = resolve_surface(&surface)?;
            let a = parse_complex(&a)?;
            let m = DiskMobius::new(a)?;
            let quad = QuadratureSpec::default();
            let residual = pullback_identity_residual(&s, a)?;
            let h = precompose(&s, m);
            let l_base = circle_length(&s, 1.0, &quad)?;
            let l_derived = circle_length(&h, 1.0, &quad)?;
            let length_gap = (l_base - l_derived).abs();
            let pass = residual < 1e-10 && length_gap < 1e-7 * (1.0 + l_base);
            let doc = json!({
                "tool_version": VERSION,
                "surface": data,
                "a": [a.re, a.im],
                "quadrature": quad,
                "pullback_residual": residual,
                "boundary_length_base": l_base,
                "boundary_length_derived": l_derived,
                "length_gap": length_gap,
                "passes": pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            if verify && !pass {
                return Ok(EXIT_VERIFICATION);
            }
            Ok(EXIT_OK)
        }
        Command::Riesz { surface, r, step, grid } => {
            let (s, data) = resolve_surface(&surface)?;
            let grid = match grid {
                Some(text) => {
                    let parts: Vec<&str> = text.split(',').collect();
                    if parts.len() != 2 {
                        return Err(Failure::input(format!(
                            "malformed grid `{text}`: expected `n_r,n_theta`"
                        )));
                    }
                    let n_r = parts[0]
                        .trim()
                        .parse()
                        .map_err(|_| Failure::input(format!("malformed grid `{text}`")))?;
                    let n_theta = parts[1]
                        .trim()
                        .parse()
                        .map_err(|_| Failure::input(format!("malformed grid `{text}`")))?;
                    PolarGrid::new(n_r, n_theta, 0.5)?
                }
                None => PolarGrid::new(200, 256, 0.5).expect("default grid"),
            };
            let report = riesz_balance(&s, r, &grid, step)?;
            let doc = json!({
                "tool_version": VERSION,
                "surface": data,
                "grid": { "n_r": grid.n_r, "n_theta": grid.n_theta },
                "step": step,
                "riesz": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(EXIT_OK)
        }
        Command::Export { surface, mesh, out } => {
            let (s, _) = resolve_surface(&surface)?;
            let mesh = parse_mesh(&mesh)?;
            let mut buf = Vec::new();
            write_obj(&s, &mesh, &mut buf)?;
            let mut file = fs::File::create(&out)?;
            file.write_all(&buf)?;
            Ok(EXIT_OK)
        }
    }
}
