//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use capgeo_core::cheeger::classify;
use capgeo_core::convex::{criterion_samples, giusti_criterion, is_convex, kappa_bar};
use capgeo_core::gallery::{
    self, dumbbell, equal_balls, finn_giusti, make_disk, make_ellipse, make_square, make_stadium,
    pinocchio, pinocchio_angle, two_balls, DumbbellParams, PinocchioParams, TwoBallParams,
};
use capgeo_core::geometry::{ensure_valid, quotient};
use capgeo_core::morphology::erode;
use capgeo_core::raster::Raster;
use capgeo_core::reach::reach_report;
use capgeo_core::verdict::{decide, Status};
use capgeo_core::{Domain, Point, Region, Tolerance};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::json::{
    cheeger_value, domain_value, error_value, reach_value, region_value, render, scalar,
    verdict_value,
};
use crate::svg::{self, Figure};

/// Existence of capillary surfaces in tubes with line/arc cross-sections.
#[derive(Debug, Parser)]
#[command(name = "capgeo", version)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every command.
#[derive(Debug, Args)]
pub struct RunConfig {
    /// Point coincidence and on-boundary tolerance.
    #[arg(long, global = true, default_value_t = 1e-7)]
    pub eps_geom: f64,
    /// Set equality tolerance on symmetric-difference area.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub eps_area: f64,
    /// Bracket width for root finding.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eps_root: f64,
    /// Pixels across the raster cross-check.
    #[arg(long, global = true, default_value_t = 1024)]
    pub grid: usize,
    /// Boundary sampling density.
    #[arg(long, global = true, default_value_t = 4096)]
    pub samples: usize,
    /// Emit JSON on standard output (always on; accepted for scripts).
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write an SVG figure to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

impl RunConfig {
    pub fn tolerance(&self) -> Result<Tolerance, CliError> {
        let tol = Tolerance {
            eps_geom: self.eps_geom,
            eps_area: self.eps_area,
            eps_root: self.eps_root,
            n_samples: self.samples,
        };
        tol.validate()?;
        if !(8..=16384).contains(&self.grid) {
            return Err(CliError::Usage(format!("--grid {} outside [8, 16384]", self.grid)));
        }
        Ok(tol)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Existence verdict at a contact angle.
    Analyze {
        /// Domain JSON file, or `-` for standard input.
        input: String,
        /// Contact angle in [0, pi/2].
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        gamma: f64,
    },
    /// Cheeger radius, constant and set.
    Cheeger { input: String },
    /// Rolling-ball tests (radius defaults to area/perimeter).
    Reach {
        input: String,
        #[arg(long, allow_negative_numbers = true)]
        radius: Option<f64>,
    },
    /// Inner parallel set at a distance.
    Erode {
        input: String,
        #[arg(long, allow_negative_numbers = true)]
        radius: f64,
    },
    /// Convexity, curvature bound and the convex criterion.
    Convex { input: String },
    /// Build a gallery domain, or `gallery list`.
    Gallery(GalleryArgs),
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    pub family: String,
    /// Large (or only) radius.
    #[arg(long = "R")]
    pub big_r: Option<f64>,
    /// Small radius of the two-ball families.
    #[arg(long = "r")]
    pub small_r: Option<f64>,
    /// Center distance.
    #[arg(long = "d")]
    pub distance: Option<f64>,
    #[arg(long)]
    pub fillet: Option<f64>,
    /// Square side or ellipse semi-axis along x.
    #[arg(long)]
    pub a: Option<f64>,
    /// Ellipse semi-axis along y.
    #[arg(long)]
    pub b: Option<f64>,
    /// Ellipse vertex count.
    #[arg(long)]
    pub n: Option<usize>,
    /// Stadium straight length.
    #[arg(long = "L")]
    pub length: Option<f64>,
    /// Pinocchio nose length.
    #[arg(long = "T")]
    pub nose: Option<f64>,
    /// Pinocchio angle (defaults to the self-Cheeger angle).
    #[arg(long)]
    pub theta: Option<f64>,
    /// Dumbbell corridor half-width.
    #[arg(long)]
    pub w: Option<f64>,
    /// Write the domain here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit codes of `analyze`.
pub fn status_code(s: Status) -> i32 {
    match s {
        Status::Exists => 0,
        Status::Nonexistence => 10,
        Status::Unresolved => 20,
    }
}

/// Validates `CAPGEO_THREADS`. Work is sequential, so the value only caps
/// what is already a single thread.
pub fn thread_cap(var: Option<String>) -> Result<usize, CliError> {
    match var {
        None => Ok(1),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Threads(v)),
        },
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let err = CliError::Usage(e.kind().to_string());
            let _ = write!(stderr, "{e}");
            let _ = stdout.write_all(render(&error_value(&err)).as_bytes());
            return 1;
        }
    };
    match execute(&cli, stdin) {
        Ok((value, code)) => match stdout.write_all(render(&value).as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "capgeo: cannot write output: {e}");
                1
            }
        },
        Err(err) => {
            let _ = writeln!(stderr, "capgeo: {err}");
            let _ = stdout.write_all(render(&error_value(&err)).as_bytes());
            1
        }
    }
}

fn read_domain(input: &str, stdin: &mut dyn Read) -> Result<Domain, CliError> {
    let mut text = String::new();
    let res = if input == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(input).map(|t| text = t)
    };
    res.map_err(|e| CliError::Read {
        path: input.to_string(),
        message: e.to_string(),
    })?;
    crate::json::parse_domain(&text)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Write {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn figure(cfg: &RunConfig, d: &Domain, fig: Figure) -> Result<(), CliError> {
    match &cfg.svg {
        Some(path) => write_file(path, &svg::render(d, &fig)),
        None => Ok(()),
    }
}

/// Erosion at `r` and a disk of radius `r` rolling from its first component.
fn rolling_layers(d: &Domain, r: f64, tol: &Tolerance) -> Result<(Region, Option<(Point, f64)>), CliError> {
    let core = if r > 0.0 { erode(d, r, tol)? } else { Region::empty() };
    let disk = core.components.first().map(|c| (c.start, r));
    Ok((core, disk))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Value, i32), CliError> {
    thread_cap(std::env::var("CAPGEO_THREADS").ok())?;
    let cfg = &cli.config;
    let tol = cfg.tolerance()?;
    match &cli.command {
        Command::Analyze { input, gamma } => {
            let d = read_domain(input, stdin)?;
            let v = decide(&d, *gamma, &tol)?;
            if cfg.svg.is_some() {
                let (core, disk) = rolling_layers(&d, v.r_phys, &tol)?;
                figure(cfg, &d, Figure {
                    erosion: Some(core),
                    witness: v.witness.as_ref().map(|w| w.subset.clone()),
                    disk,
                    ..Figure::default()
                })?;
            }
            Ok((verdict_value(&v), status_code(v.status)))
        }
        Command::Cheeger { input } => {
            let d = read_domain(input, stdin)?;
            let c = classify(&d, &tol)?;
            if cfg.svg.is_some() {
                let (core, disk) = rolling_layers(&d, c.r_star, &tol)?;
                figure(cfg, &d, Figure {
                    erosion: Some(core),
                    cheeger_set: Some(c.cheeger_set.clone()),
                    disk,
                    ..Figure::default()
                })?;
            }
            Ok((cheeger_value(&c), 0))
        }
        Command::Reach { input, radius } => {
            let d = read_domain(input, stdin)?;
            ensure_valid(&d, &tol)?;
            let r = radius.unwrap_or_else(|| 1.0 / quotient(&d));
            let rep = reach_report(&d, r, &tol)?;
            if cfg.svg.is_some() {
                let (core, disk) = rolling_layers(&d, r, &tol)?;
                figure(cfg, &d, Figure {
                    erosion: Some(core),
                    disk,
                    ..Figure::default()
                })?;
            }
            Ok((reach_value(&rep), 0))
        }
        Command::Erode { input, radius } => {
            let d = read_domain(input, stdin)?;
            let reg = erode(&d, *radius, &tol)?;
            let pixels = Raster::of_domain(&d, cfg.grid, 0.05).erode(*radius);
            figure(cfg, &d, Figure {
                erosion: Some(reg.clone()),
                ..Figure::default()
            })?;
            let mut out = Map::new();
            out.insert("radius".into(), scalar(*radius));
            out.insert("area".into(), scalar(reg.area()));
            out.insert("raster_area".into(), scalar(pixels.area()));
            out.insert("raster_grid".into(), Value::from(cfg.grid));
            out.insert("components".into(), region_value(&reg)["components"].clone());
            Ok((Value::Object(out), 0))
        }
        Command::Convex { input } => {
            let d = read_domain(input, stdin)?;
            let convex = is_convex(&d, &tol)?;
            let (kappa, giusti) = if convex {
                (scalar(kappa_bar(&d, &tol)?), Value::from(giusti_criterion(&d, &tol)?))
            } else {
                (Value::Null, Value::Null)
            };
            figure(cfg, &d, Figure::default())?;
            Ok((
                json!({
                    "convex": convex,
                    "kappa_bar": kappa,
                    "quotient": scalar(quotient(&d)),
                    "giusti": giusti,
                    "samples": criterion_samples(&tol),
                }),
                0,
            ))
        }
        Command::Gallery(g) => gallery_command(cfg, g),
    }
}

fn param_map(pairs: &[(&str, f64)]) -> Value {
    let mut m = Map::new();
    for &(k, v) in pairs {
        m.insert(k.into(), scalar(v));
    }
    Value::Object(m)
}

/// The family's domain and the parameters actually used.
pub fn build_family(g: &GalleryArgs) -> Result<(Domain, Value), CliError> {
    let two = |base: TwoBallParams| -> Result<(Domain, Value), CliError> {
        let mut p = base;
        if let Some(r) = g.small_r {
            p.small_radius = r;
            p.fillet = 0.05 * r;
        }
        p.big_radius = g.big_r.unwrap_or(p.big_radius);
        p.distance = g.distance.unwrap_or(p.distance);
        p.fillet = g.fillet.unwrap_or(p.fillet);
        let params = param_map(&[
            ("R", p.big_radius),
            ("r", p.small_radius),
            ("d", p.distance),
            ("fillet", p.fillet),
        ]);
        Ok((two_balls(&p)?, params))
    };
    match g.family.as_str() {
        "disk" => {
            let r = g.big_r.unwrap_or(1.0);
            Ok((make_disk(r)?, param_map(&[("R", r)])))
        }
        "square" => {
            let a = g.a.unwrap_or(1.0);
            Ok((make_square(a)?, param_map(&[("a", a)])))
        }
        "stadium" => {
            let (r, l) = (g.big_r.unwrap_or(1.0), g.length.unwrap_or(2.0));
            Ok((make_stadium(r, l)?, param_map(&[("R", r), ("L", l)])))
        }
        "ellipse" => {
            let (a, b, n) = (g.a.unwrap_or(2.0), g.b.unwrap_or(1.0), g.n.unwrap_or(4096));
            let mut params = param_map(&[("a", a), ("b", b)]);
            params["n"] = Value::from(n);
            Ok((make_ellipse(a, b, n)?, params))
        }
        "two_balls" => two(TwoBallParams::default()),
        "finn_giusti" => two(finn_giusti()),
        "equal_balls" => two(equal_balls()),
        "pinocchio" => {
            let p = PinocchioParams {
                theta: g.theta.unwrap_or_else(pinocchio_angle),
                length: g.nose.unwrap_or(1.0),
            };
            Ok((pinocchio(&p)?, param_map(&[("theta", p.theta), ("T", p.length)])))
        }
        "dumbbell" => {
            let base = DumbbellParams::default();
            let p = DumbbellParams {
                radius: g.big_r.unwrap_or(base.radius),
                distance: g.distance.unwrap_or(base.distance),
                half_width: g.w.unwrap_or(base.half_width),
            };
            let params = param_map(&[("R", p.radius), ("d", p.distance), ("w", p.half_width)]);
            Ok((dumbbell(&p)?, params))
        }
        other => Err(CliError::UnknownFamily(other.to_string())),
    }
}

fn gallery_command(cfg: &RunConfig, g: &GalleryArgs) -> Result<(Value, i32), CliError> {
    if g.family == "list" {
        let families: Vec<Value> = gallery::FAMILIES
            .iter()
            .map(|f| json!({"name": f.name, "defaults": f.defaults}))
            .collect();
        return Ok((json!({ "families": families }), 0));
    }
    let (d, params) = build_family(g)?;
    figure(cfg, &d, Figure::default())?;
    let mut doc = domain_value(&d);
    doc["metadata"] = json!({"family": g.family, "params": params});
    match &g.out {
        Some(path) => {
            write_file(path, &render(&doc))?;
            Ok((json!({"family": g.family, "out": path.display().to_string()}), 0))
        }
        None => Ok((doc, 0)),
    }
}
