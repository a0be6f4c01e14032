//! Command surface of the `liegen` binary.
//!
//! Exit codes: 0 success, 1 validation failure, 2 verification failure,
//! 64 unreadable or malformed input, 65 bad loop.

pub mod loops;
pub mod scene;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::assembly::{
    build, moduli_dimension, moduli_parameters, validate, verify, Check, GeometryGraph,
    LieGeneratedStructure, Status, VerificationReport, MODULI_NOTE,
};
use crate::developing::{evaluate_word, holonomy};
use crate::model_space::UPoint;

pub use loops::{parse_loop, LOOP_GRAMMAR};
pub use scene::{emit_scene, parse_scene, scene_to_graph, SceneFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_PARSE: i32 = 64;
pub const EXIT_LOOP: i32 = 65;

#[derive(Debug, Parser)]
#[command(name = "liegen", version, about = "Assemble and check Lie generated geometries from scene files")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check graph structure and decorations.
    Validate { scene: PathBuf },
    /// Build the structure and run every verification check.
    BuildVerify {
        scene: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report destination; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Holonomy of a loop at the base region and its action on a point.
    Develop {
        scene: PathBuf,
        #[arg(long = "loop", default_value = "", allow_hyphen_values = true)]
        loop_: String,
        #[arg(long, default_value = "0,0,1", allow_hyphen_values = true)]
        point: String,
    },
    /// Count and list the continuous parameters.
    Moduli { scene: PathBuf },
}

/// Reads and parses a scene; the error is the message for exit code 64.
pub fn load_graph(path: &Path) -> Result<(SceneFile, GeometryGraph), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let scene = parse_scene(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = scene_to_graph(&scene).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((scene, graph))
}

#[derive(Debug, Serialize)]
pub struct Statistics {
    pub regions: usize,
    pub intersections: usize,
    pub moduli_dimension: usize,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<'a> {
    pub status: Status,
    pub eps: f64,
    pub samples: usize,
    pub seed: u64,
    pub statistics: Statistics,
    pub checks: &'a [Check],
    pub notes: &'a [String],
}

impl<'a> ReportDocument<'a> {
    pub fn new(
        s: &LieGeneratedStructure,
        report: &'a VerificationReport,
        eps: f64,
        samples: usize,
        seed: u64,
    ) -> Self {
        ReportDocument {
            status: if report.passed() { Status::Pass } else { Status::Fail },
            eps,
            samples,
            seed,
            statistics: Statistics {
                regions: s.regions.len(),
                intersections: s.intersections.len(),
                moduli_dimension: s.moduli_dimension,
            },
            checks: &report.checks,
            notes: &report.notes,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are always serializable");
        s.push('\n');
        s
    }
}

/// 15 significant digits, printed in shortest form.
pub fn fmt_sig(v: f64) -> String {
    let r: f64 = format!("{v:.14e}").parse().unwrap_or(v);
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

fn print_validation(out: &mut dyn Write, report: &VerificationReport) -> std::io::Result<()> {
    for c in &report.checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", c.name, c.detail)?;
    }
    let failed = report.failures().count();
    if failed == 0 {
        writeln!(out, "validation passed ({} checks)", report.checks.len())
    } else {
        writeln!(out, "validation failed: {failed} of {} checks", report.checks.len())
    }
}

fn parse_point(s: &str) -> Result<UPoint, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(format!("--point expects x,y,z, got '{s}'"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("--point: '{t}' is not a number"));
    UPoint::new(num(x)?, num(y)?, num(z)?).map_err(|e| format!("--point: {e}"))
}

/// Runs one command, writing normal output to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PARSE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let path = match &cli.command {
        Command::Validate { scene }
        | Command::BuildVerify { scene, .. }
        | Command::Develop { scene, .. }
        | Command::Moduli { scene } => scene.clone(),
    };
    let (scene, graph) = match load_graph(&path) {
        Ok(x) => x,
        Err(e) => {
            writeln!(err, "parse error: {e}")?;
            return Ok(EXIT_PARSE);
        }
    };

    let report = validate(&graph);
    if let Command::Validate { .. } = cli.command {
        print_validation(out, &report)?;
        return Ok(if report.passed() { EXIT_OK } else { EXIT_INVALID });
    }
    if !report.passed() {
        print_validation(err, &report)?;
        return Ok(EXIT_INVALID);
    }

    match cli.command {
        Command::Validate { .. } => unreachable!(),
        Command::Moduli { .. } => {
            writeln!(out, "{}", moduli_dimension(&graph))?;
            for m in moduli_parameters(&graph) {
                writeln!(
                    out,
                    "{} ({}): slide {}, offset [{}, {}]",
                    m.edge,
                    m.ends,
                    fmt_sig(m.slide),
                    fmt_sig(m.offset[0]),
                    fmt_sig(m.offset[1])
                )?;
            }
            writeln!(out, "note: {MODULI_NOTE}")?;
            Ok(EXIT_OK)
        }
        Command::BuildVerify { eps, samples, seed, out: dest, .. } => {
            let mut s = match build(&graph) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "build failed: {e}")?;
                    return Ok(EXIT_INVALID);
                }
            };
            for f in &scene.faults {
                if let Err(e) = s.perturb_reduction(f.wall, f.generator, f.delta) {
                    writeln!(err, "parse error: fault: {e}")?;
                    return Ok(EXIT_PARSE);
                }
            }
            let report = verify(&s, eps, samples, seed);
            let doc = ReportDocument::new(&s, &report, eps, samples, seed).render();
            match dest {
                Some(p) => std::fs::write(&p, doc)?,
                None => out.write_all(doc.as_bytes())?,
            }
            if report.passed() {
                Ok(EXIT_OK)
            } else {
                for c in report.failures() {
                    writeln!(err, "FAIL {} (residual {:e}): {}", c.name, c.max_residual, c.detail)?;
                }
                Ok(EXIT_VERIFY)
            }
        }
        Command::Develop { loop_, point, .. } => {
            let p = match parse_point(&point) {
                Ok(p) => p,
                Err(e) => {
                    writeln!(err, "parse error: {e}")?;
                    return Ok(EXIT_PARSE);
                }
            };
            let path = match parse_loop(&loop_) {
                Ok(x) => x,
                Err(e) => {
                    writeln!(err, "bad loop: {e}\n{LOOP_GRAMMAR}")?;
                    return Ok(EXIT_LOOP);
                }
            };
            let s = match build(&graph) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "build failed: {e}")?;
                    return Ok(EXIT_INVALID);
                }
            };
            let word = match holonomy(&s, &path) {
                Ok(w) => w,
                Err(e) => {
                    writeln!(err, "bad loop: {e}\n{LOOP_GRAMMAR}")?;
                    return Ok(EXIT_LOOP);
                }
            };
            let image = match evaluate_word(&word, &p) {
                Ok(q) => q,
                Err(e) => {
                    writeln!(err, "evaluation failed: {e}")?;
                    return Ok(EXIT_VERIFY);
                }
            };
            let noun = if word.len() == 1 { "letter" } else { "letters" };
            writeln!(out, "holonomy: {} {noun}", word.len())?;
            for g in &word.letters {
                writeln!(out, "  {g}")?;
            }
            writeln!(
                out,
                "point: {} {} {}\nimage: {} {} {}",
                fmt_sig(p.x),
                fmt_sig(p.y),
                fmt_sig(p.z),
                fmt_sig(image.x),
                fmt_sig(image.y),
                fmt_sig(image.z)
            )?;
            Ok(EXIT_OK)
        }
    }
}
