//! Command-line front end: seeded verification suites, one-off conjugate
//! queries, and surface mesh export.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use isotet::harness::{export_mesh, run_suite, suite_ids, TrialConfig};
use isotet::isogonal::{isogonal_conjugate, ConjugateResult};
use isotet::tetra::{tetra_tolerance, tetrahedron_from_json, IsoscelesParams};

#[derive(Parser)]
#[command(
    name = "isotet",
    version,
    about = "Isogonal conjugation, pedal spheres, and quadric loci in isosceles tetrahedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded randomized verification suites
    Verify(VerifyArgs),
    /// Compute the isogonal conjugate of a point in a tetrahedron
    Conjugate(ConjugateArgs),
    /// Export a surface of the canonical tetrahedron as a Wavefront OBJ mesh
    Mesh(MeshArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id, or `all` to run every suite
    #[arg(long)]
    suite: String,
    /// Trials per suite
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Base RNG seed; each trial derives its own stream from it
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Positional tolerance, relative to the circumradius
    #[arg(long, default_value_t = 1e-8)]
    tol_pos: f64,
    /// Angular tolerance in radians
    #[arg(long, default_value_t = 1e-8)]
    tol_ang: f64,
    /// Write the report (object, or array for `all`) as JSON to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ConjugateArgs {
    /// JSON file with {"vertices": [[x,y,z]; 4]}
    #[arg(long)]
    tet: PathBuf,
    /// Query point as `x,y,z`
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Emit the result as JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MeshArgs {
    /// One of: hpa, hpb, hpc, circumsphere
    #[arg(long)]
    surface: String,
    /// Canonical half-axis parameters as `a,b,c`
    #[arg(long, allow_hyphen_values = true)]
    params: String,
    /// Side length of the sampled coordinate square
    #[arg(long)]
    extent: f64,
    /// Vertices per grid side (at least 2)
    #[arg(long)]
    res: usize,
    /// Output OBJ path
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(&args),
        Command::Conjugate(args) => cmd_conjugate(&args),
        Command::Mesh(args) => cmd_mesh(&args),
    }
}

const USAGE_ERROR: u8 = 2;

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let cfg = TrialConfig {
        seed: args.seed,
        trials: args.trials,
        tol_pos: args.tol_pos,
        tol_ang: args.tol_ang,
        ..TrialConfig::default()
    };
    let ids: Vec<&str> = if args.suite == "all" {
        suite_ids().to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        match run_suite(id, &cfg) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(USAGE_ERROR);
            }
        }
    }
    for r in &reports {
        println!(
            "{}: {}  trials={} failures={} max_residual={:.3e} ({})",
            r.suite,
            if r.passed { "PASS" } else { "FAIL" },
            r.trials,
            r.failures,
            r.max_residual,
            r.residual_unit
        );
    }
    if let Some(path) = &args.json {
        let body = if args.suite == "all" {
            serde_json::to_string(&reports)
        } else {
            serde_json::to_string(&reports[0])
        }
        .expect("reports are serializable");
        if let Err(e) = fs::write(path, body + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(USAGE_ERROR);
        }
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_conjugate(args: &ConjugateArgs) -> ExitCode {
    let text = match fs::read_to_string(&args.tet) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.tet.display());
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let tetra = match tetrahedron_from_json(&text) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let p = match parse_triple(&args.point) {
        Ok([x, y, z]) => isotet::geom3::Vec3::new(x, y, z),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let result = isogonal_conjugate(&tetra, p, &tetra_tolerance(&tetra));
    if args.json {
        let value = match &result {
            ConjugateResult::Point(q) => serde_json::json!({
                "kind": "point",
                "point": q.to_array(),
            }),
            ConjugateResult::AtInfinity(dir) => serde_json::json!({
                "kind": "at_infinity",
                "direction": dir.to_array(),
            }),
            ConjugateResult::VertexDegenerate(v) => serde_json::json!({
                "kind": "vertex_degenerate",
                "vertex": v.name(),
            }),
            ConjugateResult::OnEdgeLine(e) => serde_json::json!({
                "kind": "on_edge_line",
                "edge": e.name(),
            }),
        };
        println!("{value}");
    } else {
        match &result {
            ConjugateResult::Point(q) => {
                println!("conjugate: ({:.16e}, {:.16e}, {:.16e})", q.x, q.y, q.z)
            }
            ConjugateResult::AtInfinity(dir) => println!(
                "conjugate: at infinity, direction ({:.16e}, {:.16e}, {:.16e})",
                dir.x, dir.y, dir.z
            ),
            ConjugateResult::VertexDegenerate(v) => {
                println!("conjugate: undefined (point at vertex {})", v.name())
            }
            ConjugateResult::OnEdgeLine(e) => {
                println!("conjugate: undefined (point on edge line {})", e.name())
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_mesh(args: &MeshArgs) -> ExitCode {
    let params = match parse_triple(&args.params) {
        Ok([a, b, c]) => match IsoscelesParams::new(a, b, c) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(USAGE_ERROR);
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let obj = match export_mesh(&args.surface, &params, args.extent, args.res) {
        Ok(obj) => obj,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    if let Err(e) = fs::write(&args.out, &obj) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return ExitCode::from(USAGE_ERROR);
    }
    println!(
        "wrote {}: {} vertices, {} triangles",
        args.out.display(),
        args.res * args.res,
        2 * (args.res - 1) * (args.res - 1)
    );
    ExitCode::SUCCESS
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number `{part}`: {e}"))?;
    }
    Ok(out)
}
