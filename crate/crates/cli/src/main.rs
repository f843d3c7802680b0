mod report;
mod spec;
mod suites;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use gradtilt::algebra::GradedAlgebra;
use gradtilt::arquiver::ar_quiver;
use gradtilt::structure::{
    global_dimension, gorenstein_parameter, is_self_injective, is_symmetric, GlobalDimension,
};
use gradtilt::tilting::{build_t, self_extensions, verify_gamma_is_beilinson};
use gradtilt::{Error, Field, Result};

use report::{all_passed, Check};
use spec::AlgebraSpecFile;

#[derive(Parser)]
#[command(name = "gradtilt", version, about = "Graded algebras, tilting objects and AR quivers")]
struct Cli {
    /// Coefficient field: `rational` or `p=PRIME`; overrides the file.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Seed for randomized isomorphism searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Path-length cap (when the file has none) and global-dimension cap.
    #[arg(long, global = true, default_value_t = 32)]
    cap: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural facts about an algebra.
    Algebra { spec: PathBuf },
    /// The tilting object T, its endomorphism algebra and checks.
    Tilting { spec: PathBuf },
    /// Run a verification suite and print a JSON report.
    Verify {
        spec: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// The AR quiver of graded modules in a degree window.
    Arquiver {
        spec: PathBuf,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: (i64, i64),
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    if s == "rational" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("p=")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("expected `rational` or `p=PRIME`, got `{s}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn gldim_value(g: GlobalDimension) -> Value {
    match g {
        GlobalDimension::Finite(d) => json!(d),
        GlobalDimension::AtLeast(_) => json!(g.to_string()),
    }
}

fn algebra_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(cli: &Cli, path: &Path) -> Result<(AlgebraSpecFile, Arc<GradedAlgebra>)> {
    let file = AlgebraSpecFile::read(path)?;
    let a = file.build(cli.field, cli.cap)?;
    Ok((file, a))
}

fn algebra_report(cli: &Cli, a: &Arc<GradedAlgebra>) -> Result<Value> {
    let by_degree = a.dims_by_degree();
    let dims: Vec<usize> = if a.dim() == 0 {
        Vec::new()
    } else {
        (a.min_degree()..=a.max_degree())
            .map(|d| by_degree.get(&d).copied().unwrap_or(0))
            .collect()
    };
    let nakayama = is_self_injective(a);
    let (a0, _) = a.degree_zero_part();
    Ok(json!({
        "vertices": a.vertex_labels(),
        "min_degree": a.min_degree(),
        "dims": dims,
        "dim": a.dim(),
        "radical": a.radical().len(),
        "socle": a.socle().len(),
        "selfinjective": nakayama.is_some(),
        "nakayama_permutation": nakayama,
        "symmetric": is_symmetric(a),
        "gorenstein": gorenstein_parameter(a)?,
        "gldim0": gldim_value(global_dimension(&a0, cli.cap)),
    }))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// The report and whether every check in it passed.
fn tilting_report(cli: &Cli, a: &Arc<GradedAlgebra>) -> Result<(Value, bool)> {
    let data = build_t(a)?;
    let summands: Vec<Value> = data
        .summands
        .iter()
        .map(|s| json!({ "summand": s.label(a), "dim": s.module.dim(), "projective": s.projective }))
        .collect();
    let t_underline: Vec<String> = data.stripped.iter().map(|&k| data.summands[k].label(a)).collect();
    let gamma = data.gamma_algebra();
    let (beilinson, beilinson_ok) = match verify_gamma_is_beilinson(&data) {
        Ok(c) => (verdict(c.verified), c.verified),
        Err(Error::NoGorensteinParameter) => ("skipped", true),
        Err(e) => return Err(e),
    };
    let selfext_ok = self_extensions(&data.stripped_modules(), 6)?.is_empty();
    let (a0, _) = a.degree_zero_part();
    let gldim0 = global_dimension(&a0, cli.cap);
    let mut report = json!({
        "summands": summands,
        "t_underline": t_underline,
        "t_underline_dim": data.t_underline().dim(),
        "gamma_dim": gamma.dim(),
        "gamma_quiver": gamma.gabriel_quiver(),
        "beilinson": beilinson,
        "selfext": verdict(selfext_ok),
        "gldim0": gldim_value(gldim0),
    });
    let mut ok = beilinson_ok && selfext_ok;
    match gldim0 {
        GlobalDimension::Finite(_) => {
            let g = global_dimension(&gamma, cli.cap);
            ok &= matches!(g, GlobalDimension::Finite(_));
            report["gldim_gamma"] = gldim_value(g);
        }
        GlobalDimension::AtLeast(_) => {
            report["gldim_gamma"] = Value::Null;
            report["obstruction"] = json!("A_0 has infinite global dimension");
        }
    }
    Ok((report, ok))
}

fn print_value(v: &Value, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
        return;
    }
    let empty = Map::new();
    for (k, val) in v.as_object().unwrap_or(&empty) {
        match val {
            Value::String(s) => println!("{k}: {s}"),
            other => println!("{k}: {other}"),
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Algebra { spec } => {
            let (_, a) = load(cli, spec)?;
            print_value(&algebra_report(cli, &a)?, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tilting { spec } => {
            let (_, a) = load(cli, spec)?;
            let (report, ok) = tilting_report(cli, &a)?;
            print_value(&report, cli.json);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { spec, suite } => {
            if !suites::SUITES.contains(&suite.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    suites::SUITES.join(", ")
                )));
            }
            let (file, a) = load(cli, spec)?;
            let name = algebra_name(spec);
            let cx = suites::Context {
                name: &name,
                algebra: &a,
                preprojective_of: file.preprojective_quiver(),
                seed: cli.seed,
                cap: cli.cap,
            };
            let checks: Vec<Check> = suites::run(suite, &cx).expect("suite name checked");
            let ok = all_passed(&checks);
            let out = json!({ "algebra": name, "suite": suite, "passed": ok, "checks": checks });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Arquiver { spec, window, out } => {
            let (_, a) = load(cli, spec)?;
            let q = ar_quiver(&a, window.0, window.1, cli.seed)?;
            let dot = q.to_dot();
            if let Some(path) = out {
                std::fs::write(path, &dot)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&q.to_json()).expect("serializable"));
            } else if out.is_none() {
                print!("{dot}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
