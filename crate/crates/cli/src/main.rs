use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nsstqft::diagram::schema::DiagramSpec;
use nsstqft::invariant::schema::{DiagramRef, SurgerySpec};
use nsstqft::invariant::{f_prime, z_invariant_with};
use nsstqft::json::{complex_json, ComplexSpec, RealSpec};
use nsstqft::tqftdim::schema::GraphSpec;
use nsstqft::tqftdim::{graded_dimension_with, hh0_dimension_generic, verlinde, GradedDimension};
use nsstqft::{configure_threads, Error, Exec, QScalar, RootParams};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "nsstqft", version, about = "Non-semisimple quantum invariants at q = exp(iπ/r)")]
struct Cli {
    /// Order of the root of unity.
    #[arg(long = "r", global = true, default_value_t = 3)]
    r: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Tolerance for scalarity and equality checks.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Distance below which a value counts as an integer.
    #[arg(long = "eps-int", global = true)]
    eps_int: Option<f64>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Renormalized invariant of a closed colored diagram.
    Flink {
        #[arg(long)]
        input: PathBuf,
    },
    /// Closed 3-manifold invariant from a surgery presentation.
    Zinv {
        #[arg(long)]
        input: PathBuf,
    },
    /// Graded dimension of the state space of a decorated surface.
    Tqftdim {
        #[arg(long)]
        input: PathBuf,
        /// Also evaluate at t = q^{2r'β}.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Closed-form value on S¹ × Σ_g with colored points.
    Verlinde {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Color of a marked point; repeat for several points.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Graded dimension via degree-0 Hochschild homology (generic case).
    Hh0 {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the property checks for the given r.
    Selftest,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Schema(_) | Error::Type { .. } => 2,
            Error::Domain(_) | Error::InvalidRoot(_) | Error::NotComputable(_) | Error::NonGeneric(_) => 3,
            Error::NotScalar { .. } | Error::Geometry(_) => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

/// Parse a complex command-line value: `p/q`, a decimal, or `re,im`.
fn parse_complex(s: &str) -> Result<QScalar, Failure> {
    let spec = match s.split_once(',') {
        Some((re, im)) => ComplexSpec::Pair { re: text(re), im: text(im) },
        None => ComplexSpec::Real(text(s)),
    };
    Ok(spec.value()?)
}

fn text(s: &str) -> RealSpec {
    RealSpec::Text(s.trim().to_string())
}

fn graded_json(gd: &GradedDimension) -> Value {
    json!({
        "parity": gd.parity_mode,
        "total": gd.total(),
        "coefficients": gd.coefficients.iter().map(|(k, d)| json!({"degree": k, "dim": d})).collect::<Vec<_>>(),
    })
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let mut ctx = RootParams::new(cli.r)?;
    ctx = ctx.with_tolerances(cli.eps_int.unwrap_or(ctx.epsilon_int), cli.tol.unwrap_or(ctx.tol));
    let exec = match cli.jobs {
        Some(1) => Exec::Sequential,
        Some(n) => {
            configure_threads(n);
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let (name, input, result) = match &cli.command {
        Command::Flink { input } => {
            let spec = DiagramSpec::parse(&read(input)?)?;
            let d = spec.build(&Default::default())?;
            let cut = match &spec.cut {
                Some(name) => d
                    .component_index(name)
                    .ok_or_else(|| Error::Schema(format!("at `cut`: unknown component {name:?}")))?,
                None => d
                    .components
                    .iter()
                    .position(|c| c.color.is_simple_projective(&ctx))
                    .ok_or_else(|| Error::Domain("no component carries a simple projective color".into()))?,
            };
            let v = f_prime(&ctx, &d, cut)?;
            let result = json!({
                "F_re": v.re,
                "F_im": v.im,
                "cut": d.components[cut].name,
                "writhes": d.writhes()?,
                "linking": d.linking_matrix()?,
            });
            ("flink", serde_json::to_value(&spec).expect("serializable"), result)
        }
        Command::Zinv { input } => {
            let mut spec = SurgerySpec::parse(&read(input)?)?;
            let base = input.parent();
            if let DiagramRef::Path(_) = spec.diagram {
                spec.diagram = DiagramRef::Inline(Box::new(spec.load_diagram(base)?));
            }
            let sp = spec.build(&ctx, base)?;
            let z = z_invariant_with(&ctx, &sp, exec)?;
            let result = json!({
                "Z_re": z.z.re,
                "Z_im": z.z.im,
                "Z_defi_re": z.z_defi.re,
                "Z_defi_im": z.z_defi.im,
                "N_re": z.n_invariant.re,
                "N_im": z.n_invariant.im,
                "m": z.m,
                "sigma": z.linking.sigma,
                "b1": z.linking.nullity,
                "signature_pair": z.linking.signature_pair,
                "linking_matrix": z.linking.matrix,
                "defect": z.defect,
                "cut": sp.diagram.components[z.cut].name,
            });
            ("zinv", serde_json::to_value(&spec).expect("serializable"), result)
        }
        Command::Tqftdim { input, beta } => {
            let spec = GraphSpec::parse(&read(input)?)?;
            let g = spec.build()?;
            let gd = graded_dimension_with(&ctx, &g, exec)?;
            let mut result = graded_json(&gd);
            result["genus"] = json!(g.genus());
            let mut echo = json!({ "graph": spec });
            if let Some(b) = beta {
                let beta = parse_complex(b)?;
                result["dim_t"] = complex_json(gd.eval_at_class(&ctx, beta));
                echo["beta"] = json!(b);
            }
            ("tqftdim", echo, result)
        }
        Command::Hh0 { input } => {
            let spec = GraphSpec::parse(&read(input)?)?;
            let g = spec.build()?;
            let gd = hh0_dimension_generic(&ctx, &g)?;
            let mut result = graded_json(&gd);
            result["genus"] = json!(g.genus());
            ("hh0", json!({ "graph": spec }), result)
        }
        Command::Verlinde { genus, beta, points } => {
            let b = parse_complex(beta)?;
            let pts = points.iter().map(|p| parse_complex(p)).collect::<Result<Vec<_>, _>>()?;
            let v = verlinde(&ctx, *genus, b, &pts)?;
            (
                "verlinde",
                json!({ "genus": genus, "beta": beta, "points": points }),
                json!({ "value_re": v.re, "value_im": v.im }),
            )
        }
        Command::Selftest => {
            let checks = nsstqft::selftest::run(&ctx, exec);
            let failed = checks.iter().filter(|c| !c.passed).count();
            (
                "selftest",
                Value::Null,
                json!({ "passed": checks.len() - failed, "failed": failed, "checks": checks }),
            )
        }
    };
    Ok(json!({
        "command": name,
        "r": ctx.r(),
        "tolerances": { "tol": ctx.tol, "epsilon_int": ctx.epsilon_int },
        "input": input,
        "result": result,
    }))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn print_table(report: &Value) {
    println!("{:<16} {}", "command", scalar(&report["command"]));
    println!("{:<16} {}", "r", report["r"]);
    println!("{:<16} {}", "tol", report["tolerances"]["tol"]);
    println!("{:<16} {}", "epsilon_int", report["tolerances"]["epsilon_int"]);
    let empty = Map::new();
    for (k, v) in report["result"].as_object().unwrap_or(&empty) {
        match v {
            Value::Array(rows) if rows.first().is_some_and(Value::is_object) => {
                let cols: Vec<String> = rows[0].as_object().expect("object rows").keys().cloned().collect();
                println!("{k}:");
                println!("  {}", cols.iter().map(|c| format!("{c:<12}")).collect::<String>());
                for row in rows {
                    println!("  {}", cols.iter().map(|c| format!("{:<12}", scalar(&row[c]))).collect::<String>());
                }
            }
            _ => println!("{k:<16} {}", scalar(v)),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
                Format::Table => print_table(&report),
            }
            let failed = report["result"]["failed"].as_u64().unwrap_or(0);
            if failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
