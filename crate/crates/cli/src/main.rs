//! `fano`: command-line front end. Every subcommand prints one JSON document.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fano_core::census::{enumerate, store_read, store_write, verify_theorems, write_store, CensusConfig};
use fano_core::families::{ke_triangle_types, make_ke_triangle, make_smn, recognize_ke_triangle};
use fano_core::invariants::{hj_resolution, my_report, singularity_summary, surface_invariants};
use fano_core::symmetry::{automorphisms, recognize_smn, FixedSubspace};
use fano_core::{FanoError, FanoPolygon, KeTriangleParams, LatticePoint, SmnParams};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fano", version, about = "Exact computations with Fano polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolygonInput {
    /// Vertices as an inline JSON array, e.g. "[[1,0],[0,1],[-1,-1]]".
    #[arg(long)]
    vertices: Option<String>,
    /// JSON file with the polygon; stdin when absent.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Everything about one polygon.
    Analyze(PolygonInput),
    /// Vertices of the dual polygon.
    Dual(PolygonInput),
    /// Barycenters of the polygon and its dual.
    Barycenter(PolygonInput),
    /// Kähler–Einstein test.
    Ke(PolygonInput),
    /// Automorphism group.
    Aut(PolygonInput),
    /// Cone singularities and their resolutions.
    Sing(PolygonInput),
    /// Index, Picard number, K², orbifold Euler number.
    Invariants(PolygonInput),
    /// The quadrilateral S_{m,n}.
    Smn {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// The Kähler–Einstein triangle conv{(a,-b),(0,1),(-a,b-1)}.
    KeTriangle {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Unimodular equivalence of two polygons, each inline JSON or a file.
    Equiv { first: String, second: String },
    /// Census of all classes with a representative in [-B, B]².
    Enumerate {
        /// Half-width B of the box; values above 6 need FANO_SOFT_LIMIT_OVERRIDE=1.
        #[arg(long)]
        bound: i64,
        /// Keep only classes of index at most this.
        #[arg(long)]
        max_index: Option<i64>,
        /// Worker threads; the output does not depend on it.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// JSON-lines store to write; records go to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the classification statements against a stored census.
    Verify { store: PathBuf },
}

enum Outcome {
    Json(Value),
    /// Raw text already in JSON form.
    Text(String),
    /// A verification report with a counterexample to a theorem.
    Counterexample(Value),
}

fn parse_polygon(text: &str) -> Result<FanoPolygon, FanoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FanoError::Parse(e.to_string()))?;
    let vertices = match &value {
        Value::Object(map) => map
            .get("vertices")
            .ok_or_else(|| FanoError::Parse("object has no \"vertices\" key".into()))?,
        v => v,
    };
    let points: Vec<LatticePoint> =
        serde_json::from_value(vertices.clone()).map_err(|e| FanoError::Parse(e.to_string()))?;
    FanoPolygon::new(&points)
}

fn read_polygon(input: &PolygonInput) -> Result<FanoPolygon, FanoError> {
    if let Some(inline) = &input.vertices {
        return parse_polygon(inline);
    }
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_polygon(&text)
}

fn polygon_arg(arg: &str) -> Result<FanoPolygon, FanoError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        parse_polygon(arg)
    } else {
        parse_polygon(&std::fs::read_to_string(arg)?)
    }
}

fn fixed_subspace_json(f: FixedSubspace) -> Value {
    match f {
        FixedSubspace::Zero => json!("origin"),
        FixedSubspace::Line(d) => json!({ "line": d }),
        FixedSubspace::Plane => json!("plane"),
    }
}

fn aut_json(p: &FanoPolygon) -> Value {
    let g = automorphisms(p);
    let fixed = g.fixed_subspace();
    let mut v = json!(g);
    v["symmetric"] = json!(fixed == FixedSubspace::Zero);
    v["fixed_subspace"] = fixed_subspace_json(fixed);
    v
}

fn sing_json(p: &FanoPolygon) -> Value {
    let inv = surface_invariants(p);
    let cones: Vec<Value> = p
        .edges()
        .zip(&inv.singularities)
        .map(|((u, v), s)| {
            json!({
                "cone": [u, v],
                "n": s.n(),
                "k": s.k(),
                "label": s.label(),
                "resolution": hj_resolution(s).unwrap_or_default(),
            })
        })
        .collect();
    json!({ "cones": cones, "summary": singularity_summary(&inv.singularities) })
}

fn invariants_json(p: &FanoPolygon) -> Value {
    let inv = surface_invariants(p);
    let my = my_report(p);
    let mut v = json!(inv);
    v["singularity_summary"] = json!(singularity_summary(&inv.singularities));
    v["my_holds"] = json!(my.my_holds);
    v
}

fn analyze_json(p: &FanoPolygon) -> Value {
    json!({
        "vertices": p.vertices(),
        "canonical": p.canonical_form(),
        "ke": p.is_kahler_einstein(),
        "barycenter": p.barycenter(),
        "dual": p.dual(),
        "dual_barycenter": p.dual().barycenter(),
        "aut": aut_json(p),
        "singularities": sing_json(p),
        "invariants": invariants_json(p),
        "smn": recognize_smn(p),
        "ke_triangle": recognize_ke_triangle(p),
    })
}

fn run(command: Command) -> Result<Outcome, FanoError> {
    let value = match command {
        Command::Analyze(input) => analyze_json(&read_polygon(&input)?),
        Command::Dual(input) => {
            let p = read_polygon(&input)?;
            let d = p.dual();
            json!({ "vertices": d.vertices(), "denominator_lcm": d.denominator_lcm() })
        }
        Command::Barycenter(input) => {
            let p = read_polygon(&input)?;
            json!({ "barycenter": p.barycenter(), "dual_barycenter": p.dual().barycenter() })
        }
        Command::Ke(input) => json!({ "ke": read_polygon(&input)?.is_kahler_einstein() }),
        Command::Aut(input) => aut_json(&read_polygon(&input)?),
        Command::Sing(input) => sing_json(&read_polygon(&input)?),
        Command::Invariants(input) => invariants_json(&read_polygon(&input)?),
        Command::Smn { m, n } => {
            let p = make_smn(SmnParams::new(m, n));
            json!({ "m": m, "n": n, "vertices": p.vertices() })
        }
        Command::KeTriangle { a, b } => {
            let params = KeTriangleParams::new(a, b)?;
            let p = make_ke_triangle(params);
            let labels: Vec<String> = ke_triangle_types(params).iter().map(|t| t.label()).collect();
            json!({ "a": a, "b": b, "vertices": p.vertices(), "singularities": labels })
        }
        Command::Equiv { first, second } => {
            let (p, q) = (polygon_arg(&first)?, polygon_arg(&second)?);
            let map = p.are_equivalent(&q);
            json!({ "equivalent": map.is_some(), "map": map })
        }
        Command::Enumerate {
            bound,
            max_index,
            workers,
            out,
        } => {
            let config = CensusConfig {
                bound,
                max_index,
                workers,
                allow_large: std::env::var("FANO_SOFT_LIMIT_OVERRIDE").is_ok_and(|v| v == "1"),
            };
            let reports = enumerate(&config)?;
            match out {
                Some(path) => {
                    store_write(&reports, &path)?;
                    json!({
                        "bound": bound,
                        "max_index": max_index,
                        "classes": reports.len(),
                        "out": path,
                    })
                }
                None => {
                    let mut buf = Vec::new();
                    write_store(&reports, &mut buf)?;
                    return Ok(Outcome::Text(String::from_utf8(buf).expect("JSON is UTF-8")));
                }
            }
        }
        Command::Verify { store } => {
            let report = verify_theorems(&store_read(&store)?);
            let value = json!(report);
            if report.has_theorem_failure() {
                return Ok(Outcome::Counterexample(value));
            }
            value
        }
    };
    Ok(Outcome::Json(value))
}

fn print_json(v: &Value) {
    let mut out = io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, v);
    let _ = writeln!(out);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Counterexample(v)) => {
            print_json(&v);
            eprintln!("fano: a theorem check found counterexamples");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("fano: {e}");
            print_json(&json!({ "error": e.code(), "detail": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
