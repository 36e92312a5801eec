//! `kwc`: construct, check and search small simplicial 2-complexes from the
//! command line. Every command prints one JSON object
//! `{schema_version, command, status, payload, diagnostics}`.

mod input;
mod spec;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kwcomplex::canonical::is_isomorphic;
use kwcomplex::complex::Complex2;
use kwcomplex::homology::{homology, is_collapsible_to_graph};
use kwcomplex::presentation::{abelianization, edge_path_presentation, tietze_simplify};
use kwcomplex::search::{certify_min_vertices_with, freeness_screen, Parallelism, Property, HARD_CAP};
use kwcomplex::{glue_along, GlueError};

const SCHEMA_VERSION: u32 = 1;
const TIETZE_BUDGET: usize = 10_000;

#[derive(Parser)]
#[command(name = "kwc", version, about = "Small simplicial 2-complexes with prescribed fundamental groups")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Omit timing fields, so identical invocations print identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex: torus, rp2, moebius, punctured-torus, genus2,
    /// bouquet:n, cyclic:m, telescope:k, raag:FILE, racg:FILE,
    /// artin-large:FILE, coxeter-large:FILE, one-relator:FILE.
    Construct { target: String },
    /// Check closure, vertex ranges and connectivity (`-` reads stdin).
    Validate { complex: String },
    /// Euler characteristic, Betti numbers, H1, presentations, collapsibility.
    Invariants { complex: String },
    /// Glue X and Y along Z given by an embedding file.
    Glue { x: String, y: String, embedding: String },
    /// Bounds on the minimal vertex count of a group: free:n, cyclic:m,
    /// abelian:d1,d2,..., free-abelian:n, z2sum:n, surface:+g, surface:-q,
    /// raag:FILE, racg:FILE, artin-large:FILE, coxeter-large:FILE,
    /// one-relator:FILE.
    Bounds { spec: String },
    /// Least vertex count of a complex with a property: torsion,
    /// torsion:p, torsion-free, b1>=k, b2>=k, non-free,
    /// surface:chi=k[,orientable|,non-orientable].
    Search {
        #[arg(long)]
        property: String,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, default_value_t = 1)]
        min_vertices: usize,
        /// Run on the calling thread only.
        #[arg(long)]
        serial: bool,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, env = "KWC_THREADS")]
        threads: Option<usize>,
        /// Print a progress line on stderr every K vertex levels.
        #[arg(long, value_name = "K")]
        report_every: Option<usize>,
        /// Allow max-vertices above the hard cap.
        #[arg(long)]
        allow_over_cap: bool,
    },
    /// Nerve of the open-star cover.
    Nerve { complex: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Validate { .. } => "validate",
            Command::Invariants { .. } => "invariants",
            Command::Glue { .. } => "glue",
            Command::Bounds { .. } => "bounds",
            Command::Search { .. } => "search",
            Command::Nerve { .. } => "nerve",
        }
    }
}

struct Outcome {
    ok: bool,
    payload: Value,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome {
            ok: true,
            payload,
            diagnostics: Vec::new(),
        }
    }
}

fn f_vector(k: &Complex2) -> Value {
    let (v, e, t) = k.f_vector();
    json!([v, e, t])
}

fn construct(target: &str) -> Result<Outcome> {
    let built = spec::build(target)?;
    let k = &built.marked.complex;
    let claimed = built.group.as_ref().map(spec::bounds_for).transpose()?;
    Ok(Outcome::ok(json!({
        "complex": k,
        "metadata": {
            "name": built.name,
            "f_vector": f_vector(k),
            "base_vertex": built.marked.base_vertex,
            "marked_paths": built.marked.marked_paths,
            "claimed_bounds": claimed,
        }
    })))
}

fn validate(path: &str) -> Result<Outcome> {
    let k = input::load_complex(path)?;
    let report = k.validate();
    let diagnostics: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    Ok(Outcome {
        ok: diagnostics.is_empty(),
        payload: json!({
            "valid": diagnostics.is_empty(),
            "f_vector": f_vector(&k),
            "surface": k.classify_surface(),
        }),
        diagnostics,
    })
}

fn invariants(path: &str) -> Result<Outcome> {
    let k = input::load_complex(path)?;
    let h = homology(&k);
    let raw = edge_path_presentation(&k, 0).map_err(|e| anyhow!("{e}"))?;
    let simplified = tietze_simplify(&raw, TIETZE_BUDGET);
    Ok(Outcome::ok(json!({
        "f_vector": f_vector(&k),
        "euler_characteristic": h.euler_characteristic(),
        "betti": [h.b0, h.b1, h.b2],
        "h1": h.h1(),
        "presentation": {
            "raw": raw.to_string(),
            "simplified": simplified.presentation.to_string(),
            "tietze_moves": simplified.moves,
            "abelianization": abelianization(&raw),
        },
        "collapsible_to_graph": is_collapsible_to_graph(&k),
        "freeness": freeness_screen(&k),
        "surface": k.classify_surface(),
    })))
}

fn glue_cmd(x: &str, y: &str, embedding: &str) -> Result<Outcome> {
    let (x, y) = (input::load_complex(x)?, input::load_complex(y)?);
    let e = input::load_embedding(embedding)?;
    let z = input::resolve_z(&e, &x, &y)?;
    match glue_along(&x, &y, &z, &e.into_x, &e.into_y) {
        Ok(r) => Ok(Outcome::ok(json!({
            "complex": r.complex,
            "f_vector": f_vector(&r.complex),
            "condition1": r.condition1,
            "condition2": r.condition2,
            "directly_validated": r.directly_validated,
            "y_map": r.y_map,
        }))),
        Err(err) => Ok(Outcome {
            ok: false,
            payload: glue_error_payload(&err),
            diagnostics: vec![err.to_string()],
        }),
    }
}

fn glue_error_payload(err: &GlueError) -> Value {
    match err {
        GlueError::DuplicateEdge { a, b, count } => json!({"kind": "duplicate_edge", "z_vertices": [a, b], "count": count}),
        GlueError::NonSimplexIntersection { x, y, common } => {
            json!({"kind": "non_simplex_intersection", "x": x, "y": y, "common": common})
        }
        other => json!({"kind": "invalid", "message": other.to_string()}),
    }
}

fn bounds(s: &str) -> Result<Outcome> {
    let group = spec::parse_group_spec(s)?;
    let report = spec::bounds_for(&group)?;
    Ok(Outcome::ok(json!({
        "spec": s,
        "lower": report.lower.integer,
        "upper": report.upper.integer,
        "report": report,
    })))
}

struct SearchArgs<'a> {
    property: &'a str,
    min_vertices: usize,
    max_vertices: usize,
    par: Parallelism,
    report_every: Option<usize>,
    allow_over_cap: bool,
    timing: bool,
}

fn search(a: SearchArgs) -> Result<Outcome> {
    let property: Property = a.property.parse()?;
    let start = Instant::now();
    let mut seen = 0usize;
    let result = certify_min_vertices_with(&property, a.min_vertices, a.max_vertices, a.allow_over_cap, a.par, |l| {
        seen += 1;
        if a.report_every.is_some_and(|k| k > 0 && seen.is_multiple_of(k)) {
            eprintln!("kwc search: {} vertices, {} classes, {} matches", l.vertices, l.classes, l.matches);
        }
    })?;
    let mut payload = json!({
        "hard_cap": HARD_CAP,
        "result": result,
    });
    if a.timing {
        payload["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let mut diagnostics = Vec::new();
    if result.minimal_vertex_count.is_none() {
        diagnostics.push(format!("no complex on at most {} vertices has the property", a.max_vertices));
    }
    if !result.undecided.is_empty() {
        diagnostics.push(format!("{} complexes left undecided by the freeness screen", result.undecided.len()));
    }
    Ok(Outcome {
        ok: true,
        payload,
        diagnostics,
    })
}

fn nerve(path: &str) -> Result<Outcome> {
    let k = input::load_complex(path)?;
    let n = k.star_cover_nerve();
    Ok(Outcome::ok(json!({
        "complex": n,
        "f_vector": f_vector(&n),
        "isomorphic_to_input": is_isomorphic(&n, &k),
    })))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Construct { target } => construct(target),
        Command::Validate { complex } => validate(complex),
        Command::Invariants { complex } => invariants(complex),
        Command::Glue { x, y, embedding } => glue_cmd(x, y, embedding),
        Command::Bounds { spec } => bounds(spec),
        Command::Search {
            property,
            max_vertices,
            min_vertices,
            serial,
            threads,
            report_every,
            allow_over_cap,
        } => {
            let par = if *serial {
                Parallelism::Serial
            } else {
                let n = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
                Parallelism::Threads(n)
            };
            search(SearchArgs {
                property,
                min_vertices: *min_vertices,
                max_vertices: *max_vertices,
                par,
                report_every: *report_every,
                allow_over_cap: *allow_over_cap,
                timing: !cli.no_timing,
            })
        }
        Command::Nerve { complex } => nerve(complex),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).unwrap_or_else(|e| Outcome {
        ok: false,
        payload: Value::Null,
        diagnostics: e.chain().map(ToString::to_string).collect(),
    });
    let envelope = json!({
        "schema_version": SCHEMA_VERSION,
        "command": cli.command.name(),
        "status": if outcome.ok { "ok" } else { "error" },
        "payload": outcome.payload,
        "diagnostics": outcome.diagnostics,
    });
    let text = if cli.pretty {
        serde_json::to_string_pretty(&envelope)
    } else {
        serde_json::to_string(&envelope)
    }
    .expect("JSON values serialize");
    println!("{text}");
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
