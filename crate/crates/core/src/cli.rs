//! Command-line front end.
//!
//! Vertices are printed with 1-based labels (`v1`, `v2`, ...) and `--roots`
//! / `--root` take 1-based indices; edge-list files stay 0-based. With
//! `--format json` every command prints a single JSON object.
//!
//! Exit codes: `0` success, `1` domain error, `2` usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::error::Error;
use crate::graph::{Graph, SimpleGraph};
use crate::io::{read_edge_list, read_simple_edge_list, write_edge_list};
use crate::products::{
    bridge_cycle_edim, bridge_cycle_uniform, corona_edim, corona_product, edim_gu, edim_plus_gu,
    hierarchical_product, hierarchical_upper_bound, is_rooted_path, sharp_bound,
    single_root_edim, RootedSubset,
};
use crate::resolve::{
    all_edges, all_vertices, brute_force_dim_with_cap, brute_force_edim_with_cap,
    edge_representation, DEFAULT_BRUTE_FORCE_CAP,
};
use crate::solver::{build_edge_instance, dim_via_ilp_with, edim_via_ilp_with, export_lp, SolveOptions};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "edgemetric", version, about = "Edge metric dimension toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Ilp,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    Hier,
    Corona,
    BridgeCycle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Edge metric dimension and one edge metric basis.
    Edim(SolveArgs),
    /// Metric dimension and one metric basis.
    Dim(SolveArgs),
    /// Edge metric basis with the representation of every edge.
    Basis(SolveArgs),
    /// Build a product graph and print it as an edge list.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        #[command(flatten)]
        factors: Factors,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed-form bounds and values for a product.
    Bounds {
        #[command(flatten)]
        which: BoundKind,
        #[command(flatten)]
        factors: Factors,
        /// Also compute the exact edge metric dimension of the product.
        #[arg(long)]
        check: bool,
    },
    /// Write the covering program of a graph as an LP file.
    ExportLp {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value = "F")]
        objective: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the built-in reproducibility checks.
    Verify {
        #[arg(long, default_value_t = 2020)]
        seed: u64,
    },
    /// List the named graph families.
    Catalog,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Named graph followed by its integer parameters, e.g. `--catalog path 11`.
    #[arg(long, num_args = 1.., value_name = "NAME [PARAM]...")]
    catalog: Option<Vec<String>>,
    /// Edge-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct SecondSource {
    /// Second factor as a named graph.
    #[arg(id = "h_catalog", long = "h-catalog", num_args = 1.., value_name = "NAME [PARAM]...")]
    catalog: Option<Vec<String>>,
    /// Second factor as an edge-list file.
    #[arg(id = "h_file", long = "h-file")]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Factors {
    #[command(flatten)]
    g: GraphSource,
    #[command(flatten)]
    h: SecondSource,
    /// Comma-separated 1-based roots of the first factor (hierarchical product).
    #[arg(long, value_delimiter = ',')]
    roots: Vec<usize>,
    /// 1-based root of the repeated component (bridge-cycle).
    #[arg(long, default_value_t = 1)]
    root: usize,
    /// Number of components (bridge-cycle).
    #[arg(long, default_value_t = 3)]
    copies: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BoundKind {
    #[arg(long)]
    hier: bool,
    #[arg(long)]
    corona: bool,
    #[arg(long = "bridge-cycle")]
    bridge_cycle: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value_t = Method::Ilp)]
    method: Method,
    /// Time budget in seconds for the ILP method.
    #[arg(long)]
    timeout: Option<f64>,
    /// Vertex cap for the brute-force method.
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn load_catalog(spec: &[String]) -> CliResult<Graph> {
    let (name, rest) = spec
        .split_first()
        .ok_or_else(|| Failure::Usage("--catalog needs a name".into()))?;
    let params = rest
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| Failure::Usage(format!("--catalog: `{p}` is not a non-negative integer")))
        })
        .collect::<CliResult<Vec<usize>>>()?;
    Ok(catalog::catalog_graph(name, &params)?)
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load(src: &GraphSource) -> CliResult<Graph> {
    match (&src.catalog, &src.file) {
        (Some(c), _) => load_catalog(c),
        (None, Some(f)) => Ok(read_edge_list(&read_file(f)?)?),
        (None, None) => Err(Failure::Usage("a graph source is required".into())),
    }
}

fn load_second(src: &SecondSource) -> CliResult<SimpleGraph> {
    match (&src.catalog, &src.file) {
        (Some(c), _) => Ok(load_catalog(c)?.as_simple().clone()),
        (None, Some(f)) => Ok(read_simple_edge_list(&read_file(f)?)?),
        (None, None) => Err(Failure::Usage(
            "a second factor is required (--h-catalog or --h-file)".into(),
        )),
    }
}

fn load_second_connected(src: &SecondSource) -> CliResult<Graph> {
    Ok(Graph::from_simple(load_second(src)?)?)
}

fn one_based(v: usize, flag: &str) -> CliResult<usize> {
    v.checked_sub(1)
        .ok_or_else(|| Failure::Usage(format!("{flag}: vertex labels start at 1")))
}

fn rooted(f: &Factors) -> CliResult<RootedSubset> {
    let g = load(&f.g)?;
    if f.roots.is_empty() {
        return Err(Failure::Usage("--roots is required".into()));
    }
    let roots = f
        .roots
        .iter()
        .map(|&r| one_based(r, "--roots"))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(RootedSubset::new(g, roots)?)
}

fn labels(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| format!("v{}", v + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

fn one_based_list(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

struct Solved {
    dimension: usize,
    basis: Vec<usize>,
    optimal: bool,
}

fn solve(args: &SolveArgs, vertex: bool) -> CliResult<(Graph, Solved)> {
    let g = load(&args.source)?;
    let solved = match args.method {
        Method::Brute => {
            let r = if vertex {
                brute_force_dim_with_cap(&g, &all_vertices(&g), args.cap)?
            } else {
                brute_force_edim_with_cap(&g, &all_edges(&g), args.cap)?
            };
            Solved {
                dimension: r.size,
                basis: r.basis.into_vec(),
                optimal: true,
            }
        }
        Method::Ilp => {
            let timeout = match args.timeout {
                Some(t) if !(t >= 0.0 && t.is_finite()) => {
                    return Err(Failure::Usage(format!("--timeout: invalid value {t}")))
                }
                t => t.map(Duration::from_secs_f64),
            };
            let opts = SolveOptions {
                timeout,
                ..SolveOptions::default()
            };
            let r = if vertex {
                dim_via_ilp_with(&g, &opts)?
            } else {
                edim_via_ilp_with(&g, &opts)?
            };
            Solved {
                dimension: r.optimum,
                optimal: r.optimal,
                basis: r.witness.into_vec(),
            }
        }
    };
    Ok((g, solved))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Ilp => "ilp",
        Method::Brute => "brute",
    }
}

fn cmd_dimension(args: &SolveArgs, vertex: bool, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let (_, s) = solve(args, vertex)?;
    let method = method_name(args.method);
    match format {
        Format::Json => emit(
            out,
            &json!({
                "dimension": s.dimension,
                "basis": one_based_list(&s.basis),
                "method": method,
                "optimal": s.optimal,
            }),
        ),
        Format::Text => emit_text(
            out,
            &format!(
                "dimension: {}\nbasis: [{}]\nmethod: {method}\noptimal: {}\n",
                s.dimension,
                labels(&s.basis),
                s.optimal
            ),
        ),
    }
}

fn cmd_basis(args: &SolveArgs, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let (g, s) = solve(args, false)?;
    let mut rows = Vec::with_capacity(g.m());
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        let r = edge_representation(&g, i, &s.basis)?;
        rows.push((i, x, y, r.0));
    }
    match format {
        Format::Json => {
            let reps: Vec<Value> = rows
                .iter()
                .map(|(i, x, y, r)| json!({"edge": i + 1, "ends": [x + 1, y + 1], "representation": r}))
                .collect();
            emit(
                out,
                &json!({
                    "dimension": s.dimension,
                    "basis": one_based_list(&s.basis),
                    "method": method_name(args.method),
                    "optimal": s.optimal,
                    "representations": reps,
                }),
            )
        }
        Format::Text => {
            let mut text = format!("dimension: {}\nbasis: [{}]\n", s.dimension, labels(&s.basis));
            for (i, x, y, r) in rows {
                let r: Vec<String> = r.iter().map(|d| d.to_string()).collect();
                text.push_str(&format!("e{} v{}v{}: ({})\n", i + 1, x + 1, y + 1, r.join(", ")));
            }
            emit_text(out, &text)
        }
    }
}

fn build_product(kind: ProductKind, f: &Factors) -> CliResult<Graph> {
    Ok(match kind {
        ProductKind::Hier => {
            let gu = rooted(f)?;
            hierarchical_product(&gu, &load_second_connected(&f.h)?)?.into_graph()
        }
        ProductKind::Corona => corona_product(&load(&f.g)?, &load_second(&f.h)?)?.into_graph(),
        ProductKind::BridgeCycle => {
            bridge_cycle_uniform(&load(&f.g)?, one_based(f.root, "--root")?, f.copies)?
        }
    })
}

fn cmd_product(
    kind: ProductKind,
    f: &Factors,
    output: Option<&PathBuf>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<()> {
    let g = build_product(kind, f)?;
    let text = write_edge_list(&g);
    if let Some(path) = output {
        fs::write(path, &text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    }
    match (format, output) {
        (Format::Json, _) => emit(
            out,
            &json!({"n": g.n(), "m": g.m(), "edge_list": text}),
        ),
        (Format::Text, Some(_)) => emit_text(out, &format!("n: {}\nm: {}\n", g.n(), g.m())),
        (Format::Text, None) => emit_text(out, &text),
    }
}

fn bound(name: &str, value: usize, applicable: bool) -> Value {
    json!({"bound_name": name, "value": value, "applicable": applicable})
}

fn cmd_bounds(which: &BoundKind, f: &Factors, check: bool, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let mut bounds = Vec::new();
    let mut extra = serde_json::Map::new();
    let product = if which.hier {
        let gu = rooted(f)?;
        let h = load_second_connected(&f.h)?;
        extra.insert("edim_gu".into(), json!(edim_gu(&gu)?.optimum));
        extra.insert("edim_plus_gu".into(), json!(edim_plus_gu(&gu)?.optimum));
        if gu.roots().len() > 1 {
            bounds.push(bound("upper_bound", hierarchical_upper_bound(&gu, &h)?, true));
        }
        let s = sharp_bound(&gu, &h)?;
        let mut b = bound("sharp_bound", s.value, s.applicable);
        b["applicable_any_witness"] = json!(s.applicable_any_witness);
        b["witness"] = json!(one_based_list(&s.witness));
        bounds.push(b);
        if gu.roots().len() == 1 {
            let u = gu.roots()[0];
            let ok = !is_rooted_path(gu.graph(), u)? && h.n() >= 2;
            let value = if ok { single_root_edim(gu.graph(), u, &h)? } else { 0 };
            bounds.push(bound("single_root_exact", value, ok));
        }
        hierarchical_product(&gu, &h)?.into_graph()
    } else if which.corona {
        let g = load(&f.g)?;
        let h = load_second(&f.h)?;
        let ok = h.n() >= 2;
        let value = if ok { corona_edim(&g, &h)? } else { 0 };
        bounds.push(bound("corona_exact", value, ok));
        corona_product(&g, &h)?.into_graph()
    } else {
        let g = load(&f.g)?;
        let r = one_based(f.root, "--root")?;
        let bc = bridge_cycle_uniform(&g, r, f.copies)?;
        let ok = !is_rooted_path(&g, r)?;
        let value = if ok { bridge_cycle_edim(&g, r, f.copies)? } else { 0 };
        bounds.push(bound("bridge_cycle_exact", value, ok));
        bc
    };
    if check {
        let r = edim_via_ilp_with(&product, &SolveOptions::default())?;
        extra.insert("product_edim".into(), json!(r.optimum));
    }
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), json!(product.n()));
            obj.insert("m".into(), json!(product.m()));
            obj.extend(extra);
            obj.insert("bounds".into(), Value::Array(bounds));
            emit(out, &Value::Object(obj))
        }
        Format::Text => {
            let mut text = format!("product: n = {}, m = {}\n", product.n(), product.m());
            for (k, v) in &extra {
                text.push_str(&format!("{k}: {v}\n"));
            }
            for b in &bounds {
                text.push_str(&format!(
                    "{}: {} (applicable: {})",
                    b["bound_name"].as_str().unwrap_or_default(),
                    b["value"],
                    b["applicable"]
                ));
                if let Some(any) = b.get("applicable_any_witness") {
                    text.push_str(&format!(", some optimal witness meets roots: {any}"));
                }
                text.push('\n');
            }
            emit_text(out, &text)
        }
    }
}

fn cmd_export(src: &GraphSource, objective: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> CliResult<()> {
    let g = load(src)?;
    let lp = export_lp(&build_edge_instance(&g), objective);
    match output {
        Some(path) => fs::write(path, lp).map_err(|e| Failure::Domain(format!("{}: {e}", path.display()))),
        None => emit_text(out, &lp),
    }
}

fn cmd_verify(seed: u64, format: Format, out: &mut dyn Write) -> CliResult<bool> {
    let checks = verify::run_all(seed)?;
    let ok = checks.iter().all(|c| c.passed);
    match format {
        Format::Json => emit(out, &json!({"passed": ok, "checks": checks}))?,
        Format::Text => {
            let mut text = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
            }
            emit_text(out, &text)?;
        }
    }
    Ok(ok)
}

fn cmd_catalog(format: Format, out: &mut dyn Write) -> CliResult<()> {
    let params = |name: &str| match name {
        "path" => "n >= 1",
        "cycle" => "n >= 3",
        "complete" => "n >= 1",
        "star" => "m >= 1 (K_{1,m}, center v1)",
        "wheel" => "rim n >= 3 (hub v1)",
        _ => "none",
    };
    match format {
        Format::Json => {
            let list: Vec<Value> = catalog::NAMES
                .iter()
                .map(|n| json!({"name": n, "params": params(n)}))
                .collect();
            emit(out, &json!({ "graphs": list }))
        }
        Format::Text => {
            let text: String = catalog::NAMES
                .iter()
                .map(|n| format!("{n:<16} {}\n", params(n)))
                .collect();
            emit_text(out, &text)
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Domain(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, v: &Value) -> CliResult<()> {
    writeln!(out, "{v}").map_err(io_failure)
}

fn emit_text(out: &mut dyn Write, s: &str) -> CliResult<()> {
    out.write_all(s.as_bytes()).map_err(io_failure)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<bool> {
    let fmt = cli.format;
    match &cli.command {
        Command::Edim(a) => cmd_dimension(a, false, fmt, out)?,
        Command::Dim(a) => cmd_dimension(a, true, fmt, out)?,
        Command::Basis(a) => cmd_basis(a, fmt, out)?,
        Command::Product {
            kind,
            factors,
            output,
        } => cmd_product(*kind, factors, output.as_ref(), fmt, out)?,
        Command::Bounds {
            which,
            factors,
            check,
        } => cmd_bounds(which, factors, *check, fmt, out)?,
        Command::ExportLp {
            source,
            objective,
            output,
        } => cmd_export(source, objective, output.as_ref(), out)?,
        Command::Verify { seed } => return cmd_verify(*seed, fmt, out),
        Command::Catalog => cmd_catalog(fmt, out)?,
    }
    Ok(true)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}
