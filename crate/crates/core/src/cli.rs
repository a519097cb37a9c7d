//! Command-line surface. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 usage or input
//! error, 3 resource limit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::circulation::{census_dp, census_enumerate};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::analysis::{best_hamilton_path, is_complete};
use crate::graph::{build_family, FamilySpec, Graph};
use crate::invariants::{
    alon_tarsi_number, chain_check, chromatic_number, coloring_number, find_bad_assignment, is_k_choosable,
    list_chromatic_number, paint_number, Bounds,
};
use crate::io::{eval_expr, graph6_encode, parse_expr, GraphExpr, Report};
use crate::orientation::{orient_thm21, orient_thm24, orient_thm25, orient_thm26, FactorKind, Orientation};
use crate::verify::{run_suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "at-lab", version, about = "Alon-Tarsi numbers, circulation censuses and list-coloring invariants")]
struct Cli {
    /// Wrap JSON output in a report with the command line, inputs, seed and version.
    #[arg(long, global = true)]
    envelope: bool,

    #[command(flatten)]
    limits: LimitArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Largest arc count for subset enumeration (at most 64).
    #[arg(long, global = true)]
    enum_arcs: Option<usize>,
    /// Largest table for the circulation DP.
    #[arg(long, global = true)]
    dp_states: Option<usize>,
    /// Largest table while expanding the graph polynomial.
    #[arg(long, global = true)]
    coeff_states: Option<usize>,
    /// Vertex limit for brute-force 2-choosability.
    #[arg(long, global = true)]
    choosable2_vertices: Option<usize>,
    /// Vertex limit for brute-force k-choosability, k >= 3.
    #[arg(long, global = true)]
    choosable_vertices: Option<usize>,
    /// Vertex limit for the painting game.
    #[arg(long, global = true)]
    paint_vertices: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            enumeration_arcs: self.enum_arcs.unwrap_or(d.enumeration_arcs),
            dp_states: self.dp_states.unwrap_or(d.dp_states),
            coeff_states: self.coeff_states.unwrap_or(d.coeff_states),
            choosable_k2_vertices: self.choosable2_vertices.unwrap_or(d.choosable_k2_vertices),
            choosable_vertices: self.choosable_vertices.unwrap_or(d.choosable_vertices),
            paint_vertices: self.paint_vertices.unwrap_or(d.paint_vertices),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a graph expression and print it.
    Graph {
        expr: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Compute invariants: chi, col, chi_list, choosable:K, paint, at, or all.
    Invariant {
        expr: String,
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Even/odd circulation census of a constructed or stored orientation.
    Census {
        expr: String,
        /// thm21:K,N | thm24 | thm25 | thm26 | file:PATH
        #[arg(long)]
        orient: String,
        /// Vertex blocks for thm25/thm26, 1-based: "1,2,3;4,5,6".
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        /// Also write the orientation as JSON to this path.
        #[arg(long)]
        orientation_out: Option<String>,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Extra key=value parameters, comma separated.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        report: ReportFormat,
    },
    /// List-coloring bounds for G x H.
    Bounds { g: String, h: String },
    /// Search for an uncolorable K-list assignment.
    SearchBad {
        expr: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Graph6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Engine {
    Auto,
    Enumerate,
    Dp,
}

enum Output {
    Json(Value),
    Text(String),
}

struct Outcome {
    output: Output,
    code: i32,
    inputs: Value,
    seed: Option<u64>,
}

impl Outcome {
    fn json(output: Value, inputs: Value) -> Self {
        Outcome {
            output: Output::Json(output),
            code: EXIT_OK,
            inputs,
            seed: None,
        }
    }
}

fn threads_from_env() {
    if let Some(n) = std::env::var("AT_LAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // the pool can only be set once per process; later calls keep it
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Entry point shared by the binary and the tests.
pub fn cli_main<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    threads_from_env();
    let limits = cli.limits.limits();
    let outcome = match run(&cli.command, &limits) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if e.is_resource() { EXIT_RESOURCE } else { EXIT_USAGE };
        }
    };
    let text = match outcome.output {
        Output::Text(t) => t,
        Output::Json(v) => {
            let v = if cli.envelope {
                let command = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
                serde_json::to_value(Report::new(command, outcome.inputs, v, outcome.seed)).expect("report")
            } else {
                v
            };
            let mut s = serde_json::to_string_pretty(&v).expect("json output");
            s.push('\n');
            s
        }
    };
    if let Err(e) = stdout.write_all(text.as_bytes()) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn graph_of(text: &str) -> Result<Graph> {
    eval_expr(&parse_expr(text)?)
}

fn run(cmd: &Command, limits: &Limits) -> Result<Outcome> {
    match cmd {
        Command::Graph { expr, out, format } => {
            let g = graph_of(expr)?;
            let bytes = match format {
                GraphFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&g)?;
                    s.push('\n');
                    s.into_bytes()
                }
                GraphFormat::Graph6 => {
                    let mut b = graph6_encode(&g);
                    b.push(b'\n');
                    b
                }
            };
            let inputs = json!({"expr": expr});
            match out {
                Some(path) => {
                    std::fs::write(path, &bytes)?;
                    Ok(Outcome::json(
                        json!({"written": path, "n": g.vertex_count(), "m": g.edge_count()}),
                        inputs,
                    ))
                }
                None => match format {
                    GraphFormat::Json => Ok(Outcome::json(serde_json::to_value(&g)?, inputs)),
                    GraphFormat::Graph6 => Ok(Outcome {
                        output: Output::Text(String::from_utf8(bytes).expect("graph6 is ascii")),
                        code: EXIT_OK,
                        inputs,
                        seed: None,
                    }),
                },
            }
        }
        Command::Invariant { expr, which, seed } => {
            let g = graph_of(expr)?;
            let output = invariants(&g, which, limits)?;
            Ok(Outcome {
                seed: *seed,
                ..Outcome::json(output, json!({"expr": expr, "which": which}))
            })
        }
        Command::Census {
            expr,
            orient,
            blocks,
            engine,
            orientation_out,
        } => {
            let d = orientation_for(expr, orient, blocks.as_deref())?;
            if let Some(path) = orientation_out {
                std::fs::write(path, serde_json::to_string_pretty(&d)?)?;
            }
            let use_dp = match engine {
                Engine::Auto => d.arc_count() > limits.enumeration_arcs,
                Engine::Enumerate => false,
                Engine::Dp => true,
            };
            let output = if use_dp {
                json!({"diff_magnitude": census_dp(&d, limits)?.magnitude().to_string()})
            } else {
                serde_json::to_value(census_enumerate(&d, limits)?)?
            };
            Ok(Outcome::json(output, json!({"expr": expr, "orient": orient, "blocks": blocks})))
        }
        Command::Verify {
            suite,
            k_max,
            n_max,
            params,
            seed,
            report,
        } => {
            let mut p = match params {
                Some(text) => SuiteParams::parse(text)?,
                None => SuiteParams::default(),
            };
            if let Some(k) = k_max {
                p.set("k_max", k);
            }
            if let Some(n) = n_max {
                p.set("n_max", n);
            }
            if let Some(s) = seed {
                p.set("seed", s);
            }
            let result = run_suite(suite, &p, limits)?;
            let code = if result.passed() { EXIT_OK } else { EXIT_SUITE_FAILED };
            let output = match report {
                ReportFormat::Json => Output::Json(serde_json::to_value(&result)?),
                ReportFormat::Csv => Output::Text(result.to_csv()?),
            };
            Ok(Outcome {
                output,
                code,
                inputs: json!({"suite": suite, "params": p.0}),
                seed: *seed,
            })
        }
        Command::Bounds { g, h } => {
            let (gg, hh) = (graph_of(g)?, graph_of(h)?);
            let (chi_l_g, chi_l_h) = (list_chromatic_number(&gg, limits)?, list_chromatic_number(&hh, limits)?);
            let (col_g, col_h) = (coloring_number(&gg), coloring_number(&hh));
            let bounds = Bounds {
                borowiecki: Some(crate::invariants::borowiecki(chi_l_g, col_g, chi_l_h, col_h)),
                delta_sum: Some(crate::invariants::bound_delta_sum(&gg, &hh)),
            };
            let mut out = serde_json::to_value(bounds)?;
            let obj = out.as_object_mut().expect("object");
            obj.insert("chi_list_g".into(), json!(chi_l_g));
            obj.insert("col_g".into(), json!(col_g));
            obj.insert("chi_list_h".into(), json!(chi_l_h));
            obj.insert("col_h".into(), json!(col_h));
            Ok(Outcome::json(out, json!({"g": g, "h": h})))
        }
        Command::SearchBad { expr, k, budget, seed } => {
            let g = graph_of(expr)?;
            let found = find_bad_assignment(&g, *k, *budget, *seed);
            let status = if found.witness.is_some() { "found" } else { "inconclusive" };
            let output = json!({
                "k": k,
                "status": status,
                "witness": found.witness,
                "evaluations": found.evaluations,
                "restarts": found.restarts,
            });
            Ok(Outcome {
                seed: Some(*seed),
                ..Outcome::json(output, json!({"expr": expr, "k": k, "budget": budget}))
            })
        }
    }
}

fn invariants(g: &Graph, which: &str, limits: &Limits) -> Result<Value> {
    let mut out = Map::new();
    for item in which.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let value = match item {
            "all" => serde_json::to_value(chain_check(g, limits))?,
            "chi" => json!(chromatic_number(g)),
            "col" => json!(coloring_number(g)),
            "chi_list" => json!(list_chromatic_number(g, limits)?),
            "paint" => json!(paint_number(g, limits)?),
            "at" => json!(alon_tarsi_number(g, limits)?.value),
            other => match other.strip_prefix("choosable:") {
                Some(k) => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::precondition(format!("bad choosability order in {other:?}")))?;
                    json!(is_k_choosable(g, k, limits)?.choosable)
                }
                None => return Err(Error::precondition(format!("unknown invariant {other:?}"))),
            },
        };
        if item == "all" && which.trim() == "all" {
            return Ok(value);
        }
        out.insert(item.to_string(), value);
    }
    Ok(Value::Object(out))
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|b| {
            b.split(',')
                .map(|v| match v.trim().parse::<usize>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(Error::precondition(format!("bad block vertex {v:?} (1-based)"))),
                })
                .collect()
        })
        .collect()
}

fn factors(expr: &str) -> Result<(Graph, Graph)> {
    match parse_expr(expr)? {
        GraphExpr::Product(l, r) => Ok((eval_expr(&l)?, eval_expr(&r)?)),
        _ => Err(Error::precondition("this construction needs a product expression G x H")),
    }
}

fn orientation_for(expr: &str, orient: &str, blocks: Option<&str>) -> Result<Orientation> {
    let (name, arg) = orient.split_once(':').unwrap_or((orient, ""));
    let d = match name {
        "thm21" => {
            let nums: Vec<usize> = arg
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::precondition("expected --orient thm21:K,N"))?;
            let [k, n] = nums[..] else {
                return Err(Error::precondition("expected --orient thm21:K,N"));
            };
            let (d, dstar) = orient_thm21(k, n)?;
            let g = graph_of(expr)?;
            if !d.orients(&g) {
                return Err(Error::precondition(format!(
                    "{expr} is not C({}) x P({n})",
                    2 * k + 1
                )));
            }
            dstar
        }
        "thm24" => {
            let (g, h) = factors(expr)?;
            let kind = if is_complete(&g) { FactorKind::Complete } else { FactorKind::OddCycle };
            let (path, _) = best_hamilton_path(&h).ok_or_else(|| Error::precondition("H has no Hamilton path"))?;
            orient_thm24(&g, kind, &h, &path)?
        }
        "thm25" => {
            let (g, h) = factors(expr)?;
            let k = h.vertex_count();
            if h != build_family(&FamilySpec::Path(k))? {
                return Err(Error::precondition("thm25 needs a path factor P(k) on the right"));
            }
            let blocks = match blocks {
                Some(b) => parse_blocks(b)?,
                None => vec![(0..g.vertex_count()).collect()],
            };
            orient_thm25(&g, &blocks, k)?
        }
        "thm26" => {
            let (g, h) = factors(expr)?;
            let blocks = match blocks {
                Some(b) => parse_blocks(b)?,
                None => vec![(0..g.vertex_count()).collect()],
            };
            let (path, _) = best_hamilton_path(&h).ok_or_else(|| Error::precondition("H has no Hamilton path"))?;
            orient_thm26(&g, &blocks, &h, &path)?
        }
        "file" => {
            let d: Orientation = serde_json::from_slice(&std::fs::read(arg)?)?;
            // an augmented D* orients G once its annotated e* arcs are removed
            let special: Vec<_> = d
                .annotations()
                .map(|a| a.special_arc.into_iter().chain(a.blocks.iter().filter_map(|b| b.special_arc)).collect())
                .unwrap_or_default();
            if !d.without_arcs(&special).orients(&graph_of(expr)?) {
                return Err(Error::precondition(format!("the orientation in {arg} does not orient {expr}")));
            }
            d
        }
        other => return Err(Error::precondition(format!("unknown orientation {other:?}"))),
    };
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["at-lab"];
        full.extend_from_slice(args);
        let code = cli_main(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_out(args: &[&str]) -> Value {
        let (code, out, err) = call(args);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn invariant_example() {
        assert_eq!(json_out(&["invariant", "C(5)", "--which", "chi,at"]), json!({"chi": 3, "at": 3}));
    }

    #[test]
    fn census_example() {
        assert_eq!(
            json_out(&["census", "C(3) x P(2)", "--orient", "thm21:1,2"]),
            json!({"even": 5, "odd": 4})
        );
        let dp = json_out(&["census", "C(3) x P(2)", "--orient", "thm21:1,2", "--engine", "dp"]);
        assert_eq!(dp, json!({"diff_magnitude": "1"}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["graph", "C(2)"]).0, EXIT_USAGE);
        assert_eq!(call(&["graph", "C(5"]).0, EXIT_USAGE);
        assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "nope"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["invariant", "C(5) x P(2)", "--which", "paint"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("limit"));
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn graph6_output() {
        let (code, out, _) = call(&["graph", "C(5)", "--format", "graph6"]);
        assert_eq!(code, 0);
        let expected = String::from_utf8(graph6_encode(&graph_of("C(5)").unwrap())).unwrap();
        assert_eq!(out, expected + "\n");
    }

    #[test]
    fn envelope_wraps_output() {
        let v = json_out(&["--envelope", "invariant", "K(3)", "--which", "chi", "--seed", "7"]);
        let r: Report = serde_json::from_value(v).unwrap();
        assert_eq!(r.outputs, json!({"chi": 3}));
        assert_eq!(r.seed, Some(7));
        assert_eq!(r.command[1], "--envelope");
    }

    #[test]
    fn verify_small_suite() {
        let (code, out, _) = call(&["verify", "thm21", "--k-max", "1", "--n-max", "2", "--report", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("suite,status,param.k,param.n"));
        assert_eq!(out.lines().count(), 3); // header + n = 1, 2
    }
}
