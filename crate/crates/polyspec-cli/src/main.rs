//! Batch command-line front end: graph exports, spectrum computations with
//! dual-method cross-validation, verification suites, and table exports.
//!
//! Exit codes: 0 success, 1 verification/comparison failure, 2 usage error.

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyspec::fixtures::{A5Scenario, MainScenario};
use polyspec::polytopes::Graph;
use polyspec::report::{
    character_table_json, edge_list_text, graph_adjacency_json, obstruction_json, spectrum_csv,
    spectrum_json, Json,
};
use polyspec::spectra::{
    compare_spectra, spectrum_direct, spectrum_via_blocks, trace_residuals, BlockSpectrum,
    SpectrumMultiset,
};
use polyspec::verify::{a5_tables, all_passed, g1440_tables, run_suite, CheckResult};

#[derive(Parser)]
#[command(
    name = "polyspec",
    about = "Exact constructions and spectra of the 600-cell family",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export a named graph: stats to stdout, edge list to --out.
    Graph(GraphArgs),
    /// Compute an adjacency spectrum directly, via isotypic blocks, or both.
    Spectrum(SpectrumArgs),
    /// Run a verification suite; exit 0 only if every check passes.
    Verify(VerifyArgs),
    /// Export a character table as JSON.
    Chartable(ChartableArgs),
    /// Export the Cayley-obstruction report as JSON.
    Obstruction(OutputArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FixtureName {
    Cell600,
    P720,
    P1440,
    Dodecahedron,
    Icosidodecahedron,
    Truncdodecahedron,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Blocks,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct GraphArgs {
    /// Which graph to export.
    #[arg(value_enum)]
    name: FixtureName,
    /// Stats format on stdout (json includes the adjacency lists).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the edge-list text file here.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Which graph's spectrum to compute.
    #[arg(long, value_enum)]
    fixture: FixtureName,
    /// direct: dense eigensolve; blocks: isotypic decomposition
    /// (p720 and icosidodecahedron only); both: run and compare.
    #[arg(long, value_enum, default_value = "both")]
    method: Method,
    /// Eigenvalue coalescing/comparison tolerance.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Threads for independent irrep blocks (output is identical for any
    /// value).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// identities | chartable | isomorphisms | obstruction | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Threads for independent sub-suites when running "all".
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupName {
    A5,
    Q24,
    G1440,
}

#[derive(Args)]
struct ChartableArgs {
    #[arg(long, value_enum)]
    group: GroupName,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: Option<String>,
}

fn main() -> ExitCode {
    // reserved; no randomized algorithm consumes it today
    let _ = std::env::var("POLYSPEC_SEED");
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

static MAIN: OnceLock<MainScenario> = OnceLock::new();
static A5: OnceLock<A5Scenario> = OnceLock::new();

fn main_scenario() -> &'static MainScenario {
    MAIN.get_or_init(|| MainScenario::build().expect("main scenario"))
}

fn a5_scenario() -> &'static A5Scenario {
    A5.get_or_init(|| A5Scenario::build().expect("A5 scenario"))
}

fn fixture_graph(name: FixtureName) -> &'static Graph {
    match name {
        FixtureName::Cell600 => &main_scenario().cell600,
        FixtureName::P720 => &main_scenario().p720,
        FixtureName::P1440 => &main_scenario().p1440,
        FixtureName::Dodecahedron => &a5_scenario().dodecahedron,
        FixtureName::Icosidodecahedron => &a5_scenario().icosidodecahedron,
        FixtureName::Truncdodecahedron => &a5_scenario().trunc_dodecahedron,
    }
}

/// Write to stdout, treating a closed pipe as a normal early exit.
fn print_out(content: &str) {
    let mut stdout = std::io::stdout().lock();
    let done = stdout
        .write_all(content.as_bytes())
        .and_then(|()| stdout.flush());
    if let Err(e) = done {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing stdout: {e}");
        std::process::exit(2);
    }
}

fn emit(out: &Option<String>, content: &str) -> Result<(), String> {
    match out {
        None => {
            print_out(content);
            Ok(())
        }
        Some(path) => fs::write(path, content).map_err(|e| format!("writing {path}: {e}")),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Graph(args) => {
            let g = fixture_graph(args.name);
            if let Some(path) = &args.out {
                fs::write(path, edge_list_text(g)).map_err(|e| format!("writing {path}: {e}"))?;
            }
            match args.format {
                Format::Json => print_out(&graph_adjacency_json(g).to_string_pretty()),
                Format::Text => {
                    let mut text = format!(
                        "graph {}\nvertices {}\nedges {}\n",
                        g.name(),
                        g.vertex_count(),
                        g.edge_count()
                    );
                    match g.regular_degree() {
                        Some(d) => text.push_str(&format!("regular_degree {d}\n")),
                        None => text.push_str(&format!("degrees {:?}\n", g.degree_histogram())),
                    }
                    text.push_str(&format!("connected {}\n", g.is_connected()));
                    print_out(&text);
                }
                Format::Csv => return Err("graph export has no csv format".into()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Chartable(args) => {
            let json = match args.group {
                GroupName::A5 => {
                    let t = a5_tables(a5_scenario());
                    character_table_json("A5", &t.ct)
                }
                GroupName::Q24 => {
                    let q24 = polyspec::groups::binary_tetrahedral().map_err(|e| e.to_string())?;
                    let cd = polyspec::groups::conjugacy_classes(&q24);
                    let ct = polyspec::groups::character_table(&q24, &cd)
                        .map_err(|e| e.to_string())?;
                    character_table_json("Q24", &ct)
                }
                GroupName::G1440 => {
                    let t = g1440_tables(main_scenario());
                    character_table_json("G1440", &t.ct)
                }
            };
            emit(&args.out, &json.to_string_pretty())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Obstruction(args) => {
            let s = main_scenario();
            let small = polyspec::obstruction::no_cayley_small().map_err(|e| e.to_string())?;
            let sylow =
                polyspec::obstruction::sylow5_structure(&s.q120).map_err(|e| e.to_string())?;
            let iso = polyspec::groups::isometry_permutation_groups(&s.q120)
                .map_err(|e| e.to_string())?;
            let order5 = polyspec::obstruction::order5_fixed_edge_report(&iso.g7200, &s.cell600)
                .map_err(|e| e.to_string())?;
            let json = obstruction_json(
                &small,
                &sylow,
                &order5,
                iso.g7200.order(),
                iso.g14400.order(),
            );
            emit(&args.out, &json.to_string_pretty())?;
            let ok = small.no_cayley
                && sylow.all_conjugates_product_form
                && order5.iter().all(|r| r.fixed_edge_claim_ok());
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// The two fixtures carrying a full Cayley pipeline, with their zero
/// padding (extra dart-space dimensions over the midpoint space).
struct Pipeline {
    direct_graph: &'static Graph,
    padding: usize,
}

fn pipeline(fixture: FixtureName) -> Option<Pipeline> {
    match fixture {
        FixtureName::P720 => Some(Pipeline {
            direct_graph: &main_scenario().p720,
            padding: 720,
        }),
        FixtureName::Icosidodecahedron => Some(Pipeline {
            direct_graph: &a5_scenario().icosidodecahedron,
            padding: 30,
        }),
        _ => None,
    }
}

fn block_spectrum(fixture: FixtureName, tol: f64, jobs: usize) -> Result<BlockSpectrum, String> {
    match fixture {
        FixtureName::P720 => {
            let s = main_scenario();
            let t = g1440_tables(s);
            spectrum_via_blocks(
                &s.g1440,
                &t.cd,
                &t.ct,
                &s.gens.rotations,
                s.gens.special,
                tol,
                jobs,
            )
            .map_err(|e| e.to_string())
        }
        FixtureName::Icosidodecahedron => {
            let s = a5_scenario();
            let t = a5_tables(s);
            spectrum_via_blocks(&s.a5.group, &t.cd, &t.ct, &s.nonspecial, s.ab, tol, jobs)
                .map_err(|e| e.to_string())
        }
        _ => Err("blocks method requires --fixture p720 or icosidodecahedron".into()),
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode, String> {
    if args.tol <= 0.0 {
        return Err("tolerance must be positive".into());
    }
    if args.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let graph = fixture_graph(args.fixture);
    let fixture_name = graph.name().to_string();

    let mut exit = ExitCode::SUCCESS;
    type Comparison = (polyspec::spectra::SpectrumComparison, usize);
    let (label, primary, blocks, comparison): (
        &str,
        SpectrumMultiset,
        Option<BlockSpectrum>,
        Option<Comparison>,
    ) = match args.method {
        Method::Direct => {
            let s = spectrum_direct(graph, args.tol).map_err(|e| e.to_string())?;
            ("direct", s, None, None)
        }
        Method::Blocks => {
            let bs = block_spectrum(args.fixture, args.tol, args.jobs)?;
            ("blocks", bs.spectrum.clone(), Some(bs), None)
        }
        Method::Both => {
            let p = pipeline(args.fixture)
                .ok_or("method both requires --fixture p720 or icosidodecahedron")?;
            let direct = spectrum_direct(p.direct_graph, args.tol).map_err(|e| e.to_string())?;
            let bs = block_spectrum(args.fixture, args.tol, args.jobs)?;
            let cmp = compare_spectra(&direct, &bs.spectrum, p.padding, args.tol);
            if !cmp.ok {
                exit = ExitCode::from(1);
            }
            ("both", direct, Some(bs), Some((cmp, p.padding)))
        }
    };

    // Trace identities hold for any adjacency spectrum; the block surrogate
    // only adds zeros, which change neither power sum.
    let edge_count = match (args.method, pipeline(args.fixture)) {
        (Method::Blocks, Some(p)) => p.direct_graph.edge_count(),
        _ => graph.edge_count(),
    };
    let (t1, t2) = trace_residuals(&primary, edge_count);
    if t1 > 1e-6 || t2 > 1e-6 {
        return Err(format!(
            "trace identities violated: Σλ residual {t1:.3e}, Σλ² residual {t2:.3e}"
        ));
    }

    let content = match args.format {
        Format::Json => {
            let cmp_ref = comparison.as_ref().map(|(c, p)| (c, *p));
            spectrum_json(&fixture_name, label, &primary, blocks.as_ref(), cmp_ref)
                .to_string_pretty()
        }
        Format::Csv => spectrum_csv(&primary),
        Format::Text => {
            let mut s = format!("graph {fixture_name}\nmethod {label}\n");
            for &(v, m) in &primary.entries {
                s.push_str(&format!("{} x{m}\n", polyspec::report::format_float(v)));
            }
            if let Some((cmp, padding)) = &comparison {
                s.push_str(&format!(
                    "comparison {} (padding {padding}): {}\n",
                    if cmp.ok { "pass" } else { "fail" },
                    cmp.detail
                ));
            }
            s
        }
    };
    emit(&args.out, &content)?;
    Ok(exit)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let valid = ["identities", "chartable", "isomorphisms", "obstruction", "all"];
    if !valid.contains(&args.suite.as_str()) {
        return Err(format!(
            "unknown suite '{}'; expected one of {}",
            args.suite,
            valid.join(", ")
        ));
    }
    let main = main_scenario();
    let a5 = a5_scenario();
    let checks: Vec<CheckResult> = if args.suite == "all" && args.jobs > 1 {
        let suites = ["identities", "chartable", "isomorphisms", "obstruction"];
        let mut slots: Vec<Option<Vec<CheckResult>>> = vec![None; suites.len()];
        let counter = std::sync::atomic::AtomicUsize::new(0);
        let slots_ref = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..args.jobs.min(suites.len()) {
                scope.spawn(|| loop {
                    let i = counter.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= suites.len() {
                        break;
                    }
                    let res = run_suite(main, a5, suites[i]).unwrap();
                    slots_ref.lock().unwrap()[i] = Some(res);
                });
            }
        });
        slots.into_iter().flat_map(Option::unwrap).collect()
    } else {
        run_suite(main, a5, &args.suite).unwrap()
    };

    let ok = all_passed(&checks);
    match args.format {
        Format::Json => {
            let items: Vec<Json> = checks
                .iter()
                .map(|c| {
                    Json::obj(vec![
                        ("name", Json::Str(c.name.clone())),
                        ("pass", Json::Bool(c.pass)),
                        ("detail", Json::Str(c.detail.clone())),
                        ("millis", Json::Int(c.millis as i64)),
                    ])
                })
                .collect();
            let summary = Json::obj(vec![
                ("suite", Json::Str(args.suite.clone())),
                ("pass", Json::Bool(ok)),
                ("checks", Json::Arr(items)),
            ]);
            print_out(&summary.to_string_pretty());
        }
        _ => {
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!(
                    "[{}] {} ({} ms): {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.millis,
                    c.detail
                ));
            }
            text.push_str(&format!(
                "suite {}: {}\n",
                args.suite,
                if ok { "PASS" } else { "FAIL" }
            ));
            print_out(&text);
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
