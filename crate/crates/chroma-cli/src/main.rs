//! Command line front end. Subcommands map one-to-one onto the library's
//! top-level operations; all machine output is JSON, `--format text` swaps
//! in the human rendering. Log level comes from RUST_LOG.
//!
//! Exit codes: 0 success, 1 internal invariant failure (or a verification
//! counterexample), 2 unreadable or unparsable input, 3 input outside an
//! operation's domain, 4 construction not supported for the parameters,
//! 5 resource cap hit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chroma::bridge::BridgeReport;
use chroma::efl::EflInstance;
use chroma::graph::{parse_dimacs, parse_edge_list, parse_graph_auto, Graph};
use chroma::ideal::MonomialIdeal;
use chroma::json::{
    cover_from_json, ideal_from_json, instance_from_json, ColoringJson, DecompositionJson,
    IdealJson, InstanceJson,
};
use chroma::multiplicity::Multiplicity;
use chroma::verify::{run_verify, VerifyOptions};
use chroma::{Caps, Error, Result};

mod render;

#[derive(Parser)]
#[command(name = "chroma", version, about = "Graph coloring through monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output rendering
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Variable cap for exhaustive realization and coloring checks
    #[arg(long, global = true, default_value_t = chroma::DEFAULT_VAR_CAP)]
    cap_vars: usize,

    /// Generator cap for the signed subset expansion
    #[arg(long, global = true, default_value_t = chroma::DEFAULT_SUBSET_CAP)]
    cap_subsets: usize,

    /// Vertex cap for chromatic polynomials
    #[arg(long, global = true, default_value_t = chroma::DEFAULT_POLY_CAP)]
    cap_poly: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// DIMACS when the first significant line is a comment or problem line
    Auto,
    EdgeList,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertex-generator ideal of a graph
    Ideal {
        /// Graph file, edge list or DIMACS .col
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
    },
    /// Chromatic number, multiplicity, and polynomial value for a graph
    Report {
        /// Graph file, edge list or DIMACS .col
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
        /// Clique cover JSON certifying the clique-union hypothesis
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Cross-check the identities on random graphs and clique unions
    Verify {
        /// Largest sampled vertex count
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Generate or load a clique-union instance and color it with k colors
    ColorEfl {
        /// Clique size
        #[arg(long, conflicts_with = "instance")]
        k: Option<u32>,
        #[arg(long, requires = "k", conflicts_with = "instance")]
        num_cliques: Option<u32>,
        /// Clique pairs to share a vertex: "1-2,1-3" or "all"
        #[arg(long, requires = "num_cliques", conflicts_with = "instance")]
        pairs: Option<String>,
        /// Label shuffle seed for generated instances
        #[arg(long, default_value_t = 0, conflicts_with = "instance")]
        seed: u64,
        /// Instance JSON file to load instead of generating
        #[arg(long)]
        instance: Option<PathBuf>,
    },
    /// Multiplicity of a monomial ideal (ideal JSON file)
    Mult {
        ideal: PathBuf,
        /// Run every method even where its hypotheses fail and report all
        /// results without asserting agreement
        #[arg(long)]
        experimental_compare: bool,
    },
}

/// Strict multiplicity output: the decomposition exists and the methods
/// that ran agree.
#[derive(Serialize)]
struct MultOutput {
    codimension: usize,
    decomposition: DecompositionJson,
    multiplicity: Multiplicity,
    by_method: chroma::bridge::MultiplicityByMethod,
}

#[derive(Serialize)]
struct MethodOutcome {
    value: Option<Multiplicity>,
    error: Option<String>,
}

impl MethodOutcome {
    fn from(r: Result<Multiplicity>) -> MethodOutcome {
        match r {
            Ok(v) => MethodOutcome {
                value: Some(v),
                error: None,
            },
            Err(e) => MethodOutcome {
                value: None,
                error: Some(e.to_string()),
            },
        }
    }
}

/// Experimental comparison: every method's result or refusal, equality
/// observed but never asserted.
#[derive(Serialize)]
struct CompareOutput {
    codimension: usize,
    dominant: bool,
    decomposition: Option<DecompositionJson>,
    realizations: MethodOutcome,
    inclusion_exclusion: MethodOutcome,
    recursive: MethodOutcome,
    /// None when fewer than two methods produced values
    agreement: Option<bool>,
}

#[derive(Serialize)]
struct ColorEflOutput {
    instance: InstanceJson,
    coloring: ColoringJson,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let caps = Caps {
        max_vars: cli.cap_vars,
        max_subsets: cli.cap_subsets,
        max_poly_vertices: cli.cap_poly,
    };
    match run(&cli, &caps) {
        Ok((text, code)) => match &cli.output {
            None => {
                print!("{text}");
                ExitCode::from(code)
            }
            Some(path) => match fs::write(path, &text) {
                Ok(()) => ExitCode::from(code),
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Malformed(_) => 2,
        Error::SubsetCap { .. } | Error::SizeCap { .. } => 5,
        Error::Unsupported(_) | Error::EvenCaseImpossible { .. } => 4,
        Error::Invariant(_) | Error::Overflow(_) | Error::RegistryMismatch => 1,
        _ => 3,
    }
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path, format: InputFormat) -> Result<Graph> {
    let text = read_input(path)?;
    match format {
        InputFormat::Auto => parse_graph_auto(&text),
        InputFormat::EdgeList => parse_edge_list(&text),
        InputFormat::Dimacs => parse_dimacs(&text),
    }
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

/// Shared-pair specs: "all", "", or comma-separated "A-B" items.
fn parse_pairs(spec: &str, num_cliques: u32) -> Result<Vec<(u32, u32)>> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("all") {
        let mut out = Vec::new();
        for a in 1..=num_cliques {
            for b in a + 1..=num_cliques {
                out.push((a, b));
            }
        }
        return Ok(out);
    }
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|item| {
            let item = item.trim();
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::Malformed(format!("pair {item:?} is not of the form A-B")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Malformed(format!("pair {item:?} has a non-numeric end")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn run(cli: &Cli, caps: &Caps) -> Result<(String, u8)> {
    caps.validate()?;
    log::debug!(
        "caps: vars {}, subsets {}, poly {}",
        caps.max_vars,
        caps.max_subsets,
        caps.max_poly_vertices
    );
    match &cli.command {
        Command::Ideal {
            graph,
            input_format,
        } => {
            let g = load_graph(graph, *input_format)?;
            let m = g.chromatic_ideal()?;
            let text = match cli.format {
                Format::Json => pretty(&IdealJson::from_ideal(&m))?,
                Format::Text => render::ideal_text(&m),
            };
            Ok((text, 0))
        }
        Command::Report {
            graph,
            input_format,
            cover,
        } => {
            let g = load_graph(graph, *input_format)?;
            let cover = match cover {
                Some(path) => Some(cover_from_json(&read_input(path)?)?),
                None => None,
            };
            let report = BridgeReport::compute(&g, cover, caps)?;
            let text = match cli.format {
                Format::Json => pretty(&report)?,
                Format::Text => render::report_text(&report),
            };
            Ok((text, 0))
        }
        Command::Verify {
            max_n,
            trials,
            seed,
        } => {
            let summary = run_verify(&VerifyOptions {
                max_n: *max_n,
                trials: *trials,
                seed: *seed,
                caps: *caps,
            })?;
            let text = match cli.format {
                Format::Json => pretty(&summary)?,
                Format::Text => summary.render_text(),
            };
            Ok((text, if summary.passed() { 0 } else { 1 }))
        }
        Command::ColorEfl {
            k,
            num_cliques,
            pairs,
            seed,
            instance,
        } => {
            let inst = match (instance, k) {
                (Some(path), None) => instance_from_json(&read_input(path)?)?,
                (None, Some(k)) => {
                    let s = num_cliques.ok_or_else(|| {
                        Error::Precondition("--num-cliques is required with --k".into())
                    })?;
                    let pairs = parse_pairs(pairs.as_deref().unwrap_or(""), s)?;
                    EflInstance::generate(*k, s, &pairs, *seed)?
                }
                _ => {
                    return Err(Error::Precondition(
                        "pass either --instance FILE or --k K --num-cliques S".into(),
                    ))
                }
            };
            let coloring = inst.color()?;
            let out = ColorEflOutput {
                instance: InstanceJson::from_instance(&inst),
                coloring: ColoringJson::from_coloring(&coloring, inst.graph())?,
            };
            let text = match cli.format {
                Format::Json => pretty(&out)?,
                Format::Text => render::color_text(&out),
            };
            Ok((text, 0))
        }
        Command::Mult {
            ideal,
            experimental_compare,
        } => {
            let m = ideal_from_json(&read_input(ideal)?)?;
            let text = if *experimental_compare {
                let out = compare_methods(&m, caps)?;
                match cli.format {
                    Format::Json => pretty(&out)?,
                    Format::Text => render::compare_text(&out),
                }
            } else {
                let out = strict_mult(&m, caps)?;
                match cli.format {
                    Format::Json => pretty(&out)?,
                    Format::Text => render::mult_text(&out),
                }
            };
            Ok((text, 0))
        }
    }
}

fn strict_mult(m: &MonomialIdeal, caps: &Caps) -> Result<MultOutput> {
    let codimension = m.codimension()?;
    let d = m
        .find_ci_decomposition(None)?
        .ok_or(Error::NoCompleteIntersection { codim: codimension })?;
    let (multiplicity, by_method) = chroma::bridge::multiplicity_with_cross_check(m, &d, caps)?;
    Ok(MultOutput {
        codimension,
        decomposition: DecompositionJson::from_decomposition(&d),
        multiplicity,
        by_method,
    })
}

fn compare_methods(m: &MonomialIdeal, caps: &Caps) -> Result<CompareOutput> {
    let codimension = m.codimension()?;
    let d = m.find_ci_decomposition(None)?;
    let realizations = MethodOutcome::from(m.multiplicity_by_realizations());
    let inclusion_exclusion = MethodOutcome::from(match &d {
        Some(d) => m.multiplicity_by_inclusion_exclusion(d, caps.max_subsets),
        None => Err(Error::NoCompleteIntersection { codim: codimension }),
    });
    let recursive = MethodOutcome::from(m.multiplicity_recursive());
    let values: Vec<Multiplicity> = [&realizations, &inclusion_exclusion, &recursive]
        .iter()
        .filter_map(|o| o.value)
        .collect();
    let agreement = if values.len() < 2 {
        None
    } else {
        Some(values.windows(2).all(|w| w[0] == w[1]))
    };
    Ok(CompareOutput {
        codimension,
        dominant: m.is_dominant(),
        decomposition: d.as_ref().map(DecompositionJson::from_decomposition),
        realizations,
        inclusion_exclusion,
        recursive,
        agreement,
    })
}
