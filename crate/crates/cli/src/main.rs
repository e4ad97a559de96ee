//! `tredkit` — reduce signed directed networks and inspect what they
//! express.
//!
//! Subcommands: `reduce`, `closure`, `parity`, `arborescence`, `lp`,
//! `oracle`, `synth`, `redundancy`, `bench`. Network-producing commands
//! honor `--format {tsv,dot,json}`: `tsv` writes the edge-list text
//! format (loadable back), `dot` writes Graphviz, `json` writes a full
//! run report under schema `tredkit/1`. A one-line run summary goes to
//! standard error unless `--quiet`.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a reduction was
//! re-checked and found not closure-preserving (reachable only with
//! `--verify-off`, which skips the repair pass but never the check).

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use tredkit_core::{
    classify_parity, exact_max_deletions, matching_lower_bound, min_in_arborescence,
    min_out_arborescence, parity_closure, random_sc_graph, seeded_rng, solve, solve_lp_small,
    synthesize, Algorithm, GenConfig, LpVariant, NodeId, Orientation, ParityClass,
    SignedDigraph, SolveOptions,
};

use report::{
    dot_string, dot_triples, sha256_hex, to_json, ArborescenceReport, ClosureReport,
    DeletionsReport, InputInfo, LpReport, LpValue, NetworkInfo, ParityReport, RedundancyReport,
    ReduceReport, SynthReport, TripleInfo, SCHEMA,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Edge-list text (round-trips through load/save).
    Tsv,
    /// Graphviz DOT; inhibitory arcs use `arrowhead=tee`.
    Dot,
    /// Versioned JSON run report.
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Out,
    In,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Objective {
    /// Minimum kept-arc count.
    Arcs,
    /// Minimum kept weight.
    Weight,
    /// Maximum number of deletable arcs.
    Deletions,
}

#[derive(Parser)]
#[command(name = "tredkit", version, about = "Reductions, closures, and diagnostics for signed directed networks")]
struct Cli {
    /// Output format for network-producing commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Suppress the run summary on standard error.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Delete arcs while preserving the (parity) closure.
    Reduce {
        /// Edge-list input file.
        input: PathBuf,
        /// Algorithm: dag, fj, critical2, kry, maxed2, btr, oracle,
        /// oracle-weighted.
        #[arg(long, default_value = "fj")]
        algo: String,
        /// Honor arc labels (consulted by dag and the oracles; btr is
        /// always label-aware, the rest label-blind).
        #[arg(long)]
        label_aware: bool,
        /// Longest cycle length the contraction scheme hunts for first.
        #[arg(long, default_value_t = 12)]
        c: u32,
        /// Skip the repair pass; the raw solver output is still
        /// re-checked and a failed check exits with code 2.
        #[arg(long)]
        verify_off: bool,
    },
    /// Print every reachable (source, target, parity) triple.
    Closure {
        input: PathBuf,
    },
    /// Classify a strongly connected network as single or double parity.
    Parity {
        input: PathBuf,
    },
    /// Exact minimum-weight spanning arborescence.
    Arborescence {
        input: PathBuf,
        /// Root node name.
        #[arg(long)]
        root: String,
        #[arg(long, value_enum, default_value_t = OrientationArg::Out)]
        orientation: OrientationArg,
    },
    /// Solve the cut-covering relaxation in exact arithmetic.
    Lp {
        input: PathBuf,
        /// Constraint family: min-ed, critical, or rooted.
        #[arg(long, default_value = "min-ed")]
        variant: String,
        /// Root node name (required for --variant rooted).
        #[arg(long)]
        root: Option<String>,
    },
    /// Brute-force exact optimum for small instances.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        label_aware: bool,
        #[arg(long, value_enum, default_value_t = Objective::Arcs)]
        objective: Objective,
    },
    /// Build a network from interaction evidence and reduce it.
    Synth {
        /// Evidence file, one statement per line.
        input: PathBuf,
        /// Measure redundancy against the exact oracle instead of the
        /// reduction pipeline (small inputs only).
        #[arg(long)]
        exact: bool,
    },
    /// Redundancy 1 - kept/total under label-aware reduction.
    Redundancy {
        input: PathBuf,
        /// Use the exact oracle instead of the reduction pipeline.
        #[arg(long)]
        exact: bool,
    },
    /// Generate seeded instances and time the reduction algorithms (CSV).
    Bench {
        /// Node count.
        #[arg(long)]
        n: usize,
        /// Target arc count.
        #[arg(long)]
        m: usize,
        /// Comma-separated algorithm list.
        #[arg(long, default_value = "fj,critical2,kry,maxed2,btr")]
        algos: String,
        /// Number of instances to generate.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Probability an arc is inhibitory.
        #[arg(long, default_value_t = 0.2)]
        neg_fraction: f64,
        /// Probability an arc is critical.
        #[arg(long, default_value_t = 0.1)]
        crit_fraction: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Reduce { ref input, ref algo, label_aware, c, verify_off } => {
            let algo = parse_algo(algo)?;
            let opts = SolveOptions {
                label_aware,
                kry_c: c,
                repair: !verify_off,
                ..SolveOptions::default()
            };
            cmd_reduce("reduce", input, algo, &opts, cli.format, cli.quiet)
        }
        Command::Closure { ref input } => cmd_closure(input, cli.format),
        Command::Parity { ref input } => cmd_parity(input, cli.format),
        Command::Arborescence { ref input, ref root, orientation } => {
            cmd_arborescence(input, root, orientation, cli.format, cli.quiet)
        }
        Command::Lp { ref input, ref variant, ref root } => {
            cmd_lp(input, variant, root.as_deref(), cli.format)
        }
        Command::Oracle { ref input, label_aware, objective } => match objective {
            Objective::Arcs => {
                let opts = SolveOptions { label_aware, ..SolveOptions::default() };
                cmd_reduce("oracle", input, Algorithm::Oracle, &opts, cli.format, cli.quiet)
            }
            Objective::Weight => {
                let opts = SolveOptions { label_aware, ..SolveOptions::default() };
                cmd_reduce("oracle", input, Algorithm::OracleWeighted, &opts, cli.format, cli.quiet)
            }
            Objective::Deletions => cmd_max_deletions(input, label_aware, cli.format),
        },
        Command::Synth { ref input, exact } => cmd_synth(input, exact, cli.format, cli.quiet),
        Command::Redundancy { ref input, exact } => cmd_redundancy(input, exact, cli.format),
        Command::Bench { n, m, ref algos, repeats, neg_fraction, crit_fraction } => {
            cmd_bench(n, m, algos, repeats, neg_fraction, crit_fraction, cli.seed)
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<(String, SignedDigraph)> {
    let text = read_input(path)?;
    let g = SignedDigraph::parse_edge_list(&text)
        .with_context(|| format!("cannot parse {}", path.display()))?;
    Ok((text, g))
}

fn parse_algo(name: &str) -> Result<Algorithm> {
    Algorithm::ALL
        .iter()
        .copied()
        .find(|a| a.name() == name)
        .ok_or_else(|| {
            anyhow!(
                "unknown algorithm {name:?} (expected one of: dag, fj, critical2, kry, maxed2, btr, oracle, oracle-weighted)"
            )
        })
}

fn resolve_node(g: &SignedDigraph, name: &str) -> Result<NodeId> {
    g.node_by_name(name)
        .ok_or_else(|| anyhow!("unknown node {name:?}"))
}

fn wall_ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn reject_dot(format: Format, command: &str) -> Result<()> {
    if format == Format::Dot {
        bail!("dot output is not available for {command}");
    }
    Ok(())
}

fn cmd_reduce(
    command: &'static str,
    input: &Path,
    algo: Algorithm,
    opts: &SolveOptions,
    format: Format,
    quiet: bool,
) -> Result<u8> {
    let (text, g) = load_graph(input)?;
    let start = Instant::now();
    let r = solve(&g, algo, opts)?;
    let elapsed = wall_ms(start);
    let matching = matching_lower_bound(&g);
    // What the run actually honored: only the dag and oracle algorithms
    // consult the flag; btr is inherently label-aware, the rest blind.
    let label_aware = match algo {
        Algorithm::Dag | Algorithm::Oracle | Algorithm::OracleWeighted => opts.label_aware,
        Algorithm::Btr => true,
        _ => false,
    };
    let (reduced, _) = g.restrict_arcs(&r.kept).expect("kept set belongs to g");
    match format {
        Format::Tsv => print!("{}", reduced.to_edge_list()),
        Format::Dot => print!("{}", dot_string(&reduced)),
        Format::Json => {
            let report = ReduceReport::new(
                command,
                InputInfo::new(&input.display().to_string(), &text, &g),
                &g,
                &r,
                label_aware,
                matching,
                elapsed,
                &reduced,
            );
            println!("{}", to_json(&report));
        }
    }
    if !quiet {
        eprintln!(
            "{command} {}: algo={} n={} m={} kept={} deleted={} augmented={} bound={} verified={} wall_ms={:.3} sha256={}",
            input.display(),
            r.algorithm,
            g.node_count(),
            g.arc_count(),
            r.stats.kept_count,
            r.stats.total_count - r.stats.kept_count,
            r.augmentations.len(),
            matching,
            r.verified,
            elapsed,
            &sha256_hex(text.as_bytes())[..12],
        );
    }
    Ok(if r.verified { 0 } else { 2 })
}

fn cmd_closure(input: &Path, format: Format) -> Result<u8> {
    let (text, g) = load_graph(input)?;
    let closure = parity_closure(&g);
    let triples = closure.triples();
    match format {
        Format::Tsv => {
            let mut out = String::new();
            for &(u, v, p) in &triples {
                out.push_str(&format!("{}\t{}\t{}\n", g.name(u), g.name(v), p));
            }
            print!("{out}");
        }
        Format::Dot => print!("{}", dot_triples(&g, &triples)),
        Format::Json => {
            let report = ClosureReport {
                schema: SCHEMA,
                command: "closure",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                count: triples.len(),
                triples: triples
                    .iter()
                    .map(|&(u, v, p)| TripleInfo {
                        src: g.name(u).to_string(),
                        dst: g.name(v).to_string(),
                        sign: if p == tredkit_core::Sign::Neg { '-' } else { '+' },
                    })
                    .collect(),
            };
            println!("{}", to_json(&report));
        }
    }
    Ok(0)
}

fn cmd_parity(input: &Path, format: Format) -> Result<u8> {
    reject_dot(format, "parity")?;
    let (text, g) = load_graph(input)?;
    let class = classify_parity(&g)?;
    match format {
        Format::Tsv => match class {
            ParityClass::Single => println!("single"),
            ParityClass::Double { witness } => println!("double\t{}", g.name(witness)),
        },
        Format::Json => {
            let (name, witness) = match class {
                ParityClass::Single => ("single", None),
                ParityClass::Double { witness } => ("double", Some(g.name(witness).to_string())),
            };
            let report = ParityReport {
                schema: SCHEMA,
                command: "parity",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                class: name,
                witness,
            };
            println!("{}", to_json(&report));
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(0)
}

fn cmd_arborescence(
    input: &Path,
    root: &str,
    orientation: OrientationArg,
    format: Format,
    quiet: bool,
) -> Result<u8> {
    let (text, g) = load_graph(input)?;
    let root_id = resolve_node(&g, root)?;
    let arb = match orientation {
        OrientationArg::Out => min_out_arborescence(&g, root_id)?,
        OrientationArg::In => min_in_arborescence(&g, root_id)?,
    };
    let orient_name = match arb.orientation {
        Orientation::Out => "out",
        Orientation::In => "in",
    };
    let kept = tredkit_core::ArcSet::from_ids(g.arc_count(), arb.arcs.iter().copied());
    let (tree, _) = g.restrict_arcs(&kept).expect("arborescence arcs belong to g");
    match format {
        Format::Tsv => {
            print!("{}", tree.to_edge_list());
            println!("# total_weight {}", arb.total_weight);
        }
        Format::Dot => print!("{}", dot_string(&tree)),
        Format::Json => {
            let report = ArborescenceReport {
                schema: SCHEMA,
                command: "arborescence",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                root: root.to_string(),
                orientation: orient_name,
                weight: arb.total_weight.to_string(),
                arc_count: arb.arcs.len(),
                network: NetworkInfo::new(&tree),
            };
            println!("{}", to_json(&report));
        }
    }
    if !quiet {
        eprintln!(
            "arborescence {}: root={root} orientation={orient_name} arcs={} weight={}",
            input.display(),
            arb.arcs.len(),
            arb.total_weight,
        );
    }
    Ok(0)
}

fn cmd_lp(input: &Path, variant: &str, root: Option<&str>, format: Format) -> Result<u8> {
    reject_dot(format, "lp")?;
    let (text, g) = load_graph(input)?;
    let lp_variant = match variant {
        "min-ed" => LpVariant::MinEd,
        "critical" => LpVariant::Critical,
        "rooted" => {
            let name = root.ok_or_else(|| anyhow!("--variant rooted requires --root"))?;
            LpVariant::Rooted { root: resolve_node(&g, name)? }
        }
        other => bail!("unknown LP variant {other:?} (expected min-ed, critical, or rooted)"),
    };
    let sol = solve_lp_small(&g, lp_variant)?;
    let integral = sol.arc_values.iter().all(|q| q.is_integer());
    match format {
        Format::Tsv => {
            println!("objective\t{}", sol.value);
            println!("integral\t{integral}");
            println!("constraints\t{}", sol.constraint_count);
            for (id, q) in g.arc_ids().zip(&sol.arc_values) {
                let a = g.arc(id);
                println!("x\t{}\t{}\t{}\t{}", g.name(a.src), g.name(a.dst), a.label, q);
            }
        }
        Format::Json => {
            let report = LpReport {
                schema: SCHEMA,
                command: "lp",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                variant: variant.to_string(),
                objective: sol.value.to_string(),
                objective_f64: sol.value_f64(),
                integral,
                constraints: sol.constraint_count,
                x: g
                    .arc_ids()
                    .zip(&sol.arc_values)
                    .map(|(id, q)| {
                        let a = g.arc(id);
                        LpValue {
                            src: g.name(a.src).to_string(),
                            dst: g.name(a.dst).to_string(),
                            sign: if a.label == tredkit_core::Sign::Neg { '-' } else { '+' },
                            value: q.to_string(),
                        }
                    })
                    .collect(),
            };
            println!("{}", to_json(&report));
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(0)
}

fn cmd_max_deletions(input: &Path, label_aware: bool, format: Format) -> Result<u8> {
    reject_dot(format, "oracle --objective deletions")?;
    let (text, g) = load_graph(input)?;
    let start = Instant::now();
    let deletions = exact_max_deletions(&g, label_aware)?;
    let elapsed = wall_ms(start);
    match format {
        Format::Tsv => println!("max_deletions\t{deletions}"),
        Format::Json => {
            let report = DeletionsReport {
                schema: SCHEMA,
                command: "oracle",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                label_aware,
                max_deletions: deletions,
                wall_ms: elapsed,
            };
            println!("{}", to_json(&report));
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(0)
}

fn cmd_synth(input: &Path, exact: bool, format: Format, quiet: bool) -> Result<u8> {
    let text = read_input(input)?;
    let start = Instant::now();
    let out = synthesize(&text).with_context(|| format!("cannot synthesize {}", input.display()))?;
    let (redundancy, method) = if exact {
        (tredkit_core::redundancy_exact(&out.graph)?, "oracle")
    } else {
        (out.redundancy, "pipeline")
    };
    let elapsed = wall_ms(start);
    match format {
        Format::Tsv => print!("{}", out.reduced.to_edge_list()),
        Format::Dot => print!("{}", dot_string(&out.reduced)),
        Format::Json => {
            let report = SynthReport {
                schema: SCHEMA,
                command: "synth",
                input: InputInfo::new(&input.display().to_string(), &text, &out.graph),
                statements: out.evidence.len(),
                nodes: out.graph.node_count(),
                arcs: out.graph.arc_count(),
                pseudonodes: out
                    .pseudonodes
                    .iter()
                    .map(|p| out.graph.name(p.id).to_string())
                    .collect(),
                kept: out.result.stats.kept_count,
                deleted: out.result.stats.total_count - out.result.stats.kept_count,
                redundancy,
                redundancy_method: method,
                stranded: out.stranded.iter().map(|&v| out.graph.name(v).to_string()).collect(),
                warnings: out.warnings.clone(),
                verified: out.result.verified,
                wall_ms: elapsed,
                network: NetworkInfo::new(&out.reduced),
            };
            println!("{}", to_json(&report));
        }
    }
    if !quiet {
        for w in &out.warnings {
            eprintln!("warning: {w}");
        }
        eprintln!(
            "synth {}: statements={} nodes={} arcs={} pseudonodes={} kept={} R={:.4} verified={} wall_ms={:.3}",
            input.display(),
            out.evidence.len(),
            out.graph.node_count(),
            out.graph.arc_count(),
            out.pseudonodes.len(),
            out.result.stats.kept_count,
            redundancy,
            out.result.verified,
            elapsed,
        );
    }
    Ok(if out.result.verified { 0 } else { 2 })
}

fn cmd_redundancy(input: &Path, exact: bool, format: Format) -> Result<u8> {
    reject_dot(format, "redundancy")?;
    let (text, g) = load_graph(input)?;
    let r = if exact {
        tredkit_core::exact_min(&g, true)?
    } else {
        tredkit_core::best_reduction(&g)?
    };
    let redundancy = r
        .stats
        .redundancy
        .ok_or_else(|| anyhow!("empty graph has no redundancy measure"))?;
    match format {
        Format::Tsv => {
            println!("redundancy\t{redundancy}");
            println!("kept\t{}", r.stats.kept_count);
            println!("total\t{}", r.stats.total_count);
            println!("algorithm\t{}", r.algorithm);
        }
        Format::Json => {
            let report = RedundancyReport {
                schema: SCHEMA,
                command: "redundancy",
                input: InputInfo::new(&input.display().to_string(), &text, &g),
                redundancy,
                kept: r.stats.kept_count,
                total: r.stats.total_count,
                algorithm: r.algorithm.to_string(),
            };
            println!("{}", to_json(&report));
        }
        Format::Dot => unreachable!("rejected above"),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    n: usize,
    m: usize,
    algos: &str,
    repeats: usize,
    neg_fraction: f64,
    crit_fraction: f64,
    seed: u64,
) -> Result<u8> {
    if n == 0 || m == 0 || repeats == 0 {
        bail!("--n, --m, and --repeats must be positive");
    }
    if !(0.0..=1.0).contains(&neg_fraction) || !(0.0..=1.0).contains(&crit_fraction) {
        bail!("fractions must lie in [0, 1]");
    }
    let algos: Vec<Algorithm> = algos
        .split(',')
        .map(|t| parse_algo(t.trim()))
        .collect::<Result<_>>()?;
    if algos.is_empty() {
        bail!("--algos must name at least one algorithm");
    }
    let mut cfg = GenConfig::new(n, m);
    cfg.neg_fraction = neg_fraction;
    cfg.crit_fraction = crit_fraction;
    let mut rng = seeded_rng(seed);
    println!("algo,instance,n,m,kept,wall_ms,ratio_vs_best_bound");
    for instance in 0..repeats {
        let g = random_sc_graph(&mut rng, &cfg);
        let bound = matching_lower_bound(&g).max(1);
        for &algo in &algos {
            let start = Instant::now();
            let r = solve(&g, algo, &SolveOptions::default())
                .with_context(|| format!("{} failed on instance {instance}", algo.name()))?;
            let elapsed = wall_ms(start);
            println!(
                "{},{},{},{},{},{:.3},{:.4}",
                algo.name(),
                instance,
                g.node_count(),
                g.arc_count(),
                r.stats.kept_count,
                elapsed,
                r.stats.kept_count as f64 / bound as f64,
            );
        }
    }
    Ok(0)
}
