//! Command-line definitions and dispatch.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ramseylab_core::arrowing::{
    equivalence_scan, minimal_ramsey_check, ramsey_number, sample_colorings, verify_determiner, ArrowingVerdict,
    Limits, Method, ScanOutcome,
};
use ramseylab_core::factors::{belck_check, has_k_factor};
use ramseylab_core::families::{
    basic_family, c_gadget, clique_with_pendants, determiner_chain, diameter_distinguisher, factor_extremal_graph,
    hypergraph_blowup, lambda_gadget, petersen, star, suitable_caterpillar, uniform_tree, Basic, DeterminerGadget,
    DistinguisherInputs, RootedGadget,
};
use ramseylab_core::recolor::{star_clique_recolor_traced, woven_recolor};
use ramseylab_core::{Color, Edge, EdgeColoring, Graph};

use crate::error::{exit, CliError};
use crate::parallel::arrows_parallel;
use crate::report::{InputDigest, Report, SCHEMA};
use crate::{coloring, graph6};

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "RAMSEYLAB_SEED";

/// Witness colorings of graphs up to this order are embedded in reports.
pub const INLINE_LIMIT: usize = 62;

#[derive(Debug, Parser)]
#[command(name = "ramseylab", version, about = "Ramsey arrowing, factors and recoloring for tree/clique pairs")]
pub struct Cli {
    /// Seed for randomized operations (overridden by RAMSEYLAB_SEED).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named graph or gadget and print it as graph6.
    Construct(ConstructArgs),
    /// Decide whether F arrows (G, H).
    Arrows(ArrowsArgs),
    /// The least n with K_n → (G, H).
    RamseyNumber(RamseyArgs),
    /// Check that F arrows (G, H) and no proper subgraph does.
    Minimal(MinimalArgs),
    /// Look for a small graph arrowing one pair but not the other.
    EquivScan(ScanArgs),
    /// Find a k-factor.
    Factor(FactorArgs),
    /// Check an odd-component certificate against p-factors.
    Belck(BelckArgs),
    /// Transform a free coloring.
    Recolor(RecolorArgs),
    /// Check the determiner properties of (D, β) for (T, K_t).
    VerifyDeterminer(DeterminerArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub kind: ConstructKind,
    /// Also write the graph6 string to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write the construction's witness coloring here, if it has one.
    #[arg(long, global = true)]
    pub coloring_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    Star {
        #[arg(long)]
        s: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Clique {
        #[arg(long)]
        t: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Petersen,
    /// K_t with a copies of K_b glued at distinct clique vertices.
    CliquePendants {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Spine a-b-c with s leaves at a and c and `mid` leaves at b.
    Caterpillar {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        mid: usize,
    },
    /// Rooted tree of depth i where every inner vertex has k children.
    UniformTree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// Λ_i(T, Γ) with its witness coloring.
    Lambda {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        i: usize,
    },
    /// Γ′ plus two non-adjacent vertices joined to all of it.
    CGadget {
        #[arg(long)]
        gamma_prime: PathBuf,
    },
    /// A graph arrowing (T, K_t) with a (T, K_t·K_2)-free coloring.
    Distinguisher {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        gamma: Option<PathBuf>,
        #[arg(long)]
        gamma_prime: Option<PathBuf>,
        #[arg(long)]
        j: Option<PathBuf>,
    },
    /// r-regular graph with a q-factor and no p-factor.
    FactorExtremal {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
    },
    /// Blow-up of a random t-uniform hypergraph of girth > g.
    Hypergraph {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        min_degree: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u32,
    },
    /// A determiner glued along every edge of a tree.
    DeterminerChain {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        d: PathBuf,
        #[arg(long, value_parser = parse_edge)]
        beta: Edge,
    },
}

#[derive(Debug, Args)]
pub struct ArrowsArgs {
    #[arg(long)]
    pub f: PathBuf,
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub h: PathBuf,
    /// Maximum search nodes (per worker prefix with --jobs).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Draw this many random colorings instead of searching.
    #[arg(long, conflicts_with_all = ["budget", "jobs"])]
    pub sampled: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write the witness coloring here (always done for large graphs).
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RamseyArgs {
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub h: PathBuf,
    #[arg(long)]
    pub cap: usize,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct MinimalArgs {
    #[arg(long)]
    pub f: PathBuf,
    #[arg(long)]
    pub g: PathBuf,
    #[arg(long)]
    pub h: PathBuf,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub g1: PathBuf,
    #[arg(long)]
    pub h1: PathBuf,
    #[arg(long)]
    pub g2: PathBuf,
    #[arg(long)]
    pub h2: PathBuf,
    #[arg(long, default_value_t = 6)]
    pub max_vertices: usize,
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(long)]
    pub k: usize,
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct BelckArgs {
    #[arg(long)]
    pub p: usize,
    /// Comma-separated vertex list (may be empty).
    #[arg(long, value_parser = parse_vertices, default_value = "")]
    pub d: Vertices,
    pub graph: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertices(pub Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecolorMode {
    /// Alternating walks: (K_{1,s}, K_t·K_2)-free to (K_{1,s}, K_t)-free.
    Walk,
    /// Woven pipeline: (G, K_t·aK_b)-free to (G, K_t)-free.
    Woven,
}

#[derive(Debug, Args)]
pub struct RecolorArgs {
    pub mode: RecolorMode,
    /// Star size; G = K_{1,s} unless --g is given.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: usize,
    /// The woven graph G (woven mode only).
    #[arg(long)]
    pub g: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub a: usize,
    #[arg(long, default_value_t = 2)]
    pub b: usize,
    pub f: PathBuf,
    pub coloring: PathBuf,
    /// Where to write the transformed coloring.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeterminerArgs {
    #[arg(long)]
    pub d: PathBuf,
    #[arg(long, value_parser = parse_edge)]
    pub beta: Edge,
    #[arg(long)]
    pub tree: PathBuf,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub budget: Option<u64>,
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let v = parse_vertices(s)?.0;
    match v[..] {
        [a, b] => Ok((a, b)),
        _ => Err("expected two vertices `u,v`".into()),
    }
}

fn parse_vertices(s: &str) -> Result<Vertices, String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|e| format!("bad vertex `{x}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Vertices)
}

/// A finished command: the report and the exit code to use.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub code: u8,
}

struct Ctx {
    inputs: Vec<InputDigest>,
    seed: Option<u64>,
}

impl Ctx {
    fn read(&mut self, role: &str, path: &Path) -> Result<Vec<u8>, CliError> {
        let bytes = fs::read(path).map_err(|source| CliError::Read { path: path.into(), source })?;
        self.inputs.push(InputDigest::new(role, &path.display().to_string(), &bytes));
        Ok(bytes)
    }

    fn graph(&mut self, role: &str, path: &Path) -> Result<Graph, CliError> {
        let bytes = self.read(role, path)?;
        let text = String::from_utf8_lossy(&bytes);
        graph6::decode(&text).map_err(|source| CliError::Graph6 { path: path.into(), source })
    }

    fn coloring(&mut self, role: &str, path: &Path, host: &Graph) -> Result<EdgeColoring, CliError> {
        let bytes = self.read(role, path)?;
        let text = String::from_utf8_lossy(&bytes);
        let parsed = coloring::parse_for(&text, host).map_err(|source| CliError::Coloring { path: path.into(), source })?;
        Ok(parsed?)
    }
}

fn limits(budget: Option<u64>) -> Limits<'static> {
    Limits { budget, stop: None }
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.into(), source })
}

fn edges_json(edges: &[Edge]) -> Value {
    json!(edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

fn coloring_json(c: &EdgeColoring) -> Value {
    json!(c.iter().map(|((u, v), col)| json!([u, v, col.letter().to_string()])).collect::<Vec<_>>())
}

/// Inline for small graphs; otherwise written to `file` (or a name derived
/// from its digest) and referenced.
fn witness_json(c: &EdgeColoring, file: Option<&Path>) -> Result<Value, CliError> {
    let text = coloring::format(c);
    let target = match file {
        Some(p) => Some(p.to_path_buf()),
        None if c.n() > INLINE_LIMIT => {
            Some(PathBuf::from(format!("witness-{}.txt", &crate::report::sha256_hex(text.as_bytes())[..12])))
        }
        None => None,
    };
    if let Some(p) = &target {
        write(p, &text)?;
    }
    Ok(if c.n() <= INLINE_LIMIT {
        json!({ "edges": coloring_json(c), "file": target.map(|p| p.display().to_string()) })
    } else {
        json!({ "file": target.map(|p| p.display().to_string()) })
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Exhaustive => "exhaustive",
        Method::Pruned => "pruned",
        Method::Sampled => "sampled",
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "graph6": graph6::encode(g), "n": g.n(), "m": g.m() })
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let env_seed = match std::env::var(SEED_ENV) {
        Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an integer")))?),
        Err(_) => None,
    };
    let mut ctx = Ctx { inputs: Vec::new(), seed: env_seed.or(cli.seed) };
    let start = Instant::now();
    let (name, verdict, nodes, code) = dispatch(&mut ctx, cli.command)?;
    let report = Report {
        schema: SCHEMA,
        command: name.into(),
        inputs: ctx.inputs,
        verdict,
        nodes_explored: nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed: ctx.seed,
    };
    Ok(Outcome { report, code })
}

type Dispatched = (&'static str, Value, u64, u8);

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<Dispatched, CliError> {
    match command {
        Command::Construct(args) => construct(ctx, args),
        Command::Arrows(args) => {
            let f = ctx.graph("f", &args.f)?;
            let g = ctx.graph("g", &args.g)?;
            let h = ctx.graph("h", &args.h)?;
            let verdict: Option<ArrowingVerdict> = if let Some(samples) = args.sampled {
                let seed = ctx.seed.unwrap_or(0);
                ctx.seed = Some(seed);
                let report = sample_colorings(&f, &g, &h, samples, seed)?;
                match report.verdict() {
                    Some(v) => Some(v),
                    None => {
                        let verdict = json!({ "arrows": null, "method": "sampled", "samples": samples,
                            "note": "no free coloring sampled; sampling cannot establish arrowing" });
                        return Ok(("arrows", verdict, samples, exit::INDETERMINATE));
                    }
                }
            } else {
                if args.jobs == 0 {
                    return Err(CliError::Usage("--jobs must be at least 1".into()));
                }
                Some(arrows_parallel(&f, &g, &h, args.budget, args.jobs)?)
            };
            let v = verdict.expect("decided");
            let witness = match &v.witness {
                Some(w) => witness_json(w, args.witness_out.as_deref())?,
                None => Value::Null,
            };
            let out = json!({ "arrows": v.arrows, "method": method_name(v.method), "witness": witness });
            Ok(("arrows", out, v.nodes_explored, exit::SUCCESS))
        }
        Command::RamseyNumber(args) => {
            let g = ctx.graph("g", &args.g)?;
            let h = ctx.graph("h", &args.h)?;
            let r = ramsey_number(&g, &h, args.cap, limits(args.budget))?;
            Ok(("ramsey-number", json!({ "ramsey_number": r }), 0, exit::SUCCESS))
        }
        Command::Minimal(args) => {
            let f = ctx.graph("f", &args.f)?;
            let g = ctx.graph("g", &args.g)?;
            let h = ctx.graph("h", &args.h)?;
            let arrows = arrows_parallel(&f, &g, &h, args.budget, 1)?;
            let minimal = minimal_ramsey_check(&f, &g, &h, limits(args.budget))?;
            Ok(("minimal", json!({ "arrows": arrows.arrows, "minimal": minimal }), arrows.nodes_explored, exit::SUCCESS))
        }
        Command::EquivScan(args) => {
            let g1 = ctx.graph("g1", &args.g1)?;
            let h1 = ctx.graph("h1", &args.h1)?;
            let g2 = ctx.graph("g2", &args.g2)?;
            let h2 = ctx.graph("h2", &args.h2)?;
            let out = equivalence_scan((&g1, &h1), (&g2, &h2), args.max_vertices, limits(args.budget))?;
            let verdict = match out {
                ScanOutcome::Filtered { reason } => json!({ "outcome": "distinguished-by-theorem", "reason": reason }),
                ScanOutcome::Distinguisher { graph, first_arrows, second_arrows } => json!({
                    "outcome": "distinguisher",
                    "graph": graph_json(&graph),
                    "first_arrows": first_arrows,
                    "second_arrows": second_arrows,
                }),
                ScanOutcome::NoDistinguisherFound { graphs_checked, indeterminate } => json!({
                    "outcome": "no-distinguisher-found",
                    "note": "not a proof of equivalence",
                    "graphs_checked": graphs_checked,
                    "indeterminate": indeterminate.iter().map(graph6::encode).collect::<Vec<_>>(),
                }),
            };
            Ok(("equiv-scan", verdict, 0, exit::SUCCESS))
        }
        Command::Factor(args) => {
            let g = ctx.graph("graph", &args.graph)?;
            let verdict = match has_k_factor(&g, args.k) {
                Some(w) => json!({ "k": args.k, "result": "FOUND", "edges": edges_json(&w.edges) }),
                None => json!({ "k": args.k, "result": "NONE" }),
            };
            Ok(("factor", verdict, 0, exit::SUCCESS))
        }
        Command::Belck(args) => {
            let g = ctx.graph("graph", &args.graph)?;
            let count = {
                let mut d = args.d.0.clone();
                d.sort_unstable();
                d.dedup();
                d
            };
            let cert = belck_check(&g, &args.d.0, args.p)?;
            let odd = ramseylab_core::factors::odd_components(&g, &count);
            let verdict = json!({
                "p": args.p,
                "d": count,
                "odd_components": odd,
                "certificate": cert.is_some(),
                "conclusion": if cert.is_some() { "no p-factor" } else { "inconclusive" },
            });
            Ok(("belck", verdict, 0, exit::SUCCESS))
        }
        Command::Recolor(args) => recolor(ctx, args),
        Command::VerifyDeterminer(args) => {
            let d = ctx.graph("d", &args.d)?;
            let tree = ctx.graph("tree", &args.tree)?;
            let r = verify_determiner(&d, args.beta, &tree, args.t, limits(args.budget))?;
            let verdict = json!({
                "not_arrowing": r.not_arrowing,
                "beta_forced_red": r.beta_forced_red,
                "well_behaved": r.well_behaved,
                "closure_is_clique": r.closure_is_clique,
                "well_behaved_determiner": r.is_well_behaved_determiner(),
            });
            Ok(("verify-determiner", verdict, r.nodes_explored, exit::SUCCESS))
        }
    }
}

fn construct(ctx: &mut Ctx, args: ConstructArgs) -> Result<Dispatched, CliError> {
    let mut extra = json!({});
    let rooted = |g: RootedGadget, extra: &mut Value| {
        extra["root"] = json!(g.root);
        extra["co_root"] = json!(g.co_root);
        (g.graph, g.witness)
    };
    let (graph, witness): (Graph, Option<EdgeColoring>) = match args.kind {
        ConstructKind::Star { s } => (basic_family(Basic::Star(s))?, None),
        ConstructKind::Path { n } => (basic_family(Basic::Path(n))?, None),
        ConstructKind::Clique { t } => (basic_family(Basic::Clique(t))?, None),
        ConstructKind::Cycle { n } => (basic_family(Basic::Cycle(n))?, None),
        ConstructKind::Petersen => (petersen(), None),
        ConstructKind::CliquePendants { t, a, b } => (clique_with_pendants(t, a, b)?, None),
        ConstructKind::Caterpillar { s, mid } => (suitable_caterpillar(s, s, mid, s)?, None),
        ConstructKind::UniformTree { k, i } => rooted(uniform_tree(k, i)?, &mut extra),
        ConstructKind::Lambda { tree, gamma, i } => {
            let tree = ctx.graph("tree", &tree)?;
            let gamma = ctx.graph("gamma", &gamma)?;
            rooted(lambda_gadget(&tree, &gamma, i)?, &mut extra)
        }
        ConstructKind::CGadget { gamma_prime } => {
            let gp = ctx.graph("gamma_prime", &gamma_prime)?;
            rooted(c_gadget(&gp)?, &mut extra)
        }
        ConstructKind::Distinguisher { tree, t, gamma, gamma_prime, j } => {
            let tree = ctx.graph("tree", &tree)?;
            let mut inputs = DistinguisherInputs::default();
            if let Some(p) = gamma {
                inputs.gamma = Some(ctx.graph("gamma", &p)?);
            }
            if let Some(p) = gamma_prime {
                inputs.gamma_prime = Some(ctx.graph("gamma_prime", &p)?);
            }
            if let Some(p) = j {
                inputs.j = Some(ctx.graph("j", &p)?);
            }
            let (g, c) = diameter_distinguisher(&tree, t, &inputs)?;
            (g, Some(c))
        }
        ConstructKind::FactorExtremal { p, q, r } => {
            let (g, trace, cert) = factor_extremal_graph(p, q, r)?;
            extra["hubs"] = json!(trace.hubs);
            extra["hub_clique_size"] = json!(trace.t);
            extra["odd_components"] = json!(cert.odd_component_count);
            extra["stage_g_vertices"] = json!(trace.stage_g.n());
            extra["stage_h_vertices"] = json!(trace.stage_h.n());
            (g, None)
        }
        ConstructKind::Hypergraph { t, g, min_degree, n, trials } => {
            let seed = ctx.seed.unwrap_or(0);
            ctx.seed = Some(seed);
            let (h, f) = hypergraph_blowup(t, g, min_degree, n, trials, seed)?;
            extra["hyperedges"] = json!(h.edges);
            (f, None)
        }
        ConstructKind::DeterminerChain { tree, d, beta } => {
            let tree = ctx.graph("tree", &tree)?;
            let d = ctx.graph("d", &d)?;
            (determiner_chain(&tree, &DeterminerGadget::new(d, beta)?)?, None)
        }
    };
    let g6 = graph6::encode(&graph);
    if let Some(p) = &args.out {
        write(p, &format!("{g6}\n"))?;
    }
    let mut verdict = graph_json(&graph);
    if let Some(c) = &witness {
        verdict["coloring"] = witness_json(c, args.coloring_out.as_deref())?;
    }
    if let Value::Object(map) = extra {
        for (k, v) in map {
            verdict[k] = v;
        }
    }
    Ok(("construct", verdict, 0, exit::SUCCESS))
}

fn recolor(ctx: &mut Ctx, args: RecolorArgs) -> Result<Dispatched, CliError> {
    let f = ctx.graph("f", &args.f)?;
    let c = ctx.coloring("coloring", &args.coloring, &f)?;
    let (out, verdict) = match args.mode {
        RecolorMode::Walk => {
            let s = args.s.ok_or_else(|| CliError::Usage("walk mode needs --s".into()))?;
            let (out, walks) = star_clique_recolor_traced(&f, &c, s, args.t)?;
            let walks: Vec<Value> = walks
                .iter()
                .map(|w| {
                    json!({
                        "start_edge": [w.start_edge.0, w.start_edge.1],
                        "edges": edges_json(&w.edges),
                        "colors_before": w.colors_before.iter().map(|c| c.letter().to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            (out, json!({ "mode": "walk", "steps": walks.len(), "walks": walks }))
        }
        RecolorMode::Woven => {
            let g = match (&args.g, args.s) {
                (Some(p), _) => ctx.graph("g", p)?,
                (None, Some(s)) => star(s),
                (None, None) => return Err(CliError::Usage("woven mode needs --s or --g".into())),
            };
            let (out, trace) = woven_recolor(&f, &c, &g, args.a, args.b, args.t)?;
            let verdict = json!({
                "mode": "woven",
                "family": trace.family,
                "u_sets": trace.u_sets,
                "matching": edges_json(&trace.matching),
                "y_sets": trace.y_sets.iter().map(|y| edges_json(y)).collect::<Vec<_>>(),
                "switched_to_red": trace.matching.len(),
                "switched_to_blue": trace.y_sets.iter().map(Vec::len).sum::<usize>(),
            });
            (out, verdict)
        }
    };
    if let Some(p) = &args.out {
        write(p, &coloring::format(&out))?;
    }
    let mut verdict = verdict;
    verdict["red_edges"] = json!(out.count(Color::Red));
    verdict["coloring"] = witness_json(&out, None)?;
    Ok(("recolor", verdict, 0, exit::SUCCESS))
}
