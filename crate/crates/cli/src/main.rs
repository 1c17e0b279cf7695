//! Command-line interface: graph constructions, family invariants, minor
//! tests with witnesses, spectral radius and bound reports, linear-path
//! decompositions, and the exhaustive spex/ex/sat searches with the
//! theorem-verification harness.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

use minorspex_core::invariants::{self, FamilySpec};
use minorspex_core::search::{self, SearchMode, SearchQuery, VerifyParams};
use minorspex_core::{canon, constructions as cons, decompose, graph6, minor, spectral};
use minorspex_core::{Graph, VertexSet};

#[derive(Parser)]
#[command(
    name = "minorspex",
    version,
    about = "Spectral extremal graph theory under minor exclusion: constructions, invariants, minor testing, and desk-scale extremal searches"
)]
struct Cli {
    /// Spectral tolerance for power iteration.
    #[arg(long, global = true, default_value_t = spectral::DEFAULT_TOL)]
    tol: f64,
    /// ρ-comparison epsilon for extremal-set membership.
    #[arg(long, global = true, default_value_t = spectral::RHO_EPS)]
    epsilon: f64,
    /// Worker threads for the searches (RAYON_NUM_THREADS also works).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named construction as graph6, one graph per line.
    Construct(ConstructArgs),
    /// Family invariants: γ_ℍ, α_ℍ, C_ℍ, minimal members, Γ(ℍ).
    Invariants {
        /// graph6 file with one forbidden minor per line.
        #[arg(long)]
        family: String,
    },
    /// Minor containment test with an optional witness.
    Minor {
        /// Host graph (graph6 string or file).
        #[arg(long)]
        host: String,
        /// Pattern graph (graph6 string or file).
        #[arg(long)]
        pattern: String,
        /// Print the branch sets of a witness model.
        #[arg(long)]
        witness: bool,
    },
    /// Spectral radius with a convergence certificate.
    Rho {
        /// Graph (graph6 string or file).
        graph: String,
        /// Print the Perron vector.
        #[arg(long)]
        perron: bool,
    },
    /// Eigenvalue bound checks, printed as BoundReport JSON.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Maximal linear paths and φ.
    Decompose {
        /// Graph (graph6 string or file).
        graph: String,
    },
    /// Maximal spectral radius over ℍ-minor-free graphs of order n.
    Spex(SearchArgs),
    /// Maximal edge count over ℍ-minor-free graphs of order n.
    Ex(SearchArgs),
    /// All ℍ-minor-saturated graphs of order n.
    Sat(SearchArgs),
    /// Run one theorem-verification harness entry.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// complete, empty, path, cycle, petersen, book, book-matching,
    /// multipartite, star-forest, subdivided-complement-star-forest,
    /// subdivided-clique, wheel, flower, g-triangle, g-down
    name: String,
    /// Numeric parameters; comma lists for part sizes and cycle lengths.
    params: Vec<String>,
    /// Write graph6 lines here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Cap for streaming constructions (g-down).
    #[arg(long, default_value_t = 100)]
    limit: usize,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// (ρ−γ+1)(ρ−α) ≤ (n−γ)γ, plus the explicit √(γn)+(α+γ−1)/2 estimate.
    Quadratic {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(short)]
        n: usize,
    },
    /// ρ² − (s1+γ−2)ρ ≤ γ(n−γ) − (γ−1)(s1−1), with the equality flag.
    Regular {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        s1: usize,
        #[arg(long)]
        gamma: usize,
        #[arg(short)]
        n: usize,
    },
    /// The per-vertex coefficient 2^{|H|+1}·e(H).
    EdgeDensity {
        /// Pattern graph (graph6 string or file).
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(short)]
    n: usize,
    /// graph6 file with one forbidden minor per line.
    #[arg(long)]
    family: String,
    /// Restrict the search to connected graphs (spex/ex only).
    #[arg(long)]
    connected: bool,
    /// Write the extremal graphs as graph6 lines here.
    #[arg(long)]
    g6_out: Option<String>,
    /// Proceed beyond the feasibility cap.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma3.1, lemma3.2, thm1.1-lb, thm1.4, thm1.5, thm1.6, thm1.7,
    /// thm4.2, thm4.3, thm4.4
    #[arg(long)]
    theorem: String,
    #[arg(short)]
    n: usize,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s1: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
    /// Comma-separated flower cycle lengths for thm1.7.
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<usize>>,
    /// Comma-separated multipartite part sizes for thm4.2.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    #[arg(long)]
    force: bool,
}

fn main() {
    let cli = Cli::parse();
    if cli.tol > cli.epsilon {
        clap::Error::raw(
            clap::error::ErrorKind::ValueValidation,
            "tolerance must not exceed epsilon\n",
        )
        .exit();
    }
    if let Some(w) = cli.workers {
        if w < 1 {
            clap::Error::raw(
                clap::error::ErrorKind::ValueValidation,
                "workers must be >= 1\n",
            )
            .exit();
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

/// A graph argument is a literal graph6 string or a path to a file whose
/// first non-empty line holds one.
fn load_graph(arg: &str) -> Result<Graph, AnyError> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg)?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or("empty graph file")?;
        return Ok(graph6::from_graph6(line)?);
    }
    Ok(graph6::from_graph6(arg.trim())?)
}

fn load_family(path: &str) -> Result<FamilySpec, AnyError> {
    let text = std::fs::read_to_string(path)?;
    let members = graph6::parse_lines(&text)?;
    let family = FamilySpec::new(members)?;
    if family.stripped_isolated() {
        eprintln!("warning: isolated vertices stripped from family members");
    }
    Ok(family)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), AnyError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn emit_graphs(graphs: &[Graph], out: &Option<String>) -> Result<(), AnyError> {
    let mut lines = String::new();
    for g in graphs {
        lines.push_str(&graph6::to_graph6(g));
        lines.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, lines)?,
        None => print!("{lines}"),
    }
    Ok(())
}

fn usize_param(params: &[String], idx: usize, name: &str) -> Result<usize, AnyError> {
    params
        .get(idx)
        .ok_or_else(|| format!("missing parameter {name}").into())
        .and_then(|s| {
            s.parse::<usize>()
                .map_err(|e| format!("{name}: {e}").into())
        })
}

fn list_param(params: &[String], idx: usize, name: &str) -> Result<Vec<usize>, AnyError> {
    let raw = params
        .get(idx)
        .ok_or_else(|| format!("missing parameter {name}"))?;
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| format!("{name}: {e}").into())
        })
        .collect()
}

fn construct(args: &ConstructArgs) -> Result<(), AnyError> {
    let p = &args.params;
    let graphs: Vec<Graph> = match args.name.as_str() {
        "complete" => vec![cons::complete(usize_param(p, 0, "n")?)?],
        "empty" => vec![Graph::empty(usize_param(p, 0, "n")?)?],
        "path" => vec![cons::path(usize_param(p, 0, "n")?)?],
        "cycle" => vec![cons::cycle(usize_param(p, 0, "n")?)?],
        "petersen" => vec![cons::petersen()],
        "book" => vec![cons::book(
            usize_param(p, 0, "gamma")?,
            usize_param(p, 1, "t")?,
        )?],
        "book-matching" => vec![cons::book_with_matching(
            usize_param(p, 0, "s")?,
            usize_param(p, 1, "t")?,
            usize_param(p, 2, "k")?,
        )?],
        "multipartite" => vec![cons::complete_multipartite_parts(&list_param(
            p, 0, "parts",
        )?)?],
        "star-forest" => vec![cons::star_forest(
            usize_param(p, 0, "s1")?,
            usize_param(p, 1, "s2")?,
        )?],
        "subdivided-complement-star-forest" => vec![cons::subdivided_complement_star_forest(
            usize_param(p, 0, "s1")?,
            usize_param(p, 1, "s2")?,
        )?],
        "subdivided-clique" => vec![cons::subdivided_clique(
            usize_param(p, 0, "t")?,
            usize_param(p, 1, "ell")?,
        )?],
        "wheel" => vec![cons::wheel(usize_param(p, 0, "k")?)?],
        "flower" => vec![cons::flower(&list_param(p, 0, "lengths")?)?],
        "g-triangle" => {
            let n = usize_param(p, 0, "n")?;
            let spec = cons::MultipartiteSpec::new(list_param(p, 1, "parts")?)?;
            vec![cons::g_triangle(n, &spec)?]
        }
        "g-down" => {
            let n = usize_param(p, 0, "n")?;
            let s1 = usize_param(p, 1, "s1")?;
            let gamma = usize_param(p, 2, "gamma")?;
            cons::g_down_members(n, s1, gamma, args.limit)?
        }
        other => return Err(format!("unknown construction {other:?}").into()),
    };
    emit_graphs(&graphs, &args.out)
}

#[derive(Serialize)]
struct InvariantsOut {
    gamma_family: usize,
    alpha_family: usize,
    c_family: String,
    minimal_members: Vec<String>,
    gamma_union_family: Vec<String>,
}

#[derive(Serialize)]
struct MinorOut {
    has_minor: bool,
    witness: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct RhoOut {
    rho: f64,
    iterations: usize,
    residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    perron: Option<Vec<f64>>,
}

#[derive(Serialize)]
struct DecomposeOut {
    phi: usize,
    paths: Vec<Vec<usize>>,
    phi_identity_holds: Option<bool>,
}

fn round9(x: f64) -> f64 {
    // Reports print with 9 decimal places so diffs are meaningful at the
    // comparison epsilon.
    format!("{x:.9}").parse().unwrap()
}

fn run(cli: Cli) -> Result<(), AnyError> {
    match &cli.command {
        Command::Construct(args) => construct(args)?,
        Command::Invariants { family } => {
            let fam = load_family(family)?;
            let inv = invariants::family_invariants(&fam);
            let g6 = |g: &Graph| graph6::to_graph6(&canon::canonical_graph(g));
            let out = InvariantsOut {
                gamma_family: inv.gamma_family,
                alpha_family: inv.alpha_family,
                c_family: inv.c_family.to_string(),
                minimal_members: inv
                    .minimal_ids
                    .iter()
                    .map(|&i| g6(&fam.members()[i]))
                    .collect(),
                gamma_union_family: invariants::gamma_union_family(&fam)
                    .iter()
                    .map(g6)
                    .collect(),
            };
            print_json(&out)?;
        }
        Command::Minor {
            host,
            pattern,
            witness,
        } => {
            let g = load_graph(host)?;
            let h = load_graph(pattern)?;
            let model = minor::find_model(&g, &h);
            println!("{}", if model.is_some() { "yes" } else { "no" });
            if *witness {
                let out = MinorOut {
                    has_minor: model.is_some(),
                    witness: model.map(|m| m.branch_sets.iter().map(VertexSet::to_vec).collect()),
                };
                print_json(&out)?;
            }
        }
        Command::Rho { graph, perron } => {
            let g = load_graph(graph)?;
            let cert = spectral::spectral_radius(&g, cli.tol)?;
            let out = RhoOut {
                rho: round9(cert.rho),
                iterations: cert.iterations,
                residual: cert.residual,
                perron: perron.then(|| cert.perron.iter().map(|&x| round9(x)).collect()),
            };
            print_json(&out)?;
        }
        Command::Bounds(which) => {
            let reports: Vec<spectral::BoundReport> = match which {
                BoundsCommand::Quadratic {
                    rho,
                    gamma,
                    alpha,
                    n,
                } => {
                    let mut rep = spectral::quadratic_upper_bound_check(*rho, *gamma, *alpha, *n);
                    rep.lhs = round9(rep.lhs);
                    rep.rhs = round9(rep.rhs);
                    rep.slack = round9(rep.slack);
                    let info = spectral::explicit_upper_estimate(*gamma, *alpha, *n);
                    eprintln!("explicit estimate (informational): {info:.9}");
                    vec![rep]
                }
                BoundsCommand::Regular { rho, s1, gamma, n } => {
                    let rep = spectral::regular_bound_check(*rho, *s1, *gamma, *n);
                    eprintln!("equality at 1e-9: {}", rep.is_equality(1e-9));
                    let mut rep = rep;
                    rep.lhs = round9(rep.lhs);
                    rep.rhs = round9(rep.rhs);
                    rep.slack = round9(rep.slack);
                    vec![rep]
                }
                BoundsCommand::EdgeDensity { pattern } => {
                    let h = load_graph(pattern)?;
                    let coeff = spectral::edge_density_bound(&h)?;
                    println!("{coeff}");
                    vec![]
                }
            };
            if !reports.is_empty() {
                print_json(&reports)?;
            }
        }
        Command::Decompose { graph } => {
            let g = load_graph(graph)?;
            let d = decompose::maximal_linear_paths(&g)?;
            let identity = match decompose::phi_identity_check(&g) {
                Ok(ok) => Some(ok),
                Err(minorspex_core::Error::CycleInput) => None,
                Err(e) => return Err(e.into()),
            };
            print_json(&DecomposeOut {
                phi: d.phi,
                paths: d.paths,
                phi_identity_holds: identity,
            })?;
        }
        Command::Spex(args) | Command::Ex(args) | Command::Sat(args) => {
            let fam = load_family(&args.family)?;
            let mode = match (&cli.command, args.connected) {
                (Command::Spex(_), false) => SearchMode::Spex,
                (Command::Spex(_), true) => SearchMode::SpexConnected,
                (Command::Ex(_), false) => SearchMode::Ex,
                (Command::Ex(_), true) => SearchMode::ExConnected,
                (Command::Sat(_), _) => SearchMode::SatList,
                _ => unreachable!(),
            };
            let mut q = SearchQuery::new(args.n, fam, mode);
            q.epsilon = cli.epsilon;
            q.allow_large = args.force;
            if args.force && args.n > search::FEASIBILITY_CAP {
                eprintln!(
                    "note: order {} exceeds the feasibility cap {}; the class can grow by \
                     an order of magnitude per added vertex, expect a long run",
                    args.n,
                    search::FEASIBILITY_CAP
                );
            }
            let report = match mode {
                SearchMode::Spex | SearchMode::SpexConnected => search::spex_search(&q)?,
                SearchMode::Ex | SearchMode::ExConnected => search::ex_search(&q)?,
                SearchMode::SatList => search::sat_list(&q)?,
            };
            if let Some(path) = &args.g6_out {
                let mut f = std::fs::File::create(path)?;
                for g6 in &report.extremal {
                    writeln!(f, "{g6}")?;
                }
            }
            print_json(&report)?;
        }
        Command::Verify(args) => {
            let params = VerifyParams {
                n: args.n,
                a: args.a,
                k: args.k,
                s1: args.s1,
                r: args.r,
                t: args.t,
                gamma: args.gamma,
                lengths: args.lengths.clone(),
                parts: args.parts.clone(),
                allow_large: args.force,
            };
            let report = search::verify_theorem(&args.theorem, &params)?;
            print_json(&report)?;
        }
    }
    Ok(())
}
