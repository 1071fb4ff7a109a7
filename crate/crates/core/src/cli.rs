//! The `oddcol` command line: `colour`, `verify` and `generate`.
//!
//! Exit codes: 0 success, 1 invalid certificate, 2 odd component,
//! 3 class, precondition or usage error, 4 I/O or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classes::{
    bounded_degree_budget, bounded_degree_colouring, girth7_budget, girth7_colouring, planar_girth11_colouring,
    planar_girth11_edge_bound_holds,
};
use crate::colouring::{Certificate, Colouring};
use crate::error::Error;
use crate::exact::{chi_odd_exact_with_cap, DEFAULT_CAP};
use crate::generators;
use crate::graph::Graph;
use crate::interval::{interval_colouring, proper_interval_colouring, IntervalRepresentation};
use crate::io::{parse_edge_list, parse_intervals, parse_modules, write_edge_list, write_intervals};
use crate::modular::{colour_modular, modular_bound, ModulePartition};
use crate::verify::{verify_colouring, verify_lists};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "oddcol", version, about = "Odd colourings: construct, verify, generate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Colour a graph and print a JSON certificate.
    Colour(ColourArgs),
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Write a graph from a named family.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    BoundedDegree,
    Girth7,
    PlanarGirth11,
    Modular,
    Interval,
    ProperInterval,
    Exact,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::BoundedDegree => "bounded-degree",
            Algo::Girth7 => "girth7",
            Algo::PlanarGirth11 => "planar-girth11",
            Algo::Modular => "modular",
            Algo::Interval => "interval",
            Algo::ProperInterval => "proper-interval",
            Algo::Exact => "exact",
        }
    }
}

#[derive(Args, Debug)]
struct ColourArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    #[arg(long)]
    intervals: Option<PathBuf>,
    #[arg(long)]
    modules: Option<PathBuf>,
    /// Accepted for symmetry with `generate`; every algorithm is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex cap for the exact solver.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// cycle, path, complete, star, subdivided-complete, k4-two-pendants,
    /// random-gnp, random-tree, random-interval, random-proper-interval, family-b
    family: String,
    params: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the interval file of interval families; defaults to
    /// `<out>.intervals`.
    #[arg(long)]
    intervals: Option<PathBuf>,
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Infeasible { .. } | Error::InfeasibleOrder { .. } => EXIT_INFEASIBLE,
            Error::Io(_) | Error::Parse { .. } | Error::Json(_) => EXIT_IO,
            _ => EXIT_PRECONDITION,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_PRECONDITION, msg: msg.into() }
}

type Outcome = std::result::Result<i32, Failure>;

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PRECONDITION } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Colour(a) => cmd_colour(&a),
        Command::Verify { graph, certificate } => cmd_verify(&graph, &certificate),
        Command::Generate(a) => cmd_generate(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("oddcol: {}", f.msg);
            f.code
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure { code: EXIT_IO, msg: format!("{}: {e}", path.display()) })
}

fn emit(out: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: EXIT_IO, msg: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Colours `g` with one named algorithm, returning the colouring and its
/// guaranteed class bound.
pub fn colour_with(
    g: &Graph,
    algo: Algo,
    rep: Option<&IntervalRepresentation>,
    modules: Option<&ModulePartition>,
    cap: usize,
) -> crate::Result<(Colouring, usize)> {
    let missing = |what: &str| Error::Precondition(format!("--algo {} needs {what}", algo.name()));
    match algo {
        Algo::Auto => Err(Error::InvalidArgument("auto is resolved by the caller".into())),
        Algo::BoundedDegree => Ok((bounded_degree_colouring(g)?, bounded_degree_budget(g) - 1)),
        Algo::Girth7 => Ok((girth7_colouring(g)?, girth7_budget(g) - 1)),
        Algo::PlanarGirth11 => Ok((planar_girth11_colouring(g)?, 3)),
        Algo::Modular => {
            let m = modules.ok_or_else(|| missing("--modules"))?;
            Ok((colour_modular(g, m)?, modular_bound(g, m)))
        }
        Algo::Interval => Ok((interval_colouring(g, rep.ok_or_else(|| missing("--intervals"))?)?, 6)),
        Algo::ProperInterval => Ok((proper_interval_colouring(g, rep.ok_or_else(|| missing("--intervals"))?)?, 3)),
        Algo::Exact => chi_odd_exact_with_cap(g, cap).map(|(k, c)| (c, k)),
    }
}

/// Algorithms `auto` tries, in order, for the evidence at hand.
pub fn auto_order(g: &Graph, rep: Option<&IntervalRepresentation>, modules: bool) -> Vec<Algo> {
    let mut order = Vec::new();
    if let Some(r) = rep {
        if r.is_proper() {
            order.push(Algo::ProperInterval);
        }
        order.push(Algo::Interval);
    }
    if modules {
        order.push(Algo::Modular);
    }
    let girth = g.girth().unwrap_or(usize::MAX);
    if girth >= 11 && planar_girth11_edge_bound_holds(g) {
        order.push(Algo::PlanarGirth11);
    }
    if girth >= 7 {
        order.push(Algo::Girth7);
    }
    order.push(Algo::BoundedDegree);
    order
}

fn cmd_colour(a: &ColourArgs) -> Outcome {
    let g = parse_edge_list(&read(&a.graph)?)?;
    let rep = match &a.intervals {
        Some(p) => Some(parse_intervals(&read(p)?, g.n())?),
        None => None,
    };
    let modules = match &a.modules {
        Some(p) => Some(ModulePartition::new(g.n(), parse_modules(&read(p)?, g.n())?)?),
        None => None,
    };
    if let Some(component) = g.odd_component() {
        return Err(Error::Infeasible { component: component.to_vec() }.into());
    }
    let cap = a.cap.unwrap_or(DEFAULT_CAP);

    let (algo, colouring, bound) = if a.algo == Algo::Auto {
        let mut last = None;
        let mut chosen = None;
        for algo in auto_order(&g, rep.as_ref(), modules.is_some()) {
            match colour_with(&g, algo, rep.as_ref(), modules.as_ref(), cap) {
                Ok((c, b)) => {
                    chosen = Some((algo, c, b));
                    break;
                }
                Err(e) => {
                    eprintln!("oddcol: {} skipped: {e}", algo.name());
                    last = Some(e);
                }
            }
        }
        match chosen {
            Some(x) => x,
            None => return Err(last.unwrap_or_else(|| Error::Internal("no algorithm ran".into())).into()),
        }
    } else {
        let (c, b) = colour_with(&g, a.algo, rep.as_ref(), modules.as_ref(), cap)?;
        (a.algo, c, b)
    };

    let report = verify_colouring(&g, &colouring);
    if !report.valid {
        return Err(Error::Internal(format!("{} produced an invalid colouring: {report}", algo.name())).into());
    }
    let cert = Certificate::new(&colouring, algo.name(), bound);
    let mut json = serde_json::to_string(&cert).map_err(Error::from)?;
    json.push('\n');
    emit(a.out.as_deref(), &json)?;
    eprintln!("{}: {} classes (bound {bound})", algo.name(), colouring.num_classes());
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, certificate: &Path) -> Outcome {
    let g = parse_edge_list(&read(graph)?)?;
    let cert: Certificate = serde_json::from_str(&read(certificate)?).map_err(Error::from)?;
    if cert.n != g.n() {
        println!("invalid\n  certificate is for {} vertices, the graph has {}", cert.n, g.n());
        return Ok(EXIT_INVALID);
    }
    let report = verify_lists(&g, &cert.classes);
    print!("{report}");
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn number<T: std::str::FromStr>(params: &[String], i: usize, name: &str, default: Option<T>) -> std::result::Result<T, Failure> {
    match params.get(i) {
        Some(s) => s.parse().map_err(|_| usage(format!("bad {name}: {s:?}"))),
        None => default.ok_or_else(|| usage(format!("missing {name}"))),
    }
}

fn summary(g: &Graph) -> String {
    let comps = g.components();
    let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
    let girth = g.girth().map_or("inf".to_string(), |x| x.to_string());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n={} m={} girth={girth} max_degree={} components={} odd_components={odd}",
        g.n(),
        g.m(),
        g.max_degree(),
        comps.len()
    );
    s
}

fn cmd_generate(a: &GenerateArgs) -> Outcome {
    let p = &a.params;
    let (g, rep) = match a.family.as_str() {
        "cycle" => (generators::cycle(number(p, 0, "n", None)?)?, None),
        "path" => (generators::path(number(p, 0, "n", None)?)?, None),
        "complete" => (generators::complete(number(p, 0, "n", None)?)?, None),
        "star" => (generators::star(number(p, 0, "leaves", None)?)?, None),
        "subdivided-complete" => (generators::subdivided_complete(number(p, 0, "n", None)?)?, None),
        "k4-two-pendants" => (generators::k4_two_pendants(), Some(generators::k4_two_pendants_intervals())),
        "random-gnp" => {
            let n = number(p, 0, "n", None)?;
            (generators::random_gnp(n, number(p, 1, "p", Some(0.3))?, a.seed)?, None)
        }
        "random-tree" => (generators::random_tree(number(p, 0, "n", None)?, a.seed)?, None),
        "random-interval" => {
            let n: usize = number(p, 0, "n", None)?;
            let (g, r) = generators::random_interval(n, number(p, 1, "max_coord", Some(4 * n as u64))?, a.seed)?;
            (g, Some(r))
        }
        "random-proper-interval" => {
            let n = number(p, 0, "n", None)?;
            let (g, r) = generators::random_proper_interval(n, number(p, 1, "length", Some(4))?, a.seed)?;
            (g, Some(r))
        }
        "family-b" => {
            let base = p.first().ok_or_else(|| usage("missing base graph file"))?;
            (generators::family_b(&parse_edge_list(&read(Path::new(base))?)?)?, None)
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    emit(a.out.as_deref(), &write_edge_list(&g))?;
    if let Some(r) = rep {
        let target = a.intervals.clone().or_else(|| {
            a.out.as_ref().map(|o| {
                let mut s = o.clone().into_os_string();
                s.push(".intervals");
                PathBuf::from(s)
            })
        });
        match target {
            Some(t) => emit(Some(&t), &write_intervals(&r))?,
            None => eprintln!("oddcol: intervals not written; pass --intervals or --out"),
        }
    }
    if a.out.is_some() {
        print!("{}", summary(&g));
    } else {
        eprint!("{}", summary(&g));
    }
    Ok(EXIT_OK)
}
