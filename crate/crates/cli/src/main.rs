use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divgraph::export::{sweep_csv, sweep_row, GraphDocument};
use divgraph::graph::{build, components, components_without_diameters, size_set, GraphLimits};
use divgraph::oracle::{brute_class_sizes, OracleMode};
use divgraph::verify::{run_claim, Budgets, Claim};
use divgraph::{parse_integer_set, Error, GraphKind, Group, Verdict, VerdictReport};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(name = "divgraph", version, about = "Divisibility graphs of conjugacy class sizes of S_n and A_n")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "DIVGRAPH_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one graph for S_n or A_n and write it out.
    Build(BuildArgs),
    /// Check a claim over a range of degrees.
    Verify(VerifyArgs),
    /// Build a graph from a file of positive integers, one per line.
    #[command(name = "from-file", alias = "fromfile")]
    FromFile(FromFileArgs),
    /// One CSV row of graph statistics per degree.
    Sweep(SweepArgs),
    /// Print brute-force class sizes from explicit permutations.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "A", alias = "a")]
    A,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::S => Group::Symmetric,
            GroupArg::A => Group::Alternating,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "D")]
    D,
    #[value(name = "Gamma")]
    Gamma,
    #[value(name = "Delta")]
    Delta,
    #[value(name = "B")]
    B,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> GraphKind {
        match k {
            KindArg::D => GraphKind::D,
            KindArg::Gamma => GraphKind::Gamma,
            KindArg::Delta => GraphKind::Delta,
            KindArg::B => GraphKind::B,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest degree for graph construction.
    #[arg(long, default_value_t = 40)]
    max_build_n: u32,
    /// Largest degree for the all-pairs diameter computation.
    #[arg(long, default_value_t = 25)]
    max_diameter_n: u32,
    /// Largest number of materialized edges.
    #[arg(long, default_value_t = GraphLimits::default().max_edges)]
    max_edges: u64,
}

impl BudgetArgs {
    fn budgets(&self, oracle_n: u32) -> Budgets {
        let defaults = Budgets::default();
        if self.max_build_n > defaults.max_build_n {
            eprintln!(
                "warning: --max-build-n {} is above the default {}; pairwise work grows with p(n)^2",
                self.max_build_n, defaults.max_build_n
            );
        }
        if self.max_diameter_n > defaults.max_diameter_n {
            eprintln!(
                "warning: --max-diameter-n {} is above the default {}; diameter runs a BFS per vertex",
                self.max_diameter_n, defaults.max_diameter_n
            );
        }
        Budgets { max_build_n: self.max_build_n, max_diameter_n: self.max_diameter_n, max_oracle_n: oracle_n }
    }

    fn limits(&self) -> GraphLimits {
        GraphLimits { max_edges: self.max_edges }
    }
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "D")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add prime factorizations to CSV output.
    #[arg(long)]
    factored: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma2, lemma8, lemma11, lemma14-15, remark0, partition-identities,
    /// theorem9, theorem13, corollary2, corollary14, figures,
    /// diameter-bounds, conjecture, oracle
    claim: String,
    #[arg(long)]
    from: Option<u32>,
    #[arg(long)]
    to: Option<u32>,
    /// Restrict claims that cover both groups to one of them.
    #[arg(long, value_enum)]
    group: Option<GroupArg>,
    /// Largest degree for the oracle claim.
    #[arg(long, default_value_t = divgraph::oracle::TALLY_CAP)]
    max_n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock times in the output.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct FromFileArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "D")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    factored: bool,
    /// Skip the all-pairs diameter pass.
    #[arg(long)]
    no_diameter: bool,
    #[arg(long, default_value_t = GraphLimits::default().max_edges)]
    max_edges: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    from: u32,
    #[arg(long)]
    to: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill the wall_ms column.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: u32,
    /// Compute true conjugation orbits instead of per-type tallies.
    #[arg(long)]
    orbits: bool,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let outcome = match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::FromFile(args) => cmd_from_file(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            let code = match &failure {
                Failure::Lib(Error::CapacityRefused(_)) => EXIT_CAPACITY,
                Failure::Lib(Error::Internal(_)) => EXIT_FAIL,
                Failure::Lib(_) | Failure::Usage(_) => EXIT_USAGE,
                Failure::Io(_) => EXIT_FAIL,
            };
            match failure {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Usage(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(code)
        }
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn render(doc: &GraphDocument<'_>, format: Format, factored: bool) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc.to_json()).expect("graph JSON serializes");
            s.push('\n');
            s
        }
        Format::Dot => doc.to_dot(),
        Format::Csv => doc.to_csv(factored),
        Format::Text => doc.to_text(),
    }
}

fn cmd_build(args: BuildArgs) -> Result<u8, Failure> {
    let budgets = args.budgets.budgets(divgraph::oracle::TALLY_CAP);
    if args.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if args.n > budgets.max_build_n {
        return Err(Error::CapacityRefused(format!(
            "graph construction is capped at n = {} (raise with --max-build-n)",
            budgets.max_build_n
        ))
        .into());
    }
    let group = Group::from(args.group);
    let set = size_set(args.n, group)?;
    let graph = build(args.kind.into(), &set, &args.budgets.limits())?;
    let report =
        if args.n <= budgets.max_diameter_n { components(&graph) } else { components_without_diameters(&graph) };
    let doc = GraphDocument { n: Some(args.n), group: Some(group), set: &set, graph: &graph, report: &report };
    emit(&args.out, &render(&doc, args.format, args.factored))?;
    Ok(0)
}

fn cmd_from_file(args: FromFileArgs) -> Result<u8, Failure> {
    let text = fs::read_to_string(&args.path)?;
    let set = parse_integer_set(&text)?;
    let graph = build(args.kind.into(), &set, &GraphLimits { max_edges: args.max_edges })?;
    let report = if args.no_diameter { components_without_diameters(&graph) } else { components(&graph) };
    let doc = GraphDocument { n: None, group: None, set: &set, graph: &graph, report: &report };
    emit(&args.out, &render(&doc, args.format, args.factored))?;
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, Failure> {
    use rayon::prelude::*;

    let budgets = args.budgets.budgets(divgraph::oracle::TALLY_CAP);
    let group = Group::from(args.group);
    let rows = (args.from..=args.to)
        .into_par_iter()
        .map(|n| sweep_row(n, group, &budgets, args.timings))
        .collect::<Result<Vec<_>, _>>()?;
    emit(&args.out, &sweep_csv(&rows))?;
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    let mode = if args.orbits { OracleMode::Orbits } else { OracleMode::Tally };
    let classes = brute_class_sizes(args.n, matches!(args.group, GroupArg::A), mode)?;
    let mut out = String::from("cycle_type,size\n");
    for (ct, size) in classes {
        out.push_str(&format!("\"{ct}\",{size}\n"));
    }
    emit(&None, &out)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let claim: Claim = args.claim.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let budgets = args.budgets.budgets(args.max_n);
    let range = match (args.from, args.to) {
        (None, None) => None,
        (from, to) => {
            let default = claim.default_range(&budgets);
            Some(from.unwrap_or(*default.start())..=to.unwrap_or(*default.end()))
        }
    };
    let reports = run_claim(claim, range, args.group.map(Group::from), &budgets)?;
    let reports: Vec<VerdictReport> =
        reports.iter().map(|r| if args.timings { r.clone() } else { r.without_timing() }).collect();
    let body = match args.format {
        Format::Json => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&serde_json::to_string(r).expect("verdict serializes"));
                s.push('\n');
            }
            s
        }
        Format::Text => summary_table(&reports),
        Format::Dot | Format::Csv => {
            return Err(Failure::Usage("verify writes json or text".into()));
        }
    };
    emit(&args.out, &body)?;
    let failed = reports.iter().filter(|r| r.is_fail()).count();
    eprintln!("{} report(s), {failed} failed", reports.len());
    Ok(if failed > 0 { EXIT_FAIL } else { 0 })
}

fn summary_table(reports: &[VerdictReport]) -> String {
    let mut out = format!("{:<22} {:<5} {:<10} {:<11} {}\n", "claim", "group", "n", "verdict", "detail");
    for r in reports {
        let n = match r.range.as_slice() {
            [] => "-".to_owned(),
            [one] => one.to_string(),
            [first, .., last] => format!("{first}..{last}"),
        };
        let verdict = match r.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::ReportOnly => "report",
        };
        let detail = match (&r.witness, r.claim.as_str()) {
            (Some(w), _) => format!("n={} {} {}", w.n, w.detail, w.sizes.join(" ")),
            (None, "conjecture") => format!(
                "diameters {} all<=4={}",
                r.data.get("diameters").map(|d| d.to_string()).unwrap_or_default(),
                r.data.get("all_at_most_4").map(|d| d.to_string()).unwrap_or_default()
            ),
            (None, "diameter-bounds") => {
                format!("diameter {}", r.data.get("diameter").map(|d| d.to_string()).unwrap_or_default())
            }
            (None, _) => r.data.get("components").map(|c| format!("components {c}")).unwrap_or_default(),
        };
        let group = r.group.map(|g| g.to_string()).unwrap_or_else(|| "-".into());
        out.push_str(&format!("{:<22} {:<5} {:<10} {:<11} {}\n", r.claim, group, n, verdict, detail.trim_end()));
    }
    out
}
