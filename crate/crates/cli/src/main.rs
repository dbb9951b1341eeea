//! `cisg`: classify, decompose and enumerate complete-intersection
//! numerical semigroups.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use cisg::{
    decomposition_tree, is_complete_intersection, is_planar, is_telescopic, Enumerator, FamilyKind,
    FreeClassifier, Pruning, Semigroup,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{BenchRow, EnumRow, TableRow};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] cisg::Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(e) if e.is_internal() => 2,
            CliError::Internal(_) => 2,
            CliError::Output(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "cisg",
    version,
    about = "Complete intersection numerical semigroups"
)]
struct Cli {
    /// Worker threads for enumeration [default: available parallelism]
    #[arg(long, global = true, env = "CISG_THREADS")]
    threads: Option<usize>,

    /// Persist memoized enumeration levels in this file
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frobenius number, conductor, genus, multiplicity, embedding dimension
    Info(GensArg),
    /// Membership in the four families, with a free arrangement when free
    Classify(GensArg),
    /// Decomposition into gluings of copies of ℕ
    Decompose(GensArg),
    /// Every semigroup of a family with given Frobenius number or genus
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "genus",
            required_unless_present = "genus"
        )]
        frobenius: Option<i64>,
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Family counts per genus
    Table {
        #[arg(long)]
        max_genus: u64,
        /// Comma-separated subset of ci,free,telescopic,planar
        #[arg(long, value_delimiter = ',', value_parser = parse_family)]
        families: Option<Vec<FamilyKind>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Add the embedding-dimension histogram of the complete intersections
        #[arg(long)]
        with_embdim: bool,
    },
    /// Search effort and time per genus
    Bench {
        #[arg(long)]
        max_genus: u64,
        #[arg(long, value_parser = parse_pruning, default_value = "bounds")]
        pruning: Pruning,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct GensArg {
    /// Generators, comma-separated (e.g. 10,14,15,21)
    #[arg(required = true, num_args = 1.., value_name = "GENS")]
    gens: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn parse_family(s: &str) -> std::result::Result<FamilyKind, String> {
    s.parse()
}

fn parse_pruning(s: &str) -> std::result::Result<Pruning, String> {
    s.parse()
}

/// Accepts `10,14,15,21`, `10, 14, 15, 21` or separate arguments.
fn parse_gens(parts: &[String]) -> Result<Semigroup> {
    let joined = parts.join(",");
    let values = joined
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::Input(format!("'{t}' is not an integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Semigroup::new(&values)?)
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(s: &Semigroup) -> String {
    format!(
        "generators: {}\nfrobenius: {}\nconductor: {}\ngenus: {}\nmultiplicity: {}\n\
         embedding dimension: {}\nsymmetric: {}\n",
        join(s.generators()),
        s.frobenius(),
        s.conductor(),
        s.genus(),
        s.multiplicity(),
        s.embedding_dimension(),
        yes_no(s.is_symmetric()),
    )
}

fn classify(s: &Semigroup) -> String {
    let ci = is_complete_intersection(s);
    let arrangement = FreeClassifier::new().free_arrangement(s);
    let mut out = format!(
        "generators: {}\ncomplete intersection: {}\nfree: {}\ntelescopic: {}\nplanar: {}\n",
        join(s.generators()),
        yes_no(ci),
        yes_no(arrangement.is_some()),
        yes_no(is_telescopic(s)),
        yes_no(is_planar(s)),
    );
    if let Some(arr) = arrangement {
        out.push_str(&format!("free arrangement: {}\n", join(&arr)));
    }
    out
}

fn decompose(s: &Semigroup) -> Result<String> {
    let mut out = format!("generators: {}\n", join(s.generators()));
    let Some(tree) = decomposition_tree(s) else {
        out.push_str("not a complete intersection\n");
        return Ok(out);
    };
    let points = tree.glue_points();
    let leaves = tree.leaves();
    let f = tree.frobenius();
    if f != s.frobenius() {
        return Err(CliError::Internal(format!(
            "decomposition gives F = {f}, Apéry set gives {}",
            s.frobenius()
        )));
    }
    let sum = |v: &[i64]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("+")
    };
    out.push_str(&format!("tree: {tree}\n"));
    out.push_str(&format!("glue points: {}\n", join(&points)));
    out.push_str(&format!(
        "frobenius: ({}) - ({}) = {f}\n",
        if points.is_empty() {
            "0".into()
        } else {
            sum(&points)
        },
        sum(&leaves),
    ));
    Ok(out)
}

fn enumerator(threads: usize, pruning: Pruning) -> Enumerator<i64> {
    Enumerator::new()
        .with_pruning(pruning)
        .with_parallel(threads > 1)
}

fn run(cli: Cli) -> Result<String> {
    let threads = match cli.threads {
        Some(0) => return Err(CliError::Input("--threads must be positive".into())),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    // Only fails if a global pool already exists, which cannot happen here.
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .ok();

    match cli.command {
        Command::Info(g) => Ok(info(&parse_gens(&g.gens)?)),
        Command::Classify(g) => Ok(classify(&parse_gens(&g.gens)?)),
        Command::Decompose(g) => decompose(&parse_gens(&g.gens)?),
        Command::Enumerate {
            family,
            frobenius,
            genus,
            format,
        } => {
            let e = enumerator(threads, Pruning::Bounds);
            with_cache(&e, cli.cache.as_ref(), |e| {
                let list = match (frobenius, genus) {
                    (Some(f), _) => e.enumerate(family, f)?,
                    (None, Some(g)) => e.enumerate_by_genus(family, g)?,
                    (None, None) => unreachable!("clap requires one of the two"),
                };
                let rows: Vec<EnumRow> = list.iter().map(EnumRow::from).collect();
                Ok(report::enumeration(&rows, format))
            })
        }
        Command::Table {
            max_genus,
            families,
            format,
            with_embdim,
        } => {
            let families = families.unwrap_or_else(|| FamilyKind::ALL.to_vec());
            let e = enumerator(threads, Pruning::Bounds);
            with_cache(&e, cli.cache.as_ref(), |e| {
                let rows = (0..=max_genus)
                    .map(|g| TableRow::compute(e, g, &families, with_embdim))
                    .collect::<Result<Vec<_>>>()?;
                Ok(report::table(&rows, &families, with_embdim, format))
            })
        }
        Command::Bench {
            max_genus,
            pruning,
            format,
        } => {
            let e = enumerator(threads, pruning);
            with_cache(&e, cli.cache.as_ref(), |e| {
                let mut rows = Vec::new();
                for g in 0..=max_genus {
                    e.reset_stats();
                    let start = Instant::now();
                    let mut found = 0;
                    for k in FamilyKind::ALL {
                        found += e.enumerate_by_genus(k, g)?.len();
                    }
                    let stats = e.stats();
                    rows.push(BenchRow {
                        genus: g,
                        semigroups: found,
                        nodes: stats.nodes,
                        candidates: stats.candidates,
                        levels: stats.levels,
                        micros: start.elapsed().as_micros() as u64,
                    });
                }
                Ok(report::bench(&rows, format))
            })
        }
    }
}

/// Loads the cache before `work` and saves it afterwards. An unreadable or
/// outdated cache is ignored.
fn with_cache(
    e: &Enumerator<i64>,
    path: Option<&PathBuf>,
    work: impl FnOnce(&Enumerator<i64>) -> Result<String>,
) -> Result<String> {
    if let Some(p) = path {
        if let cisg::CacheStatus::Corrupt(msg) = e.load_cache(p) {
            eprintln!("warning: ignoring cache {}: {msg}", p.display());
        }
    }
    let out = work(e)?;
    if let Some(p) = path {
        e.save_cache(p)?;
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(out.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}", CliError::Output(e));
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
