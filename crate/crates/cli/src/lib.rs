//! The `bkp` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use bkposet::linext::{count_linear_extensions, degree_cap_from_env, export_dot, LinExtGraph};
use bkposet::permgroup::bk_group_of_space;
use bkposet::relations::MoveTables;
use bkposet::scan::{classify, verify_suite, Filter, Property};
use bkposet::{Error, LinExtSpace, Poset};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGREE_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "bkp", version, about = "Bender-Knuth moves on linear extensions of finite posets")]
struct Cli {
    /// Largest |L(P)| for which a group is built [env: BK_MAX_DEGREE, default 5000].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: Option<u64>,
    /// Worker threads for scans and the suite.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    #[command(subcommand)]
    Poset(PosetCommand),
    #[command(subcommand)]
    Linext(LinextCommand),
    #[command(subcommand)]
    Group(GroupCommand),
    #[command(subcommand)]
    Relations(RelationsCommand),
    /// Classify every poset class of a given size.
    Scan(ScanArgs),
    /// Run the verification battery.
    Verify(VerifyArgs),
}

/// A family spec such as `ferrers:3,2`, or the path of a poset JSON file.
#[derive(Debug, Args)]
struct PosetArg {
    poset: String,
}

#[derive(Debug, Subcommand)]
enum PosetCommand {
    /// Emit poset JSON.
    Build {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        spec: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Structural summary.
    Info(PosetArg),
}

#[derive(Debug, Subcommand)]
enum LinextCommand {
    Count(PosetArg),
    List(PosetArg),
    Graph(PosetArg),
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    Report(PosetArg),
}

#[derive(Debug, Subcommand)]
enum RelationsCommand {
    Report {
        #[command(flatten)]
        poset: PosetArg,
        /// List every failing cactus triple instead of only the first.
        #[arg(long)]
        witnesses: bool,
    },
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=7))]
    n: u64,
    #[arg(long, conflicts_with = "disconnected")]
    connected: bool,
    #[arg(long)]
    disconnected: bool,
    #[arg(long, value_parser = ["le-cactus", "le-symmetric", "le-primitive", "braid"])]
    property: Option<String>,
    /// Keep classes where the property fails instead.
    #[arg(long, requires = "property")]
    negate: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = ["paper"])]
    suite: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=7))]
    max_size: u64,
}

struct Config {
    degree_cap: usize,
    format: Option<Format>,
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Library(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn load_poset(arg: &str) -> Result<Poset, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_poset_file(path);
    }
    Ok(bkposet::poset::parse_family_spec(arg)?)
}

fn read_poset_file(path: &Path) -> Result<Poset, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(Poset::from_json(&text)?)
}

impl Config {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn format_or(&self, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            Err(Failure::Usage(format!("--format {f:?} is not supported here").to_lowercase()))
        }
    }

    fn space(&self, p: &Poset) -> Result<LinExtSpace, Failure> {
        Ok(LinExtSpace::enumerate_with_cap(p, self.degree_cap)?)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

fn graph_text(g: &LinExtGraph) -> String {
    let words: Vec<String> =
        g.vertices.iter().map(|w| w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
    g.edges.iter().map(|&(a, b, i)| format!("{} -- {} t{i}\n", words[a], words[b])).collect()
}

fn execute(cli: Cli) -> Result<i32, Failure> {
    let cfg = Config {
        degree_cap: cli.max_degree.map_or_else(degree_cap_from_env, |d| d as usize),
        format: cli.format,
        out: cli.out,
    };
    match cli.command {
        Command::Poset(PosetCommand::Build { spec, file }) => {
            cfg.format_or(Format::Json, &[Format::Json])?;
            let p = match (spec, file) {
                (Some(s), _) => bkposet::poset::parse_family_spec(&s)?,
                (None, Some(f)) => read_poset_file(&f)?,
                (None, None) => return Err(Failure::Usage("one of --spec or --file is required".into())),
            };
            cfg.emit(&p.to_json())?;
        }
        Command::Poset(PosetCommand::Info(arg)) => {
            cfg.format_or(Format::Json, &[Format::Json])?;
            cfg.emit(&to_json(&load_poset(&arg.poset)?.structure()))?;
        }
        Command::Linext(LinextCommand::Count(arg)) => {
            let f = cfg.format_or(Format::Text, &[Format::Text, Format::Json])?;
            let count = count_linear_extensions(&load_poset(&arg.poset)?).to_string();
            cfg.emit(&if f == Format::Json { to_json(&count) } else { count })?;
        }
        Command::Linext(LinextCommand::List(arg)) => {
            let f = cfg.format_or(Format::Json, &[Format::Json, Format::Text])?;
            let space = cfg.space(&load_poset(&arg.poset)?)?;
            let text = match f {
                Format::Json => space.to_json(),
                _ => space
                    .extensions()
                    .iter()
                    .map(|e| e.word().iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n")
                    .collect(),
            };
            cfg.emit(&text)?;
        }
        Command::Linext(LinextCommand::Graph(arg)) => {
            let f = cfg.format_or(Format::Json, &[Format::Json, Format::Text, Format::Dot])?;
            let g = LinExtGraph::from_space(&cfg.space(&load_poset(&arg.poset)?)?);
            cfg.emit(&match f {
                Format::Dot => export_dot(&g),
                Format::Text => graph_text(&g),
                Format::Json => to_json(&g),
            })?;
        }
        Command::Group(GroupCommand::Report(arg)) => {
            cfg.format_or(Format::Json, &[Format::Json])?;
            let g = bk_group_of_space(&cfg.space(&load_poset(&arg.poset)?)?)?;
            cfg.emit(&to_json(&g.report()?))?;
        }
        Command::Relations(RelationsCommand::Report { poset, witnesses }) => {
            cfg.format_or(Format::Json, &[Format::Json])?;
            let tables = MoveTables::from_space(cfg.space(&load_poset(&poset.poset)?)?);
            cfg.emit(&to_json(&tables.report(witnesses)?))?;
        }
        Command::Scan(args) => {
            cfg.format_or(Format::Json, &[Format::Json])?;
            let mut filters = Vec::new();
            if args.connected {
                filters.push(Filter::Connected(true));
            }
            if args.disconnected {
                filters.push(Filter::Connected(false));
            }
            if let Some(prop) = &args.property {
                let prop: Property = prop.parse()?;
                filters.push(Filter::Property(prop, !args.negate));
            }
            let classification = classify(args.n as usize, &filters, cfg.degree_cap)?;
            cfg.emit(&classification.to_jsonl())?;
            for r in &classification.skipped {
                let skip = r.skipped.as_ref().expect("skipped records carry a reason");
                eprintln!("skipped {}: {} extensions exceed the cap {}", r.canonical_form, skip.count, skip.cap);
            }
        }
        Command::Verify(args) => {
            let f = cfg.format_or(Format::Text, &[Format::Text, Format::Json])?;
            let report = verify_suite(args.max_size as usize, cfg.degree_cap)?;
            cfg.emit(&if f == Format::Json { report.to_json() } else { report.to_text() })?;
            if !report.passed {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name) and runs the command; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| execute(cli)),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => execute(cli),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Library(Error::DegreeCap { count, cap })) => {
            eprintln!("error: {count} linear extensions exceed the degree cap {cap}");
            EXIT_DEGREE_CAP
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
