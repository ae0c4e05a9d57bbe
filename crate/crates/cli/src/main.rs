use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use frattini_core::classifiers::{b_residual, class_report};
use frattini_core::corpus::{default_corpus, load_spec, save_report, save_spec, CorpusEntry, GroupSpec};
use frattini_core::structure::find_complement;
use frattini_core::verifier::{render_report, run_corpus, summarize, Check};
use frattini_core::{Caps, GroupError, PermGroup, Permutation};

#[derive(Parser, Debug)]
#[command(name = "frattini", version, about = "Frattini subgroups, chief factors and class membership of permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest group order for full subgroup-lattice computations
    #[arg(long, global = true, default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
    lattice_cap: u64,
    /// Largest group order for element enumeration
    #[arg(long, global = true, default_value_t = 10000, value_parser = clap::value_parser!(u64).range(1..))]
    enum_cap: u64,
    /// Largest index for quotient constructions
    #[arg(long, global = true, default_value_t = 10000, value_parser = clap::value_parser!(u64).range(1..))]
    index_cap: u64,
    /// Largest complement order for complement search
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    complement_cap: u64,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print timings to standard error
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class membership and structural subgroups of one group
    Analyze { spec: PathBuf },
    /// Run the verification checks over a corpus
    Verify {
        /// `default`, names of default-corpus groups, or spec files
        #[arg(long, num_args = 0.., default_values_t = vec!["default".to_string()])]
        corpus: Vec<String>,
        /// `all` or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// List the default corpus
    CorpusList,
    /// Print the spec of a default-corpus group
    CorpusSpec { name: String },
    /// The smallest normal subgroup with quotient in 𝔅
    Residual { spec: PathBuf },
    /// A complement of the normal subgroup generated by the given permutations
    Complement {
        spec: PathBuf,
        /// Generators of the normal subgroup, in cycle notation
        #[arg(long = "gen")]
        gens: Vec<String>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Group(e) if e.is_cap() => 3,
            CliError::Group(GroupError::TheoremViolation(_) | GroupError::Internal(_)) => 1,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<(String, PermGroup), CliError> {
    let text = read(path)?;
    let spec = GroupSpec::parse(&text)?;
    let name = if spec.name.is_empty() {
        path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
    } else {
        spec.name.clone()
    };
    Ok((name, spec.build()?))
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn describe(h: &PermGroup) -> String {
    let gens: Vec<String> = h.generators().iter().map(|x| x.to_string()).collect();
    format!("order {}\ngenerators {}\n", h.order(), if gens.is_empty() { "()".to_string() } else { gens.join(" ") })
}

fn select_corpus(items: &[String]) -> Result<Vec<CorpusEntry>, CliError> {
    let defaults = default_corpus();
    let mut out = Vec::new();
    for item in items {
        if item == "default" {
            out.extend(defaults.iter().cloned());
        } else if let Some(e) = defaults.iter().find(|e| e.name == *item) {
            out.push(e.clone());
        } else {
            let (name, group) = load(Path::new(item))?;
            out.push(CorpusEntry { name, group });
        }
    }
    Ok(out)
}

fn select_checks(spec: &str) -> Result<Vec<Check>, CliError> {
    if spec == "all" {
        return Ok(Check::ALL.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Check::from_name(s).ok_or_else(|| CliError::Usage(format!("unknown check `{s}`"))))
        .collect()
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let caps = Caps {
        lattice: cli.lattice_cap.into(),
        enumeration: cli.enum_cap.into(),
        index: cli.index_cap.into(),
        complement: cli.complement_cap.into(),
    };
    let start = Instant::now();
    let code = match &cli.command {
        Command::Analyze { spec } => {
            let (name, g) = load(spec)?;
            emit(cli, &save_report(&class_report(&name, &g, &caps)?))?;
            ExitCode::SUCCESS
        }
        Command::Verify { corpus, checks } => {
            let corpus = select_corpus(corpus)?;
            let checks = select_checks(checks)?;
            let results = run_corpus(&corpus, &checks, &caps);
            if cli.verbose {
                for r in &results {
                    eprintln!("{:>10.3?} {} {}", r.elapsed, r.check_name, r.group_name);
                }
            }
            let report = render_report(&results);
            emit(cli, &report)?;
            if cli.out.is_some() {
                print!("{}", report.lines().last().unwrap_or_default());
                println!();
            }
            if summarize(&results).failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::CorpusList => {
            let text: String = default_corpus()
                .iter()
                .map(|e| format!("{:<12} degree {:<3} order {}\n", e.name, e.group.degree(), e.group.order()))
                .collect();
            emit(cli, &text)?;
            ExitCode::SUCCESS
        }
        Command::CorpusSpec { name } => {
            let entry = default_corpus()
                .into_iter()
                .find(|e| e.name == *name)
                .ok_or_else(|| CliError::Usage(format!("no corpus group named `{name}`")))?;
            emit(cli, &save_spec(&entry.name, &entry.group))?;
            ExitCode::SUCCESS
        }
        Command::Residual { spec } => {
            let g = load_spec(&read(spec)?)?;
            emit(cli, &describe(&b_residual(&g, &caps)?))?;
            ExitCode::SUCCESS
        }
        Command::Complement { spec, gens } => {
            let g = load_spec(&read(spec)?)?;
            let gens = gens
                .iter()
                .map(|s| Permutation::parse(g.degree(), s))
                .collect::<Result<Vec<_>, _>>()?;
            for x in &gens {
                if !g.contains(x)? {
                    return Err(GroupError::NotInGroup(x.to_string()).into());
                }
            }
            let n = PermGroup::new(g.degree(), gens)?;
            let text = match find_complement(&g, &n, &caps)? {
                Some(c) => describe(&c),
                None => "none\n".to_string(),
            };
            emit(cli, &text)?;
            ExitCode::SUCCESS
        }
    };
    if cli.verbose {
        eprintln!("elapsed {:.3?}", start.elapsed());
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
