use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::debug;

use ru4::image::{summarize_all, BinaryCodeSet};
use ru4::report::{self, CodeDescriptor, ExpectedTable, Format};
use ru4::{search_best, Caps, CyclicCode, Error, Factorization};

#[derive(Parser)]
#[command(name = "ru4", version, about = "Cyclic codes over Z4 + uZ4 and their Gray images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Cap on log2 of the number of codewords any scan may visit [env: RU4_MAX_ENUM_BITS]
    #[arg(long, global = true)]
    max_enum_bits: Option<u32>,
    /// Gray images with at most 2^BITS words are materialized
    #[arg(long, global = true, default_value_t = ru4::image::DEFAULT_MATERIALIZE_BITS)]
    materialize_bits: u32,
    /// Worker threads for enumeration and distance scans (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write output to a file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 over F2, lift to Z4, and print the idempotents
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Operations over all codes of a length
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
    /// Operations on a single code
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Reproduce a reference table of rank values
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Rank every cyclic code of length n by the minimum distance of its Gray image
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

#[derive(Subcommand)]
enum CodesAction {
    /// One summary row per cyclic code of length n
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(clap::Args)]
struct CodeSpec {
    #[arg(long)]
    n: Option<usize>,
    /// Generators separated by ';': wire form ("2 ; 0:3") or factor expressions ("2 ; ug1+2u")
    #[arg(long, conflicts_with = "descriptor")]
    gens: Option<String>,
    /// JSON code descriptor file
    #[arg(long)]
    descriptor: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CodeAction {
    /// Structure, canonical form, ranks and distances
    Info {
        #[command(flatten)]
        spec: CodeSpec,
    },
    /// The binary Gray image
    Gray {
        #[command(flatten)]
        spec: CodeSpec,
        /// Print every word of the image
        #[arg(long)]
        dump_words: bool,
    },
}

fn load_code(spec: &CodeSpec) -> Result<(CyclicCode, Factorization), CliError> {
    if let Some(path) = &spec.descriptor {
        let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let d: CodeDescriptor = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let fact = Factorization::new(d.n)?;
        return Ok((d.to_code(&fact)?, fact));
    }
    let n = spec.n.ok_or_else(|| CliError::Usage("--n is required with --gens".into()))?;
    let gens = spec.gens.as_deref().ok_or_else(|| CliError::Usage("give --gens or --descriptor".into()))?;
    let fact = Factorization::new(n)?;
    let gens = report::parse_generators(gens, &fact)?;
    Ok((CyclicCode::from_generators(n, gens)?, fact))
}

enum CliError {
    Usage(String),
    Budget(Error),
    Other(Error),
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::TooLarge { .. } | Error::BudgetExceeded { .. } => CliError::Budget(e),
            Error::Parse(_)
            | Error::EvenLength(_)
            | Error::ZeroLength
            | Error::LengthTooLarge(_)
            | Error::DivisibilityViolated(_)
            | Error::ProfileLengthMismatch { .. } => CliError::Usage(e.to_string()),
            e => CliError::Other(e),
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let enum_bits = match cli.max_enum_bits {
        Some(b) => b,
        None => match std::env::var("RU4_MAX_ENUM_BITS") {
            Ok(v) => v.parse().map_err(|_| CliError::Usage(format!("RU4_MAX_ENUM_BITS={v:?} is not a number")))?,
            Err(_) => ru4::linalg::DEFAULT_ENUM_CAP_BITS,
        },
    };
    if enum_bits == 0 || cli.materialize_bits == 0 {
        return Err(CliError::Usage("caps must be positive".into()));
    }
    let caps = Caps { enum_bits, materialize_bits: cli.materialize_bits.min(enum_bits), ..Caps::default() };
    debug!("caps: {caps:?}");
    let fmt = cli.format;
    Ok(match &cli.command {
        Command::Factor { n } => report::render_factorization(&Factorization::new(*n)?, fmt),
        Command::Codes { action: CodesAction::Enumerate { n } } => {
            let fact = Factorization::new(*n)?;
            report::render_summaries(&summarize_all(&fact, &caps)?, fmt)
        }
        Command::Code { action: CodeAction::Info { spec } } => {
            let (code, fact) = load_code(spec)?;
            report::render_code_info(&report::code_info(&code, &fact, &caps)?, fmt)
        }
        Command::Code { action: CodeAction::Gray { spec, dump_words } } => {
            let (code, fact) = load_code(spec)?;
            let mut out = report::render_code_info(&report::code_info(&code, &fact, &caps)?, fmt);
            if *dump_words {
                let image = BinaryCodeSet::gray_image(&code, caps.materialize_bits);
                let words = image.words().map_err(|_| {
                    CliError::Budget(Error::TooLarge { bits: code.log2_size(), cap: caps.materialize_bits })
                })?;
                out = match fmt {
                    Format::Json => serde_json::to_string_pretty(&words).expect("words serialize") + "\n",
                    _ => words.iter().map(|w| w.to_string() + "\n").collect(),
                };
            }
            out
        }
        Command::Tables { which } => {
            let table = ExpectedTable::get(*which).ok_or_else(|| CliError::Usage(format!("no table {which}")))?;
            let r = report::check_table(&table)?;
            let out = report::render_table(&r, fmt);
            if r.mismatches > 0 {
                return Err(CliError::Mismatch(out));
            }
            out
        }
        Command::Search { n, top } => report::render_search(&search_best(*n, *top, &caps)?, fmt),
    })
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().expect("thread pool is set once");
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(CliError::Mismatch(text)) => (text, 4),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Budget(e)) => {
            eprintln!("error: {e} (raise --max-enum-bits or RU4_MAX_ENUM_BITS)");
            return ExitCode::from(3);
        }
        Err(CliError::Other(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
