mod commands;
mod emit;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use fourhole::parse::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Classify,
    Orbit,
    Twist,
    Scan,
    Cj,
    Filtration,
    Example5,
}

impl Command {
    fn from_config(s: &str) -> Result<Self, CliError> {
        <Self as ValueEnum>::from_str(s.trim(), true).map_err(|_| CliError::Input(format!("unknown command {s:?}")))
    }
}

/// Trace coordinates on the character variety of the four-holed sphere.
#[derive(Debug, Parser)]
#[command(name = "fourhole", version)]
struct Args {
    /// Falls back to `command` in the config file.
    #[arg(value_enum)]
    command: Option<Command>,

    /// Flat `key = value` file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Boundary traces `a,b,c,d` as integers, decimals or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    traces: Option<String>,
    /// Point `x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Twist word such as `X Y^-1 z`.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    #[arg(long)]
    eps: Option<String>,
    #[arg(long)]
    budget: Option<String>,
    #[arg(long)]
    max_q: Option<String>,
    #[arg(long)]
    max_terms: Option<String>,
    /// Coefficient set for the relation search, e.g. `1,-1,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// `exact` (default) or `float`.
    #[arg(long)]
    mode: Option<String>,
    /// Filtration index.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    axis: Option<String>,
    /// Check the ten listed identities instead of searching.
    #[arg(long)]
    verify_list: bool,
    /// Where data goes instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Core(#[from] fourhole::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            _ => 2,
        }
    }
}

/// Flags merged over the config file, still unparsed.
#[derive(Debug, Default)]
pub struct RunConfig {
    values: std::collections::BTreeMap<&'static str, String>,
    pub verify_list: bool,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str, CliError> {
        self.get(key).ok_or_else(|| CliError::Input(format!("--{key} is required")))
    }

    pub fn parsed<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        match self.get(key) {
            None => Ok(default),
            Some(s) => s.trim().parse().map_err(|_| CliError::Input(format!("--{key}: cannot parse {s:?}"))),
        }
    }
}

const KEYS: [&str; 12] =
    ["traces", "point", "word", "eps", "budget", "max-q", "max-terms", "coeffs", "seed", "mode", "n", "axis"];

fn resolve(args: Args) -> Result<(Command, RunConfig), CliError> {
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            Config::parse(&text)?
        }
        None => Config::default(),
    };
    for key in file.keys() {
        if !KEYS.contains(&key) && !["command", "output", "verify-list"].contains(&key) {
            return Err(CliError::Input(format!("unknown config key {key:?}")));
        }
    }
    let flags = [
        args.traces, args.point, args.word, args.eps, args.budget, args.max_q, args.max_terms, args.coeffs, args.seed,
        args.mode, args.n, args.axis,
    ];
    let mut run = RunConfig::default();
    for (key, flag) in KEYS.into_iter().zip(flags) {
        if let Some(v) = flag.or_else(|| file.get(key).map(str::to_string)) {
            run.values.insert(key, v);
        }
    }
    run.verify_list = args.verify_list
        || match file.get("verify-list") {
            None => false,
            Some(v) => v.parse().map_err(|_| CliError::Input(format!("verify-list: expected true or false, got {v:?}")))?,
        };
    run.output = args.output.or_else(|| file.get("output").map(PathBuf::from));
    let command = match (args.command, file.get("command")) {
        (Some(c), _) => c,
        (None, Some(s)) => Command::from_config(s)?,
        (None, None) => return Err(CliError::Input("no command given".into())),
    };
    Ok((command, run))
}

/// What a command produced: the data stream and an optional summary.
pub struct Emitted {
    pub data: String,
    /// Goes to standard output when data is redirected to a file, otherwise to standard error.
    pub summary: Option<String>,
    /// Set when a self-check failed; the data is still written.
    pub failure: Option<String>,
}

impl From<String> for Emitted {
    fn from(data: String) -> Self {
        Self { data, summary: None, failure: None }
    }
}

fn run(args: Args) -> Result<(), CliError> {
    let (command, cfg) = resolve(args)?;
    let emitted = match command {
        Command::Classify => commands::classify(&cfg),
        Command::Orbit => commands::orbit(&cfg),
        Command::Twist => commands::twist(&cfg),
        Command::Scan => commands::scan(&cfg),
        Command::Cj => commands::cj(&cfg),
        Command::Filtration => commands::filtration(&cfg),
        Command::Example5 => commands::example5(&cfg),
    }?;
    let stdout = std::io::stdout();
    fn io_err(path: &str) -> impl FnOnce(std::io::Error) -> CliError + '_ {
        move |source| CliError::Io { path: path.to_string(), source }
    }
    match &cfg.output {
        Some(path) => {
            let shown = path.display().to_string();
            fs::write(path, &emitted.data).map_err(io_err(&shown))?;
            if let Some(s) = &emitted.summary {
                writeln!(stdout.lock(), "{s}").map_err(io_err("<stdout>"))?;
            }
        }
        None => {
            stdout.lock().write_all(emitted.data.as_bytes()).map_err(io_err("<stdout>"))?;
            if let Some(s) = &emitted.summary {
                eprintln!("{s}");
            }
        }
    }
    match emitted.failure {
        Some(f) => Err(CliError::Check(f)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fourhole: {e}");
            if let CliError::Core(fourhole::Error::NeedsFloat(_)) = e {
                eprintln!("hint: rerun with --mode float");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
