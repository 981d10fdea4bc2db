//! `paldefect` command-line front end.
//!
//! Exit codes: 0 pass or consistent, 1 a checked statement failed, 2 usage or
//! parse error, 3 a query outside the built language.

pub mod corpus;
mod report;
mod suites;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use paldefect::language::SnapshotOptions;
use paldefect::morphism::parse_morphism;
use paldefect::palindrome;
use paldefect::verify::{defect_verdict, DefectOptions, DEFAULT_PERIOD_BOUND};
use paldefect::{Alphabet, Error, LanguageSnapshot, Letter, Morphism, Word};
use serde_json::{json, Value};

pub use suites::Suite;

pub const TOOL: &str = "paldefect";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OUTSIDE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "paldefect",
    version,
    about = "Palindromic defect of words and morphic fixed points"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defect of a literal word, or defect checkpoints of a fixed point.
    Defect {
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Write Γ(w) and, for palindromes, Θ(w) as DOT files.
    Graphs {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Run one verifier suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        word: Option<String>,
        /// Length for eq1, threshold for prop54/thm55.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Run the built-in corpus against its expectations table.
    Corpus {
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    #[arg(long)]
    pub morphism: Option<String>,
    #[arg(long)]
    pub seed: Option<char>,
    #[arg(long, default_value_t = 16)]
    pub n_max: usize,
    #[arg(long, default_value_t = 50_000)]
    pub horizon: usize,
    #[arg(long, default_value_t = 5)]
    pub growth_window: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub morphism_text: Option<String>,
    pub seed: Option<char>,
    pub n_max: usize,
    pub horizon: usize,
    pub growth_window: usize,
    pub format: Format,
    pub out_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(args: ConfigArgs) -> Result<Self, Failure> {
        if args.n_max < 2 {
            return Err(Failure::usage("--n-max must be at least 2"));
        }
        if args.horizon < args.n_max {
            return Err(Failure::usage("--horizon must be at least --n-max"));
        }
        if args.growth_window < 2 {
            return Err(Failure::usage("--growth-window must be at least 2"));
        }
        Ok(RunConfig {
            morphism_text: args.morphism,
            seed: args.seed,
            n_max: args.n_max,
            horizon: args.horizon,
            growth_window: args.growth_window,
            format: args.format,
            out_dir: args.out_dir,
        })
    }

    pub fn defect_options(&self) -> DefectOptions {
        DefectOptions {
            horizon: self.horizon,
            growth_window: self.growth_window,
            period_bound: DEFAULT_PERIOD_BOUND,
        }
    }

    fn echo(&self) -> Value {
        json!({
            "morphism": self.morphism_text,
            "seed": self.seed.map(|c| c.to_string()),
            "n_max": self.n_max,
            "horizon": self.horizon,
            "growth_window": self.growth_window,
            "format": match self.format { Format::Json => "json", Format::Text => "text" },
            "out_dir": self.out_dir.as_ref().map(|p| p.display().to_string()),
        })
    }

    pub(crate) fn morphism(&self) -> Result<Morphism, Failure> {
        let text = self
            .morphism_text
            .as_deref()
            .ok_or_else(|| Failure::usage("--morphism is required"))?;
        Ok(parse_morphism(text)?)
    }

    /// The `--seed` letter, or the first growing fixed-point letter.
    pub(crate) fn seed_letter(&self, m: &Morphism) -> Result<Letter, Failure> {
        match self.seed {
            Some(c) => {
                let a = m.letter(c).ok_or_else(|| {
                    Failure::usage(format!("seed {c:?} is not a letter of the morphism"))
                })?;
                if !m.growing_fixed_point_letters().contains(&a) {
                    return Err(Error::NotGrowingFixedPoint(c).into());
                }
                Ok(a)
            }
            None => m
                .growing_fixed_point_letters()
                .first()
                .copied()
                .ok_or_else(|| Error::NoGrowingFixedPoint.into()),
        }
    }

    pub(crate) fn snapshot(&self, m: &Morphism) -> Result<LanguageSnapshot, Failure> {
        let seed = self.seed_letter(m)?;
        let opts = SnapshotOptions {
            n_max: self.n_max,
            seed: Some(seed),
            ..SnapshotOptions::default()
        };
        Ok(LanguageSnapshot::build_with(m, opts)?)
    }
}

/// A run that could not produce a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInLanguage(_) | Error::TooLongForExtensions { .. } => EXIT_OUTSIDE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// A finished command: its exit code and its JSON document.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub document: Value,
}

pub(crate) fn envelope(
    command: &str,
    config: &RunConfig,
    verdict: &str,
    witnesses: Vec<Value>,
    details: Value,
) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "command": command,
        "config": config.echo(),
        "n_max": config.n_max,
        "horizon": config.horizon,
        "verdict": verdict,
        "witnesses": witnesses,
        "details": details,
    })
}

/// Parses `args` (program name first), runs the command, and writes the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (format, result) = execute(cli.command);
    match result {
        Ok(outcome) => {
            let text = render(&outcome.document, format);
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn render(document: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(document).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Text => report::flatten(document),
    }
}

fn execute(command: Command) -> (Format, Result<Outcome, Failure>) {
    let (format, result) = match command {
        Command::Defect { word, config } => {
            let f = config.format;
            (
                f,
                RunConfig::new(config).and_then(|c| cmd_defect(&c, word.as_deref())),
            )
        }
        Command::Graphs { word, config } => {
            let f = config.format;
            (
                f,
                RunConfig::new(config).and_then(|c| cmd_graphs(&c, &word)),
            )
        }
        Command::Verify {
            suite,
            word,
            n,
            config,
        } => {
            let f = config.format;
            (
                f,
                RunConfig::new(config)
                    .and_then(|c| suites::cmd_verify(&c, suite, word.as_deref(), n)),
            )
        }
        Command::Corpus { config } => {
            let f = config.format;
            (
                f,
                RunConfig::new(config).and_then(|c| corpus::cmd_corpus(&c)),
            )
        }
    };
    (format, result)
}

pub fn cmd_defect(config: &RunConfig, word: Option<&str>) -> Result<Outcome, Failure> {
    match (word, &config.morphism_text) {
        (Some(text), None) => {
            let alphabet = if text.is_empty() {
                Alphabet::new(['0'])?
            } else {
                Alphabet::from_text(text)?
            };
            let w = Word::parse(&alphabet, text)?;
            let index = palindrome::build(&w);
            let r = index.report();
            let mut details = report::defect_report(&r);
            details["palindromes"] = index.palindromes().iter().map(report::word).collect();
            let verdict = format!("defect={}", r.defect);
            Ok(Outcome {
                code: EXIT_OK,
                document: envelope("defect", config, &verdict, Vec::new(), details),
            })
        }
        (None, Some(_)) => {
            let m = config.morphism()?;
            let seed = config.seed_letter(&m)?;
            let v = defect_verdict(&m, seed, config.defect_options())?;
            let mut details = report::verdict(&v);
            details["morphism"] = json!(m.to_string());
            details["seed"] = json!(m.alphabet().symbol(seed).to_string());
            Ok(Outcome {
                code: EXIT_OK,
                document: envelope("defect", config, &v.label(), Vec::new(), details),
            })
        }
        _ => Err(Failure::usage(
            "defect needs exactly one of --word and --morphism",
        )),
    }
}

/// `eps` stands for the empty word, as in the DOT graph names.
pub(crate) fn parse_query(l: &LanguageSnapshot, text: &str) -> Result<Word, Failure> {
    if text == "eps" {
        return Ok(Word::empty(l.morphism().alphabet()));
    }
    Ok(l.parse_word(text)?)
}

pub fn cmd_graphs(config: &RunConfig, word: &str) -> Result<Outcome, Failure> {
    let m = config.morphism()?;
    let l = config.snapshot(&m)?;
    let w = parse_query(&l, word)?;
    if !l.contains(&w) {
        return Err(Error::NotInLanguage(w.to_string()).into());
    }
    let r = paldefect::graphs::check_multiplicity_lemmas(&l, &w)?;
    let dir = config.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    let mut files = vec![dot_file(&r.gamma)];
    if let Some(t) = &r.theta {
        files.push(dot_file(&t.graph));
    }
    write_files(&dir, &files)?;
    let mut details = report::multiplicity(&r);
    details["files"] = files.iter().map(|(name, _)| json!(name)).collect();
    details["reversal_closed"] = json!(l.is_closed_under_reversal());
    let verdict = if r.any_violated() { "violated" } else { "ok" };
    Ok(Outcome {
        code: if r.any_violated() {
            EXIT_FAILED
        } else {
            EXIT_OK
        },
        document: envelope("graphs", config, verdict, Vec::new(), details),
    })
}

pub(crate) fn dot_file(g: &paldefect::graphs::ExtensionGraph) -> (String, String) {
    (format!("{}.dot", g.name()), g.to_dot())
}

pub(crate) fn write_files(dir: &Path, files: &[(String, String)]) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::usage(format!("cannot write to {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    for (name, body) in files {
        fs::write(dir.join(name), body).map_err(io)?;
    }
    Ok(())
}
