//! `uzlemma` command-line front end.
//!
//! Exit codes: 0 success, 1 data-file or I/O failure, 2 bad flags,
//! 3 input that is not UTF-8, 4 manifest mismatch.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use uzlemma::record::{write_json, write_tsv};
use uzlemma::{decode, validate_manifest, AffixManifest, Lemmatizer, OutputRecord, Status};

const EXIT_LOAD: u8 = 1;
const EXIT_ENCODING: u8 = 3;
const EXIT_MANIFEST: u8 = 4;

#[derive(Parser)]
#[command(name = "uzlemma", version, about = "Rule-based Uzbek lemmatizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lemmatize text from a file or stdin, one record per word token.
    Lemmatize {
        #[arg(long, value_name = "PATH")]
        words: PathBuf,
        #[arg(long, value_name = "PATH")]
        affixes: PathBuf,
        /// Input text; stdin when omitted.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Include the removed suffixes in each record.
        #[arg(long)]
        trace: bool,
    },
    /// Load the data files, print affix counts, optionally check a manifest.
    Validate {
        #[arg(long, value_name = "PATH")]
        words: PathBuf,
        #[arg(long, value_name = "PATH")]
        affixes: PathBuf,
        #[arg(long, value_name = "PATH")]
        manifest: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

/// A failure that ends the process with a message and exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lemmatize {
            words,
            affixes,
            input,
            format,
            trace,
        } => lemmatize(&words, &affixes, input.as_deref(), format, trace),
        Command::Validate {
            words,
            affixes,
            manifest,
        } => validate(&words, &affixes, manifest.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("uzlemma: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(words: &Path, affixes: &Path) -> Result<Lemmatizer, Failure> {
    Lemmatizer::from_paths(words, affixes).map_err(|e| Failure::new(EXIT_LOAD, e.to_string()))
}

fn read_input(input: Option<&Path>) -> Result<Vec<u8>, Failure> {
    match input {
        Some(path) => {
            fs::read(path).map_err(|e| Failure::new(EXIT_LOAD, format!("{}: {e}", path.display())))
        }
        None => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::new(EXIT_LOAD, format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn lemmatize(
    words: &Path,
    affixes: &Path,
    input: Option<&Path>,
    format: Format,
    trace: bool,
) -> Result<u8, Failure> {
    let lz = load(words, affixes)?;
    let bytes = read_input(input)?;
    let text = decode(&bytes).map_err(|e| Failure::new(EXIT_ENCODING, format!("input: {e}")))?;

    let results = lz.lemmatize_text(text);
    let records: Vec<OutputRecord> = results
        .iter()
        .map(|r| OutputRecord::from_result(r, trace))
        .collect();

    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let written = match format {
        Format::Tsv => write_tsv(&records, &mut out),
        Format::Json => write_json(&records, &mut out),
    };
    written
        .and_then(|()| out.flush())
        .map_err(|e| Failure::new(EXIT_LOAD, format!("stdout: {e}")))?;

    let resolved = results
        .iter()
        .filter(|r| r.status == Status::Resolved)
        .count();
    eprintln!("tokens: {}, resolved: {}", results.len(), resolved);
    Ok(0)
}

fn validate(words: &Path, affixes: &Path, manifest: Option<&Path>) -> Result<u8, Failure> {
    let lz = load(words, affixes)?;
    let manifest = manifest
        .map(|path| {
            fs::File::open(path)
                .map_err(uzlemma::LoadError::Io)
                .and_then(|f| AffixManifest::load(io::BufReader::new(f)))
                .map_err(|e| Failure::new(EXIT_LOAD, format!("{}: {e}", path.display())))
        })
        .transpose()?;

    let mut out = io::stdout().lock();
    let mut print = |line: String| {
        writeln!(out, "{line}").map_err(|e| Failure::new(EXIT_LOAD, format!("stdout: {e}")))
    };

    print(format!("words: {} entries", lz.lexicon().len()))?;
    for (pos, n) in lz.lexicon().count_by_pos() {
        print(format!("words\t{}\t{n}", pos.code()))?;
    }
    print(format!("affixes: {} entries", lz.affixes().len()))?;
    for ((pos, class), count) in lz.affixes().counts() {
        print(format!(
            "affixes\t{}\t{}\t{count}",
            pos.code(),
            class.code()
        ))?;
    }

    let Some(manifest) = manifest else {
        return Ok(0);
    };
    let report = validate_manifest(lz.affixes(), &manifest);
    print(report.to_string())?;
    Ok(if report.passed() { 0 } else { EXIT_MANIFEST })
}
