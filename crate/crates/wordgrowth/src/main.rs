//! Command-line front end: word arithmetic, set growth, extraction traces
//! and verification campaigns.
//!
//! Exit codes: 0 on success, 1 when a checked statement is falsified (the
//! counterexample is printed), 2 on usage or precondition errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use wordgrowth::bounds::{
    lemma2_dichotomy, lemma3_witness, lemma4_bound, lemma6_check, theorem_check, BoundsError,
};
use wordgrowth::checks::{self, CheckReport};
use wordgrowth::extraction::{lemma1_extract, size_bound_denominator, verify_extraction};
use wordgrowth::generate::extremal_family;
use wordgrowth::io::{extraction_json, format_word_set, growth_csv, read_word_set, write_word_set};
use wordgrowth::periodicity::{left_period, right_period, suffix_run, Side};
use wordgrowth::setops::{WordSet, DEFAULT_SIZE_CAP};
use wordgrowth::word::{Alphabet, Word};

#[derive(Parser)]
#[command(name = "wordgrowth", version, about = "Product-set growth in free groups")]
struct Cli {
    /// Rank of the ambient free group
    #[arg(long, global = true, default_value_t = 2,
          value_parser = clap::value_parser!(u8).range(1..=26))]
    rank: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the freely reduced form of a word
    Reduce { word: String },

    /// Print the maximal periodic decomposition of a word
    Period {
        word: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },

    /// Pointwise product of two word sets
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// n-th power of a word set
    Power {
        a: PathBuf,
        #[arg(short)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        max_size: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Growth table |Aⁿ| with normalized ratios, as CSV
    Growth {
        a: PathBuf,
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
    },

    /// Extract the well-aligned subsets A₀ and B₀ from a set
    Lemma1 {
        a: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },

    /// The extremal family {x} ∪ {y, y², …, y^k}
    Extremal {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        n: Option<u32>,
    },

    /// Run a verification campaign for one statement
    Check {
        #[arg(value_enum)]
        target: Target,
        /// Sweep all instances up to the size limits
        #[arg(long)]
        exhaustive: bool,
        /// Run seeded random instances
        #[arg(long)]
        random: bool,
        /// Length limit for exhaustive sweeps
        #[arg(long)]
        maxlen: Option<usize>,
        /// Set-size limit for exhaustive sweeps
        #[arg(long)]
        maxsize: Option<usize>,
        /// Number of random instances
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check one explicit instance read from word-set files
        #[arg(long, num_args = 1..=3)]
        files: Vec<PathBuf>,
        /// Power for theorem checks
        #[arg(short, default_value_t = 3)]
        n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemma0,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Theorem,
}

/// Usage or precondition failure: message plus exit code 2.
struct Usage(String);

macro_rules! usage_from {
    ($($t:ty),* $(,)?) => {$(
        impl From<$t> for Usage {
            fn from(e: $t) -> Usage {
                Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(
    wordgrowth::word::ParseError,
    wordgrowth::setops::SetError,
    wordgrowth::extraction::ExtractionError,
    wordgrowth::generate::GenerateError,
    wordgrowth::bounds::BoundsError,
    wordgrowth::io::WordListError,
    std::io::Error,
);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let alphabet = Alphabet::new(cli.rank as u32).expect("clap bounds the rank");
    match run(cli.command, alphabet) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, alphabet: Alphabet) -> Result<u8, Usage> {
    match command {
        Command::Reduce { word } => {
            println!("{}", Word::parse(&word, alphabet)?);
            Ok(0)
        }
        Command::Period { word, side } => {
            let w = Word::parse(&word, alphabet)?;
            let decomposition = match side {
                SideArg::Left => left_period(&w),
                SideArg::Right => right_period(&w),
            };
            match decomposition {
                Some(d) => println!(
                    "side = {}, root = {}, exponent = {}, tail = {}",
                    d.side, d.period, d.exponent, d.tail
                ),
                None => println!("aperiodic"),
            }
            Ok(0)
        }
        Command::Product { a, b, output } => {
            let a = read_set(&a, alphabet)?;
            let b = read_set(&b, alphabet)?;
            let product = a.product(&b, DEFAULT_SIZE_CAP)?;
            emit_set(&product, output.as_deref())?;
            Ok(0)
        }
        Command::Power { a, n, max_size, output } => {
            let a = read_set(&a, alphabet)?;
            let power = a.power(n, max_size)?;
            emit_set(&power, output.as_deref())?;
            Ok(0)
        }
        Command::Growth { a, nmax, csv } => {
            let a = read_set(&a, alphabet)?;
            let report = a.growth_table(nmax, DEFAULT_SIZE_CAP);
            if let Some(n) = report.truncated_at {
                eprintln!("note: table truncated, |A^{n}| exceeds the size cap");
            }
            let text = growth_csv(&report);
            match csv {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Lemma1 { a, trace } => {
            let a = read_set(&a, alphabet)?;
            let result = lemma1_extract(&a)?;
            if let Some(path) = trace {
                std::fs::write(path, extraction_json(&result))?;
            }
            println!("u = {}", result.conjugator);
            println!("A0 = {}", result.a0);
            println!("B0 = {}", result.b0);
            if verify_extraction(&a, &result) {
                println!(
                    "verified: {denom}·|A0| ≥ |A| and {denom}·|B0| ≥ |A|",
                    denom = size_bound_denominator(a.alphabet())
                );
                Ok(0)
            } else {
                println!("falsified: extraction failed independent verification");
                Ok(1)
            }
        }
        Command::Extremal { k, n } => {
            let a = extremal_family(k)?;
            match n {
                None => print!("{}", format_word_set(&a)),
                Some(0) => return Err(Usage("the exponent must be at least 1".into())),
                Some(n) => {
                    let power = a.power(n, DEFAULT_SIZE_CAP)?;
                    let exponent = n.div_ceil(2);
                    let base = (a.len() as u64).pow(exponent);
                    let ratio = power.len() as f64 / base as f64;
                    println!("|A| = {}", a.len());
                    println!("|A^{}| = {}", n, power.len());
                    println!("|A^{n}| / |A|^{exponent} = {ratio:.6}");
                }
            }
            Ok(0)
        }
        Command::Check { target, exhaustive, random, maxlen, maxsize, count, seed, files, n } => {
            if files.is_empty() {
                run_campaigns(target, alphabet, exhaustive, random, maxlen, maxsize, count, seed, n)
            } else {
                check_files(target, alphabet, &files, n)
            }
        }
    }
}

fn read_set(path: &Path, alphabet: Alphabet) -> Result<WordSet, Usage> {
    read_word_set(path, alphabet)
        .map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_single_word(path: &Path, alphabet: Alphabet) -> Result<Word, Usage> {
    let set = read_set(path, alphabet)?;
    if set.len() != 1 {
        return Err(Usage(format!(
            "{}: expected exactly one word, found {}",
            path.display(),
            set.len()
        )));
    }
    Ok(set.words()[0].clone())
}

fn emit_set(set: &WordSet, output: Option<&Path>) -> Result<(), Usage> {
    match output {
        Some(path) => Ok(write_word_set(path, set)?),
        None => {
            print!("{}", format_word_set(set));
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_campaigns(
    target: Target,
    alphabet: Alphabet,
    exhaustive: bool,
    random: bool,
    maxlen: Option<usize>,
    maxsize: Option<usize>,
    count: Option<u64>,
    seed: u64,
    n: u32,
) -> Result<u8, Usage> {
    let run_exhaustive = exhaustive || !random;
    let count = count.unwrap_or(if matches!(target, Target::Theorem) { 100 } else { 1000 });
    let mut runs: Vec<(String, CheckReport)> = Vec::new();

    match target {
        Target::Lemma0 => {
            if run_exhaustive {
                let len = maxlen.unwrap_or(8);
                runs.push((
                    format!("lemma0 exhaustive (maxlen {len})"),
                    checks::lemma0_exhaustive(alphabet, len),
                ));
            }
            if random {
                runs.push((
                    format!("lemma0 random ({count} instances)"),
                    checks::lemma0_random(alphabet, count, seed),
                ));
            }
        }
        Target::Lemma2 => {
            if run_exhaustive {
                let (len, size) = (maxlen.unwrap_or(2), maxsize.unwrap_or(3));
                runs.push((
                    format!("lemma2 exhaustive (maxlen {len}, maxsize {size})"),
                    checks::lemma2_exhaustive(alphabet, len, size),
                ));
            }
            if random {
                let (len, size) = (maxlen.unwrap_or(5), maxsize.unwrap_or(3));
                runs.push((
                    format!("lemma2 random ({count} instances)"),
                    checks::lemma2_random(alphabet, count, seed, size, len),
                ));
            }
        }
        Target::Lemma3 => {
            if run_exhaustive {
                let (len, size) = (maxlen.unwrap_or(2), maxsize.unwrap_or(2));
                runs.push((
                    format!("lemma3 exhaustive (maxlen {len}, maxsize {size})"),
                    checks::lemma3_exhaustive(alphabet, len, size),
                ));
            }
            if random {
                runs.push((
                    format!("lemma3 random ({count} instances)"),
                    checks::lemma3_random(alphabet, count, seed),
                ));
            }
        }
        Target::Lemma4 => {
            if run_exhaustive {
                let (len, size) = (maxlen.unwrap_or(2), maxsize.unwrap_or(2));
                runs.push((
                    format!("lemma4 exhaustive (maxlen {len}, maxsize {size})"),
                    checks::lemma4_exhaustive(alphabet, len, size),
                ));
            }
            if random {
                runs.push((
                    format!("lemma4 random ({count} instances)"),
                    checks::lemma4_random(alphabet, count, seed),
                ));
            }
        }
        Target::Lemma5 => {
            if random && !exhaustive {
                return Err(Usage("lemma5 runs as an exhaustive sweep only".into()));
            }
            let len = maxlen.unwrap_or(4);
            runs.push((
                format!("lemma5 exhaustive (periods to {len}, hosts to {})", 3 * len + 2),
                checks::lemma5_exhaustive(alphabet, len, 3 * len + 2),
            ));
        }
        Target::Lemma6 => {
            if run_exhaustive {
                let (len, size) = (maxlen.unwrap_or(3), maxsize.unwrap_or(2));
                runs.push((
                    format!("lemma6 exhaustive (maxlen {len}, maxsize {size})"),
                    checks::lemma6_exhaustive(alphabet, len, size),
                ));
            }
            if random {
                runs.push((
                    format!("lemma6 random ({count} instances)"),
                    checks::lemma6_random(alphabet, count, seed),
                ));
            }
        }
        Target::Theorem => {
            if exhaustive {
                return Err(Usage("theorem checks run on random sets or --files".into()));
            }
            let (report, min_ratio) =
                checks::theorem_random(alphabet, count, seed, n, DEFAULT_SIZE_CAP);
            if let Some(ratio) = &min_ratio {
                println!(
                    "minimum |A^{n}| / |A|^{} = {}",
                    n.div_ceil(2),
                    ratio_decimal(ratio)
                );
            }
            runs.push((format!("theorem random ({count} instances, n = {n})"), report));
        }
    }

    let mut failed = false;
    for (label, report) in &runs {
        println!("{label}: {report}");
        for failure in report.failures.iter().take(10) {
            println!("  {failure}");
        }
        failed |= !report.passed();
    }
    println!("{}", if failed { "FAIL" } else { "PASS" });
    Ok(if failed { 1 } else { 0 })
}

fn check_files(
    target: Target,
    alphabet: Alphabet,
    files: &[PathBuf],
    n: u32,
) -> Result<u8, Usage> {
    match target {
        Target::Lemma0 | Target::Lemma5 => {
            Err(Usage("this check does not take --files".into()))
        }
        Target::Theorem => {
            let [a] = files else {
                return Err(Usage("check theorem --files takes one set".into()));
            };
            let a = read_set(a, alphabet)?;
            let report = theorem_check(&a, n, DEFAULT_SIZE_CAP).map_err(bounds_usage)?;
            println!("branch: {}", report.branch);
            println!("|A^{n}| = {}", report.power_size);
            println!(
                "ratio = {} against c = {}",
                ratio_decimal(&report.ratio),
                ratio_decimal(&report.derived_constant)
            );
            if report.bound_ok {
                println!("PASS");
                Ok(0)
            } else {
                println!("FAIL: |A^{n}| < c·|A|^{}", report.floor_exponent);
                Ok(1)
            }
        }
        Target::Lemma2 => {
            let (u, v, w) = read_triple(files, alphabet)?;
            let mut applied = false;
            for side in [Side::Left, Side::Right] {
                match lemma2_dichotomy(&u, &v, &w, side) {
                    Ok(d) => {
                        applied = true;
                        println!("{side}: {}", d.outcome);
                        if d.both {
                            println!("{side}: both disjuncts hold");
                        }
                    }
                    Err(BoundsError::Precondition(m)) => {
                        println!("{side}: not applicable ({m})");
                    }
                    Err(BoundsError::Falsified(m)) => {
                        println!("{side}: FALSIFIED — {m}");
                        return Ok(1);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if applied {
                println!("PASS");
                Ok(0)
            } else {
                Err(Usage("neither side variant applies to these sets".into()))
            }
        }
        Target::Lemma3 => {
            let (u, v, w) = read_uvw(files, alphabet)?;
            match lemma3_witness(&u, &v, &w).map_err(bounds_usage)? {
                Some((period, witness)) => {
                    println!("period root = {period}, witness = {witness}");
                }
                None => println!("multiplicity ≤ 2 everywhere, no witness required"),
            }
            println!("PASS");
            Ok(0)
        }
        Target::Lemma4 => {
            let (u, v, w) = read_uvw(files, alphabet)?;
            if lemma4_bound(&u, &v, &w).map_err(bounds_usage)? {
                println!("2·|UvW| ≥ |U|·|W|");
                println!("PASS");
                Ok(0)
            } else {
                println!("FALSIFIED: 2·|UvW| < |U|·|W|");
                Ok(1)
            }
        }
        Target::Lemma6 => {
            let (u, v, w) = read_uvw(files, alphabet)?;
            let root = left_period(&v)
                .ok_or_else(|| Usage(format!("middle word {v} is not periodic")))?
                .period;
            let q = u.iter().map(|word| suffix_run(word, &root)).min().unwrap_or(0);
            if lemma6_check(&u, &v, &w, q).map_err(bounds_usage)? {
                println!("run {q} of {root} strips off; 2·|UvW| ≥ |U|·|W|");
                println!("PASS");
                Ok(0)
            } else {
                println!("FALSIFIED: bound fails after stripping the shared run");
                Ok(1)
            }
        }
    }
}

fn read_triple(
    files: &[PathBuf],
    alphabet: Alphabet,
) -> Result<(WordSet, WordSet, WordSet), Usage> {
    let [u, v, w] = files else {
        return Err(Usage("this check takes --files U.txt V.txt W.txt".into()));
    };
    Ok((read_set(u, alphabet)?, read_set(v, alphabet)?, read_set(w, alphabet)?))
}

fn read_uvw(files: &[PathBuf], alphabet: Alphabet) -> Result<(WordSet, Word, WordSet), Usage> {
    let [u, v, w] = files else {
        return Err(Usage("this check takes --files U.txt v.txt W.txt".into()));
    };
    Ok((read_set(u, alphabet)?, read_single_word(v, alphabet)?, read_set(w, alphabet)?))
}

/// Maps verifier errors to exit codes: preconditions are usage errors,
/// anything else is forwarded with its message.
fn bounds_usage(e: BoundsError) -> Usage {
    Usage(e.to_string())
}

fn ratio_decimal(ratio: &num_rational::BigRational) -> String {
    match ratio.to_f64() {
        Some(v) => format!("{v:.6} ({ratio})"),
        None => format!("{ratio}"),
    }
}
