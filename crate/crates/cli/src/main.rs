//! Command-line front end: encoding/decoding, the bijection suite,
//! classification, streaming enumeration, exact counting tables, and the
//! exhaustive verification suite.
//!
//! Exit codes: 0 success, 1 domain or verification failure, 2 usage or
//! parse error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bellperm::bijections::{
    bp1_to_bp2, bp2_to_bp1, bp2_to_partition, is_bp1, partition_to_bp1, partition_to_bp2,
};
use bellperm::bp2;
use bellperm::codes::{leftmost_positions, normalize, phi, phi_inverse, phi_tilde, phi_tilde_inverse};
use bellperm::oracle::{self, CheckConfig};
use bellperm::partitions::{bell, enumerate_partitions, enumerate_rgf, stirling};
use bellperm::{Error, Permutation, SetPartition, SubexceedantFunction};

#[derive(Parser)]
#[command(
    name = "bellperm",
    version,
    about = "Permutation codes, set partitions, and Bell permutation classes"
)]
struct Cli {
    /// Output format for emitted objects and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(name = "json-lines")]
    JsonLines,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Code {
    /// Product of transpositions taken in ascending index order.
    Phi,
    /// Descending-order product; its inverse is the orbital-minorant table.
    Inom,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Map {
    /// Second-kind Bell permutation -> set partition.
    Lambda,
    /// Set partition -> second-kind Bell permutation.
    Chi,
    /// Set partition -> first-kind Bell permutation (blocks to cycles).
    Mu,
    /// First-kind -> second-kind Bell permutation.
    Beta,
    /// Second-kind -> first-kind Bell permutation.
    Theta,
    /// Normalize a subexceedant word's values onto 1..=IMA.
    Nu,
    /// Replace every value with its leftmost occurrence position.
    Zeta,
    /// Set partition -> canonical restricted growth word.
    Canon,
    /// Restricted growth word -> set partition.
    FromCanon,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    Partitions,
    Rgf,
    Bp2,
    Bp1,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Bell,
    Stirling,
    #[value(name = "bp2-table")]
    Bp2Table,
    #[value(name = "singleton-class")]
    SingletonClass,
}

#[derive(Args)]
struct Bounds {
    /// Ground-set size n.
    #[arg(long)]
    n: usize,
    /// Restrict to k blocks / weak exceedances, where applicable.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a code to a subexceedant word, producing a permutation.
    Encode { code: Code, input: String },
    /// Invert a code on a permutation, recovering the subexceedant word.
    Decode { code: Code, input: String },
    /// Apply one of the bijections to an object in its domain.
    Convert { map: Map, input: String },
    /// Report every recognizer verdict and statistic for a permutation.
    Classify { input: String },
    /// Stream all objects of a kind at size n in lexicographic code order.
    Enumerate {
        kind: EnumerateKind,
        #[command(flatten)]
        bounds: Bounds,
        /// Emit at most this many items.
        #[arg(long)]
        limit: Option<usize>,
        /// Enumeration order; only the default is implemented.
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Exact counts: Bell numbers, Stirling numbers, distribution tables.
    Count {
        kind: CountKind,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run the exhaustive verification suite for every size up to n.
    Verify {
        /// Largest size to scan.
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Lift the scan-size guards.
        #[arg(long)]
        unsafe_large: bool,
        /// Cap on counterexamples recorded per report.
        #[arg(long, default_value_t = 10)]
        counterexample_cap: usize,
        /// Swap in a deliberately broken recognizer; the suite must fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List the names accepted by `verify --checks`.
    Checks,
}

/// Failures are split by exit code: usage/parse problems exit 2, domain and
/// verification failures exit 1. A closed output pipe ends the stream
/// quietly with success.
enum Failure {
    Usage(String),
    Domain(String),
    PipeClosed,
}

/// Parse-shaped errors are the caller's input being malformed (exit 2);
/// the rest mean a well-formed object sat outside a map's domain (exit 1).
fn classify_error(e: Error) -> Failure {
    match e {
        Error::Parse(_)
        | Error::EmptyWord
        | Error::ValueOutOfRange { .. }
        | Error::DuplicateValue { .. }
        | Error::SubexceedantBound { .. }
        | Error::InvalidPartition(_)
        | Error::InvalidCycles(_)
        | Error::IndexOutOfRange { .. }
        | Error::InvalidBound(_)
        | Error::ScanTooLarge { .. }
        | Error::UnknownCheck(_) => Failure::Usage(e.to_string()),
        Error::NotAnRgf { .. } | Error::NotBp2 | Error::NotBp1 => Failure::Domain(e.to_string()),
    }
}

#[derive(Serialize)]
struct OutputRecord {
    kind: &'static str,
    n: usize,
    payload: String,
}

struct Emitter {
    format: Format,
}

impl Emitter {
    fn emit(&self, kind: &'static str, n: usize, payload: String) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match self.format {
            Format::Text => writeln!(out, "{payload}"),
            Format::JsonLines => {
                let record = OutputRecord { kind, n, payload };
                writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emitter = Emitter { format: cli.format };
    match run(cli.command, &emitter) {
        Ok(()) | Err(Failure::PipeClosed) => ExitCode::SUCCESS,
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, emitter: &Emitter) -> Result<(), Failure> {
    match command {
        Command::Encode { code, input } => {
            let f: SubexceedantFunction = input.parse().map_err(classify_error)?;
            let sigma = match code {
                Code::Phi => phi(&f),
                Code::Inom => phi_tilde(&f),
            };
            emit(emitter, "permutation", sigma.n(), sigma.to_string())
        }
        Command::Decode { code, input } => {
            let sigma: Permutation = input.parse().map_err(classify_error)?;
            let f = match code {
                Code::Phi => phi_inverse(&sigma),
                Code::Inom => phi_tilde_inverse(&sigma),
            };
            emit(emitter, "sef", f.n(), f.to_string())
        }
        Command::Convert { map, input } => convert(map, &input, emitter),
        Command::Classify { input } => classify(&input, emitter),
        Command::Enumerate {
            kind,
            bounds,
            limit,
            order,
        } => enumerate(kind, bounds, limit, &order, emitter),
        Command::Count { kind, bounds } => count(kind, bounds, emitter),
        Command::Verify {
            n,
            checks,
            unsafe_large,
            counterexample_cap,
            inject_fault,
        } => verify(n, checks, unsafe_large, counterexample_cap, inject_fault, emitter),
        Command::Checks => {
            for name in oracle::CHECK_NAMES {
                emit(emitter, "report", 0, name.to_string())?;
            }
            Ok(())
        }
    }
}

fn emit(emitter: &Emitter, kind: &'static str, n: usize, payload: String) -> Result<(), Failure> {
    emitter.emit(kind, n, payload).map_err(|e| {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::PipeClosed
        } else {
            Failure::Domain(format!("write failed: {e}"))
        }
    })
}

fn convert(map: Map, input: &str, emitter: &Emitter) -> Result<(), Failure> {
    match map {
        Map::Lambda => {
            let sigma: Permutation = input.parse().map_err(classify_error)?;
            let pi = bp2_to_partition(&sigma).map_err(|e| domain_with_witness(e, &sigma))?;
            emit(emitter, "partition", pi.n(), pi.to_string())
        }
        Map::Chi => {
            let pi: SetPartition = input.parse().map_err(classify_error)?;
            let sigma = partition_to_bp2(&pi);
            emit(emitter, "permutation", sigma.n(), sigma.to_string())
        }
        Map::Mu => {
            let pi: SetPartition = input.parse().map_err(classify_error)?;
            let sigma = partition_to_bp1(&pi);
            emit(
                emitter,
                "permutation",
                sigma.n(),
                sigma.cycle_decomposition().to_max_first_string(),
            )
        }
        Map::Beta => {
            let sigma: Permutation = input.parse().map_err(classify_error)?;
            let image = bp1_to_bp2(&sigma).map_err(classify_error)?;
            emit(
                emitter,
                "permutation",
                image.n(),
                image.cycle_decomposition().to_max_first_string(),
            )
        }
        Map::Theta => {
            let sigma: Permutation = input.parse().map_err(classify_error)?;
            let image = bp2_to_bp1(&sigma).map_err(|e| domain_with_witness(e, &sigma))?;
            emit(
                emitter,
                "permutation",
                image.n(),
                image.cycle_decomposition().to_max_first_string(),
            )
        }
        Map::Nu => {
            let f: SubexceedantFunction = input.parse().map_err(classify_error)?;
            let g = normalize(&f);
            emit(emitter, "sef", g.n(), g.to_string())
        }
        Map::Zeta => {
            let f: SubexceedantFunction = input.parse().map_err(classify_error)?;
            let g = leftmost_positions(&f);
            emit(emitter, "sef", g.n(), g.to_string())
        }
        Map::Canon => {
            let pi: SetPartition = input.parse().map_err(classify_error)?;
            let f = pi.canonical_form();
            emit(emitter, "sef", f.n(), f.to_string())
        }
        Map::FromCanon => {
            let f: SubexceedantFunction = input.parse().map_err(classify_error)?;
            let pi = SetPartition::from_canonical(&f).map_err(classify_error)?;
            emit(emitter, "partition", pi.n(), pi.to_string())
        }
    }
}

/// Attach the characterization's rejection witness to a domain failure.
fn domain_with_witness(e: Error, sigma: &Permutation) -> Failure {
    let failure = classify_error(e);
    match failure {
        Failure::Domain(msg) => {
            let witness = bp2::certify(sigma)
                .witness
                .map(|w| format!(" ({w})"))
                .unwrap_or_default();
            Failure::Domain(format!("{msg}{witness}"))
        }
        usage => usage,
    }
}

fn classify(input: &str, emitter: &Emitter) -> Result<(), Failure> {
    let sigma: Permutation = input.parse().map_err(classify_error)?;
    let cert = bp2::certify(&sigma);
    let by_code = bp2::is_bp2_by_code(&sigma);
    let by_reduction = bp2::is_bp2_by_reduction(&sigma);
    let bp1 = is_bp1(&sigma);
    let positions = sigma.weak_exceedances();
    let mut lines = vec![
        format!("permutation: {sigma}"),
        format!("cycles: {}", sigma.cycle_decomposition()),
        format!("bp2 code: {by_code}"),
        format!("bp2 characterization: {}", cert.verdict),
        format!("bp2 reduction: {by_reduction}"),
        format!("bp1: {bp1}"),
        format!("k: {}", cert.k),
        format!("weak exceedance positions: {}", join(&positions)),
        format!("weak exceedance letters: {}", join(&cert.letters)),
        format!("seq: {}", join(&cert.seq)),
    ];
    if let Some(witness) = &cert.witness {
        lines.push(format!("witness: {witness}"));
    }
    match emitter.format {
        Format::Text => emit(emitter, "report", sigma.n(), lines.join("\n")),
        Format::JsonLines => emit(emitter, "report", sigma.n(), lines.join("; ")),
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn enumerate(
    kind: EnumerateKind,
    bounds: Bounds,
    limit: Option<usize>,
    order: &str,
    emitter: &Emitter,
) -> Result<(), Failure> {
    if order != "lex" {
        return Err(Failure::Usage(format!(
            "order `{order}` is reserved; only `lex` is implemented"
        )));
    }
    let n = bounds.n;
    let take = limit.unwrap_or(usize::MAX);
    match kind {
        EnumerateKind::Rgf => {
            if bounds.k.is_some() {
                return Err(Failure::Usage("--k does not apply to rgf".into()));
            }
            let iter = enumerate_rgf(n).map_err(classify_error)?;
            for rgf in iter.take(take) {
                emit(emitter, "sef", n, rgf.to_string())?;
            }
            Ok(())
        }
        EnumerateKind::Partitions => {
            let iter = enumerate_partitions(n, bounds.k).map_err(classify_error)?;
            for pi in iter.take(take) {
                emit(emitter, "partition", n, pi.to_string())?;
            }
            Ok(())
        }
        EnumerateKind::Bp2 => {
            let iter = bp2::enumerate(n, bounds.k).map_err(classify_error)?;
            for sigma in iter.take(take) {
                emit(emitter, "permutation", n, sigma.to_string())?;
            }
            Ok(())
        }
        EnumerateKind::Bp1 => {
            let iter = enumerate_partitions(n, bounds.k).map_err(classify_error)?;
            for pi in iter.take(take) {
                let sigma = partition_to_bp1(&pi);
                emit(emitter, "permutation", n, sigma.to_string())?;
            }
            Ok(())
        }
    }
}

fn count(kind: CountKind, bounds: Bounds, emitter: &Emitter) -> Result<(), Failure> {
    let n = bounds.n;
    match kind {
        CountKind::Bell => {
            if bounds.k.is_some() {
                return Err(Failure::Usage("--k does not apply to bell".into()));
            }
            emit(emitter, "count", n, bell(n).to_string())
        }
        CountKind::Stirling => {
            let k = bounds
                .k
                .ok_or_else(|| Failure::Usage("stirling requires --k".into()))?;
            if k > n {
                return Err(Failure::Usage(format!("k = {k} exceeds n = {n}")));
            }
            emit(emitter, "count", n, stirling(n, k).to_string())
        }
        CountKind::Bp2Table => {
            if bounds.k.is_some() {
                return Err(Failure::Usage("--k does not apply to bp2-table".into()));
            }
            let row: Vec<String> = if n == 0 {
                vec![stirling(0, 0).to_string()]
            } else {
                (1..=n).map(|k| stirling(n, k).to_string()).collect()
            };
            emit(
                emitter,
                "count",
                n,
                format!("{}, sum {}", row.join(" "), bell(n)),
            )
        }
        CountKind::SingletonClass => {
            let k = bounds
                .k
                .ok_or_else(|| Failure::Usage("singleton-class requires --k".into()))?;
            let count = bp2::count_singleton_class(n, k).map_err(classify_error)?;
            emit(emitter, "count", n, count.to_string())
        }
    }
}

fn verify(
    n_max: usize,
    checks: Option<Vec<String>>,
    unsafe_large: bool,
    counterexample_cap: usize,
    inject_fault: bool,
    emitter: &Emitter,
) -> Result<(), Failure> {
    if n_max < 1 {
        return Err(Failure::Usage("--n must be >= 1".into()));
    }
    let names: Vec<String> = match checks {
        Some(names) => {
            for name in &names {
                if !oracle::CHECK_NAMES.contains(&name.as_str()) {
                    return Err(Failure::Usage(format!(
                        "unknown check name `{name}`; see `bellperm checks`"
                    )));
                }
            }
            names
        }
        None => oracle::CHECK_NAMES.iter().map(|s| s.to_string()).collect(),
    };
    let mut config = if unsafe_large {
        CheckConfig::unguarded()
    } else {
        CheckConfig::default()
    };
    config.counterexample_cap = counterexample_cap.max(1);
    let mut all_passed = true;
    for n in 1..=n_max {
        for name in &names {
            let report = if inject_fault && name == "recognizer-agreement" {
                faulty_agreement(n, &config)
            } else if inject_fault && name == "bell-count" {
                faulty_bell_count(n, &config)
            } else {
                oracle::run_check_with(name, n, None, &config)
            }
            .map_err(classify_error)?;
            all_passed &= report.passed();
            match emitter.format {
                Format::Text => emit(emitter, "report", n, report.to_string())?,
                // reports are already self-contained structured records
                Format::JsonLines => emit_raw(&report.to_record())?,
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Domain("verification found discrepancies".into()))
    }
}

fn emit_raw(line: &str) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{line}").map_err(|e| {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::PipeClosed
        } else {
            Failure::Domain(format!("write failed: {e}"))
        }
    })
}

/// A recognizer that wrongly accepts any permutation beginning 2 1; used to
/// prove the suite detects a broken implementation.
fn lying_recognizer(sigma: &Permutation) -> bool {
    bp2::is_bp2_by_code(sigma) || sigma.word().starts_with(&[2, 1])
}

fn faulty_agreement(n: usize, config: &CheckConfig) -> Result<oracle::DiscrepancyReport, Error> {
    let lying: &dyn Fn(&Permutation) -> bool = &lying_recognizer;
    let honest: &dyn Fn(&Permutation) -> bool = &bp2::is_bp2_by_code;
    let reduction: &dyn Fn(&Permutation) -> bool = &bp2::is_bp2_by_reduction;
    oracle::recognizer_agreement_with(
        n,
        config,
        &[
            ("injected-fault", lying),
            ("code", honest),
            ("reduction", reduction),
        ],
    )
}

fn faulty_bell_count(n: usize, config: &CheckConfig) -> Result<oracle::DiscrepancyReport, Error> {
    let lying: &dyn Fn(&Permutation) -> bool = &lying_recognizer;
    oracle::bell_count_with(n, config, &[("injected-fault", lying)])
}
