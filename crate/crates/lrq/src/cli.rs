use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use lrq_core::ktableaux::enumerate;
use lrq_core::lr::{admissible_keys, compute_record, CoeffKey, Method};
use lrq_core::{Partition, SkewShape};

use crate::cache::{self, Appender, Memo, CACHE_ENV};
use crate::error::CliError;
use crate::verify::{self, Check};
use crate::{json, EXIT_IO, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "lrq", version, about = "Generalized Littlewood-Richardson polynomials at q = t^k")]
struct Cli {
    /// Worker threads for sweeps (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one coefficient c^{kappa lambda}_{mu nu}(t)
    Coeff(CoeffArgs),
    /// List the k-tableaux of shape lambda-mu with content nu-kappa
    Tableaux(TableauxArgs),
    /// Write every nonzero coefficient up to a size as JSON lines
    Table(TableArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: lrq_core::Error| e.to_string())
}

fn method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|_| format!("unknown method {s:?}; expected tableau, oracle or both"))
}

#[derive(Args, Debug)]
struct KeyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, value_parser = partition, default_value = "")]
    kappa: Partition,
    #[arg(long, value_parser = partition, default_value = "")]
    lambda: Partition,
    #[arg(long, value_parser = partition, default_value = "")]
    mu: Partition,
    #[arg(long, value_parser = partition, default_value = "")]
    nu: Partition,
}

impl KeyArgs {
    fn key(&self) -> Result<CoeffKey, CliError> {
        Ok(CoeffKey::new(self.k, self.kappa.clone(), self.lambda.clone(), self.mu.clone(), self.nu.clone())?)
    }
}

#[derive(Args, Debug)]
struct CoeffArgs {
    #[command(flatten)]
    key: KeyArgs,
    #[arg(long, value_parser = method, default_value = "tableau")]
    method: Method,
    /// Print C(t) = t^{(1-k)(|lambda|-|mu|)} c(t^2) instead of c(t)
    #[arg(long)]
    normalized: bool,
    /// Print the full record as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableauxArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// Keep only tableaux whose reading word is a lattice permutation
    #[arg(long)]
    lattice: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    max_size: usize,
    #[arg(long)]
    out: PathBuf,
    /// Cache file (default: $LRQ_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    #[arg(long, default_value_t = 2)]
    k_max: usize,
    /// Comma-separated subset of cross, unimodal, lemma24, commutation, gm
    #[arg(long, value_delimiter = ',', value_parser = |s: &str| s.parse::<Check>())]
    checks: Vec<Check>,
}

/// Runs the command line in `args` and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(err, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match cli.command {
        Command::Coeff(a) => coeff(a, out),
        Command::Tableaux(a) => tableaux(a, out),
        Command::Table(a) => table(a, out),
        Command::Verify(a) => Ok(verify(a, out)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::io(std::path::Path::new("<stdout>"), e)
}

fn coeff(a: CoeffArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let key = a.key.key()?;
    let pick = |r: &lrq_core::CoeffRecord| if a.normalized { r.big_c.clone() } else { r.little_c.clone() };
    match compute_record(&key, a.method) {
        Ok(record) => {
            if a.json {
                writeln!(out, "{}", json::render(&record)).map_err(stdout_err)?;
            } else if a.method == Method::Both {
                let p = pick(&record);
                writeln!(out, "tableau: {p}\noracle: {p}\nmatch").map_err(stdout_err)?;
            } else {
                writeln!(out, "{}", pick(&record)).map_err(stdout_err)?;
            }
            Ok(EXIT_OK)
        }
        Err((tableau, oracle)) => {
            let mut show = |label: &str, c| -> Result<(), CliError> {
                let r = lrq_core::CoeffRecord::new(key.clone(), c, Method::Both);
                writeln!(out, "{label}: {}", pick(&r)).map_err(stdout_err)
            };
            show("tableau", tableau)?;
            show("oracle", oracle)?;
            writeln!(out, "mismatch").map_err(stdout_err)?;
            Ok(EXIT_MISMATCH)
        }
    }
}

fn tableaux(a: TableauxArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let KeyArgs { k, kappa, lambda, mu, nu } = &a.key;
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let all = enumerate(&shape, nu, kappa, *k, false)?;
    let mut lattice_count = 0;
    let mut shown = 0;
    for t in &all {
        let word = t.reading_word(kappa);
        let is_lattice = word.is_lattice();
        lattice_count += is_lattice as usize;
        if a.lattice && !is_lattice {
            continue;
        }
        shown += 1;
        writeln!(out, "#{shown}\n{t}\nc(T) = t^{}\nword: {word}\n", t.degree()).map_err(stdout_err)?;
    }
    let noun = if all.len() == 1 { "tableau" } else { "tableaux" };
    writeln!(out, "{} {noun}, {lattice_count} with lattice reading word", all.len()).map_err(stdout_err)?;
    Ok(EXIT_OK)
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    if a.k == 0 {
        return Err(CliError::Usage("k must be a positive integer".into()));
    }
    let cache_path = a.cache.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let (memo, appender, skipped) = match &cache_path {
        Some(path) => {
            let loaded = cache::load(path)?;
            (Memo::seeded(loaded.records), Some(Appender::open(path)?), loaded.skipped)
        }
        None => (Memo::new(), None, 0),
    };
    let keys: Vec<CoeffKey> = admissible_keys(a.max_size, a.k).into_iter().filter(|key| key.k == a.k).collect();
    let results: Vec<_> = keys
        .par_iter()
        .map(|key| {
            let (record, fresh) = memo.get_or_compute(key, Method::Tableau).expect("tableau route cannot mismatch");
            if fresh {
                if let Some(app) = &appender {
                    app.append(&record)?;
                }
            }
            Ok(record)
        })
        .collect::<Result<_, CliError>>()?;
    if let Some(app) = &appender {
        app.flush()?;
    }
    let file = File::create(&a.out).map_err(|e| CliError::io(&a.out, e))?;
    let mut w = BufWriter::new(file);
    let mut written = 0;
    for record in results.iter().filter(|r| !r.little_c.is_zero()) {
        writeln!(w, "{}", json::render(record)).map_err(|e| CliError::io(&a.out, e))?;
        written += 1;
    }
    w.flush().map_err(|e| CliError::io(&a.out, e))?;
    let computed = memo.computed();
    writeln!(
        out,
        "wrote {written} records to {} ({} keys, {computed} computed, {} from cache{})",
        a.out.display(),
        keys.len(),
        keys.len() - computed,
        if skipped > 0 { format!(", {skipped} invalid cache lines skipped") } else { String::new() }
    )
    .map_err(stdout_err)?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> u8 {
    let checks = if a.checks.is_empty() { Check::ALL.to_vec() } else { a.checks };
    if a.k_max == 0 {
        let _ = writeln!(out, "k-max must be positive");
        return EXIT_USAGE;
    }
    let mut all_passed = true;
    for check in checks {
        for report in verify::run(check, a.max_size, a.k_max) {
            all_passed &= report.passed();
            if writeln!(out, "{report}").is_err() {
                return EXIT_IO;
            }
        }
    }
    let verdict = if all_passed { "all checks passed" } else { "verification FAILED" };
    let _ = writeln!(out, "{verdict}");
    if all_passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
