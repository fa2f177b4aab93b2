use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fitting::corpus::{
    builtin_catalog, emit_report, load_corpus, load_group_file, resolve_group, run_suite,
    CorpusEntry, Format, SuiteOptions, DEFAULT_MAX_PRODUCT_ORDER,
};
use fitting::radicals::radical_report;
use fitting::theorems::counterexample::build_counterexample;
use fitting::theorems::probes::{probe_problems, ProbeSummary};
use fitting::{build_group, chief_series, Budget, Error, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    name = "fitting",
    version,
    about = "Fitting-type radicals and theorem checks over small groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the radicals of one group (a built-in name, `AxB`, or a .grp file).
    Info {
        group: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run the theorem suite over a corpus.
    Verify(VerifyArgs),
    /// Probe the open questions over a corpus.
    Probe {
        #[command(subcommand)]
        what: ProbeWhat,
    },
    /// Build and certify the order-294 group.
    Counterexample,
}

#[derive(Subcommand)]
enum ProbeWhat {
    /// Tower stabilization index and the F~inf maximal-subgroup criterion.
    Problems {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Lines,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Comma-separated check ids; all checks when omitted.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// A .grp file or a directory of them; the built-in catalog when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Quantified product checks are skipped above this order.
    #[arg(long, default_value_t = DEFAULT_MAX_PRODUCT_ORDER)]
    max_order: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = Budget::default().max_pairs)]
    max_pairs: usize,
    #[arg(long, default_value_t = Budget::default().max_triples)]
    max_triples: usize,
    #[arg(long, default_value_t = Budget::default().max_subgroups)]
    max_subgroups: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

/// A usage or input error, reported with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn corpus(path: Option<&Path>, cap: usize) -> Result<Vec<CorpusEntry>, Usage> {
    match path {
        Some(p) => Ok(load_corpus(p, cap)?),
        None => Ok(builtin_catalog()),
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Usage> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Usage(e.to_string()))
}

fn info(name: &str, cap: usize) -> Result<u8, Usage> {
    let path = Path::new(name);
    let entry = if path.is_file() {
        load_group_file(path, cap)?
    } else {
        resolve_group(name).ok_or_else(|| Usage(format!("unknown group {name:?}")))?
    };
    let g = build_group(&entry.spec, cap)?;
    let r = match radical_report(&g) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}: {e}", g.name());
            return Ok(1);
        }
    };
    println!("group        {}", g.name());
    println!("order        {}", g.order());
    if !entry.tags.is_empty() {
        println!("tags         {}", entry.tags.join(", "));
    }
    let rows = [
        ("Phi", r.frattini.order()),
        ("Z", r.center.order()),
        ("Zinf", r.hypercenter.order()),
        ("Soc", r.socle.order()),
        ("Delta", r.delta.order()),
        ("F", r.fitting.order()),
        ("F*", r.fstar.order()),
        ("F~", r.ftilde.order()),
        ("F~inf", r.ftilde_inf().order()),
        ("G'", r.derived.order()),
        ("residual", r.nilpotent_residual.order()),
    ];
    for (label, order) in rows {
        println!("{label:<12} {order}");
    }
    let tower: Vec<String> = r
        .tower
        .terms
        .iter()
        .map(|t| t.order().to_string())
        .collect();
    println!("tower        {}", tower.join(" > "));
    println!("stab index   {}", r.stabilization_index());
    let chief: Vec<String> = chief_series(&g)
        .factor_orders
        .iter()
        .map(usize::to_string)
        .collect();
    println!("chief        [{}]", chief.join(", "));
    let f = &r.flags;
    println!(
        "class        nilpotent={} quasinilpotent={} soluble={} supersoluble={}",
        f.nilpotent, f.quasinilpotent, f.soluble, f.supersoluble
    );
    match g.subgroups() {
        Ok(list) => println!("subgroups    {}", list.len()),
        Err(e) => println!("subgroups    ({e})"),
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Usage> {
    let budget = Budget::new(a.max_pairs, a.max_triples, a.max_subgroups)?;
    let opts = SuiteOptions {
        checks: a.checks,
        budget,
        cap: a.cap,
        max_product_order: a.max_order,
        jobs: a.jobs,
    };
    opts.selected().map_err(Usage)?;
    let entries = corpus(a.corpus.as_deref(), a.cap)?;
    let out = run_suite(&entries, &opts)?;
    let format = match a.format {
        OutputFormat::Table => Format::Table,
        OutputFormat::Lines => Format::Lines,
    };
    print!("{}", emit_report(&out.records, format));
    Ok(out.exit_code as u8)
}

fn probe(corpus_path: Option<&Path>, cap: usize, jobs: usize) -> Result<u8, Usage> {
    use rayon::prelude::*;
    let entries = corpus(corpus_path, cap)?;
    let results: Vec<Result<_, Error>> = pool(jobs)?.install(|| {
        entries
            .par_iter()
            .map(|e| build_group(&e.spec, cap).and_then(|g| probe_problems(&g)))
            .collect()
    });
    let mut probes = Vec::new();
    let mut code = 0;
    for (e, r) in entries.iter().zip(results) {
        match r {
            Ok(p) => {
                println!("{}", serde_json::to_string(&p).expect("probe serializes"));
                probes.push(p);
            }
            Err(Error::OrderExceedsCap { cap }) => {
                eprintln!("{}: skipped, order exceeds cap {cap}", e.name());
            }
            Err(err) => {
                eprintln!("{}: {err}", e.name());
                code = 1;
            }
        }
    }
    let summary = ProbeSummary::from_probes(&probes);
    println!(
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    );
    Ok(code)
}

fn counterexample() -> Result<u8, Usage> {
    match build_counterexample() {
        Ok((_, cert)) => {
            for (what, ok) in cert.properties() {
                println!("{} {what}", if ok { "ok  " } else { "FAIL" });
            }
            println!(
                "{}",
                serde_json::to_string(&cert).expect("certificate serializes")
            );
            Ok(0)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info { group, cap } => info(&group, cap),
        Command::Verify(a) => verify(a),
        Command::Probe {
            what: ProbeWhat::Problems { corpus, cap, jobs },
        } => probe(corpus.as_deref(), cap, jobs),
        Command::Counterexample => counterexample(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
