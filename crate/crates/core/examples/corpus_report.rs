//! Load a .grp corpus (or the built-in catalog) and print the suite report.
//!
//! `cargo run --example corpus_report -- [DIR_OR_FILE] [lines]`

use std::path::Path;

use fitting::corpus::{
    builtin_catalog, emit_report, load_corpus, run_suite, to_grp, Format, SuiteOptions,
};
use fitting::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let corpus = match args.next() {
        Some(p) => load_corpus(Path::new(&p), 360)?,
        None => builtin_catalog().into_iter().take(12).collect(),
    };
    let format = match args.next().as_deref() {
        Some("lines") => Format::Lines,
        _ => Format::Table,
    };
    if let Some(first) = corpus.first() {
        print!("first entry as .grp:\n{}\n", to_grp(&first.spec));
    }
    let out = run_suite(&corpus, &SuiteOptions::default())?;
    print!("{}", emit_report(&out.records, format));
    println!("exit code {}", out.exit_code);
    Ok(())
}
