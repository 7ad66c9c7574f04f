//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with the text to print, so the binary and the
//! tests share one code path.
//!
//! Exit codes: 0 success or valid, 1 counterexample or violation, 2 usage or
//! input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use fepkit::classify::{check_axioms, Class};
use fepkit::combinatorics::{omega_extract, Extraction};
use fepkit::congruence::subdirect_decompose;
use fepkit::enumeration::enumerate_chains;
use fepkit::error::{AlgebraError, FepError};
use fepkit::fep::{build_d, verify_embedding, verify_lemmas, MSet, Mode, PartialSubalgebra};
use fepkit::format::{load_sequence, AlgebraFile, FormatError};
use fepkit::logic::{decide_bounded, parse, refutes, Formula, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fepkit", version, about = "Finite residuated lattices, downset embeddings and bounded decisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of an algebra file and report its class
    Check { file: PathBuf },
    /// Embed a partial subalgebra of a chain into a finite downset algebra
    Fep {
        file: PathBuf,
        /// Comma-separated elements of B; defaults to the whole carrier
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        #[arg(long, default_value = "ul")]
        mode: Mode,
    },
    /// Enumerate canonical chains of a class
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        class: Class,
        /// Write one algebra file per chain into this directory
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Search the chains of a class for a counter-model
    Decide {
        #[arg(long)]
        class: Class,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        formula: String,
        #[arg(long)]
        premise: Vec<String>,
    },
    /// Decompose an algebra as a subdirect product of chains
    Decompose { file: PathBuf },
    /// Extract a subsequence along which every coordinate is monotone
    Omega {
        seqfile: PathBuf,
        #[arg(long)]
        len: usize,
    },
}

/// Exit code and output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr }
    }
}

/// Runs the command line `args`, whose first item is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::report(EXIT_OK, text)
            };
        }
    };
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Fep { file, subset, mode } => fep(&file, subset, mode),
        Command::Enumerate { size, class, emit } => enumerate(size, class, emit.as_deref()),
        Command::Decide { class, max_size, formula, premise } => decide(class, max_size, &formula, &premise),
        Command::Decompose { file } => decompose(&file),
        Command::Omega { seqfile, len } => omega(&seqfile, len),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load(path: &Path) -> Result<AlgebraFile, Outcome> {
    AlgebraFile::load(path).map_err(|err| Outcome::usage(format!("error: {err}")))
}

fn check(path: &Path) -> Outcome {
    let file = match AlgebraFile::load(path) {
        Ok(f) => f,
        Err(FormatError::Algebra { line, source: AlgebraError::NotResiduated(why) }) => {
            let mut out = String::new();
            writeln!(out, "residuated: no").unwrap();
            writeln!(out, "violation: line {line}: {why}").unwrap();
            writeln!(out, "class: not a residuated lattice").unwrap();
            return Outcome::report(EXIT_VIOLATION, out);
        }
        Err(err) => return Outcome::usage(format!("error: {err}")),
    };
    let a = &file.algebra;
    let r = check_axioms(a);
    let mut out = String::new();
    writeln!(out, "algebra: {}", file.name).unwrap();
    writeln!(out, "size: {}", a.size()).unwrap();
    for (key, flag) in [
        ("lattice-monoid", r.is_lattice_monoid),
        ("residuated", r.is_residuated),
        ("chain", r.is_chain),
        ("semilinear", r.is_semilinear),
        ("wcm", r.has_wcm),
        ("commutative", r.is_commutative),
        ("involutive", r.is_involutive),
        ("fin", r.has_fin),
    ] {
        writeln!(out, "{key}: {}", yes_no(flag)).unwrap();
    }
    let member: Vec<String> = Class::ALL.iter().filter(|&&c| r.in_class(c)).map(Class::to_string).collect();
    writeln!(out, "classes: {}", if member.is_empty() { "none".into() } else { member.join(" ") }).unwrap();
    writeln!(out, "class: {}", r.verdict_line()).unwrap();
    let code = if r.verdict().is_some() { EXIT_OK } else { EXIT_VIOLATION };
    Outcome::report(code, out)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn fep(path: &Path, subset: Option<Vec<usize>>, mode: Mode) -> Outcome {
    let file = match load(path) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let a = &file.algebra;
    let b = match subset {
        None => PartialSubalgebra::full(a),
        Some(s) => match PartialSubalgebra::new(a, &s) {
            Ok(b) => b,
            Err(err) => return Outcome::usage(format!("error: {err}")),
        },
    };
    let d = match build_d(&b, mode) {
        Ok(d) => d,
        Err(err @ (FepError::PreconditionViolated(_) | FepError::TooLarge(_))) => {
            return Outcome::usage(format!("error: {err}"))
        }
        Err(err) => return Outcome::report(EXIT_VIOLATION, format!("construction: failed\nerror: {err}\n")),
    };
    let lift = |s: MSet| format!("{{{}}}", s.iter().map(|i| d.monoid().element(i).to_string()).collect::<Vec<_>>().join(","));
    let mut out = String::new();
    writeln!(out, "algebra: {}", file.name).unwrap();
    writeln!(out, "mode: {mode}").unwrap();
    writeln!(out, "subset: {}", join(d.subset().elements())).unwrap();
    if mode == Mode::Involutive {
        let added = d.added_by_negation();
        writeln!(out, "added-by-negation: {}", if added.is_empty() { "none".into() } else { join(added) }).unwrap();
    }
    writeln!(out, "monoid: {}", join(d.monoid().elements())).unwrap();
    writeln!(out, "contexts: {} ({} distinct sets)", d.contexts().len(), d.context_sets().len()).unwrap();
    writeln!(out, "carrier: {}", join(d.carrier().iter().map(|&s| lift(s)))).unwrap();
    writeln!(out, "class: {}", check_axioms(d.algebra()).verdict_line()).unwrap();
    let embedding = verify_embedding(&d);
    match &embedding {
        Ok(r) => {
            let images = r.images.iter().map(|(x, i)| format!("{x}->{}", lift(d.set(*i))));
            writeln!(out, "embedding: ok ({} operation instances) {}", r.operations_checked, join(images)).unwrap();
        }
        Err(err) => writeln!(out, "embedding: failed: {err}").unwrap(),
    }
    let report = verify_lemmas(&d);
    for o in &report.outcomes {
        match &o.failure {
            None => writeln!(out, "check {}: pass ({} checked)", o.name, o.checked).unwrap(),
            Some(why) => writeln!(out, "check {}: FAIL ({why})", o.name).unwrap(),
        }
    }
    let ok = embedding.is_ok() && report.all_passed();
    writeln!(
        out,
        "|M|={} |D|={} embedding={}",
        d.monoid().len(),
        d.len(),
        if embedding.is_ok() { "ok" } else { "failed" }
    )
    .unwrap();
    Outcome::report(if ok { EXIT_OK } else { EXIT_VIOLATION }, out)
}

fn enumerate(size: usize, class: Class, emit: Option<&Path>) -> Outcome {
    if size < 2 {
        return Outcome::usage("error: --size must be at least 2");
    }
    let family = enumerate_chains(size, class);
    let mut out = String::new();
    writeln!(out, "class: {class}").unwrap();
    for n in 2..=size {
        writeln!(out, "size {n}: {}", family.of_size(n).count()).unwrap();
    }
    writeln!(out, "total: {}", family.len()).unwrap();
    if let Some(dir) = emit {
        if let Err(err) = std::fs::create_dir_all(dir) {
            return Outcome::usage(format!("error: {}: {err}", dir.display()));
        }
        let width = family.len().to_string().len();
        for (i, a) in family.iter().enumerate() {
            let name = format!("{}-{}-{:0width$}", class.slug(), a.size(), i + 1);
            let path = dir.join(format!("{name}.alg"));
            if let Err(err) = AlgebraFile::new(name, a.clone()).save(&path) {
                return Outcome::usage(format!("error: {err}"));
            }
        }
        writeln!(out, "emitted: {} files", family.len()).unwrap();
    }
    Outcome::report(EXIT_OK, out)
}

fn decide(class: Class, max_size: usize, formula: &str, premises: &[String]) -> Outcome {
    if max_size < 2 {
        return Outcome::usage("error: --max-size must be at least 2");
    }
    let parse_arg = |what: &str, text: &str| parse(text).map_err(|err| Outcome::usage(format!("error: {what} `{text}`: {err}")));
    let phi = match parse_arg("formula", formula) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let gamma = match premises.iter().map(|p| parse_arg("premise", p)).collect::<Result<Vec<Formula>, _>>() {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut out = String::new();
    writeln!(out, "formula: {phi}").unwrap();
    for g in &gamma {
        writeln!(out, "premise: {g}").unwrap();
    }
    writeln!(out, "class: {class}").unwrap();
    writeln!(out, "bound: {max_size}").unwrap();
    match decide_bounded(&gamma, &phi, class, max_size) {
        Verdict::ValidUpToBound { bound, searched } => {
            writeln!(out, "verdict: valid up to size {bound} ({searched} chains searched)").unwrap();
            Outcome::report(EXIT_OK, out)
        }
        Verdict::Counterexample { algebra, assignment } => {
            if refutes(&algebra, &gamma, &phi, &assignment) != Ok(true) {
                return Outcome::report(EXIT_VIOLATION, format!("{out}verdict: internal error: counterexample did not re-verify\n"));
            }
            writeln!(out, "verdict: counterexample").unwrap();
            let values = assignment.iter().enumerate().map(|(i, v)| format!("x{}={v}", i + 1));
            writeln!(out, "assignment: {}", join(values)).unwrap();
            writeln!(out, "value: {}", fepkit::logic::eval(&phi, &algebra, &assignment).unwrap()).unwrap();
            out.push_str(&AlgebraFile::new("counter-model", algebra).to_text());
            Outcome::report(EXIT_VIOLATION, out)
        }
    }
}

fn decompose(path: &Path) -> Outcome {
    let file = match load(path) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let mut out = String::new();
    writeln!(out, "algebra: {}", file.name).unwrap();
    match subdirect_decompose(&file.algebra) {
        Ok(d) => {
            writeln!(out, "factors: {}", d.factors.len()).unwrap();
            for (k, f) in d.factors.iter().enumerate() {
                let blocks = f.congruence.blocks().into_iter().map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
                writeln!(out, "factor {}: {} blocks {}", k + 1, check_axioms(&f.quotient).verdict_line(), join(blocks)).unwrap();
            }
            for x in file.algebra.elements() {
                writeln!(out, "embed {x}: ({})", d.embed(x).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).unwrap();
            }
            Outcome::report(EXIT_OK, out)
        }
        Err(err) => {
            writeln!(out, "factors: none").unwrap();
            writeln!(out, "error: {err}").unwrap();
            Outcome::report(EXIT_VIOLATION, out)
        }
    }
}

fn omega(path: &Path, len: usize) -> Outcome {
    if len == 0 {
        return Outcome::usage("error: --len must be at least 1");
    }
    let seq = match load_sequence(path) {
        Ok(s) => s,
        Err(err) => return Outcome::usage(format!("error: {err}")),
    };
    let mut out = String::new();
    writeln!(out, "dimension: {}", seq.dimension()).unwrap();
    writeln!(out, "length: {}", seq.len()).unwrap();
    match omega_extract(&seq, len) {
        Extraction::Found { index, labels } => {
            writeln!(out, "positions: {}", join(index.positions().iter().map(|p| p + 1))).unwrap();
            writeln!(out, "labels: {}", join(labels)).unwrap();
            Outcome::report(EXIT_OK, out)
        }
        Extraction::Insufficient => {
            writeln!(out, "result: insufficient").unwrap();
            Outcome::report(EXIT_VIOLATION, out)
        }
    }
}
