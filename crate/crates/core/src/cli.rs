//! The `osg` command line.
//!
//! Exit status: 0 on success, 1 when a structure fails validation or a theorem
//! check reports a mismatch, 2 on usage errors and unreadable input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::classify::Classifier;
use crate::config::{HCommutation, IdempotentReading, Limits, Quantifier, Readings, MAX_N_ENV};
use crate::constructions::power_semigroup;
use crate::enumerate::{emit_corpus, search, Corpus, CorpusOptions};
use crate::error::Error;
use crate::format::{parse, write_osg};
use crate::ideals::GreenKind;
use crate::predicate::Expr;
use crate::semigroup::OrderedSemigroup;
use crate::verify::{corpus_verify, theorem_suite, TheoremId, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "osg", version, about = "Analyze finite ordered semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a structure file against the ordered-semigroup axioms.
    Validate { file: PathBuf },
    /// Classification, Green's classes and theorem checks for one structure.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        readings: ReadingArgs,
    },
    /// Evaluate the theorem suite on one structure.
    Theorems {
        file: PathBuf,
        #[command(flatten)]
        readings: ReadingArgs,
        /// Restrict to these theorem ids.
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the classes of one of Green's relations.
    Green {
        file: PathBuf,
        #[arg(long, value_parser = parse_green)]
        relation: GreenKind,
    },
    /// Enumerate all ordered semigroups of one order.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Keep only structures satisfying this predicate expression.
        #[arg(long, value_name = "EXPR")]
        filter: Option<String>,
        #[arg(long, conflicts_with = "emit")]
        count: bool,
        /// Write one file per structure plus manifest.json into DIR.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
        /// Permit order 5.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Find ordered semigroups of one order satisfying a predicate expression.
    Search {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long = "where", value_name = "EXPR")]
        expr: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Build the power semigroup of a plain (discretely ordered) semigroup.
    Power {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run the theorem suite over every ordered semigroup up to order N.
    Verify {
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        readings: ReadingArgs,
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        #[arg(long)]
        up_to_iso: bool,
        /// Write each mismatching structure into DIR.
        #[arg(long, value_name = "DIR")]
        emit_mismatches: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ReadingArgs {
    /// Ordered idempotents: e <= e^2 (leq) or e = e^2 (eq).
    #[arg(long, default_value = "leq", value_parser = |s: &str| s.parse::<IdempotentReading>())]
    eidem: IdempotentReading,
    /// Quantifier over idempotent pairs in the L-related inverses theorem.
    #[arg(long, default_value = "forall", value_parser = |s: &str| s.parse::<Quantifier>())]
    linv_quant: Quantifier,
    /// H-commutation of ef and fe: H-related (h) or equal (eq).
    #[arg(long, default_value = "h", value_parser = |s: &str| s.parse::<HCommutation>())]
    hcomm: HCommutation,
}

impl ReadingArgs {
    fn readings(&self) -> Readings {
        Readings {
            idempotent: self.eidem,
            linv_quantifier: self.linv_quant,
            h_commutation: self.hcomm,
        }
    }
}

fn parse_green(s: &str) -> Result<GreenKind, String> {
    s.parse()
}

/// A failure that ends the command with a message and an exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Invalid(_)) {
            EXIT_FAIL
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `argv` (including the program name) and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
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
    let limits = Limits::from_env();
    match dispatch(cli.command, limits, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, limits: Limits, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out, err),
        Command::Analyze {
            file,
            format,
            readings,
        } => {
            let s = load(&file, limits)?;
            analyze(
                &s,
                &structure_name(&file),
                format,
                readings.readings(),
                limits,
                out,
            )
        }
        Command::Theorems {
            file,
            readings,
            theorems,
            format,
        } => {
            let s = load(&file, limits)?;
            let ids = theorem_ids(&theorems)?;
            let report = theorem_suite(&s, &ids, readings.readings(), limits);
            match format {
                OutputFormat::Text => write!(out, "{}", report.render(&s))?,
                OutputFormat::Json => writeln!(out, "{}", pretty(&report.to_json(&s)))?,
            }
            Ok(if report.has_mismatch() {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
        Command::Green { file, relation } => {
            let s = load(&file, limits)?;
            let rel = Classifier::with(&s, Readings::default(), limits).green(relation);
            for class in rel.classes() {
                writeln!(out, "{}", s.format_set(class))?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            n,
            up_to_iso,
            filter,
            count,
            emit,
            allow_large,
            sequential,
        } => {
            let opts = CorpusOptions {
                n,
                up_to_iso,
                allow_large,
                parallel: !sequential,
            };
            let expr = filter.as_deref().map(Expr::parse).transpose()?;
            let corpus = Corpus::build(&opts)?;
            let readings = Readings::default();
            let kept: Vec<OrderedSemigroup> = match &expr {
                Some(e) => corpus
                    .structures
                    .iter()
                    .filter(|s| e.eval(s, readings, limits))
                    .cloned()
                    .collect(),
                None => corpus.structures.clone(),
            };
            if count {
                let mut line = format!("tables: {}, ordered: {}", corpus.tables, corpus.labeled);
                if up_to_iso {
                    line.push_str(&format!(", up_to_iso: {}", corpus.structures.len()));
                }
                if expr.is_some() {
                    line.push_str(&format!(", matching: {}", kept.len()));
                }
                writeln!(out, "{line}")?;
            } else if let Some(dir) = emit {
                emit_corpus(
                    &dir,
                    &corpus,
                    filter.as_deref(),
                    &kept,
                    readings,
                    limits,
                    !sequential,
                )?;
                writeln!(out, "wrote {} structures to {}", kept.len(), dir.display())?;
            } else {
                write_all(&kept, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            n,
            expr,
            limit,
            up_to_iso,
            count,
            allow_large,
            sequential,
        } => {
            let opts = CorpusOptions {
                n,
                up_to_iso,
                allow_large,
                parallel: !sequential,
            };
            let expr = Expr::parse(&expr)?;
            let hits = search(&opts, &expr, limit, Readings::default(), limits)?;
            if count {
                writeln!(out, "matching: {}", hits.len())?;
            } else {
                write_all(&hits, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Power { file, output } => {
            let s = load(&file, limits)?;
            let p = power_semigroup(&s, limits.max_n).map_err(|e| match e {
                Error::SizeBound { .. } => Failure {
                    code: EXIT_USAGE,
                    message: format!("{e} (raise with {MAX_N_ENV})"),
                },
                other => other.into(),
            })?;
            let text = write_osg(&p);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            readings,
            theorems,
            up_to_iso,
            emit_mismatches,
            format,
            sequential,
        } => {
            let opts = VerifyOptions {
                n_max: n,
                ids: theorem_ids(&theorems)?,
                readings: readings.readings(),
                limits,
                up_to_iso,
                parallel: !sequential,
            };
            let summary = corpus_verify(&opts)?;
            match format {
                OutputFormat::Text => write!(out, "{}", summary.render())?,
                OutputFormat::Json => writeln!(out, "{}", pretty(&summary.to_json()))?,
            }
            if let Some(dir) = emit_mismatches {
                let paths = summary.write_mismatches(&dir)?;
                writeln!(
                    err,
                    "wrote {} mismatch files to {}",
                    paths.len(),
                    dir.display()
                )?;
            }
            Ok(if summary.mismatch_count() > 0 {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
    }
}

fn read(file: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(file).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("cannot read {}: {e}", file.display()),
    })
}

fn load(file: &Path, limits: Limits) -> Result<OrderedSemigroup, Failure> {
    let text = read(file)?;
    let s = parse(&text).map_err(|d| {
        let lines: Vec<String> =
            d.0.iter()
                .map(|x| format!("{}: {x}", file.display()))
                .collect();
        Failure {
            code: EXIT_FAIL,
            message: format!("invalid structure\n{}", lines.join("\n")),
        }
    })?;
    if s.n() > limits.max_n {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!(
                "structure has {} elements, limit is {} (raise with {MAX_N_ENV})",
                s.n(),
                limits.max_n
            ),
        });
    }
    Ok(s)
}

fn validate(file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let text = read(file)?;
    match parse(&text) {
        Ok(s) => {
            writeln!(out, "valid: {} elements", s.n())?;
            Ok(EXIT_OK)
        }
        Err(d) => {
            for x in &d.0 {
                writeln!(err, "{}: {x}", file.display())?;
            }
            Ok(EXIT_FAIL)
        }
    }
}

fn structure_name(file: &Path) -> String {
    file.file_stem().map_or_else(
        || file.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn theorem_ids(names: &[String]) -> Result<Vec<TheoremId>, Failure> {
    if names.is_empty() {
        return Ok(TheoremId::ALL.to_vec());
    }
    Ok(names
        .iter()
        .map(|n| n.parse())
        .collect::<Result<Vec<_>, _>>()?)
}

fn green_json(s: &OrderedSemigroup, c: &Classifier) -> Value {
    let mut m = Map::new();
    for kind in GreenKind::ALL {
        let classes: Vec<Vec<&str>> = c
            .green(kind)
            .classes()
            .into_iter()
            .map(|cl| cl.iter().map(|i| s.name(i)).collect())
            .collect();
        m.insert(kind.to_string(), json!(classes));
    }
    Value::Object(m)
}

fn analyze(
    s: &OrderedSemigroup,
    name: &str,
    format: OutputFormat,
    readings: Readings,
    limits: Limits,
    out: &mut dyn Write,
) -> Outcome {
    let c = Classifier::with(s, readings, limits);
    let report = c.classify();
    let theorems = theorem_suite(s, TheoremId::ALL, readings, limits);
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "structure": name,
                "classes": report.to_json(s),
                "green": green_json(s, &c),
                "theorems": theorems.to_json(s),
            });
            writeln!(out, "{}", pretty(&doc))?;
        }
        OutputFormat::Text => {
            writeln!(out, "structure: {name}")?;
            writeln!(out, "elements: {}", s.names().join(" "))?;
            writeln!(
                out,
                "ordered idempotents: {}",
                s.format_set(c.idempotents())
            )?;
            writeln!(out, "classes:")?;
            for (k, v) in report.iter() {
                writeln!(out, "  {k}: {}", v.render(s))?;
            }
            writeln!(out, "green:")?;
            for kind in GreenKind::ALL {
                let classes: Vec<String> = c
                    .green(kind)
                    .classes()
                    .into_iter()
                    .map(|cl| s.format_set(cl))
                    .collect();
                writeln!(out, "  {kind}: {}", classes.join(" "))?;
            }
            writeln!(out, "theorems:")?;
            for r in &theorems.results {
                let detail = match (r.verdict, r.offending_clause()) {
                    (crate::verify::TheoremVerdict::Mismatch, Some(c)) => {
                        format!("  [{}: {}]", c.label, c.verdict.render(s))
                    }
                    _ => String::new(),
                };
                writeln!(out, "  {}: {}{detail}", r.id, r.verdict.as_str())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_all(structures: &[OrderedSemigroup], out: &mut dyn Write) -> std::io::Result<()> {
    for (i, s) in structures.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        out.write_all(write_osg(s).as_bytes())?;
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}
