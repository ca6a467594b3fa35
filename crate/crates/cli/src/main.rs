use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tropmon::check::{self, CheckOutcome, SamplingConfig, Status, Value};
use tropmon::classify::{self, ClassificationVerdict, RankBound, Tropical};
use tropmon::embedding::{self, EmbeddingReport};
use tropmon::identity::{identity_catalog, IdentityTerm};
use tropmon::model::Model;
use tropmon::presentation::Presentation;
use tropmon::representation::Representation;
use tropmon::word_problem::WordProblem;
use tropmon::{Error, MonoidId, TropMatrix, Word};

mod expand;

#[derive(Parser)]
#[command(
    name = "tropmon",
    version,
    about = "Tropical representations of one-relation monoids"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Clone, Copy)]
struct Params {
    /// Parameter k for monogenic, m6 and m9.
    #[arg(long)]
    k: Option<u32>,
    /// Parameter l for monogenic and aperiodic.
    #[arg(long)]
    l: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a presentation such as "a,b|aba=ba".
    Classify { presentation: String },
    /// Sweep all words up to a length through the model and the representation.
    Verify {
        monoid: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Check an identity (catalog name or literal like "xy=yx").
    Identity {
        identity: String,
        /// ut:N, mt:N, model:MONOID, search:MONOID or free.
        #[arg(long, default_value = "ut:2")]
        backend: String,
        #[arg(long, default_value_t = check::DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, env = "TROP_SEED", default_value = "0xC0FFEE", value_parser = parse_seed)]
        seed: u64,
        #[arg(long, default_value_t = tropmon::sample::DEFAULT_ENTRY_BOUND)]
        entry_bound: i64,
        #[arg(long, default_value_t = tropmon::sample::DEFAULT_NEG_INF_PROB)]
        neg_inf_prob: f64,
        /// Largest exponent field (or word length) in model pools.
        #[arg(long, default_value_t = 3)]
        pool_bound: u64,
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Evaluate a word under a representation.
    Eval {
        monoid: String,
        word: String,
        /// Read the representation from a JSON file instead of the catalog.
        #[arg(long)]
        rep_file: Option<std::path::PathBuf>,
        #[command(flatten)]
        params: Params,
    },
    /// Normal form of a word.
    Nf {
        monoid: String,
        word: String,
        #[command(flatten)]
        params: Params,
    },
    /// Print a catalog representation as JSON.
    Rep {
        monoid: String,
        #[command(flatten)]
        params: Params,
    },
    /// Print the classification table.
    Table,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed \"{s}\": {e}"))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedModel(_) | Error::UnsupportedRepresentation(_) => 3,
            Error::Overflow | Error::StepBudgetExceeded(_) | Error::WordTooLong(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn monoid(name: &str, p: Params) -> Result<MonoidId, Error> {
    MonoidId::parse_with(name, p.k, p.l)
}

fn word(text: &str) -> Result<Word, Error> {
    Word::parse(&expand::expand(text)?)
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable output")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { presentation } => {
            let p = Presentation::parse(&expand::expand(presentation)?)?;
            let v = classify::classify(&p);
            let code = if v.is_definitive() { 0 } else { 3 };
            Ok((if json { to_json(&v) } else { render_verdict(&v) }, code))
        }
        Command::Verify {
            monoid: name,
            max_len,
            parallel,
            params,
        } => {
            let r = embedding::verify_embedding(monoid(name, *params)?, *max_len, *parallel)?;
            let code = if r.passed() { 0 } else { 1 };
            Ok((if json { to_json(&r) } else { render_report(&r) }, code))
        }
        Command::Identity {
            identity,
            backend,
            trials,
            seed,
            entry_bound,
            neg_inf_prob,
            pool_bound,
            parallel,
            params,
        } => {
            let term = match identity_catalog(identity) {
                Ok(t) => t,
                Err(Error::UnknownIdentity(_)) if identity.contains('=') || identity.contains('≍') => {
                    IdentityTerm::parse(&expand::expand(identity)?)?
                }
                Err(e) => return Err(e.into()),
            };
            let out = run_identity(
                &term,
                backend,
                *params,
                |n, triangular| SamplingConfig {
                    n,
                    triangular,
                    trials: *trials,
                    seed: *seed,
                    entry_bound: *entry_bound,
                    neg_inf_prob: *neg_inf_prob,
                    parallel: *parallel,
                },
                *pool_bound,
            )?;
            let code = match out.status {
                Status::Counterexample { .. } => 1,
                Status::Unknown { .. } => 3,
                _ => 0,
            };
            Ok((if json { to_json(&out) } else { render_outcome(&out) }, code))
        }
        Command::Eval {
            monoid: name,
            word: w,
            rep_file,
            params,
        } => {
            let rep = match rep_file {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Failure {
                        code: 2,
                        message: format!("{}: {e}", path.display()),
                    })?;
                    Representation::from_json(&text)?
                }
                None => Representation::for_monoid(monoid(name, *params)?)?,
            };
            let m = rep.evaluate_word(&word(w)?)?;
            Ok((if json { m.to_json() } else { rows_json(&m) }, 0))
        }
        Command::Nf {
            monoid: name,
            word: w,
            params,
        } => {
            let id = monoid(name, *params)?;
            let w = word(w)?;
            w.check_alphabet(id.alphabet())?;
            let nf = WordProblem::new(id)?.normal_form(&w)?;
            if !json {
                return Ok((nf.to_string(), 0));
            }
            let element = Model::new(id)
                .ok()
                .map(|m| m.from_word(&w).map(|x| m.tag(&x)))
                .transpose()?;
            Ok((
                to_json(&json!({"monoid": id, "word": w, "normal_form": nf, "element": element})),
                0,
            ))
        }
        Command::Rep { monoid: name, params } => {
            let rep = Representation::for_monoid(monoid(name, *params)?)?;
            Ok((if json { rep.to_json() } else { render_rep(&rep) }, 0))
        }
        Command::Table => {
            let rows = classify::full_table();
            Ok((if json { to_json(&rows) } else { render_table(&rows) }, 0))
        }
    }
}

fn run_identity(
    term: &IdentityTerm,
    backend: &str,
    params: Params,
    sampling: impl Fn(usize, bool) -> SamplingConfig,
    pool_bound: u64,
) -> Result<CheckOutcome, Failure> {
    let bad = || Failure {
        code: 2,
        message: format!("unknown backend \"{backend}\"; use ut:N, mt:N, model:M, search:M or free"),
    };
    if backend == "free" {
        return Ok(check::free_word_check(term));
    }
    let (kind, arg) = backend.split_once(':').ok_or_else(bad)?;
    match kind {
        "ut" | "mt" => {
            let n: usize = arg.parse().map_err(|_| bad())?;
            Ok(check::check_identity_matrices(term, &sampling(n, kind == "ut"))?)
        }
        "model" => Ok(check::check_identity_model(term, monoid(arg, params)?, pool_bound)?),
        "search" => Ok(check::check_identity_by_search(
            term,
            monoid(arg, params)?,
            pool_bound,
            check::default_word_budget(),
        )?),
        _ => Err(bad()),
    }
}

fn rows_json(m: &TropMatrix) -> String {
    serde_json::to_string(&m.rows()).expect("serializable rows")
}

fn yes_no(t: Tropical) -> &'static str {
    match t {
        Tropical::Yes => "yes",
        Tropical::No => "no",
        Tropical::Unknown => "unknown",
        Tropical::Unsupported => "unsupported",
    }
}

fn rank(r: RankBound) -> String {
    match r {
        RankBound::Exact(n) => format!(" (rank {n})"),
        RankBound::AtMost(n) => format!(" (rank <= {n})"),
        RankBound::None => String::new(),
    }
}

fn render_verdict(v: &ClassificationVerdict) -> String {
    let mut s = String::new();
    let name = serde_json::to_value(v.monoid).expect("serializable");
    writeln!(s, "input:    {}", v.input).unwrap();
    writeln!(s, "monoid:   {}", name.as_str().unwrap_or_default()).unwrap();
    match &v.identity {
        Some(id) => writeln!(s, "identity: {} ({id})", yes_no(v.satisfies_identity)).unwrap(),
        None => writeln!(s, "identity: {}", yes_no(v.satisfies_identity)).unwrap(),
    }
    writeln!(
        s,
        "UT: {}{}, MT: {}{}",
        yes_no(v.ut_tropical),
        rank(v.ut_rank),
        yes_no(v.m_tropical),
        rank(v.m_rank)
    )
    .unwrap();
    if !v.renaming.is_empty() {
        let pairs: Vec<String> = v.renaming.iter().map(|(k, t)| format!("{k}->{t}")).collect();
        writeln!(s, "renaming: {}", pairs.join(", ")).unwrap();
    }
    for note in &v.notes {
        writeln!(s, "note:     {note}").unwrap();
    }
    for reason in &v.reasons {
        writeln!(s, "because:  {reason}").unwrap();
    }
    s.trim_end().to_string()
}

fn render_report(r: &EmbeddingReport) -> String {
    let mut s = format!(
        "monoid: {}\nmax_len: {}\nrelation_holds: {}\nwords: {}\nclasses: {}\nhom_consistent: {}\ninjective: {}",
        r.monoid, r.max_len, r.relation_holds, r.hom_checked_words, r.classes, r.hom_consistent, r.injective
    );
    if let Some((u, v)) = &r.witnesses {
        write!(s, "\nwitness: {u} vs {v}").unwrap();
    }
    s
}

fn render_value(v: &Value) -> String {
    match v {
        Value::Matrix(m) => rows_json(m),
        Value::Element { element, word } => format!("{word} {:?}", element.elem),
        Value::Word(w) => w.to_string(),
    }
}

fn render_outcome(o: &CheckOutcome) -> String {
    let mut s = format!(
        "identity: {}\nbackend:  {}\nstatus:   {}",
        o.identity,
        o.backend,
        o.status_name()
    );
    match &o.status {
        Status::HoldsOnPool { substitutions } => write!(s, "\nsubstitutions: {substitutions}").unwrap(),
        Status::NoCounterexample { trials } => write!(s, "\ntrials:   {trials}").unwrap(),
        Status::Counterexample {
            assignment,
            trial,
            lhs,
            rhs,
        } => {
            if let Some(t) = trial {
                write!(s, "\ntrial:    {t}").unwrap();
            }
            for (var, val) in assignment {
                write!(s, "\n  {var} = {}", render_value(val)).unwrap();
            }
            write!(s, "\nlhs:      {}\nrhs:      {}", render_value(lhs), render_value(rhs)).unwrap();
        }
        Status::Unknown { unresolved, reason, .. } => write!(s, "\nunresolved: {unresolved} ({reason})").unwrap(),
        Status::Holds => {}
    }
    if let Some(seed) = o.seed {
        write!(s, "\nseed:     {seed:#x}").unwrap();
    }
    s
}

fn render_rep(r: &Representation) -> String {
    let mut s = format!(
        "monoid: {}\ntarget: {}{}\nunital: {}",
        r.monoid(),
        r.target(),
        r.dim(),
        r.is_unital()
    );
    for (c, m) in r.images() {
        write!(s, "\n{} -> {}", c as char, rows_json(m)).unwrap();
    }
    s
}

fn render_table(rows: &[classify::ClassTableRow]) -> String {
    let mut s = format!(
        "{:<9} {:<14} {:<5} {:<6} {:<8} {:<6} {}",
        "monoid", "relation", "UT", "rank", "MT", "rank", "identity"
    );
    for r in rows {
        let relation = r.relation.split_once('|').map_or(r.relation.as_str(), |(_, rel)| rel);
        write!(
            s,
            "\n{:<9} {:<14} {:<5} {:<6} {:<8} {:<6} {}",
            r.name,
            relation,
            yes_no(r.ut_tropical),
            r.ut_rank,
            yes_no(r.m_tropical),
            r.m_rank,
            r.identity
        )
        .unwrap();
    }
    s
}
