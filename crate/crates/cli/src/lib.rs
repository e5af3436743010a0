//! The `wb` command line: argument parsing and dispatch to the engines.
//!
//! Queries exit with 0 for YES, 1 for NO and 2 for UNKNOWN. Parse and IO
//! errors exit with 3.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use brouwer_lab::{
    check_weihrauch_algebra, intuitionistic_axioms, is_valid_with, parse_algebra, upset_algebra, AlgebraClass,
    FiniteAlgebra, FiniteLattice, FinitePreorder, Formula, LabError, Mode, Validity,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deduction_engine::{Answer, Closure, KbError, KnowledgeBase, DEFAULT_DEPTH};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rewrite_engine::{normalize, normalize_traced, rule_set, NoFacts, RewriteError};
use stream_kit::{
    check_reduction, completeness_witness, decode_completion, shift_minus, shift_plus, totalize, Bound, Problem,
    Run, Semantics, Shifted, Space, StreamError, UpName, DEFAULT_PERIODS,
};
use term_core::{parse_term, Flag, Kind, ParseError, Term};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "wb", version, about = "Reasoning about reducibility degrees, finite algebras and stream witnesses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Knowledge base file, or `seed` for the bundled one
    #[arg(long)]
    pub kb: Option<String>,
    /// Reducibility kind (SW, W, STW, TW, PW, PTW)
    #[arg(long, default_value = "SW")]
    pub kind: Kind,
    /// Closure depth: how many layers of operations over the known terms
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    /// Print the proof trace or rewrite steps
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of a term
    Normalize {
        #[command(flatten)]
        common: Common,
        term: String,
    },
    /// Ask whether A reduces to B, whether they are equivalent, or whether a flag holds
    Query {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
    },
    /// Like `query --explain`
    Explain {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
    },
    /// Saturate a knowledge base and write every established fact
    Close {
        #[command(flatten)]
        common: Common,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify algebras as Weihrauch, Troelstra or Brouwer algebras
    CheckAlgebra {
        /// Exit with 1 unless every algebra has this class
        #[arg(long)]
        expect: Option<ClassArg>,
        /// Algebra files or built-ins: chain:N, boolean:K, m3, n5, vposet, upsets:N, random:N[:SEED]
        #[arg(required = true)]
        algebras: Vec<String>,
    },
    /// Check formulas for validity by enumerating valuations
    Validate {
        /// Algebra file or built-in, as for check-algebra
        #[arg(long, required = true)]
        algebra: Vec<String>,
        /// Formula over single-letter variables with ~ & | ->
        #[arg(long)]
        formula: Vec<String>,
        /// Add the ten intuitionistic axiom schemata
        #[arg(long)]
        axioms: bool,
        /// Enumerate valuations on one thread
        #[arg(long)]
        sequential: bool,
    },
    /// Run a stream witness step by step and check it
    StreamDemo {
        witness: Witness,
        /// Names to run the witness on, as `a,b;(c,d)`
        names: Vec<String>,
        /// Samples for the random checks
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the rule catalogs
    Rules {
        #[arg(default_value = "all")]
        catalog: Catalog,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    /// Ask for equivalence instead of reduction
    #[arg(long, conflicts_with = "prop")]
    pub equiv: bool,
    /// Ask whether the term has this flag
    #[arg(long)]
    pub prop: Option<Flag>,
    #[arg(required = true, num_args = 1..=2)]
    pub terms: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    Weihrauch,
    Troelstra,
    Brouwer,
}

impl ClassArg {
    fn class(self) -> AlgebraClass {
        match self {
            ClassArg::Weihrauch => AlgebraClass::Weihrauch,
            ClassArg::Troelstra => AlgebraClass::Troelstra,
            ClassArg::Brouwer => AlgebraClass::Brouwer,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Witness {
    Lpo,
    Sort,
    Acc2,
    Accn,
    /// δ of the precompletion against decode with the shifts
    Precompletion,
    /// totalized random stalling transformers
    Totalize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Catalog {
    All,
    Rewrite,
    Deduction,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("knowledge base: {0}")]
    Kb(#[from] KbError),
    #[error("term: {0}")]
    Term(#[from] ParseError),
    #[error("rewrite: {0}")]
    Rewrite(#[from] RewriteError),
    #[error("algebra: {0}")]
    Lab(#[from] LabError),
    #[error("stream: {0}")]
    Stream(#[from] StreamError),
    #[error("output: {0}")]
    Output(#[from] io::Error),
}

/// Result of a successful command, mapped onto the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    Unknown,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Yes => 0,
            Outcome::No => 1,
            Outcome::Unknown => 2,
        }
    }

    fn all(ok: bool) -> Outcome {
        if ok {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }
}

pub const ERROR_CODE: i32 = 3;

pub fn exit_code(r: &Result<Outcome, CliError>) -> i32 {
    r.as_ref().map_or(ERROR_CODE, |o| o.code())
}

/// Parse `argv` (including the program name) and run the command.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // help and version requests
            write!(out, "{e}")?;
            return Ok(Outcome::Yes);
        }
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    run(cli.command, out)
}

pub fn run(cmd: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cmd {
        Command::Normalize { common, term } => cmd_normalize(&common, &term, out),
        Command::Query { common, target } => cmd_query(&common, &target, common.explain, out),
        Command::Explain { common, target } => cmd_query(&common, &target, true, out),
        Command::Close { common, out: path } => cmd_close(&common, path.as_deref(), out),
        Command::CheckAlgebra { expect, algebras } => cmd_check(expect, &algebras, out),
        Command::Validate { algebra, formula, axioms, sequential } => {
            cmd_validate(&algebra, &formula, axioms, sequential, out)
        }
        Command::StreamDemo { witness, names, samples, seed } => cmd_stream(witness, &names, samples, seed, out),
        Command::Rules { catalog } => cmd_rules(catalog, out),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load_kb(arg: &str) -> Result<KnowledgeBase, CliError> {
    if arg == "seed" {
        return Ok(KnowledgeBase::seed());
    }
    Ok(KnowledgeBase::parse(&read(Path::new(arg))?)?)
}

fn cmd_normalize(c: &Common, src: &str, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let t = parse_term(src)?;
    let kb = c.kb.as_deref().map(load_kb).transpose()?;
    let facts = kb.as_ref().map(|kb| kb.input_facts());
    let (nf, steps) = match &facts {
        Some(f) => (normalize(&t, c.kind, f)?, if c.explain { normalize_traced(&t, c.kind, f)? } else { vec![] }),
        None => (normalize(&t, c.kind, &NoFacts)?, if c.explain { normalize_traced(&t, c.kind, &NoFacts)? } else { vec![] }),
    };
    writeln!(out, "{nf}")?;
    for (rule, t) in steps {
        writeln!(out, "  {rule:<5} {t}")?;
    }
    Ok(Outcome::Yes)
}

fn cmd_query(c: &Common, target: &Target, explain: bool, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let kb = load_kb(c.kb.as_deref().unwrap_or("seed"))?;
    let terms: Vec<Term> = target.terms.iter().map(|s| parse_term(s)).collect::<Result<_, _>>()?;
    for t in &terms {
        kb.check_declared(t).map_err(|a| CliError::Usage(format!("undeclared atom `{a}`")))?;
    }
    let cl = Closure::new(&kb, c.depth, &terms);
    let answer = match (target.prop, &terms[..]) {
        (Some(f), [t]) => cl.query_prop(f, t),
        (None, [a, b]) if target.equiv => cl.query_equiv(c.kind, a, b),
        (None, [a, b]) => cl.query_le(c.kind, a, b),
        (Some(_), _) => return Err(CliError::Usage("--prop takes one term".into())),
        (None, _) => return Err(CliError::Usage("a reduction query takes two terms".into())),
    };
    writeln!(out, "{}", answer.label())?;
    let ids = match &answer {
        Answer::Yes(ids) | Answer::No(ids) => ids.clone(),
        Answer::Unknown => vec![],
    };
    if explain {
        for id in ids {
            write!(out, "{}", cl.explain(id))?;
        }
    }
    Ok(match answer {
        Answer::Yes(_) => Outcome::Yes,
        Answer::No(_) => Outcome::No,
        Answer::Unknown => Outcome::Unknown,
    })
}

/// The established facts of a closure as a knowledge base that loads back.
pub fn saturated_kb(kb: &KnowledgeBase, cl: &Closure) -> String {
    let mut s = String::new();
    for name in kb.atoms.keys() {
        let _ = writeln!(s, "atom {name}");
    }
    let facts: Vec<String> = cl.fact_set().into_iter().collect();
    for f in facts {
        let line = if f.starts_with("prop ") || f.starts_with("notprop ") {
            f
        } else if f.starts_with("leM ") || f.starts_with("nleM ") {
            format!("fact {}", f.replace("medv(", "").replace(')', ""))
        } else {
            format!("fact {f}")
        };
        let _ = writeln!(s, "{line}");
    }
    s
}

fn cmd_close(c: &Common, path: Option<&Path>, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let kb = load_kb(c.kb.as_deref().unwrap_or("seed"))?;
    let cl = Closure::new(&kb, c.depth, &[]);
    let text = saturated_kb(&kb, &cl);
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
            writeln!(out, "{} facts over {} terms written to {}", cl.fact_set().len(), cl.universe.len(), p.display())?;
        }
        None => write!(out, "{text}")?,
    }
    for x in cl.contradictions() {
        writeln!(out, "# contradiction")?;
        for id in [x.positive, x.negative] {
            for line in cl.explain(id).lines() {
                writeln!(out, "#   {line}")?;
            }
        }
    }
    Ok(Outcome::all(cl.contradictions().is_empty()))
}

fn number(arg: &str, s: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("bad number in `{arg}`")))
}

fn with_join(l: FiniteLattice) -> FiniteAlgebra {
    let dot = l.join_table().to_vec();
    let one = l.bottom();
    let imp = brouwer_lab::co_residual(&l, &dot).ok();
    FiniteAlgebra::new(l, dot, one, imp)
}

/// Resolve an algebra argument to named algebras.
pub fn load_algebras(arg: &str) -> Result<Vec<(String, FiniteAlgebra)>, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        return Ok(vec![(arg.to_string(), parse_algebra(&read(path)?)?)]);
    }
    let parts: Vec<&str> = arg.split(':').collect();
    let one = |a: FiniteAlgebra| Ok(vec![(arg.to_string(), a)]);
    match parts[..] {
        ["chain", n] => one(FiniteAlgebra::chain(number(arg, n)?.max(1))),
        ["boolean", k] => one(with_join(FiniteLattice::boolean(number(arg, k)?))),
        ["m3"] => one(with_join(FiniteLattice::m3())),
        ["n5"] => one(with_join(FiniteLattice::n5())),
        ["vposet"] => one(upset_algebra(&FinitePreorder::generated(3, &[(0, 1), (0, 2)]))?),
        ["upsets", n] => {
            let n = number(arg, n)?;
            if n > brouwer_lab::MAX_UPSET_POSET {
                return Err(CliError::Usage(format!("upsets are enumerated up to {} points", brouwer_lab::MAX_UPSET_POSET)));
            }
            Ok((1..=n)
                .flat_map(brouwer_lab::natural_posets)
                .enumerate()
                .map(|(i, p)| upset_algebra(&p).map(|a| (format!("{arg}#{i}"), a)))
                .collect::<Result<_, _>>()?)
        }
        ["random", n, ..] if parts.len() <= 3 => {
            let seed = parts.get(2).map(|s| number(arg, s)).transpose()?.unwrap_or(0);
            let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
            Ok((0..number(arg, n)?).map(|i| (format!("{arg}#{i}"), brouwer_lab::gen::random_brouwer(&mut rng))).collect())
        }
        _ => Err(CliError::Usage(format!("no algebra file or built-in named `{arg}`"))),
    }
}

fn cmd_check(expect: Option<ClassArg>, args: &[String], out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut ok = true;
    for arg in args {
        for (name, a) in load_algebras(arg)? {
            let r = check_weihrauch_algebra(&a);
            writeln!(
                out,
                "{name}: {:?} commutative={} deductive={} distributive={}",
                r.class, r.commutative, r.deductive, r.distributive
            )?;
            for f in &r.failures {
                writeln!(out, "  {f}")?;
            }
            ok &= expect.is_none_or(|e| e.class() == r.class);
        }
    }
    Ok(Outcome::all(ok))
}

fn cmd_validate(
    args: &[String],
    formulas: &[String],
    axioms: bool,
    sequential: bool,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let mut fs: Vec<Formula> = formulas.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    if axioms {
        fs.extend(intuitionistic_axioms());
    }
    if fs.is_empty() {
        return Err(CliError::Usage("give --formula or --axioms".into()));
    }
    let mode = if sequential { Mode::Sequential } else { Mode::default() };
    let mut ok = true;
    for arg in args {
        for (name, a) in load_algebras(arg)? {
            for f in &fs {
                match is_valid_with(&a, f, mode)? {
                    Validity::Valid => writeln!(out, "{name}: {f}: valid")?,
                    Validity::Invalid(c) => {
                        ok = false;
                        let v: Vec<String> = c.valuation.iter().map(|(x, e)| format!("{x}={}", a.labels[*e])).collect();
                        writeln!(out, "{name}: {f}: invalid at {} with value {}", v.join(" "), a.labels[c.value])?;
                    }
                }
            }
        }
    }
    Ok(Outcome::all(ok))
}

fn demo_names(names: &[String]) -> Result<Vec<UpName>, CliError> {
    if names.is_empty() {
        return Ok(["0;(0)", "2;(1)", "1,0,3;(2,1)", "0,2;(1,1,3)"].iter().map(|s| s.parse().expect("demo name")).collect());
    }
    Ok(names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?)
}

fn show_run(r: &Run) -> String {
    match r {
        Run::Total(q) => q.to_string(),
        Run::Stalls(w) => format!("stalls after {w:?}"),
        Run::Undetermined(w) => format!("undetermined after {w:?}"),
    }
}

fn cmd_stream(w: Witness, names: &[String], samples: usize, seed: u64, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let problem = match w {
        Witness::Lpo => Problem::Lpo,
        Witness::Sort => Problem::Sort,
        Witness::Acc2 => Problem::Acc(Bound::Finite(2)),
        Witness::Accn => Problem::Acc(Bound::Omega),
        Witness::Precompletion => {
            let baire = Space::baire();
            let pre = baire.precompletion();
            let mut ok = true;
            for _ in 0..samples {
                let p = stream_kit::gen::random_name(&mut rng, 5, 4, 6);
                let minus = match shift_minus(&p) {
                    Shifted::Infinite(q) => baire.decode(&q),
                    Shifted::Finite(_) => None,
                };
                ok &= pre.decode(&shift_plus(&p)) == baire.decode(&p) && pre.decode(&p) == minus;
            }
            writeln!(out, "precompletion: {samples} names, {}", if ok { "pass" } else { "FAIL" })?;
            return Ok(Outcome::all(ok));
        }
        Witness::Totalize => {
            let mut ok = true;
            for _ in 0..samples {
                let f = stream_kit::gen::random_stalling(&mut rng);
                let g = totalize(&f);
                let p = stream_kit::gen::random_name(&mut rng, 4, 3, 5);
                let Some(gp) = g.run(&p, DEFAULT_PERIODS).total() else {
                    ok = false;
                    continue;
                };
                ok &= match f.run(&p, DEFAULT_PERIODS) {
                    Run::Total(fp) => shift_minus(&gp) == Shifted::Infinite(fp),
                    Run::Stalls(_) => decode_completion(&Space::baire(), &gp).is_none(),
                    Run::Undetermined(_) => false,
                };
            }
            writeln!(out, "totalize: {samples} transformers, {}", if ok { "pass" } else { "FAIL" })?;
            return Ok(Outcome::all(ok));
        }
    };
    let (h, k) = completeness_witness(problem);
    let sem = Semantics::Completion(problem);
    let plain = Semantics::Plain(problem);
    for p in demo_names(names)? {
        writeln!(out, "input {p}")?;
        let prefix = p.prefix(8);
        for i in 1..=prefix.len() {
            writeln!(out, "    K on {:?} writes {:?}", &prefix[..i], k.output_on_prefix(&prefix[..i]))?;
        }
        let kp = k.run(&p, DEFAULT_PERIODS);
        writeln!(out, "  K: {}", show_run(&kp))?;
        let Some(y) = kp.total().and_then(|kp| plain.input(&kp)) else {
            writeln!(out, "  K gives no {problem} instance")?;
            continue;
        };
        for r in problem.solution_names(&y)? {
            let hr = h.run(&r, DEFAULT_PERIODS);
            let verdict = match (sem.input(&p), hr.clone().total()) {
                (None, _) => "input names ⊥, anything goes",
                (Some(x), Some(o)) if sem.is_correct(&x, &o) => "correct",
                (Some(_), Some(_)) => "WRONG",
                (Some(_), None) => "H is not total",
            };
            writeln!(out, "  solution {r}: H gives {} ({verdict})", show_run(&hr))?;
        }
    }
    let all = stream_kit::gen::all_names(4, 3, 3);
    let r = check_reduction(sem, Semantics::Plain(problem), &h, &k, &all)?;
    writeln!(out, "{problem}: {} names checked, {} failures", r.checked, r.failures.len())?;
    Ok(Outcome::all(r.passed()))
}

fn cmd_rules(c: Catalog, out: &mut dyn Write) -> Result<Outcome, CliError> {
    if matches!(c, Catalog::All | Catalog::Rewrite) {
        writeln!(out, "# rewrite rules")?;
        for r in rule_set() {
            writeln!(out, "{}", r.describe())?;
        }
    }
    if matches!(c, Catalog::All | Catalog::Deduction) {
        writeln!(out, "# inference rules")?;
        for r in deduction_engine::inference_rules() {
            writeln!(out, "{r}")?;
        }
    }
    Ok(Outcome::Yes)
}
