use std::fmt::Display;
use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use sigmapi::annotate::{annotate, Annotation};
use sigmapi::bench;
use sigmapi::compose::compose;
use sigmapi::decide::{decide_with_stats, Stats, Verdict};
use sigmapi::error::{LoadError, OracleError};
use sigmapi::factor::{factor_inj, factor_proj};
use sigmapi::graph::GeneratorGraph;
use sigmapi::oracle::{Oracle, DEFAULT_GUARD};
use sigmapi::program::{load, Program};
use sigmapi::syntax::parse_type;
use sigmapi::terms::{Arrow, Side, Term};
use sigmapi::types::Ty;

const SCHEMA_VERSION: u32 = 1;

const EXIT_NOT_EQUAL: u8 = 1;
const EXIT_REQUIRES_ORACLE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_TYPE: u8 = 66;
const EXIT_GUARD: u8 = 70;

/// Decide equality of arrows in free categories with sums and products.
#[derive(Parser)]
#[command(name = "sigmapi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and type-check a declaration file.
    Check { file: PathBuf },
    /// Decide whether two declared terms are equal.
    Decide(DecideArgs),
    /// Compose two declared terms and print the cut-free result.
    Compose(PairArgs),
    /// List every subterm with its pointed and copointed annotations.
    Annotate {
        file: PathBuf,
        #[arg(long)]
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor a declared term through an injection or a projection.
    Factor(FactorArgs),
    /// Count, list or partition a homset by enumeration.
    Enumerate(EnumerateArgs),
    /// Answer questions by brute-force search over rewrites.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time the decision procedure on balanced types and print CSV.
    Bench {
        #[arg(long, default_value_t = 2)]
        min_height: u32,
        #[arg(long, default_value_t = 10)]
        max_height: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct PairArgs {
    file: PathBuf,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct DecideArgs {
    file: PathBuf,
    #[arg(long, required_unless_present = "batch")]
    left: Option<String>,
    #[arg(long, required_unless_present = "batch")]
    right: Option<String>,
    /// A file of `left right` name pairs, one per line.
    #[arg(long, conflicts_with_all = ["left", "right"])]
    batch: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Through {
    /// Injection index (0 or 1).
    #[arg(long, value_parser = side)]
    inj: Option<Side>,
    /// Projection index (0 or 1).
    #[arg(long, value_parser = side)]
    proj: Option<Side>,
}

#[derive(Args)]
struct FactorArgs {
    file: PathBuf,
    #[arg(long)]
    name: String,
    #[command(flatten)]
    through: Through,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(short = 'X', long = "dom")]
    dom: String,
    #[arg(short = 'A', long = "cod")]
    cod: String,
    /// Declaration file providing the generator graph.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    classes: bool,
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: u128,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Decide equality by searching the class of the left term.
    Decide {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
        #[arg(long)]
        json: bool,
    },
    /// Print the class of a declared term.
    Class {
        file: PathBuf,
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
    },
    Enumerate(EnumerateArgs),
    /// Shortest path of corner factorizations between two terms of a square.
    Path {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
    },
    /// Every `h : X_i -> A_j` with `p_i h = left` and `s_j h = right`.
    Bouncers {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'i', value_parser = side)]
        i: Side,
        #[arg(short = 'j', value_parser = side)]
        j: Side,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
    },
}

fn side(s: &str) -> Result<Side, String> {
    s.parse::<usize>()
        .ok()
        .and_then(Side::from_index)
        .ok_or_else(|| format!("expected 0 or 1, found `{s}`"))
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Failure {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        let code = match e {
            OracleError::GuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_TYPE,
        };
        Failure::new(code, e)
    }
}

type Outcome = Result<u8, Failure>;

struct Out {
    color: bool,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn new() -> Out {
        let color = io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
        Out {
            color,
            stdout: io::stdout().lock(),
        }
    }

    fn line(&mut self, s: impl Display) {
        let _ = writeln!(self.stdout, "{s}");
    }

    fn json(&mut self, v: Value) {
        self.line(serde_json::to_string_pretty(&v).expect("values serialize"));
    }

    fn verdict(&self, v: &Verdict) -> String {
        let code = match v {
            Verdict::Equal(_) => "32",
            Verdict::NotEqual(_) => "31",
            Verdict::RequiresOracle => "33",
        };
        if self.color {
            format!("\x1b[{code}m{v}\x1b[0m")
        } else {
            v.to_string()
        }
    }
}

fn read_program(path: &Path) -> Result<Program, Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    load(&src).map_err(|e| {
        let code = match e {
            LoadError::Syntax(_) => EXIT_PARSE,
            _ => EXIT_TYPE,
        };
        Failure::new(code, format!("{}: {e}", path.display()))
    })
}

fn arrow<'p>(p: &'p Program, name: &str) -> Result<&'p Arrow, Failure> {
    p.get(name)
        .ok_or_else(|| Failure::new(EXIT_USAGE, format!("no declaration named `{name}`")))
}

fn parallel<'p>(p: &'p Program, left: &str, right: &str) -> Result<(&'p Arrow, &'p Arrow), Failure> {
    let (f, g) = (arrow(p, left)?, arrow(p, right)?);
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Failure::new(
            EXIT_TYPE,
            OracleError::NotParallel(format!("{left} : {} -> {}, {right} : {} -> {}", f.dom, f.cod, g.dom, g.cod)),
        ));
    }
    Ok((f, g))
}

fn ty(s: &str) -> Result<Ty, Failure> {
    parse_type(s).map_err(|e| Failure::new(EXIT_PARSE, format!("type `{s}`: {e}")))
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Equal(_) => 0,
        Verdict::NotEqual(_) => EXIT_NOT_EQUAL,
        Verdict::RequiresOracle => EXIT_REQUIRES_ORACLE,
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Equal(w) => json!({
            "verdict": "Equal",
            "witness": w.as_ref().map(|w| json!({
                "kind": w.tag(),
                "term": w.term().map(|t| t.to_string()),
            })),
        }),
        Verdict::NotEqual(r) => json!({ "verdict": "NotEqual", "reason": r.to_string() }),
        Verdict::RequiresOracle => json!({ "verdict": "RequiresOracle" }),
    }
}

fn stats_json(s: &Stats) -> Value {
    json!({ "steps": s.steps, "calls": s.calls, "visits": s.visits })
}

struct Decided {
    left: String,
    right: String,
    verdict: Verdict,
    stats: Stats,
}

fn decide(args: DecideArgs, out: &mut Out) -> Outcome {
    let p = read_program(&args.file)?;
    let pairs: Vec<(String, String)> = match &args.batch {
        Some(path) => batch_pairs(path)?,
        None => vec![(args.left.clone().unwrap_or_default(), args.right.clone().unwrap_or_default())],
    };
    let arrows = pairs
        .iter()
        .map(|(l, r)| parallel(&p, l, r))
        .collect::<Result<Vec<_>, _>>()?;
    let results: Vec<Decided> = arrows
        .par_iter()
        .zip(pairs.par_iter())
        .map(|((f, g), (l, r))| {
            let (verdict, stats) = decide_with_stats(f, g);
            Decided {
                left: l.clone(),
                right: r.clone(),
                verdict,
                stats,
            }
        })
        .collect();
    if args.json {
        let rows: Vec<Value> = results
            .iter()
            .map(|d| {
                let mut v = verdict_json(&d.verdict);
                v["left"] = json!(d.left);
                v["right"] = json!(d.right);
                if args.stats {
                    v["stats"] = stats_json(&d.stats);
                }
                v
            })
            .collect();
        let body = if args.batch.is_some() {
            json!({ "schema_version": SCHEMA_VERSION, "results": rows })
        } else {
            let mut v = rows.into_iter().next().expect("one pair");
            v["schema_version"] = json!(SCHEMA_VERSION);
            v
        };
        out.json(body);
    } else {
        for d in &results {
            let shown = out.verdict(&d.verdict);
            if args.batch.is_some() {
                out.line(format!("{} {} {shown}", d.left, d.right));
            } else {
                out.line(shown);
            }
            if args.witness {
                if let Verdict::Equal(Some(w)) = &d.verdict {
                    match w.term() {
                        Some(t) => out.line(format!("witness: {} {t}", w.tag())),
                        None => out.line(format!("witness: {}", w.tag())),
                    }
                }
            }
            if args.stats {
                out.line(format!(
                    "steps: {} calls: {} visits: {}",
                    d.stats.steps, d.stats.calls, d.stats.visits
                ));
            }
        }
    }
    Ok(results.iter().map(|d| verdict_code(&d.verdict)).max().unwrap_or(0))
}

fn batch_pairs(path: &Path) -> Result<Vec<(String, String)>, Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let mut pairs = Vec::new();
    for (n, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [l, r] => pairs.push((l.to_string(), r.to_string())),
            _ => {
                return Err(Failure::new(
                    EXIT_PARSE,
                    format!("{}:{}: expected `left right`", path.display(), n + 1),
                ))
            }
        }
    }
    Ok(pairs)
}

fn check(file: &Path, out: &mut Out) -> Outcome {
    let p = read_program(file)?;
    for (name, a) in &p.arrows {
        out.line(format!("{name} : {} -> {} = {}", a.dom, a.cod, a.term));
    }
    Ok(0)
}

fn compose_cmd(args: PairArgs, out: &mut Out) -> Outcome {
    let p = read_program(&args.file)?;
    let (f, g) = (arrow(&p, &args.left)?, arrow(&p, &args.right)?);
    if f.cod != g.dom {
        return Err(Failure::new(
            EXIT_TYPE,
            format!("`{}` ends at {} but `{}` starts at {}", args.left, f.cod, args.right, g.dom),
        ));
    }
    let t = compose(&f.term, &g.term).map_err(|e| Failure::new(EXIT_TYPE, e))?;
    out.line(format!("{t} : {} -> {}", f.dom, g.cod));
    Ok(0)
}

fn annotation_json(a: &Annotation) -> Value {
    json!({
        "pointed": a.pointed,
        "copointed": a.copointed,
        "point": a.point_witness.as_ref().map(|t| t.to_string()),
        "copoint": a.copoint_witness.as_ref().map(|t| t.to_string()),
    })
}

fn annotation_label(a: &Annotation) -> String {
    let mut parts = Vec::new();
    if a.is_definite() {
        parts.push("definite".to_string());
    }
    if let Some(p) = &a.point_witness {
        parts.push(format!("pointed via {p}"));
    }
    if let Some(c) = &a.copoint_witness {
        parts.push(format!("copointed via {c}"));
    }
    parts.join(", ")
}

fn annotate_cmd(file: &Path, name: &str, as_json: bool, out: &mut Out) -> Outcome {
    let p = read_program(file)?;
    let a = arrow(&p, name)?;
    let at = annotate(&a.term, &a.dom, &a.cod);
    let nodes = at.nodes();
    if as_json {
        let rows: Vec<Value> = nodes
            .iter()
            .map(|n| {
                let mut v = annotation_json(&n.annotation);
                v["path"] = json!(n.path);
                v["term"] = json!(n.term.to_string());
                v["dom"] = json!(n.dom.to_string());
                v["cod"] = json!(n.cod.to_string());
                v
            })
            .collect();
        out.json(json!({ "schema_version": SCHEMA_VERSION, "name": name, "visits": at.visits, "nodes": rows }));
    } else {
        for n in &nodes {
            out.line(format!(
                "{}{} : {} -> {}  [{}]",
                "  ".repeat(n.path.len()),
                n.term,
                n.dom,
                n.cod,
                annotation_label(&n.annotation)
            ));
        }
    }
    Ok(0)
}

fn factor_cmd(args: FactorArgs, out: &mut Out) -> Outcome {
    let p = read_program(&args.file)?;
    let a = arrow(&p, &args.name)?;
    if a.has_generators() {
        return Err(Failure::new(EXIT_TYPE, "factorization needs a generator-free term"));
    }
    let mut at = annotate(&a.term, &a.dom, &a.cod);
    let (factored, label, dom, cod) = match (args.through.inj, args.through.proj) {
        (Some(j), _) => {
            let Some(parts) = a.cod.as_sum() else {
                return Err(Failure::new(EXIT_TYPE, format!("codomain {} is not a sum", a.cod)));
            };
            (factor_inj(&mut at, j), format!("s{}", j.index()), a.dom.clone(), j.pick(parts).clone())
        }
        (None, Some(i)) => {
            let Some(parts) = a.dom.as_prod() else {
                return Err(Failure::new(EXIT_TYPE, format!("domain {} is not a product", a.dom)));
            };
            (factor_proj(&mut at, i), format!("p{}", i.index()), i.pick(parts).clone(), a.cod.clone())
        }
        (None, None) => unreachable!("clap requires one of --inj and --proj"),
    };
    match factored.node {
        Some(h) => {
            out.line(format!("{} : {dom} -> {cod}", at.arena.term(h)));
            Ok(0)
        }
        None => {
            out.line(format!("{} does not factor through {label}", args.name));
            Ok(EXIT_NOT_EQUAL)
        }
    }
}

fn enumerate_cmd(args: EnumerateArgs, out: &mut Out) -> Outcome {
    let graph = match &args.graph {
        Some(path) => read_program(path)?.graph,
        None => GeneratorGraph::empty(),
    };
    let (x, a) = (ty(&args.dom)?, ty(&args.cod)?);
    for t in [&x, &a] {
        graph.check_type(t).map_err(|e| Failure::new(EXIT_TYPE, e))?;
    }
    let mut o = Oracle::new(graph).with_guard(args.guard);
    let count = o.count(&x, &a)?;
    if !args.classes && !args.list {
        if args.json {
            out.json(json!({ "schema_version": SCHEMA_VERSION, "dom": x.to_string(), "cod": a.to_string(), "terms": count.to_string() }));
        } else {
            out.line(format!("{count} terms"));
        }
        return Ok(0);
    }
    let (terms, class): (Vec<Term>, Option<(Vec<u32>, usize)>) = if args.classes {
        let p = o.partition(&x, &a)?;
        ((*p.terms).clone(), Some((p.class, p.classes)))
    } else {
        ((*o.enumerate(&x, &a)?).clone(), None)
    };
    if args.json {
        let rows: Vec<Value> = terms
            .iter()
            .enumerate()
            .map(|(k, t)| json!({ "term": t.to_string(), "class": class.as_ref().map(|c| c.0[k]) }))
            .collect();
        out.json(json!({
            "schema_version": SCHEMA_VERSION,
            "dom": x.to_string(),
            "cod": a.to_string(),
            "terms": terms.len(),
            "classes": class.as_ref().map(|c| c.1),
            "members": if args.list { Some(rows) } else { None },
        }));
        return Ok(0);
    }
    if args.list {
        for (k, t) in terms.iter().enumerate() {
            match &class {
                Some((c, _)) => out.line(format!("{} {t}", c[k])),
                None => out.line(t),
            }
        }
    }
    match &class {
        Some((_, n)) => out.line(format!("{} terms, {n} classes", terms.len())),
        None => out.line(format!("{} terms", terms.len())),
    }
    Ok(0)
}

fn oracle_cmd(cmd: OracleCommand, out: &mut Out) -> Outcome {
    match cmd {
        OracleCommand::Decide { pair, guard, json } => {
            let p = read_program(&pair.file)?;
            let (f, g) = parallel(&p, &pair.left, &pair.right)?;
            let o = Oracle::new(p.graph.clone()).with_guard(guard);
            let same = o.same_class(&f.term, &g.term, &f.dom, &f.cod)?;
            let verdict = if same { "Equal" } else { "NotEqual" };
            if json {
                out.json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "left": pair.left,
                    "right": pair.right,
                    "verdict": verdict,
                }));
            } else {
                out.line(verdict);
            }
            Ok(if same { 0 } else { EXIT_NOT_EQUAL })
        }
        OracleCommand::Class { file, name, guard } => {
            let p = read_program(&file)?;
            let a = arrow(&p, &name)?;
            let o = Oracle::new(p.graph.clone()).with_guard(guard);
            let class = o.class_of(&a.term, &a.dom, &a.cod)?;
            for t in &class.members {
                out.line(t);
            }
            out.line(format!("{} members, canonical {}", class.len(), class.canonical));
            Ok(0)
        }
        OracleCommand::Enumerate(args) => enumerate_cmd(args, out),
        OracleCommand::Path { pair, guard } => {
            let p = read_program(&pair.file)?;
            let (f, g) = parallel(&p, &pair.left, &pair.right)?;
            let mut o = Oracle::new(p.graph.clone()).with_guard(guard);
            match o.cardinal_path(&f.term, &g.term, &f.dom, &f.cod)? {
                Some(path) => {
                    for (k, t) in path.terms.iter().enumerate() {
                        match path.bouncers.get(k) {
                            Some(h) => out.line(format!("{t}    via {h}")),
                            None => out.line(t),
                        }
                    }
                    out.line(format!("length {}", path.len()));
                    Ok(0)
                }
                None => {
                    out.line("no path");
                    Ok(EXIT_NOT_EQUAL)
                }
            }
        }
        OracleCommand::Bouncers { pair, i, j, guard } => {
            let p = read_program(&pair.file)?;
            let (f, g) = (arrow(&p, &pair.left)?, arrow(&p, &pair.right)?);
            let not_square = || Failure::new(EXIT_TYPE, "left must leave a product and right must land in a sum");
            if f.dom.as_prod().is_none() || g.cod.as_sum().is_none() {
                return Err(not_square());
            }
            let mut o = Oracle::new(p.graph.clone()).with_guard(guard);
            let found = o.find_bouncers(&f.term, &g.term, i, j, &f.dom, &g.cod)?;
            for h in &found {
                out.line(h);
            }
            let (xi, aj) = (i.pick(f.dom.as_prod().expect("checked")), j.pick(g.cod.as_sum().expect("checked")));
            let mut classes = Vec::new();
            for h in &found {
                let c = o.class_of(h, xi, aj)?.canonical;
                if !classes.contains(&c) {
                    classes.push(c);
                }
            }
            let noun = if classes.len() == 1 { "class" } else { "classes" };
            out.line(format!("{} bouncers in {} {noun}", found.len(), classes.len()));
            Ok(if found.is_empty() { EXIT_NOT_EQUAL } else { 0 })
        }
    }
}

fn bench_cmd(min_height: u32, max_height: u32, seed: u64, out: &mut Out) -> Outcome {
    if min_height < 2 || max_height < min_height {
        return Err(Failure::new(EXIT_USAGE, "heights must satisfy 2 <= min <= max"));
    }
    out.line(bench::CSV_HEADER);
    for case in bench::cases(min_height, max_height, seed) {
        out.line(bench::run(&case).csv());
    }
    Ok(0)
}

fn run(cli: Cli, out: &mut Out) -> Outcome {
    match cli.command {
        Command::Check { file } => check(&file, out),
        Command::Decide(args) => decide(args, out),
        Command::Compose(args) => compose_cmd(args, out),
        Command::Annotate { file, name, json } => annotate_cmd(&file, &name, json, out),
        Command::Factor(args) => factor_cmd(args, out),
        Command::Enumerate(args) => enumerate_cmd(args, out),
        Command::Oracle(cmd) => oracle_cmd(cmd, out),
        Command::Bench {
            min_height,
            max_height,
            seed,
        } => bench_cmd(min_height, max_height, seed, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut out = Out::new();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
