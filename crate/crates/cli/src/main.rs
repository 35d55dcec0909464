use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fga::algebra::AlgebraElement;
use fga::engine::{exposure_and_groebner, orbit_reduction, BasisResult, EngineStats};
use fga::express::{compute_matrix_c, express, ExpressError};
use fga::oracle::{brute_force_member_with_cap, column_cap_from_env, Verdict};
use fga::orders::{validate_order, Order, OrderViolation, WordOrder};
use fga::rsystem::{check_crs, divide_with_remainder, transversal_neighbors, ReductionSystem, RsystemError};
use fga::scalars::Field;
use fga::words::{Alphabet, Word};

mod order_spec;

#[derive(Parser)]
#[command(name = "fga", version, about = "Gröbner bases and normal forms for right ideals of free group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OrderArgs {
    /// Order spec, e.g. `shortlex:y^-1,x^-1,x,y`.
    #[arg(long)]
    order: String,
    /// Comma-separated generator names; inferred from the order spec if absent.
    #[arg(long)]
    alphabet: Option<String>,
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Generators: a file with one element per line, or inline, separated by `;`.
    #[arg(long)]
    gens: Option<String>,
    /// A combinatorially reducing system, used as given.
    #[arg(long = "gens-crs")]
    gens_crs: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Exposure basis and seconds of the ideal generated by `--gens`.
    Basis {
        #[command(flatten)]
        opts: OrderArgs,
        #[arg(long)]
        gens: String,
        /// Report reduction-step counts.
        #[arg(long)]
        stats: bool,
        /// Use orbit reduction (single generator only).
        #[arg(long)]
        orbit: bool,
    },
    /// Normal form modulo the ideal.
    Reduce {
        #[command(flatten)]
        opts: OrderArgs,
        #[command(flatten)]
        source: Source,
        element: String,
    },
    /// Division with remainder by the Gröbner basis.
    Divide {
        #[command(flatten)]
        opts: OrderArgs,
        #[command(flatten)]
        source: Source,
        element: String,
    },
    /// Ideal membership; exits 1 for non-members.
    Member {
        #[command(flatten)]
        opts: OrderArgs,
        #[command(flatten)]
        source: Source,
        element: String,
    },
    /// Coordinates of an ideal element in the exposure basis.
    Express {
        #[command(flatten)]
        opts: OrderArgs,
        #[arg(long)]
        gens: String,
        element: String,
    },
    /// The matrix expressing the seconds in terms of the firsts.
    MatrixC {
        #[command(flatten)]
        opts: OrderArgs,
        #[arg(long)]
        gens: String,
    },
    /// Forbidden prefixes cutting out the transversal.
    Transversal {
        #[command(flatten)]
        opts: OrderArgs,
        #[command(flatten)]
        source: Source,
    },
    /// Checks the combinatorially reducing system conditions.
    CheckCrs {
        #[command(flatten)]
        opts: OrderArgs,
        #[arg(long = "gens-crs")]
        gens_crs: String,
    },
    /// Compares two words: `less`, `equal` or `greater`.
    Compare {
        #[arg(long)]
        order: String,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
        left: String,
        right: String,
    },
    /// Brute-force membership over a ball of words.
    OracleMember {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
        element: String,
    },
    /// Checks the exposure-order axioms on a ball of words.
    ValidateOrder {
        #[arg(long)]
        order: String,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Domain { kind: &'static str, message: String },
}

impl CliError {
    fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        CliError::Domain { kind, message: message.into() }
    }
}

type Result<T> = std::result::Result<T, CliError>;

struct Context {
    alphabet: Arc<Alphabet>,
    order: Order,
    field: Field,
}

impl Context {
    fn new(order: &str, alphabet: Option<&str>, field: &str) -> Result<Self> {
        let alphabet = match alphabet {
            Some(names) => Alphabet::new(names.split(',').map(str::trim)).map_err(|e| CliError::Config(e.to_string()))?,
            None => order_spec::infer_alphabet(order).map_err(CliError::Config)?,
        };
        let order = order_spec::parse_order(order, &alphabet).map_err(CliError::Config)?;
        let field = Field::parse(field).map_err(|e| CliError::Config(e.to_string()))?;
        Ok(Context { alphabet: Arc::new(alphabet), order, field })
    }

    fn from_opts(o: &OrderArgs) -> Result<Self> {
        Self::new(&o.order, o.alphabet.as_deref(), &o.field)
    }

    fn element(&self, text: &str) -> Result<AlgebraElement> {
        AlgebraElement::parse(text, self.field, self.alphabet.clone())
            .map_err(|e| CliError::Config(format!("element `{text}`: {e}")))
    }

    fn elements(&self, source: &str) -> Result<Vec<AlgebraElement>> {
        read_sources(source)?.iter().map(|t| self.element(t)).collect()
    }

    fn word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text).map_err(|e| CliError::Config(format!("word `{text}`: {e}")))
    }

    fn show(&self, e: &AlgebraElement) -> String {
        e.format_with(&self.order)
    }

    fn show_all(&self, es: &[AlgebraElement]) -> Vec<String> {
        es.iter().map(|e| self.show(e)).collect()
    }

    fn show_words(&self, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| self.alphabet.format_word(w)).collect()
    }

    fn basis(&self, gens: &str) -> Result<BasisResult> {
        Ok(exposure_and_groebner(&self.elements(gens)?, &self.order))
    }

    fn system(&self, source: &Source) -> Result<System> {
        if let Some(gens) = &source.gens {
            let r = self.basis(gens)?;
            if r.improper {
                return Ok(System::Improper(r.exposure_basis[0].clone()));
            }
            let sys = ReductionSystem::new(r.groebner_basis(), &self.order).expect("engine output is monic");
            return Ok(System::Crs(sys));
        }
        let text = source.gens_crs.as_deref().expect("clap enforces one source");
        let elements = self.elements(text)?;
        if elements.len() == 1 && elements[0].is_scalar() && !elements[0].is_zero() {
            let (unit, _) = elements[0].monic(&self.order).expect("nonzero");
            return Ok(System::Improper(unit));
        }
        ReductionSystem::validated(elements, &self.order).map(System::Crs).map_err(|e| self.crs_error(e))
    }

    fn crs_error(&self, e: RsystemError) -> CliError {
        match e {
            RsystemError::Invalid(v) => CliError::domain("invalid_crs", v.describe(&self.alphabet)),
            other => CliError::domain("invalid_crs", other.to_string()),
        }
    }
}

enum System {
    Improper(AlgebraElement),
    Crs(ReductionSystem),
}

/// One element per entry: file lines (with `#` comments) or `;`-separated text.
fn read_sources(source: &str) -> Result<Vec<String>> {
    let path = Path::new(source);
    let items: Vec<String> = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{source}: {e}")))?;
        text.lines().map(|l| l.split('#').next().unwrap_or("").trim().to_string()).collect()
    } else {
        source.split(';').map(|s| s.trim().to_string()).collect()
    };
    Ok(items.into_iter().filter(|s| !s.is_empty()).collect())
}

#[derive(Serialize)]
struct StatsOut {
    reduce_steps: usize,
    second_steps: usize,
    candidates: usize,
    discarded: usize,
    replacements: usize,
    demoted: usize,
    extensions: usize,
}

impl From<&EngineStats> for StatsOut {
    fn from(s: &EngineStats) -> Self {
        StatsOut {
            reduce_steps: s.reduce_steps,
            second_steps: s.second_steps,
            candidates: s.candidates,
            discarded: s.discarded,
            replacements: s.replacements,
            demoted: s.demoted,
            extensions: s.extensions,
        }
    }
}

#[derive(Serialize)]
struct BasisOut {
    improper: bool,
    firsts: Vec<String>,
    seconds: Vec<String>,
    forbidden_prefixes: Vec<String>,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<StatsOut>,
}

#[derive(Serialize)]
struct DivisionOut {
    remainder: String,
    quotients: Vec<String>,
    forbidden_prefixes: Vec<String>,
}

#[derive(Serialize)]
struct MemberOut {
    member: bool,
    remainder: String,
}

#[derive(Serialize)]
struct TransversalOut {
    forbidden_prefixes: Vec<String>,
}

#[derive(Serialize)]
struct ExpressOut {
    coefficients: Vec<String>,
    matrix_c: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct MatrixOut {
    matrix_c: Vec<Vec<String>>,
    firsts: Vec<String>,
    seconds: Vec<String>,
}

#[derive(Serialize)]
struct CheckOut {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    condition: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct CompareOut {
    result: &'static str,
}

#[derive(Serialize)]
struct OracleOut {
    verdict: &'static str,
    radius: usize,
}

#[derive(Serialize)]
struct ValidateOut {
    valid: bool,
    radius: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

#[derive(Serialize)]
struct ErrorOut<'a> {
    error: &'a str,
    message: &'a str,
}

/// Text and JSON renderings of a result, plus the exit status.
struct Output {
    text: String,
    json: String,
    code: u8,
}

impl Output {
    fn new<T: Serialize>(text: impl Into<String>, value: &T) -> Self {
        Output { text: text.into(), json: to_json(value), code: 0 }
    }

    fn failing(mut self) -> Self {
        self.code = 1;
        self
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn run(command: Command) -> Result<(Output, bool)> {
    match command {
        Command::Basis { opts, gens, stats, orbit } => {
            let cx = Context::from_opts(&opts)?;
            let r = if orbit {
                let gens = cx.elements(&gens)?;
                if gens.len() != 1 {
                    return Err(CliError::Config("--orbit needs exactly one generator".into()));
                }
                orbit_reduction(&gens[0], &cx.order)
            } else {
                cx.basis(&gens)?
            };
            let out = BasisOut {
                improper: r.improper,
                firsts: cx.show_all(&r.exposure_basis),
                seconds: cx.show_all(&r.seconds),
                forbidden_prefixes: cx.show_words(&r.forbidden_prefixes(&cx.order)),
                rank: r.rank(),
                stats: stats.then(|| StatsOut::from(&r.stats)),
            };
            let mut text = format!("improper: {}\nrank: {}\nfirsts:\n", out.improper, out.rank);
            for f in &out.firsts {
                text += &format!("  {f}\n");
            }
            text += "seconds:\n";
            for s in &out.seconds {
                text += &format!("  {s}\n");
            }
            text += &format!("forbidden prefixes: {}", out.forbidden_prefixes.join(", "));
            if let Some(s) = &out.stats {
                text += &format!(
                    "\nreduce steps: {}\nsecond steps: {}\ncandidates: {}\ndiscarded: {}\nreplacements: {}\ndemoted: {}\nextensions: {}",
                    s.reduce_steps, s.second_steps, s.candidates, s.discarded, s.replacements, s.demoted, s.extensions
                );
            }
            Ok((Output::new(text, &out), opts.json))
        }
        Command::Reduce { opts, source, element } => {
            let (out, _) = division(&opts, &source, &element)?;
            Ok((Output::new(out.remainder.clone(), &out), opts.json))
        }
        Command::Divide { opts, source, element } => {
            let (out, _) = division(&opts, &source, &element)?;
            let mut text = String::new();
            for (i, g) in out.quotients.iter().enumerate() {
                text += &format!("quotient[{i}] = {g}\n");
            }
            text += &format!("remainder = {}", out.remainder);
            Ok((Output::new(text, &out), opts.json))
        }
        Command::Member { opts, source, element } => {
            let (out, zero) = division(&opts, &source, &element)?;
            let m = MemberOut { member: zero, remainder: out.remainder };
            let o = Output::new(zero.to_string(), &m);
            Ok((if zero { o } else { o.failing() }, opts.json))
        }
        Command::Transversal { opts, source } => {
            let cx = Context::from_opts(&opts)?;
            let words = match cx.system(&source)? {
                System::Improper(_) => vec![Word::identity()],
                System::Crs(sys) => transversal_neighbors(&sys, &cx.order),
            };
            let out = TransversalOut { forbidden_prefixes: cx.show_words(&words) };
            Ok((Output::new(out.forbidden_prefixes.join(", "), &out), opts.json))
        }
        Command::Express { opts, gens, element } => {
            let cx = Context::from_opts(&opts)?;
            let r = cx.basis(&gens)?;
            let h = cx.element(&element)?;
            let (coefficients, matrix) = if r.improper {
                (vec![h], vec![])
            } else {
                let (c, _) = compute_matrix_c(&r.exposure_basis, &cx.order).map_err(express_error)?;
                let p = express(&h, &r.exposure_basis, &c, &cx.order).map_err(|e| match e {
                    ExpressError::NotMember { remainder } => {
                        CliError::domain("not_member", format!("remainder {}", cx.show(&remainder)))
                    }
                    other => express_error(other),
                })?;
                (p, c.format_with(&cx.order))
            };
            let out = ExpressOut { coefficients: cx.show_all(&coefficients), matrix_c: matrix };
            let text: Vec<String> = out.coefficients.iter().enumerate().map(|(i, p)| format!("p{i} = {p}")).collect();
            Ok((Output::new(text.join("\n"), &out), opts.json))
        }
        Command::MatrixC { opts, gens } => {
            let cx = Context::from_opts(&opts)?;
            let r = cx.basis(&gens)?;
            if r.improper {
                return Err(CliError::domain("improper", "the ideal is the whole algebra"));
            }
            let (c, seconds) = compute_matrix_c(&r.exposure_basis, &cx.order).map_err(express_error)?;
            let out =
                MatrixOut { matrix_c: c.format_with(&cx.order), firsts: cx.show_all(&r.exposure_basis), seconds: cx.show_all(&seconds) };
            let text: Vec<String> = out.matrix_c.iter().map(|row| format!("[{}]", row.join(", "))).collect();
            Ok((Output::new(text.join("\n"), &out), opts.json))
        }
        Command::CheckCrs { opts, gens_crs } => {
            let cx = Context::from_opts(&opts)?;
            let elements = cx.elements(&gens_crs)?;
            let verdict = ReductionSystem::new(elements, &cx.order)
                .map_err(|e| (0u8, e.to_string()))
                .and_then(|sys| check_crs(&sys, &cx.order).map_err(|v| (v.condition(), v.describe(&cx.alphabet))));
            Ok(match verdict {
                Ok(()) => (Output::new("valid", &CheckOut { valid: true, condition: None, reason: None }), opts.json),
                Err((condition, reason)) => {
                    let out = CheckOut { valid: false, condition: (condition > 0).then_some(condition), reason: Some(reason) };
                    let text = match out.condition {
                        Some(c) => format!("invalid: condition {c}: {}", out.reason.as_deref().unwrap_or("")),
                        None => format!("invalid: {}", out.reason.as_deref().unwrap_or("")),
                    };
                    (Output::new(text, &out).failing(), opts.json)
                }
            })
        }
        Command::Compare { order, alphabet, json, left, right } => {
            let cx = Context::new(&order, alphabet.as_deref(), "q")?;
            let result = match cx.order.compare(&cx.word(&left)?, &cx.word(&right)?) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok((Output::new(result, &CompareOut { result }), json))
        }
        Command::OracleMember { gens, radius, field, alphabet, json, element } => {
            let field = Field::parse(&field).map_err(|e| CliError::Config(e.to_string()))?;
            let texts = read_sources(&gens)?;
            let alphabet = match alphabet {
                Some(names) => Alphabet::new(names.split(',').map(str::trim)),
                None => {
                    let names: BTreeSet<String> = texts
                        .iter()
                        .chain(std::iter::once(&element))
                        .flat_map(|t| order_spec::identifiers(t))
                        .filter(|n| n != "e")
                        .collect();
                    Alphabet::new(names)
                }
            }
            .map_err(|e| CliError::Config(e.to_string()))?;
            let alphabet = Arc::new(alphabet);
            let parse = |t: &str| {
                AlgebraElement::parse(t, field, alphabet.clone()).map_err(|e| CliError::Config(format!("element `{t}`: {e}")))
            };
            let gens: Vec<AlgebraElement> = texts.iter().map(|t| parse(t)).collect::<Result<_>>()?;
            let f = parse(&element)?;
            let cap = column_cap_from_env().map_err(|e| CliError::Config(e.to_string()))?;
            let verdict = brute_force_member_with_cap(&f, &gens, radius, cap)
                .map_err(|e| CliError::domain("oracle", e.to_string()))?;
            let verdict = match verdict {
                Verdict::Yes => "yes",
                Verdict::NotWithinRadius => "not_within_radius",
            };
            Ok((Output::new(verdict, &OracleOut { verdict, radius }), json))
        }
        Command::ValidateOrder { order, alphabet, radius, json } => {
            let cx = Context::new(&order, alphabet.as_deref(), "q")?;
            let show = |w: &Word| cx.alphabet.format_word(w);
            let violation = validate_order(&cx.order, cx.alphabet.rank(), radius).err().map(|v| match v {
                OrderViolation::NotReflexive(u) => format!("{} is not equal to itself", show(&u)),
                OrderViolation::NotAntisymmetric(u, v) => format!("{} and {} compare inconsistently", show(&u), show(&v)),
                OrderViolation::NotTransitive(a, b, c) => {
                    format!("{} < {} < {} but not {} < {}", show(&a), show(&b), show(&c), show(&a), show(&c))
                }
                OrderViolation::PrefixCondition { prefix, word } => {
                    format!("prefix {} is not below {}", show(&prefix), show(&word))
                }
            });
            let out = ValidateOut { valid: violation.is_none(), radius, violation };
            let text = match &out.violation {
                None => "valid".to_string(),
                Some(v) => format!("invalid: {v}"),
            };
            let o = Output::new(text, &out);
            Ok((if out.valid { o } else { o.failing() }, json))
        }
    }
}

fn express_error(e: ExpressError) -> CliError {
    CliError::domain("express", e.to_string())
}

/// Division against the chosen system; the flag is true when the remainder vanishes.
fn division(opts: &OrderArgs, source: &Source, element: &str) -> Result<(DivisionOut, bool)> {
    let cx = Context::from_opts(opts)?;
    let f = cx.element(element)?;
    match cx.system(source)? {
        System::Improper(unit) => {
            let out = DivisionOut {
                remainder: "0".into(),
                quotients: vec![cx.show(&f.scale(&unit.coefficient(&[]).expect("unit").inv().expect("nonzero")))],
                forbidden_prefixes: vec!["e".into()],
            };
            Ok((out, true))
        }
        System::Crs(sys) => {
            let d = divide_with_remainder(&f, &sys, &cx.order);
            let zero = d.remainder.is_zero();
            let out = DivisionOut {
                remainder: cx.show(&d.remainder),
                quotients: cx.show_all(&d.quotients),
                forbidden_prefixes: cx.show_words(&transversal_neighbors(&sys, &cx.order)),
            };
            Ok((out, zero))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_requested = std::env::args().any(|a| a == "--json");
    match run(cli.command) {
        Ok((out, json)) => {
            println!("{}", if json { &out.json } else { &out.text });
            ExitCode::from(out.code)
        }
        Err(CliError::Config(message)) => {
            report("config", &message, json_requested);
            ExitCode::from(2)
        }
        Err(CliError::Domain { kind, message }) => {
            report(kind, &message, json_requested);
            ExitCode::from(1)
        }
    }
}

fn report(kind: &str, message: &str, json: bool) {
    if json {
        println!("{}", to_json(&ErrorOut { error: kind, message }));
    } else {
        eprintln!("error: {message}");
    }
}
