use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symbpow::ideals::Ideal;
use symbpow::polyring::{parse_polynomial, MonomialOrder};
use symbpow::resolve::{
    minimal_resolution, power_complex, strand_resolution, BettiTable, ChainComplex,
    Presentation,
};
use symbpow::schemes::{
    aci_presentation, classify_p1p1, ferrers_config, general_p1p1_points, triple_point_twists, P1P1Classification,
    PointConfigP1P1,
};
use symbpow::symbolic::{classify_all_powers, powers_equal, romer_check, Route, RouteHint};
use symbpow::{Error, Result};

use crate::repro;
use crate::session::{Entry, Session};

/// Symbolic and ordinary powers of homogeneous ideals.
#[derive(Debug, Parser)]
#[command(name = "symb", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the ideal comes from: a definition file and an optional object name.
#[derive(Debug, Args)]
pub struct Source {
    /// Definition file.
    #[arg(long, visible_alias = "config", value_name = "FILE")]
    pub ideal: PathBuf,
    /// Object to use when the file defines several.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RouteArg {
    All,
    Components,
    Saturation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum IdealOp {
    Mingens,
    Power,
    Saturate,
    Sum,
    Product,
    Intersect,
    Colon,
    Equal,
    Codim,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
        #[command(flatten)]
        out: Output,
    },
    /// Normal form of a polynomial modulo the ideal.
    Nf {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Ideal operations; binary operations take the second ideal from `--with`.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        #[command(flatten)]
        src: Source,
        /// Second object, from the same definition file.
        #[arg(long)]
        with: Option<String>,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Hilbert series numerator and values of R/I.
    Hilbert {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 10)]
        upto: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal free resolution of R/I.
    Resolve {
        #[command(flatten)]
        src: Source,
        /// Also check the resolution against I.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// The strand complex of I^m from a Hilbert-Burch presentation.
    PowerComplex {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        m: u32,
        /// Assert that I is a generic complete intersection (used for m = 2).
        #[arg(long)]
        generic_ci: bool,
        /// Build the complex without checking the resolution hypotheses.
        #[arg(long)]
        unchecked: bool,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Graded Betti numbers of R/I^m.
    Betti {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Predict and observe I^(m) against I^m for m = 1..max-m.
    Classify {
        #[command(flatten)]
        src: Source,
        /// Defaults to min(n, 3).
        #[arg(long)]
        max_m: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare I^(m) with I^m.
    PowersEqual {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "all")]
        route: RouteArg,
        #[command(flatten)]
        out: Output,
    },
    /// The Betti bound on the minimal table of R/I^m.
    Romer {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Points of P^1 x P^1: classification, Ferrers configurations and twist lists.
    P1p1 {
        /// Definition file with `p1p1` records.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["alpha", "general"])]
        config: Option<PathBuf>,
        #[arg(long, requires = "config")]
        name: Option<String>,
        /// Ferrers configuration, e.g. `3,2,1`.
        #[arg(long, value_delimiter = ',', conflicts_with = "general")]
        alpha: Option<Vec<usize>>,
        /// Number of general points.
        #[arg(long)]
        general: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Compare the cube's resolution with the closed form for `(a,b,c,d)`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        twists: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Re-derive a worked example and compare with stored values.
    Repro {
        /// Target name, or `all` for every non-stretch target.
        target: Option<String>,
        #[arg(long)]
        list: bool,
        /// Seed for randomized constructions.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

pub struct CommandOutput {
    pub text: String,
    pub status: i32,
}

fn ok(text: String) -> Result<CommandOutput> {
    Ok(CommandOutput { text, status: 0 })
}

fn emit(out: &Output, value: Value, text: String) -> Result<CommandOutput> {
    if out.json {
        ok(format!("{}\n", serde_json::to_string_pretty(&value).expect("json")))
    } else {
        ok(text)
    }
}

fn load(src: &Source) -> Result<Session> {
    Session::load(&src.ideal)
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

pub fn execute(cli: &Cli) -> Result<CommandOutput> {
    match &cli.command {
        Command::Gb { src, order, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?;
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let gb = i.gb_for(order).polynomials();
            emit(out, json!({ "gb": strings(&gb) }), lines(&gb))
        }
        Command::Nf { src, poly, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?;
            let f = parse_polynomial(poly, i.ring())?;
            let nf = i.normal_form(&f)?;
            emit(out, json!({ "nf": nf.to_string(), "member": nf.is_zero() }), format!("{nf}\n"))
        }
        Command::Ideal { op, src, with, m, out } => ideal_op(*op, src, with.as_deref(), *m, out),
        Command::Hilbert { src, upto, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?.totalized();
            let hs = i.hilbert_series();
            let values: Vec<i64> = (0..=*upto).map(|d| hs.value_at(d)).collect();
            let numerator: Vec<(i64, i64)> = hs.numerator().iter().map(|(d, c)| (d.total(), *c)).collect();
            let (codim, dim) = (i.codimension()?, i.dimension()?);
            let mut text = String::new();
            writeln!(text, "numerator: {}", format_numerator(&numerator)).expect("string write");
            writeln!(text, "codimension {codim}, Krull dimension {dim}").expect("string write");
            writeln!(text, "values 0..={upto}: {values:?}").expect("string write");
            emit(out, json!({ "numerator": numerator, "codimension": codim, "dimension": dim, "values": values }), text)
        }
        Command::Resolve { src, verify, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?;
            let (c, b) = minimal_resolution(i)?;
            complex_output(&c, &b, if *verify { Some(i.clone()) } else { None }, out)
        }
        Command::PowerComplex { src, m, generic_ci, unchecked, verify, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?.totalized();
            let c = if *unchecked {
                power_complex(&Presentation::from_ideal(&i)?, *m)?
            } else {
                strand_resolution(&i, *m, *generic_ci)?
            };
            let target = if *verify { Some(i.power(*m)?) } else { None };
            complex_output(&c, &c.betti(), target, out)
        }
        Command::Betti { src, m, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?;
            let (_, b) = minimal_resolution(&i.power(*m)?)?;
            emit(out, b.to_json(), b.format())
        }
        Command::Classify { src, max_m, out } => classify(src, *max_m, out),
        Command::PowersEqual { src, m, route, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?.totalized();
            let hint = match route {
                RouteArg::All => RouteHint::All,
                RouteArg::Components => RouteHint::Only(Route::Components),
                RouteArg::Saturation => RouteHint::Only(Route::Saturation),
            };
            let c = powers_equal(&i, *m, hint)?;
            let routes = strings(&c.routes).join(", ");
            let text = match &c.witness {
                None => format!("EQUAL (routes: {routes})\n"),
                Some(w) => format!("UNEQUAL, witness degree {}: {w}\n(routes: {routes})\n", c.witness_degree().unwrap_or(0)),
            };
            let value = json!({
                "m": c.m,
                "equal": c.equal,
                "routes": c.routes,
                "witness": c.witness.as_ref().map(|w| w.to_string()),
                "witness_degree": c.witness_degree(),
            });
            emit(out, value, text)
        }
        Command::Romer { src, m, out } => {
            let s = load(src)?;
            let i = s.ideal(src.name.as_deref())?;
            let (_, b) = minimal_resolution(&i.power(*m)?)?;
            let rep = romer_check(&b)?;
            let mut text = format!("M = {:?}\n", rep.maxima);
            for row in &rep.rows {
                writeln!(
                    text,
                    "i = {}: beta = {} <= {} (margin {}) {}",
                    row.i,
                    row.beta,
                    row.bound,
                    row.margin,
                    if row.holds() { "ok" } else { "VIOLATED" }
                )
                .expect("string write");
            }
            for w in &rep.warnings {
                writeln!(text, "warning: {w}").expect("string write");
            }
            if !rep.holds() {
                return Err(Error::TheoremViolation(format!("bound fails at {:?}\n{text}", rep.violations())));
            }
            emit(out, rep.to_json(), text)
        }
        Command::P1p1 { config, name, alpha, general, seed, twists, out } => {
            p1p1(config.as_ref(), name.as_deref(), alpha.as_deref(), *general, *seed, twists.as_deref(), out)
        }
        Command::Repro { target, list, seed, out } => run_repro(target.as_deref(), *list, *seed, out),
    }
}

fn format_numerator(terms: &[(i64, i64)]) -> String {
    let mut acc: std::collections::BTreeMap<i64, i64> = std::collections::BTreeMap::new();
    for (d, c) in terms {
        *acc.entry(*d).or_insert(0) += c;
    }
    let mut out = String::new();
    for (d, c) in acc.into_iter().filter(|(_, c)| *c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        let mag = c.abs();
        let body = match (d, mag) {
            (0, _) => mag.to_string(),
            (1, 1) => "t".into(),
            (1, _) => format!("{mag}t"),
            (_, 1) => format!("t^{d}"),
            _ => format!("{mag}t^{d}"),
        };
        if out.is_empty() {
            out = if c < 0 { format!("-{body}") } else { body };
        } else {
            write!(out, " {sign} {body}").expect("string write");
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn complex_output(c: &ChainComplex, b: &BettiTable, target: Option<Ideal>, out: &Output) -> Result<CommandOutput> {
    let mut text = b.format();
    let mut value = b.to_json();
    value["ranks"] = json!(c.ranks());
    if let Some(t) = target {
        let v = c.verify(&t)?;
        writeln!(text, "verify: {}", if v.all_pass() { "ok" } else { "FAILED" }).expect("string write");
        value["verify"] = json!(v);
        if !v.all_pass() {
            return Err(Error::InvariantViolation(format!("verification failed: {v:?}")));
        }
    }
    emit(out, value, text)
}

fn ideal_op(op: IdealOp, src: &Source, with: Option<&str>, m: u32, out: &Output) -> Result<CommandOutput> {
    let s = load(src)?;
    let i = s.ideal(src.name.as_deref())?;
    let other = || -> Result<&Ideal> {
        let n = with.ok_or_else(|| Error::InvalidArgument("this operation needs --with".into()))?;
        s.ideal(Some(n))
    };
    let result = match op {
        IdealOp::Mingens => i.min_generators()?.generators,
        IdealOp::Power => i.power(m)?.generators().to_vec(),
        IdealOp::Saturate => i.saturate()?.gb_polys(),
        IdealOp::Sum => i.sum(other()?)?.gb_polys(),
        IdealOp::Product => i.product(other()?)?.generators().to_vec(),
        IdealOp::Intersect => i.intersect(other()?)?.gb_polys(),
        IdealOp::Colon => i.colon(other()?)?.gb_polys(),
        IdealOp::Equal => {
            let e = i.equals(other()?)?;
            return emit(out, json!({ "equal": e }), format!("{}\n", if e { "EQUAL" } else { "UNEQUAL" }));
        }
        IdealOp::Codim => {
            let c = i.codimension()?;
            return emit(out, json!({ "codimension": c }), format!("{c}\n"));
        }
    };
    emit(out, json!({ "generators": strings(&result) }), lines(&result))
}

fn classify(src: &Source, max_m: Option<u32>, out: &Output) -> Result<CommandOutput> {
    let s = load(src)?;
    let entry = s.get(src.name.as_deref())?;
    let p1p1 = match entry {
        Entry::P1P1(c) if c.is_reduced() => Some(classify_p1p1(c)?),
        _ => None,
    };
    let rep = classify_all_powers(entry.ideal(), max_m)?;
    let h = &rep.hypotheses;
    let mut text = String::new();
    if let Some(c) = &p1p1 {
        writeln!(text, "P1xP1 configuration alpha {}: {} verdict", c.alpha, c.kind).expect("string write");
    }
    writeln!(
        text,
        "n = {}, codimension {}, ACM {}, LCI {}, unmixed {}, mu = {}",
        h.n, h.codimension, h.acm, h.lci, h.unmixed, rep.mu
    )
    .expect("string write");
    if h.hold() {
        let p = if rep.predicts_all_equal() {
            "I^(m) = I^m for all m".to_string()
        } else {
            format!("equal for m < {n}, unequal at m = {n}", n = h.n)
        };
        writeln!(text, "hypotheses hold; prediction: {p}").expect("string write");
    } else {
        writeln!(text, "hypotheses fail ({}); observation only", h.failures.join("; ")).expect("string write");
    }
    for v in &rep.verdicts {
        let pred = match v.predicted {
            Some(true) => " (predicted equal)",
            Some(false) => " (predicted unequal)",
            None => "",
        };
        write!(text, "m = {}: {}{pred}", v.m, v.status()).expect("string write");
        if let Some(w) = &v.witness {
            write!(text, ", witness degree {}: {w}", w.total_degree().unwrap_or(0)).expect("string write");
        }
        text.push('\n');
    }
    if rep.all_observed_equal() {
        writeln!(text, "all equal").expect("string write");
    }
    let mut value = rep.to_json();
    if let Some(c) = &p1p1 {
        value["p1p1"] = json!(c);
    }
    emit(out, value, text)
}

fn describe_p1p1(c: &P1P1Classification) -> String {
    let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    format!(
        "alpha {}: {} (mu = {}, ACM {})\nall powers symbolic: {}\nsquare symbolic: {}\ncube ACM: {}\n",
        c.alpha,
        c.kind,
        c.mu,
        c.acm,
        opt(c.all_powers_symbolic),
        opt(c.square_symbolic),
        opt(c.cube_acm)
    )
}

fn p1p1(
    config: Option<&PathBuf>,
    name: Option<&str>,
    alpha: Option<&[usize]>,
    general: Option<usize>,
    seed: u64,
    twists: Option<&[usize]>,
    out: &Output,
) -> Result<CommandOutput> {
    if let Some(t) = twists {
        let [a, b, c, d] = <[usize; 4]>::try_from(t)
            .map_err(|_| Error::InvalidArgument("--twists takes a,b,c,d".into()))?;
        return triple_twists(a, b, c, d, out);
    }
    let cfg: PointConfigP1P1 = match (config, alpha, general) {
        (Some(path), _, _) => match Session::load(path)?.get(name)? {
            Entry::P1P1(c) => c.clone(),
            other => return Err(Error::InvalidArgument(format!("{} is not a p1p1 configuration", other.kind()))),
        },
        (None, Some(a), _) => ferrers_config(a, 1)?,
        (None, None, Some(n)) => general_p1p1_points(n, seed)?,
        _ => return Err(Error::InvalidArgument("give --config, --alpha, --general or --twists".into())),
    };
    let c = classify_p1p1(&cfg)?;
    emit(out, json!(c), describe_p1p1(&c))
}

fn triple_twists(a: usize, b: usize, c: usize, d: usize, out: &Output) -> Result<CommandOutput> {
    let complex = power_complex(&aci_presentation(a, b, c, d)?, 3)?;
    let expected = triple_point_twists(a as i64, b as i64, c as i64, d as i64);
    let mut text = String::new();
    let mut value = Vec::new();
    let mut all = true;
    for (k, mut exp) in expected.into_iter().enumerate() {
        exp.sort();
        let got = complex.modules()[k + 1].sorted_twists();
        let same = got == exp;
        all &= same;
        writeln!(text, "F{k}: {} [{}]", strings(&got).join(" "), if same { "matches" } else { "DIFFERS" })
            .expect("string write");
        value.push(json!({ "index": k, "twists": got, "expected": exp, "match": same }));
    }
    if !all {
        return Err(Error::TheoremViolation(format!("twist lists differ from the closed form\n{text}")));
    }
    emit(out, json!({ "modules": value }), text)
}

fn run_repro(target: Option<&str>, list: bool, seed: u64, out: &Output) -> Result<CommandOutput> {
    if list || target.is_none() {
        let text: String = repro::TARGETS.iter().map(|(n, d)| format!("{n:<22} {d}\n")).collect();
        let value = json!(repro::TARGETS.iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>());
        return emit(out, value, text);
    }
    let names: Vec<&str> = match target {
        Some("all") => repro::TARGETS.iter().map(|(n, _)| *n).filter(|n| !n.starts_with("five-")).collect(),
        Some(n) => vec![n],
        None => unreachable!(),
    };
    let mut text = String::new();
    let mut values = Vec::new();
    let mut pass = true;
    for n in names {
        let rep = repro::run(n, seed)?;
        pass &= rep.passed();
        text.push_str(&rep.render());
        values.push(rep.to_json());
    }
    let value = if values.len() == 1 { values.remove(0) } else { json!(values) };
    let mut o = emit(out, value, text)?;
    if !pass {
        o.status = 3;
    }
    Ok(o)
}
