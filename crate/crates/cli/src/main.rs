//! `combi`: enumerate objects, print polynomial families and series, apply
//! the matching bijections and run the identity checks.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage error.

mod output;

use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use combi_core::bijections::{phi_map, psi_map, verify_bijection};
use combi_core::families::{build_series, PRoute, SeriesId};
use combi_core::objects::generate;
use combi_core::verify::{registry, run_all, run_range};
use combi_core::{
    grammar, CombObject, Error, ExactPoly, Families, MapId, ObjectClass, Status, Var, VerifyReport,
};
use serde_json::{json, Value};

use output::{
    emit_jsonl, int_value, multivariate_csv_header, multivariate_csv_rows, poly_json,
    univariate_csv_row,
};

#[derive(Parser)]
#[command(
    name = "combi",
    version,
    about = "Exact combinatorics of Eulerian polynomials, matchings and Stirling permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Print a polynomial family or integer sequence.
    Poly(PolyArgs),
    /// Stream every object of a class.
    Enumerate(EnumerateArgs),
    /// Apply a bijection to one object or certify it exhaustively.
    Bijection(BijectionArgs),
    /// Print the exponential coefficients n! [z^n] of a generating function.
    Series(SeriesArgs),
    /// Compare a grammar derivative with its closed form.
    Grammar(GrammarArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id; see `--list`.
    #[arg(long, conflicts_with_all = ["all", "list"])]
    id: Option<String>,
    #[arg(long, conflicts_with = "list")]
    all: bool,
    /// Print the registered ids.
    #[arg(long)]
    list: bool,
    /// Largest n to check (defaults per check).
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: VerifyFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyId {
    #[value(name = "N")]
    N,
    #[value(name = "M")]
    M,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "Q")]
    Q,
    #[value(name = "P")]
    P,
    #[value(name = "R")]
    R,
    #[value(name = "L")]
    L,
    #[value(name = "Y")]
    Y,
    #[value(name = "d")]
    D,
    #[value(name = "h")]
    H,
    #[value(name = "qn")]
    Qn,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: FamilyId,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateFormat {
    Text,
    Jsonl,
}

#[derive(Args)]
struct EnumerateArgs {
    /// permutation, signed, matching, stirling, stirling2, decorated or invseq.
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: u32,
    /// Bound sequence for invseq, e.g. `1,3,5`.
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: EnumerateFormat,
}

#[derive(Args)]
struct BijectionArgs {
    /// phi or psi.
    #[arg(long)]
    map: String,
    /// Encoded decorated (phi) or signed (psi) permutation.
    #[arg(
        long,
        conflicts_with = "check",
        required_unless_present = "check",
        allow_hyphen_values = true
    )]
    input: Option<String>,
    #[arg(long, requires = "n")]
    check: bool,
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    id: String,
    #[arg(long, default_value_t = combi_core::families::DEFAULT_ORDER as u32)]
    order: u32,
}

#[derive(Args)]
struct GrammarArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    lemma: u8,
    #[arg(long)]
    n: u32,
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Ok,
    Failed,
}

type CliResult = Result<Outcome, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Verify(a) => verify(&mut out, a),
        Command::Poly(a) => poly(&mut out, a),
        Command::Enumerate(a) => enumerate(&mut out, a),
        Command::Bijection(a) => bijection(&mut out, a),
        Command::Series(a) => series(&mut out, a),
        Command::Grammar(a) => grammar_cmd(&mut out, a),
    };
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("combi: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("combi: {e}");
            ExitCode::from(2)
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Usage(format!("write failed: {e}"))
}

fn verify(out: &mut impl Write, a: VerifyArgs) -> CliResult {
    if a.list {
        for c in registry() {
            writeln!(
                out,
                "{:<20} n {}..={} (capacity {})  {}",
                c.id, c.min_n, c.default_max_n, c.capacity, c.statement
            )
            .map_err(io_err)?;
        }
        return Ok(Outcome::Ok);
    }
    let reports = match (&a.id, a.all) {
        (Some(id), _) => run_range(id, a.max_n)?,
        (None, true) => {
            let overrides: BTreeMap<String, u32> = match a.max_n {
                Some(m) => registry().iter().map(|c| (c.id.to_string(), m)).collect(),
                None => BTreeMap::new(),
            };
            run_all(&overrides)?
        }
        (None, false) => return Err(Error::Usage("verify needs --id ID, --all or --list".into())),
    };
    match a.format {
        VerifyFormat::Text => {
            for r in &reports {
                writeln!(out, "{}", r.line()).map_err(io_err)?;
            }
        }
        VerifyFormat::Json => {
            let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
            writeln!(out, "{text}").map_err(io_err)?;
        }
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let failed = count(Status::Fail);
    eprintln!(
        "{} passed, {failed} failed, {} skipped",
        count(Status::Pass),
        count(Status::SkippedCapacity)
    );
    Ok(if failed > 0 {
        Outcome::Failed
    } else {
        Outcome::Ok
    })
}

/// Variables that may occur in each multivariate family.
fn family_vars(f: FamilyId) -> &'static [Var] {
    match f {
        FamilyId::Q | FamilyId::R => &[Var::X, Var::Q],
        FamilyId::P => &[Var::X, Var::Y, Var::Q],
        FamilyId::L => &[Var::Q],
        _ => &[Var::X],
    }
}

enum Value1 {
    Poly(ExactPoly),
    Int(num_bigint::BigInt),
}

fn family_value(fam: &Families, f: FamilyId, n: u32) -> Result<Value1, Error> {
    Ok(Value1::Poly(match f {
        FamilyId::N => fam.n_poly(n),
        FamilyId::M => fam.m_poly(n),
        FamilyId::A => fam.eulerian_a(n),
        FamilyId::B => fam.b_poly(n)?,
        FamilyId::C => fam.c_poly(n),
        FamilyId::Q => fam.q_poly(n),
        FamilyId::P => fam.p_poly(n, PRoute::Recurrence)?,
        FamilyId::R => fam.r_poly(n),
        FamilyId::L => fam.l_poly(n),
        FamilyId::Y => fam.y_poly(n),
        FamilyId::D => fam.d_poly(n)?,
        FamilyId::H => return Ok(Value1::Int(fam.h_number(n)?)),
        FamilyId::Qn => return Ok(Value1::Int(fam.qn(n))),
    }))
}

fn poly(out: &mut impl Write, a: PolyArgs) -> CliResult {
    let fam = Families::new();
    let vars = family_vars(a.family);
    let univariate = vars == [Var::X];
    match a.format {
        PolyFormat::Text => match family_value(&fam, a.family, a.n)? {
            Value1::Poly(p) => writeln!(out, "{p}"),
            Value1::Int(v) => writeln!(out, "{v}"),
        }
        .map_err(io_err)?,
        PolyFormat::Json => {
            let name = a
                .family
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            let body = match family_value(&fam, a.family, a.n)? {
                Value1::Poly(p) => {
                    json!({"family": name, "n": a.n, "text": p.to_string(), "terms": poly_json(&p, vars)})
                }
                Value1::Int(v) => json!({"family": name, "n": a.n, "value": int_value(&v)}),
            };
            writeln!(out, "{body}").map_err(io_err)?;
        }
        PolyFormat::Csv => {
            let is_int = matches!(a.family, FamilyId::H | FamilyId::Qn);
            if !univariate && !is_int {
                writeln!(out, "{}", multivariate_csv_header(vars)).map_err(io_err)?;
            }
            for n in 0..=a.n {
                match family_value(&fam, a.family, n)? {
                    Value1::Int(v) => writeln!(out, "{n},{v}").map_err(io_err)?,
                    Value1::Poly(p) if univariate => {
                        writeln!(out, "{}", univariate_csv_row(n, &p)).map_err(io_err)?
                    }
                    Value1::Poly(p) => {
                        for row in multivariate_csv_rows(n, &p, vars) {
                            writeln!(out, "{row}").map_err(io_err)?;
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

fn parse_bounds(text: &str) -> Result<Vec<u32>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad bound `{t}`")))
        })
        .collect()
}

fn enumerate(out: &mut impl Write, a: EnumerateArgs) -> CliResult {
    let class: ObjectClass = a.class.parse()?;
    let bounds = a.s.as_deref().map(parse_bounds).transpose()?;
    let stream = generate(class, a.n, bounds.as_deref())?;
    match a.format {
        EnumerateFormat::Jsonl => {
            let stats = a.stats;
            let items = stream.map(|o| (o.to_string(), stats.then(|| o.stats())));
            emit_jsonl(out, items).map_err(io_err)?;
        }
        EnumerateFormat::Text => {
            for o in stream {
                if a.stats {
                    let shown: Vec<String> = o
                        .stats()
                        .iter()
                        .map(|(k, v)| format!("{k}={}", stat_text(v)))
                        .collect();
                    writeln!(out, "{o}\t{}", shown.join(" ")).map_err(io_err)?;
                } else {
                    writeln!(out, "{o}").map_err(io_err)?;
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

fn stat_text(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(stat_text).collect();
            format!("{{{}}}", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn bijection(out: &mut impl Write, a: BijectionArgs) -> CliResult {
    let map: MapId = a.map.parse()?;
    if let Some(text) = a.input {
        let triple = match (map, CombObject::parse(class_of(map), &text)?) {
            (MapId::Phi, CombObject::Decorated(w)) => phi_map(&w)?,
            (MapId::Psi, CombObject::Signed(p)) => psi_map(&p)?,
            _ => unreachable!("parse returns the requested class"),
        };
        writeln!(out, "{triple}").map_err(io_err)?;
        return Ok(Outcome::Ok);
    }
    let n = a.n.expect("clap enforces --n with --check");
    let r = verify_bijection(map, n)?;
    writeln!(
        out,
        "{} {map} n={n} injective={} image_complete={} weight_preserving={}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.injective,
        r.image_complete,
        r.weight_preserving
    )
    .map_err(io_err)?;
    if let Some((obj, img)) = &r.counterexample {
        writeln!(out, "  counterexample: {obj} -> {img}").map_err(io_err)?;
    }
    Ok(if r.passed() {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}

fn class_of(map: MapId) -> ObjectClass {
    match map {
        MapId::Phi => ObjectClass::Decorated,
        MapId::Psi => ObjectClass::Signed,
    }
}

fn series(out: &mut impl Write, a: SeriesArgs) -> CliResult {
    let id: SeriesId = a.id.parse()?;
    let s = build_series(id, a.order as usize)?;
    for i in 0..=s.order() {
        writeln!(out, "{i}: {}", s.egf_coefficient(i)?).map_err(io_err)?;
    }
    Ok(Outcome::Ok)
}

fn grammar_cmd(out: &mut impl Write, a: GrammarArgs) -> CliResult {
    let report: VerifyReport = match a.lemma {
        1 => grammar::lemma1_check(a.n)?,
        _ => grammar::lemma2_check(a.n)?,
    };
    let (g, start) = match a.lemma {
        1 => (grammar::Grammar::stirling_cycles(), ExactPoly::var(Var::A)),
        _ => (
            grammar::Grammar::eulerian(),
            ExactPoly::term(1, &[(Var::B, 2)]),
        ),
    };
    writeln!(out, "D^{}({start}) = {}", a.n, g.derive(&start, a.n)?).map_err(io_err)?;
    writeln!(out, "{}", report.line()).map_err(io_err)?;
    Ok(if report.passed() {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}
