//! Acceptance criteria 1 to 14. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use combi_core::bijections::{phi_map, psi_map, verify_bijection, PHI_BASE_CASES, PSI_BASE_CASES};
use combi_core::families::{build_series, PRoute, SeriesId};
use combi_core::objects::{count_paired_excedance_involutions, generate};
use combi_core::verify::{registry, run_all_with, run_range};
use combi_core::{
    CombObject, CycleStirling, ExactPoly, Families, MapId, Mutation, ObjectClass, Status, Var,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn combi(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_combi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn checks_pass(id: &str, max_n: u32) -> Outcome {
    let reports = run_range(id, Some(max_n)).map_err(|e| e.to_string())?;
    let ns: Vec<u32> = reports.iter().map(|r| r.n).collect();
    let min = registry().iter().find(|c| c.id == id).unwrap().min_n;
    ensure(ns == (min..=max_n).collect::<Vec<_>>(), || {
        format!("{id}: ran {ns:?}")
    })?;
    match reports.iter().find(|r| r.status != Status::Pass) {
        Some(r) => Err(r.line()),
        None => Ok(()),
    }
}

fn double_factorial(n: u64) -> u64 {
    (1..=n).map(|i| 2 * i - 1).product()
}

fn parse(class: ObjectClass, s: &str) -> CombObject {
    CombObject::parse(class, s).unwrap()
}

fn image(map: MapId, input: &str) -> Result<String, String> {
    let t = match (map, parse(map_class(map), input)) {
        (MapId::Phi, CombObject::Decorated(w)) => phi_map(&w),
        (MapId::Psi, CombObject::Signed(p)) => psi_map(&p),
        _ => unreachable!(),
    };
    t.map(|t| t.to_string()).map_err(|e| e.to_string())
}

fn map_class(map: MapId) -> ObjectClass {
    match map {
        MapId::Phi => ObjectClass::Decorated,
        MapId::Psi => ObjectClass::Signed,
    }
}

fn bijection_suite(
    map: MapId,
    max_n: u32,
    table: &[(&str, &str)],
    example: (&str, &str),
) -> Outcome {
    for n in 1..=max_n {
        let r = verify_bijection(map, n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{map} n={n}: {r:?}"))?;
    }
    for &(input, expected) in table {
        let got = image(map, input)?;
        ensure(got == expected, || {
            format!("{map}({input}) = {got}, printed {expected}")
        })?;
    }
    let got = image(map, example.0)?;
    ensure(got == example.1, || {
        format!("{map}({}) = {got}, printed {}", example.0, example.1)
    })
}

fn c1() -> Outcome {
    let text = |n: &str| {
        let o = combi(&["poly", "--family", "N", "--n", n, "--format", "text"]);
        String::from_utf8(o.stdout).unwrap().trim().to_string()
    };
    for (n, printed) in [
        ("0", "1"),
        ("1", "x"),
        ("2", "2*x + x^2"),
        ("3", "4*x + 10*x^2 + x^3"),
    ] {
        let got = text(n);
        ensure(got == printed, || format!("N_{n} = {got}"))?;
    }
    let o = combi(&["poly", "--family", "N", "--n", "10", "--format", "csv"]);
    ensure(o.status.success(), || "csv run failed".into())?;
    let csv = String::from_utf8(o.stdout).unwrap();
    for (n, line) in csv.lines().enumerate() {
        let cells: Vec<u64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let sum: u64 = cells[1..].iter().sum();
        ensure(
            cells[0] == n as u64 && sum == double_factorial(n as u64),
            || format!("row {line} does not sum to {}", double_factorial(n as u64)),
        )?;
    }
    ensure(csv.lines().count() == 11, || "expected rows 0..=10".into())
}

fn c4() -> Outcome {
    bijection_suite(
        MapId::Phi,
        7,
        &PHI_BASE_CASES,
        (
            "3h 1h 4 2 6hc 5h",
            "[(1,3)(2,4)(5,8)(6,7)] [(1,3)(2,4)] {1,3,5,6}",
        ),
    )
}

fn c5() -> Outcome {
    bijection_suite(
        MapId::Psi,
        6,
        &PSI_BASE_CASES,
        (
            "-3 -1 4 2 -6 7 -5",
            "[(1,3)(2,4)(5,8)(6,9)(7,10)] [(1,3)(2,4)] {1,3,5,6,7}",
        ),
    )
}

fn c7() -> Outcome {
    let listings: [(u32, &[&str]); 2] = [
        (2, &["(1 1)(2 2)", "(1 1 2 2)", "(1 2 2 1)"]),
        (
            3,
            &[
                "(1 1)(2 2)(3 3)",
                "(1 1)(2 2 3 3)",
                "(1 1)(2 3 3 2)",
                "(1 1 3 3)(2 2)",
                "(1 3 3 1)(2 2)",
                "(1 1 2 2)(3 3)",
                "(1 1 2 2 3 3)",
                "(1 1 2 3 3 2)",
                "(1 1 3 3 2 2)",
                "(1 3 3 1 2 2)",
                "(1 2 2 1)(3 3)",
                "(1 2 2 1 3 3)",
                "(1 2 2 3 3 1)",
                "(1 2 3 3 2 1)",
                "(1 3 3 2 2 1)",
            ],
        ),
    ];
    for (n, listed) in listings {
        let got: BTreeSet<String> = CycleStirling::all(n).map(|s| s.to_string()).collect();
        let want: BTreeSet<String> = listed.iter().map(|s| s.to_string()).collect();
        ensure(got == want && got.len() == listed.len(), || {
            format!("n={n}: generated {got:?}")
        })?;
    }
    for n in 1..=8u32 {
        let count = generate(ObjectClass::Stirling2, n, None)
            .map_err(|e| e.to_string())?
            .count() as u64;
        ensure(count == double_factorial(n as u64), || {
            format!("n={n}: {count} objects")
        })?;
    }
    Ok(())
}

fn c8() -> Outcome {
    checks_pass("Q-recurrence-enum", 7)?;
    checks_pass("Q-gf", 8)?;
    let f = Families::new();
    let series = build_series(SeriesId::Q, 8).map_err(|e| e.to_string())?;
    for n in 0..=8u32 {
        let q = f.q_poly(n);
        let from_series = series.egf_integer(n as usize).map_err(|e| e.to_string())?;
        ensure(from_series == q, || {
            format!("Q_{n}: series {from_series} vs {q}")
        })?;
        let at_one = q.eval_i64(Var::Q, 1).unwrap();
        ensure(at_one == f.m_poly(n), || format!("Q_{n}(x,1) = {at_one}"))?;
        let rising = (0..n as i64).fold(ExactPoly::one(), |acc, i| {
            &acc * &(ExactPoly::var(Var::Q) + ExactPoly::from_i64(2 * i))
        });
        let at_x1 = q.eval_i64(Var::X, 1).unwrap();
        ensure(at_x1 == rising, || format!("Q_{n}(1,q) = {at_x1}"))?;
    }
    Ok(())
}

fn c9() -> Outcome {
    checks_pass("P-three-routes", 7)?;
    checks_pass("P-gf", 8)?;
    let f = Families::new();
    let p0 = f.p_poly(0, PRoute::Recurrence).map_err(|e| e.to_string())?;
    let p1 = f.p_poly(1, PRoute::Recurrence).map_err(|e| e.to_string())?;
    ensure(p0 == ExactPoly::one(), || format!("P_0 = {p0}"))?;
    ensure(
        p1 == ExactPoly::term(1, &[(Var::Q, 1), (Var::Y, 1)]),
        || format!("P_1 = {p1}"),
    )
}

fn c11() -> Outcome {
    checks_pass("R-recurrence-enum", 7)?;
    checks_pass("R-binomial-shift", 7)?;
    checks_pass("qn-egf", 12)?;
    checks_pass("S2-equals-d2z", 8)?;
    let f = Families::new();
    let printed = [1, 0, 2];
    for (n, &q) in printed.iter().enumerate() {
        ensure(f.qn(n as u32) == BigInt::from(q), || {
            format!("q_{n} = {}", f.qn(n as u32))
        })?;
    }
    for n in 2..=11u32 {
        let lhs = f.qn(n + 1);
        let rhs = BigInt::from(2 * n) * (f.qn(n) + f.qn(n - 1));
        ensure(lhs == rhs, || {
            format!("q_{} = {lhs}, recurrence gives {rhs}", n + 1)
        })?;
    }
    Ok(())
}

fn c13() -> Outcome {
    let f = Families::new();
    for (n, h) in [1i64, 2, 28, 1112, 87568].into_iter().enumerate() {
        let got = f.h_number(n as u32).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(h), || format!("h_{n} = {got}"))?;
    }
    checks_pass("h-series-vs-enum", 7)?;
    for (k, h) in [(1, 2), (2, 28)] {
        let got = count_paired_excedance_involutions(k).map_err(|e| e.to_string())?;
        ensure(got == h, || format!("involution count h_{k} = {got}"))?;
    }
    Ok(())
}

fn c14() -> Outcome {
    let o = combi(&["verify", "--all"]);
    let out = String::from_utf8(o.stdout).unwrap();
    ensure(o.status.code() == Some(0), || {
        let failing: Vec<&str> = out
            .lines()
            .filter(|l| !l.starts_with("PASS"))
            .take(5)
            .collect();
        format!("verify --all exited {:?}: {failing:?}", o.status.code())
    })?;
    let ids: BTreeSet<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("PASS ")?.split(' ').next())
        .collect();
    ensure(ids.len() >= 22, || {
        format!("only {} identities passed", ids.len())
    })?;
    let caps: BTreeMap<String, u32> = registry()
        .iter()
        .map(|c| (c.id.to_string(), c.default_max_n.min(5).max(c.min_n)))
        .collect();
    let mut escaped = Vec::new();
    for m in Mutation::catalogue() {
        let reports =
            run_all_with(&Families::with_mutation(m), &caps).map_err(|e| e.to_string())?;
        if reports.iter().all(|r| r.status != Status::Fail) {
            escaped.push(m.to_string());
        }
    }
    ensure(escaped.is_empty(), || {
        format!("mutants not caught: {escaped:?}")
    })
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            number: 1,
            title: "N table",
            budget: secs(1),
            run: c1,
        },
        Criterion {
            number: 2,
            title: "2^n x A_n = sum C(n,k) N_k N_(n-k)",
            budget: secs(60),
            run: || checks_pass("eq-1-3", 8),
        },
        Criterion {
            number: 3,
            title: "B_n = sum C(n,k) N_k M_(n-k)",
            budget: secs(60),
            run: || checks_pass("eq-1-4", 6),
        },
        Criterion {
            number: 4,
            title: "Phi bijection",
            budget: secs(120),
            run: c4,
        },
        Criterion {
            number: 5,
            title: "Psi bijection",
            budget: secs(60),
            run: c5,
        },
        Criterion {
            number: 6,
            title: "ascent plateaus give N_n",
            budget: secs(60),
            run: || checks_pass("ap-equals-el", 7),
        },
        Criterion {
            number: 7,
            title: "second-kind Stirling permutations",
            budget: secs(600),
            run: c7,
        },
        Criterion {
            number: 8,
            title: "Q_n three routes",
            budget: secs(600),
            run: c8,
        },
        Criterion {
            number: 9,
            title: "P_n routes",
            budget: secs(600),
            run: c9,
        },
        Criterion {
            number: 10,
            title: "grammar lemmas",
            budget: secs(600),
            run: || {
                checks_pass("grammar-lemma1", 6).and_then(|_| checks_pass("grammar-lemma2", 10))
            },
        },
        Criterion {
            number: 11,
            title: "Stirling derangements",
            budget: secs(600),
            run: c11,
        },
        Criterion {
            number: 12,
            title: "R_n symmetric and real-rooted",
            budget: secs(30),
            run: || checks_pass("R-palindromic", 10).and_then(|_| checks_pass("R-real-rooted", 10)),
        },
        Criterion {
            number: 13,
            title: "h sequence",
            budget: secs(120),
            run: c13,
        },
        Criterion {
            number: 14,
            title: "full suite and mutants",
            budget: secs(600),
            run: c14,
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.budget {
            outcome = Err(format!("took {elapsed:.1?}, budget {:?}", c.budget));
        }
        match outcome {
            Ok(()) => println!("PASS {:>2} {} ({elapsed:.2?})", c.number, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {} ({elapsed:.2?}): {why}", c.number, c.title);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 14 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
