//! Registry of named identity checks. Each check computes the same object
//! along at least two independent routes (recurrence, enumeration, series,
//! grammar, bijection) and compares them exactly.

mod report;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{poly_reverse, sturm_real_roots, ExactPoly, Monomial, Var};
use crate::bijections::{
    phi_map, psi_map, verify_bijection, MapId, PHI_BASE_CASES, PSI_BASE_CASES,
};
use crate::error::{Error, Result};
use crate::families::{binomial, build_series, tally, xpow, Families, PRoute, SeriesId};
use crate::grammar;
use crate::objects::{
    count_paired_excedance_involutions, CombObject, CycleStirling, DecoratedPermutation,
    InversionSequence, ObjectClass, PerfectMatching, Permutation, SignedPermutation, StirlingWord,
};

pub use report::{Status, VerifyReport};

type CheckFn = fn(&Families, u32) -> Result<VerifyReport>;

/// One registered identity.
#[derive(Clone, Copy)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity in symbols.
    pub statement: &'static str,
    pub routes: &'static [&'static str],
    pub min_n: u32,
    pub default_max_n: u32,
    /// Largest `n` the check accepts; beyond it reports are skipped.
    pub capacity: u32,
    run: CheckFn,
}

impl std::fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("min_n", &self.min_n)
            .field("default_max_n", &self.default_max_n)
            .field("capacity", &self.capacity)
            .finish()
    }
}

fn q() -> ExactPoly {
    ExactPoly::var(Var::Q)
}

fn x() -> ExactPoly {
    ExactPoly::var(Var::X)
}

fn pow2(n: u32) -> BigInt {
    BigInt::one() << n as usize
}

/// Coefficient of `z^n / n!` in a series built at order `n`.
fn egf(id: SeriesId, n: u32) -> Result<ExactPoly> {
    build_series(id, n as usize)?.egf_integer(n as usize)
}

/// `prod_{i<n} (v + c i)`.
fn rising(v: &ExactPoly, c: i64, n: u32) -> ExactPoly {
    (0..n as i64).fold(ExactPoly::one(), |acc, i| {
        &acc * &(v + &ExactPoly::from_i64(c * i))
    })
}

fn at_one(p: &ExactPoly, v: Var) -> ExactPoly {
    p.eval_i64(v, 1).expect("integer evaluation")
}

/// First failing report, else a pass.
fn all_of(id: &str, n: u32, parts: Vec<VerifyReport>) -> VerifyReport {
    parts
        .into_iter()
        .find(|r| !r.passed())
        .map(|mut r| {
            r.id = id.to_string();
            r
        })
        .unwrap_or_else(|| VerifyReport::pass(id, n))
}

fn cmp(id: &str, n: u32, routes: &[(&str, ExactPoly)]) -> VerifyReport {
    VerifyReport::compare(id, n, routes)
}

fn perms(n: u32) -> impl Iterator<Item = Permutation> {
    Permutation::all(n)
}

fn signed_perms(n: u32) -> Box<dyn Iterator<Item = SignedPermutation>> {
    if n == 0 {
        Box::new(std::iter::once(SignedPermutation::new(Vec::new())))
    } else {
        Box::new(SignedPermutation::all(n))
    }
}

fn cycle_stirling(n: u32) -> Box<dyn Iterator<Item = CycleStirling>> {
    if n == 0 {
        Box::new(std::iter::once(CycleStirling::new(Vec::new())))
    } else {
        Box::new(CycleStirling::all(n))
    }
}

/// `2^n x A_n(x)` for `n >= 1` and `1` at `n = 0`, the `z^n / n!`
/// coefficient of `A(x, 2z)`.
fn shifted_a(n: u32, a: ExactPoly) -> ExactPoly {
    if n == 0 {
        ExactPoly::one()
    } else {
        (&x() * &a).scale(&pow2(n))
    }
}

fn n_conv(f: &Families, n: u32, second: impl Fn(u32) -> ExactPoly) -> ExactPoly {
    (0..=n)
        .map(|k| (&f.n_poly(k) * &second(n - k)).scale(&binomial(n, k)))
        .sum()
}

fn a_via_invseq(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "A-via-invseq";
    Ok(cmp(
        id,
        n,
        &[
            ("recurrence", f.eulerian_a(n)),
            (
                "invseq",
                tally(InversionSequence::all((1..=n).collect()), |e| xpow(e.asc())),
            ),
            ("des_A", tally(perms(n), |p| xpow(p.des_a()))),
            ("asc", tally(perms(n), |p| xpow(p.asc()))),
        ],
    ))
}

fn b_via_invseq(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "B-via-invseq",
        n,
        &[
            ("invseq", f.b_poly(n)?),
            ("des_B", tally(signed_perms(n), |p| xpow(p.des_b()))),
        ],
    ))
}

fn m_via_invseq(f: &Families, n: u32) -> Result<VerifyReport> {
    let bounds = (1..=n).map(|i| 2 * i - 1).collect();
    Ok(cmp(
        "M-via-invseq",
        n,
        &[
            ("reverse-N", f.m_poly(n)),
            (
                "invseq",
                tally(InversionSequence::all(bounds), |e| xpow(e.asc())),
            ),
        ],
    ))
}

fn n_el_enum(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "N-el-enum",
        n,
        &[
            ("recurrence", f.n_poly(n)),
            ("el", tally(PerfectMatching::all(n), |m| xpow(m.el()))),
        ],
    ))
}

fn m_ol_enum(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "M-ol-enum",
        n,
        &[
            ("reverse-N", f.m_poly(n)),
            ("ol", tally(PerfectMatching::all(n), |m| xpow(m.ol()))),
        ],
    ))
}

fn m_reverse_n(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "M-reverse-N";
    Ok(all_of(
        id,
        n,
        vec![
            cmp(
                id,
                n,
                &[
                    ("series-M", egf(SeriesId::M, n)?),
                    ("reverse-N", f.m_poly(n)),
                ],
            ),
            cmp(
                id,
                n,
                &[
                    ("series-N", egf(SeriesId::N, n)?),
                    ("recurrence-N", f.n_poly(n)),
                ],
            ),
        ],
    ))
}

fn eq_1_3(f: &Families, n: u32) -> Result<VerifyReport> {
    let enumerated = if n == 0 {
        ExactPoly::one()
    } else {
        tally(perms(n), |p| xpow(p.des_a()))
    };
    Ok(cmp(
        "eq-1-3",
        n,
        &[
            ("2^n x A_n (recurrence)", shifted_a(n, f.eulerian_a(n))),
            ("2^n x A_n (enumeration)", shifted_a(n, enumerated)),
            ("sum C(n,k) N_k N_(n-k)", n_conv(f, n, |j| f.n_poly(j))),
        ],
    ))
}

fn eq_1_4(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "eq-1-4",
        n,
        &[
            ("B_n (invseq)", f.b_poly(n)?),
            ("B_n (signed)", tally(signed_perms(n), |p| xpow(p.des_b()))),
            ("sum C(n,k) N_k M_(n-k)", n_conv(f, n, |j| f.m_poly(j))),
        ],
    ))
}

fn refined(
    id: &str,
    f: &Families,
    n: u32,
    by_k: HashMap<u32, ExactPoly>,
    second: impl Fn(u32) -> ExactPoly,
) -> VerifyReport {
    let parts = (0..=n)
        .map(|k| {
            let lhs = by_k.get(&k).cloned().unwrap_or_else(ExactPoly::zero);
            let rhs = (&f.n_poly(k) * &second(n - k)).scale(&binomial(n, k));
            let mut r = cmp(id, n, &[("enumeration", lhs), ("C(n,k) N_k second", rhs)]);
            if let Some(d) = &mut r.detail {
                *d = format!("k = {k}: {d}");
            }
            r
        })
        .collect();
    all_of(id, n, parts)
}

fn group<T>(
    items: impl Iterator<Item = T>,
    key: impl Fn(&T) -> u32,
    stat: impl Fn(&T) -> u32,
) -> HashMap<u32, ExactPoly> {
    let mut counts: HashMap<u32, HashMap<Monomial, u64>> = HashMap::new();
    for t in items {
        *counts
            .entry(key(&t))
            .or_default()
            .entry(xpow(stat(&t)))
            .or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(k, c)| (k, ExactPoly::from_counts(c)))
        .collect()
}

fn eq_1_3_refined(f: &Families, n: u32) -> Result<VerifyReport> {
    let by_k = group(DecoratedPermutation::all(n), |w| w.hat(), |w| w.asc());
    Ok(refined("eq-1-3-refined-k", f, n, by_k, |j| f.n_poly(j)))
}

fn eq_1_4_refined(f: &Families, n: u32) -> Result<VerifyReport> {
    let by_k = group(SignedPermutation::all(n), |p| p.bar(), |p| p.des_b());
    Ok(refined("eq-1-4-refined-k", f, n, by_k, |j| f.m_poly(j)))
}

fn n2_equals_a2z(f: &Families, n: u32) -> Result<VerifyReport> {
    let order = n as usize;
    let nn = build_series(SeriesId::N, order)?;
    let squared = (&nn * &nn).egf_integer(order)?;
    let a2z = build_series(SeriesId::A, order)?
        .rescale_z(2)
        .egf_integer(order)?;
    Ok(cmp(
        "N2-equals-A2z",
        n,
        &[
            ("N(x,z)^2", squared),
            ("A(x,2z)", a2z),
            ("2^n x A_n (recurrence)", shifted_a(n, f.eulerian_a(n))),
        ],
    ))
}

fn parse_decorated(text: &str) -> Result<DecoratedPermutation> {
    match CombObject::parse(ObjectClass::Decorated, text)? {
        CombObject::Decorated(w) => Ok(w),
        _ => unreachable!("parse returns the requested class"),
    }
}

fn parse_signed(text: &str) -> Result<SignedPermutation> {
    match CombObject::parse(ObjectClass::Signed, text)? {
        CombObject::Signed(p) => Ok(p),
        _ => unreachable!("parse returns the requested class"),
    }
}

fn bijection_check(id: &str, map: MapId, n: u32) -> Result<VerifyReport> {
    let r = verify_bijection(map, n)?;
    if !r.passed() {
        let (obj, img) = r.counterexample.unwrap_or_default();
        let detail = format!(
            "injective {}, image complete {}, weight preserving {}",
            r.injective, r.image_complete, r.weight_preserving
        );
        return Ok(VerifyReport::fail(id, n, obj, img, detail));
    }
    if n <= 2 {
        let table = match map {
            MapId::Phi => PHI_BASE_CASES,
            MapId::Psi => PSI_BASE_CASES,
        };
        for (input, expected) in table {
            let image = match map {
                MapId::Phi => phi_map(&parse_decorated(input)?)?,
                MapId::Psi => psi_map(&parse_signed(input)?)?,
            };
            if image.n == n && image.to_string() != expected {
                return Ok(VerifyReport::fail(
                    id,
                    n,
                    image.to_string(),
                    expected.to_string(),
                    format!("base case {input}"),
                ));
            }
        }
    }
    Ok(VerifyReport::pass(id, n))
}

fn phi_bijection(_: &Families, n: u32) -> Result<VerifyReport> {
    bijection_check("phi-bijection", MapId::Phi, n)
}

fn psi_bijection(_: &Families, n: u32) -> Result<VerifyReport> {
    bijection_check("psi-bijection", MapId::Psi, n)
}

fn c_descents(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "C-descents",
        n,
        &[
            ("recurrence", f.c_poly(n)),
            (
                "descents",
                tally(StirlingWord::all(n), |s| xpow(s.descents())),
            ),
        ],
    ))
}

fn ap_equals_el(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "ap-equals-el",
        n,
        &[
            ("ap", tally(StirlingWord::all(n), |s| xpow(s.ap()))),
            ("el", tally(PerfectMatching::all(n), |m| xpow(m.el()))),
            ("N recurrence", f.n_poly(n)),
        ],
    ))
}

fn cplat_casc_c(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "cplat-casc-C",
        n,
        &[
            ("cplat", tally(CycleStirling::all(n), |s| xpow(s.cplat()))),
            (
                "casc + 1",
                tally(CycleStirling::all(n), |s| xpow(s.casc() + 1)),
            ),
            ("C recurrence", f.c_poly(n)),
        ],
    ))
}

fn cap_cyc(s: &CycleStirling) -> Monomial {
    Monomial::from_pairs(&[(Var::X, s.cap() as i32), (Var::Q, s.cyc() as i32)])
}

fn q_recurrence_enum(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "Q-recurrence-enum",
        n,
        &[
            ("recurrence", f.q_poly(n)),
            ("enumeration", tally(cycle_stirling(n), cap_cyc)),
        ],
    ))
}

fn q_gf(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "Q-gf";
    let qn = f.q_poly(n);
    Ok(all_of(
        id,
        n,
        vec![
            cmp(
                id,
                n,
                &[
                    ("series M^q", egf(SeriesId::Q, n)?),
                    ("recurrence", qn.clone()),
                ],
            ),
            cmp(
                id,
                n,
                &[("Q_n(x,1)", at_one(&qn, Var::Q)), ("M_n", f.m_poly(n))],
            ),
            cmp(
                id,
                n,
                &[
                    ("Q_n(1,q)", at_one(&qn, Var::X)),
                    ("q(q+2)...(q+2n-2)", rising(&q(), 2, n)),
                ],
            ),
        ],
    ))
}

fn cyc_closed_form(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "cyc-closed-form",
        n,
        &[
            (
                "cyc",
                tally(CycleStirling::all(n), |s| {
                    Monomial::var(Var::Q, s.cyc() as i32)
                }),
            ),
            ("q(q+2)...(q+2n-2)", rising(&q(), 2, n)),
            ("Q_n(1,q)", at_one(&f.q_poly(n), Var::X)),
        ],
    ))
}

fn desi_equals_cyc(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "desi-equals-cyc",
        n,
        &[
            (
                "desi",
                tally(StirlingWord::all(n), |s| {
                    Monomial::var(Var::Q, s.desi() as i32)
                }),
            ),
            (
                "cyc",
                tally(CycleStirling::all(n), |s| {
                    Monomial::var(Var::Q, s.cyc() as i32)
                }),
            ),
            ("L recurrence", f.l_poly(n)),
        ],
    ))
}

fn y_cyclic(f: &Families, n: u32) -> Result<VerifyReport> {
    let one_cycle = CycleStirling::all(n).filter(|s| s.cyc() == 1);
    Ok(cmp(
        "Y-cyclic",
        n,
        &[
            ("one-cycle cap", tally(one_cycle, |s| xpow(s.cap()))),
            ("[q] Q_n", f.y_poly(n)),
            (
                "2^(n-1) x A_(n-1)",
                (&x() * &f.eulerian_a(n - 1)).scale(&pow2(n - 1)),
            ),
        ],
    ))
}

fn p_three_routes(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "P-three-routes";
    let mut routes = vec![
        ("recurrence", f.p_poly(n, PRoute::Recurrence)?),
        ("convolution", f.p_poly(n, PRoute::Convolution)?),
        ("triangle S_n(i,j,k)", f.p_poly(n, PRoute::Triangle)?),
        ("series", f.p_poly(n, PRoute::Series)?),
    ];
    if n <= 7 {
        routes.push(("enumeration", f.p_poly(n, PRoute::Enumeration)?));
    }
    if n == 0 {
        routes.push(("P_0 = 1", ExactPoly::one()));
    } else if n == 1 {
        routes.push(("P_1 = qy", ExactPoly::term(1, &[(Var::Q, 1), (Var::Y, 1)])));
    }
    Ok(cmp(id, n, &routes))
}

fn p_gf(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "P-gf";
    let p = f.p_poly(n, PRoute::Recurrence)?;
    Ok(all_of(
        id,
        n,
        vec![
            cmp(
                id,
                n,
                &[
                    ("e^{q(y-1)z} Q", egf(SeriesId::P, n)?),
                    ("recurrence", p.clone()),
                ],
            ),
            cmp(
                id,
                n,
                &[("P_n(x,1,q)", at_one(&p, Var::Y)), ("Q_n", f.q_poly(n))],
            ),
        ],
    ))
}

fn grammar_lemma1(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "grammar-lemma1";
    let base = grammar::lemma1_check(n)?;
    let derived = grammar::Grammar::stirling_cycles().derive(&ExactPoly::var(Var::A), n)?;
    let substituted = grammar::substitute_xyq(&derived)?;
    Ok(all_of(
        id,
        n,
        vec![
            base,
            cmp(
                id,
                n,
                &[
                    ("D^n(a)/a at c^2=x, b^2=y, d=1", substituted),
                    ("P recurrence", f.p_poly(n, PRoute::Recurrence)?),
                ],
            ),
        ],
    ))
}

fn grammar_lemma2(f: &Families, n: u32) -> Result<VerifyReport> {
    grammar::lemma2_with(f, n)
}

fn derangement_weight(s: &CycleStirling) -> Monomial {
    cap_cyc(s)
}

fn r_recurrence_enum(f: &Families, n: u32) -> Result<VerifyReport> {
    let derangements = cycle_stirling(n).filter(|s| s.fix() == 0);
    Ok(cmp(
        "R-recurrence-enum",
        n,
        &[
            ("recurrence", f.r_poly(n)),
            ("enumeration", tally(derangements, derangement_weight)),
        ],
    ))
}

fn r_binomial_shift(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "R-binomial-shift";
    let p = f.p_poly(n, PRoute::Recurrence)?;
    let by_fix = (n <= 7).then(|| {
        let mut m: HashMap<i32, HashMap<Monomial, u64>> = HashMap::new();
        for s in cycle_stirling(n) {
            *m.entry(s.fix() as i32)
                .or_default()
                .entry(cap_cyc(&s))
                .or_default() += 1;
        }
        m
    });
    let mut parts = Vec::new();
    for k in 0..=n {
        let mut routes = vec![
            ("[y^k] P_n", p.coeff_in(Var::Y, k as i32)),
            ("C(n,k) q^k R_(n-k)", f.r_nk(n, k)),
        ];
        if let Some(m) = &by_fix {
            let counts = m.get(&(k as i32)).cloned().unwrap_or_default();
            routes.push(("fix = k enumeration", ExactPoly::from_counts(counts)));
        }
        let mut r = cmp(id, n, &routes);
        if let Some(d) = &mut r.detail {
            *d = format!("k = {k}: {d}");
        }
        parts.push(r);
    }
    Ok(all_of(id, n, parts))
}

fn qn_egf(f: &Families, n: u32) -> Result<VerifyReport> {
    let mut routes = vec![
        ("recurrence", ExactPoly::constant(f.qn(n))),
        ("e^{-z}/sqrt(1-2z)", egf(SeriesId::Qn, n)?),
        ("R_n(1,1)", at_one(&at_one(&f.r_poly(n), Var::X), Var::Q)),
    ];
    if n <= 7 {
        let count = cycle_stirling(n).filter(|s| s.fix() == 0).count();
        routes.push((
            "derangement count",
            ExactPoly::constant(BigInt::from(count)),
        ));
    }
    Ok(cmp("qn-egf", n, &routes))
}

fn s2_equals_d2z(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "S2-equals-d2z";
    let order = n as usize;
    let s = build_series(SeriesId::S, order)?;
    let r1 = |k: u32| at_one(&f.r_poly(k), Var::Q);
    let conv: ExactPoly = (0..=n)
        .map(|k| (&r1(k) * &r1(n - k)).scale(&binomial(n, k)))
        .sum();
    let mut routes = vec![
        ("S(x,z)^2", (&s * &s).egf_integer(order)?),
        (
            "d(x,2z)",
            build_series(SeriesId::D, order)?
                .rescale_z(2)
                .egf_integer(order)?,
        ),
        ("sum C(n,k) R_k R_(n-k)", conv),
    ];
    if n <= 8 {
        let d = tally(perms(n).filter(|p| p.is_derangement()), |p| xpow(p.exc()));
        routes.push(("2^n d_n (derangements)", d.scale(&pow2(n))));
    }
    Ok(all_of(
        id,
        n,
        vec![
            cmp(id, n, &routes),
            cmp(
                id,
                n,
                &[("S(x,z)", s.egf_integer(order)?), ("R_n(x,1)", r1(n))],
            ),
        ],
    ))
}

fn r_palindromic(f: &Families, n: u32) -> Result<VerifyReport> {
    let r = at_one(&f.r_poly(n), Var::Q);
    Ok(cmp(
        "R-palindromic",
        n,
        &[("x^n R_n(1/x)", poly_reverse(&r, n)?), ("R_n(x)", r)],
    ))
}

fn r_real_rooted(f: &Families, n: u32) -> Result<VerifyReport> {
    let id = "R-real-rooted";
    let r = at_one(&f.r_poly(n), Var::Q);
    if r.min_degree_in(Var::X) != Some(1) {
        return Ok(VerifyReport::fail(
            id,
            n,
            r.to_string(),
            "x * (...)".into(),
            "R_n(x) lacks a simple factor x",
        ));
    }
    let reduced = r.shift(Var::X, -1);
    let report = sturm_real_roots(&reduced)?;
    let shown = |deg: u32, roots: u32, sf: bool| {
        format!("degree {deg}, real roots {roots}, squarefree {sf}")
    };
    let target = n.saturating_sub(2);
    Ok(VerifyReport::compare(
        id,
        n,
        &[
            (
                "Sturm",
                shown(
                    report.degree as u32,
                    report.distinct_real_roots as u32,
                    report.is_squarefree,
                ),
            ),
            ("expected", shown(target, target, true)),
        ],
    ))
}

fn h_series_vs_enum(f: &Families, n: u32) -> Result<VerifyReport> {
    let signed: BigInt = cycle_stirling(n)
        .filter(|s| s.fix() == 0)
        .map(|s| {
            if s.cap() % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        })
        .sum();
    let expected = if n % 2 == 1 {
        BigInt::zero()
    } else {
        let h = f.h_number(n / 2)?;
        if (n / 2).is_multiple_of(2) {
            h
        } else {
            -h
        }
    };
    Ok(VerifyReport::compare(
        "h-series-vs-enum",
        n,
        &[
            ("sum (-1)^cap over derangements", signed),
            ("series", expected),
        ],
    ))
}

fn h_involutions(f: &Families, n: u32) -> Result<VerifyReport> {
    Ok(VerifyReport::compare(
        "h-involutions",
        n,
        &[
            (
                "involutions",
                BigInt::from(count_paired_excedance_involutions(n)?),
            ),
            ("series", f.h_number(n)?),
        ],
    ))
}

fn rlmin_closed_form(_: &Families, n: u32) -> Result<VerifyReport> {
    Ok(cmp(
        "rlmin-closed-form",
        n,
        &[
            ("rlmin", tally(signed_perms(n), |p| xpow(p.rlmin()))),
            ("2^n x(x+1)...(x+n-1)", rising(&x(), 1, n).scale(&pow2(n))),
        ],
    ))
}

fn fiber_2n(_: &Families, n: u32) -> Result<VerifyReport> {
    let mut fibers: HashMap<Vec<u32>, u64> = HashMap::new();
    for w in DecoratedPermutation::all(n) {
        *fibers.entry(w.underlying().word().to_vec()).or_default() += 1;
    }
    let sizes: std::collections::BTreeMap<u64, usize> =
        fibers.values().fold(BTreeMap::new(), |mut acc, &s| {
            *acc.entry(s).or_default() += 1;
            acc
        });
    let shown = |m: &BTreeMap<u64, usize>| {
        m.iter()
            .map(|(s, c)| format!("{c} fibers of size {s}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let n_fact: usize = (1..=n as usize).product();
    let expected = BTreeMap::from([(1u64 << n, n_fact)]);
    Ok(VerifyReport::compare(
        "fiber-2n",
        n,
        &[("decorated", shown(&sizes)), ("2^n each", shown(&expected))],
    ))
}

macro_rules! check {
    ($id:expr, $desc:expr, $stmt:expr, [$($r:expr),+], $min:expr, $max:expr, $cap:expr, $f:expr) => {
        IdentityCheck {
            id: $id,
            description: $desc,
            statement: $stmt,
            routes: &[$($r),+],
            min_n: $min,
            default_max_n: $max,
            capacity: $cap,
            run: $f,
        }
    };
}

static REGISTRY: &[IdentityCheck] = &[
    check!("A-via-invseq", "Eulerian polynomial from its recurrence, (1..n)-inversion sequences, descents and ascents",
        "A_n(x) = E_n^(1,2,...,n)(x) = sum x^des_A = sum x^asc",
        ["recurrence", "invseq", "des_A", "asc"], 1, 7, 8, a_via_invseq),
    check!("B-via-invseq", "Type B Eulerian polynomial from (2,4,...,2n)-inversion sequences and signed permutations",
        "B_n(x) = E_n^(2,4,...,2n)(x) = sum x^des_B",
        ["invseq", "des_B"], 1, 6, 7, b_via_invseq),
    check!("M-via-invseq", "M_n from reversed N_n and (1,3,...,2n-1)-inversion sequences",
        "M_n(x) = x^n N_n(1/x) = E_n^(1,3,...,2n-1)(x)",
        ["reverse-N", "invseq"], 1, 7, 8, m_via_invseq),
    check!("N-el-enum", "N_n counts matchings by even larger entries",
        "N_n(x) = sum_{M in M_2n} x^el(M)", ["recurrence", "el"], 1, 7, 8, n_el_enum),
    check!("M-ol-enum", "M_n counts matchings by odd larger entries",
        "M_n(x) = sum_{M in M_2n} x^ol(M)", ["reverse-N", "ol"], 1, 7, 8, m_ol_enum),
    check!("M-reverse-N", "closed-form EGFs of M and N against the recurrence",
        "M(x,z), N(x,z) coefficients = M_n, N_n",
        ["series", "recurrence"], 0, 10, 16, m_reverse_n),
    check!("eq-1-3", "convolution of N with itself gives 2^n x A_n",
        "2^n x A_n(x) = sum_k C(n,k) N_k(x) N_(n-k)(x)",
        ["recurrence", "enumeration", "convolution"], 0, 8, 8, eq_1_3),
    check!("eq-1-4", "convolution of N with M gives B_n",
        "B_n(x) = sum_k C(n,k) N_k(x) M_(n-k)(x)",
        ["invseq", "signed", "convolution"], 0, 6, 7, eq_1_4),
    check!("eq-1-3-refined-k", "ascents of decorated permutations with k hats",
        "sum_{w in P_(n,k)} x^asc(w) = C(n,k) N_k(x) N_(n-k)(x)",
        ["enumeration", "convolution term"], 1, 6, 7, eq_1_3_refined),
    check!("eq-1-4-refined-k", "type B descents of signed permutations with bar = k",
        "sum_{pi in B_(n,k)} x^des_B(pi) = C(n,k) N_k(x) M_(n-k)(x)",
        ["enumeration", "convolution term"], 1, 6, 7, eq_1_4_refined),
    check!("N2-equals-A2z", "square of the N generating function",
        "N(x,z)^2 = A(x,2z)", ["series", "recurrence"], 0, 8, 16, n2_equals_a2z),
    check!("phi-bijection", "exhaustive certification of the decorated-permutation bijection",
        "Phi: P_(n,k) -> PM_(n,k), asc(w) = el(S_1) + el(S_2)",
        ["bijection", "cardinality"], 1, 7, 7, phi_bijection),
    check!("psi-bijection", "exhaustive certification of the signed-permutation bijection",
        "Psi: B_(n,k) -> BM_(n,k), des_B(pi) = el(T_1) + ol(T_2)",
        ["bijection", "cardinality"], 1, 6, 7, psi_bijection),
    check!("C-descents", "second-order Eulerian triangle counts Stirling permutation descents",
        "C_n(x) = sum_{sigma in Q_n} x^des(sigma)", ["recurrence", "descents"], 1, 7, 8, c_descents),
    check!("ap-equals-el", "ascent plateaus of Stirling permutations match even larger entries",
        "sum_{Q_n} x^ap = sum_{M_2n} x^el = N_n(x)", ["ap", "el", "recurrence"], 1, 7, 8, ap_equals_el),
    check!("cplat-casc-C", "cycle plateaus and cycle ascents of second-kind Stirling permutations",
        "sum x^cplat = sum x^(casc+1) = C_n(x)", ["cplat", "casc", "recurrence"], 1, 7, 8, cplat_casc_c),
    check!("Q-recurrence-enum", "Q_n(x,q) by recurrence and by cap/cyc enumeration",
        "Q_n(x,q) = sum x^cap q^cyc", ["recurrence", "enumeration"], 0, 7, 8, q_recurrence_enum),
    check!("Q-gf", "EGF of Q as a symbolic power of M, and its specializations",
        "Q(x,q;z) = M(x,z)^q, Q_n(x,1) = M_n(x), Q_n(1,q) = q(q+2)...(q+2n-2)",
        ["series", "recurrence", "closed form"], 0, 8, 16, q_gf),
    check!("cyc-closed-form", "cycle count distribution of second-kind Stirling permutations",
        "sum q^cyc = q(q+2)...(q+2n-2)", ["enumeration", "closed form", "recurrence"], 1, 7, 8, cyc_closed_form),
    check!("desi-equals-cyc", "descent intervals match cycles",
        "sum_{Q_n} q^desi = sum_{Q_n^2} q^cyc = L_n(q)", ["desi", "cyc", "recurrence"], 1, 7, 8, desi_equals_cyc),
    check!("Y-cyclic", "one-cycle second-kind Stirling permutations by cycle ascent plateaus",
        "Y_n(x) = [q] Q_n(x,q) = 2^(n-1) x A_(n-1)(x)",
        ["enumeration", "recurrence", "closed form"], 2, 7, 8, y_cyclic),
    check!("P-three-routes", "P_n(x,y,q) by recurrence, convolution, triangle, series and enumeration",
        "P_(n+1) = (2nx+qy)P_n + 2x(1-x)P_x + 2x(1-y)P_y = qyP_n + qx sum C(n,k) P_k 2^(n-k) A_(n-k)",
        ["recurrence", "convolution", "triangle", "series", "enumeration"], 0, 7, 8, p_three_routes),
    check!("P-gf", "EGF of P and its y = 1 specialization",
        "P(x,y,q;z) = e^(qz(y-1)) Q(x,q;z)", ["series", "recurrence"], 0, 8, 16, p_gf),
    check!("grammar-lemma1", "grammar derivatives of a enumerate second-kind Stirling permutations",
        "D^n(a) = a sum q^cyc b^(2fix) c^(2cap) d^(2n-2fix-2cap)",
        ["grammar", "enumeration", "recurrence"], 1, 6, 8, grammar_lemma1),
    check!("grammar-lemma2", "grammar derivatives of b^2 give Eulerian numbers",
        "D^n(b^2) = 2^n sum_k <n,k> c^(2k+2) d^(2n-2k)", ["grammar", "triangle"], 1, 10, 12, grammar_lemma2),
    check!("R-recurrence-enum", "Stirling derangement polynomial by recurrence and enumeration",
        "R_n(x,q) = sum_{fix = 0} x^cap q^cyc", ["recurrence", "enumeration"], 0, 7, 8, r_recurrence_enum),
    check!("R-binomial-shift", "fixed-point refinement of P_n",
        "[y^k] P_n = R_(n,k) = C(n,k) q^k R_(n-k)(x,q)",
        ["recurrence", "binomial shift", "enumeration"], 0, 8, 10, r_binomial_shift),
    check!("qn-egf", "number of Stirling derangements",
        "q_(n+1) = 2n(q_n + q_(n-1)), sum q_n z^n/n! = e^(-z)/sqrt(1-2z)",
        ["recurrence", "series", "R_n(1,1)", "enumeration"], 0, 12, 16, qn_egf),
    check!("S2-equals-d2z", "square of the Stirling derangement EGF",
        "S(x,z)^2 = d(x,2z), 2^n d_n(x) = sum C(n,k) R_k(x) R_(n-k)(x)",
        ["series", "convolution", "enumeration"], 0, 8, 16, s2_equals_d2z),
    check!("R-palindromic", "symmetry of R_n(x) at q = 1",
        "x^n R_n(1/x) = R_n(x)", ["reverse", "recurrence"], 2, 10, 14, r_palindromic),
    check!("R-real-rooted", "R_n(x)/x has only simple real zeros",
        "Sturm count of R_n(x)/x = n - 2, squarefree", ["Sturm", "degree"], 2, 10, 14, r_real_rooted),
    check!("h-series-vs-enum", "signed cap count over Stirling derangements",
        "sum_{DQ_n} (-1)^cap = 0 (n odd), (-1)^k h_k (n = 2k)",
        ["enumeration", "series"], 1, 7, 8, h_series_vs_enum),
    check!("h-involutions", "paired-excedance involutions counted by h_n",
        "#{fixed-point-free involutions of [4n], paired excedances} = h_n",
        ["enumeration", "series"], 0, 4, 4, h_involutions),
    check!("rlmin-closed-form", "right-to-left minima over signed permutations",
        "sum_{B_n} x^rlmin = 2^n x(x+1)...(x+n-1)", ["enumeration", "closed form"], 1, 6, 7, rlmin_closed_form),
    check!("fiber-2n", "every permutation has 2^n decorations",
        "|P_n(pi)| = 2^n", ["enumeration", "closed form"], 1, 5, 7, fiber_2n),
];

/// Every registered check, in report order.
pub fn registry() -> &'static [IdentityCheck] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityCheck> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::Usage(format!("unknown check id `{id}`")))
}

impl IdentityCheck {
    /// Runs at one `n`. Sizes beyond the capacity give a skipped report.
    pub fn run_with(&self, families: &Families, n: u32) -> Result<VerifyReport> {
        if n < self.min_n {
            return Err(Error::Range(format!(
                "{} starts at n = {}, got {n}",
                self.id, self.min_n
            )));
        }
        if n > self.capacity {
            return Ok(VerifyReport::skipped(
                self.id,
                n,
                format!("capacity is n <= {}", self.capacity),
            ));
        }
        let start = Instant::now();
        let mut report = match (self.run)(families, n) {
            Ok(r) => r,
            Err(Error::Capacity {
                what,
                limit,
                requested,
            }) => VerifyReport::skipped(
                self.id,
                n,
                format!("{what} supports n <= {limit}, requested {requested}"),
            ),
            Err(e) => return Err(e),
        };
        report.id = self.id.to_string();
        report.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(report)
    }
}

/// Runs check `id` at `n` with the unmutated families.
pub fn run_check(id: &str, n: u32) -> Result<VerifyReport> {
    find(id)?.run_with(&Families::new(), n)
}

/// Runs `id` for every `n` from its minimum to `max_n` (default when absent).
pub fn run_range(id: &str, max_n: Option<u32>) -> Result<Vec<VerifyReport>> {
    let check = find(id)?;
    let top = max_n.unwrap_or(check.default_max_n);
    let families = Families::new();
    (check.min_n..=top)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| check.run_with(&families, n))
        .collect()
}

/// Runs every check at every `n` up to its default (or overridden) maximum.
pub fn run_all(overrides: &BTreeMap<String, u32>) -> Result<Vec<VerifyReport>> {
    run_all_with(&Families::new(), overrides)
}

pub fn run_all_with(
    families: &Families,
    overrides: &BTreeMap<String, u32>,
) -> Result<Vec<VerifyReport>> {
    for id in overrides.keys() {
        find(id)?;
    }
    let jobs: Vec<(&IdentityCheck, u32)> = REGISTRY
        .iter()
        .flat_map(|c| {
            let top = overrides.get(c.id).copied().unwrap_or(c.default_max_n);
            (c.min_n..=top).map(move |n| (c, n))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(c, n)| c.run_with(families, n))
        .collect()
}
