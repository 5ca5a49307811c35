//! Worked values checked against the public API, each derived value backed by
//! a brute-force oracle written here independently of the library.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use combi_core::algebra::{poly_reverse, sturm_real_roots};
use combi_core::families::{build_series, PRoute, SeriesId};
use combi_core::grammar::{lemma1_check, lemma2_check, Grammar};
use combi_core::objects::{count_paired_excedance_involutions, generate};
use combi_core::verify::run_check;
use combi_core::{
    CombObject, CycleStirling, Error, ExactPoly, Families, ObjectClass, RatPoly, Status,
    TruncatedSeries, Var,
};

fn px(cs: &[i64]) -> ExactPoly {
    let cs: Vec<BigInt> = cs.iter().map(|&c| c.into()).collect();
    ExactPoly::from_univariate(Var::X, &cs)
}

fn t(c: i64, pairs: &[(Var, i32)]) -> ExactPoly {
    ExactPoly::term(c, pairs)
}

fn tally_x(stats: impl IntoIterator<Item = u32>) -> ExactPoly {
    stats.into_iter().map(|k| t(1, &[(Var::X, k as i32)])).sum()
}

/// All orderings of `items`, duplicates included.
fn orderings(items: &[u32]) -> Vec<Vec<u32>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Stirling permutations of `[n]_2` straight from the definition.
fn stirling_oracle(n: u32) -> BTreeSet<Vec<u32>> {
    let multiset: Vec<u32> = (1..=n).flat_map(|i| [i, i]).collect();
    orderings(&multiset)
        .into_iter()
        .filter(|w| {
            (1..=n).all(|i| {
                let first = w.iter().position(|&v| v == i).unwrap();
                let last = w.iter().rposition(|&v| v == i).unwrap();
                w[first + 1..last].iter().all(|&v| v > i)
            })
        })
        .collect()
}

/// Perfect matchings of `[2n]` by pairing the smallest free point.
fn matchings_oracle(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for j in 1..points.len() {
        let mut rest = points.to_vec();
        let b = rest.remove(j);
        let a = rest.remove(0);
        for mut m in matchings_oracle(&rest) {
            m.push((a, b));
            out.push(m);
        }
    }
    out
}

#[test]
fn n_table_and_reversal() {
    let f = Families::new();
    assert_eq!(f.n_poly(2), px(&[0, 2, 1]));
    assert_eq!(f.n_poly(3), px(&[0, 4, 10, 1]));
    assert_eq!(poly_reverse(&f.n_poly(2), 2).unwrap(), px(&[1, 2]));
    assert_eq!(
        poly_reverse(&ExactPoly::one(), 0).unwrap(),
        ExactPoly::one()
    );
    assert_eq!(poly_reverse(&f.n_poly(3), 3).unwrap(), px(&[1, 10, 4]));
    assert!(matches!(
        poly_reverse(&f.n_poly(3), 2),
        Err(Error::Domain(_))
    ));
    // matchings by even larger entries
    for n in 1..=4u32 {
        let points: Vec<u32> = (1..=2 * n).collect();
        let all = matchings_oracle(&points);
        let el = all
            .iter()
            .map(|m| m.iter().filter(|(_, b)| b % 2 == 0).count() as u32);
        assert_eq!(tally_x(el), f.n_poly(n));
    }
}

#[test]
fn stirling_descents_and_plateaus() {
    let f = Families::new();
    for n in 1..=4u32 {
        let oracle = stirling_oracle(n);
        let generated: BTreeSet<Vec<u32>> = combi_core::StirlingWord::all(n)
            .map(|w| w.word().to_vec())
            .collect();
        assert_eq!(generated, oracle);
        let des = oracle.iter().map(|w| {
            let mut d = 1; // the last index is always a descent
            d += w.windows(2).filter(|p| p[0] > p[1]).count() as u32;
            d
        });
        assert_eq!(tally_x(des), f.c_poly(n));
        let ap = oracle.iter().map(|w| {
            let mut prev = 0;
            let mut count = 0;
            for p in w.windows(2) {
                count += u32::from(prev < p[0] && p[0] == p[1]);
                prev = p[0];
            }
            count
        });
        assert_eq!(tally_x(ap), f.n_poly(n));
    }
    assert_eq!(f.c_poly(2), px(&[0, 1, 2]));
}

#[test]
fn second_kind_listing_and_statistics() {
    let listed = ["(1 1)(2 2)", "(1 1 2 2)", "(1 2 2 1)"];
    let got: BTreeSet<String> = CycleStirling::all(2).map(|s| s.to_string()).collect();
    assert_eq!(got, listed.iter().map(|s| s.to_string()).collect());
    assert_eq!(CycleStirling::all(3).count(), 15);
    let s = match CombObject::parse(ObjectClass::Stirling2, "(1 2 2 1)(3 3)").unwrap() {
        CombObject::Stirling2(s) => s,
        _ => unreachable!(),
    };
    assert_eq!(
        (s.cplat(), s.casc(), s.cap(), s.cyc(), s.fix()),
        (2, 1, 1, 2, 1)
    );
    let q2: ExactPoly = CycleStirling::all(2)
        .map(|s| t(1, &[(Var::X, s.cap() as i32), (Var::Q, s.cyc() as i32)]))
        .sum();
    assert_eq!(q2, Families::new().q_poly(2));
}

#[test]
fn generation_counts() {
    let fact = |n: u64| (1..=n).product::<u64>();
    let dfact = |n: u64| (1..=n).map(|i| 2 * i - 1).product::<u64>();
    for n in 1..=5u32 {
        let nn = n as u64;
        let count = |c: ObjectClass| generate(c, n, None).unwrap().count() as u64;
        assert_eq!(count(ObjectClass::Permutation), fact(nn));
        assert_eq!(count(ObjectClass::Signed), (1 << n) * fact(nn));
        assert_eq!(count(ObjectClass::Matching), dfact(nn));
        assert_eq!(count(ObjectClass::Stirling), dfact(nn));
        assert_eq!(count(ObjectClass::Stirling2), dfact(nn));
        assert_eq!(count(ObjectClass::Decorated), (1 << n) * fact(nn));
        let s: Vec<u32> = (1..=n).map(|i| 2 * i - 1).collect();
        assert_eq!(
            generate(ObjectClass::InvSeq, n, Some(&s)).unwrap().count() as u64,
            dfact(nn)
        );
        for c in ObjectClass::ALL {
            let bounds = (c == ObjectClass::InvSeq).then_some(s.as_slice());
            assert!(generate(c, n, bounds).unwrap().all(|o| o.is_valid()), "{c}");
        }
    }
    assert!(matches!(
        generate(ObjectClass::Permutation, 0, None),
        Err(Error::Range(_))
    ));
    assert!(matches!(
        generate(ObjectClass::InvSeq, 2, None),
        Err(Error::Usage(_))
    ));
}

#[test]
fn permutation_family_statistics() {
    let f = Families::new();
    // derangements of [3] by excedances
    let d3 = generate(ObjectClass::Permutation, 3, None)
        .unwrap()
        .filter_map(|o| match o {
            CombObject::Permutation(p) if p.is_derangement() => Some(p.exc()),
            _ => None,
        });
    assert_eq!(tally_x(d3), px(&[0, 1, 1]));
    assert_eq!(f.d_poly(3).unwrap(), px(&[0, 1, 1]));
    // signed permutations of size 2 by right-to-left minima
    let words: [[i32; 2]; 8] = [
        [1, 2],
        [2, 1],
        [-1, 2],
        [2, -1],
        [1, -2],
        [-2, 1],
        [-1, -2],
        [-2, -1],
    ];
    let rlmin = words.iter().map(|w| {
        (0..2)
            .filter(|&i| (i + 1..2).all(|j| w[i].abs() < w[j].abs()))
            .count() as u32
    });
    assert_eq!(tally_x(rlmin), px(&[0, 4, 4]));
    let signed = generate(ObjectClass::Signed, 2, None)
        .unwrap()
        .map(|o| match o {
            CombObject::Signed(p) => p.rlmin(),
            _ => unreachable!(),
        });
    assert_eq!(tally_x(signed), px(&[0, 4, 4]));
    // decorated permutations of size 2 by ascents
    let asc = generate(ObjectClass::Decorated, 2, None)
        .unwrap()
        .map(|o| match o {
            CombObject::Decorated(w) => w.asc(),
            _ => unreachable!(),
        });
    assert_eq!(tally_x(asc), px(&[0, 4, 4]));
    assert_eq!(f.eulerian_a(3), px(&[1, 4, 1]));
}

#[test]
fn families_initial_values() {
    let f = Families::new();
    let q = |e: i32| t(1, &[(Var::Q, e)]);
    assert_eq!(f.q_poly(1), q(1));
    assert_eq!(
        f.p_poly(1, PRoute::Recurrence).unwrap(),
        t(1, &[(Var::Q, 1), (Var::Y, 1)])
    );
    assert_eq!(f.p_poly(0, PRoute::Convolution).unwrap(), ExactPoly::one());
    assert_eq!(f.r_poly(2), t(2, &[(Var::Q, 1), (Var::X, 1)]));
    assert_eq!(
        f.r_poly(3),
        t(4, &[(Var::Q, 1), (Var::X, 1)]) + t(4, &[(Var::Q, 1), (Var::X, 2)])
    );
    let p3 = f.p_poly(3, PRoute::Recurrence).unwrap();
    assert_eq!(p3.coeff_in(Var::Y, 0), f.r_poly(3));
    assert_eq!(f.qn(4), BigInt::from(60));
    assert_eq!(
        f.r_poly(4)
            .eval_i64(Var::Q, 1)
            .unwrap()
            .eval_i64(Var::X, 1)
            .unwrap(),
        ExactPoly::from_i64(60)
    );
    for (n, h) in [1, 2, 28, 1112, 87568].into_iter().enumerate() {
        assert_eq!(f.h_number(n as u32).unwrap(), BigInt::from(h));
    }
    for (n, h) in [(0, 1), (1, 2), (2, 28)] {
        assert_eq!(count_paired_excedance_involutions(n).unwrap(), h);
    }
    assert!(matches!(
        count_paired_excedance_involutions(5),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn series_coefficients() {
    let rat = |n: i64| BigRational::from_integer(n.into());
    let e = TruncatedSeries::linear(RatPoly::one(), 6).exp().unwrap();
    assert_eq!(e.egf_coefficient(5).unwrap(), RatPoly::constant(rat(1)));
    let c = build_series(SeriesId::StirlingCount, 5).unwrap();
    assert_eq!(c.egf_integer(3).unwrap(), ExactPoly::from_i64(15));
    let qn = build_series(SeriesId::Qn, 4).unwrap();
    assert_eq!(qn.egf_integer(2).unwrap(), ExactPoly::from_i64(2));
    let f = Families::new();
    let n = build_series(SeriesId::N, 10).unwrap();
    for k in 0..=10 {
        assert_eq!(n.egf_integer(k).unwrap(), f.n_poly(k as u32));
    }
    assert!(matches!(e.egf_coefficient(7), Err(Error::Range(_))));
}

#[test]
fn sturm_on_r4() {
    let r4 = Families::new().r_poly(4).eval_i64(Var::Q, 1).unwrap();
    assert_eq!(r4, px(&[0, 8, 44, 8]));
    let rep = sturm_real_roots(&r4.shift(Var::X, -1)).unwrap();
    assert_eq!(
        (rep.degree, rep.distinct_real_roots, rep.is_squarefree),
        (2, 2, true)
    );
    assert!(rep.real_rooted_simple());
    let no_roots = sturm_real_roots(&px(&[1, 0, 1])).unwrap();
    assert_eq!(no_roots.distinct_real_roots, 0);
    assert!(sturm_real_roots(&ExactPoly::zero()).is_err());
}

#[test]
fn grammar_examples() {
    let g = Grammar::stirling_cycles();
    let a = ExactPoly::var(Var::A);
    assert_eq!(
        g.derive(&a, 1).unwrap(),
        t(1, &[(Var::Q, 1), (Var::A, 1), (Var::B, 2)])
    );
    let b2 = t(1, &[(Var::B, 2)]);
    assert_eq!(
        g.derive_once(&b2).unwrap(),
        t(2, &[(Var::C, 2), (Var::D, 2)])
    );
    let c2d2 = t(1, &[(Var::C, 2), (Var::D, 2)]);
    assert_eq!(
        g.derive_once(&c2d2).unwrap(),
        t(2, &[(Var::C, 2), (Var::D, 4)]) + t(2, &[(Var::C, 4), (Var::D, 2)])
    );
    // D(b^-1) = -b^-2 D(b)
    let binv = t(1, &[(Var::B, -1)]);
    assert_eq!(
        g.derive_once(&binv).unwrap(),
        t(-1, &[(Var::B, -3), (Var::C, 2), (Var::D, 2)])
    );
    let lemma1_n2 = t(1, &[(Var::A, 1), (Var::Q, 2), (Var::B, 4)])
        + t(2, &[(Var::A, 1), (Var::Q, 1), (Var::C, 2), (Var::D, 2)]);
    assert_eq!(g.derive(&a, 2).unwrap(), lemma1_n2);
    for n in 1..=5 {
        assert!(lemma1_check(n).unwrap().passed());
    }
    for n in 1..=10 {
        assert!(lemma2_check(n).unwrap().passed());
    }
    assert!(g.derive_once(&ExactPoly::var(Var::X)).is_err());
}

#[test]
fn verify_examples() {
    for (id, n) in [
        ("eq-1-3", 4),
        ("ap-equals-el", 3),
        ("phi-bijection", 2),
        ("psi-bijection", 5),
    ] {
        let r = run_check(id, n).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.line());
    }
    assert!(matches!(run_check("no-such-id", 1), Err(Error::Usage(_))));
    assert_eq!(
        run_check("h-involutions", 5).unwrap().status,
        Status::SkippedCapacity
    );
}
