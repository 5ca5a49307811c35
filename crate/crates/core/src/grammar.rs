//! Formal derivatives with respect to context-free grammars over Laurent
//! monomials.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{ExactPoly, Monomial, Var};
use crate::error::{capacity, Error, Result};
use crate::families::Families;
use crate::objects::CycleStirling;
use crate::verify::VerifyReport;

/// Largest `n` for the enumeration side of [`lemma1_check`].
pub const LEMMA1_MAX_N: u32 = 8;
/// Largest `n` for [`lemma2_check`].
pub const LEMMA2_MAX_N: u32 = 12;

/// Substitution rules `letter -> polynomial` plus letters whose derivative
/// is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Var, ExactPoly>,
    constants: BTreeSet<Var>,
}

impl Grammar {
    pub fn new(rules: BTreeMap<Var, ExactPoly>, constants: BTreeSet<Var>) -> Result<Self> {
        let g = Self { rules, constants };
        for rhs in g.rules.values() {
            g.check_letters(rhs)?;
        }
        Ok(g)
    }

    /// `a -> q a b^2, b -> b^-1 c^2 d^2, c -> c d^2, d -> c^2 d`, with `q`
    /// constant.
    pub fn stirling_cycles() -> Self {
        let mut rules = Self::eulerian().rules;
        rules.insert(
            Var::A,
            ExactPoly::term(1, &[(Var::Q, 1), (Var::A, 1), (Var::B, 2)]),
        );
        Self::new(rules, BTreeSet::from([Var::Q])).expect("built-in grammar is closed")
    }

    /// `b -> b^-1 c^2 d^2, c -> c d^2, d -> c^2 d`.
    pub fn eulerian() -> Self {
        let rules = BTreeMap::from([
            (
                Var::B,
                ExactPoly::term(1, &[(Var::B, -1), (Var::C, 2), (Var::D, 2)]),
            ),
            (Var::C, ExactPoly::term(1, &[(Var::C, 1), (Var::D, 2)])),
            (Var::D, ExactPoly::term(1, &[(Var::C, 2), (Var::D, 1)])),
        ]);
        Self::new(rules, BTreeSet::new()).expect("built-in grammar is closed")
    }

    pub fn rules(&self) -> &BTreeMap<Var, ExactPoly> {
        &self.rules
    }

    pub fn constants(&self) -> &BTreeSet<Var> {
        &self.constants
    }

    fn check_letters(&self, p: &ExactPoly) -> Result<()> {
        match p
            .vars()
            .into_iter()
            .find(|v| !self.rules.contains_key(v) && !self.constants.contains(v))
        {
            Some(v) => Err(Error::Domain(format!("letter {v} is not in the grammar"))),
            None => Ok(()),
        }
    }

    /// One application of the derivation: `D(u) = sum_v (du/dv) G(v)`.
    pub fn derive_once(&self, expr: &ExactPoly) -> Result<ExactPoly> {
        self.check_letters(expr)?;
        Ok(self
            .rules
            .iter()
            .map(|(&v, rhs)| &expr.derivative(v) * rhs)
            .sum())
    }

    /// `D^n(expr)`.
    pub fn derive(&self, expr: &ExactPoly, n: u32) -> Result<ExactPoly> {
        let mut cur = expr.clone();
        for _ in 0..n {
            cur = self.derive_once(&cur)?;
        }
        Ok(cur)
    }
}

/// `a * sum over second-kind Stirling permutations of
/// q^cyc b^(2 fix) c^(2 cap) d^(2n - 2 fix - 2 cap)`.
pub fn lemma1_enumeration(n: u32) -> Result<ExactPoly> {
    if n > LEMMA1_MAX_N {
        return Err(capacity(
            "second-kind enumeration n",
            LEMMA1_MAX_N as u64,
            n as u64,
        ));
    }
    let counts = crate::families::tally(CycleStirling::all(n), |s| {
        let (cyc, fix, cap) = (s.cyc() as i32, s.fix() as i32, s.cap() as i32);
        Monomial::from_pairs(&[
            (Var::A, 1),
            (Var::Q, cyc),
            (Var::B, 2 * fix),
            (Var::C, 2 * cap),
            (Var::D, 2 * n as i32 - 2 * fix - 2 * cap),
        ])
    });
    Ok(counts)
}

/// Maps `a^1 b^(2j) c^(2k) d^e q^i` to `y^j x^k q^i`, i.e. divides by `a`
/// and sets `c^2 = x`, `b^2 = y`, `d = 1`.
pub fn substitute_xyq(p: &ExactPoly) -> Result<ExactPoly> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let (a, b, cc) = (m.exp(Var::A), m.exp(Var::B), m.exp(Var::C));
        if a != 1 || b % 2 != 0 || cc % 2 != 0 || m.exp(Var::X) != 0 || m.exp(Var::Y) != 0 {
            return Err(Error::Domain(format!(
                "monomial {m} is not of the form a b^2j c^2k"
            )));
        }
        let mono =
            Monomial::from_pairs(&[(Var::X, cc / 2), (Var::Y, b / 2), (Var::Q, m.exp(Var::Q))]);
        terms.push((mono, c.clone()));
    }
    Ok(ExactPoly::from_terms(terms))
}

/// `D^n(a)` against the enumeration polynomial.
pub fn lemma1_check(n: u32) -> Result<VerifyReport> {
    let g = Grammar::stirling_cycles();
    let derived = g.derive(&ExactPoly::var(Var::A), n)?;
    let counted = lemma1_enumeration(n)?;
    Ok(VerifyReport::compare(
        "grammar-lemma1",
        n,
        &[("derivative", derived), ("enumeration", counted)],
    ))
}

/// `2^n sum_k <n,k> c^(2k+2) d^(2n-2k)` from an Eulerian triangle row.
pub fn lemma2_closed_form(families: &Families, n: u32) -> ExactPoly {
    let row = families.eulerian_row(n);
    let scale = num_bigint::BigInt::from(1u8) << n as usize;
    row.iter()
        .enumerate()
        .map(|(k, c)| {
            let k = k as i32;
            let mono = Monomial::from_pairs(&[(Var::C, 2 * k + 2), (Var::D, 2 * n as i32 - 2 * k)]);
            ExactPoly::monomial(mono, c * &scale)
        })
        .sum()
}

pub(crate) fn lemma2_with(families: &Families, n: u32) -> Result<VerifyReport> {
    if n > LEMMA2_MAX_N {
        return Err(capacity("grammar-lemma2 n", LEMMA2_MAX_N as u64, n as u64));
    }
    let b2 = ExactPoly::term(1, &[(Var::B, 2)]);
    let derived = Grammar::eulerian().derive(&b2, n)?;
    Ok(VerifyReport::compare(
        "grammar-lemma2",
        n,
        &[
            ("derivative", derived),
            ("eulerian-numbers", lemma2_closed_form(families, n)),
        ],
    ))
}

/// `D^n(b^2)` against the Eulerian closed form, for `n >= 1`.
pub fn lemma2_check(n: u32) -> Result<VerifyReport> {
    lemma2_with(&Families::new(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: i64, pairs: &[(Var, i32)]) -> ExactPoly {
        ExactPoly::term(c, pairs)
    }

    #[test]
    fn single_steps() {
        let g = Grammar::stirling_cycles();
        assert_eq!(
            g.derive(&ExactPoly::var(Var::A), 1).unwrap(),
            t(1, &[(Var::Q, 1), (Var::A, 1), (Var::B, 2)])
        );
        assert_eq!(
            g.derive_once(&t(1, &[(Var::B, 2)])).unwrap(),
            t(2, &[(Var::C, 2), (Var::D, 2)])
        );
        assert_eq!(
            g.derive_once(&t(1, &[(Var::C, 2), (Var::D, 2)])).unwrap(),
            &t(2, &[(Var::C, 2), (Var::D, 4)]) + &t(2, &[(Var::C, 4), (Var::D, 2)])
        );
        // D(b^-1) = -b^-2 D(b)
        assert_eq!(
            g.derive_once(&t(1, &[(Var::B, -1)])).unwrap(),
            t(-1, &[(Var::B, -3), (Var::C, 2), (Var::D, 2)])
        );
        assert_eq!(
            g.derive_once(&ExactPoly::var(Var::Q)).unwrap(),
            ExactPoly::zero()
        );
    }

    #[test]
    fn unknown_letters() {
        let g = Grammar::eulerian();
        assert!(matches!(
            g.derive_once(&ExactPoly::var(Var::A)),
            Err(Error::Domain(_))
        ));
        let bad = BTreeMap::from([(Var::B, ExactPoly::var(Var::X))]);
        assert!(Grammar::new(bad, BTreeSet::new()).is_err());
    }

    #[test]
    fn lemma_one_small() {
        let a = ExactPoly::var(Var::A);
        let n2 = &t(1, &[(Var::A, 1), (Var::Q, 2), (Var::B, 4)])
            + &t(2, &[(Var::A, 1), (Var::Q, 1), (Var::C, 2), (Var::D, 2)]);
        assert_eq!(Grammar::stirling_cycles().derive(&a, 2).unwrap(), n2);
        for n in 1..=5 {
            assert!(lemma1_check(n).unwrap().passed(), "n={n}");
        }
        assert!(lemma1_check(LEMMA1_MAX_N + 1).is_err());
    }

    #[test]
    fn lemma_two_small() {
        let n2 = &t(4, &[(Var::C, 2), (Var::D, 4)]) + &t(4, &[(Var::C, 4), (Var::D, 2)]);
        assert_eq!(lemma2_closed_form(&Families::new(), 2), n2);
        for n in 1..=8 {
            assert!(lemma2_check(n).unwrap().passed(), "n={n}");
        }
    }

    #[test]
    fn substitution() {
        let p = &t(1, &[(Var::A, 1), (Var::Q, 2), (Var::B, 4)])
            + &t(2, &[(Var::A, 1), (Var::Q, 1), (Var::C, 2), (Var::D, 2)]);
        let expect = &t(1, &[(Var::Q, 2), (Var::Y, 2)]) + &t(2, &[(Var::Q, 1), (Var::X, 1)]);
        assert_eq!(substitute_xyq(&p).unwrap(), expect);
        assert!(substitute_xyq(&t(1, &[(Var::A, 1), (Var::B, 1)])).is_err());
    }
}
