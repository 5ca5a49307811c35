//! Sparse multivariate Laurent polynomials with exact coefficients.
//!
//! The variable set is fixed: `x, y, q, a, b, c, d`. Exponent vectors are
//! dense over those seven letters and may be negative. Terms are kept in a
//! `BTreeMap` ordered by graded lexicographic order, which is also the order
//! used by the canonical text rendering (`1 + 4*x + x^2`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const NVARS: usize = 7;

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Q,
    A,
    B,
    C,
    D,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Q, Var::A, Var::B, Var::C, Var::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Q => "q",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the fixed variable set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exps: [i32; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var, e: i32) -> Self {
        Monomial::ONE.with_exp(v, e)
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: i32) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn exponents(&self) -> &[i32; NVARS] {
        &self.0
    }

    /// Total degree (may be negative for Laurent monomials).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o += e;
        }
        out
    }

    /// `self / other`, exponentwise; the result may be Laurent.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o -= e;
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(&a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Exact coefficient ring.
pub trait Coeff: Clone + fmt::Debug + fmt::Display + PartialEq + Zero + One + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_ref(&mut self, other: &Self);
    fn neg_ref(&self) -> Self;
    fn is_neg(&self) -> bool;
    fn abs_val(&self) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
}

/// Sparse Laurent polynomial in canonical form: no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Monomial, C>,
}

/// Integer-coefficient polynomial; houses every combinatorial family.
pub type ExactPoly = Poly<BigInt>;
/// Rational-coefficient polynomial; used for power-series coefficients.
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    /// `c * prod v^e` from explicit pairs.
    pub fn term(c: i64, pairs: &[(Var, i32)]) -> Self {
        Self::monomial(Monomial::from_pairs(pairs), C::from_i64(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    /// Dense univariate constructor: `coeffs[i]` multiplies `v^i`.
    pub fn from_univariate(v: Var, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as i32), c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                existing.add_ref(c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Variables occurring with a nonzero exponent, in the fixed order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) != 0))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.keys().all(Monomial::is_nonnegative)
    }

    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul_ref(c))).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&C::from_i64(c))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Multiply by `v^e`; `e` may be negative.
    pub fn shift(&self, v: Var, e: i32) -> Self {
        self.mul_monomial(&Monomial::var(v, e))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative, valid for Laurent exponents.
    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e != 0 {
                out.add_term(m.with_exp(v, e - 1), &c.mul_ref(&C::from_i64(e as i64)));
            }
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, k: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone())),
        )
    }

    /// Substitute the constant `value` for `v`. Negative exponents of `v`
    /// are rejected.
    pub fn eval(&self, v: Var, value: &C) -> Result<Self> {
        let mut out = Self::zero();
        let mut powers: Vec<C> = vec![C::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < 0 {
                return Err(Error::Domain(format!(
                    "cannot evaluate {v} in a term with negative exponent {e}"
                )));
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul_ref(value);
                powers.push(next);
            }
            out.add_term(m.with_exp(v, 0), &c.mul_ref(&powers[e as usize]));
        }
        Ok(out)
    }

    pub fn eval_i64(&self, v: Var, value: i64) -> Result<Self> {
        self.eval(v, &C::from_i64(value))
    }

    /// Substitute a polynomial for `v`. Negative exponents of `v` are rejected.
    pub fn substitute(&self, v: Var, value: &Self) -> Result<Self> {
        let mut out = Self::zero();
        let mut powers: Vec<Self> = vec![Self::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < 0 {
                return Err(Error::Domain(format!(
                    "cannot substitute for {v} in a term with negative exponent {e}"
                )));
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let rest = Self::monomial(m.with_exp(v, 0), c.clone());
            out += &(&rest * &powers[e as usize]);
        }
        Ok(out)
    }

    /// Dense coefficient vector in `v`; the polynomial must involve no other
    /// variable and no negative exponent.
    pub fn univariate(&self, v: Var) -> Result<Vec<C>> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < 0 || m.with_exp(v, 0) != Monomial::ONE {
                return Err(Error::Domain(format!(
                    "expected a polynomial in {v} only, found term {m}"
                )));
            }
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, C::zero());
            }
            out[e] = c.clone();
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Sum of all coefficients (every variable set to 1).
    pub fn coefficient_sum(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc.add_ref(c);
        }
        acc
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }
}

impl ExactPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Build from exponent-vector counts, as produced by enumeration tallies.
    pub fn from_counts<I: IntoIterator<Item = (Monomial, u64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    }
}

impl RatPoly {
    /// Integer-coefficient view, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<ExactPoly> {
        let mut out = ExactPoly::zero();
        for (m, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*m, &c.to_integer());
        }
        Some(out)
    }

    /// Exact multivariate division. Both polynomials must have nonnegative
    /// exponents; fails with a domain error when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        if !self.is_nonnegative() || !divisor.is_nonnegative() {
            return Err(Error::Domain(
                "exact division requires nonnegative exponents".into(),
            ));
        }
        let mut rem = self.clone();
        let mut quot = RatPoly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&m) {
                return Err(Error::Domain(format!("{divisor} does not divide {self}")));
            }
            let t = RatPoly::monomial(m.div(&lm), c / &lc);
            rem -= &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &c.neg_ref());
        }
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &c1.mul_ref(c2));
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_neg();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs_val();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> ExactPoly {
        ExactPoly::var(Var::X)
    }

    #[test]
    fn renders_in_graded_order() {
        let p = ExactPoly::from_univariate(Var::X, &[1.into(), 4.into(), 1.into()]);
        assert_eq!(p.to_string(), "1 + 4*x + x^2");
        let q2 =
            ExactPoly::term(1, &[(Var::Q, 2)]) + ExactPoly::term(2, &[(Var::Q, 1), (Var::X, 1)]);
        assert_eq!(q2.to_string(), "q^2 + 2*x*q");
        let neg = ExactPoly::one() - x().scale_i64(2);
        assert_eq!(neg.to_string(), "1 - 2*x");
        assert_eq!((-x()).to_string(), "-x");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        let laurent = ExactPoly::term(1, &[(Var::B, -1), (Var::C, 2), (Var::D, 2)]);
        assert_eq!(laurent.to_string(), "b^-1*c^2*d^2");
        let half = RatPoly::monomial(
            Monomial::var(Var::X, 2),
            BigRational::new(1.into(), 2.into()),
        );
        assert_eq!(half.to_string(), "1/2*x^2");
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = x() - x();
        assert!(p.is_zero());
        assert_eq!(p, ExactPoly::zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn laurent_derivative_uses_power_rule() {
        let binv = ExactPoly::term(1, &[(Var::B, -1)]);
        assert_eq!(
            binv.derivative(Var::B),
            ExactPoly::term(-1, &[(Var::B, -2)])
        );
    }

    #[test]
    fn eval_and_substitute() {
        // (1 + x)^3 at x = 2 is 27
        let p = (ExactPoly::one() + x()).pow(3);
        assert_eq!(p.eval_i64(Var::X, 2).unwrap(), ExactPoly::from_i64(27));
        let s = p.substitute(Var::X, &ExactPoly::var(Var::Y)).unwrap();
        assert_eq!(s, (ExactPoly::one() + ExactPoly::var(Var::Y)).pow(3));
        assert!(ExactPoly::term(1, &[(Var::X, -1)])
            .eval_i64(Var::X, 2)
            .is_err());
    }

    #[test]
    fn exact_division() {
        let one_minus_x = (ExactPoly::one() - x()).to_rational();
        let p = (ExactPoly::one() - x().pow(4)).to_rational();
        let q = p.div_exact(&one_minus_x).unwrap();
        assert_eq!(
            q,
            ExactPoly::from_univariate(Var::X, &[1.into(), 1.into(), 1.into(), 1.into()])
                .to_rational()
        );
        assert!(x().to_rational().div_exact(&one_minus_x).is_err());
    }

    #[test]
    fn univariate_rejects_foreign_variables() {
        let p = x() + ExactPoly::var(Var::Q);
        assert!(p.univariate(Var::X).is_err());
        assert_eq!(
            (x() + x().pow(3)).univariate(Var::X).unwrap(),
            vec![0.into(), 1.into(), 0.into(), 1.into()]
        );
    }
}
