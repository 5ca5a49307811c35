//! Power series in `z` truncated at a fixed order, with polynomial
//! coefficients over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{Coeff, ExactPoly, RatPoly, Var};
use crate::error::{Error, Result};

/// `sum_{i=0}^{order} coeffs[i] z^i + O(z^{order+1})`.
///
/// Invariant: `coeffs.len() == order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<RatPoly>,
}

fn rat(n: i64) -> BigRational {
    <BigRational as Coeff>::from_i64(n)
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<RatPoly>) -> Self {
        coeffs.resize(order + 1, RatPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(RatPoly::one(), order)
    }

    pub fn constant(c: RatPoly, order: usize) -> Self {
        Self::new(order, vec![c])
    }

    /// The series `c * z`.
    pub fn linear(c: RatPoly, order: usize) -> Self {
        Self::new(order, vec![RatPoly::zero(), c])
    }

    /// Build from exponential-generating-function coefficients: the
    /// coefficient of `z^n` is `egf[n] / n!`.
    pub fn from_egf(order: usize, egf: &[ExactPoly]) -> Self {
        let coeffs = egf
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, p)| {
                p.to_rational()
                    .scale(&BigRational::new(BigInt::one(), factorial(n)))
            })
            .collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &RatPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order()), self.coeffs.clone())
    }

    pub fn scale(&self, c: &RatPoly) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Substitute `factor * z` for `z`.
    pub fn rescale_z(&self, factor: i64) -> Self {
        let f = rat(factor);
        let mut power = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.scale(&power));
            power *= &f;
        }
        TruncatedSeries { coeffs }
    }

    pub fn eval_var(&self, v: Var, value: &BigRational) -> Result<Self> {
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.eval(v, value))
                .collect::<Result<_>>()?,
        })
    }

    /// Divide every coefficient exactly by a polynomial.
    pub fn div_poly_exact(&self, d: &RatPoly) -> Result<Self> {
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.div_exact(d))
                .collect::<Result<_>>()?,
        })
    }

    /// `n!` times the coefficient of `z^n`.
    pub fn egf_coefficient(&self, n: usize) -> Result<RatPoly> {
        if n > self.order() {
            return Err(Error::Range(format!(
                "coefficient {n} requested from a series truncated at order {}",
                self.order()
            )));
        }
        Ok(self.coeffs[n].scale(&BigRational::from_integer(factorial(n))))
    }

    /// [`egf_coefficient`](Self::egf_coefficient) for integral families.
    pub fn egf_integer(&self, n: usize) -> Result<ExactPoly> {
        let c = self.egf_coefficient(n)?;
        c.to_integer()
            .ok_or_else(|| Error::Domain(format!("egf coefficient {n} is not integral: {c}")))
    }

    fn require_unit_constant(&self, op: &str) -> Result<()> {
        if self.coeffs[0] != RatPoly::one() {
            return Err(Error::Domain(format!(
                "{op} requires constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        Ok(())
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() || !c0.is_constant() {
            return Err(Error::Domain(format!(
                "series inverse needs a nonzero scalar constant term, found {c0}"
            )));
        }
        let inv0 = BigRational::one() / c0.constant_term();
        let mut out: Vec<RatPoly> = vec![RatPoly::constant(inv0.clone())];
        for n in 1..=self.order() {
            let mut acc = RatPoly::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(acc.scale(&(-inv0.clone())));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / other`. Both constant terms are first divided exactly by the
    /// constant term of `other`, so quotients such as `(1-x)/(1-x e^{..})`
    /// whose denominator has a non-scalar constant term still work.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let c0 = other.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::Domain(
                "series division by a zero constant term".into(),
            ));
        }
        let num = self.div_poly_exact(&c0)?;
        let den = other.div_poly_exact(&c0)?;
        Ok(&num * &den.inverse()?)
    }

    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(format!(
                "series exp requires a zero constant term, found {}",
                self.coeffs[0]
            )));
        }
        // E' = s' E  =>  n E_n = sum_{k=1}^n k s_k E_{n-k}
        let mut out: Vec<RatPoly> = vec![RatPoly::one()];
        for n in 1..=self.order() {
            let mut acc = RatPoly::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &out[n - k]).scale(&rat(k as i64));
            }
            out.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `log(self)`; the constant term must be 1.
    pub fn log(&self) -> Result<Self> {
        self.require_unit_constant("series log")?;
        // f L' = f'  =>  n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}
        let mut out: Vec<RatPoly> = vec![RatPoly::zero()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].scale(&rat(n as i64));
            for (k, lk) in out.iter().enumerate().skip(1) {
                acc -= &(lk * &self.coeffs[n - k]).scale(&rat(k as i64));
            }
            out.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Square root with constant term 1, by the coefficient recurrence of
    /// `g^2 = f`.
    pub fn sqrt(&self) -> Result<Self> {
        self.require_unit_constant("series sqrt")?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut out: Vec<RatPoly> = vec![RatPoly::one()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &(&out[k] * &out[n - k]);
            }
            out.push(acc.scale(&half));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^v = exp(v log self)` for a fresh polynomial variable `v`.
    pub fn pow_symbolic(&self, v: Var) -> Result<Self> {
        self.require_unit_constant("symbolic power")?;
        if self.coeffs.iter().any(|c| c.vars().contains(&v)) {
            return Err(Error::Domain(format!(
                "exponent variable {v} already occurs in the series"
            )));
        }
        self.log()?.scale(&RatPoly::var(v)).exp()
    }

    /// `self^e` for a nonnegative integer exponent, by repeated products.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = RatPoly::zero();
                for k in 0..=n {
                    if !self.coeffs[k].is_zero() && !rhs.coeffs[n - k].is_zero() {
                        acc += &(&self.coeffs[k] * &rhs.coeffs[n - k]);
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}
