//! Closed-form exponential generating functions as truncated series.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{RatPoly, TruncatedSeries, Var};
use crate::error::{capacity, Error, Result};

/// Order used when none is given.
pub const DEFAULT_ORDER: usize = 10;

/// Hard ceiling on series orders; `COMBI_MAX_ORDER` overrides it.
pub fn max_series_order() -> usize {
    std::env::var("COMBI_MAX_ORDER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(16)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    /// `sqrt((x-1) / (x - e^{2(x-1)z}))`
    M,
    /// `sqrt((1-x) / (1 - x e^{2(1-x)z}))`
    N,
    /// `(1-x) / (1 - x e^{(1-x)z})`
    A,
    /// `M(x, z)^q`
    Q,
    /// `e^{q(y-1)z} Q(x, q, z)`
    P,
    /// `(1-x) / (e^{xz} - x e^z)`
    D,
    /// `sqrt((x-1) / (x e^{2z} - e^{2xz}))`
    S,
    /// `sqrt(2 / (e^{2z} + e^{-2z}))`
    SqrtSec,
    /// `e^{-z} / sqrt(1-2z)`
    Qn,
    /// `1 / sqrt(1-2z)`
    StirlingCount,
}

impl SeriesId {
    pub const ALL: [SeriesId; 10] = [
        SeriesId::M,
        SeriesId::N,
        SeriesId::A,
        SeriesId::Q,
        SeriesId::P,
        SeriesId::D,
        SeriesId::S,
        SeriesId::SqrtSec,
        SeriesId::Qn,
        SeriesId::StirlingCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::M => "M",
            SeriesId::N => "N",
            SeriesId::A => "A",
            SeriesId::Q => "Q",
            SeriesId::P => "P",
            SeriesId::D => "d",
            SeriesId::S => "S",
            SeriesId::SqrtSec => "sqrtsec",
            SeriesId::Qn => "qn",
            SeriesId::StirlingCount => "stirling",
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = SeriesId::ALL.iter().map(|id| id.name()).collect();
                Error::Usage(format!(
                    "unknown series '{s}', expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

fn poly_x(c0: i64, c1: i64) -> RatPoly {
    &RatPoly::from_i64(c0) + &RatPoly::var(Var::X).scale_i64(c1)
}

/// `e^{c z}`.
fn exp_lin(c: RatPoly, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::linear(c, order).exp()
}

fn inv_sqrt_one_minus_2z(order: usize) -> Result<TruncatedSeries> {
    let s = &TruncatedSeries::one(order) - &TruncatedSeries::linear(RatPoly::from_i64(2), order);
    s.sqrt()?.inverse()
}

/// Expand a generating function through `z^order`.
pub fn build_series(id: SeriesId, order: usize) -> Result<TruncatedSeries> {
    let max = max_series_order();
    if order > max {
        return Err(capacity(
            format!("series {id} order"),
            max as u64,
            order as u64,
        ));
    }
    let x = RatPoly::var(Var::X);
    let one = TruncatedSeries::one(order);
    let konst = |p: RatPoly| TruncatedSeries::constant(p, order);
    match id {
        SeriesId::M => {
            let den = &konst(x.clone()) - &exp_lin(poly_x(-2, 2), order)?;
            konst(poly_x(-1, 1)).div(&den)?.sqrt()
        }
        SeriesId::N => {
            let den = &one - &exp_lin(poly_x(2, -2), order)?.scale(&x);
            konst(poly_x(1, -1)).div(&den)?.sqrt()
        }
        SeriesId::A => {
            let den = &one - &exp_lin(poly_x(1, -1), order)?.scale(&x);
            konst(poly_x(1, -1)).div(&den)
        }
        SeriesId::Q => build_series(SeriesId::M, order)?.pow_symbolic(Var::Q),
        SeriesId::P => {
            let qy1 = &RatPoly::var(Var::Q) * &(&RatPoly::var(Var::Y) - &RatPoly::one());
            Ok(&exp_lin(qy1, order)? * &build_series(SeriesId::Q, order)?)
        }
        SeriesId::D => {
            let den = &exp_lin(x.clone(), order)? - &exp_lin(RatPoly::one(), order)?.scale(&x);
            konst(poly_x(1, -1)).div(&den)
        }
        SeriesId::S => {
            let den =
                &exp_lin(RatPoly::from_i64(2), order)?.scale(&x) - &exp_lin(poly_x(0, 2), order)?;
            konst(poly_x(-1, 1)).div(&den)?.sqrt()
        }
        SeriesId::SqrtSec => {
            let e2 = exp_lin(RatPoly::from_i64(2), order)?;
            let cosh2 = (&e2 + &e2.rescale_z(-1)).scale(&RatPoly::constant(BigRational::new(
                BigInt::from(1),
                BigInt::from(2),
            )));
            cosh2.inverse()?.sqrt()
        }
        SeriesId::Qn => {
            Ok(&exp_lin(RatPoly::from_i64(-1), order)? * &inv_sqrt_one_minus_2z(order)?)
        }
        SeriesId::StirlingCount => inv_sqrt_one_minus_2z(order),
    }
}

/// Every series at one order, in [`SeriesId::ALL`] order.
pub fn series_families(order: usize) -> Result<Vec<(SeriesId, TruncatedSeries)>> {
    SeriesId::ALL
        .into_iter()
        .map(|id| Ok((id, build_series(id, order)?)))
        .collect()
}
