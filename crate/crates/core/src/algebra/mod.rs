//! Exact algebra: Laurent polynomials, truncated power series, Sturm chains,
//! and polynomial reversal.

mod poly;
mod series;
mod sturm;

pub use poly::{Coeff, ExactPoly, Monomial, Poly, RatPoly, Var, NVARS};
pub use series::TruncatedSeries;
pub use sturm::{sturm_real_roots, SturmReport};

use crate::error::{Error, Result};

/// `x^n p(1/x)` for a polynomial in `x` supported on `[0, n]`.
pub fn poly_reverse(p: &ExactPoly, n: u32) -> Result<ExactPoly> {
    let coeffs = p.univariate(Var::X)?;
    if coeffs.len() > n as usize + 1 {
        return Err(Error::Domain(format!(
            "reversal of degree-{} polynomial at n = {n} leaves the polynomial ring",
            coeffs.len() - 1
        )));
    }
    let mut rev = vec![num_bigint::BigInt::from(0); n as usize + 1];
    for (i, c) in coeffs.into_iter().enumerate() {
        rev[n as usize - i] = c;
    }
    Ok(ExactPoly::from_univariate(Var::X, &rev))
}
