//! Sturm-chain counting of distinct real roots with exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{ExactPoly, Var};
use crate::error::{Error, Result};

/// Outcome of a Sturm-chain analysis of a univariate polynomial in `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SturmReport {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub is_squarefree: bool,
}

impl SturmReport {
    /// True when every root is real and simple.
    pub fn real_rooted_simple(&self) -> bool {
        self.is_squarefree && self.distinct_real_roots == self.degree
    }
}

/// Dense integer polynomial, lowest degree first, no trailing zeros.
type Dense = Vec<BigInt>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &Dense) -> Dense {
    let mut d: Dense = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut d);
    d
}

/// Divide out the (positive) content; signs are preserved.
fn primitive(mut p: Dense) -> Dense {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut p {
            *c /= &g;
        }
    }
    p
}

/// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` modulo `b`; a positive
/// multiple of the true remainder.
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.clone();
    }
    let lc = b[db].abs();
    let delta = (a.len() - b.len() + 1) as u32;
    let scale = num_traits::pow(lc, delta as usize);
    let mut r: Dense = a.iter().map(|c| c * &scale).collect();
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let (q, rem) = r[dr].div_rem(&b[db]);
        debug_assert!(rem.is_zero(), "pseudo-division must be exact");
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &q * c;
        }
        trim(&mut r);
    }
    r
}

fn sign_changes<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn sign(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Count distinct real roots of a univariate polynomial in `x` over
/// `(-inf, +inf)` and decide squarefreeness from `gcd(p, p')`.
pub fn sturm_real_roots(p: &ExactPoly) -> Result<SturmReport> {
    if p.is_zero() {
        return Err(Error::Domain(
            "Sturm analysis of the zero polynomial".into(),
        ));
    }
    let mut dense = p.univariate(Var::X)?;
    trim(&mut dense);
    let degree = dense.len() - 1;

    let mut chain: Vec<Dense> = vec![primitive(dense.clone())];
    let d = derivative(&dense);
    if !d.is_empty() {
        chain.push(primitive(d));
        loop {
            let n = chain.len();
            let mut r = pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            for c in &mut r {
                *c = -&*c;
            }
            chain.push(primitive(r));
        }
    }

    let at_pos_inf = chain.iter().map(|q| sign(q.last().unwrap()));
    let at_neg_inf = chain.iter().map(|q| {
        let s = sign(q.last().unwrap());
        if (q.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    let distinct_real_roots = sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
    let is_squarefree = chain.last().unwrap().len() == 1;
    Ok(SturmReport {
        degree,
        distinct_real_roots,
        is_squarefree,
    })
}
