//! Polynomial families and integer sequences from their recurrences, plus
//! generating-function and enumeration helpers.
//!
//! Every recurrence coefficient is read through [`Families`], so a single
//! coefficient can be perturbed by a [`Mutation`] to check that the
//! verification suite notices.

mod gf;
mod triangle;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{poly_reverse, ExactPoly, Monomial, Var};
use crate::error::{capacity, Error, Result};
use crate::objects::{CycleStirling, InversionSequence};

pub use gf::{build_series, max_series_order, series_families, SeriesId, DEFAULT_ORDER};
pub use triangle::TriangleTable;

/// Sums `x`-monomials over a stream of objects.
pub fn tally<T>(items: impl Iterator<Item = T>, f: impl Fn(&T) -> Monomial) -> ExactPoly {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for t in items {
        *counts.entry(f(&t)).or_default() += 1;
    }
    ExactPoly::from_counts(counts)
}

/// `x^e` as a monomial.
pub fn xpow(e: u32) -> Monomial {
    Monomial::var(Var::X, e as i32)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// `(2n - 1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}

/// Recurrences whose coefficients can be mutated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Recurrence {
    /// `N(n+1,k) = 2k N(n,k) + (2n-2k+3) N(n,k-1)`
    N,
    /// `C(n,k) = k C(n-1,k) + (2n-k) C(n-1,k-1)`
    C,
    /// `<n,k> = (k+1) <n-1,k> + (n-k) <n-1,k-1>`
    Eulerian,
    /// `A_{n+1} = A_n + n x A_n + x A_n' - x^2 A_n'`
    A,
    /// `Q_{n+1} = q Q_n + 2n x Q_n + 2x dQ_n/dx - 2x^2 dQ_n/dx`
    Q,
    /// `P_{n+1} = 2n x P + q y P + 2x P_x - 2x^2 P_x + 2x P_y - 2xy P_y`
    PRecurrence,
    /// `P_{n+1} = q y P_n + q x sum_{k<n} C(n,k) P_k 2^(n-k) A_(n-k)`
    PConvolution,
    /// `R_{n+1} = 2n x R_n + 2x R_n' - 2x^2 R_n' + 2n x q R_{n-1}`
    R,
    /// `L_{n+1} = q L_n + 2n L_n`
    L,
    /// `q_{n+1} = 2n q_n + 2n q_{n-1}`
    Qn,
    /// `S_{n+1}(i,j,k) = S_n(i-1,j-1,k) + 2(j+1) S_n(i,j+1,k-1) + 2k S_n(i,j,k)
    /// + 2(n-j-k+1) S_n(i,j,k-1)`
    S,
}

impl Recurrence {
    pub const ALL: [Recurrence; 11] = [
        Recurrence::N,
        Recurrence::C,
        Recurrence::Eulerian,
        Recurrence::A,
        Recurrence::Q,
        Recurrence::PRecurrence,
        Recurrence::PConvolution,
        Recurrence::R,
        Recurrence::L,
        Recurrence::Qn,
        Recurrence::S,
    ];

    /// Number of mutable coefficients.
    pub fn terms(self) -> usize {
        match self {
            Recurrence::N | Recurrence::C | Recurrence::Eulerian => 2,
            Recurrence::PConvolution | Recurrence::L | Recurrence::Qn => 2,
            Recurrence::A | Recurrence::Q | Recurrence::R | Recurrence::S => 4,
            Recurrence::PRecurrence => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Recurrence::N => "N",
            Recurrence::C => "C",
            Recurrence::Eulerian => "eulerian",
            Recurrence::A => "A",
            Recurrence::Q => "Q",
            Recurrence::PRecurrence => "P-recurrence",
            Recurrence::PConvolution => "P-convolution",
            Recurrence::R => "R",
            Recurrence::L => "L",
            Recurrence::Qn => "qn",
            Recurrence::S => "S",
        }
    }
}

/// Adds `delta` to coefficient number `term` of one recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mutation {
    pub recurrence: Recurrence,
    pub term: usize,
    pub delta: i64,
}

impl Mutation {
    /// Every single-coefficient `+1` and `-1` mutant.
    pub fn catalogue() -> Vec<Mutation> {
        Recurrence::ALL
            .iter()
            .flat_map(|&r| {
                (0..r.terms()).flat_map(move |term| {
                    [1, -1].map(|delta| Mutation {
                        recurrence: r,
                        term,
                        delta,
                    })
                })
            })
            .collect()
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]{:+}",
            self.recurrence.name(),
            self.term,
            self.delta
        )
    }
}

/// Largest `n` for the inversion-sequence route to `B_n`.
pub const B_MAX_N: u32 = 8;
/// Largest `n` for the enumeration route to `P_n`.
pub const P_ENUM_MAX_N: u32 = 8;

/// Ways to compute `P_n(x, y, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PRoute {
    Recurrence,
    Convolution,
    Triangle,
    Series,
    Enumeration,
}

/// Entry point to every family. Stateless apart from an optional mutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Families {
    mutation: Option<Mutation>,
}

fn x() -> ExactPoly {
    ExactPoly::var(Var::X)
}

fn dx(p: &ExactPoly) -> ExactPoly {
    p.derivative(Var::X)
}

impl Families {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_mutation(mutation: Mutation) -> Self {
        Self {
            mutation: Some(mutation),
        }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    /// The coefficient `base` of term `term`, shifted when mutated.
    fn coef(&self, rec: Recurrence, term: usize, base: i64) -> i64 {
        match self.mutation {
            Some(m) if m.recurrence == rec && m.term == term => base + m.delta,
            _ => base,
        }
    }

    fn coef_big(&self, rec: Recurrence, term: usize, base: i64) -> BigInt {
        BigInt::from(self.coef(rec, term, base))
    }

    /// Rows `0..=n_max` of `N(n, k)`, row 0 being `[1]`.
    pub fn n_triangle(&self, n_max: u32) -> TriangleTable {
        let mut rows = vec![vec![BigInt::one()]];
        if n_max >= 1 {
            rows.push(vec![BigInt::zero(), BigInt::one()]);
        }
        for n in 1..n_max as i64 {
            let prev = &rows[n as usize];
            let mut row = vec![BigInt::zero(); n as usize + 2];
            for k in 1..=n + 1 {
                let ku = k as usize;
                let mut v = BigInt::zero();
                if ku < prev.len() {
                    v += self.coef_big(Recurrence::N, 0, 2 * k) * &prev[ku];
                }
                v += self.coef_big(Recurrence::N, 1, 2 * n - 2 * k + 3) * &prev[ku - 1];
                row[ku] = v;
            }
            rows.push(row);
        }
        TriangleTable::new("N", rows)
    }

    pub fn n_poly(&self, n: u32) -> ExactPoly {
        self.n_triangle(n).poly(n as usize)
    }

    /// `M_n(x) = x^n N_n(1/x)`.
    pub fn m_poly(&self, n: u32) -> ExactPoly {
        poly_reverse(&self.n_poly(n), n).expect("N_n has support in [0, n]")
    }

    /// Rows `0..=n_max` of `C(n, k)`, row 0 being `[1]`.
    pub fn c_triangle(&self, n_max: u32) -> TriangleTable {
        let mut rows = vec![vec![BigInt::one()]];
        if n_max >= 1 {
            rows.push(vec![BigInt::zero(), BigInt::one()]);
        }
        for n in 2..=n_max as i64 {
            let prev = &rows[n as usize - 1];
            let mut row = vec![BigInt::zero(); n as usize + 1];
            for k in 1..=n {
                let ku = k as usize;
                let mut v = BigInt::zero();
                if ku < prev.len() {
                    v += self.coef_big(Recurrence::C, 0, k) * &prev[ku];
                }
                v += self.coef_big(Recurrence::C, 1, 2 * n - k) * &prev[ku - 1];
                row[ku] = v;
            }
            rows.push(row);
        }
        TriangleTable::new("C", rows)
    }

    pub fn c_poly(&self, n: u32) -> ExactPoly {
        self.c_triangle(n).poly(n as usize)
    }

    /// Rows `0..=n_max` of the Eulerian numbers `<n, k>`.
    pub fn eulerian_triangle(&self, n_max: u32) -> TriangleTable {
        let mut rows = vec![vec![BigInt::one()]];
        for n in 1..=n_max as i64 {
            let prev = &rows[n as usize - 1];
            let row: Vec<BigInt> = (0..n)
                .map(|k| {
                    let ku = k as usize;
                    let mut v = BigInt::zero();
                    if ku < prev.len() {
                        v += self.coef_big(Recurrence::Eulerian, 0, k + 1) * &prev[ku];
                    }
                    if ku >= 1 {
                        v += self.coef_big(Recurrence::Eulerian, 1, n - k) * &prev[ku - 1];
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        TriangleTable::new("eulerian", rows)
    }

    pub fn eulerian_row(&self, n: u32) -> Vec<BigInt> {
        self.eulerian_triangle(n).rows[n as usize].clone()
    }

    /// `A_n(x)` by its polynomial recurrence from `A_0 = 1`.
    pub fn eulerian_a(&self, n: u32) -> ExactPoly {
        let r = Recurrence::A;
        let mut a = ExactPoly::one();
        for m in 0..n as i64 {
            let d = dx(&a);
            a = a.scale_i64(self.coef(r, 0, 1))
                + (&x() * &a).scale_i64(self.coef(r, 1, m))
                + (&x() * &d).scale_i64(self.coef(r, 2, 1))
                + (&x().pow(2) * &d).scale_i64(self.coef(r, 3, -1));
        }
        a
    }

    /// `B_n(x)` as the ascent polynomial of `(2, 4, ..., 2n)`-inversion
    /// sequences.
    pub fn b_poly(&self, n: u32) -> Result<ExactPoly> {
        if n > B_MAX_N {
            return Err(capacity(
                "B_n by inversion sequences n",
                B_MAX_N as u64,
                n as u64,
            ));
        }
        let bounds = (1..=n).map(|i| 2 * i).collect();
        Ok(tally(InversionSequence::all(bounds), |e| xpow(e.asc())))
    }

    /// `Q_n(x, q)` from `Q_0 = 1`.
    pub fn q_poly(&self, n: u32) -> ExactPoly {
        let r = Recurrence::Q;
        let q = ExactPoly::var(Var::Q);
        let mut p = ExactPoly::one();
        for m in 0..n as i64 {
            let d = dx(&p);
            p = (&q * &p).scale_i64(self.coef(r, 0, 1))
                + (&x() * &p).scale_i64(self.coef(r, 1, 2 * m))
                + (&x() * &d).scale_i64(self.coef(r, 2, 2))
                + (&x().pow(2) * &d).scale_i64(self.coef(r, 3, -2));
        }
        p
    }

    /// `Y_n(x)`: the `q^1` coefficient of `Q_n`, i.e. the single-cycle part.
    pub fn y_poly(&self, n: u32) -> ExactPoly {
        self.q_poly(n).coeff_in(Var::Q, 1)
    }

    fn p_recurrence(&self, n: u32) -> ExactPoly {
        let r = Recurrence::PRecurrence;
        let (q, y) = (ExactPoly::var(Var::Q), ExactPoly::var(Var::Y));
        let mut p = ExactPoly::one();
        for m in 0..n as i64 {
            let px = dx(&p);
            let py = p.derivative(Var::Y);
            p = (&x() * &p).scale_i64(self.coef(r, 0, 2 * m))
                + (&(&q * &y) * &p).scale_i64(self.coef(r, 1, 1))
                + (&x() * &px).scale_i64(self.coef(r, 2, 2))
                + (&x().pow(2) * &px).scale_i64(self.coef(r, 3, -2))
                + (&x() * &py).scale_i64(self.coef(r, 4, 2))
                + (&(&x() * &y) * &py).scale_i64(self.coef(r, 5, -2));
        }
        p
    }

    fn p_convolution(&self, n: u32) -> ExactPoly {
        let r = Recurrence::PConvolution;
        let (q, y) = (ExactPoly::var(Var::Q), ExactPoly::var(Var::Y));
        let qy = &q * &y;
        let qx = &q * &x();
        let a: Vec<ExactPoly> = (0..=n).map(|k| self.eulerian_a(k)).collect();
        let mut ps = vec![ExactPoly::one()];
        for m in 0..n {
            let mut sum = ExactPoly::zero();
            for k in 0..m {
                let w = binomial(m, k) << (m - k) as usize;
                sum += &(&ps[k as usize] * &a[(m - k) as usize]).scale(&w);
            }
            let next = (&qy * &ps[m as usize]).scale_i64(self.coef(r, 0, 1))
                + (&qx * &sum).scale_i64(self.coef(r, 1, 1));
            ps.push(next);
        }
        ps.pop().unwrap()
    }

    /// `sum_{i,j,k} S_n(i,j,k) q^i y^j x^k` from `S_0 = 1`.
    fn p_triangle(&self, n: u32) -> ExactPoly {
        let r = Recurrence::S;
        let mut s: HashMap<(i32, i32, i32), BigInt> = HashMap::from([((0, 0, 0), BigInt::one())]);
        for m in 0..n as i64 {
            let mut next: HashMap<(i32, i32, i32), BigInt> = HashMap::new();
            let mut add = |key: (i32, i32, i32), c: BigInt| {
                if !c.is_zero() {
                    *next.entry(key).or_default() += c;
                }
            };
            for (&(i, j, k), c) in &s {
                let (jl, kl) = (j as i64, k as i64);
                // S_n(i,j,k) feeds (i+1,j+1,k), (i,j-1,k+1), (i,j,k), (i,j,k+1).
                add((i + 1, j + 1, k), c * self.coef(r, 0, 1));
                if j >= 1 {
                    add((i, j - 1, k + 1), c * self.coef(r, 1, 2 * jl));
                }
                add((i, j, k), c * self.coef(r, 2, 2 * kl));
                add((i, j, k + 1), c * self.coef(r, 3, 2 * (m - jl - kl)));
            }
            s = next;
        }
        ExactPoly::from_terms(s.into_iter().map(|((i, j, k), c)| {
            (
                Monomial::from_pairs(&[(Var::Q, i), (Var::Y, j), (Var::X, k)]),
                c,
            )
        }))
    }

    /// `P_n(x, y, q)` by the chosen route.
    pub fn p_poly(&self, n: u32, route: PRoute) -> Result<ExactPoly> {
        match route {
            PRoute::Recurrence => Ok(self.p_recurrence(n)),
            PRoute::Convolution => Ok(self.p_convolution(n)),
            PRoute::Triangle => Ok(self.p_triangle(n)),
            PRoute::Series => {
                let order = n as usize;
                if order > max_series_order() {
                    return Err(capacity(
                        "series order",
                        max_series_order() as u64,
                        n as u64,
                    ));
                }
                build_series(SeriesId::P, order)?.egf_integer(n as usize)
            }
            PRoute::Enumeration => {
                if n > P_ENUM_MAX_N {
                    return Err(capacity(
                        "P_n by enumeration n",
                        P_ENUM_MAX_N as u64,
                        n as u64,
                    ));
                }
                Ok(tally(CycleStirling::all(n), |s| {
                    Monomial::from_pairs(&[
                        (Var::X, s.cap() as i32),
                        (Var::Y, s.fix() as i32),
                        (Var::Q, s.cyc() as i32),
                    ])
                }))
            }
        }
    }

    /// `R_n(x, q)` from `R_0 = 1`, `R_1 = 0`.
    pub fn r_poly(&self, n: u32) -> ExactPoly {
        let r = Recurrence::R;
        let q = ExactPoly::var(Var::Q);
        let (mut prev, mut cur) = (ExactPoly::one(), ExactPoly::zero());
        if n == 0 {
            return prev;
        }
        for m in 1..n as i64 {
            let d = dx(&cur);
            let next = (&x() * &cur).scale_i64(self.coef(r, 0, 2 * m))
                + (&x() * &d).scale_i64(self.coef(r, 1, 2))
                + (&x().pow(2) * &d).scale_i64(self.coef(r, 2, -2))
                + (&(&x() * &q) * &prev).scale_i64(self.coef(r, 3, 2 * m));
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// `R_{n,k}(x, q) = C(n,k) q^k R_{n-k}(x, q)`.
    pub fn r_nk(&self, n: u32, k: u32) -> ExactPoly {
        if k > n {
            return ExactPoly::zero();
        }
        self.r_poly(n - k)
            .shift(Var::Q, k as i32)
            .scale(&binomial(n, k))
    }

    /// `L_n(q)` from `L_0 = 1`.
    pub fn l_poly(&self, n: u32) -> ExactPoly {
        let r = Recurrence::L;
        let q = ExactPoly::var(Var::Q);
        let mut l = ExactPoly::one();
        for m in 0..n as i64 {
            l = (&q * &l).scale_i64(self.coef(r, 0, 1)) + l.scale_i64(self.coef(r, 1, 2 * m));
        }
        l
    }

    /// `q_n` from `q_0 = 1`, `q_1 = 0`.
    pub fn qn(&self, n: u32) -> BigInt {
        let r = Recurrence::Qn;
        let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
        if n == 0 {
            return prev;
        }
        for m in 1..n as i64 {
            let next = &cur * self.coef(r, 0, 2 * m) + &prev * self.coef(r, 1, 2 * m);
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// `d_n(x)`, the excedance polynomial of derangements, from its EGF.
    pub fn d_poly(&self, n: u32) -> Result<ExactPoly> {
        let order = n as usize;
        if order > max_series_order() {
            return Err(capacity(
                "series order",
                max_series_order() as u64,
                n as u64,
            ));
        }
        build_series(SeriesId::D, order)?.egf_integer(order)
    }

    /// `h_n` from the expansion of `sqrt(2 / (e^(2z) + e^(-2z)))`.
    pub fn h_number(&self, n: u32) -> Result<BigInt> {
        let order = 2 * n as usize;
        if order > max_series_order() {
            return Err(capacity(
                "series order (2n)",
                max_series_order() as u64,
                order as u64,
            ));
        }
        let c = build_series(SeriesId::SqrtSec, order)?.egf_integer(order)?;
        if !c.is_constant() {
            return Err(Error::Domain("sqrt-sec coefficient is not a number".into()));
        }
        let v = c.constant_term();
        Ok(if n % 2 == 1 { -v } else { v })
    }
}
