//! Insertion bijections from decorated permutations (`phi`) and signed
//! permutations (`psi`) to triples of two perfect matchings and an index
//! set.
//!
//! Both maps peel the input down to its single-entry base and replay the
//! insertions of `2, 3, ..., n`. Each insertion either appends a fresh block
//! or splits one existing block `(a, b)` into two, choosing the block by the
//! left-to-right rank of the entry the new maximum lands in front of.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{capacity, Error, Result};
use crate::objects::{DecoratedPermutation, PerfectMatching, SignedPermutation};

/// Largest `n` accepted by [`verify_bijection`].
pub const BIJECTION_MAX_N: u32 = 7;

/// Images of every decorated permutation of size 1 and 2.
pub const PHI_BASE_CASES: [(&str, &str); 10] = [
    ("1", "[] [(1,2)] {}"),
    ("1h", "[(1,2)] [] {1}"),
    ("1 2", "[] [(1,2)(3,4)] {}"),
    ("2 1", "[] [(1,3)(2,4)] {}"),
    ("2c 1", "[] [(1,4)(2,3)] {}"),
    ("1h 2", "[(1,2)] [(1,2)] {1}"),
    ("1 2h", "[(1,2)] [(1,2)] {2}"),
    ("1h 2h", "[(1,2)(3,4)] [] {1,2}"),
    ("2h 1h", "[(1,3)(2,4)] [] {1,2}"),
    ("2hc 1h", "[(1,4)(2,3)] [] {1,2}"),
];

/// Images of every signed permutation of size 1 and 2.
pub const PSI_BASE_CASES: [(&str, &str); 10] = [
    ("1", "[] [(1,2)] {}"),
    ("-1", "[(1,2)] [] {1}"),
    ("1 2", "[] [(1,2)(3,4)] {}"),
    ("2 1", "[] [(1,3)(2,4)] {}"),
    ("-2 1", "[] [(1,4)(2,3)] {}"),
    ("-1 2", "[(1,2)] [(1,2)] {1}"),
    ("1 -2", "[(1,2)] [(1,2)] {2}"),
    ("-1 -2", "[(1,2)(3,4)] [] {1,2}"),
    ("2 -1", "[(1,3)(2,4)] [] {1,2}"),
    ("-2 -1", "[(1,4)(2,3)] [] {1,2}"),
];

/// `(first, second, index_set)` with `first` on `[2k]`, `second` on
/// `[2n - 2k]` and `|index_set| = k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchingTriple {
    pub first: PerfectMatching,
    pub second: PerfectMatching,
    pub index_set: BTreeSet<u32>,
    pub n: u32,
    pub k: u32,
}

impl MatchingTriple {
    pub fn is_valid(&self) -> bool {
        let k = self.k as usize;
        self.index_set.len() == k
            && self.index_set.iter().all(|&i| 1 <= i && i <= self.n)
            && self.first.order() == k
            && self.second.order() + k == self.n as usize
            && self.first.is_valid()
            && self.second.is_valid()
    }

    /// Compact key: larger partners of each matching in standard order,
    /// followed by the index set.
    fn key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(2 * self.n as usize + 2);
        key.extend(self.first.blocks().iter().map(|b| b.1 as u8));
        key.push(u8::MAX);
        key.extend(self.second.blocks().iter().map(|b| b.1 as u8));
        key.push(u8::MAX);
        key.extend(self.index_set.iter().map(|&i| i as u8));
        key
    }
}

impl fmt::Display for MatchingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] [{}] {{", self.first, self.second)?;
        for (i, v) in self.index_set.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Which side of the triple an insertion touches, and which kind of block
/// it splits.
#[derive(Clone, Copy)]
enum Target {
    First,
    Second,
}

/// Triple under construction.
struct Replay {
    first: Vec<(u32, u32)>,
    second: Vec<(u32, u32)>,
    index_set: BTreeSet<u32>,
}

impl Replay {
    fn new() -> Self {
        Self {
            first: Vec::new(),
            second: Vec::new(),
            index_set: BTreeSet::new(),
        }
    }

    /// `m` appended with `k` decorated entries before it.
    fn append(&mut self, m: u32, k: u32, target: Target) {
        match target {
            Target::Second => self.second.push((2 * m - 2 * k - 1, 2 * m - 2 * k)),
            Target::First => {
                self.first.push((2 * k + 1, 2 * k + 2));
                self.index_set.insert(m);
            }
        }
    }

    /// Replaces the `p`-th (1-based) marked or unmarked block of the target
    /// matching by `(a, lo), (b, hi)`, or `(a, hi), (b, lo)` when `swap`.
    fn split(&mut self, m: u32, k: u32, target: Target, marked: bool, p: usize, swap: bool) {
        let (blocks, lo) = match target {
            Target::Second => (&mut self.second, 2 * m - 2 * k - 1),
            Target::First => {
                self.index_set.insert(m);
                (&mut self.first, 2 * k + 1)
            }
        };
        let hi = lo + 1;
        let idx = blocks
            .iter()
            .enumerate()
            .filter(|(_, &b)| PerfectMatching::is_marked(b) == marked)
            .nth(p - 1)
            .map(|(i, _)| i)
            .expect("insertion slots and blocks are in correspondence");
        let (a, b) = blocks[idx];
        let (x, y) = if swap { (hi, lo) } else { (lo, hi) };
        blocks[idx] = (a, x);
        blocks.push((b, y));
        blocks.sort_unstable();
    }

    fn finish(self, n: u32) -> MatchingTriple {
        let k = self.index_set.len() as u32;
        MatchingTriple {
            first: PerfectMatching::standardized(self.first),
            second: PerfectMatching::standardized(self.second),
            index_set: self.index_set,
            n,
            k,
        }
    }
}

/// Rank (1-based) of `pos` among the positions of `kinds` equal to
/// `kinds[pos]`.
fn rank(kinds: &[(bool, bool)], pos: usize) -> usize {
    kinds[..=pos].iter().filter(|&&k| k == kinds[pos]).count()
}

/// The decorated-permutation bijection. Hatted entries feed the first
/// matching and the index set, unhatted ones the second matching.
pub fn phi_map(w: &DecoratedPermutation) -> Result<MatchingTriple> {
    let (base, steps) = w
        .history()
        .ok_or_else(|| Error::Invalid(format!("`{w}` is not a decorated permutation")))?;
    let mut word = vec![base];
    let mut out = Replay::new();
    out.append(
        1,
        0,
        if base.hat {
            Target::First
        } else {
            Target::Second
        },
    );
    for step in steps {
        let m = step.entry.value;
        let k = word.iter().filter(|e| e.hat).count() as u32;
        if step.position == word.len() {
            out.append(
                m,
                k,
                if step.entry.hat {
                    Target::First
                } else {
                    Target::Second
                },
            );
        } else {
            // (hatted, ascent-top) per entry; the front compares with an unhatted 0.
            let kinds: Vec<(bool, bool)> = (0..word.len())
                .map(|i| {
                    let pred = if i == 0 { 0 } else { word[i - 1].value };
                    (word[i].hat, pred < word[i].value)
                })
                .collect();
            let (hatted, ascent_top) = kinds[step.position];
            let p = rank(&kinds, step.position);
            let target = if hatted {
                Target::First
            } else {
                Target::Second
            };
            out.split(m, k, target, ascent_top, p, step.entry.circle);
        }
        word.insert(step.position, step.entry);
    }
    Ok(out.finish(w.len() as u32))
}

/// The signed-permutation bijection. Bar-block entries feed the first
/// matching and the index set, the rest the second matching.
pub fn psi_map(pi: &SignedPermutation) -> Result<MatchingTriple> {
    if !pi.is_valid() || pi.is_empty() {
        return Err(Error::Invalid(format!(
            "`{pi}` is not a signed permutation"
        )));
    }
    // Peel the largest magnitude repeatedly.
    let mut word = pi.word().to_vec();
    let mut steps = Vec::with_capacity(word.len());
    while word.len() > 1 {
        let m = word.len() as u32;
        let pos = word.iter().position(|v| v.unsigned_abs() == m).unwrap();
        steps.push((word.remove(pos), pos));
    }
    steps.reverse();

    let mut out = Replay::new();
    out.append(
        1,
        0,
        if word[0] < 0 {
            Target::First
        } else {
            Target::Second
        },
    );
    for (value, position) in steps {
        let m = value.unsigned_abs();
        let current = SignedPermutation::new(word.clone());
        let bar = current.bar_flags();
        let k = bar.iter().filter(|&&b| b).count() as u32;
        if position == word.len() {
            out.append(
                m,
                k,
                if value < 0 {
                    Target::First
                } else {
                    Target::Second
                },
            );
        } else {
            let kinds: Vec<(bool, bool)> = (0..word.len())
                .map(|i| {
                    let pred = if i == 0 { 0 } else { word[i - 1] };
                    (bar[i], pred < word[i])
                })
                .collect();
            let (in_bar, ascent_top) = kinds[position];
            let p = rank(&kinds, position);
            // Inside bar-blocks the roles of marked and unmarked blocks swap.
            let (target, marked) = if in_bar {
                (Target::First, !ascent_top)
            } else {
                (Target::Second, ascent_top)
            };
            out.split(m, k, target, marked, p, value < 0);
        }
        word.insert(position, value);
    }
    Ok(out.finish(pi.len() as u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapId {
    Phi,
    Psi,
}

impl MapId {
    pub fn name(self) -> &'static str {
        match self {
            MapId::Phi => "phi",
            MapId::Psi => "psi",
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(MapId::Phi),
            "psi" => Ok(MapId::Psi),
            _ => Err(Error::Usage(format!(
                "unknown map `{s}` (expected phi or psi)"
            ))),
        }
    }
}

/// Outcome of an exhaustive run of a bijection over its whole domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: u32,
    pub injective: bool,
    /// Every image is a well-formed triple and, for each `k`, the images
    /// with `|index_set| = k` exhaust the codomain.
    pub image_complete: bool,
    /// The weight statistic and the decorated/bar index set are carried
    /// over to the image.
    pub weight_preserving: bool,
    /// First offending `(object, image)` pair, if any.
    pub counterexample: Option<(String, String)>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective && self.image_complete && self.weight_preserving
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn double_factorial_odd(n: u64) -> u64 {
    // (2n - 1)!!
    (1..=n).map(|i| 2 * i - 1).product()
}

/// `C(n, k) (2k - 1)!! (2n - 2k - 1)!!`, the size of the codomain slice.
pub fn codomain_size(n: u32, k: u32) -> u64 {
    let (n, k) = (n as u64, k as u64);
    binomial(n, k) * double_factorial_odd(k) * double_factorial_odd(n - k)
}

struct Outcome {
    object: String,
    image: Option<MatchingTriple>,
    weight_ok: bool,
}

fn phi_outcome(w: &DecoratedPermutation) -> Outcome {
    let image = phi_map(w).ok();
    let weight_ok = image
        .as_ref()
        .is_some_and(|t| w.asc() == t.first.el() + t.second.el() && w.hat_values() == t.index_set);
    Outcome {
        object: w.to_string(),
        image,
        weight_ok,
    }
}

fn psi_outcome(pi: &SignedPermutation) -> Outcome {
    let image = psi_map(pi).ok();
    let weight_ok = image.as_ref().is_some_and(|t| {
        pi.des_b() == t.first.el() + t.second.ol() && pi.bar_magnitudes() == t.index_set
    });
    Outcome {
        object: pi.to_string(),
        image,
        weight_ok,
    }
}

/// Applies `map` to every object of size `n` and checks injectivity,
/// per-`k` image completeness and weight preservation.
pub fn verify_bijection(map: MapId, n: u32) -> Result<BijectionReport> {
    if n > BIJECTION_MAX_N {
        return Err(capacity(
            format!("{map} verification n"),
            BIJECTION_MAX_N as u64,
            n as u64,
        ));
    }
    if n == 0 {
        return Err(Error::Range("bijections need n >= 1".into()));
    }
    let outcomes: Vec<Outcome> = match map {
        MapId::Phi => {
            let domain: Vec<DecoratedPermutation> = DecoratedPermutation::all(n).collect();
            domain.par_iter().map(phi_outcome).collect()
        }
        MapId::Psi => {
            let domain: Vec<SignedPermutation> = SignedPermutation::all(n).collect();
            domain.par_iter().map(psi_outcome).collect()
        }
    };

    let mut report = BijectionReport {
        n,
        injective: true,
        image_complete: true,
        weight_preserving: true,
        counterexample: None,
    };
    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(outcomes.len());
    let mut per_k = vec![0u64; n as usize + 1];
    for o in &outcomes {
        let shown = o
            .image
            .as_ref()
            .map_or_else(|| "<error>".to_string(), |t| t.to_string());
        let mut bad = false;
        match &o.image {
            Some(t) if t.is_valid() && t.n == n => {
                if seen.insert(t.key()) {
                    per_k[t.k as usize] += 1;
                } else {
                    report.injective = false;
                    bad = true;
                }
            }
            _ => {
                report.image_complete = false;
                bad = true;
            }
        }
        if !o.weight_ok {
            report.weight_preserving = false;
            bad = true;
        }
        if bad && report.counterexample.is_none() {
            report.counterexample = Some((o.object.clone(), shown));
        }
    }
    for (k, &count) in per_k.iter().enumerate() {
        if count != codomain_size(n, k as u32) {
            report.image_complete = false;
            if report.counterexample.is_none() {
                report.counterexample = Some((
                    format!("k = {k}"),
                    format!("{count} images, expected {}", codomain_size(n, k as u32)),
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{CombObject, ObjectClass};

    fn decorated(text: &str) -> DecoratedPermutation {
        match CombObject::parse(ObjectClass::Decorated, text).unwrap() {
            CombObject::Decorated(w) => w,
            _ => unreachable!(),
        }
    }

    fn signed(text: &str) -> SignedPermutation {
        match CombObject::parse(ObjectClass::Signed, text).unwrap() {
            CombObject::Signed(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn phi_small_table() {
        for (w, image) in PHI_BASE_CASES {
            assert_eq!(phi_map(&decorated(w)).unwrap().to_string(), image, "{w}");
        }
    }

    #[test]
    fn phi_worked_chain() {
        let chain = [
            ("1h", "[(1,2)] [] {1}"),
            ("1h 2", "[(1,2)] [(1,2)] {1}"),
            ("3h 1h 2", "[(1,3)(2,4)] [(1,2)] {1,3}"),
            ("3h 1h 4 2", "[(1,3)(2,4)] [(1,3)(2,4)] {1,3}"),
            ("3h 1h 4 2 5h", "[(1,3)(2,4)(5,6)] [(1,3)(2,4)] {1,3,5}"),
            (
                "3h 1h 4 2 6hc 5h",
                "[(1,3)(2,4)(5,8)(6,7)] [(1,3)(2,4)] {1,3,5,6}",
            ),
        ];
        for (w, image) in chain {
            assert_eq!(phi_map(&decorated(w)).unwrap().to_string(), image, "{w}");
        }
    }

    #[test]
    fn psi_small_table() {
        for (p, image) in PSI_BASE_CASES {
            assert_eq!(psi_map(&signed(p)).unwrap().to_string(), image, "{p}");
        }
    }

    #[test]
    fn psi_replay_chain() {
        // Each line follows from the previous one by a single insertion.
        let chain = [
            ("-1 2", "[(1,2)] [(1,2)] {1}"),
            ("-3 -1 2", "[(1,4)(2,3)] [(1,2)] {1,3}"),
            ("-3 -1 4 2", "[(1,4)(2,3)] [(1,3)(2,4)] {1,3}"),
            ("-3 -1 4 2 -5", "[(1,4)(2,3)(5,6)] [(1,3)(2,4)] {1,3,5}"),
            (
                "-3 -1 4 2 -6 -5",
                "[(1,4)(2,3)(5,8)(6,7)] [(1,3)(2,4)] {1,3,5,6}",
            ),
            (
                "-3 -1 4 2 -6 7 -5",
                "[(1,4)(2,3)(5,8)(6,9)(7,10)] [(1,3)(2,4)] {1,3,5,6,7}",
            ),
        ];
        for (p, image) in chain {
            assert_eq!(psi_map(&signed(p)).unwrap().to_string(), image, "{p}");
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(phi_map(&decorated("1 2c")).is_err());
        assert!(psi_map(&signed("1 1")).is_err());
    }

    #[test]
    fn exhaustive_small_n() {
        for n in 1..=5 {
            for map in [MapId::Phi, MapId::Psi] {
                let r = verify_bijection(map, n).unwrap();
                assert!(r.passed(), "{map} n={n}: {r:?}");
            }
        }
        assert!(verify_bijection(MapId::Phi, BIJECTION_MAX_N + 1).is_err());
    }

    #[test]
    fn codomain_sizes_sum_to_domain() {
        for n in 1..=7u32 {
            let total: u64 = (0..=n).map(|k| codomain_size(n, k)).sum();
            let expect = (1..=n as u64).product::<u64>() << n;
            assert_eq!(total, expect);
        }
    }
}
