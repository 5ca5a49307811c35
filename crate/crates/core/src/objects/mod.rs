//! The seven object classes: generation, validation, text encodings and
//! statistics.

mod decorated;
mod involution;
mod invseq;
mod matching;
mod perm;
mod stirling;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

pub use decorated::{DecoratedEntry, DecoratedPermutation, InsertionStep};
pub use involution::{count_paired_excedance_involutions, PAIRED_EXCEDANCE_MAX_N};
pub use invseq::InversionSequence;
pub use matching::PerfectMatching;
pub use perm::{Permutation, SignedPermutation};
pub use stirling::{reduce, CycleStirling, StirlingWord};

/// Depth-first walk of an insertion tree. `roots` sit at level 1 and leaves
/// at level `depth` are yielded in order.
pub(crate) struct InsertionTree<T, F> {
    stack: Vec<std::vec::IntoIter<T>>,
    depth: usize,
    expand: F,
}

pub(crate) fn insertion_tree<T, F>(roots: Vec<T>, depth: usize, expand: F) -> InsertionTree<T, F>
where
    F: FnMut(&T) -> Vec<T>,
{
    InsertionTree {
        stack: vec![roots.into_iter()],
        depth,
        expand,
    }
}

impl<T, F: FnMut(&T) -> Vec<T>> Iterator for InsertionTree<T, F> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        loop {
            let level = self.stack.len();
            let top = self.stack.last_mut()?;
            match top.next() {
                None => {
                    self.stack.pop();
                }
                Some(t) if level == self.depth => return Some(t),
                Some(t) => {
                    let kids = (self.expand)(&t);
                    self.stack.push(kids.into_iter());
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectClass {
    Permutation,
    Signed,
    Matching,
    Stirling,
    Stirling2,
    Decorated,
    InvSeq,
}

impl ObjectClass {
    pub const ALL: [ObjectClass; 7] = [
        ObjectClass::Permutation,
        ObjectClass::Signed,
        ObjectClass::Matching,
        ObjectClass::Stirling,
        ObjectClass::Stirling2,
        ObjectClass::Decorated,
        ObjectClass::InvSeq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::Permutation => "permutation",
            ObjectClass::Signed => "signed",
            ObjectClass::Matching => "matching",
            ObjectClass::Stirling => "stirling",
            ObjectClass::Stirling2 => "stirling2",
            ObjectClass::Decorated => "decorated",
            ObjectClass::InvSeq => "invseq",
        }
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ObjectClass::ALL.iter().map(|c| c.name()).collect();
                Error::Usage(format!(
                    "unknown class `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Any object of the seven classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CombObject {
    Permutation(Permutation),
    Signed(SignedPermutation),
    Matching(PerfectMatching),
    Stirling(StirlingWord),
    Stirling2(CycleStirling),
    Decorated(DecoratedPermutation),
    InvSeq(InversionSequence),
}

/// Streams every object of `class` and size `n` exactly once.
///
/// `bounds` is required for, and only accepted with, inversion sequences.
pub fn generate(
    class: ObjectClass,
    n: u32,
    bounds: Option<&[u32]>,
) -> Result<Box<dyn Iterator<Item = CombObject> + Send>> {
    if n < 1 {
        return Err(Error::Range(format!("objects need n >= 1, got {n}")));
    }
    if class != ObjectClass::InvSeq && bounds.is_some() {
        return Err(Error::Usage(format!(
            "a bound sequence only applies to invseq, not {class}"
        )));
    }
    Ok(match class {
        ObjectClass::Permutation => Box::new(Permutation::all(n).map(CombObject::Permutation)),
        ObjectClass::Signed => Box::new(SignedPermutation::all(n).map(CombObject::Signed)),
        ObjectClass::Matching => Box::new(PerfectMatching::all(n).map(CombObject::Matching)),
        ObjectClass::Stirling => Box::new(StirlingWord::all(n).map(CombObject::Stirling)),
        ObjectClass::Stirling2 => Box::new(CycleStirling::all(n).map(CombObject::Stirling2)),
        ObjectClass::Decorated => Box::new(DecoratedPermutation::all(n).map(CombObject::Decorated)),
        ObjectClass::InvSeq => {
            let s = bounds.ok_or_else(|| {
                Error::Usage("inversion sequences need a bound sequence s".into())
            })?;
            if s.len() != n as usize {
                return Err(Error::Usage(format!(
                    "bound sequence has length {} but n = {n}",
                    s.len()
                )));
            }
            if s.contains(&0) {
                return Err(Error::Usage("bounds must be positive".into()));
            }
            Box::new(InversionSequence::all(s.to_vec()).map(CombObject::InvSeq))
        }
    })
}

fn parse_list<T: FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad {what} entry `{t}`")))
        })
        .collect()
}

/// Splits `(..)(..)` groups; the contents are returned untrimmed.
fn parse_groups(text: &str) -> Result<Vec<&str>> {
    let mut rest = text.trim();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` at `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
        out.push(&body[..close]);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

fn parse_decorated_entry(tok: &str) -> Result<DecoratedEntry> {
    let split = tok.find(|c: char| !c.is_ascii_digit()).unwrap_or(tok.len());
    let (digits, flags) = tok.split_at(split);
    let value = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad decorated entry `{tok}`")))?;
    let (mut hat, mut circle) = (false, false);
    for c in flags.chars() {
        match c {
            'h' if !hat => hat = true,
            'c' if !circle => circle = true,
            _ => return Err(Error::Parse(format!("bad decoration in `{tok}`"))),
        }
    }
    Ok(DecoratedEntry::new(value, hat, circle))
}

impl CombObject {
    pub fn class(&self) -> ObjectClass {
        match self {
            CombObject::Permutation(_) => ObjectClass::Permutation,
            CombObject::Signed(_) => ObjectClass::Signed,
            CombObject::Matching(_) => ObjectClass::Matching,
            CombObject::Stirling(_) => ObjectClass::Stirling,
            CombObject::Stirling2(_) => ObjectClass::Stirling2,
            CombObject::Decorated(_) => ObjectClass::Decorated,
            CombObject::InvSeq(_) => ObjectClass::InvSeq,
        }
    }

    /// Parses the canonical encoding of an object of `class`. The result is
    /// not validated; see [`CombObject::is_valid`].
    pub fn parse(class: ObjectClass, text: &str) -> Result<CombObject> {
        let text = text.trim();
        Ok(match class {
            ObjectClass::Permutation => {
                CombObject::Permutation(Permutation::new(parse_list(text, "permutation")?))
            }
            ObjectClass::Signed => CombObject::Signed(SignedPermutation::new(parse_list(
                text,
                "signed permutation",
            )?)),
            ObjectClass::Matching => {
                let blocks = parse_groups(text)?
                    .into_iter()
                    .map(|g| {
                        let (a, b) = g
                            .split_once(',')
                            .ok_or_else(|| Error::Parse(format!("block `({g})` needs a comma")))?;
                        let p = |s: &str| {
                            s.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad block `({g})`")))
                        };
                        Ok((p(a)?, p(b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                CombObject::Matching(PerfectMatching::new(blocks))
            }
            ObjectClass::Stirling => {
                CombObject::Stirling(StirlingWord::new(parse_list(text, "Stirling word")?))
            }
            ObjectClass::Stirling2 => {
                let cycles = parse_groups(text)?
                    .into_iter()
                    .map(|g| parse_list(g, "cycle"))
                    .collect::<Result<Vec<_>>>()?;
                CombObject::Stirling2(CycleStirling::new(cycles))
            }
            ObjectClass::Decorated => CombObject::Decorated(DecoratedPermutation::new(
                text.split_whitespace()
                    .map(parse_decorated_entry)
                    .collect::<Result<_>>()?,
            )),
            ObjectClass::InvSeq => {
                let (e, s) = text
                    .split_once('|')
                    .ok_or_else(|| Error::Parse("expected `e | s = bounds`".into()))?;
                let s = s
                    .trim()
                    .strip_prefix('s')
                    .and_then(|r| r.trim_start().strip_prefix('='))
                    .ok_or_else(|| Error::Parse("expected `s =` after `|`".into()))?;
                CombObject::InvSeq(InversionSequence::new(
                    parse_list(s, "bound")?,
                    parse_list(e, "sequence")?,
                ))
            }
        })
    }

    pub fn is_valid(&self) -> bool {
        match self {
            CombObject::Permutation(p) => p.is_valid(),
            CombObject::Signed(p) => p.is_valid(),
            CombObject::Matching(m) => m.is_valid(),
            CombObject::Stirling(w) => w.is_valid(),
            CombObject::Stirling2(c) => c.is_valid(),
            CombObject::Decorated(w) => w.is_valid(),
            CombObject::InvSeq(e) => e.is_valid(),
        }
    }

    /// Every statistic defined for the class, in a fixed key order.
    pub fn stats(&self) -> Map<String, Value> {
        let mut m = Map::new();
        let mut put = |k: &str, v: Value| {
            m.insert(k.to_string(), v);
        };
        match self {
            CombObject::Permutation(p) => {
                put("des_A", json!(p.des_a()));
                put("asc", json!(p.asc()));
                put("exc", json!(p.exc()));
                put("anti_exc", json!(p.anti_exc()));
                put("rlmin", json!(p.rlmin()));
            }
            CombObject::Signed(p) => {
                put("des_B", json!(p.des_b()));
                put("rlmin", json!(p.rlmin()));
                put("bar", json!(p.bar()));
                put("bar_set", json!(p.bar_set()));
                put("nbar_set", json!(p.nbar_set()));
                put("blocks", json!(p.blocks()));
            }
            CombObject::Matching(mt) => {
                put("el", json!(mt.el()));
                put("ol", json!(mt.ol()));
            }
            CombObject::Stirling(w) => {
                put("descents", json!(w.descents()));
                put("ap", json!(w.ap()));
                put("desi", json!(w.desi()));
            }
            CombObject::Stirling2(c) => {
                put("cplat", json!(c.cplat()));
                put("casc", json!(c.casc()));
                put("cap", json!(c.cap()));
                put("cyc", json!(c.cyc()));
                put("fix", json!(c.fix()));
            }
            CombObject::Decorated(w) => {
                put("asc", json!(w.asc()));
                put("hat", json!(w.hat()));
                put("hat_value_set", json!(w.hat_values()));
            }
            CombObject::InvSeq(e) => {
                put("asc", json!(e.asc()));
            }
        }
        m
    }
}

impl fmt::Display for CombObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombObject::Permutation(p) => p.fmt(f),
            CombObject::Signed(p) => p.fmt(f),
            CombObject::Matching(m) => m.fmt(f),
            CombObject::Stirling(w) => w.fmt(f),
            CombObject::Stirling2(c) => c.fmt(f),
            CombObject::Decorated(w) => w.fmt(f),
            CombObject::InvSeq(e) => e.fmt(f),
        }
    }
}
