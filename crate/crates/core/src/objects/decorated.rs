//! Permutations decorated with hats and circles.

use std::collections::BTreeSet;
use std::fmt;

use super::insertion_tree;
use super::perm::{write_joined, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedEntry {
    pub value: u32,
    pub hat: bool,
    pub circle: bool,
}

impl DecoratedEntry {
    pub fn new(value: u32, hat: bool, circle: bool) -> Self {
        Self { value, hat, circle }
    }

    pub fn plain(value: u32) -> Self {
        Self::new(value, false, false)
    }
}

impl fmt::Display for DecoratedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.hat {
            f.write_str("h")?;
        }
        if self.circle {
            f.write_str("c")?;
        }
        Ok(())
    }
}

/// One replayed insertion: `entry` was placed before index `position` of the
/// previous word (`position == len` means appended).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    pub entry: DecoratedEntry,
    pub position: usize,
}

/// A decorated permutation built by the insertion rules: the new maximum
/// is appended plain or hatted, or goes in front of an entry sharing that
/// entry's hat flag, optionally circled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    entries: Vec<DecoratedEntry>,
}

impl DecoratedPermutation {
    pub fn new(entries: Vec<DecoratedEntry>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[DecoratedEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Undoes the insertions by removing the maximum until one entry is
    /// left. Returns the base entry and the steps in insertion order, or
    /// `None` when the word cannot have been built by the rules.
    pub fn history(&self) -> Option<(DecoratedEntry, Vec<InsertionStep>)> {
        let n = self.entries.len();
        if !super::perm::covers_range(self.entries.iter().map(|e| e.value), n) {
            return None;
        }
        let mut word = self.entries.clone();
        let mut steps = Vec::with_capacity(n.saturating_sub(1));
        while word.len() > 1 {
            let m = word.len() as u32;
            let pos = word.iter().position(|e| e.value == m)?;
            let e = word[pos];
            if pos + 1 == word.len() {
                if e.circle {
                    return None;
                }
            } else if e.hat != word[pos + 1].hat {
                return None;
            }
            word.remove(pos);
            steps.push(InsertionStep {
                entry: e,
                position: pos,
            });
        }
        let base = *word.first()?;
        if base.circle {
            return None;
        }
        steps.reverse();
        Some((base, steps))
    }

    pub fn is_valid(&self) -> bool {
        self.history().is_some()
    }

    /// All `2^n n!` decorated permutations of `[n]`, in insertion order.
    pub fn all(n: u32) -> impl Iterator<Item = DecoratedPermutation> + Send {
        let roots: Vec<Vec<DecoratedEntry>> = if n == 0 {
            vec![Vec::new()]
        } else {
            vec![
                vec![DecoratedEntry::plain(1)],
                vec![DecoratedEntry::new(1, true, false)],
            ]
        };
        insertion_tree(roots, n.max(1) as usize, |w: &Vec<DecoratedEntry>| {
            let m = w.len() as u32 + 1;
            let mut out = Vec::with_capacity(2 * m as usize);
            let mut push = |pos: usize, e: DecoratedEntry| {
                let mut c = w.clone();
                c.insert(pos, e);
                out.push(c);
            };
            for (i, v) in w.iter().enumerate() {
                push(i, DecoratedEntry::new(m, v.hat, false));
                push(i, DecoratedEntry::new(m, v.hat, true));
            }
            push(w.len(), DecoratedEntry::new(m, false, false));
            push(w.len(), DecoratedEntry::new(m, true, false));
            out
        })
        .map(DecoratedPermutation::new)
    }

    /// Ascents of `0 w_1 ... w_n`, so the leading position always counts.
    pub fn asc(&self) -> u32 {
        if self.entries.is_empty() {
            return 0;
        }
        1 + self
            .entries
            .windows(2)
            .filter(|p| p[0].value < p[1].value)
            .count() as u32
    }

    pub fn hat(&self) -> u32 {
        self.entries.iter().filter(|e| e.hat).count() as u32
    }

    /// Values carrying a hat.
    pub fn hat_values(&self) -> BTreeSet<u32> {
        self.entries
            .iter()
            .filter(|e| e.hat)
            .map(|e| e.value)
            .collect()
    }

    /// The underlying permutation, decorations dropped.
    pub fn underlying(&self) -> Permutation {
        Permutation::new(self.entries.iter().map(|e| e.value).collect())
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.entries.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> DecoratedPermutation {
        DecoratedPermutation::new(
            text.split_whitespace()
                .map(|t| {
                    let digits: String = t.chars().take_while(char::is_ascii_digit).collect();
                    DecoratedEntry::new(digits.parse().unwrap(), t.contains('h'), t.contains('c'))
                })
                .collect(),
        )
    }

    #[test]
    fn two_letter_words() {
        let mut p2: Vec<String> = DecoratedPermutation::all(2)
            .map(|w| w.to_string())
            .collect();
        p2.sort();
        let mut listed = vec![
            "1 2", "1 2h", "1h 2", "1h 2h", "2 1", "2c 1", "2h 1h", "2hc 1h",
        ];
        listed.sort();
        assert_eq!(p2, listed);
    }

    #[test]
    fn counts_and_validity() {
        assert_eq!(DecoratedPermutation::all(4).count(), 384);
        assert!(DecoratedPermutation::all(4).all(|w| w.is_valid()));
        assert!(w("3h 1h 4 2 6hc 5h").is_valid());
        assert!(!w("1 2c").is_valid());
        assert!(!w("1c").is_valid());
        assert!(!w("2h 1").is_valid());
        assert!(!w("1 3").is_valid());
    }

    #[test]
    fn children_of_a_word() {
        let base = w("3h 1h 4 2");
        let mut kids: Vec<String> = DecoratedPermutation::all(5)
            .filter(|c| {
                let mut entries = c.entries().to_vec();
                entries.retain(|e| e.value != 5);
                entries == base.entries()
            })
            .map(|c| c.to_string())
            .collect();
        kids.sort();
        let mut listed = vec![
            "3h 1h 4 2 5",
            "3h 1h 4 2 5h",
            "3h 1h 4 5 2",
            "3h 1h 4 5c 2",
            "3h 1h 5 4 2",
            "3h 1h 5c 4 2",
            "3h 5h 1h 4 2",
            "3h 5hc 1h 4 2",
            "5h 3h 1h 4 2",
            "5hc 3h 1h 4 2",
        ];
        listed.sort();
        assert_eq!(kids, listed);
    }

    #[test]
    fn statistics() {
        let x = w("5hc 3h 1h 4 2");
        assert_eq!(
            x.hat_values().into_iter().collect::<Vec<_>>(),
            vec![1, 3, 5]
        );
        assert_eq!(x.hat(), 3);
        assert_eq!(w("1 2 3 4").asc(), 4);
        assert_eq!(x.underlying().to_string(), "5 3 1 4 2");
    }

    #[test]
    fn history_replays() {
        let (base, steps) = w("3h 1h 4 2 6hc 5h").history().unwrap();
        assert_eq!(base, DecoratedEntry::new(1, true, false));
        let positions: Vec<usize> = steps.iter().map(|s| s.position).collect();
        assert_eq!(positions, vec![1, 0, 2, 4, 4]);
    }
}
