//! Permutations and signed permutations.

use std::fmt;

use super::insertion_tree;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

pub(crate) fn covers_range<I: IntoIterator<Item = u32>>(values: I, n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for v in values {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
    }
    count == n
}

impl Permutation {
    /// Wraps a word without checking it; see [`Permutation::is_valid`].
    pub fn new(word: Vec<u32>) -> Self {
        Self { word }
    }

    pub fn identity(n: u32) -> Self {
        Self::new((1..=n).collect())
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        covers_range(self.word.iter().copied(), self.word.len())
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: u32) -> impl Iterator<Item = Permutation> + Send {
        let roots: Vec<Vec<u32>> = if n == 0 {
            vec![Vec::new()]
        } else {
            (1..=n).map(|v| vec![v]).collect()
        };
        insertion_tree(roots, n.max(1) as usize, move |w: &Vec<u32>| {
            (1..=n)
                .filter(|v| !w.contains(v))
                .map(|v| {
                    let mut c = w.clone();
                    c.push(v);
                    c
                })
                .collect()
        })
        .map(Permutation::new)
    }

    pub fn des_a(&self) -> u32 {
        self.word.windows(2).filter(|p| p[0] > p[1]).count() as u32
    }

    /// Plain ascent count, without a leading convention.
    pub fn asc(&self) -> u32 {
        self.word.windows(2).filter(|p| p[0] < p[1]).count() as u32
    }

    pub fn exc(&self) -> u32 {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize > i + 1)
            .count() as u32
    }

    pub fn anti_exc(&self) -> u32 {
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| (v as usize) < i + 1)
            .count() as u32
    }

    /// Number of right-to-left minima.
    pub fn rlmin(&self) -> u32 {
        let mut min = u32::MAX;
        let mut count = 0;
        for &v in self.word.iter().rev() {
            if v < min {
                min = v;
                count += 1;
            }
        }
        count
    }

    pub fn is_derangement(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize != i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.word.iter())
    }
}

pub(crate) fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A signed permutation of `±[n]`; `π(0) = 0` is implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    word: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        covers_range(self.word.iter().map(|v| v.unsigned_abs()), self.word.len())
    }

    /// All signed permutations of `[n]`, lexicographic in the signed values.
    pub fn all(n: u32) -> impl Iterator<Item = SignedPermutation> + Send {
        let n = n as i32;
        let alphabet: Vec<i32> = (-n..=-1).chain(1..=n).collect();
        let roots: Vec<Vec<i32>> = if n == 0 {
            vec![Vec::new()]
        } else {
            alphabet.iter().map(|&v| vec![v]).collect()
        };
        insertion_tree(roots, n.max(1) as usize, move |w: &Vec<i32>| {
            alphabet
                .iter()
                .filter(|v| !w.iter().any(|u| u.abs() == v.abs()))
                .map(|&v| {
                    let mut c = w.clone();
                    c.push(v);
                    c
                })
                .collect()
        })
        .map(SignedPermutation::new)
    }

    /// Type B descents, counting position 0 against `π(0) = 0`.
    pub fn des_b(&self) -> u32 {
        let mut prev = 0;
        let mut count = 0;
        for &v in &self.word {
            if prev > v {
                count += 1;
            }
            prev = v;
        }
        count
    }

    fn rlmin_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.word.len()];
        let mut min = u32::MAX;
        for (i, v) in self.word.iter().enumerate().rev() {
            if v.unsigned_abs() < min {
                min = v.unsigned_abs();
                flags[i] = true;
            }
        }
        flags
    }

    /// Entries smaller in absolute value than everything to their right.
    pub fn rlmin_set(&self) -> Vec<i32> {
        self.word
            .iter()
            .zip(self.rlmin_flags())
            .filter(|(_, f)| *f)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn rlmin(&self) -> u32 {
        self.rlmin_flags().iter().filter(|&&f| f).count() as u32
    }

    /// Decomposition into maximal segments each ending at a right-to-left minimum.
    pub fn blocks(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        for (&v, end) in self.word.iter().zip(self.rlmin_flags()) {
            cur.push(v);
            if end {
                out.push(std::mem::take(&mut cur));
            }
        }
        out
    }

    /// Membership in a bar-block, per position.
    pub fn bar_flags(&self) -> Vec<bool> {
        let mut flags = Vec::with_capacity(self.word.len());
        for b in self.blocks() {
            let neg = *b.last().unwrap() < 0;
            flags.extend(std::iter::repeat_n(neg, b.len()));
        }
        flags
    }

    /// Elements of bar-blocks, sorted numerically.
    pub fn bar_set(&self) -> Vec<i32> {
        let mut s: Vec<i32> = self
            .word
            .iter()
            .zip(self.bar_flags())
            .filter(|(_, f)| *f)
            .map(|(&v, _)| v)
            .collect();
        s.sort_unstable();
        s
    }

    pub fn nbar_set(&self) -> Vec<i32> {
        let mut s: Vec<i32> = self
            .word
            .iter()
            .zip(self.bar_flags())
            .filter(|(_, f)| !*f)
            .map(|(&v, _)| v)
            .collect();
        s.sort_unstable();
        s
    }

    pub fn bar(&self) -> u32 {
        self.bar_flags().iter().filter(|&&f| f).count() as u32
    }

    /// Absolute values of the bar-block elements.
    pub fn bar_magnitudes(&self) -> std::collections::BTreeSet<u32> {
        self.bar_set().iter().map(|v| v.unsigned_abs()).collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.word.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_statistics() {
        let p = Permutation::new(vec![3, 2, 1]);
        assert_eq!(
            (p.des_a(), p.asc(), p.exc(), p.anti_exc(), p.rlmin()),
            (2, 0, 1, 1, 1)
        );
        assert!(!p.is_derangement());
        assert!(Permutation::new(vec![2, 3, 1]).is_derangement());
        assert!(!Permutation::new(vec![1, 1]).is_valid());
        assert!(!Permutation::new(vec![0, 1]).is_valid());
    }

    #[test]
    fn lexicographic_generation() {
        let all: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]);
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn signed_worked_example() {
        let p = SignedPermutation::new(vec![-3, -1, 4, 2, -6, 7, -5]);
        assert!(p.is_valid());
        assert_eq!(p.rlmin_set(), vec![-1, 2, -5]);
        assert_eq!(p.blocks(), vec![vec![-3, -1], vec![4, 2], vec![-6, 7, -5]]);
        assert_eq!(p.bar_set(), vec![-6, -5, -3, -1, 7]);
        assert_eq!(p.nbar_set(), vec![2, 4]);
        assert_eq!(p.bar(), 5);
        assert_eq!(
            p.bar_magnitudes().into_iter().collect::<Vec<_>>(),
            vec![1, 3, 5, 6, 7]
        );
    }

    #[test]
    fn signed_identity_and_counts() {
        let p = SignedPermutation::new(vec![1, 2, 3, 4]);
        assert_eq!((p.des_b(), p.rlmin(), p.bar()), (0, 4, 0));
        assert_eq!(SignedPermutation::new(vec![-1]).des_b(), 1);
        assert_eq!(SignedPermutation::all(3).count(), 48);
        assert!(SignedPermutation::all(3).all(|p| p.is_valid()));
    }
}
