//! Perfect matchings of `[2n]` in standard form.

use std::fmt;

use super::insertion_tree;

/// A perfect matching listed as blocks `(i, j)`, `i < j`, with increasing
/// first coordinates. A block is marked when its larger entry is even.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    blocks: Vec<(u32, u32)>,
}

impl PerfectMatching {
    /// Wraps blocks as given; see [`PerfectMatching::is_valid`].
    pub fn new(blocks: Vec<(u32, u32)>) -> Self {
        Self { blocks }
    }

    /// Orients every pair and sorts the blocks into standard form.
    pub fn standardized<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut blocks: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        blocks.sort_unstable();
        Self { blocks }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.blocks.len();
        let ordered = self.blocks.windows(2).all(|w| w[0].0 < w[1].0)
            && self.blocks.iter().all(|&(a, b)| a < b);
        let starts = self.blocks.first().is_none_or(|b| b.0 == 1);
        ordered
            && starts
            && super::perm::covers_range(self.blocks.iter().flat_map(|&(a, b)| [a, b]), 2 * n)
    }

    pub fn is_marked(block: (u32, u32)) -> bool {
        block.1.is_multiple_of(2)
    }

    /// Blocks whose larger entry is even.
    pub fn el(&self) -> u32 {
        self.blocks.iter().filter(|&&b| Self::is_marked(b)).count() as u32
    }

    /// Blocks whose larger entry is odd.
    pub fn ol(&self) -> u32 {
        self.order() as u32 - self.el()
    }

    /// All perfect matchings of `[2n]`, lexicographic in standard form.
    pub fn all(n: u32) -> impl Iterator<Item = PerfectMatching> + Send {
        assert!(n <= 32, "ground set too large for the bitmask generator");
        let size = 2 * n;
        let full: u64 = if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        };
        let roots: Vec<(Vec<(u32, u32)>, u64)> = if n == 0 {
            vec![(Vec::new(), 0)]
        } else {
            (2..=size)
                .map(|j| (vec![(1, j)], 1u64 | (1u64 << (j - 1))))
                .collect()
        };
        insertion_tree(roots, n.max(1) as usize, move |(blocks, used)| {
            let free = !used & full;
            let i = free.trailing_zeros() + 1;
            (i + 1..=size)
                .filter(|&j| free & (1u64 << (j - 1)) != 0)
                .map(|j| {
                    let mut b = blocks.clone();
                    b.push((i, j));
                    (b, used | (1u64 << (i - 1)) | (1u64 << (j - 1)))
                })
                .collect()
        })
        .map(|(blocks, _)| PerfectMatching::new(blocks))
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.blocks {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}
