//! Stirling permutations and their cycle-form analogue.

use std::fmt;

use super::insertion_tree;
use super::perm::write_joined;

/// Replaces the i-th smallest distinct value by `i`.
pub fn reduce(word: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    word.iter()
        .map(|v| distinct.binary_search(v).unwrap() as u32 + 1)
        .collect()
}

/// True when every value of `1..=len/2` occurs twice and everything between
/// the two copies of `i` exceeds `i`.
fn is_stirling(word: &[u32]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let n = word.len() / 2;
    let mut first = vec![usize::MAX; n + 1];
    let mut seen = vec![0u8; n + 1];
    for (i, &v) in word.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > n {
            return false;
        }
        seen[v] += 1;
        match seen[v] {
            1 => first[v] = i,
            2 => {
                if word[first[v] + 1..i].iter().any(|&u| u as usize <= v) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// A Stirling permutation of the multiset `{1,1,...,n,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingWord {
    word: Vec<u32>,
}

impl StirlingWord {
    pub fn new(word: Vec<u32>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn order(&self) -> usize {
        self.word.len() / 2
    }

    pub fn is_valid(&self) -> bool {
        is_stirling(&self.word)
    }

    /// All Stirling permutations of order `n`, built by inserting `mm` into
    /// each of the `2m - 1` gaps, leftmost gap first.
    pub fn all(n: u32) -> impl Iterator<Item = StirlingWord> + Send {
        let roots: Vec<Vec<u32>> = if n == 0 {
            vec![Vec::new()]
        } else {
            vec![vec![1, 1]]
        };
        insertion_tree(roots, n.max(1) as usize, |w: &Vec<u32>| {
            let m = w.len() as u32 / 2 + 1;
            (0..=w.len())
                .map(|i| {
                    let mut c = Vec::with_capacity(w.len() + 2);
                    c.extend_from_slice(&w[..i]);
                    c.extend([m, m]);
                    c.extend_from_slice(&w[i..]);
                    c
                })
                .collect()
        })
        .map(StirlingWord::new)
    }

    /// Indices `i` with `σ_i > σ_{i+1}`, plus the final index.
    pub fn descents(&self) -> u32 {
        if self.word.is_empty() {
            return 0;
        }
        self.word.windows(2).filter(|p| p[0] > p[1]).count() as u32 + 1
    }

    /// Indices with `σ_{i-1} < σ_i = σ_{i+1}`, where `σ_0 = 0`.
    pub fn ap(&self) -> u32 {
        let mut prev = 0;
        let mut count = 0;
        for p in self.word.windows(2) {
            if prev < p[0] && p[0] == p[1] {
                count += 1;
            }
            prev = p[0];
        }
        count
    }

    /// Descent positions `i` (with `σ_{2n+1} = 0`) where `σ_{i+1}` lies
    /// below every earlier entry. The prefix then holds both copies of each
    /// of its values, and its span `[min, max]` is the descent interval.
    pub fn desi(&self) -> u32 {
        let mut low = u32::MAX;
        let mut total = 0;
        for (i, &v) in self.word.iter().enumerate() {
            low = low.min(v);
            let next = self.word.get(i + 1).copied().unwrap_or(0);
            if next < low {
                total += 1;
            }
        }
        total
    }
}

impl fmt::Display for StirlingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.word.iter())
    }
}

/// A Stirling permutation of the second kind in standard cycle form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStirling {
    cycles: Vec<Vec<u32>>,
}

impl CycleStirling {
    pub fn new(cycles: Vec<Vec<u32>>) -> Self {
        Self { cycles }
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn order(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_valid(&self) -> bool {
        let n = self.order();
        let mut owner = vec![usize::MAX; n + 1];
        let mut copies = vec![0u8; n + 1];
        for (ci, c) in self.cycles.iter().enumerate() {
            if c.is_empty() {
                return false;
            }
            for &v in c {
                let v = v as usize;
                if v == 0 || v > n || copies[v] == 2 {
                    return false;
                }
                if copies[v] == 1 && owner[v] != ci {
                    return false;
                }
                owner[v] = ci;
                copies[v] += 1;
            }
        }
        if copies[1..].iter().any(|&c| c != 2) {
            return false;
        }
        let heads_ok = self.cycles.iter().all(|c| c.iter().all(|&v| v >= c[0]));
        let sorted = self.cycles.windows(2).all(|w| w[0][0] < w[1][0]);
        heads_ok && sorted && self.cycles.iter().all(|c| is_stirling(&reduce(c)))
    }

    /// All elements of order `n`: `mm` goes right after any entry of any
    /// cycle, or forms a new last cycle.
    pub fn all(n: u32) -> impl Iterator<Item = CycleStirling> + Send {
        let roots: Vec<Vec<Vec<u32>>> = if n == 0 {
            vec![Vec::new()]
        } else {
            vec![vec![vec![1, 1]]]
        };
        insertion_tree(roots, n.max(1) as usize, |cs: &Vec<Vec<u32>>| {
            let m = cs.iter().map(Vec::len).sum::<usize>() as u32 / 2 + 1;
            let mut out = Vec::with_capacity(2 * m as usize - 1);
            for (ci, c) in cs.iter().enumerate() {
                for j in 1..=c.len() {
                    let mut next = cs.clone();
                    next[ci].splice(j..j, [m, m]);
                    out.push(next);
                }
            }
            let mut next = cs.clone();
            next.push(vec![m, m]);
            out.push(next);
            out
        })
        .map(CycleStirling::new)
    }

    pub fn cplat(&self) -> u32 {
        self.cycles
            .iter()
            .map(|c| c.windows(2).filter(|p| p[0] == p[1]).count() as u32)
            .sum()
    }

    pub fn casc(&self) -> u32 {
        self.cycles
            .iter()
            .map(|c| c.windows(2).filter(|p| p[0] < p[1]).count() as u32)
            .sum()
    }

    /// Cycle ascent plateaus: interior `c_{i-1} < c_i = c_{i+1}`.
    pub fn cap(&self) -> u32 {
        self.cycles
            .iter()
            .map(|c| c.windows(3).filter(|t| t[0] < t[1] && t[1] == t[2]).count() as u32)
            .sum()
    }

    pub fn cyc(&self) -> u32 {
        self.cycles.len() as u32
    }

    /// Number of cycles of the form `(k k)`.
    pub fn fix(&self) -> u32 {
        self.cycles.iter().filter(|c| c.len() == 2).count() as u32
    }

    pub fn is_derangement(&self) -> bool {
        self.fix() == 0
    }
}

impl fmt::Display for CycleStirling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            write_joined(f, c.iter())?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compact(c: &CycleStirling) -> String {
        c.cycles()
            .iter()
            .map(|cy| format!("({})", cy.iter().map(u32::to_string).collect::<String>()))
            .collect()
    }

    #[test]
    fn reduction() {
        assert_eq!(
            reduce(&[3, 3, 2, 2, 4, 5, 4, 7]),
            vec![2, 2, 1, 1, 3, 4, 3, 5]
        );
        assert_eq!(reduce(&[1, 1]), vec![1, 1]);
    }

    #[test]
    fn stirling_word_statistics() {
        let s = StirlingWord::new(vec![4, 4, 2, 2, 3, 3, 1, 1]);
        assert!(s.is_valid());
        assert_eq!(s.desi(), 3);
        let t = StirlingWord::new(vec![1, 1, 3, 3, 2, 2]);
        assert!(t.is_valid());
        assert_eq!(t.desi(), 1);
        assert_eq!(StirlingWord::new(vec![2, 2, 1, 1, 3, 3]).ap(), 2);
        assert!(!StirlingWord::new(vec![1, 2, 1, 2]).is_valid());
        assert_eq!(StirlingWord::new(vec![1, 2, 2, 1]).descents(), 2);
    }

    #[test]
    fn desi_grows_only_under_front_insertion() {
        // 2 4 4 2 1 3 3 1 comes from 2 2 1 3 3 1 by an inner insertion of 44,
        // so it keeps desi = 2 although its first prefix {2, 4} has a gap.
        assert_eq!(StirlingWord::new(vec![2, 2, 1, 3, 3, 1]).desi(), 2);
        assert_eq!(StirlingWord::new(vec![2, 4, 4, 2, 1, 3, 3, 1]).desi(), 2);
        assert_eq!(StirlingWord::new(vec![4, 4, 2, 2, 1, 3, 3, 1]).desi(), 3);
        for w in StirlingWord::all(4) {
            let word = w.word();
            for i in 0..=word.len() {
                let mut grown = word.to_vec();
                grown.splice(i..i, [5, 5]);
                let expected = w.desi() + u32::from(i == 0);
                assert_eq!(StirlingWord::new(grown).desi(), expected, "{w} at {i}");
            }
        }
    }

    #[test]
    fn stirling_word_generation() {
        let q2: Vec<String> = StirlingWord::all(2).map(|w| w.to_string()).collect();
        assert_eq!(q2, ["2 2 1 1", "1 2 2 1", "1 1 2 2"]);
        assert_eq!(StirlingWord::all(5).count(), 945);
        assert!(StirlingWord::all(4).all(|w| w.is_valid()));
    }

    #[test]
    fn cycle_statistics() {
        let s = CycleStirling::new(vec![vec![1, 2, 2, 1], vec![3, 3]]);
        assert!(s.is_valid());
        assert_eq!(
            (s.cplat(), s.casc(), s.cap(), s.cyc(), s.fix()),
            (2, 1, 1, 2, 1)
        );
        let s = CycleStirling::new(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!((s.cap(), s.cyc(), s.fix()), (0, 2, 2));
        assert_eq!(
            CycleStirling::new(vec![vec![1, 1, 3, 3], vec![2, 2]]).fix(),
            1
        );
    }

    #[test]
    fn cycle_validity() {
        assert!(!CycleStirling::new(vec![vec![2, 2], vec![1, 1]]).is_valid());
        assert!(!CycleStirling::new(vec![vec![2, 1, 1, 2]]).is_valid());
        assert!(!CycleStirling::new(vec![vec![1, 2], vec![1, 2]]).is_valid());
        assert!(!CycleStirling::new(vec![vec![1, 2, 1, 2]]).is_valid());
        assert!(!CycleStirling::new(vec![vec![1, 1], vec![]]).is_valid());
    }

    #[test]
    fn second_kind_listings() {
        let mut q2: Vec<String> = CycleStirling::all(2).map(|c| compact(&c)).collect();
        q2.sort();
        assert_eq!(q2, ["(11)(22)", "(1122)", "(1221)"]);
        let mut q3: Vec<String> = CycleStirling::all(3).map(|c| compact(&c)).collect();
        q3.sort();
        let mut listed = vec![
            "(11)(22)(33)",
            "(11)(2233)",
            "(11)(2332)",
            "(1133)(22)",
            "(1331)(22)",
            "(1122)(33)",
            "(112233)",
            "(112332)",
            "(113322)",
            "(133122)",
            "(1221)(33)",
            "(122133)",
            "(122331)",
            "(123321)",
            "(133221)",
        ];
        listed.sort();
        assert_eq!(q3, listed);
        assert_eq!(CycleStirling::all(6).count(), 10395);
        assert!(CycleStirling::all(5).all(|c| c.is_valid()));
    }
}
