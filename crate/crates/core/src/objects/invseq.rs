//! s-inversion sequences.

use std::fmt;

use super::perm::write_joined;

/// A sequence `e` with `0 <= e_i < s_i` for a bound sequence `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence {
    bounds: Vec<u32>,
    e: Vec<u32>,
}

impl InversionSequence {
    pub fn new(bounds: Vec<u32>, e: Vec<u32>) -> Self {
        Self { bounds, e }
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn values(&self) -> &[u32] {
        &self.e
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.bounds.len() == self.e.len()
            && self
                .bounds
                .iter()
                .zip(&self.e)
                .all(|(&s, &e)| s > 0 && e < s)
    }

    /// All sequences below `bounds`, lexicographically.
    pub fn all(bounds: Vec<u32>) -> impl Iterator<Item = InversionSequence> + Send {
        let empty = bounds.contains(&0);
        let mut next = if empty {
            None
        } else {
            Some(vec![0u32; bounds.len()])
        };
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            let mut i = succ.len();
            while i > 0 {
                i -= 1;
                succ[i] += 1;
                if succ[i] < bounds[i] {
                    next = Some(succ);
                    break;
                }
                succ[i] = 0;
            }
            Some(InversionSequence::new(bounds.clone(), cur))
        })
    }

    /// `#{i : e_i/s_i < e_{i+1}/s_{i+1}}`, plus one when `e_1 > 0`.
    pub fn asc(&self) -> u32 {
        let lead = self.e.first().is_some_and(|&e| e > 0) as u32;
        let inner = (0..self.e.len().saturating_sub(1))
            .filter(|&i| {
                (self.e[i] as u64) * (self.bounds[i + 1] as u64)
                    < (self.e[i + 1] as u64) * (self.bounds[i] as u64)
            })
            .count() as u32;
        lead + inner
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.e.iter())?;
        f.write_str(" | s = ")?;
        write_joined(f, self.bounds.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascents() {
        assert_eq!(InversionSequence::new(vec![2], vec![1]).asc(), 1);
        assert_eq!(InversionSequence::new(vec![2], vec![0]).asc(), 0);
        assert_eq!(InversionSequence::new(vec![1, 3], vec![0, 2]).asc(), 1);
        assert_eq!(InversionSequence::new(vec![2, 4], vec![1, 2]).asc(), 1);
    }

    #[test]
    fn enumeration() {
        assert_eq!(InversionSequence::all(vec![1, 3, 5]).count(), 15);
        let first: Vec<String> = InversionSequence::all(vec![1, 2])
            .map(|e| e.to_string())
            .collect();
        assert_eq!(first, ["0 0 | s = 1 2", "0 1 | s = 1 2"]);
        assert_eq!(InversionSequence::all(vec![]).count(), 1);
        assert_eq!(InversionSequence::all(vec![2, 0]).count(), 0);
        assert!(!InversionSequence::new(vec![2], vec![2]).is_valid());
    }
}
