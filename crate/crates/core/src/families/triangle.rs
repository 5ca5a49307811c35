use num_bigint::BigInt;

use crate::algebra::{ExactPoly, Var};

/// Rows of a coefficient triangle; row `n` holds `T(n, 0..)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    pub name: String,
    pub rows: Vec<Vec<BigInt>>,
}

impl TriangleTable {
    pub fn new(name: impl Into<String>, rows: Vec<Vec<BigInt>>) -> Self {
        Self {
            name: name.into(),
            rows,
        }
    }

    /// Row `n` read as a polynomial in `x`.
    pub fn poly(&self, n: usize) -> ExactPoly {
        ExactPoly::from_univariate(Var::X, &self.rows[n])
    }

    /// One line per row: `n,T(n,0),T(n,1),...`.
    pub fn to_csv(&self) -> String {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                format!("{n},{}\n", cells.join(","))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let t = TriangleTable::new("t", vec![vec![1.into()], vec![0.into(), 1.into()]]);
        assert_eq!(t.to_csv(), "0,1\n1,0,1\n");
        assert_eq!(t.poly(1), ExactPoly::var(Var::X));
    }
}
