use super::LinAlgError;

/// Square integer matrix acting on `V` by columns: `g e_j = Σ_i g[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    entries: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![0; n]; n];
        for (k, row) in entries.iter_mut().enumerate() {
            row[k] = 1;
        }
        IntMatrix { entries }
    }

    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self, LinAlgError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(LinAlgError::Constraint("matrix is not square".into()));
        }
        Ok(IntMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row - 1][col - 1]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: i64) {
        self.entries[row - 1][col - 1] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Nonzero entries of column `j` as `(row, value)`, 1-based.
    pub fn column(&self, j: usize) -> Vec<(u8, i64)> {
        (1..=self.dim())
            .filter_map(|i| {
                let v = self.get(i, j);
                (v != 0).then_some((i as u8, v))
            })
            .collect()
    }

    /// Nonzero entries of row `i` as `(col, value)`, 1-based.
    pub fn row(&self, i: usize) -> Vec<(u8, i64)> {
        (1..=self.dim())
            .filter_map(|j| {
                let v = self.get(i, j);
                (v != 0).then_some((j as u8, v))
            })
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim();
        let mut out = vec![vec![0i64; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..n)
                    .map(|t| self.entries[i][t] * other.entries[t][j])
                    .sum();
            }
        }
        IntMatrix { entries: out }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim();
        IntMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim())
    }
}
