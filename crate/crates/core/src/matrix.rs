//! Permutation matrices as views over an image table.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{Permutation, Sign};

/// Where the input point of a permutation is read off its matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Entry `(j, i)` is 1 iff `sigma(i) = j`; the matrix acts on column vectors.
    ColumnIsInput,
    /// Entry `(i, j)` is 1 iff `sigma(i) = j`; the transpose of `ColumnIsInput`.
    RowIsInput,
}

impl Convention {
    pub fn flipped(self) -> Convention {
        match self {
            Convention::ColumnIsInput => Convention::RowIsInput,
            Convention::RowIsInput => Convention::ColumnIsInput,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::ColumnIsInput => "column-is-input",
            Convention::RowIsInput => "row-is-input",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Convention {
    type Err = UnknownConvention;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "column-is-input" => Ok(Convention::ColumnIsInput),
            "row-is-input" => Ok(Convention::RowIsInput),
            _ => Err(UnknownConvention),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("convention must be `column-is-input` or `row-is-input`")]
pub struct UnknownConvention;

/// 0/1 matrix of a permutation; nothing is stored beyond the permutation itself.
#[derive(Debug, Clone, Copy)]
pub struct PermutationMatrix<'a> {
    perm: &'a Permutation,
    convention: Convention,
}

pub fn to_matrix(sigma: &Permutation, convention: Convention) -> PermutationMatrix<'_> {
    PermutationMatrix {
        perm: sigma,
        convention,
    }
}

impl<'a> PermutationMatrix<'a> {
    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn permutation(&self) -> &'a Permutation {
        self.perm
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        let hit = match self.convention {
            Convention::ColumnIsInput => self.perm.apply(col) == row,
            Convention::RowIsInput => self.perm.apply(row) == col,
        };
        u8::from(hit)
    }

    pub fn transpose(&self) -> PermutationMatrix<'a> {
        PermutationMatrix {
            perm: self.perm,
            convention: self.convention.flipped(),
        }
    }

    /// `(row, col)` of every 1, sorted by row.
    pub fn nonzeros(&self) -> Vec<(usize, usize)> {
        match self.convention {
            Convention::RowIsInput => self.perm.images().enumerate().collect(),
            Convention::ColumnIsInput => {
                let mut cols = vec![0usize; self.degree()];
                for (i, j) in self.perm.images().enumerate() {
                    cols[j] = i;
                }
                cols.into_iter().enumerate().collect()
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut rows = vec![vec![0u8; n]; n];
        for (r, c) in self.nonzeros() {
            rows[r][c] = 1;
        }
        rows
    }

    /// Sign of the determinant, computed by exact elimination over the dense
    /// entries rather than from the cycle structure.
    ///
    /// Materializes `N x N` integers; intended for moderate degrees.
    pub fn determinant_sign(&self) -> Sign {
        let dense: Vec<Vec<i64>> = self
            .to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(i64::from).collect())
            .collect();
        let det = determinant(dense).expect("permutation matrix entries stay in {-1, 0, 1}");
        Sign::from_i64(det).expect("a permutation matrix has determinant +1 or -1")
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
///
/// Returns `None` if an intermediate value overflows `i64`. Panics if the
/// matrix is not square.
pub fn determinant(mut a: Vec<Vec<i64>>) -> Option<i64> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(pivot) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, pivot);
            negate = !negate;
        }
        let pk = a[k][k];
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let lead = row[k];
            if lead == 0 && pk == prev {
                // the update leaves this row unchanged
                continue;
            }
            for j in k + 1..n {
                let t = row[j]
                    .checked_mul(pk)?
                    .checked_sub(lead.checked_mul(pivot_row[j])?)?;
                row[j] = t / prev;
            }
            row[k] = 0;
        }
        prev = pk;
    }
    let det = a[n - 1][n - 1];
    Some(if negate { -det } else { det })
}
