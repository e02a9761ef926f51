//! Sparse integer matrices with arbitrary-precision entries.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

/// Coordinate-format matrix; entries sorted by `(row, col)`, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, BigInt)>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: Vec::new() }
    }

    /// Sums repeated coordinates and drops zeros.
    ///
    /// Panics if a coordinate is out of range.
    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, BigInt)>) -> Self {
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            *acc.entry((r, c)).or_insert_with(BigInt::zero) += v;
        }
        let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|((r, c), v)| (r, c, v)).collect();
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut triplets = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    triplets.push((r, c, BigInt::from(v)));
                }
            }
        }
        Self::from_triplets(rows.len(), cols, triplets)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Fraction of stored entries; 0 for empty shapes.
    pub fn fill(&self) -> f64 {
        let cells = self.rows * self.cols;
        if cells == 0 {
            0.0
        } else {
            self.entries.len() as f64 / cells as f64
        }
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries
            .binary_search_by(|(r, c, _)| (*r, *c).cmp(&(row, col)))
            .map_or_else(|_| BigInt::zero(), |i| self.entries[i].2.clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(r, c, v)| (*r, *c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            dense[*r][*c] = v.clone();
        }
        dense
    }

    /// `self * other`. Panics on a shape mismatch.
    pub fn multiply(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in &other.entries {
            by_row[*r].push((*c, v));
        }
        let mut triplets = Vec::new();
        for (r, k, a) in &self.entries {
            for &(c, b) in &by_row[*k] {
                triplets.push((*r, c, a * b));
            }
        }
        IntegerMatrix::from_triplets(self.rows, other.cols, triplets)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let triplets = self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())).collect();
        IntegerMatrix::from_triplets(self.cols, self.rows, triplets)
    }
}
