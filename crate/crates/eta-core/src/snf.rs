//! Smith normal form of integer matrices, used for abelianizations.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: alloc::vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<I: Into<BigInt> + Clone>(rows: &[Vec<I>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                *m.at_mut(i, j) = v.clone().into();
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let sub = q * self.at(k, j);
            *self.at_mut(i, j) -= sub;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.rows {
            let sub = q * self.at(i, k);
            *self.at_mut(i, j) -= sub;
        }
    }
}

/// Diagonalizes the matrix by row/column operations and returns the Smith
/// diagonal `d_1 | d_2 | ... | d_r` (nonnegative, divisibility chain),
/// padded with zeros up to `min(rows, cols)`.
pub fn smith_diagonal(mut m: IntMatrix) -> Vec<BigInt> {
    let n = m.rows.min(m.cols);
    for k in 0..n {
        loop {
            // Pivot: smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m.rows {
                for j in k..m.cols {
                    if m.at(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if m.at(i, j).abs() < m.at(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap_rows(k, pi);
            m.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..m.rows {
                if !m.at(i, k).is_zero() {
                    let q = m.at(i, k) / m.at(k, k);
                    m.row_sub(i, k, &q);
                    if !m.at(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..m.cols {
                if !m.at(k, j).is_zero() {
                    let q = m.at(k, j) / m.at(k, k);
                    m.col_sub(j, k, &q);
                    if !m.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row k and column k are clear; enforce the divisibility chain.
            let pivot_val = m.at(k, k).clone();
            let mut offender = None;
            'scan: for i in k + 1..m.rows {
                for j in k + 1..m.cols {
                    if !(m.at(i, j) % &pivot_val).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // Fold the offending row into the pivot row and continue.
                    for j in 0..m.cols {
                        let add = m.at(i, j).clone();
                        *m.at_mut(k, j) += add;
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|k| m.at(k, k).abs()).collect()
}

/// Invariant factors of the cokernel `Z^cols / rowspace`: the finite factors
/// (> 1) of the Smith diagonal followed by one `0` per free rank.
pub fn cokernel_invariant_factors(m: IntMatrix) -> Vec<BigInt> {
    let cols = m.cols;
    let diag = smith_diagonal(m);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut factors: Vec<BigInt> = diag
        .into_iter()
        .filter(|d| !d.is_zero() && *d != BigInt::from(1))
        .collect();
    for _ in 0..cols.saturating_sub(rank) {
        factors.push(BigInt::zero());
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn diag_i64(m: IntMatrix) -> Vec<i64> {
        use num_traits::ToPrimitive;
        smith_diagonal(m).iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn known_4x4() {
        let m = IntMatrix::from_rows(&[
            vec![-6i64, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        assert_eq!(diag_i64(m), vec![1, 3, 21, 0]);
    }

    #[test]
    fn commutator_matrix_free_rank_two() {
        // One relator [x, y]: exponent row (0, 0).
        let m = IntMatrix::from_rows(&[vec![0i64, 0]]);
        let factors = cokernel_invariant_factors(m);
        assert_eq!(factors, vec![BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn single_torsion_factor() {
        let m = IntMatrix::from_rows(&[vec![5i64]]);
        assert_eq!(cokernel_invariant_factors(m), vec![BigInt::from(5)]);
    }

    #[test]
    fn unimodular_gives_trivial_cokernel() {
        let m = IntMatrix::from_rows(&[vec![2i64, 1], vec![1, 1]]);
        assert!(cokernel_invariant_factors(m).is_empty());
    }

    #[test]
    fn divisibility_chain() {
        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]);
        // d_1 | d_2 forces 1, 6.
        assert_eq!(diag_i64(m), vec![1, 6]);
    }

    #[test]
    fn empty_matrix() {
        let m = IntMatrix::zero(0, 3);
        assert_eq!(
            cokernel_invariant_factors(m),
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(0)]
        );
    }
}
