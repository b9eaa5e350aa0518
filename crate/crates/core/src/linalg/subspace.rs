//! A fully reduced (RREF) basis of a subspace, supporting canonical
//! reduction modulo the subspace and projection onto the complement
//! coordinates. Used for quotients: cokernels, algebra quotients, and
//! minimal-generator selection.

use super::field::PrimeField;
use super::matrix::{FMatrix, FVector};

pub struct Subspace {
    field: PrimeField,
    width: usize,
    rows: Vec<FVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(field: PrimeField, width: usize, spanning: &[FVector]) -> Self {
        let m = FMatrix::from_row_vectors(field, width, spanning);
        let (rr, pivots, rank) = m.rref();
        let rows = (0..rank).map(|i| rr.row(i)).collect();
        Subspace { field, width, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&i| !is_pivot[i]).collect()
    }

    /// Canonical representative of v modulo the subspace; supported on the
    /// complement coordinates.
    pub fn reduce(&self, mut v: FVector) -> FVector {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p);
            if c != 0 {
                v.add_scaled(row, self.field.neg(c));
            }
        }
        v
    }

    pub fn contains(&self, v: &FVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    pub fn basis(&self) -> &[FVector] {
        &self.rows
    }
}
