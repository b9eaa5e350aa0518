//! Incremental row basis ("xor basis" generalized to F_p).
//!
//! Rows are kept forward-reduced: each stored row's leading entry is its
//! pivot and pivots are distinct. Insertion reduces the candidate greedily by
//! leading index, so span membership and rank queries are exact and the
//! structure grows deterministically with insertion order.

use super::field::PrimeField;
use super::matrix::FVector;

pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<FVector>,
    row_of_pivot: Vec<Option<u32>>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), row_of_pivot: vec![None; width] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduce v as far as the stored pivots allow. The result is zero iff v
    /// is in the span; otherwise its leading index has no pivot yet.
    pub fn reduce(&self, mut v: FVector) -> FVector {
        debug_assert_eq!(v.len(), self.width);
        while let Some(l) = v.leading() {
            match self.row_of_pivot[l] {
                Some(r) => {
                    let row = &self.rows[r as usize];
                    let c = self.field.neg(self.field.mul(v.get(l), self.field.inv(row.get(l))));
                    v.add_scaled(row, c);
                    debug_assert_eq!(v.get(l), 0);
                }
                None => break,
            }
        }
        v
    }

    /// Insert v if independent of the current span. Returns the new pivot
    /// index when the rank grew.
    pub fn insert(&mut self, v: FVector) -> Option<usize> {
        let mut v = self.reduce(v);
        match v.leading() {
            None => None,
            Some(l) => {
                let lead = v.get(l);
                if lead != 1 {
                    v.scale(self.field.inv(lead));
                }
                self.row_of_pivot[l] = Some(self.rows.len() as u32);
                self.rows.push(v);
                Some(l)
            }
        }
    }

    pub fn contains(&self, v: &FVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}
