//! Dense matrices and vectors over F_p.
//!
//! For p = 2 rows are bit-packed into u64 words; elimination works a word at
//! a time. Odd primes use one byte per entry. All pivoting is deterministic:
//! leftmost nonzero column, topmost nonzero row.

use super::field::PrimeField;

/// Packed vector over F_p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    field: PrimeField,
    len: usize,
    bits: Vec<u64>, // p = 2
    bytes: Vec<u8>, // p odd
}

fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl FVector {
    pub fn zeros(field: PrimeField, len: usize) -> Self {
        if field.is_f2() {
            FVector { field, len, bits: vec![0; words_for(len)], bytes: Vec::new() }
        } else {
            FVector { field, len, bits: Vec::new(), bytes: vec![0; len] }
        }
    }

    pub fn from_entries(field: PrimeField, entries: &[u32]) -> Self {
        let mut v = Self::zeros(field, entries.len());
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e % field.p());
        }
        v
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        debug_assert!(i < self.len);
        if self.field.is_f2() {
            ((self.bits[i / 64] >> (i % 64)) & 1) as u32
        } else {
            self.bytes[i] as u32
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, val: u32) {
        debug_assert!(i < self.len);
        if self.field.is_f2() {
            let w = &mut self.bits[i / 64];
            *w = (*w & !(1 << (i % 64))) | (((val & 1) as u64) << (i % 64));
        } else {
            self.bytes[i] = (val % self.field.p()) as u8;
        }
    }

    pub fn is_zero(&self) -> bool {
        if self.field.is_f2() {
            self.bits.iter().all(|&w| w == 0)
        } else {
            self.bytes.iter().all(|&b| b == 0)
        }
    }

    /// Index of the first nonzero entry, if any.
    pub fn leading(&self) -> Option<usize> {
        if self.field.is_f2() {
            for (wi, &w) in self.bits.iter().enumerate() {
                if w != 0 {
                    let i = wi * 64 + w.trailing_zeros() as usize;
                    return (i < self.len).then_some(i);
                }
            }
            None
        } else {
            self.bytes.iter().position(|&b| b != 0)
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &FVector, c: u32) {
        assert_eq!(self.len, other.len);
        assert_eq!(self.field, other.field);
        if self.field.is_f2() {
            if c & 1 == 1 {
                for (a, b) in self.bits.iter_mut().zip(&other.bits) {
                    *a ^= *b;
                }
            }
        } else {
            let f = self.field;
            for (a, &b) in self.bytes.iter_mut().zip(&other.bytes) {
                *a = f.add(*a as u32, f.mul(c, b as u32)) as u8;
            }
        }
    }

    pub fn scale(&mut self, c: u32) {
        if self.field.is_f2() {
            if c & 1 == 0 {
                for w in &mut self.bits {
                    *w = 0;
                }
            }
        } else {
            let f = self.field;
            for a in &mut self.bytes {
                *a = f.mul(*a as u32, c) as u8;
            }
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) != 0).collect()
    }

    pub fn entries(&self) -> Vec<u32> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenation of packed blocks; `at` is the bit offset of `other`.
    pub fn copy_into(&self, dest: &mut FVector, at: usize) {
        assert!(at + self.len <= dest.len);
        for i in self.support() {
            dest.set(at + i, self.get(i));
        }
    }
}

/// Dense matrix over F_p with deterministic elimination.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    stride: usize, // words per row (p=2) or bytes per row (p odd)
    bits: Vec<u64>,
    bytes: Vec<u8>,
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        if field.is_f2() {
            let stride = words_for(cols);
            FMatrix { field, rows, cols, stride, bits: vec![0; stride * rows], bytes: Vec::new() }
        } else {
            FMatrix { field, rows, cols, stride: cols, bits: Vec::new(), bytes: vec![0; cols * rows] }
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &e) in r.iter().enumerate() {
                m.set(i, j, e % field.p());
            }
        }
        m
    }

    pub fn from_row_vectors(field: PrimeField, cols: usize, rows: &[FVector]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.set_row(i, r);
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        if self.field.is_f2() {
            ((self.bits[i * self.stride + j / 64] >> (j % 64)) & 1) as u32
        } else {
            self.bytes[i * self.stride + j] as u32
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, val: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        if self.field.is_f2() {
            let w = &mut self.bits[i * self.stride + j / 64];
            *w = (*w & !(1 << (j % 64))) | (((val & 1) as u64) << (j % 64));
        } else {
            self.bytes[i * self.stride + j] = (val % self.field.p()) as u8;
        }
    }

    pub fn row(&self, i: usize) -> FVector {
        let mut v = FVector::zeros(self.field, self.cols);
        if self.field.is_f2() {
            v.bits.copy_from_slice(&self.bits[i * self.stride..(i + 1) * self.stride]);
        } else {
            v.bytes.copy_from_slice(&self.bytes[i * self.stride..(i + 1) * self.stride]);
        }
        v
    }

    pub fn set_row(&mut self, i: usize, v: &FVector) {
        assert_eq!(v.len, self.cols);
        if self.field.is_f2() {
            self.bits[i * self.stride..(i + 1) * self.stride].copy_from_slice(&v.bits);
        } else {
            self.bytes[i * self.stride..(i + 1) * self.stride].copy_from_slice(&v.bytes);
        }
    }

    pub fn column(&self, j: usize) -> FVector {
        let mut v = FVector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            v.set(i, self.get(i, j));
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        if self.field.is_f2() {
            self.bits.iter().all(|&w| w == 0)
        } else {
            self.bytes.iter().all(|&b| b == 0)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        if self.field.is_f2() {
            let (lo, hi) = (a.min(b), a.max(b));
            let (left, right) = self.bits.split_at_mut(hi * s);
            left[lo * s..lo * s + s].swap_with_slice(&mut right[..s]);
        } else {
            let (lo, hi) = (a.min(b), a.max(b));
            let (left, right) = self.bytes.split_at_mut(hi * s);
            left[lo * s..lo * s + s].swap_with_slice(&mut right[..s]);
        }
    }

    /// row_i += c * row_k (i != k)
    fn addmul_rows(&mut self, i: usize, k: usize, c: u32) {
        debug_assert_ne!(i, k);
        let s = self.stride;
        if self.field.is_f2() {
            if c & 1 == 0 {
                return;
            }
            let (ip, kp) = (i * s, k * s);
            if i < k {
                let (left, right) = self.bits.split_at_mut(kp);
                let dst = &mut left[ip..ip + s];
                let src = &right[..s];
                for (a, b) in dst.iter_mut().zip(src) {
                    *a ^= *b;
                }
            } else {
                let (left, right) = self.bits.split_at_mut(ip);
                let src = &left[kp..kp + s];
                let dst = &mut right[..s];
                for (a, b) in dst.iter_mut().zip(src) {
                    *a ^= *b;
                }
            }
        } else {
            let f = self.field;
            let (ip, kp) = (i * s, k * s);
            for off in 0..s {
                let v = f.add(self.bytes[ip + off] as u32, f.mul(c, self.bytes[kp + off] as u32));
                self.bytes[ip + off] = v as u8;
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u32) {
        if self.field.is_f2() {
            return; // only unit scalars
        }
        let f = self.field;
        let s = self.stride;
        for off in 0..s {
            self.bytes[i * s + off] = f.mul(self.bytes[i * s + off] as u32, c) as u8;
        }
    }

    /// First row >= from with a nonzero entry in column j.
    fn pivot_row(&self, j: usize, from: usize) -> Option<usize> {
        (from..self.rows).find(|&i| self.get(i, j) != 0)
    }

    /// Reduced row echelon form; returns (rref, pivot columns, rank).
    /// Deterministic: leftmost pivot column, topmost pivot row.
    pub fn rref(&self) -> (FMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, pivots, rank)
    }

    /// In-place RREF; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pi) = self.pivot_row(j, r) else { continue };
            self.swap_rows(pi, r);
            let lead = self.get(r, j);
            if lead != 1 {
                self.scale_row(r, self.field.inv(lead));
            }
            for i in 0..self.rows {
                if i != r {
                    let c = self.get(i, j);
                    if c != 0 {
                        self.addmul_rows(i, r, self.field.neg(c));
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        pivots
    }

    /// Rank only (forward elimination, no back-substitution).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0usize;
        for j in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pi) = m.pivot_row(j, r) else { continue };
            m.swap_rows(pi, r);
            let lead = m.get(r, j);
            if lead != 1 {
                m.scale_row(r, m.field.inv(lead));
            }
            for i in r + 1..m.rows {
                let c = m.get(i, j);
                if c != 0 {
                    m.addmul_rows(i, r, m.field.neg(c));
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of { v : self * v = 0 }, ordered by free-column index.
    pub fn kernel_basis(&self) -> Vec<FVector> {
        let (rr, pivots, rank) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = FVector::zeros(self.field, self.cols);
            v.set(f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                let c = rr.get(i, f);
                if c != 0 {
                    v.set(p, self.field.neg(c));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution x of self * x = b with free variables set to 0,
    /// or None when b is not in the column span.
    pub fn solve(&self, b: &FVector) -> Option<FVector> {
        assert_eq!(b.len(), self.rows, "rhs length must equal rows");
        // Eliminate the augmented matrix [self | b].
        let mut aug = FMatrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            let mut row = FVector::zeros(self.field, self.cols + 1);
            self.row(i).copy_into(&mut row, 0);
            row.set(self.cols, b.get(i));
            aug.set_row(i, &row);
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = FVector::zeros(self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.set(p, aug.get(i, self.cols));
        }
        Some(x)
    }

    /// self * v
    pub fn mul_vec(&self, v: &FVector) -> FVector {
        assert_eq!(v.len(), self.cols);
        let mut out = FVector::zeros(self.field, self.rows);
        if self.field.is_f2() {
            for i in 0..self.rows {
                let row = &self.bits[i * self.stride..(i + 1) * self.stride];
                let mut acc = 0u32;
                for (a, b) in row.iter().zip(&v.bits) {
                    acc ^= (a & b).count_ones() & 1;
                }
                out.set(i, acc & 1);
            }
        } else {
            let f = self.field;
            for i in 0..self.rows {
                let mut acc = 0u32;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, j), v.get(j)));
                }
                out.set(i, acc);
            }
        }
        out
    }

    /// self * other
    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.field, other.field);
        let mut out = FMatrix::zeros(self.field, self.rows, other.cols);
        if self.field.is_f2() {
            for i in 0..self.rows {
                let mut acc = FVector::zeros(self.field, other.cols);
                for j in 0..self.cols {
                    if self.get(i, j) != 0 {
                        let src = &other.bits[j * other.stride..(j + 1) * other.stride];
                        for (a, b) in acc.bits.iter_mut().zip(src) {
                            *a ^= *b;
                        }
                    }
                }
                out.set_row(i, &acc);
            }
        } else {
            let f = self.field;
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let c = self.get(i, j);
                    if c != 0 {
                        for k in 0..other.cols {
                            let v = f.add(out.get(i, k), f.mul(c, other.get(j, k)));
                            out.set(i, k, v);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FMatrix {
        let mut out = FMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(j, i, v);
                }
            }
        }
        out
    }

    /// Is this an invertible square matrix?
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn entries(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).entries()).collect()
    }
}
