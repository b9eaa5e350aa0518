//! Finite connected graded algebras over F_p with optional Hopf structure.
//!
//! An algebra is given by a degree-labeled basis and dense structure
//! constants. Validation checks connectedness, degree-additivity,
//! associativity, unit laws, and (when a comultiplication is present)
//! coassociativity, counit laws, and that the comultiplication is an algebra
//! map. Algebras are immutable after validation.

mod builders;
mod duality;
mod spec;

#[cfg(test)]
mod tests;

pub use builders::{
    make_exterior, make_noncomm_m, make_steenrod_a1, make_truncated_poly, quotient_by_central,
    tensor_product, AlgebraQuotient,
};
pub use duality::{dualize, gorenstein_orientation, Orientation};
pub use spec::{from_spec, from_spec_str, to_spec, AlgebraSpec, BasisEltSpec};

use crate::error::{Error, Result};
use crate::linalg::{FMatrix, FVector, PrimeField};

/// Comultiplication table: `comult[i]` lists (left, right, coeff) terms of
/// the coproduct of basis element i.
pub type ComultTable = Vec<Vec<(usize, usize, u32)>>;

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    degrees: Vec<u32>,
    unit: usize,
    /// mult[i][j] = coefficient vector of b_i * b_j
    mult: Vec<Vec<FVector>>,
    comult: Option<ComultTable>,
    orientation: Option<Orientation>,
}

impl GradedAlgebra {
    /// Assemble and validate.
    pub fn new(
        field: PrimeField,
        labels: Vec<String>,
        degrees: Vec<u32>,
        unit: usize,
        mult: Vec<Vec<FVector>>,
        comult: Option<ComultTable>,
    ) -> Result<Self> {
        let a = GradedAlgebra { field, labels, degrees, unit, mult, comult, orientation: None };
        let violations = a.violations();
        if violations.is_empty() {
            Ok(a)
        } else {
            Err(Error::InvalidAlgebra(violations))
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn unit_elt(&self) -> FVector {
        let mut v = FVector::zeros(self.field, self.dim());
        v.set(self.unit, 1);
        v
    }

    pub fn basis_elt(&self, i: usize) -> FVector {
        let mut v = FVector::zeros(self.field, self.dim());
        v.set(i, 1);
        v
    }

    pub fn elt_by_label(&self, label: &str) -> Option<FVector> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis_elt(i))
    }

    pub fn index_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &FVector {
        &self.mult[i][j]
    }

    /// Bilinear extension of the structure constants.
    pub fn mul_elts(&self, x: &FVector, y: &FVector) -> FVector {
        let mut out = FVector::zeros(self.field, self.dim());
        for i in x.support() {
            let xi = x.get(i);
            for j in y.support() {
                let c = self.field.mul(xi, y.get(j));
                out.add_scaled(&self.mult[i][j], c);
            }
        }
        out
    }

    /// Degree of a homogeneous element; None for 0 or inhomogeneous input.
    pub fn degree_of(&self, x: &FVector) -> Option<u32> {
        let mut deg = None;
        for i in x.support() {
            match deg {
                None => deg = Some(self.degrees[i]),
                Some(d) if d == self.degrees[i] => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn comult(&self) -> Option<&ComultTable> {
        self.comult.as_ref()
    }

    pub fn has_comult(&self) -> bool {
        self.comult.is_some()
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        self.orientation.as_ref()
    }

    pub(crate) fn set_orientation(&mut self, o: Orientation) {
        self.orientation = Some(o);
    }

    /// Counit: projection onto the unit coefficient (connected algebras).
    pub fn counit(&self, x: &FVector) -> u32 {
        x.get(self.unit)
    }

    /// Indices of the positive-degree basis elements (the augmentation ideal).
    pub fn augmentation_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] > 0).collect()
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn basis_of_degree(&self, d: u32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Coefficients of the Poincaré series up to t_max inclusive.
    pub fn poincare_series(&self, t_max: u32) -> Vec<u64> {
        let mut coeffs = vec![0u64; t_max as usize + 1];
        for &d in &self.degrees {
            if d <= t_max {
                coeffs[d as usize] += 1;
            }
        }
        coeffs
    }

    /// Matrix of left multiplication by basis element i (column j = b_i b_j).
    pub fn left_mult_matrix(&self, i: usize) -> FMatrix {
        let n = self.dim();
        let mut m = FMatrix::zeros(self.field, n, n);
        for j in 0..n {
            let prod = &self.mult[i][j];
            for k in prod.support() {
                m.set(k, j, prod.get(k));
            }
        }
        m
    }

    /// Matrix of right multiplication by x (column j = b_j * x).
    pub fn right_mult_matrix(&self, x: &FVector) -> FMatrix {
        let n = self.dim();
        let mut m = FMatrix::zeros(self.field, n, n);
        for j in 0..n {
            let prod = self.mul_elts(&self.basis_elt(j), x);
            for k in prod.support() {
                m.set(k, j, prod.get(k));
            }
        }
        m
    }

    /// Koszul-sign cocommutativity of the comultiplication.
    pub fn is_cocommutative(&self) -> bool {
        let Some(table) = &self.comult else { return false };
        for (i, terms) in table.iter().enumerate() {
            let mut swapped: Vec<(usize, usize, u32)> = terms
                .iter()
                .map(|&(l, r, c)| {
                    let sign_neg = (self.degrees[l] * self.degrees[r]) % 2 == 1
                        && self.field.p() != 2;
                    let c = if sign_neg { self.field.neg(c) } else { c };
                    (r, l, c)
                })
                .collect();
            let mut orig = terms.clone();
            orig.sort_unstable();
            swapped.sort_unstable();
            if !tables_equal(self.field, &orig, &swapped) {
                let _ = i;
                return false;
            }
        }
        true
    }

    /// Whether the multiplication is graded-commutative (Koszul signs).
    pub fn is_graded_commutative(&self) -> bool {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let ab = &self.mult[i][j];
                let mut ba = self.mult[j][i].clone();
                if self.field.p() != 2 && (self.degrees[i] * self.degrees[j]) % 2 == 1 {
                    ba.scale(self.field.neg(1));
                }
                if *ab != ba {
                    return false;
                }
            }
        }
        true
    }

    /// If the algebra is generated by a single homogeneous basis element,
    /// return (generator index, height h with x^h = 0).
    pub fn monogenic_generator(&self) -> Option<(usize, u32)> {
        let min_pos = self.degrees.iter().copied().filter(|&d| d > 0).min()?;
        let gens = self.basis_of_degree(min_pos);
        if gens.len() != 1 {
            return None;
        }
        let g = gens[0];
        let x = self.basis_elt(g);
        let mut powers = vec![self.unit_elt()];
        let mut cur = x.clone();
        while !cur.is_zero() {
            powers.push(cur.clone());
            cur = self.mul_elts(&cur, &x);
        }
        if powers.len() != self.dim() {
            return None;
        }
        // powers must span: they are in distinct degrees, each nonzero
        let mut degs: Vec<u32> = powers.iter().map(|p| self.degree_of(p).unwrap_or(u32::MAX)).collect();
        degs.sort_unstable();
        let mut all = self.degrees.clone();
        all.sort_unstable();
        (degs == all).then_some((g, powers.len() as u32))
    }

    /// All violated axioms, with the offending indices named.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.dim();
        if self.labels.len() != n || self.mult.len() != n || self.mult.iter().any(|r| r.len() != n)
        {
            out.push("structure-constant table shape does not match basis".into());
            return out;
        }
        for row in &self.mult {
            for v in row {
                if v.len() != n {
                    out.push("structure-constant vector length does not match basis".into());
                    return out;
                }
            }
        }
        // connectedness
        let degree_zero: Vec<usize> = (0..n).filter(|&i| self.degrees[i] == 0).collect();
        if degree_zero.len() != 1 {
            out.push(format!(
                "connectedness: expected exactly one degree-0 basis element, found {}",
                degree_zero.len()
            ));
        } else if degree_zero[0] != self.unit {
            out.push("connectedness: the degree-0 basis element is not the unit".into());
        }
        if self.unit >= n {
            out.push("unit index out of range".into());
            return out;
        }
        // degree-additivity
        for i in 0..n {
            for j in 0..n {
                let expect = self.degrees[i] as u64 + self.degrees[j] as u64;
                for k in self.mult[i][j].support() {
                    if self.degrees[k] as u64 != expect {
                        out.push(format!(
                            "degree-additivity violated at ({i},{j}): product hits degree {} != {expect}",
                            self.degrees[k]
                        ));
                    }
                }
            }
        }
        // unit laws
        for i in 0..n {
            if self.mult[self.unit][i] != self.basis_elt(i) {
                out.push(format!("unit law violated: 1 * b_{i} != b_{i}"));
            }
            if self.mult[i][self.unit] != self.basis_elt(i) {
                out.push(format!("unit law violated: b_{i} * 1 != b_{i}"));
            }
        }
        // associativity
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let left = self.mul_elts(ij, &self.basis_elt(k));
                    let right = self.mul_elts(&self.basis_elt(i), &self.mult[j][k]);
                    if left != right {
                        out.push(format!("associativity violated at triple ({i},{j},{k})"));
                        if out.len() > 16 {
                            break 'assoc;
                        }
                    }
                }
            }
        }
        if let Some(table) = &self.comult {
            out.extend(self.comult_violations(table));
        }
        out
    }

    fn comult_violations(&self, table: &ComultTable) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.dim();
        if table.len() != n {
            out.push("comultiplication table length does not match basis".into());
            return out;
        }
        // degreewise support
        for (i, terms) in table.iter().enumerate() {
            for &(l, r, _) in terms {
                if self.degrees[l] + self.degrees[r] != self.degrees[i] {
                    out.push(format!("comultiplication of b_{i} not degree-homogeneous"));
                }
            }
        }
        // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
        for (i, terms) in table.iter().enumerate() {
            let mut left = FVector::zeros(self.field, n);
            let mut right = FVector::zeros(self.field, n);
            for &(l, r, c) in terms {
                if l == self.unit {
                    left.set(r, self.field.add(left.get(r), c));
                }
                if r == self.unit {
                    right.set(l, self.field.add(right.get(l), c));
                }
            }
            if left != self.basis_elt(i) || right != self.basis_elt(i) {
                out.push(format!("counit law violated at basis element {i}"));
            }
        }
        // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
        for i in 0..n {
            let mut lhs: Vec<u32> = vec![0; n * n * n];
            let mut rhs: Vec<u32> = vec![0; n * n * n];
            for &(l, r, c) in &table[i] {
                for &(a, b, c2) in &table[l] {
                    let idx = (a * n + b) * n + r;
                    lhs[idx] = self.field.add(lhs[idx], self.field.mul(c, c2));
                }
                for &(a, b, c2) in &table[r] {
                    let idx = (l * n + a) * n + b;
                    rhs[idx] = self.field.add(rhs[idx], self.field.mul(c, c2));
                }
            }
            if lhs != rhs {
                out.push(format!("coassociativity violated at basis element {i}"));
            }
        }
        // multiplicativity: Delta(xy) = Delta(x) Delta(y) in A (x) A
        for i in 0..n {
            for j in 0..n {
                let mut prod_side: Vec<u32> = vec![0; n * n];
                for &(l1, r1, c1) in &table[i] {
                    for &(l2, r2, c2) in &table[j] {
                        // (l1 (x) r1)(l2 (x) r2) = sign * l1 l2 (x) r1 r2
                        let mut c = self.field.mul(c1, c2);
                        if self.field.p() != 2 && (self.degrees[r1] * self.degrees[l2]) % 2 == 1 {
                            c = self.field.neg(c);
                        }
                        let ll = &self.mult[l1][l2];
                        let rr = &self.mult[r1][r2];
                        for a in ll.support() {
                            for b in rr.support() {
                                let term =
                                    self.field.mul(c, self.field.mul(ll.get(a), rr.get(b)));
                                prod_side[a * n + b] = self.field.add(prod_side[a * n + b], term);
                            }
                        }
                    }
                }
                let mut comult_side: Vec<u32> = vec![0; n * n];
                let prod = &self.mult[i][j];
                for k in prod.support() {
                    let ck = prod.get(k);
                    for &(l, r, c) in &table[k] {
                        comult_side[l * n + r] =
                            self.field.add(comult_side[l * n + r], self.field.mul(ck, c));
                    }
                }
                if prod_side != comult_side {
                    out.push(format!(
                        "comultiplication is not an algebra map at pair ({i},{j})"
                    ));
                }
            }
        }
        out
    }
}

fn tables_equal(field: PrimeField, a: &[(usize, usize, u32)], b: &[(usize, usize, u32)]) -> bool {
    use std::collections::BTreeMap;
    let mut acc: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for &(l, r, c) in a {
        let e = acc.entry((l, r)).or_insert(0);
        *e = field.add(*e, c);
    }
    for &(l, r, c) in b {
        let e = acc.entry((l, r)).or_insert(0);
        *e = field.sub(*e, c);
    }
    acc.values().all(|&c| c == 0)
}
