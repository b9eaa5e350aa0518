//! Frobenius orientations and linear duals.

use super::{ComultTable, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FMatrix, FVector};

/// A Frobenius orientation: the top degree d and a functional e (supported
/// on the top-degree component) such that (x, y) -> e(xy) is a perfect
/// pairing between complementary degrees.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub d: u32,
    pub functional: FVector,
}

/// Find an orientation and store it on the algebra.
///
/// d is the top nonzero degree. Candidate functionals are duals of
/// top-degree basis elements first (in basis order, which puts the
/// lexicographically-first label first for the built-ins), then the
/// remaining nonzero top-degree functionals in coefficient order. The first
/// candidate whose pairing is invertible in every complementary degree pair
/// wins; if none works the algebra is not Frobenius.
pub fn gorenstein_orientation(a: &mut GradedAlgebra) -> Result<Orientation> {
    if let Some(o) = a.orientation() {
        return Ok(o.clone());
    }
    let f = a.field();
    let d = a.top_degree();
    let mut top: Vec<usize> = a.basis_of_degree(d);
    top.sort_by(|&i, &j| a.label(i).cmp(a.label(j)));
    // Poincaré symmetry is necessary
    for q in 0..=d {
        if a.basis_of_degree(q).len() != a.basis_of_degree(d - q).len() {
            return Err(Error::NotFrobenius);
        }
    }
    if top.len() > 8 {
        return Err(Error::CapExceeded(format!(
            "orientation search over a {}-dimensional top degree",
            top.len()
        )));
    }
    let p = f.p() as u64;
    let count = p.pow(top.len() as u32);
    let mut candidates: Vec<FVector> = Vec::new();
    // pure dual-basis functionals first, in label order
    for &i in &top {
        let mut v = FVector::zeros(f, a.dim());
        v.set(i, 1);
        candidates.push(v);
    }
    for mask in 1..count {
        let mut v = FVector::zeros(f, a.dim());
        let mut m = mask;
        let mut nonzero = 0;
        for &i in &top {
            let c = (m % p) as u32;
            m /= p;
            if c != 0 {
                nonzero += 1;
            }
            v.set(i, c);
        }
        if nonzero > 1 {
            candidates.push(v);
        }
    }
    'cand: for e in candidates {
        for q in 0..=d.div_ceil(2) {
            let rows = a.basis_of_degree(q);
            let cols = a.basis_of_degree(d - q);
            let mut pairing = FMatrix::zeros(f, rows.len(), cols.len());
            for (ri, &i) in rows.iter().enumerate() {
                for (ci, &j) in cols.iter().enumerate() {
                    let prod = a.mul_basis(i, j);
                    let mut val = 0u32;
                    for k in prod.support() {
                        val = f.add(val, f.mul(prod.get(k), e.get(k)));
                    }
                    pairing.set(ri, ci, val);
                }
            }
            if !pairing.is_invertible() {
                continue 'cand;
            }
        }
        let o = Orientation { d, functional: e };
        a.set_orientation(o.clone());
        return Ok(o);
    }
    Err(Error::NotFrobenius)
}

/// The dual Hopf algebra: multiplication transposed from the coproduct,
/// coproduct transposed from the multiplication. The dual basis element of
/// a degree-l element is recorded with degree l.
pub fn dualize(a: &GradedAlgebra) -> Result<GradedAlgebra> {
    let table = a.comult().ok_or(Error::MissingComult)?;
    let f = a.field();
    let n = a.dim();
    let labels: Vec<String> = a.labels().iter().map(|l| format!("{l}^")).collect();
    let degrees = a.degrees().to_vec();

    // (b_i^ * b_j^)(b_k) = <b_i^ (x) b_j^, Delta(b_k)> with the Koszul sign
    // (-1)^{|b_j^| |left factor|}; the left factor pairs with b_i^, so the
    // sign is (-1)^{|i||j|} on every nonzero term.
    let mut mult = vec![vec![FVector::zeros(f, n); n]; n];
    for (k, terms) in table.iter().enumerate() {
        for &(l, r, c) in terms {
            let mut coeff = c;
            if f.p() != 2 && (a.degree(l) * a.degree(r)) % 2 == 1 {
                coeff = f.neg(coeff);
            }
            let cur = mult[l][r].get(k);
            mult[l][r].set(k, f.add(cur, coeff));
        }
    }
    // Delta(b_k^) = sum over products b_i b_j hitting b_k
    let mut comult: ComultTable = vec![Vec::new(); n];
    for k in 0..n {
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = a.mul_basis(i, j).get(k);
                if c != 0 {
                    let mut coeff = c;
                    if f.p() != 2 && (a.degree(i) * a.degree(j)) % 2 == 1 {
                        coeff = f.neg(coeff);
                    }
                    terms.push((i, j, coeff));
                }
            }
        }
        comult[k] = terms;
    }
    GradedAlgebra::new(f, labels, degrees, a.unit_index(), mult, Some(comult))
}
