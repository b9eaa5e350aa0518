//! Constructors for the built-in algebras: exterior algebras, truncated
//! polynomial algebras, the 8-dimensional subalgebra of the mod-2 Steenrod
//! algebra generated by Sq1 and Sq2, the 8-dimensional noncommutative Hopf
//! algebra dual to a twisted exterior coalgebra, tensor products, and
//! quotients by central primitive elements (the storeys of towers).

use std::collections::BTreeMap;

use super::duality::dualize;
use super::{ComultTable, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, FMatrix, FVector, PrimeField, Subspace};

/// Multiply two elements of A (x) A given as dense length-n^2 vectors
/// (index l*n + r), with the Koszul sign on the middle swap.
fn tensor_square_mul(a: &GradedAlgebra, x: &FVector, y: &FVector) -> FVector {
    let n = a.dim();
    let f = a.field();
    let mut out = FVector::zeros(f, n * n);
    for xi in x.support() {
        let (l1, r1) = (xi / n, xi % n);
        let cx = x.get(xi);
        for yi in y.support() {
            let (l2, r2) = (yi / n, yi % n);
            let mut c = f.mul(cx, y.get(yi));
            if f.p() != 2 && (a.degree(r1) * a.degree(l2)) % 2 == 1 {
                c = f.neg(c);
            }
            let ll = a.mul_basis(l1, l2);
            let rr = a.mul_basis(r1, r2);
            for ai in ll.support() {
                for bi in rr.support() {
                    let idx = ai * n + bi;
                    let term = f.mul(c, f.mul(ll.get(ai), rr.get(bi)));
                    out.set(idx, f.add(out.get(idx), term));
                }
            }
        }
    }
    out
}

fn tensor_vec_to_table(f: PrimeField, n: usize, v: &FVector) -> Vec<(usize, usize, u32)> {
    let _ = f;
    v.support().iter().map(|&i| (i / n, i % n, v.get(i))).collect()
}

/// Extend generator coproducts multiplicatively: basis element i is the
/// ordered product of the generators in `factorization[i]`.
fn comult_from_factorizations(
    a: &GradedAlgebra,
    gen_comult: &BTreeMap<usize, FVector>,
    factorizations: &[Vec<usize>],
) -> ComultTable {
    let n = a.dim();
    let f = a.field();
    let mut unit_tensor = FVector::zeros(f, n * n);
    unit_tensor.set(a.unit_index() * n + a.unit_index(), 1);
    let mut table = Vec::with_capacity(n);
    for factors in factorizations {
        let mut acc = unit_tensor.clone();
        for g in factors {
            acc = tensor_square_mul(a, &acc, &gen_comult[g]);
        }
        table.push(tensor_vec_to_table(f, n, &acc));
    }
    table
}

fn primitive_tensor(a: &GradedAlgebra, i: usize) -> FVector {
    let n = a.dim();
    let u = a.unit_index();
    let mut v = FVector::zeros(a.field(), n * n);
    v.set(i * n + u, 1);
    v.set(u * n + i, 1);
    v
}

/// Exterior algebra on primitive generators of the given degrees.
///
/// Over F_2 any degrees are allowed; over an odd prime all generator degrees
/// must be odd.
pub fn make_exterior(field: PrimeField, gen_degrees: &[u32]) -> Result<GradedAlgebra> {
    let d = gen_degrees.len();
    if gen_degrees.iter().any(|&g| g == 0) {
        return Err(Error::Unsupported("exterior generators must have positive degree".into()));
    }
    if field.p() != 2 && gen_degrees.iter().any(|&g| g % 2 == 0) {
        return Err(Error::Unsupported(format!(
            "exterior algebra over F_{} requires odd generator degrees",
            field.p()
        )));
    }
    if d > 12 {
        return Err(Error::CapExceeded(format!("exterior algebra on {d} generators")));
    }
    let n = 1usize << d;
    let degree_of_mask = |mask: usize| -> u32 {
        (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| gen_degrees[i]).sum()
    };
    let label_of_mask = |mask: usize| -> String {
        if mask == 0 {
            "1".to_string()
        } else {
            (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| format!("e{}", i + 1)).collect()
        }
    };
    let labels: Vec<String> = (0..n).map(label_of_mask).collect();
    let degrees: Vec<u32> = (0..n).map(degree_of_mask).collect();

    // sign of merging two disjoint sorted generator sets: count Koszul
    // transpositions needed to interleave
    let merge_sign = |s: usize, t: usize| -> u32 {
        if field.p() == 2 {
            return 1;
        }
        let mut inversions_odd = 0u32;
        for i in 0..d {
            if t >> i & 1 == 0 {
                continue;
            }
            for j in (i + 1)..d {
                if s >> j & 1 == 1 && gen_degrees[i] % 2 == 1 && gen_degrees[j] % 2 == 1 {
                    inversions_odd ^= 1;
                }
            }
        }
        if inversions_odd == 1 {
            field.neg(1)
        } else {
            1
        }
    };

    let mut mult = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(n);
        for t in 0..n {
            let mut v = FVector::zeros(field, n);
            if s & t == 0 {
                v.set(s | t, merge_sign(s, t));
            }
            row.push(v);
        }
        mult.push(row);
    }

    let bare = GradedAlgebra::new(field, labels.clone(), degrees.clone(), 0, mult.clone(), None)?;
    let gen_comult: BTreeMap<usize, FVector> =
        (0..d).map(|i| (1usize << i, primitive_tensor(&bare, 1 << i))).collect();
    let factorizations: Vec<Vec<usize>> =
        (0..n).map(|mask| (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| 1usize << i).collect()).collect();
    let table = comult_from_factorizations(&bare, &gen_comult, &factorizations);
    GradedAlgebra::new(field, labels, degrees, 0, mult, Some(table))
}

/// Truncated polynomial algebra k[x]/(x^p) with x primitive.
///
/// For p = 2 this coincides with the one-generator exterior algebra; for odd
/// p the generator degree must be even.
pub fn make_truncated_poly(field: PrimeField, gen_degree: u32) -> Result<GradedAlgebra> {
    let p = field.p();
    if gen_degree == 0 {
        return Err(Error::Unsupported("generator must have positive degree".into()));
    }
    if p == 2 {
        return make_exterior(field, &[gen_degree]);
    }
    if gen_degree % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "truncated polynomial algebra over F_{p} requires an even generator degree"
        )));
    }
    let n = p as usize;
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".into(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        })
        .collect();
    let degrees: Vec<u32> = (0..n as u32).map(|i| i * gen_degree).collect();
    let mut mult = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = FVector::zeros(field, n);
            if i + j < n {
                v.set(i + j, 1);
            }
            row.push(v);
        }
        mult.push(row);
    }
    // binomial coproduct on powers of a primitive even-degree generator
    let mut table: ComultTable = Vec::with_capacity(n);
    for m in 0..n {
        let mut terms = Vec::new();
        for k in 0..=m {
            let c = binom_mod_p(m as u64, k as u64, p as u64);
            if c != 0 {
                terms.push((k, m - k, c as u32));
            }
        }
        table.push(terms);
    }
    GradedAlgebra::new(field, labels, degrees, 0, mult, Some(table))
}

fn binom_mod_p(mut m: u64, mut k: u64, p: u64) -> u64 {
    // Lucas' theorem
    let mut result = 1u64;
    while m > 0 || k > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return 0;
        }
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..kd {
            num = num * ((md - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // invert den mod p
        let mut inv = 1u64;
        let mut base = den % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                inv = inv * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result = result * num % p * inv % p;
        m /= p;
        k /= p;
    }
    result
}

// ---------------------------------------------------------------------------
// Admissible-monomial arithmetic in the mod-2 Steenrod algebra.
// ---------------------------------------------------------------------------

fn binom_mod2(m: i64, k: i64) -> u32 {
    if k < 0 || m < 0 || k > m {
        0
    } else {
        ((m as u64 & k as u64) == k as u64) as u32
    }
}

fn is_admissible(mono: &[u32]) -> bool {
    mono.windows(2).all(|w| w[0] >= 2 * w[1])
}

/// Reduce a product of Steenrod squares to a sum of admissible monomials.
/// Works over F_2; the result is the set of monomials with odd coefficient.
fn admissible_expansion(
    mono: &[u32],
    memo: &mut BTreeMap<Vec<u32>, Vec<Vec<u32>>>,
) -> Vec<Vec<u32>> {
    if let Some(hit) = memo.get(mono) {
        return hit.clone();
    }
    let result: Vec<Vec<u32>> = match (0..mono.len().saturating_sub(1))
        .find(|&i| mono[i] < 2 * mono[i + 1])
    {
        None => vec![mono.to_vec()],
        Some(i) => {
            let (a, b) = (mono[i] as i64, mono[i + 1] as i64);
            let mut acc: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
            for c in 0..=(a / 2) {
                if binom_mod2(b - c - 1, a - 2 * c) == 0 {
                    continue;
                }
                let mut replacement: Vec<u32> = mono[..i].to_vec();
                replacement.push((a + b - c) as u32);
                if c > 0 {
                    replacement.push(c as u32);
                }
                replacement.extend_from_slice(&mono[i + 2..]);
                for term in admissible_expansion(&replacement, memo) {
                    *acc.entry(term).or_insert(0) ^= 1;
                }
            }
            acc.into_iter().filter(|&(_, c)| c == 1).map(|(t, _)| t).collect()
        }
    };
    memo.insert(mono.to_vec(), result.clone());
    result
}

/// The subalgebra of the mod-2 Steenrod algebra generated by Sq1 and Sq2.
/// Multiplication comes from reducing concatenated words to the admissible
/// basis; the coproduct is the usual Cartan coproduct on the generators,
/// extended multiplicatively.
pub fn make_steenrod_a1() -> Result<GradedAlgebra> {
    let field = PrimeField::f2();
    // words in the generators Sq1, Sq2; these 8 span the subalgebra
    let words: Vec<Vec<u32>> = vec![
        vec![],
        vec![1],
        vec![2],
        vec![1, 2],
        vec![2, 1],
        vec![1, 2, 1],
        vec![2, 1, 2],
        vec![2, 1, 2, 1],
    ];
    let labels: Vec<String> = words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|s| format!("Sq{s}")).collect()
            }
        })
        .collect();
    let degrees: Vec<u32> = words.iter().map(|w| w.iter().sum()).collect();
    let n = words.len();

    let mut memo = BTreeMap::new();
    let expansions: Vec<Vec<Vec<u32>>> =
        words.iter().map(|w| admissible_expansion(w, &mut memo)).collect();
    for e in &expansions {
        debug_assert!(e.iter().all(|m| is_admissible(m)));
    }

    // Coordinatize the admissible monomials that can appear in products.
    let mut mono_index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut product_raw: Vec<Vec<Vec<Vec<u32>>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut cat = words[i].clone();
            cat.extend_from_slice(&words[j]);
            let exp = admissible_expansion(&cat, &mut memo);
            for m in &exp {
                let next = mono_index.len();
                mono_index.entry(m.clone()).or_insert(next);
            }
            row.push(exp);
        }
        product_raw.push(row);
    }
    for e in &expansions {
        for m in e {
            let next = mono_index.len();
            mono_index.entry(m.clone()).or_insert(next);
        }
    }
    let width = mono_index.len();
    let to_vec = |terms: &[Vec<u32>]| -> FVector {
        let mut v = FVector::zeros(field, width);
        for m in terms {
            let i = mono_index[m];
            v.set(i, field.add(v.get(i), 1));
        }
        v
    };

    // basis expansions must be linearly independent (dimension 8)
    let mut span = Echelon::new(field, width);
    for e in &expansions {
        if span.insert(to_vec(e)).is_none() {
            return Err(Error::InvalidAlgebra(vec![
                "generator words are linearly dependent in the admissible basis".into(),
            ]));
        }
    }

    // express each product in the 8-element basis
    let basis_matrix = {
        let mut m = FMatrix::zeros(field, width, n);
        for (j, e) in expansions.iter().enumerate() {
            let v = to_vec(e);
            for i in v.support() {
                m.set(i, j, v.get(i));
            }
        }
        m
    };
    let top = *degrees.iter().max().unwrap();
    let mut mult = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let target = to_vec(&product_raw[i][j]);
            let deg = degrees[i] + degrees[j];
            if deg > top {
                // products above the top degree must vanish in the subalgebra
                if !target.is_zero() {
                    return Err(Error::InvalidAlgebra(vec![format!(
                        "product of {} and {} survives above the top degree",
                        labels[i], labels[j]
                    )]));
                }
                row.push(FVector::zeros(field, n));
                continue;
            }
            let coords = basis_matrix.solve(&target).ok_or_else(|| {
                Error::InvalidAlgebra(vec![format!(
                    "product of {} and {} leaves the 8-dimensional span",
                    labels[i], labels[j]
                )])
            })?;
            row.push(coords);
        }
        mult.push(row);
    }

    let bare = GradedAlgebra::new(field, labels.clone(), degrees.clone(), 0, mult.clone(), None)?;
    // Cartan coproducts of the generators: Sq1 primitive,
    // Sq2 |-> Sq2(x)1 + Sq1(x)Sq1 + 1(x)Sq2.
    let sq1 = 1usize;
    let sq2 = 2usize;
    let mut sq2_comult = primitive_tensor(&bare, sq2);
    sq2_comult.set(sq1 * n + sq1, 1);
    let gen_comult: BTreeMap<usize, FVector> =
        [(sq1, primitive_tensor(&bare, sq1)), (sq2, sq2_comult)].into_iter().collect();
    let factorizations: Vec<Vec<usize>> = words
        .iter()
        .map(|w| w.iter().map(|&s| if s == 1 { sq1 } else { sq2 }).collect())
        .collect();
    let table = comult_from_factorizations(&bare, &gen_comult, &factorizations);
    GradedAlgebra::new(field, labels, degrees, 0, mult, Some(table))
}

/// The 8-dimensional cocommutative, noncommutative Hopf algebra over F_2
/// generated by x1, x2, x3 in degrees 1, 2, 3 with all squares zero, x3
/// central, and x1 x2 = x2 x1 + x3. Built as the dual of the commutative
/// exterior coalgebra whose degree-3 cogenerator has the mixed coproduct
/// term e1 (x) e2.
pub fn make_noncomm_m() -> Result<GradedAlgebra> {
    let field = PrimeField::f2();
    let base = make_exterior(field, &[1, 2, 3])?;
    let n = base.dim();
    // masks: e1 = 1, e2 = 2, e3 = 4
    let (e1, e2, e3) = (1usize, 2usize, 4usize);
    let mut e3_comult = primitive_tensor(&base, e3);
    e3_comult.set(e1 * n + e2, 1);
    let gen_comult: BTreeMap<usize, FVector> = [
        (e1, primitive_tensor(&base, e1)),
        (e2, primitive_tensor(&base, e2)),
        (e3, e3_comult),
    ]
    .into_iter()
    .collect();
    let factorizations: Vec<Vec<usize>> = (0..n)
        .map(|mask| (0..3).filter(|&i| mask >> i & 1 == 1).map(|i| 1usize << i).collect())
        .collect();
    let table = comult_from_factorizations(&base, &gen_comult, &factorizations);
    let twisted = GradedAlgebra::new(
        field,
        base.labels().to_vec(),
        base.degrees().to_vec(),
        0,
        (0..n).map(|i| (0..n).map(|j| base.mul_basis(i, j).clone()).collect()).collect(),
        Some(table),
    )?;
    let dual = dualize(&twisted)?;
    // cosmetic relabeling of the dual basis by generator monomials
    let relabel: BTreeMap<&str, &str> = [
        ("1^", "1"),
        ("e1^", "x1"),
        ("e2^", "x2"),
        ("e3^", "x3"),
        ("e1e2^", "x2x1"),
        ("e1e3^", "x1x3"),
        ("e2e3^", "x2x3"),
        ("e1e2e3^", "x1x2x3"),
    ]
    .into_iter()
    .collect();
    let labels: Vec<String> = dual
        .labels()
        .iter()
        .map(|l| relabel.get(l.as_str()).map(|s| s.to_string()).unwrap_or_else(|| l.clone()))
        .collect();
    GradedAlgebra::new(
        field,
        labels,
        dual.degrees().to_vec(),
        dual.unit_index(),
        (0..n).map(|i| (0..n).map(|j| dual.mul_basis(i, j).clone()).collect()).collect(),
        dual.comult().cloned(),
    )
}

/// Tensor product of algebras over the same field, with Koszul signs.
/// Basis pairs are ordered with the left factor outermost.
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra> {
    if a.field() != b.field() {
        return Err(Error::CharMismatch(a.field().p(), b.field().p()));
    }
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let idx = |i: usize, j: usize| i * nb + j;
    let mut labels = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            labels.push(format!("{}*{}", a.label(i), b.label(j)));
            degrees.push(a.degree(i) + b.degree(j));
        }
    }
    let mut mult = vec![vec![FVector::zeros(f, n); n]; n];
    for i1 in 0..na {
        for j1 in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    let mut sign = 1u32;
                    if f.p() != 2 && (b.degree(j1) * a.degree(i2)) % 2 == 1 {
                        sign = f.neg(1);
                    }
                    let pa = a.mul_basis(i1, i2);
                    let pb = b.mul_basis(j1, j2);
                    let out = &mut mult[idx(i1, j1)][idx(i2, j2)];
                    for ka in pa.support() {
                        for kb in pb.support() {
                            let c = f.mul(sign, f.mul(pa.get(ka), pb.get(kb)));
                            let t = idx(ka, kb);
                            out.set(t, f.add(out.get(t), c));
                        }
                    }
                }
            }
        }
    }
    let comult = match (a.comult(), b.comult()) {
        (Some(ta), Some(tb)) => {
            let mut table: ComultTable = Vec::with_capacity(n);
            for i in 0..na {
                for j in 0..nb {
                    let mut terms: BTreeMap<(usize, usize), u32> = BTreeMap::new();
                    for &(la, ra, ca) in &ta[i] {
                        for &(lb, rb, cb) in &tb[j] {
                            // (la (x) lb) (x) (ra (x) rb), sign from moving lb past ra
                            let mut c = f.mul(ca, cb);
                            if f.p() != 2 && (a.degree(ra) * b.degree(lb)) % 2 == 1 {
                                c = f.neg(c);
                            }
                            let key = (idx(la, lb), idx(ra, rb));
                            let e = terms.entry(key).or_insert(0);
                            *e = f.add(*e, c);
                        }
                    }
                    table.push(
                        terms
                            .into_iter()
                            .filter(|&(_, c)| c != 0)
                            .map(|((l, r), c)| (l, r, c))
                            .collect(),
                    );
                }
            }
            Some(table)
        }
        _ => None,
    };
    GradedAlgebra::new(f, labels, degrees, idx(a.unit_index(), b.unit_index()), mult, comult)
}

/// A Hopf-algebra quotient A -> A/(A x) together with the projection matrix.
pub struct AlgebraQuotient {
    pub quotient: GradedAlgebra,
    /// dim(quotient) x dim(A) matrix of the projection.
    pub projection: FMatrix,
}

/// Quotient by the two-sided ideal generated by a central, primitive,
/// homogeneous element x. The quotient basis is the set of basis elements at
/// non-pivot coordinates of the ideal's echelon; representatives are reduced
/// deterministically.
pub fn quotient_by_central(a: &GradedAlgebra, x: &FVector) -> Result<AlgebraQuotient> {
    let f = a.field();
    let n = a.dim();
    let deg = a
        .degree_of(x)
        .ok_or_else(|| Error::Unsupported("quotient generator must be homogeneous".into()))?;
    if deg == 0 {
        return Err(Error::Unsupported("quotient generator must have positive degree".into()));
    }
    // centrality with Koszul signs
    for j in 0..n {
        let xb = a.mul_elts(x, &a.basis_elt(j));
        let mut bx = a.mul_elts(&a.basis_elt(j), x);
        if f.p() != 2 && (deg * a.degree(j)) % 2 == 1 {
            bx.scale(f.neg(1));
        }
        if xb != bx {
            return Err(Error::Unsupported(format!(
                "quotient generator is not central: fails against basis element {j}"
            )));
        }
    }
    // primitivity (when a coproduct is present)
    if let Some(table) = a.comult() {
        let mut expected: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let u = a.unit_index();
        for i in x.support() {
            let c = x.get(i);
            *expected.entry((i, u)).or_insert(0) = c;
            *expected.entry((u, i)).or_insert(0) = c;
        }
        let mut actual: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for i in x.support() {
            for &(l, r, c) in &table[i] {
                let e = actual.entry((l, r)).or_insert(0);
                *e = f.add(*e, f.mul(x.get(i), c));
            }
        }
        actual.retain(|_, c| *c != 0);
        expected.retain(|_, c| *c != 0);
        if actual != expected {
            return Err(Error::Unsupported("quotient generator is not primitive".into()));
        }
    }

    // left ideal A*x; by centrality it is two-sided
    let spanning: Vec<FVector> = (0..n).map(|j| a.mul_elts(&a.basis_elt(j), x)).collect();
    let ideal = Subspace::from_spanning(f, n, &spanning);
    let free_coords = ideal.complement_coords();
    let q = free_coords.len();
    let coord_of: BTreeMap<usize, usize> =
        free_coords.iter().enumerate().map(|(qi, &j)| (j, qi)).collect();
    let mut projection = FMatrix::zeros(f, q, n);
    for j in 0..n {
        let mut probe = FVector::zeros(f, n);
        probe.set(j, 1);
        let r = ideal.reduce(probe);
        for s in r.support() {
            projection.set(coord_of[&s], j, r.get(s));
        }
    }

    let labels: Vec<String> = free_coords.iter().map(|&j| a.label(j).to_string()).collect();
    let degrees: Vec<u32> = free_coords.iter().map(|&j| a.degree(j)).collect();
    let unit = coord_of[&a.unit_index()];
    let mut mult = vec![vec![FVector::zeros(f, q); q]; q];
    for (qi, &i) in free_coords.iter().enumerate() {
        for (qj, &j) in free_coords.iter().enumerate() {
            let prod = projection.mul_vec(a.mul_basis(i, j));
            mult[qi][qj] = prod;
        }
    }
    let comult = a.comult().map(|table| {
        let mut out: ComultTable = Vec::with_capacity(q);
        for &i in &free_coords {
            let mut terms: BTreeMap<(usize, usize), u32> = BTreeMap::new();
            for &(l, r, c) in &table[i] {
                let pl = projection.mul_vec(&a.basis_elt(l));
                let pr = projection.mul_vec(&a.basis_elt(r));
                for s in pl.support() {
                    for t in pr.support() {
                        let e = terms.entry((s, t)).or_insert(0);
                        *e = f.add(*e, f.mul(c, f.mul(pl.get(s), pr.get(t))));
                    }
                }
            }
            out.push(
                terms.into_iter().filter(|&(_, c)| c != 0).map(|((l, r), c)| (l, r, c)).collect(),
            );
        }
        out
    });
    let quotient = GradedAlgebra::new(f, labels, degrees, unit, mult, comult)?;
    Ok(AlgebraQuotient { quotient, projection })
}
