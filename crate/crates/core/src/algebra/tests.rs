use super::*;
use crate::linalg::{FVector, PrimeField};

fn f2() -> PrimeField {
    PrimeField::f2()
}

#[test]
fn exterior_single_generator() {
    let a = make_exterior(f2(), &[1]).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.top_degree(), 1);
    assert!(a.violations().is_empty());
    assert!(a.is_cocommutative());
}

#[test]
fn exterior_poincare_123() {
    let a = make_exterior(f2(), &[1, 2, 3]).unwrap();
    assert_eq!(a.dim(), 8);
    // (1+t)(1+t^2)(1+t^3) = 1+t+t^2+2t^3+t^4+t^5+t^6
    assert_eq!(a.poincare_series(6), vec![1, 1, 1, 2, 1, 1, 1]);
}

#[test]
fn exterior_repeated_degree_one() {
    let a = make_exterior(f2(), &[1, 1, 1]).unwrap();
    assert_eq!(a.dim(), 8);
    assert_eq!(a.basis_of_degree(1).len(), 3);
}

#[test]
fn exterior_odd_p_rejects_even_degrees() {
    let f3 = PrimeField::new(3).unwrap();
    assert!(make_exterior(f3, &[2]).is_err());
    let a = make_exterior(f3, &[1, 3]).unwrap();
    assert!(a.violations().is_empty());
    assert!(a.is_cocommutative());
    // odd-degree generators anticommute; squares vanish
    let e1 = a.elt_by_label("e1").unwrap();
    let e2 = a.elt_by_label("e2").unwrap();
    assert!(a.mul_elts(&e1, &e1).is_zero());
    let mut anti = a.mul_elts(&e2, &e1);
    anti.scale(f3.neg(1));
    assert_eq!(a.mul_elts(&e1, &e2), anti);
}

#[test]
fn truncated_poly_f3() {
    let f3 = PrimeField::new(3).unwrap();
    let a = make_truncated_poly(f3, 2).unwrap();
    assert_eq!(a.dim(), 3);
    let mut degs = a.degrees().to_vec();
    degs.sort_unstable();
    assert_eq!(degs, vec![0, 2, 4]);
    assert!(a.violations().is_empty());
    assert!(a.is_cocommutative());
}

#[test]
fn truncated_poly_f2_is_exterior() {
    let a = make_truncated_poly(f2(), 1).unwrap();
    let b = make_exterior(f2(), &[1]).unwrap();
    assert_eq!(to_spec(&a), to_spec(&b));
}

#[test]
fn truncated_poly_f5_top_degree() {
    let f5 = PrimeField::new(5).unwrap();
    let a = make_truncated_poly(f5, 2).unwrap();
    assert_eq!(a.top_degree(), 8);
}

#[test]
fn a1_structure() {
    let a = make_steenrod_a1().unwrap();
    assert_eq!(a.dim(), 8);
    let mut degs = a.degrees().to_vec();
    degs.sort_unstable();
    assert_eq!(degs, vec![0, 1, 2, 3, 3, 4, 5, 6]);
    assert!(a.violations().is_empty());
    assert!(a.is_cocommutative());

    let sq1 = a.elt_by_label("Sq1").unwrap();
    let sq2 = a.elt_by_label("Sq2").unwrap();
    // Sq1 Sq1 = 0
    assert!(a.mul_elts(&sq1, &sq1).is_zero());
    // Sq2 Sq2 = Sq1 Sq2 Sq1 in the word basis
    let sq1sq2sq1 = a.elt_by_label("Sq1Sq2Sq1").unwrap();
    assert_eq!(a.mul_elts(&sq2, &sq2), sq1sq2sq1);
}

/// Independent cross-check of the full multiplication table: the dual of
/// the truncated polynomial coalgebra F_2[xi1, xi2]/(xi1^4, xi2^2) with the
/// standard coproduct psi(xi1) = xi1(x)1 + 1(x)xi1,
/// psi(xi2) = xi2(x)1 + xi1^2(x)xi1 + 1(x)xi2 must be isomorphic to the
/// word-basis algebra, matching the unique nonzero elements in degrees 1, 2.
#[test]
fn a1_matches_dual_truncated_polynomial() {
    let field = f2();
    // basis xi1^a xi2^b, a < 4, b < 2, indexed by (a, b)
    let idx = |a: usize, b: usize| a + 4 * b;
    let n = 8;
    let labels: Vec<String> = (0..n).map(|i| format!("m{}", i)).collect();
    let degrees: Vec<u32> = (0..n).map(|i| (i % 4 + 3 * (i / 4)) as u32).collect();
    // commutative truncated-polynomial multiplication
    let mut mult = vec![vec![FVector::zeros(field, n); n]; n];
    for a1 in 0..4 {
        for b1 in 0..2 {
            for a2 in 0..4 {
                for b2 in 0..2 {
                    if a1 + a2 < 4 && b1 + b2 < 2 {
                        mult[idx(a1, b1)][idx(a2, b2)].set(idx(a1 + a2, b1 + b2), 1);
                    }
                }
            }
        }
    }
    // coproduct: extend multiplicatively from the generators; over F_2
    // psi(xi1^a xi2^b) = psi(xi1)^a psi(xi2)^b expanded by binomials
    let binom = |m: usize, k: usize| -> u32 { ((m & k) == k) as u32 };
    let mut comult: Vec<Vec<(usize, usize, u32)>> = Vec::with_capacity(n);
    for b in 0..2usize {
        for _ in 0..0 {}
        let _ = b;
    }
    for i in 0..n {
        let (a, b) = (i % 4, i / 4);
        let mut terms: std::collections::BTreeMap<(usize, usize), u32> = Default::default();
        // psi(xi1)^a = sum_j C(a,j) xi1^j (x) xi1^{a-j}
        // psi(xi2)^b with b <= 1: b = 0 -> 1(x)1; b = 1 -> the three terms
        for j in 0..=a {
            if binom(a, j) == 0 {
                continue;
            }
            let base = vec![(j, 0usize, a - j, 0usize)];
            let expanded: Vec<(usize, usize, usize, usize)> = if b == 0 {
                base
            } else {
                // multiply by xi2(x)1 + xi1^2(x)xi1 + 1(x)xi2
                let mut out = Vec::new();
                for &(l1, l2, r1, r2) in &base {
                    out.push((l1, l2 + 1, r1, r2));
                    if l1 + 2 < 4 && r1 + 1 < 4 {
                        out.push((l1 + 2, l2, r1 + 1, r2));
                    }
                    out.push((l1, l2, r1, r2 + 1));
                }
                out
            };
            for (l1, l2, r1, r2) in expanded {
                if l1 < 4 && l2 < 2 && r1 < 4 && r2 < 2 {
                    let e = terms.entry((idx(l1, l2), idx(r1, r2))).or_insert(0);
                    *e ^= 1;
                }
            }
        }
        comult.push(terms.into_iter().filter(|&(_, c)| c != 0).map(|((l, r), c)| (l, r, c)).collect());
    }
    let milnor = GradedAlgebra::new(field, labels, degrees, 0, mult, Some(comult)).unwrap();
    let dual = dualize(&milnor).unwrap();
    assert!(dual.violations().is_empty());

    // ring isomorphism onto the word-basis algebra, generated where the
    // graded pieces are one-dimensional
    let a1 = make_steenrod_a1().unwrap();
    let g1 = dual.basis_of_degree(1);
    let g2 = dual.basis_of_degree(2);
    assert_eq!((g1.len(), g2.len()), (1, 1));
    let d_sq1 = dual.basis_elt(g1[0]);
    let d_sq2 = dual.basis_elt(g2[0]);
    let words: Vec<&[u32]> =
        vec![&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1], &[2, 1, 2], &[2, 1, 2, 1]];
    let mut images = Vec::new();
    for w in &words {
        let mut acc = dual.unit_elt();
        for &g in *w {
            let gen = if g == 1 { &d_sq1 } else { &d_sq2 };
            acc = dual.mul_elts(&acc, gen);
        }
        images.push(acc);
    }
    // images must be a basis
    let mut span = crate::linalg::Echelon::new(field, 8);
    for im in &images {
        assert!(span.insert(im.clone()).is_some(), "dual word images are dependent");
    }
    // and products must agree with the word-basis structure constants
    for i in 0..8 {
        for j in 0..8 {
            let lhs = dual.mul_elts(&images[i], &images[j]);
            let coeffs = a1.mul_basis(i, j);
            let mut rhs = FVector::zeros(field, 8);
            for k in coeffs.support() {
                rhs.add_scaled(&images[k], coeffs.get(k));
            }
            assert_eq!(lhs, rhs, "product mismatch at ({i},{j})");
        }
    }
}

#[test]
fn noncomm_m_relations() {
    let m = make_noncomm_m().unwrap();
    assert_eq!(m.dim(), 8);
    assert_eq!(m.top_degree(), 6);
    assert!(m.violations().is_empty());
    assert!(m.is_cocommutative());

    let x1 = m.elt_by_label("x1").unwrap();
    let x2 = m.elt_by_label("x2").unwrap();
    let x3 = m.elt_by_label("x3").unwrap();
    for x in [&x1, &x2, &x3] {
        assert!(m.mul_elts(x, x).is_zero());
    }
    // x1 x2 + x2 x1 = x3
    let mut comm = m.mul_elts(&x1, &x2);
    comm.add_scaled(&m.mul_elts(&x2, &x1), 1);
    assert_eq!(comm, x3);
    // x3 central
    assert_eq!(m.mul_elts(&x3, &x1), m.mul_elts(&x1, &x3));
    assert_eq!(m.mul_elts(&x3, &x2), m.mul_elts(&x2, &x3));
    // genuinely noncommutative
    assert_ne!(m.mul_elts(&x1, &x2), m.mul_elts(&x2, &x1));
}

#[test]
fn noncomm_m_dual_is_graded_commutative() {
    let m = make_noncomm_m().unwrap();
    let dual = dualize(&m).unwrap();
    assert!(dual.is_graded_commutative());
    assert!(!m.is_graded_commutative());
}

#[test]
fn dualize_involutive() {
    for a in [
        make_exterior(f2(), &[1]).unwrap(),
        make_exterior(f2(), &[1, 2]).unwrap(),
        make_steenrod_a1().unwrap(),
        make_noncomm_m().unwrap(),
        make_truncated_poly(PrimeField::new(3).unwrap(), 2).unwrap(),
    ] {
        let dd = dualize(&dualize(&a).unwrap()).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(a.mul_basis(i, j), dd.mul_basis(i, j));
            }
        }
    }
}

#[test]
fn dualize_exterior_self_dual() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let d = dualize(&a).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(a.mul_basis(i, j), d.mul_basis(i, j));
        }
    }
}

#[test]
fn tensor_product_dims_and_poincare() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let b = make_steenrod_a1().unwrap();
    let t = tensor_product(&a, &b).unwrap();
    assert_eq!(t.dim(), 16);
    assert!(t.violations().is_empty());
    // Poincaré series multiply
    let pa = a.poincare_series(7);
    let pb = b.poincare_series(7);
    let pt = t.poincare_series(7);
    for d in 0..=7usize {
        let conv: u64 = (0..=d).map(|i| pa[i] * pb[d - i]).sum();
        assert_eq!(pt[d], conv, "degree {d}");
    }
}

#[test]
fn tensor_with_trivial_is_identity() {
    let a = make_steenrod_a1().unwrap();
    let k = make_exterior(f2(), &[]).unwrap();
    assert_eq!(k.dim(), 1);
    let t = tensor_product(&a, &k).unwrap();
    assert_eq!(t.dim(), a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            assert_eq!(t.mul_basis(i, j).entries(), a.mul_basis(i, j).entries());
        }
    }
}

#[test]
fn tensor_exterior_isomorphic_structure() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let b = make_exterior(f2(), &[2]).unwrap();
    let t = tensor_product(&a, &b).unwrap();
    let direct = make_exterior(f2(), &[1, 2]).unwrap();
    // same dimension census and both valid, with matching structure up to
    // basis order: compare degreewise dims and anticommutation products
    assert_eq!(t.poincare_series(3), direct.poincare_series(3));
    let e1 = t.elt_by_label("e1*1").unwrap();
    let e2 = t.elt_by_label("1*e1").unwrap();
    let prod = t.mul_elts(&e1, &e2);
    assert!(!prod.is_zero());
    assert_eq!(t.degree_of(&prod), Some(3));
}

#[test]
fn tensor_char_mismatch() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let b = make_truncated_poly(PrimeField::new(3).unwrap(), 2).unwrap();
    assert!(tensor_product(&a, &b).is_err());
}

#[test]
fn orientation_of_builtins() {
    let mut a = make_exterior(f2(), &[1]).unwrap();
    assert_eq!(gorenstein_orientation(&mut a).unwrap().d, 1);

    let mut a1 = make_steenrod_a1().unwrap();
    assert_eq!(gorenstein_orientation(&mut a1).unwrap().d, 6);

    let mut m = make_noncomm_m().unwrap();
    assert_eq!(gorenstein_orientation(&mut m).unwrap().d, 6);

    let mut t3 = make_truncated_poly(PrimeField::new(3).unwrap(), 2).unwrap();
    assert_eq!(gorenstein_orientation(&mut t3).unwrap().d, 4);
}

#[test]
fn orientation_pairing_invertible_every_degree() {
    let mut a1 = make_steenrod_a1().unwrap();
    let o = gorenstein_orientation(&mut a1).unwrap();
    let f = a1.field();
    for q in 0..=o.d {
        let rows = a1.basis_of_degree(q);
        let cols = a1.basis_of_degree(o.d - q);
        assert_eq!(rows.len(), cols.len());
        let mut pairing = crate::linalg::FMatrix::zeros(f, rows.len(), cols.len());
        for (ri, &i) in rows.iter().enumerate() {
            for (ci, &j) in cols.iter().enumerate() {
                let prod = a1.mul_basis(i, j);
                let mut val = 0;
                for k in prod.support() {
                    val = f.add(val, f.mul(prod.get(k), o.functional.get(k)));
                }
                pairing.set(ri, ci, val);
            }
        }
        assert!(pairing.is_invertible(), "degenerate at degree {q}");
    }
}

#[test]
fn spec_roundtrip() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let spec = to_spec(&a);
    let back = from_spec(&spec).unwrap();
    assert_eq!(to_spec(&back), spec);
    // serde round-trip through a string
    let s = serde_json::to_string(&spec).unwrap();
    let a2 = from_spec_str(&s).unwrap();
    assert_eq!(to_spec(&a2), spec);
}

#[test]
fn spec_rejects_unknown_fields() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let mut v = serde_json::to_value(to_spec(&a)).unwrap();
    v.as_object_mut().unwrap().insert("extra".into(), serde_json::json!(1));
    let s = serde_json::to_string(&v).unwrap();
    assert!(from_spec_str(&s).is_err());
}

#[test]
fn spec_degree_additivity_violation_named() {
    let a = make_exterior(f2(), &[1]).unwrap();
    let mut spec = to_spec(&a);
    // make 1 * e1 land in degree 0
    spec.mult[0][1] = vec![1, 0];
    match from_spec(&spec) {
        Err(crate::error::Error::InvalidAlgebra(violations)) => {
            assert!(violations.iter().any(|v| v.contains("(0,1)")), "got {violations:?}");
        }
        other => panic!("expected invalid algebra, got {other:?}"),
    }
}

#[test]
fn a1_spec_fixture_matches_builder() {
    let a1 = make_steenrod_a1().unwrap();
    let fixture = include_str!("../../tests/data/a1_spec.json");
    let parsed = from_spec_str(fixture).unwrap();
    assert_eq!(to_spec(&parsed), to_spec(&a1));
}

#[test]
fn quotient_by_central_exterior() {
    let a = make_exterior(f2(), &[1, 2, 3]).unwrap();
    let e1 = a.elt_by_label("e1").unwrap();
    let q = quotient_by_central(&a, &e1).unwrap();
    assert_eq!(q.quotient.dim(), 4);
    assert!(q.quotient.violations().is_empty());
    let mut degs = q.quotient.degrees().to_vec();
    degs.sort_unstable();
    assert_eq!(degs, vec![0, 2, 3, 5]);
}

#[test]
fn quotient_chain_a1() {
    // commutator of Sq1 and Sq2 = Sq1Sq2 + Sq2Sq1, central and primitive
    let a1 = make_steenrod_a1().unwrap();
    let mut q1_elt = a1.elt_by_label("Sq1Sq2").unwrap();
    q1_elt.add_scaled(&a1.elt_by_label("Sq2Sq1").unwrap(), 1);
    let step0 = quotient_by_central(&a1, &q1_elt).unwrap();
    assert_eq!(step0.quotient.dim(), 4);
    // further quotient by the image of Sq1 leaves the exterior on Sq2
    let sq1_bar = step0.projection.mul_vec(&a1.elt_by_label("Sq1").unwrap());
    let step1 = quotient_by_central(&step0.quotient, &sq1_bar).unwrap();
    assert_eq!(step1.quotient.dim(), 2);
    let sq2_bar = step1
        .projection
        .mul_vec(&step0.projection.mul_vec(&a1.elt_by_label("Sq2").unwrap()));
    let step2 = quotient_by_central(&step1.quotient, &sq2_bar).unwrap();
    assert_eq!(step2.quotient.dim(), 1);
}

#[test]
fn monogenic_detection() {
    let a = make_exterior(f2(), &[2]).unwrap();
    let (g, h) = a.monogenic_generator().unwrap();
    assert_eq!(a.degree(g), 2);
    assert_eq!(h, 2);
    let t = make_truncated_poly(PrimeField::new(5).unwrap(), 2).unwrap();
    let (_, h5) = t.monogenic_generator().unwrap();
    assert_eq!(h5, 5);
    assert!(make_steenrod_a1().unwrap().monogenic_generator().is_none());
}
