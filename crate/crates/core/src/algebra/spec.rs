//! The on-disk algebra description. Field names are fixed; unknown fields
//! are rejected.

use serde::{Deserialize, Serialize};

use super::{ComultTable, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FVector, PrimeField};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BasisEltSpec {
    pub label: String,
    pub degree: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub p: u32,
    pub basis: Vec<BasisEltSpec>,
    pub unit: usize,
    /// mult[i][j] = coefficient vector of basis_i * basis_j
    pub mult: Vec<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Vec<(usize, usize, u32)>>>,
}

/// Validate and build an algebra from its spec.
pub fn from_spec(spec: &AlgebraSpec) -> Result<GradedAlgebra> {
    let field = PrimeField::new(spec.p)?;
    let n = spec.basis.len();
    if spec.mult.len() != n || spec.mult.iter().any(|row| row.len() != n) {
        return Err(Error::Spec(format!("mult table must be {n} x {n}")));
    }
    for row in &spec.mult {
        for v in row {
            if v.len() != n {
                return Err(Error::Spec(format!("every product vector must have length {n}")));
            }
        }
    }
    if spec.unit >= n {
        return Err(Error::Spec(format!("unit index {} out of range", spec.unit)));
    }
    if let Some(table) = &spec.comult {
        if table.len() != n {
            return Err(Error::Spec(format!("comult table must have {n} entries")));
        }
        for terms in table {
            for &(l, r, _) in terms {
                if l >= n || r >= n {
                    return Err(Error::Spec("comult term index out of range".into()));
                }
            }
        }
    }
    let labels: Vec<String> = spec.basis.iter().map(|b| b.label.clone()).collect();
    let degrees: Vec<u32> = spec.basis.iter().map(|b| b.degree).collect();
    let mult: Vec<Vec<FVector>> = spec
        .mult
        .iter()
        .map(|row| row.iter().map(|v| FVector::from_entries(field, v)).collect())
        .collect();
    let comult: Option<ComultTable> = spec.comult.clone();
    GradedAlgebra::new(field, labels, degrees, spec.unit, mult, comult)
}

pub fn from_spec_str(s: &str) -> Result<GradedAlgebra> {
    let spec: AlgebraSpec = serde_json::from_str(s)?;
    from_spec(&spec)
}

/// Canonical spec of an algebra; `from_spec(to_spec(a))` rebuilds `a`.
pub fn to_spec(a: &GradedAlgebra) -> AlgebraSpec {
    let n = a.dim();
    AlgebraSpec {
        p: a.field().p(),
        basis: (0..n)
            .map(|i| BasisEltSpec { label: a.label(i).to_string(), degree: a.degree(i) })
            .collect(),
        unit: a.unit_index(),
        mult: (0..n)
            .map(|i| (0..n).map(|j| a.mul_basis(i, j).entries()).collect())
            .collect(),
        comult: a.comult().cloned(),
    }
}
