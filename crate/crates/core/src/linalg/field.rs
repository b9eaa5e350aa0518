//! Prime fields F_p for small p. Arithmetic is table-free; p is fixed per
//! session and mixed-characteristic operations are rejected at construction.

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// A prime field F_p, p >= 2. Cheap to copy; equality is equality of p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// The two-element field; the dominant case.
    pub fn f2() -> Self {
        PrimeField { p: 2 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_f2(&self) -> bool {
        self.p == 2
    }

    pub fn reduce(&self, n: i64) -> u32 {
        (n.rem_euclid(self.p as i64)) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        let mut acc = 1u64;
        let mut base = (a % self.p) as u64;
        let mut e = self.p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }
}
