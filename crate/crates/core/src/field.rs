//! Arithmetic in prime fields GF(q).
//!
//! Elements are plain residues in `[0, q)`. All operations take and return
//! residues; callers are responsible for passing reduced operands.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A prime field GF(q), identified by its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    q: u32,
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let q = q as u64;
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q })
    }

    pub const fn binary() -> Self {
        Self { q: 2 }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    pub fn check(&self, value: u32) -> Result<u32> {
        if value < self.q {
            Ok(value)
        } else {
            Err(Error::ResidueOutOfRange { value, q: self.q })
        }
    }

    /// Reduces an arbitrary integer into `[0, q)`.
    #[inline]
    pub fn reduce(&self, value: i64) -> u32 {
        value.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.q) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn pow(&self, base: u32, mut exp: u32) -> u32 {
        let m = self.q as u64;
        let mut b = base as u64 % m;
        let mut acc = 1u64 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        acc as u32
    }

    /// Nonzero residues `1..q` in increasing order.
    pub fn nonzero(&self) -> impl Iterator<Item = u32> {
        1..self.q
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        Self::new(q)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.q
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        for q in [0, 1, 4, 6, 9, 15, 21, 25] {
            assert_eq!(FieldSpec::new(q), Err(Error::NotPrime(q)));
        }
        for q in [2, 3, 5, 7, 11, 13, 65_521] {
            assert!(FieldSpec::new(q).is_ok());
        }
    }

    #[test]
    fn small_examples() {
        let f2 = FieldSpec::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f3 = FieldSpec::new(3).unwrap();
        assert_eq!(f3.inv(2).unwrap(), 2);
        let f7 = FieldSpec::new(7).unwrap();
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.neg(3), 4);
        assert_eq!(f7.sub(2, 5), 4);
        assert_eq!(f7.inv(0), Err(Error::ZeroInverse));
    }

    #[test]
    fn axioms_exhaustive_small_primes() {
        for q in [2u32, 3, 5, 7, 11, 13] {
            let f = FieldSpec::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn serde_validates_modulus() {
        let f: FieldSpec = serde_json::from_str("5").unwrap();
        assert_eq!(f.q(), 5);
        assert!(serde_json::from_str::<FieldSpec>("6").is_err());
    }
}
