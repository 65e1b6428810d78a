//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every scalar is an exact [`BigRational`]. Over `F_p` the stored value is
//! always an integer in `[0, p)`, so equality and hashing stay canonical.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// A coefficient field of characteristic 0 (the rationals) or a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoefficientField {
    characteristic: u32,
}

impl CoefficientField {
    pub const RATIONALS: CoefficientField = CoefficientField { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p >= (1u32 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(CoefficientField { characteristic: p })
    }

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    fn reduce(&self, x: BigRational) -> Scalar {
        if self.characteristic == 0 {
            return x;
        }
        let p = BigInt::from(self.characteristic);
        let num = x.numer().mod_floor(&p);
        let den = x.denom().mod_floor(&p);
        if den.is_one() {
            return BigRational::from_integer(num);
        }
        let inv = mod_inverse(&den, &p).expect("denominator divisible by the characteristic");
        BigRational::from_integer((num * inv).mod_floor(&p))
    }

    /// Maps an integer into the field.
    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        self.reduce(BigRational::from_integer(n))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        if self.characteristic == 0 {
            return a.recip();
        }
        let p = BigInt::from(self.characteristic);
        let inv = mod_inverse(a.numer(), &p).expect("nonzero residue is invertible");
        BigRational::from_integer(inv)
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Whether a scalar prints with a leading minus sign (only meaningful over Q).
    pub(crate) fn is_negative(&self, a: &Scalar) -> bool {
        self.characteristic == 0 && a.is_negative()
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F{}", self.characteristic)
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(p).extended_gcd(p);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(p))
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(CoefficientField::prime(4).is_err());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(2).is_ok());
        assert!(CoefficientField::prime(2147483647).is_ok());
        assert!(CoefficientField::prime(2147483649).is_err());
        assert!(CoefficientField::prime(2147483641).is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let f = CoefficientField::prime(7).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(6));
        let half = f.inv(&f.from_int(2));
        assert_eq!(f.mul(&half, &f.from_int(2)), f.one());
        assert_eq!(f.add(&f.from_int(3), &f.from_int(4)), f.zero());
    }

    #[test]
    fn rational_division_is_exact() {
        let q = CoefficientField::rationals();
        let a = q.div(&q.from_int(1), &q.from_int(3));
        assert_eq!(q.mul(&a, &q.from_int(3)), q.one());
    }
}
