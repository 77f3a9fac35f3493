//! Exact scalar fields.
//!
//! Every matrix and polynomial in the crate is generic over a [`Field`]
//! context. The context owns whatever runtime data the arithmetic needs
//! (the modulus for `F_p`), so elements stay plain values: `BigRational`
//! over Q and a reduced `u64` residue over `F_p`.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime_u64;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Runtime description of a field, as carried by the matrix file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> RingSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Whether `a` is a canonical element (reduced fraction, residue in `[0, p)`).
    fn is_canonical(&self, a: &Self::Elem) -> bool;

    fn from_integer(&self, v: &BigInt) -> Self::Elem;

    /// Image of a rational; fails over `F_p` when `p` divides the denominator.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// Canonical rational lift (residues lift to `0..p`).
    fn to_rational(&self, a: &Self::Elem) -> BigRational;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(v))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Exact rank. The default is row reduction with the first nonzero
    /// entry of each column as pivot.
    fn rank(&self, m: &ExactMatrix<Self>) -> usize {
        crate::elim::gauss_rank(m)
    }
}

/// The rationals, backed by `num_rational::BigRational`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> RingSpec {
        RingSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_canonical(&self, a: &BigRational) -> bool {
        a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
    }

    fn from_integer(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn rank(&self, m: &ExactMatrix<Self>) -> usize {
        crate::elim::bareiss_rank(m)
    }
}

/// The prime field `F_p` for a word-sized prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` passes a deterministic primality test.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(a, self.p - 2))
    }

    fn is_canonical(&self, a: &u64) -> bool {
        *a < self.p
    }

    fn from_integer(&self, v: &BigInt) -> u64 {
        self.reduce_big(v)
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let den = self.reduce_big(q.denom());
        let inv = self.inv(&den).ok_or_else(|| {
            Error::ZeroDivisor(format!("denominator {} vanishes mod {}", q.denom(), self.p))
        })?;
        Ok(self.mul(&self.reduce_big(q.numer()), &inv))
    }

    fn to_rational(&self, a: &u64) -> BigRational {
        BigRational::from_integer(BigInt::from(*a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), 4);
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(f2.from_rational(&half), Err(Error::ZeroDivisor(_))));
    }

    #[test]
    fn fermat_on_small_residues() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_eq!(f.pow(&a, 6), 1);
        }
    }
}
