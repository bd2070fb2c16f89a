//! Exact coefficient fields: prime fields GF(p) and the rationals.
//!
//! Everything downstream is generic over [`Field`]; there is no floating
//! point anywhere in this crate.

use std::fmt;
use std::hash::Hash;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// Runtime description of a coefficient field, used for serialization and
/// for dispatching the generic machinery from the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// GF(p) for a prime p ≤ 2^31.
    Prime(u64),
    /// The rational numbers with arbitrary-precision arithmetic.
    Rationals,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// An exact field. `Elem` values are always kept in canonical form
/// (reduced mod p, normalized fractions), so `PartialEq` is semantic
/// equality and hashing is stable.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Hash {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Hash;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Canonical text form, used by the JSON formats ("n/d" over Q).
    fn elem_to_string(&self, a: &Self::Elem) -> String;

    /// Parse the canonical text form.
    fn elem_from_str(&self, s: &str) -> Result<Self::Elem, Error>;
}

/// GF(p), elements stored as canonical representatives in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p > (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic must be a prime <= 2^31, got {p}"
            )));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for Fp {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p <= 2^31 so the product fits in u64.
        (a * b) % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            let r = r0 - q * r1;
            r0 = r1;
            r1 = r;
            let s = s0 - q * s1;
            s0 = s1;
            s1 = s;
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        Some(((s0 % p + p) % p) as u64)
    }

    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        ((n % p + p) % p) as u64
    }

    fn elem_to_string(&self, a: &u64) -> String {
        a.to_string()
    }

    fn elem_from_str(&self, s: &str) -> Result<u64, Error> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad GF({}) element: {s:?}", self.p)))?;
        Ok(self.from_i64(n))
    }
}

/// The rational numbers; elements are normalized `BigRational`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rat;

impl Field for Rat {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
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

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn elem_to_string(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn elem_from_str(&self, s: &str) -> Result<BigRational, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        } else {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_basics() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_i64(-1), 6);
        assert!(Fp::new(6).is_err());
        assert!(Fp::new(1).is_err());
    }

    #[test]
    fn fp_inverse_all_nonzero() {
        let f = Fp::new(101).unwrap();
        for a in 1..101 {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
    }

    #[test]
    fn rat_roundtrip() {
        let f = Rat;
        let x = f.elem_from_str("-3/6").unwrap();
        assert_eq!(f.elem_to_string(&x), "-1/2");
        let y = f.elem_from_str("4").unwrap();
        assert_eq!(f.add(&x, &y), f.elem_from_str("7/2").unwrap());
        assert!(f.elem_from_str("1/0").is_err());
    }
}
