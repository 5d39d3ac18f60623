//! Exact base rings: the integers, the rationals and prime fields Z/p.
//!
//! Arithmetic is organised around ring objects: a [`Ring`] value describes a
//! coefficient ring and performs all operations on its element type. This is
//! what lets the rest of the crate stay generic while Z/p carries a runtime
//! modulus and polynomial rings (see [`crate::poly::PolyRing`]) serve as base
//! rings for finite algebras.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with exact arithmetic, presented as a ring object.
///
/// All values are immutable; operations are pure functions of the ring and
/// its elements, so everything here is safe to use from concurrent readers.
pub trait Ring: Clone + Eq + Hash + fmt::Debug {
    type Elem: Clone + Eq + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Multiplicative inverse, `None` if `a` is not a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Exact quotient `a / b`, `None` if `b` is zero or does not divide `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn is_field(&self) -> bool;
    fn is_domain(&self) -> bool;

    /// Canonical text form of an element; parseable by [`Ring::parse_elem`].
    fn format(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;

    /// Short human-readable ring name for diagnostics.
    fn notation(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut k: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}

/// The ring of integers Z with arbitrary-precision elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_one() || (-a).is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn is_field(&self) -> bool {
        false
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, text: &str) -> Result<BigInt> {
        BigInt::from_str(text.trim()).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("invalid integer `{text}`: {e}"),
        })
    }
    fn notation(&self) -> String {
        "ZZ".into()
    }
}

/// The field of rationals Q with arbitrary-precision elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

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
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse_elem(&self, text: &str) -> Result<BigRational> {
        BigRational::from_str(text.trim()).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("invalid rational `{text}`: {e}"),
        })
    }
    fn notation(&self) -> String {
        "QQ".into()
    }
}

/// The prime field Z/p for a machine-word prime p < 2^31.
///
/// Elements are canonical representatives in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Construct Z/p, verifying primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1u64 << 31).contains(&p) || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow_mod(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = u64;

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
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        u64::try_from(r).expect("residue fits u64")
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow_mod(*a, self.p - 2))
        }
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inverse(b).map(|inv| self.mul(a, &inv))
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse_elem(&self, text: &str) -> Result<u64> {
        let n = BigInt::from_str(text.trim()).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("invalid residue `{text}`: {e}"),
        })?;
        Ok(self.from_bigint(&n))
    }
    fn notation(&self) -> String {
        format!("Z/{}", self.p)
    }
}

/// Deterministic trial-division primality test for p < 2^31.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Descriptor for the three scalar base rings of the library.
///
/// Used at I/O boundaries where the ring kind is runtime data; computations
/// dispatch from a `BaseRing` to the matching concrete ring object.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BaseRing {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl BaseRing {
    /// Z/p descriptor with the same validation as [`PrimeField::new`].
    pub fn prime_field(p: u64) -> Result<Self> {
        PrimeField::new(p)?;
        Ok(BaseRing::PrimeField(p))
    }

    /// The fraction field of the base ring: Q for Z, itself for fields.
    pub fn fraction_field(&self) -> BaseRing {
        match self {
            BaseRing::Integers => BaseRing::Rationals,
            other => *other,
        }
    }

    pub fn notation(&self) -> String {
        match self {
            BaseRing::Integers => "ZZ".into(),
            BaseRing::Rationals => "QQ".into(),
            BaseRing::PrimeField(p) => format!("Z/{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1 is prime
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(6), Err(Error::NotPrime(6)));
        assert_eq!(PrimeField::new(1 << 31), Err(Error::NotPrime(1 << 31)));
    }

    #[test]
    fn mod_p_arithmetic() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.inverse(&3), Some(2));
        assert_eq!(f5.inverse(&0), None);
        assert_eq!(f5.from_i64(-7), 3);
    }

    #[test]
    fn integer_exact_division() {
        let z = Integers;
        assert_eq!(z.exact_div(&z.from_i64(12), &z.from_i64(-4)), Some(z.from_i64(-3)));
        assert_eq!(z.exact_div(&z.from_i64(7), &z.from_i64(2)), None);
        assert_eq!(z.exact_div(&z.from_i64(7), &z.from_i64(0)), None);
    }

    #[test]
    fn rational_round_trip() {
        let q = Rationals;
        let x = q.parse_elem("-14/4").unwrap();
        assert_eq!(q.format(&x), "-7/2");
        let y = q.parse_elem("5").unwrap();
        assert_eq!(q.format(&y), "5");
    }

    #[test]
    fn fraction_fields() {
        assert_eq!(BaseRing::Integers.fraction_field(), BaseRing::Rationals);
        assert_eq!(BaseRing::Rationals.fraction_field(), BaseRing::Rationals);
        assert_eq!(
            BaseRing::prime_field(7).unwrap().fraction_field(),
            BaseRing::PrimeField(7)
        );
    }
}
