//! Base fields and the field-context trait shared by every generic routine.
//!
//! Elements are plain values; all arithmetic goes through a context object
//! implementing [`Field`]. This lets a prime modulus or an extension tower be
//! chosen at runtime while the algorithms stay generic.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<BigUint>;
    /// Degree over the prime field.
    fn prime_degree(&self) -> usize;

    /// A fixed total order, used only to make outputs canonical.
    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn elem_json(&self, a: &Self::Elem) -> Value;
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow(a, &BigUint::from(e))
    }

    /// All elements in a deterministic order, if the field is finite and has
    /// at most `limit` elements.
    fn enumerate(&self, limit: usize) -> Option<Vec<Self::Elem>> {
        let _ = limit;
        None
    }

    /// The unique p-th root in a finite field.
    fn pth_root(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let q = self.size()?;
        let p = BigUint::from(self.characteristic());
        Some(self.pow(a, &(q / p)))
    }
}

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
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
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<BigUint> {
        None
    }
    fn prime_degree(&self) -> usize {
        1
    }
    fn cmp_elem(&self, a: &BigRational, b: &BigRational) -> Ordering {
        a.cmp(b)
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn elem_json(&self, a: &BigRational) -> Value {
        Value::String(rat_string(a))
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-10..=10))
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn pth_root(&self, _a: &BigRational) -> Option<BigRational> {
        None
    }
}

/// GF(p) for a prime `p < 2^31`; residues are kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const MAX_MODULUS: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u64().expect("residue fits")
    }

    /// Image of a rational with denominator prime to p.
    pub fn from_rational(&self, v: &BigRational) -> Option<u64> {
        let d = self.from_bigint(v.denom());
        let di = self.inv(&d)?;
        Some(self.mul(&self.from_bigint(v.numer()), &di))
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on small integers
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn size(&self) -> Option<BigUint> {
        Some(BigUint::from(self.p))
    }
    fn prime_degree(&self) -> usize {
        1
    }
    fn cmp_elem(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn elem_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn enumerate(&self, limit: usize) -> Option<Vec<u64>> {
        if self.p as usize > limit {
            return None;
        }
        Some((0..self.p).collect())
    }
    fn pth_root(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let q = Rationals;
        let a = rat(2, -4);
        assert_eq!(a.numer(), &BigInt::from(-1));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(q.format_elem(&a), "-1/2");
        assert_eq!(q.elem_json(&q.from_i64(3)), Value::String("3/1".into()));
    }

    #[test]
    fn prime_field_residues() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.pow_u64(&3, 6), 1);
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(MAX_MODULUS + 11).is_err());
    }

    #[test]
    fn prime_field_near_limit_does_not_overflow() {
        let p = 2147483647; // 2^31 - 1
        let f = PrimeField::new(p).unwrap();
        let a = p - 1;
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }
}
