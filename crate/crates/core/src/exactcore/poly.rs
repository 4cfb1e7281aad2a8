//! Dense univariate polynomials over a [`Field`], low degree first.

use num_bigint::BigUint;
use serde_json::Value;

use super::field::Field;
use crate::error::{Error, Result};

/// Coefficients low degree first; the leading coefficient is nonzero unless
/// the polynomial is zero (empty vector). Construct through [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    pub fn is_one(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.len() == 1 && self.field.is_one(&a.coeffs[0])
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = f.zero();
        let v = (0..n)
            .map(|i| f.add(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
            .collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = &self.field;
        let mut v = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: usize) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `(q, r)` with `a = q*b + r` and `deg r < deg b`.
    pub fn divrem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let f = &self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(b.lead().unwrap()).ok_or(Error::DivisionByZero)?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((self.zero(), self.from_coeffs(r)));
        }
        let mut q = vec![f.zero(); r.len() - db];
        for k in (db..r.len()).rev() {
            if f.is_zero(&r[k]) {
                continue;
            }
            let c = f.mul(&r[k], &lead_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                let idx = k - db + j;
                r[idx] = f.sub(&r[idx], &f.mul(&c, bj));
            }
            q[k - db] = c;
        }
        r.truncate(db);
        Ok((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Exact quotient; errors if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.divrem(a, b)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn divides(&self, d: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        match self.divrem(a, d) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => a.is_zero(),
        }
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lead() {
            None => self.zero(),
            Some(l) => self.scale(a, &self.field.inv(l).unwrap()),
        }
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.lead().is_some_and(|l| self.field.is_one(l))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).expect("nonzero divisor");
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = self.field.inv(&l).unwrap();
                (self.scale(&r0, &li), self.scale(&s0, &li), self.scale(&t0, &li))
            }
        }
    }

    pub fn lcm(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let g = self.gcd(a, b);
        self.monic(&self.div_exact(&self.mul(a, b), &g).unwrap())
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let v = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(v)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `a(x + c)`.
    pub fn shift(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        let lin = self.from_coeffs(vec![c.clone(), self.field.one()]);
        a.coeffs.iter().rev().fold(self.zero(), |acc, k| {
            self.add(&self.mul(&acc, &lin), &self.constant(k.clone()))
        })
    }

    pub fn mulmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    pub fn powmod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        let base = self.rem(a, m).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    /// For `a = b(x^p)` over a finite field of characteristic `p`, returns `b`
    /// with each coefficient replaced by its p-th root.
    pub fn pth_root(&self, a: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let p = self.field.characteristic() as usize;
        if p == 0 {
            return None;
        }
        let mut v = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if i % p == 0 {
                v.push(self.field.pth_root(c)?);
            } else if !self.field.is_zero(c) {
                return None;
            }
        }
        Some(self.from_coeffs(v))
    }

    /// The squarefree part (radical), monic: the product of the distinct
    /// irreducible factors of `a`.
    pub fn squarefree(&self, a: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let a = self.monic(a);
        if a.degree() == Some(0) {
            return Ok(a);
        }
        let d = self.derivative(&a);
        if d.is_zero() {
            let root = self
                .pth_root(&a)
                .expect("vanishing derivative in characteristic p");
            return self.squarefree(&root);
        }
        let g = self.gcd(&a, &d);
        let w = self.div_exact(&a, &g)?;
        if g.degree() == Some(0) || self.field.characteristic() == 0 {
            return Ok(self.monic(&w));
        }
        // factors with multiplicity divisible by p survive only in g
        let rg = self.squarefree(&g)?;
        Ok(self.lcm(&w, &rg))
    }

    pub fn is_squarefree(&self, a: &Poly<F::Elem>) -> bool {
        !a.is_zero() && self.gcd(a, &self.derivative(a)).degree() == Some(0)
    }

    pub fn format(&self, a: &Poly<F::Elem>, var: &str) -> String {
        format_poly(a.coeffs(), var, |c| self.field.format_elem(c), |c| {
            self.field.is_zero(c)
        }, |c| self.field.is_one(c))
    }

    /// Coefficient array, low degree first.
    pub fn json(&self, a: &Poly<F::Elem>) -> Value {
        Value::Array(a.coeffs.iter().map(|c| self.field.elem_json(c)).collect())
    }
}

/// Renders `c0 + c1*x + ...` from highest degree down, e.g. `x^2 - 2`.
pub(crate) fn format_poly<E>(
    coeffs: &[E],
    var: &str,
    fmt: impl Fn(&E) -> String,
    is_zero: impl Fn(&E) -> bool,
    is_one: impl Fn(&E) -> bool,
) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let mut s = fmt(c);
        let compound = s.contains(' ') || s[1..].contains(['+', '-']);
        let negative = !compound && s.starts_with('-');
        if negative {
            s.remove(0);
        }
        if compound {
            s = format!("({s})");
        }
        let term = match i {
            0 => s,
            _ => {
                let mono = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if is_one(c) || (s == "1" && negative) {
                    mono
                } else {
                    format!("{s}*{mono}")
                }
            }
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, PrimeField, Rationals};

    fn qx() -> PolyRing<Rationals> {
        PolyRing::new(Rationals)
    }

    #[test]
    fn gcd_of_common_factor() {
        let r = qx();
        let a = r.from_i64s(&[-1, 0, 1]);
        let b = r.from_i64s(&[-1, 1]);
        assert_eq!(r.gcd(&a, &b), r.from_i64s(&[-1, 1]));
    }

    #[test]
    fn synthetic_division() {
        let r = qx();
        let (q, rem) = r
            .divrem(&r.from_i64s(&[-2, 0, 1]), &r.from_i64s(&[-1, 1]))
            .unwrap();
        assert_eq!(q, r.from_i64s(&[1, 1]));
        assert_eq!(rem, r.from_i64s(&[-1]));
    }

    #[test]
    fn derivative_term_by_term() {
        let r = qx();
        assert_eq!(
            r.derivative(&r.from_i64s(&[1, -3, 0, 1])),
            r.from_i64s(&[-3, 0, 3])
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = qx();
        assert_eq!(
            r.divrem(&r.x(), &r.zero()).unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(r.squarefree(&r.zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn squarefree_over_q() {
        let r = qx();
        // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
        let f = r.from_i64s(&[1, -1, -1, 1]);
        assert_eq!(r.squarefree(&f).unwrap(), r.from_i64s(&[-1, 0, 1]));
        let g = r.from_i64s(&[-2, 0, 1]);
        assert_eq!(r.squarefree(&g).unwrap(), g);
    }

    #[test]
    fn squarefree_pth_power_descent() {
        for p in [3u64, 5] {
            let r = PolyRing::new(PrimeField::new(p).unwrap());
            let mut c = vec![0i64; p as usize + 1];
            c[0] = -1;
            c[p as usize] = 1;
            let f = r.from_i64s(&c);
            assert_eq!(r.squarefree(&f).unwrap(), r.from_i64s(&[-1, 1]), "p = {p}");
        }
        // x^2 (x+1)^3 over GF(3): multiplicity 3 hides inside the gcd
        let r = PolyRing::new(PrimeField::new(3).unwrap());
        let f = r.mul(&r.pow(&r.x(), 2), &r.pow(&r.from_i64s(&[1, 1]), 3));
        assert_eq!(r.squarefree(&f).unwrap(), r.from_i64s(&[0, 1, 1]));
    }

    #[test]
    fn formatting() {
        let r = qx();
        assert_eq!(r.format(&r.from_i64s(&[1, 0, -10, 0, 1]), "x"), "x^4 - 10*x^2 + 1");
        assert_eq!(r.format(&r.from_coeffs(vec![rat(1, 2), rat(-1, 1)]), "t"), "-t + 1/2");
        assert_eq!(r.format(&r.zero(), "x"), "0");
    }

    #[test]
    fn shift_matches_composition() {
        let r = qx();
        let f = r.from_i64s(&[1, 0, 0, 0, 1]);
        let g = r.shift(&f, &rat(1, 1));
        assert_eq!(g, r.from_i64s(&[2, 4, 6, 4, 1]));
    }
}
