//! Irreducibility certification.
//!
//! Over finite fields the verdict comes from a complete factorization. Over Q
//! a battery of sound tests is tried in order; each either proves
//! irreducibility, exhibits a factor, or passes to the next test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::factor_finite;
use super::field::{Field, PrimeField, Rationals};
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::numeric::{complex_roots, Cx, Fixed};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility<E> {
    Irreducible { method: &'static str },
    Reducible { witness: Poly<E> },
    Unknown,
}

impl<E> Irreducibility<E> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, Irreducibility::Reducible { .. })
    }
}

/// Decisive test over a finite field.
pub fn irreducible_finite<F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Result<Irreducibility<F::Elem>> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let fac = factor_finite(ring, f)?;
    if fac.len() == 1 && fac[0].1 == 1 {
        Ok(Irreducibility::Irreducible {
            method: "finite-field factorization",
        })
    } else {
        Ok(Irreducibility::Reducible {
            witness: fac[0].0.clone(),
        })
    }
}

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
const EISENSTEIN_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
const EISENSTEIN_SHIFTS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];
const MODULAR_PRIMES_WANTED: usize = 24;
const RECOMBINATION_MAX_DEGREE: usize = 16;

/// Clears denominators and content: a primitive integer polynomial with
/// positive leading coefficient, proportional to `f`.
pub fn primitive_integer(f: &Poly<BigRational>) -> Vec<BigInt> {
    let l = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn to_rational_poly(ring: &PolyRing<Rationals>, v: &[BigInt]) -> Poly<BigRational> {
    ring.from_coeffs(
        v.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

/// Positive divisors of `n`, or `None` when `n` cannot be factored by trial
/// division below the limit.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let bound = BigInt::from(TRIAL_DIVISION_LIMIT);
        if n > &bound * &bound {
            return None;
        }
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Some(out)
}

fn rational_root(ring: &PolyRing<Rationals>, f: &Poly<BigRational>, z: &[BigInt]) -> Option<Option<BigRational>> {
    if z[0].is_zero() {
        return Some(Some(BigRational::zero()));
    }
    let num = divisors(&z[0])?;
    let den = divisors(z.last().unwrap())?;
    for q in &den {
        for p in &num {
            for s in [1, -1] {
                let r = BigRational::new(p * s, q.clone());
                if ring.eval(f, &r).is_zero() {
                    return Some(Some(r));
                }
            }
        }
    }
    Some(None)
}

fn shift_integer(z: &[BigInt], c: i64) -> Vec<BigInt> {
    // Horner composition with x + c
    let c = BigInt::from(c);
    let mut out: Vec<BigInt> = Vec::new();
    for a in z.iter().rev() {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (i, v) in out.iter().enumerate() {
            next[i + 1] += v;
            next[i] += v * &c;
        }
        next[0] += a;
        out = next;
    }
    out
}

fn eisenstein(z: &[BigInt], p: u64) -> bool {
    let p = BigInt::from(p);
    let n = z.len() - 1;
    !(&z[n] % &p).is_zero()
        && z[..n].iter().all(|c| (c % &p).is_zero())
        && !(&z[0] % (&p * &p)).is_zero()
}

/// Subset sums of factor degrees, as a bitmask over `0..=n`.
fn degree_set(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut s = vec![false; n + 1];
    s[0] = true;
    for &d in degrees {
        for k in (d..=n).rev() {
            if s[k - d] {
                s[k] = true;
            }
        }
    }
    s
}

fn modular_degree_sets(z: &[BigInt]) -> bool {
    let n = z.len() - 1;
    let mut acc = vec![true; n + 1];
    let mut used = 0;
    let mut p = 2u64;
    while used < MODULAR_PRIMES_WANTED && p < 5000 {
        p += 1;
        if !super::field::is_prime(p) {
            continue;
        }
        let fp = PrimeField::new(p).unwrap();
        if (z[n].clone() % BigInt::from(p)).is_zero() {
            continue;
        }
        let ring = PolyRing::new(fp);
        let f = ring.from_coeffs(z.iter().map(|c| fp.from_bigint(c)).collect());
        if !ring.is_squarefree(&f) {
            continue;
        }
        let fac = factor_finite(&ring, &f).expect("nonzero");
        let degs: Vec<usize> = fac.iter().map(|(g, _)| g.degree().unwrap()).collect();
        let s = degree_set(&degs, n);
        for k in 0..=n {
            acc[k] &= s[k];
        }
        used += 1;
        if (1..n).all(|k| !acc[k]) {
            return true;
        }
    }
    false
}

fn near_integer(fx: &Fixed, z: &Cx) -> Option<BigInt> {
    let quarter = -2;
    if !fx.below_pow2(&Cx { re: BigInt::zero(), im: z.im.clone() }, quarter) {
        return None;
    }
    let r = fx.round_re(z);
    let diff = Cx {
        re: &z.re - (&r << fx.bits()),
        im: BigInt::zero(),
    };
    fx.below_pow2(&diff, quarter).then_some(r)
}

/// Tries every subset of complex roots as the root set of a factor. Decisive
/// when the roots are accurate: a true integer factor rounds exactly.
fn recombination(
    ring: &PolyRing<Rationals>,
    f: &Poly<BigRational>,
    z: &[BigInt],
) -> Option<Irreducibility<BigRational>> {
    let n = z.len() - 1;
    if n > RECOMBINATION_MAX_DEGREE {
        return None;
    }
    let fx = Fixed::new(256 + 16 * n as u32);
    let coeffs: Vec<Cx> = z
        .iter()
        .map(|c| fx.real(&BigRational::from_integer(c.clone())))
        .collect();
    let roots = complex_roots(&fx, &coeffs).ok()?;
    let lead = fx.real(&BigRational::from_integer(z[n].clone()));
    for k in 1..=n / 2 {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let sum = idx.iter().fold(fx.zero(), |acc, &i| fx.add(&acc, &roots[i]));
            if near_integer(&fx, &fx.mul(&lead, &sum)).is_some() {
                // product of (x - r) over the subset, times the leading coefficient
                let mut prod = vec![lead.clone()];
                for &i in &idx {
                    let mut next = vec![fx.zero(); prod.len() + 1];
                    for (j, c) in prod.iter().enumerate() {
                        next[j + 1] = fx.add(&next[j + 1], c);
                        next[j] = fx.sub(&next[j], &fx.mul(c, &roots[i]));
                    }
                    prod = next;
                }
                let ints: Option<Vec<BigInt>> = prod.iter().map(|c| near_integer(&fx, c)).collect();
                if let Some(ints) = ints {
                    let g = ring.monic(&to_rational_poly(ring, &ints));
                    if ring.divides(&g, f) {
                        return Some(Irreducibility::Reducible { witness: g });
                    }
                }
            }
            // next combination
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Some(Irreducibility::Irreducible {
        method: "complex root recombination",
    })
}

/// Irreducibility over Q by the battery: squarefreeness, rational roots,
/// Eisenstein on small shifts, modular degree sets, root recombination.
pub fn irreducible_rational(f: &Poly<BigRational>) -> Result<Irreducibility<BigRational>> {
    let ring = PolyRing::new(Rationals);
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(Irreducibility::Irreducible { method: "degree one" });
    }
    let g = ring.gcd(f, &ring.derivative(f));
    if g.degree() != Some(0) {
        return Ok(Irreducibility::Reducible { witness: g });
    }
    let z = primitive_integer(f);
    match rational_root(&ring, f, &z) {
        Some(Some(r)) => {
            return Ok(Irreducibility::Reducible {
                witness: ring.from_coeffs(vec![-r, BigRational::one()]),
            })
        }
        Some(None) if n <= 3 => {
            return Ok(Irreducibility::Irreducible {
                method: "rational root test",
            })
        }
        _ => {}
    }
    for c in EISENSTEIN_SHIFTS {
        let s = shift_integer(&z, c);
        if EISENSTEIN_PRIMES.iter().any(|&p| eisenstein(&s, p)) {
            return Ok(Irreducibility::Irreducible { method: "Eisenstein" });
        }
    }
    if modular_degree_sets(&z) {
        return Ok(Irreducibility::Irreducible {
            method: "modular degree sets",
        });
    }
    Ok(recombination(&ring, f, &z).unwrap_or(Irreducibility::Unknown))
}

/// Best rational approximation `p/q` with `q <= bound` among the continued
/// fraction convergents of `x`, accepted when `|x - p/q| < 1/(2 q^2)`.
pub fn rational_reconstruct(x: &BigRational, bound: &BigInt) -> Option<BigRational> {
    if bound < &BigInt::one() {
        return None;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    let mut best: Option<BigRational> = None;
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > bound {
            break;
        }
        best = Some(BigRational::new(h2.clone(), k2.clone()));
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    let c = best?;
    let err = (x - &c).abs();
    let q = c.denom();
    let tol = BigRational::new(BigInt::one(), q * q * 2);
    (err < tol).then_some(c)
}

/// Parses a decimal literal such as `-1.4142` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().ok()?;
    let d = BigInt::from(10).pow(frac.len() as u32);
    let r = BigRational::new(n, d);
    Some(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::rat;

    fn q(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(Rationals).from_i64s(c)
    }

    #[test]
    fn sqrt2_minpoly_is_irreducible() {
        assert!(irreducible_rational(&q(&[-2, 0, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn x2_minus_1_has_witness() {
        assert_eq!(
            irreducible_rational(&q(&[-1, 0, 1])).unwrap(),
            Irreducibility::Reducible { witness: q(&[-1, 1]) }
        );
    }

    #[test]
    fn x4_plus_1_needs_a_shift() {
        let f = q(&[1, 0, 0, 0, 1]);
        // oracle: every prime gives degree sets containing 2
        assert!(!modular_degree_sets(&primitive_integer(&f)));
        assert_eq!(
            irreducible_rational(&f).unwrap(),
            Irreducibility::Irreducible { method: "Eisenstein" }
        );
    }

    #[test]
    fn biquadratic_is_settled_by_recombination() {
        let f = q(&[1, 0, -10, 0, 1]);
        assert!(irreducible_rational(&f).unwrap().is_irreducible());
        // (x^2 - 2)(x^2 - 3) is reducible with a quadratic witness
        let g = q(&[6, 0, -5, 0, 1]);
        match irreducible_rational(&g).unwrap() {
            Irreducibility::Reducible { witness } => {
                assert_eq!(witness.degree(), Some(2));
                assert!(PolyRing::new(Rationals).divides(&witness, &g));
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn non_squarefree_input_is_reducible() {
        let f = q(&[4, 0, -4, 0, 1]); // (x^2 - 2)^2
        assert!(irreducible_rational(&f).unwrap().is_reducible());
    }

    #[test]
    fn constant_input_is_an_error() {
        assert_eq!(irreducible_rational(&q(&[3])).unwrap_err(), Error::ConstantPolynomial);
    }

    #[test]
    fn reconstruct_examples() {
        let b10 = BigInt::from(10);
        assert_eq!(rational_reconstruct(&rat(1, 2), &b10), Some(rat(1, 2)));
        let sqrt2 = parse_decimal("1.41421356237").unwrap();
        assert_eq!(rational_reconstruct(&sqrt2, &BigInt::from(100)), Some(rat(99, 70)));
        let third = parse_decimal(&format!("0.{}", "3".repeat(30))).unwrap();
        assert_eq!(rational_reconstruct(&third, &b10), Some(rat(1, 3)));
    }
}
