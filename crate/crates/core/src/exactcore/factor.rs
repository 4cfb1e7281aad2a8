//! Factorization over finite fields: squarefree split, distinct-degree split,
//! then Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

const EDF_SEED: u64 = 0x6761_6c6f_6973;

/// Complete factorization of `f` over a finite field into monic irreducible
/// factors with multiplicities, sorted by (degree, coefficients).
pub fn factor_finite<F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = ring
        .field()
        .size()
        .expect("factor_finite needs a finite field");
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(ring, &ring.monic(f)) {
        for (g, d) in distinct_degree(ring, &part, &q) {
            for h in equal_degree(ring, &g, d, &q, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    let field = ring.field().clone();
    out.sort_by(|(a, _), (b, _)| {
        a.degree().cmp(&b.degree()).then_with(|| {
            a.coeffs()
                .iter()
                .rev()
                .zip(b.coeffs().iter().rev())
                .map(|(x, y)| field.cmp_elem(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(out)
}

/// Yun-style decomposition for characteristic p: pairs `(g_i, i)` with the
/// `g_i` squarefree, pairwise coprime and `f = prod g_i^i`.
pub fn squarefree_decomposition<F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
) -> Vec<(Poly<F::Elem>, usize)> {
    let p = ring.field().characteristic() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = ring.derivative(f);
    if d.is_zero() {
        let root = ring.pth_root(f).expect("p-th root of a p-th power");
        for (g, m) in squarefree_decomposition(ring, &root) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = ring.gcd(f, &d);
    let mut w = ring.div_exact(f, &c).unwrap();
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = ring.gcd(&w, &c);
        let fac = ring.div_exact(&w, &y).unwrap();
        if fac.degree() != Some(0) {
            out.push((ring.monic(&fac), i));
        }
        w = y;
        c = ring.div_exact(&c, &w).unwrap();
        i += 1;
    }
    if c.degree() != Some(0) {
        let root = ring.pth_root(&c).expect("remaining cofactor is a p-th power");
        for (g, m) in squarefree_decomposition(ring, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic squarefree `f` into pairs `(g, d)` where `g` is the product
/// of all irreducible factors of degree `d`.
pub fn distinct_degree<F: Field>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    q: &BigUint,
) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ring.x();
    let mut h = ring.rem(&x, &rest).unwrap();
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = ring.powmod(&h, q, &rest);
        let g = ring.gcd(&rest, &ring.sub(&h, &x));
        if g.degree() != Some(0) {
            rest = ring.div_exact(&rest, &g).unwrap();
            h = ring.rem(&h, &rest).unwrap();
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    out
}

/// Cantor–Zassenhaus: splits `f`, a product of distinct irreducibles of
/// degree `d`, into its monic factors.
pub fn equal_degree<F: Field, R: rand::Rng>(
    ring: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    q: &BigUint,
    rng: &mut R,
) -> Vec<Poly<F::Elem>> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![ring.monic(f)];
    }
    let field = ring.field();
    let p = field.characteristic();
    let mut factors = vec![ring.monic(f)];
    let target = n / d;
    while factors.len() < target {
        let a = ring.from_coeffs((0..n).map(|_| field.random_elem(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(factors.len() + 1);
        for g in factors {
            let gd = g.degree().unwrap();
            if gd == d {
                next.push(g);
                continue;
            }
            let a = ring.rem(&a, &g).unwrap();
            let b = if p == 2 {
                // absolute trace map x -> x + x^2 + ... + x^(2^(kd-1)), q = 2^k
                let steps = q.bits() as usize - 1;
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..steps * d {
                    t = ring.mulmod(&t, &t, &g);
                    acc = ring.add(&acc, &t);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u8);
                ring.sub(&ring.powmod(&a, &e, &g), &ring.one())
            };
            let s = ring.gcd(&g, &b);
            match s.degree() {
                Some(k) if k > 0 && k < gd => {
                    let other = ring.div_exact(&g, &s).unwrap();
                    next.push(s);
                    next.push(ring.monic(&other));
                }
                _ => next.push(g),
            }
        }
        factors = next;
    }
    factors
}
