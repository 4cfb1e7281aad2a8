//! Integral LLL reduction (all Gram–Schmidt data kept as exact integers) and
//! the integer-relation search built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fixed::{Cx, Fixed};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LLL-reduces a basis of linearly independent integer vectors with
/// `delta = 3/4`. Panics on a dependent input.
pub fn lll_reduce(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    // 1-based bookkeeping: b[k - 1] is the k-th vector, d[0] = 1
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&b[0], &b[0]);
    let mut k = 2;
    let mut k_max = 1;

    let redi = |b: &mut Vec<Vec<BigInt>>, lam: &mut Vec<Vec<BigInt>>, d: &[BigInt], k: usize, l: usize| {
        if (&lam[k][l] * 2u32).abs() <= d[l] {
            return;
        }
        let q = (&lam[k][l] * 2u32 + &d[l]).div_floor(&(&d[l] * 2u32));
        let bl = b[l - 1].clone();
        for (x, y) in b[k - 1].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        lam[k][l] -= &q * &d[l];
        for i in 1..l {
            let t = &q * &lam[l][i];
            lam[k][i] -= t;
        }
    };

    while k <= n {
        if k > k_max {
            k_max = k;
            for j in 1..=k {
                let mut u = dot(&b[k - 1], &b[j - 1]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input vectors are dependent");
                    d[k] = u;
                }
            }
        }
        loop {
            redi(&mut b, &mut lam, &d, k, k - 1);
            let lhs = &d[k] * &d[k - 2] * 4;
            let rhs = &d[k - 1] * &d[k - 1] * 3 - &lam[k][k - 1] * &lam[k][k - 1] * 4;
            if lhs < rhs {
                // swap k and k-1
                b.swap(k - 1, k - 2);
                for j in 1..k - 1 {
                    let t = lam[k][j].clone();
                    lam[k][j] = lam[k - 1][j].clone();
                    lam[k - 1][j] = t;
                }
                let l = lam[k][k - 1].clone();
                let big_b = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
                for i in k + 1..=k_max {
                    let t = lam[i][k].clone();
                    lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                    lam[i][k - 1] = (&big_b * &t + &l * &lam[i][k]) / &d[k];
                }
                d[k - 1] = big_b;
                if k > 2 {
                    k -= 1;
                }
            } else {
                for l in (1..k - 1).rev() {
                    redi(&mut b, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    b
}

/// Searches for integers `a_0..a_m`, with `a_m != 0`, such that
/// `sum a_j x_j ~ 0`, where `x_m` is `target` and `x_0..x_{m-1}` are `basis`.
/// Returns candidate relations ordered by the reduced basis, each with
/// `|a_m| <= max_coeff`, all coefficients bounded by `max_coeff` and
/// residual below `2^(-bits/2)`.
pub fn integer_relation(fx: &Fixed, basis: &[Cx], target: &Cx, max_coeff: &BigInt) -> Vec<Vec<BigInt>> {
    let m = basis.len();
    let bits = fx.bits();
    let weight_shift = bits.saturating_sub(bits / 8 + 8);
    let scale = |v: &BigInt| -> BigInt {
        // v / 2^bits * 2^weight_shift
        v >> (bits - weight_shift)
    };
    let values: Vec<&Cx> = basis.iter().chain(std::iter::once(target)).collect();
    let rows: Vec<Vec<BigInt>> = values
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut row = vec![BigInt::zero(); m + 1];
            row[i] = BigInt::one();
            row.push(scale(&x.re));
            row.push(scale(&x.im));
            row
        })
        .collect();
    let reduced = lll_reduce(rows);
    let mut out = Vec::new();
    for row in reduced {
        let coeffs = &row[..m + 1];
        if coeffs[m].is_zero() {
            continue;
        }
        if coeffs.iter().any(|c| c.abs() > *max_coeff) {
            continue;
        }
        let mut acc = fx.zero();
        for (c, x) in coeffs.iter().zip(&values) {
            acc = fx.add(
                &acc,
                &Cx {
                    re: c * &x.re,
                    im: c * &x.im,
                },
            );
        }
        if fx.below_pow2(&acc, -(bits as i64) / 2) {
            out.push(coeffs.to_vec());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::rat;
    use crate::numeric::roots::complex_roots;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reduces_textbook_basis() {
        // Cohen's example: (1,1,1), (-1,0,2), (3,5,6) reduces to vectors of norm^2 <= 5
        let b = vec![ints(&[1, 1, 1]), ints(&[-1, 0, 2]), ints(&[3, 5, 6])];
        let r = lll_reduce(b);
        let n0 = dot(&r[0], &r[0]);
        assert!(n0 <= BigInt::from(3));
        // determinant preserved up to sign
        let det = |m: &Vec<Vec<BigInt>>| -> BigInt {
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        };
        assert_eq!(det(&r).abs(), BigInt::from(3));
    }

    #[test]
    fn finds_relation_for_second_root_of_cyclic_cubic() {
        // x^3 - 3x + 1: theta^2 - 2 is another root
        let fx = Fixed::new(256);
        let c: Vec<Cx> = [1, -3, 0, 1].iter().map(|&v| fx.real(&rat(v, 1))).collect();
        let roots = complex_roots(&fx, &c).unwrap();
        let th = &roots[0];
        let basis = vec![fx.one(), th.clone(), fx.mul(th, th)];
        let target = fx.sub(&fx.mul(th, th), &fx.real(&rat(2, 1)));
        let rels = integer_relation(&fx, &basis, &target, &BigInt::from(1_000_000));
        assert!(!rels.is_empty());
        let r = &rels[0];
        // normalize so that the target coefficient is 1
        let s = if r[3].is_negative() { -1 } else { 1 };
        let r: Vec<BigInt> = r.iter().map(|x| x * s).collect();
        assert_eq!(r, ints(&[2, 0, -1, 1]));
    }

    #[test]
    fn no_relation_for_foreign_number() {
        let fx = Fixed::new(256);
        // is 2^(1/3) in Q(sqrt 2)? no
        let sq = complex_roots(&fx, &[fx.real(&rat(-2, 1)), fx.zero(), fx.one()]).unwrap();
        let cb = complex_roots(&fx, &[fx.real(&rat(-2, 1)), fx.zero(), fx.zero(), fx.one()]).unwrap();
        let real_cb = cb.iter().find(|z| fx.to_c64(z).im.abs() < 1e-9).unwrap();
        let rels = integer_relation(&fx, &[fx.one(), sq[1].clone()], real_cb, &BigInt::from(10).pow(12));
        assert!(rels.is_empty());
    }
}
