//! Aberth–Ehrlich simultaneous root finding: a double-precision pass for
//! starting points, then refinement in fixed point at the requested precision.

use num_complex::Complex64;
use num_traits::Zero;

use super::fixed::{Cx, Fixed};
use crate::error::{Error, Result};

const F64_ITERATIONS: usize = 500;
const REFINE_ITERATIONS: usize = 200;

/// All complex roots of the polynomial with the given coefficients (low
/// degree first, leading coefficient nonzero), sorted by real then imaginary
/// part. Fails when the roots are not separated by more than
/// `2^(-bits/4)` or the refinement does not converge.
pub fn complex_roots(fx: &Fixed, coeffs: &[Cx]) -> Result<Vec<Cx>> {
    let deg = coeffs.len().saturating_sub(1);
    let bits = fx.bits();
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = &coeffs[deg];
    if deg == 1 {
        let r = fx.div(&fx.neg(&coeffs[0]), lead).ok_or(Error::ZeroPolynomial)?;
        return Ok(vec![r]);
    }

    let c64: Vec<Complex64> = coeffs.iter().map(|c| fx.to_c64(c)).collect();
    let start = aberth_f64(&c64);
    let mut z: Vec<Cx> = start.into_iter().map(|w| fx.from_c64(w)).collect();

    let deriv: Vec<Cx> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Cx {
            re: &c.re * i,
            im: &c.im * i,
        })
        .collect();

    let target = -(bits as i64) + 16;
    let mut converged = false;
    for _ in 0..REFINE_ITERATIONS {
        let mut worst = f64::NEG_INFINITY;
        let mut next = z.clone();
        for k in 0..deg {
            let Some(w) = aberth_step(fx, coeffs, &deriv, &z, k) else {
                continue;
            };
            worst = worst.max(fx.log2_abs(&w));
            next[k] = fx.sub(&z[k], &w);
        }
        z = next;
        if worst < target as f64 {
            converged = true;
            break;
        }
    }
    if !converged {
        // accept if the last Newton corrections are already small
        let ok = (0..deg).all(|k| {
            let fz = fx.eval_poly(coeffs, &z[k]);
            let dz = fx.eval_poly(&deriv, &z[k]);
            fx.div(&fz, &dz)
                .is_some_and(|w| fx.log2_abs(&w) < -(bits as f64) / 2.0)
        });
        if !ok {
            return Err(Error::InsufficientPrecision { bits });
        }
    }

    let sep = -(bits as f64) / 4.0;
    for i in 0..deg {
        for j in i + 1..deg {
            if fx.log2_abs(&fx.sub(&z[i], &z[j])) <= sep {
                return Err(Error::InsufficientPrecision { bits });
            }
        }
    }

    // coarse key first so tiny imaginary noise does not reorder real roots
    z.sort_by(|a, b| {
        let (ca, cb) = (fx.to_c64(a), fx.to_c64(b));
        let key = |v: f64| (v * 2f64.powi(20)).round();
        key(ca.re)
            .total_cmp(&key(cb.re))
            .then(key(ca.im).total_cmp(&key(cb.im)))
    });
    Ok(z)
}

fn aberth_step(fx: &Fixed, coeffs: &[Cx], deriv: &[Cx], z: &[Cx], k: usize) -> Option<Cx> {
    let fz = fx.eval_poly(coeffs, &z[k]);
    if fz.re.is_zero() && fz.im.is_zero() {
        return Some(fx.zero());
    }
    let dz = fx.eval_poly(deriv, &z[k]);
    let ratio = fx.div(&fz, &dz)?;
    let mut sum = fx.zero();
    for (j, zj) in z.iter().enumerate() {
        if j != k {
            sum = fx.add(&sum, &fx.div(&fx.one(), &fx.sub(&z[k], zj))?);
        }
    }
    let denom = fx.sub(&fx.one(), &fx.mul(&ratio, &sum));
    fx.div(&ratio, &denom)
}

fn aberth_f64(c: &[Complex64]) -> Vec<Complex64> {
    let deg = c.len() - 1;
    let lead = c[deg];
    let radius = 1.0
        + c[..deg]
            .iter()
            .map(|a| (a / lead).norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, t)
        })
        .collect();
    let eval = |x: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, a| acc * x + a);
    let eval_d = |x: Complex64| {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::zero(), |acc, (i, a)| acc * x + a * i as f64)
    };
    for _ in 0..F64_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..deg {
            let ratio = eval(z[k]) / eval_d(z[k]);
            let sum: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[k] -= w;
                worst = worst.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-14 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::rat;

    fn poly(fx: &Fixed, c: &[i64]) -> Vec<Cx> {
        c.iter().map(|&v| fx.real(&rat(v, 1))).collect()
    }

    #[test]
    fn square_root_of_two() {
        let fx = Fixed::new(256);
        let r = complex_roots(&fx, &poly(&fx, &[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let v = fx.to_c64(&r[1]);
        assert!((v.re - 2f64.sqrt()).abs() < 1e-15 && v.im.abs() < 1e-15);
        // accuracy far beyond f64: r^2 - 2 vanishes to ~2^-240
        let sq = fx.mul(&r[1], &r[1]);
        assert!(fx.below_pow2(&fx.sub(&sq, &fx.real(&rat(2, 1))), -230));
    }

    #[test]
    fn cube_roots_of_two() {
        let fx = Fixed::new(256);
        let r = complex_roots(&fx, &poly(&fx, &[-2, 0, 0, 1])).unwrap();
        let vals: Vec<_> = r.iter().map(|z| fx.to_c64(z)).collect();
        let real: Vec<_> = vals.iter().filter(|z| z.im.abs() < 1e-12).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].re - 2f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn clustered_roots_fail_separation() {
        let fx = Fixed::new(128);
        // (x - 1)(x - 1 - 2^-40): separation 2^-40 is below 2^-32
        let e = rat(1, 1 << 40);
        let one = rat(1, 1);
        let b = -(one.clone() + one.clone() + e.clone());
        let c = one + e;
        let coeffs = vec![fx.real(&c), fx.real(&b), fx.one()];
        assert!(complex_roots(&fx, &coeffs).is_err());
    }
}
