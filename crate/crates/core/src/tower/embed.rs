//! Complex embeddings of a tower over Q, level by level.

use num_rational::BigRational;

use super::Tower;
use crate::error::{Error, Result};
use crate::exactcore::field::Rationals;
use crate::numeric::{complex_roots, Cx, Fixed};

/// One embedding into C: the images of the generators and of every product
/// basis monomial.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub gens: Vec<Cx>,
    pub basis: Vec<Cx>,
}

impl Embedding {
    /// Image of an element given by flat coordinates over Q.
    pub fn eval(&self, fx: &Fixed, a: &[BigRational]) -> Cx {
        a.iter()
            .zip(&self.basis)
            .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
            .fold(fx.zero(), |acc, (c, b)| fx.add(&acc, &fx.scale_rational(b, c)))
    }
}

/// All `[L:Q]` embeddings, ordered by the root order at each level with
/// lower levels varying slowest. Fails when some level's roots are not
/// separated at this precision, so the caller can escalate.
pub fn numeric_embeddings(tower: &Tower<Rationals>, fx: &Fixed) -> Result<Vec<Embedding>> {
    if fx.bits() < 128 {
        return Err(Error::Config("numeric embeddings need at least 128 bits".into()));
    }
    let mut current = vec![Embedding {
        gens: Vec::new(),
        basis: vec![fx.one()],
    }];
    for lv in tower.levels() {
        let mut next = Vec::new();
        for e in &current {
            let coeffs: Vec<Cx> = lv.poly.iter().map(|c| e.eval(fx, c)).collect();
            for root in complex_roots(fx, &coeffs)? {
                let mut basis = Vec::with_capacity(e.basis.len() * lv.degree());
                let mut power = fx.one();
                for _ in 0..lv.degree() {
                    basis.extend(e.basis.iter().map(|b| fx.mul(b, &power)));
                    power = fx.mul(&power, &root);
                }
                let mut gens = e.gens.clone();
                gens.push(root);
                next.push(Embedding { gens, basis });
            }
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{build_tower, ParsedTower};

    fn tower(text: &str) -> Tower<Rationals> {
        match build_tower(text, false).unwrap() {
            ParsedTower::Rational(t) => t.tower,
            _ => unreachable!(),
        }
    }

    #[test]
    fn sqrt2_has_two_real_embeddings() {
        let fx = Fixed::new(256);
        let e = numeric_embeddings(&tower("base Q\ngen s minpoly s^2 - 2"), &fx).unwrap();
        let v: Vec<f64> = e.iter().map(|x| fx.to_c64(&x.gens[0]).re).collect();
        assert!((v[0] + 2f64.sqrt()).abs() < 1e-15 && (v[1] - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn cube_root_has_one_real_embedding() {
        let fx = Fixed::new(256);
        let e = numeric_embeddings(&tower("base Q\ngen a minpoly a^3 - 2"), &fx).unwrap();
        assert_eq!(e.len(), 3);
        let real = e.iter().filter(|x| fx.to_c64(&x.gens[0]).im.abs() < 1e-20).count();
        assert_eq!(real, 1);
    }

    #[test]
    fn biquadratic_sign_choices() {
        let fx = Fixed::new(256);
        let e = numeric_embeddings(&tower("base Q\ngen s minpoly s^2 - 2\ngen t minpoly t^2 - 3"), &fx).unwrap();
        let mut signs: Vec<(bool, bool)> = e
            .iter()
            .map(|x| (fx.to_c64(&x.gens[0]).re > 0.0, fx.to_c64(&x.gens[1]).re > 0.0))
            .collect();
        signs.sort();
        signs.dedup();
        assert_eq!(signs.len(), 4);
        // st evaluates to the product of the images
        let st = e[3].eval(&fx, &[0, 0, 0, 1].map(|v| BigRational::from_integer(v.into())));
        let prod = fx.mul(&e[3].gens[0], &e[3].gens[1]);
        assert!(fx.below_pow2(&fx.sub(&st, &prod), -200));
    }

    #[test]
    fn low_precision_rejected() {
        let fx = Fixed::new(64);
        assert!(numeric_embeddings(&tower("base Q\ngen s minpoly s^2 - 2"), &fx).is_err());
    }
}
