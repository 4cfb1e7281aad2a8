//! Orbit polynomials `∏ (x - g l)` and the splitting of each level's
//! minimal polynomial over the group orbit of its generator.

use crate::autgroup::{orbit, AutGroup};
use crate::exactcore::field::Field;
use crate::exactcore::poly::{Poly, PolyRing};
use crate::tower::Tower;

/// `∏ (x - o)` over the orbit, coefficients in L, low degree first.
pub(super) fn orbit_product<F: Field>(tower: &Tower<F>, orbit: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let mut p = vec![tower.one()];
    for o in orbit {
        let mut next = vec![tower.zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] = tower.add(&next[i + 1], c);
            next[i] = tower.sub(&next[i], &tower.mul(o, c));
        }
        p = next;
    }
    p
}

pub(super) fn lift<F: Field>(tower: &Tower<F>, p: &Poly<F::Elem>) -> Vec<Vec<F::Elem>> {
    p.coeffs().iter().map(|c| tower.constant(c.clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMinpoly<E> {
    pub orbit_size: usize,
    /// The orbit polynomial, or `None` when a coefficient falls outside K.
    pub poly: Option<Poly<E>>,
    /// Minimal polynomial from the linear dependence of powers.
    pub oracle: Poly<E>,
    pub agrees: bool,
}

/// The orbit polynomial of `l` compared against its minimal polynomial.
pub fn orbit_minpoly<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, l: &[F::Elem]) -> OrbitMinpoly<F::Elem> {
    let f = tower.field();
    let o = orbit(tower, group, l);
    let prod = orbit_product(tower, &o);
    let oracle = tower.minpoly(l);
    let in_k = prod.iter().all(|c| c[1..].iter().all(|x| f.is_zero(x)));
    let poly = in_k.then(|| PolyRing::new(f.clone()).from_coeffs(prod.iter().map(|c| c[0].clone()).collect()));
    OrbitMinpoly {
        orbit_size: o.len(),
        agrees: poly.as_ref() == Some(&oracle),
        poly,
        oracle,
    }
}

/// Each level's minimal polynomial has exactly `deg` roots in the orbit of
/// its generator and equals the product over them. Returns the failures.
pub fn splitting_failures<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>) -> Vec<String> {
    let mut failures = Vec::new();
    for (i, lv) in tower.levels().iter().enumerate() {
        let theta = tower.generator(i);
        let m = tower.minpoly(&theta);
        let lifted = lift(tower, &m);
        let roots = orbit(tower, group, &theta);
        if Some(roots.len()) != m.degree() {
            failures.push(format!("orbit of {} has {} elements, minpoly degree {:?}", lv.name, roots.len(), m.degree()));
        }
        if let Some(r) = roots.iter().find(|r| !tower.is_zero(&tower.eval(&lifted, r))) {
            failures.push(format!("{} is not a root of the minpoly of {}", tower.format_elem(r), lv.name));
        }
        if orbit_product(tower, &roots) != lifted {
            failures.push(format!("minpoly of {} does not split over its orbit", lv.name));
        }
    }
    failures
}
