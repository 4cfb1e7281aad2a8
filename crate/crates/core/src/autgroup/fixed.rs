//! Orbits, fixed subspaces and fixed fields, and restriction of automorphisms
//! to a stable subfield.

use super::{automorphisms, AutGroup};
use crate::config::{RunConfig, PRIMITIVE_BUDGET};
use crate::error::{Error, Result};
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat, Subspace};
use crate::exactcore::poly::Poly;
use crate::tower::{small_vectors, GroundField, Level, Tower};

/// An intermediate field given by its K-subspace of L and a primitive element.
#[derive(Clone, Debug)]
pub struct SubfieldHandle<E> {
    pub basis: Subspace<E>,
    pub primitive: Vec<E>,
    pub minpoly: Poly<E>,
    pub degree: usize,
}

/// The distinct images `g(l)` in group order.
pub fn orbit<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, l: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let mut out: Vec<Vec<F::Elem>> = Vec::new();
    for a in group.elements() {
        let img = a.apply(tower.field(), l);
        if !out.contains(&img) {
            out.push(img);
        }
    }
    out
}

/// Kernel of the stacked matrices `S_h - I` for `h` in `subgroup`.
pub fn fixed_space<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, subgroup: &[usize]) -> Subspace<F::Elem> {
    let f = tower.field();
    let n = tower.degree();
    let ident = linalg::identity(f, n);
    let mut rows = Vec::new();
    for &h in subgroup {
        let d = linalg::mat_sub(f, group.matrix(h), &ident);
        rows.extend((0..n).map(|i| d.row(i).to_vec()));
    }
    if rows.is_empty() {
        return Subspace::from_vectors(f, n, &(0..n).map(|j| tower.basis(j)).collect::<Vec<_>>());
    }
    let kernel = linalg::kernel(f, &Mat::from_rows(rows));
    Subspace::from_vectors(f, n, &kernel)
}

fn combine<F: Field>(f: &F, basis: &[Vec<F::Elem>], coeffs: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![f.zero(); basis[0].len()];
    for (b, c) in basis.iter().zip(coeffs) {
        for (x, y) in acc.iter_mut().zip(b) {
            *x = f.add(x, &f.mul(c, y));
        }
    }
    acc
}

/// Candidate primitive elements: basis vectors, then small integer
/// combinations by increasing max-norm (characteristic 0) or every
/// coefficient vector (finite K), up to the budget.
fn primitive_candidates<F: Field>(f: &F, basis: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let k = basis.len();
    let mut out: Vec<Vec<F::Elem>> = basis.to_vec();
    let coeff_vectors: Vec<Vec<F::Elem>> = match f.enumerate(PRIMITIVE_BUDGET) {
        Some(elems) => {
            let total = elems.len().checked_pow(k as u32).unwrap_or(usize::MAX).min(PRIMITIVE_BUDGET);
            (0..total)
                .map(|mut idx| {
                    (0..k)
                        .map(|_| {
                            let e = elems[idx % elems.len()].clone();
                            idx /= elems.len();
                            e
                        })
                        .collect()
                })
                .collect()
        }
        None => small_vectors(k, 3, PRIMITIVE_BUDGET)
            .into_iter()
            .map(|v| v.into_iter().map(|c| f.from_i64(c)).collect())
            .collect(),
    };
    out.extend(coeff_vectors.iter().map(|c| combine(f, basis, c)));
    out
}

/// The fixed field of a subgroup with a primitive element. Verifies that the
/// fixed space contains 1 and is closed under multiplication.
pub fn fixed_field<F: Field>(
    tower: &Tower<F>,
    group: &AutGroup<F::Elem>,
    subgroup: &[usize],
) -> Result<SubfieldHandle<F::Elem>> {
    let f = tower.field();
    let space = fixed_space(tower, group, subgroup);
    if !space.contains(f, &tower.one()) {
        return Err(Error::Inconsistent("fixed space does not contain 1".into()));
    }
    let basis = space.basis();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            if !space.contains(f, &tower.mul(a, b)) {
                return Err(Error::Inconsistent("fixed space is not closed under products".into()));
            }
        }
    }
    let dim = space.dim();
    for cand in primitive_candidates(f, basis) {
        let m = tower.minpoly(&cand);
        if m.degree() == Some(dim) {
            return Ok(SubfieldHandle {
                primitive: cand,
                minpoly: m,
                degree: dim,
                basis: space,
            });
        }
    }
    Err(Error::PrimitiveSearch {
        budget: PRIMITIVE_BUDGET,
    })
}

/// Whether every group element maps the subfield into itself.
pub fn is_stable<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, sub: &Subspace<F::Elem>) -> bool {
    let f = tower.field();
    group
        .elements()
        .iter()
        .all(|a| sub.basis().iter().all(|b| sub.contains(f, &a.apply(f, b))))
}

/// Elements fixing every basis vector of the subfield.
pub fn pointwise_stabilizer<F: Field>(tower: &Tower<F>, group: &AutGroup<F::Elem>, sub: &Subspace<F::Elem>) -> Vec<usize> {
    let f = tower.field();
    (0..group.order())
        .filter(|&g| sub.basis().iter().all(|b| group.element(g).apply(f, b) == *b))
        .collect()
}

/// The restriction `G -> G(Γ/K)` for a G-stable subfield Γ.
#[derive(Clone, Debug)]
pub struct Restriction<F: Field> {
    /// Γ rebuilt as a one-level tower on its primitive element.
    pub subtower: Tower<F>,
    pub target: AutGroup<F::Elem>,
    /// `map[g]` is the index in `target` of `g` restricted to Γ.
    pub map: Vec<usize>,
    /// Elements restricting to the identity.
    pub kernel: Vec<usize>,
    /// Elements fixing Γ pointwise, computed directly on L.
    pub kernel_pointwise: Vec<usize>,
    pub surjective: bool,
    pub homomorphism: bool,
}

/// The subfield as a one-level tower over K on its primitive element `mu`.
pub fn subfield_tower<F: Field>(f: &F, gamma: &SubfieldHandle<F::Elem>) -> Result<Tower<F>> {
    let level = Level {
        name: "mu".into(),
        poly: gamma.minpoly.coeffs().iter().map(|c| vec![c.clone()]).collect(),
    };
    Tower::new(f.clone(), vec![level])
}

/// Restricts each automorphism to Γ, where Γ must be G-stable. `G(Γ/K)` is
/// computed independently on Γ as its own tower.
pub fn restriction_map<K: GroundField>(
    tower: &Tower<K>,
    group: &AutGroup<K::Elem>,
    gamma: &SubfieldHandle<K::Elem>,
    cfg: &RunConfig,
) -> Result<Restriction<K>> {
    let f = tower.field();
    if !is_stable(tower, group, &gamma.basis) {
        return Err(Error::NotStable);
    }
    let subtower = subfield_tower(f, gamma)?;
    let target = automorphisms(&subtower, cfg)?.group;
    let d = gamma.degree;
    let mut powers = vec![tower.one()];
    for _ in 1..d {
        powers.push(tower.mul(powers.last().unwrap(), &gamma.primitive));
    }
    let power_matrix = Mat::from_columns(&powers);
    let mut map = Vec::with_capacity(group.order());
    for a in group.elements() {
        let img = a.apply(f, &gamma.primitive);
        let coords = linalg::solve(f, &power_matrix, &img)
            .ok_or_else(|| Error::Inconsistent("image of the primitive element left the subfield".into()))?;
        let idx = target
            .elements()
            .iter()
            .position(|t| t.images[0] == coords)
            .ok_or_else(|| Error::Inconsistent("restriction is not an automorphism of the subfield".into()))?;
        map.push(idx);
    }
    let kernel = (0..group.order()).filter(|&g| map[g] == 0).collect();
    let kernel_pointwise = pointwise_stabilizer(tower, group, &gamma.basis);
    let mut hit = vec![false; target.order()];
    for &t in &map {
        hit[t] = true;
    }
    let surjective = hit.iter().all(|&h| h);
    let homomorphism = (0..group.order())
        .all(|g| (0..group.order()).all(|h| map[group.mul(g, h)] == target.mul(map[g], map[h])));
    Ok(Restriction {
        subtower,
        target,
        map,
        kernel,
        kernel_pointwise,
        surjective,
        homomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, Rationals};
    use crate::tower::{build_tower, ParsedTower};

    fn q_tower(text: &str) -> Tower<Rationals> {
        match build_tower(text, false).unwrap() {
            ParsedTower::Rational(t) => t.tower,
            _ => unreachable!(),
        }
    }

    const BIQUAD: &str = "base Q\ngen s minpoly s^2 - 2\ngen t minpoly t^2 - 3";

    #[test]
    fn orbits_in_biquadratic_field() {
        let t = q_tower(BIQUAD);
        let g = automorphisms(&t, &RunConfig::default()).unwrap().group;
        assert_eq!(g.order(), 4);
        let s = t.generator(0);
        let o = orbit(&t, &g, &s);
        assert_eq!(o.len(), 2);
        assert!(o.contains(&t.neg(&s)));
        let sum = t.add(&s, &t.generator(1));
        assert_eq!(orbit(&t, &g, &sum).len(), 4);
        assert_eq!(orbit(&t, &g, &t.constant(rat(5, 3))).len(), 1);
    }

    #[test]
    fn fixed_field_of_sqrt2_flip_is_q_sqrt3() {
        let t = q_tower(BIQUAD);
        let g = automorphisms(&t, &RunConfig::default()).unwrap().group;
        let f = Rationals;
        let flip = (0..4)
            .find(|&i| {
                let a = g.element(i);
                a.apply(&f, &t.generator(0)) == t.neg(&t.generator(0))
                    && a.apply(&f, &t.generator(1)) == t.generator(1)
            })
            .unwrap();
        let m = fixed_field(&t, &g, &[0, flip]).unwrap();
        assert_eq!(m.degree, 2);
        assert!(m.basis.contains(&f, &t.generator(1)));
        assert!(!m.basis.contains(&f, &t.generator(0)));
        assert_eq!(fixed_field(&t, &g, &[0]).unwrap().degree, 4);
        let whole: Vec<usize> = (0..4).collect();
        assert_eq!(fixed_field(&t, &g, &whole).unwrap().degree, 1);
    }

    #[test]
    fn s3_restriction_to_quadratic_subfield() {
        let t = q_tower("base Q\ngen a minpoly a^3 - 2\ngen w minpoly w^2 + w + 1");
        let g = automorphisms(&t, &RunConfig::default()).unwrap().group;
        assert_eq!(g.order(), 6);
        let orders = super::super::element_orders(g.cayley());
        let mut a3: Vec<usize> = (0..6).filter(|&i| orders[i] != 2).collect();
        a3.sort();
        assert_eq!(a3.len(), 3);
        let gamma = fixed_field(&t, &g, &a3).unwrap();
        assert_eq!(gamma.degree, 2);
        let r = restriction_map(&t, &g, &gamma, &RunConfig::default()).unwrap();
        assert_eq!(r.target.order(), 2);
        assert_eq!(r.kernel, a3);
        assert_eq!(r.kernel, r.kernel_pointwise);
        assert!(r.surjective && r.homomorphism);
        // a cubic subfield is not stable
        let cubic = fixed_field(&t, &g, &[0, (0..6).find(|&i| orders[i] == 2).unwrap()]).unwrap();
        assert_eq!(cubic.degree, 3);
        assert!(matches!(
            restriction_map(&t, &g, &cubic, &RunConfig::default()),
            Err(Error::NotStable)
        ));
    }

    #[test]
    fn gf64_subfields_have_divisor_degrees() {
        let t = match build_tower("base F2\ngen a minpoly a^6 + a + 1", false).unwrap() {
            ParsedTower::Prime(t) => t.tower,
            _ => unreachable!(),
        };
        let g = automorphisms(&t, &RunConfig::default()).unwrap().group;
        let subs = super::super::enumerate_subgroups(g.cayley(), 64).unwrap();
        let degrees: Vec<usize> = subs
            .iter()
            .map(|h| fixed_field(&t, &g, &h.elements).unwrap().degree)
            .collect();
        assert_eq!(degrees, vec![6, 3, 2, 1]);
    }
}
