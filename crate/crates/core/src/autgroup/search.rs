//! Candidate generation: Frobenius powers over a finite ground, integer
//! relations between complex embeddings over a number field ground. Every
//! candidate is then certified exactly.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use super::{certify, AutGroup, Automorphism};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::exactcore::field::Rationals;
use crate::numeric::{integer_relation, Fixed};
use crate::tower::{numeric_embeddings, GroundField, Level, RationalGround, Tower};

/// The computed group and how it was found.
#[derive(Clone, Debug)]
pub struct AutSearch<E> {
    pub group: AutGroup<E>,
    /// Final working precision of the numeric search, if one ran.
    pub precision: Option<u32>,
    /// Embeddings that yielded no candidate automorphism.
    pub discarded: usize,
}

/// All K-algebra automorphisms of the top field of `tower`.
pub fn automorphisms<K: GroundField>(tower: &Tower<K>, cfg: &RunConfig) -> Result<AutSearch<K::Elem>> {
    if tower.levels().is_empty() {
        let id = certify(tower, Vec::new()).expect("identity of a trivial extension");
        return Ok(AutSearch {
            group: AutGroup::new(tower, vec![id])?,
            precision: None,
            discarded: 0,
        });
    }
    let field = tower.field();
    if let Some(q) = field.size() {
        let group = AutGroup::new(tower, frobenius_powers(tower, &q))?;
        return Ok(AutSearch {
            group,
            precision: None,
            discarded: 0,
        });
    }
    let ground = field
        .rational_ground()
        .ok_or_else(|| Error::Config("unsupported ground field".into()))?;
    numeric_search(tower, &ground, cfg)
}

fn frobenius_powers<K: GroundField>(tower: &Tower<K>, q: &BigUint) -> Vec<Automorphism<K::Elem>> {
    let gens: Vec<Vec<K::Elem>> = (0..tower.levels().len()).map(|i| tower.generator(i)).collect();
    let mut current = gens;
    let mut out: Vec<Automorphism<K::Elem>> = Vec::new();
    for _ in 0..tower.degree() {
        if let Some(a) = certify(tower, current.clone()) {
            if !out.iter().any(|b| b.images == a.images) {
                out.push(a);
            }
        }
        current = current.iter().map(|x| tower.pow(x, q)).collect();
    }
    out
}

/// Flattens the relative tower over a number field ground into one tower
/// over Q: the ground's levels followed by the relative levels with every
/// K-coefficient expanded to Q-coordinates.
fn absolute_tower<K: GroundField>(tower: &Tower<K>, ground: &RationalGround) -> Result<Tower<Rationals>> {
    let field = tower.field();
    let mut levels = ground.levels.clone();
    for lv in tower.levels() {
        let poly = lv
            .poly
            .iter()
            .map(|c| {
                c.iter()
                    .flat_map(|x| field.to_rationals(x).expect("characteristic zero ground"))
                    .collect()
            })
            .collect();
        levels.push(Level {
            name: lv.name.clone(),
            poly,
        });
    }
    Tower::new(Rationals, levels)
}

enum Attempt<E> {
    Done(Vec<Automorphism<E>>, usize),
    /// Number of embeddings left unresolved.
    Escalate(usize),
}

fn numeric_search<K: GroundField>(
    tower: &Tower<K>,
    ground: &RationalGround,
    cfg: &RunConfig,
) -> Result<AutSearch<K::Elem>> {
    let abs = absolute_tower(tower, ground)?;
    let mut bits = cfg.precision;
    loop {
        match attempt(tower, &abs, ground.levels.len(), bits, cfg.max_denominator)? {
            Attempt::Done(found, discarded) => {
                return Ok(AutSearch {
                    group: AutGroup::new(tower, found)?,
                    precision: Some(bits),
                    discarded,
                })
            }
            Attempt::Escalate(pending) if bits >= cfg.precision_cap => {
                return Err(Error::PrecisionExhausted {
                    cap: cfg.precision_cap,
                    pending,
                })
            }
            Attempt::Escalate(_) => {}
        }
        bits = (bits * 2).min(cfg.precision_cap);
    }
}

/// One pass at fixed precision. Escalates when roots are not separated or
/// when some embedding produced a relation whose exact check failed.
fn attempt<K: GroundField>(
    tower: &Tower<K>,
    abs: &Tower<Rationals>,
    k: usize,
    bits: u32,
    max_denominator: u64,
) -> Result<Attempt<K::Elem>> {
    let field = tower.field();
    let fx = Fixed::new(bits);
    let embeddings = match numeric_embeddings(abs, &fx) {
        Ok(e) => e,
        Err(Error::InsufficientPrecision { .. }) => return Ok(Attempt::Escalate(abs.degree())),
        Err(e) => return Err(e),
    };
    let reference = &embeddings[0];
    let agree = -(bits as i64) / 4;
    let bound = BigInt::from(max_denominator);
    let dk = abs.dim_below(k);
    let mut found: Vec<Automorphism<K::Elem>> = Vec::new();
    let mut discarded = 0;
    let mut near = 0;
    for psi in &embeddings {
        let same_ground = (0..k).all(|j| fx.below_pow2(&fx.sub(&psi.gens[j], &reference.gens[j]), agree));
        if !same_ground {
            continue;
        }
        let mut images = Vec::new();
        for i in k..abs.levels().len() {
            let rels = integer_relation(&fx, &reference.basis, &psi.gens[i], &bound);
            let Some(rel) = rels.first() else { break };
            let m = rel.len() - 1;
            let coords: Vec<BigRational> = rel[..m]
                .iter()
                .map(|a| -BigRational::new(a.clone(), rel[m].clone()))
                .collect();
            if coords.iter().any(|c| c.denom() > &bound) {
                break;
            }
            let image: Option<Vec<K::Elem>> = coords.chunks(dk).map(|c| field.from_rationals(c)).collect();
            images.push(image.expect("chunk length matches the ground degree"));
        }
        if images.len() < tower.levels().len() {
            discarded += 1;
            continue;
        }
        match certify(tower, images) {
            Some(a) => {
                if !found.iter().any(|b| b.images == a.images) {
                    found.push(a);
                }
            }
            None => near += 1,
        }
    }
    if near > 0 {
        return Ok(Attempt::Escalate(near));
    }
    Ok(Attempt::Done(found, discarded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{build_tower, ParsedTower};

    fn q_tower(text: &str) -> Tower<Rationals> {
        match build_tower(text, false).unwrap() {
            ParsedTower::Rational(t) => t.tower,
            _ => unreachable!(),
        }
    }

    #[test]
    fn sqrt2_group_is_conjugation() {
        let t = q_tower("base Q\ngen s minpoly s^2 - 2");
        let s = automorphisms(&t, &RunConfig::default()).unwrap();
        assert_eq!(s.group.order(), 2);
        let f = Rationals;
        let sigma = s.group.element(1);
        assert_eq!(sigma.apply(&f, &t.generator(0)), t.neg(&t.generator(0)));
    }

    #[test]
    fn cube_root_of_two_has_trivial_group() {
        let t = q_tower("base Q\ngen a minpoly a^3 - 2");
        let s = automorphisms(&t, &RunConfig::default()).unwrap();
        assert_eq!(s.group.order(), 1);
        assert_eq!(s.discarded, 2);
    }

    #[test]
    fn gf16_group_is_cyclic_of_order_four() {
        let t = match build_tower("base F2\ngen a minpoly a^4 + a + 1", false).unwrap() {
            ParsedTower::Prime(t) => t.tower,
            _ => unreachable!(),
        };
        let g = automorphisms(&t, &RunConfig::default()).unwrap().group;
        assert_eq!(g.order(), 4);
        let orders = super::super::element_orders(g.cayley());
        assert!(orders.contains(&4));
        // x -> x^2 is among them
        let a = t.generator(0);
        let sq = t.mul(&a, &a);
        assert!(g.elements().iter().any(|e| e.images[0] == sq));
    }
}
