//! Simplicity of a matrix subalgebra: zero radical plus a center that is a
//! field.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{center, Subalgebra};
use crate::config::PRIMITIVE_BUDGET;
use crate::error::Result;
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat, Subspace};
use crate::exactcore::poly::{Poly, PolyRing};
use crate::tower::{small_vectors, Certificate, GroundField};

const IDEAL_SEED: u64 = 0x5eed_1dea;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicity {
    /// `None` when undecided.
    pub simple: Option<bool>,
    pub probabilistic: bool,
    pub method: String,
    pub center_dim: usize,
}

/// Minimal polynomial of a square matrix from the first dependence among
/// its flattened powers.
pub fn matrix_minpoly<F: Field>(f: &F, m: &Mat<F::Elem>) -> Poly<F::Elem> {
    let n = m.rows();
    let mut powers = vec![linalg::identity(f, n)];
    loop {
        let next = linalg::mat_mul(f, powers.last().unwrap(), m);
        let cols: Vec<Vec<F::Elem>> = powers.iter().map(|p| p.flat().to_vec()).collect();
        if let Some(c) = linalg::solve(f, &Mat::from_columns(&cols), next.flat()) {
            let mut coeffs: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
            coeffs.push(f.one());
            return PolyRing::new(f.clone()).from_coeffs(coeffs);
        }
        powers.push(next);
    }
}

fn combine<F: Field>(f: &F, n: usize, basis: &[Mat<F::Elem>], coeffs: &[F::Elem]) -> Mat<F::Elem> {
    basis
        .iter()
        .zip(coeffs)
        .fold(linalg::zeros(f, n, n), |acc, (m, c)| linalg::mat_add(f, &acc, &linalg::mat_scale(f, m, c)))
}

/// Dimension of the two-sided ideal generated by `x`.
fn ideal_dim<F: Field>(f: &F, basis: &[Mat<F::Elem>], x: &Mat<F::Elem>) -> usize {
    let n = x.rows();
    let mut span = Subspace::zero(n * n);
    for a in basis {
        let ax = linalg::mat_mul(f, a, x);
        for b in basis {
            span.insert(f, linalg::mat_mul(f, &ax, b).into_flat());
        }
    }
    span.dim()
}

/// Decides whether the center is a field: find an element whose minimal
/// polynomial has degree `dim Z`, then certify that polynomial irreducible.
fn center_is_field<K: GroundField>(f: &K, z: &Subalgebra<K::Elem>) -> Result<Option<bool>> {
    let basis = z.basis();
    let k = basis.len();
    let n = z.size();
    let (coeffs, exhaustive): (Vec<Vec<K::Elem>>, bool) = match f.enumerate(PRIMITIVE_BUDGET) {
        Some(elems) if elems.len().checked_pow(k as u32).is_some_and(|t| t <= PRIMITIVE_BUDGET) => {
            let total = elems.len().pow(k as u32);
            let all = (0..total)
                .map(|mut idx| {
                    (0..k)
                        .map(|_| {
                            let e = elems[idx % elems.len()].clone();
                            idx /= elems.len();
                            e
                        })
                        .collect()
                })
                .collect();
            (all, true)
        }
        _ => (
            small_vectors(k, 3, PRIMITIVE_BUDGET)
                .into_iter()
                .map(|v| v.into_iter().map(|c| f.from_i64(c)).collect())
                .collect(),
            false,
        ),
    };
    for c in coeffs {
        let m = matrix_minpoly(f, &combine(f, n, &basis, &c));
        if m.degree() == Some(k) {
            return Ok(match f.irreducible_over(&m, "x")? {
                Certificate::Irreducible(_) => Some(true),
                Certificate::Reducible(_) => Some(false),
                Certificate::Unknown => None,
            });
        }
    }
    // a finite field extension always has a primitive element
    Ok(if exhaustive { Some(false) } else { None })
}

/// Commutative algebras are simple exactly when they are fields. Otherwise
/// the trace form is tried first: a nondegenerate form `(x, y) -> tr(xy)`
/// proves the radical is zero in any characteristic, and a degenerate one
/// disproves it in characteristic 0. In characteristic p a degenerate form
/// falls back to checking that `trials` random elements each generate all
/// of `a`.
pub fn is_simple<K: GroundField>(f: &K, a: &Subalgebra<K::Elem>, trials: usize) -> Result<Simplicity> {
    let basis = a.basis();
    let d = basis.len();
    let z = center(f, a);
    let center_dim = z.dim();
    let verdict = |simple, probabilistic, method: &str| Simplicity {
        simple,
        probabilistic,
        method: method.into(),
        center_dim,
    };
    // a commutative algebra is its own center, so the field test alone decides it
    let commutative = center_dim == d;
    let nondegenerate = commutative || {
        let gram = Mat::from_rows(
            basis
                .iter()
                .map(|x| basis.iter().map(|y| linalg::trace_of_product(f, x, y)).collect())
                .collect(),
        );
        linalg::rank(f, &gram) == d
    };
    let mut probabilistic = false;
    if !nondegenerate {
        if f.characteristic() == 0 {
            return Ok(verdict(Some(false), false, "trace form has a nonzero radical"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(IDEAL_SEED);
        let mut tried = 0;
        while tried < trials {
            let c: Vec<K::Elem> = (0..d).map(|_| f.random_elem(&mut rng)).collect();
            let x = combine(f, a.size(), &basis, &c);
            if linalg::is_zero_mat(f, &x) {
                continue;
            }
            if ideal_dim(f, &basis, &x) < d {
                return Ok(verdict(Some(false), false, "random element generates a proper ideal"));
            }
            tried += 1;
        }
        probabilistic = true;
    }
    let method = if commutative {
        "commutative and a field"
    } else if probabilistic {
        "random ideal test and center is a field"
    } else {
        "nondegenerate trace form and center is a field"
    };
    Ok(match center_is_field(f, &z)? {
        Some(true) => verdict(Some(true), probabilistic, method),
        Some(false) => verdict(Some(false), false, "center is not a field"),
        None => verdict(None, probabilistic, "center could not be decided"),
    })
}
