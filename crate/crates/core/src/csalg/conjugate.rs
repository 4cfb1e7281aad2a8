//! Units intertwining two embeddings of the same algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat, Subspace};

const CONJUGATOR_SEED: u64 = 0x00c0_417a;

/// A unit `u` with `u a_i u^{-1} = b_i` for all `i`, where `a_i -> b_i` is the
/// caller's generator map. Solves `u a_i = b_i u`, then tries `budget`
/// deterministic combinations of the solution basis followed by `budget`
/// random ones, keeping the first invertible candidate that conjugates
/// exactly.
///
/// The deterministic candidates are seeded draws with coefficients in
/// `[-3, 3]`. Sparse combinations are avoided: when the intertwiners are all
/// of E, every sparse combination of the unit basis is singular.
pub fn find_conjugator<F: Field>(
    f: &F,
    n: usize,
    a_gens: &[Mat<F::Elem>],
    b_gens: &[Mat<F::Elem>],
    budget: usize,
) -> Result<Mat<F::Elem>> {
    if a_gens.len() != b_gens.len() {
        return Err(Error::SizeMismatch {
            expected: a_gens.len(),
            got: b_gens.len(),
        });
    }
    for m in a_gens.iter().chain(b_gens) {
        linalg::check_square(m, n)?;
    }
    let mut eqs = Subspace::zero(n * n);
    for (a, b) in a_gens.iter().zip(b_gens) {
        // (u a - b u)_{rc} = sum_k u_rk a_kc - b_rk u_kc
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![f.zero(); n * n];
                for k in 0..n {
                    row[r * n + k] = f.add(&row[r * n + k], a.get(k, c));
                    row[k * n + c] = f.sub(&row[k * n + c], b.get(r, k));
                }
                eqs.insert(f, row);
            }
        }
    }
    let sol = eqs.kernel(f);
    if sol.is_empty() {
        return Err(Error::ConjugatorBudget { budget: 0 });
    }
    let k = sol.len();
    let combine = |c: &[F::Elem]| {
        let mut v = vec![f.zero(); n * n];
        for (s, x) in sol.iter().zip(c) {
            for (acc, y) in v.iter_mut().zip(s) {
                *acc = f.add(acc, &f.mul(x, y));
            }
        }
        Mat::from_flat(n, n, v)
    };
    let accept = |u: &Mat<F::Elem>| -> bool {
        let Some(inv) = linalg::inverse(f, u) else {
            return false;
        };
        a_gens
            .iter()
            .zip(b_gens)
            .all(|(a, b)| linalg::mat_mul(f, &linalg::mat_mul(f, u, a), &inv) == *b)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(CONJUGATOR_SEED);
    for _ in 0..budget {
        let coeffs: Vec<F::Elem> = (0..k).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        let u = combine(&coeffs);
        if accept(&u) {
            return Ok(u);
        }
    }
    for _ in 0..budget {
        let coeffs: Vec<F::Elem> = (0..k).map(|_| f.random_elem(&mut rng)).collect();
        let u = combine(&coeffs);
        if accept(&u) {
            return Ok(u);
        }
    }
    Err(Error::ConjugatorBudget { budget: 2 * budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, Rationals};

    fn q(rows: &[&[i64]]) -> Mat<num_rational::BigRational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn identity_map_gives_a_unit() {
        let f = Rationals;
        let a = q(&[&[0, 2], &[1, 0]]);
        let u = find_conjugator(&f, 2, &[a.clone()], &[a], 1000).unwrap();
        assert!(linalg::is_invertible(&f, &u));
    }

    #[test]
    fn swapping_idempotents_gives_an_antidiagonal_unit() {
        let f = Rationals;
        let e1 = q(&[&[1, 0], &[0, 0]]);
        let e2 = q(&[&[0, 0], &[0, 1]]);
        let u = find_conjugator(&f, 2, &[e1.clone(), e2.clone()], &[e2.clone(), e1.clone()], 1000).unwrap();
        // the intertwiners are the antidiagonal matrices
        assert!(f.is_zero(u.get(0, 0)) && f.is_zero(u.get(1, 1)));
        let inv = linalg::inverse(&f, &u).unwrap();
        assert_eq!(linalg::mat_mul(&f, &linalg::mat_mul(&f, &u, &e1), &inv), e2);
    }

    #[test]
    fn non_similar_targets_fail() {
        let f = Rationals;
        let a = q(&[&[1, 0], &[0, 0]]);
        let b = q(&[&[1, 0], &[0, 1]]);
        assert!(find_conjugator(&f, 2, &[a], &[b], 50).is_err());
    }
}
