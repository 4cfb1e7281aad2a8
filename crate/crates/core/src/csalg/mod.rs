//! Unital subalgebras of the full matrix algebra `M_n(K)`, stored as
//! canonical echelon bases of row-major flattened matrices.

mod conjugate;
mod simple;
mod skew;

pub use conjugate::find_conjugator;
pub use simple::{is_simple, matrix_minpoly, Simplicity};
pub use skew::{
    bimodule_hom_dim, group_part, is_g_stable, skew_group_algebra, subalgebras_containing_l, SkewGroupAlgebra,
};

use crate::error::Result;
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra<E> {
    n: usize,
    space: Subspace<E>,
    pub tag: String,
}

impl<E: Clone + PartialEq> Subalgebra<E> {
    /// Wraps a subspace of flattened `n x n` matrices without checking closure.
    pub fn from_space(n: usize, space: Subspace<E>, tag: impl Into<String>) -> Self {
        Subalgebra {
            n,
            space,
            tag: tag.into(),
        }
    }

    /// Span of the given matrices, without checking closure.
    pub fn span<F: Field<Elem = E>>(f: &F, n: usize, mats: &[Mat<E>], tag: impl Into<String>) -> Self {
        let flat: Vec<Vec<E>> = mats.iter().map(|m| m.flat().to_vec()).collect();
        Self::from_space(n, Subspace::from_vectors(f, n * n, &flat), tag)
    }

    /// All of `M_n(K)`.
    pub fn full<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let units: Vec<Vec<E>> = (0..n * n)
            .map(|k| {
                let mut v = vec![f.zero(); n * n];
                v[k] = f.one();
                v
            })
            .collect();
        Self::from_space(n, Subspace::from_vectors(f, n * n, &units), "E")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace<E> {
        &self.space
    }

    pub fn basis(&self) -> Vec<Mat<E>> {
        self.space
            .basis()
            .iter()
            .map(|v| Mat::from_flat(self.n, self.n, v.clone()))
            .collect()
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, m: &Mat<E>) -> bool {
        self.space.contains(f, m.flat())
    }

    /// Same underlying subspace; tags are ignored.
    pub fn same_as(&self, other: &Self) -> bool {
        self.n == other.n && self.space == other.space
    }

    pub fn is_subalgebra_of<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.space.contains_subspace(f, &self.space)
    }

    /// Contains the identity and the product of every pair of basis elements.
    pub fn is_closed<F: Field<Elem = E>>(&self, f: &F) -> bool {
        if !self.contains(f, &linalg::identity(f, self.n)) {
            return false;
        }
        let b = self.basis();
        b.iter()
            .all(|x| b.iter().all(|y| self.contains(f, &linalg::mat_mul(f, x, y))))
    }
}

fn check_sizes<E>(n: usize, mats: &[Mat<E>]) -> Result<()> {
    for m in mats {
        linalg::check_square(m, n)?;
    }
    Ok(())
}

/// The least unital subalgebra containing `gens`: the span of all words,
/// grown by right multiplication until nothing new appears.
pub fn span_closure<F: Field>(f: &F, n: usize, gens: &[Mat<F::Elem>]) -> Result<Subalgebra<F::Elem>> {
    check_sizes(n, gens)?;
    let mut space = Subspace::zero(n * n);
    let id = linalg::identity(f, n);
    space.insert(f, id.flat().to_vec());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        for g in gens {
            let p = linalg::mat_mul(f, &queue[i], g);
            if space.insert(f, p.flat().to_vec()) {
                queue.push(p);
            }
        }
        i += 1;
    }
    Ok(Subalgebra::from_space(n, space, "span"))
}

/// Rows of the linear system `X M - M X = 0` in the unknowns `X` (row-major).
fn commutation_rows<F: Field>(f: &F, n: usize, m: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![f.zero(); n * n];
            for k in 0..n {
                // (XM)_ij = sum_k X_ik M_kj ; (MX)_ij = sum_k M_ik X_kj
                row[i * n + k] = f.add(&row[i * n + k], m.get(k, j));
                row[k * n + j] = f.sub(&row[k * n + j], m.get(i, k));
            }
            rows.push(row);
        }
    }
    rows
}

/// All `n x n` matrices commuting with every element of `s`.
pub fn centralizer<F: Field>(f: &F, n: usize, s: &[Mat<F::Elem>]) -> Result<Subalgebra<F::Elem>> {
    check_sizes(n, s)?;
    let mut eqs = Subspace::zero(n * n);
    for m in s {
        for row in commutation_rows(f, n, m) {
            eqs.insert(f, row);
        }
    }
    let kernel = eqs.kernel(f);
    Ok(Subalgebra::from_space(n, Subspace::from_vectors(f, n * n, &kernel), "centralizer"))
}

/// Elements of `a` commuting with all of `a`.
pub fn center<F: Field>(f: &F, a: &Subalgebra<F::Elem>) -> Subalgebra<F::Elem> {
    let basis = a.basis();
    let k = basis.len();
    let n = a.size();
    // unknown coefficients c_k of X = sum c_k A_k; one row per matrix entry per B_j
    let mut eqs = Subspace::zero(k);
    for b in &basis {
        let comms: Vec<Mat<F::Elem>> = basis
            .iter()
            .map(|x| linalg::mat_sub(f, &linalg::mat_mul(f, x, b), &linalg::mat_mul(f, b, x)))
            .collect();
        for e in 0..n * n {
            eqs.insert(f, comms.iter().map(|c| c.flat()[e].clone()).collect());
        }
    }
    let coeffs = eqs.kernel(f);
    let mats: Vec<Mat<F::Elem>> = coeffs
        .iter()
        .map(|c| {
            basis
                .iter()
                .zip(c)
                .fold(linalg::zeros(f, n, n), |acc, (m, x)| linalg::mat_add(f, &acc, &linalg::mat_scale(f, m, x)))
        })
        .collect();
    Subalgebra::span(f, n, &mats, "center")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Mat<BigRational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn closure_examples() {
        let f = Rationals;
        assert_eq!(span_closure(&f, 2, &[q(&[&[1, 0], &[0, 1]])]).unwrap().dim(), 1);
        let root2 = q(&[&[0, 2], &[1, 0]]);
        assert_eq!(span_closure(&f, 2, &[root2]).unwrap().dim(), 2);
        let e11 = q(&[&[1, 0], &[0, 0]]);
        let e12 = q(&[&[0, 1], &[0, 0]]);
        let e21 = q(&[&[0, 0], &[1, 0]]);
        let a = span_closure(&f, 2, &[e11, e12, e21]).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_closed(&f));
    }

    #[test]
    fn centralizer_examples() {
        let f = Rationals;
        assert_eq!(centralizer(&f, 2, &[q(&[&[1, 0], &[0, 1]])]).unwrap().dim(), 4);
        let root2 = q(&[&[0, 2], &[1, 0]]);
        let c = centralizer(&f, 2, &[root2.clone()]).unwrap();
        assert!(c.same_as(&span_closure(&f, 2, &[root2]).unwrap()));
        let full = Subalgebra::full(&f, 2);
        let z = centralizer(&f, 2, &full.basis()).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&f, &linalg::identity(&f, 2)));
    }

    #[test]
    fn center_examples() {
        let f = Rationals;
        assert_eq!(center(&f, &Subalgebra::full(&f, 3)).dim(), 1);
        let l = span_closure(&f, 2, &[q(&[&[0, 2], &[1, 0]])]).unwrap();
        assert!(center(&f, &l).same_as(&l));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let f = Rationals;
        assert!(span_closure(&f, 3, &[q(&[&[1, 0], &[0, 1]])]).is_err());
    }

    fn small_mat() -> impl Strategy<Value = Mat<BigRational>> {
        prop::collection::vec(-2i64..=2, 9).prop_map(|v| Mat::from_flat(3, 3, v.into_iter().map(|x| rat(x, 1)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn closure_is_idempotent_and_monotone(a in small_mat(), b in small_mat()) {
            let f = Rationals;
            let one = span_closure(&f, 3, &[a.clone()]).unwrap();
            let again = span_closure(&f, 3, &one.basis()).unwrap();
            prop_assert!(one.same_as(&again));
            let two = span_closure(&f, 3, &[a, b]).unwrap();
            prop_assert!(one.is_subalgebra_of(&f, &two));
            prop_assert!(two.is_closed(&f));
        }

        #[test]
        fn centralizer_elements_commute(a in small_mat()) {
            let f = Rationals;
            let c = centralizer(&f, 3, &[a.clone()]).unwrap();
            for x in c.basis() {
                prop_assert_eq!(linalg::mat_mul(&f, &x, &a), linalg::mat_mul(&f, &a, &x));
            }
            prop_assert!(c.is_closed(&f));
        }
    }
}
