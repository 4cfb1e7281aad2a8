//! The group of K-algebra automorphisms of the top field of a tower, as
//! explicit matrices over K, with its subgroups, orbits and fixed fields.

mod fixed;
mod iso;
mod search;
mod subgroups;

pub use fixed::{
    fixed_field, fixed_space, is_stable, orbit, pointwise_stabilizer, restriction_map, subfield_tower, Restriction,
    SubfieldHandle,
};
pub use iso::{find_isomorphism, quotient_table};
pub use search::{automorphisms, AutSearch};
pub use subgroups::{enumerate_subgroups, Subgroup};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat};
use crate::tower::Tower;

/// A K-algebra automorphism given by the images of the generators above the
/// ground, together with its matrix over K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism<E> {
    pub images: Vec<Vec<E>>,
    pub matrix: Mat<E>,
}

/// Images of every basis monomial under the K-linear extension of the
/// generator images, as matrix columns.
fn extend_to_basis<F: Field>(tower: &Tower<F>, images: &[Vec<F::Elem>]) -> Mat<F::Elem> {
    let n = tower.degree();
    let cols: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| {
            tower
                .exponents(j)
                .iter()
                .zip(images)
                .fold(tower.one(), |acc, (&e, img)| tower.mul(&acc, &tower.pow_usize(img, e)))
        })
        .collect();
    Mat::from_columns(&cols)
}

/// Builds the automorphism with the given generator images, or `None` when
/// the images do not define a ring automorphism. Checks, exactly: each image
/// is a root of the image of its defining polynomial, the map respects all
/// products of basis pairs, and the matrix is invertible.
pub fn certify<F: Field>(tower: &Tower<F>, images: Vec<Vec<F::Elem>>) -> Option<Automorphism<F::Elem>> {
    let f = tower.field();
    let n = tower.degree();
    let s = extend_to_basis(tower, &images);
    for (lv, img) in tower.levels().iter().zip(&images) {
        let mapped: Vec<Vec<F::Elem>> = lv
            .poly
            .iter()
            .map(|c| linalg::mat_vec(f, &s, &tower.embed(c)))
            .collect();
        if !tower.is_zero(&tower.eval(&mapped, img)) {
            return None;
        }
    }
    for j in 0..n {
        for k in j..n {
            let prod = tower.mul(&tower.basis(j), &tower.basis(k));
            let lhs = linalg::mat_vec(f, &s, &prod);
            let rhs = tower.mul(&s.column(j), &s.column(k));
            if lhs != rhs {
                return None;
            }
        }
    }
    if !linalg::is_invertible(f, &s) {
        return None;
    }
    Some(Automorphism { images, matrix: s })
}

impl<E: Clone> Automorphism<E> {
    pub fn apply<F: Field<Elem = E>>(&self, f: &F, l: &[E]) -> Vec<E> {
        linalg::mat_vec(f, &self.matrix, l)
    }
}

/// A finite group of automorphisms with index 0 the identity.
#[derive(Clone, Debug)]
pub struct AutGroup<E> {
    elements: Vec<Automorphism<E>>,
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl<E: Clone + Eq + std::hash::Hash> AutGroup<E> {
    /// Orders the elements canonically (identity, then lexicographic by
    /// generator images) and builds the Cayley table `table[g][h] = g∘h`.
    pub fn new<F: Field<Elem = E>>(tower: &Tower<F>, mut elements: Vec<Automorphism<E>>) -> Result<Self> {
        let f = tower.field();
        let ident = linalg::identity(f, tower.degree());
        let id_pos = elements
            .iter()
            .position(|a| a.matrix == ident)
            .ok_or_else(|| Error::Inconsistent("identity missing from automorphism set".into()))?;
        let id = elements.remove(id_pos);
        elements.sort_by(|a, b| {
            a.images
                .iter()
                .flatten()
                .zip(b.images.iter().flatten())
                .map(|(x, y)| f.cmp_elem(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        elements.insert(0, id);
        let index: HashMap<&Mat<E>, usize> = elements.iter().enumerate().map(|(i, a)| (&a.matrix, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Inconsistent("duplicate automorphisms".into()));
        }
        let m = elements.len();
        let mut cayley = vec![vec![0; m]; m];
        for g in 0..m {
            for h in 0..m {
                let prod = linalg::mat_mul(f, &elements[g].matrix, &elements[h].matrix);
                cayley[g][h] = *index
                    .get(&prod)
                    .ok_or_else(|| Error::Inconsistent("automorphism set not closed under composition".into()))?;
            }
        }
        let inverse = (0..m)
            .map(|g| (0..m).find(|&h| cayley[g][h] == 0).unwrap())
            .collect();
        let group = AutGroup {
            elements,
            cayley,
            inverse,
        };
        group.check_table()?;
        Ok(group)
    }
}

impl<E> AutGroup<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism<E>] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &Automorphism<E> {
        &self.elements[g]
    }

    pub fn matrix(&self, g: usize) -> &Mat<E> {
        &self.elements[g].matrix
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Identity row and column, Latin-square rows and full associativity.
    fn check_table(&self) -> Result<()> {
        let m = self.order();
        for g in 0..m {
            if self.cayley[0][g] != g || self.cayley[g][0] != g {
                return Err(Error::Inconsistent("identity row is not trivial".into()));
            }
            let mut seen = vec![false; m];
            for &x in &self.cayley[g] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Inconsistent("Cayley row is not a permutation".into()));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = self.cayley[a][b];
                for c in 0..m {
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]] {
                        return Err(Error::Inconsistent("Cayley table is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Element orders from a Cayley table.
pub fn element_orders(table: &[Vec<usize>]) -> Vec<usize> {
    (0..table.len())
        .map(|g| {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x][g];
                k += 1;
            }
            k
        })
        .collect()
}
