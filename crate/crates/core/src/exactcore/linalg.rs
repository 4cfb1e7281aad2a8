//! Exact dense linear algebra over any [`Field`]: matrices, reduced row
//! echelon form, kernels, and canonical echelonized subspaces.

use super::field::Field;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<E>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                data.push(c[i].clone());
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries; the flattening used for subalgebra bases.
    pub fn flat(&self) -> &[E] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<E> {
        self.data
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F::Elem> {
    Mat::from_flat(rows, cols, vec![f.zero(); rows * cols])
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = zeros(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product shape");
    let mut out = zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let idx = i * b.cols + j;
                out.data[idx] = f.add(&out.data[idx], &f.mul(x, b.get(k, j)));
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
        })
        .collect()
}

pub fn mat_add<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect();
    Mat::from_flat(a.rows, a.cols, data)
}

pub fn mat_sub<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect();
    Mat::from_flat(a.rows, a.cols, data)
}

pub fn mat_scale<F: Field>(f: &F, a: &Mat<F::Elem>, c: &F::Elem) -> Mat<F::Elem> {
    let data = a.data.iter().map(|x| f.mul(x, c)).collect();
    Mat::from_flat(a.rows, a.cols, data)
}

pub fn trace<F: Field>(f: &F, a: &Mat<F::Elem>) -> F::Elem {
    (0..a.rows.min(a.cols)).fold(f.zero(), |acc, i| f.add(&acc, a.get(i, i)))
}

/// `trace(a * b)` without forming the product.
pub fn trace_of_product<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> F::Elem {
    let mut acc = f.zero();
    for i in 0..a.rows {
        for k in 0..a.cols {
            acc = f.add(&acc, &f.mul(a.get(i, k), b.get(k, i)));
        }
    }
    acc
}

pub fn is_zero_mat<F: Field>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

/// In-place reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).unwrap();
        for j in c..cols {
            let v = f.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..cols {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Mat<F::Elem>) -> usize {
    let mut c = m.clone();
    rref(f, &mut c).len()
}

/// Basis of the null space `{x : m x = 0}`.
pub fn kernel<F: Field>(f: &F, m: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut c = m.clone();
    let pivots = rref(f, &mut c);
    kernel_from_rref(f, c.cols, |i| c.row(i).to_vec(), &pivots)
}

fn kernel_from_rref<F: Field>(
    f: &F,
    cols: usize,
    row: impl Fn(usize) -> Vec<F::Elem>,
    pivots: &[usize],
) -> Vec<Vec<F::Elem>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let rows: Vec<Vec<F::Elem>> = (0..pivots.len()).map(row).collect();
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&rows[r][free]);
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(f: &F, m: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    let n = m.rows;
    if n != m.cols {
        return None;
    }
    let mut aug = zeros(f, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, f.one());
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let rows = (0..n).map(|i| aug.row(i)[n..].to_vec()).collect();
    Some(Mat::from_rows(rows))
}

pub fn is_invertible<F: Field>(f: &F, m: &Mat<F::Elem>) -> bool {
    m.rows == m.cols && rank(f, m) == m.rows
}

/// One solution of `m x = b`, if any.
pub fn solve<F: Field>(f: &F, m: &Mat<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut aug = zeros(f, rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(r, cols).clone();
    }
    Some(x)
}

/// A subspace of `F^ambient` held as a reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn from_vectors<F: Field<Elem = E>>(f: &F, ambient: usize, vecs: &[Vec<E>]) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vecs {
            s.insert(f, v.clone());
            if s.dim() == ambient {
                break;
            }
        }
        s
    }

    /// Remainder of `v` after eliminating the pivot columns.
    fn reduce<F: Field<Elem = E>>(&self, f: &F, mut v: Vec<E>) -> Vec<E> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        v
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut v = self.reduce(f, v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).unwrap();
        for x in v.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v.to_vec()).iter().all(|x| f.is_zero(x))
    }

    pub fn contains_subspace<F: Field<Elem = E>>(&self, f: &F, other: &Subspace<E>) -> bool {
        other.rows.iter().all(|v| self.contains(f, v))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let c: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        self.contains(f, v).then_some(c)
    }

    /// Basis of the null space of the matrix whose rows span this subspace.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<E>> {
        kernel_from_rref(f, self.ambient, |i| self.rows[i].clone(), &self.pivots)
    }
}

/// The matrix over `F` of a vector-valued linear map given by column images.
pub fn check_square<E>(m: &Mat<E>, n: usize) -> Result<()> {
    if m.rows != n || m.cols != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: m.rows.max(m.cols),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, PrimeField, Rationals};
    use proptest::prelude::*;

    fn qm(rows: &[&[i64]]) -> Mat<num_rational::BigRational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect())
    }

    #[test]
    fn kernel_and_rank() {
        let f = Rationals;
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&f, &m), 2);
        let k = kernel(&f, &m);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&f, &m, &k[0]).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn inverse_and_solve() {
        let f = Rationals;
        let m = qm(&[&[0, 2], &[1, 0]]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
        assert_eq!(solve(&f, &m, &[rat(1, 1), rat(0, 1)]), Some(vec![rat(0, 1), rat(1, 2)]));
        assert!(inverse(&f, &qm(&[&[1, 1], &[1, 1]])).is_none());
        assert!(solve(&f, &qm(&[&[1, 1], &[1, 1]]), &[rat(0, 1), rat(1, 1)]).is_none());
    }

    #[test]
    fn subspace_is_canonical() {
        let f = PrimeField::new(5).unwrap();
        let a = Subspace::from_vectors(&f, 3, &[vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(&f, 3, &[vec![1, 3, 1], vec![2, 4, 0], vec![1, 3, 1]]);
        assert_eq!(a, b);
        assert!(a.contains(&f, &[1, 4, 2]));
        assert!(!a.contains(&f, &[0, 0, 1]));
        let k = a.kernel(&f);
        assert_eq!(k.len(), 1);
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in proptest::collection::vec(-4i64..5, 12)) {
            let f = Rationals;
            let m = Mat::from_flat(3, 4, entries.iter().map(|&v| rat(v, 1)).collect());
            let k = kernel(&f, &m);
            prop_assert_eq!(k.len() + rank(&f, &m), 4);
            for v in &k {
                prop_assert!(mat_vec(&f, &m, v).iter().all(|x| f.is_zero(x)));
            }
        }

        #[test]
        fn subspace_independent_of_insertion_order(
            vs in proptest::collection::vec(proptest::collection::vec(0u64..3, 4), 1..6)
        ) {
            let f = PrimeField::new(3).unwrap();
            let a = Subspace::from_vectors(&f, 4, &vs);
            let mut rev = vs.clone();
            rev.reverse();
            let b = Subspace::from_vectors(&f, 4, &rev);
            prop_assert_eq!(a, b);
        }
    }
}
