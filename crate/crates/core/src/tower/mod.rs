//! Towers of simple extensions over a field `F`, with exact element
//! arithmetic in the product power basis.
//!
//! Coordinates are flat vectors over `F`. The basis monomial with exponents
//! `(e_0, .., e_{m-1})` sits at index `sum e_i * D_i`, where `D_0 = 1` and
//! `D_{i+1} = D_i * deg_i`, so the lowest level varies fastest and an element
//! of a lower field embeds by zero padding.

mod build;
pub mod dsl;
mod embed;
mod ground;
mod towerfield;

pub use build::{build_tower, certify_over_rational_tower, AbsoluteTower, Certificate, ParsedTower, PrimeBase};
pub(crate) use build::small_vectors;
pub use embed::{numeric_embeddings, Embedding};
pub use ground::{GroundField, RationalGround};
pub use towerfield::TowerField;

use num_bigint::BigUint;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactcore::field::Field;
use crate::exactcore::linalg::{self, Mat};
use crate::exactcore::poly::{format_poly, Poly, PolyRing};

/// One simple extension step: a generator and its monic defining polynomial
/// whose coefficients live in the field generated by the levels below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level<E> {
    pub name: String,
    /// Low degree first; each entry is a flat coordinate vector of the field
    /// below. The last entry is one.
    pub poly: Vec<Vec<E>>,
}

impl<E> Level<E> {
    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct Tower<F: Field> {
    field: F,
    levels: Vec<Level<F::Elem>>,
    dims: Vec<usize>,
}

impl<F: Field> Tower<F> {
    /// Checks shapes and monicity; irreducibility is the caller's business.
    pub fn new(field: F, levels: Vec<Level<F::Elem>>) -> Result<Self> {
        let mut dims = vec![1usize];
        for (i, lv) in levels.iter().enumerate() {
            let d = dims[i];
            if lv.poly.len() < 2 {
                return Err(Error::ConstantPolynomial);
            }
            if let Some(bad) = lv.poly.iter().find(|c| c.len() != d) {
                return Err(Error::SizeMismatch {
                    expected: d,
                    got: bad.len(),
                });
            }
            let lead = lv.poly.last().unwrap();
            if !(field.is_one(&lead[0]) && lead[1..].iter().all(|x| field.is_zero(x))) {
                return Err(Error::NonMonic {
                    line: 0,
                    name: lv.name.clone(),
                });
            }
            dims.push(d * lv.degree());
        }
        Ok(Tower {
            field,
            levels,
            dims,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn levels(&self) -> &[Level<F::Elem>] {
        &self.levels
    }

    /// Dimension of the field generated by the first `i` levels.
    pub fn dim_below(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Total degree over `F`.
    pub fn degree(&self) -> usize {
        *self.dims.last().unwrap()
    }

    /// The tower consisting of the first `k` levels.
    pub fn prefix(&self, k: usize) -> Tower<F> {
        Tower {
            field: self.field.clone(),
            levels: self.levels[..k].to_vec(),
            dims: self.dims[..=k].to_vec(),
        }
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.degree()]
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// The generator of level `i`.
    pub fn generator(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        if self.levels[i].degree() == 1 {
            // a linear level adds no basis vector; its generator is -c_0
            return self.embed(&self.levels[i].poly[0].iter().map(|c| self.field.neg(c)).collect::<Vec<_>>());
        }
        v[self.dims[i]] = self.field.one();
        v
    }

    /// Zero-pads an element of a lower field of the tower.
    pub fn embed(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = a.to_vec();
        v.resize(self.degree(), self.field.zero());
        v
    }

    /// The `j`-th basis monomial.
    pub fn basis(&self, j: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[j] = self.field.one();
        v
    }

    /// Exponent vector of the `j`-th basis monomial.
    pub fn exponents(&self, mut j: usize) -> Vec<usize> {
        self.levels
            .iter()
            .map(|lv| {
                let e = j % lv.degree();
                j /= lv.degree();
                e
            })
            .collect()
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.neg(x)).collect()
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.mul_at(self.levels.len(), a, b)
    }

    /// Product inside the field generated by the first `j` levels.
    fn mul_at(&self, j: usize, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        if j == 0 {
            return vec![f.mul(&a[0], &b[0])];
        }
        let d = self.dims[j - 1];
        let g = &self.levels[j - 1].poly;
        let deg = g.len() - 1;
        let zero = vec![f.zero(); d];
        let mut prod = vec![zero.clone(); 2 * deg - 1];
        let ac: Vec<&[F::Elem]> = a.chunks(d).collect();
        let bc: Vec<&[F::Elem]> = b.chunks(d).collect();
        for (i, x) in ac.iter().enumerate() {
            if x.iter().all(|v| f.is_zero(v)) {
                continue;
            }
            for (k, y) in bc.iter().enumerate() {
                if y.iter().all(|v| f.is_zero(v)) {
                    continue;
                }
                let t = self.mul_at(j - 1, x, y);
                for (p, q) in prod[i + k].iter_mut().zip(&t) {
                    *p = f.add(p, q);
                }
            }
        }
        for t in (deg..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[t], zero.clone());
            if c.iter().all(|v| f.is_zero(v)) {
                continue;
            }
            for (s, gs) in g.iter().enumerate().take(deg) {
                let m = self.mul_at(j - 1, &c, gs);
                for (p, q) in prod[t - deg + s].iter_mut().zip(&m) {
                    *p = f.sub(p, q);
                }
            }
        }
        prod.truncate(deg);
        prod.concat()
    }

    pub fn pow(&self, a: &[F::Elem], e: &BigUint) -> Vec<F::Elem> {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_usize(&self, a: &[F::Elem], e: usize) -> Vec<F::Elem> {
        self.pow(a, &BigUint::from(e))
    }

    /// Inverse by solving `matrix(a) x = 1`.
    pub fn inv(&self, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if self.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let m = self.left_mul_matrix(a);
        linalg::solve(&self.field, &m, &self.one()).ok_or(Error::ZeroInverse)
    }

    /// Matrix of `x -> a x` in the product power basis: column `j` holds the
    /// coordinates of `a * b_j`.
    pub fn left_mul_matrix(&self, a: &[F::Elem]) -> Mat<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.degree())
            .map(|j| self.mul(a, &self.basis(j)))
            .collect();
        Mat::from_columns(&cols)
    }

    /// Least-degree monic polynomial over `F` annihilating `a`, from the first
    /// linear dependence among `1, a, a^2, ...`.
    pub fn minpoly(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        let f = &self.field;
        let ring = PolyRing::new(f.clone());
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let m = Mat::from_columns(&powers);
            if let Some(c) = linalg::solve(f, &m, &next) {
                let mut coeffs: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
                coeffs.push(f.one());
                return ring.from_coeffs(coeffs);
            }
            powers.push(next);
        }
    }

    /// Evaluates a polynomial with coefficients in the tower at a tower element.
    pub fn eval(&self, coeffs: &[Vec<F::Elem>], x: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.embed(c));
        }
        acc
    }

    /// Human-readable rendering using the generator names.
    pub fn format_elem(&self, a: &[F::Elem]) -> String {
        let f = &self.field;
        let mut terms = Vec::new();
        for (j, c) in a.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let mono: Vec<String> = self
                .exponents(j)
                .iter()
                .zip(&self.levels)
                .filter(|(e, _)| **e > 0)
                .map(|(e, lv)| {
                    if *e == 1 {
                        lv.name.clone()
                    } else {
                        format!("{}^{}", lv.name, e)
                    }
                })
                .collect();
            let cs = f.format_elem(c);
            let term = if mono.is_empty() {
                cs
            } else if f.is_one(c) {
                mono.join("*")
            } else if f.is_one(&f.neg(c)) {
                format!("-{}", mono.join("*"))
            } else if cs.contains(['+', ' ']) || cs[1..].contains('-') {
                format!("({cs})*{}", mono.join("*"))
            } else {
                format!("{cs}*{}", mono.join("*"))
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        out
    }

    pub fn elem_json(&self, a: &[F::Elem]) -> Value {
        Value::Array(a.iter().map(|x| self.field.elem_json(x)).collect())
    }

    /// Defining polynomial of level `i` rendered in its generator name.
    pub fn format_level(&self, i: usize) -> String {
        let sub = self.prefix(i);
        let lv = &self.levels[i];
        format_poly(
            &lv.poly,
            &lv.name,
            |c| sub.format_elem(c),
            |c| sub.is_zero(c),
            |c| *c == sub.one(),
        )
    }

    /// Coefficient list of level `i`: scalars on the first level, coordinate
    /// arrays above it.
    pub fn level_json(&self, i: usize) -> Value {
        let lv = &self.levels[i];
        Value::Array(
            lv.poly
                .iter()
                .map(|c| {
                    if i == 0 {
                        self.field.elem_json(&c[0])
                    } else {
                        Value::Array(c.iter().map(|x| self.field.elem_json(x)).collect())
                    }
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::field::{rat, PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn qlevel(name: &str, c: &[i64]) -> Level<BigRational> {
        Level {
            name: name.into(),
            poly: c.iter().map(|&v| vec![rat(v, 1)]).collect(),
        }
    }

    fn sqrt2() -> Tower<Rationals> {
        Tower::new(Rationals, vec![qlevel("s", &[-2, 0, 1])]).unwrap()
    }

    fn biquadratic() -> Tower<Rationals> {
        let t = Level {
            name: "t".into(),
            poly: vec![vec![rat(-3, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(0, 1)]],
        };
        Tower::new(Rationals, vec![qlevel("s", &[-2, 0, 1]), t]).unwrap()
    }

    fn gf16() -> Tower<PrimeField> {
        let f = PrimeField::new(2).unwrap();
        Tower::new(
            f,
            vec![Level {
                name: "a".into(),
                poly: [1u64, 1, 0, 0, 1].iter().map(|&v| vec![v]).collect(),
            }],
        )
        .unwrap()
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let t = sqrt2();
        assert_eq!(t.mul(&q(&[1, 1]), &q(&[-1, 1])), t.one());
    }

    #[test]
    fn inverse_of_sqrt2() {
        let t = sqrt2();
        assert_eq!(t.inv(&q(&[0, 1])).unwrap(), vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(t.inv(&t.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn gf16_relation() {
        let t = gf16();
        let a = t.generator(0);
        let a3 = t.pow_usize(&a, 3);
        assert_eq!(t.mul(&a, &a3), vec![1, 1, 0, 0]);
    }

    #[test]
    fn sqrt2_multiplication_matrix() {
        let t = sqrt2();
        let m = t.left_mul_matrix(&q(&[0, 1]));
        assert_eq!(m, Mat::from_rows(vec![q(&[0, 2]), q(&[1, 0])]));
        assert!(linalg::is_zero_mat(&Rationals, &t.left_mul_matrix(&t.zero())));
        assert_eq!(t.left_mul_matrix(&t.one()), linalg::identity(&Rationals, 2));
    }

    #[test]
    fn minpoly_of_sqrt2_plus_sqrt3() {
        let t = biquadratic();
        let l = t.add(&t.generator(0), &t.generator(1));
        let ring = PolyRing::new(Rationals);
        assert_eq!(t.minpoly(&l), ring.from_i64s(&[1, 0, -10, 0, 1]));
        assert_eq!(t.minpoly(&t.one()), ring.from_i64s(&[-1, 1]));
        let g = gf16();
        let r2 = PolyRing::new(PrimeField::new(2).unwrap());
        assert_eq!(g.minpoly(&g.generator(0)), r2.from_i64s(&[1, 1, 0, 0, 1]));
    }

    #[test]
    fn relative_level_products() {
        let t = biquadratic();
        let st = t.mul(&t.generator(0), &t.generator(1));
        assert_eq!(st, q(&[0, 0, 0, 1]));
        assert_eq!(t.mul(&st, &st), q(&[6, 0, 0, 0]));
        assert_eq!(t.format_elem(&q(&[1, -1, 0, 2])), "1 - s + 2*s*t");
    }

    fn elem() -> impl Strategy<Value = Vec<BigRational>> {
        proptest::collection::vec(-5i64..6, 4).prop_map(|v| q(&v))
    }

    proptest! {
        #[test]
        fn left_mul_is_a_ring_homomorphism(a in elem(), b in elem()) {
            let t = biquadratic();
            let f = Rationals;
            let (ma, mb) = (t.left_mul_matrix(&a), t.left_mul_matrix(&b));
            prop_assert_eq!(linalg::mat_add(&f, &ma, &mb), t.left_mul_matrix(&t.add(&a, &b)));
            prop_assert_eq!(linalg::mat_mul(&f, &ma, &mb), t.left_mul_matrix(&t.mul(&a, &b)));
            prop_assert_eq!(linalg::is_invertible(&f, &ma), !t.is_zero(&a));
        }

        #[test]
        fn minpoly_annihilates_and_divides_degree(a in elem()) {
            let t = biquadratic();
            let f = Rationals;
            let m = t.minpoly(&a);
            let d = m.degree().unwrap();
            prop_assert_eq!(4 % d, 0);
            let coeffs: Vec<Vec<BigRational>> = m.coeffs().iter().map(|c| vec![c.clone()]).collect();
            prop_assert!(t.is_zero(&t.eval(&coeffs, &a)));
            // also as a matrix polynomial
            let ma = t.left_mul_matrix(&a);
            let mut acc = linalg::zeros(&f, 4, 4);
            for c in m.coeffs().iter().rev() {
                acc = linalg::mat_add(&f, &linalg::mat_mul(&f, &acc, &ma), &linalg::mat_scale(&f, &linalg::identity(&f, 4), c));
            }
            prop_assert!(linalg::is_zero_mat(&f, &acc));
        }
    }
}
