//! A tower viewed as a field in its own right, so that further levels and all
//! linear algebra can be taken over it.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;
use serde_json::Value;

use super::Tower;
use crate::exactcore::field::Field;

#[derive(Clone, Debug)]
pub struct TowerField<F: Field> {
    tower: Arc<Tower<F>>,
}

impl<F: Field> TowerField<F> {
    pub fn new(tower: Tower<F>) -> Self {
        TowerField {
            tower: Arc::new(tower),
        }
    }

    pub fn tower(&self) -> &Tower<F> {
        &self.tower
    }
}

impl<F: Field> Field for TowerField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.tower.zero()
    }

    fn one(&self) -> Self::Elem {
        self.tower.one()
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.tower.constant(self.tower.field().from_i64(v))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.tower.add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.tower.sub(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.tower.neg(a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.tower.mul(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.tower.inv(a).ok()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.tower.is_zero(a)
    }

    fn characteristic(&self) -> u64 {
        self.tower.field().characteristic()
    }

    fn size(&self) -> Option<BigUint> {
        let q = self.tower.field().size()?;
        Some(q.pow(self.tower.degree() as u32))
    }

    fn prime_degree(&self) -> usize {
        self.tower.field().prime_degree() * self.tower.degree()
    }

    fn cmp_elem(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        let f = self.tower.field();
        a.iter()
            .zip(b)
            .map(|(x, y)| f.cmp_elem(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        self.tower.format_elem(a)
    }

    fn elem_json(&self, a: &Self::Elem) -> Value {
        self.tower.elem_json(a)
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let f = self.tower.field();
        (0..self.tower.degree()).map(|_| f.random_elem(rng)).collect()
    }

    fn name(&self) -> String {
        let names: Vec<&str> = self.tower.levels().iter().map(|l| l.name.as_str()).collect();
        format!("{}({})", self.tower.field().name(), names.join(", "))
    }

    fn enumerate(&self, limit: usize) -> Option<Vec<Self::Elem>> {
        let base = self.tower.field().enumerate(limit)?;
        let n = self.tower.degree();
        let total = base.len().checked_pow(n as u32)?;
        if total > limit {
            return None;
        }
        let mut out = Vec::with_capacity(total);
        for mut k in 0..total {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(base[k % base.len()].clone());
                k /= base.len();
            }
            out.push(v);
        }
        Some(out)
    }
}
