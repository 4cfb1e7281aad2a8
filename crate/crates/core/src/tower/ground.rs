//! Fields that can serve as the ground K of a relative tower.

use num_rational::BigRational;

use super::build::{certify_over_rational_tower, Certificate, PrimeBase};
use super::{Level, Tower, TowerField};
use crate::error::Result;
use crate::exactcore::field::{Field, PrimeField, Rationals};
use crate::exactcore::irreducible::{irreducible_finite, Irreducibility};
use crate::exactcore::poly::{Poly, PolyRing};

/// Levels of a characteristic-zero ground field over Q (empty for Q).
#[derive(Clone, Debug)]
pub struct RationalGround {
    pub levels: Vec<Level<BigRational>>,
}

pub trait GroundField: Field {
    /// The ground as a tower over Q, or `None` in positive characteristic.
    fn rational_ground(&self) -> Option<RationalGround>;
    /// Flat coordinates over Q (characteristic zero only).
    fn to_rationals(&self, a: &Self::Elem) -> Option<Vec<BigRational>>;
    fn from_rationals(&self, v: &[BigRational]) -> Option<Self::Elem>;
    /// Irreducibility of a polynomial over this field.
    fn irreducible_over(&self, f: &Poly<Self::Elem>, var: &str) -> Result<Certificate>;
}

fn certificate<F: Field>(ring: &PolyRing<F>, v: Irreducibility<F::Elem>, var: &str) -> Certificate {
    match v {
        Irreducibility::Irreducible { method } => Certificate::Irreducible(method.into()),
        Irreducibility::Reducible { witness } => Certificate::Reducible(ring.format(&witness, var)),
        Irreducibility::Unknown => Certificate::Unknown,
    }
}

impl GroundField for Rationals {
    fn rational_ground(&self) -> Option<RationalGround> {
        Some(RationalGround { levels: Vec::new() })
    }

    fn to_rationals(&self, a: &BigRational) -> Option<Vec<BigRational>> {
        Some(vec![a.clone()])
    }

    fn from_rationals(&self, v: &[BigRational]) -> Option<BigRational> {
        (v.len() == 1).then(|| v[0].clone())
    }

    fn irreducible_over(&self, f: &Poly<BigRational>, var: &str) -> Result<Certificate> {
        let coeffs: Vec<Vec<BigRational>> = f.coeffs().iter().map(|c| vec![c.clone()]).collect();
        let empty = Tower::new(Rationals, Vec::new())?;
        Rationals.certify_level(&empty, var, &coeffs)
    }
}

impl GroundField for PrimeField {
    fn rational_ground(&self) -> Option<RationalGround> {
        None
    }

    fn to_rationals(&self, _a: &u64) -> Option<Vec<BigRational>> {
        None
    }

    fn from_rationals(&self, _v: &[BigRational]) -> Option<u64> {
        None
    }

    fn irreducible_over(&self, f: &Poly<u64>, var: &str) -> Result<Certificate> {
        let ring = PolyRing::new(self.clone());
        Ok(certificate(&ring, irreducible_finite(&ring, f)?, var))
    }
}

impl GroundField for TowerField<Rationals> {
    fn rational_ground(&self) -> Option<RationalGround> {
        Some(RationalGround {
            levels: self.tower().levels().to_vec(),
        })
    }

    fn to_rationals(&self, a: &Vec<BigRational>) -> Option<Vec<BigRational>> {
        Some(a.clone())
    }

    fn from_rationals(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        (v.len() == self.tower().degree()).then(|| v.to_vec())
    }

    fn irreducible_over(&self, f: &Poly<Vec<BigRational>>, var: &str) -> Result<Certificate> {
        if f.degree() == Some(1) {
            return Ok(Certificate::Irreducible("degree one".into()));
        }
        certify_over_rational_tower(self.tower(), var, f.coeffs())
    }
}

impl GroundField for TowerField<PrimeField> {
    fn rational_ground(&self) -> Option<RationalGround> {
        None
    }

    fn to_rationals(&self, _a: &Vec<u64>) -> Option<Vec<BigRational>> {
        None
    }

    fn from_rationals(&self, _v: &[BigRational]) -> Option<Vec<u64>> {
        None
    }

    fn irreducible_over(&self, f: &Poly<Vec<u64>>, var: &str) -> Result<Certificate> {
        let ring = PolyRing::new(self.clone());
        Ok(certificate(&ring, irreducible_finite(&ring, f)?, var))
    }
}
