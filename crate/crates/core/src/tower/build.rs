//! Turning a parsed description into a certified tower over the prime base,
//! and re-expressing it over the ground field.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dsl::{self, BaseSpec, Expr, TowerSpec};
use super::{Level, Tower, TowerField};
use crate::error::{Error, Result};
use crate::exactcore::field::{Field, PrimeField, Rationals};
use crate::exactcore::irreducible::{irreducible_finite, irreducible_rational, Irreducibility};
use crate::exactcore::poly::PolyRing;

/// Candidate shifts tried when looking for a primitive element of a
/// relative level over Q.
const SHIFT_BUDGET: usize = 512;
const SHIFT_RANGE: i64 = 3;

/// Irreducibility verdict for one level, with printable evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Irreducible(String),
    Reducible(String),
    Unknown,
}

/// The two prime bases a tower can start from.
pub trait PrimeBase: Field {
    fn from_integer(&self, v: &BigInt) -> Self::Elem;
    /// `Q` or `F<p>`, as written in the description language.
    fn label(&self) -> String;
    /// Decides whether `poly` (coefficients in the top field of `prefix`) is
    /// irreducible over that field.
    fn certify_level(&self, prefix: &Tower<Self>, name: &str, poly: &[Vec<Self::Elem>]) -> Result<Certificate>;
}

fn from_verdict<F: Field>(ring: &PolyRing<F>, v: Irreducibility<F::Elem>, var: &str) -> Certificate {
    match v {
        Irreducibility::Irreducible { method } => Certificate::Irreducible(method.to_string()),
        Irreducibility::Reducible { witness } => Certificate::Reducible(ring.format(&witness, var)),
        Irreducibility::Unknown => Certificate::Unknown,
    }
}

impl PrimeBase for Rationals {
    fn from_integer(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn label(&self) -> String {
        "Q".into()
    }

    fn certify_level(&self, prefix: &Tower<Self>, name: &str, poly: &[Vec<BigRational>]) -> Result<Certificate> {
        if prefix.levels().is_empty() {
            let ring = PolyRing::new(Rationals);
            let f = ring.from_coeffs(poly.iter().map(|c| c[0].clone()).collect());
            return Ok(from_verdict(&ring, irreducible_rational(&f)?, name));
        }
        certify_over_rational_tower(prefix, name, poly)
    }
}

impl PrimeBase for PrimeField {
    fn from_integer(&self, v: &BigInt) -> u64 {
        self.from_bigint(v)
    }

    fn label(&self) -> String {
        format!("F{}", self.modulus())
    }

    fn certify_level(&self, prefix: &Tower<Self>, name: &str, poly: &[Vec<u64>]) -> Result<Certificate> {
        if prefix.levels().is_empty() {
            let ring = PolyRing::new(self.clone());
            let f = ring.from_coeffs(poly.iter().map(|c| c[0]).collect());
            return Ok(from_verdict(&ring, irreducible_finite(&ring, &f)?, name));
        }
        let ring = PolyRing::new(TowerField::new(prefix.clone()));
        let f = ring.from_coeffs(poly.to_vec());
        Ok(from_verdict(&ring, irreducible_finite(&ring, &f)?, name))
    }
}

/// Integer vectors of length `k` with entries in `[-r, r]`, ordered by
/// max-norm, then by the sequence 0, 1, -1, 2, -2, ... in each slot.
pub(crate) fn small_vectors(k: usize, r: i64, budget: usize) -> Vec<Vec<i64>> {
    let order: Vec<i64> = std::iter::once(0)
        .chain((1..=r).flat_map(|v| [v, -v]))
        .collect();
    let mut out = Vec::new();
    for norm in 0..=r {
        let slots: Vec<i64> = order.iter().copied().filter(|v| v.abs() <= norm).collect();
        let total = slots.len().pow(k as u32);
        for mut idx in 0..total {
            let mut v = Vec::with_capacity(k);
            for _ in 0..k {
                v.push(slots[idx % slots.len()]);
                idx /= slots.len();
            }
            if v.iter().any(|x| x.abs() == norm) || norm == 0 {
                out.push(v);
                if out.len() == budget {
                    return out;
                }
            }
        }
    }
    out
}

/// Irreducibility over a number field given as a tower over Q: `f` is
/// irreducible iff `K[x]/(f)` is a field, which is decided through the
/// minimal polynomial over Q of a primitive element of that algebra.
pub fn certify_over_rational_tower(
    prefix: &Tower<Rationals>,
    name: &str,
    poly: &[Vec<BigRational>],
) -> Result<Certificate> {
    let k = TowerField::new(prefix.clone());
    let ring = PolyRing::new(k.clone());
    let f = ring.from_coeffs(poly.to_vec());
    let g = ring.gcd(&f, &ring.derivative(&f));
    if g.degree() != Some(0) {
        return Ok(Certificate::Reducible(ring.format(&g, name)));
    }
    let mut levels = prefix.levels().to_vec();
    levels.push(Level {
        name: name.to_string(),
        poly: poly.to_vec(),
    });
    let ext = Tower::new(Rationals, levels)?;
    let n = ext.degree();
    let top = ext.generator(prefix.levels().len());
    let gens: Vec<Vec<BigRational>> = (0..prefix.levels().len()).map(|i| prefix.generator(i)).collect();
    for c in small_vectors(gens.len(), SHIFT_RANGE, SHIFT_BUDGET) {
        let mut beta = prefix.zero();
        for (ci, g) in c.iter().zip(&gens) {
            beta = prefix.add(&beta, &prefix.scale(g, &BigRational::from_integer((*ci).into())));
        }
        let gamma = ext.add(&top, &ext.embed(&beta));
        let m = ext.minpoly(&gamma);
        if m.degree() != Some(n) {
            continue;
        }
        return Ok(match irreducible_rational(&m)? {
            Irreducibility::Irreducible { method } => {
                Certificate::Irreducible(format!("primitive element, {method}"))
            }
            Irreducibility::Reducible { witness } => {
                // witness(x + beta) shares a proper factor with f
                let shifted = ring.from_coeffs(vec![beta.clone(), prefix.one()]);
                let mut h = ring.zero();
                for w in witness.coeffs().iter().rev() {
                    h = ring.add(&ring.mul(&h, &shifted), &ring.constant(prefix.constant(w.clone())));
                }
                let factor = ring.gcd(&f, &h);
                Certificate::Reducible(ring.format(&factor, name))
            }
            Irreducibility::Unknown => Certificate::Unknown,
        });
    }
    Ok(Certificate::Unknown)
}

/// A tower over its prime base with the ground marker and parse metadata.
#[derive(Clone, Debug)]
pub struct AbsoluteTower<B: PrimeBase> {
    pub tower: Tower<B>,
    /// Number of levels generating the ground field K.
    pub ground: usize,
    /// Source line of each level.
    pub lines: Vec<usize>,
    /// Irreducibility evidence per level.
    pub certificates: Vec<String>,
    pub assumptions: Vec<String>,
}

impl<B: PrimeBase> AbsoluteTower<B> {
    pub fn ground_name(&self) -> Option<&str> {
        (self.ground > 0).then(|| self.tower.levels()[self.ground - 1].name.as_str())
    }

    /// The ground field as a field context.
    pub fn ground_field(&self) -> TowerField<B> {
        TowerField::new(self.tower.prefix(self.ground))
    }

    /// The levels above the ground, with coefficients regrouped into
    /// elements of the ground field. The flat layouts agree, so this is only
    /// a chunking of coordinates.
    pub fn over_ground(&self) -> Tower<TowerField<B>> {
        let k = self.ground_field();
        let dk = self.tower.dim_below(self.ground);
        let levels = self.tower.levels()[self.ground..]
            .iter()
            .map(|lv| Level {
                name: lv.name.clone(),
                poly: lv
                    .poly
                    .iter()
                    .map(|c| c.chunks(dk).map(<[B::Elem]>::to_vec).collect())
                    .collect(),
            })
            .collect();
        Tower::new(k, levels).expect("regrouped levels stay monic")
    }

    /// The whole tower, when the ground is the prime base.
    pub fn over_base(&self) -> Option<Tower<B>> {
        (self.ground == 0).then(|| self.tower.clone())
    }
}

#[derive(Clone, Debug)]
pub enum ParsedTower {
    Rational(AbsoluteTower<Rationals>),
    Prime(AbsoluteTower<PrimeField>),
}

/// Polynomial in the new generator with coefficients in the top field of
/// `prefix`, trimmed.
fn eval_expr<B: PrimeBase>(
    prefix: &Tower<B>,
    names: &[String],
    var: &str,
    e: &Expr,
) -> Vec<Vec<B::Elem>> {
    let field = prefix.field();
    let trim = |mut p: Vec<Vec<B::Elem>>| {
        while p.last().is_some_and(|c| prefix.is_zero(c)) {
            p.pop();
        }
        p
    };
    let add = |a: &[Vec<B::Elem>], b: &[Vec<B::Elem>], sub: bool| {
        let n = a.len().max(b.len());
        let z = prefix.zero();
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).unwrap_or(&z);
                    let y = b.get(i).unwrap_or(&z);
                    if sub {
                        prefix.sub(x, y)
                    } else {
                        prefix.add(x, y)
                    }
                })
                .collect(),
        )
    };
    let mul = |a: &[Vec<B::Elem>], b: &[Vec<B::Elem>]| {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![prefix.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = prefix.add(&out[i + j], &prefix.mul(x, y));
            }
        }
        trim(out)
    };
    match e {
        Expr::Int(n) => trim(vec![prefix.constant(field.from_integer(n))]),
        Expr::Var(v) if v == var => vec![prefix.zero(), prefix.one()],
        Expr::Var(v) => {
            let i = names.iter().position(|n| n == v).expect("parser checked names");
            vec![prefix.generator(i)]
        }
        Expr::Neg(a) => eval_expr(prefix, names, var, a)
            .iter()
            .map(|c| prefix.neg(c))
            .collect(),
        Expr::Add(a, b) => add(&eval_expr(prefix, names, var, a), &eval_expr(prefix, names, var, b), false),
        Expr::Sub(a, b) => add(&eval_expr(prefix, names, var, a), &eval_expr(prefix, names, var, b), true),
        Expr::Mul(a, b) => mul(&eval_expr(prefix, names, var, a), &eval_expr(prefix, names, var, b)),
        Expr::Pow(a, k) => {
            let base = eval_expr(prefix, names, var, a);
            let mut acc = vec![prefix.one()];
            for i in (0..32).rev() {
                acc = mul(&acc, &acc);
                if (k >> i) & 1 == 1 {
                    acc = mul(&acc, &base);
                }
            }
            acc
        }
    }
}

fn build_levels<B: PrimeBase>(base: B, spec: &TowerSpec, trust: bool) -> Result<AbsoluteTower<B>> {
    let mut tower = Tower::new(base.clone(), Vec::new())?;
    let mut names = Vec::new();
    let mut certificates = Vec::new();
    let mut assumptions = Vec::new();
    for g in &spec.gens {
        let poly = eval_expr(&tower, &names, &g.name, &g.expr);
        if poly.len() < 2 {
            return Err(Error::Tower {
                line: g.line,
                message: format!("minimal polynomial of '{}' is constant", g.name),
            });
        }
        if *poly.last().unwrap() != tower.one() {
            return Err(Error::NonMonic {
                line: g.line,
                name: g.name.clone(),
            });
        }
        if trust {
            certificates.push("assumed".to_string());
            assumptions.push(format!(
                "defining polynomial of '{}' assumed irreducible (trusted by flag)",
                g.name
            ));
        } else {
            match base.certify_level(&tower, &g.name, &poly)? {
                Certificate::Irreducible(m) => certificates.push(m),
                Certificate::Reducible(w) => {
                    return Err(Error::Reducible {
                        line: g.line,
                        name: g.name.clone(),
                        witness: w,
                    })
                }
                Certificate::Unknown => {
                    certificates.push("unknown".to_string());
                    assumptions.push(format!(
                        "defining polynomial of '{}' not certified irreducible (tests indecisive); assumed",
                        g.name
                    ));
                }
            }
        }
        let mut levels = tower.levels().to_vec();
        levels.push(Level {
            name: g.name.clone(),
            poly,
        });
        tower = Tower::new(base.clone(), levels)?;
        names.push(g.name.clone());
    }
    Ok(AbsoluteTower {
        tower,
        ground: spec.ground_levels(),
        lines: spec.gens.iter().map(|g| g.line).collect(),
        certificates,
        assumptions,
    })
}

/// Parses and builds a tower, certifying every defining polynomial unless
/// `trust_irreducible` is set.
pub fn build_tower(text: &str, trust_irreducible: bool) -> Result<ParsedTower> {
    let spec = dsl::parse(text)?;
    match spec.base {
        BaseSpec::Rational => Ok(ParsedTower::Rational(build_levels(Rationals, &spec, trust_irreducible)?)),
        BaseSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|_| Error::Tower {
                line: spec.base_line,
                message: format!("F{p}: {p} is not a prime below 2^31"),
            })?;
            Ok(ParsedTower::Prime(build_levels(f, &spec, trust_irreducible)?))
        }
    }
}
