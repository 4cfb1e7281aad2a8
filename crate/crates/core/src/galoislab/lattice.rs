//! The computed objects shared by all checks: the group, its subgroups, their
//! fixed fields, the skew group algebras and the subfield images in E.

use super::{GroupInfo, Report, SubfieldInfo, SubgroupInfo, TowerInfo, Verdict};
use crate::autgroup::{automorphisms, enumerate_subgroups, fixed_field, AutGroup, AutSearch, SubfieldHandle, Subgroup};
use crate::config::RunConfig;
use crate::csalg::{centralizer, subalgebras_containing_l, SkewGroupAlgebra, Subalgebra};
use crate::error::Result;
use crate::exactcore::linalg::Mat;
use crate::exactcore::poly::PolyRing;
use crate::tower::{GroundField, Tower};

pub struct Lattice<'a, K: GroundField> {
    pub tower: &'a Tower<K>,
    pub cfg: &'a RunConfig,
    pub search: AutSearch<K::Elem>,
    pub n: usize,
    pub subgroups: Vec<Subgroup>,
    /// `L^H` for each subgroup, same indexing.
    pub subfields: Vec<SubfieldHandle<K::Elem>>,
    /// `L ⋊ H` for each subgroup.
    pub skews: Vec<SkewGroupAlgebra<K::Elem>>,
    /// Image of `L^H` in E: the span of its multiplication matrices.
    pub images: Vec<Subalgebra<K::Elem>>,
    pub galois: bool,
}

impl<'a, K: GroundField> Lattice<'a, K> {
    pub fn compute(tower: &'a Tower<K>, cfg: &'a RunConfig) -> Result<Self> {
        let search = automorphisms(tower, cfg)?;
        let n = tower.degree();
        let subgroups = enumerate_subgroups(search.group.cayley(), cfg.subgroup_cap)?;
        let subfields = subgroups
            .iter()
            .map(|h| fixed_field(tower, &search.group, &h.elements))
            .collect::<Result<Vec<_>>>()?;
        let els: Vec<Vec<usize>> = subgroups.iter().map(|h| h.elements.clone()).collect();
        let skews = subalgebras_containing_l(tower, &search.group, &els);
        let f = tower.field();
        let images = subfields
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let mats: Vec<Mat<K::Elem>> = m.basis.basis().iter().map(|b| tower.left_mul_matrix(b)).collect();
                Subalgebra::span(f, n, &mats, format!("M{k}"))
            })
            .collect();
        let galois = search.group.order() == n;
        Ok(Lattice {
            tower,
            cfg,
            search,
            n,
            subgroups,
            subfields,
            skews,
            images,
            galois,
        })
    }

    pub fn group(&self) -> &AutGroup<K::Elem> {
        &self.search.group
    }

    /// Index of the whole group in the sorted subgroup list.
    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Centralizer in E of a subalgebra.
    pub fn commutant(&self, a: &Subalgebra<K::Elem>) -> Result<Subalgebra<K::Elem>> {
        centralizer(self.tower.field(), self.n, &a.basis())
    }

    pub fn describe_subgroup(&self, k: usize) -> String {
        format!("H{k} = {:?}", self.subgroups[k].elements)
    }

    pub fn describe_subfield(&self, k: usize) -> String {
        let ring = PolyRing::new(self.tower.field().clone());
        format!("L^H{k} = K({}) with minpoly {}", self.tower.format_elem(&self.subfields[k].primitive), ring.format(&self.subfields[k].minpoly, "x"))
    }

    pub fn into_report(self, tower: TowerInfo, theorems: Vec<Verdict>, assumptions: Vec<String>) -> Report {
        let f = self.tower.field();
        let ring = PolyRing::new(f.clone());
        let names: Vec<&str> = self.tower.levels().iter().map(|l| l.name.as_str()).collect();
        let group = self.group();
        let elements = group
            .elements()
            .iter()
            .map(|a| {
                if names.is_empty() {
                    return "id".to_string();
                }
                names
                    .iter()
                    .zip(&a.images)
                    .map(|(n, img)| format!("{n} -> {}", self.tower.format_elem(img)))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        let subfields = self
            .subfields
            .iter()
            .enumerate()
            .map(|(k, m)| SubfieldInfo {
                subgroup_index: k,
                degree: m.degree,
                minpoly: ring.json(&m.minpoly),
                minpoly_text: ring.format(&m.minpoly, "x"),
                primitive: self.tower.format_elem(&m.primitive),
                skew_dim: self.skews[k].algebra.dim(),
            })
            .collect();
        let mut assumptions = assumptions;
        // |G| = [L:K] is already the maximum, so only a smaller group can be incomplete
        if let (Some(bits), true) = (self.search.precision, group.order() < self.n) {
            assumptions.push(format!(
                "automorphisms found numerically at {bits} bits and certified exactly; completeness is not certified"
            ));
        }
        Report {
            tower,
            galois: self.galois,
            group: GroupInfo {
                order: group.order(),
                cayley: group.cayley().to_vec(),
                elements,
            },
            subgroups: self.subgroups.iter().map(SubgroupInfo::from).collect(),
            subfields,
            theorems,
            assumptions,
            config: self.cfg.clone(),
        }
    }
}
