//! Runs every check on a parsed tower and collects the lattices and
//! per-theorem verdicts into a report.

mod checks;
mod lattice;
mod orbits;

pub use lattice::Lattice;
pub use orbits::{orbit_minpoly, splitting_failures, OrbitMinpoly};

use serde::Serialize;
use serde_json::Value;

use crate::autgroup::Subgroup;
use crate::config::RunConfig;
use crate::error::Result;
use crate::exactcore::field::{PrimeField, Rationals};
use crate::tower::{build_tower, AbsoluteTower, GroundField, ParsedTower, PrimeBase, Tower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "PROBABILISTIC-PASS")]
    ProbabilisticPass,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::ProbabilisticPass => "PROBABILISTIC-PASS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(id: &str) -> Self {
        Verdict {
            id: id.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(id: &str, witness: impl Into<String>) -> Self {
        Verdict {
            id: id.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(id: &str, reason: impl Into<String>) -> Self {
        Verdict {
            id: id.into(),
            status: Status::Skipped,
            witness: Some(reason.into()),
        }
    }

    pub fn probabilistic(id: &str, note: impl Into<String>) -> Self {
        Verdict {
            id: id.into(),
            status: Status::ProbabilisticPass,
            witness: Some(note.into()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelInfo {
    pub gen: String,
    pub minpoly: Value,
    #[serde(skip)]
    pub text: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerInfo {
    pub base: String,
    pub levels: Vec<LevelInfo>,
    pub ground: Option<String>,
    #[serde(skip)]
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubfieldInfo {
    pub subgroup_index: usize,
    pub degree: usize,
    pub minpoly: Value,
    #[serde(skip)]
    pub minpoly_text: String,
    #[serde(skip)]
    pub primitive: String,
    /// `dim_K L ⋊ H` for the subgroup.
    #[serde(skip)]
    pub skew_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    /// Generator images of each element, for the text report.
    #[serde(skip)]
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupInfo {
    pub elements: Vec<usize>,
    pub normal: bool,
}

impl From<&Subgroup> for SubgroupInfo {
    fn from(h: &Subgroup) -> Self {
        SubgroupInfo {
            elements: h.elements.clone(),
            normal: h.normal,
        }
    }
}

/// Everything the command line prints. Field order is the JSON key order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tower: TowerInfo,
    pub galois: bool,
    pub group: GroupInfo,
    pub subgroups: Vec<SubgroupInfo>,
    pub subfields: Vec<SubfieldInfo>,
    pub theorems: Vec<Verdict>,
    pub assumptions: Vec<String>,
    pub config: RunConfig,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn any_fail(&self) -> bool {
        self.theorems.iter().any(|v| v.status == Status::Fail)
    }

    pub fn verdict(&self, id: &str) -> Option<&Verdict> {
        self.theorems.iter().find(|v| v.id == id)
    }
}

fn tower_info<B: PrimeBase>(abs: &AbsoluteTower<B>, degree: usize) -> TowerInfo {
    let t = &abs.tower;
    TowerInfo {
        base: t.field().label(),
        levels: (0..t.levels().len())
            .map(|i| LevelInfo {
                gen: t.levels()[i].name.clone(),
                minpoly: t.level_json(i),
                text: t.format_level(i),
            })
            .collect(),
        ground: abs.ground_name().map(str::to_owned),
        degree,
    }
}

fn run<B: PrimeBase, K: GroundField>(
    abs: &AbsoluteTower<B>,
    tower: &Tower<K>,
    cfg: &RunConfig,
    theorems: bool,
) -> Result<Report> {
    let lat = Lattice::compute(tower, cfg)?;
    let verdicts = if theorems { checks::run_all(&lat)? } else { Vec::new() };
    Ok(lat.into_report(tower_info(abs, tower.degree()), verdicts, abs.assumptions.clone()))
}

fn dispatch<B: PrimeBase>(abs: &AbsoluteTower<B>, cfg: &RunConfig, theorems: bool) -> Result<Report>
where
    B: GroundField,
    crate::tower::TowerField<B>: GroundField,
{
    match abs.over_base() {
        Some(t) => run(abs, &t, cfg, theorems),
        None => run(abs, &abs.over_ground(), cfg, theorems),
    }
}

/// Parses a tower description and runs the full verification suite.
pub fn full_verify(text: &str, cfg: &RunConfig) -> Result<Report> {
    report_for(text, cfg, true)
}

/// Lattices and pairings only, without theorem verdicts.
pub fn lattice_report(text: &str, cfg: &RunConfig) -> Result<Report> {
    report_for(text, cfg, false)
}

fn report_for(text: &str, cfg: &RunConfig, theorems: bool) -> Result<Report> {
    cfg.validate()?;
    match build_tower(text, cfg.trust_irreducible)? {
        ParsedTower::Rational(abs) => dispatch::<Rationals>(&abs, cfg, theorems),
        ParsedTower::Prime(abs) => dispatch::<PrimeField>(&abs, cfg, theorems),
    }
}
