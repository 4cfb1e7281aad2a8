//! Run configuration shared by the library and the command line.

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 256;
pub const PRECISION_CAP: u32 = 4096;
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000_000_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 64;
pub const DEFAULT_MC_TRIALS: usize = 8;
/// Subgroups are stored as 64-bit masks.
pub const MAX_SUBGROUP_CAP: usize = 64;
pub const PRIMITIVE_BUDGET: usize = 4096;
pub const CONJUGATOR_BUDGET: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub precision: u32,
    pub precision_cap: u32,
    pub max_denominator: u64,
    pub subgroup_cap: usize,
    pub mc_trials: usize,
    pub trust_irreducible: bool,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision: DEFAULT_PRECISION,
            precision_cap: PRECISION_CAP,
            max_denominator: DEFAULT_MAX_DENOMINATOR,
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
            mc_trials: DEFAULT_MC_TRIALS,
            trust_irreducible: false,
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision < 128 {
            return Err(Error::Config("precision must be at least 128 bits".into()));
        }
        if self.precision > self.precision_cap {
            return Err(Error::Config(format!(
                "precision {} exceeds the cap {}",
                self.precision, self.precision_cap
            )));
        }
        if self.max_denominator == 0 {
            return Err(Error::Config("denominator bound must be positive".into()));
        }
        if self.subgroup_cap == 0 || self.subgroup_cap > MAX_SUBGROUP_CAP {
            return Err(Error::Config(format!(
                "subgroup cap must lie in 1..={MAX_SUBGROUP_CAP}"
            )));
        }
        if self.mc_trials == 0 {
            return Err(Error::Config("Monte-Carlo trials must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_precision_above_cap() {
        let c = RunConfig {
            precision: 8192,
            ..RunConfig::default()
        };
        assert!(c.validate().is_err());
    }
}
