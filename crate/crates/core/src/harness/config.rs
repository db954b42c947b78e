use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Instance generation and exponent bounds for a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Residue hyperrings `ℤ_m[X]` for `2 <= m <= max_m`; `0` disables them.
    pub max_m: u64,
    /// Largest multiplier set, drawn from `{1, .., m-1}`.
    pub max_x: usize,
    /// Include the seed hyperrings H1 = `ℤ_4[{2}]` and H3 = `ℤ_4[{1,3}]`.
    pub seeds: bool,
    /// Pairwise products of generated instances whose order is at most this; `0` disables products.
    pub product_factor_max: usize,
    /// Random multiplication tables to try (orders 2 to 4); only valid ones are kept.
    pub random_tables: usize,
    pub seed: u64,
    pub s_max: usize,
    pub n_max: usize,
    /// Largest number of hyperideals combined in multi-ideal checks.
    pub t_max: usize,
    /// Largest `n` tried for `n`-absorbing hypotheses.
    pub absorbing_n_max: usize,
    /// Instances above this order are skipped.
    pub max_order: usize,
    /// Restrict the run to these check ids; empty means all.
    pub checks: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_m: 10,
            max_x: 2,
            seeds: true,
            product_factor_max: 6,
            random_tables: 0,
            seed: 1,
            s_max: 6,
            n_max: 6,
            t_max: 3,
            absorbing_n_max: 6,
            max_order: 36,
            checks: Vec::new(),
        }
    }
}

impl SuiteConfig {
    /// A configuration that generates no instances at all.
    pub fn empty() -> Self {
        SuiteConfig {
            max_m: 0,
            seeds: false,
            product_factor_max: 0,
            random_tables: 0,
            ..SuiteConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.s_max == 0 || self.n_max == 0 {
            return Err(Error::Config("s_max and n_max must be positive".into()));
        }
        if self.t_max == 0 {
            return Err(Error::Config("t_max must be positive".into()));
        }
        if self.max_m > crate::element_set::MAX_ORDER as u64 {
            return Err(Error::Config(format!(
                "max_m {} exceeds {}",
                self.max_m,
                crate::element_set::MAX_ORDER
            )));
        }
        if self.max_order > crate::element_set::MAX_ORDER {
            return Err(Error::Config(format!(
                "max_order {} exceeds {}",
                self.max_order,
                crate::element_set::MAX_ORDER
            )));
        }
        Ok(())
    }
}
