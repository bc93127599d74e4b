//! `--weight` specifications: `dual:<k>`, `det`, `perm`, `alpha:[p1,p2,...]`.

use std::str::FromStr;

use anyhow::{bail, Context, Result};
use vassiliev_core::immanent::{alpha_weight_system, det_weight_system, perm_weight_system};
use vassiliev_core::quotient::DiagramIndex;
use vassiliev_core::{Partition, WeightSystem};

use crate::cache::Bases;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// Dual to the `k`-th basis class, counting from 0.
    Dual(usize),
    Det,
    Perm,
    Alpha(Partition),
}

impl FromStr for WeightSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "det" => return Ok(WeightSpec::Det),
            "perm" => return Ok(WeightSpec::Perm),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("dual:") {
            return Ok(WeightSpec::Dual(k.parse().with_context(|| format!("bad dual index '{k}'"))?));
        }
        if let Some(p) = s.strip_prefix("alpha:") {
            return Ok(WeightSpec::Alpha(Partition::parse(p)?));
        }
        bail!("unknown weight '{s}' (expected dual:<k>, det, perm or alpha:[p1,...])")
    }
}

impl WeightSpec {
    pub fn build(&self, m: usize, bases: &mut Bases) -> Result<WeightSystem> {
        Ok(match self {
            WeightSpec::Dual(k) => {
                let b = bases.get(m)?;
                let mut duals = b.dual_weights();
                if *k >= duals.len() {
                    bail!("dual:{k} out of range: A_{m} has dimension {}", duals.len());
                }
                duals.swap_remove(*k)
            }
            WeightSpec::Det => det_weight_system(&DiagramIndex::new(m)),
            WeightSpec::Perm => perm_weight_system(&DiagramIndex::new(m)),
            WeightSpec::Alpha(p) => alpha_weight_system(p, &DiagramIndex::new(m))?,
        })
    }
}
