use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{GaloisContext, RamificationFiltration};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// How a context file names its group: a catalog name or file path, or an
/// inline multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Table { table: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub p: u64,
    #[serde(default)]
    pub residue_norm: Option<u64>,
    /// Element lists of `G_0, G_1, ...`.
    pub filtration: Vec<Vec<usize>>,
}

/// On-disk ramification data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextFile {
    #[serde(default)]
    pub name: Option<String>,
    pub group: GroupRef,
    pub primes: Vec<PrimeEntry>,
    #[serde(default)]
    pub disc: Option<u64>,
    #[serde(default)]
    pub labels: BTreeMap<String, String>,
}

impl ContextFile {
    pub fn parse(text: &str) -> Result<ContextFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("ramification data: {e}")))
    }

    /// Builds the context over an already resolved group.
    pub fn build(&self, group: &FiniteGroup) -> Result<GaloisContext> {
        let mut filtrations = Vec::with_capacity(self.primes.len());
        for entry in &self.primes {
            let mut groups = Vec::with_capacity(entry.filtration.len());
            for (j, elements) in entry.filtration.iter().enumerate() {
                if let Some(&bad) = elements.iter().find(|&&x| x >= group.order()) {
                    return Err(Error::InvalidFiltration(format!(
                        "G_{j} at {} names element {bad} outside a group of order {}",
                        entry.p,
                        group.order()
                    )));
                }
                let s = Subgroup::new(group, elements.iter().copied())
                    .map_err(|e| Error::InvalidFiltration(format!("G_{j} at {}: {e}", entry.p)))?;
                groups.push(s);
            }
            // an explicit list that starts trivial describes an unramified prime
            if groups.iter().all(Subgroup::is_trivial) {
                groups.clear();
            }
            let norm = BigUint::from(entry.residue_norm.unwrap_or(entry.p));
            filtrations.push(RamificationFiltration::new(entry.p, norm, groups)?);
        }
        let mut ctx = GaloisContext::new(group, filtrations)?.with_labels(self.labels.clone());
        if let Some(name) = &self.name {
            ctx = ctx.named(name.clone());
        }
        if let Some(d) = self.disc {
            ctx = ctx.with_disc(d.into());
        }
        Ok(ctx)
    }
}
