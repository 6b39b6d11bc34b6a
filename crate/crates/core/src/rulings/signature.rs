use std::collections::BTreeMap;

use serde::Serialize;

use crate::front::FrontDiagram;

use super::{count_graded, Grading, RulingError};

/// Ruling counts per grading `ρ`.
///
/// For `rot ≠ 0` the entries are `ρ ∈ {0, 1}` and the divisors of `2|rot|`.
/// For `rot = 0` every `ρ ≥ 0` is meaningful, but once `ρ` exceeds the
/// largest crossing degree the count equals the `ρ = 0` count; the stored
/// form keeps `0`, `1` and only those `ρ ≥ 2` whose count differs from
/// `count(0)`, so it does not depend on the chosen front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RulingSignature {
    rot_abs: u64,
    counts: BTreeMap<u64, u64>,
}

impl RulingSignature {
    /// Builds a signature from raw counts, normalizing the `rot = 0` case.
    pub fn from_counts(rot_abs: u64, counts: BTreeMap<u64, u64>) -> Self {
        let mut counts = counts;
        if rot_abs == 0 {
            if let Some(&c0) = counts.get(&0) {
                counts.retain(|&rho, &mut c| rho < 2 || c != c0);
            }
        }
        RulingSignature { rot_abs, counts }
    }

    pub fn rot_abs(&self) -> u64 {
        self.rot_abs
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Count for `ρ`; `None` when `ρ` is not meaningful (`ρ ∤ 2|rot|`).
    pub fn count(&self, rho: u64) -> Option<u64> {
        if let Some(&c) = self.counts.get(&rho) {
            return Some(c);
        }
        if self.rot_abs == 0 {
            self.counts.get(&0).copied()
        } else {
            None
        }
    }

    /// The ρ values this front's signature ranges over.
    pub fn rhos(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }
}

/// Positive divisors of `n > 0`.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

pub fn ruling_signature(front: &FrontDiagram) -> Result<RulingSignature, RulingError> {
    let o = front.orientation()?;
    let rot_abs = front.rot(&o).unsigned_abs();
    let rhos: Vec<u64> = if rot_abs == 0 {
        let pot = front.maslov_potential(&o)?;
        let top = front
            .crossing_degrees(&pot)
            .into_iter()
            .flatten()
            .map(|d| d.unsigned_abs())
            .max()
            .unwrap_or(0)
            .max(1);
        (0..=top).collect()
    } else {
        let mut r = vec![0];
        r.extend(divisors(2 * rot_abs));
        r
    };
    let mut counts = BTreeMap::new();
    for rho in rhos {
        let g = Grading::new(front, rho)?;
        counts.insert(rho, count_graded(front, &g));
    }
    Ok(RulingSignature::from_counts(rot_abs, counts))
}
