//! Normal rulings of fronts.
//!
//! A ruling is swept left to right as a fixed-point-free involution on the
//! strand levels of each column ([`PairingState`]). [`count_rulings`] merges
//! branches reaching the same state; [`brute_force_rulings`] checks every
//! switch subset against the path definition instead.

mod oracle;
mod pairing;
mod signature;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::front::{reduce, EventKind, FrontDiagram, FrontError};

pub use oracle::{brute_force_rulings, brute_force_switch_sets, BRUTE_FORCE_LIMIT};
pub use pairing::PairingState;
pub use signature::{ruling_signature, RulingSignature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RulingError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("rho = {rho} does not divide 2|rot| = {modulus}")]
    RhoNotDivisor { rho: u64, modulus: u64 },
    #[error("{crossings} crossings exceed the brute-force limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
}

/// Which crossings may be switches for a given `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    rho: u64,
    modulus: u64,
    degrees: Vec<Option<i64>>,
}

impl Grading {
    /// Grading for any `ρ`, including values not dividing `2|rot|`.
    pub fn new(front: &FrontDiagram, rho: u64) -> Result<Self, RulingError> {
        let o = front.orientation()?;
        let modulus = 2 * front.rot(&o).unsigned_abs();
        let degrees = if rho == 1 {
            vec![None; front.len()]
        } else {
            let pot = front.maslov_potential(&o)?;
            front.crossing_degrees(&pot)
        };
        Ok(Grading {
            rho,
            modulus,
            degrees,
        })
    }

    /// Like [`Grading::new`] but rejects `ρ ∉ {0, 1}` that does not divide
    /// `2|rot|`.
    pub fn checked(front: &FrontDiagram, rho: u64) -> Result<Self, RulingError> {
        let g = Grading::new(front, rho)?;
        if rho > 1 && g.modulus != 0 && g.modulus % rho != 0 {
            return Err(RulingError::RhoNotDivisor {
                rho,
                modulus: g.modulus,
            });
        }
        Ok(g)
    }

    pub fn rho(&self) -> u64 {
        self.rho
    }

    /// `2|rot|`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Whether the crossing at event `position` may be a switch.
    pub fn admits(&self, position: usize) -> bool {
        if self.rho == 1 {
            return true;
        }
        let Some(d) = self.degrees.get(position).copied().flatten() else {
            return false;
        };
        let d = reduce(d, self.modulus);
        if self.rho == 0 {
            d == 0
        } else {
            d.rem_euclid(self.rho as i64) == 0
        }
    }
}

/// A normal ruling: its switches (event positions, ascending) and the
/// pairing state after every event.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ruling {
    pub switches: Vec<usize>,
    pub trace: Vec<PairingState>,
}

impl Ruling {
    pub fn switch_count(&self) -> usize {
        self.switches.len()
    }

    /// Replays the ruling on `front` and checks every sweep condition.
    pub fn is_valid_for(&self, front: &FrontDiagram, grading: &Grading) -> bool {
        if self.trace.len() != front.len() {
            return false;
        }
        let mut st = PairingState::empty();
        for (p, ev) in front.events().iter().enumerate() {
            let switch = self.switches.binary_search(&p).is_ok();
            if switch && !ev.is_crossing() {
                return false;
            }
            let next = match ev.kind {
                EventKind::Birth => Some(st.birth(ev.index)),
                EventKind::Death => st.death(ev.index),
                EventKind::Crossing if switch => (st.partner(ev.index) != ev.index + 1
                    && st.switch_is_normal(ev.index)
                    && grading.admits(p))
                .then(|| st.clone()),
                EventKind::Crossing => st.pass(ev.index),
            };
            match next {
                Some(n) if n == self.trace[p] => st = n,
                _ => return false,
            }
        }
        st.is_empty()
    }
}

/// Every ρ-graded normal ruling, sorted by switch set.
pub fn enumerate_rulings(front: &FrontDiagram, rho: u64) -> Result<Vec<Ruling>, RulingError> {
    let g = Grading::new(front, rho)?;
    Ok(enumerate_graded(front, &g))
}

pub fn enumerate_graded(front: &FrontDiagram, grading: &Grading) -> Vec<Ruling> {
    struct Search<'a> {
        front: &'a FrontDiagram,
        grading: &'a Grading,
        switches: Vec<usize>,
        trace: Vec<PairingState>,
        out: Vec<Ruling>,
    }

    impl Search<'_> {
        fn step(&mut self, p: usize, next: PairingState, switched: bool) {
            if switched {
                self.switches.push(p);
            }
            self.trace.push(next.clone());
            self.go(p + 1, next);
            self.trace.pop();
            if switched {
                self.switches.pop();
            }
        }

        fn go(&mut self, p: usize, st: PairingState) {
            let Some(&ev) = self.front.events().get(p) else {
                self.out.push(Ruling {
                    switches: self.switches.clone(),
                    trace: self.trace.clone(),
                });
                return;
            };
            let i = ev.index;
            match ev.kind {
                EventKind::Birth => self.step(p, st.birth(i), false),
                EventKind::Death => {
                    if let Some(n) = st.death(i) {
                        self.step(p, n, false);
                    }
                }
                EventKind::Crossing => {
                    // companion strands can neither cross nor switch
                    let Some(n) = st.pass(i) else { return };
                    if self.grading.admits(p) && st.switch_is_normal(i) {
                        self.step(p, st, true);
                    }
                    self.step(p, n, false);
                }
            }
        }
    }

    let mut s = Search {
        front,
        grading,
        switches: Vec::new(),
        trace: Vec::with_capacity(front.len()),
        out: Vec::new(),
    };
    s.go(0, PairingState::empty());
    let mut out = s.out;
    out.sort_by(|a, b| a.switches.cmp(&b.switches));
    out
}

/// Number of ρ-graded normal rulings.
pub fn count_rulings(front: &FrontDiagram, rho: u64) -> Result<u64, RulingError> {
    let g = Grading::new(front, rho)?;
    Ok(count_graded(front, &g))
}

/// Weighted sweep: states reached by several switch choices are merged.
pub fn count_graded(front: &FrontDiagram, grading: &Grading) -> u64 {
    let mut layer: HashMap<PairingState, u64> = HashMap::from([(PairingState::empty(), 1)]);
    for (p, ev) in front.events().iter().enumerate() {
        let i = ev.index;
        let mut next: HashMap<PairingState, u64> = HashMap::with_capacity(layer.len() * 2);
        let mut add = |s: PairingState, w: u64| *next.entry(s).or_insert(0) += w;
        for (st, w) in layer {
            match ev.kind {
                EventKind::Birth => add(st.birth(i), w),
                EventKind::Death => {
                    if let Some(n) = st.death(i) {
                        add(n, w);
                    }
                }
                EventKind::Crossing => {
                    let Some(n) = st.pass(i) else { continue };
                    add(n, w);
                    if grading.admits(p) && st.switch_is_normal(i) {
                        add(st, w);
                    }
                }
            }
        }
        if next.is_empty() {
            return 0;
        }
        layer = next;
    }
    layer.get(&PairingState::empty()).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn front(s: &str) -> FrontDiagram {
        FrontDiagram::parse(s).unwrap()
    }

    #[test]
    fn unknot_has_one_ruling_for_every_rho() {
        let f = FrontDiagram::unknot();
        for rho in 0..5 {
            assert_eq!(count_rulings(&f, rho).unwrap(), 1);
            let rs = enumerate_rulings(&f, rho).unwrap();
            assert_eq!(rs.len(), 1);
            assert!(rs[0].switches.is_empty());
        }
    }

    #[test]
    fn trefoil_has_three_rulings() {
        let f = front("L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(count_rulings(&f, 1).unwrap(), 3);
        assert_eq!(count_rulings(&f, 0).unwrap(), 3);
        let sets: Vec<_> = enumerate_rulings(&f, 1)
            .unwrap()
            .into_iter()
            .map(|r| r.switches)
            .collect();
        assert_eq!(sets, vec![vec![2], vec![2, 3, 4], vec![4]]);
    }

    #[test]
    fn stabilized_unknot_has_no_ungraded_ruling() {
        let f = front("L1 L3 R2 R1");
        assert_eq!(count_rulings(&f, 1).unwrap(), 0);
    }

    #[test]
    fn checked_grading_rejects_non_divisors() {
        let f = front("L1 L3 R2 R1");
        assert!(Grading::checked(&f, 2).is_ok());
        assert_eq!(
            Grading::checked(&f, 3),
            Err(RulingError::RhoNotDivisor { rho: 3, modulus: 2 })
        );
        assert!(Grading::new(&f, 3).is_ok());
    }

    #[test]
    fn enumerated_rulings_replay() {
        let f = front("L1 L1 X2 X2 X2 R1 R1");
        let g = Grading::new(&f, 1).unwrap();
        let rs = enumerate_graded(&f, &g);
        for r in &rs {
            assert!(r.is_valid_for(&f, &g));
        }
        let mut bad = rs[0].clone();
        bad.switches = vec![3];
        assert!(!bad.is_valid_for(&f, &g));
    }
}
