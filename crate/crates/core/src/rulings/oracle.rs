//! Brute-force ruling count straight from the path definition.
//!
//! Each strand carries the label of the left cusp it leaves from. For a
//! fixed switch set the labels are pushed through the front: companions
//! (equal labels) may not meet at a crossing, must meet at their right
//! cusp, and at a switch the two eyes may not interlace.

use crate::front::{EventKind, FrontDiagram};

use super::{Grading, RulingError};

/// Largest crossing count [`brute_force_rulings`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

pub fn brute_force_rulings(front: &FrontDiagram, rho: u64) -> Result<u64, RulingError> {
    Ok(brute_force_switch_sets(front, rho)?.len() as u64)
}

/// Switch sets (event positions, ascending) of all ρ-graded rulings, sorted.
pub fn brute_force_switch_sets(
    front: &FrontDiagram,
    rho: u64,
) -> Result<Vec<Vec<usize>>, RulingError> {
    let crossings = front.crossing_positions();
    if crossings.len() > BRUTE_FORCE_LIMIT {
        return Err(RulingError::TooManyCrossings {
            crossings: crossings.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let grading = Grading::new(front, rho)?;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << crossings.len()) {
        let switches: Vec<usize> = crossings
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if is_ruling(front, &grading, &switches) {
            out.push(switches);
        }
    }
    out.sort();
    Ok(out)
}

fn interlaced(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    inside(b0, a0, a1) != inside(b1, a0, a1)
}

fn is_ruling(front: &FrontDiagram, grading: &Grading, switches: &[usize]) -> bool {
    let mut labels: Vec<usize> = Vec::new();
    let mut fresh = 0usize;
    for (p, ev) in front.events().iter().enumerate() {
        let at = ev.index - 1;
        match ev.kind {
            EventKind::Birth => {
                labels.splice(at..at, [fresh, fresh]);
                fresh += 1;
            }
            EventKind::Death => {
                if labels[at] != labels[at + 1] {
                    return false;
                }
                labels.drain(at..at + 2);
            }
            EventKind::Crossing => {
                let (u, l) = (labels[at], labels[at + 1]);
                if u == l {
                    return false;
                }
                if switches.contains(&p) {
                    if !grading.admits(p) {
                        return false;
                    }
                    let mate = |lab: usize, not: usize| {
                        (0..labels.len())
                            .find(|&k| k != not && labels[k] == lab)
                            .expect("every path has a companion")
                    };
                    let a = mate(u, at);
                    let b = mate(l, at + 1);
                    if interlaced((at, a), (at + 1, b)) {
                        return false;
                    }
                } else {
                    labels.swap(at, at + 1);
                }
            }
        }
    }
    true
}
