//! Local rewrites of event words: commutations, the three Legendrian
//! Reidemeister moves, stabilizations, orientation reversal and the half
//! rotation.
//!
//! Rewrite tables (strand at level `i` next to a cusp or crossing):
//!
//! | move        | left side          | right side                   |
//! |-------------|--------------------|------------------------------|
//! | kink        | (nothing)          | `L(i+1) X(i) R(i+1)`         |
//! | kink        | (nothing)          | `L(i) X(i+1) R(i)`           |
//! | cusp slide  | `L(i+1)`           | `L(i) X(i+1) X(i)`           |
//! | cusp slide  | `L(i)`             | `L(i+1) X(i) X(i+1)`         |
//! | cusp slide  | `R(i+1)`           | `X(i) X(i+1) R(i)`           |
//! | cusp slide  | `R(i)`             | `X(i+1) X(i) R(i+1)`         |
//! | triple point| `X(i) X(i+1) X(i)` | `X(i+1) X(i) X(i+1)`         |
//!
//! A stabilization inserts a zigzag `L(i+1) R(i)` or `L(i) R(i+1)` on a
//! segment; which one is positive depends on the direction of travel.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{Direction, Event, EventKind, FrontDiagram, FrontError, Orientation, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Move {
    /// Swap the events at `position` and `position + 1`.
    Commute {
        position: usize,
    },
    /// Forward: the cusp at `position` passes the strand `above` or below
    /// it. Backward: the three events from `position` collapse to a cusp.
    CuspSlide {
        position: usize,
        above: bool,
        forward: bool,
    },
    /// Reflect the three crossings starting at `position`.
    TriplePoint {
        position: usize,
    },
    /// Insert a kink on the strand at `level` in `column`, with the loop
    /// `below` the strand or above it.
    KinkBirth {
        column: usize,
        level: usize,
        below: bool,
    },
    /// Remove the kink occupying events `position..position + 3`.
    KinkDeath {
        position: usize,
    },
    Rotate180,
    ReverseOrientation,
    StabilizePlus {
        column: usize,
        level: usize,
    },
    StabilizeMinus {
        column: usize,
        level: usize,
    },
}

impl Move {
    /// Whether the move is a Legendrian isotopy (everything except the
    /// stabilizations and orientation reversal).
    pub fn is_isotopy(&self) -> bool {
        !matches!(
            self,
            Move::StabilizePlus { .. } | Move::StabilizeMinus { .. } | Move::ReverseOrientation
        )
    }

    /// The move undoing `self` once applied to `front`, if there is one.
    pub fn inverse(&self, front: &FrontDiagram) -> Option<Move> {
        Some(match *self {
            Move::Commute { .. }
            | Move::TriplePoint { .. }
            | Move::Rotate180
            | Move::ReverseOrientation => *self,
            Move::CuspSlide {
                position,
                above,
                forward,
            } => Move::CuspSlide {
                position,
                above,
                forward: !forward,
            },
            Move::KinkBirth { column, .. } => Move::KinkDeath { position: column },
            Move::KinkDeath { position } => {
                let (level, below) = kink_at(front.events(), position)?;
                Move::KinkBirth {
                    column: position,
                    level,
                    below,
                }
            }
            Move::StabilizePlus { .. } | Move::StabilizeMinus { .. } => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {0:?} does not apply to this front")]
    NotApplicable(Move),
    #[error(transparent)]
    Front(#[from] FrontError),
}

fn delta(kind: EventKind) -> i64 {
    match kind {
        EventKind::Birth => 2,
        EventKind::Death => -2,
        EventKind::Crossing => 0,
    }
}

fn ev(kind: EventKind, index: i64) -> Event {
    Event {
        kind,
        index: index as usize,
    }
}

/// The pair `[y', x']` equivalent to `x` followed by `y`, when their
/// supports are separated.
fn commuted(x: Event, y: Event) -> Option<[Event; 2]> {
    let a = x.index as i64;
    let j = y.index as i64;
    let x_dies = x.kind == EventKind::Death;
    let (above, below) = match y.kind {
        // a birth followed by a death must not land both cusps in one gap,
        // where the swapped pair would have two equally good preimages
        EventKind::Death if x.kind == EventKind::Birth => (j <= a - 3, j >= a + 3),
        EventKind::Crossing | EventKind::Death => {
            (j <= a - 2, if x_dies { j >= a } else { j >= a + 2 })
        }
        EventKind::Birth => {
            if x_dies {
                (j < a, j > a)
            } else {
                (j <= a, j >= a + 2)
            }
        }
    };
    if above {
        Some([y, ev(x.kind, a + delta(y.kind))])
    } else if below {
        Some([ev(y.kind, j - delta(x.kind)), x])
    } else {
        None
    }
}

/// Kink pattern at `p`: the strand level and whether the loop is below it.
fn kink_at(events: &[Event], p: usize) -> Option<(usize, bool)> {
    let w = events.get(p..p + 3)?;
    use EventKind::*;
    match (w[0].kind, w[1].kind, w[2].kind) {
        (Birth, Crossing, Death) => {
            let i = w[1].index;
            if w[0].index == i + 1 && w[2].index == i + 1 {
                Some((i, true))
            } else if i >= 2 && w[0].index == i - 1 && w[2].index == i - 1 {
                Some((i - 1, false))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn kink_events(level: usize, below: bool) -> [Event; 3] {
    let i = level;
    if below {
        [Event::birth(i + 1), Event::crossing(i), Event::death(i + 1)]
    } else {
        [Event::birth(i), Event::crossing(i + 1), Event::death(i)]
    }
}

/// Expansion of a single cusp by sliding it past the neighbouring strand.
fn slide_out(e: Event, above: bool, strands_before: usize) -> Option<[Event; 3]> {
    let k = e.index;
    match (e.kind, above) {
        (EventKind::Birth, true) if k >= 2 => {
            let i = k - 1;
            Some([Event::birth(i), Event::crossing(i + 1), Event::crossing(i)])
        }
        (EventKind::Birth, false) if k <= strands_before => {
            let i = k;
            Some([
                Event::birth(i + 1),
                Event::crossing(i),
                Event::crossing(i + 1),
            ])
        }
        (EventKind::Death, true) if k >= 2 => {
            let i = k - 1;
            Some([Event::crossing(i), Event::crossing(i + 1), Event::death(i)])
        }
        (EventKind::Death, false) if k + 2 <= strands_before => {
            let i = k;
            Some([
                Event::crossing(i + 1),
                Event::crossing(i),
                Event::death(i + 1),
            ])
        }
        _ => None,
    }
}

/// Inverse of [`slide_out`]: the cusp and side a three-event window collapses to.
fn slide_in(w: &[Event]) -> Option<(Event, bool)> {
    if w.len() != 3 {
        return None;
    }
    use EventKind::*;
    match (w[0].kind, w[1].kind, w[2].kind) {
        (Birth, Crossing, Crossing) => {
            let i = w[0].index;
            if w[1].index == i + 1 && w[2].index == i {
                Some((Event::birth(i + 1), true))
            } else if w[1].index == i - 1 && w[2].index == i && i >= 2 {
                Some((Event::birth(i - 1), false))
            } else {
                None
            }
        }
        (Crossing, Crossing, Death) => {
            let i = w[0].index;
            if w[1].index == i + 1 && w[2].index == i {
                Some((Event::death(i + 1), true))
            } else if i >= 2 && w[1].index == i - 1 && w[2].index == i {
                Some((Event::death(i - 1), false))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn is_triple(w: &[Event]) -> bool {
    w.len() == 3
        && w.iter().all(Event::is_crossing)
        && w[0].index == w[2].index
        && w[0].index.abs_diff(w[1].index) == 1
}

/// The zigzag for a stabilization; `down` selects the one traversed with
/// two downward cusps.
fn zigzag(level: usize, rightward: bool, down: bool) -> [Event; 2] {
    let i = level;
    if rightward == down {
        [Event::birth(i + 1), Event::death(i)]
    } else {
        [Event::birth(i), Event::death(i + 1)]
    }
}

/// Result of replacing events `a..b` with `new`.
struct Rewrite {
    front: FrontDiagram,
    a: usize,
    b: usize,
    inserted: usize,
}

fn rewrite(front: &FrontDiagram, a: usize, b: usize, new: &[Event]) -> Result<Rewrite, MoveError> {
    let mut events = Vec::with_capacity(front.len() + new.len());
    events.extend_from_slice(&front.events()[..a]);
    events.extend_from_slice(new);
    events.extend_from_slice(&front.events()[b..]);
    Ok(Rewrite {
        front: FrontDiagram::new(events)?,
        a,
        b,
        inserted: new.len(),
    })
}

/// Horizontal mirror of the front: events in reverse order with left and
/// right cusps exchanged. It is the front of the knot turned by a half
/// rotation about the vertical axis, and is an involution on event words.
pub fn rotate180(front: &FrontDiagram) -> FrontDiagram {
    let events = front
        .events()
        .iter()
        .rev()
        .map(|e| match e.kind {
            EventKind::Birth => Event::death(e.index),
            EventKind::Death => Event::birth(e.index),
            EventKind::Crossing => *e,
        })
        .collect();
    FrontDiagram::new(events).expect("mirror of a valid front is valid")
}

/// A knot front with a chosen orientation, recorded as the direction of
/// travel along one segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedFront {
    front: FrontDiagram,
    base: Segment,
    dir: Direction,
}

impl OrientedFront {
    /// The front with its default orientation.
    pub fn new(front: FrontDiagram) -> Result<Self, FrontError> {
        front.require_knot()?;
        let base = front.base_segment().ok_or(FrontError::NotAKnot(0))?;
        Ok(OrientedFront {
            front,
            base,
            dir: Direction::Right,
        })
    }

    pub fn with_orientation(
        front: FrontDiagram,
        base: Segment,
        dir: Direction,
    ) -> Result<Self, FrontError> {
        Orientation::new(&front, base, dir)?;
        Ok(OrientedFront { front, base, dir })
    }

    pub fn front(&self) -> &FrontDiagram {
        &self.front
    }

    pub fn into_front(self) -> FrontDiagram {
        self.front
    }

    pub fn orientation(&self) -> Orientation {
        Orientation::new(&self.front, self.base, self.dir).expect("base is kept on a segment")
    }

    pub fn rot(&self) -> i64 {
        self.front.rot(&self.orientation())
    }

    pub fn tb(&self) -> i64 {
        self.front.tb().expect("oriented fronts are knots")
    }

    pub fn apply(&self, mv: Move) -> Result<OrientedFront, MoveError> {
        match mv {
            Move::Rotate180 => {
                let n = self.front.len();
                Ok(OrientedFront {
                    front: rotate180(&self.front),
                    base: Segment::new(n - self.base.column, self.base.level),
                    dir: self.dir.reversed(),
                })
            }
            Move::ReverseOrientation => Ok(OrientedFront {
                front: self.front.clone(),
                base: self.base,
                dir: self.dir.reversed(),
            }),
            _ => {
                let r = self.rewrite_for(mv)?;
                Ok(self.transport(r))
            }
        }
    }

    fn rewrite_for(&self, mv: Move) -> Result<Rewrite, MoveError> {
        let f = &self.front;
        let events = f.events();
        let na = || MoveError::NotApplicable(mv);
        match mv {
            Move::Commute { position: p } => {
                let (x, y) = (
                    *events.get(p).ok_or_else(na)?,
                    *events.get(p + 1).ok_or_else(na)?,
                );
                let pair = commuted(x, y).ok_or_else(na)?;
                rewrite(f, p, p + 2, &pair)
            }
            Move::CuspSlide {
                position: p,
                above,
                forward: true,
            } => {
                let e = *events.get(p).ok_or_else(na)?;
                let new = slide_out(e, above, f.strands_at(p)).ok_or_else(na)?;
                rewrite(f, p, p + 1, &new)
            }
            Move::CuspSlide {
                position: p,
                above,
                forward: false,
            } => {
                let w = events.get(p..p + 3).ok_or_else(na)?;
                let (cusp, side) = slide_in(w).ok_or_else(na)?;
                if side != above {
                    return Err(na());
                }
                rewrite(f, p, p + 3, &[cusp])
            }
            Move::TriplePoint { position: p } => {
                let w = events.get(p..p + 3).ok_or_else(na)?;
                if !is_triple(w) {
                    return Err(na());
                }
                let new = [w[1], w[0], w[1]];
                rewrite(f, p, p + 3, &new)
            }
            Move::KinkBirth {
                column,
                level,
                below,
            } => {
                if column == 0 || !f.has_segment(Segment::new(column, level)) {
                    return Err(na());
                }
                rewrite(f, column, column, &kink_events(level, below))
            }
            Move::KinkDeath { position: p } => {
                kink_at(events, p).ok_or_else(na)?;
                rewrite(f, p, p + 3, &[])
            }
            Move::StabilizePlus { column, level } | Move::StabilizeMinus { column, level } => {
                let seg = Segment::new(column, level);
                if column == 0 || !f.has_segment(seg) {
                    return Err(na());
                }
                let rightward = self.orientation().direction(seg) == Direction::Right;
                let down = matches!(mv, Move::StabilizePlus { .. });
                rewrite(f, column, column, &zigzag(level, rightward, down))
            }
            Move::Rotate180 | Move::ReverseOrientation => unreachable!("handled by apply"),
        }
    }

    /// Carries the orientation across a window rewrite through a segment of
    /// an unchanged boundary column.
    fn transport(&self, r: Rewrite) -> OrientedFront {
        let shift = |c: usize| {
            if c <= r.a {
                c
            } else {
                c + r.inserted - (r.b - r.a)
            }
        };
        let (base, dir) = if self.base.column <= r.a || self.base.column >= r.b {
            (
                Segment::new(shift(self.base.column), self.base.level),
                self.dir,
            )
        } else {
            let o = self.orientation();
            let column = if self.front.strands_at(r.a) > 0 {
                r.a
            } else {
                r.b
            };
            let seg = Segment::new(column, 1);
            (Segment::new(shift(column), 1), o.direction(seg))
        };
        OrientedFront {
            front: r.front,
            base,
            dir,
        }
    }

    /// Every move that applies to this front.
    pub fn applicable_moves(&self) -> Vec<Move> {
        let f = &self.front;
        let events = f.events();
        let mut out = Vec::new();
        for p in 0..events.len().saturating_sub(1) {
            if commuted(events[p], events[p + 1]).is_some() {
                out.push(Move::Commute { position: p });
            }
        }
        for (p, e) in events.iter().enumerate() {
            if e.is_crossing() {
                continue;
            }
            for above in [true, false] {
                if slide_out(*e, above, f.strands_at(p)).is_some() {
                    out.push(Move::CuspSlide {
                        position: p,
                        above,
                        forward: true,
                    });
                }
            }
        }
        for p in 0..events.len().saturating_sub(2) {
            let w = &events[p..p + 3];
            if let Some((_, above)) = slide_in(w) {
                out.push(Move::CuspSlide {
                    position: p,
                    above,
                    forward: false,
                });
            }
            if is_triple(w) {
                out.push(Move::TriplePoint { position: p });
            }
            if kink_at(events, p).is_some() {
                out.push(Move::KinkDeath { position: p });
            }
        }
        for seg in f.segments().filter(|s| s.column > 0) {
            for below in [true, false] {
                out.push(Move::KinkBirth {
                    column: seg.column,
                    level: seg.level,
                    below,
                });
            }
        }
        out.push(Move::Rotate180);
        out.push(Move::ReverseOrientation);
        if let Ok(arcs) = f.arcs() {
            let mut first = vec![None; arcs.count()];
            for seg in f.segments() {
                let a = arcs.arc_of(seg);
                if first[a].is_none() {
                    first[a] = Some(seg);
                }
            }
            for seg in first.into_iter().flatten() {
                out.push(Move::StabilizePlus {
                    column: seg.column,
                    level: seg.level,
                });
                out.push(Move::StabilizeMinus {
                    column: seg.column,
                    level: seg.level,
                });
            }
        }
        out
    }
}

/// Every move that applies to a knot front under its default orientation.
pub fn applicable_moves(front: &FrontDiagram) -> Result<Vec<Move>, FrontError> {
    Ok(OrientedFront::new(front.clone())?.applicable_moves())
}

/// Applies `mv` to a knot front under its default orientation.
pub fn apply_move(front: &FrontDiagram, mv: Move) -> Result<FrontDiagram, MoveError> {
    Ok(OrientedFront::new(front.clone())?.apply(mv)?.into_front())
}

/// Size limits for random walks, so that kink births cannot grow the front
/// without bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkBudget {
    pub max_events: usize,
    pub max_strands: usize,
}

impl WalkBudget {
    /// Room for a dozen extra events and two extra strands.
    pub fn around(front: &FrontDiagram) -> Self {
        WalkBudget {
            max_events: front.len() + 12,
            max_strands: front.max_strands() + 2,
        }
    }
}

/// Walk of `steps` isotopy moves, each drawn uniformly from the applicable
/// ones whose result stays within `budget`. Deterministic in `seed`.
pub fn random_walk(
    start: &OrientedFront,
    steps: usize,
    seed: u64,
    budget: WalkBudget,
) -> (OrientedFront, Vec<Move>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = start.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        let options: Vec<(Move, OrientedFront)> = cur
            .applicable_moves()
            .into_iter()
            .filter(Move::is_isotopy)
            .filter_map(|mv| cur.apply(mv).ok().map(|f| (mv, f)))
            .filter(|(_, f)| {
                f.front.len() <= budget.max_events && f.front.max_strands() <= budget.max_strands
            })
            .collect();
        let (mv, next) = options
            .choose(&mut rng)
            .cloned()
            .expect("the half rotation always applies");
        trace.push(mv);
        cur = next;
    }
    (cur, trace)
}

/// [`random_walk`] from the default orientation with [`WalkBudget::around`].
pub fn random_move_walk(
    front: &FrontDiagram,
    steps: usize,
    seed: u64,
) -> Result<FrontDiagram, FrontError> {
    let start = OrientedFront::new(front.clone())?;
    let (end, _) = random_walk(&start, steps, seed, WalkBudget::around(front));
    Ok(end.into_front())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn front(s: &str) -> FrontDiagram {
        FrontDiagram::parse(s).unwrap()
    }

    #[test]
    fn commute_disjoint_births() {
        let f = front("L1 L3 X2 X2 X2 R1 R1");
        let moves = applicable_moves(&f).unwrap();
        assert!(moves.contains(&Move::Commute { position: 0 }));
        let g = apply_move(&f, Move::Commute { position: 0 }).unwrap();
        assert_eq!(g.to_string(), "L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(apply_move(&g, Move::Commute { position: 0 }).unwrap(), f);
    }

    #[test]
    fn unknot_moves() {
        let moves = applicable_moves(&FrontDiagram::unknot()).unwrap();
        assert!(!moves.iter().any(|m| matches!(m, Move::Commute { .. })));
        assert!(moves
            .iter()
            .any(|m| matches!(m, Move::StabilizePlus { .. })));
        assert!(moves
            .iter()
            .any(|m| matches!(m, Move::StabilizeMinus { .. })));
    }

    #[test]
    fn stabilizations_shift_rot() {
        let u = OrientedFront::new(FrontDiagram::unknot()).unwrap();
        let p = u
            .apply(Move::StabilizePlus {
                column: 1,
                level: 1,
            })
            .unwrap();
        assert_eq!((p.tb(), p.rot()), (-2, 1));
        let m = u
            .apply(Move::StabilizeMinus {
                column: 1,
                level: 2,
            })
            .unwrap();
        assert_eq!((m.tb(), m.rot()), (-2, -1));
    }

    #[test]
    fn rotate_is_an_involution() {
        let f = front("L1 L3 X2 X2 X2 R1 R1");
        assert_eq!(rotate180(&FrontDiagram::unknot()), FrontDiagram::unknot());
        assert_eq!(rotate180(&rotate180(&f)), f);
    }

    #[test]
    fn kinks_and_slides_round_trip() {
        let f = front("L1 L1 X2 X2 X2 R1 R1");
        let o = OrientedFront::new(f.clone()).unwrap();
        for mv in o.applicable_moves() {
            let g = o.apply(mv).unwrap();
            if let Some(inv) = mv.inverse(&f) {
                assert_eq!(g.apply(inv).unwrap().front(), &f, "{mv:?}");
            }
        }
    }
}
