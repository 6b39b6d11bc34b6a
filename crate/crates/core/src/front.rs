//! Front diagrams as words of Morse events.
//!
//! Columns are numbered by how many events lie to their left: column `c`
//! sits between event `c - 1` and event `c`, so column `0` and column
//! `len()` are empty. Strand levels are 1-based and counted from the top.
//!
//! Crossing convention: at a crossing `X<i>` the strand entering from
//! level `i` descends (more negative slope) and is the over strand. The
//! crossing sign is `+1` when both strands run in the same x-direction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EventKind {
    /// Left cusp.
    Birth,
    /// Right cusp.
    Death,
    Crossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Event {
    pub kind: EventKind,
    pub index: usize,
}

impl Event {
    pub const fn birth(index: usize) -> Self {
        Event {
            kind: EventKind::Birth,
            index,
        }
    }

    pub const fn death(index: usize) -> Self {
        Event {
            kind: EventKind::Death,
            index,
        }
    }

    pub const fn crossing(index: usize) -> Self {
        Event {
            kind: EventKind::Crossing,
            index,
        }
    }

    pub fn is_crossing(&self) -> bool {
        self.kind == EventKind::Crossing
    }

    /// Whether the event may be applied to a column holding `strands` strands.
    pub fn is_legal(&self, strands: usize) -> bool {
        match self.kind {
            EventKind::Birth => self.index >= 1 && self.index <= strands + 1,
            EventKind::Death | EventKind::Crossing => self.index >= 1 && self.index < strands,
        }
    }

    /// Strand count after the event, assuming it is legal.
    pub fn strands_after(&self, strands: usize) -> usize {
        match self.kind {
            EventKind::Birth => strands + 2,
            EventKind::Death => strands - 2,
            EventKind::Crossing => strands,
        }
    }

    /// Level in the right-hand column reached by a strand at `level` on the
    /// left, or `None` when the strand ends at this event's right cusp.
    fn forward(&self, level: usize) -> Option<usize> {
        let i = self.index;
        match self.kind {
            EventKind::Birth => Some(if level < i { level } else { level + 2 }),
            EventKind::Death => {
                if level == i || level == i + 1 {
                    None
                } else if level < i {
                    Some(level)
                } else {
                    Some(level - 2)
                }
            }
            EventKind::Crossing => Some(transpose(level, i)),
        }
    }

    /// Level in the left-hand column reached by a strand at `level` on the
    /// right, or `None` when the strand starts at this event's left cusp.
    fn backward(&self, level: usize) -> Option<usize> {
        let i = self.index;
        match self.kind {
            EventKind::Birth => {
                if level == i || level == i + 1 {
                    None
                } else if level < i {
                    Some(level)
                } else {
                    Some(level - 2)
                }
            }
            EventKind::Death => Some(if level < i { level } else { level + 2 }),
            EventKind::Crossing => Some(transpose(level, i)),
        }
    }
}

fn transpose(level: usize, i: usize) -> usize {
    if level == i {
        i + 1
    } else if level == i + 1 {
        i
    } else {
        level
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            EventKind::Birth => 'L',
            EventKind::Death => 'R',
            EventKind::Crossing => 'X',
        };
        write!(f, "{}{}", c, self.index)
    }
}

impl FromStr for Event {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('L') => EventKind::Birth,
            Some('R') => EventKind::Death,
            Some('X') => EventKind::Crossing,
            _ => return Err(()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(());
        }
        let index: usize = rest.parse().map_err(|_| ())?;
        if index == 0 {
            return Err(());
        }
        Ok(Event { kind, index })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("token {ordinal} `{token}` is malformed (expected L<i>, R<i> or X<i> with i >= 1)")]
    MalformedToken { ordinal: usize, token: String },
    #[error("token {ordinal} `{token}` is illegal on a column with {strands} strands")]
    IllegalEvent {
        ordinal: usize,
        token: String,
        strands: usize,
    },
    #[error("front ends with {0} open strands")]
    Unclosed(usize),
    #[error("front has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("event {0} is not a crossing")]
    NotACrossing(usize),
    #[error("no strand at column {column}, level {level}")]
    NoSuchSegment { column: usize, level: usize },
    #[error("inconsistent Maslov potential: {0}")]
    Inconsistent(String),
}

/// Horizontal direction of travel along a strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

/// A strand piece between two consecutive events.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub column: usize,
    pub level: usize,
}

impl Segment {
    pub const fn new(column: usize, level: usize) -> Self {
        Segment { column, level }
    }
}

/// A cusp passed while walking along the knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CuspPass {
    pub event: usize,
    pub downward: bool,
}

/// A Legendrian front, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontDiagram {
    events: Vec<Event>,
    strands: Vec<usize>,
}

impl FrontDiagram {
    pub fn new(events: Vec<Event>) -> Result<Self, FrontError> {
        let mut strands = Vec::with_capacity(events.len() + 1);
        let mut k = 0usize;
        strands.push(k);
        for (n, ev) in events.iter().enumerate() {
            if !ev.is_legal(k) {
                return Err(FrontError::IllegalEvent {
                    ordinal: n + 1,
                    token: ev.to_string(),
                    strands: k,
                });
            }
            k = ev.strands_after(k);
            strands.push(k);
        }
        if k != 0 {
            return Err(FrontError::Unclosed(k));
        }
        Ok(FrontDiagram { events, strands })
    }

    /// Parses the `.front` text format: whitespace-separated `L<i>`, `R<i>`,
    /// `X<i>` tokens, with `#` starting a comment that runs to end of line.
    pub fn parse(text: &str) -> Result<Self, FrontError> {
        let mut events = Vec::new();
        for line in text.lines() {
            let body = match line.find('#') {
                Some(at) => &line[..at],
                None => line,
            };
            for tok in body.split_whitespace() {
                let ev = tok
                    .parse::<Event>()
                    .map_err(|_| FrontError::MalformedToken {
                        ordinal: events.len() + 1,
                        token: tok.to_string(),
                    })?;
                events.push(ev);
            }
        }
        FrontDiagram::new(events)
    }

    /// The standard Legendrian unknot `L1 R1`.
    pub fn unknot() -> Self {
        FrontDiagram::new(vec![Event::birth(1), Event::death(1)]).expect("unknot is valid")
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }

    /// Strand count of every column, `len() + 1` entries.
    pub fn column_strands(&self) -> &[usize] {
        &self.strands
    }

    pub fn strands_at(&self, column: usize) -> usize {
        self.strands[column]
    }

    pub fn max_strands(&self) -> usize {
        self.strands.iter().copied().max().unwrap_or(0)
    }

    fn count_kind(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    pub fn left_cusps(&self) -> usize {
        self.count_kind(EventKind::Birth)
    }

    pub fn right_cusps(&self) -> usize {
        self.count_kind(EventKind::Death)
    }

    pub fn cusps(&self) -> usize {
        self.left_cusps() + self.right_cusps()
    }

    pub fn crossings(&self) -> usize {
        self.count_kind(EventKind::Crossing)
    }

    /// Event positions of the crossings, in order.
    pub fn crossing_positions(&self) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_crossing())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn has_segment(&self, seg: Segment) -> bool {
        seg.column < self.strands.len() && seg.level >= 1 && seg.level <= self.strands[seg.column]
    }

    /// Every strand segment, column by column.
    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.strands
            .iter()
            .enumerate()
            .flat_map(|(c, &k)| (1..=k).map(move |j| Segment::new(c, j)))
    }

    /// One step along the knot from `seg` travelling in `dir`.
    pub(crate) fn advance(
        &self,
        seg: Segment,
        dir: Direction,
    ) -> (Segment, Direction, Option<CuspPass>) {
        match dir {
            Direction::Right => {
                let ev = self.events[seg.column];
                match ev.forward(seg.level) {
                    Some(l) => (Segment::new(seg.column + 1, l), dir, None),
                    None => {
                        let other = transpose(seg.level, ev.index);
                        let pass = CuspPass {
                            event: seg.column,
                            downward: other > seg.level,
                        };
                        (Segment::new(seg.column, other), Direction::Left, Some(pass))
                    }
                }
            }
            Direction::Left => {
                let ev = self.events[seg.column - 1];
                match ev.backward(seg.level) {
                    Some(l) => (Segment::new(seg.column - 1, l), dir, None),
                    None => {
                        let other = transpose(seg.level, ev.index);
                        let pass = CuspPass {
                            event: seg.column - 1,
                            downward: other > seg.level,
                        };
                        (
                            Segment::new(seg.column, other),
                            Direction::Right,
                            Some(pass),
                        )
                    }
                }
            }
        }
    }

    /// Walks once around the component through `start`, calling `visit`
    /// for each segment and each cusp passed.
    pub(crate) fn walk<F>(&self, start: Segment, dir: Direction, mut visit: F)
    where
        F: FnMut(Segment, Direction, Option<CuspPass>),
    {
        let (mut seg, mut d) = (start, dir);
        loop {
            let (next, nd, cusp) = self.advance(seg, d);
            visit(seg, d, cusp);
            seg = next;
            d = nd;
            if seg == start && d == dir {
                break;
            }
        }
    }

    /// Number of closed curves traced out by the front.
    pub fn component_count(&self) -> usize {
        let mut seen: Vec<Vec<bool>> = self.strands.iter().map(|&k| vec![false; k + 1]).collect();
        let mut comps = 0;
        for seg in self.segments().collect::<Vec<_>>() {
            if seen[seg.column][seg.level] {
                continue;
            }
            comps += 1;
            self.walk(seg, Direction::Right, |s, _, _| {
                seen[s.column][s.level] = true
            });
        }
        comps
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn require_knot(&self) -> Result<(), FrontError> {
        match self.component_count() {
            1 => Ok(()),
            n => Err(FrontError::NotAKnot(n)),
        }
    }

    /// Base segment for orientations, arcs and potentials: the upper strand
    /// created by the first left cusp.
    pub fn base_segment(&self) -> Option<Segment> {
        self.events.first().map(|e| Segment::new(1, e.index))
    }

    /// Orientation running rightward along the base segment.
    pub fn orientation(&self) -> Result<Orientation, FrontError> {
        let base = self.base_segment().ok_or(FrontError::NotAKnot(0))?;
        Orientation::new(self, base, Direction::Right)
    }

    /// Sum of crossing signs under `o`.
    pub fn writhe(&self, o: &Orientation) -> i64 {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_crossing())
            .map(|(p, e)| {
                let over = o.direction(Segment::new(p, e.index));
                let under = o.direction(Segment::new(p, e.index + 1));
                if over == under {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    /// Thurston–Bennequin number: writhe minus the number of right cusps.
    pub fn tb(&self) -> Result<i64, FrontError> {
        let o = self.orientation()?;
        Ok(self.writhe(&o) - self.right_cusps() as i64)
    }

    /// Rotation number: half of (downward cusps − upward cusps) under `o`.
    pub fn rot(&self, o: &Orientation) -> i64 {
        let mut down = 0i64;
        let mut up = 0i64;
        for (p, e) in self.events.iter().enumerate() {
            let downward = match e.kind {
                EventKind::Birth => {
                    o.direction(Segment::new(p + 1, e.index + 1)) == Direction::Right
                }
                EventKind::Death => o.direction(Segment::new(p, e.index)) == Direction::Right,
                EventKind::Crossing => continue,
            };
            if downward {
                down += 1;
            } else {
                up += 1;
            }
        }
        (down - up) / 2
    }

    /// Rotation number under the default orientation.
    pub fn rot_default(&self) -> Result<i64, FrontError> {
        Ok(self.rot(&self.orientation()?))
    }

    pub fn arcs(&self) -> Result<ArcDecomposition, FrontError> {
        ArcDecomposition::new(self)
    }

    /// Maslov potential with value 0 on the base arc, modulo `2|rot|`.
    pub fn maslov_potential(&self, o: &Orientation) -> Result<MaslovPotential, FrontError> {
        let base = self.base_segment().ok_or(FrontError::NotAKnot(0))?;
        self.maslov_potential_from(o, base)
    }

    /// Maslov potential normalized to 0 on the arc through `start`.
    pub fn maslov_potential_from(
        &self,
        o: &Orientation,
        start: Segment,
    ) -> Result<MaslovPotential, FrontError> {
        if !self.has_segment(start) {
            return Err(FrontError::NoSuchSegment {
                column: start.column,
                level: start.level,
            });
        }
        let arcs = self.arcs()?;
        let modulus = 2 * self.rot(o).unsigned_abs();
        let mut raw: Vec<Option<i64>> = vec![None; arcs.count()];
        let mut value = 0i64;
        let mut conflict = None;
        self.walk(start, Direction::Right, |seg, _, cusp| {
            let arc = arcs.arc_of(seg);
            match raw[arc] {
                None => raw[arc] = Some(value),
                Some(v) if reduce(v - value, modulus) != 0 => conflict = Some((arc, v, value)),
                Some(_) => {}
            }
            if let Some(c) = cusp {
                value += if c.downward { -1 } else { 1 };
            }
        });
        if let Some((arc, a, b)) = conflict {
            return Err(FrontError::Inconsistent(format!(
                "arc {arc} reached with values {a} and {b}"
            )));
        }
        // a full loop shifts the potential by 2 rot, sign set by the
        // orientation at `start`
        let drift = value;
        if drift.unsigned_abs() != modulus {
            return Err(FrontError::Inconsistent(format!(
                "loop drift {drift} does not match rotation number"
            )));
        }
        let values = raw
            .into_iter()
            .map(|v| {
                let v = v.expect("single component visits every arc");
                reduce(v, modulus)
            })
            .collect();
        let potential = MaslovPotential {
            modulus,
            values,
            arcs,
        };
        if !potential.is_valid_for(self) {
            return Err(FrontError::Inconsistent("cusp relation violated".into()));
        }
        Ok(potential)
    }

    /// Maslov degree of the crossing at event `position`: the potential of
    /// the descending strand minus that of the ascending strand.
    pub fn crossing_degree(
        &self,
        potential: &MaslovPotential,
        position: usize,
    ) -> Result<i64, FrontError> {
        let ev = self
            .events
            .get(position)
            .filter(|e| e.is_crossing())
            .ok_or(FrontError::NotACrossing(position))?;
        let over = potential.value_at(Segment::new(position, ev.index));
        let under = potential.value_at(Segment::new(position, ev.index + 1));
        Ok(reduce(over - under, potential.modulus))
    }

    /// Crossing degrees indexed by event position (`None` off crossings).
    pub fn crossing_degrees(&self, potential: &MaslovPotential) -> Vec<Option<i64>> {
        (0..self.events.len())
            .map(|p| self.crossing_degree(potential, p).ok())
            .collect()
    }
}

pub(crate) fn reduce(v: i64, modulus: u64) -> i64 {
    if modulus == 0 {
        v
    } else {
        v.rem_euclid(modulus as i64)
    }
}

impl fmt::Display for FrontDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, e) in self.events.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for FrontDiagram {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrontDiagram::parse(s)
    }
}

/// Direction of travel on every segment of a one-component front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    dirs: Vec<Vec<Direction>>,
    base: Segment,
    base_dir: Direction,
}

impl Orientation {
    /// Orients the knot so that `base` is travelled in direction `dir`.
    pub fn new(front: &FrontDiagram, base: Segment, dir: Direction) -> Result<Self, FrontError> {
        if !front.has_segment(base) {
            return Err(FrontError::NoSuchSegment {
                column: base.column,
                level: base.level,
            });
        }
        front.require_knot()?;
        let mut dirs: Vec<Vec<Direction>> = front
            .column_strands()
            .iter()
            .map(|&k| vec![Direction::Right; k])
            .collect();
        front.walk(base, dir, |seg, d, _| dirs[seg.column][seg.level - 1] = d);
        Ok(Orientation {
            dirs,
            base,
            base_dir: dir,
        })
    }

    pub fn direction(&self, seg: Segment) -> Direction {
        self.dirs[seg.column][seg.level - 1]
    }

    pub fn base(&self) -> (Segment, Direction) {
        (self.base, self.base_dir)
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            dirs: self
                .dirs
                .iter()
                .map(|col| col.iter().map(|d| d.reversed()).collect())
                .collect(),
            base: self.base,
            base_dir: self.base_dir.reversed(),
        }
    }
}

/// Arcs are the maximal pieces of the knot between consecutive cusps.
/// Arc `0` contains the base segment; the others are numbered in the order
/// met when walking rightward from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDecomposition {
    arc_of: Vec<Vec<usize>>,
    count: usize,
}

impl ArcDecomposition {
    pub fn new(front: &FrontDiagram) -> Result<Self, FrontError> {
        front.require_knot()?;
        let base = front.base_segment().ok_or(FrontError::NotAKnot(0))?;
        let mut arc_of: Vec<Vec<usize>> = front
            .column_strands()
            .iter()
            .map(|&k| vec![usize::MAX; k])
            .collect();
        let mut arc = 0usize;
        // the base segment starts right after the first left cusp, so the walk
        // begins at the start of arc 0 and ends on that same cusp
        front.walk(base, Direction::Right, |seg, _, cusp| {
            arc_of[seg.column][seg.level - 1] = arc;
            if cusp.is_some() {
                arc += 1;
            }
        });
        Ok(ArcDecomposition { arc_of, count: arc })
    }

    pub fn arc_of(&self, seg: Segment) -> usize {
        self.arc_of[seg.column][seg.level - 1]
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Maslov numbers on arcs, taken modulo `modulus` (`0` means integers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaslovPotential {
    modulus: u64,
    values: Vec<i64>,
    arcs: ArcDecomposition,
}

impl MaslovPotential {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn arcs(&self) -> &ArcDecomposition {
        &self.arcs
    }

    pub fn value(&self, arc: usize) -> i64 {
        self.values[arc]
    }

    pub fn value_at(&self, seg: Segment) -> i64 {
        self.values[self.arcs.arc_of(seg)]
    }

    /// Checks `upper − lower ≡ 1` at every cusp.
    pub fn is_valid_for(&self, front: &FrontDiagram) -> bool {
        front.events().iter().enumerate().all(|(p, e)| {
            let column = match e.kind {
                EventKind::Birth => p + 1,
                EventKind::Death => p,
                EventKind::Crossing => return true,
            };
            let upper = self.value_at(Segment::new(column, e.index));
            let lower = self.value_at(Segment::new(column, e.index + 1));
            reduce(upper - lower - 1, self.modulus) == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn front(s: &str) -> FrontDiagram {
        FrontDiagram::parse(s).unwrap()
    }

    #[test]
    fn parses_smallest_unknot() {
        let f = front("L1 R1");
        assert_eq!(f.events(), &[Event::birth(1), Event::death(1)]);
        assert_eq!(f.to_string(), "L1 R1");
    }

    #[test]
    fn parses_comments_and_newlines() {
        let f = front("# an unknot\nL1\n  R1 # trailing\n");
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn legal_nested_births() {
        let f = front("L1 L1 X2 R2 R1");
        assert_eq!(f.column_strands(), &[0, 2, 4, 4, 2, 0]);
    }

    #[test]
    fn crossing_beyond_strands_names_token() {
        let err = FrontDiagram::parse("L1 X2 R1").unwrap_err();
        assert_eq!(
            err,
            FrontError::IllegalEvent {
                ordinal: 2,
                token: "X2".into(),
                strands: 2
            }
        );
        assert!(FrontDiagram::parse("L1 X1 R1").is_ok());
    }

    #[test]
    fn malformed_tokens() {
        for bad in ["L0", "Q1", "L", "X-1", "R1a"] {
            let err = FrontDiagram::parse(bad).unwrap_err();
            assert!(
                matches!(err, FrontError::MalformedToken { ordinal: 1, .. }),
                "{bad}"
            );
        }
        assert!(matches!(
            FrontDiagram::parse("L1 L1"),
            Err(FrontError::Unclosed(4))
        ));
        assert!(matches!(
            FrontDiagram::parse("L3 R1"),
            Err(FrontError::IllegalEvent { ordinal: 1, .. })
        ));
    }

    #[test]
    fn component_counts() {
        assert_eq!(front("L1 R1").component_count(), 1);
        assert_eq!(front("L1 R1 L1 R1").component_count(), 2);
        assert_eq!(front("L1 L3 R3 R1").component_count(), 2);
        assert_eq!(front("L1 L3 X2 R1 R1").component_count(), 1);
    }

    #[test]
    fn unknot_invariants() {
        let f = FrontDiagram::unknot();
        assert_eq!(f.tb().unwrap(), -1);
        let o = f.orientation().unwrap();
        assert_eq!(f.rot(&o), 0);
        assert_eq!(f.rot(&o.reversed()), 0);
        assert_eq!(f.arcs().unwrap().count(), 2);
        let mu = f.maslov_potential(&o).unwrap();
        assert_eq!(mu.modulus(), 0);
        assert_eq!(
            mu.value_at(Segment::new(1, 1)),
            mu.value_at(Segment::new(1, 2)) + 1
        );
    }

    #[test]
    fn trefoil_tb_and_degrees() {
        let f = front("L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(f.tb().unwrap(), 1);
        let o = f.orientation().unwrap();
        assert_eq!(f.rot(&o), 0);
        let mu = f.maslov_potential(&o).unwrap();
        for p in f.crossing_positions() {
            assert_eq!(f.crossing_degree(&mu, p).unwrap(), 0);
        }
        assert_eq!(f.crossing_degree(&mu, 0), Err(FrontError::NotACrossing(0)));
    }

    #[test]
    fn stabilized_unknot_has_rotation() {
        // a zigzag on the lower strand of the unknot
        let f = front("L1 L3 R2 R1");
        assert!(f.is_knot());
        assert_eq!(f.tb().unwrap(), -2);
        let o = f.orientation().unwrap();
        assert_eq!(f.rot(&o).abs(), 1);
        assert_eq!(f.rot(&o.reversed()), -f.rot(&o));
        let mu = f.maslov_potential(&o).unwrap();
        assert_eq!(mu.modulus(), 2);
        assert!(mu.is_valid_for(&f));
    }

    #[test]
    fn links_are_rejected_by_knot_operations() {
        let f = front("L1 R1 L1 R1");
        assert_eq!(f.tb(), Err(FrontError::NotAKnot(2)));
        assert!(f.orientation().is_err());
    }

    #[test]
    fn arcs_equal_cusps() {
        let f = front("L1 L1 X2 X2 X2 R1 R1");
        assert_eq!(f.arcs().unwrap().count(), f.cusps());
    }
}
