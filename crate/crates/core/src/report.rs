//! Serializable reports shared by the CLI and the tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::front::FrontDiagram;
use crate::rulings::{enumerate_graded, Grading, RulingError, RulingSignature};
use crate::twist::{
    classes_at_max_tb, max_tb, mountain_range, stab_classes, transverse_classes, MountainRange,
    NormalForm, TransverseClassification, TwistError, TwistWord,
};

/// Classical invariants; `tb` and `rot` are `None` for links.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub tb: Option<i64>,
    pub rot: Option<i64>,
    pub components: usize,
    pub cusps: usize,
    pub crossings: usize,
}

impl InvariantReport {
    pub fn of(front: &FrontDiagram) -> Self {
        let knot = front.is_knot();
        InvariantReport {
            tb: knot.then(|| front.tb().expect("knot")),
            rot: knot.then(|| front.rot_default().expect("knot")),
            components: front.component_count(),
            cusps: front.cusps(),
            crossings: front.crossings(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RulingReport {
    pub rho: u64,
    pub count: u64,
    /// Switch positions (0-based event indices) of each ruling.
    pub rulings: Vec<Vec<usize>>,
}

impl RulingReport {
    /// Rulings for one `ρ`, rejecting `ρ` that does not divide `2|rot|`.
    pub fn of(front: &FrontDiagram, rho: u64) -> Result<Self, RulingError> {
        let g = Grading::checked(front, rho)?;
        let rulings: Vec<Vec<usize>> = enumerate_graded(front, &g)
            .into_iter()
            .map(|r| r.switches)
            .collect();
        Ok(RulingReport {
            rho,
            count: rulings.len() as u64,
            rulings,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub normal_form: NormalForm,
    pub word: TwistWord,
    pub rot: i64,
    /// `#Z - #S` of the representative word (`None` for `m ≥ 0`).
    pub clasp_degree: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasReport {
    pub m: i64,
    pub max_tb: i64,
    pub classes: Vec<ClassEntry>,
    pub mountain_range: BTreeMap<String, usize>,
    pub transverse: TransverseClassification,
    #[serde(skip)]
    pub range: MountainRange,
}

impl AtlasReport {
    pub fn new(m: i64, radius: usize) -> Result<Self, TwistError> {
        let (_, forms) = classes_at_max_tb(m)?;
        let classes = forms
            .into_iter()
            .map(|nf| {
                let word = TwistWord::from_normal_form(&nf);
                let rot = match nf {
                    NormalForm::Positive { rot, .. } => rot,
                    _ => 0,
                };
                ClassEntry {
                    clasp_degree: nf.clasp_value(),
                    normal_form: nf,
                    word,
                    rot,
                }
            })
            .collect();
        let range = mountain_range(m, radius)?;
        Ok(AtlasReport {
            m,
            max_tb: max_tb(m),
            classes,
            mountain_range: range.keyed_counts(),
            transverse: transverse_classes(m),
            range,
        })
    }

    /// Plain-text version: class list, mountain range grid, transverse row.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "K_{}   max tb = {}   classes at max tb = {}",
            self.m,
            self.max_tb,
            self.classes.len()
        );
        let _ = writeln!(s);
        let _ = writeln!(s, "{:<28} {:>4} {:>6}  word", "class", "rot", "clasp");
        for c in &self.classes {
            let clasp = c.clasp_degree.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(
                s,
                "{:<28} {:>4} {:>6}  {}",
                c.normal_form.to_string(),
                c.rot,
                clasp,
                c.word
            );
        }
        let _ = writeln!(s);
        s.push_str(&self.range.to_table());
        let _ = writeln!(s);
        let t = &self.transverse;
        let _ = writeln!(
            s,
            "transverse: max sl = {}   classes at max sl = {}   simple = {}",
            t.max_sl, t.classes_at_max, t.simple
        );
        if let Some(flag) = &t.flag {
            let _ = writeln!(s, "note: {flag}");
        }
        s
    }
}

impl MountainRange {
    /// Grid of class counts, one row per `tb` (top row maximal), one column
    /// per `rot`; `.` marks points not realized.
    pub fn to_table(&self) -> String {
        let r = self.radius as i64;
        let top = self.peaks.iter().map(|p| p.1).max().unwrap_or(0);
        let mut s = String::new();
        let _ = write!(s, "{:>6} |", "tb\\rot");
        for rot in -r..=r {
            let _ = write!(s, "{rot:>4}");
        }
        s.push('\n');
        let _ = writeln!(s, "{}", "-".repeat(8 + 4 * (2 * r as usize + 1)));
        for tb in (top - r..=top).rev() {
            let _ = write!(s, "{tb:>6} |");
            for rot in -r..=r {
                match self.count(rot, tb) {
                    Some(c) => {
                        let _ = write!(s, "{c:>4}");
                    }
                    None => s.push_str("   ."),
                }
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassesReport {
    pub m: i64,
    pub positive_stabilizations: usize,
    pub negative_stabilizations: usize,
    pub count: usize,
    /// Canonical labels, listed only at the maximal point.
    pub representatives: Vec<NormalForm>,
}

impl ClassesReport {
    pub fn new(m: i64, pos: usize, neg: usize) -> Result<Self, TwistError> {
        let count = stab_classes(m, pos, neg)?;
        let representatives = if (pos, neg) == (0, 0) {
            classes_at_max_tb(m)?.1
        } else {
            Vec::new()
        };
        Ok(ClassesReport {
            m,
            positive_stabilizations: pos,
            negative_stabilizations: neg,
            count,
            representatives,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureReport {
    pub rot: i64,
    pub signature: RulingSignature,
}
