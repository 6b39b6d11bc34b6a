//! Twist knots `K_m`: the word calculus for maximal Legendrian
//! representatives, front generation, and the classification tables.
//!
//! For `m = -2n` a maximal representative is a word of length `2n - 2` in
//! `Z±`, `S±` with alternating signs; for `m = -2n - 1` the word has length
//! `2n - 1` and starts (and ends) with a `+` letter. For `m ≥ 0` the word is
//! `m` letters `X`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::front::{Event, FrontDiagram};
use crate::rulings::RulingSignature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("m = -1 is the unknot, which is not a member of the twist family")]
    Unknot,
    #[error("word for m = {m} must have {expected} letters, found {found}")]
    WordLength {
        m: i64,
        expected: usize,
        found: usize,
    },
    #[error("letter {letter} at position {position} is not allowed for m = {m}")]
    WrongLetter {
        m: i64,
        letter: Letter,
        position: usize,
    },
    #[error("signs must alternate (position {0})")]
    NotAlternating(usize),
    #[error("odd words must start with a + letter")]
    LeadingSign,
    #[error("malformed letter `{0}` (expected Z+, Z-, S+, S- or X)")]
    MalformedLetter(String),
    #[error("letter counts {0:?} do not fit m = {1}")]
    BadCounts(LetterCounts, i64),
    #[error("operation needs m <= -2, got m = {0}")]
    NotNegative(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    ZPlus,
    ZMinus,
    SPlus,
    SMinus,
    X,
}

impl Letter {
    /// `+1`, `-1`, or `0` for `X`.
    pub fn sign(self) -> i8 {
        match self {
            Letter::ZPlus | Letter::SPlus => 1,
            Letter::ZMinus | Letter::SMinus => -1,
            Letter::X => 0,
        }
    }

    pub fn is_z(self) -> bool {
        matches!(self, Letter::ZPlus | Letter::ZMinus)
    }

    /// Exchanges `Z` and `S`, keeping the sign.
    pub fn swapped(self) -> Self {
        match self {
            Letter::ZPlus => Letter::SPlus,
            Letter::ZMinus => Letter::SMinus,
            Letter::SPlus => Letter::ZPlus,
            Letter::SMinus => Letter::ZMinus,
            Letter::X => Letter::X,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Letter::ZPlus => Letter::ZMinus,
            Letter::ZMinus => Letter::ZPlus,
            Letter::SPlus => Letter::SMinus,
            Letter::SMinus => Letter::SPlus,
            Letter::X => Letter::X,
        }
    }

    fn with(z: bool, plus: bool) -> Self {
        match (z, plus) {
            (true, true) => Letter::ZPlus,
            (true, false) => Letter::ZMinus,
            (false, true) => Letter::SPlus,
            (false, false) => Letter::SMinus,
        }
    }

    /// Events of the letter's tangle on the band at levels `(p, p+1)`.
    fn events(self, p: usize) -> Vec<Event> {
        match self {
            Letter::ZPlus | Letter::ZMinus => {
                vec![Event::birth(p + 2), Event::crossing(p + 1), Event::death(p)]
            }
            Letter::SPlus | Letter::SMinus => {
                vec![Event::birth(p), Event::crossing(p + 1), Event::death(p + 2)]
            }
            Letter::X => vec![Event::crossing(p)],
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::ZPlus => "Z+",
            Letter::ZMinus => "Z-",
            Letter::SPlus => "S+",
            Letter::SMinus => "S-",
            Letter::X => "X",
        })
    }
}

impl FromStr for Letter {
    type Err = TwistError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z+" | "Z⁺" => Ok(Letter::ZPlus),
            "Z-" | "Z⁻" => Ok(Letter::ZMinus),
            "S+" | "S⁺" => Ok(Letter::SPlus),
            "S-" | "S⁻" => Ok(Letter::SMinus),
            "X" => Ok(Letter::X),
            _ => Err(TwistError::MalformedLetter(s.to_string())),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which part of the twist family `m` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `m = -2n`, `n ≥ 1`.
    Even { n: usize },
    /// `m = -2n - 1`, `n ≥ 1`.
    Odd { n: usize },
    /// `m ≥ 0`.
    Positive { m: usize },
}

impl Family {
    pub fn of(m: i64) -> Result<Self, TwistError> {
        match m {
            -1 => Err(TwistError::Unknot),
            m if m >= 0 => Ok(Family::Positive { m: m as usize }),
            m if m % 2 == 0 => Ok(Family::Even {
                n: (-m / 2) as usize,
            }),
            m => Ok(Family::Odd {
                n: ((-m - 1) / 2) as usize,
            }),
        }
    }

    pub fn word_len(self) -> usize {
        match self {
            Family::Even { n } => 2 * n - 2,
            Family::Odd { n } => 2 * n - 1,
            Family::Positive { m } => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct LetterCounts {
    pub z_plus: usize,
    pub z_minus: usize,
    pub s_plus: usize,
    pub s_minus: usize,
}

impl LetterCounts {
    /// Number of `Z` minus number of `S` letters; the clasp crossings of the
    /// generated front have this Maslov degree up to sign.
    pub fn clasp_value(&self) -> i64 {
        (self.z_plus + self.z_minus) as i64 - (self.s_plus + self.s_minus) as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistWord {
    m: i64,
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(m: i64, letters: Vec<Letter>) -> Result<Self, TwistError> {
        let fam = Family::of(m)?;
        let expected = fam.word_len();
        if letters.len() != expected {
            return Err(TwistError::WordLength {
                m,
                expected,
                found: letters.len(),
            });
        }
        let positive = matches!(fam, Family::Positive { .. });
        for (position, &letter) in letters.iter().enumerate() {
            if (letter == Letter::X) != positive {
                return Err(TwistError::WrongLetter {
                    m,
                    letter,
                    position,
                });
            }
        }
        if !positive {
            for k in 1..letters.len() {
                if letters[k].sign() == letters[k - 1].sign() {
                    return Err(TwistError::NotAlternating(k));
                }
            }
            if matches!(fam, Family::Odd { .. }) && letters[0].sign() < 0 {
                return Err(TwistError::LeadingSign);
            }
        }
        Ok(TwistWord { m, letters })
    }

    /// Parses space-separated letters.
    pub fn parse(m: i64, text: &str) -> Result<Self, TwistError> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>, _>>()?;
        TwistWord::new(m, letters)
    }

    /// The word with the given letter counts whose `Z` letters come first
    /// within each sign; even words start with a `+` letter.
    pub fn from_counts(m: i64, counts: LetterCounts) -> Result<Self, TwistError> {
        let fam = Family::of(m)?;
        let bad = || TwistError::BadCounts(counts, m);
        let (plus, minus) = match fam {
            Family::Even { n } => (n - 1, n - 1),
            Family::Odd { n } => (n, n - 1),
            Family::Positive { m } => {
                return if counts == LetterCounts::default() {
                    TwistWord::new(m as i64, vec![Letter::X; m])
                } else {
                    Err(bad())
                };
            }
        };
        if counts.z_plus + counts.s_plus != plus || counts.z_minus + counts.s_minus != minus {
            return Err(bad());
        }
        let mut letters = Vec::with_capacity(plus + minus);
        for k in 0..plus + minus {
            let j = k / 2;
            letters.push(if k % 2 == 0 {
                Letter::with(j < counts.z_plus, true)
            } else {
                Letter::with(j < counts.z_minus, false)
            });
        }
        TwistWord::new(m, letters)
    }

    /// A representative word for a normal form.
    pub fn from_normal_form(nf: &NormalForm) -> Self {
        let r = match *nf {
            NormalForm::Even { n, z_plus, z_minus } => TwistWord::from_counts(
                -2 * n as i64,
                LetterCounts {
                    z_plus,
                    z_minus,
                    s_plus: n - 1 - z_plus,
                    s_minus: n - 1 - z_minus,
                },
            ),
            NormalForm::Odd { n, z_minus } => TwistWord::from_counts(
                -2 * n as i64 - 1,
                LetterCounts {
                    z_plus: n,
                    z_minus,
                    s_plus: 0,
                    s_minus: n - 1 - z_minus,
                },
            ),
            NormalForm::Positive { m, .. } => TwistWord::new(m as i64, vec![Letter::X; m]),
        };
        r.expect("normal forms are in range")
    }

    /// Every valid word for `m`.
    pub fn all(m: i64) -> Result<Vec<TwistWord>, TwistError> {
        let fam = Family::of(m)?;
        if let Family::Positive { m } = fam {
            return Ok(vec![TwistWord::new(m as i64, vec![Letter::X; m])?]);
        }
        let len = fam.word_len();
        let starts: &[bool] = match fam {
            Family::Even { .. } => &[true, false],
            _ => &[true],
        };
        let mut out = Vec::new();
        for &first_plus in starts {
            for mask in 0u64..(1u64 << len) {
                let letters = (0..len)
                    .map(|k| Letter::with(mask >> k & 1 == 1, (k % 2 == 0) == first_plus))
                    .collect();
                out.push(TwistWord::new(m, letters)?);
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn family(&self) -> Family {
        Family::of(self.m).expect("validated on construction")
    }

    pub fn counts(&self) -> LetterCounts {
        let mut c = LetterCounts::default();
        for l in &self.letters {
            match l {
                Letter::ZPlus => c.z_plus += 1,
                Letter::ZMinus => c.z_minus += 1,
                Letter::SPlus => c.s_plus += 1,
                Letter::SMinus => c.s_minus += 1,
                Letter::X => {}
            }
        }
        c
    }

    /// Word of the front turned by a half rotation: letters reversed with
    /// `Z` and `S` exchanged.
    pub fn rotate180(&self) -> Self {
        TwistWord {
            m: self.m,
            letters: self.letters.iter().rev().map(|l| l.swapped()).collect(),
        }
    }

    /// Words reached by one word move: exchanging the letters two apart
    /// across any middle letter, and for even words moving the first letter
    /// to the end.
    pub fn neighbours(&self) -> Vec<TwistWord> {
        let mut out = Vec::new();
        let l = &self.letters;
        for i in 0..l.len().saturating_sub(2) {
            if l[i] != l[i + 2] {
                let mut w = l.clone();
                w.swap(i, i + 2);
                out.push(TwistWord {
                    m: self.m,
                    letters: w,
                });
            }
        }
        if matches!(self.family(), Family::Even { .. }) && !l.is_empty() {
            let mut w = l.clone();
            w.rotate_left(1);
            out.push(TwistWord {
                m: self.m,
                letters: w,
            });
        }
        out
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::from_counts(self.m, self.counts()).expect("valid word has valid counts")
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for TwistWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Closure of `w` under [`TwistWord::neighbours`].
pub fn word_moves(w: &TwistWord) -> BTreeSet<TwistWord> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for v in u.neighbours() {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Canonical label of a maximal Legendrian class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum NormalForm {
    /// `(z⁺, z⁻)`, the smaller of it and `(n-1-z⁺, n-1-z⁻)`.
    Even {
        n: usize,
        z_plus: usize,
        z_minus: usize,
    },
    /// `z⁻` after moving to `z⁺ = n`.
    Odd { n: usize, z_minus: usize },
    /// The unique class for even `m ≥ 0`; one of two (`rot = ±1`) for odd.
    Positive { m: usize, rot: i64 },
}

impl NormalForm {
    pub fn from_counts(m: i64, c: LetterCounts) -> Result<Self, TwistError> {
        match Family::of(m)? {
            Family::Even { n } => {
                if c.z_plus >= n || c.z_minus >= n {
                    return Err(TwistError::BadCounts(c, m));
                }
                let a = (c.z_plus, c.z_minus);
                let b = (n - 1 - c.z_plus, n - 1 - c.z_minus);
                let (z_plus, z_minus) = a.min(b);
                Ok(NormalForm::Even { n, z_plus, z_minus })
            }
            Family::Odd { n } => {
                if c.z_plus > n || c.z_minus >= n {
                    return Err(TwistError::BadCounts(c, m));
                }
                let s = c.z_plus + c.z_minus;
                let z_minus = if s >= n { s - n } else { n - 1 - s };
                Ok(NormalForm::Odd { n, z_minus })
            }
            Family::Positive { m } => Ok(NormalForm::Positive {
                m,
                rot: if m % 2 == 1 { -1 } else { 0 },
            }),
        }
    }

    /// Clasp degree `#Z - #S` of the canonical representative.
    pub fn clasp_value(&self) -> Option<i64> {
        match *self {
            NormalForm::Even { n, z_plus, z_minus } => {
                Some(2 * (z_plus as i64 + z_minus as i64 + 1 - n as i64))
            }
            NormalForm::Odd { z_minus, .. } => Some(2 * z_minus as i64 + 1),
            NormalForm::Positive { .. } => None,
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Even { n, z_plus, z_minus } => {
                write!(f, "m={} (z+,z-)=({z_plus},{z_minus})", -2 * *n as i64)
            }
            NormalForm::Odd { n, z_minus } => write!(f, "m={} z-={z_minus}", -2 * *n as i64 - 1),
            NormalForm::Positive { m, rot } => write!(f, "m={m} rot={rot}"),
        }
    }
}

/// Maximal front of `K_m` for the word `w`.
///
/// Negative `m`: two left cusps open the clasp, the letters sit on the band
/// at levels 3 and 4, and the clasp closes with one more crossing. Positive
/// `m`: three nested left cusps, `m` crossings on the band at levels 4 and
/// 5, then the clasp.
pub fn generate_front(m: i64, w: &TwistWord) -> Result<FrontDiagram, TwistError> {
    if w.m != m {
        return Err(TwistError::WordLength {
            m,
            expected: Family::of(m)?.word_len(),
            found: w.letters.len(),
        });
    }
    let mut ev = Vec::new();
    match w.family() {
        Family::Even { .. } | Family::Odd { .. } => {
            ev.extend([
                Event::birth(1),
                Event::birth(3),
                Event::crossing(2),
                Event::crossing(2),
            ]);
            for l in &w.letters {
                ev.extend(l.events(3));
            }
            ev.extend([Event::crossing(2), Event::death(1), Event::death(1)]);
        }
        Family::Positive { .. } => {
            ev.extend([Event::birth(1), Event::birth(1), Event::birth(1)]);
            for l in &w.letters {
                ev.extend(l.events(4));
            }
            ev.extend([
                Event::crossing(2),
                Event::death(3),
                Event::crossing(2),
                Event::death(1),
                Event::death(1),
            ]);
        }
    }
    Ok(FrontDiagram::new(ev).expect("templates are legal"))
}

/// Maximal Thurston–Bennequin number of `K_m`.
pub fn max_tb(m: i64) -> i64 {
    match m {
        -1 => -1,
        m if m >= 0 && m % 2 == 0 => -m - 1,
        m if m >= 0 => -m - 5,
        m if m % 2 == 0 => 1,
        _ => -3,
    }
}

/// Rotation numbers of the maximal classes.
pub fn peak_rotations(m: i64) -> Vec<i64> {
    if m >= 1 && m % 2 == 1 {
        vec![-1, 1]
    } else {
        vec![0]
    }
}

/// Number of maximal classes and their canonical labels.
pub fn classes_at_max_tb(m: i64) -> Result<(usize, Vec<NormalForm>), TwistError> {
    let forms: Vec<NormalForm> = match Family::of(m)? {
        Family::Even { n } => {
            let mut set = BTreeSet::new();
            for a in 0..n {
                for b in 0..n {
                    let c = LetterCounts {
                        z_plus: a,
                        z_minus: b,
                        s_plus: n - 1 - a,
                        s_minus: n - 1 - b,
                    };
                    set.insert(NormalForm::from_counts(m, c)?);
                }
            }
            set.into_iter().collect()
        }
        Family::Odd { n } => {
            let mut set = BTreeSet::new();
            for a in 0..=n {
                for b in 0..n {
                    let c = LetterCounts {
                        z_plus: a,
                        z_minus: b,
                        s_plus: n - a,
                        s_minus: n - 1 - b,
                    };
                    set.insert(NormalForm::from_counts(m, c)?);
                }
            }
            set.into_iter().collect()
        }
        Family::Positive { m } => peak_rotations(m as i64)
            .into_iter()
            .map(|rot| NormalForm::Positive { m, rot })
            .collect(),
    };
    Ok((forms.len(), forms))
}

/// Classes at the point reached from a maximal class by `p` positive and
/// `q` negative stabilizations.
pub fn stab_classes(m: i64, p: usize, q: usize) -> Result<usize, TwistError> {
    Ok(match Family::of(m)? {
        Family::Even { n } => match (p, q) {
            (0, 0) => classes_at_max_tb(m)?.0,
            (_, 0) | (0, _) => {
                // stabilizations of one sign leave one letter count as the
                // label, taken up to z ↦ n - 1 - z
                (0..n)
                    .map(|z| z.min(n - 1 - z))
                    .collect::<BTreeSet<_>>()
                    .len()
            }
            _ => 1,
        },
        Family::Odd { n } => {
            if (p, q) == (0, 0) {
                n
            } else {
                1
            }
        }
        Family::Positive { .. } => 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StabEdge {
    pub from: (i64, i64),
    pub to: (i64, i64),
    /// `+1` for a positive stabilization, `-1` for a negative one.
    pub sign: i8,
}

/// Class counts on the `(rot, tb)` lattice within `radius` of the peaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MountainRange {
    pub m: i64,
    pub radius: usize,
    pub peaks: Vec<(i64, i64)>,
    pub counts: BTreeMap<(i64, i64), usize>,
    pub edges: Vec<StabEdge>,
}

pub const DEFAULT_RADIUS: usize = 4;

pub fn mountain_range(m: i64, radius: usize) -> Result<MountainRange, TwistError> {
    Family::of(m)?;
    let top = max_tb(m);
    let peaks: Vec<(i64, i64)> = peak_rotations(m).into_iter().map(|r| (r, top)).collect();
    let r = radius as i64;
    let mut counts: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &(r0, _) in &peaks {
        for p in 0..=radius {
            for q in 0..=radius - p {
                let pt = (r0 + p as i64 - q as i64, top - (p + q) as i64);
                if pt.0.abs() > r {
                    continue;
                }
                let c = stab_classes(m, p, q)?;
                // two peaks reaching the same point meet in one class
                let e = counts.entry(pt).or_insert(c);
                if peaks.len() > 1 && (p, q) != (0, 0) {
                    *e = 1;
                }
            }
        }
    }
    let mut edges = Vec::new();
    for &(rot, tb) in counts.keys() {
        for sign in [1i8, -1] {
            let to = (rot + sign as i64, tb - 1);
            if counts.contains_key(&to) {
                edges.push(StabEdge {
                    from: (rot, tb),
                    to,
                    sign,
                });
            }
        }
    }
    Ok(MountainRange {
        m,
        radius,
        peaks,
        counts,
        edges,
    })
}

impl MountainRange {
    pub fn count(&self, rot: i64, tb: i64) -> Option<usize> {
        self.counts.get(&(rot, tb)).copied()
    }

    /// Counts keyed by `"(rot,tb)"`.
    pub fn keyed_counts(&self) -> BTreeMap<String, usize> {
        self.counts
            .iter()
            .map(|(&(r, t), &c)| (format!("({r},{t})"), c))
            .collect()
    }
}

impl Serialize for MountainRange {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MountainRange", 5)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("radius", &self.radius)?;
        st.serialize_field("peaks", &self.peaks)?;
        st.serialize_field("counts", &self.keyed_counts())?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransverseClassification {
    pub m: i64,
    pub max_sl: i64,
    pub classes_at_max: usize,
    pub simple: bool,
    /// Set when the class count contradicts the stated nonsimplicity.
    pub flag: Option<String>,
}

/// Maximal self-linking number and transverse class count at it.
pub fn transverse_classes(m: i64) -> TransverseClassification {
    let max_sl = match m {
        -1 => -1,
        m if m >= -2 && m % 2 == 0 => -m - 1,
        m if m > -1 => -m - 4,
        m if m % 2 == 0 => 1,
        _ => -3,
    };
    let (classes_at_max, flag) = if m <= -4 && m % 2 == 0 {
        let n = (-m / 2) as usize;
        let c = n.div_ceil(2);
        let flag = (c == 1).then(|| {
            format!(
                "m = {m}: the class count at maximal sl is 1, so K_m is transversely simple at sl = {max_sl} even though the family m <= -4 even is stated nonsimple"
            )
        });
        (c, flag)
    } else {
        (1, None)
    };
    TransverseClassification {
        m,
        max_sl,
        classes_at_max,
        simple: classes_at_max == 1,
        flag,
    }
}

/// Ruling signature predicted for maximal fronts of `K_m` from the letter
/// counts: two rulings when `ρ` divides the clasp degree, one otherwise.
/// `m = -2` is the trefoil, whose front has three rulings for every `ρ`.
pub fn predicted_signature(m: i64, counts: LetterCounts) -> Result<RulingSignature, TwistError> {
    let fam = Family::of(m)?;
    if m > -2 {
        return Err(TwistError::NotNegative(m));
    }
    // validates the counts
    TwistWord::from_counts(m, counts)?;
    let v = counts.clasp_value();
    let top = v.unsigned_abs().max(1);
    let mut map = BTreeMap::new();
    for rho in 0..=top {
        let c = if fam == (Family::Even { n: 1 }) {
            3
        } else if (rho == 0 && v == 0) || (rho > 0 && v % rho as i64 == 0) {
            2
        } else {
            1
        };
        map.insert(rho, c);
    }
    Ok(RulingSignature::from_counts(0, map))
}
