use std::fmt;

use serde::{Serialize, Serializer};

/// Fixed-point-free involution on the strand levels of one column:
/// `partner(a)` is the level paired with `a` by the ruling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairingState {
    // 0-based partner of each 0-based level
    partner: Vec<u16>,
}

impl PairingState {
    pub fn empty() -> Self {
        PairingState {
            partner: Vec::new(),
        }
    }

    /// Builds a state from 1-based partners; `None` if not a fixed-point-free
    /// involution.
    pub fn from_partners(partners: &[usize]) -> Option<Self> {
        let k = partners.len();
        let partner: Vec<u16> = partners
            .iter()
            .map(|&p| p.checked_sub(1).filter(|&q| q < k).map(|q| q as u16))
            .collect::<Option<_>>()?;
        let st = PairingState { partner };
        st.is_valid().then_some(st)
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// 1-based partner of the 1-based `level`.
    pub fn partner(&self, level: usize) -> usize {
        self.partner[level - 1] as usize + 1
    }

    pub fn is_valid(&self) -> bool {
        self.partner.iter().enumerate().all(|(a, &b)| {
            let b = b as usize;
            b != a && b < self.partner.len() && self.partner[b] as usize == a
        })
    }

    /// Left cusp at `i`: levels `>= i` move down by two and `(i, i+1)` pair up.
    pub(crate) fn birth(&self, i: usize) -> Self {
        let i0 = i - 1;
        let shift = |x: u16| if (x as usize) < i0 { x } else { x + 2 };
        let mut partner = Vec::with_capacity(self.partner.len() + 2);
        partner.extend(self.partner[..i0].iter().map(|&x| shift(x)));
        partner.push(i0 as u16 + 1);
        partner.push(i0 as u16);
        partner.extend(self.partner[i0..].iter().map(|&x| shift(x)));
        PairingState { partner }
    }

    /// Right cusp at `i`; only possible when `i` and `i+1` are paired.
    pub(crate) fn death(&self, i: usize) -> Option<Self> {
        if self.partner(i) != i + 1 {
            return None;
        }
        let i0 = i - 1;
        let shift = |x: u16| if (x as usize) < i0 { x } else { x - 2 };
        let partner = self.partner[..i0]
            .iter()
            .chain(&self.partner[i0 + 2..])
            .map(|&x| shift(x))
            .collect();
        Some(PairingState { partner })
    }

    /// Crossing at `i` that is not a switch: the paths cross, so the pairing
    /// is conjugated by the transposition `(i, i+1)`. Companion strands may
    /// not cross.
    pub(crate) fn pass(&self, i: usize) -> Option<Self> {
        if self.partner(i) == i + 1 {
            return None;
        }
        let (a, b) = ((i - 1) as u16, i as u16);
        let sw = |x: u16| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let mut partner = self.partner.clone();
        partner.swap(a as usize, b as usize);
        for x in partner.iter_mut() {
            *x = sw(*x);
        }
        Some(PairingState { partner })
    }

    /// Normality at a switch on `(i, i+1)`: with `a = π(i)` and `b = π(i+1)`
    /// the two eyes must be disjoint (`a < i`, `b > i+1`) or nested
    /// (`b < a < i` or `i+1 < b < a`).
    pub fn switch_is_normal(&self, i: usize) -> bool {
        let a = self.partner(i);
        let b = self.partner(i + 1);
        (b < a && a < i) || (a < i && b > i + 1) || (i + 1 < b && b < a)
    }

    /// 1-based partners.
    pub fn partners(&self) -> Vec<usize> {
        self.partner.iter().map(|&x| x as usize + 1).collect()
    }
}

impl fmt::Display for PairingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        for a in 1..=self.len() {
            let b = self.partner(a);
            if a < b {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{a}-{b}")?;
                first = false;
            }
        }
        f.write_str("]")
    }
}

impl Serialize for PairingState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.partners().serialize(s)
    }
}
