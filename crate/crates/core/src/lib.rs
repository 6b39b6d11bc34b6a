//! Legendrian front diagrams, normal rulings and the classification tables
//! of Legendrian and transverse twist knots.
//!
//! A front is stored as a left-to-right sequence of Morse events
//! ([`Event`]): left cusps (births), right cusps (deaths) and crossings,
//! each acting on horizontal strand levels numbered from the top.
//!
//! * [`front`] validates fronts and computes `tb`, `rot`, arcs, Maslov
//!   potentials and crossing degrees.
//! * [`rulings`] counts and enumerates ρ-graded normal rulings, with a
//!   memoized sweep and a brute-force oracle.
//! * [`moves`] rewrites event words by Legendrian isotopy moves and
//!   stabilizations.
//! * [`twist`] holds the word calculus for twist knots, generates maximal
//!   fronts and assembles mountain ranges and transverse tables.
//! * [`render`] draws fronts as ASCII art or SVG.

pub mod front;
pub mod moves;
pub mod render;
pub mod report;
pub mod rulings;
pub mod twist;

pub use front::{
    ArcDecomposition, Direction, Event, EventKind, FrontDiagram, FrontError, MaslovPotential,
    Orientation, Segment,
};
pub use moves::{Move, MoveError, OrientedFront};
pub use rulings::{
    brute_force_rulings, count_rulings, enumerate_rulings, ruling_signature, Grading, PairingState,
    Ruling, RulingError, RulingSignature,
};
pub use twist::{
    Family, Letter, LetterCounts, MountainRange, NormalForm, TransverseClassification, TwistError,
    TwistWord,
};
