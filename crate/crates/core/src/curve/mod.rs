//! Simple closed curves and arcs on a sphere with punctures on an equator.
//!
//! Punctures `0..n` sit counter-clockwise on the equator circle; segment `s`
//! is the open equator arc from puncture `s` to puncture `s + 1 (mod n)`.
//! Public puncture labels are 1-based (`1..=n`), segment `s` is printed as
//! `g_{s+1}`.

mod arc;
mod band;
pub mod catalog;
mod code;
mod intersect;
pub(crate) mod path;
mod twist;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arc::{ArcCode, Side};
pub use band::BandSpec;
pub use code::{ChordDiagram, Reduction, CODE_FORMAT};
pub use twist::{Generator, PuncturePermutation, TwistLetter, TwistWord};

/// Default number of punctures.
pub const PUNCTURES: u8 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Hemisphere {
    #[serde(rename = "U")]
    Upper,
    #[serde(rename = "L")]
    Lower,
}

impl Hemisphere {
    pub fn other(self) -> Self {
        match self {
            Hemisphere::Upper => Hemisphere::Lower,
            Hemisphere::Lower => Hemisphere::Upper,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("malformed code: {0}")]
    Malformed(String),
    #[error("expected a single curve, found {0} components")]
    NotSingleCurve(usize),
    #[error("curves intersect")]
    Intersecting,
    #[error("curves are parallel")]
    Parallel,
    #[error("invalid band: {0}")]
    InvalidBand(String),
    #[error("unknown reference `{0}`")]
    UnknownReference(String),
    #[error("puncture count mismatch: {0} vs {1}")]
    PunctureMismatch(u8, u8),
}

/// An isotopy class of simple closed curve, stored as its reduced crossing
/// sequence in canonical rotation. The empty sequence is the trivial class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    punctures: u8,
    seq: Vec<u8>,
}

impl Curve {
    /// Builds a curve from a closed crossing sequence (first letter downward).
    /// The sequence is reduced, so the input may contain bigons.
    pub fn from_crossings(punctures: u8, crossings: &[u8]) -> Result<Self, CurveError> {
        if punctures < 3 {
            return Err(CurveError::Malformed("need at least 3 punctures".into()));
        }
        if crossings.len() % 2 != 0 {
            return Err(CurveError::Malformed("odd number of crossings".into()));
        }
        if let Some(&s) = crossings.iter().find(|&&s| s >= punctures) {
            return Err(CurveError::Malformed(format!("segment {s} out of range")));
        }
        Ok(Self::from_raw(punctures, crossings))
    }

    pub(crate) fn from_raw(punctures: u8, crossings: &[u8]) -> Self {
        let reduced = path::reduce_cyclic(crossings);
        Curve { punctures, seq: path::canonical_rotation(&reduced) }
    }

    /// Curve around the punctures `first..=last` (0-based, counter-clockwise,
    /// wrapping allowed).
    pub fn around_run(punctures: u8, first: u8, last: u8) -> Self {
        let before = (first + punctures - 1) % punctures;
        Self::from_raw(punctures, &[before, last])
    }

    pub fn punctures(&self) -> u8 {
        self.punctures
    }

    /// Reduced crossing sequence in canonical rotation.
    pub fn crossings(&self) -> &[u8] {
        &self.seq
    }

    pub fn crossing_count(&self) -> usize {
        self.seq.len()
    }

    pub fn crossings_on(&self, segment: u8) -> usize {
        self.seq.iter().filter(|&&s| s == segment).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.seq.is_empty()
    }

    /// Bounds a once-punctured disk.
    pub fn is_peripheral(&self) -> bool {
        if self.seq.len() != 2 {
            return false;
        }
        let r = path::ccw_rank(self.punctures, self.seq[0], self.seq[1]);
        r == 1 || r == self.punctures - 1
    }

    pub fn is_essential(&self) -> bool {
        !self.is_trivial() && !self.is_peripheral()
    }

    /// Side of each puncture (0-based): `false` for the side of puncture 0.
    pub fn puncture_sides(&self) -> Vec<bool> {
        let mut side = false;
        let mut out = Vec::with_capacity(self.punctures as usize);
        for j in 0..self.punctures {
            out.push(side);
            if self.crossings_on(j) % 2 == 1 {
                side = !side;
            }
        }
        out
    }

    /// The two complementary puncture sets (1-based labels). The smaller set
    /// comes first; on a tie the set containing puncture 1 comes first.
    pub fn enclosed_punctures(&self) -> (Vec<u8>, Vec<u8>) {
        let sides = self.puncture_sides();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (j, &s) in sides.iter().enumerate() {
            if s {
                b.push(j as u8 + 1);
            } else {
                a.push(j as u8 + 1);
            }
        }
        if b.len() < a.len() {
            (b, a)
        } else {
            (a, b)
        }
    }

}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.seq.iter().map(|s| format!("g{}", s + 1)).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// A multicurve: an unordered collection of pairwise disjoint simple closed
/// curves, none of them trivial. Parallel copies are kept with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquatorialCode {
    punctures: u8,
    components: Vec<Curve>,
}

impl EquatorialCode {
    pub fn empty(punctures: u8) -> Self {
        EquatorialCode { punctures, components: Vec::new() }
    }

    /// Collects curves into a multicurve, dropping trivial ones. Disjointness
    /// is the caller's responsibility; [`EquatorialCode::layout`] checks it.
    pub fn from_curves(punctures: u8, curves: impl IntoIterator<Item = Curve>) -> Self {
        let mut components: Vec<Curve> = curves.into_iter().filter(|c| !c.is_trivial()).collect();
        components.sort();
        EquatorialCode { punctures, components }
    }

    pub fn punctures(&self) -> u8 {
        self.punctures
    }

    pub fn components(&self) -> &[Curve] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_simple_closed_curve(&self) -> bool {
        self.components.len() == 1
    }

    pub fn single(&self) -> Result<&Curve, CurveError> {
        match self.components.as_slice() {
            [c] => Ok(c),
            other => Err(CurveError::NotSingleCurve(other.len())),
        }
    }

    pub fn into_single(mut self) -> Result<Curve, CurveError> {
        if self.components.len() == 1 {
            Ok(self.components.pop().expect("one component"))
        } else {
            Err(CurveError::NotSingleCurve(self.components.len()))
        }
    }

    pub fn apply_word(&self, word: &TwistWord) -> Self {
        Self::from_curves(self.punctures, self.components.iter().map(|c| c.apply_word(word)))
    }
}

impl From<Curve> for EquatorialCode {
    fn from(c: Curve) -> Self {
        EquatorialCode::from_curves(c.punctures, [c])
    }
}
