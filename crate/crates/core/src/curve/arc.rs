//! Arcs between two punctures.

use serde::{Deserialize, Serialize};

use super::path::{reduce_cyclic, reduce_linear};
use super::{Curve, CurveError, Hemisphere};

/// Which side of an oriented arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A properly embedded arc from puncture `from` to puncture `to` (0-based),
/// leaving `from` into hemisphere `start` and crossing the listed segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcCode {
    punctures: u8,
    from: u8,
    to: u8,
    start: Hemisphere,
    crossings: Vec<u8>,
}

fn adjacent(n: u8, puncture: u8, segment: u8) -> bool {
    segment == puncture || (segment + 1) % n == puncture
}

impl ArcCode {
    pub fn new(punctures: u8, from: u8, to: u8, start: Hemisphere, crossings: &[u8]) -> Result<Self, CurveError> {
        if from >= punctures || to >= punctures || from == to {
            return Err(CurveError::Malformed("arc endpoints must be two distinct punctures".into()));
        }
        if crossings.iter().any(|&s| s >= punctures) {
            return Err(CurveError::Malformed("segment out of range".into()));
        }
        let mut start = start;
        let mut c = reduce_linear(crossings);
        // Half-bigons next to an endpoint slide off.
        loop {
            let before = c.len();
            c = reduce_linear(&c);
            if let Some(&first) = c.first() {
                if adjacent(punctures, from, first) {
                    c.remove(0);
                    start = start.other();
                }
            }
            if let Some(&last) = c.last() {
                if adjacent(punctures, to, last) {
                    c.pop();
                }
            }
            if c.len() == before {
                break;
            }
        }
        Ok(ArcCode { punctures, from, to, start, crossings: c })
    }

    pub fn from(&self) -> u8 {
        self.from
    }

    pub fn to(&self) -> u8 {
        self.to
    }

    pub fn crossings(&self) -> &[u8] {
        &self.crossings
    }

    pub fn start(&self) -> Hemisphere {
        self.start
    }

    /// Hemisphere in which the arc arrives at `to`.
    pub fn end(&self) -> Hemisphere {
        if self.crossings.len() % 2 == 0 {
            self.start
        } else {
            self.start.other()
        }
    }

    /// Boundary of a regular neighbourhood: the curve enclosing exactly the
    /// two endpoints along the arc.
    pub fn boundary(&self) -> Curve {
        let n = self.punctures;
        let around = |p: u8, h: Hemisphere| -> [u8; 2] {
            let before = (p + n - 1) % n;
            match h {
                Hemisphere::Upper => [before, p],
                Hemisphere::Lower => [p, before],
            }
        };
        let mut seq = Vec::with_capacity(2 * self.crossings.len() + 4);
        seq.extend_from_slice(&around(self.from, self.start));
        seq.extend_from_slice(&self.crossings);
        seq.extend_from_slice(&around(self.to, self.end()));
        seq.extend(self.crossings.iter().rev());
        if self.start == Hemisphere::Lower {
            seq.rotate_left(1);
        }
        Curve::from_raw(n, &reduce_cyclic(&seq))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chord_boundary_encloses_endpoints() {
        let a = ArcCode::new(6, 1, 4, Hemisphere::Upper, &[]).unwrap();
        let b = a.boundary();
        assert_eq!(b.enclosed_punctures().0, vec![2, 5]);
        assert_eq!(b.crossing_count(), 4);
    }

    #[test]
    fn adjacent_chord_gives_pair_curve() {
        let a = ArcCode::new(6, 0, 1, Hemisphere::Lower, &[]).unwrap();
        assert_eq!(a.boundary(), Curve::from_crossings(6, &[5, 1]).unwrap());
    }

    #[test]
    fn endpoint_half_bigons_slide_off() {
        let a = ArcCode::new(6, 1, 4, Hemisphere::Upper, &[1]).unwrap();
        assert!(a.crossings().is_empty());
        assert_eq!(a.start(), Hemisphere::Lower);
    }

    #[test]
    fn hemisphere_choice_matters() {
        let u = ArcCode::new(6, 1, 4, Hemisphere::Upper, &[]).unwrap().boundary();
        let l = ArcCode::new(6, 1, 4, Hemisphere::Lower, &[]).unwrap().boundary();
        assert_ne!(u, l);
        assert_eq!(u.intersection(&l), 4);
    }
}
