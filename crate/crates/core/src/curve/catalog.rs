//! Fixed reference objects on the 6-punctured sphere.

use super::twist::Elementary;
use super::{ArcCode, Curve, CurveError, Hemisphere, PUNCTURES};

const fn e(pair: u8, positive: bool) -> Elementary {
    Elementary { pair, positive }
}

// Supports are written `h(D_j)`, `h` listed first-acting-first, `D_j` the
// disk around segment `j`. The pair `C_1, C_2` is chosen so that `d1 d2^-1`
// extends over the trivial tangle; `E_4'` bounds a disk in the complement,
// so `d3` extends on its own.

/// `C_1`: the disk around punctures {2,3}.
pub(crate) const DELTA1_SUPPORT: (&[Elementary], u8) = (&[], 1);
/// `C_2`: a disk around punctures {1,4}, crossing `g1`, `g3`, `g4`, `g6`.
pub(crate) const DELTA2_SUPPORT: (&[Elementary], u8) = (&[e(0, true), e(2, false)], 1);
/// `E_4'`: a disk around {1,2} that reaches over the segment `g2`.
pub(crate) const DELTA3_SUPPORT: (&[Elementary], u8) = (&[e(0, false), e(2, true), e(2, true), e(1, true)], 1);

/// Boundary of the disk `E_i'` (`i` in 1..=3), enclosing punctures
/// `2i-1, 2i`.
pub fn disk_boundary(i: u8) -> Curve {
    assert!((1..=3).contains(&i), "disk index out of range");
    Curve::around_run(PUNCTURES, 2 * i - 2, 2 * i - 1)
}

/// Curve enclosing the 1-based punctures `a..=b` (counter-clockwise run).
pub fn run_curve(a: u8, b: u8) -> Curve {
    Curve::around_run(PUNCTURES, a - 1, b - 1)
}

/// The arc from puncture 2 to puncture 5 through the upper hemisphere.
pub fn arc_2_5() -> ArcCode {
    ArcCode::new(PUNCTURES, 1, 4, Hemisphere::Upper, &[]).expect("valid arc")
}

/// Boundary of a support disk of `d1`, `d2` or `d3` (`i` in 1..=3).
pub fn delta_support(i: u8) -> Curve {
    let (h, j) = match i {
        1 => DELTA1_SUPPORT,
        2 => DELTA2_SUPPORT,
        3 => DELTA3_SUPPORT,
        _ => panic!("delta index out of range"),
    };
    let base = Curve::around_run(PUNCTURES, j, (j + 1) % PUNCTURES);
    Curve::from_raw(PUNCTURES, &super::twist::apply_elementary(PUNCTURES, base.crossings(), h))
}

/// A catalogued object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reference {
    Curve(Curve),
    Arc(ArcCode),
}

/// Looks up a reference object by name: `E1`, `E2`, `E3` (disk boundaries),
/// `A` (around {2,3}), `B` (around {4,5}), `C1`, `C2`, `E4`, `l25`.
pub fn reference(name: &str) -> Result<Reference, CurveError> {
    Ok(match name {
        "E1" => Reference::Curve(disk_boundary(1)),
        "E2" => Reference::Curve(disk_boundary(2)),
        "E3" => Reference::Curve(disk_boundary(3)),
        "A" => Reference::Curve(run_curve(2, 3)),
        "B" => Reference::Curve(run_curve(4, 5)),
        "C1" => Reference::Curve(delta_support(1)),
        "C2" => Reference::Curve(delta_support(2)),
        "E4" => Reference::Curve(delta_support(3)),
        "l25" => Reference::Arc(arc_2_5()),
        other => return Err(CurveError::UnknownReference(other.to_string())),
    })
}
