//! Slopes of curves on the 4-punctured sphere.
//!
//! Conventions (punctures 0..3, 0-based): `c_inf` encloses {2,3}, `c_0`
//! encloses {1,2}. The horizontal twist `A` is the positive half twist on
//! punctures {2,3}; it fixes `c_inf` and acts on slopes by `r -> r + 1`. The
//! vertical twist `B` is the positive half twist on {1,2}; it fixes `c_0` and
//! acts by `p/q -> p/(q - p)`. A curve of slope `p/q` meets `c_0` in `2|p|`
//! points and `c_inf` in `2|q|` points.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::Curve;

use super::ClassifyError;

/// Extended rational `p/q` with `gcd(p, q) = 1` and `q >= 0`; infinity is
/// `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", from = "[i64; 2]")]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    /// Normalizes `p/q`; panics on `0/0`.
    pub fn new(p: i64, q: i64) -> Self {
        let g = gcd(p, q);
        assert!(g != 0, "0/0 is not a slope");
        let (p, q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    pub fn is_infinite(self) -> bool {
        self.q == 0
    }

    /// Image under `A^e` (e = ±1).
    fn shift(self, e: i64) -> Self {
        Slope::new(self.p + e * self.q, self.q)
    }

    /// Image under `B^e` (e = ±1).
    fn shear(self, e: i64) -> Self {
        Slope::new(self.p, self.q - e * self.p)
    }
}

impl From<Slope> for [i64; 2] {
    fn from(s: Slope) -> Self {
        [s.p, s.q]
    }
}

impl From<[i64; 2]> for Slope {
    fn from(v: [i64; 2]) -> Self {
        Slope::new(v[0], v[1])
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            f.write_str("∞")
        } else if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

pub fn c_infinity() -> Curve {
    Curve::around_run(4, 2, 3)
}

pub fn c_zero() -> Curve {
    Curve::around_run(4, 1, 2)
}

/// Curve of slope `r` (built by twisting `c_inf` or `c_0`).
pub fn curve_of_slope(r: Slope) -> Curve {
    // Run the peeling in reverse: Euclid on (p, q) records the moves that
    // take the base curve to the target.
    let (mut p, mut q) = (r.p, r.q);
    let mut moves: Vec<(bool, i64)> = Vec::new();
    loop {
        if q == 0 {
            break;
        }
        if p == 0 {
            break;
        }
        if p.abs() >= q {
            let e = p.signum();
            p -= e * q;
            moves.push((true, e));
        } else {
            let e = -p.signum();
            q += e * p;
            moves.push((false, e));
        }
    }
    let mut c = if q == 0 { c_infinity() } else { c_zero() };
    for &(horizontal, e) in moves.iter().rev() {
        c = if horizontal { c.half_twist(2, e > 0) } else { c.half_twist(1, e > 0) };
    }
    c
}

fn complexity(c: &Curve) -> usize {
    c.crossings_on(1) + c.crossings_on(2)
}

/// Slope of an essential curve on the 4-punctured sphere, by peeling twists
/// until the curve becomes `c_inf` or `c_0`.
pub fn slope(curve: &Curve) -> Result<Slope, ClassifyError> {
    if curve.punctures() != 4 {
        return Err(ClassifyError::WrongSurface(curve.punctures()));
    }
    if !curve.is_essential() {
        return Err(ClassifyError::Inessential);
    }
    let (inf, zero) = (c_infinity(), c_zero());
    let mut c = curve.clone();
    // Moves applied to the curve, in order.
    let mut moves: Vec<(bool, i64)> = Vec::new();
    loop {
        if c == inf || c == zero {
            break;
        }
        let k = complexity(&c);
        let best = [(true, 1), (true, -1), (false, 1), (false, -1)]
            .into_iter()
            .map(|(h, e)| {
                let next = if h { c.half_twist(2, e > 0) } else { c.half_twist(1, e > 0) };
                (complexity(&next), h, e, next)
            })
            .min_by_key(|t| t.0)
            .expect("four candidates");
        if best.0 >= k {
            return Err(ClassifyError::Internal(format!("peeling stalled at {c}")));
        }
        moves.push((best.1, best.2));
        c = best.3;
    }
    let mut s = if c == inf { Slope::INFINITY } else { Slope::ZERO };
    for &(h, e) in moves.iter().rev() {
        s = if h { s.shift(-e) } else { s.shear(-e) };
    }
    Ok(s)
}
