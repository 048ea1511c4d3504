//! Ground truth for disk bounding in the complement of the trivial tangle.
//!
//! The complement of three boundary-parallel strands in the ball is a genus
//! three handlebody whose fundamental group is free on the meridians
//! `x_1, x_2, x_3` of the strands. The loop around puncture `2i-1` is `x_i`
//! and the loop around puncture `2i` is `x_i^-1` (the two ends of strand `i`
//! with the boundary orientation). By Dehn's lemma a simple closed curve on
//! the boundary bounds a disk in the handlebody exactly when it is
//! null-homotopic there.

use std::fmt;

use crate::curve::catalog::disk_boundary;
use crate::curve::{Curve, TwistWord};

/// Freely and cyclically reduced word in `x_1, x_2, x_3`. Letter `+i` is
/// `x_i`, `-i` is `x_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<i8>);

impl FreeWord {
    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent sum of generator `x_i`.
    pub fn exponent_sum(&self, i: i8) -> i32 {
        self.0.iter().map(|&l| if l == i { 1 } else if l == -i { -1 } else { 0 }).sum()
    }

    fn reduced(letters: impl IntoIterator<Item = i8>) -> Self {
        let mut out: Vec<i8> = Vec::new();
        for l in letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        let mut lo = 0;
        let mut hi = out.len();
        while hi - lo >= 2 && out[lo] == -out[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord(out[lo..hi].to_vec())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Meridian word of a curve, up to conjugacy. Each lower-hemisphere passage
/// from `g_a` to `g_b` is the product of the puncture loops `a+1, ..., b`
/// taken counter-clockwise (0-based).
pub fn curve_to_word(curve: &Curve) -> FreeWord {
    let n = curve.punctures();
    let seq = curve.crossings();
    let mut letters = Vec::new();
    for pair in seq.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        let mut k = (a + 1) % n;
        loop {
            let strand = (k / 2 + 1) as i8;
            letters.push(if k % 2 == 0 { strand } else { -strand });
            if k == b {
                break;
            }
            k = (k + 1) % n;
        }
    }
    FreeWord::reduced(letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiskVerdict {
    Bounds,
    DoesNotBound,
    /// The curve bounds a disk or once-punctured disk on the sphere itself.
    Inessential,
}

pub fn disk_verdict(curve: &Curve) -> DiskVerdict {
    if !curve.is_essential() {
        DiskVerdict::Inessential
    } else if curve_to_word(curve).is_empty() {
        DiskVerdict::Bounds
    } else {
        DiskVerdict::DoesNotBound
    }
}

/// True iff the curve is essential on the sphere and bounds a disk in the
/// trivial-tangle complement.
pub fn bounds_disk_oracle(curve: &Curve) -> bool {
    disk_verdict(curve) == DiskVerdict::Bounds
}

/// Decides whether the tangles `wF(trivial)` and `wG(trivial)` are isotopic
/// by checking that `wG^-1 wF` carries two disk boundaries to bounding curves.
pub fn tangles_isotopic_oracle(w_f: &TwistWord, w_g: &TwistWord) -> bool {
    let u = w_f.then(&w_g.inverse());
    bounds_disk_oracle(&disk_boundary(1).apply_word(&u)) && bounds_disk_oracle(&disk_boundary(2).apply_word(&u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::catalog::run_curve;
    use crate::curve::Generator;

    #[test]
    fn disk_boundaries_bound() {
        for i in 1..=3 {
            assert!(curve_to_word(&disk_boundary(i)).is_empty());
            assert!(bounds_disk_oracle(&disk_boundary(i)));
        }
        assert!(curve_to_word(&run_curve(1, 4)).is_empty());
    }

    #[test]
    fn mixed_pair_does_not_bound() {
        let w = curve_to_word(&run_curve(2, 3));
        assert_eq!(w.letters(), &[-1, 2]);
        assert!(!bounds_disk_oracle(&run_curve(2, 3)));
        let s = disk_boundary(1).apply(Generator::Sigma1, true);
        assert!(!bounds_disk_oracle(&s));
    }

    #[test]
    fn peripheral_is_inessential() {
        assert_eq!(disk_verdict(&run_curve(3, 3)), DiskVerdict::Inessential);
    }

    #[test]
    fn tangle_oracle_basics() {
        let id = TwistWord::identity();
        let s3 = TwistWord::single(Generator::Sigma3, true);
        let s1 = TwistWord::single(Generator::Sigma1, true);
        assert!(tangles_isotopic_oracle(&id, &id));
        assert!(tangles_isotopic_oracle(&s3, &id));
        assert!(!tangles_isotopic_oracle(&s1, &id));
    }
}
