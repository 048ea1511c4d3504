//! Geometric intersection numbers.
//!
//! Reduced crossing sequences are geodesics in the tree covering the graph
//! dual to the hemispheres. Two curves meet once for every pair of lifts whose
//! ends interleave at infinity, and every such pair either passes through a
//! common hemisphere vertex only or shares a maximal run of segments.

use super::path::{first_is_more_ccw, interleaved};
use super::{ArcCode, Curve};

fn at(seq: &[u8], i: isize) -> u8 {
    let n = seq.len() as isize;
    seq[i.rem_euclid(n) as usize]
}

fn vertex_crossings(n: u8, a: &[u8], b: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..a.len() {
        let (a0, a1) = (a[i], at(a, i as isize + 1));
        for j in (i % 2..b.len()).step_by(2) {
            let (b0, b1) = (b[j], at(b, j as isize + 1));
            if a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1 {
                continue;
            }
            if interleaved(n, a0, a1, b0, b1) {
                count += 1;
            }
        }
    }
    count
}

fn shared_run_crossings(n: u8, a: &[u8], b: &[u8]) -> usize {
    let limit = (a.len() * b.len()) as isize + 1;
    let mut count = 0;
    for i in 0..a.len() as isize {
        for j in ((i as usize % 2)..b.len()).step_by(2) {
            let j = j as isize;
            if at(a, i) != at(b, j) || at(a, i - 1) == at(b, j - 1) {
                continue;
            }
            let mut d = 1;
            while d < limit && at(a, i + d) == at(b, j + d) {
                d += 1;
            }
            if d >= limit {
                continue;
            }
            let start = at(a, i);
            let end = at(a, i + d - 1);
            let mut back = first_is_more_ccw(n, start, at(a, i - 1), at(b, j - 1));
            if (d - 1) % 2 == 1 {
                back = !back;
            }
            let fwd = first_is_more_ccw(n, end, at(a, i + d), at(b, j + d));
            if back != fwd {
                count += 1;
            }
        }
    }
    count
}

/// Minimal number of intersections between two curves in the given classes.
pub fn curve_intersection(a: &Curve, b: &Curve) -> usize {
    if !a.is_essential() || !b.is_essential() {
        return 0;
    }
    let n = a.punctures;
    let (sa, sb) = (&a.seq, &b.seq);
    let rb: Vec<u8> = sb.iter().rev().copied().collect();
    vertex_crossings(n, sa, sb) + shared_run_crossings(n, sa, sb) + shared_run_crossings(n, sa, &rb)
}

impl Curve {
    pub fn intersection(&self, other: &Curve) -> usize {
        curve_intersection(self, other)
    }

    /// Minimal intersection with an arc (arc endpoints fixed at punctures).
    pub fn intersection_with_arc(&self, arc: &ArcCode) -> usize {
        curve_intersection(self, &arc.boundary()) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(seq: &[u8]) -> Curve {
        Curve::from_crossings(6, seq).unwrap()
    }

    #[test]
    fn disjoint_and_self() {
        assert_eq!(c(&[5, 1]).intersection(&c(&[1, 3])), 0);
        assert_eq!(c(&[5, 1]).intersection(&c(&[5, 1])), 0);
    }

    #[test]
    fn overlapping_pairs_meet_twice() {
        // {1,2} and {2,3}
        assert_eq!(c(&[5, 1]).intersection(&c(&[0, 2])), 2);
        // {1,2} and {2,3,4}
        assert_eq!(c(&[5, 1]).intersection(&c(&[0, 3])), 2);
        // {1,2} and {3,4}
        assert_eq!(c(&[5, 1]).intersection(&c(&[1, 3])), 0);
    }

    #[test]
    fn symmetric() {
        let a = c(&[5, 1]).apply(crate::curve::Generator::Sigma1, true);
        let b = c(&[0, 2]);
        assert_eq!(a.intersection(&b), b.intersection(&a));
    }
}
