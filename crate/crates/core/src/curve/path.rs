//! Crossing sequences of closed curves with the equator.
//!
//! A curve transverse to the equator is recorded by the cyclic list of
//! segments it crosses. Position `k` of a sequence is a downward crossing
//! (upper hemisphere to lower) when `k` is even and an upward crossing when
//! `k` is odd, so every stored sequence has even length. Two consecutive
//! crossings of the same segment bound a bigon with that segment; cancelling
//! them is exactly free reduction in the fundamental groupoid of the graph
//! dual to the two hemispheres.

use std::cmp::Ordering;


/// Freely reduces a linear path in place (adjacent equal letters cancel).
pub(crate) fn reduce_linear(letters: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::with_capacity(letters.len());
    for &s in letters {
        if out.last() == Some(&s) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

/// Cyclically reduces a closed path whose first letter is a downward crossing.
/// The result again starts with a downward crossing.
pub(crate) fn reduce_cyclic(letters: &[u8]) -> Vec<u8> {
    debug_assert!(letters.len() % 2 == 0);
    let lin = reduce_linear(letters);
    let mut lo = 0;
    let mut hi = lin.len();
    while hi - lo >= 2 && lin[lo] == lin[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    let mut out = lin[lo..hi].to_vec();
    if lo % 2 == 1 && !out.is_empty() {
        out.rotate_left(1);
    }
    out
}

/// Lexicographically least representative over even rotations and reversal.
pub(crate) fn canonical_rotation(seq: &[u8]) -> Vec<u8> {
    if seq.is_empty() {
        return Vec::new();
    }
    let rev: Vec<u8> = seq.iter().rev().copied().collect();
    let mut best: Option<Vec<u8>> = None;
    for cand in [seq, &rev[..]] {
        for r in (0..cand.len()).step_by(2) {
            let better = match &best {
                None => true,
                Some(b) => cmp_rotation(cand, r, b) == Ordering::Less,
            };
            if better {
                let mut v = cand.to_vec();
                v.rotate_left(r);
                best = Some(v);
            }
        }
    }
    best.unwrap_or_default()
}

fn cmp_rotation(seq: &[u8], r: usize, other: &[u8]) -> Ordering {
    let n = seq.len();
    for i in 0..n {
        match seq[(r + i) % n].cmp(&other[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Position of `exit` counted counter-clockwise from `entry` (1..n).
pub(crate) fn ccw_rank(n: u8, entry: u8, exit: u8) -> u8 {
    (exit + n - entry) % n
}

/// True when two chords leaving segment `entry` towards `a` and `b` must be
/// arranged with the `a`-chord further counter-clockwise along `entry`.
/// Non-crossing chords sharing an entry segment nest, so the chord whose exit
/// is reached first going counter-clockwise sits at the far (ccw) end.
pub(crate) fn first_is_more_ccw(n: u8, entry: u8, a: u8, b: u8) -> bool {
    ccw_rank(n, entry, a) < ccw_rank(n, entry, b)
}

/// Do the unordered pairs `{a0,a1}` and `{b0,b1}` of distinct segments
/// interleave around the equator?
pub(crate) fn interleaved(n: u8, a0: u8, a1: u8, b0: u8, b1: u8) -> bool {
    let ra = ccw_rank(n, a0, a1);
    let r0 = ccw_rank(n, a0, b0);
    let r1 = ccw_rank(n, a0, b1);
    (r0 < ra) != (r1 < ra)
}
