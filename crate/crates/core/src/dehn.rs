//! Coordinates of simple closed curves with respect to the three disks
//! `E_1', E_2', E_3'`.
//!
//! Disk `i` (0-based here) is a thin neighbourhood of its core segment `2i`;
//! the odd segments are the seams of the complementary pair of pants, seam
//! `2i+1` running from disk `i` to disk `i+1`. The windows are the lower
//! halves of the disk boundaries.
//!
//! A reduced curve crosses core `2i` exactly `p_i` times. Between two
//! consecutive core crossings the curve spirals out of one disk to its window,
//! follows a standard arc of the pants, and spirals into the next disk. The
//! signed number of seam crossings made while spiralling, summed over all
//! `2 p_i` ends at disk `i`, fixes the rotation of the arcs inside the disk,
//! which is the twist coordinate `q_i' = p_i t_i + q_i`.

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::curve::path::reduce_linear;
use crate::curve::{Curve, CurveError, Hemisphere, PUNCTURES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DehnError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("curve is not essential")]
    Inessential,
    #[error("window counts {0:?} are not realizable")]
    NonRealizable([u64; 3]),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Intersections `I_i` of a curve with the windows (equivalently with the
/// disk boundaries).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WindowCounts(pub [u64; 3]);

/// Weights of the standard arcs `l_ij` in the pair of pants, indexed
/// `[[x11, x12, x13], [x12, x22, x23], [x13, x23, x33]]` by [`PantsWeights::get`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PantsWeights {
    pub x11: u64,
    pub x12: u64,
    pub x13: u64,
    pub x22: u64,
    pub x23: u64,
    pub x33: u64,
}

impl PantsWeights {
    /// Weight of `l_ij` for 1-based `i, j`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        match (i.min(j), i.max(j)) {
            (1, 1) => self.x11,
            (1, 2) => self.x12,
            (1, 3) => self.x13,
            (2, 2) => self.x22,
            (2, 3) => self.x23,
            (3, 3) => self.x33,
            _ => panic!("pants index out of range"),
        }
    }

    fn add(&mut self, i: usize, j: usize) {
        let slot = match (i.min(j), i.max(j)) {
            (1, 1) => &mut self.x11,
            (1, 2) => &mut self.x12,
            (1, 3) => &mut self.x13,
            (2, 2) => &mut self.x22,
            (2, 3) => &mut self.x23,
            (3, 3) => &mut self.x33,
            _ => panic!("pants index out of range"),
        };
        *slot += 1;
    }

    pub fn diagonal(&self) -> [u64; 3] {
        [self.x11, self.x22, self.x33]
    }

    /// Window counts implied by the boundary equations.
    pub fn window_counts(&self) -> WindowCounts {
        WindowCounts([
            2 * self.x11 + self.x12 + self.x13,
            2 * self.x22 + self.x12 + self.x23,
            2 * self.x33 + self.x13 + self.x23,
        ])
    }
}

/// Arc weights determined by the window counts: when one count dominates the
/// other two, `x_ii = (I_i - I_j - I_k)/2`, `x_ij = I_j`, `x_ik = I_k`;
/// otherwise the triangle solution `x_uv = (I_u + I_v - I_w)/2`.
pub fn pants_weights(counts: WindowCounts) -> Result<PantsWeights, DehnError> {
    let i = counts.0;
    if (i[0] + i[1] + i[2]) % 2 != 0 {
        return Err(DehnError::NonRealizable(i));
    }
    let mut w = PantsWeights::default();
    for a in 0..3 {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        if i[a] >= i[b] + i[c] {
            let diag = (i[a] - i[b] - i[c]) / 2;
            let mut set = |x: usize, y: usize, v: u64| {
                for _ in 0..v {
                    w.add(x + 1, y + 1);
                }
            };
            set(a, a, diag);
            set(a, b, i[b]);
            set(a, c, i[c]);
            return Ok(w);
        }
    }
    let half = |u: usize, v: usize, o: usize| (i[u] + i[v] - i[o]) / 2;
    w.x12 = half(0, 1, 2);
    w.x13 = half(0, 2, 1);
    w.x23 = half(1, 2, 0);
    Ok(w)
}

/// Counts inside one disk: `m = |delta cap j|`, `n = |delta cap k|` and the
/// arc counts of the upper semi-disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemiDiskCounts {
    pub u: u64,
    pub v: u64,
    pub w: u64,
    pub m: u64,
    pub n: u64,
}

impl SemiDiskCounts {
    /// Counts of the standard configuration of `p` arcs rotated by `q'`.
    pub fn of_twist(p: u64, q_prime: i64) -> Self {
        let m = q_prime.unsigned_abs();
        let n = (p as i64 + q_prime).unsigned_abs();
        let u = (p + m - n) / 2;
        let v = p - u;
        SemiDiskCounts { u, v, w: m - u, m, n }
    }

    pub fn p(&self) -> u64 {
        self.u + self.v
    }
}

/// `(q, t)` from `p`, `m`, `n` by the two-branch rule: if `n - m = p` then
/// `q = m mod p`, `t = (m - q)/p`, otherwise `q = -m mod p`,
/// `t = (-m - q)/p`.
pub fn twist_from_counts(p: u64, m: u64, n: u64) -> Result<(u64, i64), DehnError> {
    if p == 0 {
        return Ok((0, 0));
    }
    let (p, m, n) = (p as i64, m as i64, n as i64);
    if (n - m).abs() > p {
        return Err(DehnError::Internal(format!("|n - m| > p for (p, m, n) = ({p}, {m}, {n})")));
    }
    let signed = if n - m == p { m } else { -m };
    let q = signed.rem_euclid(p);
    Ok((q as u64, (signed - q) / p))
}

/// Coordinates of one disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiskCoord {
    pub p: u64,
    pub q: u64,
    pub t: i64,
    pub counts: SemiDiskCounts,
}

impl DiskCoord {
    pub fn q_prime(&self) -> i64 {
        self.p as i64 * self.t + self.q as i64
    }
}

/// The nine parameters `(p_i, q_i, t_i)` together with the arc weights and
/// the parallel flag for curves disjoint from all three disks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DehnCoord {
    pub disks: [DiskCoord; 3],
    pub weights: PantsWeights,
    /// 1-based index of the disk boundary the curve is parallel to.
    pub parallel: Option<u8>,
}

/// The classifying tuple `(p_1, p_2, p_3, q_1', q_2', q_3')` with the flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Phi {
    pub p: [u64; 3],
    pub q_prime: [i64; 3],
    pub parallel: Option<u8>,
}

impl Phi {
    pub fn tuple(&self) -> [i64; 6] {
        [self.p[0] as i64, self.p[1] as i64, self.p[2] as i64, self.q_prime[0], self.q_prime[1], self.q_prime[2]]
    }
}

impl DehnCoord {
    pub fn phi(&self) -> Phi {
        Phi {
            p: [self.disks[0].p, self.disks[1].p, self.disks[2].p],
            q_prime: [self.disks[0].q_prime(), self.disks[1].q_prime(), self.disks[2].q_prime()],
            parallel: self.parallel,
        }
    }

    pub fn window_counts(&self) -> WindowCounts {
        WindowCounts([2 * self.disks[0].p, 2 * self.disks[1].p, 2 * self.disks[2].p])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let phi = self.phi();
        json!({
            "p": self.disks.iter().map(|d| d.p).collect::<Vec<_>>(),
            "q": self.disks.iter().map(|d| d.q).collect::<Vec<_>>(),
            "t": self.disks.iter().map(|d| d.t).collect::<Vec<_>>(),
            "phi": phi.tuple(),
            "parallel": self.parallel,
        })
    }
}

fn seam_plus(disk: usize) -> u8 {
    ((2 * disk + 1) % PUNCTURES as usize) as u8
}

fn seam_minus(disk: usize) -> u8 {
    ((2 * disk + PUNCTURES as usize - 1) % PUNCTURES as usize) as u8
}

/// Seam crossings of a strand leaving disk `disk` from hemisphere `from` and
/// winding `k` half turns (positive = counter-clockwise) to the window.
fn spiral(disk: usize, from: Hemisphere, k: i64) -> Vec<u8> {
    let (plus, minus) = (seam_plus(disk), seam_minus(disk));
    let first = match (k > 0, from) {
        (true, Hemisphere::Lower) | (false, Hemisphere::Upper) => plus,
        (true, Hemisphere::Upper) | (false, Hemisphere::Lower) => minus,
    };
    let second = if first == plus { minus } else { plus };
    (0..k.unsigned_abs()).map(|i| if i % 2 == 0 { first } else { second }).collect()
}

/// Reads a path as an outward spiral at `disk` from `from`, returning the
/// signed half-turn count.
fn as_spiral(disk: usize, from: Hemisphere, path: &[u8]) -> Option<i64> {
    let len = path.len() as i64;
    let needs_odd = from == Hemisphere::Upper;
    if (len % 2 == 1) != needs_odd {
        return None;
    }
    if path.is_empty() {
        return Some(0);
    }
    for k in [len, -len] {
        if spiral(disk, from, k) == path {
            return Some(k);
        }
    }
    None
}

/// The standard arc from disk `disk` back to itself, leaving the window
/// upward through the seam beyond the next disk and returning through the
/// seam on the near side.
fn loop_arc(disk: usize) -> [u8; 2] {
    [seam_plus((disk + 1) % 3), seam_minus(disk)]
}

fn reversed(p: &[u8]) -> Vec<u8> {
    p.iter().rev().copied().collect()
}

/// Splits a run of seam crossings between core crossings at disks `a` and
/// `b` into the two spirals. Returns `(k_a, k_b)` and the loop direction.
fn split_run(a: usize, after: Hemisphere, b: usize, before: Hemisphere, run: &[u8]) -> Option<(i64, i64, Option<bool>)> {
    let stds: Vec<(Vec<u8>, Option<bool>)> = if a == b {
        let l = loop_arc(a).to_vec();
        vec![(reversed(&l), Some(false)), (l, Some(true))]
    } else {
        vec![(Vec::new(), None)]
    };
    let bound = run.len() as i64 + 3;
    let mut found = None;
    for (std, fwd) in &stds {
        for k in -bound..=bound {
            if (k.rem_euclid(2) == 1) != (after == Hemisphere::Upper) {
                continue;
            }
            let p = spiral(a, after, k);
            // The inward spiral is what remains once the outward spiral and
            // the standard arc are peeled off the front of the run.
            let mut path = reversed(std);
            path.extend(p.iter().rev());
            path.extend_from_slice(run);
            let rest = reduce_linear(&path);
            if let Some(kb) = as_spiral(b, before, &reversed(&rest)) {
                if found.is_some() {
                    return None;
                }
                found = Some((k, kb, *fwd));
            }
        }
    }
    found
}

fn disk_of(segment: u8) -> Option<usize> {
    (segment % 2 == 0).then_some(segment as usize / 2)
}

/// One component of the curve outside the inner disks: it leaves disk `from`
/// on side `from_side`, makes `from_turns` signed half turns in the annulus
/// around that disk, crosses the pair of pants, and makes `to_turns` half
/// turns around disk `to` before entering it from side `to_side`. Disks are
/// 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PantsArc {
    pub from: usize,
    pub from_side: Hemisphere,
    pub from_turns: i64,
    pub to: usize,
    pub to_side: Hemisphere,
    pub to_turns: i64,
    /// For arcs returning to their own disk: whether the standard loop is
    /// traversed in its forward direction.
    pub forward_loop: Option<bool>,
}

fn arcs_of(curve: &Curve, cores: &[usize]) -> Result<Vec<PantsArc>, DehnError> {
    let seq = curve.crossings();
    let mut out = Vec::with_capacity(cores.len());
    for r in 0..cores.len() {
        let x = cores[r];
        let y = cores[(r + 1) % cores.len()];
        let run: Vec<u8> = if y > x {
            seq[x + 1..y].to_vec()
        } else {
            seq[x + 1..].iter().chain(seq[..y].iter()).copied().collect()
        };
        let a = seq[x] as usize / 2;
        let b = seq[y] as usize / 2;
        let after = if x % 2 == 0 { Hemisphere::Lower } else { Hemisphere::Upper };
        let before = if y % 2 == 0 { Hemisphere::Upper } else { Hemisphere::Lower };
        let (ka, kb, fwd) = split_run(a, after, b, before, &run).ok_or_else(|| {
            DehnError::Internal(format!("run {run:?} from disk {a} to disk {b} of {curve} has no unique splitting"))
        })?;
        out.push(PantsArc {
            from: a,
            from_side: after,
            from_turns: ka,
            to: b,
            to_side: before,
            to_turns: kb,
            forward_loop: fwd,
        });
    }
    Ok(out)
}

/// The arcs of an essential curve outside the inner disks, in the order the
/// curve traverses them. Empty for curves parallel to a disk boundary.
pub fn pants_arcs(curve: &Curve) -> Result<Vec<PantsArc>, DehnError> {
    if !curve.is_essential() {
        return Err(DehnError::Inessential);
    }
    let seq = curve.crossings();
    let cores: Vec<usize> = (0..seq.len()).filter(|&i| disk_of(seq[i]).is_some()).collect();
    arcs_of(curve, &cores)
}

/// Extracts the nine parameters of a reduced essential curve.
pub fn extract(curve: &Curve) -> Result<DehnCoord, DehnError> {
    if curve.punctures() != PUNCTURES {
        return Err(CurveError::PunctureMismatch(curve.punctures(), PUNCTURES).into());
    }
    if !curve.is_essential() {
        return Err(DehnError::Inessential);
    }
    let seq = curve.crossings();
    let len = seq.len();
    let cores: Vec<usize> = (0..len).filter(|&i| disk_of(seq[i]).is_some()).collect();
    let mut p = [0u64; 3];
    for &i in &cores {
        p[seq[i] as usize / 2] += 1;
    }
    if cores.is_empty() {
        let mut letters: Vec<u8> = seq.to_vec();
        letters.sort_unstable();
        letters.dedup();
        let parallel = (0..3).find(|&d| {
            let mut s = vec![seam_plus(d), seam_minus(d)];
            s.sort_unstable();
            s == letters
        });
        let Some(d) = parallel else {
            return Err(DehnError::Internal(format!("curve {curve} misses every disk but is not parallel to one")));
        };
        let zero = DiskCoord { p: 0, q: 0, t: 0, counts: SemiDiskCounts::of_twist(0, 0) };
        return Ok(DehnCoord { disks: [zero; 3], weights: PantsWeights::default(), parallel: Some(d as u8 + 1) });
    }
    let mut half_turns = [0i64; 3];
    let mut weights = PantsWeights::default();
    for arc in arcs_of(curve, &cores)? {
        half_turns[arc.from] += arc.from_turns;
        half_turns[arc.to] += arc.to_turns;
        weights.add(arc.from + 1, arc.to + 1);
    }
    let mut disks = [DiskCoord { p: 0, q: 0, t: 0, counts: SemiDiskCounts::of_twist(0, 0) }; 3];
    for d in 0..3 {
        if p[d] == 0 {
            continue;
        }
        let h = half_turns[d];
        let pd = p[d] as i64;
        if (2 - pd - h) % 2 != 0 {
            return Err(DehnError::Internal("half-turn parity".into()));
        }
        let q_prime = (2 - pd - h) / 2;
        let counts = SemiDiskCounts::of_twist(p[d], q_prime);
        let (q, t) = twist_from_counts(p[d], counts.m, counts.n)?;
        disks[d] = DiskCoord { p: p[d], q, t, counts };
    }
    Ok(DehnCoord { disks, weights, parallel: None })
}

pub fn window_counts(curve: &Curve) -> WindowCounts {
    WindowCounts([2 * curve.crossings_on(0) as u64, 2 * curve.crossings_on(2) as u64, 2 * curve.crossings_on(4) as u64])
}

pub fn phi(curve: &Curve) -> Result<Phi, DehnError> {
    Ok(extract(curve)?.phi())
}

/// Isotopy test by coordinate equality.
pub fn curves_isotopic(a: &Curve, b: &Curve) -> Result<bool, DehnError> {
    Ok(phi(a)? == phi(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::catalog::{disk_boundary, run_curve};

    #[test]
    fn weight_formula() {
        let w = pants_weights(WindowCounts([4, 1, 1])).unwrap();
        assert_eq!((w.x11, w.x12, w.x13, w.x22, w.x23, w.x33), (1, 1, 1, 0, 0, 0));
        let w = pants_weights(WindowCounts([2, 2, 2])).unwrap();
        assert_eq!((w.x12, w.x13, w.x23), (1, 1, 1));
        assert_eq!(w.diagonal(), [0, 0, 0]);
        assert_eq!(pants_weights(WindowCounts([0, 0, 0])).unwrap(), PantsWeights::default());
        assert!(pants_weights(WindowCounts([1, 0, 0])).is_err());
    }

    #[test]
    fn worked_counts() {
        let c = SemiDiskCounts { u: 0, v: 3, w: 4, m: 4, n: 7 };
        assert_eq!(twist_from_counts(c.p(), c.m, c.n).unwrap(), (1, 1));
        assert_eq!(SemiDiskCounts::of_twist(3, 4), c);
    }

    #[test]
    fn counts_recover_twist() {
        for p in 1..6u64 {
            for qp in -20..20i64 {
                let c = SemiDiskCounts::of_twist(p, qp);
                assert_eq!(c.u + c.v, p);
                assert_eq!(c.m as i64 - c.n as i64, c.u as i64 - c.v as i64);
                let (q, t) = twist_from_counts(p, c.m, c.n).unwrap();
                assert!(q < p);
                assert_eq!(p as i64 * t + q as i64, qp);
            }
        }
    }

    #[test]
    fn disk_boundaries_are_flagged() {
        for i in 1..=3 {
            let c = extract(&disk_boundary(i)).unwrap();
            assert_eq!(c.parallel, Some(i));
            assert_eq!(c.phi().tuple(), [0; 6]);
        }
    }

    #[test]
    fn pair_curve() {
        let c = extract(&run_curve(2, 3)).unwrap();
        assert_eq!(c.window_counts(), WindowCounts([2, 2, 0]));
        assert_eq!(c.weights.x12, 2);
    }
}
