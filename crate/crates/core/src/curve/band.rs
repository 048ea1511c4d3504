//! Band sums of disjoint curves along bands lying in one hemisphere face.

use serde::{Deserialize, Serialize};

use super::{ChordDiagram, Curve, CurveError, EquatorialCode, Hemisphere};

/// Attachment data for a band: the band runs inside one face of the joint
/// chord diagram of the two curves, from a chord of the first curve to a
/// chord of the second. Chords are named by their endpoint positions in
/// [`EquatorialCode::layout`] of the two-component code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandSpec {
    pub hemisphere: Hemisphere,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

fn separates(chord: (usize, usize), a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = (chord.0.min(chord.1), chord.0.max(chord.1));
    let inside = |p: usize| lo < p && p < hi;
    let side_a = inside(a.0) || inside(a.1);
    let side_b = inside(b.0) || inside(b.1);
    side_a != side_b
}

fn joint(first: &Curve, second: &Curve) -> Result<(ChordDiagram, Vec<usize>), CurveError> {
    if first.punctures != second.punctures {
        return Err(CurveError::PunctureMismatch(first.punctures, second.punctures));
    }
    if first == second {
        return Err(CurveError::Parallel);
    }
    if first.intersection(second) != 0 {
        return Err(CurveError::Intersecting);
    }
    let code = EquatorialCode::from_curves(first.punctures, [first.clone(), second.clone()]);
    let d = code.layout()?;
    // Label each crossing by the curve it belongs to (0 = first).
    let mut label = vec![usize::MAX; d.crossing_count()];
    for start in 0..d.crossing_count() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        let mut seq = Vec::new();
        let mut x = start;
        loop {
            members.push(x);
            seq.push(d.segment_of(x));
            let y = d.partner(Hemisphere::Lower, x);
            members.push(y);
            seq.push(d.segment_of(y));
            x = d.partner(Hemisphere::Upper, y);
            if x == start {
                break;
            }
        }
        let which = if Curve::from_raw(first.punctures, &seq) == *first { 0 } else { 1 };
        for m in members {
            label[m] = which;
        }
    }
    Ok((d, label))
}

fn chords(d: &ChordDiagram, h: Hemisphere) -> Vec<(usize, usize)> {
    (0..d.crossing_count())
        .filter_map(|x| {
            let y = d.partner(h, x);
            (x < y).then_some((x, y))
        })
        .collect()
}

impl BandSpec {
    /// Every band joining the two curves inside a single hemisphere face.
    pub fn candidates(first: &Curve, second: &Curve) -> Result<Vec<BandSpec>, CurveError> {
        let (d, label) = joint(first, second)?;
        let mut out = Vec::new();
        for h in [Hemisphere::Upper, Hemisphere::Lower] {
            let all = chords(&d, h);
            for &a in all.iter().filter(|c| label[c.0] == 0) {
                for &b in all.iter().filter(|c| label[c.0] == 1) {
                    if all.iter().all(|&c| c == a || c == b || !separates(c, a, b)) {
                        out.push(BandSpec { hemisphere: h, first: a, second: b });
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Band sum of two disjoint, non-parallel curves.
pub fn band_sum(first: &Curve, second: &Curve, band: &BandSpec) -> Result<Curve, CurveError> {
    let (d, label) = joint(first, second)?;
    let h = band.hemisphere;
    let all = chords(&d, h);
    let norm = |c: (usize, usize)| (c.0.min(c.1), c.0.max(c.1));
    let (a, b) = (norm(band.first), norm(band.second));
    if !all.contains(&a) || !all.contains(&b) {
        return Err(CurveError::InvalidBand("named chord does not exist".into()));
    }
    if label[a.0] != 0 || label[b.0] != 1 {
        return Err(CurveError::InvalidBand("chords must belong to the first and second curve".into()));
    }
    if all.iter().any(|&c| c != a && c != b && separates(c, a, b)) {
        return Err(CurveError::InvalidBand("chords do not share a face".into()));
    }
    let crosses = |p: (usize, usize), q: (usize, usize)| separates(norm(p), (q.0, q.0), (q.1, q.1));
    let options = [((a.0, b.0), (a.1, b.1)), ((a.0, b.1), (a.1, b.0))];
    let (c1, c2) = options
        .into_iter()
        .find(|(c1, c2)| !crosses(*c1, *c2))
        .ok_or_else(|| CurveError::InvalidBand("no planar reconnection".into()))?;
    let mut upper: Vec<usize> = (0..d.crossing_count()).map(|x| d.partner(Hemisphere::Upper, x)).collect();
    let mut lower: Vec<usize> = (0..d.crossing_count()).map(|x| d.partner(Hemisphere::Lower, x)).collect();
    let m = match h {
        Hemisphere::Upper => &mut upper,
        Hemisphere::Lower => &mut lower,
    };
    for (x, y) in [c1, c2] {
        m[x] = y;
        m[y] = x;
    }
    let joined = ChordDiagram::new(d.punctures(), &d.counts(), upper, lower)?;
    joined.reduce().code.into_single()
}

impl Curve {
    pub fn band_sum(&self, other: &Curve, band: &BandSpec) -> Result<Curve, CurveError> {
        band_sum(self, other, band)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(seq: &[u8]) -> Curve {
        Curve::from_crossings(6, seq).unwrap()
    }

    #[test]
    fn complementary_pair() {
        let e1 = c(&[5, 1]);
        let e2 = c(&[1, 3]);
        let e3 = c(&[3, 5]);
        let bands = BandSpec::candidates(&e1, &e2).unwrap();
        assert!(!bands.is_empty());
        for b in &bands {
            assert_eq!(band_sum(&e1, &e2, b).unwrap(), e3);
        }
        for b in BandSpec::candidates(&e1, &e3).unwrap() {
            assert_eq!(band_sum(&e1, &e3, &b).unwrap(), e2);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let e1 = c(&[5, 1]);
        assert_eq!(BandSpec::candidates(&e1, &e1).unwrap_err(), CurveError::Parallel);
        assert_eq!(BandSpec::candidates(&e1, &c(&[0, 2])).unwrap_err(), CurveError::Intersecting);
    }
}
