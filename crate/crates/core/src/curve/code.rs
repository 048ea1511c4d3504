//! Explicit chord diagrams: crossings laid out along the equator with their
//! pairings in the two hemispheres.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{path, Curve, CurveError, EquatorialCode, Hemisphere};

/// Version tag of the serialized forms.
pub const CODE_FORMAT: &str = "eqcode/1";

/// Crossings of a multicurve with the equator, numbered `0..N` in
/// counter-clockwise order, together with the chord matchings in each
/// hemisphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    punctures: u8,
    segment_of: Vec<u8>,
    upper: Vec<usize>,
    lower: Vec<usize>,
}

/// Result of exhaustive bigon removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub code: EquatorialCode,
    /// Closed components that vanished.
    pub discarded: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonCode {
    format: String,
    punctures: u8,
    segments: Vec<Vec<u32>>,
    upper: Vec<[u32; 2]>,
    lower: Vec<[u32; 2]>,
}

impl ChordDiagram {
    /// Builds a diagram from per-segment crossing counts and the two
    /// matchings, validating structure and planarity.
    pub fn new(
        punctures: u8,
        counts: &[usize],
        upper: Vec<usize>,
        lower: Vec<usize>,
    ) -> Result<Self, CurveError> {
        if counts.len() != punctures as usize {
            return Err(CurveError::Malformed("one count per segment required".into()));
        }
        let mut segment_of = Vec::new();
        for (s, &c) in counts.iter().enumerate() {
            segment_of.extend(std::iter::repeat(s as u8).take(c));
        }
        let d = ChordDiagram { punctures, segment_of, upper, lower };
        d.validate()?;
        Ok(d)
    }

    pub fn punctures(&self) -> u8 {
        self.punctures
    }

    pub fn crossing_count(&self) -> usize {
        self.segment_of.len()
    }

    pub fn segment_of(&self, position: usize) -> u8 {
        self.segment_of[position]
    }

    pub fn partner(&self, hemisphere: Hemisphere, position: usize) -> usize {
        match hemisphere {
            Hemisphere::Upper => self.upper[position],
            Hemisphere::Lower => self.lower[position],
        }
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.punctures as usize];
        for &s in &self.segment_of {
            c[s as usize] += 1;
        }
        c
    }

    pub fn validate(&self) -> Result<(), CurveError> {
        let n = self.segment_of.len();
        if self.upper.len() != n || self.lower.len() != n {
            return Err(CurveError::Malformed("matching size differs from crossing count".into()));
        }
        for (name, m) in [("upper", &self.upper), ("lower", &self.lower)] {
            for (i, &j) in m.iter().enumerate() {
                if j >= n || m[j] != i || j == i {
                    return Err(CurveError::Malformed(format!("{name} matching is not a perfect matching")));
                }
            }
            if !non_crossing(m) {
                return Err(CurveError::Malformed(format!("{name} matching is not planar")));
            }
        }
        Ok(())
    }

    fn bigons(&self) -> Vec<(usize, Hemisphere)> {
        let mut out = Vec::new();
        for x in 0..self.segment_of.len().saturating_sub(1) {
            if self.segment_of[x] != self.segment_of[x + 1] {
                continue;
            }
            if self.upper[x] == x + 1 {
                out.push((x, Hemisphere::Upper));
            }
            if self.lower[x] == x + 1 {
                out.push((x, Hemisphere::Lower));
            }
        }
        out
    }

    /// Removes the bigon cut off by the chord `(x, x+1)` in `h`. Returns true
    /// when a closed component disappeared.
    fn remove_bigon(&mut self, x: usize, h: Hemisphere) -> bool {
        let other = match h {
            Hemisphere::Upper => &mut self.lower,
            Hemisphere::Lower => &mut self.upper,
        };
        let a = other[x];
        let b = other[x + 1];
        let closed = a == x + 1;
        if !closed {
            other[a] = b;
            other[b] = a;
        }
        let shift = |p: usize| if p > x + 1 { p - 2 } else { p };
        let keep = |p: &usize| *p != x && *p != x + 1;
        let idx: Vec<usize> = (0..self.segment_of.len()).filter(keep).collect();
        self.segment_of = idx.iter().map(|&p| self.segment_of[p]).collect();
        self.upper = idx.iter().map(|&p| shift(self.upper[p])).collect();
        self.lower = idx.iter().map(|&p| shift(self.lower[p])).collect();
        closed
    }

    /// Exhaustive bigon removal, always taking the first available bigon.
    pub fn reduce(&self) -> Reduction {
        self.reduce_with(|_| 0)
    }

    /// Exhaustive bigon removal where `choose(k)` picks which of the `k`
    /// currently available bigons to remove next.
    pub fn reduce_with(&self, mut choose: impl FnMut(usize) -> usize) -> Reduction {
        let mut d = self.clone();
        let mut discarded = 0;
        loop {
            let b = d.bigons();
            if b.is_empty() {
                break;
            }
            let (x, h) = b[choose(b.len()) % b.len()];
            if d.remove_bigon(x, h) {
                discarded += 1;
            }
        }
        let curves = d.raw_components().into_iter().map(|s| Curve::from_raw(d.punctures, &s));
        let mut code = EquatorialCode::from_curves(d.punctures, curves);
        // Components that only became trivial through sequence reduction.
        let total = d.raw_components().len();
        discarded += total - code.component_count();
        code.components.retain(|c| !c.is_trivial());
        Reduction { code, discarded }
    }

    /// Crossing sequences of the components obtained by chord following.
    pub fn raw_components(&self) -> Vec<Vec<u8>> {
        let n = self.segment_of.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut seq = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                seq.push(self.segment_of[x]);
                let y = self.lower[x];
                seen[y] = true;
                seq.push(self.segment_of[y]);
                x = self.upper[y];
                if x == start {
                    break;
                }
            }
            out.push(seq);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.raw_components().len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut segments = vec![Vec::new(); self.punctures as usize];
        for (p, &s) in self.segment_of.iter().enumerate() {
            segments[s as usize].push(p as u32);
        }
        let pairs = |m: &[usize]| -> Vec<[u32; 2]> {
            m.iter().enumerate().filter(|(i, &j)| *i < j).map(|(i, &j)| [i as u32, j as u32]).collect()
        };
        let j = JsonCode {
            format: CODE_FORMAT.to_string(),
            punctures: self.punctures,
            segments,
            upper: pairs(&self.upper),
            lower: pairs(&self.lower),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Parses the JSON form. Crossing ids may be arbitrary distinct integers;
    /// they are renumbered by their order along the equator.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, CurveError> {
        let j: JsonCode = serde_json::from_value(value.clone()).map_err(|e| CurveError::Malformed(e.to_string()))?;
        if j.format != CODE_FORMAT {
            return Err(CurveError::Malformed(format!("unsupported format `{}`", j.format)));
        }
        if j.segments.len() != j.punctures as usize {
            return Err(CurveError::Malformed("one crossing list per segment required".into()));
        }
        let mut index = BTreeMap::new();
        let mut counts = Vec::new();
        for seg in &j.segments {
            counts.push(seg.len());
            for &id in seg {
                let next = index.len();
                if index.insert(id, next).is_some() {
                    return Err(CurveError::Malformed(format!("crossing id {id} repeated")));
                }
            }
        }
        let n = index.len();
        let matching = |pairs: &[[u32; 2]]| -> Result<Vec<usize>, CurveError> {
            let mut m = vec![usize::MAX; n];
            for &[a, b] in pairs {
                let (Some(&x), Some(&y)) = (index.get(&a), index.get(&b)) else {
                    return Err(CurveError::Malformed(format!("chord ({a},{b}) names unknown crossing")));
                };
                if m[x] != usize::MAX || m[y] != usize::MAX {
                    return Err(CurveError::Malformed("crossing used by two chords".into()));
                }
                m[x] = y;
                m[y] = x;
            }
            if m.iter().any(|&v| v == usize::MAX) {
                return Err(CurveError::Malformed("unmatched chord end".into()));
            }
            Ok(m)
        };
        let upper = matching(&j.upper)?;
        let lower = matching(&j.lower)?;
        ChordDiagram::new(j.punctures, &counts, upper, lower)
    }

    /// Deterministic byte serialization. Positions are already intrinsic
    /// (counter-clockwise order from segment 0), so equal diagrams up to
    /// renaming of crossing ids produce equal bytes.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(CODE_FORMAT.as_bytes());
        out.push(0);
        out.push(self.punctures);
        for c in self.counts() {
            out.extend_from_slice(&(c as u32).to_le_bytes());
        }
        for m in [&self.upper, &self.lower] {
            for &p in m.iter() {
                out.extend_from_slice(&(p as u32).to_le_bytes());
            }
        }
        out
    }
}

fn non_crossing(m: &[usize]) -> bool {
    let mut stack = Vec::new();
    for i in 0..m.len() {
        let j = m[i];
        if j > i {
            stack.push(i);
        } else if stack.pop() != Some(j) {
            return false;
        }
    }
    stack.is_empty()
}

/// One crossing of one copy of a component.
#[derive(Clone, Copy)]
struct Occurrence {
    class: usize,
    copy: usize,
    index: usize,
}

/// Compares two crossings on the same segment by following both strands into
/// the lower hemisphere until they separate.
fn compare_rays(n: u8, a: (&[u8], usize), b: (&[u8], usize)) -> Option<Ordering> {
    let ray = |seq: &[u8], k: usize, t: usize| -> u8 {
        let len = seq.len();
        if k % 2 == 0 {
            seq[(k + t) % len]
        } else {
            seq[(k + len * (t / len + 1) - t) % len]
        }
    };
    let limit = 2 * (a.0.len() + b.0.len()) + 2;
    let mut prev = ray(a.0, a.1, 0);
    for t in 1..=limit {
        let x = ray(a.0, a.1, t);
        let y = ray(b.0, b.1, t);
        if x != y {
            let mut a_more_ccw = path::first_is_more_ccw(n, prev, x, y);
            if (t - 1) % 2 == 1 {
                a_more_ccw = !a_more_ccw;
            }
            return Some(if a_more_ccw { Ordering::Greater } else { Ordering::Less });
        }
        prev = x;
    }
    None
}

impl EquatorialCode {
    /// Lays the multicurve out as an explicit chord diagram. Fails when the
    /// components are not pairwise disjoint.
    pub fn layout(&self) -> Result<ChordDiagram, CurveError> {
        let n = self.punctures;
        let mut classes: Vec<(&Curve, usize)> = Vec::new();
        for c in &self.components {
            match classes.last_mut() {
                Some((last, m)) if *last == c => *m += 1,
                _ => classes.push((c, 1)),
            }
        }
        let mut per_segment: Vec<Vec<Occurrence>> = vec![Vec::new(); n as usize];
        for (class, (curve, m)) in classes.iter().enumerate() {
            for copy in 0..*m {
                for (index, &s) in curve.seq.iter().enumerate() {
                    per_segment[s as usize].push(Occurrence { class, copy, index });
                }
            }
        }
        let mut failed = false;
        for list in per_segment.iter_mut() {
            list.sort_by(|a, b| {
                if a.class == b.class && a.index == b.index {
                    let m = classes[a.class].1;
                    let pos = |o: &Occurrence| if o.index % 2 == 0 { o.copy } else { m - 1 - o.copy };
                    return pos(a).cmp(&pos(b));
                }
                let sa = &classes[a.class].0.seq;
                let sb = &classes[b.class].0.seq;
                match compare_rays(n, (sa, a.index), (sb, b.index)) {
                    Some(o) => o,
                    None => {
                        failed = true;
                        (a.class, a.copy, a.index).cmp(&(b.class, b.copy, b.index))
                    }
                }
            });
        }
        if failed {
            return Err(CurveError::Malformed("components are not simple or not disjoint".into()));
        }
        let mut position: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        let mut counts = Vec::new();
        let mut next = 0;
        for list in &per_segment {
            counts.push(list.len());
            for o in list {
                position.insert((o.class, o.copy, o.index), next);
                next += 1;
            }
        }
        let total = next;
        let mut upper = vec![0; total];
        let mut lower = vec![0; total];
        for (&(class, copy, index), &p) in &position {
            let len = classes[class].0.seq.len();
            let (l, u) = if index % 2 == 0 {
                (index + 1, (index + len - 1) % len)
            } else {
                (index - 1, (index + 1) % len)
            };
            lower[p] = position[&(class, copy, l)];
            upper[p] = position[&(class, copy, u)];
        }
        ChordDiagram::new(n, &counts, upper, lower)
            .map_err(|_| CurveError::Malformed("components are not simple or not disjoint".into()))
    }

    /// Canonical byte string of the (reduced) multicurve.
    pub fn canonical_form(&self) -> Vec<u8> {
        match self.layout() {
            Ok(d) => d.canonical_bytes(),
            Err(_) => {
                // Not embeddable: fall back to the sorted sequences, which are
                // still a deterministic function of the classes.
                let mut out = b"eqcode/1-seq\0".to_vec();
                for c in &self.components {
                    out.push(c.seq.len() as u8);
                    out.extend_from_slice(&c.seq);
                }
                out
            }
        }
    }

    pub fn to_json(&self) -> Result<serde_json::Value, CurveError> {
        Ok(self.layout()?.to_json())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, CurveError> {
        Ok(ChordDiagram::from_json(value)?.reduce().code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(seq: &[u8]) -> Curve {
        Curve::from_crossings(6, seq).unwrap()
    }

    #[test]
    fn simple_layout_round_trips() {
        let c = curve(&[5, 1]);
        let code = EquatorialCode::from(c.clone());
        let d = code.layout().unwrap();
        assert_eq!(d.counts(), vec![0, 1, 0, 0, 0, 1]);
        assert_eq!(d.reduce().code, code);
    }

    #[test]
    fn parallel_copies_and_disjoint_curves_layout() {
        let a = curve(&[5, 1]);
        let b = curve(&[1, 3]);
        let code = EquatorialCode::from_curves(6, [a.clone(), a.clone(), b.clone()]);
        let d = code.layout().unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.reduce().code, code);
    }

    #[test]
    fn crossing_curves_do_not_layout() {
        let a = curve(&[5, 1]);
        let b = curve(&[0, 2]);
        assert!(EquatorialCode::from_curves(6, [a, b]).layout().is_err());
    }

    #[test]
    fn json_round_trip() {
        use crate::curve::Generator;
        let c = curve(&[5, 1]).apply(Generator::Sigma1, true).apply(Generator::Sigma3, false);
        assert!(c.crossing_count() > 2);
        let code = EquatorialCode::from(c);
        let j = code.to_json().unwrap();
        assert_eq!(j["format"], CODE_FORMAT);
        assert_eq!(EquatorialCode::from_json(&j).unwrap(), code);
    }

    #[test]
    fn bigon_is_removed() {
        // Curve around {1,2} with an extra excursion through g2 and back.
        let d = ChordDiagram::new(6, &[0, 3, 0, 0, 0, 1], vec![3, 2, 1, 0], vec![1, 0, 3, 2]).unwrap();
        let r = d.reduce();
        assert_eq!(r.code, EquatorialCode::from(curve(&[5, 1])));
        assert_eq!(r.discarded, 0);
    }

    #[test]
    fn closed_trivial_component_is_counted() {
        let d = ChordDiagram::new(6, &[2, 0, 0, 0, 0, 0], vec![1, 0], vec![1, 0]).unwrap();
        let r = d.reduce();
        assert_eq!(r.code.component_count(), 0);
        assert_eq!(r.discarded, 1);
    }
}
