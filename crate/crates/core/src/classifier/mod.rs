//! Classification of the tangles `F(trivial)` for twist words `F`.
//!
//! Two tangles agree exactly when the images of the first disk boundary are
//! isotopic and the remaining two strands form the same rational 2-tangle.
//! The second part is read off from the image of the third disk boundary:
//! after the two endpoints of the first strand are filled in, it is the
//! unique compressing curve of the 2-subtangle on a 4-punctured sphere, and
//! its slope is the Conway fraction. The strands of the 2-subtangle are
//! compared unlabeled.

mod parse;
pub mod slope;

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::curve::catalog::disk_boundary;
use crate::curve::{Curve, CurveError, TwistWord};
use crate::dehn::{self, DehnError, Phi};
use crate::oracle;

pub use parse::{parse_word, ParseError};
pub use slope::{slope, Slope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Dehn(#[from] DehnError),
    #[error("curve is inessential after filling")]
    Inessential,
    #[error("expected a curve on the 4-punctured sphere, got {0} punctures")]
    WrongSurface(u8),
    #[error("classifier and oracle disagree: classifier says {classifier:?}, oracle says isotopic = {oracle}")]
    OracleDisagreement { classifier: Verdict, oracle: bool },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Fills the two punctures of `pair` (1-based) on the 6-punctured sphere and
/// returns the curve on the remaining 4-punctured sphere, whose punctures are
/// relabeled in cyclic order.
pub fn fill_puncture_pair(curve: &Curve, pair: [u8; 2]) -> Result<Curve, ClassifyError> {
    let n = curve.punctures();
    if pair[0] == pair[1] || pair.iter().any(|&p| p == 0 || p > n) {
        return Err(CurveError::Malformed(format!("bad puncture pair {pair:?}")).into());
    }
    let kept: Vec<u8> = (0..n).filter(|&j| !pair.contains(&(j + 1))).collect();
    // Old segment s runs from puncture s to s + 1; it becomes the new segment
    // starting at the last kept puncture at or before s.
    let merged = |s: u8| -> u8 {
        match kept.iter().rposition(|&r| r <= s) {
            Some(k) => k as u8,
            None => kept.len() as u8 - 1,
        }
    };
    let seq: Vec<u8> = curve.crossings().iter().map(|&s| merged(s)).collect();
    let filled = Curve::from_crossings(kept.len() as u8, &seq)?;
    if !filled.is_essential() {
        return Err(ClassifyError::Inessential);
    }
    Ok(filled)
}

/// Invariant of the 2-subtangle formed by the second and third strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubtangleInvariant {
    /// Punctures (1-based) inside the image of the first disk boundary.
    pub pair: [u8; 2],
    pub slope: Slope,
}

fn enclosed_pair(curve: &Curve) -> Result<[u8; 2], ClassifyError> {
    let (small, _) = curve.enclosed_punctures();
    match small[..] {
        [a, b] => Ok([a, b]),
        _ => Err(ClassifyError::Internal(format!("{curve} does not enclose two punctures"))),
    }
}

pub fn subtangle_invariant(word: &TwistWord) -> Result<SubtangleInvariant, ClassifyError> {
    let pair = enclosed_pair(&disk_boundary(1).apply_word(word))?;
    let projected = fill_puncture_pair(&disk_boundary(3).apply_word(word), pair)?;
    Ok(SubtangleInvariant { pair, slope: slope(&projected)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Isotopic,
    NotIsotopic,
}

/// The first component that decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    CoordinateMismatch,
    SlopeMismatch,
    FullMatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    #[serde(rename = "phi_F")]
    pub phi_f: Phi,
    #[serde(rename = "phi_G")]
    pub phi_g: Phi,
    #[serde(rename = "subtangle_F")]
    pub subtangle_f: SubtangleInvariant,
    #[serde(rename = "subtangle_G")]
    pub subtangle_g: SubtangleInvariant,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
    pub rule: Rule,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "verdict     {:?}", self.verdict);
        let _ = writeln!(s, "rule        {:?}", self.rule);
        let _ = writeln!(s, "phi_F       {:?} {}", self.phi_f.tuple(), flag(self.phi_f.parallel));
        let _ = writeln!(s, "phi_G       {:?} {}", self.phi_g.tuple(), flag(self.phi_g.parallel));
        let _ = writeln!(s, "subtangle_F {:?} slope {}", self.subtangle_f.pair, self.subtangle_f.slope);
        let _ = writeln!(s, "subtangle_G {:?} slope {}", self.subtangle_g.pair, self.subtangle_g.slope);
        if let Some(o) = self.oracle {
            let _ = writeln!(s, "oracle      {}", if o { "Isotopic" } else { "NotIsotopic" });
        }
        s
    }
}

fn flag(parallel: Option<u8>) -> String {
    parallel.map(|i| format!("(parallel to E{i})")).unwrap_or_default()
}

/// Decides whether `wF(trivial)` and `wG(trivial)` are isotopic.
pub fn classify(w_f: &TwistWord, w_g: &TwistWord) -> Result<ClassificationReport, ClassifyError> {
    let e1 = disk_boundary(1);
    let phi_f = dehn::phi(&e1.apply_word(w_f))?;
    let phi_g = dehn::phi(&e1.apply_word(w_g))?;
    let subtangle_f = subtangle_invariant(w_f)?;
    let subtangle_g = subtangle_invariant(w_g)?;
    let rule = if phi_f != phi_g {
        Rule::CoordinateMismatch
    } else if subtangle_f != subtangle_g {
        Rule::SlopeMismatch
    } else {
        Rule::FullMatch
    };
    let verdict = if rule == Rule::FullMatch { Verdict::Isotopic } else { Verdict::NotIsotopic };
    Ok(ClassificationReport { verdict, phi_f, phi_g, subtangle_f, subtangle_g, oracle: None, rule })
}

/// `classify` followed by the meridian oracle; a disagreement is an error.
pub fn classify_with_oracle(w_f: &TwistWord, w_g: &TwistWord) -> Result<ClassificationReport, ClassifyError> {
    let mut report = classify(w_f, w_g)?;
    let o = oracle::tangles_isotopic_oracle(w_f, w_g);
    report.oracle = Some(o);
    if o != (report.verdict == Verdict::Isotopic) {
        return Err(ClassifyError::OracleDisagreement { classifier: report.verdict, oracle: o });
    }
    Ok(report)
}

/// Per-word data: images of the three disk boundaries and the subtangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantsReport {
    pub permutation: Vec<u8>,
    pub images: Vec<(Curve, [u8; 2], dehn::DehnCoord)>,
    pub subtangle: SubtangleInvariant,
}

pub fn invariants_report(word: &TwistWord) -> Result<InvariantsReport, ClassifyError> {
    let mut images = Vec::new();
    for i in 1..=3 {
        let c = disk_boundary(i).apply_word(word);
        let pair = enclosed_pair(&c)?;
        let coord = dehn::extract(&c)?;
        images.push((c, pair, coord));
    }
    Ok(InvariantsReport {
        permutation: word.puncture_permutation(6).images(),
        images,
        subtangle: subtangle_invariant(word)?,
    })
}

impl InvariantsReport {
    pub fn to_json(&self) -> serde_json::Value {
        let curves: Vec<_> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, (c, pair, coord))| {
                json!({
                    "name": format!("E{}", i + 1),
                    "curve": c.to_string(),
                    "crossings": c.crossings(),
                    "pair": pair,
                    "dehn": coord.to_json(),
                })
            })
            .collect();
        json!({
            "permutation": self.permutation,
            "curves": curves,
            "subtangle": self.subtangle,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "permutation {:?}", self.permutation);
        for (i, (c, pair, coord)) in self.images.iter().enumerate() {
            let phi = coord.phi();
            let _ = writeln!(s, "E{}  pair {:?}  phi {:?} {}  {}", i + 1, pair, phi.tuple(), flag(phi.parallel), c);
        }
        let _ = writeln!(s, "subtangle pair {:?} slope {}", self.subtangle.pair, self.subtangle.slope);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Generator;

    fn w(text: &str) -> TwistWord {
        parse_word(text).unwrap()
    }

    #[test]
    fn filling() {
        let c = fill_puncture_pair(&disk_boundary(3), [1, 2]).unwrap();
        assert_eq!(c, slope::c_infinity());
        assert_eq!(fill_puncture_pair(&disk_boundary(1), [1, 2]), Err(ClassifyError::Inessential));
        let t = fill_puncture_pair(&disk_boundary(3).apply(Generator::Sigma2, true), [1, 2]).unwrap();
        assert!(t.is_essential());
        assert!(oracle::bounds_disk_oracle(&disk_boundary(3).apply(Generator::Sigma2, true)) == false);
    }

    #[test]
    fn identity_and_sigma3() {
        let id = subtangle_invariant(&TwistWord::identity()).unwrap();
        assert_eq!(id, SubtangleInvariant { pair: [1, 2], slope: Slope::INFINITY });
        assert_eq!(subtangle_invariant(&w("s3")).unwrap(), id);
        assert_eq!(classify(&w(""), &w("")).unwrap().verdict, Verdict::Isotopic);
        assert_eq!(classify(&w("s3"), &w("")).unwrap().verdict, Verdict::Isotopic);
        assert_eq!(classify(&w("s2 s3"), &w("s3 s2")).unwrap().verdict, Verdict::Isotopic);
    }

    #[test]
    fn sigma1_moves_the_first_strand() {
        let r = classify_with_oracle(&w("s1"), &w("")).unwrap();
        assert_eq!(r.verdict, Verdict::NotIsotopic);
        assert_eq!(r.rule, Rule::CoordinateMismatch);
        assert_eq!(r.subtangle_f.pair, [1, 3]);
    }

    #[test]
    fn json_shape() {
        let r = classify_with_oracle(&w("s2"), &w("")).unwrap();
        let v = r.to_json();
        assert_eq!(v["subtangle_G"]["slope"], json!([1, 0]));
        assert_eq!(v["subtangle_G"]["pair"], json!([1, 2]));
        assert!(v["oracle"].is_boolean());
        assert!(v["rule"].is_string());
        assert!(v.get("phi_F").is_some());
    }
}
