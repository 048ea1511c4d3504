//! Certificates for curves bounding (or not bounding) a disk in the
//! trivial-tangle complement.
//!
//! The engine puts a curve into standard position with respect to the outer
//! pair of pants, reads off how many arcs of each catalog type it has, and
//! fires obstruction rules on those weights. When no rule concludes, it
//! applies twist moves that preserve the bounding property and tries again.
//! `Unknown` is a legitimate answer.
//!
//! Everything is computed in a rotated frame where the dominant disk (the
//! first one carrying a returning arc) is disk 1. In that frame disks are
//! indexed counter-clockwise from it, so the neighbour across the seam that
//! precedes it is disk 2 and the one after is disk 3.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::curve::{Curve, CurveError, Generator, Hemisphere, TwistLetter, TwistWord, PUNCTURES};
use crate::dehn::{self, DehnCoord, DehnError, PantsArc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("curve is not essential")]
    Inessential,
    #[error("no disk carries a returning arc")]
    NoReturningArc,
    #[error("arc `{0}` is not in the standard catalog")]
    NotStandard(String),
    #[error("arc types {0} and {1} occur together")]
    Exclusion(&'static str, &'static str),
    #[error(transparent)]
    Dehn(#[from] DehnError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CertVerdict {
    Bounds,
    DoesNotBound,
    Unknown,
}

pub type Weights = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleStep {
    pub name: &'static str,
    pub weights_before: Weights,
    pub weights_after: Weights,
}

/// Twist moves that send bounding curves to bounding curves and back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    /// `d1 d2^-1` (positive) or `d2 d1^-1`.
    Delta12(bool),
    Delta3(bool),
    /// Half twist on the disk `E_i'`, `i` in 1..=3.
    Tau(u8, bool),
}

impl Move {
    pub const ALL: [Move; 10] = [
        Move::Delta12(true),
        Move::Delta12(false),
        Move::Delta3(true),
        Move::Delta3(false),
        Move::Tau(1, true),
        Move::Tau(1, false),
        Move::Tau(2, true),
        Move::Tau(2, false),
        Move::Tau(3, true),
        Move::Tau(3, false),
    ];

    pub fn inverse(self) -> Move {
        match self {
            Move::Delta12(s) => Move::Delta12(!s),
            Move::Delta3(s) => Move::Delta3(!s),
            Move::Tau(i, s) => Move::Tau(i, !s),
        }
    }

    pub fn word(self) -> TwistWord {
        let l = TwistLetter::new;
        TwistWord::new(match self {
            Move::Delta12(true) => vec![l(Generator::Delta1, true), l(Generator::Delta2, false)],
            Move::Delta12(false) => vec![l(Generator::Delta2, true), l(Generator::Delta1, false)],
            Move::Delta3(s) => vec![l(Generator::Delta3, s)],
            Move::Tau(i, s) => {
                let g = match i {
                    1 => Generator::Tau1,
                    2 => Generator::Tau2,
                    _ => Generator::Tau3,
                };
                vec![l(g, s)]
            }
        })
    }

    fn rule_name(self) -> &'static str {
        match self {
            Move::Delta12(_) => "euclid_delta12",
            Move::Delta3(_) => "delta3",
            Move::Tau(..) => "tau",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Delta12(true) => f.write_str("d1d2^-1"),
            Move::Delta12(false) => f.write_str("d2d1^-1"),
            Move::Delta3(s) => write!(f, "d3{}", if *s { "" } else { "^-1" }),
            Move::Tau(i, s) => write!(f, "t{i}{}", if *s { "" } else { "^-1" }),
        }
    }
}

impl std::str::FromStr for Move {
    type Err = CertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Move::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| CurveError::Malformed(format!("unknown move `{s}`")).into())
    }
}

pub fn twist_equivalence_step(curve: &Curve, mv: Move) -> Curve {
    curve.apply_word(&mv.word())
}

/// How a bounding verdict is witnessed: after `moves`, the curve is parallel
/// to `E_disk'`, so the original bounds the image of that disk under the
/// inverse moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub disk: u8,
    pub moves: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: CertVerdict,
    pub rules: Vec<RuleStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    /// Name of the last rule in the trace.
    pub fn last_rule(&self) -> Option<&'static str> {
        self.rules.last().map(|r| r.name)
    }
}

fn pants_weight_map(coord: &DehnCoord) -> Weights {
    let w = &coord.weights;
    [("x11", w.x11), ("x12", w.x12), ("x13", w.x13), ("x22", w.x22), ("x23", w.x23), ("x33", w.x33)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v as i64))
        .collect()
}

/// Bounds for curves disjoint from the disks, DoesNotBound when every disk
/// lacks a returning arc, `None` otherwise.
pub fn necessary_condition(curve: &Curve) -> Result<Option<Certificate>, CertError> {
    if !curve.is_essential() {
        return Err(CertError::Inessential);
    }
    let coord = dehn::extract(curve)?;
    if let Some(disk) = coord.parallel {
        return Ok(Some(Certificate {
            verdict: CertVerdict::Bounds,
            rules: Vec::new(),
            witness: Some(Witness { disk, moves: Vec::new() }),
        }));
    }
    if coord.weights.diagonal().iter().all(|&x| x <= 1) {
        let w = pants_weight_map(&coord);
        return Ok(Some(Certificate {
            verdict: CertVerdict::DoesNotBound,
            rules: vec![RuleStep { name: "necessary_xii", weights_before: w.clone(), weights_after: w }],
            witness: None,
        }));
    }
    Ok(None)
}

// Frame index (0-based) to disk index after rotation.
const FRAME: [usize; 3] = [0, 2, 1];

/// A curve rotated so that its dominant disk is disk 1, with coordinates in
/// frame order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// The disk (0-based, original labels) moved to position 1.
    pub rotation: usize,
    pub curve: Curve,
    pub coord: DehnCoord,
    pub p: [i64; 3],
    pub q_prime: [i64; 3],
    /// `[x11, x12, x13]` in frame order.
    pub x1: [i64; 3],
}

fn rotate(curve: &Curve, d: usize) -> Result<Curve, CurveError> {
    let n = PUNCTURES as usize;
    let seq: Vec<u8> = curve.crossings().iter().map(|&s| ((s as usize + n - 2 * d) % n) as u8).collect();
    Curve::from_crossings(PUNCTURES, &seq)
}

pub fn frame(curve: &Curve) -> Result<Frame, CertError> {
    if !curve.is_essential() {
        return Err(CertError::Inessential);
    }
    let diag = dehn::extract(curve)?.weights.diagonal();
    let rotation = (0..3).find(|&i| diag[i] > 0).ok_or(CertError::NoReturningArc)?;
    let rotated = rotate(curve, rotation)?;
    let coord = dehn::extract(&rotated)?;
    let p = FRAME.map(|o| coord.disks[o].p as i64);
    let q_prime = FRAME.map(|o| coord.disks[o].q_prime());
    let w = &coord.weights;
    let x1 = [w.x11 as i64, w.x13 as i64, w.x12 as i64];
    Ok(Frame { rotation, curve: rotated, coord, p, q_prime, x1 })
}

impl Frame {
    /// `q_1` with the twist removed.
    pub fn q1(&self) -> i64 {
        self.q_prime[0].rem_euclid(self.p[0])
    }

    pub fn condition3(&self) -> bool {
        let [x11, x12, x13] = self.x1;
        let s = self.q1() + self.p[0];
        x11 + x13 <= s && s < x11 + x12 + x13 && x13 >= self.q1()
    }

    fn weight_map(&self) -> Weights {
        let [x11, x12, x13] = self.x1;
        [("x11", x11), ("x12", x12), ("x13", x13), ("p1", self.p[0]), ("q1", self.q1())]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect()
    }
}

/// The twist parameters chosen for standard position.
pub fn standard_twists(frame: &Frame) -> [i64; 3] {
    let case1 = frame.q1() + frame.p[0] < frame.x1[0] + frame.x1[2];
    [if case1 { 0 } else { -1 }, if frame.p[1] != 0 { -1 } else { 0 }, 0]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Standardized {
    DoesNotBound(Certificate),
    Standard { t: [i64; 3], gamma0: Curve },
}

/// Re-twists a framed curve into standard position, or certifies that it
/// does not bound.
pub fn standardize(frame: &Frame) -> Standardized {
    if frame.condition3() {
        let w = frame.weight_map();
        return Standardized::DoesNotBound(Certificate {
            verdict: CertVerdict::DoesNotBound,
            rules: vec![RuleStep { name: "lemma31_cond3", weights_before: w.clone(), weights_after: w }],
            witness: None,
        });
    }
    let t = standard_twists(frame);
    let mut g = frame.curve.clone();
    for i in 0..3 {
        let p = frame.p[i];
        if p == 0 {
            continue;
        }
        let target = frame.q_prime[i].rem_euclid(p) + p * t[i];
        let delta = (target - frame.q_prime[i]) / p;
        for _ in 0..delta.unsigned_abs() {
            g = g.half_twist(2 * FRAME[i] as u8, delta > 0);
        }
    }
    Standardized::Standard { t, gamma0: g }
}

/// Arc types of the standard diagrams. Primed types start on the upper side
/// of their second disk or its annulus, double-primed ones on the lower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcType {
    T1,
    T2p,
    T2pp,
    T3,
    T4p,
    T4pp,
    T5p,
    T5pp,
    T6p,
    T6pp,
    T7p,
    T7pp,
    T8p,
    T8pp,
    T9,
    T10p,
    T10pp,
    T11p,
    T11pp,
}

impl ArcType {
    pub const ALL: [ArcType; 19] = [
        ArcType::T1,
        ArcType::T2p,
        ArcType::T2pp,
        ArcType::T3,
        ArcType::T4p,
        ArcType::T4pp,
        ArcType::T5p,
        ArcType::T5pp,
        ArcType::T6p,
        ArcType::T6pp,
        ArcType::T7p,
        ArcType::T7pp,
        ArcType::T8p,
        ArcType::T8pp,
        ArcType::T9,
        ArcType::T10p,
        ArcType::T10pp,
        ArcType::T11p,
        ArcType::T11pp,
    ];

    pub fn name(self) -> &'static str {
        use ArcType::*;
        match self {
            T1 => "m1",
            T2p => "m2'",
            T2pp => "m2''",
            T3 => "m3",
            T4p => "m4'",
            T4pp => "m4''",
            T5p => "m5'",
            T5pp => "m5''",
            T6p => "m6'",
            T6pp => "m6''",
            T7p => "m7'",
            T7pp => "m7''",
            T8p => "m8'",
            T8pp => "m8''",
            T9 => "m9",
            T10p => "m10'",
            T10pp => "m10''",
            T11p => "m11'",
            T11pp => "m11''",
        }
    }

    /// The unprimed family, 1..=11.
    pub fn family(self) -> u8 {
        use ArcType::*;
        match self {
            T1 => 1,
            T2p | T2pp => 2,
            T3 => 3,
            T4p | T4pp => 4,
            T5p | T5pp => 5,
            T6p | T6pp => 6,
            T7p | T7pp => 7,
            T8p | T8pp => 8,
            T9 => 9,
            T10p | T10pp => 10,
            T11p | T11pp => 11,
        }
    }
}

// Signatures are `<disk><side><turns>` for both ends (frame disk labels,
// turns in signed half turns), the lexicographically smaller orientation
// first, with the loop direction appended for arcs returning to disk 1.
const CATALOG: &[(&str, ArcType)] = &[
    ("1L0>1L0+", ArcType::T1),
    ("1L0>1L2+", ArcType::T1),
    ("1L0>1U-1-", ArcType::T2p),
    ("1L0>1U1+", ArcType::T2pp),
    ("1U-1>1U1+", ArcType::T3),
    ("1U1>1U1+", ArcType::T3),
    ("1L0>2L0", ArcType::T4p),
    ("1L0>2L2", ArcType::T4pp),
    ("1L0>2U1", ArcType::T5p),
    ("1L0>2U-1", ArcType::T5pp),
    ("1U1>2L0", ArcType::T6p),
    ("1U-1>2L0", ArcType::T6p),
    ("1U-1>2L2", ArcType::T6pp),
    ("1U-1>2U1", ArcType::T7p),
    ("1U1>2U-1", ArcType::T7pp),
    ("1L0>3U1", ArcType::T8p),
    ("1L0>3L0", ArcType::T8pp),
    ("1U-1>3L-2", ArcType::T9),
    ("1U-1>3L0", ArcType::T9),
    ("1U-1>3U1", ArcType::T10p),
    ("1L0>3L-2", ArcType::T10p),
    ("1L0>3U-1", ArcType::T10p),
    ("1L-2>3U1", ArcType::T10pp),
    ("1L-2>3U-1", ArcType::T10pp),
    ("1U-1>3U-1", ArcType::T11p),
    ("1L-2>3L0", ArcType::T11pp),
];

/// Pairs of types that never occur in the same standard diagram.
pub const EXCLUSIONS: [(ArcType, ArcType); 3] =
    [(ArcType::T8pp, ArcType::T11pp), (ArcType::T2pp, ArcType::T10pp), (ArcType::T2pp, ArcType::T11pp)];

/// Frame signature of an arc of a rotated curve.
pub fn signature(arc: &PantsArc) -> String {
    let label = |d: usize| FRAME.iter().position(|&x| x == d).expect("disk index") + 1;
    let side = |h: Hemisphere| if h == Hemisphere::Upper { "U" } else { "L" };
    let head = format!("{}{}{}", label(arc.from), side(arc.from_side), arc.from_turns);
    let tail = format!("{}{}{}", label(arc.to), side(arc.to_side), arc.to_turns);
    let (fwd, back) = match arc.forward_loop {
        None => ("", ""),
        Some(true) => ("+", "-"),
        Some(false) => ("-", "+"),
    };
    format!("{head}>{tail}{fwd}").min(format!("{tail}>{head}{back}"))
}

pub fn arc_type(arc: &PantsArc) -> Result<ArcType, CertError> {
    let sig = signature(arc);
    CATALOG.iter().find(|(s, _)| *s == sig).map(|&(_, t)| t).ok_or(CertError::NotStandard(sig))
}

/// Arc-type weights of a curve in standard position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardDiagram {
    pub weights: BTreeMap<ArcType, u64>,
    pub coord: DehnCoord,
}

impl StandardDiagram {
    pub fn m(&self, t: ArcType) -> u64 {
        self.weights.get(&t).copied().unwrap_or(0)
    }

    /// `m_i`, summed over both subtypes.
    pub fn family(&self, i: u8) -> u64 {
        self.weights.iter().filter(|(t, _)| t.family() == i).map(|(_, &w)| w).sum()
    }

    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn weight_map(&self) -> Weights {
        ArcType::ALL.iter().map(|&t| (t.name().to_string(), self.m(t) as i64)).collect()
    }
}

/// Decomposes a standardized curve (in frame position) into catalog types.
pub fn arc_type_weights(gamma0: &Curve) -> Result<StandardDiagram, CertError> {
    let coord = dehn::extract(gamma0)?;
    let mut weights = BTreeMap::new();
    for arc in dehn::pants_arcs(gamma0)? {
        *weights.entry(arc_type(&arc)?).or_insert(0) += 1;
    }
    let sd = StandardDiagram { weights, coord };
    for (a, b) in EXCLUSIONS {
        if sd.m(a) > 0 && sd.m(b) > 0 {
            return Err(CertError::Exclusion(a.name(), b.name()));
        }
    }
    Ok(sd)
}

fn fired(name: &'static str, sd: &StandardDiagram) -> Certificate {
    let w = sd.weight_map();
    Certificate {
        verdict: CertVerdict::DoesNotBound,
        rules: vec![RuleStep { name, weights_before: w.clone(), weights_after: w }],
        witness: None,
    }
}

/// A bounding curve in standard position has an arc of type 1 or 3.
pub fn rule_m1m3(sd: &StandardDiagram) -> Option<Certificate> {
    (sd.family(1) + sd.family(3) == 0).then(|| fired("lemma32_m1m3", sd))
}

pub fn rule_lemma35(sd: &StandardDiagram) -> Option<Certificate> {
    use ArcType::*;
    let hit = sd.m(T3) > 0
        && sd.m(T2p) == 0
        && sd.m(T8p) == 0
        && sd.m(T11p) == 0
        && sd.m(T8pp) + sd.m(T11pp) > 0;
    hit.then(|| fired("lemma35", sd))
}

/// One pass of the static rules. `Ok(None)` means nothing fired.
fn static_rules(curve: &Curve) -> Result<Option<Certificate>, CertError> {
    if let Some(c) = necessary_condition(curve)? {
        return Ok(Some(c));
    }
    let f = frame(curve)?;
    let gamma0 = match standardize(&f) {
        Standardized::DoesNotBound(c) => return Ok(Some(c)),
        Standardized::Standard { gamma0, .. } => gamma0,
    };
    let sd = match arc_type_weights(&gamma0) {
        Ok(sd) => sd,
        Err(CertError::NotStandard(_) | CertError::Exclusion(..)) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(rule_m1m3(&sd).or_else(|| rule_lemma35(&sd)))
}

/// Runs the rule battery, descending along `d`-moves while the crossing
/// number drops.
pub fn certify(curve: &Curve) -> Result<Certificate, CertError> {
    if !curve.is_essential() {
        return Err(CertError::Inessential);
    }
    let initial = dehn::extract(curve)?;
    let total: u64 = initial.disks.iter().map(|d| d.p).sum();
    let bound = 4 * total.max(1);
    let mut trace: Vec<RuleStep> = Vec::new();
    let mut moves: Vec<Move> = Vec::new();
    let mut current = curve.clone();
    for _ in 0..=bound {
        if let Some(mut c) = static_rules(&current)? {
            if let Some(w) = c.witness.as_mut() {
                w.moves = moves.iter().map(|m| m.to_string()).collect();
            }
            trace.append(&mut c.rules);
            c.rules = trace;
            return Ok(c);
        }
        let best = Move::ALL
            .into_iter()
            .map(|m| (twist_equivalence_step(&current, m), m))
            .min_by_key(|(c, _)| c.crossing_count())
            .expect("moves");
        if best.0.crossing_count() >= current.crossing_count() {
            break;
        }
        let before = pants_weight_map(&dehn::extract(&current)?);
        let after = pants_weight_map(&dehn::extract(&best.0)?);
        trace.push(RuleStep { name: best.1.rule_name(), weights_before: before, weights_after: after });
        moves.push(best.1);
        current = best.0;
    }
    Ok(Certificate { verdict: CertVerdict::Unknown, rules: trace, witness: None })
}

/// Text rendering for the CLI.
pub fn to_text(cert: &Certificate) -> String {
    let mut s = format!("verdict {:?}\n", cert.verdict);
    for r in &cert.rules {
        s.push_str(&format!("  {} {}\n", r.name, json!(r.weights_after)));
    }
    if let Some(w) = &cert.witness {
        s.push_str(&format!("  witness: parallel to E{} after [{}]\n", w.disk, w.moves.join(" ")));
    }
    s
}
