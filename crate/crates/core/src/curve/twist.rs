//! Half twists acting on curves.
//!
//! A closed crossing sequence is read as a loop in the graph dual to the two
//! hemispheres, whose fundamental group is generated by the puncture loops
//! `l_k = (down g_{k-1}, up g_k)`. A half twist swapping adjacent punctures
//! `j, j+1` acts on these loops by the standard braid automorphism; the image
//! loop is written back as a crossing sequence and reduced, which yields the
//! minimal-position image curve.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{path, Curve};

/// Elementary half twist on the disk around segment `pair` (punctures `pair`
/// and `pair + 1`, 0-based). `positive` is the counter-clockwise direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Elementary {
    pub pair: u8,
    pub positive: bool,
}

impl Elementary {
    fn inverse(self) -> Self {
        Elementary { pair: self.pair, positive: !self.positive }
    }
}

/// Named half-twist generators of the mapping class group of the
/// 6-punctured sphere used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// Half twist on punctures {2,3}.
    Sigma1,
    /// Half twist on punctures {4,5}.
    Sigma2,
    /// Half twist on punctures {1,2}; the same map as `Tau1`.
    Sigma3,
    Tau1,
    Tau2,
    Tau3,
    Delta1,
    Delta2,
    Delta3,
}

impl Generator {
    pub const ALL: [Generator; 9] = [
        Generator::Sigma1,
        Generator::Sigma2,
        Generator::Sigma3,
        Generator::Tau1,
        Generator::Tau2,
        Generator::Tau3,
        Generator::Delta1,
        Generator::Delta2,
        Generator::Delta3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Sigma1 => "s1",
            Generator::Sigma2 => "s2",
            Generator::Sigma3 => "s3",
            Generator::Tau1 => "t1",
            Generator::Tau2 => "t2",
            Generator::Tau3 => "t3",
            Generator::Delta1 => "d1",
            Generator::Delta2 => "d2",
            Generator::Delta3 => "d3",
        }
    }

    /// The support disk as `h(D_j)`: returns `(h, j)` where `h` is a word of
    /// elementary twists (first letter acts first) and `D_j` is the disk
    /// around segment `j`.
    fn support(self) -> (&'static [Elementary], u8) {
        const NONE: &[Elementary] = &[];
        match self {
            Generator::Sigma1 => (NONE, 1),
            Generator::Sigma2 => (NONE, 3),
            Generator::Sigma3 | Generator::Tau1 => (NONE, 0),
            Generator::Tau2 => (NONE, 2),
            Generator::Tau3 => (NONE, 4),
            Generator::Delta1 => (super::catalog::DELTA1_SUPPORT.0, super::catalog::DELTA1_SUPPORT.1),
            Generator::Delta2 => (super::catalog::DELTA2_SUPPORT.0, super::catalog::DELTA2_SUPPORT.1),
            Generator::Delta3 => (super::catalog::DELTA3_SUPPORT.0, super::catalog::DELTA3_SUPPORT.1),
        }
    }

    /// Elementary expansion of the positive twist.
    fn expand(self) -> Vec<Elementary> {
        let (h, j) = self.support();
        let mut out: Vec<Elementary> = h.iter().rev().map(|e| e.inverse()).collect();
        out.push(Elementary { pair: j, positive: true });
        out.extend_from_slice(h);
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistLetter {
    pub generator: Generator,
    /// `true` for the counter-clockwise twist, `false` for its inverse.
    pub positive: bool,
}

impl TwistLetter {
    pub fn new(generator: Generator, positive: bool) -> Self {
        TwistLetter { generator, positive }
    }

    pub fn inverse(self) -> Self {
        TwistLetter { generator: self.generator, positive: !self.positive }
    }

    fn expand(self) -> Vec<Elementary> {
        let pos = self.generator.expand();
        if self.positive {
            pos
        } else {
            pos.into_iter().rev().map(Elementary::inverse).collect()
        }
    }
}

/// A finite sequence of signed generators. The leftmost letter acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistWord {
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn identity() -> Self {
        TwistWord::default()
    }

    pub fn new(letters: Vec<TwistLetter>) -> Self {
        TwistWord { letters }
    }

    pub fn single(generator: Generator, positive: bool) -> Self {
        TwistWord { letters: vec![TwistLetter::new(generator, positive)] }
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: TwistLetter) {
        self.letters.push(letter);
    }

    pub fn inverse(&self) -> Self {
        TwistWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TwistWord { letters }
    }

    pub fn power(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = TwistWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    pub(crate) fn elementary(&self) -> Vec<Elementary> {
        self.letters.iter().flat_map(|l| l.expand()).collect()
    }

    pub fn puncture_permutation(&self, punctures: u8) -> PuncturePermutation {
        let mut perm = PuncturePermutation::identity(punctures);
        for e in self.elementary() {
            perm.then_swap(e.pair, (e.pair + 1) % punctures);
        }
        perm
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.positive {
                    l.generator.name().to_string()
                } else {
                    format!("{}^-1", l.generator.name())
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Where each puncture is carried by a word. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PuncturePermutation {
    images: Vec<u8>,
}

impl PuncturePermutation {
    pub fn identity(punctures: u8) -> Self {
        PuncturePermutation { images: (0..punctures).collect() }
    }

    fn then_swap(&mut self, a: u8, b: u8) {
        for x in self.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    /// Image of the 1-based puncture `p`.
    pub fn image(&self, p: u8) -> u8 {
        self.images[(p - 1) as usize] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    /// Images of punctures `1..=n` in order.
    pub fn images(&self) -> Vec<u8> {
        self.images.iter().map(|x| x + 1).collect()
    }
}

/// Signed puncture-loop letter: `+k` is `l_{k-1}`, `-k` its inverse.
type Loop = i16;

fn loop_letter(k: u8, positive: bool) -> Loop {
    let v = k as i16 + 1;
    if positive {
        v
    } else {
        -v
    }
}

fn to_loops(n: u8, seq: &[u8]) -> Vec<Loop> {
    let mut out = Vec::new();
    for pair in seq.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        let mut k = (a + 1) % n;
        loop {
            out.push(loop_letter(k, true));
            if k == b {
                break;
            }
            k = (k + 1) % n;
        }
    }
    out
}

fn to_crossings(n: u8, loops: &[Loop]) -> Vec<u8> {
    let mut out = Vec::with_capacity(loops.len() * 2);
    for &l in loops {
        let k = (l.unsigned_abs() - 1) as u8;
        let prev = (k + n - 1) % n;
        if l > 0 {
            out.extend_from_slice(&[prev, k]);
        } else {
            out.extend_from_slice(&[k, prev]);
        }
    }
    out
}

fn twist_loops(n: u8, loops: &[Loop], e: Elementary) -> Vec<Loop> {
    let j = e.pair;
    let j1 = (j + 1) % n;
    let mut out = Vec::with_capacity(loops.len() * 3);
    let invert = |w: &[Loop]| -> Vec<Loop> { w.iter().rev().map(|x| -x).collect() };
    for &l in loops {
        let k = (l.unsigned_abs() - 1) as u8;
        let image: Vec<Loop> = if k == j {
            if e.positive {
                vec![loop_letter(j, true), loop_letter(j1, true), loop_letter(j, false)]
            } else {
                vec![loop_letter(j1, true)]
            }
        } else if k == j1 {
            if e.positive {
                vec![loop_letter(j, true)]
            } else {
                vec![loop_letter(j1, false), loop_letter(j, true), loop_letter(j1, true)]
            }
        } else {
            vec![loop_letter(k, true)]
        };
        if l > 0 {
            out.extend(image);
        } else {
            out.extend(invert(&image));
        }
    }
    out
}

fn free_reduce(loops: Vec<Loop>) -> Vec<Loop> {
    let mut out: Vec<Loop> = Vec::with_capacity(loops.len());
    for x in loops {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub(crate) fn apply_elementary(n: u8, seq: &[u8], word: &[Elementary]) -> Vec<u8> {
    if seq.is_empty() {
        return Vec::new();
    }
    let mut loops = to_loops(n, seq);
    for &e in word {
        loops = free_reduce(twist_loops(n, &loops, e));
    }
    path::reduce_cyclic(&to_crossings(n, &loops))
}

impl Curve {
    pub fn apply_word(&self, word: &TwistWord) -> Curve {
        let seq = apply_elementary(self.punctures, &self.seq, &word.elementary());
        Curve::from_raw(self.punctures, &seq)
    }

    pub fn apply(&self, generator: Generator, positive: bool) -> Curve {
        self.apply_word(&TwistWord::single(generator, positive))
    }

    /// Half twist on punctures `pair, pair + 1` (0-based), for any puncture
    /// count.
    pub fn half_twist(&self, pair: u8, positive: bool) -> Curve {
        let seq = apply_elementary(self.punctures, &self.seq, &[Elementary { pair, positive }]);
        Curve::from_raw(self.punctures, &seq)
    }
}
