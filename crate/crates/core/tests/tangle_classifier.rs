use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle3::classifier::slope::{c_infinity, c_zero, curve_of_slope};
use tangle3::classifier::{
    classify, classify_with_oracle, fill_puncture_pair, parse_word, slope, subtangle_invariant, Slope, Verdict,
};
use tangle3::curve::catalog::disk_boundary;
use tangle3::curve::{Generator, TwistLetter, TwistWord};
use tangle3::oracle::tangles_isotopic_oracle;

const SIGMAS: [Generator; 3] = [Generator::Sigma1, Generator::Sigma2, Generator::Sigma3];

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> TwistWord {
    let len = rng.gen_range(0..=max);
    TwistWord::new((0..len).map(|_| TwistLetter::new(SIGMAS[rng.gen_range(0..3)], rng.gen())).collect())
}

fn all_words(max: usize) -> Vec<TwistWord> {
    let mut layer = vec![TwistWord::identity()];
    let mut out = layer.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for g in SIGMAS {
                for s in [true, false] {
                    let mut v = w.clone();
                    v.push(TwistLetter::new(g, s));
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Slope read off from intersection numbers: |p| and |q| from the two base
/// curves, the sign from which of the slope +1 and -1 curves is met less.
fn slope_by_intersections(c: &tangle3::Curve) -> Slope {
    let p = (c.intersection(&c_zero()) / 2) as i64;
    let q = (c.intersection(&c_infinity()) / 2) as i64;
    if p == 0 || q == 0 {
        return Slope::new(p, q);
    }
    let plus = c.intersection(&c_zero().half_twist(2, true));
    let minus = c.intersection(&c_zero().half_twist(2, false));
    assert_ne!(plus, minus);
    if plus < minus {
        Slope::new(p, q)
    } else {
        Slope::new(-p, q)
    }
}

#[test]
fn slope_agrees_with_intersection_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let mut c = c_infinity();
        for _ in 0..rng.gen_range(0..10) {
            c = c.half_twist(rng.gen_range(0..4), rng.gen());
        }
        assert_eq!(slope(&c).unwrap(), slope_by_intersections(&c), "{c}");
    }
}

#[test]
fn intersection_formula_for_slopes() {
    let mut slopes = vec![Slope::INFINITY];
    for p in -5i64..=5 {
        for q in 1i64..=5 {
            let s = Slope::new(p, q);
            if s.p == p && s.q == q {
                slopes.push(s);
            }
        }
    }
    for a in &slopes {
        for b in &slopes {
            let expected = 2 * (a.p * b.q - a.q * b.p).unsigned_abs() as usize;
            assert_eq!(curve_of_slope(*a).intersection(&curve_of_slope(*b)), expected, "{a} {b}");
        }
    }
}

#[test]
fn horizontal_twists_shift_by_one() {
    let mut c = c_zero();
    for n in 1..8 {
        c = c.half_twist(2, true);
        assert_eq!(slope(&c).unwrap(), Slope::new(n, 1));
    }
    let mut c = c_infinity();
    for n in 1..8 {
        c = c.half_twist(1, true);
        assert_eq!(slope(&c).unwrap(), Slope::new(1, -n));
    }
}

#[test]
fn even_powers_of_sigma2() {
    for n in 1..=4 {
        let w = parse_word(&format!("s2^{}", 2 * n)).unwrap();
        let s = subtangle_invariant(&w).unwrap();
        assert_eq!(s.pair, [1, 2]);
        assert_eq!(s.slope.p.abs().min(s.slope.q.abs()), 1);
        assert_eq!(s.slope.p.abs().max(s.slope.q.abs()), 2 * n);
    }
}

#[test]
fn agrees_with_oracle_exhaustively() {
    let words = all_words(3);
    for f in &words {
        for g in &words {
            let r = classify(f, g).unwrap();
            assert_eq!(r.verdict == Verdict::Isotopic, tangles_isotopic_oracle(f, g), "{f:?} {g:?}");
        }
    }
}

#[test]
fn agrees_with_oracle_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let f = random_word(&mut rng, 10);
        let g = random_word(&mut rng, 10);
        classify_with_oracle(&f, &g).unwrap();
    }
}

#[test]
fn prefix_sigma3_is_invisible() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let s3 = TwistWord::single(Generator::Sigma3, true);
    for _ in 0..200 {
        let w = random_word(&mut rng, 8);
        let r = classify_with_oracle(&s3.then(&w), &w).unwrap();
        assert_eq!(r.verdict, Verdict::Isotopic);
    }
}

#[test]
fn filled_pair_never_meets_the_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let w = random_word(&mut rng, 8);
        let inv = subtangle_invariant(&w).unwrap();
        let perm = w.puncture_permutation(6);
        let mut expected = [perm.image(1), perm.image(2)];
        expected.sort();
        assert_eq!(inv.pair, expected);
        let e3 = disk_boundary(3).apply_word(&w);
        assert!(fill_puncture_pair(&e3, inv.pair).unwrap().is_essential());
    }
}

fn word_strategy(max: usize) -> impl Strategy<Value = TwistWord> {
    prop::collection::vec((0usize..3, any::<bool>()), 0..=max)
        .prop_map(|v| TwistWord::new(v.into_iter().map(|(g, s)| TwistLetter::new(SIGMAS[g], s)).collect()))
}

proptest! {
    #[test]
    fn common_later_factor_does_not_change_verdict(f in word_strategy(6), g in word_strategy(6), u in word_strategy(4)) {
        let a = classify(&f, &g).unwrap().verdict;
        let b = classify(&f.then(&u), &g.then(&u)).unwrap().verdict;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn slope_survives_full_twists_fixing_c_infinity(w in prop::collection::vec((0u8..4, any::<bool>()), 1..8), k in -3i32..=3) {
        let mut c = c_infinity();
        for (pair, pos) in w {
            c = c.half_twist(pair, pos);
        }
        let s = slope(&c).unwrap();
        let mut d = c.clone();
        for _ in 0..2 * k.unsigned_abs() {
            d = d.half_twist(2, k > 0);
        }
        let t = slope(&d).unwrap();
        prop_assert_eq!(t.q, s.q);
        prop_assert_eq!(t.p, s.p + 2 * k as i64 * s.q);
    }
}
