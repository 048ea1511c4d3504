use std::collections::HashMap;

use proptest::prelude::*;
use tangle3::curve::catalog::disk_boundary;
use tangle3::curve::{Curve, Generator, TwistLetter, TwistWord};
use tangle3::dehn::{extract, pants_weights, phi, window_counts};

const SIGMAS: [Generator; 3] = [Generator::Sigma1, Generator::Sigma2, Generator::Sigma3];
const TAUS: [Generator; 3] = [Generator::Tau1, Generator::Tau2, Generator::Tau3];

fn word_strategy(max: usize) -> impl Strategy<Value = TwistWord> {
    prop::collection::vec((0usize..3, any::<bool>()), 0..=max)
        .prop_map(|v| TwistWord::new(v.into_iter().map(|(g, s)| TwistLetter::new(SIGMAS[g], s)).collect()))
}

/// All words of length `len` over the six signed sigma letters without
/// immediate cancellation.
fn words(len: usize) -> Vec<TwistWord> {
    let mut out = vec![Vec::<TwistLetter>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for g in SIGMAS {
                for s in [true, false] {
                    let l = TwistLetter::new(g, s);
                    if w.last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out.into_iter().map(TwistWord::new).collect()
}

fn images_up_to(len: usize) -> Vec<Curve> {
    let mut out = Vec::new();
    for l in 0..=len {
        for w in words(l) {
            for i in 1..=3 {
                out.push(disk_boundary(i).apply_word(&w));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn injective_on_short_word_images() {
    let curves = images_up_to(5);
    let mut seen: HashMap<_, &Curve> = HashMap::new();
    for c in &curves {
        let f = phi(c).unwrap_or_else(|e| panic!("{c}: {e}"));
        if let Some(prev) = seen.insert(f, c) {
            panic!("{prev} and {c} share coordinates {f:?}");
        }
    }
    assert!(curves.len() > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn half_twist_shifts_own_coordinate_by_p(w in word_strategy(8), start in 1u8..=3, i in 0usize..3) {
        let c = disk_boundary(start).apply_word(&w);
        let before = phi(&c).unwrap();
        let after = phi(&c.apply(TAUS[i], true)).unwrap();
        prop_assert_eq!(before.p, after.p);
        for j in 0..3 {
            if j == i {
                prop_assert_eq!(after.q_prime[j] - before.q_prime[j], before.p[j] as i64);
            } else {
                prop_assert_eq!(after.q_prime[j], before.q_prime[j]);
            }
        }
    }

    #[test]
    fn weights_match_window_formula(w in word_strategy(8)) {
        let c = disk_boundary(1).apply_word(&w);
        let coord = extract(&c).unwrap();
        let counts = window_counts(&c);
        prop_assert_eq!(coord.window_counts(), counts);
        prop_assert_eq!(pants_weights(counts).unwrap(), coord.weights);
        let diag = coord.weights.diagonal();
        prop_assert!(diag.iter().filter(|&&x| x > 0).count() <= 1);
    }

    #[test]
    fn sigmas_fix_the_far_intersection(w in word_strategy(8), start in 1u8..=3, positive in any::<bool>()) {
        // s1 is supported near punctures {2,3}, away from the third disk;
        // s2 near {4,5}, away from the first. Only p is local: the twist
        // coordinate is measured against standard arcs of the pants, which
        // change when the other end of an arc moves to another disk.
        let c = disk_boundary(start).apply_word(&w);
        let before = extract(&c).unwrap();
        let a = extract(&c.apply(Generator::Sigma1, positive)).unwrap();
        prop_assert_eq!(a.disks[2].p, before.disks[2].p);
        let b = extract(&c.apply(Generator::Sigma2, positive)).unwrap();
        prop_assert_eq!(b.disks[0].p, before.disks[0].p);
    }
}
