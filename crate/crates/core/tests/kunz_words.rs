use std::collections::BTreeSet;

use kunzlab::{count, enumerate, CountQuery, GapSet, KunzWord};
use proptest::prelude::*;

/// Membership up to `bound` of the set generated by `gens`.
fn generated(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut inside = vec![false; bound as usize + 1];
    inside[0] = true;
    for n in 1..=bound {
        inside[n as usize] = gens.iter().any(|&g| g <= n && inside[(n - g) as usize]);
    }
    inside
}

/// Gaps of the semigroup generated by `gens`, if it is cofinite below
/// `bound`.
fn gaps_of(gens: &[u64], bound: u64) -> Option<Vec<u64>> {
    let inside = generated(gens, bound);
    let m = *gens.iter().min()?;
    if !(bound - m + 1..=bound).all(|n| inside[n as usize]) {
        return None;
    }
    Some((1..=bound).filter(|&n| !inside[n as usize]).collect())
}

/// Elements that are not sums of two nonzero elements.
fn minimal_generators(gaps: &BTreeSet<u64>) -> usize {
    let f = gaps.iter().next_back().copied().unwrap_or(0);
    let m = (1..).find(|n| !gaps.contains(n)).unwrap();
    let inside = |n: u64| !gaps.contains(&n);
    (1..=f + m)
        .filter(|&n| inside(n))
        .filter(|&n| !(1..n).any(|a| inside(a) && inside(n - a)))
        .count()
}

/// The set `{n : n ≥ m·w_{n mod m} + (n mod m)}` is closed under addition.
fn closed_under_addition(word: &[u32]) -> bool {
    let m = word.len() as u64 + 1;
    let apery = |r: u64| {
        if r == 0 {
            0
        } else {
            m * word[r as usize - 1] as u64 + r
        }
    };
    let inside = |n: u64| n >= apery(n % m);
    let top = m * word.iter().copied().max().unwrap_or(0) as u64 + m;
    (1..=top).all(|a| !inside(a) || (a..=top).all(|b| !inside(b) || inside(a + b)))
}

fn all_words(ell: usize, q: u32) -> Vec<Vec<u32>> {
    (0..ell).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                (1..=q).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

fn generators() -> impl Strategy<Value = Vec<u64>> {
    (2u64..9).prop_flat_map(|m| {
        proptest::collection::vec(m + 1..4 * m, 1..4).prop_map(move |mut g| {
            g.push(m);
            g
        })
    })
}

proptest! {
    #[test]
    fn word_invariants_agree_with_gaps(gens in generators()) {
        let Some(gaps) = gaps_of(&gens, 200) else { return Ok(()) };
        let set: BTreeSet<u64> = gaps.iter().copied().collect();
        let gs = GapSet::new(gaps.clone()).unwrap();
        let w = gs.to_word();
        prop_assert!(w.is_kunz());
        let inv = w.invariants().unwrap();
        prop_assert_eq!(inv.multiplicity, *gens.iter().min().unwrap());
        prop_assert_eq!(inv.genus, gaps.len() as u64);
        prop_assert_eq!(inv.frobenius, gaps.last().map_or(-1, |&g| g as i64));
        let q = (inv.frobenius + 1) as u64;
        prop_assert_eq!(inv.depth as u64, q.div_ceil(inv.multiplicity));
        for n in 0..=inv.frobenius as u64 + 5 {
            prop_assert_eq!(w.contains(n), !set.contains(&n));
        }
        prop_assert_eq!(GapSet::from_word(&w).unwrap(), gs.clone());
        prop_assert_eq!(w.is_med(), minimal_generators(&set) as u64 == inv.multiplicity);
        prop_assert_eq!(gs.is_med(), w.is_med());
    }

    #[test]
    fn reduce_depth_stays_kunz(gens in generators()) {
        let Some(gaps) = gaps_of(&gens, 200) else { return Ok(()) };
        let w = GapSet::new(gaps).unwrap().to_word();
        if w.depth() >= 2 {
            let r = w.reduce_depth().unwrap();
            prop_assert!(r.is_kunz());
            prop_assert_eq!(r.depth(), w.depth() - 1);
        }
    }

    #[test]
    fn one_two_words_are_kunz(w in proptest::collection::vec(1u32..=2, 0..40)) {
        prop_assert!(KunzWord::new(w).unwrap().is_kunz());
    }
}

#[test]
fn kunz_conditions_match_closure() {
    for ell in 1..=5 {
        for q in 1..=4u32 {
            if ell == 5 && q == 4 {
                continue;
            }
            for w in all_words(ell, q) {
                let kw = KunzWord::new(w.clone()).unwrap();
                assert_eq!(kw.is_kunz(), closed_under_addition(&w), "{kw}");
            }
        }
    }
}

#[test]
fn gap_round_trip_over_all_short_words() {
    for ell in 1..=6usize {
        for w in enumerate(&CountQuery::new().length(ell).depth_max(4)).unwrap() {
            let gs = w.gaps().unwrap();
            assert_eq!(gs.to_word(), w);
            assert_eq!(gs.genus(), w.genus());
        }
    }
}

#[test]
fn med_agrees_with_generator_count() {
    for ell in 1..=5 {
        for w in all_words(ell, 4) {
            let kw = KunzWord::new(w).unwrap();
            if !kw.is_kunz() {
                continue;
            }
            let set: BTreeSet<u64> = kw.gaps().unwrap().gaps().collect();
            assert_eq!(kw.is_med(), minimal_generators(&set) == ell + 1, "{kw}");
        }
    }
    assert!(KunzWord::new(vec![1, 1]).unwrap().is_med());
    assert!(!KunzWord::new(vec![1, 2]).unwrap().is_med());
}

#[test]
fn reduce_depth_examples() {
    let r = |s: &str| {
        s.parse::<KunzWord>()
            .unwrap()
            .reduce_depth()
            .unwrap()
            .to_compact()
            .unwrap()
    };
    assert_eq!(r("31221"), "21221");
    assert_eq!(r("22"), "11");
}

#[test]
fn med_lift_and_drop_are_inverse() {
    for f in 0..=15u64 {
        for w in enumerate(&CountQuery::new().frobenius(f)).unwrap() {
            let gs = w.gaps().unwrap();
            for m in 2..=8u64 {
                if !gs.contains(m) {
                    assert!(gs.med_lift(m).is_err());
                    continue;
                }
                let lifted = gs.med_lift(m).unwrap();
                assert!(lifted.is_med(), "{gs} lifted by {m}");
                assert_eq!(lifted.multiplicity(), m);
                assert_eq!(lifted.med_drop().unwrap(), (gs.clone(), m));
            }
        }
    }
}

#[test]
fn contains_query_matches_gaps() {
    for n in [1u64, 4, 7, 10] {
        let q = CountQuery::new().frobenius(12).contains(n);
        let direct = enumerate(&CountQuery::new().frobenius(12))
            .unwrap()
            .filter(|w| w.contains(n))
            .count() as u64;
        assert_eq!(count(&q).unwrap(), direct, "n = {n}");
        for w in enumerate(&q).unwrap() {
            assert!(!w.gaps().unwrap().gaps().any(|g| g == n));
        }
    }
}
