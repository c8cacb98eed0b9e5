use kunzlab::bounds::{
    backelin_bound, check_c_monotone, cq, cq_squared, frobenius_depth_bound, growth_rate,
    power_product_gt, stressed3_upper_bounds, tail_heavy_bound, words_of_length_bound, RootPower,
};
use kunzlab::engine::{count_stressed3, tail_heavy_count, TailHeavySpec};
use kunzlab::{count, CountQuery};
use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use proptest::prelude::*;

#[test]
fn cq_by_parity() {
    for q in 1..=200u32 {
        let q64 = q as u64;
        let s = if q % 2 == 0 {
            (q64 / 2 + 1).pow(2)
        } else {
            (q64 + 1) * (q64 + 3) / 4
        };
        assert_eq!(cq_squared(q), s);
        assert!((cq(q).approx.powi(2) - s as f64).abs() < 1e-6 * s as f64);
    }
    assert_eq!(cq_squared(3), 6);
    assert_eq!(cq_squared(4), 9);
}

#[test]
fn growth_rate_is_continuous_and_increasing() {
    for q in 2..=10 {
        let x = q as f64;
        let left = growth_rate(x - 1e-9);
        let right = growth_rate(x + 1e-9);
        assert!((left - right).abs() < 1e-6, "x = {x}: {left} vs {right}");
    }
    let mut prev = growth_rate(1.0);
    for i in 1..=900 {
        let x = 1.0 + i as f64 * 0.01;
        let r = growth_rate(x);
        assert!(r >= prev - 1e-12, "x = {x}");
        prev = r;
    }
    assert_eq!(growth_rate(0.5), 0.0);
    assert!((growth_rate(3.0) - 6f64.sqrt()).abs() < 1e-12);
}

#[test]
fn cq_root_sequence_is_monotone_far_out() {
    let grid = [Ratio::new(0, 1), Ratio::new(1, 3), Ratio::new(1, 1)];
    let r = check_c_monotone(10_000, &grid).unwrap();
    assert!(r.ok(), "{:?}", r.first_violation);
    assert_eq!(r.sequence_checks, 3 * 9_999);
    assert!(check_c_monotone(2, &grid).is_err());
    assert!(check_c_monotone(10, &[Ratio::new(3, 2)]).is_err());
}

#[test]
fn depth_bound_over_frobenius_grid() {
    for f in 2..=24u64 {
        for q in 2..=f as u32 + 1 {
            let c = count(&CountQuery::new().frobenius(f).depth(q)).unwrap();
            assert!(
                frobenius_depth_bound(f, q).unwrap().bounds_above(c.value()),
                "f = {f}, q = {q}"
            );
        }
    }
}

#[test]
fn words_bound_over_length_grid() {
    for ell in 1..=9u64 {
        for q in 1..=4 {
            let c = count(&CountQuery::new().length(ell as usize).depth_max(q)).unwrap();
            assert!(
                c.value() <= &words_of_length_bound(ell, q),
                "ell = {ell}, q = {q}"
            );
        }
    }
}

#[test]
fn stressed_bounds_dominate_exact_counts() {
    for ell in 1..=20u64 {
        let c = count_stressed3(ell as usize);
        let b = stressed3_upper_bounds(ell).unwrap();
        assert!(c.value() <= &b.naive, "ell = {ell}");
        assert!(c.to_rational() <= b.backelin, "ell = {ell}");
        assert!(b.backelin <= BigRational::from_integer(b.naive.clone().into()));
    }
    assert_eq!(backelin_bound(1), BigRational::from_integer(1.into()));
    assert!(stressed3_upper_bounds(0).is_err());
}

#[test]
fn tail_heavy_bound_dominates() {
    for ell in 1..=12u64 {
        for t in 1..=ell {
            for q in 2..=4u32 {
                let spec = TailHeavySpec::new(ell as usize, t as usize, q).unwrap();
                let c = tail_heavy_count(&spec).unwrap();
                let b = tail_heavy_bound(ell, t, q).unwrap();
                assert!(b.dominates(c.value()), "ell = {ell}, t = {t}, q = {q}");
                assert!(b.lower.to_f64() <= b.upper.to_f64());
            }
        }
    }
}

proptest! {
    #[test]
    fn power_products_compare_exactly(
        lhs in proptest::collection::vec((2u64..50, 0u64..40), 1..4),
        rhs in proptest::collection::vec((2u64..50, 0u64..40), 1..4),
    ) {
        let exact = |v: &[(u64, u64)]| v.iter().fold(BigUint::from(1u32), |a, &(b, e)| a * BigUint::from(b).pow(e as u32));
        prop_assert_eq!(power_product_gt(&lhs, &rhs), exact(&lhs) > exact(&rhs));
    }

    #[test]
    fn root_power_comparison(n in 0u64..5000, base in 2u64..40, num in 1u64..12, den in 1u64..5) {
        let rp = RootPower::new(BigRational::from_integer(1.into()), base, num, den);
        let exact = BigUint::from(n).pow(den as u32) <= BigUint::from(base).pow(num as u32);
        prop_assert_eq!(rp.bounds_above(&BigUint::from(n)), exact);
    }
}
