//! The constants `c_q` and the explicit upper bounds, evaluated exactly.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational_to_f64;

/// `c_q = √s` with `s = ⌊(q+2)²/4⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CqValue {
    pub q: u32,
    pub squared: u64,
    pub approx: f64,
}

pub fn cq(q: u32) -> CqValue {
    let s = cq_squared(q);
    CqValue {
        q,
        squared: s,
        approx: (s as f64).sqrt(),
    }
}

pub fn cq_squared(q: u32) -> u64 {
    let q = q as u64;
    (q + 2) * (q + 2) / 4
}

/// Bits kept in the mantissa of the directed-rounding power bounds.
const PRECISION: u64 = 256;

/// `m · 2^e`.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigUint,
    e: i64,
}

impl Dyadic {
    fn one() -> Self {
        Dyadic {
            m: BigUint::one(),
            e: 0,
        }
    }

    fn mul(&self, other: &Dyadic, up: bool) -> Dyadic {
        let mut m = &self.m * &other.m;
        let mut e = self.e + other.e;
        let bits = m.bits();
        if bits > PRECISION {
            let shift = bits - PRECISION;
            let dropped = !(&m & ((BigUint::one() << shift) - 1u32)).is_zero();
            m >>= shift;
            e += shift as i64;
            if up && dropped {
                m += 1u32;
            }
        }
        Dyadic { m, e }
    }

    fn magnitude(&self) -> i64 {
        self.m.bits() as i64 + self.e
    }

    /// `self > other`, exactly.
    fn gt(&self, other: &Dyadic) -> bool {
        let (a, b) = (self.magnitude(), other.magnitude());
        if a > b + 1 {
            return true;
        }
        if a + 1 < b {
            return false;
        }
        let base = self.e.min(other.e);
        (&self.m << (self.e - base) as u64) > (&other.m << (other.e - base) as u64)
    }
}

/// Lower (`up = false`) or upper bound on `Π base^exp`.
fn product_bound(terms: &[(u64, u64)], up: bool) -> Dyadic {
    let mut acc = Dyadic::one();
    for &(base, exp) in terms {
        let mut b = Dyadic {
            m: BigUint::from(base),
            e: 0,
        };
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b, up);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b, up);
            }
        }
    }
    acc
}

fn product_exact(terms: &[(u64, u64)]) -> BigUint {
    terms.iter().fold(BigUint::one(), |acc, &(b, e)| {
        acc * BigUint::from(b).pow(e as u32)
    })
}

/// `Π lhs > Π rhs` for products of integer powers. Directed rounding decides
/// almost every case; the rest fall back to exact integers.
pub fn power_product_gt(lhs: &[(u64, u64)], rhs: &[(u64, u64)]) -> bool {
    if product_bound(lhs, false).gt(&product_bound(rhs, true)) {
        return true;
    }
    if !product_bound(lhs, true).gt(&product_bound(rhs, false)) {
        return false;
    }
    product_exact(lhs) > product_exact(rhs)
}

/// `Σ coeff·ln(base) > 0` for rational coefficients.
fn log_combination_positive(terms: &[(u64, Ratio<i64>)]) -> bool {
    let den = terms
        .iter()
        .fold(1i64, |acc, (_, c)| num_integer::lcm(acc, *c.denom()));
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for &(base, c) in terms {
        let k = (c * den).to_integer();
        if k > 0 {
            pos.push((base, k as u64));
        } else if k < 0 {
            neg.push((base, (-k) as u64));
        }
    }
    power_product_gt(&pos, &neg)
}

/// What [`check_c_monotone`] looked at and the first failure, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub sequence_checks: usize,
    pub interpolation_checks: usize,
    pub first_violation: Option<String>,
}

impl MonotoneReport {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Number of steps in the `t` grid of the interpolation check.
const T_STEPS: i64 = 10;

/// Checks `c_q^{q+r+1} > c_{q+1}^{q+r}` for `2 ≤ q ≤ q_max` and that
/// `F(t) = (c_q^t c_{q−1}^{1−t})^{1/(q+t−r)}` strictly decreases along
/// `t = 0, 1/10, …, 1` for `3 ≤ q ≤ q_max`, for every `r` in `r_grid`.
pub fn check_c_monotone(q_max: u32, r_grid: &[Ratio<i64>]) -> Result<MonotoneReport> {
    if q_max < 3 {
        return Err(Error::InvalidParameter(format!(
            "q_max must be >= 3, got {q_max}"
        )));
    }
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    if let Some(r) = r_grid.iter().find(|r| **r < zero || **r > one) {
        return Err(Error::InvalidParameter(format!(
            "r = {r} is outside [0, 1]"
        )));
    }
    let mut report = MonotoneReport {
        sequence_checks: 0,
        interpolation_checks: 0,
        first_violation: None,
    };
    for &r in r_grid {
        let (a, b) = (*r.numer() as u64, *r.denom() as u64);
        for q in 2..=q_max {
            // squared and raised to the b-th power
            let qq = q as u64;
            let lhs = [(cq_squared(q), (qq + 1) * b + a)];
            let rhs = [(cq_squared(q + 1), qq * b + a)];
            report.sequence_checks += 1;
            if !power_product_gt(&lhs, &rhs) && report.first_violation.is_none() {
                report.first_violation = Some(format!("sequence fails at q = {q}, r = {r}"));
            }
        }
        for q in 3..=q_max {
            let qr = Ratio::from_integer(q as i64) - r;
            for k in 0..T_STEPS {
                let t1 = Ratio::new(k, T_STEPS);
                let t2 = Ratio::new(k + 1, T_STEPS);
                // ln F(t1) − ln F(t2), over the positive (q+t1−r)(q+t2−r)
                let (d1, d2) = (qr + t1, qr + t2);
                let ca = t1 * d2 - t2 * d1;
                let cb = (one - t1) * d2 - (one - t2) * d1;
                report.interpolation_checks += 1;
                let terms = [(cq_squared(q), ca), (cq_squared(q - 1), cb)];
                if !log_combination_positive(&terms) && report.first_violation.is_none() {
                    report.first_violation = Some(format!(
                        "F fails between t = {t1} and {t2} at q = {q}, r = {r}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// `coeff · base^{num/den}` with a positive rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPower {
    pub coeff: BigRational,
    pub base: BigUint,
    pub num: u64,
    pub den: u64,
}

impl RootPower {
    pub fn new(coeff: BigRational, base: impl Into<BigUint>, num: u64, den: u64) -> Self {
        assert!(den > 0 && coeff.is_positive());
        RootPower {
            coeff,
            base: base.into(),
            num,
            den,
        }
    }

    /// `n ≤ self`, decided by raising both sides to the `den`-th power.
    pub fn bounds_above(&self, n: &BigUint) -> bool {
        let d = self.den as u32;
        let lhs = n.pow(d) * self.coeff.denom().magnitude().pow(d);
        let rhs = self.coeff.numer().magnitude().pow(d) * self.base.pow(self.num as u32);
        lhs <= rhs
    }

    pub fn to_f64(&self) -> f64 {
        let base = self.base.to_f64().unwrap_or(f64::INFINITY);
        rational_to_f64(&self.coeff) * base.powf(self.num as f64 / self.den as f64)
    }

    pub fn ln(&self) -> f64 {
        let base = self.base.to_f64().unwrap_or(f64::INFINITY);
        rational_to_f64(&self.coeff).ln() + base.ln() * self.num as f64 / self.den as f64
    }
}

/// Naive and refined upper bounds on the number of stressed depth-3 words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stressed3Bounds {
    /// `8^{(ℓ−1)/2}` (odd `ℓ`) or `2·8^{(ℓ−2)/2}` (even `ℓ`).
    pub naive: BigUint,
    /// `2^{⌊(3ℓ−3)/2⌋} (11/12)^{⌊(ℓ−1)/2⌋}`.
    pub backelin: BigRational,
}

pub fn stressed3_upper_bounds(ell: u64) -> Result<Stressed3Bounds> {
    if ell == 0 {
        return Err(Error::InvalidParameter("length must be >= 1".into()));
    }
    let naive = if ell % 2 == 1 {
        BigUint::from(8u32).pow(((ell - 1) / 2) as u32)
    } else {
        BigUint::from(2u32) * BigUint::from(8u32).pow(((ell - 2) / 2) as u32)
    };
    Ok(Stressed3Bounds {
        naive,
        backelin: backelin_bound(ell),
    })
}

/// `2^{⌊(3ℓ−3)/2⌋} (11/12)^{⌊(ℓ−1)/2⌋}`.
pub fn backelin_bound(ell: u64) -> BigRational {
    let k = ((ell.max(1) - 1) / 2) as u32;
    let two = BigInt::from(2u32).pow(((3 * ell.max(1) - 3) / 2) as u32);
    BigRational::new(two * BigInt::from(11u32).pow(k), BigInt::from(12u32).pow(k))
}

/// `q^ℓ`, bounding the depth-at-most-`q` words of length `ℓ`.
pub fn words_of_length_bound(ell: u64, q: u32) -> BigUint {
    BigUint::from(q).pow(ell as u32)
}

/// `f · q^{f/(q−1)}`, bounding the depth-`q` semigroups with Frobenius
/// number `f`.
pub fn frobenius_depth_bound(f: u64, q: u32) -> Result<RootPower> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "depth must be >= 2, got {q}"
        )));
    }
    Ok(RootPower::new(
        BigRational::from_integer(f.into()),
        q,
        f,
        q as u64 - 1,
    ))
}

/// `t q^t c_q^{ℓ+√ℓ+10}` enclosed between the values at `⌊√ℓ⌋` and
/// `⌈√ℓ⌉`.
#[derive(Clone, Debug)]
pub struct TailHeavyBound {
    pub lower: RootPower,
    pub upper: RootPower,
}

impl TailHeavyBound {
    /// `n` is at most the bound; uses the lower end, so a `true` answer is
    /// certain.
    pub fn dominates(&self, n: &BigUint) -> bool {
        self.lower.bounds_above(n)
    }
}

pub fn tail_heavy_bound(ell: u64, t: u64, q: u32) -> Result<TailHeavyBound> {
    if t == 0 || q == 0 {
        return Err(Error::InvalidParameter("t and q must be positive".into()));
    }
    let coeff = BigRational::from_integer(BigInt::from(t) * BigInt::from(q).pow(t as u32));
    let s = cq_squared(q);
    let floor = ell.sqrt();
    let ceil = if floor * floor == ell {
        floor
    } else {
        floor + 1
    };
    Ok(TailHeavyBound {
        lower: RootPower::new(coeff.clone(), s, ell + floor + 10, 2),
        upper: RootPower::new(coeff, s, ell + ceil + 10, 2),
    })
}

/// The limiting growth rate of depth-`q` counts as a function of
/// `x = f/m`: 0 up to 1, `2^{x−1}` on `(1, 2]`, and
/// `c_q^{x−q+1} c_{q−1}^{q−x}` on `[q−1, q]` for `q ≥ 3`.
pub fn growth_rate(x: f64) -> f64 {
    if x <= 1.0 {
        return 0.0;
    }
    if x <= 2.0 {
        return (x - 1.0).exp2();
    }
    let q = x.ceil() as u32;
    let hi = cq(q).approx;
    let lo = cq(q - 1).approx;
    hi.powf(x - q as f64 + 1.0) * lo.powf(q as f64 - x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn cq_values() {
        assert_eq!(cq(2).squared, 4);
        assert_eq!(cq(3).squared, 6);
        assert_eq!(cq(4).approx, 3.0);
        for q in 1..50u32 {
            let s = cq_squared(q);
            let expected = if q % 2 == 0 {
                ((q as u64 + 2) / 2).pow(2)
            } else {
                (q as u64 + 1) * (q as u64 + 3) / 4
            };
            assert_eq!(s, expected);
        }
    }

    #[test]
    fn critical_instances() {
        // c_3^{1/4} < c_2^{1/3}, i.e. 6^3 < 2^8
        assert!(power_product_gt(&[(2, 8)], &[(6, 3)]));
        // c_2^4 = 16 against c_3^3 = 6^{3/2}
        assert!(power_product_gt(&[(4, 4)], &[(6, 3)]));
        assert!(!power_product_gt(&[(6, 3)], &[(6, 3)]));
    }

    #[test]
    fn directed_rounding_agrees_with_exact() {
        for (a, ea, b, eb) in [
            (3u64, 400u64, 2u64, 634u64),
            (7, 300, 49, 150),
            (10, 99, 3, 208),
        ] {
            let exact = BigUint::from(a).pow(ea as u32) > BigUint::from(b).pow(eb as u32);
            assert_eq!(power_product_gt(&[(a, ea)], &[(b, eb)]), exact);
        }
    }

    #[test]
    fn monotone_small_grid() {
        let grid = [
            Ratio::from_integer(0),
            Ratio::new(1, 2),
            Ratio::from_integer(1),
        ];
        let report = check_c_monotone(60, &grid).unwrap();
        assert!(report.ok(), "{report:?}");
        assert!(check_c_monotone(2, &grid).is_err());
    }

    #[test]
    fn stressed_bounds() {
        let b = stressed3_upper_bounds(3).unwrap();
        assert_eq!(b.backelin, ratio(22, 3));
        assert_eq!(
            stressed3_upper_bounds(2).unwrap().naive,
            BigUint::from(2u32)
        );
    }

    #[test]
    fn root_power_comparison() {
        // 2 · 3^{5/2} ≈ 31.18
        let r = RootPower::new(BigRational::from_integer(2.into()), 3u32, 5, 2);
        assert!(r.bounds_above(&BigUint::from(31u32)));
        assert!(!r.bounds_above(&BigUint::from(32u32)));
    }

    #[test]
    fn growth_rate_values() {
        assert_eq!(growth_rate(0.5), 0.0);
        assert!((growth_rate(2.0) - 2.0).abs() < 1e-12);
        assert!((growth_rate(3.0) - 6f64.sqrt()).abs() < 1e-12);
        assert!((growth_rate(3.5) - 2.711).abs() < 1e-3);
        for q in 2..=8 {
            let x = q as f64;
            assert!((growth_rate(x - 1e-9) - growth_rate(x + 1e-9)).abs() < 1e-6);
        }
    }
}
