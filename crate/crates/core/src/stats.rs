//! Multiplicity and genus statistics at fixed Frobenius number, with exact
//! brackets for the limiting constants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::engine::{stressed3_genus_total, Engine};
use crate::error::{Error, Result};
use crate::exact::{int, ratio, rational_to_f64, ExactCount, RationalInterval};
use crate::kunz::CountQuery;
use crate::refdata::ReferenceData;

/// Longest stressed length for which [`stressed3_avg_genus`] enumerates.
pub const STRESSED_GENUS_MAX: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(f: u64) -> Self {
        if f.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Stressed length `2k` or `2k + 1` indexed by `k`.
    fn stressed_len(self, k: i64) -> i64 {
        match self {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k + 1,
        }
    }

    /// First `k` carrying a depth-3 term.
    fn first_k(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => 0,
        }
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            _ => Err(Error::Parse {
                kind: "parity",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Exact enclosure of `C_0` (even) or `C_1 / √2` (odd).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactBracket {
    pub parity: Parity,
    pub j_cut: usize,
    pub lower: BigRational,
    pub upper: BigRational,
}

impl ExactBracket {
    pub fn interval(&self) -> RationalInterval {
        RationalInterval::new(self.lower.clone(), self.upper.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.lower), rational_to_f64(&self.upper))
    }
}

fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `(11/12)^e`.
fn r_pow(e: u64) -> BigRational {
    BigRational::new(
        BigInt::from(11).pow(e as u32),
        BigInt::from(12).pow(e as u32),
    )
}

fn stressed_count(data: &ReferenceData, j: usize) -> Result<BigRational> {
    data.stressed3(j)
        .map(ExactCount::to_rational)
        .ok_or_else(|| Error::OutOfRange(format!("no stressed depth-3 count for length {j}")))
}

/// Partial sum of the stressed-count series through `j_cut` plus a
/// geometric tail from Backelin's bound
/// `#K_3(st; j) <= 2^⌊(3j−3)/2⌋ (11/12)^⌊(j−1)/2⌋`.
pub fn backelin_bracket(
    parity: Parity,
    j_cut: usize,
    data: &ReferenceData,
) -> Result<ExactBracket> {
    if j_cut > data.max_stressed3_len() {
        return Err(Error::OutOfRange(format!(
            "j_cut = {j_cut} exceeds reference data (max {})",
            data.max_stressed3_len()
        )));
    }
    let half = ratio(1, 2);
    let mut sum = BigRational::zero();
    let tail_exp = match parity {
        Parity::Even => {
            for j in (2..=j_cut).step_by(2) {
                sum += stressed_count(data, j)? * pow2(-3 * j as i64 / 2);
            }
            j_cut / 2
        }
        Parity::Odd => {
            for j in (1..=j_cut).step_by(2) {
                sum += stressed_count(data, j)? * pow2(-(3 * j as i64 + 1) / 2);
            }
            j_cut.div_ceil(2)
        }
    };
    let lower = &half + &half * sum;
    let tail = ratio(3, 2) * r_pow(tail_exp as u64);
    Ok(ExactBracket {
        parity,
        j_cut,
        upper: &lower + tail,
        lower,
    })
}

/// Exact counts keyed by an integer statistic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distribution {
    support: BTreeMap<i64, ExactCount>,
    total: ExactCount,
}

impl Distribution {
    pub fn new(support: BTreeMap<i64, ExactCount>) -> Self {
        let total = support.values().cloned().sum();
        Distribution { support, total }
    }

    pub fn support(&self) -> &BTreeMap<i64, ExactCount> {
        &self.support
    }

    pub fn total(&self) -> &ExactCount {
        &self.total
    }

    pub fn count(&self, key: i64) -> ExactCount {
        self.support
            .get(&key)
            .cloned()
            .unwrap_or_else(ExactCount::zero)
    }

    pub fn probability(&self, key: i64) -> BigRational {
        if self.total.is_zero() {
            return BigRational::zero();
        }
        self.count(key).to_rational() / self.total.to_rational()
    }

    pub fn probabilities(&self) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        self.support.keys().map(|&k| (k, self.probability(k)))
    }

    pub fn mean(&self) -> BigRational {
        self.raw_moment_about(&BigRational::zero(), 1)
    }

    /// `E[(X − mean)^n]`.
    pub fn central_moment(&self, n: u32) -> BigRational {
        self.raw_moment_about(&self.mean(), n)
    }

    fn raw_moment_about(&self, c: &BigRational, n: u32) -> BigRational {
        if self.total.is_zero() {
            return BigRational::zero();
        }
        let s: BigRational = self
            .support
            .iter()
            .map(|(&k, v)| {
                let d = int(k) - c;
                num_traits::pow(d, n as usize) * v.to_rational()
            })
            .sum();
        s / self.total.to_rational()
    }
}

/// Semigroups with Frobenius number `f` tallied by `f − 2m`.
pub fn mult_distribution(engine: &Engine, f: u64) -> Result<Distribution> {
    let q = CountQuery::new().frobenius(f);
    let tally = engine.tally(&q, |w| f as i64 - 2 * (w.len() as i64 + 1))?;
    Ok(Distribution::new(tally))
}

/// Weight `2^{−3k−1} #K_3(st; 2k)` (even) or `2^{−3k−3} #K_3(st; 2k+1)`
/// (odd) of the depth-3 term at index `k`.
fn depth3_weight(parity: Parity, k: i64, data: &ReferenceData) -> Result<BigRational> {
    let j = parity.stressed_len(k) as usize;
    let shift = match parity {
        Parity::Even => -3 * k - 1,
        Parity::Odd => -3 * k - 3,
    };
    Ok(stressed_count(data, j)? * pow2(shift))
}

/// Limiting probability that `f − 2m` equals `2k` (even `f`) or `2k + 1`
/// (odd `f`), with the normalizing constant replaced by its bracket.
pub fn limit_mult_mass(
    k: i64,
    bracket: &ExactBracket,
    data: &ReferenceData,
) -> Result<RationalInterval> {
    let parity = bracket.parity;
    let num = if k < 0 {
        pow2(k - 1)
    } else if k < parity.first_k() {
        BigRational::zero()
    } else {
        depth3_weight(parity, k, data)?
    };
    RationalInterval::point(num).div(&bracket.interval())
}

/// Exact genus statistics at a fixed Frobenius number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusStats {
    pub f: u64,
    pub distribution: Distribution,
    /// Mean genus minus `3f/4`.
    pub mean_deviation: BigRational,
    pub variance: BigRational,
    pub third_central: BigRational,
    pub fourth_central: BigRational,
}

impl GenusStats {
    pub fn skewness(&self) -> f64 {
        let v = rational_to_f64(&self.variance);
        if v == 0.0 {
            return 0.0;
        }
        rational_to_f64(&self.third_central) / v.powf(1.5)
    }

    pub fn kurtosis(&self) -> BigRational {
        if self.variance.is_zero() {
            return BigRational::zero();
        }
        &self.fourth_central / (&self.variance * &self.variance)
    }
}

pub fn genus_stats(engine: &Engine, f: u64) -> Result<GenusStats> {
    let q = CountQuery::new().frobenius(f);
    let tally = engine.tally(&q, |w| w.iter().map(|&x| x as i64).sum())?;
    let distribution = Distribution::new(tally);
    let mean_deviation = distribution.mean() - ratio(3 * f as i64, 4);
    Ok(GenusStats {
        f,
        variance: distribution.central_moment(2),
        third_central: distribution.central_moment(3),
        fourth_central: distribution.central_moment(4),
        mean_deviation,
        distribution,
    })
}

/// Average genus `G_j` of the stressed depth-3 words of length `j`.
pub fn stressed3_avg_genus(j: usize) -> Result<BigRational> {
    if j == 0 || j > STRESSED_GENUS_MAX {
        return Err(Error::OutOfRange(format!(
            "stressed length {j} outside 1..={STRESSED_GENUS_MAX}"
        )));
    }
    let (count, genus) = stressed3_genus_total(j);
    Ok(genus.to_rational() / count.to_rational())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LimitConstant {
    Mu0,
    Mu1,
    Gamma0,
    Gamma1,
}

impl LimitConstant {
    pub const ALL: [LimitConstant; 4] = [
        LimitConstant::Mu0,
        LimitConstant::Mu1,
        LimitConstant::Gamma0,
        LimitConstant::Gamma1,
    ];

    pub fn parity(self) -> Parity {
        match self {
            LimitConstant::Mu0 | LimitConstant::Gamma0 => Parity::Even,
            LimitConstant::Mu1 | LimitConstant::Gamma1 => Parity::Odd,
        }
    }

    fn is_genus(self) -> bool {
        matches!(self, LimitConstant::Gamma0 | LimitConstant::Gamma1)
    }

    /// Depth-2 part of the numerator series.
    fn depth2(self) -> BigRational {
        match self {
            LimitConstant::Mu0 => ratio(1, 1),
            LimitConstant::Mu1 => ratio(3, 4),
            LimitConstant::Gamma0 => ratio(1, 4),
            LimitConstant::Gamma1 => ratio(1, 8),
        }
    }

    /// Per-word deviation of the depth-3 block at index `k`, given an
    /// interval for the average stressed genus.
    fn deviation(self, k: i64, g: &RationalInterval) -> RationalInterval {
        match self {
            LimitConstant::Mu0 => RationalInterval::point(int(-k)),
            LimitConstant::Mu1 => RationalInterval::point(ratio(-2 * k - 1, 2)),
            LimitConstant::Gamma0 => g.shift(&ratio(-(18 * k + 6), 4)),
            LimitConstant::Gamma1 => g.shift(&ratio(-(18 * k + 15), 4)),
        }
    }

    /// Enclosure of `Σ_{k >= a}` of the depth-3 terms using Backelin's
    /// bound and `j <= G_j <= 3j`.
    fn analytic_tail(self, a: i64) -> RationalInterval {
        assert!(a >= 1);
        let ra = r_pow(a as u64);
        // Σ_{k>=a} r^k and Σ_{k>=a} k r^k with r = 11/12
        let s0 = int(12) * &ra;
        let s1 = int(12) * &ra * int(a + 11);
        let r_inv = ratio(12, 11);
        let (lo, hi) = match self {
            LimitConstant::Mu0 => (-(&s1 * &r_inv) / int(8), BigRational::zero()),
            LimitConstant::Mu1 => (-(&s1 + &s0 / int(2)) / int(8), BigRational::zero()),
            LimitConstant::Gamma0 => (
                -(int(10) * &s1 + int(6) * &s0) * &r_inv / int(32),
                (int(6) * &s1 - int(6) * &s0) * &r_inv / int(32),
            ),
            LimitConstant::Gamma1 => (
                -(int(10) * &s1 + int(11) * &s0) / int(32),
                (int(6) * &s1 - int(3) * &s0) / int(32),
            ),
        };
        RationalInterval::new(lo, hi)
    }
}

impl FromStr for LimitConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu0" | "μ0" | "μ₀" => Ok(LimitConstant::Mu0),
            "mu1" | "μ1" | "μ₁" => Ok(LimitConstant::Mu1),
            "gamma0" | "γ0" | "γ₀" => Ok(LimitConstant::Gamma0),
            "gamma1" | "γ1" | "γ₁" => Ok(LimitConstant::Gamma1),
            _ => Err(Error::Parse {
                kind: "limit constant",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for LimitConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitConstant::Mu0 => "mu0",
            LimitConstant::Mu1 => "mu1",
            LimitConstant::Gamma0 => "gamma0",
            LimitConstant::Gamma1 => "gamma1",
        })
    }
}

/// Enclosure of a limiting mean deviation.
///
/// Terms with `k <= k_cut` use exact stressed genus averages. Later terms
/// covered by `data` use exact counts with `j <= G_j <= 3j`, and the rest
/// is bounded analytically.
pub fn mu_gamma_partial(
    kind: LimitConstant,
    k_cut: usize,
    bracket: &ExactBracket,
    data: &ReferenceData,
) -> Result<RationalInterval> {
    let parity = kind.parity();
    if bracket.parity != parity {
        return Err(Error::InvalidParameter(format!(
            "{kind} needs the {parity} bracket, got {}",
            bracket.parity
        )));
    }
    let k_cut = k_cut as i64;
    let k_data = match parity {
        Parity::Even => data.max_stressed3_len() as i64 / 2,
        Parity::Odd => (data.max_stressed3_len() as i64 - 1) / 2,
    };
    if k_cut > k_data || (kind.is_genus() && parity.stressed_len(k_cut) > STRESSED_GENUS_MAX as i64)
    {
        return Err(Error::OutOfRange(format!("k_cut = {k_cut} for {kind}")));
    }
    let mut total = RationalInterval::point(kind.depth2());
    for k in parity.first_k()..=k_data {
        let j = parity.stressed_len(k);
        let g = if !kind.is_genus() {
            RationalInterval::point(BigRational::zero())
        } else if k <= k_cut {
            RationalInterval::point(stressed3_avg_genus(j as usize)?)
        } else {
            RationalInterval::new(int(j), int(3 * j))
        };
        let w = RationalInterval::point(depth3_weight(parity, k, data)?);
        total = total.add(&w.mul(&kind.deviation(k, &g)));
    }
    total = total.add(&kind.analytic_tail(k_data.max(0) + 1));
    total.div(&bracket.interval())
}

/// Deviation `g − 3f/4` or `m − f/2` averaged over Frobenius number `f`,
/// exactly.
pub fn empirical_mean(engine: &Engine, kind: LimitConstant, f: u64) -> Result<BigRational> {
    if kind.is_genus() {
        Ok(genus_stats(engine, f)?.mean_deviation)
    } else {
        // f − 2m = key, so m − f/2 = −key/2
        let d = mult_distribution(engine, f)?;
        Ok(-d.mean() / int(2))
    }
}

/// True when `v` lies in `iv` widened by `tol` on both sides.
pub fn within_tolerance(iv: &RationalInterval, v: &BigRational, tol: &BigRational) -> bool {
    (&iv.lo - tol) <= *v && *v <= (&iv.hi + tol)
}
