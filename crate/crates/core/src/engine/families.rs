//! Fast paths and closed forms for particular families.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::engine::count;
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::kunz::{CountQuery, KunzWord};

/// Largest length handled by the bitmask search.
const RED_SET_MAX: usize = 63;
/// Prefix depth for the parallel split of the red-set search.
const RED_SET_SPLIT: usize = 14;

/// Depth-3 words are exactly the colorings in which no sum of two
/// positions holding 1 holds 3. The search fixes `S`, the set of positions
/// holding 1; a position outside `S` is then forced to 2 when it lies in
/// `S + S`, and free in `{2, 3}` otherwise.
struct RedSet {
    /// Positions `1..=top` are searched.
    top: usize,
    /// Position that must stay outside `S + S`.
    forbid: Option<usize>,
    /// Genus contributed by entries past `top`.
    tail_genus: u128,
}

#[derive(Clone, Copy)]
struct Node {
    pos: usize,
    set: u128,
    sums: u128,
    /// Number of prefix assignments and the sum of their genera.
    ways: u128,
    genus: u128,
}

impl RedSet {
    fn mask(&self) -> u128 {
        let bits = self.forbid.unwrap_or(self.top) + 1;
        if bits >= 128 {
            u128::MAX
        } else {
            (1u128 << bits) - 1
        }
    }

    fn children(&self, n: Node, mask: u128, mut emit: impl FnMut(Node)) {
        let p = n.pos;
        let bit = 1u128 << p;
        let (ways, genus) = if n.sums & bit != 0 {
            (n.ways, n.genus + 2 * n.ways)
        } else {
            (2 * n.ways, 2 * n.genus + 5 * n.ways)
        };
        emit(Node {
            pos: p + 1,
            ways,
            genus,
            ..n
        });
        let set = n.set | bit;
        let sums = (n.sums | (set << p)) & mask;
        if self.forbid.is_some_and(|f| sums & (1u128 << f) != 0) {
            return;
        }
        emit(Node {
            pos: p + 1,
            set,
            sums,
            ways: n.ways,
            genus: n.genus + n.ways,
        });
    }

    /// Completions below `n` as (count, genus total).
    fn solve(&self, n: Node, mask: u128) -> (u128, u128) {
        if n.pos > self.top {
            return (n.ways, n.genus + n.ways * self.tail_genus);
        }
        let mut acc = (0, 0);
        self.children(n, mask, |c| {
            let (a, b) = self.solve(c, mask);
            acc.0 += a;
            acc.1 += b;
        });
        acc
    }

    fn run(&self) -> (u128, u128) {
        let mask = self.mask();
        let root = Node {
            pos: 1,
            set: 0,
            sums: 0,
            ways: 1,
            genus: 0,
        };
        let mut frontier = vec![root];
        let split = self.top.min(RED_SET_SPLIT);
        for _ in 0..split {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for n in frontier {
                self.children(n, mask, |c| next.push(c));
            }
            frontier = next;
        }
        frontier
            .into_par_iter()
            .map(|n| self.solve(n, mask))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    }
}

fn stressed3(ell: usize) -> (u128, u128) {
    assert!(
        (1..=RED_SET_MAX).contains(&ell),
        "stressed depth-3 counting supports 1 <= ell <= {RED_SET_MAX}"
    );
    RedSet {
        top: ell - 1,
        forbid: Some(ell),
        tail_genus: 3,
    }
    .run()
}

/// Number of stressed depth-3 Kunz words of length `ell`.
///
/// # Panics
/// When `ell` is 0 or above 63.
pub fn count_stressed3(ell: usize) -> ExactCount {
    ExactCount::from(stressed3(ell).0)
}

/// Count and total genus of the stressed depth-3 words of length `ell`.
pub fn stressed3_genus_total(ell: usize) -> (ExactCount, ExactCount) {
    let (c, g) = stressed3(ell);
    (ExactCount::from(c), ExactCount::from(g))
}

/// Colorings of `[n]` by `{1, 2, 3}` in which two (not necessarily
/// distinct) positions colored 1 never sum to a position colored 3.
pub fn schur_colorings(n: usize) -> ExactCount {
    assert!(
        n <= RED_SET_MAX,
        "schur_colorings supports n <= {RED_SET_MAX}"
    );
    let (c, _) = RedSet {
        top: n,
        forbid: None,
        tail_genus: 0,
    }
    .run();
    ExactCount::from(c)
}

/// Depth-2 words with Frobenius number `f` and length `ell`.
pub fn closed_k2(f: u64, ell: u64) -> ExactCount {
    if ell == 0 || f < 3 || 2 * ell + 1 < f || ell + 2 > f {
        return ExactCount::zero();
    }
    ExactCount::pow2(f - 2 - ell)
}

/// Depth-3 words with Frobenius number `f` and length `ell`: a stressed
/// prefix of length `j = f − 2 − 2ℓ` followed by a free `{1,2}` suffix.
pub fn closed_k3(f: u64, ell: u64) -> ExactCount {
    if ell == 0 || f < 2 * ell + 3 {
        return ExactCount::zero();
    }
    let j = f - 2 - 2 * ell;
    if j > ell {
        return ExactCount::zero();
    }
    ExactCount::pow2(ell - j) * count_stressed3(j as usize)
}

/// Multiplicities `m` for which a MED semigroup of Frobenius number `f`
/// has depth `q`.
pub fn med_depth_range(f: u64, q: u32) -> RangeInclusive<u64> {
    let q = q as u64;
    match q {
        0 => RangeInclusive::new(1, 0),
        1 => (f + 1).max(2)..=f + 1,
        _ => (f + 1).div_ceil(q).max(2)..=f / (q - 1),
    }
}

/// MED semigroups with Frobenius number `f` (and depth `q` when given),
/// by enumeration with the strict Kunz inequalities.
pub fn med_count_direct(f: u64, q: Option<u32>) -> Result<ExactCount> {
    let mut query = CountQuery::new().frobenius(f).med();
    if let Some(q) = q {
        query = query.depth(q);
    }
    count(&query)
}

/// The same count through the lift `Λ′ ↦ {0} ∪ (m + Λ′)`: a sum over
/// multiplicities `m` of the semigroups with Frobenius number `f − m`
/// containing `m`. The trivial semigroup contributes at `m = f + 1`.
pub fn med_count_via_lift(f: u64, q: Option<u32>) -> Result<ExactCount> {
    let ms: Vec<u64> = match q {
        Some(q) => med_depth_range(f, q).collect(),
        None => (2..=f + 1).collect(),
    };
    let mut total = ExactCount::zero();
    for m in ms {
        if m == f + 1 {
            total += ExactCount::from(1u64);
        } else if m < f {
            total += count(&CountQuery::new().frobenius(f - m).contains(m))?;
        }
    }
    Ok(total)
}

/// Both MED counts; errors if they disagree.
pub fn med_count(f: u64, q: Option<u32>) -> Result<ExactCount> {
    if f == 0 {
        return Err(Error::InvalidParameter("MED counts need f >= 1".into()));
    }
    let direct = med_count_direct(f, q)?;
    let lifted = med_count_via_lift(f, q)?;
    if direct != lifted {
        return Err(Error::InvalidParameter(format!(
            "MED counts disagree at f = {f}: {direct} direct, {lifted} lifted"
        )));
    }
    Ok(direct)
}

/// Depth-2 MED count as `Σ_{k=1}^{⌊(f−1)/2⌋} Fr(k)`.
pub fn med2_via_frobenius_sum(f: u64) -> Result<ExactCount> {
    let mut total = ExactCount::zero();
    for k in 1..=f.saturating_sub(1) / 2 {
        total += count(&CountQuery::new().frobenius(k))?;
    }
    Ok(total)
}

/// Words of depth `q ≥ 3`, length `ell`, Frobenius number
/// `(ℓ+1)(q−1)+j`, built from independent per-position intervals.
#[derive(Clone, Debug)]
pub struct LowerBoundFamily {
    pub q: u32,
    pub ell: usize,
    pub j: usize,
    windows: Vec<(u32, u32)>,
}

pub fn lower_bound_family(q: u32, ell: usize, j: usize) -> Result<LowerBoundFamily> {
    if q < 3 {
        return Err(Error::InvalidParameter(format!(
            "family needs q >= 3, got {q}"
        )));
    }
    if j == 0 || j > ell {
        return Err(Error::InvalidParameter(format!(
            "family needs 1 <= j <= ell, got j = {j}, ell = {ell}"
        )));
    }
    let windows = (1..=ell)
        .map(|i| {
            if 2 * i <= j {
                (q.div_ceil(2), q)
            } else if i < j {
                (q / 2, q)
            } else if i == j {
                (q, q)
            } else if 2 * i <= ell + j + 1 {
                (q / 2, q - 1)
            } else {
                ((q - 1) / 2, q - 1)
            }
        })
        .collect();
    Ok(LowerBoundFamily { q, ell, j, windows })
}

impl LowerBoundFamily {
    pub fn frobenius(&self) -> u64 {
        (self.ell as u64 + 1) * (self.q as u64 - 1) + self.j as u64
    }

    /// Closed product formula for the family size.
    pub fn formula_count(&self) -> ExactCount {
        let (q, ell, j) = (self.q as u64, self.ell as u64, self.j as u64);
        let pow = |b: u64, e: u64| ExactCount::from(num_bigint::BigUint::from(b).pow(e as u32));
        pow((q + 2) / 2, j / 2)
            * pow((q + 3) / 2, (j - 1) / 2)
            * pow(q.div_ceil(2), (ell - j).div_ceil(2))
            * pow((q + 2) / 2, (ell - j) / 2)
    }

    pub fn windows(&self) -> &[(u32, u32)] {
        &self.windows
    }

    /// All words of the family, lexicographically.
    pub fn words(&self) -> impl Iterator<Item = KunzWord> + '_ {
        let mut cur: Vec<u32> = self.windows.iter().map(|w| w.0).collect();
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = KunzWord::from_entries_unchecked(cur.clone());
            // odometer, last position fastest
            let mut k = cur.len();
            loop {
                if k == 0 {
                    done = true;
                    break;
                }
                k -= 1;
                if cur[k] < self.windows[k].1 {
                    cur[k] += 1;
                    break;
                }
                cur[k] = self.windows[k].0;
            }
            Some(out)
        })
    }
}
