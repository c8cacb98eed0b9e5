//! Words with many maximal entries near the end.

use num_bigint::BigUint;
use num_integer::{binomial, Roots};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactCount;

/// Largest number of head assignments `q^(ℓ−t)` scanned by
/// [`tail_heavy_count`].
const HEAD_LIMIT: u64 = 1 << 26;

/// Parameters of the `t`-tail-heavy family: length `ell`, depth `q`, and at
/// least `n_min` entries equal to `q` among the last `t` positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TailHeavySpec {
    pub ell: usize,
    pub t: usize,
    pub q: u32,
    pub n_min: usize,
}

impl TailHeavySpec {
    /// Uses the threshold `⌊√ℓ⌋ + 1`.
    pub fn new(ell: usize, t: usize, q: u32) -> Result<Self> {
        Self::with_threshold(ell, t, q, ell.sqrt() + 1)
    }

    pub fn with_threshold(ell: usize, t: usize, q: u32, n_min: usize) -> Result<Self> {
        if t == 0 || t > ell {
            return Err(Error::InvalidParameter(format!(
                "tail width must satisfy 1 <= t <= ell, got t = {t}, ell = {ell}"
            )));
        }
        if q < 2 {
            return Err(Error::InvalidParameter(format!(
                "depth must be >= 2, got {q}"
            )));
        }
        Ok(TailHeavySpec { ell, t, q, n_min })
    }

    pub fn head(&self) -> usize {
        self.ell - self.t
    }
}

/// Tail positions `s` that some head pair `x + y = s` (with `x = y`
/// allowed) rules out, because `w_x + w_y < q`.
fn blocked(head: &[u32], spec: &TailHeavySpec) -> Vec<bool> {
    let h = head.len();
    let mut out = vec![false; spec.ell + 1];
    for x in 1..=h {
        for y in x..=h {
            let s = x + y;
            if s > h && s <= spec.ell && head[x - 1] + head[y - 1] < spec.q {
                out[s] = true;
            }
        }
    }
    out
}

/// Whether `word` (any word over `[q]`, not necessarily Kunz) is
/// tail-heavy: some set of at least `n_min` tail positions holding `q`
/// avoids every blocked sum.
pub fn is_tail_heavy(word: &[u32], spec: &TailHeavySpec) -> bool {
    if word.len() != spec.ell || word.iter().any(|&w| w == 0 || w > spec.q) {
        return false;
    }
    let h = spec.head();
    let blocked = blocked(&word[..h], spec);
    let usable = (h + 1..=spec.ell)
        .filter(|&i| word[i - 1] == spec.q && !blocked[i])
        .count();
    usable >= spec.n_min
}

/// Exact number of tail-heavy words. Heads are scanned exhaustively; the
/// tail is counted by a binomial sum over its unblocked positions.
pub fn tail_heavy_count(spec: &TailHeavySpec) -> Result<ExactCount> {
    if spec.n_min > spec.t {
        return Ok(ExactCount::zero());
    }
    let h = spec.head();
    let q = spec.q;
    let Some(heads) = (q as u64)
        .checked_pow(h as u32)
        .filter(|&n| n <= HEAD_LIMIT)
    else {
        return Err(Error::OutOfRange(format!(
            "{q}^{h} head assignments for tail-heavy counting"
        )));
    };
    let mut hist = vec![0u64; spec.t + 1];
    let mut head = vec![0u32; h];
    for code in 0..heads {
        let mut c = code;
        for x in head.iter_mut() {
            *x = (c % q as u64) as u32 + 1;
            c /= q as u64;
        }
        let b = blocked(&head, spec).iter().filter(|&&x| x).count();
        hist[b] += 1;
    }
    let qb = BigUint::from(q);
    let q1 = BigUint::from(q - 1);
    let mut total = BigUint::from(0u32);
    for (b, &n) in hist.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let free = spec.t - b;
        let tails: BigUint = (spec.n_min..=free)
            .map(|a| BigUint::from(binomial(free as u64, a as u64)) * q1.pow((free - a) as u32))
            .sum();
        total += BigUint::from(n) * qb.pow(b as u32) * tails;
    }
    Ok(ExactCount::from(total))
}
