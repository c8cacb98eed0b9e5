use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// The Kunz word `w_1 … w_ℓ` of a numerical semigroup of multiplicity
/// `m = ℓ + 1`: `m·w_i + i` is the least element of the semigroup congruent
/// to `i` modulo `m`.
///
/// The empty word stands for the trivial semigroup `ℕ₀`.
///
/// Construction only checks that entries are positive. Use [`KunzWord::validated`]
/// or [`KunzWord::is_kunz`] when the Kunz conditions matter.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KunzWord(Vec<u32>);

/// Invariants read off a Kunz word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupInvariants {
    pub multiplicity: u64,
    pub genus: u64,
    pub depth: u32,
    /// `-1` for the trivial semigroup.
    pub frobenius: i64,
}

impl SemigroupInvariants {
    /// Largest Frobenius number a word of this depth and length can have,
    /// `(ℓ+1)q − 1`.
    pub fn stressed_frobenius(&self) -> i64 {
        self.multiplicity as i64 * self.depth as i64 - 1
    }

    pub fn is_stressed(&self) -> bool {
        self.frobenius == self.stressed_frobenius()
    }
}

impl KunzWord {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveEntry { index: pos + 1 });
        }
        Ok(KunzWord(entries))
    }

    /// Builds a word and rejects it unless the Kunz conditions hold.
    pub fn validated(entries: Vec<u32>) -> Result<Self> {
        let w = KunzWord::new(entries)?;
        if !w.is_kunz() {
            return Err(Error::NotKunz(w.to_string()));
        }
        Ok(w)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&w| w > 0));
        KunzWord(entries)
    }

    pub fn empty() -> Self {
        KunzWord(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based access, matching the usual `w_i` indexing.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn depth(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn genus(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }

    pub fn multiplicity(&self) -> u64 {
        self.0.len() as u64 + 1
    }

    pub fn is_kunz(&self) -> bool {
        satisfies_kunz(&self.0, false)
    }

    /// Maximal embedding dimension: every Kunz inequality is strict.
    pub fn is_med(&self) -> bool {
        satisfies_kunz(&self.0, true)
    }

    pub fn invariants(&self) -> Result<SemigroupInvariants> {
        if !self.is_kunz() {
            return Err(Error::NotKunz(self.to_string()));
        }
        Ok(self.invariants_unchecked())
    }

    pub(crate) fn invariants_unchecked(&self) -> SemigroupInvariants {
        let len = self.0.len();
        let depth = self.depth();
        let frobenius = if len == 0 {
            -1
        } else {
            let j = self.0.iter().rposition(|&w| w == depth).unwrap() + 1;
            (len as i64 + 1) * (depth as i64 - 1) + j as i64
        };
        SemigroupInvariants {
            multiplicity: len as u64 + 1,
            genus: self.genus(),
            depth,
            frobenius,
        }
    }

    pub fn frobenius(&self) -> i64 {
        self.invariants_unchecked().frobenius
    }

    /// Membership of `n` in the semigroup the word encodes.
    pub fn contains(&self, n: u64) -> bool {
        let m = self.multiplicity();
        let r = (n % m) as usize;
        r == 0 || self.0[r - 1] as u64 <= n / m
    }

    /// Caps every entry at `q − 1`, where `q` is the depth. The result is a
    /// `(q−1)`-Kunz word.
    pub fn reduce_depth(&self) -> Result<KunzWord> {
        if !self.is_kunz() {
            return Err(Error::NotKunz(self.to_string()));
        }
        let q = self.depth();
        if q <= 1 {
            return Err(Error::DepthTooSmall(q));
        }
        Ok(KunzWord(self.0.iter().map(|&w| w.min(q - 1)).collect()))
    }

    /// Digit-string form (`31221`), available when every entry is below 10.
    pub fn to_compact(&self) -> Option<String> {
        if self.0.iter().all(|&w| w < 10) {
            Some(self.0.iter().map(|w| char::from(b'0' + *w as u8)).collect())
        } else {
            None
        }
    }
}

/// Checks `w_i + w_j ≥ w_{i+j}` (for `i+j ≤ ℓ`) and
/// `w_i + w_j + 1 ≥ w_{i+j−ℓ−1}` (for `i+j > ℓ+1`), strictly when `strict`.
fn satisfies_kunz(w: &[u32], strict: bool) -> bool {
    let len = w.len();
    let slack = if strict { 1 } else { 0 };
    for i in 1..=len {
        for j in i..=len {
            let sum = w[i - 1] + w[j - 1];
            if i + j <= len {
                if sum < w[i + j - 1] + slack {
                    return false;
                }
            } else if i + j > len + 1 {
                let s = i + j - len - 1;
                if sum + 1 < w[s - 1] + slack {
                    return false;
                }
            }
        }
    }
    true
}

impl fmt::Display for KunzWord {
    /// Canonical comma-separated form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for KunzWord {
    type Err = Error;

    /// Accepts `3,1,2,2,1` or the digit string `31221`. The empty string is
    /// the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            kind: "Kunz word",
            input: s.to_string(),
        };
        if s.is_empty() {
            return Ok(KunzWord::empty());
        }
        let entries = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as u32).collect()
        } else {
            return Err(bad());
        };
        KunzWord::new(entries)
    }
}

impl Serialize for KunzWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
