use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kunz::word::KunzWord;

/// The finite set of gaps (the complement in `ℕ₀`) of a numerical semigroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GapSet(BTreeSet<u64>);

impl GapSet {
    pub fn new<I: IntoIterator<Item = u64>>(gaps: I) -> Result<Self> {
        let set: BTreeSet<u64> = gaps.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::NotSemigroup("0 cannot be a gap".into()));
        }
        let gs = GapSet(set);
        let frob = gs.frobenius();
        // x, y in the semigroup with x + y a gap; only pairs below the
        // Frobenius number can witness this.
        if frob > 0 {
            let f = frob as u64;
            for x in 1..=f {
                if gs.0.contains(&x) {
                    continue;
                }
                for y in x..=f - x {
                    if !gs.0.contains(&y) && gs.0.contains(&(x + y)) {
                        return Err(Error::NotSemigroup(format!(
                            "{x} and {y} are elements but {} is a gap",
                            x + y
                        )));
                    }
                }
            }
        }
        Ok(gs)
    }

    /// The gap set of the trivial semigroup `ℕ₀`.
    pub fn empty() -> Self {
        GapSet(BTreeSet::new())
    }

    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn genus(&self) -> u64 {
        self.0.len() as u64
    }

    pub fn frobenius(&self) -> i64 {
        self.0.iter().next_back().map_or(-1, |&g| g as i64)
    }

    pub fn contains(&self, n: u64) -> bool {
        !self.0.contains(&n)
    }

    pub fn multiplicity(&self) -> u64 {
        (1..).find(|n| !self.0.contains(n)).unwrap()
    }

    pub fn depth(&self) -> u32 {
        let c = (self.frobenius() + 1) as u64;
        c.div_ceil(self.multiplicity()) as u32
    }

    /// Minimal generators, found directly from the element list.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        // every minimal generator is at most f + m
        let top = (self.frobenius() + m as i64).max(1) as u64;
        let elements: Vec<u64> = (1..=top).filter(|&n| self.contains(n)).collect();
        elements
            .iter()
            .copied()
            .filter(|&n| {
                !elements
                    .iter()
                    .take_while(|&&a| 2 * a <= n)
                    .any(|&a| self.contains(n - a))
            })
            .collect()
    }

    pub fn embedding_dimension(&self) -> u64 {
        self.minimal_generators().len() as u64
    }

    /// Maximal embedding dimension, decided by counting minimal generators.
    pub fn is_med(&self) -> bool {
        self.embedding_dimension() == self.multiplicity()
    }

    pub fn to_word(&self) -> KunzWord {
        let m = self.multiplicity();
        let entries = (1..m)
            .map(|i| {
                let mut n = i;
                while self.0.contains(&n) {
                    n += m;
                }
                (n / m) as u32
            })
            .collect();
        KunzWord::from_entries_unchecked(entries)
    }

    /// Gap set of the Kunz word; the word must satisfy the Kunz conditions.
    pub fn from_word(word: &KunzWord) -> Result<Self> {
        if !word.is_kunz() {
            return Err(Error::NotKunz(word.to_string()));
        }
        let f = word.frobenius();
        let gaps = if f < 1 {
            BTreeSet::new()
        } else {
            (1..=f as u64).filter(|&n| !word.contains(n)).collect()
        };
        Ok(GapSet(gaps))
    }

    /// Gaps of `{0} ∪ (m + Λ)`, which is MED of multiplicity `m` whenever
    /// `m ∈ Λ`.
    pub fn med_lift(&self, m: u64) -> Result<GapSet> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "lifting needs m >= 2, got {m}"
            )));
        }
        if !self.contains(m) {
            return Err(Error::InvalidParameter(format!(
                "{m} is a gap of the semigroup being lifted"
            )));
        }
        let gaps = (1..m).chain(self.0.iter().map(|g| g + m)).collect();
        Ok(GapSet(gaps))
    }

    /// Inverse of [`GapSet::med_lift`]: `((Λ ∖ {0}) − m, m)`.
    pub fn med_drop(&self) -> Result<(GapSet, u64)> {
        let m = self.multiplicity();
        if m < 2 {
            return Err(Error::InvalidParameter(
                "the trivial semigroup has no MED preimage".into(),
            ));
        }
        if !self.is_med() {
            return Err(Error::InvalidParameter(format!(
                "semigroup with gaps {self} is not MED"
            )));
        }
        let gaps = self.0.iter().filter(|&&g| g > m).map(|g| g - m).collect();
        Ok((GapSet(gaps), m))
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for GapSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GapSet::empty());
        }
        let gaps = s
            .split(',')
            .map(|t| {
                t.trim().parse::<u64>().map_err(|_| Error::Parse {
                    kind: "gap set",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GapSet::new(gaps)
    }
}

impl KunzWord {
    pub fn gaps(&self) -> Result<GapSet> {
        GapSet::from_word(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example_round_trip() {
        let gaps: GapSet = "1,2,3,4,5,7,9,10,13".parse().unwrap();
        let word = gaps.to_word();
        assert_eq!(word.to_string(), "3,1,2,2,1");
        assert_eq!(GapSet::from_word(&word).unwrap(), gaps);
        assert_eq!(gaps.multiplicity(), 6);
        assert_eq!(gaps.depth(), 3);
    }

    #[test]
    fn trivial_semigroup() {
        let g = GapSet::empty();
        assert!(g.to_word().is_empty());
        assert_eq!(g.frobenius(), -1);
        assert_eq!(g.multiplicity(), 1);
        assert_eq!(GapSet::from_word(&KunzWord::empty()).unwrap(), g);
    }

    #[test]
    fn rejects_non_semigroups() {
        // 2 is an element but 4 is a gap
        assert!("1,3,4".parse::<GapSet>().is_err());
        assert!(GapSet::new([0, 1]).is_err());
    }

    #[test]
    fn med_oracle_small_cases() {
        // <3,4,5>
        let w: KunzWord = "11".parse().unwrap();
        let g = w.gaps().unwrap();
        assert_eq!(g.minimal_generators(), vec![3, 4, 5]);
        assert!(g.is_med());
        let g = "12".parse::<KunzWord>().unwrap().gaps().unwrap();
        assert_eq!(g.minimal_generators(), vec![3, 4]);
        assert!(!g.is_med());
    }

    #[test]
    fn lift_of_trivial_semigroup() {
        let lifted = GapSet::empty().med_lift(5).unwrap();
        assert_eq!(lifted.to_string(), "1,2,3,4");
        assert_eq!(lifted.frobenius(), 4);
        assert!(lifted.is_med());
        assert_eq!(lifted.med_drop().unwrap(), (GapSet::empty(), 5));
    }

    #[test]
    fn lift_preconditions() {
        let g: GapSet = "1,3".parse().unwrap(); // <2,5>
        assert!(g.med_lift(3).is_err());
        assert!(g.med_lift(1).is_err());
        assert!(GapSet::empty().med_drop().is_err());
    }
}
