use serde::Serialize;

use crate::error::{Error, Result};

/// Selects a finite family of Kunz words.
///
/// Every field is a constraint; unset fields do not restrict. The trivial
/// semigroup (empty word) is never counted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CountQuery {
    pub frobenius: Option<u64>,
    pub length: Option<usize>,
    pub depth_max: Option<u32>,
    pub depth_exact: Option<u32>,
    /// Last entry equals `depth_exact`.
    pub stressed: bool,
    pub med: bool,
    /// The semigroup must contain this integer.
    pub contains: Option<u64>,
}

impl CountQuery {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn frobenius(mut self, f: u64) -> Self {
        self.frobenius = Some(f);
        self
    }

    pub fn length(mut self, ell: usize) -> Self {
        self.length = Some(ell);
        self
    }

    /// Length from multiplicity, `ℓ = m − 1`.
    pub fn multiplicity(mut self, m: usize) -> Self {
        self.length = Some(m.saturating_sub(1));
        self
    }

    pub fn depth_max(mut self, q: u32) -> Self {
        self.depth_max = Some(q);
        self
    }

    pub fn depth(mut self, q: u32) -> Self {
        self.depth_exact = Some(q);
        self
    }

    pub fn stressed(mut self) -> Self {
        self.stressed = true;
        self
    }

    pub fn med(mut self) -> Self {
        self.med = true;
        self
    }

    pub fn contains(mut self, n: u64) -> Self {
        self.contains = Some(n);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.stressed && self.depth_exact.is_none() {
            return Err(Error::InvalidQuery(
                "stressed requires an exact depth".into(),
            ));
        }
        if self.contains == Some(0) {
            return Err(Error::InvalidQuery("contains must be at least 1".into()));
        }
        let depth_bounded = self.depth_max.is_some() || self.depth_exact.is_some();
        if self.frobenius.is_none() && !(self.length.is_some() && depth_bounded) {
            return Err(Error::UnboundedQuery(
                "give a Frobenius number, or a length together with a depth bound",
            ));
        }
        Ok(())
    }

    /// Largest depth a word of this family can have, if bounded.
    pub(crate) fn depth_cap(&self) -> Option<u32> {
        match (self.depth_max, self.depth_exact) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness() {
        assert!(CountQuery::new().frobenius(5).validate().is_ok());
        assert!(CountQuery::new().length(3).depth_max(3).validate().is_ok());
        assert!(matches!(
            CountQuery::new().length(3).validate(),
            Err(Error::UnboundedQuery(_))
        ));
        assert!(CountQuery::new()
            .frobenius(5)
            .stressed()
            .validate()
            .is_err());
        assert!(CountQuery::new()
            .frobenius(5)
            .contains(0)
            .validate()
            .is_err());
    }

    #[test]
    fn multiplicity_maps_to_length() {
        assert_eq!(CountQuery::new().multiplicity(10).length, Some(9));
    }
}
