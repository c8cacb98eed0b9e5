//! Exact counting and enumeration of Kunz-word families.

mod families;
mod search;
mod tail;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::kunz::CountQuery;

pub use families::{
    closed_k2, closed_k3, count_stressed3, lower_bound_family, med2_via_frobenius_sum, med_count,
    med_count_direct, med_count_via_lift, med_depth_range, schur_colorings, stressed3_genus_total,
    LowerBoundFamily,
};
pub use search::WordStream;
pub use tail::{is_tail_heavy, tail_heavy_count, TailHeavySpec};

use search::Plan;

/// Parallel prefixes are split until at least this many tasks exist.
const TARGET_TASKS: usize = 512;

/// Counting front end. `threads: None` uses the global rayon pool.
#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    threads: Option<usize>,
}

impl Engine {
    pub fn new() -> Self {
        Engine { threads: None }
    }

    pub fn with_threads(threads: usize) -> Self {
        Engine {
            threads: Some(threads.max(1)),
        }
    }

    pub fn threads(&self) -> usize {
        self.threads.unwrap_or_else(rayon::current_num_threads)
    }

    fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> Result<R> {
        match self.threads {
            None => Ok(op()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
                Ok(pool.install(op))
            }
        }
    }

    pub fn count(&self, query: &CountQuery) -> Result<ExactCount> {
        if let Some(c) = depth3_fast_path(query) {
            return Ok(c);
        }
        let plans = search::plans(query)?;
        let tasks = split(&plans);
        let total = self.install(|| {
            tasks
                .into_par_iter()
                .map(|(i, mut prefix)| plans[i].count_from(&mut prefix))
                .sum::<u128>()
        })?;
        Ok(ExactCount::from(total))
    }

    /// Words of the family in lexicographic order.
    pub fn enumerate(&self, query: &CountQuery) -> Result<WordStream> {
        Ok(WordStream::new(search::plans(query)?))
    }

    /// Histogram of `key(word)` over the family.
    pub fn tally<F>(&self, query: &CountQuery, key: F) -> Result<BTreeMap<i64, ExactCount>>
    where
        F: Fn(&[u32]) -> i64 + Sync,
    {
        let plans = search::plans(query)?;
        let tasks = split(&plans);
        let merged = self.install(|| {
            tasks
                .into_par_iter()
                .map(|(i, mut prefix)| {
                    let mut local = BTreeMap::<i64, u128>::new();
                    plans[i].visit_from(&mut prefix, &mut |w| {
                        *local.entry(key(w)).or_default() += 1;
                    });
                    local
                })
                .reduce(BTreeMap::new, |mut a, b| {
                    for (k, v) in b {
                        *a.entry(k).or_default() += v;
                    }
                    a
                })
        })?;
        Ok(merged
            .into_iter()
            .map(|(k, v)| (k, ExactCount::from(v)))
            .collect())
    }
}

/// Length-only depth-3 queries, counted through red sets.
fn depth3_fast_path(query: &CountQuery) -> Option<ExactCount> {
    let ell = query.length.filter(|l| (1..=63).contains(l))?;
    if query.frobenius.is_some() || query.med || query.contains.is_some() {
        return None;
    }
    match (query.depth_max, query.depth_exact, query.stressed) {
        (None | Some(3..), Some(3), true) => Some(count_stressed3(ell)),
        (Some(3), None, false) => Some(schur_colorings(ell)),
        _ => None,
    }
}

/// Work units `(plan index, prefix)` covering every plan exactly once.
fn split(plans: &[Plan]) -> Vec<(usize, Vec<u32>)> {
    let mut tasks = Vec::new();
    for (i, plan) in plans.iter().enumerate() {
        let mut depth = 0;
        let mut prefixes = vec![Vec::new()];
        while depth + 1 < plan.len && prefixes.len() < TARGET_TASKS {
            depth += 1;
            prefixes = plan.prefixes(depth);
        }
        tasks.extend(prefixes.into_iter().map(|p| (i, p)));
    }
    tasks
}

/// Count with the default engine.
pub fn count(query: &CountQuery) -> Result<ExactCount> {
    Engine::new().count(query)
}

/// Enumerate with the default engine.
pub fn enumerate(query: &CountQuery) -> Result<WordStream> {
    Engine::new().enumerate(query)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_two_samples() {
        let c = |f, m| count(&CountQuery::new().frobenius(f).multiplicity(m)).unwrap();
        assert_eq!(c(29, 10), 2249u64);
        assert_eq!(c(35, 12), 15349u64);
        assert_eq!(c(60, 15), 0u64);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let q = CountQuery::new().frobenius(24);
        let a = Engine::with_threads(1).count(&q).unwrap();
        let b = Engine::with_threads(7).count(&q).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, enumerate(&q).unwrap().count() as u64);
    }

    #[test]
    fn tally_sums_to_count() {
        let q = CountQuery::new().frobenius(15);
        let hist = Engine::new()
            .tally(&q, |w| w.iter().map(|&x| x as i64).sum())
            .unwrap();
        let total: ExactCount = hist.values().cloned().sum();
        assert_eq!(total, count(&q).unwrap());
    }

    #[test]
    fn unbounded_query_is_rejected() {
        assert!(count(&CountQuery::new().length(4)).is_err());
    }
}
