//! Constrained backtracking over Kunz words of a fixed length.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::Result;
use crate::kunz::{CountQuery, KunzWord};

/// Per-position windows for one word length, plus the global flags that
/// tighten them during the search.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub len: usize,
    lo: Vec<u32>,
    hi: Vec<u32>,
    strict: bool,
    /// The maximum entry must reach this value (0 when unconstrained).
    need_depth: u32,
}

impl Plan {
    pub fn new(lo: Vec<u32>, hi: Vec<u32>, strict: bool, need_depth: u32) -> Option<Plan> {
        debug_assert_eq!(lo.len(), hi.len());
        if lo.is_empty() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return None;
        }
        Some(Plan {
            len: lo.len(),
            lo,
            hi,
            strict,
            need_depth,
        })
    }

    /// Admissible range for 0-based position `k`, given `w[..k]`.
    /// Empty when `lo > hi`.
    #[inline]
    fn window(&self, w: &[u32], k: usize) -> (u32, u32) {
        let strict = self.strict as i64;
        let pos = k + 1;
        let len = self.len;
        let mut hi = self.hi[k] as i64;
        for i in 1..=pos / 2 {
            hi = hi.min((w[i - 1] + w[pos - i - 1]) as i64 - strict);
        }
        let mut lo = self.lo[k] as i64;
        if pos + pos >= len + 2 {
            for i in (len + 2 - pos).max(1)..pos {
                let s = i + pos - len - 1;
                lo = lo.max(w[s - 1] as i64 - w[i - 1] as i64 - 1 + strict);
            }
            let s = 2 * pos - len - 1;
            // 2·w + 1 ≥ w_s (+1 when strict)
            let need = w[s - 1] as i64 - 1 + strict;
            lo = lo.max((need + 1).div_euclid(2));
        }
        if k + 1 == len && self.need_depth > 0 && w.iter().all(|&x| x < self.need_depth) {
            lo = lo.max(self.need_depth as i64);
            hi = hi.min(self.need_depth as i64);
        }
        if lo > hi || hi < 1 {
            (1, 0)
        } else {
            (lo.max(1) as u32, hi as u32)
        }
    }

    /// Number of completions of `w` (a valid prefix) to full words.
    pub fn count_from(&self, w: &mut Vec<u32>) -> u128 {
        let k = w.len();
        let (lo, hi) = self.window(w, k);
        if lo > hi {
            return 0;
        }
        if k + 1 == self.len {
            return (hi - lo + 1) as u128;
        }
        let mut total = 0;
        for v in lo..=hi {
            w.push(v);
            total += self.count_from(w);
            w.pop();
        }
        total
    }

    /// Calls `visit` on every completion of `w`, in lexicographic order.
    pub fn visit_from<F: FnMut(&[u32])>(&self, w: &mut Vec<u32>, visit: &mut F) {
        let k = w.len();
        if k == self.len {
            visit(w);
            return;
        }
        let (lo, hi) = self.window(w, k);
        for v in lo..=hi {
            w.push(v);
            self.visit_from(w, visit);
            w.pop();
        }
    }

    /// Valid prefixes of length `depth`, in lexicographic order.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut w = Vec::with_capacity(depth);
        self.collect_prefixes(&mut w, depth, &mut out);
        out
    }

    fn collect_prefixes(&self, w: &mut Vec<u32>, depth: usize, out: &mut Vec<Vec<u32>>) {
        if w.len() == depth {
            out.push(w.clone());
            return;
        }
        let (lo, hi) = self.window(w, w.len());
        for v in lo..=hi {
            w.push(v);
            self.collect_prefixes(w, depth, out);
            w.pop();
        }
    }
}

/// Resolves a query into one plan per admissible word length.
pub(crate) fn plans(query: &CountQuery) -> Result<Vec<Plan>> {
    query.validate()?;
    let lengths: Vec<usize> = match (query.length, query.frobenius) {
        (Some(l), _) => vec![l],
        (None, Some(f)) => (1..=f as usize).collect(),
        (None, None) => unreachable!("validated"),
    };
    Ok(lengths
        .into_iter()
        .filter(|&l| l > 0)
        .filter_map(|l| plan_for_length(query, l))
        .collect())
}

fn plan_for_length(query: &CountQuery, len: usize) -> Option<Plan> {
    let m = len as u64 + 1;
    let mut lo = vec![1u32; len];
    let mut hi;
    let mut need_depth = 0;
    if let Some(f) = query.frobenius {
        let j = (f % m) as usize;
        if f == 0 || j == 0 {
            return None;
        }
        let q = (f / m + 1) as u32;
        if query.depth_max.is_some_and(|d| q > d) || query.depth_exact.is_some_and(|d| q != d) {
            return None;
        }
        hi = (1..=len)
            .map(|i| if i <= j { q } else { q - 1 })
            .collect::<Vec<_>>();
        lo[j - 1] = q;
    } else {
        let cap = query.depth_cap()?;
        hi = vec![cap; len];
        need_depth = query.depth_exact.unwrap_or(0);
    }
    if query.stressed {
        let q = query.depth_exact?;
        lo[len - 1] = lo[len - 1].max(q);
        hi[len - 1] = hi[len - 1].min(q);
    }
    if let Some(n) = query.contains {
        let r = (n % m) as usize;
        if r != 0 {
            hi[r - 1] = hi[r - 1].min((n / m) as u32);
        }
    }
    Plan::new(lo, hi, query.med, need_depth)
}

/// Lexicographically ordered stream of the words of one plan.
pub(crate) struct PlanStream {
    plan: Plan,
    cur: Vec<u32>,
    hi: Vec<u32>,
    /// Index of the deepest assigned position, or `None` before start.
    top: Option<usize>,
    done: bool,
}

impl PlanStream {
    pub fn new(plan: Plan) -> Self {
        let len = plan.len;
        PlanStream {
            plan,
            cur: vec![0; len],
            hi: vec![0; len],
            top: None,
            done: false,
        }
    }

    fn open(&mut self, k: usize) {
        let (lo, hi) = self.plan.window(&self.cur[..k], k);
        self.cur[k] = lo;
        self.hi[k] = hi;
        self.top = Some(k);
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let len = self.plan.len;
        match self.top {
            None => self.open(0),
            Some(k) => self.cur[k] += 1,
        }
        loop {
            let k = self.top.unwrap();
            if self.cur[k] > self.hi[k] {
                if k == 0 {
                    self.done = true;
                    return false;
                }
                self.top = Some(k - 1);
                self.cur[k - 1] += 1;
                continue;
            }
            if k + 1 == len {
                return true;
            }
            self.open(k + 1);
        }
    }
}

impl Iterator for PlanStream {
    type Item = KunzWord;

    fn next(&mut self) -> Option<KunzWord> {
        if self.advance() {
            Some(KunzWord::from_entries_unchecked(self.cur.clone()))
        } else {
            None
        }
    }
}

/// Lexicographic merge of the per-length streams.
pub struct WordStream {
    streams: Vec<PlanStream>,
    heap: BinaryHeap<Reverse<(KunzWord, usize)>>,
}

impl WordStream {
    pub(crate) fn new(plans: Vec<Plan>) -> Self {
        let mut streams: Vec<PlanStream> = plans.into_iter().map(PlanStream::new).collect();
        let mut heap = BinaryHeap::new();
        for (i, s) in streams.iter_mut().enumerate() {
            if let Some(w) = s.next() {
                heap.push(Reverse((w, i)));
            }
        }
        WordStream { streams, heap }
    }
}

impl Iterator for WordStream {
    type Item = KunzWord;

    fn next(&mut self) -> Option<KunzWord> {
        let Reverse((word, i)) = self.heap.pop()?;
        if let Some(w) = self.streams[i].next() {
            self.heap.push(Reverse((w, i)));
        }
        Some(word)
    }
}
