//! Minimisation over vertex orders by dynamic programming on placed sets.
//!
//! Every objective used for reconstruction is a sum over vertices of a cost
//! that depends only on the set of vertices placed before it. An acyclic
//! orientation with nested initial sets `base ⊆ H` has a linear extension
//! listing `base`, then `H - base`, then the rest, so the least cost with
//! both sets initial is `prefix(H) + suffix(H)`.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

const INF: u64 = u64::MAX;

pub(crate) struct OrderDp {
    n: usize,
    base: VertexSet,
    prefix: Vec<u64>,
    suffix: Vec<u64>,
}

impl OrderDp {
    /// Number of table entries needed for `n` vertices.
    pub(crate) fn states(n: usize) -> u64 {
        1u64 << n
    }

    pub(crate) fn new<C>(n: usize, base: VertexSet, budget: u64, cost: C) -> Result<Self>
    where
        C: Fn(usize, VertexSet) -> u64,
    {
        let needed = Self::states(n);
        if n >= 40 || needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let size = needed as usize;
        let full = VertexSet::full(n);
        let mut prefix = vec![INF; size];
        prefix[0] = 0;
        for bits in 1..size as u64 {
            let s = VertexSet::from_bits(bits);
            let last = if s.is_subset(base) {
                s
            } else if s.is_superset(base) {
                s - base
            } else {
                continue;
            };
            let mut best = INF;
            for v in last {
                let before = s.without(v);
                let p = prefix[before.bits() as usize];
                if p != INF {
                    best = best.min(p + cost(v, before));
                }
            }
            prefix[bits as usize] = best;
        }
        let mut suffix = vec![INF; size];
        suffix[full.bits() as usize] = 0;
        for bits in (0..size as u64).rev() {
            let s = VertexSet::from_bits(bits);
            if s == full || !s.is_superset(base) {
                continue;
            }
            let mut best = INF;
            for v in full - s {
                let after = suffix[s.with(v).bits() as usize];
                best = best.min(after + cost(v, s));
            }
            suffix[bits as usize] = best;
        }
        Ok(OrderDp {
            n,
            base,
            prefix,
            suffix,
        })
    }

    /// Least cost over orders starting with `base` and with `set` initial.
    pub(crate) fn through(&self, set: VertexSet) -> u64 {
        debug_assert!(set.is_superset(self.base));
        let p = self.prefix[set.bits() as usize];
        if p == INF {
            INF
        } else {
            p + self.suffix[set.bits() as usize]
        }
    }

    /// Least cost over orders starting with `base`.
    pub(crate) fn minimum(&self) -> u64 {
        self.prefix[VertexSet::full(self.n).bits() as usize]
    }

    /// An order attaining [`OrderDp::through`] for `set`. Ties go to the
    /// lowest vertex: for the last free position when walking `set` backwards,
    /// for the next position when walking the rest forwards.
    pub(crate) fn witness<C>(&self, set: VertexSet, cost: C) -> Vec<usize>
    where
        C: Fn(usize, VertexSet) -> u64,
    {
        let full = VertexSet::full(self.n);
        let mut tail = Vec::new();
        let mut s = set;
        while !s.is_empty() {
            let last = if s.is_subset(self.base) { s } else { s - self.base };
            let v = last
                .iter()
                .find(|&v| {
                    let p = self.prefix[s.without(v).bits() as usize];
                    p != INF && p + cost(v, s.without(v)) == self.prefix[s.bits() as usize]
                })
                .expect("prefix table is consistent");
            tail.push(v);
            s = s.without(v);
        }
        tail.reverse();
        let mut s = set;
        while s != full {
            let v = (full - s)
                .iter()
                .find(|&v| self.suffix[s.with(v).bits() as usize] + cost(v, s) == self.suffix[s.bits() as usize])
                .expect("suffix table is consistent");
            tail.push(v);
            s = s.with(v);
        }
        tail
    }
}
