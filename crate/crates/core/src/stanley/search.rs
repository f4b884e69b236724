//! Exact Stanley depth by backtracking over interval partitions.
//!
//! Points are covered in lex order, so the smallest uncovered point is always
//! the bottom `a` of a new interval. Any interval whose top has at least `t`
//! capped coordinates splits into intervals `[a, b]` with `b_j ∈ {a_j, g_j}`
//! that cap exactly `max(0, t - #{j : a_j = g_j})` new coordinates, so those
//! are the only tops tried. Covered-sets that failed once are remembered.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::{Monomial, VarSet};

use super::poset::{CharacteristicPoset, Interval, IntervalPartition};
use super::TargetKind;

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    t: usize,
    free: Vec<bool>,
    dead: HashSet<Vec<u64>>,
    chosen: Vec<Interval>,
    nodes: u64,
    limit: u64,
}

fn combinations(pool: &[usize], k: usize) -> Vec<VarSet> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut VarSet, out: &mut Vec<VarSet>) {
        if cur.len() == k {
            out.push(*cur);
            return;
        }
        for p in start..pool.len() {
            if pool.len() - p < k - cur.len() {
                break;
            }
            cur.insert(pool[p]);
            go(pool, k, p + 1, cur, out);
            cur.remove(pool[p]);
        }
    }
    let mut out = Vec::new();
    let mut cur = VarSet::EMPTY;
    go(pool, k, 0, &mut cur, &mut out);
    out
}

impl Search<'_> {
    fn key(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.free.len().div_ceil(64)];
        for (i, &f) in self.free.iter().enumerate() {
            if f {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        words
    }

    /// Box indices of `[a, b]` where `b` raises the coordinates in `z` to the cap.
    fn interval_indices(&self, base: usize, a: &[u32], z: VarSet) -> Vec<usize> {
        let caps = self.poset.caps();
        let strides = self.poset.strides();
        let mut idx = vec![base];
        for j in z.iter() {
            let width = (caps[j] - a[j]) as usize;
            let mut next = Vec::with_capacity(idx.len() * (width + 1));
            for &i in &idx {
                for k in 0..=width {
                    next.push(i + k * strides[j]);
                }
            }
            idx = next;
        }
        idx
    }

    fn run(&mut self, cursor: usize) -> Result<bool> {
        let Some(idx) = (cursor..self.free.len()).find(|&i| self.free[i]) else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceCap {
                what: "interval-partition search nodes",
                limit: self.limit,
            });
        }
        let key = self.key();
        if self.dead.contains(&key) {
            return Ok(false);
        }

        let a = self.poset.point_at(idx);
        let caps = self.poset.caps();
        let already = self.poset.capped(&a).len();
        let need = self.t.saturating_sub(already);
        let open: Vec<usize> = (0..a.len()).filter(|&j| a[j] < caps[j]).collect();
        if open.len() >= need {
            for z in combinations(&open, need) {
                let cells = self.interval_indices(idx, &a, z);
                if !cells.iter().all(|&c| self.free[c]) {
                    continue;
                }
                for &c in &cells {
                    self.free[c] = false;
                }
                let top: Vec<u32> = (0..a.len())
                    .map(|j| if z.contains(j) { caps[j] } else { a[j] })
                    .collect();
                self.chosen
                    .push(Interval::new(Monomial::new(a.clone()), Monomial::new(top)));
                if self.run(idx + 1)? {
                    return Ok(true);
                }
                self.chosen.pop();
                for &c in &cells {
                    self.free[c] = true;
                }
            }
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// An interval partition of `poset` whose every top has at least `t` capped
/// coordinates, if one exists.
pub fn find_partition(
    poset: &CharacteristicPoset,
    t: usize,
    limits: &Limits,
) -> Result<Option<IntervalPartition>> {
    let mut search = Search {
        poset,
        t,
        free: poset.membership().to_vec(),
        dead: HashSet::new(),
        chosen: Vec::new(),
        nodes: 0,
        limit: limits.max_search_nodes,
    };
    if search.run(0)? {
        Ok(Some(IntervalPartition::new_unchecked(
            poset.clone(),
            search.chosen,
        )))
    } else {
        Ok(None)
    }
}

/// Exact Stanley depth with a partition attaining it. Tries `t = n, n-1, ...`
/// and returns the first feasible level.
pub fn best_partition(
    ideal: &MonomialIdeal,
    kind: TargetKind,
    limits: &Limits,
) -> Result<(usize, IntervalPartition)> {
    let poset = CharacteristicPoset::new(ideal, kind);
    for t in (0..=poset.n()).rev() {
        if let Some(p) = find_partition(&poset, t, limits)? {
            return Ok((t, p));
        }
    }
    unreachable!("singleton intervals always give t = 0")
}

/// `sdepth(S/I)` or `sdepth(I)`, exactly.
pub fn sdepth_exact(ideal: &MonomialIdeal, kind: TargetKind, limits: &Limits) -> Result<usize> {
    best_partition(ideal, kind, limits).map(|(t, _)| t)
}
