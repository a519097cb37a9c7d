//! The parity argument for the odd-cycle-by-path orientation, checked
//! circulation by circulation.
//!
//! Circulations of `D*` split into `A` (some base cycle entirely present or
//! entirely absent) and `B` (everything else). On `A`, deleting every fully
//! present base cycle and adding every fully absent one is a fixed-point-free
//! involution, so `|A|` is even. Every member of `B` is a single directed
//! cycle through `e*`, and those cycles are in bijection with the level
//! subsequences in `R`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::circulation::{for_each_circulation, Circulation};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::orientation::{Arc, Orientation};

use super::levels::{enumerate_level_subsequences, LevelSubsequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculationPartition {
    pub a: Vec<Circulation>,
    pub b: Vec<Circulation>,
    /// The swap map is an involution on `A` without fixed points.
    pub involution_ok: bool,
    /// Every member of `B` is one directed cycle through `e*`.
    pub b_single_cycles: bool,
    /// Every member of `B` meets every base cycle without containing it.
    pub b_meets_every_base_cycle: bool,
}

fn mask_of(d: &Orientation, arcs: &[Arc]) -> Result<u64> {
    arcs.iter().try_fold(0u64, |m, &a| {
        let i = d
            .arc_index(a)
            .ok_or_else(|| Error::precondition(format!("annotated arc {a:?} is not in the digraph")))?;
        Ok(m | 1 << i)
    })
}

fn annotated_masks(d: &Orientation) -> Result<(Vec<u64>, usize)> {
    let ann = d
        .annotations()
        .ok_or_else(|| Error::precondition("digraph carries no annotations"))?;
    let special = ann
        .special_arc
        .ok_or_else(|| Error::precondition("digraph has no annotated special arc"))?;
    if ann.base_cycles.is_empty() {
        return Err(Error::precondition("digraph has no annotated base cycles"));
    }
    let cycles = ann
        .base_cycles
        .iter()
        .map(|c| mask_of(d, c))
        .collect::<Result<Vec<_>>>()?;
    let e = d.arc_index(special).expect("validated on construction");
    Ok((cycles, e))
}

/// True iff the arcs of `mask` form one directed cycle.
fn is_single_cycle(d: &Orientation, mask: u64) -> bool {
    let arcs = Circulation(mask).arcs(d);
    if arcs.is_empty() {
        return false;
    }
    let mut next = BTreeMap::new();
    for &(t, h) in &arcs {
        if next.insert(t, h).is_some() {
            return false;
        }
    }
    let start = arcs[0].0;
    let mut cur = start;
    for step in 1..=arcs.len() {
        cur = next[&cur];
        if cur == start {
            return step == arcs.len();
        }
    }
    false
}

pub fn partition_circulations(dstar: &Orientation, limits: &Limits) -> Result<CirculationPartition> {
    let (cycles, special) = annotated_masks(dstar)?;
    let mut all = Vec::new();
    for_each_circulation(dstar, limits, |c| all.push(c))?;
    let set: BTreeSet<u64> = all.iter().map(|c| c.0).collect();

    let in_a = |h: u64| cycles.iter().any(|&b| h & b == b || h & b == 0);
    let swap = |h: u64| {
        let mut out = h;
        for &b in &cycles {
            if h & b == b || h & b == 0 {
                out ^= b;
            }
        }
        out
    };
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for c in all {
        if in_a(c.0) {
            a.push(c);
        } else {
            b.push(c);
        }
    }
    let involution_ok = a.iter().all(|c| {
        let s = swap(c.0);
        s != c.0 && set.contains(&s) && in_a(s) && swap(s) == c.0
    });
    let b_single_cycles = b.iter().all(|c| c.contains(special) && is_single_cycle(dstar, c.0));
    let b_meets_every_base_cycle = b
        .iter()
        .all(|c| cycles.iter().all(|&m| c.0 & m != 0 && c.0 & m != m));
    Ok(CirculationPartition {
        a,
        b,
        involution_ok,
        b_single_cycles,
        b_meets_every_base_cycle,
    })
}

/// The cycle through `e*` threaded by a level subsequence: start at the
/// head of `e*` in the first layer, run forward along each base cycle to the
/// tail of the next chosen level arc, climb it, and in the last layer run
/// forward to the tail of `e*`.
pub fn thread_cycle(dstar: &Orientation, seq: &LevelSubsequence) -> Result<Circulation> {
    let ann = dstar
        .annotations()
        .ok_or_else(|| Error::precondition("digraph carries no annotations"))?;
    let special = ann
        .special_arc
        .ok_or_else(|| Error::precondition("digraph has no annotated special arc"))?;
    let level: BTreeMap<usize, Arc> = ann.level_edge_index.iter().map(|&(a, i)| (i, a)).collect();
    let layers = ann.base_cycles.len();
    if seq.indices.len() + 1 != layers {
        return Err(Error::precondition("level subsequence length must be one less than the layer count"));
    }
    let succ: Vec<BTreeMap<usize, usize>> = ann
        .base_cycles
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    let mut arcs = Vec::new();
    let mut cur = special.1;
    for layer in 0..layers {
        let target = match seq.indices.get(layer) {
            Some(i) => level
                .get(i)
                .ok_or_else(|| Error::precondition(format!("no level arc with index {i}")))?
                .0,
            None => special.0,
        };
        while cur != target {
            let nxt = *succ[layer]
                .get(&cur)
                .ok_or_else(|| Error::precondition("walk left the base cycle"))?;
            arcs.push((cur, nxt));
            cur = nxt;
        }
        match seq.indices.get(layer) {
            Some(i) => {
                let a = level[i];
                arcs.push(a);
                cur = a.1;
            }
            None => arcs.push(special),
        }
    }
    Ok(Circulation(mask_of(dstar, &arcs)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub r_count: usize,
    pub b_count: usize,
    pub injective: bool,
    pub onto_b: bool,
    /// `(level indices, arc count of the threaded cycle)` per element of `R`.
    pub images: Vec<(Vec<usize>, u32)>,
}

/// Threads every element of `R` and compares the images with the `B`
/// found by enumeration.
pub fn bijection(dstar: &Orientation, k: usize, n: usize, part: &CirculationPartition) -> Result<BijectionReport> {
    let sets = enumerate_level_subsequences(k, n)?;
    let mut images = Vec::with_capacity(sets.r.len());
    let mut seen = BTreeSet::new();
    for seq in &sets.r {
        let c = thread_cycle(dstar, seq)?;
        seen.insert(c.0);
        images.push((seq.indices.clone(), c.arc_count()));
    }
    let b: BTreeSet<u64> = part.b.iter().map(|c| c.0).collect();
    Ok(BijectionReport {
        r_count: sets.r.len(),
        b_count: part.b.len(),
        injective: seen.len() == sets.r.len(),
        onto_b: seen == b,
        images,
    })
}
