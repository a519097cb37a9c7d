//! The online list-coloring (paintability) game.
//!
//! Every vertex starts with `k` tokens. Each round the marker marks a
//! nonempty set `M` of remaining vertices, each paying one token; the
//! remover colors an independent `I ⊆ M`, and those vertices leave. The
//! marker wins once an uncolored vertex has no tokens left; the remover
//! wins when every vertex has been colored.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph};

/// A game position. Token counts are indexed by vertex; only entries of
/// remaining vertices are meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub remaining: u32,
    pub tokens: Vec<u8>,
    pub phase: Phase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    MarkerToMove,
    RemoverToMove { marked: u32 },
}

impl GameState {
    pub fn start(n: usize, k: usize) -> Self {
        GameState {
            remaining: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
            tokens: vec![k.min(u8::MAX as usize) as u8; n],
            phase: Phase::MarkerToMove,
        }
    }
}

fn subsets(mask: u32) -> impl Iterator<Item = u32> {
    // nonempty submasks, descending
    let mut s = mask;
    std::iter::from_fn(move || {
        if s == 0 {
            return None;
        }
        let out = s;
        s = (s - 1) & mask;
        Some(out)
    })
}

fn is_independent(nbr: &[u64], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if nbr[v] as u32 & set != 0 {
            return false;
        }
    }
    true
}

/// Maximal independent subsets of `m` (within the graph induced by `m`).
fn maximal_independent(nbr: &[u64], m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    fn grow(nbr: &[u64], m: u32, chosen: u32, cand: u32, excluded: u32, out: &mut Vec<u32>) {
        if cand == 0 {
            // maximal iff no excluded vertex could still be added
            let blocked = (0..32).filter(|&v| excluded >> v & 1 == 1).all(|v| nbr[v] as u32 & chosen != 0);
            if blocked {
                out.push(chosen);
            }
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        grow(nbr, m, chosen | bit, cand & !bit & !(nbr[v] as u32), excluded, out);
        grow(nbr, m, chosen, cand & !bit, excluded | bit, out);
    }
    grow(nbr, m, 0, m, 0, &mut out);
    out
}

struct Solver {
    nbr: Vec<u64>,
    memo: HashMap<(u32, u64), bool>,
    restricted: bool,
}

fn pack(remaining: u32, tokens: &[u8]) -> (u32, u64) {
    let mut key = 0u64;
    for (v, &t) in tokens.iter().enumerate() {
        if remaining >> v & 1 == 1 {
            key |= u64::from(t) << (4 * v);
        }
    }
    (remaining, key)
}

impl Solver {
    /// Drops vertices with more tokens than remaining neighbours: the
    /// remover can always color those once everything else is settled.
    fn reduce(&self, mut remaining: u32, tokens: &[u8]) -> u32 {
        loop {
            let mut changed = false;
            for v in 0..tokens.len() {
                if remaining >> v & 1 == 1 && (tokens[v] as u32) > (self.nbr[v] as u32 & remaining).count_ones() {
                    remaining &= !(1 << v);
                    changed = true;
                }
            }
            if !changed {
                return remaining;
            }
        }
    }

    /// True iff the remover wins from (remaining, tokens) with the marker to move.
    fn remover_wins(&mut self, remaining: u32, tokens: &mut Vec<u8>) -> bool {
        let remaining = if self.restricted { self.reduce(remaining, tokens) } else { remaining };
        if remaining == 0 {
            return true;
        }
        let key = pack(remaining, tokens);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let mut wins = true;
        for m in subsets(remaining) {
            if !self.answer_exists(remaining, m, tokens) {
                wins = false;
                break;
            }
        }
        self.memo.insert(key, wins);
        wins
    }

    /// Whether the remover has a good reply to marking `m`.
    fn answer_exists(&mut self, remaining: u32, m: u32, tokens: &mut Vec<u8>) -> bool {
        let replies = if self.restricted {
            maximal_independent(&self.nbr, m)
        } else {
            subsets(m).filter(|&i| is_independent(&self.nbr, i)).collect()
        };
        let marked: Vec<usize> = (0..tokens.len()).filter(|&v| m >> v & 1 == 1).collect();
        for &v in &marked {
            tokens[v] -= 1;
        }
        let mut found = false;
        for i in replies {
            // an uncolored marked vertex out of tokens loses the game
            if marked.iter().any(|&v| i >> v & 1 == 0 && tokens[v] == 0) {
                continue;
            }
            if self.remover_wins(remaining & !i, tokens) {
                found = true;
                break;
            }
        }
        for &v in &marked {
            tokens[v] += 1;
        }
        found
    }
}

fn check_size(g: &Graph, limits: &Limits) -> Result<()> {
    let limit = limits.paint_vertices.min(16);
    if g.vertex_count() > limit {
        return Err(Error::resource(
            "paint_number",
            format!("{} vertices exceed the game-solver limit of {limit}", g.vertex_count()),
            "bound χ_p above by the Alon-Tarsi number",
        ));
    }
    Ok(())
}

fn solve(g: &Graph, k: usize, restricted: bool) -> bool {
    let n = g.vertex_count();
    if k == 0 {
        return n == 0;
    }
    let mut solver = Solver {
        nbr: g.neighbor_masks(),
        memo: HashMap::new(),
        restricted,
    };
    let start = GameState::start(n, k.min(15));
    let mut tokens = start.tokens;
    solver.remover_wins(start.remaining, &mut tokens)
}

/// Exact game solution, with the remover restricted to maximal independent
/// replies and positions reduced by the token/degree rule.
pub fn is_k_paintable(g: &Graph, k: usize, limits: &Limits) -> Result<bool> {
    check_size(g, limits)?;
    // k > degeneracy: greedy strategy wins; also keeps tokens within 4 bits
    if k >= degeneracy_order(g).1 {
        return Ok(true);
    }
    Ok(solve(g, k, true))
}

/// Reference solver: every independent reply, no position reduction.
/// Only meant for tiny graphs.
pub fn is_k_paintable_unrestricted(g: &Graph, k: usize, limits: &Limits) -> Result<bool> {
    check_size(g, limits)?;
    Ok(solve(g, k.min(15), false))
}

/// χ_p: the least k for which the remover wins.
pub fn paint_number(g: &Graph, limits: &Limits) -> Result<usize> {
    check_size(g, limits)?;
    let col = degeneracy_order(g).1;
    for k in 1..col {
        if solve(g, k, true) {
            return Ok(k);
        }
    }
    Ok(col.max(usize::from(g.vertex_count() > 0)))
}
