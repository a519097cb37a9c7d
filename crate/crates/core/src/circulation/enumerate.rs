use std::collections::VecDeque;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::orientation::Orientation;

use super::{Census, Circulation};

/// Arc processing order for the enumerator: vertices in BFS order, arcs by
/// the later of their two endpoints, so vertices close early.
fn bfs_arc_order(d: &Orientation) -> Vec<usize> {
    let n = d.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(t, h) in d.arcs() {
        adj[t].push(h);
        adj[h].push(t);
    }
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = next;
        next += 1;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..d.arc_count()).collect();
    order.sort_by_key(|&i| {
        let (t, h) = d.arcs()[i];
        (pos[t].max(pos[h]), pos[t].min(pos[h]), i)
    });
    order
}

struct Walker<'a, F> {
    arcs: &'a [(usize, usize)],
    order: Vec<usize>,
    balance: Vec<i32>,
    rem_out: Vec<i32>,
    rem_in: Vec<i32>,
    visit: F,
}

impl<F: FnMut(Circulation)> Walker<'_, F> {
    fn feasible(&self, v: usize) -> bool {
        let b = self.balance[v];
        b <= self.rem_in[v] && -b <= self.rem_out[v]
    }

    fn walk(&mut self, depth: usize, mask: u64) {
        if depth == self.order.len() {
            (self.visit)(Circulation(mask));
            return;
        }
        let i = self.order[depth];
        let (t, h) = self.arcs[i];
        self.rem_out[t] -= 1;
        self.rem_in[h] -= 1;

        if self.feasible(t) && self.feasible(h) {
            self.walk(depth + 1, mask);
        }
        self.balance[t] += 1;
        self.balance[h] -= 1;
        if self.feasible(t) && self.feasible(h) {
            self.walk(depth + 1, mask | 1 << i);
        }
        self.balance[t] -= 1;
        self.balance[h] += 1;

        self.rem_out[t] += 1;
        self.rem_in[h] += 1;
    }
}

/// Calls `visit` once for every circulation of `d` (including the empty
/// one), in a deterministic order.
pub fn for_each_circulation(d: &Orientation, limits: &Limits, visit: impl FnMut(Circulation)) -> Result<()> {
    let m = d.arc_count();
    let cap = limits.enumeration_arcs.min(64);
    if m > cap {
        return Err(Error::resource(
            "census_enumerate",
            format!("{m} arcs exceed the enumeration limit of {cap}"),
            "use census_dp for the signed difference",
        ));
    }
    let n = d.vertex_count();
    let mut rem_out = vec![0; n];
    let mut rem_in = vec![0; n];
    for &(t, h) in d.arcs() {
        rem_out[t] += 1;
        rem_in[h] += 1;
    }
    let mut walker = Walker {
        arcs: d.arcs(),
        order: bfs_arc_order(d),
        balance: vec![0; n],
        rem_out,
        rem_in,
        visit,
    };
    walker.walk(0, 0);
    Ok(())
}

/// Exact even/odd circulation counts by pruned subset enumeration.
pub fn census_enumerate(d: &Orientation, limits: &Limits) -> Result<Census> {
    let mut census = Census::default();
    for_each_circulation(d, limits, |c| {
        if c.is_even() {
            census.even += 1;
        } else {
            census.odd += 1;
        }
    })?;
    Ok(census)
}
