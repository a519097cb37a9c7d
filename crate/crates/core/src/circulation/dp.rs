use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::orientation::Orientation;

use super::order::elimination_order;

/// Coefficient of `∏ x_v^{outdeg_D(v)}` in `∏_{edges u<v} (x_u - x_v)`.
///
/// Its magnitude is `|even - odd|` for the circulations of `d`; the sign
/// depends on the orientation and is left as computed.
///
/// The product is expanded one edge at a time in a greedy elimination
/// order. The table only tracks the partial exponents of frontier vertices
/// (touched but with edges left); a vertex leaves the frontier once its
/// exponent matches its outdegree.
pub fn census_dp(d: &Orientation, limits: &Limits) -> Result<BigInt> {
    let n = d.vertex_count();
    let target: Vec<u8> = d
        .out_degrees()
        .into_iter()
        .map(|x| u8::try_from(x).expect("outdegree fits in u8"))
        .collect();
    let edges: Vec<(usize, usize)> = d.arcs().iter().map(|&(t, h)| (t.min(h), t.max(h))).collect();
    let order = elimination_order(n, &edges);

    let mut remaining = vec![0usize; n];
    for &(u, v) in &edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    // Slot assignment: simulate the order once to size the key.
    let mut slot = vec![usize::MAX; n];
    let mut free: Vec<usize> = Vec::new();
    let mut width = 0;
    let mut plan = Vec::with_capacity(order.len());
    {
        let mut rem = remaining.clone();
        for &i in &order {
            let (u, v) = edges[i];
            for w in [u, v] {
                if slot[w] == usize::MAX {
                    slot[w] = free.pop().unwrap_or_else(|| {
                        width += 1;
                        width - 1
                    });
                }
            }
            let (su, sv) = (slot[u], slot[v]);
            let mut retire = Vec::new();
            for w in [u, v] {
                rem[w] -= 1;
                if rem[w] == 0 {
                    retire.push((slot[w], target[w]));
                    free.push(slot[w]);
                    slot[w] = usize::MAX;
                }
            }
            plan.push(Step {
                u_slot: su,
                v_slot: sv,
                u_cap: target[u],
                v_cap: target[v],
                retire,
            });
        }
    }

    let mut table: HashMap<Vec<u8>, BigInt> = HashMap::new();
    table.insert(vec![0; width], BigInt::one());
    for step in &plan {
        let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(table.len() * 2);
        for (key, coeff) in &table {
            // x_u from (x_u - x_v): +1, lower endpoint gains an exponent
            if key[step.u_slot] < step.u_cap {
                let mut k = key.clone();
                k[step.u_slot] += 1;
                if step.retire(&mut k) {
                    *next.entry(k).or_insert_with(BigInt::zero) += coeff;
                }
            }
            if key[step.v_slot] < step.v_cap {
                let mut k = key.clone();
                k[step.v_slot] += 1;
                if step.retire(&mut k) {
                    *next.entry(k).or_insert_with(BigInt::zero) -= coeff;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        if next.len() > limits.dp_states {
            return Err(Error::resource(
                "census_dp",
                format!(
                    "{} states exceed the budget of {} (frontier width {width}, {} edges)",
                    next.len(),
                    limits.dp_states,
                    edges.len()
                ),
                "raise dp_states",
            ));
        }
        table = next;
    }
    Ok(table.remove(&vec![0; width]).unwrap_or_else(BigInt::zero))
}

struct Step {
    u_slot: usize,
    v_slot: usize,
    u_cap: u8,
    v_cap: u8,
    retire: Vec<(usize, u8)>,
}

impl Step {
    /// Drops finished vertices from the key; false if one missed its target.
    fn retire(&self, key: &mut [u8]) -> bool {
        for &(s, want) in &self.retire {
            if key[s] != want {
                return false;
            }
            key[s] = 0;
        }
        true
    }
}
