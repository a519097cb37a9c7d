//! Even/odd circulation counts and graph-polynomial coefficients.
//!
//! Two independent engines answer the same question. [`census_enumerate`]
//! walks arc subsets and counts balanced ones; [`census_dp`] computes the
//! coefficient of `∏ x_v^{outdeg(v)}` in `∏_{u<v} (x_u - x_v)`, whose
//! magnitude equals `|even - odd|`. [`graph_poly_coeffs`] expands the whole
//! polynomial under a per-variable degree cap.

mod dp;
mod enumerate;
mod order;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::Result;
use crate::orientation::{Arc, Orientation};

pub use dp::census_dp;
pub use enumerate::{census_enumerate, for_each_circulation};
pub use order::{elimination_order, frontier_width};
pub use poly::{graph_poly_coeffs, CoeffMap};

/// Arc subset of a host orientation, as a bitmask over its sorted arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Circulation(pub u64);

impl Circulation {
    pub fn arc_count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.arc_count() % 2 == 0
    }

    pub fn contains(self, arc_index: usize) -> bool {
        self.0 >> arc_index & 1 == 1
    }

    pub fn arcs(self, host: &Orientation) -> Vec<Arc> {
        host.arcs()
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.contains(i))
            .map(|(_, &a)| a)
            .collect()
    }

    /// In-degree equals out-degree at every vertex of `host`.
    pub fn is_balanced(self, host: &Orientation) -> bool {
        let mut bal = vec![0i64; host.vertex_count()];
        for (t, h) in self.arcs(host) {
            bal[t] += 1;
            bal[h] -= 1;
        }
        bal.iter().all(|&b| b == 0)
    }
}

/// Even and odd circulation counts. Enumeration is capped at 64 arcs, so
/// both counts fit in `u64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub even: u64,
    pub odd: u64,
}

impl Census {
    pub fn total(&self) -> u128 {
        self.even as u128 + self.odd as u128
    }

    pub fn diff(&self) -> i128 {
        self.even as i128 - self.odd as i128
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(even={}, odd={})", self.even, self.odd)
    }
}

/// True iff the even and odd circulation counts of `d` differ.
///
/// Uses the coefficient DP; if that runs out of budget and the digraph is
/// small enough, falls back to enumeration.
pub fn at_witness_check(d: &Orientation, limits: &Limits) -> Result<bool> {
    match census_dp(d, limits) {
        Ok(c) => Ok(!c.is_zero()),
        Err(e) if e.is_resource() && d.arc_count() <= limits.enumeration_arcs => {
            Ok(census_enumerate(d, limits)?.diff() != 0)
        }
        Err(e) => Err(e),
    }
}

/// `|even - odd|` as an unbounded integer, via the DP.
pub fn census_diff_magnitude(d: &Orientation, limits: &Limits) -> Result<BigInt> {
    Ok(census_dp(d, limits)?.magnitude().clone().into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};
    use crate::orientation::orient_thm21;

    #[test]
    fn witness_checks() {
        let limits = Limits::default();
        for k in 1..=2 {
            for n in 2..=3 {
                let (_, dstar) = orient_thm21(k, n).unwrap();
                assert!(at_witness_check(&dstar, &limits).unwrap());
            }
        }
        let c3 = Orientation::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!at_witness_check(&c3, &limits).unwrap());
        let k5 = build_family(&FamilySpec::Complete(5)).unwrap();
        assert!(at_witness_check(&Orientation::low_to_high(&k5), &limits).unwrap());
    }
}
