//! Level subsequences and the `d_{r,n}` counting table.
//!
//! With `p = 2k+1`, the inter-layer arc from `(v_{r+1}, w_{q+1})` to
//! `(v_{r+1}, w_{q+2})` is `e_{pq+r}`. A level subsequence picks one such
//! arc per layer gap, `a_i = p·i + r_i` for `i = 0..n-2`, with `r_0 != 0`
//! and `r_i != r_{i+1}`. `Q` is the set of all of them; `R` drops those
//! ending in `r = 1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LevelSubsequence {
    pub k: usize,
    /// Edge indices `a_0..a_{n-2}`.
    pub indices: Vec<usize>,
}

impl LevelSubsequence {
    /// Residues `r_i = a_i mod (2k+1)`.
    pub fn residues(&self) -> Vec<usize> {
        self.indices.iter().map(|a| a % (2 * self.k + 1)).collect()
    }

    pub fn is_valid(&self) -> bool {
        let p = 2 * self.k + 1;
        let r = self.residues();
        !r.is_empty()
            && self.indices.iter().enumerate().all(|(i, &a)| a / p == i)
            && r[0] != 0
            && r.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSets {
    pub q: Vec<LevelSubsequence>,
    pub r: Vec<LevelSubsequence>,
}

/// Direct enumeration of `Q` and `R` in lexicographic order.
pub fn enumerate_level_subsequences(k: usize, n: usize) -> Result<LevelSets> {
    if k < 1 || n < 2 {
        return Err(Error::precondition("level subsequences need k >= 1 and n >= 2"));
    }
    let p = 2 * k + 1;
    let mut q = Vec::new();
    let mut residues = Vec::with_capacity(n - 1);
    fn walk(p: usize, len: usize, residues: &mut Vec<usize>, k: usize, out: &mut Vec<LevelSubsequence>) {
        if residues.len() == len {
            out.push(LevelSubsequence {
                k,
                indices: residues.iter().enumerate().map(|(i, r)| p * i + r).collect(),
            });
            return;
        }
        for r in 0..p {
            let ok = match residues.last() {
                None => r != 0,
                Some(&prev) => r != prev,
            };
            if ok {
                residues.push(r);
                walk(p, len, residues, k, out);
                residues.pop();
            }
        }
    }
    walk(p, n - 1, &mut residues, k, &mut q);
    let r = q
        .iter()
        .filter(|s| s.indices.last() != Some(&(p * (n - 2) + 1)))
        .cloned()
        .collect();
    Ok(LevelSets { q, r })
}

/// `d[r][n]`: the number of sequences in `Q` (for that `n`) whose last
/// residue is `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTable {
    pub k: usize,
    pub n_max: usize,
    /// `values[r][n - 2]`.
    pub values: Vec<Vec<BigUint>>,
}

impl DTable {
    pub fn get(&self, r: usize, n: usize) -> &BigUint {
        &self.values[r][n - 2]
    }

    /// `|Q| = Σ_r d[r][n]`.
    pub fn q_count(&self, n: usize) -> BigUint {
        (0..=2 * self.k).map(|r| self.get(r, n)).sum()
    }

    /// `|R| = |Q| - d[1][n]`.
    pub fn r_count(&self, n: usize) -> BigUint {
        self.q_count(n) - self.get(1, n)
    }

    /// `d[0][n]` even and `d[r][n]` odd for `r >= 1`, for every `n`.
    pub fn parity_holds(&self) -> bool {
        (2..=self.n_max).all(|n| {
            (0..=2 * self.k).all(|r| {
                let odd = self.get(r, n).bit(0);
                if r == 0 {
                    !odd
                } else {
                    odd
                }
            })
        })
    }
}

/// Builds the table from `d[0][2] = 0`, `d[r][2] = 1` and
/// `d[r][n] = Σ_{i != r} d[i][n-1]`.
pub fn d_table(k: usize, n_max: usize) -> Result<DTable> {
    if k < 1 || n_max < 2 {
        return Err(Error::precondition("d table needs k >= 1 and n_max >= 2"));
    }
    let p = 2 * k + 1;
    let mut values = vec![Vec::with_capacity(n_max - 1); p];
    for (r, col) in values.iter_mut().enumerate() {
        col.push(if r == 0 { BigUint::zero() } else { BigUint::one() });
    }
    for step in 1..n_max - 1 {
        let total: BigUint = values.iter().map(|c| &c[step - 1]).sum();
        for col in values.iter_mut() {
            let v = &total - &col[step - 1];
            col.push(v);
        }
    }
    Ok(DTable { k, n_max, values })
}
