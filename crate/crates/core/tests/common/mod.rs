//! Independent oracles for the integration tests. Deliberately naive: they
//! share no code with the engines they check.

#![allow(dead_code)]

use at_lab::graph::Graph;
use rand::Rng;

/// `(even, odd)` circulation counts by walking all arc subsets in Gray-code
/// order and tracking vertex imbalances.
pub fn brute_census(n: usize, arcs: &[(usize, usize)]) -> (u64, u64) {
    assert!(arcs.len() <= 26, "oracle is exponential in the arc count");
    let mut bal = vec![0i32; n];
    let mut unbalanced = 0usize;
    let (mut even, mut odd) = (1u64, 0u64); // the empty subset
    let mut size = 0usize;
    let mut in_set = vec![false; arcs.len()];
    for step in 1u64..(1u64 << arcs.len()) {
        let i = step.trailing_zeros() as usize;
        let (t, h) = arcs[i];
        let sign = if in_set[i] { -1 } else { 1 };
        in_set[i] = !in_set[i];
        size = if sign == 1 { size + 1 } else { size - 1 };
        for (v, d) in [(t, sign), (h, -sign)] {
            let before = bal[v] != 0;
            bal[v] += d;
            let after = bal[v] != 0;
            match (before, after) {
                (false, true) => unbalanced += 1,
                (true, false) => unbalanced -= 1,
                _ => {}
            }
        }
        if unbalanced == 0 {
            if size % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    (even, odd)
}

/// Plain backtracking in vertex order: some proper coloring with
/// `color(v) ∈ lists[v]`?
pub fn brute_list_colorable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    fn go(g: &Graph, lists: &[Vec<u32>], v: usize, color: &mut Vec<u32>) -> bool {
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if g.neighbors(v).iter().all(|&w| w >= v || color[w] != c) {
                color[v] = c;
                if go(g, lists, v + 1, color) {
                    return true;
                }
            }
        }
        false
    }
    go(g, lists, 0, &mut vec![0; lists.len()])
}

/// A random simple digraph (no loops, no antiparallel pairs).
pub fn random_digraph(rng: &mut impl Rng, max_vertices: usize, max_arcs: usize) -> (usize, Vec<(usize, usize)>) {
    let n = rng.gen_range(2..=max_vertices);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let m = rng.gen_range(0..=max_arcs.min(pairs.len()));
    let arcs = pairs[..m]
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    (n, arcs)
}
