//! Exhaustive catalog of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a vertex whose removal keeps
//! it connected, so the `n`-vertex catalog is obtained from the
//! `(n-1)`-vertex one by attaching a new vertex to every nonempty
//! neighbour set and keeping one representative per canonical form.

use std::collections::BTreeSet;

use super::Graph;

/// Upper-triangle adjacency bits under the vertex map `perm`.
fn code(n: usize, masks: &[u64], perm: &[usize]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if masks[perm[i]] >> perm[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Canonical form: the maximum adjacency code over all vertex orders.
/// Only for `n <= 11` (the code must fit in 64 bits).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical_code is for tiny graphs");
    let masks = g.neighbor_masks();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0;
    heap_permutations(&mut perm, n, &mut |p| {
        best = best.max(code(n, &masks, p));
    });
    best
}

fn heap_permutations(a: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, f);
}

fn from_code(n: usize, c: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if c >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::with_named_vertices(n, edges).expect("valid code")
}

/// One representative of every connected graph on `n` vertices (n <= 8).
/// Sorted by canonical code, so the output is deterministic.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "catalog supports n <= 8");
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Graph::with_named_vertices(1, []).unwrap()];
    }
    let mut codes = BTreeSet::new();
    for base in connected_graphs(n - 1) {
        for subset in 1u64..(1 << (n - 1)) {
            let mut edges = base.edges().to_vec();
            edges.extend((0..n - 1).filter(|i| subset >> i & 1 == 1).map(|i| (i, n - 1)));
            let g = Graph::with_named_vertices(n, edges).expect("simple");
            codes.insert(canonical_code(&g));
        }
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

/// All connected graphs with at most `n` vertices.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}
