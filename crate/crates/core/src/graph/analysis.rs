//! Structural queries used by the constructions and solvers.

use super::degeneracy::back_degree;
use super::Graph;

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Proper 2-colouring if one exists.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// True when `order` lists the vertices of `g` so that `g` is exactly the
/// cycle `order[0] - order[1] - ... - order[last] - order[0]`.
pub fn is_cycle_in_order(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    n >= 3
        && n == g.vertex_count()
        && g.edge_count() == n
        && (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]))
}

/// Bridges (cut edges), as sorted `(u, v)` pairs with `u < v`.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        out.push((parent.min(u), parent.max(u)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_hamilton_path(g: &Graph, path: &[usize]) -> bool {
    let n = g.vertex_count();
    if path.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Hamilton path minimising the largest number of earlier neighbours
/// along the path, by exhaustive search. Returns `(path, k)`.
///
/// Intended for the small factors `H` of the product constructions.
pub fn best_hamilton_path(g: &Graph) -> Option<(Vec<usize>, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut best: Option<(Vec<usize>, usize)> = None;
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        back: usize,
        best: &mut Option<(Vec<usize>, usize)>,
    ) {
        if let Some((_, b)) = best {
            if back >= *b {
                return;
            }
        }
        if path.len() == g.vertex_count() {
            *best = Some((path.clone(), back));
            return;
        }
        let last = *path.last().expect("nonempty path");
        for &w in g.neighbors(last) {
            if used[w] {
                continue;
            }
            let earlier = g.neighbors(w).iter().filter(|&&x| used[x]).count();
            used[w] = true;
            path.push(w);
            extend(g, path, used, back.max(earlier), best);
            path.pop();
            used[w] = false;
        }
    }
    for s in 0..n {
        used[s] = true;
        path.push(s);
        extend(g, &mut path, &mut used, 0, &mut best);
        path.pop();
        used[s] = false;
    }
    debug_assert!(best.as_ref().map_or(true, |(p, k)| back_degree(g, p) == *k));
    best
}
