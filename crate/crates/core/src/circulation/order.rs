/// Greedy edge elimination order for the frontier DPs.
///
/// At each step pick the edge that retires the most endpoints (endpoints
/// with no other unprocessed edge), then the one touching the most
/// vertices already on the frontier, then the lowest index. The order only
/// affects table sizes, never results.
pub fn elimination_order(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut remaining = vec![0usize; n];
    for &(u, v) in edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut active = vec![false; n];
    let mut done = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    for _ in 0..edges.len() {
        let (best, _) = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| !done[i])
            .map(|(i, &(u, v))| {
                let retire = usize::from(remaining[u] == 1) + usize::from(remaining[v] == 1);
                let touch = usize::from(active[u]) + usize::from(active[v]);
                (i, (retire + touch, touch, std::cmp::Reverse(i)))
            })
            .max_by_key(|&(_, key)| key)
            .expect("edge left");
        let (u, v) = edges[best];
        done[best] = true;
        order.push(best);
        for w in [u, v] {
            remaining[w] -= 1;
            active[w] = remaining[w] > 0;
        }
    }
    order
}

/// Largest number of simultaneously active vertices along `order`.
pub fn frontier_width(n: usize, edges: &[(usize, usize)], order: &[usize]) -> usize {
    let mut remaining = vec![0usize; n];
    for &(u, v) in edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut active = vec![false; n];
    let mut width = 0;
    let mut live = 0;
    for &i in order {
        let (u, v) = edges[i];
        for w in [u, v] {
            if !active[w] {
                active[w] = true;
                live += 1;
            }
        }
        width = width.max(live);
        for w in [u, v] {
            remaining[w] -= 1;
            if remaining[w] == 0 {
                active[w] = false;
                live -= 1;
            }
        }
    }
    width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, FamilySpec};

    #[test]
    fn is_a_permutation_with_narrow_frontier_on_products() {
        let g = cartesian_product(
            &build_family(&FamilySpec::Cycle(7)).unwrap(),
            &build_family(&FamilySpec::Path(4)).unwrap(),
        )
        .unwrap();
        let order = elimination_order(g.vertex_count(), g.edges());
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..g.edge_count()).collect::<Vec<_>>());
        assert!(frontier_width(g.vertex_count(), g.edges(), &order) <= 16);
    }
}
