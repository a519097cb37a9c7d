use super::Graph;

/// Smallest-last ordering.
///
/// Returns `(order, d)` where every `order[i]` has at most `d - 1`
/// neighbours among `order[..i]` and `d` is the least such bound over all
/// orderings, i.e. the coloring number `col(G)`.
pub fn degeneracy_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut worst = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertex left");
        worst = worst.max(degree[v]);
        removed[v] = true;
        peeled.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    peeled.reverse();
    let d = if n == 0 { 0 } else { worst + 1 };
    (peeled, d)
}

/// Largest number of earlier neighbours any vertex has along `order`.
pub fn back_degree(g: &Graph, order: &[usize]) -> usize {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| pos[w] < i).count())
        .max()
        .unwrap_or(0)
}
