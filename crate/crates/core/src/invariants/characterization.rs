use crate::error::{Error, Result};
use crate::graph::analysis::{bridges, is_bipartite, is_connected};
use crate::graph::Graph;

/// 2-choosability of a connected bipartite graph from its structure: true
/// iff it has at most one cycle, or its bridgeless part (all edges that are
/// not cut edges) is a theta graph Θ(2,2,2t).
pub fn two_choosable_by_characterization(g: &Graph) -> Result<bool> {
    if !is_connected(g) {
        return Err(Error::precondition("graph must be connected"));
    }
    if !is_bipartite(g) {
        return Err(Error::precondition("graph must be bipartite"));
    }
    // connected: at most one cycle iff |E| <= |V|
    if g.edge_count() <= g.vertex_count() {
        return Ok(true);
    }
    let cut = bridges(g);
    let kept: Vec<(usize, usize)> = g.edges().iter().copied().filter(|e| !cut.contains(e)).collect();
    Ok(theta_lengths(g.vertex_count(), &kept).is_some_and(|mut l| {
        l.sort_unstable();
        l[0] == 2 && l[1] == 2 && l[2] % 2 == 0
    }))
}

/// Branch lengths if `edges` (ignoring isolated vertices) form a theta graph
/// with exactly three branches.
fn theta_lengths(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    let others_ok = (0..n).all(|v| matches!(adj[v].len(), 0 | 2 | 3));
    if branch.len() != 2 || !others_ok {
        return None;
    }
    let (a, b) = (branch[0], branch[1]);
    let mut lengths = Vec::new();
    let mut used = 0;
    for &first in &adj[a] {
        let (mut prev, mut cur, mut len) = (a, first, 1);
        while cur != b {
            if cur == a {
                return None;
            }
            let next = *adj[cur].iter().find(|&&w| w != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        used += len;
        lengths.push(len);
    }
    // every edge must lie on one of the three branches
    (used == edges.len()).then_some(lengths)
}
