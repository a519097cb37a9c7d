use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

use super::{Family, Graph, JoinSide, VertexLabel};

/// Parameterised graph family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Internally disjoint paths of the given lengths between two branch
    /// vertices.
    Theta(Vec<usize>),
}

fn invalid(family: &str, constraint: &str) -> Error {
    Error::InvalidFamily {
        family: family.to_string(),
        constraint: constraint.to_string(),
    }
}

fn atoms(family: Family, n: usize) -> Vec<VertexLabel> {
    (1..=n).map(|i| VertexLabel::atom(family, i)).collect()
}

/// Builds `P(n)`, `C(n)`, `K(n)` or `Theta(l_1..l_t)` with canonical labels.
///
/// Paths and cycles are labelled in order, so vertex `i` is adjacent to
/// `i±1` (mod `n` for cycles). Theta branch vertices are 1 and 2; internal
/// vertices follow branch by branch.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(invalid("P", "n >= 1"));
            }
            let edges = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Graph::from_sorted(atoms(Family::P, n), edges))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid("C", "n >= 3"));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((0, n - 1));
            edges.sort_unstable();
            Ok(Graph::from_sorted(atoms(Family::C, n), edges))
        }
        FamilySpec::Complete(n) => {
            // K(1) and K(2) are accepted: joins and partial joins need them.
            if n < 1 {
                return Err(invalid("K", "n >= 1"));
            }
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Ok(Graph::from_sorted(atoms(Family::K, n), edges))
        }
        FamilySpec::Theta(ref lengths) => {
            if lengths.len() < 2 {
                return Err(invalid("Theta", "at least two branches"));
            }
            if lengths.iter().any(|&l| l < 1) {
                return Err(invalid("Theta", "branch lengths >= 1"));
            }
            if lengths.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(invalid("Theta", "at most one branch of length 1"));
            }
            let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
            let mut edges = Vec::new();
            let mut next = 2;
            for &len in lengths {
                let mut prev = 0;
                for _ in 1..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            Graph::new(atoms(Family::Theta, n), edges)
        }
    }
}

/// `G □ H` with flattened index `g * |V(H)| + h` and pair labels.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::precondition("cartesian product needs nonempty factors"));
    }
    let nh = h.vertex_count();
    let idx = |a: usize, b: usize| a * nh + b;
    let mut labels = Vec::with_capacity(g.vertex_count() * nh);
    for lg in g.labels() {
        for lh in h.labels() {
            labels.push(VertexLabel::pair(lg.clone(), lh.clone()));
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count() * nh + g.vertex_count() * h.edge_count());
    for &(u, v) in g.edges() {
        for b in 0..nh {
            edges.push((idx(u, b), idx(v, b)));
        }
    }
    for a in 0..g.vertex_count() {
        for &(u, v) in h.edges() {
            edges.push((idx(a, u), idx(a, v)));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(labels, edges))
}

/// Disjoint union of `g` and `h` plus cross edges `(g-vertex, h-vertex)`.
/// `None` gives the full join.
pub fn join(g: &Graph, h: &Graph, cross_edges: Option<&[(usize, usize)]>) -> Result<Graph> {
    let ng = g.vertex_count();
    let labels: Vec<_> = g
        .labels()
        .iter()
        .map(|l| VertexLabel::side(JoinSide::L, l.clone()))
        .chain(h.labels().iter().map(|l| VertexLabel::side(JoinSide::R, l.clone())))
        .collect();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + ng, v + ng)));
    match cross_edges {
        None => {
            for a in 0..ng {
                for b in 0..h.vertex_count() {
                    edges.push((a, ng + b));
                }
            }
        }
        Some(cross) => {
            let mut seen = BTreeSet::new();
            let mut dupes = Vec::new();
            for &(a, b) in cross {
                if a >= ng || b >= h.vertex_count() {
                    return Err(Error::precondition(format!(
                        "cross edge ({},{}) names a missing vertex",
                        a + 1,
                        b + 1
                    )));
                }
                if !seen.insert((a, b)) {
                    dupes.push((a, ng + b));
                }
                edges.push((a, ng + b));
            }
            if !dupes.is_empty() {
                return Err(Error::Edit {
                    reason: "duplicate cross edge".into(),
                    offending: dupes,
                });
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(labels, edges))
}

/// `G^r`: same vertices, `uv` an edge iff `1 <= dist(u,v) <= r`.
pub fn graph_power(g: &Graph, r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::precondition("graph power needs r >= 1"));
    }
    let n = g.vertex_count();
    let mut edges = Vec::new();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == r {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        edges.extend((s + 1..n).filter(|&t| dist[t] != usize::MAX).map(|t| (s, t)));
    }
    Ok(Graph::from_sorted(g.labels().to_vec(), edges))
}

/// Adds and deletes edges (0-based endpoints). Every added edge must be
/// absent and loop-free, every deleted edge present; all violations are
/// reported together.
pub fn edit_edges(g: &Graph, add: &[(usize, usize)], delete: &[(usize, usize)]) -> Result<Graph> {
    let n = g.vertex_count();
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let mut offending = Vec::new();
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    let mut removed = BTreeSet::new();
    for &e in delete {
        let e = norm(e);
        if e.1 >= n || !edges.contains(&e) || !removed.insert(e) {
            offending.push(e);
        }
    }
    let mut added = BTreeSet::new();
    for &e in add {
        let e = norm(e);
        if e.0 == e.1 || e.1 >= n || g.has_edge(e.0, e.1) || !added.insert(e) {
            offending.push(e);
        }
    }
    if !offending.is_empty() {
        return Err(Error::Edit {
            reason: "added edges must be new non-loops, deleted edges must exist".into(),
            offending,
        });
    }
    for e in &removed {
        edges.remove(e);
    }
    edges.extend(added);
    Ok(Graph::from_sorted(g.labels().to_vec(), edges.into_iter().collect()))
}
