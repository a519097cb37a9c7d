//! Orientations (simple digraphs) and the explicit product constructions.

pub mod constructions;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

pub use constructions::{
    block_alphas, orient_thm21, orient_thm24, orient_thm25, orient_thm26, BlockKind, FactorKind,
};

/// Directed arc `(tail, head)`.
pub type Arc = (usize, usize);

/// Annotation of one block product `M_i` inside a multi-block construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockAnnotation {
    pub vertices: Vec<usize>,
    pub arcs: Vec<Arc>,
    pub base_cycles: Vec<Vec<Arc>>,
    pub special_arc: Option<Arc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotations {
    /// Oriented copies of the cycle factor, `B_1..B_m` in layer order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base_cycles: Vec<Vec<Arc>>,
    /// The added arc `e*`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_arc: Option<Arc>,
    /// Inter-layer arcs `e_{(2k+1)q+r}` with their index.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub level_edge_index: Vec<(Arc, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockAnnotation>,
}

impl Annotations {
    fn map_arcs(&self, f: impl Fn(Arc) -> Arc) -> Annotations {
        let cycles = |cs: &[Vec<Arc>]| {
            cs.iter()
                .map(|c| c.iter().map(|&a| f(a)).collect())
                .collect::<Vec<_>>()
        };
        Annotations {
            base_cycles: cycles(&self.base_cycles),
            special_arc: self.special_arc.map(&f),
            level_edge_index: self.level_edge_index.iter().map(|&(a, i)| (f(a), i)).collect(),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockAnnotation {
                    vertices: b.vertices.clone(),
                    arcs: b.arcs.iter().map(|&a| f(a)).collect(),
                    base_cycles: cycles(&b.base_cycles),
                    special_arc: b.special_arc.map(&f),
                })
                .collect(),
        }
    }
}

/// Orientation of a simple graph: at most one arc per vertex pair, no loops.
///
/// Arcs are kept sorted; the position of an arc in [`Orientation::arcs`] is
/// its index in circulation bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrientationJson", into = "OrientationJson")]
pub struct Orientation {
    n: usize,
    arcs: Vec<Arc>,
    labels: Vec<VertexLabel>,
    annotations: Option<Annotations>,
}

impl Orientation {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort_unstable();
        let mut pairs = BTreeSet::new();
        for &(t, h) in &arcs {
            if t >= n || h >= n {
                return Err(Error::precondition(format!("arc ({t},{h}) out of range for {n} vertices")));
            }
            if t == h {
                return Err(Error::precondition(format!("loop at vertex {t}")));
            }
            if !pairs.insert((t.min(h), t.max(h))) {
                return Err(Error::precondition(format!(
                    "more than one arc between {} and {}",
                    t.min(h),
                    t.max(h)
                )));
            }
        }
        Ok(Orientation {
            n,
            arcs,
            labels: Vec::new(),
            annotations: None,
        })
    }

    /// Orients every edge of `g` from its lower to its higher endpoint.
    pub fn low_to_high(g: &Graph) -> Self {
        Orientation {
            n: g.vertex_count(),
            arcs: g.edges().to_vec(),
            labels: g.labels().to_vec(),
            annotations: None,
        }
    }

    /// Orientation of `g` in which arc `i` of `g.edges()` points from the
    /// lower endpoint iff bit `i` of `mask` is clear.
    pub fn from_edge_mask(g: &Graph, mask: u64) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) });
        let mut d = Orientation::new(g.vertex_count(), arcs).expect("orientation of a simple graph");
        d.labels = g.labels().to_vec();
        d
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert!(labels.is_empty() || labels.len() == self.n);
        self.labels = labels;
        self
    }

    pub fn with_annotations(mut self, annotations: Annotations) -> Self {
        self.annotations = Some(annotations);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn annotations(&self) -> Option<&Annotations> {
        self.annotations.as_ref()
    }

    pub fn arc_index(&self, arc: Arc) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }

    pub fn has_arc(&self, t: usize, h: usize) -> bool {
        self.arc_index((t, h)).is_some()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(t, _) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(_, h) in &self.arcs {
            d[h] += 1;
        }
        d
    }

    /// Underlying simple graph (keeps labels when present).
    pub fn underlying_graph(&self) -> Graph {
        let edges = self.arcs.iter().map(|&(t, h)| (t.min(h), t.max(h)));
        if self.labels.len() == self.n {
            Graph::new(self.labels.clone(), edges).expect("simple digraph")
        } else {
            Graph::with_named_vertices(self.n, edges).expect("simple digraph")
        }
    }

    /// True when the arcs project bijectively onto the edges of `g`.
    pub fn orients(&self, g: &Graph) -> bool {
        if self.n != g.vertex_count() || self.arcs.len() != g.edge_count() {
            return false;
        }
        self.arcs.iter().all(|&(t, h)| g.has_edge(t, h))
    }

    /// Sub-digraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Orientation {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(t, h)| pos[t] != usize::MAX && pos[h] != usize::MAX)
            .map(|&(t, h)| (pos[t], pos[h]));
        let mut d = Orientation::new(vertices.len(), arcs).expect("subdigraph of simple digraph");
        if self.labels.len() == self.n {
            d.labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        }
        d
    }

    /// Copy without the arcs in `drop`.
    pub fn without_arcs(&self, drop: &[Arc]) -> Orientation {
        let drop: BTreeSet<&Arc> = drop.iter().collect();
        Orientation {
            n: self.n,
            arcs: self.arcs.iter().copied().filter(|a| !drop.contains(a)).collect(),
            labels: self.labels.clone(),
            annotations: None,
        }
    }

    /// Weakly connected components of the arc set, each sorted, in order
    /// of their smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        self.underlying_graph_components()
    }

    fn underlying_graph_components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(t, h) in &self.arcs {
            adj[t].push(h);
            adj[h].push(t);
        }
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Reverses every arc; annotations are reversed consistently.
pub fn reverse(d: &Orientation) -> Orientation {
    let flip = |(t, h): Arc| (h, t);
    let mut arcs: Vec<Arc> = d.arcs.iter().map(|&a| flip(a)).collect();
    arcs.sort_unstable();
    Orientation {
        n: d.n,
        arcs,
        labels: d.labels.clone(),
        annotations: d.annotations.as_ref().map(|a| a.map_arcs(flip)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub indegrees: Vec<usize>,
    pub outdegrees: Vec<usize>,
    pub max_indegree: usize,
    pub max_outdegree: usize,
}

pub fn degree_profile(d: &Orientation) -> DegreeProfile {
    let indegrees = d.in_degrees();
    let outdegrees = d.out_degrees();
    DegreeProfile {
        max_indegree: indegrees.iter().copied().max().unwrap_or(0),
        max_outdegree: outdegrees.iter().copied().max().unwrap_or(0),
        indegrees,
        outdegrees,
    }
}

/// Kahn's algorithm.
pub fn is_acyclic(d: &Orientation) -> bool {
    let mut indeg = d.in_degrees();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); d.n];
    for &(t, h) in &d.arcs {
        out[t].push(h);
    }
    let mut queue: VecDeque<usize> = (0..d.n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &w in &out[u] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    seen == d.n
}

/// All simple directed cycles, each as a sorted list of arc indices.
/// Stops with a resource error after `limit` cycles.
pub fn simple_cycles(d: &Orientation, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d.n];
    for (i, &(t, h)) in d.arcs.iter().enumerate() {
        out_arcs[t].push((h, i));
    }
    let mut cycles = Vec::new();
    let mut on_path = vec![false; d.n];
    let mut path_arcs = Vec::new();
    // Each cycle is reported once, from its smallest vertex.
    for start in 0..d.n {
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        on_path[start] = true;
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            if let Some(&(w, arc)) = out_arcs[u].get(*pos) {
                *pos += 1;
                if w == start {
                    let mut c = path_arcs.clone();
                    c.push(arc);
                    c.sort_unstable();
                    cycles.push(c);
                    if cycles.len() > limit {
                        return Err(Error::resource(
                            "simple_cycles",
                            format!("more than {limit} cycles"),
                            "raise the limit or count circulations instead",
                        ));
                    }
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    path_arcs.push(arc);
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
                on_path[u] = false;
                if !stack.is_empty() {
                    path_arcs.pop();
                }
            }
        }
    }
    cycles.sort();
    Ok(cycles)
}

/// Realises the outdegree sequence `target` on `g`, by starting from the
/// low-to-high orientation and reversing directed paths from surplus to
/// deficit vertices.
pub fn orientation_with_outdegrees(g: &Graph, target: &[usize]) -> Result<Orientation> {
    let n = g.vertex_count();
    if target.len() != n || target.iter().sum::<usize>() != g.edge_count() {
        return Err(Error::precondition("outdegree sequence must sum to |E|"));
    }
    let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        out[u].insert(v);
    }
    loop {
        let Some(src) = (0..n).find(|&v| out[v].len() > target[v]) else {
            break;
        };
        let mut parent = vec![usize::MAX; n];
        parent[src] = src;
        let mut queue = VecDeque::from([src]);
        let mut sink = None;
        while let Some(u) = queue.pop_front() {
            if out[u].len() < target[u] {
                sink = Some(u);
                break;
            }
            for &w in &out[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let Some(mut v) = sink else {
            return Err(Error::precondition("outdegree sequence is not realisable"));
        };
        while v != src {
            let u = parent[v];
            out[u].remove(&v);
            out[v].insert(u);
            v = u;
        }
    }
    let arcs = out
        .iter()
        .enumerate()
        .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)));
    Ok(Orientation::new(n, arcs)?.with_labels(g.labels().to_vec()))
}

/// Wire form: `{"n": int, "arcs": [[t,h],...], "annotations": {...}}`.
#[derive(Serialize, Deserialize)]
struct OrientationJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<VertexLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    annotations: Option<Annotations>,
}

impl TryFrom<OrientationJson> for Orientation {
    type Error = Error;

    fn try_from(j: OrientationJson) -> Result<Self> {
        if !j.labels.is_empty() && j.labels.len() != j.n {
            return Err(Error::precondition("orientation labels must match n"));
        }
        let mut d = Orientation::new(j.n, j.arcs.into_iter().map(|[t, h]| (t, h)))?;
        d.labels = j.labels;
        if let Some(a) = &j.annotations {
            let all = a
                .base_cycles
                .iter()
                .flatten()
                .chain(a.special_arc.iter())
                .chain(a.level_edge_index.iter().map(|(arc, _)| arc));
            for &arc in all {
                if !d.has_arc(arc.0, arc.1) {
                    return Err(Error::precondition(format!("annotated arc {arc:?} is not in the digraph")));
                }
            }
        }
        d.annotations = j.annotations;
        Ok(d)
    }
}

impl From<Orientation> for OrientationJson {
    fn from(d: Orientation) -> Self {
        OrientationJson {
            n: d.n,
            arcs: d.arcs.iter().map(|&(t, h)| [t, h]).collect(),
            labels: d.labels,
            annotations: d.annotations,
        }
    }
}

/// Indegree of every vertex keyed by its label, for readable assertions.
pub fn indegree_by_label(d: &Orientation) -> BTreeMap<String, usize> {
    let indeg = d.in_degrees();
    (0..d.n)
        .map(|v| {
            let name = d.labels.get(v).map_or_else(|| format!("v{}", v + 1), ToString::to_string);
            (name, indeg[v])
        })
        .collect()
}
