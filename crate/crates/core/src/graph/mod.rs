//! Simple undirected graphs with structured vertex labels.
//!
//! Vertices are indexed `0..n` internally; labels carry the 1-based names
//! used when printing (`C3`, `(C1,P2)`, ...). Constructors live in
//! [`build`], the smallest-last ordering in [`degeneracy`], structural
//! queries in [`analysis`] and the small-graph catalog in [`catalog`].

pub mod analysis;
pub mod build;
pub mod catalog;
pub mod degeneracy;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use build::{build_family, cartesian_product, edit_edges, graph_power, join, FamilySpec};
pub use degeneracy::degeneracy_order;

/// Named graph families a label atom can come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    P,
    C,
    K,
    Theta,
    Named,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::P => "P",
            Family::C => "C",
            Family::K => "K",
            Family::Theta => "T",
            Family::Named => "v",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum JoinSide {
    L,
    R,
}

/// Structured vertex label. Atom indices are 1-based.
///
/// `Side` tags the two halves of a join so that joining two graphs of the
/// same family keeps labels distinct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Atom { family: Family, index: usize },
    Side { side: JoinSide, of: Box<VertexLabel> },
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn atom(family: Family, index: usize) -> Self {
        VertexLabel::Atom { family, index }
    }

    pub fn pair(left: VertexLabel, right: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(left), Box::new(right))
    }

    pub fn side(side: JoinSide, of: VertexLabel) -> Self {
        VertexLabel::Side {
            side,
            of: Box::new(of),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom { family, index } => write!(f, "{family}{index}"),
            VertexLabel::Side { side, of } => write!(f, "{side:?}:{of}"),
            VertexLabel::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}

/// A finite simple undirected graph.
///
/// Edges are stored as sorted `(u, v)` pairs with `u < v`; adjacency lists
/// are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    labels: Vec<VertexLabel>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges, out-of-range
    /// endpoints and duplicate labels.
    pub fn new(labels: Vec<VertexLabel>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let distinct: BTreeSet<&VertexLabel> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::precondition("vertex labels must be pairwise distinct"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::precondition(format!(
                    "edge {{{a},{b}}} out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::precondition(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::precondition(format!("repeated edge {{{},{}}}", e.0, e.1)));
            }
        }
        Ok(Self::from_sorted(labels, set.into_iter().collect()))
    }

    /// Graph on `n` vertices labelled `v1..vn`.
    pub fn with_named_vertices(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (1..=n).map(|i| VertexLabel::atom(Family::Named, i)).collect();
        Self::new(labels, edges)
    }

    pub(crate) fn from_sorted(labels: Vec<VertexLabel>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted edge list, each pair with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.vertex_count() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbourhood bitmasks. Only valid for graphs with at most 64 vertices.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64, "bitmask view needs at most 64 vertices");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order. Original labels are kept.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        edges.sort_unstable();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_sorted(labels, edges)
    }

    /// Same graph with edge `{u,v}` removed. Panics if absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let e = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&x| x != e).collect::<Vec<_>>();
        assert_eq!(edges.len() + 1, self.edges.len(), "edge not present");
        Graph::from_sorted(self.labels.clone(), edges)
    }

    /// True when every edge of `self`, mapped through `map`, is an edge of
    /// `host`.
    pub fn embeds_in(&self, host: &Graph, map: &[usize]) -> bool {
        map.len() == self.vertex_count()
            && self.edges.iter().all(|&(u, v)| host.has_edge(map[u], map[v]))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={}):", self.vertex_count(), self.edge_count())?;
        for &(u, v) in &self.edges {
            write!(f, " {}-{}", self.labels[u], self.labels[v])?;
        }
        Ok(())
    }
}

/// Wire form: `{"n": int, "labels": [...], "edges": [[u,v],...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    labels: Vec<VertexLabel>,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        if j.labels.len() != j.n {
            return Err(Error::precondition(format!(
                "graph declares n={} but carries {} labels",
                j.n,
                j.labels.len()
            )));
        }
        Graph::new(j.labels, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels,
        }
    }
}
