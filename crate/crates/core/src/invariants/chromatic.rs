use crate::graph::Graph;

/// Greedy clique: for every start vertex, repeatedly add the highest-degree
/// common neighbour. A lower bound for χ.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for s in 0..g.vertex_count() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbors(s).to_vec();
        while !cand.is_empty() {
            let &v = cand.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
            clique.push(v);
            cand.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    /// DSATUR branching: most distinct neighbour colours first, ties by degree.
    fn pick(&self) -> Option<usize> {
        let mut pick = None;
        let mut key = (0, 0);
        for v in 0..self.g.vertex_count() {
            if self.color[v] != NONE {
                continue;
            }
            let mut seen: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .map(|&w| self.color[w])
                .filter(|&c| c != NONE)
                .collect();
            seen.sort_unstable();
            seen.dedup();
            let k = (seen.len() + 1, self.g.degree(v) + 1);
            if k > key {
                key = k;
                pick = Some(v);
            }
        }
        pick
    }

    fn run(&mut self, used: usize) {
        if self.best == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            self.best_coloring = self.color.clone();
            return;
        };
        // only colors 0..=used are distinct up to renaming
        for c in 0..=used {
            let total = used.max(c + 1);
            if total >= self.best {
                break;
            }
            if self.g.neighbors(v).iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            self.run(total);
            self.color[v] = NONE;
            if self.best == self.lower {
                return;
            }
        }
    }
}

/// Optimal proper coloring by DSATUR branch and bound, seeded with a greedy
/// upper bound and a greedy-clique lower bound. Colors are `0..χ`.
pub fn optimal_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut greedy = vec![NONE; n];
    for v in 0..n {
        let c = (0..).find(|&c| g.neighbors(v).iter().all(|&w| greedy[w] != c)).unwrap();
        greedy[v] = c;
    }
    let mut s = Search {
        g,
        color: vec![NONE; n],
        best: greedy.iter().map(|&c| c + 1).max().unwrap_or(0),
        best_coloring: greedy,
        lower: greedy_clique(g).len(),
    };
    s.run(0);
    s.best_coloring
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).iter().map(|&c| c + 1).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cartesian_product, catalog, join, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    /// Oracle: try every assignment of k colors.
    fn colorable_brute(g: &Graph, k: usize) -> bool {
        let n = g.vertex_count();
        let mut c = vec![0; n];
        loop {
            if g.edges().iter().all(|&(u, v)| c[u] != c[v]) {
                return true;
            }
            let mut i = 0;
            while i < n && c[i] + 1 == k {
                c[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
            c[i] += 1;
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(chromatic_number(&fam(FamilySpec::Cycle(5))), 3);
        let g = cartesian_product(&fam(FamilySpec::Cycle(5)), &fam(FamilySpec::Path(3))).unwrap();
        assert_eq!(chromatic_number(&g), 3);
        let w = join(&fam(FamilySpec::Complete(1)), &fam(FamilySpec::Cycle(7)), None).unwrap();
        assert_eq!(chromatic_number(&w), 4);
    }

    #[test]
    fn coloring_is_proper_and_matches_brute_force() {
        for g in catalog::connected_graphs_up_to(6) {
            let col = optimal_coloring(&g);
            assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
            let chi = chromatic_number(&g);
            assert!(colorable_brute(&g, chi), "{g}");
            assert!(chi == 1 || !colorable_brute(&g, chi - 1), "{g}");
        }
    }

    #[test]
    fn product_identity() {
        // χ(G□H) = max(χ(G), χ(H))
        let factors = [
            fam(FamilySpec::Cycle(7)),
            fam(FamilySpec::Path(4)),
            fam(FamilySpec::Complete(4)),
            fam(FamilySpec::Cycle(6)),
        ];
        for g in &factors {
            for h in &factors {
                let p = cartesian_product(g, h).unwrap();
                assert_eq!(chromatic_number(&p), chromatic_number(g).max(chromatic_number(h)));
            }
        }
    }
}
